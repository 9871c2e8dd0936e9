#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zelred/grothendieck.hpp"
#include "zelred/levels.hpp"
#include "zelred/zelevinski.hpp"

namespace zelred {

// One factor I_0([<left, >right]) on a cuspidal slot. slot = k >= 0 is the cycle
// St_{m l^k}(rho); slot = -1 is rho itself.
struct Factor {
    int slot = -1;
    Base base;
    HalfInt start;  // lowest covered twist of the slot line
    int left = 0;
    int right = 0;
    std::optional<ZParameter> content;  // nullopt when no explicit parameter is known

    int size() const { return left + right + 1; }
    bool opaque() const { return !content.has_value(); }
    // Twist period of the slot line: 1 on cycle slots, epsilon(rho) on rho.
    int line_epsilon(const CuspidalDatum& datum) const { return slot >= 0 ? 1 : datum.epsilon; }
    std::string opaque_key(const CuspidalDatum& datum) const;
};

class ConstituentLabel {
public:
    ConstituentLabel(CuspidalDatum datum, LevelIndex level, std::vector<Factor> factors);

    const CuspidalDatum& datum() const { return datum_; }
    const LevelIndex& level() const { return level_; }
    const std::vector<Factor>& factors() const { return factors_; }

    // Supercuspidal parameter of all explicit factors, on the line of rho.
    const ZParameter& explicit_parameter() const { return explicit_; }
    const std::vector<std::string>& opaque_atoms() const { return opaque_; }
    const std::string& canonical() const { return canonical_; }
    bool fully_explicit() const { return opaque_.empty(); }

    // Sum of the factor levels: i_k on cycle slot k, zero on rho.
    LevelIndex factor_level_sum() const;
    // Covered twists with multiplicity, computed from factor shapes.
    Support support() const;
    std::int64_t size() const;  // number of copies of rho in the supercuspidal support

    ConstituentLabel twisted(HalfInt delta) const;

    friend bool operator==(const ConstituentLabel& a, const ConstituentLabel& b) {
        return a.canonical_ == b.canonical_;
    }

private:
    CuspidalDatum datum_;
    LevelIndex level_;
    std::vector<Factor> factors_;
    ZParameter explicit_;
    std::vector<std::string> opaque_;
    std::string canonical_;
};

// Factor builders. size 0 yields nullopt.
std::optional<Factor> steinberg_factor(const CuspidalDatum& datum, int slot, HalfInt start, int size);
std::optional<Factor> lubin_tate_factor(const CuspidalDatum& datum, HalfInt start, int left, int right);

std::vector<ConstituentLabel> steinberg_constituents(const CuspidalDatum& datum, int s);
std::vector<ConstituentLabel> lubin_tate_constituents(const CuspidalDatum& datum, int s, int t);

GrothElement to_groth(const std::vector<ConstituentLabel>& labels);

// Characteristic-zero elementary labels [<n]_{pi{twist}} (Steinberg) and [>n]_{pi{twist}} (Speh).
enum class Arrow { Left, Right };
enum class Parabolic { Standard, Opposite };

struct ElementaryLabel {
    Arrow arrow = Arrow::Left;
    int n = 0;
    HalfInt twist;
    std::string str() const;
    friend bool operator==(const ElementaryLabel&, const ElementaryLabel&) = default;
};

std::pair<ElementaryLabel, ElementaryLabel> jacquet_steinberg(int s, int t, Arrow arrow, Parabolic parabolic);

// Level-i part of the reduction of the Jacquet module of the Steinberg of size s, as tensor labels.
GrothElement jacquet_constituent(const CuspidalDatum& datum, int s, const LevelIndex& i, int t);
// steinberg_constituents(t){(s-t)/2} tensor steinberg_constituents(s-t){-t/2}.
GrothElement jacquet_expected(const CuspidalDatum& datum, int s, int t);

struct ExtensionGraph {
    std::vector<ConstituentLabel> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // lower index to higher index
    // Socle/cosocle orientation is fixed only by the filtration; consumers may reverse all edges.
    bool orientation_reversible = true;

    bool is_simple_path() const;
    bool vertex_order_increasing() const;
    std::string to_dot(const std::string& name) const;
};

ExtensionGraph extension_graph_steinberg(const CuspidalDatum& datum, int s);
ExtensionGraph extension_graph_lubin_tate(const CuspidalDatum& datum, int s, int t);
ExtensionGraph semisimple_lattice_graph(std::vector<ConstituentLabel> constituents);

// Characteristic-zero elliptic label [<a, >b].
std::string elliptic_label(int a, int b);

struct LengthTwoInduction {
    GrothElement cls;
    std::string sub;
    std::string quotient;
};

// [<t-1] induced (right arrow) with [>s-t-1]; dual swaps sub and quotient.
LengthTwoInduction induced_length_two(int s, int t, bool dual = false);

// sum_i (-1)^i [K^{d-i}] against sum_i (-1)^i [U_i], i = 1..s.
GrothElement euler_lhs(int s);
GrothElement euler_rhs(int s);
bool euler_check(int s);
// sum_i (-1)^i [K^{d-i}] against (-1)^s [U_s].
bool telescoping_check(int s);

struct DisjointnessResult {
    bool disjoint = true;
    std::vector<std::string> warnings;
};

DisjointnessResult constituents_disjoint(const CuspidalDatum& datum, int s, int t, int t1);

// True when no twist delta makes the Speh [>a]_{rho{delta}} equal to I_0([<t, >a-t]).
bool speh_never_equals_I0(const CuspidalDatum& datum, int t, int a);

// The m = 2, l = 3 example: Jacquet image of I_0([<1, >1]) for the (2, 1) parabolic.
GrothElement lubin_tate_jacquet_fixture(const CuspidalDatum& datum);

}  // namespace zelred

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zelred/grothendieck.hpp"

namespace zelred {

class RegimeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedPattern : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Weakly decreasing positive rows.
using Partition = std::vector<int>;
// Young diagram to multiplicity.
using Decomposition = std::map<Partition, std::int64_t>;

// q = 1 mod ell and d < ell.
struct Regime {
    std::int64_t q = 0;
    int ell = 0;
    void require(int d) const;
};

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
std::string partition_str(const Partition& p);  // "(2,1,1)"

// All partitions of d, in decreasing lexicographic order.
std::vector<Partition> partitions(int d);

std::int64_t factorial(int n);
std::int64_t hook_dimension(const Partition& p);

// sum over partitions of d of hook_dimension * <a(DY)>.
Decomposition borel_induction_decomposition(int d, const std::optional<Regime>& regime = std::nullopt);

// Numbered-box rule: horizontal strips of 1s, 2s, ... with a lattice reading word.
Decomposition induct_diagrams(const Partition& dy1, const Partition& dy2);

struct ArrowRun {
    bool left = true;  // "<" for a Steinberg-type run, ">" for a Speh-type run
    int length = 0;
};

// "<a,>b,<c" -> runs.
std::vector<ArrowRun> parse_pattern(const std::string& text);

// Reduction of the unipotent elliptic with the given arrow pattern, as Young diagrams.
Decomposition elliptic_reduction_classical(const std::vector<ArrowRun>& pattern,
                                           const std::optional<Regime>& regime = std::nullopt);

Decomposition add(const Decomposition& a, const Decomposition& b);
Decomposition sub(const Decomposition& a, const Decomposition& b);

GrothElement to_groth(const Decomposition& d);
std::string decomposition_json(const Decomposition& d);  // [{"partition": [...], "mult": n}]

struct CharacterTable {
    int d = 0;
    std::vector<Partition> irreducibles;  // row labels
    std::vector<Partition> classes;       // cycle types, same order
    std::vector<std::int64_t> centralizer;  // z_mu per class
    std::vector<std::vector<std::int64_t>> values;

    std::size_t index_of(const Partition& p) const;
    std::int64_t value(const Partition& irreducible, const Partition& cls) const;
};

std::int64_t centralizer_order(const Partition& cycle_type);
// Murnaghan-Nakayama; d <= 7.
CharacterTable character_oracle(int d);
// <Ind_{S_a x S_b} chi1 (x) chi2, chi> from character values.
std::int64_t oracle_induction_multiplicity(const Partition& dy1, const Partition& dy2, const Partition& target);

}  // namespace zelred

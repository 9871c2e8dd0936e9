#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zelred/base_arith.hpp"

namespace zelred {

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact half-integer, stored as twice its value.
struct HalfInt {
    std::int64_t twice = 0;

    static constexpr HalfInt integer(std::int64_t n) { return HalfInt{2 * n}; }
    static constexpr HalfInt half(std::int64_t numerator) { return HalfInt{numerator}; }

    bool is_integer() const { return twice % 2 == 0; }
    HalfInt operator+(HalfInt o) const { return {twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return {twice - o.twice}; }
    HalfInt operator-() const { return {-twice}; }
    HalfInt& operator+=(HalfInt o) {
        twice += o.twice;
        return *this;
    }
    auto operator<=>(const HalfInt&) const = default;

    // Representative in [0, period).
    HalfInt mod(std::int64_t period) const;
    std::string str() const;
};

// The twist line a parameter lives on: epsilon points per half-integer class.
struct Line {
    int ell = 0;  // 0 when only epsilon is known
    int epsilon = 1;
    int m = 1;

    static Line of(const CuspidalDatum& d) { return {d.ell, d.epsilon, d.m}; }
    static Line bare(int epsilon) { return {0, epsilon, epsilon}; }
    // Line of St_{m l^k}(rho): twisting by 1 is trivial there.
    static Line steinberg_of(const CuspidalDatum& d) { return {d.ell, 1, d.ell}; }
    friend bool operator==(const Line&, const Line&) = default;
};

enum class Origin { Unit, Datum, Foreign };

// A cuspidal base. st > 1 tags St_st(origin); Foreign bases carry no origin.
struct Base {
    Origin origin = Origin::Datum;
    std::int64_t st = 1;
    std::string name;

    static Base unit() { return {Origin::Unit, 1, {}}; }
    static Base datum() { return {Origin::Datum, 1, {}}; }
    static Base steinberg(std::int64_t n, Origin o = Origin::Datum) { return {o, n, {}}; }
    static Base foreign(std::string n) { return {Origin::Foreign, 1, std::move(n)}; }

    bool supercuspidal() const { return origin != Origin::Foreign && st == 1; }
    std::string str() const;
    auto operator<=>(const Base&) const = default;
};

struct Segment {
    Base base;
    HalfInt start;
    int length = 1;

    auto operator<=>(const Segment&) const = default;
};

// A multiset of segments on one line, kept sorted by (base, twist, length).
class ZParameter {
public:
    ZParameter() = default;
    explicit ZParameter(Line line, std::vector<Segment> segs = {});

    const Line& line() const { return line_; }
    const std::vector<Segment>& segments() const { return segs_; }
    bool empty() const { return segs_.empty(); }
    std::size_t size() const { return segs_.size(); }

    void add(Segment s);
    void add_all(const ZParameter& other);
    std::int64_t box_count() const;  // sum of lengths times tag sizes
    std::string str() const;

    friend bool operator==(const ZParameter& a, const ZParameter& b) {
        return a.line_.epsilon == b.line_.epsilon && a.segs_ == b.segs_;
    }
    friend auto operator<=>(const ZParameter& a, const ZParameter& b) {
        return a.segs_ <=> b.segs_;
    }

private:
    void normalize();
    Line line_;
    std::vector<Segment> segs_;
};

// Multiset of covered line points keyed by canonical twist (twice-units).
using Support = std::map<std::int64_t, std::int64_t>;

bool is_cycle(const Line& line, const std::vector<Segment>& segments);
ZParameter to_restricted(const ZParameter& param);
ZParameter to_supercuspidal(const ZParameter& param);
ZParameter boxtimes(const ZParameter& super_param, const Line& target_line,
                    const Base& target = Base::datum());
ZParameter twist(const ZParameter& param, HalfInt n);
Support support(const ZParameter& param);

// Steinberg parameter {(base{start + j}, 1)}_{j<n}.
ZParameter steinberg_parameter(const Line& line, const Base& base, HalfInt start, int n);

}  // namespace zelred

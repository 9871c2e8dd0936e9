#include "zelred/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "zelred/base_arith.hpp"
#include "zelred/classical_limit.hpp"
#include "zelred/involution.hpp"
#include "zelred/levels.hpp"
#include "zelred/reduction.hpp"
#include "zelred/zelevinski.hpp"

namespace zelred {

CheckGrid CheckGrid::from_env() {
    CheckGrid g;
    if (const char* env = std::getenv("ZELRED_CHECK_GRID")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 64) g.s_max = static_cast<int>(v);
    }
    return g;
}

namespace {

// Collects failures and counts cases for one named check.
class Tally {
public:
    explicit Tally(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& what) {
        ++result_.cases;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) samples_.push_back(what());
    }

    void note(const std::string& text) { notes_.push_back(text); }

    CheckResult finish() {
        result_.pass = failures_ == 0;
        std::ostringstream os;
        os << failures_ << " of " << result_.cases << " cases failed";
        for (const auto& n : notes_) os << "; " << n;
        for (const auto& s : samples_) os << "; e.g. " << s;
        result_.detail = os.str();
        result_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return result_;
    }

private:
    CheckResult result_;
    std::int64_t failures_ = 0;
    std::vector<std::string> samples_;
    std::vector<std::string> notes_;
    std::chrono::steady_clock::time_point start_;
};

std::string shape(const CuspidalDatum& d) {
    return "m=" + std::to_string(d.m) + " ell=" + std::to_string(d.ell) + " eps=" + std::to_string(d.epsilon);
}

std::vector<CuspidalDatum> datums(const std::vector<int>& ms, const std::vector<int>& ells) {
    std::vector<CuspidalDatum> out;
    for (int m : ms)
        for (int ell : ells) out.push_back(datum_for_shape(m, ell));
    return out;
}

Support segment_support(const CuspidalDatum& d, HalfInt start, int n) {
    return support(ZParameter(Line::of(d), {Segment{Base::datum(), start, n}}));
}

Support merged(Support a, const Support& b) {
    for (const auto& [k, v] : b) a[k] += v;
    return a;
}

// ---- base_arith -------------------------------------------------------------

CheckResult check_recompose(const CheckGrid& grid) {
    Tally t("base_arith.digit_recompose");
    for (int m : grid.ms)
        for (int ell : grid.ells)
            for (std::int64_t s = 0; s <= 10000; ++s) {
                const auto dd = digit_decompose(m, ell, s);
                bool ok = recompose(dd, m, ell) == s && dd.m_minus1 >= 0 && dd.m_minus1 < m;
                for (int digit : dd.digits) ok = ok && digit >= 0 && digit < ell;
                ok = ok && (dd.digits.empty() || dd.digits.back() != 0);
                t.expect(ok, [&] { return "m=" + std::to_string(m) + " ell=" + std::to_string(ell) + " s=" + std::to_string(s); });
            }
    return t.finish();
}

CheckResult check_order_mod() {
    Tally t("base_arith.order_mod_exhaustive");
    for (int ell = 2; ell < 200; ++ell) {
        if (!is_prime(ell)) continue;
        for (int q = 1; q < 200; ++q) {
            if (q % ell == 0) continue;
            int brute = 0;
            std::int64_t x = 1;
            for (int e = 1; e <= ell; ++e) {
                x = (x * q) % ell;
                if (x == 1 % ell) {
                    brute = e;
                    break;
                }
            }
            t.expect(order_mod(q, ell) == brute, [&] { return "q=" + std::to_string(q) + " ell=" + std::to_string(ell); });
        }
    }
    return t.finish();
}

CheckResult check_m_at_least_two(const CheckGrid& grid) {
    Tally t("base_arith.m_at_least_two");
    for (const auto& d : datums(grid.ms, grid.ells)) t.expect(d.m >= 2, [&] { return shape(d); });
    for (int ell = 2; ell < 50; ++ell) {
        if (!is_prime(ell)) continue;
        for (int q = 2; q < 50; ++q) {
            if (q % ell == 0) continue;
            const auto d = make_datum(1, ell, q);
            t.expect(d.m >= 2 && (d.epsilon > 1 ? d.m == d.epsilon : d.m == ell), [&] { return shape(d); });
        }
    }
    return t.finish();
}

// ---- zelevinski -------------------------------------------------------------

ZParameter random_parameter(std::mt19937& rng, const Line& line, Origin origin) {
    std::uniform_int_distribution<int> count(0, 3 * line.m);
    std::uniform_int_distribution<int> len(1, 3);
    std::uniform_int_distribution<int> pt(0, 2 * line.epsilon - 1);
    std::bernoulli_distribution half(0.2);
    std::vector<Segment> segs;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        HalfInt start = HalfInt::integer(pt(rng));
        if (half(rng)) start += HalfInt::half(1);
        segs.push_back({Base{origin, 1, {}}, start, len(rng)});
    }
    return ZParameter(line, std::move(segs));
}

CheckResult check_restricted(const CheckGrid& grid) {
    Tally t("zelevinski.restricted_round_trip");
    std::mt19937 rng(20240601);
    for (const auto& d : datums(grid.ms, grid.ells)) {
        const Line line = Line::of(d);
        for (int trial = 0; trial < 300; ++trial) {
            const ZParameter p = random_parameter(rng, line, Origin::Datum);
            const ZParameter r = to_restricted(p);
            bool ok = to_supercuspidal(r) == to_supercuspidal(p) && r.box_count() == p.box_count();
            std::map<std::pair<int, std::int64_t>, std::map<std::int64_t, std::int64_t>> groups;
            for (const auto& s : r.segments())
                if (s.base.supercuspidal()) ++groups[{s.length, s.start.twice % 2}][s.start.twice];
            for (const auto& [key, counts] : groups) {
                if (d.epsilon > 1) {
                    std::int64_t low = static_cast<int>(counts.size()) == d.epsilon ? counts.begin()->second : 0;
                    for (const auto& kv : counts) low = std::min(low, kv.second);
                    ok = ok && low == 0;
                } else {
                    ok = ok && counts.begin()->second < d.ell;
                }
            }
            t.expect(ok, [&] { return shape(d) + " " + p.str(); });
        }
    }
    return t.finish();
}

CheckResult check_boxtimes(const CheckGrid& grid) {
    Tally t("zelevinski.boxtimes_twist");
    std::mt19937 rng(7);
    for (const auto& d : datums(grid.ms, grid.ells)) {
        const Line unit_line = Line::bare(d.epsilon);
        const Line line = Line::of(d);
        std::map<std::string, std::string> seen;
        for (int trial = 0; trial < 200; ++trial) {
            const ZParameter a = random_parameter(rng, unit_line, Origin::Unit);
            const HalfInt n{static_cast<std::int64_t>(rng() % 9) - 4};
            const bool commutes = boxtimes(twist(a, n), line) == twist(boxtimes(a, line), n);
            const std::string image = boxtimes(a, line).str();
            auto [it, fresh] = seen.emplace(image, a.str());
            const bool injective = fresh || it->second == a.str();
            const bool period = twist(a, HalfInt::integer(d.epsilon)) == a;
            t.expect(commutes && injective && period, [&] { return shape(d) + " " + a.str(); });
        }
    }
    return t.finish();
}

// ---- levels -----------------------------------------------------------------

CheckResult check_levels(const CheckGrid& grid) {
    Tally t("levels.order_and_mass");
    for (int m : grid.ms)
        for (int ell : grid.ells) {
            const CuspidalDatum d = datum_for_shape(m, ell);
            std::size_t previous = 0;
            for (int s = 1; s <= grid.level_s_max; ++s) {
                const auto set = enumerate_index_set(d, s);
                bool ok = !set.empty() && set.front().is_zero() && s_rho(d, s, set.front()) == s;
                for (std::size_t k = 1; k < set.size(); ++k) ok = ok && set[k - 1] < set[k];
                for (const auto& i : set) ok = ok && s_rho(d, s, i) >= 0;
                ok = ok && set.size() >= previous;
                previous = set.size();
                t.expect(ok, [&] { return shape(d) + " s=" + std::to_string(s); });
            }
        }
    return t.finish();
}

CheckResult digit_equivalence(const std::vector<int>& ms, const std::vector<int>& ells, int s_max, std::string name) {
    Tally t(std::move(name));
    for (int m : ms)
        for (int ell : ells)
            for (int s = 1; s <= s_max; ++s) {
                const auto digits = digit_decompose(m, ell, s).digits;
                t.expect(enumerate_digit_set(digits, ell) == enumerate_index_set(m, ell, s), [&] {
                    return "m=" + std::to_string(m) + " ell=" + std::to_string(ell) + " s=" + std::to_string(s);
                });
            }
    return t.finish();
}

// ---- involution -------------------------------------------------------------

Support unit_segment_support(int eps, int s) {
    return support(ZParameter(Line::bare(eps), {Segment{Base::unit(), HalfInt{}, s}}));
}

CheckResult involution_conservation(const CheckGrid& grid) {
    Tally t("involution.box_and_support_conservation");
    for (int eps = 2; eps <= grid.involution_eps_max; ++eps)
        for (int s = 1; s <= grid.involution_s_max; ++s) {
            const ZParameter z = involute_single_segment(Base::unit(), s, eps);
            const bool ok = z.box_count() == s && support(z) == unit_segment_support(eps, s);
            t.expect(ok, [&] { return "eps=" + std::to_string(eps) + " s=" + std::to_string(s) + " -> " + z.str(); });
        }
    return t.finish();
}

CheckResult involution_parity_as_printed(const CheckGrid& grid) {
    Tally t("involution.eps2_parity_as_printed");
    const Line line = Line::bare(2);
    for (int s = 1; s <= grid.involution_s_max; ++s) {
        const ZParameter z = involute_single_segment(Base::unit(), s, 2);
        const HalfInt start = s % 2 == 0 ? HalfInt{} : HalfInt::integer(1);
        const ZParameter printed(line, {Segment{Base::unit(), start, s}});
        t.expect(z == printed, [&] { return "s=" + std::to_string(s) + " gives " + z.str() + " not " + printed.str(); });
    }
    t.note("the printed rule breaks support conservation; the implemented rule is the eps = 2 case of the general formula");
    return t.finish();
}

CheckResult involution_small_and_involutive(const CheckGrid& grid) {
    Tally t("involution.small_s_and_eps2_involutive");
    for (int eps = 2; eps <= grid.involution_eps_max; ++eps)
        for (int s = 1; s < eps; ++s) {
            const ZParameter z = involute_single_segment(Base::unit(), s, eps);
            t.expect(z == steinberg_parameter(Line::bare(eps), Base::unit(), HalfInt{}, s),
                     [&] { return "eps=" + std::to_string(eps) + " s=" + std::to_string(s); });
        }
    for (int s = 1; s <= grid.involution_s_max; ++s) {
        const ZParameter once = involute_single_segment(Base::unit(), s, 2);
        const ZParameter twice = twist(involute_single_segment(Base::unit(), s, 2), once.segments().front().start);
        t.expect(once.size() == 1 && twice == ZParameter(Line::bare(2), {Segment{Base::unit(), HalfInt{}, s}}),
                 [&] { return "s=" + std::to_string(s); });
    }
    return t.finish();
}

// ---- reduction --------------------------------------------------------------

CheckResult check_labels(const CheckGrid& grid) {
    Tally t("reduction.level_support_multiplicity");
    for (const auto& d : datums(grid.ms, grid.ells))
        for (int s = 1; s <= grid.s_max; ++s) {
            const Support expected = segment_support(d, HalfInt{1 - s}, s);
            auto check_list = [&](const std::vector<ConstituentLabel>& list, const std::string& what) {
                std::set<std::string> distinct;
                for (const auto& c : list) {
                    distinct.insert(c.canonical());
                    const bool ok = c.factor_level_sum() == c.level() && c.support() == expected && c.size() == s &&
                                    (!c.fully_explicit() || support(c.explicit_parameter()) == expected);
                    t.expect(ok, [&] { return shape(d) + " " + what + " level " + c.level().str(); });
                }
                t.expect(distinct.size() == list.size() && is_effective(to_groth(list)),
                         [&] { return shape(d) + " " + what + " repeats a label"; });
            };
            check_list(steinberg_constituents(d, s), "St s=" + std::to_string(s));
            for (int tt = 1; tt <= s; ++tt)
                check_list(lubin_tate_constituents(d, s, tt), "LT s=" + std::to_string(s) + " t=" + std::to_string(tt));
        }
    return t.finish();
}

CheckResult check_containment(const CheckGrid& grid) {
    Tally t("reduction.t_equals_s_containment");
    for (const auto& d : datums(grid.ms, grid.ells))
        for (int s = 1; s <= grid.s_max; ++s) {
            std::set<std::string> st;
            for (const auto& c : steinberg_constituents(d, s)) st.insert(c.canonical());
            std::set<std::string> lt;
            for (const auto& c : lubin_tate_constituents(d, s, s)) lt.insert(c.canonical());
            const bool contained = std::includes(st.begin(), st.end(), lt.begin(), lt.end());
            const bool proper = lt.size() < st.size();
            t.expect(contained && proper == (s % d.m == 0), [&] { return shape(d) + " s=" + std::to_string(s); });
        }
    return t.finish();
}

CheckResult check_telescoping(const CheckGrid& grid) {
    Tally t("reduction.euler_telescoping");
    for (int s = 1; s <= grid.s_max; ++s) {
        bool ok = telescoping_check(s);
        for (int tt = 1; tt < s; ++tt) {
            const auto a = induced_length_two(s, tt);
            const auto b = induced_length_two(s, tt, true);
            ok = ok && a.cls == b.cls && a.sub == b.quotient && a.quotient == b.sub;
        }
        t.expect(ok, [&] { return "s=" + std::to_string(s); });
    }
    return t.finish();
}

CheckResult check_speh(const CheckGrid& grid) {
    Tally t("reduction.speh_never_equals_I0");
    for (const auto& d : datums(grid.ms, grid.ells)) {
        if (d.ell == 2) continue;
        for (int a = 2; a <= grid.s_max; ++a)
            for (int tt = 1; tt < a; ++tt)
                t.expect(speh_never_equals_I0(d, tt, a),
                         [&] { return shape(d) + " t=" + std::to_string(tt) + " a=" + std::to_string(a); });
    }
    return t.finish();
}

CheckResult check_commutation(const CheckGrid& grid) {
    Tally t("reduction.induction_commutation_support");
    for (const auto& d : datums(grid.ms, grid.ells))
        for (int s1 = 1; s1 <= 6; ++s1)
            for (int s2 = 1; s2 <= 6; ++s2) {
                const HalfInt d1 = HalfInt::half(s2);
                const HalfInt d2 = HalfInt::half(-s1);
                const Support q_side =
                    merged(segment_support(d, HalfInt{1 - s1} + d1, s1), segment_support(d, HalfInt{1 - s2} + d2, s2));
                for (const auto& c1 : steinberg_constituents(d, s1))
                    for (const auto& c2 : steinberg_constituents(d, s2))
                        t.expect(merged(c1.twisted(d1).support(), c2.twisted(d2).support()) == q_side,
                                 [&] { return shape(d) + " s1=" + std::to_string(s1) + " s2=" + std::to_string(s2); });
            }
    t.note("supercuspidal supports only");
    return t.finish();
}

CheckResult check_fixture() {
    Tally t("reduction.lubin_tate_jacquet_fixture");
    const CuspidalDatum d = datum_for_shape(2, 3);
    const GrothElement e = lubin_tate_jacquet_fixture(d);
    t.expect(e.size() == 3 && is_effective(e), [&] { return e.to_json(); });
    std::set<std::string> level_zero;
    for (const auto& c : lubin_tate_constituents(d, 3, 2)) level_zero.insert(c.canonical());
    t.expect(level_zero.size() == 1, [&] { return "reduction of [<1,>1] should be irreducible"; });
    return t.finish();
}

// ---- classical --------------------------------------------------------------

CheckResult check_hook_squares(int d_max, std::string name) {
    Tally t(std::move(name));
    for (int d = 0; d <= d_max; ++d) {
        std::int64_t total = 0;
        for (const auto& p : partitions(d)) total += hook_dimension(p) * hook_dimension(p);
        t.expect(total == factorial(d), [&] { return "d=" + std::to_string(d); });
    }
    return t.finish();
}

CheckResult check_lr_oracle(int n_max, std::string name) {
    Tally t(std::move(name));
    for (int n = 0; n <= n_max; ++n)
        for (int a = 0; a <= n; ++a)
            for (const auto& p1 : partitions(a))
                for (const auto& p2 : partitions(n - a)) {
                    const Decomposition rule = induct_diagrams(p1, p2);
                    std::int64_t mass = 0;
                    bool ok = true;
                    for (const auto& target : partitions(n)) {
                        const auto it = rule.find(target);
                        const std::int64_t mult = it == rule.end() ? 0 : it->second;
                        ok = ok && mult == oracle_induction_multiplicity(p1, p2, target);
                        mass += mult * hook_dimension(target);
                    }
                    const std::int64_t binom = factorial(n) / (factorial(a) * factorial(n - a));
                    ok = ok && mass == binom * hook_dimension(p1) * hook_dimension(p2);
                    t.expect(ok, [&] { return partition_str(p1) + " x " + partition_str(p2); });
                }
    return t.finish();
}

CheckResult check_elliptic(int s_max, std::string name) {
    Tally t(std::move(name));
    for (int s = 1; s <= s_max; ++s)
        for (int i = 0; i < s; ++i) {
            Partition hook{i + 1};
            for (int k = 0; k < s - 1 - i; ++k) hook.push_back(1);
            for (bool steinberg_first : {true, false}) {
                std::vector<ArrowRun> pattern;
                if (steinberg_first)
                    pattern = {{true, s - 1 - i}, {false, i}};
                else
                    pattern = {{false, i}, {true, s - 1 - i}};
                const Decomposition r = elliptic_reduction_classical(pattern);
                const bool ok = r.size() == 1 && r.begin()->second == 1 && r.begin()->first == hook;
                t.expect(ok, [&] { return "s=" + std::to_string(s) + " i=" + std::to_string(i); });
            }
        }
    const Decomposition remark = elliptic_reduction_classical(parse_pattern("<1,>1,<1"));
    t.expect(remark == Decomposition{{Partition{2, 1, 1}, 1}, {Partition{2, 2}, 1}},
             [&] { return "three-run pattern " + decomposition_json(remark); });
    return t.finish();
}

CheckResult check_borel_and_characters() {
    Tally t("classical.borel_and_character_tables");
    for (int d = 1; d <= 6; ++d) {
        Decomposition iterated{{Partition{}, 1}};
        for (int k = 0; k < d; ++k) {
            Decomposition next;
            for (const auto& [p, m] : iterated)
                for (const auto& [q, n] : induct_diagrams(p, Partition{1})) next[q] += m * n;
            iterated = next;
        }
        t.expect(iterated == borel_induction_decomposition(d), [&] { return "d=" + std::to_string(d); });
    }
    for (int d = 0; d <= 7; ++d) {
        const CharacterTable tab = character_oracle(d);
        const std::size_t n = tab.irreducibles.size();
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::int64_t sum = 0;
                for (std::size_t c = 0; c < n; ++c)
                    sum += (factorial(d) / tab.centralizer[c]) * tab.values[a][c] * tab.values[b][c];
                ok = ok && sum == (a == b ? factorial(d) : 0);
            }
        for (std::size_t a = 0; a < n; ++a)
            ok = ok && tab.value(tab.irreducibles[a], Partition(static_cast<std::size_t>(d), 1)) ==
                           hook_dimension(tab.irreducibles[a]);
        t.expect(ok, [&] { return "d=" + std::to_string(d); });
    }
    return t.finish();
}

// ---- grothendieck -----------------------------------------------------------

CheckResult check_groth_algebra() {
    Tally t("grothendieck.algebra_laws");
    std::mt19937 rng(11);
    auto random_element = [&] {
        GrothElement e;
        const int n = static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i)
            e.add_term("x" + std::to_string(rng() % 6), static_cast<std::int64_t>(rng() % 7) - 3);
        return e;
    };
    for (int trial = 0; trial < 500; ++trial) {
        const GrothElement a = random_element();
        const GrothElement b = random_element();
        const GrothElement c = random_element();
        bool ok = sub(a, a).is_zero() && sub(add(a, b), b) == a && add(scale(a, 2), scale(a, 3)) == scale(a, 5);
        ok = ok && formal_product(add(a, b), c) == add(formal_product(a, c), formal_product(b, c));
        ok = ok && tensor(a, GrothElement{}).is_zero();
        t.expect(ok, [&] { return a.to_json() + " " + b.to_json(); });
    }
    return t.finish();
}

}  // namespace

CheckResult criterion_count_law(const CheckGrid& grid) {
    Tally t("count_law");
    for (const auto& d : datums(grid.ms, grid.ells))
        for (int s = 1; s <= grid.s_max; ++s) {
            t.expect(steinberg_constituents(d, s).size() == enumerate_index_set(d, s).size(),
                     [&] { return shape(d) + " St s=" + std::to_string(s); });
            for (int tt = 1; tt <= s; ++tt)
                t.expect(lubin_tate_constituents(d, s, tt).size() == enumerate_index_set(d, tt - 1).size(),
                         [&] { return shape(d) + " LT s=" + std::to_string(s) + " t=" + std::to_string(tt); });
        }
    return t.finish();
}

CheckResult criterion_digit_index_equivalence(const CheckGrid& grid) {
    return digit_equivalence(grid.ms, grid.ells, grid.s_max, "digit_index_equivalence");
}

CheckResult criterion_small_s_degeneration(const CheckGrid& grid) {
    Tally t("small_s_degeneration");
    for (const auto& d : datums(grid.ms, grid.ells))
        for (int s = 1; s < d.m; ++s) {
            const auto list = steinberg_constituents(d, s);
            const ZParameter st = steinberg_parameter(Line::of(d), Base::datum(), HalfInt{1 - s}, s);
            const bool single = list.size() == 1 && list.front().fully_explicit() &&
                                list.front().explicit_parameter() == st;
            t.expect(single, [&] { return shape(d) + " s=" + std::to_string(s); });
            if (d.epsilon >= 2) {
                const ZParameter z = involute_single_segment(Base::unit(), s, d.epsilon);
                const bool via_formula = twist(boxtimes(z, Line::of(d)), HalfInt{1 - s}) == st;
                t.expect(via_formula, [&] { return shape(d) + " s=" + std::to_string(s) + " via the involution"; });
            }
        }
    t.note("involution clause checked on lines with eps >= 2");
    return t.finish();
}

CheckResult criterion_involution_conservation(const CheckGrid& grid) {
    const CheckResult conservation = involution_conservation(grid);
    const CheckResult parity = involution_parity_as_printed(grid);
    CheckResult r;
    r.name = "involution_conservation";
    r.pass = conservation.pass && parity.pass;
    r.cases = conservation.cases + parity.cases;
    r.detail = "conservation: " + conservation.detail + " | parity as printed: " + parity.detail;
    r.seconds = conservation.seconds + parity.seconds;
    return r;
}

CheckResult criterion_jacquet_closure(const CheckGrid& grid) {
    Tally t("jacquet_closure");
    for (const auto& d : datums(grid.ms, grid.ells))
        for (int s = 2; s <= grid.s_max; ++s)
            for (int tt = 1; tt < s; ++tt) {
                GrothElement total;
                for (const auto& i : enumerate_index_set(d, s)) total = add(total, jacquet_constituent(d, s, i, tt));
                t.expect(total == jacquet_expected(d, s, tt),
                         [&] { return shape(d) + " s=" + std::to_string(s) + " t=" + std::to_string(tt); });
            }
    return t.finish();
}

CheckResult criterion_graph_shape(const CheckGrid& grid) {
    Tally t("graph_shape");
    for (const auto& d : datums(grid.ms, grid.ells))
        for (int s = 1; s <= grid.s_max; ++s) {
            const ExtensionGraph st = extension_graph_steinberg(d, s);
            t.expect(st.is_simple_path() && st.vertex_order_increasing(),
                     [&] { return shape(d) + " St s=" + std::to_string(s); });
            t.expect(semisimple_lattice_graph(st.vertices).edges.empty(), [&] { return shape(d) + " semisimple"; });
            for (int tt = 1; tt <= s; ++tt) {
                const ExtensionGraph lt = extension_graph_lubin_tate(d, s, tt);
                t.expect(lt.is_simple_path() && lt.vertex_order_increasing(),
                         [&] { return shape(d) + " LT s=" + std::to_string(s) + " t=" + std::to_string(tt); });
            }
        }
    return t.finish();
}

CheckResult criterion_euler_identity(const CheckGrid& grid) {
    Tally t("euler_identity");
    for (int s = 1; s <= grid.s_max; ++s)
        t.expect(euler_check(s), [&] {
            return "s=" + std::to_string(s) + " lhs " + euler_lhs(s).to_json() + " rhs " + euler_rhs(s).to_json();
        });
    t.note("the left side telescopes to (-1)^s [U_s]");
    return t.finish();
}

CheckResult criterion_disjointness(const CheckGrid& grid) {
    Tally t("disjointness");
    for (const auto& d : datums(grid.disjoint_ms, grid.disjoint_ells))
        for (int s = 3; s <= grid.disjoint_s_max; ++s)
            for (int t0 = 1; t0 < s; ++t0)
                for (int t1 = t0 + 1; t1 < s; ++t1) {
                    const auto r = constituents_disjoint(d, s, t0, t1);
                    t.expect(r.disjoint && r.warnings.empty(), [&] {
                        return shape(d) + " s=" + std::to_string(s) + " t=" + std::to_string(t0) + " t1=" + std::to_string(t1);
                    });
                }
    return t.finish();
}

CheckResult criterion_classical_oracle(const CheckGrid& grid) {
    const CheckResult lr = check_lr_oracle(grid.classical_pair_max, "lr");
    const CheckResult hooks = check_hook_squares(grid.hook_d_max, "hooks");
    const CheckResult ell = check_elliptic(grid.elliptic_s_max, "elliptic");
    CheckResult r;
    r.name = "classical_oracle";
    r.pass = lr.pass && hooks.pass && ell.pass;
    r.cases = lr.cases + hooks.cases + ell.cases;
    r.detail = "induction: " + lr.detail + " | dimensions: " + hooks.detail + " | elliptic: " + ell.detail;
    r.seconds = lr.seconds + hooks.seconds + ell.seconds;
    return r;
}

std::vector<CheckResult> acceptance_criteria(const CheckGrid& grid) {
    return {criterion_count_law(grid),         criterion_digit_index_equivalence(grid),
            criterion_small_s_degeneration(grid), criterion_involution_conservation(grid),
            criterion_jacquet_closure(grid),   criterion_graph_shape(grid),
            criterion_euler_identity(grid),    criterion_disjointness(grid),
            criterion_classical_oracle(grid)};
}

std::vector<CheckResult> run_invariant_suite(const CheckGrid& grid) {
    std::vector<CheckResult> out;
    out.push_back(check_recompose(grid));
    out.push_back(check_order_mod());
    out.push_back(check_m_at_least_two(grid));
    out.push_back(check_restricted(grid));
    out.push_back(check_boxtimes(grid));
    out.push_back(digit_equivalence(grid.ms, grid.ells, grid.level_s_max, "levels.digit_index_equivalence"));
    out.push_back(check_levels(grid));
    out.push_back(involution_conservation(grid));
    out.push_back(involution_parity_as_printed(grid));
    out.push_back(involution_small_and_involutive(grid));
    out.push_back(check_labels(grid));
    auto renamed = [](CheckResult r, const std::string& name) {
        r.name = name;
        return r;
    };
    out.push_back(renamed(criterion_count_law(grid), "reduction.count_law"));
    out.push_back(renamed(criterion_small_s_degeneration(grid), "reduction.small_s_degeneration"));
    out.push_back(renamed(criterion_jacquet_closure(grid), "reduction.jacquet_closure"));
    out.push_back(renamed(criterion_graph_shape(grid), "reduction.graph_shape"));
    out.push_back(check_containment(grid));
    out.push_back(renamed(criterion_euler_identity(grid), "reduction.euler_identity"));
    out.push_back(check_telescoping(grid));
    out.push_back(renamed(criterion_disjointness(grid), "reduction.disjointness"));
    out.push_back(check_speh(grid));
    out.push_back(check_commutation(grid));
    out.push_back(check_fixture());
    out.push_back(check_hook_squares(grid.hook_d_max, "classical.hook_square_sum"));
    out.push_back(check_lr_oracle(grid.classical_pair_max, "classical.induction_oracle_and_mass"));
    out.push_back(check_elliptic(grid.elliptic_s_max, "classical.elliptic_reductions"));
    out.push_back(check_borel_and_characters());
    out.push_back(check_groth_algebra());
    return out;
}

std::string report_json(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    auto esc = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out;
    };
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    os << "{\"checks\": [";
    for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& r = results[k];
        os << (k ? ",\n " : "\n ") << "{\"name\": \"" << esc(r.name) << "\", \"pass\": " << (r.pass ? "true" : "false")
           << ", \"cases\": " << r.cases << ", \"detail\": \"" << esc(r.detail) << "\"}";
    }
    os << "\n], \"failed\": " << failed << ", \"total\": " << results.size() << "}\n";
    return os.str();
}

}  // namespace zelred

#include "zelred/reduction.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "zelred/involution.hpp"

namespace zelred {

namespace {

Base slot_base(const CuspidalDatum& datum, int slot) {
    if (slot < 0) return Base::datum();
    return Base::steinberg(static_cast<std::int64_t>(datum.m) * ipow(datum.ell, slot));
}

ZParameter repeated(const Line& line, const Base& base, HalfInt start, int copies, int length) {
    std::vector<Segment> segs(static_cast<std::size_t>(copies), Segment{base, start, length});
    return ZParameter(line, std::move(segs));
}

std::string pattern_text(int left, int right) {
    std::string p = "<" + std::to_string(left);
    if (right > 0) p += ",>" + std::to_string(right);
    return p;
}

HalfInt centre_shift(std::int64_t twice) { return HalfInt{twice}; }

}  // namespace

std::string Factor::opaque_key(const CuspidalDatum& datum) const {
    return "I0[" + pattern_text(left, right) + "](" + base.str() + "{" + start.mod(line_epsilon(datum)).str() + "})";
}

ConstituentLabel::ConstituentLabel(CuspidalDatum datum, LevelIndex level, std::vector<Factor> factors)
    : datum_(datum), level_(std::move(level)), factors_(std::move(factors)) {
    const Line line = Line::of(datum_);
    ZParameter all(line);
    for (const auto& f : factors_) {
        if (f.content)
            all.add_all(ZParameter(line, f.content->segments()));
        else
            opaque_.push_back(f.opaque_key(datum_));
    }
    explicit_ = to_supercuspidal(all);
    std::sort(opaque_.begin(), opaque_.end());
    canonical_ = explicit_.str();
    for (const auto& atom : opaque_) canonical_ += " * " + atom;
}

LevelIndex ConstituentLabel::factor_level_sum() const {
    std::vector<LevelIndex> parts;
    for (const auto& f : factors_) {
        LevelIndex l;
        if (f.slot >= 0) {
            l.entries.assign(static_cast<std::size_t>(f.slot) + 1, 0);
            l.entries[static_cast<std::size_t>(f.slot)] = f.size();
        }
        parts.push_back(l);
    }
    return cuspidal_level_of_product(parts);
}

Support ConstituentLabel::support() const {
    const Line line = Line::of(datum_);
    Support total;
    for (const auto& f : factors_) {
        for (const auto& [pt, n] : zelred::support(ZParameter(line, {Segment{f.base, f.start, f.size()}})))
            total[pt] += n;
    }
    return total;
}

std::int64_t ConstituentLabel::size() const {
    std::int64_t n = 0;
    for (const auto& f : factors_) n += f.base.st * f.size();
    return n;
}

ConstituentLabel ConstituentLabel::twisted(HalfInt delta) const {
    std::vector<Factor> fs = factors_;
    for (auto& f : fs) {
        f.start += delta;
        if (f.content) f.content = twist(*f.content, delta);
    }
    return ConstituentLabel(datum_, level_, std::move(fs));
}

std::optional<Factor> steinberg_factor(const CuspidalDatum& datum, int slot, HalfInt start, int size) {
    if (size < 0) throw ParameterError("factor size must be non-negative");
    if (size == 0) return std::nullopt;
    const Line line = Line::of(datum);
    Factor f;
    f.slot = slot;
    f.base = slot_base(datum, slot);
    f.start = start;
    f.left = size - 1;
    if (slot >= 0 || datum.epsilon == 1) {
        if (size < datum.ell) f.content = repeated(line, f.base, start, size, 1);
    } else {
        const ZParameter inv = involute_single_segment(Base::datum(), size, datum.epsilon);
        f.content = twist(ZParameter(line, inv.segments()), start);
    }
    return f;
}

std::optional<Factor> lubin_tate_factor(const CuspidalDatum& datum, HalfInt start, int left, int right) {
    if (left < 0 || right < 0) throw ParameterError("arrow lengths must be non-negative");
    if (right == 0) return steinberg_factor(datum, -1, start, left + 1);
    const Line line = Line::of(datum);
    Factor f;
    f.slot = -1;
    f.base = Base::datum();
    f.start = start;
    f.left = left;
    f.right = right;
    if (left == 0) {
        f.content = repeated(line, f.base, start, 1, right + 1);
    } else if (datum.epsilon == 1 && left + right + 1 < datum.ell) {
        ZParameter hook = repeated(line, f.base, start, 1, right + 1);
        hook.add_all(repeated(line, f.base, start, left, 1));
        f.content = hook;
    }
    return f;
}

std::vector<ConstituentLabel> steinberg_constituents(const CuspidalDatum& datum, int s) {
    if (s < 1) throw ParameterError("s must be positive");
    const HalfInt sigma = centre_shift(1 - s);
    std::vector<ConstituentLabel> out;
    for (const auto& i : enumerate_index_set(datum, s)) {
        std::vector<Factor> fs;
        for (std::size_t k = 0; k < i.entries.size(); ++k)
            if (auto f = steinberg_factor(datum, static_cast<int>(k), sigma, i.entries[k])) fs.push_back(*f);
        const std::int64_t mass = level_mass(datum, i);
        if (auto f = steinberg_factor(datum, -1, sigma + HalfInt::integer(mass), static_cast<int>(s - mass)))
            fs.push_back(*f);
        out.emplace_back(datum, i, std::move(fs));
    }
    return out;
}

std::vector<ConstituentLabel> lubin_tate_constituents(const CuspidalDatum& datum, int s, int t) {
    if (t < 1 || t > s) throw ParameterError("t must satisfy 1 <= t <= s");
    const HalfInt sigma = centre_shift(1 - s);
    std::vector<ConstituentLabel> out;
    for (const auto& i : enumerate_index_set(datum, t - 1)) {
        std::vector<Factor> fs;
        for (std::size_t k = 0; k < i.entries.size(); ++k)
            if (auto f = steinberg_factor(datum, static_cast<int>(k), sigma, i.entries[k])) fs.push_back(*f);
        const std::int64_t mass = level_mass(datum, i);
        const int t_rho = static_cast<int>(t - mass);
        if (auto f = lubin_tate_factor(datum, sigma + HalfInt::integer(mass), t_rho - 1, s - t)) fs.push_back(*f);
        out.emplace_back(datum, i, std::move(fs));
    }
    return out;
}

GrothElement to_groth(const std::vector<ConstituentLabel>& labels) {
    GrothElement e;
    for (const auto& l : labels) e.add_term(l.canonical(), 1);
    return e;
}

std::string ElementaryLabel::str() const {
    return std::string("[") + (arrow == Arrow::Left ? "<" : ">") + std::to_string(n) + "]_{pi{" + twist.str() + "}}";
}

std::pair<ElementaryLabel, ElementaryLabel> jacquet_steinberg(int s, int t, Arrow arrow, Parabolic parabolic) {
    if (t < 1 || t > s - 1) throw ParameterError("Jacquet functor needs 1 <= t <= s - 1");
    const HalfInt a = HalfInt::half(s - t);
    const HalfInt b = HalfInt::half(t);
    // Standard parabolic with left arrows, and opposite with right arrows, put the first block on top.
    const bool first_on_top = (arrow == Arrow::Left) == (parabolic == Parabolic::Standard);
    const HalfInt first = first_on_top ? a : -a;
    const HalfInt second = first_on_top ? -b : b;
    return {ElementaryLabel{arrow, t - 1, first}, ElementaryLabel{arrow, s - t - 1, second}};
}

GrothElement jacquet_constituent(const CuspidalDatum& datum, int s, const LevelIndex& i, int t) {
    if (t < 1 || t > s - 1) throw ParameterError("Jacquet functor needs 1 <= t <= s - 1");
    const std::int64_t mass = level_mass(datum, i);
    if (mass > s || std::any_of(i.entries.begin(), i.entries.end(), [](int v) { return v < 0; }))
        throw ParameterError("level index " + i.str() + " is not in the index set");
    const HalfInt sigma = centre_shift(1 - s);
    const std::int64_t rest = s - mass;
    GrothElement out;
    LevelIndex j;
    j.entries.assign(i.entries.size(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t used) {
        if (k == i.entries.size()) {
            const std::int64_t j_rho = t - used;
            if (j_rho < 0 || j_rho > rest) return;
            std::vector<Factor> left;
            std::vector<Factor> right;
            LevelIndex complement;
            for (std::size_t q = 0; q < i.entries.size(); ++q) {
                const int slot = static_cast<int>(q);
                if (auto f = steinberg_factor(datum, slot, sigma, j.entries[q])) left.push_back(*f);
                if (auto f = steinberg_factor(datum, slot, sigma, i.entries[q] - j.entries[q])) right.push_back(*f);
                complement.entries.push_back(i.entries[q] - j.entries[q]);
            }
            if (auto f = steinberg_factor(datum, -1, sigma + HalfInt::integer(s - j_rho), static_cast<int>(j_rho)))
                left.push_back(*f);
            if (auto f = steinberg_factor(datum, -1, sigma + HalfInt::integer(mass), static_cast<int>(rest - j_rho)))
                right.push_back(*f);
            const ConstituentLabel l(datum, j, std::move(left));
            const ConstituentLabel r(datum, complement, std::move(right));
            out.add_term(tensor_label(l.canonical(), r.canonical()), 1);
            return;
        }
        const std::int64_t w = static_cast<std::int64_t>(datum.m) * ipow(datum.ell, static_cast<int>(k));
        for (int v = 0; v <= i.entries[k] && used + v * w <= t; ++v) {
            j.entries[k] = v;
            rec(k + 1, used + v * w);
        }
        j.entries[k] = 0;
    };
    rec(0, 0);
    return out;
}

GrothElement jacquet_expected(const CuspidalDatum& datum, int s, int t) {
    if (t < 1 || t > s - 1) throw ParameterError("Jacquet functor needs 1 <= t <= s - 1");
    GrothElement out;
    const auto lefts = steinberg_constituents(datum, t);
    const auto rights = steinberg_constituents(datum, s - t);
    for (const auto& a : lefts) {
        const auto la = a.twisted(HalfInt::half(s - t)).canonical();
        for (const auto& b : rights) out.add_term(tensor_label(la, b.twisted(HalfInt::half(-t)).canonical()), 1);
    }
    return out;
}

bool ExtensionGraph::is_simple_path() const {
    if (vertices.empty()) return false;
    if (edges.size() != vertices.size() - 1) return false;
    for (std::size_t k = 0; k < edges.size(); ++k)
        if (edges[k] != std::make_pair(k, k + 1)) return false;
    return true;
}

bool ExtensionGraph::vertex_order_increasing() const {
    for (std::size_t k = 1; k < vertices.size(); ++k)
        if (!(vertices[k - 1].level() < vertices[k].level())) return false;
    return true;
}

std::string ExtensionGraph::to_dot(const std::string& name) const {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        std::string label = vertices[k].level().str() + "\\n" + vertices[k].canonical();
        std::string escaped;
        for (char c : label) {
            if (c == '"') escaped += '\\';
            escaped += c;
        }
        os << "  v" << k << " [label=\"" << escaped << "\"];\n";
    }
    for (const auto& [a, b] : edges) os << "  v" << a << " -> v" << b << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

ExtensionGraph path_graph(std::vector<ConstituentLabel> vertices) {
    ExtensionGraph g;
    g.vertices = std::move(vertices);
    for (std::size_t k = 1; k < g.vertices.size(); ++k) g.edges.emplace_back(k - 1, k);
    return g;
}

}  // namespace

ExtensionGraph extension_graph_steinberg(const CuspidalDatum& datum, int s) {
    return path_graph(steinberg_constituents(datum, s));
}

ExtensionGraph extension_graph_lubin_tate(const CuspidalDatum& datum, int s, int t) {
    return path_graph(lubin_tate_constituents(datum, s, t));
}

ExtensionGraph semisimple_lattice_graph(std::vector<ConstituentLabel> constituents) {
    ExtensionGraph g;
    g.vertices = std::move(constituents);
    g.orientation_reversible = false;
    return g;
}

std::string elliptic_label(int a, int b) { return "[<" + std::to_string(a) + ",>" + std::to_string(b) + "]"; }

LengthTwoInduction induced_length_two(int s, int t, bool dual) {
    if (t < 1 || t > s - 1) throw ParameterError("length-two induction needs 1 <= t <= s - 1");
    LengthTwoInduction r;
    r.sub = elliptic_label(t - 1, s - t);
    r.quotient = elliptic_label(t, s - t - 1);
    if (dual) std::swap(r.sub, r.quotient);
    r.cls.add_term(r.sub, 1);
    r.cls.add_term(r.quotient, 1);
    return r;
}

GrothElement euler_lhs(int s) {
    if (s < 1) throw ParameterError("s must be positive");
    GrothElement out;
    for (int i = 1; i <= s; ++i) {
        const std::int64_t sign = i % 2 == 0 ? 1 : -1;
        if (i == 1)
            out.add_term(elliptic_label(s - 1, 0), sign);
        else
            out = add(out, scale(induced_length_two(s, s - i + 1).cls, sign));
    }
    return out;
}

GrothElement euler_rhs(int s) {
    if (s < 1) throw ParameterError("s must be positive");
    GrothElement out;
    for (int i = 1; i <= s; ++i) out.add_term(elliptic_label(s - i, i - 1), i % 2 == 0 ? 1 : -1);
    return out;
}

bool euler_check(int s) { return euler_lhs(s) == euler_rhs(s); }

bool telescoping_check(int s) {
    return euler_lhs(s) == GrothElement::of(elliptic_label(0, s - 1), s % 2 == 0 ? 1 : -1);
}

DisjointnessResult constituents_disjoint(const CuspidalDatum& datum, int s, int t, int t1) {
    DisjointnessResult r;
    if (datum.ell == 2) r.warnings.push_back("ell = 2 lies outside the hypotheses");
    if (!(0 < t && t < t1 && t1 < s)) r.warnings.push_back("expected 0 < t < t1 < s");
    std::set<std::string> first;
    for (const auto& l : lubin_tate_constituents(datum, s, t)) first.insert(l.canonical());
    for (const auto& l : lubin_tate_constituents(datum, s, t1))
        if (first.count(l.canonical())) r.disjoint = false;
    return r;
}

namespace {

bool twist_trivial(HalfInt delta, int epsilon) { return delta.mod(epsilon).twice == 0; }

// Can [>a]_{rho{delta}} coincide with I_0([<a]) (both centred)?
bool speh_matches_steinberg_part(const CuspidalDatum& datum, int a, HalfInt delta) {
    const Line line = Line::of(datum);
    const ZParameter speh(line, {Segment{Base::datum(), delta + HalfInt::half(-a), a + 1}});
    if (datum.epsilon > 1) return superunipotent_constituent_steinberg(datum, a) == speh;
    if (a + 1 < datum.ell) {
        const auto f = steinberg_factor(datum, -1, HalfInt::half(-a), a + 1);
        return *f->content == speh;
    }
    // Opaque case: a Jacquet functor reduces the question to size two.
    if (datum.ell == 2) return true;
    return speh_matches_steinberg_part(datum, 1, delta);
}

// Can [>a]_{rho{delta}} coincide with I_0([<t, >a-t]) (both centred)?
bool may_equal(const CuspidalDatum& datum, int t, int a, HalfInt delta) {
    const int eps = datum.epsilon;
    if (t == 0) return twist_trivial(delta, eps);
    if (t == a) return speh_matches_steinberg_part(datum, a, delta);
    // Second factor of the (t+1, a-t) Jacquet module.
    if (!twist_trivial(delta, eps)) return false;
    // First factor of the same module.
    if (!speh_matches_steinberg_part(datum, t, HalfInt{})) return false;
    // Extreme cuspidal supports on the standard and opposite sides.
    if (t % eps != 0 || a % eps != 0) return false;
    // (a, 1) Jacquet module: the last cuspidal comes from the right or the left arrows.
    const HalfInt top = delta + HalfInt::half(a);
    const bool from_right = (top - HalfInt::half(a)).mod(eps).twice == 0;
    const bool from_left = (top + HalfInt::half(a)).mod(eps).twice == 0;
    return (from_right && may_equal(datum, t, a - 1, delta)) ||
           (from_left && may_equal(datum, t - 1, a - 1, delta - HalfInt::integer(1)));
}

}  // namespace

bool speh_never_equals_I0(const CuspidalDatum& datum, int t, int a) {
    if (datum.ell == 2) throw ParameterError("ell = 2 lies outside the hypotheses");
    if (!(0 < t && t < a)) throw ParameterError("expected 0 < t < a");
    for (std::int64_t twice = 0; twice < 2 * datum.epsilon; ++twice)
        if (may_equal(datum, t, a, HalfInt{twice})) return false;
    return true;
}

GrothElement lubin_tate_jacquet_fixture(const CuspidalDatum& datum) {
    if (datum.m != 2 || datum.ell != 3) throw ParameterError("the fixture is recorded for m = 2, ell = 3");
    const HalfInt shift = HalfInt::half(-1);
    const std::string cusp = "rho{1/2}";
    const auto st2 = steinberg_constituents(datum, 2);
    const ConstituentLabel speh(datum, LevelIndex{{0}}, {*lubin_tate_factor(datum, HalfInt::half(-1), 0, 1)});
    GrothElement out;
    out.add_term(tensor_label(st2.at(0).twisted(shift).canonical(), cusp), 1);
    out.add_term(tensor_label(speh.twisted(shift).canonical(), cusp), 1);
    out.add_term(tensor_label(st2.at(1).twisted(shift).canonical(), cusp), 1);
    return out;
}

}  // namespace zelred

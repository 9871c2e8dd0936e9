#include "zelred/zelevinski.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace zelred {

HalfInt HalfInt::mod(std::int64_t period) const {
    const std::int64_t p = 2 * period;
    std::int64_t r = twice % p;
    if (r < 0) r += p;
    return HalfInt{r};
}

std::string HalfInt::str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

std::string Base::str() const {
    std::string o;
    switch (origin) {
        case Origin::Unit: o = "1"; break;
        case Origin::Datum: o = "rho"; break;
        case Origin::Foreign: return name;
    }
    if (st == 1) return o;
    return "St" + std::to_string(st) + "(" + o + ")";
}

ZParameter::ZParameter(Line line, std::vector<Segment> segs) : line_(line), segs_(std::move(segs)) {
    if (line_.epsilon < 1) throw ParameterError("line size must be positive");
    normalize();
}

void ZParameter::normalize() {
    for (auto& s : segs_) {
        if (s.length < 1) throw ParameterError("segment length must be positive");
        s.start = s.start.mod(line_.epsilon);
    }
    std::sort(segs_.begin(), segs_.end());
}

void ZParameter::add(Segment s) {
    segs_.push_back(s);
    normalize();
}

void ZParameter::add_all(const ZParameter& other) {
    if (other.line_.epsilon != line_.epsilon) throw ParameterError("parameters live on different lines");
    segs_.insert(segs_.end(), other.segs_.begin(), other.segs_.end());
    normalize();
}

std::int64_t ZParameter::box_count() const {
    std::int64_t n = 0;
    for (const auto& s : segs_) n += s.length * s.base.st;
    return n;
}

std::string ZParameter::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < segs_.size(); ++i) {
        if (i) os << ", ";
        os << '(' << segs_[i].base.str() << ", " << segs_[i].start.str() << ", " << segs_[i].length << ')';
    }
    os << ']';
    return os.str();
}

namespace {

void require_cycle_shape(const Line& line) {
    if (line.ell < 2) throw ParameterError("cycle detection needs ell on the line");
}

std::int64_t cycle_unit(const Line& line) { return line.epsilon > 1 ? 1 : line.ell; }

}  // namespace

bool is_cycle(const Line& line, const std::vector<Segment>& segments) {
    require_cycle_shape(line);
    if (segments.empty()) return false;
    const int r = segments.front().length;
    for (const auto& s : segments)
        if (s.length != r) throw ParameterError("not a cycle candidate: mixed segment lengths");
    const Base& b = segments.front().base;
    if (!b.supercuspidal()) return false;
    for (const auto& s : segments)
        if (s.base != b) return false;

    const auto n = static_cast<std::int64_t>(segments.size());
    std::int64_t size = line.m;
    while (size < n) size *= line.ell;
    if (size != n) return false;

    const std::int64_t cls = segments.front().start.mod(line.epsilon).twice % 2;
    std::map<std::int64_t, std::int64_t> counts;
    for (const auto& s : segments) {
        const auto t = s.start.mod(line.epsilon).twice;
        if (t % 2 != cls) return false;
        ++counts[t];
    }
    if (static_cast<int>(counts.size()) != line.epsilon) return false;
    const std::int64_t per_point = n / line.epsilon;
    return std::all_of(counts.begin(), counts.end(), [&](const auto& kv) { return kv.second == per_point; });
}

ZParameter to_restricted(const ZParameter& param) {
    const Line& line = param.line();
    require_cycle_shape(line);
    // (origin, -length, class) -> point -> count; the key order visits longer segments first.
    using Key = std::tuple<Origin, int, std::int64_t>;
    std::map<Key, std::map<std::int64_t, std::int64_t>> groups;
    std::vector<Segment> out;
    for (const auto& s : param.segments()) {
        if (!s.base.supercuspidal()) {
            out.push_back(s);
            continue;
        }
        groups[{s.base.origin, -s.length, s.start.twice % 2}][s.start.twice]++;
    }
    const std::int64_t unit = cycle_unit(line);
    for (auto& [key, counts] : groups) {
        const auto [origin, neg_len, cls] = key;
        std::int64_t cmin = 0;
        if (static_cast<int>(counts.size()) == line.epsilon) {
            cmin = counts.begin()->second;
            for (const auto& kv : counts) cmin = std::min(cmin, kv.second);
        }
        std::int64_t k = cmin / unit;
        const std::int64_t used = k * unit;
        std::int64_t cycle_size = line.m;
        while (k > 0) {
            const std::int64_t d = k % line.ell;
            for (std::int64_t c = 0; c < d; ++c)
                out.push_back({Base::steinberg(cycle_size, origin), HalfInt{cls}, -neg_len});
            k /= line.ell;
            cycle_size *= line.ell;
        }
        for (const auto& [pt, cnt] : counts)
            for (std::int64_t c = used; c < cnt; ++c)
                out.push_back({Base{origin, 1, {}}, HalfInt{pt}, -neg_len});
    }
    return ZParameter(line, std::move(out));
}

ZParameter to_supercuspidal(const ZParameter& param) {
    std::vector<Segment> out;
    for (const auto& s : param.segments()) {
        if (s.base.origin == Origin::Foreign)
            throw ParameterError("base " + s.base.name + " carries no origin tag");
        if (s.base.st == 1) {
            out.push_back(s);
            continue;
        }
        for (std::int64_t i = 0; i < s.base.st; ++i)
            out.push_back({Base{s.base.origin, 1, {}}, s.start + HalfInt::integer(i), s.length});
    }
    return ZParameter(param.line(), std::move(out));
}

ZParameter boxtimes(const ZParameter& super_param, const Line& target_line, const Base& target) {
    std::vector<Segment> out;
    for (const auto& s : super_param.segments()) {
        if (s.base.origin != Origin::Unit || s.base.st != 1)
            throw ParameterError("boxtimes expects a superunipotent parameter");
        out.push_back({target, s.start, s.length});
    }
    return ZParameter(target_line, std::move(out));
}

ZParameter twist(const ZParameter& param, HalfInt n) {
    std::vector<Segment> out = param.segments();
    for (auto& s : out) s.start += n;
    return ZParameter(param.line(), std::move(out));
}

Support support(const ZParameter& param) {
    Support sup;
    const auto eps = param.line().epsilon;
    bool have_origin = false;
    Origin origin = Origin::Datum;
    for (const auto& s : param.segments()) {
        if (s.base.origin == Origin::Foreign) throw ParameterError("support of an untagged base is unknown");
        if (have_origin && s.base.origin != origin) throw ParameterError("support mixes two lines");
        have_origin = true;
        origin = s.base.origin;
        for (std::int64_t x = 0; x < s.base.st; ++x)
            for (int y = 0; y < s.length; ++y) ++sup[(s.start + HalfInt::integer(x + y)).mod(eps).twice];
    }
    return sup;
}

ZParameter steinberg_parameter(const Line& line, const Base& base, HalfInt start, int n) {
    std::vector<Segment> segs;
    for (int j = 0; j < n; ++j) segs.push_back({base, start + HalfInt::integer(j), 1});
    return ZParameter(line, std::move(segs));
}

}  // namespace zelred

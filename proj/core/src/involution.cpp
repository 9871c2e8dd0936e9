#include "zelred/involution.hpp"

#include <string>

namespace zelred {

ZParameter involute_single_segment(const Base& base, int s, int epsilon) {
    if (epsilon < 2) throw ParameterError("no explicit involution on a line with a single point");
    if (s < 1) throw ParameterError("segment length must be positive");
    const Line line = Line::bare(epsilon);
    // s = q (epsilon - 1) + r; the formula at epsilon = 2 yields (base nu^{1-s}, s).
    const int q = s / (epsilon - 1);
    const int r = s % (epsilon - 1);
    std::vector<Segment> segs;
    for (int j = 0; j < epsilon; ++j) {
        if (j == r) continue;
        const int len = j < r ? q + 1 : q;
        if (len == 0) continue;
        segs.push_back({base, HalfInt::integer(j - q), len});
    }
    return ZParameter(line, std::move(segs));
}

ZParameter superunipotent_constituent_steinberg(const CuspidalDatum& datum, int t) {
    if (t < 0) throw ParameterError("t must be non-negative: " + std::to_string(t));
    const ZParameter unit = involute_single_segment(Base::unit(), t + 1, datum.epsilon);
    const Line line = Line::of(datum);
    return twist(boxtimes(unit, line), HalfInt::half(-t));
}

}  // namespace zelred

#pragma once

#include "zelred/zelevinski.hpp"

namespace zelred {

// Image of the single segment (base, s) starting at twist 0 under the Zelevinski
// involution on a line with epsilon > 1 points. Segments lie on Line::bare(epsilon).
ZParameter involute_single_segment(const Base& base, int s, int epsilon);

// Explicit parameter of the level-zero constituent of the reduction of a Steinberg of
// size t + 1, centred so its support matches {rho{j - t/2}}_{j <= t}.
ZParameter superunipotent_constituent_steinberg(const CuspidalDatum& datum, int t);

}  // namespace zelred

#pragma once

#include "coha/quiver.hpp"


namespace coha::fixtures {

/// One vertex with `loops` loops named a, b, c, ... and framing w.
/// A single framing arrow is named f, two are named e and f.
FramedQuiver loop_quiver(int loops, int framing);
/// One vertex, no arrows.
FramedQuiver vertex_only(int framing);
/// 0 → 1 with one arrow a and framing (w0, w1).
FramedQuiver a2(int framing0, int framing1);

}  // namespace coha::fixtures

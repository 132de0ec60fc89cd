#include "coha/fixtures.hpp"

namespace coha::fixtures {

namespace {

std::vector<std::string> framing_names(int w) {
  if (w == 1) return {"f"};
  if (w == 2) return {"e", "f"};
  return {};
}

}  // namespace

FramedQuiver loop_quiver(int loops, int framing) {
  std::vector<Arrow> arrows;
  for (int k = 0; k < loops; ++k) arrows.push_back({std::string(1, static_cast<char>('a' + k)), 0, 0});
  return FramedQuiver(Quiver(1, std::move(arrows)), DimVector{framing}, framing_names(framing));
}

FramedQuiver vertex_only(int framing) {
  return FramedQuiver(Quiver(1, {}), DimVector{framing}, framing_names(framing));
}

FramedQuiver a2(int framing0, int framing1) {
  return FramedQuiver(Quiver(2, {{"a", 0, 1}}), DimVector{framing0, framing1});
}

}  // namespace coha::fixtures

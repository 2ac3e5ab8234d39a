#include "gk/parts.hpp"

namespace gk {
namespace {

constexpr std::array<int, 4> kT1Path{0, 1, 2, 3};
constexpr std::array<int, 8> kT2Path{0, 1, 2, 3, 5, 4, 6, 7};
constexpr std::array<int, 6> kT3Path{0, 2, 1, 3, 4, 5};
constexpr std::array<int, 8> kT4Path{0, 1, 2, 4, 3, 5, 6, 7};

}  // namespace

std::string_view to_string(PartTag tag) {
  switch (tag) {
    case PartTag::T1:
      return "T1";
    case PartTag::T2:
      return "T2";
    case PartTag::T3:
      return "T3";
    case PartTag::T4:
      return "T4";
  }
  return "?";
}

std::optional<PartTag> parse_part_tag(std::string_view name) {
  for (PartTag t : kAllParts)
    if (to_string(t) == name) return t;
  return std::nullopt;
}

std::size_t part_slot_count(PartTag tag) {
  switch (tag) {
    case PartTag::T1:
      return 4;
    case PartTag::T3:
      return 6;
    case PartTag::T2:
    case PartTag::T4:
      return 8;
  }
  return 0;
}

std::vector<Edge> part_edges(PartTag tag) {
  const Vertex a = 0;
  const auto b = static_cast<Vertex>(part_slot_count(tag) + 1);
  auto s = [](int i) { return static_cast<Vertex>(i + 1); };
  const Vertex w1 = s(0), w2 = s(1), u1 = s(2), u2 = s(3);
  std::vector<Edge> e{{a, w1}, {a, w2}, {w1, w2}, {w1, u1}, {w1, u2}, {w2, u1}, {w2, u2}};
  switch (tag) {
    case PartTag::T1:
      e.insert(e.end(), {{u1, u2}, {u1, b}, {u2, b}});
      break;
    case PartTag::T2: {
      const Vertex x1 = s(4), x2 = s(5), y1 = s(6), y2 = s(7);
      e.insert(e.end(), {{u1, u2}, {u1, x1}, {u2, x2}, {x1, x2}, {x1, y1}, {x1, y2}, {x2, y1}, {x2, y2}, {y1, y2},
                         {y1, b}, {y2, b}});
      break;
    }
    case PartTag::T3: {
      const Vertex x1 = s(4), x2 = s(5);
      e.insert(e.end(), {{u1, x1}, {u1, x2}, {u2, x1}, {u2, x2}, {x1, x2}, {x1, b}, {x2, b}});
      break;
    }
    case PartTag::T4: {
      const Vertex x1 = s(4), x2 = s(5), y1 = s(6), y2 = s(7);
      e.insert(e.end(), {{u1, x1}, {u1, x2}, {u2, x1}, {u2, x2}, {x1, y1}, {x1, y2}, {x2, y1}, {x2, y2}, {y1, y2},
                         {y1, b}, {y2, b}});
      break;
    }
  }
  return e;
}

std::span<const int> part_path_template(PartTag tag) {
  switch (tag) {
    case PartTag::T1:
      return kT1Path;
    case PartTag::T2:
      return kT2Path;
    case PartTag::T3:
      return kT3Path;
    case PartTag::T4:
      return kT4Path;
  }
  return {};
}

}  // namespace gk

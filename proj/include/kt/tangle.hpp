#pragma once

#include <utility>
#include <vector>

#include "kt/json_util.hpp"

namespace kt {

enum class SectionKind { Trivial, Crossing, Top };

// one horizontal slice of a plat diagram, read bottom to top
struct Section {
  SectionKind kind = SectionKind::Trivial;
  int pos = -1;   // crossing: left strand position, paired with pos+1
  int sign = 0;   // crossing: +1 right-handed, -1 left-handed
  std::vector<std::pair<int, int>> matching;  // top: caps over 2*arcs strands
};

// a arcs enter at the bottom (arc k owns strands 2k, 2k+1), pass through
// crossing sections, and are capped by the final top section
struct TangleDiagram {
  int arcs = 0;
  std::vector<Section> sections;
  std::vector<bool> helpers;  // per arc; true marks a stabilizing arc (suffix)
};

void validate_tangle(const TangleDiagram& t);

TangleDiagram tangle_from_json(const ojson& j);
ojson tangle_to_json(const TangleDiagram& t);

// appends k straight helper arcs on the right
TangleDiagram stabilize(const TangleDiagram& t, int k);

int crossing_count(const TangleDiagram& t);
int original_arc_count(const TangleDiagram& t);  // arcs with helpers flag off

// pairing of bottom strands induced by following arcs through the diagram
std::vector<int> induced_matching(const TangleDiagram& t);

// component count of the link obtained by gluing two tangles along their
// shared bottom boundary
int plat_components(const TangleDiagram& bottom, const TangleDiagram& top);

}  // namespace kt

#pragma once

#include <array>
#include <string>
#include <vector>

#include "kt/tangle.hpp"

namespace kt {

// crossing with edge labels in counterclockwise planar order;
// e[0] is the incoming under edge, e[2] the outgoing under edge,
// sign +1 when the over strand enters at e[3], -1 when it enters at e[1]
struct PDCrossing {
  std::array<int, 4> e{};
  int sign = 0;
};

// oriented planar diagram; edges are labeled 0..nedges-1, and closed
// components without crossings are only counted
struct PD {
  int nedges = 0;
  std::vector<PDCrossing> xs;
  int loose_loops = 0;
};

void validate_pd(const PD& pd);

// diagram components including crossingless loops; per-edge component index
// (loose loops take the trailing indices)
int pd_components(const PD& pd, std::vector<int>* edge_comp = nullptr);

// diagram of the link glued from two tangles along their bottom boundary
PD plat_pd(const TangleDiagram& bottom, const TangleDiagram& top);

// relabeling-, orientation- and starting-point-independent form
std::string canonical_pd(const PD& pd);

// text form: one X(a,b,c,d) line per crossing, 1-based edge labels
std::string pd_to_text(const PD& pd);
PD pd_from_text(const std::string& text);

// signed crossings between every pair of components, halved; diagonal zero
std::vector<std::vector<long long>> linking_matrix(const PD& pd);

// diagram of one component alone, with edges fused through removed crossings
PD component_pd(const PD& pd, int comp);

}  // namespace kt

// Shared test fixtures: small quiver builders, orientation sweeps, and the
// Weyl dimension formula used as an independent size oracle.

#pragma once

#include <arcrystal/quiver.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

namespace testsupport {

using namespace arcrystal;

inline Quiver quiver_of(Family f, int rank, std::vector<std::pair<int, int>> arrows) {
  QuiverSpec spec;
  spec.family = f;
  spec.rank = rank;
  spec.arrows = std::move(arrows);
  return build_quiver(spec);
}

/// The D_4 quiver with arrows 3->1, 3->2, 4->3.
inline Quiver d4_reference() { return quiver_of(Family::D, 4, {{3, 1}, {3, 2}, {4, 3}}); }

/// Every orientation of the given Dynkin graph.
inline std::vector<Quiver> all_orientations(Family f, int rank) {
  auto edges = dynkin_edges(f, rank);
  std::vector<Quiver> out;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    QuiverSpec spec;
    spec.family = f;
    spec.rank = rank;
    for (size_t k = 0; k < edges.size(); ++k) {
      auto [a, b] = edges[k];
      if (mask & (1u << k))
        spec.arrows.emplace_back(a, b);
      else
        spec.arrows.emplace_back(b, a);
    }
    out.push_back(build_quiver(spec));
  }
  return out;
}

/// dim V(lambda) by the Weyl dimension formula: the product over positive
/// roots of <lambda+rho, a> / <rho, a> with everything in pairing
/// coordinates. Exact integer arithmetic.
inline long long weyl_dim(const Quiver& q, const DimVector& lambda) {
  __int128 num = 1, den = 1;
  for (const DimVector& a : positive_roots(q)) {
    long long up = 0, down = 0;
    for (int i = 0; i < q.rank; ++i) {
      up += static_cast<long long>(a[i]) * (lambda[i] + 1);
      down += a[i];
    }
    num *= up;
    den *= down;
  }
  if (den == 0 || num % den != 0) return -1;
  return static_cast<long long>(num / den);
}

/// All dominant weights with pairings bounded by `cap`.
inline std::vector<DimVector> weights_up_to(int rank, int cap) {
  std::vector<DimVector> out;
  DimVector w(rank, 0);
  while (true) {
    out.push_back(w);
    int i = 0;
    while (i < rank && w[i] == cap) w[i++] = 0;
    if (i == rank) break;
    ++w[i];
  }
  return out;
}

}  // namespace testsupport

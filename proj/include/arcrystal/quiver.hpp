// Dynkin quivers of types A and D: orientation data, Cartan/Euler forms,
// adapted sink orderings and simple reflections on dimension vectors.
//
// Vertex numbering is fixed once and for all:
//   A_n : the path 1 - 2 - ... - n
//   D_n : fork tips 1 and 2, trivalent vertex 3, tail 3 - 4 - ... - n
// (D_3 is the path 1 - 3 - 2 and is accepted.)
//
// Dimension vectors are plain int vectors indexed by vertex-1. Entries may
// go negative inside reflection products; module constructors reject that.

#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace arcrystal {

using DimVector = std::vector<int>;

enum class Family { A, D };

inline std::string family_name(Family f) { return f == Family::A ? "A" : "D"; }

struct QuiverSpec {
  Family family = Family::A;
  int rank = 1;
  std::vector<std::pair<int, int>> arrows;  // directed (src, dst), one per Dynkin edge
};

/// Undirected edges of the Dynkin graph, as (min, max) pairs.
inline std::vector<std::pair<int, int>> dynkin_edges(Family family, int rank) {
  std::vector<std::pair<int, int>> edges;
  if (family == Family::A) {
    for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
  } else {
    edges.emplace_back(1, 3);
    edges.emplace_back(2, 3);
    for (int i = 3; i < rank; ++i) edges.emplace_back(i, i + 1);
  }
  return edges;
}

struct Quiver {
  Family family = Family::A;
  int rank = 0;
  std::vector<std::pair<int, int>> arrows;   // sorted ascending
  std::vector<std::vector<int>> cartan;      // rank x rank

  bool has_arrow(int a, int b) const {
    return std::binary_search(arrows.begin(), arrows.end(), std::make_pair(a, b));
  }
  std::vector<int> arrows_out(int v) const {
    std::vector<int> r;
    for (auto& [a, b] : arrows)
      if (a == v) r.push_back(b);
    return r;
  }
  std::vector<int> arrows_in(int v) const {
    std::vector<int> r;
    for (auto& [a, b] : arrows)
      if (b == v) r.push_back(a);
    return r;
  }
  bool is_sink(int v) const { return arrows_out(v).empty(); }
  bool is_source(int v) const { return arrows_in(v).empty(); }
  std::vector<int> sinks() const {
    std::vector<int> r;
    for (int v = 1; v <= rank; ++v)
      if (is_sink(v)) r.push_back(v);
    return r;
  }

  /// The opposite quiver Q* (all arrows reversed).
  Quiver reversed() const {
    Quiver r = *this;
    for (auto& [a, b] : r.arrows) std::swap(a, b);
    std::sort(r.arrows.begin(), r.arrows.end());
    return r;
  }

  bool operator==(const Quiver& o) const {
    return family == o.family && rank == o.rank && arrows == o.arrows;
  }
};

inline Quiver build_quiver(const QuiverSpec& spec) {
  if (spec.family == Family::A && spec.rank < 1)
    throw std::invalid_argument("type A rank must be >= 1");
  if (spec.family == Family::D && spec.rank < 3)
    throw std::invalid_argument("type D rank must be >= 3");

  auto edges = dynkin_edges(spec.family, spec.rank);
  std::set<std::pair<int, int>> edge_set(edges.begin(), edges.end());
  std::set<std::pair<int, int>> oriented;

  for (auto [a, b] : spec.arrows) {
    if (a < 1 || a > spec.rank || b < 1 || b > spec.rank)
      throw std::invalid_argument("arrow endpoint out of range: " + std::to_string(a) + ">" +
                                  std::to_string(b));
    auto key = std::minmax(a, b);
    if (!edge_set.count(key))
      throw std::invalid_argument("arrow " + std::to_string(a) + ">" + std::to_string(b) +
                                  " is not an edge of the Dynkin graph");
    if (!oriented.insert(key).second)
      throw std::invalid_argument("edge {" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + "} oriented twice");
  }
  if (oriented.size() != edge_set.size())
    throw std::invalid_argument("every Dynkin edge needs exactly one orientation");

  Quiver q;
  q.family = spec.family;
  q.rank = spec.rank;
  q.arrows = spec.arrows;
  std::sort(q.arrows.begin(), q.arrows.end());

  q.cartan.assign(q.rank, std::vector<int>(q.rank, 0));
  for (int i = 0; i < q.rank; ++i) q.cartan[i][i] = 2;
  for (auto [a, b] : edges) {
    q.cartan[a - 1][b - 1] = -1;
    q.cartan[b - 1][a - 1] = -1;
  }
  return q;
}

/// A_n with the standard orientation n -> n-1 -> ... -> 1.
inline Quiver standard_quiver(int rank) {
  QuiverSpec spec;
  spec.family = Family::A;
  spec.rank = rank;
  for (int i = rank; i >= 2; --i) spec.arrows.emplace_back(i, i - 1);
  return build_quiver(spec);
}

inline bool is_standard_type_a(const Quiver& q) {
  if (q.family != Family::A) return false;
  for (auto [a, b] : q.arrows)
    if (a != b + 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// dimension-vector arithmetic

inline DimVector unit_vector(int rank, int vertex) {
  DimVector e(rank, 0);
  e[vertex - 1] = 1;
  return e;
}

inline DimVector add(const DimVector& v, const DimVector& w) {
  DimVector r(v);
  for (size_t i = 0; i < r.size(); ++i) r[i] += w[i];
  return r;
}

inline DimVector sub(const DimVector& v, const DimVector& w) {
  DimVector r(v);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= w[i];
  return r;
}

inline bool is_nonnegative(const DimVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

inline bool is_zero(const DimVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

inline void check_rank(const Quiver& q, const DimVector& v) {
  if (static_cast<int>(v.size()) != q.rank)
    throw std::invalid_argument("dimension vector length does not match quiver rank");
}

// ---------------------------------------------------------------------------
// bilinear forms and reflections

/// Euler form <v,w> = sum_i v_i w_i - sum_{a->b} v_a w_b.
inline int euler_form(const Quiver& q, const DimVector& v, const DimVector& w) {
  check_rank(q, v);
  check_rank(q, w);
  int s = 0;
  for (int i = 0; i < q.rank; ++i) s += v[i] * w[i];
  for (auto [a, b] : q.arrows) s -= v[a - 1] * w[b - 1];
  return s;
}

/// Symmetrized Euler form (v,w) = t(v) C w = <v,w> + <w,v>.
inline int sym_euler(const Quiver& q, const DimVector& v, const DimVector& w) {
  check_rank(q, v);
  check_rank(q, w);
  int s = 0;
  for (int i = 0; i < q.rank; ++i)
    for (int j = 0; j < q.rank; ++j) s += v[i] * q.cartan[i][j] * w[j];
  return s;
}

/// Simple reflection r_i(v) = v - (v, e_i) e_i.
inline DimVector reflect(const Quiver& q, int vertex, const DimVector& v) {
  if (vertex < 1 || vertex > q.rank) throw std::invalid_argument("unknown vertex");
  check_rank(q, v);
  int pairing = 0;
  for (int j = 0; j < q.rank; ++j) pairing += q.cartan[vertex - 1][j] * v[j];
  DimVector r(v);
  r[vertex - 1] -= pairing;
  return r;
}

/// Sequence i_1..i_n where i_1 is a sink of Q, i_2 a sink of s_{i_1}Q, etc.
/// Ties are broken by smallest vertex index.
inline std::vector<int> adapted_order(const Quiver& q) {
  std::vector<int> order;
  std::vector<std::pair<int, int>> arrows = q.arrows;
  std::vector<bool> done(q.rank + 1, false);
  for (int step = 0; step < q.rank; ++step) {
    int pick = -1;
    for (int v = 1; v <= q.rank; ++v) {
      if (done[v]) continue;
      bool sink = true;
      for (auto [a, b] : arrows)
        if (a == v && !done[b]) sink = false;
      if (sink) {
        pick = v;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("acyclic quiver has no sink");
    order.push_back(pick);
    done[pick] = true;
    for (auto& [a, b] : arrows)
      if (b == pick) std::swap(a, b);
  }
  return order;
}

/// All positive roots, as the reflection closure of the simple roots.
/// Returned sorted lexicographically.
inline std::vector<DimVector> positive_roots(const Quiver& q) {
  std::set<DimVector> seen;
  std::vector<DimVector> queue;
  for (int i = 1; i <= q.rank; ++i) {
    auto e = unit_vector(q.rank, i);
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    DimVector v = queue.back();
    queue.pop_back();
    for (int i = 1; i <= q.rank; ++i) {
      DimVector w = reflect(q, i, v);
      if (is_nonnegative(w) && !is_zero(w) && seen.insert(w).second) queue.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// serialization

inline nlohmann::json quiver_to_json(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (auto [a, b] : q.arrows) arrows.push_back({a, b});
  return {{"family", family_name(q.family)}, {"rank", q.rank}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const nlohmann::json& j) {
  QuiverSpec spec;
  std::string fam = j.at("family").get<std::string>();
  if (fam == "A")
    spec.family = Family::A;
  else if (fam == "D")
    spec.family = Family::D;
  else
    throw std::invalid_argument("unknown family: " + fam);
  spec.rank = j.at("rank").get<int>();
  for (const auto& a : j.at("arrows"))
    spec.arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
  return build_quiver(spec);
}

inline std::string dim_digits(const DimVector& v) {
  std::string s;
  for (int x : v) s += std::to_string(x);
  return s;
}

}  // namespace arcrystal

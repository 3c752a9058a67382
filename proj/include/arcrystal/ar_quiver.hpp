// The Auslander-Reiten quiver of a Dynkin quiver: indecomposables via
// Gabriel's bijection with positive roots, the translation tau computed as a
// product of simple reflections along an adapted order, irreducible-map
// arrows knitted inside ZQ*, and the full Hom table obtained from the
// knitting recurrence
//
//   hom(P(i), N)      = (dim N)_i
//   hom(tau^-1 X, N)  = hom(E, N) - hom(X, N) + [X = N]
//
// where E is the sum of the middle terms of the almost split sequence
// starting at X. Ext^1 comes from the AR formula ext(M,N) = hom(N, tau M).
//
// Modules are identified by their dimension vectors and stored sorted
// lexicographically; that order is the canonical one used everywhere.

#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "quiver.hpp"

namespace arcrystal {

struct Indec {
  DimVector dim;
  bool projective = false;
  bool injective = false;
  int vertex = 0;  // the module is tau^{-shift} P(vertex)
  int shift = 0;
};

struct ARQuiver {
  Quiver q;
  std::vector<int> order;                   // adapted vertex order i_1..i_n
  std::vector<Indec> modules;               // sorted lexicographically by dim
  std::vector<std::pair<int, int>> arrows;  // irreducible maps, module indices
  std::vector<int> tau;                     // module index or -1 (projectives)
  std::vector<int> tau_inv;                 // module index or -1 (injectives)
  std::vector<std::vector<int>> hom;        // hom[m][n] = dim Hom(M_m, M_n)
  std::vector<int> proj;                    // proj[v-1] = index of P(v)
  std::vector<int> inj;                     // inj[v-1] = index of I(v)
  std::vector<std::vector<int>> columns;    // columns[v-1] = tau^{-1}-orbit of P(v)
  std::vector<int> nakayama_map;            // nakayama_map[v-1] = injective paired with P(v)

  int rank() const { return q.rank; }
  int size() const { return static_cast<int>(modules.size()); }

  int index_of(const DimVector& d) const {
    auto it = std::lower_bound(modules.begin(), modules.end(), d,
                               [](const Indec& m, const DimVector& v) { return m.dim < v; });
    if (it == modules.end() || it->dim != d) return -1;
    return static_cast<int>(it - modules.begin());
  }
  int require_index(const DimVector& d) const {
    int i = index_of(d);
    if (i < 0) throw std::invalid_argument("dimension vector " + dim_digits(d) + " is not a root");
    return i;
  }

  const std::vector<int>& out_arrows(int m) const { return out_[m]; }
  const std::vector<int>& in_arrows(int m) const { return in_[m]; }

  std::vector<std::vector<int>> out_, in_;  // filled by build_ar_quiver
};

/// dim P(i): indicator of vertices reachable from i along the arrows.
inline DimVector projective_dim(const Quiver& q, int i) {
  DimVector d(q.rank, 0);
  std::vector<int> stack{i};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (d[v - 1]) continue;
    d[v - 1] = 1;
    for (int w : q.arrows_out(v)) stack.push_back(w);
  }
  return d;
}

/// dim I(i): indicator of vertices from which i is reachable.
inline DimVector injective_dim(const Quiver& q, int i) {
  DimVector d(q.rank, 0);
  std::vector<int> stack{i};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (d[v - 1]) continue;
    d[v - 1] = 1;
    for (int w : q.arrows_in(v)) stack.push_back(w);
  }
  return d;
}

/// dim(tau M) = r_{i_n} ... r_{i_1}(dim M); apply r_{i_1} first.
inline DimVector tau_dim(const Quiver& q, const std::vector<int>& order, DimVector v) {
  for (int i : order) v = reflect(q, i, v);
  return v;
}

inline DimVector tau_inv_dim(const Quiver& q, const std::vector<int>& order, DimVector v) {
  for (auto it = order.rbegin(); it != order.rend(); ++it) v = reflect(q, *it, v);
  return v;
}

inline ARQuiver build_ar_quiver(const Quiver& q);

/// One representative per isomorphism class of indecomposables, with
/// projectivity and orbit coordinates filled in. Gabriel: one per root.
inline std::vector<Indec> indecomposables(const Quiver& q) { return build_ar_quiver(q).modules; }

inline ARQuiver build_ar_quiver(const Quiver& q) {
  ARQuiver ar;
  ar.q = q;
  ar.order = adapted_order(q);

  for (const DimVector& r : positive_roots(q)) {
    Indec m;
    m.dim = r;
    ar.modules.push_back(std::move(m));
  }
  const int n = ar.size();

  ar.proj.resize(q.rank);
  ar.inj.resize(q.rank);
  for (int v = 1; v <= q.rank; ++v) {
    ar.proj[v - 1] = ar.require_index(projective_dim(q, v));
    ar.inj[v - 1] = ar.require_index(injective_dim(q, v));
    ar.modules[ar.proj[v - 1]].projective = true;
    ar.modules[ar.inj[v - 1]].injective = true;
  }

  // tau^{-1}-orbits: every indecomposable lies on the orbit of exactly one
  // projective, which fixes its (vertex, shift) coordinate.
  ar.tau.assign(n, -1);
  ar.tau_inv.assign(n, -1);
  ar.columns.resize(q.rank);
  std::vector<bool> placed(n, false);
  for (int v = 1; v <= q.rank; ++v) {
    int m = ar.proj[v - 1];
    int shift = 0;
    while (true) {
      if (placed[m]) throw std::logic_error("tau orbit revisits a module");
      placed[m] = true;
      ar.modules[m].vertex = v;
      ar.modules[m].shift = shift;
      ar.columns[v - 1].push_back(m);
      if (ar.modules[m].injective) break;
      DimVector next = tau_inv_dim(q, ar.order, ar.modules[m].dim);
      int idx = ar.require_index(next);
      ar.tau_inv[m] = idx;
      ar.tau[idx] = m;
      m = idx;
      ++shift;
    }
  }
  for (bool p : placed)
    if (!p) throw std::logic_error("tau orbits do not cover all indecomposables");

  // Irreducible-map arrows, from the ZQ* rule with P(v) placed at (0, v):
  // a Q-arrow a->b contributes (k,a)->(k+1,b) and (k,b)->(k,a).
  auto at = [&](int v, int k) -> int {
    const auto& col = ar.columns[v - 1];
    if (k < 0 || k >= static_cast<int>(col.size())) return -1;
    return col[k];
  };
  for (auto [a, b] : q.arrows) {
    for (int k = 0;; ++k) {
      int src = at(a, k), dst = at(b, k + 1);
      int src2 = at(b, k), dst2 = at(a, k);
      if (src >= 0 && dst >= 0) ar.arrows.emplace_back(src, dst);
      if (src2 >= 0 && dst2 >= 0) ar.arrows.emplace_back(src2, dst2);
      if ((src < 0 || dst < 0) && (src2 < 0 || dst2 < 0)) break;
    }
  }
  std::sort(ar.arrows.begin(), ar.arrows.end());
  ar.arrows.erase(std::unique(ar.arrows.begin(), ar.arrows.end()), ar.arrows.end());
  ar.out_.resize(n);
  ar.in_.resize(n);
  for (auto [s, d] : ar.arrows) {
    ar.out_[s].push_back(d);
    ar.in_[d].push_back(s);
  }

  // Mesh additivity: for non-projective X, dim tau X + dim X = sum of the
  // middle terms, which are the sources of the arrows into X.
  for (int m = 0; m < n; ++m) {
    if (ar.tau[m] < 0) continue;
    DimVector lhs = add(ar.modules[ar.tau[m]].dim, ar.modules[m].dim);
    DimVector rhs(q.rank, 0);
    for (int s : ar.in_[m]) rhs = add(rhs, ar.modules[s].dim);
    if (lhs != rhs) throw std::logic_error("AR mesh additivity failed at " + dim_digits(ar.modules[m].dim));
  }

  // Hom table by knitting. Within a layer, process vertices sinks-first so
  // that the middle terms of a mesh are always available.
  std::vector<int> vorder;
  {
    std::vector<bool> used(q.rank + 1, false);
    for (int step = 0; step < q.rank; ++step) {
      for (int v = 1; v <= q.rank; ++v) {
        if (used[v]) continue;
        bool ready = true;
        for (int w : q.arrows_out(v))
          if (!used[w]) ready = false;
        if (ready) {
          vorder.push_back(v);
          used[v] = true;
          break;
        }
      }
    }
  }
  int max_shift = 0;
  for (const auto& col : ar.columns) max_shift = std::max(max_shift, static_cast<int>(col.size()));

  ar.hom.assign(n, std::vector<int>(n, 0));
  for (int target = 0; target < n; ++target) {
    const DimVector& tdim = ar.modules[target].dim;
    for (int k = 0; k < max_shift; ++k) {
      for (int v : vorder) {
        int m = at(v, k);
        if (m < 0) continue;
        int value;
        if (k == 0) {
          value = tdim[v - 1];  // hom(P(v), N) = dim N_v
        } else {
          int x = at(v, k - 1);
          value = (x == target) ? 1 : 0;
          for (int e : ar.out_[x]) value += ar.hom[e][target];
          value -= ar.hom[x][target];
        }
        if (value < 0) throw std::logic_error("negative hom dimension from knitting");
        ar.hom[m][target] = value;
      }
    }
  }
  for (int m = 0; m < n; ++m)
    if (ar.hom[m][m] != 1) throw std::logic_error("endomorphism ring not one-dimensional");

  // Nakayama pairing. In type A the projective cover and injective envelope
  // of S(v) correspond; in type D walk the tau^{-1}-orbit of P(v) to its end.
  ar.nakayama_map.resize(q.rank);
  for (int v = 1; v <= q.rank; ++v)
    ar.nakayama_map[v - 1] = (q.family == Family::A) ? ar.inj[v - 1] : ar.columns[v - 1].back();

  return ar;
}

inline int hom_dim(const ARQuiver& ar, int m, int n) {
  if (m < 0 || n < 0 || m >= ar.size() || n >= ar.size())
    throw std::invalid_argument("module index out of range");
  return ar.hom[m][n];
}

inline int ext_dim(const ARQuiver& ar, int m, int n) {
  if (m < 0 || n < 0 || m >= ar.size() || n >= ar.size())
    throw std::invalid_argument("module index out of range");
  if (ar.modules[m].projective) return 0;
  return ar.hom[n][ar.tau[m]];
}

/// Standard duality: the same dimension vector read over the opposite quiver.
inline int dualize(const ARQuiver& src, const ARQuiver& dst, int m) {
  if (!(src.q.reversed() == dst.q))
    throw std::invalid_argument("dualize needs the opposite quiver");
  return dst.require_index(src.modules[m].dim);
}

// ---------------------------------------------------------------------------
// exports

inline std::string gamma_to_dot(const ARQuiver& ar) {
  std::ostringstream os;
  os << "digraph gamma {\n  rankdir=LR;\n";
  for (const Indec& m : ar.modules) os << "  \"" << dim_digits(m.dim) << "\";\n";
  for (auto [s, d] : ar.arrows)
    os << "  \"" << dim_digits(ar.modules[s].dim) << "\" -> \"" << dim_digits(ar.modules[d].dim)
       << "\";\n";
  for (int m = 0; m < ar.size(); ++m)
    if (ar.tau[m] >= 0)
      os << "  \"" << dim_digits(ar.modules[m].dim) << "\" -> \""
         << dim_digits(ar.modules[ar.tau[m]].dim) << "\" [style=dashed, label=\"tau\"];\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::json gamma_to_json(const ARQuiver& ar) {
  nlohmann::json mods = nlohmann::json::array();
  for (const Indec& m : ar.modules)
    mods.push_back({{"dim", m.dim},
                    {"projective", m.projective},
                    {"injective", m.injective},
                    {"vertex", m.vertex},
                    {"shift", m.shift}});
  nlohmann::json arrows = nlohmann::json::array();
  for (auto [s, d] : ar.arrows) arrows.push_back({s, d});
  nlohmann::json tau = nlohmann::json::array();
  for (int t : ar.tau) tau.push_back(t);
  return {{"quiver", quiver_to_json(ar.q)}, {"modules", mods}, {"arrows", arrows}, {"tau", tau}};
}

/// Rebuild from the embedded quiver and insist the stored graph data agrees.
inline ARQuiver gamma_from_json(const nlohmann::json& j) {
  ARQuiver ar = build_ar_quiver(quiver_from_json(j.at("quiver")));
  if (gamma_to_json(ar) != j) throw std::invalid_argument("AR-quiver data is inconsistent");
  return ar;
}

}  // namespace arcrystal

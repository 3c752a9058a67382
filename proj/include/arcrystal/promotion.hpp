// Promotion on rectangular highest-weight crystals over the type A quiver
// with the standard orientation. An element of B(m w_j) is stored as its
// extended array over the A_{n+1} quiver: off-diagonal entries are the
// multiplicities shifted one step, the diagonal holds k_r = m - hom(S(r), M).
// The operator sh_j removes one copy of M(j, n+1); T_i moves one unit from
// W_N = M(i, s0) to E_N = M(i+1, s0), where s0 is the largest maximizer of
// F_i-check over the chain, or removes W_N outright when s0 = i. Promotion
// applies (T_1 ... T_{j-1} sh_j) as many times as the original count of
// M(j, n+1) and reads the result back off the original strip. The affine
// operators are f_0 = pr^n f_1 pr and e_0 = pr^n e_1 pr.

#pragma once

#include "crystal.hpp"

namespace arcrystal {

struct ExtArray {
  int n = 1, j = 1, m = 1;
  // rows 1..j, row r holding entries s = r .. n+1-j+r (width n+2-j)
  std::vector<std::vector<int>> mu;

  int width() const { return n + 2 - j; }
  bool in_strip(int r, int s) const {
    return r >= 1 && r <= j && s >= r && s <= n + 1 - j + r;
  }
  int at(int r, int s) const { return in_strip(r, s) ? mu[r - 1][s - r] : 0; }
  int& ref(int r, int s) {
    if (!in_strip(r, s)) throw std::out_of_range("extended-array entry outside the strip");
    return mu[r - 1][s - r];
  }
  bool operator==(const ExtArray& o) const {
    return n == o.n && j == o.j && m == o.m && mu == o.mu;
  }
};

inline nlohmann::json ext_array_to_json(const ExtArray& a) {
  return {{"n", a.n}, {"j", a.j}, {"m", a.m}, {"mu", a.mu}};
}

inline ExtArray ext_array_from_json(const nlohmann::json& jj) {
  ExtArray a;
  a.n = jj.at("n").get<int>();
  a.j = jj.at("j").get<int>();
  a.m = jj.at("m").get<int>();
  a.mu = jj.at("mu").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(a.mu.size()) != a.j) throw std::invalid_argument("wrong row count");
  for (const auto& row : a.mu)
    if (static_cast<int>(row.size()) != a.width()) throw std::invalid_argument("wrong row width");
  return a;
}

/// Base model A_n and extended model A_{n+1}, both standard orientation.
class PromotionContext {
 public:
  explicit PromotionContext(int n)
      : base_(standard_quiver(n)), ext_(standard_quiver(n + 1)), n_(n) {}

  int n() const { return n_; }
  const CrystalModel& base() const { return base_; }
  const CrystalModel& ext() const { return ext_; }

  int base_interval(int r, int s) const {
    DimVector d(n_, 0);
    for (int v = r; v <= s; ++v) d[v - 1] = 1;
    return base_.ar().require_index(d);
  }
  int ext_interval(int r, int s) const {
    DimVector d(n_ + 1, 0);
    for (int v = r; v <= s; ++v) d[v - 1] = 1;
    return ext_.ar().require_index(d);
  }

 private:
  CrystalModel base_, ext_;
  int n_;
};

// ---------------------------------------------------------------------------
// conversions

inline ExtArray to_ext_array(const PromotionContext& ctx, const ModClass& m, int mcols, int j) {
  const int n = ctx.n();
  if (j < 1 || j > n || mcols < 1) throw std::invalid_argument("bad rectangle parameters");
  ExtArray a;
  a.n = n;
  a.j = j;
  a.m = mcols;
  a.mu.assign(j, std::vector<int>(a.width(), 0));

  const ARQuiver& ar = ctx.base().ar();
  std::vector<int> socle_count(j + 1, 0);
  for (auto [idx, k] : m.mult) {
    const DimVector& d = ar.modules[idx].dim;
    int r = 0, s = 0;
    for (int v = 1; v <= n; ++v)
      if (d[v - 1]) {
        if (!r) r = v;
        s = v;
      }
    if (r > j || s > n - j + r)
      throw std::invalid_argument("module support leaves the rectangular strip");
    a.ref(r, s + 1) += k;
    socle_count[r] += k;
  }
  for (int r = 1; r <= j; ++r) {
    int k_r = mcols - socle_count[r];
    if (k_r < 0) throw std::invalid_argument("negative diagonal entry: not in B(m w_j)");
    a.ref(r, r) = k_r;
  }
  return a;
}

/// Inverse of to_ext_array: drop the diagonal and shift back.
inline ModClass from_ext_array(const PromotionContext& ctx, const ExtArray& a) {
  ModClass m;
  for (int r = 1; r <= a.j; ++r)
    for (int s = r + 1; s <= a.n + 1 - a.j + r; ++s)
      if (a.at(r, s)) m.add(ctx.base_interval(r, s - 1), a.at(r, s));
  return m;
}

inline ModClass ext_modclass(const PromotionContext& ctx, const ExtArray& a) {
  ModClass m;
  for (int r = 1; r <= a.j; ++r)
    for (int s = r; s <= a.n + 1 - a.j + r; ++s)
      if (a.at(r, s)) m.add(ctx.ext_interval(r, s), a.at(r, s));
  return m;
}

// ---------------------------------------------------------------------------
// the operators

/// Remove one copy of M(j, n+1) when present.
inline ExtArray apply_sh(int j, const ExtArray& a) {
  if (j != a.j) throw std::invalid_argument("sh index must match the array");
  ExtArray out = a;
  if (out.at(j, a.n + 1) > 0) --out.ref(j, a.n + 1);
  return out;
}

/// Move one unit from W_N to E_N (or just remove W_N when E_N is absent);
/// identity when W_N is not a summand. `pure_removal` reports the s0 = i
/// case for auditing.
inline ExtArray apply_T(const PromotionContext& ctx, int i, const ExtArray& a,
                        bool* pure_removal = nullptr) {
  if (i < 1 || i >= a.j) throw std::invalid_argument("T_i needs 1 <= i < j");
  WnEn sel = select_wn_en(ctx.ext(), ext_modclass(ctx, a), i);
  if (pure_removal) *pure_removal = false;
  if (a.at(i, sel.s0) == 0) return a;  // W_N is not a summand
  ExtArray out = a;
  --out.ref(i, sel.s0);
  if (sel.e) {
    ++out.ref(i + 1, sel.s0);
  } else if (pure_removal) {
    *pure_removal = true;
  }
  return out;
}

struct PrTrace {
  ExtArray initial;
  std::vector<ExtArray> steps;  // after each individual sh / T application
  int pure_removals = 0;
};

/// Promotion. The number of passes is the count of M(j, n+1) in the
/// extended array of M, fixed up front.
inline ModClass promote(const PromotionContext& ctx, const ModClass& m, int mcols, int j,
                        PrTrace* trace = nullptr) {
  require_member(ctx.base(), m, [&] {
    DimVector l(ctx.n(), 0);
    l[j - 1] = mcols;
    return l;
  }());
  ExtArray a = to_ext_array(ctx, m, mcols, j);
  if (trace) trace->initial = a;
  const int passes = a.at(j, ctx.n() + 1);
  for (int p = 0; p < passes; ++p) {
    a = apply_sh(j, a);
    if (trace) trace->steps.push_back(a);
    for (int i = j - 1; i >= 1; --i) {
      bool pure = false;
      a = apply_T(ctx, i, a, &pure);
      if (trace) {
        trace->steps.push_back(a);
        if (pure) ++trace->pure_removals;
      }
    }
  }
  // Read the result off the original strip, diagonal included.
  ModClass out;
  for (int r = 1; r <= j; ++r)
    for (int s = r; s <= ctx.n() - j + r; ++s)
      if (a.at(r, s)) out.add(ctx.base_interval(r, s), a.at(r, s));
  return out;
}

inline ModClass promote_pow(const PromotionContext& ctx, ModClass m, int mcols, int j, int times) {
  for (int k = 0; k < times; ++k) m = promote(ctx, m, mcols, j);
  return m;
}

// ---------------------------------------------------------------------------
// affine operators and the Kirillov-Reshetikhin graph

inline DimVector rect_weight(int n, int j, int mcols) {
  DimVector l(n, 0);
  l[j - 1] = mcols;
  return l;
}

inline std::optional<ModClass> affine_f0(const PromotionContext& ctx, const ModClass& m, int mcols,
                                         int j) {
  DimVector lambda = rect_weight(ctx.n(), j, mcols);
  ModClass p = promote(ctx, m, mcols, j);
  auto f = apply_f_lambda(ctx.base(), p, 1, lambda);
  if (!f) return std::nullopt;
  return promote_pow(ctx, *f, mcols, j, ctx.n());
}

inline std::optional<ModClass> affine_e0(const PromotionContext& ctx, const ModClass& m, int mcols,
                                         int j) {
  DimVector lambda = rect_weight(ctx.n(), j, mcols);
  ModClass p = promote(ctx, m, mcols, j);
  auto e = apply_e_lambda(ctx.base(), p, 1, lambda);
  if (!e) return std::nullopt;
  return promote_pow(ctx, *e, mcols, j, ctx.n());
}

/// The classical crystal of B(m w_j) with 0-colored edges adjoined.
inline CrystalGraph kr_graph(const PromotionContext& ctx, int mcols, int j,
                             const GenOptions& opts = {}) {
  DimVector lambda = rect_weight(ctx.n(), j, mcols);
  CrystalGraph g = generate_crystal(ctx.base(), lambda, opts);
  g.affine = true;
  std::map<std::string, int> ids;
  for (int b = 0; b < g.size(); ++b) ids[g.labels[b]] = b;
  for (int b = 0; b < g.size(); ++b) {
    auto f0 = affine_f0(ctx, g.mults[b], mcols, j);
    if (!f0) continue;
    auto it = ids.find(mod_label(ctx.base().ar(), *f0));
    if (it == ids.end()) throw std::logic_error("affine lowering left the crystal");
    g.add_edge(b, 0, it->second);
  }
  return g;
}

/// Connectivity of the KR graph viewed undirected, all colors included.
inline bool kr_connected(const CrystalGraph& g) {
  if (g.size() == 0) return true;
  std::vector<char> seen(g.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (auto [s, c, d] : g.edges) {
      if (s == a && !seen[d]) { seen[d] = 1; stack.push_back(d); }
      if (d == a && !seen[s]) { seen[s] = 1; stack.push_back(s); }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace arcrystal

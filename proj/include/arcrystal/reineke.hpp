// The combinatorial layer on top of the AR quiver: the posets P_i and
// P_i-check of indecomposables mapping onto / receiving the simple S(i), the
// sets S_i and S_i-check of antichain modules, the statistics F_i and
// F_i-check, the selectors (V_M, U_M) driving the lowering operator, the
// string statistic eps_i^*, and the (W_N, E_N) pair used by promotion on a
// linearly ordered P_i-check.
//
// ModClass is an isomorphism class of modules: a multiplicity map keyed by
// the module index inside a fixed ARQuiver. CrystalModel bundles the AR data
// with lazily built poset/antichain tables (one per (vertex, variant),
// synchronized, shared read-only afterwards).

#pragma once

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>

#include "ar_quiver.hpp"

namespace arcrystal {

struct ModClass {
  std::map<int, int> mult;  // module index -> multiplicity >= 1

  int count(int idx) const {
    auto it = mult.find(idx);
    return it == mult.end() ? 0 : it->second;
  }
  void add(int idx, int k = 1) {
    if (k == 0) return;
    int& m = mult[idx];
    m += k;
    if (m == 0) mult.erase(idx);
    if (m < 0) throw std::logic_error("negative multiplicity in module class");
  }
  /// Remove one copy of every summand of `other`; they must all be present.
  void subtract(const ModClass& other) {
    for (auto [idx, k] : other.mult) add(idx, -k);
  }
  bool contains(const ModClass& other) const {
    for (auto [idx, k] : other.mult)
      if (count(idx) < k) return false;
    return true;
  }
  bool empty() const { return mult.empty(); }
  bool operator==(const ModClass& o) const { return mult == o.mult; }
  bool operator<(const ModClass& o) const { return mult < o.mult; }
};

inline DimVector dim_of(const ARQuiver& ar, const ModClass& m) {
  DimVector d(ar.rank(), 0);
  for (auto [idx, k] : m.mult)
    for (int i = 0; i < ar.rank(); ++i) d[i] += k * ar.modules[idx].dim[i];
  return d;
}

inline std::string mod_label(const ARQuiver& ar, const ModClass& m) {
  if (m.empty()) return "0";
  std::string s;
  for (auto [idx, k] : m.mult) {
    if (!s.empty()) s += "+";
    s += dim_digits(ar.modules[idx].dim);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

inline nlohmann::json modclass_to_json(const ARQuiver& ar, const ModClass& m) {
  nlohmann::json mult = nlohmann::json::array();
  for (auto [idx, k] : m.mult) mult.push_back({{"root", ar.modules[idx].dim}, {"m", k}});
  return {{"quiver", quiver_to_json(ar.q)}, {"mult", mult}};
}

inline ModClass modclass_from_json(const ARQuiver& ar, const nlohmann::json& j) {
  ModClass m;
  for (const auto& e : j.at("mult")) {
    int k = e.at("m").get<int>();
    if (k <= 0) throw std::invalid_argument("multiplicities must be positive");
    m.add(ar.require_index(e.at("root").get<DimVector>()), k);
  }
  return m;
}

enum class Variant { Plain, Check };

/// An antichain in P_i (or P_i-check), listed as sorted module indices; the
/// module it denotes is the direct sum of its elements.
struct AntichainModule {
  std::vector<int> summands;
  bool operator==(const AntichainModule& o) const { return summands == o.summands; }
};

struct PosetData {
  int vertex = 0;
  Variant variant = Variant::Plain;
  std::vector<int> elems;  // module indices, ascending
  // leq[a][b] over positions: hom(elem a, elem b) != 0
  std::vector<std::vector<char>> leq;
  std::vector<AntichainModule> antichains;  // all nonempty antichains
  std::vector<std::vector<char>> ac_leq;    // the relation between antichains
  // For each antichain V, the positions of the poset elements B summed over
  // in the F statistic: B related-to V (plain: B below V, check: B above V).
  std::vector<std::vector<int>> related;

  int position_of(int module_index) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), module_index);
    if (it == elems.end() || *it != module_index) return -1;
    return static_cast<int>(it - elems.begin());
  }
  int find_antichain(const AntichainModule& v) const {
    for (size_t i = 0; i < antichains.size(); ++i)
      if (antichains[i] == v) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

inline std::unique_ptr<PosetData> build_poset(const ARQuiver& ar, int vertex, Variant variant) {
  auto pd = std::make_unique<PosetData>();
  pd->vertex = vertex;
  pd->variant = variant;
  const int simple = ar.require_index(unit_vector(ar.rank(), vertex));
  for (int m = 0; m < ar.size(); ++m) {
    bool member = variant == Variant::Plain ? ar.hom[m][simple] != 0 : ar.hom[simple][m] != 0;
    if (member) pd->elems.push_back(m);
  }
  const int p = static_cast<int>(pd->elems.size());
  pd->leq.assign(p, std::vector<char>(p, 0));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) pd->leq[a][b] = ar.hom[pd->elems[a]][pd->elems[b]] != 0;

  // Enumerate antichains by increasing position, keeping only mutually
  // incomparable sets. Posets here are tiny, so this is exhaustive search.
  std::vector<int> current;
  std::function<void(int)> rec = [&](int from) {
    if (!current.empty()) {
      AntichainModule a;
      a.summands.reserve(current.size());
      for (int pos : current) a.summands.push_back(pd->elems[pos]);
      pd->antichains.push_back(std::move(a));
    }
    for (int next = from; next < p; ++next) {
      bool ok = true;
      for (int pos : current)
        if (pd->leq[pos][next] || pd->leq[next][pos]) ok = false;
      if (!ok) continue;
      current.push_back(next);
      rec(next + 1);
      current.pop_back();
    }
  };
  rec(0);

  const int ac = static_cast<int>(pd->antichains.size());
  auto positions = [&](const AntichainModule& v) {
    std::vector<int> r;
    for (int idx : v.summands) r.push_back(pd->position_of(idx));
    return r;
  };
  // V <= V' iff every summand B of V has hom(B, V') != 0       (plain)
  // V <=' V' iff every summand B of V' has hom(V, B) != 0      (check)
  pd->ac_leq.assign(ac, std::vector<char>(ac, 0));
  for (int x = 0; x < ac; ++x) {
    auto px = positions(pd->antichains[x]);
    for (int y = 0; y < ac; ++y) {
      auto py = positions(pd->antichains[y]);
      bool le = true;
      if (variant == Variant::Plain) {
        for (int b : px) {
          bool hit = false;
          for (int c : py) hit = hit || pd->leq[b][c];
          le = le && hit;
        }
      } else {
        for (int c : py) {
          bool hit = false;
          for (int b : px) hit = hit || pd->leq[b][c];
          le = le && hit;
        }
      }
      pd->ac_leq[x][y] = le;
    }
  }
  pd->related.resize(ac);
  for (int x = 0; x < ac; ++x) {
    auto px = positions(pd->antichains[x]);
    for (int b = 0; b < p; ++b) {
      bool rel = false;
      if (variant == Variant::Plain) {
        for (int c : px) rel = rel || pd->leq[b][c];  // B below V
      } else {
        for (int c : px) rel = rel || pd->leq[c][b];  // V above-related: V <=' B
      }
      if (rel) pd->related[x].push_back(b);
    }
  }
  return pd;
}

}  // namespace detail

/// AR data plus lazily built Reineke tables for one quiver.
class CrystalModel {
 public:
  explicit CrystalModel(const Quiver& q) : ar_(build_ar_quiver(q)) { init(); }
  explicit CrystalModel(ARQuiver ar) : ar_(std::move(ar)) { init(); }

  const ARQuiver& ar() const { return ar_; }
  const Quiver& quiver() const { return ar_.q; }
  int rank() const { return ar_.rank(); }

  const PosetData& poset(int vertex, Variant variant) const {
    if (vertex < 1 || vertex > rank()) throw std::invalid_argument("unknown vertex");
    auto& slot = (variant == Variant::Plain ? plain_ : check_)[vertex - 1];
    std::lock_guard<std::mutex> lock(mutex_);
    if (!slot) slot = detail::build_poset(ar_, vertex, variant);
    return *slot;
  }

  int simple(int vertex) const { return simple_[vertex - 1]; }

  bool is_cospecial() const { return cospecial_; }
  bool is_special() const { return special_; }

 private:
  void init() {
    plain_.resize(rank());
    check_.resize(rank());
    for (int v = 1; v <= rank(); ++v)
      simple_.push_back(ar_.require_index(unit_vector(rank(), v)));
    // Q is cospecial iff hom(S(v), M) <= 1 throughout; special iff Q* is
    // cospecial, which by duality reads hom(M, S(v)) <= 1 throughout.
    special_ = cospecial_ = true;
    for (int v = 0; v < rank(); ++v)
      for (int m = 0; m < ar_.size(); ++m) {
        cospecial_ = cospecial_ && ar_.hom[simple_[v]][m] <= 1;
        special_ = special_ && ar_.hom[m][simple_[v]] <= 1;
      }
  }

  ARQuiver ar_;
  std::vector<int> simple_;
  bool special_ = false, cospecial_ = false;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<PosetData>> plain_, check_;
};

inline const PosetData& poset(const CrystalModel& model, int vertex, Variant variant) {
  return model.poset(vertex, variant);
}

inline const std::vector<AntichainModule>& antichain_modules(const CrystalModel& model, int vertex,
                                                             Variant variant) {
  return model.poset(vertex, variant).antichains;
}

inline void require_special(const CrystalModel& model) {
  if (!model.is_special()) throw std::invalid_argument("quiver is not special");
}

inline void require_special_cospecial(const CrystalModel& model) {
  if (!model.is_special() || !model.is_cospecial())
    throw std::invalid_argument("quiver is not special and cospecial");
}

// ---------------------------------------------------------------------------
// F statistics

/// F_i(M, V) = sum over B in P_i with B below V of mu_B(M) - mu_{tau B}(M).
inline int f_stat(const CrystalModel& model, const ModClass& m, const AntichainModule& v, int i) {
  const PosetData& pd = model.poset(i, Variant::Plain);
  const ARQuiver& ar = model.ar();
  int s = 0;
  for (int idx : pd.elems) {
    bool below = false;
    for (int c : v.summands) below = below || ar.hom[idx][c] != 0;
    if (!below) continue;
    s += m.count(idx);
    if (ar.tau[idx] >= 0) s -= m.count(ar.tau[idx]);
  }
  return s;
}

/// F_i-check(M, V) = sum over B in P_i-check with V below-check B of
/// mu_B(M) - mu_{tau^{-1} B}(M).
inline int f_stat_check(const CrystalModel& model, const ModClass& m, const AntichainModule& v,
                        int i) {
  const PosetData& pd = model.poset(i, Variant::Check);
  const ARQuiver& ar = model.ar();
  int s = 0;
  for (int idx : pd.elems) {
    bool above = false;
    for (int c : v.summands) above = above || ar.hom[c][idx] != 0;
    if (!above) continue;
    s += m.count(idx);
    if (ar.tau_inv[idx] >= 0) s -= m.count(ar.tau_inv[idx]);
  }
  return s;
}

namespace detail {

inline int f_stat_at(const CrystalModel& model, const PosetData& pd, const ModClass& m, int ac) {
  const ARQuiver& ar = model.ar();
  int s = 0;
  if (pd.variant == Variant::Plain) {
    for (int pos : pd.related[ac]) {
      int idx = pd.elems[pos];
      s += m.count(idx);
      if (ar.tau[idx] >= 0) s -= m.count(ar.tau[idx]);
    }
  } else {
    for (int pos : pd.related[ac]) {
      int idx = pd.elems[pos];
      s += m.count(idx);
      if (ar.tau_inv[idx] >= 0) s -= m.count(ar.tau_inv[idx]);
    }
  }
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// selectors

struct VmUm {
  AntichainModule v;  // the antichain module added by the lowering operator
  ModClass u;         // the summand removed
  int f_max = 0;      // F_i(M, V_M) = eps_i(M)
};

/// V_M is the unique maximal element (for the antichain order) among the
/// antichains maximizing F_i(M, -); U_M is the direct sum of tau B over the
/// minimal B in P_i with B not below V_M.
inline VmUm select_vm_um(const CrystalModel& model, const ModClass& m, int i) {
  require_special(model);
  const PosetData& pd = model.poset(i, Variant::Plain);
  const ARQuiver& ar = model.ar();
  const int ac = static_cast<int>(pd.antichains.size());
  if (ac == 0) throw std::logic_error("empty antichain set");

  std::vector<int> values(ac);
  int best = std::numeric_limits<int>::min();
  for (int x = 0; x < ac; ++x) {
    values[x] = detail::f_stat_at(model, pd, m, x);
    best = std::max(best, values[x]);
  }
  std::vector<int> argmax;
  for (int x = 0; x < ac; ++x)
    if (values[x] == best) argmax.push_back(x);

  int chosen = -1;
  for (int x : argmax) {
    bool maximal = true;
    for (int y : argmax)
      if (y != x && pd.ac_leq[x][y]) maximal = false;
    if (maximal) {
      if (chosen >= 0) throw std::logic_error("maximizing antichain is not unique");
      chosen = x;
    }
  }
  if (chosen < 0) throw std::logic_error("no maximal element among maximizers");

  VmUm r;
  r.v = pd.antichains[chosen];
  r.f_max = best;

  // B in P_i with hom(B, V_M) = 0, minimal such; collect tau B.
  const int p = static_cast<int>(pd.elems.size());
  std::vector<int> not_below;
  for (int b = 0; b < p; ++b) {
    bool below = false;
    for (int c : r.v.summands) below = below || ar.hom[pd.elems[b]][c] != 0;
    if (!below) not_below.push_back(b);
  }
  for (int b : not_below) {
    bool minimal = true;
    for (int b2 : not_below)
      if (b2 != b && pd.leq[b2][b]) minimal = false;
    if (!minimal) continue;
    int idx = pd.elems[b];
    if (ar.tau[idx] >= 0) r.u.add(ar.tau[idx]);
  }
  return r;
}

/// eps_i^*(M) = max over V in S_i-check of F_i-check(M, V), clamped at 0.
inline int eps_star(const CrystalModel& model, const ModClass& m, int i) {
  const PosetData& pd = model.poset(i, Variant::Check);
  int best = 0;
  for (size_t x = 0; x < pd.antichains.size(); ++x)
    best = std::max(best, detail::f_stat_at(model, pd, m, static_cast<int>(x)));
  return best;
}

/// The raw maximum, before clamping; used to cross-check that the clamp is
/// never active on actual module classes.
inline int eps_star_unclamped(const CrystalModel& model, const ModClass& m, int i) {
  const PosetData& pd = model.poset(i, Variant::Check);
  int best = std::numeric_limits<int>::min();
  for (size_t x = 0; x < pd.antichains.size(); ++x)
    best = std::max(best, detail::f_stat_at(model, pd, m, static_cast<int>(x)));
  return best;
}

struct WnEn {
  int w = -1;                 // module index of W_N
  std::optional<int> e;       // module index of E_N, when it exists
  int s0 = 0;
  int f_max = 0;
};

/// On a type A quiver with the standard orientation, P_i-check is the chain
/// M(i,i) < M(i,i+1) < ... < M(i,rank); W_N = M(i, s0) for the largest s0
/// attaining the maximum of F_i-check, and E_N = tau^{-1} M(i, s0-1)
/// = M(i+1, s0) when s0 > i. Any other quiver is rejected: the defining
/// recipe needs the chain situation.
inline WnEn select_wn_en(const CrystalModel& model, const ModClass& m, int i) {
  if (!is_standard_type_a(model.quiver()))
    throw std::invalid_argument("W/E selection needs type A with the standard orientation");
  const ARQuiver& ar = model.ar();
  const int n = model.rank();
  auto interval = [&](int r, int s) {
    DimVector d(n, 0);
    for (int k = r; k <= s; ++k) d[k - 1] = 1;
    return ar.require_index(d);
  };
  WnEn r;
  int best = std::numeric_limits<int>::min();
  for (int s = i; s <= n; ++s) {
    AntichainModule v;
    v.summands = {interval(i, s)};
    int f = f_stat_check(model, m, v, i);
    if (f >= best) {  // ties resolved toward larger s
      best = f;
      r.s0 = s;
    }
  }
  r.f_max = best;
  r.w = interval(i, r.s0);
  if (r.s0 > i) r.e = interval(i + 1, r.s0);
  return r;
}

}  // namespace arcrystal

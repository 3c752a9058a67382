// Crystal structure on module classes: the lowering and raising operators,
// the string statistics eps_i and phi_i, weights, the highest-weight
// membership filter eps_i^* <= lambda(h_i), crystal graph generation by
// breadth-first closure, the abstract-crystal axiom checker, tensor
// products (with the one-point crystal T_lambda and its -infinity
// conventions), and color-and-weight-preserving graph isomorphism.

#pragma once

#include <optional>
#include <thread>
#include <tuple>

#include "reineke.hpp"

namespace arcrystal {

// ---------------------------------------------------------------------------
// integers with a bottom element

/// Z together with -infinity, under saturating addition.
struct ExtInt {
  int v = 0;
  bool ninf = false;

  static ExtInt of(int x) { return {x, false}; }
  static ExtInt neg_inf() { return {0, true}; }
  bool finite() const { return !ninf; }

  friend ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.ninf || b.ninf) return neg_inf();
    return of(a.v + b.v);
  }
  friend ExtInt operator+(ExtInt a, int b) { return a + of(b); }
  friend ExtInt operator-(ExtInt a, int b) { return a + of(-b); }
  friend bool operator==(ExtInt a, ExtInt b) {
    return a.ninf == b.ninf && (a.ninf || a.v == b.v);
  }
  friend bool operator<(ExtInt a, ExtInt b) {
    if (a.ninf) return !b.ninf;
    if (b.ninf) return false;
    return a.v < b.v;
  }
  friend bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend bool operator>=(ExtInt a, ExtInt b) { return !(a < b); }
  friend ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }
};

// ---------------------------------------------------------------------------
// statistics on module classes

/// Pairing vector of wt(M) = -sum (dim M)_j alpha_j, i.e. -(C dim M).
inline DimVector weight_inf(const CrystalModel& model, const ModClass& m) {
  DimVector d = dim_of(model.ar(), m);
  DimVector w(model.rank(), 0);
  for (int i = 0; i < model.rank(); ++i)
    for (int j = 0; j < model.rank(); ++j) w[i] -= model.quiver().cartan[i][j] * d[j];
  return w;
}

/// lambda-shifted weight: lambda(h_i) - (C dim M)_i.
inline DimVector weight_lambda(const CrystalModel& model, const ModClass& m,
                               const DimVector& lambda) {
  DimVector w = weight_inf(model, m);
  for (int i = 0; i < model.rank(); ++i) w[i] += lambda[i];
  return w;
}

inline int eps(const CrystalModel& model, const ModClass& m, int i) {
  require_special(model);
  return select_vm_um(model, m, i).f_max;
}

inline int phi_inf(const CrystalModel& model, const ModClass& m, int i) {
  return eps(model, m, i) + weight_inf(model, m)[i - 1];
}

inline int phi_lambda(const CrystalModel& model, const ModClass& m, const DimVector& lambda,
                      int i) {
  return eps(model, m, i) + weight_lambda(model, m, lambda)[i - 1];
}

// ---------------------------------------------------------------------------
// Kashiwara operators on B(infinity)

/// f_i(M) = (M with U_M removed) + V_M.
inline ModClass apply_f(const CrystalModel& model, const ModClass& m, int i) {
  VmUm sel = select_vm_um(model, m, i);
  ModClass u_and_rest = m;
  if (!m.contains(sel.u)) throw std::logic_error("U_M is not a direct summand of M");
  u_and_rest.subtract(sel.u);
  for (int idx : sel.v.summands) u_and_rest.add(idx);
  return u_and_rest;
}

/// e_i(M): the unique N with f_i(N) = M, or nothing when eps_i(M) = 0.
/// Found by searching the finitely many candidates (M - V) + U(V) over
/// antichains V contained in M; U is a function of V alone.
inline std::optional<ModClass> apply_e(const CrystalModel& model, const ModClass& m, int i) {
  if (eps(model, m, i) == 0) return std::nullopt;
  const PosetData& pd = model.poset(i, Variant::Plain);
  const ARQuiver& ar = model.ar();
  for (const AntichainModule& v : pd.antichains) {
    bool inside = true;
    for (int idx : v.summands) inside = inside && m.count(idx) >= 1;
    if (!inside) continue;
    ModClass candidate = m;
    for (int idx : v.summands) candidate.add(idx, -1);
    // U determined by V: tau of the minimal elements of P_i not below V.
    const int p = static_cast<int>(pd.elems.size());
    std::vector<int> not_below;
    for (int b = 0; b < p; ++b) {
      bool below = false;
      for (int c : v.summands) below = below || ar.hom[pd.elems[b]][c] != 0;
      if (!below) not_below.push_back(b);
    }
    for (int b : not_below) {
      bool minimal = true;
      for (int b2 : not_below)
        if (b2 != b && pd.leq[b2][b]) minimal = false;
      if (minimal && ar.tau[pd.elems[b]] >= 0) candidate.add(ar.tau[pd.elems[b]]);
    }
    if (apply_f(model, candidate, i) == m) return candidate;
  }
  throw std::logic_error("raising operator: no preimage found despite eps > 0");
}

// ---------------------------------------------------------------------------
// the highest-weight crystal B(lambda) inside B(infinity)

inline void check_dominant(const CrystalModel& model, const DimVector& lambda) {
  if (static_cast<int>(lambda.size()) != model.rank())
    throw std::invalid_argument("highest weight length does not match rank");
  for (int c : lambda)
    if (c < 0) throw std::invalid_argument("highest weight must be dominant");
}

/// M lies in B(lambda) iff eps_i^*(M) <= lambda(h_i) for every i.
inline bool in_highest_weight_crystal(const CrystalModel& model, const ModClass& m,
                                      const DimVector& lambda) {
  require_special_cospecial(model);
  check_dominant(model, lambda);
  for (int i = 1; i <= model.rank(); ++i)
    if (eps_star(model, m, i) > lambda[i - 1]) return false;
  return true;
}

inline void require_member(const CrystalModel& model, const ModClass& m, const DimVector& lambda) {
  if (!in_highest_weight_crystal(model, m, lambda))
    throw std::invalid_argument("module class is not in the highest-weight crystal");
}

/// f_i on B(lambda): as on B(infinity), but 0 when the image leaves B(lambda).
inline std::optional<ModClass> apply_f_lambda(const CrystalModel& model, const ModClass& m, int i,
                                              const DimVector& lambda) {
  require_member(model, m, lambda);
  ModClass image = apply_f(model, m, i);
  if (!in_highest_weight_crystal(model, image, lambda)) return std::nullopt;
  return image;
}

/// e_i on B(lambda) agrees with e_i on B(infinity).
inline std::optional<ModClass> apply_e_lambda(const CrystalModel& model, const ModClass& m, int i,
                                              const DimVector& lambda) {
  require_member(model, m, lambda);
  return apply_e(model, m, i);
}

// ---------------------------------------------------------------------------
// crystal graphs

struct CrystalGraph {
  int rank = 0;
  bool affine = false;   // edges may carry color 0
  DimVector lambda;      // empty when not applicable
  std::optional<Quiver> quiver;

  std::vector<std::string> labels;
  std::vector<ModClass> mults;  // empty vector when nodes are not module classes
  std::vector<DimVector> wt;
  std::vector<std::vector<ExtInt>> eps_v, phi_v;   // per node, colors 1..rank
  std::vector<std::tuple<int, int, int>> edges;    // (src, color, dst)

  std::map<std::pair<int, int>, int> out_, in_;    // (node, color) -> node

  int size() const { return static_cast<int>(labels.size()); }
  int add_node(std::string label, DimVector w, std::vector<ExtInt> e, std::vector<ExtInt> p) {
    labels.push_back(std::move(label));
    wt.push_back(std::move(w));
    eps_v.push_back(std::move(e));
    phi_v.push_back(std::move(p));
    return size() - 1;
  }
  void add_edge(int src, int color, int dst) {
    edges.emplace_back(src, color, dst);
    out_[{src, color}] = dst;
    in_[{dst, color}] = src;
  }
  std::optional<int> out_edge(int node, int color) const {
    auto it = out_.find({node, color});
    if (it == out_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> in_edge(int node, int color) const {
    auto it = in_.find({node, color});
    if (it == in_.end()) return std::nullopt;
    return it->second;
  }
};

struct GenOptions {
  std::size_t max_nodes = 1'000'000;
  int threads = 1;
};

/// Closure of the zero module under the lambda-restricted lowering
/// operators. Nodes are numbered in BFS order with each layer sorted by the
/// canonical label, so the result is reproducible; layers may be expanded by
/// several worker threads, with a deterministic merge.
inline CrystalGraph generate_crystal(const CrystalModel& model, const DimVector& lambda,
                                     const GenOptions& opts = {}) {
  require_special_cospecial(model);
  check_dominant(model, lambda);
  const int n = model.rank();
  for (int i = 1; i <= n; ++i) {
    model.poset(i, Variant::Plain);  // warm the caches before going parallel
    model.poset(i, Variant::Check);
  }

  CrystalGraph g;
  g.rank = n;
  g.lambda = lambda;
  g.quiver = model.quiver();

  std::map<std::string, int> ids;
  std::vector<ModClass> nodes;
  auto push_node = [&](const ModClass& m, const std::string& label) {
    nodes.push_back(m);
    std::vector<ExtInt> ev, pv;
    DimVector w = weight_lambda(model, m, lambda);
    for (int i = 1; i <= n; ++i) {
      int e = eps(model, m, i);
      ev.push_back(ExtInt::of(e));
      pv.push_back(ExtInt::of(e + w[i - 1]));
    }
    int id = g.add_node(label, std::move(w), std::move(ev), std::move(pv));
    g.mults.push_back(m);
    ids[label] = id;
    return id;
  };

  ModClass zero;
  push_node(zero, mod_label(model.ar(), zero));
  std::vector<int> layer{0};

  while (!layer.empty()) {
    struct Expansion {
      int src;
      int color;
      std::optional<ModClass> image;
    };
    std::vector<Expansion> results(layer.size() * n);
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t k = lo; k < hi; ++k) {
        int src = layer[k / n];
        int i = static_cast<int>(k % n) + 1;
        ModClass image = apply_f(model, nodes[src], i);
        Expansion ex{src, i, std::nullopt};
        if (in_highest_weight_crystal(model, image, lambda)) ex.image = std::move(image);
        results[k] = std::move(ex);
      }
    };
    const std::size_t total = results.size();
    int workers = std::max(1, opts.threads);
    if (workers > 1 && total > 1) {
      std::vector<std::thread> pool;
      std::size_t chunk = (total + workers - 1) / workers;
      for (int t = 0; t < workers; ++t) {
        std::size_t lo = t * chunk, hi = std::min(total, lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& th : pool) th.join();
    } else {
      work(0, total);
    }

    // Deterministic merge: sort fresh labels, then append.
    std::map<std::string, ModClass> fresh;
    std::vector<std::tuple<int, int, std::string>> pending;
    for (const Expansion& ex : results) {
      if (!ex.image) continue;
      std::string label = mod_label(model.ar(), *ex.image);
      if (!ids.count(label)) fresh.emplace(label, *ex.image);
      pending.emplace_back(ex.src, ex.color, label);
    }
    std::vector<int> next;
    for (auto& [label, m] : fresh) {
      if (nodes.size() >= opts.max_nodes)
        throw std::runtime_error("crystal graph exceeds the node cap (" +
                                 std::to_string(opts.max_nodes) + ")");
      next.push_back(push_node(m, label));
    }
    for (auto& [src, color, label] : pending) g.add_edge(src, color, ids[label]);
    layer = std::move(next);
  }
  return g;
}

// ---------------------------------------------------------------------------
// the one-point crystal and tensor products

inline CrystalGraph make_t_lambda(int rank, const DimVector& lambda) {
  CrystalGraph g;
  g.rank = rank;
  g.lambda = lambda;
  std::vector<ExtInt> bottom(rank, ExtInt::neg_inf());
  g.add_node("t", lambda, bottom, bottom);
  return g;
}

/// Tensor product crystal: nodes are pairs, statistics and operators follow
/// the signature rules, with -infinity handled by saturation.
inline CrystalGraph tensor(const CrystalGraph& g1, const CrystalGraph& g2) {
  if (g1.rank != g2.rank || g1.affine || g2.affine)
    throw std::invalid_argument("tensor needs two classical graphs with the same color set");
  const int n = g1.rank;
  CrystalGraph g;
  g.rank = n;
  if (g1.quiver) g.quiver = g1.quiver;
  else if (g2.quiver) g.quiver = g2.quiver;

  auto id = [&](int a, int b) { return a * g2.size() + b; };
  for (int a = 0; a < g1.size(); ++a)
    for (int b = 0; b < g2.size(); ++b) {
      DimVector w = add(g1.wt[a], g2.wt[b]);
      std::vector<ExtInt> ev, pv;
      for (int i = 0; i < n; ++i) {
        ExtInt e2_shift = g2.eps_v[b][i] - g1.wt[a][i];
        ev.push_back(max(g1.eps_v[a][i], e2_shift));
        ExtInt p1_shift = g1.phi_v[a][i] + g2.wt[b][i];
        pv.push_back(max(g2.phi_v[b][i], p1_shift));
      }
      g.add_node(g1.labels[a] + "(x)" + g2.labels[b], std::move(w), std::move(ev), std::move(pv));
    }
  for (int a = 0; a < g1.size(); ++a)
    for (int b = 0; b < g2.size(); ++b)
      for (int i = 1; i <= n; ++i) {
        if (g1.phi_v[a][i - 1] > g2.eps_v[b][i - 1]) {
          if (auto t = g1.out_edge(a, i)) g.add_edge(id(a, b), i, id(*t, b));
        } else {
          if (auto t = g2.out_edge(b, i)) g.add_edge(id(a, b), i, id(a, *t));
        }
      }
  return g;
}

// ---------------------------------------------------------------------------
// axioms

/// Checks every clause of the abstract-crystal definition on the stored
/// data, plus string consistency: a finite eps_i(b) equals the number of
/// consecutive i-colored raising steps available above b. Returns the list
/// of violations; empty means the graph passes.
inline std::vector<std::string> check_axioms(const CrystalGraph& g) {
  std::vector<std::string> bad;
  auto complain = [&](const std::string& s) {
    if (bad.size() < 100) bad.push_back(s);
  };
  const int n = g.rank;
  if (!g.quiver && !g.edges.empty()) {
    // weight-shift checks need the Cartan matrix
    complain("graph carries no quiver; cannot verify weight shifts");
  }

  std::map<std::pair<int, int>, int> outs, ins;
  for (auto [s, c, d] : g.edges) {
    if (outs.count({s, c})) complain("node " + std::to_string(s) + " has two outgoing edges of color " + std::to_string(c));
    if (ins.count({d, c})) complain("node " + std::to_string(d) + " has two incoming edges of color " + std::to_string(c));
    outs[{s, c}] = d;
    ins[{d, c}] = s;
  }

  for (int b = 0; b < g.size(); ++b) {
    for (int i = 1; i <= n; ++i) {
      ExtInt e = g.eps_v[b][i - 1], p = g.phi_v[b][i - 1];
      ExtInt expect = e + g.wt[b][i - 1];
      if (!(p == expect))
        complain("phi != eps + wt(h_i) at node " + std::to_string(b) + ", color " + std::to_string(i));
      if (e.ninf != p.ninf)
        complain("exactly one of eps/phi is -inf at node " + std::to_string(b));
      if (e.ninf && (outs.count({b, i}) || ins.count({b, i})))
        complain("node " + std::to_string(b) + " has eps = -inf but color-" + std::to_string(i) + " edges");
    }
  }

  for (auto [s, c, d] : g.edges) {
    if (c == 0) continue;  // affine color checked structurally only
    if (g.quiver) {
      for (int k = 1; k <= n; ++k) {
        int shift = g.quiver->cartan[k - 1][c - 1];
        if (g.wt[d][k - 1] != g.wt[s][k - 1] - shift) {
          complain("edge " + std::to_string(s) + "->" + std::to_string(d) + " color " +
                   std::to_string(c) + " does not shift the weight by -alpha");
          break;
        }
      }
    }
    ExtInt es = g.eps_v[s][c - 1], ed = g.eps_v[d][c - 1];
    ExtInt ps = g.phi_v[s][c - 1], pd = g.phi_v[d][c - 1];
    if (!(ed == es + 1))
      complain("eps does not increase along edge " + std::to_string(s) + "->" + std::to_string(d));
    if (!(pd == ps - 1))
      complain("phi does not decrease along edge " + std::to_string(s) + "->" + std::to_string(d));
  }

  // string consistency
  for (int b = 0; b < g.size(); ++b)
    for (int i = 1; i <= n; ++i) {
      ExtInt e = g.eps_v[b][i - 1];
      if (e.ninf) continue;
      int steps = 0, cur = b;
      while (true) {
        auto it = ins.find({cur, i});
        if (it == ins.end()) break;
        cur = it->second;
        ++steps;
        if (steps > g.size()) break;  // cycle guard
      }
      if (steps != e.v)
        complain("eps_" + std::to_string(i) + " of node " + std::to_string(b) + " is " +
                 std::to_string(e.v) + " but the raising string has length " + std::to_string(steps));
    }
  return bad;
}

// ---------------------------------------------------------------------------
// isomorphism and components

inline std::vector<int> graph_sources(const CrystalGraph& g) {
  std::vector<bool> has_in(g.size(), false);
  for (auto [s, c, d] : g.edges) has_in[d] = true;
  std::vector<int> r;
  for (int b = 0; b < g.size(); ++b)
    if (!has_in[b]) r.push_back(b);
  return r;
}

/// The unique color-and-weight-preserving isomorphism, found by parallel
/// BFS from the unique sources; nullopt when the graphs do not match.
inline std::optional<std::vector<int>> graph_iso(const CrystalGraph& g1, const CrystalGraph& g2) {
  if (g1.rank != g2.rank) return std::nullopt;
  auto s1 = graph_sources(g1), s2 = graph_sources(g2);
  if (s1.size() != 1 || s2.size() != 1)
    throw std::invalid_argument("graph_iso needs unique-source graphs; decompose first");
  if (g1.size() != g2.size()) return std::nullopt;

  const int lo = g1.affine || g2.affine ? 0 : 1;
  std::vector<int> map(g1.size(), -1);
  std::vector<int> queue{s1[0]};
  map[s1[0]] = s2[0];
  std::size_t head = 0;
  int matched = 1;
  while (head < queue.size()) {
    int a = queue[head++];
    int b = map[a];
    if (g1.wt[a] != g2.wt[b]) return std::nullopt;
    for (int i = 1; i <= g1.rank; ++i)
      if (!(g1.eps_v[a][i - 1] == g2.eps_v[b][i - 1]) || !(g1.phi_v[a][i - 1] == g2.phi_v[b][i - 1]))
        return std::nullopt;
    for (int c = lo; c <= g1.rank; ++c) {
      auto t1 = g1.out_edge(a, c), t2 = g2.out_edge(b, c);
      if (t1.has_value() != t2.has_value()) return std::nullopt;
      if (t1) {
        if (map[*t1] == -1) {
          map[*t1] = *t2;
          queue.push_back(*t1);
          ++matched;
        } else if (map[*t1] != *t2) {
          return std::nullopt;
        }
      }
      auto u1 = g1.in_edge(a, c), u2 = g2.in_edge(b, c);
      if (u1.has_value() != u2.has_value()) return std::nullopt;
      if (u1) {
        if (map[*u1] == -1) {
          map[*u1] = *u2;
          queue.push_back(*u1);
          ++matched;
        } else if (map[*u1] != *u2) {
          return std::nullopt;
        }
      }
    }
  }
  if (matched != g1.size()) return std::nullopt;  // disconnected leftovers
  return map;
}

/// Weakly connected components, each renumbered in original node order.
inline std::vector<CrystalGraph> components(const CrystalGraph& g) {
  std::vector<int> comp(g.size(), -1);
  int ncomp = 0;
  for (int start = 0; start < g.size(); ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = ncomp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (auto [s, c, d] : g.edges) {
        if (s == a && comp[d] < 0) { comp[d] = ncomp; stack.push_back(d); }
        if (d == a && comp[s] < 0) { comp[s] = ncomp; stack.push_back(s); }
      }
    }
    ++ncomp;
  }
  std::vector<CrystalGraph> out(ncomp);
  std::vector<int> newid(g.size(), -1);
  for (int k = 0; k < ncomp; ++k) {
    out[k].rank = g.rank;
    out[k].affine = g.affine;
    out[k].quiver = g.quiver;
  }
  for (int b = 0; b < g.size(); ++b) {
    CrystalGraph& target = out[comp[b]];
    newid[b] = target.add_node(g.labels[b], g.wt[b], g.eps_v[b], g.phi_v[b]);
    if (!g.mults.empty()) target.mults.push_back(g.mults[b]);
  }
  for (auto [s, c, d] : g.edges) out[comp[s]].add_edge(newid[s], c, newid[d]);
  return out;
}

// ---------------------------------------------------------------------------
// serialization

inline nlohmann::json graph_to_json(const CrystalGraph& g, const ARQuiver* ar = nullptr) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int b = 0; b < g.size(); ++b) {
    nlohmann::json mult = nlohmann::json::array();
    if (!g.mults.empty() && ar)
      for (auto [idx, k] : g.mults[b].mult) mult.push_back({{"root", ar->modules[idx].dim}, {"m", k}});
    std::vector<int> ev, pv;
    for (int i = 0; i < g.rank; ++i) {
      if (g.eps_v[b][i].ninf || g.phi_v[b][i].ninf)
        throw std::invalid_argument("graphs with -inf statistics are not exportable");
      ev.push_back(g.eps_v[b][i].v);
      pv.push_back(g.phi_v[b][i].v);
    }
    nodes.push_back({{"id", b}, {"mult", mult}, {"wt", g.wt[b]}, {"eps", ev}, {"phi", pv}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (auto [s, c, d] : g.edges) edges.push_back({{"src", s}, {"color", c}, {"dst", d}});
  nlohmann::json j = {{"lambda", g.lambda}, {"nodes", nodes}, {"edges", edges}};
  if (g.quiver) j["quiver"] = quiver_to_json(*g.quiver);
  if (g.affine) j["affine"] = true;
  return j;
}

inline CrystalGraph graph_from_json(const nlohmann::json& j) {
  CrystalGraph g;
  std::unique_ptr<CrystalModel> model;
  if (j.count("quiver")) {
    g.quiver = quiver_from_json(j.at("quiver"));
    model = std::make_unique<CrystalModel>(*g.quiver);
  }
  g.lambda = j.at("lambda").get<DimVector>();
  g.affine = j.count("affine") && j.at("affine").get<bool>();
  const auto& nodes = j.at("nodes");
  for (std::size_t b = 0; b < nodes.size(); ++b) {
    const auto& node = nodes.at(b);
    if (node.at("id").get<int>() != static_cast<int>(b))
      throw std::invalid_argument("node ids must be 0..n-1 in order");
    DimVector w = node.at("wt").get<DimVector>();
    if (g.rank == 0) g.rank = static_cast<int>(w.size());
    ModClass m;
    if (model) m = modclass_from_json(model->ar(), node);
    std::vector<ExtInt> ev, pv;
    if (node.count("eps")) {
      for (int x : node.at("eps").get<std::vector<int>>()) ev.push_back(ExtInt::of(x));
      for (int x : node.at("phi").get<std::vector<int>>()) pv.push_back(ExtInt::of(x));
    } else if (model) {
      // minimal schema: recover the statistics from the node label
      for (int i = 1; i <= g.rank; ++i) {
        int e = eps(*model, m, i);
        ev.push_back(ExtInt::of(e));
        pv.push_back(ExtInt::of(e + w[i - 1]));
      }
    } else {
      throw std::invalid_argument("nodes need eps/phi arrays or a quiver to derive them");
    }
    std::string label = model ? mod_label(model->ar(), m) : "n" + std::to_string(b);
    g.add_node(label, std::move(w), std::move(ev), std::move(pv));
    if (model) g.mults.push_back(std::move(m));
  }
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at("src").get<int>(), e.at("color").get<int>(), e.at("dst").get<int>());
  return g;
}

inline std::string graph_to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (int b = 0; b < g.size(); ++b)
    os << "  n" << b << " [label=\"" << g.labels[b] << "\"];\n";
  for (auto [s, c, d] : g.edges)
    os << "  n" << s << " -> n" << d << " [label=\"" << c << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace arcrystal

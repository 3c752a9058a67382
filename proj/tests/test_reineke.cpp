#include <catch2/catch_amalgamated.hpp>

#include <arcrystal/reineke.hpp>

#include <set>

#include "support/helpers.hpp"

using namespace arcrystal;
using testsupport::all_orientations;
using testsupport::d4_reference;
using testsupport::quiver_of;

namespace {

ModClass mc(const ARQuiver& ar, std::initializer_list<std::pair<DimVector, int>> entries) {
  ModClass m;
  for (const auto& [d, k] : entries) m.add(ar.require_index(d), k);
  return m;
}

AntichainModule ac(const ARQuiver& ar, std::initializer_list<DimVector> dims) {
  AntichainModule a;
  for (const auto& d : dims) a.summands.push_back(ar.require_index(d));
  std::sort(a.summands.begin(), a.summands.end());
  return a;
}

/// The element of the known A_5 worked example (j = m = 3).
ModClass a5_example(const ARQuiver& ar) {
  return mc(ar, {{{1, 0, 0, 0, 0}, 1},
                 {{1, 1, 1, 0, 0}, 1},
                 {{0, 1, 0, 0, 0}, 1},
                 {{0, 1, 1, 0, 0}, 1},
                 {{0, 1, 1, 1, 0}, 1},
                 {{0, 0, 1, 0, 0}, 1},
                 {{0, 0, 1, 1, 1}, 2}});
}

}  // namespace

TEST_CASE("posets on A2") {
  CrystalModel model(quiver_of(Family::A, 2, {{2, 1}}));
  const ARQuiver& ar = model.ar();
  int s1 = ar.require_index({1, 0}), p2 = ar.require_index({1, 1});

  const PosetData& p1 = model.poset(1, Variant::Plain);
  CHECK(p1.elems == std::vector<int>{s1});
  const PosetData& p1c = model.poset(1, Variant::Check);
  CHECK(p1c.elems == std::vector<int>{s1, p2});

  CHECK_THROWS_AS(model.poset(5, Variant::Plain), std::invalid_argument);
}

TEST_CASE("P_i intersect P_i-check is the simple") {
  for (Family f : {Family::A, Family::D}) {
    for (const Quiver& q : all_orientations(f, 4)) {
      CrystalModel model(q);
      for (int i = 1; i <= 4; ++i) {
        std::set<int> plain(model.poset(i, Variant::Plain).elems.begin(),
                            model.poset(i, Variant::Plain).elems.end());
        std::set<int> inter;
        for (int e : model.poset(i, Variant::Check).elems)
          if (plain.count(e)) inter.insert(e);
        CHECK(inter == std::set<int>{model.simple(i)});
      }
    }
  }
}

TEST_CASE("D4 reference poset and antichains") {
  CrystalModel model(d4_reference());
  const ARQuiver& ar = model.ar();
  const PosetData& pd = model.poset(1, Variant::Check);

  std::set<DimVector> got;
  for (int e : pd.elems) got.insert(ar.modules[e].dim);
  std::set<DimVector> framed = {{1, 0, 0, 0}, {1, 0, 1, 0}, {1, 0, 1, 1},
                                {1, 1, 1, 0}, {1, 1, 1, 1}, {1, 1, 2, 1}};
  CHECK(got == framed);

  // distinct antichains as displayed, including the one two-element antichain
  std::set<std::vector<int>> antichains;
  for (const auto& a : pd.antichains) antichains.insert(a.summands);
  std::set<std::vector<int>> expected;
  for (const auto& d : framed) expected.insert({ar.require_index(d)});
  expected.insert(ac(ar, {{1, 0, 1, 0}, {1, 1, 1, 1}}).summands);
  CHECK(antichains == expected);

  // both maximal chains of the displayed order
  auto leq = [&](const AntichainModule& x, const AntichainModule& y) {
    int xi = pd.find_antichain(x), yi = pd.find_antichain(y);
    REQUIRE(xi >= 0);
    REQUIRE(yi >= 0);
    return static_cast<bool>(pd.ac_leq[xi][yi]);
  };
  std::vector<AntichainModule> chain1 = {
      ac(ar, {{1, 0, 0, 0}}), ac(ar, {{1, 1, 1, 0}}), ac(ar, {{1, 0, 1, 0}, {1, 1, 1, 1}}),
      ac(ar, {{1, 0, 1, 0}}), ac(ar, {{1, 1, 2, 1}}), ac(ar, {{1, 0, 1, 1}})};
  std::vector<AntichainModule> chain2 = {
      ac(ar, {{1, 0, 0, 0}}), ac(ar, {{1, 1, 1, 0}}), ac(ar, {{1, 0, 1, 0}, {1, 1, 1, 1}}),
      ac(ar, {{1, 1, 1, 1}}), ac(ar, {{1, 1, 2, 1}}), ac(ar, {{1, 0, 1, 1}})};
  for (const auto& chain : {chain1, chain2})
    for (size_t k = 0; k + 1 < chain.size(); ++k) CHECK(leq(chain[k], chain[k + 1]));
}

TEST_CASE("type A check-posets are chains of intervals") {
  for (int n = 2; n <= 4; ++n) {
    CrystalModel model(standard_quiver(n));
    const ARQuiver& ar = model.ar();
    for (int i = 1; i <= n; ++i) {
      const PosetData& pd = model.poset(i, Variant::Check);
      REQUIRE(static_cast<int>(pd.elems.size()) == n + 1 - i);
      for (int e : pd.elems) {
        const DimVector& d = ar.modules[e].dim;
        CHECK(d[i - 1] == 1);
        for (int v = 1; v < i; ++v) CHECK(d[v - 1] == 0);
      }
      // all antichains are singletons, totally ordered
      for (const auto& a : pd.antichains) CHECK(a.summands.size() == 1);
      CHECK(pd.antichains.size() == pd.elems.size());
      for (size_t x = 0; x < pd.antichains.size(); ++x)
        for (size_t y = 0; y < pd.antichains.size(); ++y) {
          bool cmp = pd.ac_leq[x][y] || pd.ac_leq[y][x];
          CHECK(cmp);
        }
    }
  }
}

TEST_CASE("f statistics") {
  CrystalModel a5(standard_quiver(5));
  const ARQuiver& ar = a5.ar();
  ModClass m = a5_example(ar);
  ModClass zero;

  for (int i = 1; i <= 5; ++i)
    for (const auto& v : a5.poset(i, Variant::Plain).antichains) CHECK(f_stat(a5, zero, v, i) == 0);

  auto interval = [&](int r, int s) {
    DimVector d(5, 0);
    for (int v = r; v <= s; ++v) d[v - 1] = 1;
    return d;
  };
  // the closed form on the standard orientation:
  // F_i-check(M, M(i,s)) = sum_{k=s}^{n} mu_{i,k} - sum_{k=s}^{n-1} mu_{i+1,k+1}
  auto closed_form = [&](const ModClass& mm, int i, int s) {
    auto count = [&](int r, int t) {
      if (t > 5 || t < r) return 0;
      return mm.count(ar.require_index(interval(r, t)));
    };
    int val = 0;
    for (int k = s; k <= 5; ++k) val += count(i, k);
    for (int k = s; k <= 4; ++k) val -= count(i + 1, k + 1);
    return val;
  };
  for (int i = 1; i <= 4; ++i)
    for (int s = i; s <= 5; ++s) {
      AntichainModule v;
      v.summands = {ar.require_index(interval(i, s))};
      CHECK(f_stat_check(a5, m, v, i) == closed_form(m, i, s));
    }
  AntichainModule m35;
  m35.summands = {ar.require_index(interval(3, 5))};
  CHECK(f_stat_check(a5, m, m35, 3) == 2);
}

TEST_CASE("V_M and U_M selection on A2") {
  CrystalModel model(quiver_of(Family::A, 2, {{2, 1}}));
  const ARQuiver& ar = model.ar();
  ModClass zero;
  ModClass s1 = mc(ar, {{{1, 0}, 1}});

  // lowering from the empty module adds the simple
  for (int i = 1; i <= 2; ++i) {
    VmUm sel = select_vm_um(model, zero, i);
    CHECK(sel.v.summands == std::vector<int>{model.simple(i)});
    CHECK(sel.u.empty());
    CHECK(sel.f_max == 0);
  }

  VmUm sel1 = select_vm_um(model, s1, 1);
  CHECK(sel1.v.summands == std::vector<int>{ar.require_index({1, 0})});
  CHECK(sel1.u.empty());
  CHECK(sel1.f_max == 1);

  VmUm sel2 = select_vm_um(model, s1, 2);
  CHECK(sel2.v.summands == std::vector<int>{ar.require_index({1, 1})});
  CHECK(sel2.u == mc(ar, {{{1, 0}, 1}}));
  CHECK(sel2.f_max == 0);
}

TEST_CASE("eps star") {
  CrystalModel a5(standard_quiver(5));
  const ARQuiver& ar = a5.ar();
  ModClass zero;
  for (int i = 1; i <= 5; ++i) CHECK(eps_star(a5, zero, i) == 0);

  ModClass m = a5_example(ar);
  CHECK(eps_star(a5, m, 1) == 0);
  CHECK(eps_star(a5, m, 2) == 0);
  CHECK(eps_star(a5, m, 3) == 3);
  CHECK(eps_star(a5, m, 4) == 0);
  CHECK(eps_star(a5, m, 5) == 0);

  CrystalModel a2(quiver_of(Family::A, 2, {{2, 1}}));
  for (int k = 1; k <= 4; ++k) {
    ModClass sk = mc(a2.ar(), {{{1, 0}, k}});
    CHECK(eps_star(a2, sk, 1) == k);
    CHECK(eps_star(a2, sk, 2) == 0);
  }
}

TEST_CASE("W and E selection on the extended quiver") {
  CrystalModel ext(standard_quiver(6));  // A_6 extends A_5
  const ARQuiver& ar = ext.ar();
  auto interval = [&](int r, int s) {
    DimVector d(6, 0);
    for (int v = r; v <= s; ++v) d[v - 1] = 1;
    return ar.require_index(d);
  };
  // the first pass of the worked trace, after sh_3
  ModClass n1;
  n1.add(interval(1, 1), 1);
  n1.add(interval(1, 2), 1);
  n1.add(interval(1, 4), 1);
  n1.add(interval(2, 3), 1);
  n1.add(interval(2, 4), 1);
  n1.add(interval(2, 5), 1);
  n1.add(interval(3, 4), 1);
  n1.add(interval(3, 6), 1);
  WnEn w2 = select_wn_en(ext, n1, 2);
  CHECK(w2.s0 == 4);
  CHECK(w2.w == interval(2, 4));
  REQUIRE(w2.e.has_value());
  CHECK(*w2.e == interval(3, 4));

  // after T_2: W for i = 1 is the simple, no E (pure removal)
  ModClass n2 = n1;
  n2.add(interval(2, 4), -1);
  n2.add(interval(3, 4), 1);
  WnEn w1 = select_wn_en(ext, n2, 1);
  CHECK(w1.s0 == 1);
  CHECK(w1.w == interval(1, 1));
  CHECK(!w1.e.has_value());

  // second pass, i = 1: a genuine move from M(1,4) to M(2,4)
  ModClass n3;
  n3.add(interval(1, 2), 1);
  n3.add(interval(1, 4), 1);
  n3.add(interval(2, 3), 1);
  n3.add(interval(3, 4), 2);
  n3.add(interval(3, 5), 1);
  WnEn w3 = select_wn_en(ext, n3, 1);
  CHECK(w3.s0 == 4);
  CHECK(w3.w == interval(1, 4));
  REQUIRE(w3.e.has_value());
  CHECK(*w3.e == interval(2, 4));

  CrystalModel d4(d4_reference());
  ModClass dummy;
  CHECK_THROWS_AS(select_wn_en(d4, dummy, 1), std::invalid_argument);
}

TEST_CASE("modclass json round trip") {
  CrystalModel a5(standard_quiver(5));
  ModClass m = a5_example(a5.ar());
  auto j = modclass_to_json(a5.ar(), m);
  CHECK(modclass_from_json(a5.ar(), j) == m);
  // roots appear in lexicographic order
  DimVector prev(5, -1);
  for (const auto& e : j["mult"]) {
    DimVector root = e["root"].get<DimVector>();
    CHECK(prev < root);
    prev = root;
  }
  nlohmann::json bad = j;
  bad["mult"][0]["m"] = 0;
  CHECK_THROWS_AS(modclass_from_json(a5.ar(), bad), std::invalid_argument);
}

TEST_CASE("poset accessors") {
  CrystalModel a2(quiver_of(Family::A, 2, {{2, 1}}));
  CHECK(&poset(a2, 1, Variant::Check) == &a2.poset(1, Variant::Check));
  CHECK(antichain_modules(a2, 1, Variant::Check).size() == 2);
}

// Semistandard Young tableaux of rectangular shape: the independent oracle.
// Contains the correspondence between module classes in a rectangular
// highest-weight crystal and tableaux (row r records letter s+1 with the
// multiplicity of the interval module M(r,s), padded with k_r copies of r),
// jeu-de-taquin promotion, the signature-rule crystal operators on the
// bottom-to-top row reading word, and exhaustive enumeration.

#pragma once

#include "crystal.hpp"

namespace arcrystal {

struct Tableau {
  std::vector<std::vector<int>> rows;  // equal-length rows

  int height() const { return static_cast<int>(rows.size()); }
  int width() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
  bool operator==(const Tableau& o) const { return rows == o.rows; }
  bool operator<(const Tableau& o) const { return rows < o.rows; }
};

inline bool is_ssyt(const Tableau& t, int alphabet) {
  for (int r = 0; r < t.height(); ++r) {
    if (static_cast<int>(t.rows[r].size()) != t.width()) return false;
    for (int c = 0; c < t.width(); ++c) {
      int x = t.rows[r][c];
      if (x < 1 || x > alphabet) return false;
      if (c > 0 && t.rows[r][c - 1] > x) return false;
      if (r > 0 && t.rows[r - 1][c] >= x) return false;
    }
  }
  return true;
}

inline std::string tableau_label(const Tableau& t) {
  std::string s;
  for (int r = 0; r < t.height(); ++r) {
    if (r) s += "/";
    for (int c = 0; c < t.width(); ++c) {
      if (c) s += ",";
      s += std::to_string(t.rows[r][c]);
    }
  }
  return s;
}

/// Multi-line rendering with aligned columns, for diffs and logs.
inline std::string tableau_pretty(const Tableau& t) {
  int w = 1;
  for (const auto& row : t.rows)
    for (int x : row) w = std::max(w, static_cast<int>(std::to_string(x).size()));
  std::string s;
  for (const auto& row : t.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      std::string cell = std::to_string(row[c]);
      if (c) s += " ";
      s += std::string(w - cell.size(), ' ') + cell;
    }
    s += "\n";
  }
  return s;
}

inline nlohmann::json tableau_to_json(const Tableau& t) { return {{"rows", t.rows}}; }

inline Tableau tableau_from_json(const nlohmann::json& j) {
  Tableau t;
  t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  return t;
}

// ---------------------------------------------------------------------------
// the correspondence with module classes

/// Row r gets k_r copies of the letter r and mu_{r,s}(M) copies of s+1.
/// Returns nothing when the counts do not assemble into a semistandard
/// rectangle, which happens exactly when M is not in B(m w_j).
inline std::optional<Tableau> tableau_of_modclass(const CrystalModel& model, const ModClass& m,
                                                  int mcols, int j) {
  if (!is_standard_type_a(model.quiver()))
    throw std::invalid_argument("the tableau correspondence needs type A standard orientation");
  const int n = model.rank();
  if (j < 1 || j > n || mcols < 1) throw std::invalid_argument("bad rectangle parameters");
  const ARQuiver& ar = model.ar();

  std::vector<std::vector<int>> mu(j + 1, std::vector<int>(n + 1, 0));
  for (auto [idx, k] : m.mult) {
    const DimVector& d = ar.modules[idx].dim;
    int r = 0, s = 0;
    for (int v = 1; v <= n; ++v)
      if (d[v - 1]) {
        if (!r) r = v;
        s = v;
      }
    if (r > j || s > n - j + r) return std::nullopt;  // support leaves the strip
    mu[r][s] += k;
  }
  Tableau t;
  for (int r = 1; r <= j; ++r) {
    int used = 0;
    for (int s = r; s <= n; ++s) used += mu[r][s];
    int k_r = mcols - used;
    if (k_r < 0) return std::nullopt;
    std::vector<int> row(k_r, r);
    for (int s = r; s <= n; ++s) row.insert(row.end(), mu[r][s], s + 1);
    t.rows.push_back(std::move(row));
  }
  if (!is_ssyt(t, n + 1)) return std::nullopt;
  return t;
}

inline ModClass modclass_of_tableau(const CrystalModel& model, const Tableau& t) {
  if (!is_standard_type_a(model.quiver()))
    throw std::invalid_argument("the tableau correspondence needs type A standard orientation");
  const int n = model.rank();
  const int j = t.height();
  if (!is_ssyt(t, n + 1)) throw std::invalid_argument("not a semistandard tableau over 1..n+1");
  const ARQuiver& ar = model.ar();
  ModClass m;
  for (int r = 1; r <= j; ++r)
    for (int x : t.rows[r - 1]) {
      if (x == r) continue;  // letter r carries no module
      int s = x - 1;
      if (s < r || s > n - j + r)
        throw std::invalid_argument("letter outside the admissible row range");
      DimVector d(n, 0);
      for (int v = r; v <= s; ++v) d[v - 1] = 1;
      m.add(ar.require_index(d));
    }
  return m;
}

// ---------------------------------------------------------------------------
// promotion by jeu de taquin

/// Remove every letter `alphabet` (they sit at the end of the last row),
/// add one to the rest, slide the holes to the top-left one at a time
/// (leftmost hole first; the larger of the upper/left neighbours moves, the
/// upper one on ties), and fill the vacated top-left cells with ones.
inline Tableau tab_promote(const Tableau& t, int alphabet) {
  if (!is_ssyt(t, alphabet)) throw std::invalid_argument("tab_promote needs a semistandard tableau");
  const int h = t.height(), w = t.width();
  std::vector<std::vector<int>> grid = t.rows;
  int removed = 0;
  for (int c = w - 1; c >= 0 && grid[h - 1][c] == alphabet; --c) {
    grid[h - 1][c] = 0;
    ++removed;
  }
  for (auto& row : grid)
    for (int& x : row)
      if (x) ++x;

  for (int hole = 0; hole < removed; ++hole) {
    int r = h - 1, c = w - removed + hole;
    while (true) {
      int up = (r > 0 && grid[r - 1][c] > 0) ? grid[r - 1][c] : 0;
      int left = (c > 0 && grid[r][c - 1] > 0) ? grid[r][c - 1] : 0;
      if (!up && !left) break;
      if (up >= left) {
        grid[r][c] = up;
        grid[r - 1][c] = 0;
        --r;
      } else {
        grid[r][c] = left;
        grid[r][c - 1] = 0;
        --c;
      }
    }
  }
  for (auto& row : grid)
    for (int& x : row)
      if (!x) x = 1;
  Tableau out;
  out.rows = std::move(grid);
  if (!is_ssyt(out, alphabet)) throw std::logic_error("promotion produced a non-semistandard filling");
  return out;
}

// ---------------------------------------------------------------------------
// crystal operators via the signature rule

namespace detail {

struct Signature {
  // positions (row, col) of the surviving letters, in reading order
  std::vector<std::pair<int, int>> unmatched_plus;   // letters i
  std::vector<std::pair<int, int>> unmatched_minus;  // letters i+1
};

/// Reading word: rows bottom to top, each left to right. Letters i count as
/// '+', letters i+1 as '-', and every '-' immediately followed by a '+'
/// (after cancellations) is matched away.
inline Signature signature(const Tableau& t, int i) {
  Signature sig;
  std::vector<std::pair<int, int>> minus_stack;
  for (int r = t.height() - 1; r >= 0; --r)
    for (int c = 0; c < t.width(); ++c) {
      int x = t.rows[r][c];
      if (x == i + 1) {
        minus_stack.emplace_back(r, c);
      } else if (x == i) {
        if (!minus_stack.empty())
          minus_stack.pop_back();
        else
          sig.unmatched_plus.emplace_back(r, c);
      }
    }
  sig.unmatched_minus = std::move(minus_stack);
  return sig;
}

}  // namespace detail

inline int tab_eps(const Tableau& t, int i) {
  return static_cast<int>(detail::signature(t, i).unmatched_minus.size());
}

inline int tab_phi(const Tableau& t, int i) {
  return static_cast<int>(detail::signature(t, i).unmatched_plus.size());
}

/// Lowering: the last unmatched i in reading order becomes i+1.
inline std::optional<Tableau> tab_f(const Tableau& t, int i) {
  auto sig = detail::signature(t, i);
  if (sig.unmatched_plus.empty()) return std::nullopt;
  auto [r, c] = sig.unmatched_plus.back();
  Tableau out = t;
  out.rows[r][c] = i + 1;
  return out;
}

/// Raising: the first unmatched i+1 in reading order becomes i.
inline std::optional<Tableau> tab_e(const Tableau& t, int i) {
  auto sig = detail::signature(t, i);
  if (sig.unmatched_minus.empty()) return std::nullopt;
  auto [r, c] = sig.unmatched_minus.front();
  Tableau out = t;
  out.rows[r][c] = i;
  return out;
}

inline std::optional<Tableau> tab_crystal_op(const Tableau& t, int i, bool lowering) {
  return lowering ? tab_f(t, i) : tab_e(t, i);
}

// ---------------------------------------------------------------------------
// enumeration and the tableau crystal graph

/// All semistandard fillings of the j x m rectangle over 1..alphabet,
/// in lexicographic order of their row lists.
inline std::vector<Tableau> enumerate_ssyt(int j, int m, int alphabet) {
  std::vector<Tableau> out;
  Tableau t;
  t.rows.assign(j, std::vector<int>(m, 0));
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == j) {
      out.push_back(t);
      return;
    }
    int nr = c + 1 == m ? r + 1 : r;
    int nc = c + 1 == m ? 0 : c + 1;
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int x = lo; x <= alphabet; ++x) {
      t.rows[r][c] = x;
      fill(nr, nc);
    }
    t.rows[r][c] = 0;
  };
  fill(0, 0);
  return out;
}

/// The crystal graph on SSYT(m w_j) over the alphabet 1..n+1: weights are
/// content differences, statistics and edges come from the signature rule.
inline CrystalGraph tableau_crystal(int n, int j, int m) {
  auto tabs = enumerate_ssyt(j, m, n + 1);
  std::map<Tableau, int> ids;
  CrystalGraph g;
  g.rank = n;
  g.quiver = standard_quiver(n);
  g.lambda.assign(n, 0);
  g.lambda[j - 1] = m;
  for (const Tableau& t : tabs) {
    std::vector<int> content(n + 1, 0);
    for (const auto& row : t.rows)
      for (int x : row) ++content[x - 1];
    DimVector w(n, 0);
    std::vector<ExtInt> ev, pv;
    for (int i = 1; i <= n; ++i) {
      w[i - 1] = content[i - 1] - content[i];
      ev.push_back(ExtInt::of(tab_eps(t, i)));
      pv.push_back(ExtInt::of(tab_phi(t, i)));
    }
    ids[t] = g.add_node(tableau_label(t), std::move(w), std::move(ev), std::move(pv));
  }
  for (const Tableau& t : tabs)
    for (int i = 1; i <= n; ++i)
      if (auto ft = tab_f(t, i)) g.add_edge(ids[t], i, ids.at(*ft));
  return g;
}

}  // namespace arcrystal

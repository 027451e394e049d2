#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

Poly from(const hspecht::Polynomial& f) {
  Poly out;
  for (const auto& [m, c] : f.terms()) out[m.exponents()] = c;
  return out;
}

bool same(const Poly& a, const hspecht::Polynomial& b) { return a == from(b); }

Poly add(const Poly& a, const Poly& b, const mpq_class& scale) {
  Poly out = a;
  for (const auto& [m, c] : b) {
    out[m] += scale * c;
    if (out[m] == 0) out.erase(m);
  }
  return out;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      out[m] += ca * cb;
      if (out[m] == 0) out.erase(m);
    }
  }
  return out;
}

Poly monomial(const std::vector<int>& exponents, const mpq_class& c) { return c == 0 ? Poly{} : Poly{{exponents, c}}; }

std::vector<Perm> all_permutations(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = a[static_cast<std::size_t>(b[k] - 1)];
  return out;
}

int sign(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Poly act(const Perm& sigma, const Poly& f) {
  Poly out;
  for (const auto& [m, c] : f) {
    std::vector<int> moved(m.size(), 0);
    for (std::size_t k = 0; k < m.size(); ++k) moved[static_cast<std::size_t>(sigma[k] - 1)] = m[k];
    out[moved] += c;
  }
  return out;
}

long long brute_standard_count(const std::vector<int>& shape) {
  const int m = std::accumulate(shape.begin(), shape.end(), 0);
  long long count = 0;
  for (const auto& filling : all_permutations(m)) {
    Grid g;
    std::size_t pos = 0;
    for (int len : shape) {
      g.emplace_back(filling.begin() + static_cast<long>(pos), filling.begin() + static_cast<long>(pos + len));
      pos += static_cast<std::size_t>(len);
    }
    bool ok = true;
    for (std::size_t r = 0; r < g.size() && ok; ++r)
      for (std::size_t c = 0; c < g[r].size() && ok; ++c) {
        if (c + 1 < g[r].size() && g[r][c] >= g[r][c + 1]) ok = false;
        if (r + 1 < g.size() && c < g[r + 1].size() && g[r][c] >= g[r + 1][c]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

namespace {

// Which row (or column) of the grid holds entry k; -1 for entries outside it.
std::vector<int> line_of(const Grid& rows, int n, bool by_column) {
  std::vector<int> out(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) out[static_cast<std::size_t>(rows[r][c])] = static_cast<int>(by_column ? c : r);
  return out;
}

bool stabilizes(const Perm& p, const std::vector<int>& line) {
  for (std::size_t k = 1; k < line.size(); ++k) {
    const int image = p[k - 1];
    if (line[k] < 0 && image != static_cast<int>(k)) return false;
    if (line[k] != line[static_cast<std::size_t>(image)]) return false;
  }
  return true;
}

}  // namespace

Poly young_apply(const Grid& rows, int n, const Poly& f) {
  const auto row = line_of(rows, n, false);
  const auto col = line_of(rows, n, true);
  std::vector<Perm> R, C;
  for (const auto& p : all_permutations(n)) {
    if (stabilizes(p, row)) R.push_back(p);
    if (stabilizes(p, col)) C.push_back(p);
  }
  std::vector<int> shape;
  int m = 0;
  for (const auto& r : rows) {
    shape.push_back(static_cast<int>(r.size()));
    m += static_cast<int>(r.size());
  }
  mpz_class factorial = 1;
  for (int k = 2; k <= m; ++k) factorial *= k;
  mpq_class scale(mpz_class(static_cast<long>(brute_standard_count(shape))), factorial);
  scale.canonicalize();
  Poly out;
  for (const auto& tau : C) {
    for (const auto& sigma : R) out = add(out, act(compose(tau, sigma), f), scale * sign(tau));
  }
  return out;
}

Poly higher_specht(const std::vector<Grid>& T, const std::vector<Grid>& S, int n) {
  std::vector<int> exponents(static_cast<std::size_t>(n), 0);
  for (std::size_t b = 0; b < S.size(); ++b) {
    // Column reading of S's component, bottom to top, left to right.
    std::vector<int> w;
    for (std::size_t c = 0; c < S[b][0].size(); ++c)
      for (std::size_t r = S[b].size(); r-- > 0;)
        if (c < S[b][r].size()) w.push_back(S[b][r][c]);
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    std::map<int, int> position, index;
    for (std::size_t k = 0; k < w.size(); ++k) position[w[k]] = static_cast<int>(k);
    index[sorted[0]] = 0;
    for (std::size_t k = 1; k < sorted.size(); ++k)
      index[sorted[k]] = index[sorted[k - 1]] + (position[sorted[k]] < position[sorted[k - 1]] ? 1 : 0);
    for (std::size_t r = 0; r < S[b].size(); ++r)
      for (std::size_t c = 0; c < S[b][r].size(); ++c)
        exponents[static_cast<std::size_t>(T[b][r][c] - 1)] = index[S[b][r][c]];
  }
  Poly f = monomial(exponents);
  for (const auto& component : T) f = young_apply(component, n, f);
  return f;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> eliminate(Dense& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const mpq_class lead = a[row][c];
    for (auto& v : a[row]) v /= lead;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const mpq_class factor = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= factor * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Dense a) { return eliminate(a).size(); }

std::optional<std::vector<mpq_class>> solve(Dense a, std::vector<mpq_class> b) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  const auto pivots = eliminate(a);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<mpq_class> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

Poly elementary(int n, const std::vector<int>& vars, int k) {
  Poly out;
  const std::size_t m = vars.size();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (std::size_t j = 0; j < m; ++j)
      if (mask & (1u << j)) e[static_cast<std::size_t>(vars[j] - 1)] = 1;
    out[e] += 1;
  }
  return out;
}

}  // namespace oracle

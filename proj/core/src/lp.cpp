#include "qfv/lp.hpp"

#include <cstddef>

#include "qfv/errors.hpp"

namespace qfv {

namespace {

// Dense phase-one tableau. Rows are the constraints with an appended rhs
// column; artificial variables n..n+m-1 start basic. Bland's rule (smallest
// eligible index for both entering and leaving) guarantees termination.
struct Tableau {
  std::size_t m, n;                 // constraints, structural variables
  std::vector<std::vector<Rat>> t;  // m rows, n + m + 1 columns
  std::vector<std::size_t> basis;   // basic column per row
};

}  // namespace

std::optional<std::vector<Rat>> feasible_point(
    const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  if (b.size() != m)
    fail(ErrorCode::InvalidInput, "feasible_point: rhs size mismatch");
  if (m == 0) return std::vector<Rat>(n, Rat(0));

  Tableau tab{m, n, {}, {}};
  tab.t.assign(m, std::vector<Rat>(n + m + 1, Rat(0)));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n)
      fail(ErrorCode::InvalidInput, "feasible_point: ragged matrix");
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j)
      tab.t[i][j] = flip ? -a[i][j] : a[i][j];
    tab.t[i][n + i] = 1;
    tab.t[i][n + m] = flip ? -b[i] : b[i];
    tab.basis[i] = n + i;
  }

  // Phase-one objective: sum of artificial variables.
  auto reduced_cost = [&](std::size_t col) {
    Rat c = col >= n ? Rat(1) : Rat(0);
    for (std::size_t i = 0; i < m; ++i)
      if (tab.basis[i] >= n) c -= tab.t[i][col];
    return c;
  };

  for (;;) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n + m) break;  // optimal

    std::size_t leave = m;
    Rat best_ratio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.t[i][enter] <= 0) continue;
      Rat ratio = tab.t[i][n + m] / tab.t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[i] < tab.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m)
      fail(ErrorCode::InvalidInput,
           "feasible_point: unbounded phase-one objective");

    const Rat pivot = tab.t[leave][enter];
    for (auto& v : tab.t[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab.t[i][enter] == 0) continue;
      const Rat factor = tab.t[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j)
        tab.t[i][j] -= factor * tab.t[leave][j];
    }
    tab.basis[leave] = enter;
  }

  Rat objective(0);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= n) objective += tab.t[i][n + m];
  if (objective != 0) return std::nullopt;

  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) x[tab.basis[i]] = tab.t[i][n + m];
  return x;
}

std::optional<std::vector<Rat>> positive_functional(
    const std::vector<std::vector<Int>>& degrees) {
  const std::size_t n = degrees.size();
  if (n == 0) return std::vector<Rat>{};
  const std::size_t rho = degrees[0].size();

  // w = p - q with p, q >= 0 and slack s >= 0: d.p - d.q - s = 1 per degree.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * rho + n, Rat(0)));
  std::vector<Rat> b(n, Rat(1));
  for (std::size_t i = 0; i < n; ++i) {
    if (degrees[i].size() != rho)
      fail(ErrorCode::InvalidInput, "positive_functional: ragged degrees");
    for (std::size_t j = 0; j < rho; ++j) {
      a[i][j] = Rat(degrees[i][j]);
      a[i][rho + j] = -Rat(degrees[i][j]);
    }
    a[i][2 * rho + i] = -1;
  }
  auto x = feasible_point(a, b);
  if (!x) return std::nullopt;
  std::vector<Rat> w(rho);
  for (std::size_t j = 0; j < rho; ++j) {
    w[j] = (*x)[j] - (*x)[rho + j];
    w[j].canonicalize();
  }
  return w;
}

}  // namespace qfv

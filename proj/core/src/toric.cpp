#include "qfv/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "qfv/errors.hpp"
#include "qfv/lp.hpp"

namespace qfv {

std::string monomial_string(const GradedCoxData& data, const ExpVec& e) {
  std::string out;
  for (std::size_t a = 0; a < e.size(); ++a) {
    if (e[a] == 0) continue;
    if (!out.empty()) out += "*";
    out += data.vars[a];
    if (e[a] > 1) out += "^" + std::to_string(e[a]);
  }
  return out.empty() ? "1" : out;
}

GradedCoxData cox_data_of(const QuiverFlagSpec& spec) {
  spec.require_toric();
  GradedCoxData data;
  const int rho = spec.rho();
  for (std::size_t k = 0; k < spec.quiver().arrows.size(); ++k) {
    data.vars.push_back("y" + std::to_string(k + 1));
    const auto& a = spec.quiver().arrows[k];
    std::vector<Int> d(rho, Int(0));
    if (a.head >= 1) d[a.head - 1] = 1;
    if (a.tail >= 1) d[a.tail - 1] = -1;
    data.degrees.push_back(std::move(d));
  }
  return data;
}

namespace {

// Exact dot product of a rational functional with an integer vector.
Rat dot(const std::vector<Rat>& w, const std::vector<Int>& v) {
  Rat out(0);
  for (std::size_t i = 0; i < w.size(); ++i) out += w[i] * Rat(v[i]);
  return out;
}

std::vector<Rat> pointed_functional(const GradedCoxData& data) {
  auto w = positive_functional(data.degrees);
  if (!w)
    fail(ErrorCode::NotPointed,
         "the positive span of the variable degrees contains a line");
  return *w;
}

std::vector<Int> subtract(const std::vector<Int>& a,
                          const std::vector<Int>& b) {
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

std::vector<ExpVec> monomials_of_degree(const GradedCoxData& data,
                                        const std::vector<Int>& degree) {
  const int n = (int)data.degrees.size();
  const int rho = data.degrees.empty() ? (int)degree.size() : data.rho();
  if ((int)degree.size() != rho)
    fail(ErrorCode::LengthMismatch, "degree length must match the grading");
  for (const auto& d : data.degrees)
    if ((int)d.size() != rho)
      fail(ErrorCode::InvalidInput, "ragged degree table");

  // A strictly positive functional w (w . d_a >= 1) bounds every exponent:
  // sum of exponents is at most w . degree, so the search tree is finite.
  const auto w = pointed_functional(data);

  std::vector<ExpVec> out;
  ExpVec current(n, 0);
  std::vector<Int> residual = degree;

  std::function<void(int, Rat)> walk = [&](int a, Rat budget) {
    if (a == n) {
      for (const auto& v : residual)
        if (v != 0) return;
      out.push_back(current);
      return;
    }
    const Rat price = dot(w, data.degrees[a]);
    long cap = floor_long(budget / price);
    if (cap < 0) cap = 0;
    // Descending exponent gives descending lexicographic output order.
    for (long e = cap; e >= 0; --e) {
      current[a] = e;
      for (int i = 0; i < rho; ++i) residual[i] -= Int(e) * data.degrees[a][i];
      walk(a + 1, budget - Rat(e) * price);
      for (int i = 0; i < rho; ++i) residual[i] += Int(e) * data.degrees[a][i];
      current[a] = 0;
    }
  };

  // Any monomial of this degree satisfies w . degree = sum e_a (w . d_a) >= 0.
  Rat budget = dot(w, degree);
  if (budget < 0) return {};
  walk(0, budget);
  return out;
}

bool weakly_exceptional_check(const GradedCoxData& data,
                              const std::vector<std::vector<Int>>& deltas) {
  for (std::size_t j = 1; j < deltas.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!monomials_of_degree(data, subtract(deltas[i], deltas[j])).empty())
        return false;
  return true;
}

SectionQuiver quiver_of_sections(const GradedCoxData& data,
                                 const std::vector<std::vector<Int>>& deltas) {
  if (deltas.empty())
    fail(ErrorCode::InvalidInput, "quiver_of_sections: empty degree list");
  for (const auto& d : deltas)
    if ((int)d.size() != data.rho())
      fail(ErrorCode::LengthMismatch, "degree list entry of wrong length");
  for (const auto& v : deltas[0])
    if (v != 0)
      fail(ErrorCode::InvalidInput,
           "quiver_of_sections: the first degree must be zero");
  if (!weakly_exceptional_check(data, deltas))
    fail(ErrorCode::NotWeaklyExceptional,
         "some backward degree difference has sections");

  const int n = (int)deltas.size();
  SectionQuiver sq;
  sq.base = data;
  sq.deltas = deltas;
  sq.quiver.vertices = n;

  // Sections of every forward difference, computed once per ordered pair.
  std::vector<std::vector<std::vector<ExpVec>>> mono(
      n, std::vector<std::vector<ExpVec>>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (k != i)
        mono[i][k] =
            monomials_of_degree(data, subtract(deltas[k], deltas[i]));

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (const auto& m : mono[i][j]) {
        // m factors through vertex k when some section of delta_k - delta_i
        // divides it; the quotient is then a section of delta_j - delta_k.
        bool reducible = false;
        for (int k = 0; k < n && !reducible; ++k) {
          if (k == i || k == j) continue;
          for (const auto& m1 : mono[i][k]) {
            bool divides = true;
            for (std::size_t v = 0; v < m.size(); ++v)
              if (m1[v] > m[v]) {
                divides = false;
                break;
              }
            if (divides) {
              reducible = true;
              break;
            }
          }
        }
        if (!reducible) {
          sq.quiver.arrows.push_back({i, j});
          sq.labels.push_back(m);
        }
      }
    }
  }

  // Validation guarantees the section quiver is a legal input downstream
  // (unique source 0, all vertices reachable); labels are already canonical
  // because arrows go only from lower to higher index.
  validate(sq.quiver);
  return sq;
}

std::vector<Binomial> kernel_binomials(const SectionQuiver& sq,
                                       int length_bound) {
  if (length_bound < 1)
    fail(ErrorCode::InvalidInput, "kernel_binomials: bound must be >= 1");
  const int n = sq.quiver.vertices;
  const int nvars = (int)sq.base.vars.size();

  std::vector<std::vector<int>> out_arrows(n);
  for (int k = 0; k < (int)sq.quiver.arrows.size(); ++k)
    out_arrows[sq.quiver.arrows[k].tail].push_back(k);

  // Paths grouped by (start, end, label product); map order makes the
  // output deterministic.
  std::map<std::tuple<int, int, ExpVec>, std::vector<std::vector<int>>> groups;

  std::vector<int> path;
  ExpVec label(nvars, 0);
  std::function<void(int, int)> dfs = [&](int start, int at) {
    if (!path.empty()) {
      std::vector<int> one_based(path.size());
      for (std::size_t t = 0; t < path.size(); ++t) one_based[t] = path[t] + 1;
      groups[{start, at, label}].push_back(one_based);
    }
    if ((int)path.size() == length_bound) return;
    for (int k : out_arrows[at]) {
      path.push_back(k);
      for (int v = 0; v < nvars; ++v) label[v] += sq.labels[k][v];
      dfs(start, sq.quiver.arrows[k].head);
      for (int v = 0; v < nvars; ++v) label[v] -= sq.labels[k][v];
      path.pop_back();
    }
  };
  for (int v = 0; v < n; ++v) dfs(v, v);

  std::vector<Binomial> out;
  for (const auto& [key, paths] : groups) {
    if (paths.size() < 2) continue;
    auto sorted = paths;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t a = 0; a < sorted.size(); ++a)
      for (std::size_t b = a + 1; b < sorted.size(); ++b)
        out.push_back({sorted[a], sorted[b], std::get<2>(key)});
  }
  return out;
}

bool multiplication_surjective(const GradedCoxData& data,
                               const std::vector<std::vector<Int>>& deltas) {
  if (deltas.empty())
    fail(ErrorCode::InvalidInput, "multiplication_surjective: empty list");
  std::vector<Int> total(data.rho(), Int(0));
  for (const auto& d : deltas) {
    if ((int)d.size() != data.rho())
      fail(ErrorCode::LengthMismatch, "degree list entry of wrong length");
    for (int i = 0; i < data.rho(); ++i) total[i] += d[i];
  }

  const auto target = monomials_of_degree(data, total);
  std::set<ExpVec> products{ExpVec(data.vars.size(), 0)};
  for (const auto& d : deltas) {
    std::set<ExpVec> next;
    for (const auto& m : monomials_of_degree(data, d))
      for (const auto& p : products) {
        ExpVec sum = p;
        for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += m[v];
        next.insert(std::move(sum));
      }
    products = std::move(next);
  }
  // Every product has the total degree, so set sizes decide surjectivity.
  return products.size() == target.size();
}

std::vector<std::vector<Int>> toric_tilting_lines(const QuiverFlagSpec& spec) {
  spec.require_toric();
  spec.require_strict();
  std::vector<std::vector<Int>> out;
  std::vector<Int> theta(spec.rho(), Int(0));
  std::function<void(int)> walk = [&](int i) {
    if (i > spec.rho()) {
      out.push_back(theta);
      return;
    }
    for (int v = 0; v < spec.s()[i]; ++v) {
      theta[i - 1] = v;
      walk(i + 1);
    }
  };
  walk(1);
  return out;
}

std::vector<std::vector<int>> pivot_charts(const QuiverFlagSpec& spec) {
  spec.require_toric();
  std::vector<std::vector<int>> out;
  std::vector<int> pick(spec.rho(), 0);
  std::function<void(int)> walk = [&](int i) {
    if (i > spec.rho()) {
      out.push_back(pick);
      return;
    }
    for (int k : spec.arrows_into(i)) {
      pick[i - 1] = k + 1;
      walk(i + 1);
    }
  };
  walk(1);
  return out;
}

}  // namespace qfv

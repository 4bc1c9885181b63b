#include "qfv/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "qfv/errors.hpp"

namespace qfv {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

Partition trim(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Weight pad(const Partition& p, int n) {
  if ((int)p.size() > n)
    fail(ErrorCode::InvalidInput, "pad: partition longer than target length");
  Weight w = p;
  w.resize(n, 0);
  return w;
}

std::vector<Partition> enumerate_young(int k, int r) {
  if (k < 0 || r < 0)
    fail(ErrorCode::InvalidInput, "enumerate_young: negative box");
  std::vector<Partition> out;
  Partition current;
  // Emitting each prefix before its extensions yields lexicographic order on
  // part sequences: (), (1), (1,1), (2), (2,1), (2,2) for a 2 x 2 box.
  std::function<void(int)> walk = [&](int max_part) {
    out.push_back(current);
    if ((int)current.size() == r) return;
    for (int part = 1; part <= max_part; ++part) {
      current.push_back(part);
      walk(part);
      current.pop_back();
    }
  };
  walk(k);
  return out;
}

namespace {

// Counts or enumerates lattice skew tableaux of shape nu/lambda with content
// bounded by mu (exactly mu when exact_content). Cells are filled in reverse
// reading order (each row right to left, rows top to bottom), which makes
// the lattice-word condition checkable as the filling grows: a value v may
// be placed only while strictly more v-1 than v labels have been placed.
struct SkewFiller {
  const Partition& nu;
  Weight lambda_padded;
  const Partition& mu;
  int max_label;

  std::vector<int> count;            // labels placed so far, per value
  std::vector<std::vector<int>> t;   // tableau values, 0 = unfilled
  Int tableaux = 0;

  // Visit callback for content enumeration (sum_decompose); may be empty.
  std::function<void(const std::vector<int>&)> on_complete;

  SkewFiller(const Partition& nu_, const Partition& lambda_,
             const Partition& mu_, int labels)
      : nu(nu_), mu(mu_), max_label(labels) {
    lambda_padded = lambda_;
    lambda_padded.resize(nu.size(), 0);
    count.assign(max_label + 1, 0);
    t.resize(nu.size());
    for (std::size_t r = 0; r < nu.size(); ++r) t[r].assign(nu[r], 0);
  }

  int mu_at(int v) const {
    return (v - 1 < (int)mu.size()) ? mu[v - 1] : 0;
  }

  void run() {
    fill(0, nu.empty() ? -1 : nu[0] - 1);
  }

  void fill(int row, int col) {
    // Advance to the next cell in reverse reading order, skipping the lambda
    // part of each row.
    while (row < (int)nu.size() && col < lambda_padded[row]) {
      ++row;
      col = row < (int)nu.size() ? nu[row] - 1 : -1;
    }
    if (row >= (int)nu.size()) {
      complete();
      return;
    }

    // The cell above is filled unless it lies in the lambda region (then the
    // column has no earlier entry and no vertical bound applies).
    const int above =
        (row > 0 && col >= lambda_padded[row - 1]) ? t[row - 1][col] : 0;
    const int lower_v = above <= 0 ? 1 : above + 1;
    const int right_v = (col + 1 < (int)t[row].size()) ? t[row][col + 1]
                                                       : max_label;

    for (int v = lower_v; v <= std::min(right_v, max_label); ++v) {
      if (mu_bound_exceeded(v)) continue;
      if (v > 1 && count[v - 1] <= count[v]) continue;  // lattice condition
      t[row][col] = v;
      ++count[v];
      int nrow = row, ncol = col - 1;
      if (ncol < 0 || ncol < lambda_padded[row]) {
        nrow = row + 1;
        ncol = nrow < (int)nu.size() ? nu[nrow] - 1 : -1;
      }
      fill(nrow, ncol);
      --count[v];
      t[row][col] = 0;
    }
  }

  bool mu_bound_exceeded(int v) const {
    if (!bound_by_mu) return false;
    return count[v] + 1 > mu_at(v);
  }
  bool bound_by_mu = true;

  void complete() {
    if (bound_by_mu) {
      for (int v = 1; v <= max_label; ++v)
        if (count[v] != mu_at(v)) return;
    }
    ++tableaux;
    if (on_complete) on_complete(count);
  }
};

bool contains(const Partition& inner, const Partition& outer) {
  // inner subset of outer as Young diagrams.
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (i >= outer.size() || inner[i] > outer[i]) return false;
  return true;
}

Int total(const Partition& p) {
  Int t(0);
  for (int x : p) t += x;
  return t;
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu) {
  Partition l = trim(lambda), m = trim(mu), n = trim(nu);
  if (!is_partition(l) || !is_partition(m) || !is_partition(n))
    fail(ErrorCode::InvalidInput, "lr_coefficient: not partitions");
  if (!contains(l, n)) return 0;
  if (total(l) + total(m) != total(n)) return 0;
  if (m.empty()) return 1;  // nu == lambda at this point
  SkewFiller filler(n, l, m, (int)m.size());
  filler.run();
  return filler.tableaux;
}

std::map<Partition, Int> tensor_decompose(const Partition& lambda,
                                          const Partition& mu, int r) {
  Partition l = trim(lambda), m = trim(mu);
  if (!is_partition(l) || !is_partition(m))
    fail(ErrorCode::InvalidInput, "tensor_decompose: not partitions");
  if (r < 0) fail(ErrorCode::InvalidInput, "tensor_decompose: negative rank");
  std::map<Partition, Int> out;
  if ((int)l.size() > r || (int)m.size() > r) return out;

  // Enumerate candidate nu containing lambda with |nu| = |lambda| + |mu|,
  // at most r parts and nu_1 <= lambda_1 + mu_1; the LR count discards the
  // impossible ones.
  const long extra = total(m).get_si();
  const int max_rows = std::min<int>(r, (int)l.size() + (int)m.size());
  const int top = (l.empty() ? 0 : l[0]) + (m.empty() ? 0 : m[0]);
  Partition nu;
  std::function<void(int, long)> walk = [&](int row, long remaining) {
    if (row == max_rows || (row >= (int)l.size() && remaining == 0)) {
      if (remaining != 0) return;
      Int c = lr_coefficient(l, m, nu);
      if (c != 0) out[trim(nu)] += c;
      return;
    }
    const int floor_len = row < (int)l.size() ? l[row] : 0;
    const int cap_prev = row == 0 ? top : nu[row - 1];
    for (int len = floor_len; len <= cap_prev; ++len) {
      if (len - floor_len > remaining) break;
      nu.push_back(len);
      walk(row + 1, remaining - (len - floor_len));
      nu.pop_back();
    }
  };
  walk(0, extra);
  return out;
}

std::map<std::pair<Partition, Partition>, Int> sum_decompose(
    const Partition& nu, int r1, int r2) {
  Partition n = trim(nu);
  if (!is_partition(n))
    fail(ErrorCode::InvalidInput, "sum_decompose: not a partition");
  if (r1 < 0 || r2 < 0)
    fail(ErrorCode::InvalidInput, "sum_decompose: negative rank");
  std::map<std::pair<Partition, Partition>, Int> out;
  if ((int)n.size() > r1 + r2) return out;

  // For each sub-diagram lambda with at most r1 rows, every lattice filling
  // of nu/lambda with at most r2 labels contributes its content mu once.
  Partition lambda;
  std::function<void(int)> sub = [&](int row) {
    if (row == (int)n.size() || (int)lambda.size() == std::min<int>(r1, n.size())) {
      Partition l = trim(lambda);
      // The rows of nu below r1 must be fully covered by mu's filling, which
      // the filler enforces via column strictness automatically.
      Partition empty_mu;
      SkewFiller filler(n, l, empty_mu, r2);
      filler.bound_by_mu = false;
      filler.on_complete = [&](const std::vector<int>& cnt) {
        Partition mu;
        for (int v = 1; v <= r2; ++v)
          if (cnt[v] > 0) mu.push_back(cnt[v]);
        // Contents of lattice fillings are weakly decreasing, hence
        // partitions already.
        out[{l, mu}] += 1;
      };
      filler.run();
      return;
    }
    const int cap = row == 0 ? n[0] : lambda[row - 1];
    for (int len = std::min(cap, n[row]); len >= 0; --len) {
      if (len == 0) {
        sub((int)n.size());  // stop extending; lambda ends here
        return;
      }
      lambda.push_back(len);
      sub(row + 1);
      lambda.pop_back();
    }
  };
  sub(0);
  return out;
}

Weight dual_weight(const Weight& w) {
  Weight out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

std::pair<Weight, int> normalize(const Weight& w) {
  if (w.empty()) return {w, 0};
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1])
      fail(ErrorCode::InvalidInput, "normalize: weight not dominant");
  int m = std::max(0, -w.back());
  Weight p = w;
  for (int& x : p) x += m;
  return {p, m};
}

Int gl_dimension(const Partition& lambda, int n) {
  Partition l = trim(lambda);
  if (!is_partition(l))
    fail(ErrorCode::InvalidInput, "gl_dimension: not a partition");
  if (n < 0) fail(ErrorCode::InvalidInput, "gl_dimension: negative rank");
  if ((int)l.size() > n) return 0;
  // Hook content formula: product over cells of (n + j - i) / hook(i, j).
  Partition conj((std::size_t)(l.empty() ? 0 : l[0]), 0);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (int j = 0; j < l[i]; ++j) ++conj[j];
  Int num(1), den(1);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (int j = 0; j < l[i]; ++j) {
      num *= n + j - (int)i;
      const int hook = (l[i] - j) + (conj[j] - (int)i) - 1;
      den *= hook;
    }
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int gl_dimension_weight(const Weight& w, int n) {
  auto [p, m] = normalize(w);
  (void)m;  // a determinant twist has dimension one
  return gl_dimension(trim(p), n);
}

}  // namespace qfv

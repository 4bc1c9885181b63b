#include <doctest.h>

#include <map>
#include <vector>

#include "qfv/partitions.hpp"

using namespace qfv;

namespace {

// Independent oracle: the Schur polynomial s_lambda(x_1..x_n) as an exact
// sparse polynomial, built by direct semistandard-tableau enumeration.
using Poly = std::map<std::vector<int>, Int>;

void fill_ssyt(const Partition& shape, std::vector<std::vector<int>>& t,
               int row, int col, int n, Poly& out) {
  if (row == (int)shape.size()) {
    std::vector<int> exp(n, 0);
    for (const auto& r : t)
      for (int v : r) exp[v - 1] += 1;
    out[exp] += 1;
    return;
  }
  if (col == shape[row]) {
    fill_ssyt(shape, t, row + 1, 0, n, out);
    return;
  }
  const int left = col > 0 ? t[row][col - 1] : 1;
  const int above = row > 0 && col < shape[row - 1] ? t[row - 1][col] + 1 : 1;
  for (int v = std::max(left, above); v <= n; ++v) {
    t[row][col] = v;
    fill_ssyt(shape, t, row, col + 1, n, out);
  }
}

Poly schur_poly(const Partition& shape, int n) {
  Poly out;
  if ((int)shape.size() > n) return out;
  std::vector<std::vector<int>> t;
  for (int len : shape) t.push_back(std::vector<int>(len, 0));
  fill_ssyt(shape, t, 0, 0, n, out);
  return out;
}

Poly poly_mult(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// Expands a symmetric polynomial in the Schur basis by peeling the
// lexicographically greatest exponent, which is always a partition.
std::map<Partition, Int> schur_expand(Poly p, int n) {
  std::map<Partition, Int> out;
  for (auto it = p.begin(); it != p.end();) {
    if (it->second == 0)
      it = p.erase(it);
    else
      ++it;
  }
  while (!p.empty()) {
    const auto lead = p.rbegin();
    Partition shape = trim(lead->first);
    REQUIRE(is_partition(shape));
    const Int c = lead->second;
    out[shape] = c;
    for (const auto& [e, coeff] : schur_poly(shape, n)) {
      p[e] -= c * coeff;
      if (p[e] == 0) p.erase(e);
    }
  }
  return out;
}

Int dim_ssyt(const Partition& shape, int n) {
  Int total = 0;
  for (const auto& [e, c] : schur_poly(shape, n)) total += c;
  return total;
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("partition predicates and padding") {
    CHECK(is_partition({3, 2, 2}));
    CHECK(is_partition({}));
    CHECK_FALSE(is_partition({2, 3}));
    CHECK_FALSE(is_partition({1, -1}));
    CHECK(trim({2, 1, 0, 0}) == Partition{2, 1});
    CHECK(pad({2, 1}, 4) == Weight{2, 1, 0, 0});
  }

  TEST_CASE("enumerate_young lists box partitions in lex order") {
    auto all = enumerate_young(2, 2);
    std::vector<Partition> want = {{}, {1}, {1, 1}, {2}, {2, 1}, {2, 2}};
    CHECK(all == want);
    for (int k = 0; k <= 4; ++k)
      for (int r = 0; r <= 4; ++r)
        CHECK(Int((long)enumerate_young(k, r).size()) == binomial(k + r, r));
  }

  TEST_CASE("frozen Littlewood-Richardson values") {
    CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    CHECK(lr_coefficient({1}, {1}, {2}) == 1);
    CHECK(lr_coefficient({1}, {1}, {1, 1}) == 1);
    CHECK(lr_coefficient({2}, {1, 1}, {2, 1, 1}) == 1);
    CHECK(lr_coefficient({2}, {1, 1}, {3, 1}) == 1);
    CHECK(lr_coefficient({2}, {1, 1}, {2, 2}) == 0);
    CHECK(lr_coefficient({}, {3, 1}, {3, 1}) == 1);
    CHECK(lr_coefficient({3, 1}, {}, {3, 1}) == 1);
    CHECK(lr_coefficient({1}, {1}, {3}) == 0);
  }

  TEST_CASE("Pieri rule: multiplying by a single box") {
    for (const auto& lambda : enumerate_young(3, 3)) {
      auto dec = tensor_decompose(lambda, {1}, 4);
      for (const auto& [nu, c] : dec) {
        CHECK(c == 1);
        // nu is lambda plus one box.
        int extra = 0;
        for (int v : nu) extra += v;
        for (int v : lambda) extra -= v;
        CHECK(extra == 1);
      }
    }
  }

  TEST_CASE("tensor products match the Schur polynomial oracle") {
    const int n = 8;
    std::vector<Partition> shapes;
    for (int size = 0; size <= 4; ++size)
      for (const auto& p : enumerate_young(4, 4)) {
        int total = 0;
        for (int v : p) total += v;
        if (total == size) shapes.push_back(p);
      }
    for (const auto& lambda : shapes)
      for (const auto& mu : shapes) {
        auto oracle =
            schur_expand(poly_mult(schur_poly(lambda, n), schur_poly(mu, n)), n);
        auto engine = tensor_decompose(lambda, mu, n);
        CHECK(engine == oracle);
      }
  }

  TEST_CASE("tensor product frozen values and symmetry") {
    auto d = tensor_decompose({1, 1}, {1, 1}, 2);
    REQUIRE(d.size() == 1);
    CHECK(d.at({2, 2}) == 1);

    for (const auto& lambda : enumerate_young(2, 2))
      for (const auto& mu : enumerate_young(2, 2))
        CHECK(tensor_decompose(lambda, mu, 6) ==
              tensor_decompose(mu, lambda, 6));
  }

  TEST_CASE("tensor decomposition respects GL(r) dimensions") {
    for (const auto& lambda : enumerate_young(3, 2))
      for (const auto& mu : enumerate_young(2, 3))
        for (int r = 1; r <= 4; ++r) {
          Int lhs = gl_dimension(lambda, r) * gl_dimension(mu, r);
          Int rhs = 0;
          for (const auto& [nu, c] : tensor_decompose(lambda, mu, r))
            rhs += c * gl_dimension(nu, r);
          CHECK(lhs == rhs);
        }
  }

  TEST_CASE("sum decomposition respects GL(r1+r2) dimensions") {
    const std::vector<std::pair<int, int>> ranks = {
        {1, 1}, {1, 2}, {2, 2}, {2, 3}};
    for (const auto& nu : enumerate_young(3, 3)) {
      for (auto [r1, r2] : ranks) {
        Int lhs = gl_dimension(nu, r1 + r2);
        Int rhs = 0;
        for (const auto& [pair, c] : sum_decompose(nu, r1, r2))
          rhs += c * gl_dimension(pair.first, r1) *
                 gl_dimension(pair.second, r2);
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("sum decomposition of the exterior square") {
    // S^(1,1)(A + B) = Lambda^2 A + A tensor B + Lambda^2 B.
    auto d = sum_decompose({1, 1}, 2, 2);
    REQUIRE(d.size() == 3);
    CHECK(d.at({Partition{1, 1}, Partition{}}) == 1);
    CHECK(d.at({Partition{1}, Partition{1}}) == 1);
    CHECK(d.at({Partition{}, Partition{1, 1}}) == 1);
  }

  TEST_CASE("dual weights and normalization") {
    CHECK(dual_weight({2, 0, -1}) == Weight{1, 0, -2});
    CHECK(dual_weight(dual_weight({3, 1, 0})) == Weight{3, 1, 0});

    auto [p1, m1] = normalize({2, 1});
    CHECK(p1 == Weight{2, 1});
    CHECK(m1 == 0);
    auto [p2, m2] = normalize({1, -2});
    CHECK(p2 == Weight{3, 0});
    CHECK(m2 == 2);
    // Round trip: p - m * (1,..,1) gives back the weight.
    Weight w = {0, -1, -3};
    auto [p, m] = normalize(w);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(p[i] - m == w[i]);
  }

  TEST_CASE("gl dimensions match tableau counting") {
    CHECK(gl_dimension({2, 1}, 3) == 8);
    CHECK(gl_dimension({}, 5) == 1);
    CHECK(gl_dimension({1, 1, 1}, 2) == 0);
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : enumerate_young(3, 4))
        CHECK(gl_dimension(p, n) == dim_ssyt(p, n));
  }

  TEST_CASE("gl dimension of a dominant weight ignores the det twist") {
    CHECK(gl_dimension_weight({1, -1}, 2) == gl_dimension({2}, 2));
    CHECK(gl_dimension_weight({0, 0, 0}, 3) == 1);
    CHECK(gl_dimension_weight({-1, -1}, 4) == gl_dimension({}, 4));
    CHECK(gl_dimension_weight({2, 1, -1}, 3) == gl_dimension({3, 2}, 3));
  }
}

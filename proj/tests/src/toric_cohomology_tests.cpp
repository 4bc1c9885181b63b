#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>

#include "helpers.hpp"
#include "qfv/errors.hpp"
#include "qfv/toric.hpp"
#include "qfv/toric_cohomology.hpp"

using namespace qfv;
using namespace qfv_tests;

namespace {

QuiverFlagSpec projective(int n) {
  std::vector<std::pair<int, int>> arrows(n, {0, 1});
  return make_spec(2, arrows, {1, 1});
}

// P^1 x P^1 as a trivial line-bundle projectivization: the quiver degree
// (t1, t2) is the product degree (t1 + t2, t2).
QuiverFlagSpec two_lines() {
  return make_spec(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}}, {1, 1, 1});
}

long h_line(long d, int k) {
  if (k == 0) return d >= 0 ? d + 1 : 0;
  if (k == 1) return d <= -2 ? -d - 1 : 0;
  return 0;
}

// Closed form for the induced subcomplex on z: the in-arrow sets partition
// the ground set, so the subcomplex is a join of per-vertex pieces. A
// nonempty incomplete piece is a full simplex (kills everything); each
// complete piece is a sphere contributing s_i - 1 to the slot.
std::vector<Int> induced_closed_form(const IrrelevantComplex& c,
                                     std::uint64_t z) {
  std::vector<Int> out(std::popcount(z) + 1, Int(0));
  int slot = 0;
  for (auto m : c.in_masks) {
    const std::uint64_t g = z & m;
    if (g == m)
      slot += std::popcount(m) - 1;
    else if (g != 0)
      return out;
  }
  out[slot] = 1;
  return out;
}

std::vector<Int> theta_of(const std::vector<long>& v) {
  std::vector<Int> out;
  for (long x : v) out.push_back(Int(x));
  return out;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_SUITE("toric-cohomology") {
  TEST_CASE("irrelevant complex facets complement the pivot charts") {
    auto pb = proj_bundle();
    auto c = irrelevant_complex(pb);
    CHECK(c.ground == 5);
    CHECK(c.in_masks == std::vector<std::uint64_t>{0b00011, 0b11100});

    const std::uint64_t all = 0b11111;
    for (const auto& chart : pivot_charts(pb)) {
      std::uint64_t picked = 0;
      for (int a : chart) picked |= 1ull << (a - 1);
      CHECK(c.is_face(all & ~picked));
      // Restoring either picked arrow completes an in-arrow set.
      for (int a : chart) CHECK_FALSE(c.is_face((all & ~picked) | (1ull << (a - 1))));
    }
  }

  TEST_CASE("reduced cohomology of spheres, cones and joins") {
    auto c = irrelevant_complex(proj_bundle());
    // Two points.
    CHECK(reduced_cohomology(c, 0b00011) == std::vector<Int>{0, 1, 0});
    // The boundary of a triangle is a circle.
    CHECK(reduced_cohomology(c, 0b11100) == std::vector<Int>{0, 0, 1, 0});
    // Join of the two: a 2-sphere.
    CHECK(reduced_cohomology(c, 0b11111) ==
          std::vector<Int>{0, 0, 0, 1, 0, 0});
    // Only the empty face.
    CHECK(reduced_cohomology(c, 0) == std::vector<Int>{1});
    // A single vertex and a cone are acyclic.
    CHECK(reduced_cohomology(c, 0b00001) == std::vector<Int>{0, 0});
    CHECK(reduced_cohomology(c, 0b00111) == std::vector<Int>{0, 0, 0, 0});
  }

  TEST_CASE("boundary ranks agree with the join closed form everywhere") {
    for (const auto& spec : {proj_bundle(), tower(), two_lines()}) {
      auto c = irrelevant_complex(spec);
      for (std::uint64_t z = 0; z < (1ull << c.ground); ++z)
        CHECK(reduced_cohomology(c, z) == induced_closed_form(c, z));
    }
  }

  TEST_CASE("degree lattice of the reference threefold") {
    auto pb = proj_bundle();
    auto lat = degree_lattice(pb);
    CHECK(lat.arrows == 5);
    CHECK(lat.rank == 3);
    CHECK(lat.tree_arrow == std::vector<int>{-1, 0, 2});
    std::vector<std::vector<long>> basis = {
        {-1, 1, 0, 0, 0}, {1, 0, -1, 1, 0}, {1, 0, -1, 0, 1}};
    CHECK(lat.basis == basis);
    CHECK(lat.lift(pb, {5, 7}) == std::vector<long>{5, 0, 7, 0, 0});
  }

  TEST_CASE("cycles have degree zero and lifts have the requested degree") {
    for (const auto& spec : {proj_bundle(), tower(), two_lines()}) {
      auto lat = degree_lattice(spec);
      auto cox = cox_data_of(spec);
      CHECK(lat.rank == (int)cox.vars.size() - spec.rho());
      for (const auto& cycle : lat.basis) {
        for (long e : cycle) {
          CHECK(e >= -1);
          CHECK(e <= 1);
        }
        for (int i = 0; i < spec.rho(); ++i) {
          Int sum(0);
          for (int a = 0; a < lat.arrows; ++a)
            sum += Int(cycle[a]) * cox.degrees[a][i];
          CHECK(sum == 0);
        }
      }

      std::vector<Int> theta;
      for (int i = 1; i <= spec.rho(); ++i) theta.push_back(Int(3 - 2 * i));
      auto u = lat.lift(spec, theta);
      for (int i = 0; i < spec.rho(); ++i) {
        Int sum(0);
        for (int a = 0; a < lat.arrows; ++a)
          sum += Int(u[a]) * cox.degrees[a][i];
        CHECK(sum == theta[i]);
      }
    }
  }

  TEST_CASE("projective space grid") {
    auto p4 = projective(5);
    for (long d = -9; d <= 4; ++d) {
      auto res = cohomology_dims(p4, {Int(d)}, {12, 1});
      REQUIRE(res.h.size() == 5);
      CHECK(res.stabilized);
      CHECK(res.h[0] == (d >= 0 ? binomial(d + 4, 4) : Int(0)));
      CHECK(res.h[1] == 0);
      CHECK(res.h[2] == 0);
      CHECK(res.h[3] == 0);
      CHECK(res.h[4] == (d <= -5 ? binomial(-d - 1, 4) : Int(0)));
    }
  }

  TEST_CASE("product of two lines matches the Kuenneth grid") {
    auto x = two_lines();
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b) {
        auto res = cohomology_dims(x, theta_of({a - b, b}), {12, 1});
        REQUIRE(res.h.size() == 3);
        CHECK(res.stabilized);
        for (int k = 0; k <= 2; ++k) {
          long want = 0;
          for (int p = 0; p <= k; ++p)
            want += h_line(a, p) * h_line(b, k - p);
          CHECK(res.h[k] == want);
        }
      }
  }

  TEST_CASE("threefold grid matches the direct image formula") {
    auto pb = proj_bundle();
    // h^k(t1, t2) for t2 >= 0 pushes down to the base line as
    // sum_j (j+1) h^k(P^1, t1 + j); t2 = -1, -2 vanish entirely; lower t2
    // follows by duality against the canonical degree (0, -3).
    auto expected = [&](long t1, long t2, int k) -> long {
      if (t2 >= 0) {
        if (k > 1) return 0;
        long total = 0;
        for (long j = 0; j <= t2; ++j)
          total += (j + 1) * h_line(t1 + j, k);
        return total;
      }
      if (t2 >= -2) return 0;
      long dual = 0;
      const long s1 = -t1, s2 = -3 - t2;
      for (long j = 0; j <= s2; ++j) dual += (j + 1) * h_line(s1 + j, 3 - k);
      return dual;
    };
    for (long t1 = -5; t1 <= 5; ++t1)
      for (long t2 = -6; t2 <= 3; ++t2) {
        auto res = cohomology_dims(pb, theta_of({t1, t2}), {16, 1});
        REQUIRE(res.h.size() == 4);
        CHECK(res.stabilized);
        for (int k = 0; k <= 3; ++k) CHECK(res.h[k] == expected(t1, t2, k));
      }
  }

  TEST_CASE("frozen spot values on the threefold") {
    auto pb = proj_bundle();
    auto res = cohomology_dims(pb, theta_of({0, -3}));
    CHECK(res.stabilized);
    CHECK(res.h == std::vector<Int>{0, 0, 0, 1});
    auto res2 = cohomology_dims(pb, theta_of({1, 0}));
    CHECK(res2.h == std::vector<Int>{2, 0, 0, 0});
  }

  TEST_CASE("frozen spot values on the seven dimensional tower") {
    auto tw = tower();
    CohomologyOptions opts{6, 1};
    struct Spot {
      std::vector<long> theta;
      int k;
    };
    for (const auto& spot : {Spot{{0, 0, 0}, 0}, Spot{{-2, 0, 0}, 1},
                             Spot{{1, 2, -3}, 2}, Spot{{4, -5, 0}, 4},
                             Spot{{3, -3, -3}, 7}}) {
      auto res = cohomology_dims(tw, theta_of(spot.theta), opts);
      REQUIRE(res.h.size() == 8);
      CHECK(res.stabilized);
      CHECK(res.h[spot.k] == 1);
    }
  }

  TEST_CASE("duality of shifted scans") {
    auto pb = proj_bundle();
    CohomologyOptions opts{16, 1};
    for (const auto& theta :
         {std::vector<long>{1, 1}, {0, -3}, {-1, 2}, {2, -4}, {0, 0}})
      CHECK(serre_dual_check(pb, theta_of(theta), opts));
    CHECK(serre_dual_check(tower(), theta_of({0, 0, 0}), {6, 2}));
  }

  TEST_CASE("vanishing region membership and its consequence") {
    auto tw = tower();  // s = (2, 5, 3)
    CHECK(vanishing_region_check(tw, theta_of({-1, -4, -2})));
    CHECK_FALSE(vanishing_region_check(tw, theta_of({-2, -4, -2})));
    CHECK_FALSE(vanishing_region_check(tw, theta_of({-1, -5, -2})));
    CHECK_FALSE(vanishing_region_check(tw, theta_of({-1, -4, -3})));

    auto pb = proj_bundle();
    auto cox = cox_data_of(pb);
    for (const auto& theta :
         {std::vector<long>{-1, 2}, {0, 0}, {3, 1}, {-1, -2}, {2, -2}}) {
      REQUIRE(vanishing_region_check(pb, theta_of(theta)));
      auto res = cohomology_dims(pb, theta_of(theta), {16, 1});
      CHECK(res.stabilized);
      std::vector<Int> deg = theta_of(theta);
      CHECK(res.h[0] == Int((long)monomials_of_degree(cox, deg).size()));
      for (std::size_t k = 1; k < res.h.size(); ++k) CHECK(res.h[k] == 0);
    }
  }

  TEST_CASE("rank zero lattices stabilize immediately") {
    auto chain = make_spec(3, {{0, 1}, {1, 2}}, {1, 1, 1});  // a point
    for (const auto& theta :
         {std::vector<long>{0, 0}, {-1, -1}, {5, 2}, {0, -1}}) {
      auto res = cohomology_dims(chain, theta_of(theta), {0, 1});
      CHECK(res.stabilized);
      CHECK(res.h == std::vector<Int>{1});
    }
  }

  TEST_CASE("a zero radius cannot certify completeness") {
    auto pb = proj_bundle();
    auto res = cohomology_dims(pb, theta_of({0, 0}), {0, 1});
    CHECK_FALSE(res.stabilized);
    CHECK(res.radius_used == 0);
    CHECK(res.h[0] == 1);  // the lift itself is effective

    CHECK(cone_spot_check(pb, theta_of({0, 0}), 0, {0, 1}));
    CHECK(code_of([&] { cone_spot_check(pb, theta_of({0, 0}), 1, {0, 1}); }) ==
          ErrorCode::SearchBudgetExceeded);
    CHECK_FALSE(cone_spot_check(pb, theta_of({0, 0}), 1));
    CHECK(cone_spot_check(pb, theta_of({0, -3}), 3));
    CHECK(code_of([&] { serre_dual_check(pb, theta_of({0, 0}), {0, 1}); }) ==
          ErrorCode::SearchBudgetExceeded);
  }

  TEST_CASE("thread count never changes the answer") {
    auto pb = proj_bundle();
    for (const auto& theta : {std::vector<long>{0, -3}, {-3, 2}, {2, -4}}) {
      auto one = cohomology_dims(pb, theta_of(theta), {10, 1});
      auto many = cohomology_dims(pb, theta_of(theta), {10, 4});
      CHECK(one.h == many.h);
      CHECK(one.stabilized == many.stabilized);
      CHECK(one.radius_used == many.radius_used);
    }
    auto x = two_lines();
    auto one = cohomology_dims(x, theta_of({-1, -3}), {12, 1});
    auto three = cohomology_dims(x, theta_of({-1, -3}), {12, 3});
    CHECK(one.h == three.h);
  }

  TEST_CASE("size guards") {
    CHECK(code_of([] { irrelevant_complex(kronecker(64, 1)); }) ==
          ErrorCode::InvalidInput);
    auto c = irrelevant_complex(kronecker(22, 1));
    CHECK(code_of([&] { reduced_cohomology(c, (1ull << 22) - 1); }) ==
          ErrorCode::InvalidInput);
    auto pb = proj_bundle();
    auto lat = degree_lattice(pb);
    CHECK(code_of([&] {
            lat.lift(pb, {Int("3000000000"), Int(0)});
          }) == ErrorCode::InvalidInput);
  }
}

#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "qfv/errors.hpp"
#include "qfv/quiver.hpp"

using namespace qfv;
using namespace qfv_tests;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("validation rejects bad inputs with the right codes") {
    CHECK(code_of([] {
            make_spec(3, {{0, 1}, {1, 2}, {2, 1}}, {1, 1, 1});
          }) == ErrorCode::CyclicQuiver);
    CHECK(code_of([] {
            make_spec(3, {{0, 2}, {1, 2}}, {1, 1, 1});
          }) == ErrorCode::MultipleSources);
    CHECK(code_of([] {
            make_spec(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}}, {1, 1, 1, 1});
          }) == ErrorCode::CyclicQuiver);
    CHECK(code_of([] { make_spec(2, {{0, 1}}, {1, 1, 1}); }) ==
          ErrorCode::LengthMismatch);
    CHECK(code_of([] { make_spec(2, {{0, 1}}, {2, 1}); }) ==
          ErrorCode::InvalidInput);  // r_0 must be 1
    CHECK(code_of([] { make_spec(2, {{0, 1}}, {1, 0}); }) ==
          ErrorCode::InvalidInput);
    CHECK(code_of([] { make_spec(2, {{0, 2}}, {1, 1}); }) ==
          ErrorCode::InvalidInput);  // arrow out of range
    CHECK(code_of([] { make_spec(2, {{1, 1}, {0, 1}}, {1, 1}); }) ==
          ErrorCode::CyclicQuiver);  // a loop is a cycle of length one
  }

  TEST_CASE("disconnected sink is unreachable only via multiple sources") {
    // A second component necessarily has its own source.
    CHECK(code_of([] {
            make_spec(4, {{0, 1}, {2, 3}}, {1, 1, 1, 1});
          }) == ErrorCode::MultipleSources);
  }

  TEST_CASE("construction relabels to topological order") {
    // Source is vertex 2 in the input; arrows point 2 -> 0 -> 1.
    auto spec = make_spec(3, {{0, 1}, {2, 0}}, {3, 5, 1});
    CHECK(spec.input_order() == std::vector<int>{2, 0, 1});
    CHECK(spec.dims() == std::vector<int>{1, 3, 5});
    for (const auto& a : spec.quiver().arrows) CHECK(a.tail < a.head);
  }

  TEST_CASE("s and s_prime are weighted degrees") {
    auto pb = proj_bundle();
    CHECK(pb.s() == std::vector<int>{0, 2, 3});
    CHECK(pb.s_prime() == std::vector<int>{3, 2, 0});

    auto tw = tower();
    CHECK(tw.s() == std::vector<int>{0, 2, 5, 3});
    CHECK(tw.s_prime() == std::vector<int>{3, 5, 2, 0});

    auto gb = gr_bundle();
    CHECK(gb.s() == std::vector<int>{0, 4, 5});
    CHECK(gb.s_prime() == std::vector<int>{10, 4, 0});
  }

  TEST_CASE("emptiness and strictness flags") {
    CHECK(proj_bundle().is_nonempty());
    CHECK(proj_bundle().is_strict());
    CHECK(proj_bundle().is_toric());
    CHECK_FALSE(gr_bundle().is_toric());

    auto thin = make_spec(3, {{0, 1}, {1, 2}}, {1, 1, 1});
    CHECK(thin.is_nonempty());
    CHECK_FALSE(thin.is_strict());  // r = s = 1 at both vertices

    auto empty = kronecker(2, 3);  // r_1 = 3 > s_1 = 2
    CHECK_FALSE(empty.is_nonempty());
    CHECK(code_of([&] { dimension(empty); }) == ErrorCode::EmptyModuli);
  }

  TEST_CASE("dimension of the reference specs") {
    CHECK(dimension(proj_bundle()) == 3);
    CHECK(dimension(tower()) == 7);
    CHECK(dimension(gr_bundle()) == 10);
    CHECK(dimension(flag421()) == 5);
    CHECK(dimension(kronecker(4, 2)) == 4);  // Gr(4, 2)
  }

  TEST_CASE("path counts by dynamic programming") {
    auto pb = proj_bundle();
    CHECK(path_count(pb, 0, 0) == 1);
    CHECK(path_count(pb, 0, 1) == 2);
    CHECK(path_count(pb, 0, 2) == 5);
    CHECK(path_count(pb, 1, 2) == 2);
    CHECK(path_count(pb, 2, 1) == 0);

    auto tw = tower();
    CHECK(path_count(tw, 0, 2) == 9);
    CHECK(path_count(tw, 0, 3) == 20);
  }

  TEST_CASE("anticanonical exponents and the fano certificate") {
    CHECK(anticanonical_exponents(proj_bundle()) == std::vector<int>{0, 3});
    CHECK(anticanonical_exponents(tower()) == std::vector<int>{-3, 3, 3});
    CHECK(anticanonical_exponents(kronecker(4, 2)) == std::vector<int>{4});
    CHECK_FALSE(fano_sufficient(proj_bundle()));
    CHECK_FALSE(fano_sufficient(tower()));
    CHECK(fano_sufficient(kronecker(4, 2)));
    CHECK(fano_sufficient(flag421()));
  }

  TEST_CASE("simplify contracts pass-through vertices") {
    // 0 -> 1, then two arrows 1 -> 2: vertex 1 has r = s = 1.
    auto spec = make_spec(3, {{0, 1}, {1, 2}, {1, 2}}, {1, 1, 1});
    auto reduced = simplify(spec);
    CHECK(reduced.quiver().vertices == 2);
    CHECK(reduced.quiver().arrows.size() == 2);
    CHECK(dimension(reduced) == dimension(spec));
    CHECK(reduced.is_strict());

    // A chain collapses to the one-vertex spec.
    auto chain = make_spec(3, {{0, 1}, {1, 2}}, {1, 1, 1});
    CHECK(simplify(chain).quiver().vertices == 1);

    // Strict specs are untouched and simplify is idempotent.
    CHECK(simplify(tower()).quiver().vertices == 4);
    auto once = simplify(spec);
    auto twice = simplify(once);
    CHECK(once.quiver().vertices == twice.quiver().vertices);
    CHECK(once.quiver().arrows.size() == twice.quiver().arrows.size());
  }

  TEST_CASE("simplify preserves the degree pairing with the dimensions") {
    auto total = [](const QuiverFlagSpec& s) {
      long acc = 0;
      for (int i = 0; i < s.quiver().vertices; ++i)
        acc += s.dims()[i] * (s.s()[i] - s.s_prime()[i]);
      return acc;
    };
    auto spec = make_spec(4, {{0, 1}, {1, 2}, {2, 3}, {2, 3}, {0, 2}},
                          {1, 1, 1, 1});
    CHECK(total(spec) == 0);
    CHECK(total(simplify(spec)) == 0);
  }

  TEST_CASE("unstable codimension") {
    CHECK(unstable_codimension(proj_bundle()).value() == 2);
    CHECK(unstable_codimension(tower()).value() == 2);
    CHECK(unstable_codimension(gr_bundle()).value() == 3);
    CHECK(unstable_codimension(kronecker(4, 2)).value() == 3);
    // One-vertex spec: no unstable locus at all.
    auto point = make_spec(1, {}, {1});
    CHECK_FALSE(unstable_codimension(point).has_value());
    // A non-strict vertex is detected by value 1.
    auto thin = make_spec(3, {{0, 1}, {1, 2}, {1, 2}}, {1, 1, 1});
    CHECK(unstable_codimension(thin).value() == 1);
  }

  TEST_CASE("special weight pairs to zero with the dimension vector") {
    auto gb = gr_bundle();
    auto w = special_weight(gb);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == -4);
    CHECK(w[1] == 1);
    CHECK(w[2] == 1);
    Int pairing = 0;
    for (int i = 0; i < 3; ++i) pairing += w[i] * gb.dims()[i];
    CHECK(pairing == 0);
  }
}

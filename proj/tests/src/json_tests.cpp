#include <doctest.h>

#include "helpers.hpp"
#include "qfv/errors.hpp"
#include "qfv/json_io.hpp"
#include "qfv/moduli.hpp"

using namespace qfv;
using namespace qfv_tests;

namespace {

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

std::vector<std::pair<int, int>> arrow_pairs(const Quiver& q) {
  std::vector<std::pair<int, int>> out;
  for (const auto& a : q.arrows) out.push_back({a.tail, a.head});
  return out;
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("quiver fixtures parse to the reference specs") {
    auto pb = parse_spec_json(slurp(fixture("proj_bundle.json")));
    CHECK(arrow_pairs(pb.quiver()) == arrow_pairs(proj_bundle().quiver()));
    CHECK(pb.dims() == proj_bundle().dims());

    auto gb = parse_spec_json(slurp(fixture("gr_bundle.json")));
    CHECK(gb.dims() == std::vector<int>{1, 2, 2});
    CHECK(dimension(gb) == 10);

    auto tw = parse_spec_json(slurp(fixture("tower.json")));
    CHECK(tw.s() == std::vector<int>{0, 2, 5, 3});

    CHECK(code_of([] { parse_spec_json(slurp(fixture("cyclic.json"))); }) ==
          ErrorCode::CyclicQuiver);
  }

  TEST_CASE("quiver documents round trip through the canonical form") {
    for (const char* name :
         {"proj_bundle.json", "tower.json", "gr_bundle.json", "flag421.json",
          "kronecker4_12.json"}) {
      auto spec = parse_spec_json(slurp(fixture(name)));
      auto again = parse_spec_json(spec_to_json(spec));
      CHECK(arrow_pairs(again.quiver()) == arrow_pairs(spec.quiver()));
      CHECK(again.dims() == spec.dims());
      CHECK(spec_to_json(again) == spec_to_json(spec));
    }

    // Relabeling settles after one pass: serializing the canonical form and
    // parsing it back is the identity.
    auto shuffled = parse_spec_json(
        R"({"vertices": 3, "arrows": [[0, 1], [2, 0]], "dims": [5, 3, 1]})");
    CHECK(shuffled.input_order() == std::vector<int>{2, 0, 1});
    auto settled = parse_spec_json(spec_to_json(shuffled));
    CHECK(settled.input_order() == std::vector<int>{0, 1, 2});
    CHECK(spec_to_json(settled) == spec_to_json(shuffled));
  }

  TEST_CASE("malformed quiver documents carry precise codes") {
    CHECK(code_of([] { parse_spec_json("not json at all"); }) ==
          ErrorCode::InvalidInput);
    CHECK(code_of([] { parse_spec_json("[]"); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] {
            parse_spec_json(R"({"vertices": 2, "arrows": [[0, 1]]})");
          }) == ErrorCode::InvalidInput);  // dims missing
    CHECK(code_of([] {
            parse_spec_json(
                R"({"vertices": 2, "arrows": [[0, 1, 2]], "dims": [1, 1]})");
          }) == ErrorCode::InvalidInput);  // arrow is not a pair
    CHECK(code_of([] {
            parse_spec_json(
                R"({"vertices": 2.5, "arrows": [[0, 1]], "dims": [1, 1]})");
          }) == ErrorCode::InvalidInput);  // fractional vertex count
    CHECK(code_of([] {
            parse_spec_json(
                R"({"vertices": 2, "arrows": [[0, 1]], "dims": [1, 1, 1]})");
          }) == ErrorCode::LengthMismatch);
    CHECK(code_of([] {
            parse_spec_json(
                R"({"vertices": 2, "arrows": [[0, 1]], "dims": [1, "x"]})");
          }) == ErrorCode::InvalidInput);
  }

  TEST_CASE("cox documents parse and round trip") {
    auto data = parse_cox_json(slurp(fixture("hirzebruch2.json")));
    CHECK(data.vars == std::vector<std::string>{"x1", "x2", "x3", "x4"});
    std::vector<std::vector<Int>> want = {{1, 0}, {-2, 1}, {1, 0}, {0, 1}};
    CHECK(data.degrees == want);
    CHECK(data.rho() == 2);

    // The writer stringifies degree entries; the parser takes both forms.
    auto again = parse_cox_json(cox_to_json(data));
    CHECK(again.vars == data.vars);
    CHECK(again.degrees == data.degrees);
  }

  TEST_CASE("malformed cox documents") {
    CHECK(code_of([] { parse_cox_json(R"({"vars": ["x"]})"); }) ==
          ErrorCode::InvalidInput);
    CHECK(code_of([] {
            parse_cox_json(R"({"vars": ["x", "y"], "degrees": [[1]]})");
          }) == ErrorCode::LengthMismatch);
    CHECK(code_of([] {
            parse_cox_json(
                R"({"vars": ["x", "y"], "degrees": [[1], [1, 2]]})");
          }) == ErrorCode::LengthMismatch);  // ragged rows
    CHECK(code_of([] {
            parse_cox_json(R"({"vars": [3], "degrees": [[1]]})");
          }) == ErrorCode::InvalidInput);
    CHECK(code_of([] {
            parse_cox_json(R"({"vars": ["x"], "degrees": [["junk"]]})");
          }) == ErrorCode::InvalidInput);
  }

  TEST_CASE("representation documents") {
    auto pb = proj_bundle();
    auto stable = parse_representation_json(
        pb, slurp(fixture("proj_bundle_stable_rep.json")));
    CHECK(is_special_stable(pb, stable));
    auto unstable = parse_representation_json(
        pb, slurp(fixture("proj_bundle_unstable_rep.json")));
    CHECK_FALSE(is_special_stable(pb, unstable));

    // Entries may be rational strings or plain integers, in row-major order.
    auto gb = gr_bundle();
    auto rep = parse_representation_json(gb, R"([
      ["1", 0], ["0", "1"], ["1/2", "-3/4"], [0, 1],
      ["5", "0"], [1, 0, 0, 1], ["2", "0", "0", "2"]
    ])");
    CHECK(rep.maps[2].at(0, 0) == Rat(1, 2));
    CHECK(rep.maps[2].at(1, 0) == Rat(-3, 4));
    CHECK(rep.maps[5].at(1, 1) == 1);
    CHECK(is_special_stable(gb, rep));
  }

  TEST_CASE("malformed representation documents") {
    auto pb = proj_bundle();
    CHECK(code_of([&] { parse_representation_json(pb, "{}"); }) ==
          ErrorCode::InvalidInput);
    CHECK(code_of([&] {
            parse_representation_json(pb, R"([["1"], ["1"]])");
          }) == ErrorCode::LengthMismatch);  // five arrows, two matrices
    CHECK(code_of([&] {
            parse_representation_json(
                pb, R"([["1", "2"], ["1"], ["1"], ["1"], ["1"]])");
          }) == ErrorCode::ShapeMismatch);  // 1x1 block with two entries
    CHECK(code_of([&] {
            parse_representation_json(
                pb, R"([["1"], ["1"], ["1"], ["1"], [true]])");
          }) == ErrorCode::InvalidInput);
    CHECK(code_of([&] {
            parse_representation_json(
                pb, R"([["1"], ["1"], ["1"], ["1"], ["1/0"]])");
          }) == ErrorCode::InvalidInput);
  }
}

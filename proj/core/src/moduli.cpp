#include "qfv/moduli.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include "qfv/errors.hpp"

namespace qfv {

RatMatrix coarse_block(const QuiverFlagSpec& spec, const Representation& rep,
                       int i) {
  check_shapes(spec, rep);
  if (i < 1 || i > spec.rho())
    fail(ErrorCode::InvalidInput, "coarse_block: vertex out of range");
  const int ri = spec.dims()[i];
  const int si = spec.s()[i];
  RatMatrix block(ri, si);
  int offset = 0;
  for (int k : spec.arrows_into(i)) {
    const int rt = spec.dims()[spec.quiver().arrows[k].tail];
    const RatMatrix& m = rep.maps[k];
    for (int a = 0; a < ri; ++a)
      for (int b = 0; b < rt; ++b) block.at(a, offset + b) = m.at(a, b);
    offset += rt;
  }
  return block;
}

void check_shapes(const QuiverFlagSpec& spec, const Representation& rep) {
  if (rep.maps.size() != spec.quiver().arrows.size())
    fail(ErrorCode::ShapeMismatch,
         "representation has " + std::to_string(rep.maps.size()) +
             " matrices for " + std::to_string(spec.quiver().arrows.size()) +
             " arrows");
  for (std::size_t k = 0; k < rep.maps.size(); ++k) {
    const auto& a = spec.quiver().arrows[k];
    const auto& m = rep.maps[k];
    if ((int)m.rows() != spec.dims()[a.head] ||
        (int)m.cols() != spec.dims()[a.tail])
      fail(ErrorCode::ShapeMismatch,
           "arrow " + std::to_string(k + 1) + " wants " +
               std::to_string(spec.dims()[a.head]) + "x" +
               std::to_string(spec.dims()[a.tail]) + ", got " +
               std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

bool is_special_stable(const QuiverFlagSpec& spec, const Representation& rep) {
  check_shapes(spec, rep);
  spec.require_nonempty();
  // Stability, semistability and moduli membership all reduce to full rank
  // of every coarse block for the special weight.
  for (int i = 1; i <= spec.rho(); ++i) {
    auto block = coarse_block(spec, rep, i);
    if (rank_fraction_free(block) != (std::size_t)spec.dims()[i])
      return false;
  }
  return true;
}

Representation random_stable(const QuiverFlagSpec& spec, std::uint64_t seed) {
  spec.require_nonempty();
  std::mt19937_64 gen(seed);
  // Explicit modulo mapping keeps the stream identical across platforms.
  auto small_rat = [&]() {
    long num = (long)(gen() % 19) - 9;    // -9 .. 9
    long den = (long)(gen() % 9) + 1;     // 1 .. 9
    Rat q(num, den);
    q.canonicalize();
    return q;
  };

  Representation rep;
  rep.maps.resize(spec.quiver().arrows.size());
  for (int i = 1; i <= spec.rho(); ++i) {
    const int ri = spec.dims()[i];
    // Build the coarse block: identity in the first r_i columns, random
    // small rationals elsewhere, then split it back into arrow matrices.
    RatMatrix block(ri, spec.s()[i]);
    for (int a = 0; a < ri; ++a)
      for (int b = 0; b < spec.s()[i]; ++b)
        block.at(a, b) = (b < ri) ? Rat(a == b ? 1 : 0) : small_rat();
    int offset = 0;
    for (int k : spec.arrows_into(i)) {
      const int rt = spec.dims()[spec.quiver().arrows[k].tail];
      RatMatrix m(ri, rt);
      for (int a = 0; a < ri; ++a)
        for (int b = 0; b < rt; ++b) m.at(a, b) = block.at(a, offset + b);
      rep.maps[k] = std::move(m);
      offset += rt;
    }
  }
  return rep;
}

EchelonChart echelon_chart(const QuiverFlagSpec& spec,
                           const Representation& rep) {
  if (!is_special_stable(spec, rep))
    fail(ErrorCode::NotStable, "echelon_chart needs a stable representation");
  EchelonChart chart;
  chart.pivot_cols.resize(spec.rho());
  Int free_total(0);
  for (int i = 1; i <= spec.rho(); ++i) {
    auto r = rref(coarse_block(spec, rep, i));
    for (auto c : r.pivot_cols) chart.pivot_cols[i - 1].push_back((int)c + 1);
    free_total +=
        Int(spec.dims()[i]) * (spec.s()[i] - (int)r.pivot_cols.size());
  }
  chart.free_entries = free_total;
  return chart;
}

std::vector<std::vector<std::vector<int>>> minor_index_sets(
    const QuiverFlagSpec& spec) {
  std::vector<std::vector<std::vector<int>>> out(spec.rho());
  for (int i = 1; i <= spec.rho(); ++i) {
    const int r = spec.dims()[i];
    const int s = spec.s()[i];
    std::vector<int> pick;
    std::function<void(int)> walk = [&](int from) {
      if ((int)pick.size() == r) {
        out[i - 1].push_back(pick);
        return;
      }
      for (int c = from; c <= s - (r - (int)pick.size()) + 1; ++c) {
        pick.push_back(c);
        walk(c + 1);
        pick.pop_back();
      }
    };
    walk(1);
  }
  return out;
}

ChamberLineBundle chamber_line_bundle(const QuiverFlagSpec& spec,
                                      const std::vector<Int>& theta) {
  if ((int)theta.size() != spec.quiver().vertices)
    fail(ErrorCode::LengthMismatch,
         "weight length must equal the vertex count");
  Int pairing(0);
  for (int i = 0; i < spec.quiver().vertices; ++i)
    pairing += theta[i] * spec.dims()[i];
  if (pairing != 0)
    fail(ErrorCode::NotACharacter,
         "weight pairs to " + to_string(pairing) +
             " with the dimension vector; a character needs 0");
  ChamberLineBundle out;
  out.ample_hint = true;
  for (int i = 1; i < spec.quiver().vertices; ++i) {
    out.exponents.push_back(theta[i]);
    if (theta[i] <= 0) out.ample_hint = false;
  }
  return out;
}

}  // namespace qfv

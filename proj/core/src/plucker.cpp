#include "qfv/plucker.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qfv/errors.hpp"
#include "qfv/schur.hpp"

namespace qfv {

Int det_h0(const QuiverFlagSpec& spec, int i) {
  spec.require_strict();
  return h0_dim(spec, det_term(spec, i));
}

const char* plucker_mode_name(PluckerMode mode) {
  return mode == PluckerMode::ToricExact ? "toric-exact" : "generic-rank";
}

namespace {

Quiver quiver_from_counts(int rho, const std::vector<std::vector<Int>>& n) {
  Quiver q;
  q.vertices = rho + 1;
  for (int i = 0; i <= rho; ++i)
    for (int j = i + 1; j <= rho; ++j) {
      if (n[i][j] < 0)
        fail(ErrorCode::InvalidInput, "negative arrow count");
      for (Int c = 0; c < n[i][j]; ++c) q.arrows.push_back({i, j});
    }
  return q;
}

}  // namespace

PluckerQuiver plucker_quiver(const QuiverFlagSpec& spec, PluckerMode mode) {
  spec.require_strict();
  const int rho = spec.rho();
  PluckerQuiver out;
  out.mode = mode;
  out.heuristic = mode == PluckerMode::GenericRank;

  std::vector<std::vector<Int>> hom(rho + 1, std::vector<Int>(rho + 1, 0));
  std::vector<std::vector<Int>> np(rho + 1, std::vector<Int>(rho + 1, 0));

  if (mode == PluckerMode::ToricExact) {
    const auto cox = cox_data_of(spec);
    std::vector<std::vector<Int>> deltas(rho + 1,
                                         std::vector<Int>(rho, Int(0)));
    for (int i = 1; i <= rho; ++i) deltas[i][i - 1] = 1;
    const auto sq = quiver_of_sections(cox, deltas);
    for (int i = 0; i <= rho; ++i)
      for (int j = i + 1; j <= rho; ++j) {
        std::vector<Int> diff(rho);
        for (int t = 0; t < rho; ++t) diff[t] = deltas[j][t] - deltas[i][t];
        hom[i][j] = Int((long)monomials_of_degree(cox, diff).size());
      }
    for (const auto& a : sq.quiver.arrows) np[a.tail][a.head] += 1;
    out.quiver = sq.quiver;
  } else {
    // Hom dimensions are exact; the factoring count is a generic-rank
    // estimate computed in increasing target order, so every output row
    // carries both numbers.
    for (int j = 1; j <= rho; ++j) {
      hom[0][j] = h0_dim(spec, det_term(spec, j));
      for (int i = 1; i < j; ++i)
        hom[i][j] = hom_dim(spec, det_term(spec, i), det_term(spec, j));
    }
    for (int j = 1; j <= rho; ++j)
      for (int i = 0; i < j; ++i) {
        Int factoring = 0;
        for (int k = i + 1; k < j; ++k) factoring += np[i][k] * hom[k][j];
        factoring = std::min(factoring, hom[i][j]);
        np[i][j] = hom[i][j] - factoring;
      }
    out.quiver = quiver_from_counts(rho, np);
  }

  for (int i = 0; i <= rho; ++i)
    for (int j = i + 1; j <= rho; ++j) {
      PluckerPair p;
      p.i = i;
      p.j = j;
      p.dim_hom = hom[i][j];
      p.n_prime = np[i][j];
      p.factoring = hom[i][j] - np[i][j];
      out.pairs.push_back(p);
    }
  return out;
}

namespace {

PluckerAmbient ambient_of_quiver(const QuiverFlagSpec& spec, Quiver q) {
  std::vector<int> ones(q.vertices, 1);
  QuiverFlagSpec ambient(q, ones);
  ambient.require_nonempty();
  PluckerAmbient out{std::move(ambient), Int(0), Int(0)};
  out.dim = dimension(out.spec);
  out.codim = out.dim - dimension(spec);
  return out;
}

}  // namespace

PluckerAmbient plucker_ambient(const QuiverFlagSpec& spec, PluckerMode mode) {
  auto pq = plucker_quiver(spec, mode);
  return ambient_of_quiver(spec, pq.quiver);
}

PluckerAmbient plucker_ambient_from_counts(
    const QuiverFlagSpec& spec, const std::vector<std::vector<Int>>& counts) {
  spec.require_strict();
  const int rho = spec.rho();
  if ((int)counts.size() != rho + 1)
    fail(ErrorCode::LengthMismatch, "counts must have rho + 1 rows");
  for (const auto& row : counts)
    if ((int)row.size() != rho + 1)
      fail(ErrorCode::LengthMismatch, "counts must have rho + 1 columns");
  return ambient_of_quiver(spec, quiver_from_counts(rho, counts));
}

std::vector<CoxProbeDegree> cox_probe(const QuiverFlagSpec& spec, int bound) {
  spec.require_toric();
  spec.require_strict();
  if (bound < 0) fail(ErrorCode::InvalidInput, "degree bound must be >= 0");
  const int rho = spec.rho();

  const auto cox = cox_data_of(spec);
  std::vector<std::vector<Int>> deltas(rho + 1, std::vector<Int>(rho, Int(0)));
  for (int i = 1; i <= rho; ++i) deltas[i][i - 1] = 1;
  const auto sq = quiver_of_sections(cox, deltas);
  const auto ambient_cox = cox_data_of(
      QuiverFlagSpec(sq.quiver, std::vector<int>(sq.quiver.vertices, 1)));

  std::vector<CoxProbeDegree> report;
  std::vector<Int> theta(rho, Int(0));
  for (;;) {
    // The image of one ambient monomial is the product of the labels of its
    // variables; distinct ambient monomials may collide.
    std::set<ExpVec> image;
    for (const auto& mono : monomials_of_degree(ambient_cox, theta)) {
      ExpVec prod(cox.vars.size(), 0);
      for (std::size_t a = 0; a < mono.size(); ++a)
        for (std::size_t v = 0; v < prod.size(); ++v)
          prod[v] += mono[a] * sq.labels[a][v];
      image.insert(std::move(prod));
    }
    const auto target = monomials_of_degree(cox, theta);

    CoxProbeDegree row;
    row.theta = theta;
    row.image = Int((long)image.size());
    row.target = Int((long)target.size());
    row.surjective = image.size() == target.size();
    report.push_back(std::move(row));

    int pos = rho - 1;
    while (pos >= 0 && theta[pos] == bound) theta[pos--] = 0;
    if (pos < 0) break;
    theta[pos] += 1;
  }
  return report;
}

}  // namespace qfv

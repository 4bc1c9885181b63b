#ifndef QFV_PLUCKER_HPP
#define QFV_PLUCKER_HPP

#include <optional>
#include <string>
#include <vector>

#include "qfv/numeric.hpp"
#include "qfv/quiver.hpp"
#include "qfv/toric.hpp"

namespace qfv {

// dim H^0(det W_i). Requires a strict spec.
Int det_h0(const QuiverFlagSpec& spec, int i);

enum class PluckerMode {
  ToricExact,   // section counts from monomials; exact, toric specs only
  GenericRank,  // factoring estimated by generic rank; heuristic upper bound
};

const char* plucker_mode_name(PluckerMode mode);

// Per-pair record of the multigraded Pluecker construction.
struct PluckerPair {
  int i = 0, j = 0;
  Int dim_hom = 0;    // dim Hom(det W_i, det W_j)
  Int factoring = 0;  // sections accounted for by factorizations through k
  Int n_prime = 0;    // arrow count i -> j in the ambient quiver
};

struct PluckerQuiver {
  Quiver quiver;  // vertices 0..rho, n_prime parallel arrows per pair
  std::vector<PluckerPair> pairs;
  PluckerMode mode = PluckerMode::GenericRank;
  bool heuristic = false;  // true for GenericRank
};

// The quiver of sections of (O, det W_1, ..., det W_rho). ToricExact demands
// a toric spec (NotToric) and counts irreducible monomials; GenericRank uses
// Schur-calculus Hom dimensions and the generic-rank factoring estimate
// n'_{i,j} = dimHom - min(dimHom, sum_k n'_{i,k} * dimHom(k, j)).
PluckerQuiver plucker_quiver(const QuiverFlagSpec& spec, PluckerMode mode);

// The ambient quiver flag spec (all dimensions one) built from the pair
// table, with its dimension and the codimension of the image of the spec.
struct PluckerAmbient {
  QuiverFlagSpec spec;
  Int dim = 0;
  Int codim = 0;
};

PluckerAmbient plucker_ambient(const QuiverFlagSpec& spec, PluckerMode mode);

// Ambient from externally supplied arrow counts (row i, column j, j > i):
// the construction consumes counts only, so published tables can be fed in
// directly. counts[i][j] must cover all pairs 0 <= i < j <= rho.
PluckerAmbient plucker_ambient_from_counts(
    const QuiverFlagSpec& spec, const std::vector<std::vector<Int>>& counts);

// One degree of the comparison between ambient sections and target sections.
struct CoxProbeDegree {
  std::vector<Int> theta;
  Int image = 0;   // distinct section monomials hit by ambient monomials
  Int target = 0;  // monomials of degree theta in the spec's Cox ring
  bool surjective = false;
};

// Substitutes each ambient variable by its label monomial and compares
// images with the spec's sections in every degree 0 <= theta_i <= bound.
// Toric strict specs only.
std::vector<CoxProbeDegree> cox_probe(const QuiverFlagSpec& spec, int bound);

}  // namespace qfv

#endif  // QFV_PLUCKER_HPP

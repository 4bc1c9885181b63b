#ifndef QFV_MODULI_HPP
#define QFV_MODULI_HPP

#include <cstdint>
#include <vector>

#include "qfv/linalg.hpp"
#include "qfv/quiver.hpp"

namespace qfv {

// A representation of the quiver with dimension vector r: one r_head x r_tail
// matrix of exact rationals per arrow, in arrow order. The source carries the
// one-dimensional space, so matrices on arrows out of 0 are r_head x 1.
struct Representation {
  std::vector<RatMatrix> maps;
};

// The coarse block matrix at vertex i >= 1: the r_i x s_i matrix whose
// column blocks are the arrow matrices with head i, in arrow order.
RatMatrix coarse_block(const QuiverFlagSpec& spec, const Representation& rep,
                       int i);

// Validates block shapes against the quiver. Throws ShapeMismatch.
void check_shapes(const QuiverFlagSpec& spec, const Representation& rep);

// Stability for the special weight: every coarse block has full rank r_i.
// (For this weight, stable, semistable and locally free coincide.)
bool is_special_stable(const QuiverFlagSpec& spec, const Representation& rep);

// Deterministic stable representation: each coarse block gets an identity
// block in its first r_i columns, remaining entries are small rationals drawn
// from a seeded generator. Same seed, same representation.
Representation random_stable(const QuiverFlagSpec& spec, std::uint64_t seed);

// Echelon data for a stable representation: per vertex, the pivot columns of
// the reduced row echelon form of the coarse block (1-based), plus the total
// number of free entries, which equals dim M. Throws NotStable.
struct EchelonChart {
  std::vector<std::vector<int>> pivot_cols;
  Int free_entries = 0;
};
EchelonChart echelon_chart(const QuiverFlagSpec& spec,
                           const Representation& rep);

// For each vertex i >= 1, all r_i-element subsets of {1..s_i} (1-based,
// ascending): the index sets of the maximal minors of the coarse blocks.
// The unstable locus is cut out by the vanishing of all minors at some
// vertex, so these sets index the irrelevant-ideal generators.
std::vector<std::vector<std::vector<int>>> minor_index_sets(
    const QuiverFlagSpec& spec);

// Drops theta_0 from an integer weight orthogonal to the dimension vector
// and reports whether all remaining entries are positive (the ample chamber
// certificate for the special weight's chamber). Throws NotACharacter when
// theta . r != 0.
struct ChamberLineBundle {
  std::vector<Int> exponents;  // theta_1 .. theta_rho
  bool ample_hint = false;     // all exponents positive
};
ChamberLineBundle chamber_line_bundle(const QuiverFlagSpec& spec,
                                      const std::vector<Int>& theta);

}  // namespace qfv

#endif  // QFV_MODULI_HPP

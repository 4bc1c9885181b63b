#ifndef QFV_SCHUR_HPP
#define QFV_SCHUR_HPP

#include <map>
#include <vector>

#include "qfv/partitions.hpp"
#include "qfv/quiver.hpp"

namespace qfv {

// A formal bundle term: one dominant weight per vertex 1..rho, where the
// weight at vertex i has length r_i. The weight for the source is always
// trivial and not stored. Entry w[i-1] belongs to vertex i.
struct BundleTerm {
  std::vector<Weight> w;

  bool operator<(const BundleTerm& o) const { return w < o.w; }
  bool operator==(const BundleTerm& o) const { return w == o.w; }
};

// A multiset of bundle terms with exact multiplicities.
using BundleSymbol = std::map<BundleTerm, Int>;

// The all-trivial term (the structure sheaf).
BundleTerm trivial_term(const QuiverFlagSpec& spec);

// The term with a single unit weight (1,0,...,0) at vertex i.
BundleTerm unit_term(const QuiverFlagSpec& spec, int i);

// The term det W_i: weight (1,...,1) at vertex i.
BundleTerm det_term(const QuiverFlagSpec& spec, int i);

// True when every entry of every weight is >= -(s_i - r_i). Exactness of the
// one-step pushforward is certified exactly on this range.
bool vanishing_certificate(const QuiverFlagSpec& spec, const BundleTerm& term);

// Eliminates vertex i from every term of the symbol: expands the Schur power
// of F_i = (sum of W_tail over arrows into i) when the weight at i is a
// partition, deletes the term when the weight has a negative entry in range,
// and throws OutOfBottRangeError when an entry lies below -(s_i - r_i).
// Weights produced at tail vertices are merged into the existing ones by
// exact Littlewood-Richardson products; arrows from the source contribute
// scalar factors gl_dimension(mu, n_{0,i}).
//
// Precondition: no term has a nonzero weight at any vertex j > i (those
// levels must be eliminated first).
BundleSymbol pushforward_step(const QuiverFlagSpec& spec,
                              const BundleSymbol& symbol, int i);

// dim H^0 of the term's bundle: eliminates vertices rho down to 1 and reads
// off the scalar multiplicity. Higher cohomology vanishes throughout the
// certified range, so this is exact. Throws OutOfBottRangeError when some
// intermediate weight leaves the range; throws EmptyModuli on empty specs.
Int h0_dim(const QuiverFlagSpec& spec, const BundleTerm& term);

// dim Hom(A, B) = dim H^0(A^dual tensor B), expanded per vertex by exact LR
// products. Throws OutOfBottRangeError when any LR summand leaves the
// certified range at its vertex.
Int hom_dim(const QuiverFlagSpec& spec, const BundleTerm& a,
            const BundleTerm& b);

// The tilting-bundle summands: all terms whose weight at vertex i is a
// partition in the (s_i - r_i) x r_i box. Requires a strict spec (NotStrict
// otherwise). Order: per-vertex lexicographic, last vertex varying fastest.
std::vector<BundleTerm> tilting_summands(const QuiverFlagSpec& spec);

struct ExceptionalityReport {
  bool strongly_exceptional = true;
  // Number of ordered pairs whose Hom space was computed.
  long pairs_checked = 0;
};

// Checks that Hom(T_a, T_b) is computable inside the certified range for all
// ordered pairs of tilting summands (equivalently, no Ext obstruction is
// visible to the engine). Returns the pair count as a certificate.
ExceptionalityReport strong_exceptionality_check(const QuiverFlagSpec& spec);

// Sum of dim Hom(T_a, T_b) over all ordered pairs of tilting summands.
Int endomorphism_dim(const QuiverFlagSpec& spec);

// Sum of the ranks (products of GL(r_i) dimensions) of the tilting summands.
Int tilting_rank(const QuiverFlagSpec& spec);

}  // namespace qfv

#endif  // QFV_SCHUR_HPP

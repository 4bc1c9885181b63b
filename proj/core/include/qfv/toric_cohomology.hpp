#ifndef QFV_TORIC_COHOMOLOGY_HPP
#define QFV_TORIC_COHOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "qfv/numeric.hpp"
#include "qfv/quiver.hpp"

namespace qfv {

// The simplicial complex on the arrow set whose faces are the subsets
// containing no full in-arrow set of a vertex. Its facets are the
// complements of the pivot charts.
struct IrrelevantComplex {
  int ground = 0;                    // number of arrows
  std::vector<std::uint64_t> in_masks;  // bit mask of arrows into each i >= 1

  bool is_face(std::uint64_t f) const {
    for (auto m : in_masks)
      if ((f & m) == m) return false;
    return true;
  }
};

IrrelevantComplex irrelevant_complex(const QuiverFlagSpec& spec);

// Reduced rational cohomology dimensions of the induced subcomplex on the
// vertex subset z (a bit mask of arrows). Slot k holds dim H~^{k-1}, so the
// complex with only the empty face reports slot 0 = 1.
std::vector<Int> reduced_cohomology(const IrrelevantComplex& complex,
                                    std::uint64_t z);

// The kernel of the degree map Z^{arrows} -> Z^rho together with an integral
// lift. The basis consists of the fundamental cycles of a canonical spanning
// tree (entries in {-1,0,1}), and lifts are supported on the tree.
struct DegreeLattice {
  int arrows = 0;
  int rank = 0;                          // arrows - rho
  std::vector<std::vector<long>> basis;  // rank vectors of length arrows
  std::vector<int> tree_arrow;           // per vertex 1..rho: its tree arrow

  std::vector<long> lift(const QuiverFlagSpec& spec,
                         const std::vector<Int>& theta) const;
};

DegreeLattice degree_lattice(const QuiverFlagSpec& spec);

struct CohomologyOptions {
  int search_radius = 8;
  int jobs = 1;  // enumeration threads; result independent of the value
};

struct CohomologyResult {
  std::vector<Int> h;     // h^0 .. h^dim
  bool stabilized = false;  // two consecutive empty shells before the radius
  int radius_used = 0;      // last shell actually scanned
};

// Sheaf cohomology of the line bundle of degree theta on a toric spec:
// h^k = sum over lattice points u of degree theta of dim H~^{k-1} of the
// induced subcomplex on the negative support of u. The lattice is scanned in
// l-infinity shells of the cycle basis; the scan stops once two consecutive
// shells contribute nothing (stabilized), else reports a lower bound with
// stabilized = false. Throws NotToric / EmptyModuli.
CohomologyResult cohomology_dims(const QuiverFlagSpec& spec,
                                 const std::vector<Int>& theta,
                                 const CohomologyOptions& opts = {});

// True exactly when theta_i > -s_i for every i >= 1: the certified
// higher-vanishing region.
bool vanishing_region_check(const QuiverFlagSpec& spec,
                            const std::vector<Int>& theta);

// Checks h^k(theta) == h^{dim-k}(kappa - theta) for all k, where kappa is
// the canonical degree (negated anticanonical exponents). Throws
// SearchBudgetExceeded when either side fails to stabilize.
bool serre_dual_check(const QuiverFlagSpec& spec,
                      const std::vector<Int>& theta,
                      const CohomologyOptions& opts = {});

// Evaluates cohomology at a claimed cone apex and reports whether h^k >= 1
// there. Used to confirm sharpness witnesses.
bool cone_spot_check(const QuiverFlagSpec& spec, const std::vector<Int>& apex,
                     int k, const CohomologyOptions& opts = {});

}  // namespace qfv

#endif  // QFV_TORIC_COHOMOLOGY_HPP

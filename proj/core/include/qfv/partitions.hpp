#ifndef QFV_PARTITIONS_HPP
#define QFV_PARTITIONS_HPP

#include <map>
#include <utility>
#include <vector>

#include "qfv/numeric.hpp"

namespace qfv {

// A partition is a weakly decreasing vector of nonnegative ints with no
// trailing zeros. A (dominant) weight is a weakly decreasing vector of ints
// of some fixed length; entries may be negative.
using Partition = std::vector<int>;
using Weight = std::vector<int>;

bool is_partition(const Partition& p);

// Removes trailing zeros.
Partition trim(Partition p);

// Pads with zeros up to length n (n >= current length).
Weight pad(const Partition& p, int n);

// All partitions fitting in a k x r box (at most r parts, parts <= k), in
// lexicographic order on part sequences: (2,2) -> {}, (1), (1,1), (2),
// (2,1), (2,2). Count is C(k+r, r).
std::vector<Partition> enumerate_young(int k, int r);

// Littlewood-Richardson coefficient c^nu_{lambda,mu}, computed by counting
// lattice skew tableaux of shape nu/lambda and content mu.
Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu);

// S^lambda tensor S^mu for GL(r): all nu with at most r parts, with their LR
// multiplicities. Keys are trimmed partitions.
std::map<Partition, Int> tensor_decompose(const Partition& lambda,
                                          const Partition& mu, int r);

// Decomposition of S^nu(A + B) with rank A = r1, rank B = r2: the pairs
// (lambda, mu) with at most r1 resp. r2 parts and multiplicity
// c^nu_{lambda,mu}.
std::map<std::pair<Partition, Partition>, Int> sum_decompose(
    const Partition& nu, int r1, int r2);

// The weight of the dual representation: (-w_r, ..., -w_1).
Weight dual_weight(const Weight& w);

// Writes a dominant weight as (partition) - m * (1,...,1) with the smallest
// m >= 0. Returns the padded partition (same length) and m.
std::pair<Weight, int> normalize(const Weight& w);

// Dimension of the irreducible GL(n) representation with highest weight
// lambda (a partition with at most n parts), by the hook content formula.
// Returns 0 when lambda has more than n parts.
Int gl_dimension(const Partition& lambda, int n);

// Dimension for an arbitrary dominant weight of length <= n: the smallest
// determinant twist makes it polynomial without changing the dimension.
Int gl_dimension_weight(const Weight& w, int n);

}  // namespace qfv

#endif  // QFV_PARTITIONS_HPP

#ifndef QFV_TORIC_HPP
#define QFV_TORIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "qfv/numeric.hpp"
#include "qfv/quiver.hpp"

namespace qfv {

// Exponent vector of a monomial in the Cox variables.
using ExpVec = std::vector<long>;

// A polynomial ring with a pointed multigrading: one degree vector per
// variable, all in Z^rho.
struct GradedCoxData {
  std::vector<std::string> vars;
  std::vector<std::vector<Int>> degrees;  // degrees[a] has length rho

  int rho() const { return degrees.empty() ? 0 : (int)degrees[0].size(); }
};

// Renders an exponent vector as a monomial string, e.g. "x1^2*x3" ("1" for
// the constant monomial).
std::string monomial_string(const GradedCoxData& data, const ExpVec& e);

// The Cox presentation of a toric quiver flag variety: one variable y_a per
// arrow (1-based, in arrow order), degree e_head - e_tail with e_0 = 0.
// Throws NotToric.
GradedCoxData cox_data_of(const QuiverFlagSpec& spec);

// All monomials of the given degree, in descending lexicographic order on
// exponent vectors. Finiteness is certified by a strictly positive grading
// functional; throws NotPointed when none exists.
std::vector<ExpVec> monomials_of_degree(const GradedCoxData& data,
                                        const std::vector<Int>& degree);

// True when no monomial has degree delta_i - delta_j for any i < j: all
// backward Homs between the line bundles of the degree list vanish.
bool weakly_exceptional_check(const GradedCoxData& data,
                              const std::vector<std::vector<Int>>& deltas);

// The quiver of sections of the line-bundle list (delta_0 = 0, delta_1, ...):
// arrows i -> j are the monomials of degree delta_j - delta_i admitting no
// factorization through an intermediate vertex; labels record the monomials.
// Arrow order: (i, j) lexicographic, then descending-lex on labels. Throws
// NotWeaklyExceptional; the resulting quiver is validated (unique source 0).
struct SectionQuiver {
  Quiver quiver;
  std::vector<ExpVec> labels;          // label of each arrow
  GradedCoxData base;                  // the input ring
  std::vector<std::vector<Int>> deltas;
};
SectionQuiver quiver_of_sections(const GradedCoxData& data,
                                 const std::vector<std::vector<Int>>& deltas);

// A pair of distinct directed paths with the same endpoints and the same
// label monomial; the relation y_path_a - y_path_b. Paths are 1-based arrow
// index sequences.
struct Binomial {
  std::vector<int> lhs, rhs;
  ExpVec label;
};

// All binomial relations among paths of length <= length_bound, grouped by
// endpoints and label, each unordered pair reported once, lexicographically
// ordered. These span the toric ideal in bounded degree.
std::vector<Binomial> kernel_binomials(const SectionQuiver& sq,
                                       int length_bound);

// True when every monomial of degree sum(deltas) is a product of monomials
// of the individual degrees: the first multiplication map is surjective.
bool multiplication_surjective(const GradedCoxData& data,
                               const std::vector<std::vector<Int>>& deltas);

// The tilting line bundles of a strict toric spec: all theta with
// 0 <= theta_i < s_i, last coordinate varying fastest. Throws NotToric,
// NotStrict.
std::vector<std::vector<Int>> toric_tilting_lines(const QuiverFlagSpec& spec);

// All ways to choose one arrow into each vertex i >= 1 (1-based arrow
// indices, per vertex): the torus-fixed charts. Count is prod s_i. Throws
// NotToric.
std::vector<std::vector<int>> pivot_charts(const QuiverFlagSpec& spec);

}  // namespace qfv

#endif  // QFV_TORIC_HPP

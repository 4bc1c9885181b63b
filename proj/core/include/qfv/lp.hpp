#ifndef QFV_LP_HPP
#define QFV_LP_HPP

#include <optional>
#include <vector>

#include "qfv/numeric.hpp"

namespace qfv {

// Exact phase-one simplex with Bland's rule. Decides feasibility of
// { x >= 0 : A x = b } and returns a feasible point when one exists.
// Sizes here are tiny (tens of rows/columns), so a dense tableau over
// exact rationals is entirely adequate and terminates by Bland's rule.
std::optional<std::vector<Rat>> feasible_point(
    const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

// A strictly positive grading functional: w with w . d >= 1 for every degree
// column d. Exists if and only if the nonnegative span of the degrees
// contains no line (the grading is pointed). Returns std::nullopt otherwise.
std::optional<std::vector<Rat>> positive_functional(
    const std::vector<std::vector<Int>>& degrees);

}  // namespace qfv

#endif  // QFV_LP_HPP

#ifndef QFV_QUIVER_HPP
#define QFV_QUIVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "qfv/numeric.hpp"

namespace qfv {

// One arrow of a quiver. Arrows are identified by their position in
// Quiver::arrows; that file order is part of every canonical enumeration
// downstream (coarse block order, Cox variable names, chart labels).
struct Arrow {
  int tail = 0;
  int head = 0;
};

// A finite quiver on vertices 0..vertices-1.
struct Quiver {
  int vertices = 0;
  std::vector<Arrow> arrows;
};

// Result of validation: the canonical relabelling that sorts vertices
// topologically with the unique source first (ties broken by smallest
// original label).
struct QuiverDiagnostics {
  // order[new_label] = old_label.
  std::vector<int> order;
};

// Validates a quiver: exactly one source, acyclic, every vertex reachable
// from the source. Throws Error with code CyclicQuiver, MultipleSources or
// UnreachableVertex. Returns the canonical topological relabelling.
QuiverDiagnostics validate(const Quiver& q);

// A quiver together with a dimension vector r with r_0 = 1. Construction
// validates and relabels, so vertex 0 is always the source and arrows always
// point from lower to higher label.
class QuiverFlagSpec {
 public:
  QuiverFlagSpec(Quiver q, std::vector<int> dims);

  const Quiver& quiver() const { return quiver_; }
  // r_i for i = 0..rho; r_0 == 1.
  const std::vector<int>& dims() const { return dims_; }
  // Number of nonsource vertices rho = vertices - 1.
  int rho() const { return quiver_.vertices - 1; }
  // order()[new_label] = label in the input quiver.
  const std::vector<int>& input_order() const { return input_order_; }

  // s_i = sum of r_tail over arrows with head i (s_0 = 0), for i = 0..rho.
  const std::vector<int>& s() const { return s_; }
  // s'_i = sum of r_head over arrows with tail i, for i = 0..rho.
  const std::vector<int>& s_prime() const { return s_prime_; }

  // Indices of arrows with head i, in arrow order.
  const std::vector<int>& arrows_into(int i) const { return in_arrows_[i]; }

  bool is_nonempty() const;  // r_i <= s_i for every i >= 1
  bool is_strict() const;    // r_i <  s_i for every i >= 1
  bool is_toric() const;     // r_i == 1 for every i

  void require_nonempty() const;  // throws EmptyModuli
  void require_strict() const;    // throws NotStrict
  void require_toric() const;     // throws NotToric

 private:
  Quiver quiver_;
  std::vector<int> dims_;
  std::vector<int> input_order_;
  std::vector<int> s_, s_prime_;
  std::vector<std::vector<int>> in_arrows_;
};

// dim M = sum_{i>=1} r_i (s_i - r_i). Throws EmptyModuli when empty.
Int dimension(const QuiverFlagSpec& spec);

// Number of directed paths from i to j (1 when i == j).
Int path_count(const QuiverFlagSpec& spec, int i, int j);

// Exponents (s_i - s'_i) for i = 1..rho: the anticanonical bundle is the
// product over vertices of det(W_i)^(s_i - s'_i). Throws EmptyModuli.
std::vector<int> anticanonical_exponents(const QuiverFlagSpec& spec);

// True when s_i > s'_i for every i >= 1 (ample anticanonical certificate;
// sufficient, not necessary).
bool fano_sufficient(const QuiverFlagSpec& spec);

// Contracts vertices with r_i = s_i = 1 (their unique incoming arrow is an
// isomorphism on stable points) until none remain. Preserves the moduli
// space and its dimension; idempotent.
QuiverFlagSpec simplify(const QuiverFlagSpec& spec);

// min_{i>=1} (s_i - r_i + 1): a lower bound for the codimension of the
// unstable locus in the ambient product of matrix spaces. Value 1 signals a
// non-strict vertex. Empty for the one-vertex spec (no unstable locus).
// Throws EmptyModuli.
std::optional<Int> unstable_codimension(const QuiverFlagSpec& spec);

// The stability weight (-sum_{i>=1} r_i, 1, ..., 1).
std::vector<Int> special_weight(const QuiverFlagSpec& spec);

}  // namespace qfv

#endif  // QFV_QUIVER_HPP

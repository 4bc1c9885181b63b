#include "qfv/schur.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "qfv/errors.hpp"

namespace qfv {

namespace {

bool is_zero(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

void check_term_shape(const QuiverFlagSpec& spec, const BundleTerm& term) {
  if ((int)term.w.size() != spec.rho())
    fail(ErrorCode::InvalidInput, "bundle term has wrong vertex count");
  for (int i = 1; i <= spec.rho(); ++i) {
    const Weight& w = term.w[i - 1];
    if ((int)w.size() != spec.dims()[i])
      fail(ErrorCode::InvalidInput,
           "weight length at vertex " + std::to_string(i) +
               " must equal r_" + std::to_string(i));
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] < w[k + 1])
        fail(ErrorCode::InvalidInput,
             "weight at vertex " + std::to_string(i) + " is not dominant");
  }
}

void check_bott_range(const QuiverFlagSpec& spec, const Weight& w, int i) {
  const int bound = -(spec.s()[i] - spec.dims()[i]);
  for (int entry : w)
    if (entry < bound)
      throw OutOfBottRangeError(
          i, entry,
          "entry " + std::to_string(entry) + " at vertex " +
              std::to_string(i) + " lies below " + std::to_string(bound));
}

// Merges partition mu (from an eliminated level) into the existing dominant
// weight at a tail vertex: shift the weight to a partition, take the exact
// LR product, shift back. Every branch stays dominant.
std::map<Weight, Int> tensor_merge(const Weight& existing, const Partition& mu,
                                   int r) {
  auto [shifted, m] = normalize(existing);
  auto prods = tensor_decompose(trim(shifted), mu, r);
  std::map<Weight, Int> out;
  for (const auto& [nu, c] : prods) {
    Weight w = pad(nu, r);
    for (int& x : w) x -= m;
    out[w] += c;
  }
  return out;
}

// One additive block of F_i: either the span of arrows from the source
// (rank = their number) or one arrow from an internal tail (rank r_tail).
struct Block {
  int tail;  // 0 for the source block
  int rank;
};

// Distributes the partition over the block list by iterated two-part
// decompositions. Calls sink(assignment, multiplicity) for every way to
// write S^lambda(B_1 + ... + B_m) with per-block partitions.
void distribute(const std::vector<Block>& blocks, std::size_t index,
                const Partition& remaining, const Int& mult,
                std::vector<Partition>& picked,
                const std::function<void(const std::vector<Partition>&,
                                         const Int&)>& sink) {
  if (index + 1 == blocks.size()) {
    if ((int)trim(remaining).size() > blocks[index].rank) return;
    picked.push_back(trim(remaining));
    sink(picked, mult);
    picked.pop_back();
    return;
  }
  int rest_rank = 0;
  for (std::size_t j = index + 1; j < blocks.size(); ++j)
    rest_rank += blocks[j].rank;
  auto split = sum_decompose(remaining, blocks[index].rank, rest_rank);
  for (const auto& [pair, c] : split) {
    picked.push_back(pair.first);
    distribute(blocks, index + 1, pair.second, mult * c, picked, sink);
    picked.pop_back();
  }
}

}  // namespace

BundleTerm trivial_term(const QuiverFlagSpec& spec) {
  BundleTerm t;
  t.w.resize(spec.rho());
  for (int i = 1; i <= spec.rho(); ++i)
    t.w[i - 1].assign(spec.dims()[i], 0);
  return t;
}

BundleTerm unit_term(const QuiverFlagSpec& spec, int i) {
  BundleTerm t = trivial_term(spec);
  if (i < 1 || i > spec.rho())
    fail(ErrorCode::InvalidInput, "unit_term: vertex out of range");
  t.w[i - 1][0] = 1;
  return t;
}

BundleTerm det_term(const QuiverFlagSpec& spec, int i) {
  BundleTerm t = trivial_term(spec);
  if (i < 1 || i > spec.rho())
    fail(ErrorCode::InvalidInput, "det_term: vertex out of range");
  t.w[i - 1].assign(spec.dims()[i], 1);
  return t;
}

bool vanishing_certificate(const QuiverFlagSpec& spec, const BundleTerm& term) {
  check_term_shape(spec, term);
  for (int i = 1; i <= spec.rho(); ++i) {
    const int bound = -(spec.s()[i] - spec.dims()[i]);
    for (int entry : term.w[i - 1])
      if (entry < bound) return false;
  }
  return true;
}

BundleSymbol pushforward_step(const QuiverFlagSpec& spec,
                              const BundleSymbol& symbol, int i) {
  if (i < 1 || i > spec.rho())
    fail(ErrorCode::InvalidInput, "pushforward_step: vertex out of range");

  // Blocks of F_i: the source arrows merged into one free block, then one
  // block per internal arrow, in arrow order.
  std::vector<Block> blocks;
  int source_rank = 0;
  for (int k : spec.arrows_into(i))
    if (spec.quiver().arrows[k].tail == 0) ++source_rank;
  if (source_rank > 0) blocks.push_back({0, source_rank});
  for (int k : spec.arrows_into(i)) {
    int t = spec.quiver().arrows[k].tail;
    if (t != 0) blocks.push_back({t, spec.dims()[t]});
  }

  BundleSymbol out;
  for (const auto& [term, mult] : symbol) {
    check_term_shape(spec, term);
    for (int j = i + 1; j <= spec.rho(); ++j)
      if (!is_zero(term.w[j - 1]))
        fail(ErrorCode::InvalidInput,
             "pushforward_step: level " + std::to_string(j) +
                 " not yet eliminated");

    const Weight& lam = term.w[i - 1];
    check_bott_range(spec, lam, i);
    if (lam.back() < 0) continue;  // certified acyclic deletion
    Partition lambda = trim(lam);

    if (lambda.empty()) {
      BundleTerm passed = term;
      out[passed] += mult;
      continue;
    }

    auto sink = [&](const std::vector<Partition>& picked, const Int& m) {
      // Work list of partial terms while merging the picked partitions into
      // the tail vertices; the source block contributes a scalar factor.
      std::vector<std::pair<BundleTerm, Int>> work;
      BundleTerm base = term;
      base.w[i - 1].assign(spec.dims()[i], 0);
      Int factor = mult * m;
      std::size_t first = 0;
      if (blocks[0].tail == 0) {
        factor *= gl_dimension(picked[0], blocks[0].rank);
        first = 1;
      }
      if (factor == 0) return;
      work.push_back({base, factor});
      for (std::size_t b = first; b < blocks.size(); ++b) {
        if (picked[b].empty()) continue;
        const int t = blocks[b].tail;
        std::vector<std::pair<BundleTerm, Int>> next;
        for (auto& [wt, wmult] : work) {
          auto merged = tensor_merge(wt.w[t - 1], picked[b], spec.dims()[t]);
          for (const auto& [neww, c] : merged) {
            BundleTerm nt = wt;
            nt.w[t - 1] = neww;
            next.push_back({nt, wmult * c});
          }
        }
        work = std::move(next);
      }
      for (auto& [wt, wmult] : work) out[wt] += wmult;
    };

    std::vector<Partition> picked;
    distribute(blocks, 0, lambda, Int(1),
               picked, sink);
  }

  // Drop zero multiplicities produced by cancellation-free accumulation.
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Int h0_dim(const QuiverFlagSpec& spec, const BundleTerm& term) {
  spec.require_nonempty();
  check_term_shape(spec, term);
  for (int i = 1; i <= spec.rho(); ++i) check_bott_range(spec, term.w[i - 1], i);

  BundleSymbol symbol{{term, Int(1)}};
  for (int i = spec.rho(); i >= 1; --i)
    symbol = pushforward_step(spec, symbol, i);

  Int result(0);
  for (const auto& [t, mult] : symbol) {
    for (const auto& w : t.w)
      if (!is_zero(w))
        fail(ErrorCode::InvalidInput,
             "h0_dim: nonscalar term survived elimination");
    result += mult;
  }
  return result;
}

Int hom_dim(const QuiverFlagSpec& spec, const BundleTerm& a,
            const BundleTerm& b) {
  spec.require_nonempty();
  check_term_shape(spec, a);
  check_term_shape(spec, b);

  // Per vertex, expand dual(A_i) tensor B_i exactly; every summand must lie
  // in the certified range at its vertex.
  std::vector<std::vector<std::pair<Weight, Int>>> per_vertex(spec.rho());
  for (int i = 1; i <= spec.rho(); ++i) {
    const int r = spec.dims()[i];
    Weight da = dual_weight(a.w[i - 1]);
    auto [da_part, m1] = normalize(da);
    auto [b_part, m2] = normalize(b.w[i - 1]);
    auto prods = tensor_decompose(trim(da_part), trim(b_part), r);
    const int shift = m1 + m2;
    for (const auto& [nu, c] : prods) {
      Weight w = pad(nu, r);
      for (int& x : w) x -= shift;
      check_bott_range(spec, w, i);
      per_vertex[i - 1].push_back({w, c});
    }
  }

  // Cartesian product over vertices; one h0 evaluation per combination.
  Int result(0);
  std::function<void(int, BundleTerm&, Int)> walk = [&](int i, BundleTerm& t,
                                                        Int mult) {
    if (i > spec.rho()) {
      result += mult * h0_dim(spec, t);
      return;
    }
    for (const auto& [w, c] : per_vertex[i - 1]) {
      t.w[i - 1] = w;
      walk(i + 1, t, mult * c);
    }
  };
  BundleTerm t = trivial_term(spec);
  walk(1, t, Int(1));
  return result;
}

std::vector<BundleTerm> tilting_summands(const QuiverFlagSpec& spec) {
  spec.require_strict();
  std::vector<std::vector<Partition>> young(spec.rho());
  for (int i = 1; i <= spec.rho(); ++i)
    young[i - 1] =
        enumerate_young(spec.s()[i] - spec.dims()[i], spec.dims()[i]);

  std::vector<BundleTerm> out;
  BundleTerm current = trivial_term(spec);
  std::function<void(int)> walk = [&](int i) {
    if (i > spec.rho()) {
      out.push_back(current);
      return;
    }
    for (const auto& p : young[i - 1]) {
      current.w[i - 1] = pad(p, spec.dims()[i]);
      walk(i + 1);
    }
  };
  walk(1);
  return out;
}

ExceptionalityReport strong_exceptionality_check(const QuiverFlagSpec& spec) {
  auto summands = tilting_summands(spec);
  ExceptionalityReport report;
  for (const auto& a : summands)
    for (const auto& b : summands) {
      // hom_dim throws OutOfBottRangeError exactly when some Ext could be
      // nonzero; reaching the end of the loop certifies the pair.
      try {
        (void)hom_dim(spec, a, b);
      } catch (const OutOfBottRangeError&) {
        report.strongly_exceptional = false;
      }
      ++report.pairs_checked;
    }
  return report;
}

Int endomorphism_dim(const QuiverFlagSpec& spec) {
  auto summands = tilting_summands(spec);
  Int total(0);
  for (const auto& a : summands)
    for (const auto& b : summands) total += hom_dim(spec, a, b);
  return total;
}

Int tilting_rank(const QuiverFlagSpec& spec) {
  auto summands = tilting_summands(spec);
  Int total(0);
  for (const auto& t : summands) {
    Int rank(1);
    for (int i = 1; i <= spec.rho(); ++i)
      rank *= gl_dimension(trim(t.w[i - 1]), spec.dims()[i]);
    total += rank;
  }
  return total;
}

}  // namespace qfv

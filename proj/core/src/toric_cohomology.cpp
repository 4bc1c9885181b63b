#include "qfv/toric_cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <thread>
#include <unordered_map>

#include "qfv/errors.hpp"
#include "qfv/linalg.hpp"

namespace qfv {

IrrelevantComplex irrelevant_complex(const QuiverFlagSpec& spec) {
  spec.require_toric();
  const int n = (int)spec.quiver().arrows.size();
  if (n > 63)
    fail(ErrorCode::InvalidInput, "more than 63 arrows is out of scope");
  IrrelevantComplex c;
  c.ground = n;
  for (int i = 1; i <= spec.rho(); ++i) {
    std::uint64_t m = 0;
    for (int k : spec.arrows_into(i)) m |= (1ull << k);
    c.in_masks.push_back(m);
  }
  return c;
}

std::vector<Int> reduced_cohomology(const IrrelevantComplex& complex,
                                    std::uint64_t z) {
  const int zsize = std::popcount(z);
  if (zsize > 20)
    fail(ErrorCode::InvalidInput,
         "induced subcomplex with more than 20 vertices is out of scope");

  // Faces grouped by cardinality; the empty face is always present.
  std::vector<std::vector<std::uint64_t>> faces(zsize + 1);
  std::uint64_t sub = z;
  for (;;) {
    if (complex.is_face(sub)) faces[std::popcount(sub)].push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & z;
  }

  // Boundary of a size-s face hits its size-(s-1) subsets with alternating
  // signs; over the rationals only the ranks matter.
  std::vector<std::size_t> rank(zsize + 2, 0);
  for (int s = 1; s <= zsize; ++s) {
    if (faces[s].empty() || faces[s - 1].empty()) continue;
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t t = 0; t < faces[s - 1].size(); ++t)
      index[faces[s - 1][t]] = t;
    IntMatrix m(faces[s].size(), faces[s - 1].size());
    for (std::size_t row = 0; row < faces[s].size(); ++row) {
      std::uint64_t f = faces[s][row];
      int sign = 1;
      for (std::uint64_t bits = f; bits;) {
        std::uint64_t low = bits & (~bits + 1);
        auto it = index.find(f & ~low);
        if (it != index.end()) m.at(row, it->second) = sign;
        sign = -sign;
        bits ^= low;
      }
    }
    rank[s] = rank_fraction_free(m);
  }

  // Slot s holds dim H~^{s-1} = #faces of size s - rank_s - rank_{s+1}.
  std::vector<Int> out(zsize + 1, Int(0));
  for (int s = 0; s <= zsize; ++s)
    out[s] = Int((long)faces[s].size()) - (long)rank[s] - (long)rank[s + 1];
  return out;
}

DegreeLattice degree_lattice(const QuiverFlagSpec& spec) {
  spec.require_toric();
  const int n = (int)spec.quiver().arrows.size();
  const int verts = spec.quiver().vertices;

  DegreeLattice lat;
  lat.arrows = n;
  lat.rank = n - spec.rho();
  lat.tree_arrow.assign(verts, -1);

  // Grow the spanning tree from the source, always taking the smallest
  // arrow index whose tail is already reached. With canonical labels the
  // tail of a tree arrow is always smaller than its head.
  std::vector<bool> reached(verts, false);
  reached[0] = true;
  for (int added = 1; added < verts; ++added) {
    int pick = -1;
    for (int k = 0; k < n; ++k) {
      const auto& a = spec.quiver().arrows[k];
      if (reached[a.tail] && !reached[a.head]) {
        pick = k;
        break;
      }
    }
    if (pick < 0)
      fail(ErrorCode::UnreachableVertex, "spanning tree construction failed");
    reached[spec.quiver().arrows[pick].head] = true;
    lat.tree_arrow[spec.quiver().arrows[pick].head] = pick;
  }

  // pathvec(v): arrows on the tree path from the source to v.
  std::vector<std::vector<int>> pathvec(verts);
  for (int v = 1; v < verts; ++v) {
    const int k = lat.tree_arrow[v];
    pathvec[v] = pathvec[spec.quiver().arrows[k].tail];
    pathvec[v].push_back(k);
  }

  std::vector<bool> is_tree(n, false);
  for (int v = 1; v < verts; ++v) is_tree[lat.tree_arrow[v]] = true;

  // Fundamental cycle of a nontree arrow a: t -> h is a + path(t) - path(h);
  // the shared prefix cancels, so entries stay in {-1, 0, 1}.
  for (int k = 0; k < n; ++k) {
    if (is_tree[k]) continue;
    std::vector<long> cycle(n, 0);
    cycle[k] += 1;
    for (int e : pathvec[spec.quiver().arrows[k].tail]) cycle[e] += 1;
    for (int e : pathvec[spec.quiver().arrows[k].head]) cycle[e] -= 1;
    lat.basis.push_back(std::move(cycle));
  }
  return lat;
}

std::vector<long> DegreeLattice::lift(const QuiverFlagSpec& spec,
                                      const std::vector<Int>& theta) const {
  const int verts = spec.quiver().vertices;
  if ((int)theta.size() != verts - 1)
    fail(ErrorCode::LengthMismatch, "degree length must be rho");

  // Flow on the tree: the arrow into v carries the theta total of the
  // subtree hanging at v. Children always have larger labels.
  std::vector<long> subtree(verts, 0);
  for (int v = verts - 1; v >= 1; --v) {
    Int t = theta[v - 1];
    if (t < -1000000000L || t > 1000000000L)
      fail(ErrorCode::InvalidInput, "degree entry out of engine range");
    subtree[v] += t.get_si();
    const int parent = spec.quiver().arrows[tree_arrow[v]].tail;
    if (parent >= 1) subtree[parent] += subtree[v];
  }
  std::vector<long> u(arrows, 0);
  for (int v = 1; v < verts; ++v) u[tree_arrow[v]] = subtree[v];
  return u;
}

namespace {

// Where the scan accumulates: one counter per cohomological degree, plus a
// flag per support class recording that this shell met the class at all.
struct ShellTally {
  std::vector<long long> h;
  std::vector<unsigned char> hit;
};

// The restriction of the irrelevant complex to a negative-support set splits
// as a join over the per-vertex in-arrow groups. A nonempty incomplete group
// is a cone point (contractible join factor), so the reduced cohomology is
// one-dimensional exactly when the set is a union of complete in-arrow sets,
// concentrated in degree sum(s_i - 1) - 1 over the chosen vertices. The
// public reduced_cohomology op computes the same values from boundary ranks;
// the tests pin the two against each other.
struct SupportTable {
  int ground = 0;
  bool dense = false;
  std::vector<signed char> table;                 // mask -> k, -1 for zero
  std::unordered_map<std::uint64_t, int> sparse;  // only nonzero masks

  int degree_of(std::uint64_t mask) const {
    if (dense) return table[mask];
    auto it = sparse.find(mask);
    return it == sparse.end() ? -1 : it->second;
  }
};

SupportTable support_table(const QuiverFlagSpec& spec) {
  SupportTable t;
  t.ground = (int)spec.quiver().arrows.size();
  if (t.ground > 63)
    fail(ErrorCode::InvalidInput, "more than 63 arrows is out of scope");
  const int rho = spec.rho();
  std::vector<std::uint64_t> in_masks(rho + 1, 0);
  for (int i = 1; i <= rho; ++i)
    for (int k : spec.arrows_into(i)) in_masks[i] |= (1ull << k);

  t.dense = t.ground <= 22;
  if (t.dense) t.table.assign(1ull << t.ground, -1);
  for (std::uint64_t pick = 0; pick < (1ull << rho); ++pick) {
    std::uint64_t mask = 0;
    int k = 0;
    for (int i = 1; i <= rho; ++i)
      if (pick & (1ull << (i - 1))) {
        mask |= in_masks[i];
        k += spec.s()[i] - 1;
      }
    if (t.dense)
      t.table[mask] = (signed char)k;
    else
      t.sparse[mask] = k;
  }
  return t;
}

// Exact integer max-flow on a handful of nodes via shortest augmenting
// paths. Degrees are range-checked by the lift, so capacities stay well
// inside long long.
struct FlowNet {
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<Arc>> g;

  explicit FlowNet(int nodes) : g(nodes) {}

  int add(int from, int to, long long cap) {
    g[from].push_back({to, cap, (int)g[to].size()});
    g[to].push_back({from, 0, (int)g[from].size() - 1});
    return (int)g[from].size() - 1;
  }

  // Net flow routed through a forward arc equals the residual capacity that
  // accumulated on its reverse twin.
  long long through(int from, int index) const {
    const Arc& a = g[from][index];
    return g[a.to][a.rev].cap;
  }

  long long max_flow(int s, int t) {
    long long total = 0;
    for (;;) {
      std::vector<int> prev_node(g.size(), -1), prev_arc(g.size(), -1);
      std::vector<int> queue{s};
      prev_node[s] = s;
      for (std::size_t qi = 0; qi < queue.size() && prev_node[t] < 0; ++qi) {
        const int v = queue[qi];
        for (int e = 0; e < (int)g[v].size(); ++e) {
          const Arc& a = g[v][e];
          if (a.cap <= 0 || prev_node[a.to] >= 0) continue;
          prev_node[a.to] = v;
          prev_arc[a.to] = e;
          queue.push_back(a.to);
        }
      }
      if (prev_node[t] < 0) return total;
      long long push = -1;
      for (int v = t; v != s; v = prev_node[v]) {
        const long long cap = g[prev_node[v]][prev_arc[v]].cap;
        if (push < 0 || cap < push) push = cap;
      }
      for (int v = t; v != s; v = prev_node[v]) {
        Arc& a = g[prev_node[v]][prev_arc[v]];
        a.cap -= push;
        g[a.to][a.rev].cap += push;
      }
      total += push;
    }
  }
};

// One support class per subset of choice vertices: the exponent vectors of
// degree theta whose negative support is exactly the union of the chosen
// in-arrow sets. Substituting u_a = -1 - w_a on those arrows turns the class
// into the nonnegative integer flows w with fixed vertex excesses on the
// quiver with the chosen in-arrows reversed. That graph is still acyclic
// (reversed arrows strictly descend the topological order and no forward
// arrow re-enters a chosen vertex), so one small max-flow run settles
// feasibility and returns an explicit member when one exists. Flow systems
// have integral polytopes, and a conformal cycle decomposition between any
// two members steps each nontree exponent by at most one, so the shell radii
// met by a class form one contiguous interval containing the witness radius.
// The scan leans on both facts: a class that never showed by its witness
// radius is impossible, and a class that went quiet for one shell after
// showing is finished.
struct SupportClass {
  std::uint64_t mask = 0;
  long long witness_radius = 0;
};

std::vector<SupportClass> support_classes(const QuiverFlagSpec& spec,
                                          const DegreeLattice& lattice,
                                          const std::vector<long>& theta) {
  const auto& arrows = spec.quiver().arrows;
  const int n = (int)arrows.size();
  const int verts = spec.quiver().vertices;
  const int rho = spec.rho();

  std::vector<std::uint64_t> in_masks(rho + 1, 0);
  for (int i = 1; i <= rho; ++i)
    for (int k : spec.arrows_into(i)) in_masks[i] |= (1ull << k);

  std::vector<int> nontree;
  {
    std::vector<bool> is_tree(n, false);
    for (int v = 1; v < verts; ++v)
      if (lattice.tree_arrow[v] >= 0) is_tree[lattice.tree_arrow[v]] = true;
    for (int k = 0; k < n; ++k)
      if (!is_tree[k]) nontree.push_back(k);
  }

  std::vector<SupportClass> feasible;
  for (std::uint64_t pick = 0; pick < (1ull << rho); ++pick) {
    std::uint64_t mask = 0;
    for (int i = 1; i <= rho; ++i)
      if (pick & (1ull << (i - 1))) mask |= in_masks[i];

    // Vertex excesses of the substituted flow; the source soaks up whatever
    // the others demand, so its excess is forced rather than free.
    std::vector<long long> excess(verts, 0);
    for (int i = 1; i <= rho; ++i) excess[i] = theta[i - 1];
    for (int a = 0; a < n; ++a) {
      if (!(mask >> a & 1)) continue;
      if (arrows[a].head >= 1) excess[arrows[a].head] += 1;
      if (arrows[a].tail >= 1) excess[arrows[a].tail] -= 1;
    }
    for (int v = 1; v < verts; ++v) excess[0] -= excess[v];

    long long total_pos = 0;
    for (int v = 0; v < verts; ++v)
      if (excess[v] > 0) total_pos += excess[v];

    const int src = verts, snk = verts + 1;
    FlowNet net(verts + 2);
    std::vector<int> arc_at(n), arc_index(n);
    for (int a = 0; a < n; ++a) {
      const bool reversed = (mask >> a) & 1;
      const int from = reversed ? arrows[a].head : arrows[a].tail;
      const int to = reversed ? arrows[a].tail : arrows[a].head;
      arc_at[a] = from;
      arc_index[a] = net.add(from, to, total_pos);
    }
    for (int v = 0; v < verts; ++v) {
      if (excess[v] > 0) net.add(v, snk, excess[v]);
      if (excess[v] < 0) net.add(src, v, -excess[v]);
    }
    if (net.max_flow(src, snk) != total_pos) continue;

    SupportClass cls;
    cls.mask = mask;
    for (int a : nontree) {
      const long long w = net.through(arc_at[a], arc_index[a]);
      const long long u = (mask >> a & 1) ? -1 - w : w;
      cls.witness_radius = std::max(cls.witness_radius, u < 0 ? -u : u);
    }
    feasible.push_back(cls);
  }
  return feasible;
}

}  // namespace

CohomologyResult cohomology_dims(const QuiverFlagSpec& spec,
                                 const std::vector<Int>& theta,
                                 const CohomologyOptions& opts) {
  spec.require_toric();
  spec.require_nonempty();
  const int n = (int)spec.quiver().arrows.size();
  const long dim = dimension(spec).get_si();

  const auto lattice = degree_lattice(spec);
  const auto table = support_table(spec);
  const std::vector<long> u0 = lattice.lift(spec, theta);
  const int m = lattice.rank;

  std::vector<long> theta_plain(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i)
    theta_plain[i] = theta[i].get_si();
  const auto classes = support_classes(spec, lattice, theta_plain);
  std::unordered_map<std::uint64_t, int> class_index;
  for (std::size_t i = 0; i < classes.size(); ++i)
    class_index[classes[i].mask] = (int)i;

  CohomologyResult result;
  result.h.assign(dim + 1, Int(0));

  auto visit = [&](const std::vector<long>& u, ShellTally& tally) {
    std::uint64_t mask = 0;
    for (int a = 0; a < n; ++a)
      if (u[a] < 0) mask |= (1ull << a);
    const int k = table.degree_of(mask);
    if (k < 0) return;
    auto it = class_index.find(mask);
    if (k > dim || it == class_index.end())
      fail(ErrorCode::InvalidInput,
           "internal: a term escaped the support analysis");
    tally.h[k] += 1;
    tally.hit[it->second] = 1;
  };

  // Scans the coordinates j..m-1 with the running point u; at least one
  // coordinate must sit on the shell boundary (radius r) unless one already
  // does, so each lattice point is visited in exactly one shell.
  std::function<void(int, long, bool, std::vector<long>&, ShellTally&)> scan =
      [&](int j, long r, bool touched, std::vector<long>& u,
          ShellTally& tally) {
        if (j == m) {
          if (touched || r == 0) visit(u, tally);
          return;
        }
        const auto& b = lattice.basis[j];
        auto add = [&](long c) {
          for (int a = 0; a < n; ++a) u[a] += c * b[a];
        };
        if (!touched && j == m - 1 && r > 0) {
          add(-r);
          scan(j + 1, r, true, u, tally);
          add(2 * r);
          scan(j + 1, r, true, u, tally);
          add(-r);
          return;
        }
        add(-r);
        for (long c = -r;; ++c) {
          scan(j + 1, r, touched || c == -r || c == r, u, tally);
          if (c == r) break;
          add(1);
        }
        add(-r);
      };

  // A class is waiting until its first term, active while terms keep coming,
  // and finished for good after one quiet shell (its radii are contiguous).
  // The scan is complete once every feasible class has finished; a class
  // still waiting past its witness radius would mean the analysis above and
  // the enumeration disagree, which is a bug worth failing loudly on.
  enum : unsigned char { waiting, active, finished };
  std::vector<unsigned char> state(classes.size(), waiting);

  const int radius = std::max(0, opts.search_radius);
  for (long r = 0; r <= radius; ++r) {
    ShellTally tally;
    tally.h.assign(dim + 1, 0);
    tally.hit.assign(classes.size(), 0);

    if (m == 0) {
      if (r == 0) {
        std::vector<long> u = u0;
        visit(u, tally);
      }
    } else if (opts.jobs > 1 && m >= 1 && r > 0) {
      // Slice the outermost coordinate; exact integer merges keep the
      // result independent of the thread count.
      const int jobs = std::min<long>(opts.jobs, 2 * r + 1);
      std::vector<ShellTally> parts(jobs);
      std::vector<std::thread> threads;
      const long span = 2 * r + 1;
      for (int t = 0; t < jobs; ++t) {
        parts[t].h.assign(dim + 1, 0);
        parts[t].hit.assign(classes.size(), 0);
        const long from = -r + (span * t) / jobs;
        const long to = -r + (span * (t + 1)) / jobs - 1;
        threads.emplace_back([&, t, from, to]() {
          std::vector<long> u(n);
          for (long c0 = from; c0 <= to; ++c0) {
            for (int a = 0; a < n; ++a)
              u[a] = u0[a] + c0 * lattice.basis[0][a];
            if (m == 1) {
              if (std::labs(c0) == r) visit(u, parts[t]);
            } else {
              scan(1, r, std::labs(c0) == r, u, parts[t]);
            }
          }
        });
      }
      for (auto& th : threads) th.join();
      for (const auto& p : parts) {
        for (long k = 0; k <= dim; ++k) tally.h[k] += p.h[k];
        for (std::size_t i = 0; i < tally.hit.size(); ++i)
          tally.hit[i] |= p.hit[i];
      }
    } else {
      std::vector<long> u = u0;
      scan(0, r, false, u, tally);
    }

    for (long k = 0; k <= dim; ++k) result.h[k] += (long)tally.h[k];
    result.radius_used = (int)r;

    bool all_finished = true;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (tally.hit[i]) {
        if (state[i] == finished)
          fail(ErrorCode::InvalidInput,
               "internal: a support class resumed after a quiet shell");
        state[i] = active;
      } else if (state[i] == active) {
        state[i] = finished;
      } else if (state[i] == waiting && r >= classes[i].witness_radius) {
        fail(ErrorCode::InvalidInput,
             "internal: a support class missed its witness shell");
      }
      all_finished = all_finished && state[i] == finished;
    }
    if (all_finished) {
      result.stabilized = true;
      break;
    }
  }
  if (m == 0) result.stabilized = true;
  return result;
}

bool vanishing_region_check(const QuiverFlagSpec& spec,
                            const std::vector<Int>& theta) {
  spec.require_toric();
  if ((int)theta.size() != spec.rho())
    fail(ErrorCode::LengthMismatch, "degree length must be rho");
  for (int i = 1; i <= spec.rho(); ++i)
    if (theta[i - 1] <= -spec.s()[i]) return false;
  return true;
}

bool serre_dual_check(const QuiverFlagSpec& spec, const std::vector<Int>& theta,
                      const CohomologyOptions& opts) {
  const auto anti = anticanonical_exponents(spec);
  std::vector<Int> dual(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i)
    dual[i] = Int(-anti[i]) - theta[i];

  auto lhs = cohomology_dims(spec, theta, opts);
  auto rhs = cohomology_dims(spec, dual, opts);
  if (!lhs.stabilized || !rhs.stabilized)
    fail(ErrorCode::SearchBudgetExceeded,
         "duality check needs both scans to stabilize; raise the radius");
  const std::size_t top = lhs.h.size() - 1;
  for (std::size_t k = 0; k < lhs.h.size(); ++k)
    if (lhs.h[k] != rhs.h[top - k]) return false;
  return true;
}

bool cone_spot_check(const QuiverFlagSpec& spec, const std::vector<Int>& apex,
                     int k, const CohomologyOptions& opts) {
  auto res = cohomology_dims(spec, apex, opts);
  if (k < 0 || k >= (int)res.h.size())
    fail(ErrorCode::InvalidInput, "cohomological degree out of range");
  if (res.h[k] >= 1) return true;
  if (!res.stabilized)
    fail(ErrorCode::SearchBudgetExceeded,
         "no witness found below the radius and the scan did not stabilize");
  return false;
}

}  // namespace qfv

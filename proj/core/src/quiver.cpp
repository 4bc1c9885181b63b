#include "qfv/quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "qfv/errors.hpp"

namespace qfv {

namespace {

void check_arrow_range(const Quiver& q) {
  if (q.vertices <= 0)
    fail(ErrorCode::InvalidInput, "quiver needs at least one vertex");
  for (const auto& a : q.arrows) {
    if (a.tail < 0 || a.tail >= q.vertices || a.head < 0 ||
        a.head >= q.vertices)
      fail(ErrorCode::InvalidInput, "arrow endpoint out of range");
    if (a.tail == a.head) fail(ErrorCode::CyclicQuiver, "loop arrow");
  }
}

}  // namespace

QuiverDiagnostics validate(const Quiver& q) {
  check_arrow_range(q);
  const int n = q.vertices;

  std::vector<int> indegree(n, 0);
  for (const auto& a : q.arrows) ++indegree[a.head];

  std::vector<int> sources;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) sources.push_back(v);
  if (sources.size() > 1) {
    std::string list;
    for (int v : sources) list += (list.empty() ? "" : ", ") + std::to_string(v);
    fail(ErrorCode::MultipleSources, "source vertices: " + list);
  }
  if (sources.empty())
    fail(ErrorCode::CyclicQuiver, "every vertex has an incoming arrow");

  // Kahn's algorithm with a min-heap gives the canonical topological order:
  // among ready vertices, the smallest original label goes first. The unique
  // source is ready first, so it receives the new label 0.
  std::vector<std::vector<int>> out(n);
  for (const auto& a : q.arrows) out[a.tail].push_back(a.head);
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  std::vector<int> remaining = indegree;
  ready.push(sources[0]);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : out[v])
      if (--remaining[w] == 0) ready.push(w);
  }
  if ((int)order.size() < n) {
    // Some vertex never became ready: either it sits on a directed cycle or
    // it hangs off one. Distinguish by reachability of a cycle.
    for (int v = 0; v < n; ++v)
      if (remaining[v] > 0 && indegree[v] > 0) {
        // A vertex with all arrows accounted for would have drained.
        fail(ErrorCode::CyclicQuiver,
             "vertex " + std::to_string(v) + " is blocked by a directed cycle");
      }
    fail(ErrorCode::CyclicQuiver, "directed cycle present");
  }

  // Reachability from the source (the quiver is acyclic, and the source is
  // first in topological order, so any unreachable vertex has no incoming
  // path at all).
  std::vector<bool> reach(n, false);
  reach[sources[0]] = true;
  for (int v : order)
    if (reach[v])
      for (int w : out[v]) reach[w] = true;
  for (int v = 0; v < n; ++v)
    if (!reach[v])
      fail(ErrorCode::UnreachableVertex,
           "vertex " + std::to_string(v) + " unreachable from the source");

  return QuiverDiagnostics{order};
}

QuiverFlagSpec::QuiverFlagSpec(Quiver q, std::vector<int> dims) {
  auto diag = validate(q);
  const int n = q.vertices;
  if ((int)dims.size() != n)
    fail(ErrorCode::LengthMismatch,
         "dimension vector has " + std::to_string(dims.size()) +
             " entries for " + std::to_string(n) + " vertices");

  // new_label[old] inverts diag.order.
  std::vector<int> new_label(n);
  for (int v = 0; v < n; ++v) new_label[diag.order[v]] = v;

  quiver_.vertices = n;
  quiver_.arrows.reserve(q.arrows.size());
  for (const auto& a : q.arrows)
    quiver_.arrows.push_back({new_label[a.tail], new_label[a.head]});
  dims_.resize(n);
  for (int v = 0; v < n; ++v) dims_[v] = dims[diag.order[v]];
  input_order_ = diag.order;

  for (int v = 0; v < n; ++v)
    if (dims_[v] < 1)
      fail(ErrorCode::InvalidInput, "dimension vector entries must be >= 1");
  if (dims_[0] != 1)
    fail(ErrorCode::InvalidInput, "the source must carry dimension 1");

  s_.assign(n, 0);
  s_prime_.assign(n, 0);
  in_arrows_.assign(n, {});
  for (int k = 0; k < (int)quiver_.arrows.size(); ++k) {
    const auto& a = quiver_.arrows[k];
    s_[a.head] += dims_[a.tail];
    s_prime_[a.tail] += dims_[a.head];
    in_arrows_[a.head].push_back(k);
  }
}

bool QuiverFlagSpec::is_nonempty() const {
  for (int i = 1; i < quiver_.vertices; ++i)
    if (dims_[i] > s_[i]) return false;
  return true;
}

bool QuiverFlagSpec::is_strict() const {
  for (int i = 1; i < quiver_.vertices; ++i)
    if (dims_[i] >= s_[i]) return false;
  return true;
}

bool QuiverFlagSpec::is_toric() const {
  for (int i = 0; i < quiver_.vertices; ++i)
    if (dims_[i] != 1) return false;
  return true;
}

void QuiverFlagSpec::require_nonempty() const {
  for (int i = 1; i < quiver_.vertices; ++i)
    if (dims_[i] > s_[i])
      fail(ErrorCode::EmptyModuli,
           "r_" + std::to_string(i) + " = " + std::to_string(dims_[i]) +
               " exceeds s_" + std::to_string(i) + " = " +
               std::to_string(s_[i]));
}

void QuiverFlagSpec::require_strict() const {
  require_nonempty();
  for (int i = 1; i < quiver_.vertices; ++i)
    if (dims_[i] >= s_[i])
      fail(ErrorCode::NotStrict,
           "r_" + std::to_string(i) + " = s_" + std::to_string(i) + " = " +
               std::to_string(s_[i]) +
               "; contract such vertices first (see simplify)");
}

void QuiverFlagSpec::require_toric() const {
  for (int i = 0; i < quiver_.vertices; ++i)
    if (dims_[i] != 1)
      fail(ErrorCode::NotToric,
           "vertex " + std::to_string(i) + " has dimension " +
               std::to_string(dims_[i]) + "; toric specs need all ones");
}

Int dimension(const QuiverFlagSpec& spec) {
  spec.require_nonempty();
  Int d(0);
  for (int i = 1; i < spec.quiver().vertices; ++i)
    d += Int(spec.dims()[i]) * (spec.s()[i] - spec.dims()[i]);
  return d;
}

Int path_count(const QuiverFlagSpec& spec, int i, int j) {
  const int n = spec.quiver().vertices;
  if (i < 0 || i >= n || j < 0 || j >= n)
    fail(ErrorCode::InvalidInput, "path_count: vertex out of range");
  // Vertices are topologically sorted, so one sweep over heads suffices.
  std::vector<Int> total(n, Int(0));
  total[i] = 1;
  for (int v = 0; v < n; ++v)
    for (int k : spec.arrows_into(v))
      total[v] += total[spec.quiver().arrows[k].tail];
  return total[j];
}

std::vector<int> anticanonical_exponents(const QuiverFlagSpec& spec) {
  spec.require_nonempty();
  std::vector<int> out;
  for (int i = 1; i < spec.quiver().vertices; ++i)
    out.push_back(spec.s()[i] - spec.s_prime()[i]);
  return out;
}

bool fano_sufficient(const QuiverFlagSpec& spec) {
  for (int i = 1; i < spec.quiver().vertices; ++i)
    if (spec.s()[i] <= spec.s_prime()[i]) return false;
  return true;
}

QuiverFlagSpec simplify(const QuiverFlagSpec& spec) {
  Quiver q = spec.quiver();
  std::vector<int> dims = spec.dims();

  for (;;) {
    // Recompute s for the current graph.
    std::vector<int> s(q.vertices, 0);
    std::vector<int> in_count(q.vertices, 0);
    std::vector<int> in_arrow(q.vertices, -1);
    for (int k = 0; k < (int)q.arrows.size(); ++k) {
      s[q.arrows[k].head] += dims[q.arrows[k].tail];
      ++in_count[q.arrows[k].head];
      in_arrow[q.arrows[k].head] = k;
    }

    int victim = -1;
    for (int v = 0; v < q.vertices; ++v)
      if (in_count[v] > 0 && dims[v] == 1 && s[v] == 1) {
        victim = v;
        break;
      }
    if (victim < 0) break;

    // The unique incoming arrow; its tail absorbs the victim.
    const int into = in_arrow[victim];
    const int target = q.arrows[into].tail;

    Quiver next;
    next.vertices = q.vertices - 1;
    std::vector<int> relabel(q.vertices);
    int cursor = 0;
    for (int v = 0; v < q.vertices; ++v)
      relabel[v] = (v == victim) ? -1 : cursor++;
    for (int k = 0; k < (int)q.arrows.size(); ++k) {
      if (k == into) continue;
      Arrow a = q.arrows[k];
      if (a.tail == victim) a.tail = target;
      next.arrows.push_back({relabel[a.tail], relabel[a.head]});
    }
    std::vector<int> next_dims;
    for (int v = 0; v < q.vertices; ++v)
      if (v != victim) next_dims.push_back(dims[v]);
    q = std::move(next);
    dims = std::move(next_dims);
  }

  return QuiverFlagSpec(q, dims);
}

std::optional<Int> unstable_codimension(const QuiverFlagSpec& spec) {
  spec.require_nonempty();
  if (spec.rho() == 0) return std::nullopt;
  Int best = 0;
  bool first = true;
  for (int i = 1; i < spec.quiver().vertices; ++i) {
    Int c = Int(spec.s()[i]) - spec.dims()[i] + 1;
    if (first || c < best) {
      best = c;
      first = false;
    }
  }
  return best;
}

std::vector<Int> special_weight(const QuiverFlagSpec& spec) {
  std::vector<Int> theta(spec.quiver().vertices, Int(1));
  Int total(0);
  for (int i = 1; i < spec.quiver().vertices; ++i) total += spec.dims()[i];
  theta[0] = -total;
  return theta;
}

}  // namespace qfv

// qfv: invariants, tilting data, cohomology and section quivers for quiver
// flag varieties, over exact arithmetic. JSON reports go to standard output,
// diagnostics to standard error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfv/errors.hpp"
#include "qfv/json_io.hpp"
#include "qfv/moduli.hpp"
#include "qfv/plucker.hpp"
#include "qfv/quiver.hpp"
#include "qfv/schur.hpp"
#include "qfv/toric.hpp"
#include "qfv/toric_cohomology.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qfv;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::CyclicQuiver:
    case ErrorCode::MultipleSources:
    case ErrorCode::UnreachableVertex:
    case ErrorCode::LengthMismatch:
      return 2;
    case ErrorCode::EmptyModuli:
      return 3;
    case ErrorCode::SearchBudgetExceeded:
      return 5;
    default:
      return 4;  // unmet precondition (NotStrict, NotToric, ...)
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Int> parse_int_list(const std::string& text, char sep) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(parse_int(item));
  if (out.empty()) fail(ErrorCode::InvalidInput, "empty integer list");
  return out;
}

json str_list(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json int_list(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_si());
  return a;
}

json quiver_doc(const Quiver& q) {
  json doc;
  doc["vertices"] = q.vertices;
  doc["arrows"] = json::array();
  for (const auto& a : q.arrows) doc["arrows"].push_back({a.tail, a.head});
  return doc;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_analyze(const std::string& path) {
  auto spec = parse_spec_json(read_file(path));
  json doc;
  doc["vertices"] = spec.quiver().vertices;
  doc["rho"] = spec.rho();
  doc["dims"] = spec.dims();
  doc["input_order"] = spec.input_order();
  doc["nonempty"] = spec.is_nonempty();
  doc["strict"] = spec.is_strict();
  doc["toric"] = spec.is_toric();
  doc["dim"] = to_string(dimension(spec));
  json s = json::array(), sp = json::array();
  for (int i = 1; i <= spec.rho(); ++i) {
    s.push_back(spec.s()[i]);
    sp.push_back(spec.s_prime()[i]);
  }
  doc["s"] = s;
  doc["s_prime"] = sp;
  doc["anticanonical"] = anticanonical_exponents(spec);
  doc["fano_sufficient"] = fano_sufficient(spec);
  doc["special_weight"] = str_list(special_weight(spec));
  auto uc = unstable_codimension(spec);
  doc["unstable_codimension"] = uc ? json(to_string(*uc)) : json(nullptr);
  emit(doc);
  return 0;
}

int cmd_simplify(const std::string& path) {
  auto spec = parse_spec_json(read_file(path));
  std::cout << spec_to_json(simplify(spec)) << "\n";
  return 0;
}

int cmd_tilting(const std::string& path) {
  auto spec = parse_spec_json(read_file(path));
  const auto summands = tilting_summands(spec);
  json doc;
  doc["count"] = (long)summands.size();
  doc["rank"] = to_string(tilting_rank(spec));
  doc["summands"] = json::array();
  for (const auto& t : summands) {
    json term = json::array();
    for (const auto& w : t.w) term.push_back(w);
    doc["summands"].push_back(term);
  }
  const auto cert = strong_exceptionality_check(spec);
  doc["pairs_checked"] = cert.pairs_checked;
  doc["strongly_exceptional"] = cert.strongly_exceptional;
  doc["endomorphism_dim"] = to_string(endomorphism_dim(spec));
  emit(doc);
  return 0;
}

int cmd_cohomology(const std::string& path, const std::string& theta_text,
                   int radius, int jobs) {
  auto spec = parse_spec_json(read_file(path));
  const auto theta = parse_int_list(theta_text, ',');
  CohomologyOptions opts;
  opts.search_radius = radius;
  opts.jobs = jobs;
  const auto res = cohomology_dims(spec, theta, opts);
  json doc;
  doc["theta"] = int_list(theta);
  doc["h"] = str_list(res.h);
  doc["stabilized"] = res.stabilized;
  doc["radius"] = res.radius_used;
  doc["in_vanishing_region"] = vanishing_region_check(spec, theta);
  emit(doc);
  if (!res.stabilized) {
    std::cerr << "warning: scan did not stabilize; the values are lower "
                 "bounds (raise --radius)\n";
    return 5;
  }
  return 0;
}

int cmd_sections(const std::string& path, const std::string& degrees_text,
                 int bound) {
  const auto cox = parse_cox_json(read_file(path));
  std::vector<std::vector<Int>> deltas;
  std::string item;
  std::istringstream in(degrees_text);
  while (std::getline(in, item, ';')) deltas.push_back(parse_int_list(item, ','));
  if (deltas.empty()) fail(ErrorCode::InvalidInput, "no degrees given");

  const auto sq = quiver_of_sections(cox, deltas);
  json doc;
  doc["quiver"] = quiver_doc(sq.quiver);
  doc["labels"] = json::array();
  for (const auto& l : sq.labels)
    doc["labels"].push_back(monomial_string(cox, l));
  doc["binomials"] = json::array();
  for (const auto& b : kernel_binomials(sq, bound)) {
    json row;
    row["lhs"] = b.lhs;
    row["rhs"] = b.rhs;
    row["label"] = monomial_string(cox, b.label);
    doc["binomials"].push_back(row);
  }
  doc["path_length_bound"] = bound;
  doc["multiplication_surjective"] = multiplication_surjective(cox, deltas);
  emit(doc);
  return 0;
}

int cmd_plucker(const std::string& path, const std::string& mode_name) {
  auto spec = parse_spec_json(read_file(path));
  PluckerMode mode;
  if (mode_name == "toric-exact")
    mode = PluckerMode::ToricExact;
  else if (mode_name == "generic-rank")
    mode = PluckerMode::GenericRank;
  else
    fail(ErrorCode::InvalidInput, "unknown mode " + mode_name);

  const auto pq = plucker_quiver(spec, mode);
  const auto amb = plucker_ambient(spec, mode);
  json doc;
  doc["mode"] = plucker_mode_name(pq.mode);
  doc["heuristic"] = pq.heuristic;
  doc["pairs"] = json::array();
  for (const auto& p : pq.pairs) {
    json row;
    row["i"] = p.i;
    row["j"] = p.j;
    row["dim_hom"] = to_string(p.dim_hom);
    row["factoring"] = to_string(p.factoring);
    row["n_prime"] = to_string(p.n_prime);
    doc["pairs"].push_back(row);
  }
  doc["ambient"] = quiver_doc(amb.spec.quiver());
  doc["ambient"]["dim"] = to_string(amb.dim);
  doc["codim"] = to_string(amb.codim);
  emit(doc);
  return 0;
}

int cmd_probe_cox(const std::string& path, int bound) {
  auto spec = parse_spec_json(read_file(path));
  const auto rows = cox_probe(spec, bound);
  json doc;
  doc["bound"] = bound;
  bool all = true;
  doc["degrees"] = json::array();
  for (const auto& r : rows) {
    json row;
    row["theta"] = int_list(r.theta);
    row["image"] = to_string(r.image);
    row["target"] = to_string(r.target);
    row["surjective"] = r.surjective;
    all = all && r.surjective;
    doc["degrees"].push_back(row);
  }
  doc["all_surjective"] = all;
  emit(doc);
  return 0;
}

int cmd_stability(const std::string& quiver_path, const std::string& rep_path) {
  auto spec = parse_spec_json(read_file(quiver_path));
  auto rep = parse_representation_json(spec, read_file(rep_path));
  check_shapes(spec, rep);

  json doc;
  json ranks = json::array(), required = json::array();
  bool stable = true;
  for (int i = 1; i <= spec.rho(); ++i) {
    auto block = coarse_block(spec, rep, i);
    const auto r = rank_fraction_free(block);
    ranks.push_back((long)r);
    required.push_back(spec.dims()[i]);
    stable = stable && (int)r == spec.dims()[i];
  }
  doc["stable"] = stable;
  doc["ranks"] = ranks;
  doc["required"] = required;
  if (stable) {
    const auto chart = echelon_chart(spec, rep);
    doc["pivot_cols"] = chart.pivot_cols;
    doc["free_entries"] = to_string(chart.free_entries);
  }
  emit(doc);
  return 0;
}

// CLI11 refuses option values with a leading dash unless they parse as plain
// numbers, and "--theta -2,0,0" must work; fold such values into key=value.
std::vector<std::string> fold_value_args(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--theta" || args[i] == "--degrees") {
      args[i] += "=" + args[i + 1];
      args.erase(args.begin() + i + 1);
    }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of quiver flag varieties, over exact arithmetic"};
  app.require_subcommand(1);

  std::string quiver_path, cox_path, rep_path;
  std::string theta_text, degrees_text, mode_name = "generic-rank";
  int radius = 8, jobs = 1, bound = 2;

  auto* analyze = app.add_subcommand(
      "analyze", "dimension, s / s', anticanonical and stability data");
  analyze->add_option("quiver", quiver_path, "quiver document")->required();

  auto* simplify_cmd = app.add_subcommand(
      "simplify", "contract vertices with r_i = s_i = 1");
  simplify_cmd->add_option("quiver", quiver_path, "quiver document")
      ->required();

  auto* tilting = app.add_subcommand(
      "tilting", "tilting summands, rank and endomorphism dimension");
  tilting->add_option("quiver", quiver_path, "quiver document")->required();

  auto* cohomology = app.add_subcommand(
      "cohomology", "line bundle cohomology on a toric spec");
  cohomology->add_option("quiver", quiver_path, "quiver document")->required();
  cohomology->add_option("--theta", theta_text, "degree, e.g. -2,0,0")
      ->required();
  cohomology->add_option("--radius", radius, "lattice search radius");
  cohomology->add_option("--jobs", jobs, "enumeration threads");

  auto* sections = app.add_subcommand(
      "sections", "quiver of sections of a graded polynomial ring");
  sections->add_option("cox", cox_path, "cox document")->required();
  sections->add_option("--degrees", degrees_text, "e.g. 0,0;1,0;0,1")
      ->required();
  sections->add_option("--bound", bound, "path length bound for relations");

  auto* plucker = app.add_subcommand(
      "plucker", "determinant section quiver and ambient toric variety");
  plucker->add_option("quiver", quiver_path, "quiver document")->required();
  plucker->add_option("--mode", mode_name, "toric-exact or generic-rank");

  auto* probe = app.add_subcommand(
      "probe-cox", "per-degree surjectivity of the ambient Cox map");
  probe->add_option("quiver", quiver_path, "quiver document")->required();
  probe->add_option("--bound", bound, "componentwise degree bound");

  auto* stability = app.add_subcommand(
      "stability", "full-rank stability test for a representation");
  stability->add_option("quiver", quiver_path, "quiver document")->required();
  stability->add_option("rep", rep_path, "representation document")
      ->required();

  try {
    auto args = fold_value_args(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 takes them reversed
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(quiver_path);
    if (*simplify_cmd) return cmd_simplify(quiver_path);
    if (*tilting) return cmd_tilting(quiver_path);
    if (*cohomology) return cmd_cohomology(quiver_path, theta_text, radius, jobs);
    if (*sections) return cmd_sections(cox_path, degrees_text, bound);
    if (*plucker) return cmd_plucker(quiver_path, mode_name);
    if (*probe) return cmd_probe_cox(quiver_path, bound);
    if (*stability) return cmd_stability(quiver_path, rep_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "qfv/json_io.hpp"

#include <json.hpp>

#include "qfv/errors.hpp"

namespace qfv {

namespace {

using json = nlohmann::ordered_json;

json parse_or_fail(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    fail(ErrorCode::InvalidInput, "input is not valid JSON");
  return doc;
}

long small_int(const json& v, const char* what) {
  if (!v.is_number_integer())
    fail(ErrorCode::InvalidInput, std::string(what) + " must be an integer");
  return v.get<long>();
}

}  // namespace

QuiverFlagSpec parse_spec_json(const std::string& text) {
  json doc = parse_or_fail(text);
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc.contains("arrows") || !doc.contains("dims"))
    fail(ErrorCode::InvalidInput,
         "quiver document needs vertices, arrows and dims");

  Quiver q;
  q.vertices = (int)small_int(doc["vertices"], "vertices");
  if (!doc["arrows"].is_array())
    fail(ErrorCode::InvalidInput, "arrows must be an array");
  for (const auto& a : doc["arrows"]) {
    if (!a.is_array() || a.size() != 2)
      fail(ErrorCode::InvalidInput, "each arrow must be a [tail, head] pair");
    q.arrows.push_back(
        {(int)small_int(a[0], "arrow tail"), (int)small_int(a[1], "arrow head")});
  }

  if (!doc["dims"].is_array())
    fail(ErrorCode::InvalidInput, "dims must be an array");
  std::vector<int> dims;
  for (const auto& d : doc["dims"])
    dims.push_back((int)small_int(d, "dimension entry"));

  return QuiverFlagSpec(q, dims);
}

std::string spec_to_json(const QuiverFlagSpec& spec) {
  json doc;
  doc["vertices"] = spec.quiver().vertices;
  doc["arrows"] = json::array();
  for (const auto& a : spec.quiver().arrows)
    doc["arrows"].push_back({a.tail, a.head});
  doc["dims"] = spec.dims();
  return doc.dump();
}

GradedCoxData parse_cox_json(const std::string& text) {
  json doc = parse_or_fail(text);
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("degrees"))
    fail(ErrorCode::InvalidInput, "cox document needs vars and degrees");
  if (!doc["vars"].is_array() || !doc["degrees"].is_array())
    fail(ErrorCode::InvalidInput, "vars and degrees must be arrays");

  GradedCoxData data;
  for (const auto& v : doc["vars"]) {
    if (!v.is_string())
      fail(ErrorCode::InvalidInput, "variable names must be strings");
    data.vars.push_back(v.get<std::string>());
  }
  for (const auto& row : doc["degrees"]) {
    if (!row.is_array())
      fail(ErrorCode::InvalidInput, "each degree must be an array");
    std::vector<Int> d;
    for (const auto& entry : row) {
      // Accept both plain integers and the decimal strings the writer emits.
      if (entry.is_string())
        d.push_back(parse_int(entry.get<std::string>()));
      else
        d.push_back(Int(small_int(entry, "degree")));
    }
    data.degrees.push_back(std::move(d));
  }
  if (data.vars.size() != data.degrees.size())
    fail(ErrorCode::LengthMismatch, "one degree vector per variable");
  for (const auto& row : data.degrees)
    if (row.size() != data.degrees[0].size())
      fail(ErrorCode::LengthMismatch, "degree vectors must share a length");
  return data;
}

std::string cox_to_json(const GradedCoxData& data) {
  json doc;
  doc["vars"] = data.vars;
  doc["degrees"] = json::array();
  for (const auto& row : data.degrees) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    doc["degrees"].push_back(r);
  }
  return doc.dump();
}

Representation parse_representation_json(const QuiverFlagSpec& spec,
                                         const std::string& text) {
  json doc = parse_or_fail(text);
  if (!doc.is_array())
    fail(ErrorCode::InvalidInput,
         "representation document must be an array over arrows");
  const auto& arrows = spec.quiver().arrows;
  if (doc.size() != arrows.size())
    fail(ErrorCode::LengthMismatch, "one matrix per arrow");

  Representation rep;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::size_t rows = spec.dims()[arrows[k].head];
    const std::size_t cols = spec.dims()[arrows[k].tail];
    const auto& entries = doc[k];
    if (!entries.is_array() || entries.size() != rows * cols)
      fail(ErrorCode::ShapeMismatch,
           "matrix " + std::to_string(k + 1) + " needs " +
               std::to_string(rows * cols) + " row-major entries");
    RatMatrix m(rows, cols);
    for (std::size_t t = 0; t < rows * cols; ++t) {
      const auto& e = entries[t];
      if (e.is_string())
        m.at(t / cols, t % cols) = parse_rat(e.get<std::string>());
      else if (e.is_number_integer())
        m.at(t / cols, t % cols) = Rat(e.get<long>());
      else
        fail(ErrorCode::InvalidInput,
             "matrix entries must be rational strings or integers");
    }
    rep.maps.push_back(std::move(m));
  }
  return rep;
}

}  // namespace qfv

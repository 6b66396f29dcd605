#include "pargeo/descriptor.hpp"

#include <json.hpp>

namespace pargeo {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw descriptor_error("descriptor field '" + field + "': " + what);
}

Rational rational_at(const json& j, const std::string& field) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const math_error& e) {
    bad(field, e.what());
  }
  bad(field, "expected an integer or a \"p/q\" string");
}

int int_at(const json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  return j.get<int>();
}

// rows of rationals, all the same length
Matrix matrix_rows(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad(field, "expected an array of arrays");
  const int rows = int(j.size());
  const int cols = int(j[0].size());
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || int(j[r].size()) != cols) bad(field, "ragged rows");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rational_at(j[r][c], field);
  }
  return m;
}

Vec vector_entries(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) bad(field, "expected a non-empty array");
  Vec v(j.size(), Rational(0));
  for (size_t i = 0; i < j.size(); ++i) v[i] = rational_at(j[i], field);
  return v;
}

// list of basis columns
Matrix matrix_columns(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) bad(field, "expected a non-empty array of columns");
  std::vector<Vec> cols;
  for (size_t i = 0; i < j.size(); ++i) cols.push_back(vector_entries(j[i], field));
  Matrix m(int(cols[0].size()), int(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != cols[0].size()) bad(field, "columns of unequal length");
    m.set_col(int(c), cols[c]);
  }
  return m;
}

AlgebraSpec parse_algebra(const json& j) {
  if (!j.is_object()) bad("algebra", "expected an object");
  if (!j.contains("family")) bad("algebra.family", "missing");
  const std::string fam = j["family"].is_string() ? j["family"].get<std::string>() : "";
  FieldTag field = FieldTag::R;
  if (j.contains("field")) {
    const std::string f = j["field"].is_string() ? j["field"].get<std::string>() : "";
    if (f == "R") field = FieldTag::R;
    else if (f == "C") field = FieldTag::C;
    else if (f == "H") field = FieldTag::H;
    else bad("algebra.field", "expected \"R\", \"C\" or \"H\"");
  }
  auto m = [&] { return j.contains("m") ? int_at(j["m"], "algebra.m") : (bad("algebra.m", "missing"), 0); };
  auto p = [&] { return j.contains("p") ? int_at(j["p"], "algebra.p") : (bad("algebra.p", "missing"), 0); };
  auto q = [&] { return j.contains("q") ? int_at(j["q"], "algebra.q") : (bad("algebra.q", "missing"), 0); };
  AlgebraSpec spec;
  if (fam == "sl") spec = AlgebraSpec::sl(m(), field);
  else if (fam == "su") spec = AlgebraSpec::su(p(), q());
  else if (fam == "so") spec = AlgebraSpec::so(p(), q());
  else if (fam == "so_C") spec = AlgebraSpec::so_C(m());
  else if (fam == "so_star") spec = AlgebraSpec::so_star(m());
  else if (fam == "sp") spec = AlgebraSpec::sp(m(), field);
  else if (fam == "sp_pq") spec = AlgebraSpec::sp_pq(p(), q());
  else bad("algebra.family", "unknown family '" + fam + "'");
  try {
    spec.validate();
  } catch (const math_error& e) {
    bad("algebra", e.what());
  }
  return spec;
}

GradingDescriptor parse_grading(const json& j) {
  if (!j.is_object() || !j.contains("type")) bad("grading.type", "missing");
  const std::string type = j["type"].is_string() ? j["type"].get<std::string>() : "";
  GradingDescriptor g;
  if (type == "canonical") {
    g.canonical = true;
    if (!j.contains("geometry") || !j["geometry"].is_string())
      bad("grading.geometry", "missing or not a string");
    g.geometry = j["geometry"].get<std::string>();
    if (j.contains("block")) g.block = int_at(j["block"], "grading.block");
  } else if (type == "element") {
    g.canonical = false;
    if (!j.contains("rep_diag")) bad("grading.rep_diag", "missing");
    for (const Rational& r : vector_entries(j["rep_diag"], "grading.rep_diag"))
      g.rep_diag.push_back(r);
  } else {
    bad("grading.type", "expected \"canonical\" or \"element\"");
  }
  return g;
}

CandidateDescriptor parse_candidate(const json& j) {
  if (!j.is_object()) bad("candidate", "expected an object");
  CandidateDescriptor c;
  int seen = 0;
  if (j.contains("metric")) {
    c.kind = CandidateKind::metric;
    c.data = matrix_rows(j["metric"], "candidate.metric");
    ++seen;
  }
  if (j.contains("complex_structure")) {
    c.kind = CandidateKind::complex_structure;
    c.data = matrix_rows(j["complex_structure"], "candidate.complex_structure");
    ++seen;
  }
  if (j.contains("subspace")) {
    c.kind = CandidateKind::subspace;
    c.data = matrix_columns(j["subspace"], "candidate.subspace");
    ++seen;
  }
  if (seen != 1)
    bad("candidate", "expected exactly one of metric, complex_structure, subspace");
  return c;
}

DecompositionDescriptor parse_decomposition(const json& j) {
  if (!j.is_object() || !j.contains("pieces") || !j.contains("line"))
    bad("decomposition", "expected pieces and line");
  DecompositionDescriptor d;
  if (!j["pieces"].is_array() || j["pieces"].empty())
    bad("decomposition.pieces", "expected a non-empty array");
  for (size_t i = 0; i < j["pieces"].size(); ++i)
    d.pieces.push_back(matrix_columns(j["pieces"][i], "decomposition.pieces"));
  d.line = Matrix::column(vector_entries(j["line"], "decomposition.line"));
  return d;
}

json echo_algebra(const AlgebraSpec& s) {
  json j;
  j["family"] = family_str(s.family);
  switch (s.family) {
    case Family::sl:
    case Family::sp_F:
      j["field"] = field_str(s.field);
      j["m"] = s.m;
      break;
    case Family::so_C:
    case Family::so_star:
      j["m"] = s.m;
      break;
    default:
      j["p"] = s.p;
      j["q"] = s.q;
  }
  return j;
}

json echo_matrix_rows(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json echo_matrix_columns(const Matrix& m) {
  json cols = json::array();
  for (int c = 0; c < m.cols(); ++c) {
    json col = json::array();
    for (int r = 0; r < m.rows(); ++r) col.push_back(m.at(r, c).str());
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

RunDescriptor parse_run_descriptor(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw descriptor_error(std::string("descriptor: ") + e.what());
  }
  if (!j.is_object()) throw descriptor_error("descriptor: expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "algebra" && key != "grading" && key != "candidate" && key != "decomposition" &&
        key != "output" && key != "seed")
      bad(key, "unknown field");
  }
  if (!j.contains("algebra")) bad("algebra", "missing");

  RunDescriptor d;
  d.algebra = parse_algebra(j["algebra"]);
  if (j.contains("grading")) d.grading = parse_grading(j["grading"]);
  if (j.contains("candidate")) d.candidate = parse_candidate(j["candidate"]);
  if (j.contains("decomposition")) d.decomposition = parse_decomposition(j["decomposition"]);
  if (j.contains("output")) {
    if (!j["output"].is_string()) bad("output", "expected \"text\" or \"json\"");
    d.output = j["output"].get<std::string>();
    if (d.output != "text" && d.output != "json") bad("output", "expected \"text\" or \"json\"");
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      bad("seed", "expected an integer");
    d.seed = j["seed"].get<std::uint64_t>();
  }

  json echo;
  echo["algebra"] = echo_algebra(d.algebra);
  if (d.grading) {
    json g;
    if (d.grading->canonical) {
      g["type"] = "canonical";
      g["geometry"] = d.grading->geometry;
      if (d.grading->block != 0) g["block"] = d.grading->block;
    } else {
      g["type"] = "element";
      json diag = json::array();
      for (const Rational& r : d.grading->rep_diag) diag.push_back(r.str());
      g["rep_diag"] = std::move(diag);
    }
    echo["grading"] = std::move(g);
  }
  if (d.candidate) {
    json c;
    switch (d.candidate->kind) {
      case CandidateKind::metric: c["metric"] = echo_matrix_rows(d.candidate->data); break;
      case CandidateKind::complex_structure:
        c["complex_structure"] = echo_matrix_rows(d.candidate->data);
        break;
      case CandidateKind::subspace: c["subspace"] = echo_matrix_columns(d.candidate->data); break;
    }
    echo["candidate"] = std::move(c);
  }
  if (d.decomposition) {
    json dec;
    dec["pieces"] = json::array();
    for (const Matrix& piece : d.decomposition->pieces)
      dec["pieces"].push_back(echo_matrix_columns(piece));
    json line = json::array();
    for (int r = 0; r < d.decomposition->line.rows(); ++r)
      line.push_back(d.decomposition->line.at(r, 0).str());
    dec["line"] = std::move(line);
    echo["decomposition"] = std::move(dec);
  }
  d.echo = echo.dump();
  return d;
}

}  // namespace pargeo

#include "immlift/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace immlift::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> word_from_json(const json& j) {
  if (!j.is_array()) fail("word must be an array of variable indices");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(int_from_json(v, "variable index"));
  return out;
}

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail("complex value must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const Permutation& p) { return json(p.images()); }

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) fail("permutation must be an array of images");
  std::vector<int> images;
  for (const auto& v : j) images.push_back(int_from_json(v, "permutation image"));
  return Permutation(std::move(images));
}

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("matrix must be a non-empty array of rows");
  const auto rows = static_cast<int>(j.size());
  if (!j[0].is_array()) fail("matrix rows must be arrays");
  const auto cols = static_cast<int>(j[0].size());
  std::vector<Complex> entries;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols) fail("matrix rows must have equal length");
    for (const auto& entry : row) entries.push_back(complex_from_json(entry));
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

json to_json(const TracePolynomial& p) {
  json terms = json::array();
  for (const auto& term : p.terms()) {
    terms.push_back({{"coeff", to_json(term.coefficient)}, {"traced", term.traced}, {"open", term.open}});
  }
  return {{"n", p.n()}, {"terms", std::move(terms)}};
}

TracePolynomial polynomial_from_json(const json& j) {
  const int n = int_from_json(field(j, "n"), "n");
  std::vector<TraceTerm> terms;
  for (const auto& t : field(j, "terms")) {
    std::vector<std::vector<int>> traced;
    for (const auto& word : field(t, "traced")) traced.push_back(word_from_json(word));
    terms.emplace_back(complex_from_json(field(t, "coeff")), std::move(traced), word_from_json(field(t, "open")));
  }
  return TracePolynomial(n, std::move(terms));
}

json to_json(const GroupFunction& f) {
  json elements = json::array();
  json values = json::array();
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    elements.push_back(to_json(f.domain().elements()[k]));
    values.push_back(to_json(f.values()[k]));
  }
  return {{"n", f.degree()}, {"elements", std::move(elements)}, {"values", std::move(values)}};
}

GroupFunction function_from_json(const json& j) {
  const int n = int_from_json(field(j, "n"), "n");
  const auto& elements = field(j, "elements");
  const auto& values = field(j, "values");
  if (!elements.is_array() || !values.is_array() || elements.size() != values.size()) {
    fail("function needs equally long 'elements' and 'values' arrays");
  }
  std::vector<Permutation> perms;
  for (const auto& e : elements) perms.push_back(permutation_from_json(e));
  auto group = std::make_shared<const Subgroup>(n, perms);
  if (group->order() != perms.size()) fail("function lists an element twice");
  std::vector<Complex> ordered(perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k) ordered[group->index_of(perms[k])] = complex_from_json(values[k]);
  return GroupFunction(std::move(group), std::move(ordered));
}

json to_json(const CharacterTable& table) {
  json classes = json::array();
  for (const auto& rep : table.class_representatives) classes.push_back(to_json(rep));
  json characters = json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    json values = json::array();
    for (const auto& rep : table.class_representatives) values.push_back(to_json(table.rows[r](rep)));
    characters.push_back({{"label", table.labels[r]}, {"values", std::move(values)}});
  }
  return {{"n", table.group->degree()}, {"classes", std::move(classes)}, {"characters", std::move(characters)}};
}

CharacterTable table_from_json(const json& j) {
  const int n = int_from_json(field(j, "n"), "n");
  CharacterTable table;
  for (const auto& rep : field(j, "classes")) table.class_representatives.push_back(permutation_from_json(rep));
  table.group = std::make_shared<const Subgroup>(generate_subgroup(n, table.class_representatives));
  for (const auto& row : field(j, "characters")) {
    const auto& label = field(row, "label");
    if (!label.is_string()) fail("character label must be a string");
    std::vector<Complex> values;
    for (const auto& v : field(row, "values")) values.push_back(complex_from_json(v));
    table.labels.push_back(label.get<std::string>());
    table.rows.push_back(class_function(table.group, table.class_representatives, values));
  }
  return table;
}

json to_json(const VerificationReport& report) {
  json out = {
      {"spec_name", report.spec_name},
      {"kind", report.kind},
      {"trials", report.trials},
      {"dim", report.dim},
      {"seed", report.seed},
      {"min_statistic", report.min_statistic},
      {"hermiticity_defect_max", report.hermiticity_defect_max},
      {"failures", report.failures},
      {"tolerance", report.tolerance},
      {"status", to_string(report.status)},
      {"conjecture", report.conjecture},
  };
  if (report.counterexample) {
    json inputs = json::array();
    for (const auto& m : report.counterexample->inputs) inputs.push_back(to_json(m));
    out["counterexample"] = {{"trial", report.counterexample->trial},
                             {"statistic", report.counterexample->statistic},
                             {"inputs", std::move(inputs)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json to_json(const SuiteReport& report) {
  json reports = json::array();
  for (const auto& r : report.reports) reports.push_back(to_json(r));
  return {{"suite", report.suite}, {"all_pass", report.all_pass()}, {"reports", std::move(reports)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) { return matrix_from_json(read_json_file(path)); }

}  // namespace immlift::io

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "immlift/characters.hpp"
#include "immlift/matcore.hpp"
#include "immlift/tracepoly.hpp"
#include "immlift/verifier.hpp"

// Wire formats:
//   complex      [re, im]
//   permutation  [2, 1, 3]                          (1-based images)
//   matrix       [[[re, im], ...], ...]             (row-major; bare numbers read as real)
//   polynomial   {"n": 3, "terms": [{"coeff": [re, im], "traced": [[1, 2]], "open": [1]}]}
//   function     {"n": 4, "elements": [perm, ...], "values": [complex, ...]}
//   table        {"n": 4, "classes": [perm, ...],
//                 "characters": [{"label": "chi1", "values": [complex, ...]}]}
// Parse failures throw std::invalid_argument.
namespace immlift::io {

using nlohmann::json;

json to_json(Complex z);
Complex complex_from_json(const json& j);

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const TracePolynomial& p);
TracePolynomial polynomial_from_json(const json& j);

json to_json(const GroupFunction& f);
GroupFunction function_from_json(const json& j);

json to_json(const CharacterTable& table);
/// The group is generated by the class representatives (no proper subgroup
/// meets every conjugacy class).
CharacterTable table_from_json(const json& j);

json to_json(const VerificationReport& report);
json to_json(const SuiteReport& report);

json read_json_file(const std::filesystem::path& path);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace immlift::io

#pragma once

#include "nilsum/graded.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace nilsum {

using json = nlohmann::ordered_json;

/// Algebra file format: { schema_version, p, dim, labels, sc, grading? }
/// with sc a list of [i, j, k, c] entries for i < j, sorted, and grading a
/// per-basis degree list. Canonical key order, so identical algebras
/// serialize to identical bytes.
json algebra_to_json(const LieAlgebra& L, const std::optional<std::vector<int>>& grading = {});

/// Parses and re-validates: antisymmetry is structural, Jacobi is checked
/// and a failure names the first violating triple.
LieAlgebra algebra_from_json(const json& doc, std::optional<std::vector<int>>* grading_out = nullptr);

void save_json(const std::string& path, const json& doc);
json load_json(const std::string& path);

json subspace_to_json(const Subspace& s);

} // namespace nilsum

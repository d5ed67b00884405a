#include "nilsum/serialize.hpp"

#include <fstream>

namespace nilsum {

json algebra_to_json(const LieAlgebra& L, const std::optional<std::vector<int>>& grading) {
  json doc;
  doc["schema_version"] = 1;
  doc["p"] = L.p();
  doc["dim"] = L.dim();
  doc["labels"] = L.labels();
  json sc = json::array();
  for (auto [i, j] : L.nonzero_pairs())
    for (const Term& t : L.basis_bracket(i, j)) sc.push_back({i, j, t.k, t.c});
  doc["sc"] = std::move(sc);
  if (grading) doc["grading"] = *grading;
  return doc;
}

LieAlgebra algebra_from_json(const json& doc, std::optional<std::vector<int>>* grading_out) {
  if (!doc.contains("schema_version") || doc["schema_version"].get<int>() != 1)
    throw std::invalid_argument("algebra_from_json: unsupported schema_version");
  uint32_t p = doc.at("p").get<uint32_t>();
  size_t dim = doc.at("dim").get<size_t>();
  std::vector<std::string> labels = doc.at("labels").get<std::vector<std::string>>();
  LieAlgebra L(p, dim, labels);

  std::map<std::pair<size_t, size_t>, std::vector<Term>> sc;
  for (const auto& entry : doc.at("sc")) {
    if (!entry.is_array() || entry.size() != 4)
      throw std::invalid_argument("algebra_from_json: sc entries must be [i, j, k, c]");
    size_t i = entry[0].get<size_t>();
    size_t j = entry[1].get<size_t>();
    size_t k = entry[2].get<size_t>();
    uint32_t c = entry[3].get<uint32_t>();
    if (i >= j || j >= dim || k >= dim)
      throw std::invalid_argument("algebra_from_json: sc index out of range");
    sc[{i, j}].push_back({k, c});
  }
  for (auto& [ij, terms] : sc) L.set_bracket(ij.first, ij.second, std::move(terms));

  StructureReport rep = validate_structure(L);
  if (!rep.ok) {
    auto [i, j, k] = rep.violations.front();
    throw std::invalid_argument("algebra_from_json: Jacobi identity fails on basis triple (" +
                                std::to_string(i) + ", " + std::to_string(j) + ", " +
                                std::to_string(k) + ")");
  }

  if (grading_out) {
    if (doc.contains("grading")) {
      auto degs = doc["grading"].get<std::vector<int>>();
      if (degs.size() != dim)
        throw std::invalid_argument("algebra_from_json: grading length mismatch");
      GradedAlgebra G;
      G.algebra = L;
      G.degree = degs;
      validate_grading(G);
      *grading_out = std::move(degs);
    } else {
      grading_out->reset();
    }
  }
  return L;
}

void save_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_json: cannot open " + path);
  out << doc.dump(2) << "\n";
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_json: cannot open " + path);
  json doc;
  in >> doc;
  return doc;
}

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis_vector(i));
  return json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", std::move(rows)}};
}

} // namespace nilsum

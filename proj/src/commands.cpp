#include "nilsum/commands.hpp"

namespace nilsum {

namespace {

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::decomposition_found: return "decomposition_found";
    case SearchStatus::exhausted_none: return "exhausted_none";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

json stats_to_json(const SearchStats& st, bool timings) {
  json out;
  out["subspaces_scanned"] = st.subspaces_scanned;
  out["subalgebras_found"] = st.subalgebras_found;
  out["nilpotent_count"] = st.nilpotent_count;
  out["pairs_tested"] = st.pairs_tested;
  out["samples_drawn"] = st.samples_drawn;
  out["fast_path"] = st.fast_path;
  if (timings) out["elapsed_ms"] = st.elapsed_ms;
  return out;
}

json search_result_to_json(const SearchResult& r, bool timings) {
  json out;
  out["status"] = status_name(r.status);
  if (r.witness) {
    out["witness"] = json{{"A", subspace_to_json(r.witness->first)},
                          {"B", subspace_to_json(r.witness->second)}};
  }
  out["stats"] = stats_to_json(r.stats, timings);
  return out;
}

json lemma2_to_json(const Lemma2Report& r) {
  return json{{"subalgebra", r.subalgebra},
              {"homogeneous", r.homogeneous},
              {"nilpotent", r.nilpotent},
              {"degree_minus1_full", r.degree_minus1_full},
              {"prD_surjective", r.prD_surjective},
              {"all", r.all()}};
}

json lemma3_to_json(const Lemma3Report& r) {
  json out{{"preconditions_met", r.preconditions_met},
           {"F_zero", r.F_zero},
           {"F_dim", r.F.dim()},
           {"N0_iso_D", r.N0_iso_D},
           {"containment", r.containment},
           {"D_nilpotent", r.D_nilpotent}};
  if (r.non_nilpotency_witness) out["non_nilpotency_witness"] = *r.non_nilpotency_witness;
  if (r.witness_f) out["witness_f"] = *r.witness_f;
  return out;
}

json audit_to_json(const DimensionAudit& a) {
  return json{{"dim_B", a.dim_B},
              {"pm", a.pm},
              {"dim_D", a.dim_D},
              {"bound", a.bound},
              {"theorem_inequality", a.theorem_inequality},
              {"dim_L", a.dim_L},
              {"counterexample_inequality", a.counterexample_inequality},
              {"forced_dimD_lower", a.forced_dimD_lower},
              {"forces_dimD_ge_pm", a.forces_dimD_ge_pm}};
}

json lemma4_to_json(const Lemma4Report& r) {
  return json{{"candidates", r.candidates},
              {"qualifying", r.qualifying},
              {"bound", r.bound},
              {"max_qualifying_dim", r.max_qualifying_dim},
              {"all_below_bound", r.all_below_bound},
              {"all_one_dimensional", r.all_one_dimensional},
              {"qualifying_dims", r.qualifying_dims}};
}

// ------------------------------------------------------- theorem smoke

struct SmokeSample {
  LieAlgebra algebra;
  Subspace torus_part;
  Subspace nilpotent_part;
};

/// Random weighted sum: an abelian space of diagonal weights acting on a
/// bracket-closed set of elementary positions E_ij (i < j). Solvable by
/// construction and L = A + B with A abelian, B nilpotent.
SmokeSample random_weighted_nilpotent_sum(uint32_t p, DetRng& rng) {
  size_t k = 3 + rng.below(3); // matrix size 3..5
  std::vector<std::vector<bool>> chosen(k, std::vector<bool>(k, false));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) chosen[i][j] = rng.below(2) == 1;
  // close under composition so the position span is a subalgebra
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j)
        for (size_t l = j + 1; l < k; ++l)
          if (chosen[i][j] && chosen[j][l] && !chosen[i][l]) {
            chosen[i][l] = true;
            changed = true;
          }
  }
  std::vector<std::pair<size_t, size_t>> pos;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      if (chosen[i][j]) pos.emplace_back(i, j);

  size_t gens = 1 + rng.below(static_cast<uint32_t>(k));
  std::vector<Vec> weights;
  for (size_t g = 0; g < gens; ++g) weights.push_back(rng.vec(p, k));
  Subspace W = Subspace::span(p, k, weights);
  size_t r = W.dim();

  size_t dim = r + pos.size();
  std::vector<std::string> labels;
  for (size_t t = 0; t < r; ++t) labels.push_back("t" + std::to_string(t + 1));
  for (auto [i, j] : pos)
    labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));

  LieAlgebra L(p, dim, labels);
  Fp F(p);
  auto pos_index = [&](size_t i, size_t j) -> std::optional<size_t> {
    for (size_t t = 0; t < pos.size(); ++t)
      if (pos[t] == std::make_pair(i, j)) return r + t;
    return std::nullopt;
  };
  for (size_t a = 0; a < r; ++a) {
    Vec d = W.basis_vector(a);
    for (size_t t = 0; t < pos.size(); ++t) {
      uint32_t c = F.sub(d[pos[t].first], d[pos[t].second]);
      if (c) L.set_bracket(a, r + t, {{r + t, c}});
    }
  }
  for (size_t s = 0; s < pos.size(); ++s)
    for (size_t t = s + 1; t < pos.size(); ++t) {
      auto [i, j] = pos[s];
      auto [kk, l] = pos[t];
      Vec acc(dim, 0);
      if (j == kk)
        if (auto idx = pos_index(i, l)) acc[*idx] = F.add(acc[*idx], 1);
      if (l == i)
        if (auto idx = pos_index(kk, j)) acc[*idx] = F.sub(acc[*idx], 1);
      std::vector<Term> terms;
      for (size_t u = 0; u < dim; ++u)
        if (acc[u]) terms.push_back({u, acc[u]});
      L.set_bracket(r + s, r + t, std::move(terms));
    }

  std::vector<Vec> arows, brows;
  for (size_t t = 0; t < r; ++t) arows.push_back(unit_vec(dim, t));
  for (size_t t = 0; t < pos.size(); ++t) brows.push_back(unit_vec(dim, r + t));
  return {std::move(L), Subspace::span(p, dim, arows), Subspace::span(p, dim, brows)};
}

// ------------------------------------------------------- deform helpers

Mat random_degree_raising_unipotent(const GradedAlgebra& G, DetRng& rng) {
  size_t n = G.algebra.dim();
  Mat M = Mat::identity(G.algebra.p(), n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (G.degree[k] > G.degree[i]) M.at(i, k) = rng.below(G.algebra.p());
  return M;
}

json deform_suite(uint32_t p, const CommandOptions& opts) {
  json results = json::array();
  ParsedAlgebra parsed =
      parse_algebra_spec("G:S=zassenhaus(" + std::to_string(p) + ",1),m=1,D=span(d1)");
  const GradedAlgebra& G = *parsed.graded;

  // d after d vanishes on random 1-cochains
  {
    DetRng rng(opts.seed);
    bool pass = true;
    const int trials = 200;
    for (int t = 0; t < trials && pass; ++t) {
      Cochain1 phi = Cochain1::zero(p, G.algebra.dim());
      for (auto& v : phi.values) v = rng.vec(p, G.algebra.dim());
      if (!coboundary2(G.algebra, coboundary1(G.algebra, phi)).is_zero()) pass = false;
    }
    results.push_back({{"check", "d_after_d_zero"}, {"cochains", trials}, {"pass", pass}});
  }

  // sl2 / Borel round trip: filtration -> graded -> decomposition -> identity
  {
    LieAlgebra S = sl2(7);
    Subspace borel = Subspace::span(7, 3, {unit_vec(3, 0), unit_vec(3, 1)});
    Filtration F = weisfeiler_filtration(S, borel);
    GradedOfFiltration gr = associated_graded(F);
    LieAlgebra deformed = change_basis(S, gr.reps);
    auto psis = decompose_deformation(deformed, gr.graded);
    auto rep = check_maurer_cartan(gr.graded, psis);
    std::vector<int> weights;
    for (const auto& [s, c] : psis) weights.push_back(s);
    results.push_back({{"check", "mc_sl2_borel_round_trip"},
                       {"weights", weights},
                       {"pass", rep.all_zero}});
  }

  // fuzzed filtered deformations via degree-raising basis changes
  {
    DetRng rng(opts.seed + 1);
    GradedAlgebra Z = *parse_algebra_spec("zassenhaus:p=" + std::to_string(p) + ",n=1").graded;
    bool pass = true;
    int nontrivial = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
      const GradedAlgebra& target = (t % 2 == 0) ? Z : G;
      Mat M = random_degree_raising_unipotent(target, rng);
      LieAlgebra deformed = change_basis(target.algebra, M);
      auto psis = decompose_deformation(deformed, target);
      if (!psis.empty()) ++nontrivial;
      auto rep = check_maurer_cartan(target, psis);
      if (!rep.all_zero) pass = false;
    }
    results.push_back({{"check", "mc_fuzzed_deformations"},
                       {"count", trials},
                       {"nontrivial", nontrivial},
                       {"pass", pass}});
  }

  // single-entry corruption must be detected at weight 1 or 2
  {
    GradedAlgebra Z = *parse_algebra_spec("zassenhaus:p=" + std::to_string(p) + ",n=1").graded;
    DetRng rng(opts.seed + 2);
    Mat M = random_degree_raising_unipotent(Z, rng);
    LieAlgebra deformed = change_basis(Z.algebra, M);
    auto psis = decompose_deformation(deformed, Z);
    auto [it, fresh] = psis.try_emplace(1, Cochain2::zero(p, Z.algebra.dim()));
    (void)fresh;
    // bump psi_1(e_{-1}, e_0) by e_0: a legal weight-1 cell
    it->second.at(0, 1)[1] = Fp(p).add(it->second.at(0, 1)[1], 1);
    auto rep = check_maurer_cartan(Z, psis);
    bool detected = !rep.all_zero && (rep.first_failure == 1 || rep.first_failure == 2);
    results.push_back({{"check", "mc_corruption_detected"},
                       {"first_failure", rep.first_failure},
                       {"pass", detected}});
  }

  // torus weight vanishing for 1 <= k < p
  {
    bool pass = true;
    std::vector<uint32_t> ks;
    for (uint32_t k = 1; k < p; ++k) {
      ks.push_back(k);
      if (!weight_vanishing_check(G, k)) pass = false;
    }
    results.push_back({{"check", "weight_vanishing"}, {"ks", ks}, {"pass", pass}});
  }

  return results;
}

// ------------------------------------------------------- lemma2/3 suite

json lemma23_suite(uint32_t p, const CommandOptions& opts) {
  (void)opts;
  json results = json::array();
  ParsedAlgebra parsed =
      parse_algebra_spec("G:S=zassenhaus(" + std::to_string(p) + ",1),m=1,D=span(d1)");
  GradedSum& G = *parsed.graded_sum;
  const LieAlgebra& A = G.g.algebra;
  size_t dim = A.dim();

  auto tensor_row = [&](int deg, size_t mono) {
    return G.e_tensor(deg, G.om.monomial(G.om.exponents(mono)));
  };

  std::vector<Vec> base_rows;
  for (size_t b = 0; b < G.om.dim(); ++b) base_rows.push_back(tensor_row(-1, b));

  // the homogeneous model: e_{-1} & O_m + <D>
  {
    std::vector<Vec> rows = base_rows;
    rows.push_back(unit_vec(dim, G.tensor_dim));
    Subspace N = Subspace::span(p, dim, rows);
    results.push_back(
        {{"case", "lemma2_model"}, {"lemma2", lemma2_to_json(check_lemma2(G, N))}});
  }
  // degree -1 block alone: projection onto D must fail
  {
    Subspace N = Subspace::span(p, dim, base_rows);
    results.push_back(
        {{"case", "lemma2_no_projection"}, {"lemma2", lemma2_to_json(check_lemma2(G, N))}});
  }
  // the whole algebra: not nilpotent
  {
    Subspace N = Subspace::full(p, dim);
    results.push_back(
        {{"case", "lemma2_full_G"}, {"lemma2", lemma2_to_json(check_lemma2(G, N))}});
  }

  // the lifted model N = e_{-1} & O_m + <d + e_0 & x>
  Vec lifted = unit_vec(dim, G.tensor_dim);
  lifted = vec_add(p, lifted, G.e_tensor(0, G.om.monomial({1})));
  std::vector<Vec> nrows = base_rows;
  nrows.push_back(lifted);
  Subspace N = Subspace::span(p, dim, nrows);
  {
    json item;
    item["case"] = "lemma3_lifted_model";
    item["lemma2"] = lemma2_to_json(check_lemma2(G, N));
    item["lemma3"] = lemma3_to_json(check_lemma3(G, N));
    item["audit"] = audit_to_json(dimension_audit(G, N));
    results.push_back(std::move(item));
  }

  // adjoining e_0 & 1 breaks nilpotency with the exact classical witness
  {
    std::vector<Vec> rows = nrows;
    rows.push_back(tensor_row(0, 0));
    Subspace N2 = subalgebra_closure(A, Subspace::span(p, dim, rows));
    Lemma3Report r3 = check_lemma3(G, N2);
    json item;
    item["case"] = "lemma3_e0_obstruction";
    item["lemma3"] = lemma3_to_json(r3);
    bool witness_exact =
        r3.non_nilpotency_witness && *r3.non_nilpotency_witness == G.e_tensor(-1, G.om.one());
    item["witness_is_e_minus1_tensor_1"] = witness_exact;
    results.push_back(std::move(item));
  }

  // adjoining e_1 & x escapes <e_{-1}, e_0> & O_m + D after closure
  {
    std::vector<Vec> rows = nrows;
    rows.push_back(tensor_row(1, 1));
    Subspace N3 = subalgebra_closure(A, Subspace::span(p, dim, rows));
    Lemma3Report r3 = check_lemma3(G, N3);
    json item;
    item["case"] = "lemma3_degree1_escape";
    item["lemma3"] = lemma3_to_json(r3);
    // closure pulled e_0 & x inside, so F picked up x
    item["F_contains_x"] = r3.F.contains(G.om.monomial({1}));
    results.push_back(std::move(item));
  }

  // audit of the degree -1 block alone
  {
    Subspace B = Subspace::span(p, dim, base_rows);
    results.push_back(
        {{"case", "audit_degree_minus1_block"}, {"audit", audit_to_json(dimension_audit(G, B))}});
  }
  return results;
}

} // namespace

SearchOptions to_search_options(const CommandOptions& o, bool exhaustive) {
  SearchOptions s;
  s.exhaustive = exhaustive;
  s.budget_subspaces = o.budget_subspaces;
  s.randomized_budget = o.randomized_budget;
  s.budget_seconds = o.budget_seconds;
  s.seed = o.seed;
  s.exec = o.exec;
  return s;
}

json make_envelope(const std::string& command, json params, std::optional<uint64_t> seed) {
  json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  doc["params"] = std::move(params);
  if (seed) doc["seed"] = *seed;
  doc["results"] = json::array();
  doc["stats"] = json::object();
  return doc;
}

json cmd_check(const std::string& spec, const std::vector<std::string>& predicates,
               const CommandOptions& opts) {
  ParsedAlgebra parsed = parse_algebra_spec(spec);
  const LieAlgebra& L = parsed.algebra;
  json doc = make_envelope("check",
                           json{{"spec", parsed.normalized}, {"predicates", predicates}},
                           opts.seed);
  json& results = doc["results"];

  StructureReport sr = validate_structure(L);
  json violations = json::array();
  for (size_t t = 0; t < sr.violations.size() && t < 10; ++t)
    violations.push_back(sr.violations[t]);
  results.push_back({{"predicate", "validate"}, {"ok", sr.ok}, {"violations", violations}});

  Subspace full = Subspace::full(L.p(), L.dim());
  for (const std::string& pred : predicates) {
    if (pred == "validate") continue;
    if (pred == "solvable")
      results.push_back({{"predicate", pred}, {"value", is_solvable(L, full)}});
    else if (pred == "nilpotent")
      results.push_back({{"predicate", pred}, {"value", is_nilpotent(L, full)}});
    else if (pred == "dim")
      results.push_back({{"predicate", pred}, {"value", L.dim()}});
    else if (pred == "center")
      results.push_back({{"predicate", pred}, {"value", subspace_to_json(center(L))}});
    else if (pred == "one_dim_ideals") {
      auto lines = one_dim_ideals(L, opts.budget_subspaces, opts.exec);
      json basis = json::array();
      for (size_t t = 0; t < lines.size() && t < 50; ++t)
        basis.push_back(lines[t].basis_vector(0));
      results.push_back({{"predicate", pred}, {"count", lines.size()}, {"lines", basis}});
    } else if (pred == "cartan") {
      try {
        Subspace H = cartan_subalgebra(L, opts.seed);
        results.push_back({{"predicate", pred}, {"value", subspace_to_json(H)}});
      } catch (const std::runtime_error& e) {
        results.push_back({{"predicate", pred}, {"error", e.what()}});
      }
    } else {
      throw std::invalid_argument("cmd_check: unknown predicate '" + pred + "'");
    }
  }
  doc["stats"] = json{{"dim", L.dim()}, {"p", L.p()}};
  return doc;
}

json cmd_search(const std::string& spec, const std::string& mode, const CommandOptions& opts) {
  if (mode != "exhaustive" && mode != "randomized")
    throw std::invalid_argument("cmd_search: mode must be exhaustive or randomized");
  ParsedAlgebra parsed = parse_algebra_spec(spec);
  json doc = make_envelope("search",
                           json{{"spec", parsed.normalized},
                                {"mode", mode},
                                {"budget_subspaces", opts.budget_subspaces},
                                {"randomized_budget", opts.randomized_budget}},
                           opts.seed);
  SearchResult r = search_decomposition(parsed.algebra, to_search_options(opts, mode == "exhaustive"));
  doc["results"].push_back(search_result_to_json(r, opts.timings));
  doc["stats"] = json{{"dim", parsed.algebra.dim()}, {"p", parsed.algebra.p()}};
  return doc;
}

json cmd_suite(const std::string& name, const json& params, const CommandOptions& opts) {
  json doc = make_envelope("suite", json{{"name", name}, {"params", params}}, opts.seed);
  json& results = doc["results"];

  if (name == "lemma2_3") {
    uint32_t p = params.value("p", 5u);
    results = lemma23_suite(p, opts);
  } else if (name == "lemma4") {
    uint32_t p = params.value("p", 3u);
    uint32_t m = params.value("m", 1u);
    std::string mode = params.value("mode", std::string("exhaustive"));
    if (mode == "exhaustive") {
      try {
        Lemma4Report rep = lemma4_exhaustive(p, m, opts.budget_subspaces, opts.exec);
        results.push_back({{"mode", mode}, {"status", "completed"}, {"report", lemma4_to_json(rep)}});
      } catch (const BudgetExceeded& e) {
        results.push_back({{"mode", mode},
                           {"status", "budget_exhausted"},
                           {"required", e.required()},
                           {"budget", e.budget()}});
      }
    } else if (mode == "sample") {
      uint64_t samples = params.value("samples", 500u);
      Lemma4Report rep = lemma4_sample(p, m, samples, opts.seed, opts.exec);
      results.push_back({{"mode", mode},
                         {"samples", samples},
                         {"status", "completed"},
                         {"report", lemma4_to_json(rep)}});
    } else {
      throw std::invalid_argument("lemma4 suite: mode must be exhaustive or sample");
    }
  } else if (name == "deform") {
    uint32_t p = params.value("p", 5u);
    results = deform_suite(p, opts);
  } else if (name == "theorem_smoke") {
    uint32_t p = params.value("p", 7u);
    uint64_t count = params.value("count", 100u);
    DetRng rng(opts.seed);
    bool all_valid = true, all_solvable = true, all_verified = true;
    for (uint64_t t = 0; t < count; ++t) {
      SmokeSample s = random_weighted_nilpotent_sum(p, rng);
      if (!validate_structure(s.algebra).ok) all_valid = false;
      if (!is_solvable(s.algebra, Subspace::full(p, s.algebra.dim()))) all_solvable = false;
      if (!verify_decomposition(s.algebra, s.torus_part, s.nilpotent_part)) all_verified = false;
    }
    results.push_back({{"count", count},
                       {"all_valid", all_valid},
                       {"all_solvable", all_solvable},
                       {"all_decompositions_verified", all_verified}});
  } else {
    throw std::invalid_argument("cmd_suite: unknown suite '" + name + "'");
  }
  return doc;
}

json cmd_remarks(const CommandOptions& opts) {
  json doc = make_envelope("remarks", json::object(), opts.seed);
  json& results = doc["results"];

  // (a) upper triangular families split as Cartan + commutant
  {
    json item;
    item["experiment"] = "upper_triangular_cartan_plus_commutant";
    item["p"] = 7;
    json runs = json::array();
    bool all_found = true;
    for (uint32_t n = 2; n <= 4; ++n) {
      SearchResult r = search_decomposition(upper_triangular(7, n), to_search_options(opts, true));
      bool ok = r.status == SearchStatus::decomposition_found;
      all_found = all_found && ok;
      runs.push_back({{"n", n},
                      {"status", status_name(r.status)},
                      {"fast_path", r.stats.fast_path},
                      {"witness_dims",
                       r.witness ? json{r.witness->first.dim(), r.witness->second.dim()}
                                 : json::array()}});
    }
    item["runs"] = runs;
    item["all_found"] = all_found;
    results.push_back(std::move(item));
  }

  // (b) Heisenberg module sum: decomposes, no one-dimensional ideal
  {
    ParsedAlgebra parsed = parse_algebra_spec("semidirect:heisenberg_weyl,p=5");
    SearchResult r = search_decomposition(parsed.algebra, to_search_options(opts, false));
    auto ideals = one_dim_ideals(parsed.algebra, opts.budget_subspaces, opts.exec);
    results.push_back({{"experiment", "heisenberg_module_sum"},
                       {"p", 5},
                       {"status", status_name(r.status)},
                       {"fast_path", r.stats.fast_path},
                       {"one_dim_ideals", ideals.size()},
                       {"nonsupersolvable_witness",
                        r.status == SearchStatus::decomposition_found && ideals.empty()}});
  }

  // (c) two-dimensional nonabelian module sum: exhaustive expected none
  {
    ParsedAlgebra parsed = parse_algebra_spec("semidirect:two_dim_nonabelian,p=3");
    SearchResult r = search_decomposition(parsed.algebra, to_search_options(opts, true));
    json item;
    item["experiment"] = "two_dim_nonabelian_module_sum";
    item["p"] = 3;
    item["expected"] = "exhausted_none";
    item["status"] = status_name(r.status);
    item["discrepancy"] = r.status != SearchStatus::exhausted_none;
    if (r.witness)
      item["witness"] = json{{"A", subspace_to_json(r.witness->first)},
                             {"B", subspace_to_json(r.witness->second)}};
    item["stats"] = stats_to_json(r.stats, opts.timings);
    results.push_back(std::move(item));
  }
  return doc;
}

json cmd_serialize_spec(const std::string& spec, const std::string& out_path,
                        const CommandOptions& opts) {
  ParsedAlgebra parsed = parse_algebra_spec(spec);
  std::optional<std::vector<int>> grading;
  if (parsed.graded) grading = parsed.graded->degree;
  json algebra = algebra_to_json(parsed.algebra, grading);
  save_json(out_path, algebra);

  // round trip: reload, revalidate, recompare
  json reloaded = load_json(out_path);
  std::optional<std::vector<int>> grading2;
  LieAlgebra L2 = algebra_from_json(reloaded, &grading2);
  bool identical = algebra_to_json(L2, grading2) == algebra;

  json doc = make_envelope("serialize", json{{"spec", parsed.normalized}, {"out", out_path}},
                           opts.seed);
  doc["results"].push_back({{"round_trip_identical", identical},
                            {"dim", parsed.algebra.dim()},
                            {"p", parsed.algebra.p()},
                            {"grading_present", grading.has_value()}});
  return doc;
}

json cmd_load_verify(const std::string& in_path, const CommandOptions& opts) {
  json doc = make_envelope("serialize", json{{"in", in_path}}, opts.seed);
  json reloaded = load_json(in_path);
  std::optional<std::vector<int>> grading;
  LieAlgebra L = algebra_from_json(reloaded, &grading);
  doc["results"].push_back({{"valid", true},
                            {"dim", L.dim()},
                            {"p", L.p()},
                            {"grading_present", grading.has_value()}});
  return doc;
}

} // namespace nilsum

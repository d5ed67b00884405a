#pragma once

#include "nilsum/cochain.hpp"
#include "nilsum/filtration.hpp"
#include "nilsum/graded_checks.hpp"
#include "nilsum/search.hpp"
#include "nilsum/serialize.hpp"
#include "nilsum/spec_expr.hpp"

namespace nilsum {

/// Options every command shares. Timings are opt-in because they break the
/// byte-identical-output guarantee that the default reports keep.
struct CommandOptions {
  uint64_t seed = 1;
  uint64_t budget_subspaces = 2'000'000;
  uint64_t randomized_budget = 2000;
  double budget_seconds = 0;
  bool timings = false;
  Exec exec = Exec::parallel;
};

/// Report envelope: { schema_version, command, params, seed?, results, stats }.
json make_envelope(const std::string& command, json params, std::optional<uint64_t> seed);

SearchOptions to_search_options(const CommandOptions& o, bool exhaustive);

/// validate_structure plus the requested predicates:
/// solvable | nilpotent | center | one_dim_ideals | cartan | dim.
json cmd_check(const std::string& spec, const std::vector<std::string>& predicates,
               const CommandOptions& opts);

/// Nilpotent-pair decomposition search; mode is "exhaustive" or "randomized".
json cmd_search(const std::string& spec, const std::string& mode, const CommandOptions& opts);

/// Named experiment suites: lemma2_3 | lemma4 | deform | theorem_smoke.
/// params carries suite-specific keys (p, m, mode, samples).
json cmd_suite(const std::string& name, const json& params, const CommandOptions& opts);

/// The three closing-remarks experiments: (a) upper-triangular families split
/// as Cartan + commutant, (b) the Heisenberg module sum splits but has no
/// one-dimensional ideal, (c) the two-dimensional-nonabelian module sum is
/// searched exhaustively with expected outcome "exhausted_none".
json cmd_remarks(const CommandOptions& opts);

/// Build from a spec and write the algebra file; the report confirms the
/// round trip re-parses to the identical document.
json cmd_serialize_spec(const std::string& spec, const std::string& out_path,
                        const CommandOptions& opts);

/// Load an algebra file and re-validate it (Jacobi failures name a triple).
json cmd_load_verify(const std::string& in_path, const CommandOptions& opts);

} // namespace nilsum

#include <doctest.h>

#include "nilsum/commands.hpp"

#include <cstdio>
#include <filesystem>

using namespace nilsum;

TEST_CASE("spec expressions parse and normalize") {
  for (const char* spec : {"sl2:p=7", "zassenhaus:p=5,n=1", "witt:p=3,m=2",
                           "uppertriangular:p=7,n=3", "semidirect:two_dim_nonabelian,p=3",
                           "semidirect:heisenberg_weyl,p=5", "tensor:S=zassenhaus(5,1),m=1",
                           "G:S=zassenhaus(5,1),m=1,D=span(d1)"}) {
    ParsedAlgebra a = parse_algebra_spec(spec);
    // round trip: the normalized spelling reparses to the same construction
    ParsedAlgebra b = parse_algebra_spec(a.normalized);
    CHECK(b.normalized == a.normalized);
    CHECK(b.algebra.dim() == a.algebra.dim());
    CHECK(b.algebra.p() == a.algebra.p());
    CHECK(validate_structure(a.algebra).ok);
  }

  CHECK(parse_algebra_spec("tensor:S=zassenhaus(5,1),m=1").algebra.dim() == 25);
  CHECK(parse_algebra_spec("G:S=zassenhaus(5,1),m=1,D=span(d1)").algebra.dim() == 26);
  CHECK(parse_algebra_spec("semidirect:heisenberg_weyl,p=5").algebra.dim() == 8);

  // derivation tokens beyond the plain d1
  ParsedAlgebra g2 = parse_algebra_spec("G:S=zassenhaus(5,1),m=1,D=span(d1,x1d1)");
  CHECK(g2.graded_sum->d_sub.dim() == 2);
}

TEST_CASE("spec errors carry a position") {
  CHECK_THROWS_AS(parse_algebra_spec("frobnicate:p=5"), SpecParseError);
  CHECK_THROWS_AS(parse_algebra_spec("sl2:q=7"), SpecParseError);
  CHECK_THROWS_AS(parse_algebra_spec("G:S=zassenhaus(5,1),m=1"), SpecParseError);
  CHECK_THROWS_AS(parse_algebra_spec("G:S=zassenhaus(5,1),m=1,D=span(x1^5d1)"), SpecParseError);
  try {
    parse_algebra_spec("semidirect:unknown_module,p=3");
    CHECK(false);
  } catch (const SpecParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  // D must be closed under the bracket: [d1, x1x2d2] = x2 d2 escapes the span
  CHECK_THROWS_AS(parse_algebra_spec("G:S=zassenhaus(3,1),m=2,D=span(d1,x1x2d2)"),
                  SpecParseError);
}

TEST_CASE("algebra serialization round trip") {
  ParsedAlgebra z = parse_algebra_spec("zassenhaus:p=5,n=1");
  json doc = algebra_to_json(z.algebra, z.graded->degree);
  std::optional<std::vector<int>> grading;
  LieAlgebra back = algebra_from_json(doc, &grading);
  CHECK(algebra_to_json(back, grading) == doc);
  REQUIRE(grading.has_value());
  CHECK(*grading == z.graded->degree);

  // identical structure-constant tables after the round trip
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = i + 1; j < 5; ++j)
      CHECK(back.basis_bracket(i, j) == z.algebra.basis_bracket(i, j));

  // a corrupted table is rejected with the violating triple named
  json bad = doc;
  bad["sc"][0][3] = (bad["sc"][0][3].get<uint32_t>() + 1) % 5;
  try {
    algebra_from_json(bad);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("triple") != std::string::npos);
  }
}

TEST_CASE("check command reports predicates") {
  CommandOptions opts;
  json doc = cmd_check("sl2:p=7", {"solvable", "nilpotent", "dim"}, opts);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "check");
  CHECK(doc["params"]["spec"] == "sl2:p=7");
  REQUIRE(doc["results"].size() == 4);
  CHECK(doc["results"][0]["predicate"] == "validate");
  CHECK(doc["results"][0]["ok"] == true);
  CHECK(doc["results"][1]["value"] == false); // solvable
  CHECK(doc["results"][2]["value"] == false); // nilpotent
  CHECK(doc["results"][3]["value"] == 3);

  json semi = cmd_check("semidirect:two_dim_nonabelian,p=3", {"solvable"}, opts);
  CHECK(semi["results"][1]["value"] == true);

  json zass = cmd_check("zassenhaus:p=5,n=1", {}, opts);
  CHECK(zass["results"][0]["ok"] == true);
}

TEST_CASE("reports are byte deterministic in process") {
  CommandOptions opts;
  json a = cmd_search("sl2:p=7", "exhaustive", opts);
  json b = cmd_search("sl2:p=7", "exhaustive", opts);
  CHECK(a.dump() == b.dump());

  CommandOptions serial_opts = opts;
  serial_opts.exec = Exec::serial;
  json c = cmd_search("sl2:p=7", "exhaustive", serial_opts);
  CHECK(a.dump() == c.dump());

  json r1 = cmd_suite("lemma4", json{{"p", 3}, {"m", 1}, {"mode", "exhaustive"}}, opts);
  json r2 = cmd_suite("lemma4", json{{"p", 3}, {"m", 1}, {"mode", "exhaustive"}}, opts);
  CHECK(r1.dump() == r2.dump());
}

TEST_CASE("search command statuses") {
  CommandOptions opts;
  json none = cmd_search("sl2:p=7", "exhaustive", opts);
  CHECK(none["results"][0]["status"] == "exhausted_none");

  json found = cmd_search("uppertriangular:p=7,n=3", "exhaustive", opts);
  CHECK(found["results"][0]["status"] == "decomposition_found");
  CHECK(found["results"][0].contains("witness"));

  json rnd = cmd_search("semidirect:heisenberg_weyl,p=5", "randomized", opts);
  CHECK(rnd["results"][0]["status"] == "decomposition_found");
  CHECK(rnd["seed"] == opts.seed);
}

TEST_CASE("serialize command writes files that reload") {
  namespace fs = std::filesystem;
  CommandOptions opts;
  fs::path tmp = fs::temp_directory_path() / "nilsum_cli_test_algebra.json";
  json rep = cmd_serialize_spec("zassenhaus:p=5,n=1", tmp.string(), opts);
  CHECK(rep["results"][0]["round_trip_identical"] == true);
  CHECK(rep["results"][0]["grading_present"] == true);

  json verify = cmd_load_verify(tmp.string(), opts);
  CHECK(verify["results"][0]["valid"] == true);
  CHECK(verify["results"][0]["dim"] == 5);
  fs::remove(tmp);
}

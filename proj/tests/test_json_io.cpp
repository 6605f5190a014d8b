#include <doctest.h>

#include "immlift/json_io.hpp"

using namespace immlift;
using nlohmann::json;

TEST_CASE("complex and matrix formats") {
  CHECK(io::to_json(Complex(1.5, -2.0)) == json::array({1.5, -2.0}));
  CHECK(io::complex_from_json(json(3)) == Complex(3.0));
  CHECK_THROWS_AS(io::complex_from_json(json::array({1.0})), std::invalid_argument);
  CHECK_THROWS_AS(io::complex_from_json(json("x")), std::invalid_argument);

  const ComplexMatrix a = io::matrix_from_json(json::parse("[[1,2],[3,4]]"));
  CHECK(a == ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}});
  const ComplexMatrix b = io::matrix_from_json(json::parse("[[[1,0.5],2],[3,[0,-1]]]"));
  CHECK(b(0, 0) == Complex(1.0, 0.5));
  CHECK(b(1, 1) == Complex(0.0, -1.0));
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[1,2],[3]]")), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[]")), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("{\"a\":1}")), std::invalid_argument);
}

TEST_CASE("matrix round trip is exact") {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = random_complex(1 + static_cast<int>(trial % 5), derive_key(3, trial));
    const json j = json::parse(io::to_json(a).dump());
    CHECK(io::matrix_from_json(j) == a);
  }
}

TEST_CASE("permutation round trip") {
  for (const auto& p : enumerate_symmetric(4)) CHECK(io::permutation_from_json(io::to_json(p)) == p);
  CHECK_THROWS_AS(io::permutation_from_json(json::parse("[1,1]")), std::invalid_argument);
  CHECK_THROWS_AS(io::permutation_from_json(json::parse("[1.5,2]")), std::invalid_argument);
}

TEST_CASE("polynomial round trip") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& shape : partitions_of(n)) {
      const TracePolynomial p = lift_function(idempotent_function(symmetric_character(shape)));
      const TracePolynomial q = io::polynomial_from_json(json::parse(io::to_json(p).dump()));
      CHECK(q.n() == p.n());
      CHECK(q.approx_equal(p, 0.0));
    }
  }
  const json j = io::to_json(lift_function(constant_function(symmetric_group(3), 1.0)));
  CHECK(j["terms"].size() == 6);
  CHECK(j["terms"][0].contains("coeff"));
  CHECK(j["terms"][0].contains("traced"));
  CHECK(j["terms"][0].contains("open"));
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"({"n":3,"terms":[{"coeff":[1,0],"traced":[[4]],"open":[]}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"({"terms":[]})")), std::invalid_argument);
}

TEST_CASE("group function round trip") {
  const GroupFunction chi2 = builtin_a4_table().row("chi2");
  const GroupFunction back = io::function_from_json(json::parse(io::to_json(chi2).dump()));
  CHECK(back.domain() == chi2.domain());
  CHECK(back.max_abs_difference(chi2) == 0.0);

  const GroupFunction sgn = sign_function(3);
  CHECK(io::function_from_json(io::to_json(sgn)).max_abs_difference(sgn) == 0.0);

  // Elements may come in any order.
  const json shuffled = json::parse(R"({"n":2,"elements":[[2,1],[1,2]],"values":[-1,1]})");
  CHECK(io::function_from_json(shuffled).max_abs_difference(sign_function(2)) == 0.0);
  // Not a group.
  CHECK_THROWS_AS(io::function_from_json(json::parse(R"({"n":2,"elements":[[2,1]],"values":[1]})")),
                  std::invalid_argument);
}

TEST_CASE("character table round trip") {
  for (const CharacterTable& table : {builtin_a4_table(), symmetric_character_table(4)}) {
    const CharacterTable back = io::table_from_json(json::parse(io::to_json(table).dump()));
    CHECK(*back.group == *table.group);
    CHECK(back.labels == table.labels);
    REQUIRE(back.rows.size() == table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) CHECK(back.rows[r].max_abs_difference(table.rows[r]) == 0.0);
  }
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.spec_name = "x";
  r.kind = "loewner_nonneg";
  r.trials = 3;
  r.dim = 2;
  r.seed = 9;
  r.status = Status::counterexample;
  r.counterexample = Counterexample{1, {ComplexMatrix::identity(2)}, -0.5};
  const json j = io::to_json(r);
  for (const char* key : {"spec_name", "kind", "trials", "dim", "seed", "min_statistic", "hermiticity_defect_max",
                          "failures", "tolerance", "status", "conjecture", "counterexample"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["status"] == "counterexample");
  CHECK(io::matrix_from_json(j["counterexample"]["inputs"][0]) == ComplexMatrix::identity(2));
  r.counterexample.reset();
  CHECK(io::to_json(r)["counterexample"].is_null());
}

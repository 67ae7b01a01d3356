#include <set>

#include "doctest.h"
#include "sroman/errors.hpp"
#include "sroman/verify.hpp"

using namespace sroman;

namespace {

VerifyOptions only(const std::string& family) {
  VerifyOptions o;
  o.families = {family};
  return o;
}

}  // namespace

TEST_CASE("verify paths") {
  auto rows = verify(only("paths"));
  REQUIRE(rows.size() == 4);
  std::vector<std::size_t> values;
  for (const auto& r : rows) {
    CHECK(r.status == "pass");
    REQUIRE(r.solver_value);
    values.push_back(*r.solver_value);
  }
  CHECK(values == std::vector<std::size_t>{5, 10, 17, 22});
  CHECK(exit_status(rows) == 0);
}

TEST_CASE("verify cycles") {
  auto rows = verify(only("cycles"));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].formula.exact == BigInt(8));
  CHECK(rows[1].formula.exact == BigInt(15));
  CHECK_FALSE(rows[2].formula.exact);
  for (const auto& r : rows) CHECK(r.status == "pass");
}

TEST_CASE("verify complete graphs") {
  auto o = only("complete");
  o.n_min = 3;
  o.n_max = 3;
  o.t_max = 3;
  auto rows = verify(o);
  std::set<std::size_t> gamma, upper;
  for (const auto& r : rows) {
    CHECK(r.status == "pass");
    if (r.theorem == "knt-gamma") gamma.insert(r.formula.exact->convert_to<std::size_t>());
    if (r.theorem == "knt-gamma-r") upper.insert(r.formula.upper->convert_to<std::size_t>());
  }
  CHECK(gamma == std::set<std::size_t>{3, 7});
  CHECK(upper == std::set<std::size_t>{5, 14});
}

TEST_CASE("verify universal and unknown families") {
  auto rows = verify(only("universal"));
  CHECK_FALSE(rows.empty());
  for (const auto& r : rows) CHECK(r.status == "pass");
  CHECK_THROWS_AS(verify(only("trees")), InputError);
}

TEST_CASE("sweep holds and is reproducible") {
  SweepOptions o;
  o.count = 20;
  o.n_max = 5;
  auto a = sweep(o);
  REQUIRE(a.size() == 20);
  for (const auto& r : a) CHECK(r.status == "pass");
  auto b = sweep(o);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(row_to_json(a[i]).dump() == row_to_json(b[i]).dump());
  o.seed = 2;
  auto c = sweep(o);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || row_to_json(a[i]).dump() != row_to_json(c[i]).dump();
  CHECK(differs);
}

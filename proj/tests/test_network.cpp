#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace glassnet;

TEST_SUITE("network") {

TEST_CASE("orthant codes order like their bitstrings") {
  const auto c = OrthantCode::parse("1011");
  CHECK(c.str() == "1011");
  CHECK(c.bit(0));
  CHECK_FALSE(c.bit(1));
  CHECK(c.sign(1) == -1);
  CHECK(c.flipped(3).str() == "1010");
  CHECK(OrthantCode::parse("0111") < OrthantCode::parse("1000"));
  CHECK(OrthantCode::of_point(oracle::vec({0.3, -0.2, 0.4, 0.1})) == c);
  CHECK_THROWS_AS(OrthantCode::of_point(oracle::vec({0.3, 0.0})), PreconditionError);
  CHECK_THROWS_AS(OrthantCode::parse("10x1"), ParseError);
  CHECK(differing_variable(OrthantCode::parse("1011"), OrthantCode::parse("1001")) == 2);
  CHECK_THROWS(differing_variable(OrthantCode::parse("1011"), OrthantCode::parse("1000")));
}

TEST_CASE("bundled network: focal points") {
  const auto net = paper_network();
  CHECK(net.dimension() == 4);
  CHECK(net.is_boolean());
  CHECK(net.focal_point(OrthantCode::parse("0000")) == oracle::vec({-1, 1, 1, 1}));
  CHECK(net.focal_point(OrthantCode::parse("1111")) == oracle::vec({1, -1, 1, 1}));
  CHECK(net.focal_point(OrthantCode::parse("1011")) == oracle::vec({1, -1, -1, -1}));
  CHECK(net.focal_bound() == 1.0);
}

TEST_CASE("bundled table equals the Boolean polynomials on all 16 codes") {
  const auto net = paper_network();
  for (std::uint32_t i = 0; i < 16; ++i) {
    const OrthantCode code(4, i);
    const auto expected = oracle::paper_polynomials(oracle::bits_of(code.str()));
    for (int k = 0; k < 4; ++k) CHECK(net.focal_point(code)[k] == expected[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("one-variable constant network") {
  const GlassNetwork net(1, {oracle::vec({1}), oracle::vec({1})});
  CHECK(net.focal_point(OrthantCode::parse("0"))[0] == 1.0);
  CHECK(net.focal_point(OrthantCode::parse("1"))[0] == 1.0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_network("glassnet 1\nn 2\n00 1 1\n01 1 1\n10 1 1\n"), doctest::Contains("row count mismatch"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_network("glassnet 1\nn 2\n00 1 1\n01 1 1\n10 1 1\n11 1 0\n"),
                       doctest::Contains("Condition 1 violated"), ParseError);
  CHECK_THROWS_WITH_AS(parse_network("glassnet 1\nn 2\n00 1 1\n00 1 1\n10 1 1\n11 1 1\n"),
                       doctest::Contains("duplicate orthant row"), ParseError);
  CHECK_THROWS_WITH_AS(parse_network("glassnet 1\nn 2\n00 1 1\n01 1 abc\n10 1 1\n11 1 1\n"),
                       doctest::Contains("non-numeric focal entry"), ParseError);
  CHECK_THROWS_AS(parse_network("nonsense\n"), ParseError);
}

TEST_CASE("parse accepts comments and any row order") {
  const auto net = parse_network("# two genes\nglassnet 1\nn 2\n11 -1 -1  # last\n00 1 1\n10 1 -1\n01 -1 1\n");
  CHECK(net.focal_point(OrthantCode::parse("11")) == oracle::vec({-1, -1}));
  CHECK(net.focal_point(OrthantCode::parse("01")) == oracle::vec({-1, 1}));
}

TEST_CASE("serialize then parse is the identity") {
  const auto net = paper_network();
  const auto again = parse_network(serialize_network(net));
  CHECK(again.focal_table() == net.focal_table());
  CHECK(serialize_network(again) == serialize_network(net));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    const GlassNetwork g(n, oracle::random_table(n, rng, false));
    CHECK(parse_network(serialize_network(g)).focal_table() == g.focal_table());
  }
}

TEST_CASE("validation") {
  CHECK(describe(validate_conditions(paper_network())) == "Condition 1: pass, Condition 2: pass\n");

  // F_1 depends on y_1
  std::vector<Vector> table = {oracle::vec({1, 1}), oracle::vec({1, 1}), oracle::vec({-1, 1}), oracle::vec({-1, 1})};
  auto report = validate_conditions(2, table);
  CHECK(report.condition1);
  CHECK_FALSE(report.condition2);
  REQUIRE_FALSE(report.condition2_failures.empty());
  CHECK(report.condition2_failures[0].variable == 0);
  CHECK(report.condition2_failures[0].code.str() == "00");
  CHECK(report.condition2_failures[0].partner.str() == "10");
  CHECK_THROWS_AS(GlassNetwork(2, table), PreconditionError);
  NetworkOptions loose;
  loose.require_condition2 = false;
  CHECK_NOTHROW(GlassNetwork(2, table, loose));

  table = {oracle::vec({0, 1}), oracle::vec({1, 1}), oracle::vec({1, 1}), oracle::vec({1, 1})};
  report = validate_conditions(2, table);
  CHECK_FALSE(report.condition1);
  REQUIRE(report.condition1_failures.size() == 1);
  CHECK(report.condition1_failures[0].code.str() == "00");
  CHECK(report.condition1_failures[0].variable == 0);
}

TEST_CASE("Condition 2 validation agrees with brute force on random tables") {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution corrupt(0.5);
  std::uniform_int_distribution<int> pick(0, 1 << 10);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    auto table = oracle::random_table(n, rng, trial % 2 == 0);
    if (corrupt(rng)) {
      auto& row = table[static_cast<std::size_t>(pick(rng)) % table.size()];
      row[pick(rng) % n] *= -1;
    }
    CHECK(validate_conditions(n, table).condition2 == oracle::brute_condition2(n, table));
  }
}

}  // TEST_SUITE

TEST_SUITE("network") {

TEST_CASE("number formatting") {
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.1) == "0.1");
  CHECK(std::stod(format_number(1.0 / 3)) == 1.0 / 3);
  CHECK(format_fixed(-1e-17, 3) == "0.000");
  CHECK(format_fixed(-0.25, 2) == "-0.25");
  CHECK(format_vector(oracle::vec({1, -2.5})) == "1,-2.5");
}

}  // TEST_SUITE

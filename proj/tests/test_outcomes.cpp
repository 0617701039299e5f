#include <catch2/catch.hpp>

#include <algorithm>
#include <random>

#include "entail/notation.hpp"
#include "entail/outcomes.hpp"
#include "support/generators.hpp"

using namespace entail;
using notation::parse;
using notation::parse_form;

TEST_CASE("terminal outcomes", "[outcomes]") {
  CHECK(outcome(inf()) == Outcome::Left);
  CHECK(outcome(oinf()) == Outcome::Right);
  CHECK(outcome(zero()) == Outcome::Previous);
}

TEST_CASE("outcome diamond", "[outcomes]") {
  CHECK(outcome_geq(Outcome::Left, Outcome::Previous));
  CHECK(outcome_geq(Outcome::Left, Outcome::Next));
  CHECK(outcome_geq(Outcome::Previous, Outcome::Right));
  CHECK(outcome_geq(Outcome::Next, Outcome::Right));
  CHECK_FALSE(outcome_geq(Outcome::Previous, Outcome::Next));
  CHECK_FALSE(outcome_geq(Outcome::Next, Outcome::Previous));
  CHECK_FALSE(outcome_geq(Outcome::Right, Outcome::Left));
}

TEST_CASE("checks force urgent replies", "[outcomes]") {
  // Left's check plus a lone star: either of Right's first moves loses.
  CHECK(outcome(parse("{inf|0} + *")) == Outcome::Left);
  // the bare check is only a first-player win
  CHECK(outcome(parse_form("{inf|0}")) == Outcome::Next);
}

TEST_CASE("moon makes any company a first-player win", "[outcomes]") {
  for (const char* x : {"0", "*", "*2"}) {
    CHECK(outcome(parse(std::string("moon + ") + x)) == Outcome::Next);
  }
}

TEST_CASE("compare against zero", "[outcomes]") {
  CHECK(compare_zero(zero()) == ComparisonResult::Equal);
  CHECK(compare_zero(nimber(1)) == ComparisonResult::Confused);
  CHECK(compare_zero(inf()) == ComparisonResult::Greater);
  CHECK(compare_zero(oinf()) == ComparisonResult::Less);
  // A bare Left-check is a first-player win: Right defuses it to 0 and
  // then Left must hand over the win. Confused with zero, not above it.
  CHECK(compare_zero(parse_form("{inf|0}")) == ComparisonResult::Confused);
}

TEST_CASE("conway comparisons", "[outcomes]") {
  CHECK(geq_conway(nimber(2), nimber(2)));
  CHECK(geq_conway(nimber(2), nimber(2)));
  CHECK(eq_conway(nimber(2), nimber(2)));
  CHECK_FALSE(eq_conway(nimber(1), nimber(2)));

  // {{inf|*}|{*|oinf}} equals * even though it is not a Conway form
  const Form gprime = parse_form("{{inf|*}|{*|oinf}}");
  CHECK(eq_conway(gprime, nimber(1)));
  CHECK(geq_conway(gprime, nimber(1)));
  CHECK(geq_conway(nimber(1), gprime, ConwayCheck::Assume));

  for (const char* g : {"0", "*", "*2"}) {
    CHECK(geq_conway(inf(), parse_form(g)));
  }

  CHECK_THROWS_AS(eq_conway(parse_form("{{inf|0},0|{0|oinf},0}"), moon()),
                  NotConwayError);
  CHECK(compare_conway(nimber(1), nimber(2)) == ComparisonResult::Confused);
  CHECK(compare_conway(inf(), zero()) == ComparisonResult::Greater);
  CHECK(compare_conway(oinf(), zero()) == ComparisonResult::Less);
}

TEST_CASE("symmetric forms land in N or P", "[outcomes][property]") {
  std::mt19937 rng(20240806);
  for (int i = 0; i < 100; ++i) {
    const Form g = testgen::random_symmetric_form(rng, 4);
    const Outcome o = outcome(g);
    CHECK((o == Outcome::Next || o == Outcome::Previous));
  }
}

TEST_CASE("conway forms cancel against their conjugates", "[outcomes][property]") {
  std::mt19937 rng(20240807);
  for (int i = 0; i < 100; ++i) {
    const Form g = testgen::random_conway_form(rng, 3);
    CHECK(outcome(make_sum({g, conjugate(g)})) == Outcome::Previous);
  }
}

TEST_CASE("outcome ignores component order and duplicates of identity",
          "[outcomes][property]") {
  std::mt19937 rng(20240808);
  for (int i = 0; i < 50; ++i) {
    std::vector<Form> comps;
    const int n = std::uniform_int_distribution<int>(2, 3)(rng);
    for (int j = 0; j < n; ++j) {
      comps.push_back(testgen::random_affine_impartial(rng, 2));
    }
    const Outcome direct = outcome(SumPosition(comps));
    std::shuffle(comps.begin(), comps.end(), rng);
    CHECK(outcome(SumPosition(comps)) == direct);
  }
}

TEST_CASE("infinity dominates every sum", "[outcomes][property]") {
  std::mt19937 rng(20240809);
  for (int i = 0; i < 50; ++i) {
    Form g = testgen::random_any_form(rng, 3);
    if (is_oinf(g)) g = zero();
    CHECK(outcome(make_sum({inf(), g})) == Outcome::Left);
  }
}

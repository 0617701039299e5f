#include <catch2/catch.hpp>

#include <random>
#include <thread>

#include "entail/forms.hpp"
#include "entail/outcomes.hpp"
#include "support/generators.hpp"

using namespace entail;

TEST_CASE("day-zero forms", "[forms]") {
  CHECK(make_position({oinf()}, {inf()}) == zero());
  CHECK(make_position({inf()}, {oinf()}) == moon());
  CHECK(zero() != moon());
  CHECK(is_terminal(inf()));
  CHECK(is_terminal(oinf()));
  CHECK_FALSE(is_terminal(zero()));
}

TEST_CASE("interning is idempotent and dedupes options", "[forms]") {
  const Form star1 = make_position({zero()}, {zero()});
  const Form star2 = make_position({zero()}, {zero()});
  CHECK(star1 == star2);
  CHECK(star1 == nimber(1));
  CHECK(make_position({zero(), zero()}, {zero()}) == star1);
  // order of listing does not matter
  const Form a = make_position({zero(), moon()}, {zero(), moon()});
  const Form b = make_position({moon(), zero()}, {moon(), zero()});
  CHECK(a == b);
}

TEST_CASE("positions need both sides", "[forms]") {
  CHECK_THROWS_AS(make_position({}, {zero()}), EmptySideError);
  CHECK_THROWS_AS(make_position({zero()}, {}), EmptySideError);
}

TEST_CASE("nimber ladder", "[forms]") {
  CHECK(nimber(0) == zero());
  CHECK(nimber(1) == make_position({zero()}, {zero()}));
  CHECK(nimber(2) == make_position({zero(), nimber(1)}, {zero(), nimber(1)}));
  for (unsigned k = 0; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(is_conway_form(nimber(k)));
    CHECK(is_affine_impartial(nimber(k)));
  }
}

TEST_CASE("conjugate on terminals and literals", "[forms]") {
  CHECK(conjugate(inf()) == oinf());
  CHECK(conjugate(oinf()) == inf());
  const Form left_check = make_position({inf()}, {zero()});
  CHECK(conjugate(left_check) == make_position({zero()}, {oinf()}));
  for (unsigned k = 0; k <= 5; ++k) {
    CHECK(conjugate(nimber(k)) == nimber(k));
  }
}

TEST_CASE("conjugate is an involution", "[forms][property]") {
  std::mt19937 rng(20240801);
  for (int i = 0; i < 200; ++i) {
    const Form g = testgen::random_any_form(rng, 4);
    CHECK(conjugate(conjugate(g)) == g);
  }
}

TEST_CASE("symmetric forms are self-conjugate", "[forms][property]") {
  std::mt19937 rng(20240802);
  for (int i = 0; i < 100; ++i) {
    const Form g = testgen::random_symmetric_form(rng, 4);
    REQUIRE(is_symmetric(g));
    CHECK(conjugate(g) == g);
  }
}

TEST_CASE("check predicates", "[forms]") {
  CHECK(is_left_check(moon()));
  CHECK(is_right_check(moon()));
  CHECK(is_check(moon()));
  const Form left_check = make_position({inf()}, {zero()});
  CHECK(is_left_check(left_check));
  CHECK_FALSE(is_right_check(left_check));
  CHECK_FALSE(is_check(nimber(2)));
  CHECK_FALSE(is_check(inf()));
  CHECK_FALSE(is_check(oinf()));
}

TEST_CASE("quietness", "[forms]") {
  CHECK(is_quiet(zero()));
  CHECK_FALSE(is_quiet(make_position({inf()}, {zero()})));
  CHECK_FALSE(is_quiet(inf()));
  CHECK_FALSE(is_quiet(moon()));
}

TEST_CASE("symmetry", "[forms]") {
  const Form lc = make_position({inf()}, {zero()});
  const Form rc = make_position({zero()}, {oinf()});
  const Form fig1 = make_position({lc, zero()}, {rc, zero()});
  CHECK(is_symmetric(fig1));
  CHECK_FALSE(is_symmetric(lc));
  CHECK(is_symmetric(nimber(3)));
  CHECK_FALSE(is_symmetric(inf()));
}

TEST_CASE("affine impartial forms", "[forms]") {
  // the top entails heap of size one
  const Form heap1 = make_position({make_position({inf()}, {inf()})},
                                   {make_position({oinf()}, {oinf()})});
  CHECK(is_affine_impartial(heap1));
  CHECK_FALSE(is_affine_impartial(make_position({inf()}, {zero()})));
  const Form star_with_checks =
      make_position({make_position({inf()}, {nimber(1)})},
                    {make_position({nimber(1)}, {oinf()})});
  CHECK(is_affine_impartial(star_with_checks));
  CHECK(is_affine_impartial(moon()));
}

TEST_CASE("quiet options of affine impartial forms stay impartial",
          "[forms][property]") {
  std::mt19937 rng(20240803);
  for (int i = 0; i < 100; ++i) {
    const Form g = testgen::random_affine_impartial(rng, 3);
    REQUIRE(is_affine_impartial(g));
    for (Form l : left_options(g)) {
      if (is_quiet(l)) CHECK(is_affine_impartial(l));
    }
  }
}

TEST_CASE("conway forms", "[forms]") {
  const Form star = make_position({zero()}, {zero()});
  CHECK(is_conway_form(star));
  const Form star_with_checks =
      make_position({make_position({inf()}, {nimber(1)})},
                    {make_position({nimber(1)}, {oinf()})});
  CHECK_FALSE(is_conway_form(star_with_checks));
  CHECK_FALSE(is_conway_form(moon()));
  CHECK_FALSE(is_conway_form(inf()));
}

TEST_CASE("make_sum absorbs infinities", "[forms]") {
  const auto absorbed = make_sum({inf(), nimber(5)});
  REQUIRE(std::holds_alternative<Form>(absorbed));
  CHECK(std::get<Form>(absorbed) == inf());

  const auto mirrored = make_sum({nimber(3), oinf()});
  REQUIRE(std::holds_alternative<Form>(mirrored));
  CHECK(std::get<Form>(mirrored) == oinf());

  CHECK_THROWS_AS(make_sum({inf(), oinf()}), UndefinedSumError);
  CHECK_THROWS_AS(make_sum({}), std::invalid_argument);

  const auto plain = make_sum({zero(), nimber(2)});
  REQUIRE(std::holds_alternative<SumPosition>(plain));
  const auto& sum = std::get<SumPosition>(plain);
  REQUIRE(sum.components.size() == 2);
  for (Form f : sum.components) CHECK_FALSE(is_terminal(f));
}

TEST_CASE("sums never keep terminal components", "[forms][property]") {
  std::mt19937 rng(20240804);
  for (int i = 0; i < 100; ++i) {
    std::vector<Form> comps;
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    bool has_inf = false, has_oinf = false;
    for (int j = 0; j < n; ++j) {
      const Form f = testgen::random_any_form(rng, 2);
      has_inf |= is_inf(f);
      has_oinf |= is_oinf(f);
      comps.push_back(f);
    }
    if (has_inf && has_oinf) {
      CHECK_THROWS_AS(make_sum(comps), UndefinedSumError);
      continue;
    }
    const auto sum = make_sum(comps);
    if (const auto* pos = std::get_if<SumPosition>(&sum)) {
      for (Form f : pos->components) CHECK_FALSE(is_terminal(f));
    } else {
      CHECK((has_inf || has_oinf));
    }
  }
}

TEST_CASE("followers", "[forms]") {
  const auto f0 = followers(zero());
  CHECK(f0 == std::vector<Form>{inf(), oinf(), zero()});
  CHECK(followers(nimber(1)).size() == 4);
  CHECK(followers(moon()) == std::vector<Form>{inf(), oinf(), moon()});
}

TEST_CASE("expand_sum matches component behaviour", "[forms]") {
  for (Form g : {zero(), nimber(1), moon()}) {
    CHECK(outcome(expand_sum(zero(), g)) == outcome(g));
  }
  CHECK(outcome(expand_sum(nimber(1), nimber(1))) == Outcome::Previous);
  CHECK_THROWS_AS(expand_sum(inf(), zero()), std::invalid_argument);
}

TEST_CASE("concurrent interning yields one identity", "[forms][threads]") {
  std::vector<std::thread> workers;
  std::vector<Form> results(8, zero());
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([t, &results] {
      Form f = zero();
      for (int i = 0; i < 50; ++i) {
        f = make_position({f, nimber(static_cast<unsigned>(i % 7))},
                          {f, nimber(static_cast<unsigned>(i % 7))});
      }
      results[static_cast<std::size_t>(t)] = f;
    });
  }
  for (auto& w : workers) w.join();
  for (const Form f : results) CHECK(f == results[0]);
}

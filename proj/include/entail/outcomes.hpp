#pragma once

#include <algorithm>
#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <variant>
#include <vector>

#include "entail/forms.hpp"

namespace entail {

/// Perfect-play outcome classes. Left wins outright, Next/Previous
/// depend on who moves first, Right wins outright.
enum class Outcome : unsigned char { Left, Next, Previous, Right };

inline char to_char(Outcome o) {
  switch (o) {
    case Outcome::Left: return 'L';
    case Outcome::Next: return 'N';
    case Outcome::Previous: return 'P';
    case Outcome::Right: return 'R';
  }
  return '?';
}

/// The outcome diamond: Left above Next and Previous, Right below both,
/// Next and Previous incomparable.
inline bool outcome_geq(Outcome a, Outcome b) {
  if (a == b) return true;
  if (a == Outcome::Left) return true;
  if (b == Outcome::Right) return true;
  return false;
}

namespace detail {

struct FormVecHash {
  std::size_t operator()(const std::vector<Form>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Form f : v) {
      h ^= f.id();
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline Outcome sum_outcome(std::vector<Form> comps);

/// Does the player moving first in the sum have a winning move? A move
/// to the mover's own terminal wins on the spot, a move to the opposing
/// terminal loses on the spot, and any other move hands the opponent
/// the rewritten sum.
inline bool mover_wins(const std::vector<Form>& comps, bool left_to_move) {
  const Form winning = left_to_move ? inf() : oinf();
  const Form losing = left_to_move ? oinf() : inf();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i > 0 && comps[i] == comps[i - 1]) continue;  // same component, same moves
    const auto& opts = left_to_move ? left_options(comps[i]) : right_options(comps[i]);
    for (Form o : opts) {
      if (o == winning) return true;
      if (o == losing) continue;
      std::vector<Form> next = comps;
      next[i] = o;
      std::sort(next.begin(), next.end());
      const Outcome r = sum_outcome(std::move(next));
      if (r == Outcome::Previous ||
          r == (left_to_move ? Outcome::Left : Outcome::Right)) {
        return true;
      }
    }
  }
  return false;
}

inline Outcome sum_outcome(std::vector<Form> comps) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::vector<Form>, Outcome, FormVecHash> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(comps); it != memo.end()) return it->second;
  }
  const bool left_first = mover_wins(comps, true);
  const bool right_first = mover_wins(comps, false);
  const Outcome o = left_first ? (right_first ? Outcome::Next : Outcome::Left)
                               : (right_first ? Outcome::Right : Outcome::Previous);
  std::unique_lock lock(mutex);
  memo.emplace(std::move(comps), o);
  return o;
}

}  // namespace detail

/// Memoized minimax outcome of a sum of positions. The memo key is the
/// canonical sorted multiset of component ids, so permuting components
/// or swapping in interned duplicates cannot change the answer.
inline Outcome outcome(const SumPosition& s) {
  return detail::sum_outcome(s.components);
}

inline Outcome outcome(Form g) {
  if (is_inf(g)) return Outcome::Left;
  if (is_oinf(g)) return Outcome::Right;
  return detail::sum_outcome({g});
}

inline Outcome outcome(const SumOrTerminal& s) {
  return std::visit([](const auto& v) { return outcome(v); }, s);
}

/// Result of comparing a form against 0, or against a Conway game.
enum class ComparisonResult : unsigned char { Greater, Equal, Less, Confused };

inline const char* to_string(ComparisonResult r) {
  switch (r) {
    case ComparisonResult::Greater: return "greater";
    case ComparisonResult::Equal: return "equal";
    case ComparisonResult::Less: return "less";
    case ComparisonResult::Confused: return "confused";
  }
  return "?";
}

/// Order against zero reads straight off the outcome.
inline ComparisonResult compare_zero(Form g) {
  switch (outcome(g)) {
    case Outcome::Left: return ComparisonResult::Greater;
    case Outcome::Previous: return ComparisonResult::Equal;
    case Outcome::Next: return ComparisonResult::Confused;
    case Outcome::Right: return ComparisonResult::Less;
  }
  return ComparisonResult::Confused;
}

/// Whether to verify the Conway-form hypothesis before comparing.
/// Assume skips the check when the caller already knows the right-hand
/// side equals a Conway form.
enum class ConwayCheck : unsigned char { Verify, Assume };

namespace detail {

inline void require_conway(Form h, ConwayCheck check) {
  if (check == ConwayCheck::Verify && !is_conway_form(h)) {
    throw NotConwayError(
        "comparison needs a Conway form on the right-hand side; general "
        "comparison against non-invertible games is out of scope");
  }
}

}  // namespace detail

/// g >= h, decided by playing g + conjugate(h). Requires h to be (equal
/// to) a Conway game; its conjugate is then its inverse.
inline bool geq_conway(Form g, Form h, ConwayCheck check = ConwayCheck::Verify) {
  detail::require_conway(h, check);
  const Outcome o = outcome(make_sum({g, conjugate(h)}));
  return o == Outcome::Left || o == Outcome::Previous;
}

/// g == h as games, for Conway h.
inline bool eq_conway(Form g, Form h, ConwayCheck check = ConwayCheck::Verify) {
  detail::require_conway(h, check);
  return outcome(make_sum({g, conjugate(h)})) == Outcome::Previous;
}

/// Full relation of g against a Conway game h.
inline ComparisonResult compare_conway(Form g, Form h,
                                       ConwayCheck check = ConwayCheck::Verify) {
  detail::require_conway(h, check);
  switch (outcome(make_sum({g, conjugate(h)}))) {
    case Outcome::Left: return ComparisonResult::Greater;
    case Outcome::Previous: return ComparisonResult::Equal;
    case Outcome::Next: return ComparisonResult::Confused;
    case Outcome::Right: return ComparisonResult::Less;
  }
  return ComparisonResult::Confused;
}

}  // namespace entail

#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "entail/forms.hpp"
#include "entail/nimber_set.hpp"
#include "entail/outcomes.hpp"

namespace entail {

/// An affine impartial value: a nimber *k, or the moon. The moon is the
/// single non-nimber value; it absorbs under addition and its printed
/// Grundy value is "inf".
class Value {
 public:
  static Value nimber(unsigned g) { return Value(static_cast<std::int64_t>(g)); }
  static Value moon() { return Value(-1); }

  bool is_moon() const { return g_ < 0; }
  bool is_nimber() const { return g_ >= 0; }

  unsigned grundy() const {
    if (is_moon()) throw GameError("the moon has no finite Grundy number");
    return static_cast<unsigned>(g_);
  }

  friend bool operator==(Value, Value) = default;

  /// "0", "*", "*2", ... or "moon".
  std::string to_string() const {
    if (is_moon()) return "moon";
    if (g_ == 0) return "0";
    if (g_ == 1) return "*";
    return "*" + std::to_string(g_);
  }

  /// The Grundy number as text: "0", "1", ... or "inf" for the moon.
  std::string grundy_string() const {
    return is_moon() ? "inf" : std::to_string(g_);
  }

 private:
  explicit Value(std::int64_t g) : g_(g) {}
  std::int64_t g_;
};

namespace detail {

inline void require_impartial(Form g, const char* op) {
  if (!is_affine_impartial(g)) {
    throw NotImpartialError(std::string(op) + ": form is not affine impartial");
  }
}

/// Process-wide override of the probe ceiling; see set_probe_ceiling_override.
inline std::atomic<std::int64_t>& probe_override_slot() {
  static std::atomic<std::int64_t> slot{-1};
  return slot;
}

}  // namespace detail

/// Overrides the probe ceiling used by protected_nimbers and
/// value_oracle. Intended as process-start configuration (the CLI's
/// --max-probe); results memoized under one setting are not recomputed
/// under another.
inline void set_probe_ceiling_override(std::optional<unsigned> b) {
  detail::probe_override_slot().store(b ? static_cast<std::int64_t>(*b) : -1);
}

inline std::optional<unsigned> probe_ceiling_override() {
  const std::int64_t v = detail::probe_override_slot().load();
  if (v < 0) return std::nullopt;
  return static_cast<unsigned>(v);
}

inline Value value(Form g);

/// Probe ceiling for protected-nimber and oracle searches: two past the
/// largest finite Grundy number among the proper quiet symmetric
/// followers. A heuristic rather than a proven bound, so every use is
/// paired with the tail-stability assertion in protected_nimbers.
inline unsigned bound(Form g) {
  detail::require_impartial(g, "bound");
  if (auto o = probe_ceiling_override()) return *o;
  static std::shared_mutex mutex;
  static std::unordered_map<std::uint32_t, unsigned> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
  }
  unsigned max_grundy = 0;
  for (Form f : followers(g)) {
    if (f == g || !is_quiet(f) || !is_symmetric(f)) continue;
    const Value v = value(f);
    if (v.is_nimber() && v.grundy() > max_grundy) max_grundy = v.grundy();
  }
  const unsigned b = max_grundy + 2;
  std::unique_lock lock(mutex);
  memo.emplace(g.id(), b);
  return b;
}

/// S_G: the Grundy numbers of the Left options that equal nimbers.
/// Checks and terminals never equal nimbers, so only quiet options
/// contribute.
inline NimberSet immediate_nimbers(Form g) {
  detail::require_impartial(g, "immediate_nimbers");
  NimberSet out;
  for (Form l : left_options(g)) {
    if (is_terminal(l) || is_check(l)) continue;
    const Value v = value(l);  // quiet followers are affine impartial
    if (v.is_nimber()) out.insert(v.grundy());
  }
  return out;
}

/// P_G: the nimbers the first player is shielded against by a check.
/// All of Im when inf is itself a Left option; otherwise the union over
/// Left-check options C of { n : C + *n is a Left win }, probed up to
/// the ceiling B and extended cofinitely when the probe at B is a
/// member. Membership must be constant on B..B+3 or the computation
/// aborts with UnstableTailError.
inline NimberSet protected_nimbers(Form g) {
  detail::require_impartial(g, "protected_nimbers");
  const auto& left = left_options(g);
  if (detail::contains_sorted(left, inf())) return NimberSet::all();
  NimberSet out;
  std::optional<unsigned> ceiling;
  for (Form check : left) {
    if (!is_left_check(check)) continue;
    if (!ceiling) ceiling = bound(g);
    const unsigned b = *ceiling;
    auto member = [check](unsigned n) {
      return outcome(SumPosition({check, nimber(n)})) == Outcome::Left;
    };
    const bool tail = member(b);
    for (unsigned t = b + 1; t <= b + 3; ++t) {
      if (member(t) != tail) {
        throw UnstableTailError(
            "protected-nimber membership is not constant on the probe tail "
            "[" + std::to_string(b) + ".." + std::to_string(b + 3) + "]");
      }
    }
    NimberSet below;  // the n < B whose membership differs from the tail
    for (unsigned n = 0; n < b; ++n) {
      if (member(n) != tail) below.insert(n);
    }
    out = out | (tail ? below.complement() : below);
  }
  return out;
}

/// The affine impartial minimum excluded rule: moon when the immediate
/// and protected nimbers jointly cover Im, otherwise the mex of the
/// union.
inline Value value(Form g) {
  detail::require_impartial(g, "value");
  static std::shared_mutex mutex;
  static std::unordered_map<std::uint32_t, Value> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
  }
  const NimberSet covered = immediate_nimbers(g) | protected_nimbers(g);
  const auto m = covered.mex();
  const Value v = m ? Value::nimber(*m) : Value::moon();
  std::unique_lock lock(mutex);
  memo.emplace(g.id(), v);
  return v;
}

/// Independent route to the same value: g equals *n exactly when g + *n
/// is a previous-player win, so probe n = 0..B and fall back to the
/// moon. Shares nothing with the S/P computation above except the
/// outcome solver.
inline Value value_oracle(Form g) {
  detail::require_impartial(g, "value_oracle");
  const unsigned b = bound(g);
  for (unsigned n = 0; n <= b; ++n) {
    if (outcome(SumPosition({g, nimber(n)})) == Outcome::Previous) {
      return Value::nimber(n);
    }
  }
  return Value::moon();
}

/// Sum of values: the moon absorbs, nimbers add by xor.
inline Value value_of_sum(const std::vector<Value>& vs) {
  unsigned acc = 0;
  for (Value v : vs) {
    if (v.is_moon()) return Value::moon();
    acc ^= v.grundy();
  }
  return Value::nimber(acc);
}

inline bool is_loony(Form g) {
  detail::require_impartial(g, "is_loony");
  return value(g).is_moon();
}

/// Equality modulo affine impartial play, decided through the value
/// classification: every affine impartial game equals a nimber or the
/// moon.
inline bool eq_im(Form g, Form h) {
  detail::require_impartial(g, "eq_im");
  detail::require_impartial(h, "eq_im");
  return value(g) == value(h);
}

namespace detail {

inline bool quiet_nimber_valued(Form f) {
  return is_quiet(f) && is_symmetric(f) && value(f).is_nimber();
}

/// Can Right, to move, force Left onto a nimber (or someone onto oinf)
/// using only check replies?
inline bool right_can_force(Form left_move) {
  for (Form r : right_options(left_move)) {
    if (is_oinf(r)) return true;
    if (is_inf(r) || !is_right_check(r)) continue;
    if (contains_sorted(left_options(r), inf())) continue;  // Left escapes
    bool all_answers_cornered = true;
    for (Form a : left_options(r)) {
      if (is_oinf(a)) continue;
      if (is_inf(a)) {
        all_answers_cornered = false;
        break;
      }
      if (quiet_nimber_valued(a)) continue;
      if (!right_can_force(a)) {
        all_answers_cornered = false;
        break;
      }
    }
    if (all_answers_cornered) return true;
  }
  return false;
}

}  // namespace detail

/// Diagnostic: after every Left move that is neither a nimber nor oinf,
/// Right can force, with checks, a Left move to a nimber or a move by
/// either player to oinf. Manoeuvrable forms are always nimber valued.
inline bool is_manoeuvrable(Form g) {
  if (!is_quiet(g)) {
    throw NotQuietError("is_manoeuvrable: form must be quiet");
  }
  detail::require_impartial(g, "is_manoeuvrable");
  for (Form l : left_options(g)) {
    if (is_oinf(l)) continue;
    if (detail::quiet_nimber_valued(l)) continue;
    if (!detail::right_can_force(l)) return false;
  }
  return true;
}

}  // namespace entail

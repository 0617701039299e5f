#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "entail/errors.hpp"

namespace entail {

namespace detail {
class FormStore;
}

/// Handle to an interned, immutable game form. Structural equality
/// coincides with handle equality: two constructions of the same literal
/// form yield the same id. Handles order by id, which is the fixed total
/// order used for canonical option sets and sum multisets.
class Form {
 public:
  std::uint32_t id() const noexcept { return id_; }

  friend bool operator==(Form a, Form b) noexcept { return a.id_ == b.id_; }
  friend auto operator<=>(Form a, Form b) noexcept { return a.id_ <=> b.id_; }

 private:
  friend class detail::FormStore;
  explicit Form(std::uint32_t id) noexcept : id_(id) {}
  std::uint32_t id_;
};

namespace detail {

struct FormNode {
  std::vector<Form> left;
  std::vector<Form> right;
};

/// Hash-consing store for forms. Terminals occupy ids 0 (inf) and
/// 1 (oinf); positions are appended on first interning. Insertions are
/// first-writer-wins under concurrency, and nodes are never moved or
/// dropped, so references handed out by node() stay valid for the
/// process lifetime.
class FormStore {
 public:
  static constexpr std::uint32_t kInf = 0;
  static constexpr std::uint32_t kOInf = 1;

  static FormStore& instance() {
    static FormStore store;
    return store;
  }

  Form inf() const noexcept { return Form(kInf); }
  Form oinf() const noexcept { return Form(kOInf); }

  Form intern(std::vector<Form> left, std::vector<Form> right) {
    if (left.empty() || right.empty()) {
      throw EmptySideError("a position needs at least one option per side");
    }
    canonicalize(left);
    canonicalize(right);
    Key key{std::move(left), std::move(right)};
    {
      std::shared_lock lock(mutex_);
      if (auto it = index_.find(key); it != index_.end()) {
        return Form(it->second);
      }
    }
    std::unique_lock lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) {
      return Form(it->second);
    }
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(FormNode{key.first, key.second});
    index_.emplace(std::move(key), id);
    return Form(id);
  }

  const FormNode& node(Form f) const {
    std::shared_lock lock(mutex_);
    return nodes_[f.id()];
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return nodes_.size();
  }

 private:
  using Key = std::pair<std::vector<Form>, std::vector<Form>>;

  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = 1469598103934665603ull;
      auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
      };
      mix(k.first.size());
      for (Form f : k.first) mix(f.id());
      mix(~std::uint64_t{0});
      for (Form f : k.second) mix(f.id());
      return static_cast<std::size_t>(h);
    }
  };

  FormStore() {
    nodes_.emplace_back();  // id 0: inf
    nodes_.emplace_back();  // id 1: oinf
  }

  static void canonicalize(std::vector<Form>& opts) {
    std::sort(opts.begin(), opts.end());
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
  }

  mutable std::shared_mutex mutex_;
  std::deque<FormNode> nodes_;
  std::unordered_map<Key, std::uint32_t, KeyHash> index_;
};

inline bool contains_sorted(const std::vector<Form>& opts, Form f) {
  return std::binary_search(opts.begin(), opts.end(), f);
}

}  // namespace detail

inline Form inf() { return detail::FormStore::instance().inf(); }
inline Form oinf() { return detail::FormStore::instance().oinf(); }

inline bool is_inf(Form f) { return f.id() == detail::FormStore::kInf; }
inline bool is_oinf(Form f) { return f.id() == detail::FormStore::kOInf; }
inline bool is_terminal(Form f) { return f.id() <= detail::FormStore::kOInf; }

/// Interns the position with the given option sets. Options are
/// deduplicated and kept in canonical order. Both sides must be
/// nonempty; forms like {x|} do not exist here.
inline Form make_position(std::vector<Form> left_opts,
                          std::vector<Form> right_opts) {
  return detail::FormStore::instance().intern(std::move(left_opts),
                                              std::move(right_opts));
}

/// Option accessors; terminals have no options and yield empty sets.
inline const std::vector<Form>& left_options(Form f) {
  return detail::FormStore::instance().node(f).left;
}
inline const std::vector<Form>& right_options(Form f) {
  return detail::FormStore::instance().node(f).right;
}

/// 0 = {oinf | inf}, the first-player-losing position of day zero.
inline Form zero() {
  static const Form z = make_position({oinf()}, {inf()});
  return z;
}

/// moon = {inf | oinf}, the first player wins regardless of company.
inline Form moon() {
  static const Form m = make_position({inf()}, {oinf()});
  return m;
}

/// *0 = 0, *k = {*0..*(k-1) | *0..*(k-1)}.
inline Form nimber(unsigned k) {
  static std::mutex mutex;
  static std::vector<Form> ladder;
  std::lock_guard lock(mutex);
  if (ladder.empty()) ladder.push_back(zero());
  while (ladder.size() <= k) {
    std::vector<Form> opts(ladder.begin(), ladder.end());
    ladder.push_back(make_position(opts, opts));
  }
  return ladder[k];
}

/// Swaps the players' roles, recursively through all options.
/// Involution: conjugate(conjugate(g)) == g.
inline Form conjugate(Form g) {
  if (is_inf(g)) return oinf();
  if (is_oinf(g)) return inf();
  static std::shared_mutex mutex;
  static std::unordered_map<std::uint32_t, Form> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
  }
  std::vector<Form> left, right;
  {
    const auto& n = detail::FormStore::instance().node(g);
    left.reserve(n.right.size());
    right.reserve(n.left.size());
    for (Form r : n.right) left.push_back(conjugate(r));
    for (Form l : n.left) right.push_back(conjugate(l));
  }
  const Form result = make_position(std::move(left), std::move(right));
  std::unique_lock lock(mutex);
  memo.emplace(g.id(), result);
  memo.emplace(result.id(), g);
  return result;
}

/// A Left-check threatens inf; the opponent must answer it or lose.
inline bool is_left_check(Form g) {
  return !is_terminal(g) && detail::contains_sorted(left_options(g), inf());
}

inline bool is_right_check(Form g) {
  return !is_terminal(g) && detail::contains_sorted(right_options(g), oinf());
}

inline bool is_check(Form g) { return is_left_check(g) || is_right_check(g); }

/// Quiet: a position that is neither kind of check. Terminals are not
/// quiet.
inline bool is_quiet(Form g) {
  return !is_terminal(g) && !is_left_check(g) && !is_right_check(g);
}

/// Right options are exactly the conjugates of the Left options.
inline bool is_symmetric(Form g) {
  if (is_terminal(g)) return false;
  const auto& left = left_options(g);
  const auto& right = right_options(g);
  if (left.size() != right.size()) return false;
  std::vector<Form> mirrored;
  mirrored.reserve(left.size());
  for (Form l : left) mirrored.push_back(conjugate(l));
  std::sort(mirrored.begin(), mirrored.end());
  return mirrored == right;
}

/// g plus everything reachable through options, in id order.
inline std::vector<Form> followers(Form g) {
  std::vector<Form> out;
  std::vector<Form> stack{g};
  std::unordered_set<std::uint32_t> seen{g.id()};
  while (!stack.empty()) {
    const Form f = stack.back();
    stack.pop_back();
    out.push_back(f);
    if (is_terminal(f)) continue;
    const auto& n = detail::FormStore::instance().node(f);
    for (const auto* side : {&n.left, &n.right}) {
      for (Form o : *side) {
        if (seen.insert(o.id()).second) stack.push_back(o);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Symmetric, and every quiet follower is symmetric.
inline bool is_affine_impartial(Form g) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::uint32_t, bool> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
  }
  bool ok = is_symmetric(g);
  if (ok) {
    for (Form f : followers(g)) {
      if (is_quiet(f) && !is_symmetric(f)) {
        ok = false;
        break;
      }
    }
  }
  std::unique_lock lock(mutex);
  memo.emplace(g.id(), ok);
  return ok;
}

/// Not a terminal, and no follower is a check. Conway forms behave like
/// classical games and are invertible via their conjugates.
inline bool is_conway_form(Form g) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::uint32_t, bool> memo;
  if (is_terminal(g)) return false;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
  }
  bool ok = true;
  for (Form f : followers(g)) {
    if (is_check(f)) {
      ok = false;
      break;
    }
  }
  std::unique_lock lock(mutex);
  memo.emplace(g.id(), ok);
  return ok;
}

/// A disjunctive sum of position components, a sorted multiset.
/// Terminals never appear as components; make_sum() collapses them.
struct SumPosition {
  std::vector<Form> components;

  explicit SumPosition(std::vector<Form> comps) : components(std::move(comps)) {
    std::sort(components.begin(), components.end());
  }

  friend bool operator==(const SumPosition&, const SumPosition&) = default;
};

using SumOrTerminal = std::variant<SumPosition, Form>;

/// Builds a sum, applying the absorbing rules: any inf component makes
/// the whole sum inf (symmetrically oinf), and inf + oinf is undefined.
inline SumOrTerminal make_sum(std::vector<Form> comps) {
  if (comps.empty()) {
    throw std::invalid_argument("make_sum: at least one component required");
  }
  bool has_inf = false;
  bool has_oinf = false;
  for (Form f : comps) {
    has_inf |= is_inf(f);
    has_oinf |= is_oinf(f);
  }
  if (has_inf && has_oinf) throw UndefinedSumError("inf + oinf is not defined");
  if (has_inf) return inf();
  if (has_oinf) return oinf();
  return SumPosition(std::move(comps));
}

/// Expands the disjunctive sum of two positions into a single literal
/// form: each option of one component carries the other along, and an
/// option that is itself a terminal absorbs the whole sum. Exponential;
/// meant for inputs with up to a couple hundred combined followers.
inline Form expand_sum(Form a, Form b) {
  if (is_terminal(a) || is_terminal(b)) {
    throw std::invalid_argument("expand_sum: components must be positions");
  }
  static std::shared_mutex mutex;
  static std::unordered_map<std::uint64_t, Form> memo;
  const Form lo = std::min(a, b);
  const Form hi = std::max(a, b);
  const std::uint64_t key = (std::uint64_t{lo.id()} << 32) | hi.id();
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  std::vector<Form> left, right;
  auto add = [](std::vector<Form>& out, Form opt, Form rest) {
    out.push_back(is_terminal(opt) ? opt : expand_sum(opt, rest));
  };
  for (Form l : left_options(a)) add(left, l, b);
  for (Form l : left_options(b)) add(left, l, a);
  for (Form r : right_options(a)) add(right, r, b);
  for (Form r : right_options(b)) add(right, r, a);
  const Form result = make_position(std::move(left), std::move(right));
  std::unique_lock lock(mutex);
  memo.emplace(key, result);
  return result;
}

}  // namespace entail

template <>
struct std::hash<entail::Form> {
  std::size_t operator()(entail::Form f) const noexcept {
    return std::hash<std::uint32_t>{}(f.id());
  }
};

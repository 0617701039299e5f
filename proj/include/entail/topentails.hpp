#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "entail/forms.hpp"
#include "entail/grundy.hpp"
#include "entail/nimber_set.hpp"

namespace entail::topentails {

/// One row of the heap analysis: the immediate nimbers s (always
/// finite), the protected nimbers p (finite or cofinite), and the value
/// they determine through the minimum excluded rule.
struct HeapRecord {
  unsigned n;
  Value value;
  NimberSet s;
  NimberSet p;
};

namespace detail {

/// The heap recursion: P_n is everything the previous heap did not
/// cover, and S_n collects the xor of the values of every split into
/// two nonempty heaps, skipping any split that contains a moon. Only
/// the previous union is carried between rows, so memory stays linear.
template <typename RowFn>
void sweep(unsigned max_n, RowFn&& row) {
  std::vector<std::int32_t> values;  // Grundy number, or -1 for the moon
  values.reserve(static_cast<std::size_t>(max_n) + 1);
  NimberSet prev_union;
  for (unsigned n = 0; n <= max_n; ++n) {
    NimberSet s;
    for (unsigned l = 1; 2 * l <= n; ++l) {
      const std::int32_t a = values[l];
      const std::int32_t b = values[n - l];
      if (a >= 0 && b >= 0) s.insert(static_cast<unsigned>(a ^ b));
    }
    const NimberSet p = n == 0 ? NimberSet::empty() : prev_union.complement();
    NimberSet covered = s | p;
    const auto mex = covered.mex();
    const Value v = mex ? Value::nimber(*mex) : Value::moon();
    values.push_back(v.is_moon() ? -1 : static_cast<std::int32_t>(v.grundy()));
    row(n, v, s, p, prev_union);
    prev_union = std::move(covered);
  }
}

}  // namespace detail

/// Full records for heaps 0..max_n.
inline std::vector<HeapRecord> compute_table(unsigned max_n) {
  std::vector<HeapRecord> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  detail::sweep(max_n, [&out](unsigned n, Value v, const NimberSet& s,
                              const NimberSet& p, const NimberSet&) {
    out.push_back(HeapRecord{n, v, s, p});
  });
  return out;
}

/// Heap sizes up to max_n whose value is the moon. Each row is also
/// checked against the equivalent criterion that the previous union is
/// contained in S_n; a mismatch means the recursion itself is broken.
inline std::vector<unsigned> scan_loony(unsigned max_n) {
  std::vector<unsigned> out;
  detail::sweep(max_n, [&out](unsigned n, Value v, const NimberSet& s,
                              const NimberSet&, const NimberSet& prev_union) {
    if (n >= 1 && prev_union.subset_of(s) != v.is_moon()) {
      throw std::logic_error("loony criterion disagrees with the mex rule at n=" +
                             std::to_string(n));
    }
    if (v.is_moon()) out.push_back(n);
  });
  return out;
}

/// The literal heap form, built without any value-level shortcuts:
/// splits expand the disjunctive sum of the two smaller heaps, and the
/// top-coin removal is the check {inf | previous heap's Right options}.
/// Exponential; heaps beyond size 7 are refused.
inline Form direct_form(unsigned n) {
  constexpr unsigned kMaxHeap = 7;
  if (n > kMaxHeap) {
    throw TooLargeError("direct_form: heaps beyond size " +
                        std::to_string(kMaxHeap) + " expand too far");
  }
  static std::mutex mutex;
  static std::vector<Form> memo;
  std::lock_guard lock(mutex);
  if (memo.empty()) memo.push_back(zero());
  while (memo.size() <= n) {
    const auto k = static_cast<unsigned>(memo.size());
    const Form prev = memo[k - 1];
    std::vector<Form> left, right;
    for (unsigned l = 1; 2 * l <= k; ++l) {
      const Form split = expand_sum(memo[l], memo[k - l]);
      left.push_back(split);
      right.push_back(split);
    }
    left.push_back(make_position({inf()}, right_options(prev)));
    right.push_back(make_position(left_options(prev), {oinf()}));
    memo.push_back(make_position(std::move(left), std::move(right)));
  }
  return memo[n];
}

}  // namespace entail::topentails

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace entail {

/// A finite or cofinite set of nonnegative Grundy numbers. Finite sets
/// store their members as a bit vector; cofinite sets store the excluded
/// complement the same way. All set algebra is exact in both modes.
class NimberSet {
 public:
  NimberSet() = default;  // empty finite set

  static NimberSet empty() { return NimberSet(); }

  /// The whole of Im: every nimber.
  static NimberSet all() {
    NimberSet s;
    s.cofinite_ = true;
    return s;
  }

  static NimberSet of(std::initializer_list<unsigned> xs) {
    NimberSet s;
    for (unsigned x : xs) s.set_bit(x);
    return s;
  }

  static NimberSet all_except(std::initializer_list<unsigned> xs) {
    NimberSet s = of(xs);
    s.cofinite_ = true;
    return s;
  }

  bool cofinite() const { return cofinite_; }
  bool finite() const { return !cofinite_; }
  bool is_empty() const { return !cofinite_ && words_.empty(); }
  bool is_all() const { return cofinite_ && words_.empty(); }

  bool contains(unsigned x) const { return test_bit(x) != cofinite_; }

  void insert(unsigned x) {
    if (cofinite_) {
      clear_bit(x);
    } else {
      set_bit(x);
    }
  }

  NimberSet complement() const {
    NimberSet s = *this;
    s.cofinite_ = !s.cofinite_;
    return s;
  }

  friend NimberSet operator|(const NimberSet& a, const NimberSet& b) {
    NimberSet r;
    if (!a.cofinite_ && !b.cofinite_) {
      r.words_ = word_or(a.words_, b.words_);
    } else if (a.cofinite_ && b.cofinite_) {
      r.cofinite_ = true;
      r.words_ = word_and(a.words_, b.words_);
    } else {
      const NimberSet& co = a.cofinite_ ? a : b;
      const NimberSet& fin = a.cofinite_ ? b : a;
      r.cofinite_ = true;
      r.words_ = word_diff(co.words_, fin.words_);  // excluded minus new members
    }
    r.trim();
    return r;
  }

  friend NimberSet operator&(const NimberSet& a, const NimberSet& b) {
    return (a.complement() | b.complement()).complement();
  }

  bool subset_of(const NimberSet& o) const {
    if (!cofinite_ && !o.cofinite_) return word_diff(words_, o.words_).empty();
    if (!cofinite_ && o.cofinite_) return word_and(words_, o.words_).empty();
    if (cofinite_ && !o.cofinite_) return false;  // infinite into finite
    return word_diff(o.words_, words_).empty();   // Im\E1 <= Im\E2 iff E2 <= E1
  }

  friend bool operator==(const NimberSet& a, const NimberSet& b) {
    return a.cofinite_ == b.cofinite_ && a.words_ == b.words_;
  }

  /// Least nonnegative integer not in the set; nullopt when the set is
  /// all of Im and nothing is excluded.
  std::optional<unsigned> mex() const {
    if (cofinite_) {
      if (words_.empty()) return std::nullopt;
      return first_set_bit();
    }
    return first_clear_bit();
  }

  /// Members of a finite set, or the excluded complement of a cofinite
  /// one, in increasing order.
  std::vector<unsigned> bits() const {
    std::vector<unsigned> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const unsigned b = static_cast<unsigned>(__builtin_ctzll(word));
        out.push_back(static_cast<unsigned>(w * 64 + b));
        word &= word - 1;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    if (cofinite_) {
      s = "Im";
      if (!words_.empty()) s += "\\" + brace_list();
      return s;
    }
    return brace_list();
  }

 private:
  std::string brace_list() const {
    std::string s = "{";
    bool first = true;
    for (unsigned x : bits()) {
      if (!first) s += ",";
      s += std::to_string(x);
      first = false;
    }
    s += "}";
    return s;
  }

  bool test_bit(unsigned x) const {
    const std::size_t w = x / 64;
    return w < words_.size() && (words_[w] >> (x % 64)) & 1u;
  }

  void set_bit(unsigned x) {
    const std::size_t w = x / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (x % 64);
  }

  void clear_bit(unsigned x) {
    const std::size_t w = x / 64;
    if (w < words_.size()) {
      words_[w] &= ~(std::uint64_t{1} << (x % 64));
      trim();
    }
  }

  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  unsigned first_set_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) {
        return static_cast<unsigned>(w * 64 + __builtin_ctzll(words_[w]));
      }
    }
    return 0;  // unreachable for nonempty sets
  }

  unsigned first_clear_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != ~std::uint64_t{0}) {
        return static_cast<unsigned>(w * 64 + __builtin_ctzll(~words_[w]));
      }
    }
    return static_cast<unsigned>(words_.size() * 64);
  }

  bool cofinite_ = false;
  std::vector<std::uint64_t> words_;  // members, or excluded when cofinite

  static std::vector<std::uint64_t> word_or(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = (i < a.size() ? a[i] : 0) | (i < b.size() ? b[i] : 0);
    }
    return r;
  }

  static std::vector<std::uint64_t> word_and(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> r(std::min(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] & b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static std::vector<std::uint64_t> word_diff(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> r(a.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = a[i] & ~(i < b.size() ? b[i] : 0);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

}  // namespace entail

#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "entail/forms.hpp"

namespace entail::notation {

/// Either a single form or a sum of them, as written in the input.
using Parsed = SumOrTerminal;

namespace detail {

/// Recursive-descent parser for
///   expr := form ("+" form)*
///   form := "inf" | "oinf" | "moon" | "0" | "*" | "*"INT | "{" list "|" list "}"
///   list := form ("," form)*      (at least one entry per side)
/// Whitespace between tokens is insignificant; the digits of "*k" must
/// follow the star directly.
class Parser {
 public:
  // *k builds a ladder of k+1 forms with O(k^2) option entries; keep
  // wire input at desk scale.
  static constexpr unsigned kMaxNimberLiteral = 4096;

  explicit Parser(std::string_view text) : text_(text) {}

  Parsed parse_expr() {
    std::vector<Form> terms;
    terms.push_back(parse_form());
    skip_ws();
    while (!at_end() && peek() == '+') {
      ++pos_;
      terms.push_back(parse_form());
      skip_ws();
    }
    if (!at_end()) fail("unexpected trailing input");
    if (terms.size() == 1) return terms.front();
    return make_sum(std::move(terms));
  }

 private:
  Form parse_form() {
    skip_ws();
    if (at_end()) fail("form expected");
    const char c = peek();
    if (c == '{') return parse_braces();
    if (c == '*') {
      ++pos_;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t at = pos_;
        const unsigned k = parse_number();
        if (k > kMaxNimberLiteral) {
          fail("nimber literal too large (limit " +
                   std::to_string(kMaxNimberLiteral) + ")",
               at);
        }
        return nimber(k);
      }
      return nimber(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      if (parse_number() != 0) {
        fail("only 0 is a form; partizan integers are not supported", at);
      }
      return zero();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      const std::string_view word = parse_word();
      if (word == "inf") return inf();
      if (word == "oinf") return oinf();
      if (word == "moon") return moon();
      fail("unknown name '" + std::string(word) + "'", at);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Form parse_braces() {
    ++pos_;  // '{'
    std::vector<Form> left = parse_list();
    skip_ws();
    if (at_end() || peek() != '|') fail("'|' expected");
    ++pos_;
    std::vector<Form> right = parse_list();
    skip_ws();
    if (at_end() || peek() != '}') fail("'}' expected");
    ++pos_;
    return make_position(std::move(left), std::move(right));
  }

  std::vector<Form> parse_list() {
    skip_ws();
    if (!at_end() && (peek() == '|' || peek() == '}')) {
      throw EmptySideError("empty option list at offset " +
                           std::to_string(pos_));
    }
    std::vector<Form> out;
    out.push_back(parse_form());
    skip_ws();
    while (!at_end() && peek() == ',') {
      ++pos_;
      out.push_back(parse_form());
      skip_ws();
    }
    return out;
  }

  unsigned parse_number() {
    const std::size_t at = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 1000000000ull) fail("number too large", at);
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  std::string_view parse_word() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

/// k when g is literally the nimber *k, nullopt otherwise. Detected
/// structurally, so a hand-built {0|0} is recognised as *.
inline std::optional<unsigned> nimber_index(Form g) {
  if (is_terminal(g)) return std::nullopt;
  if (g == zero()) return 0;
  static std::shared_mutex mutex;
  static std::unordered_map<std::uint32_t, std::optional<unsigned>> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
  }
  std::optional<unsigned> result;
  const auto& left = left_options(g);
  if (left == right_options(g)) {
    const auto k = static_cast<unsigned>(left.size());
    std::vector<bool> seen(k, false);
    bool ok = true;
    for (Form o : left) {
      const auto i = nimber_index(o);
      if (!i || *i >= k || seen[*i]) {
        ok = false;
        break;
      }
      seen[*i] = true;
    }
    if (ok) result = k;
  }
  std::unique_lock lock(mutex);
  memo.emplace(g.id(), result);
  return result;
}

}  // namespace detail

/// Parses a form or sum expression. Errors carry the byte offset of the
/// failure; "{|x}" raises EmptySideError and "inf + oinf" raises
/// UndefinedSumError.
inline Parsed parse(std::string_view text) {
  return detail::Parser(text).parse_expr();
}

/// Parses text that must denote a single form (no top-level sum).
inline Form parse_form(std::string_view text) {
  Parsed p = parse(text);
  if (auto* f = std::get_if<Form>(&p)) return *f;
  throw ParseError("expected a single form, found a sum", 0);
}

/// Canonical text for a form. The sugar "0", "*", "*k" and "moon" is
/// used only on an exact literal match; otherwise options print in
/// canonical order inside braces. Printing then reparsing returns the
/// identical interned form. Output size is exponential in DAG depth for
/// heavily shared forms; meant for desk-sized inputs.
inline std::string print(Form g) {
  if (is_inf(g)) return "inf";
  if (is_oinf(g)) return "oinf";
  if (const auto k = detail::nimber_index(g)) {
    if (*k == 0) return "0";
    if (*k == 1) return "*";
    return "*" + std::to_string(*k);
  }
  if (g == moon()) return "moon";
  std::string s = "{";
  bool first = true;
  for (Form l : left_options(g)) {
    if (!first) s += ",";
    s += print(l);
    first = false;
  }
  s += "|";
  first = true;
  for (Form r : right_options(g)) {
    if (!first) s += ",";
    s += print(r);
    first = false;
  }
  s += "}";
  return s;
}

inline std::string print(const SumPosition& s) {
  std::string out;
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (i) out += " + ";
    out += print(s.components[i]);
  }
  return out;
}

inline std::string print(const Parsed& p) {
  return std::visit([](const auto& v) { return print(v); }, p);
}

}  // namespace entail::notation

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "entail/forms.hpp"
#include "entail/grundy.hpp"
#include "entail/outcomes.hpp"

namespace entail::nimstring {

enum class EdgeKind : unsigned char { Horizontal, Vertical };

/// H(r,c) is the edge above box (r,c): 0 <= r <= rows, 0 <= c < cols.
/// V(r,c) is the edge left of box (r,c): 0 <= r < rows, 0 <= c <= cols.
struct Edge {
  EdgeKind kind;
  int row;
  int col;

  friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge horizontal(int r, int c) { return {EdgeKind::Horizontal, r, c}; }
inline Edge vertical(int r, int c) { return {EdgeKind::Vertical, r, c}; }

inline std::string to_string(const Edge& e) {
  return std::string(e.kind == EdgeKind::Horizontal ? "H " : "V ") +
         std::to_string(e.row) + " " + std::to_string(e.col);
}

/// A rectangular grid of boxes with a set of drawn edges. Irregular
/// shapes are modelled by pre-drawing the surrounding edges; boxes that
/// start out complete are inert.
class Board {
 public:
  Board(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
      throw OutOfBoundsError("board dimensions must be positive");
    }
    words_.assign((static_cast<std::size_t>(edge_count()) + 63) / 64, 0);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int edge_count() const { return (rows_ + 1) * cols_ + rows_ * (cols_ + 1); }

  bool in_bounds(const Edge& e) const {
    if (e.kind == EdgeKind::Horizontal) {
      return 0 <= e.row && e.row <= rows_ && 0 <= e.col && e.col < cols_;
    }
    return 0 <= e.row && e.row < rows_ && 0 <= e.col && e.col <= cols_;
  }

  bool is_drawn(const Edge& e) const {
    const int i = edge_index(e);
    return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
  }

  void draw(const Edge& e) {
    if (!in_bounds(e)) {
      throw OutOfBoundsError("edge " + to_string(e) + " is out of bounds");
    }
    if (is_drawn(e)) {
      throw DuplicateEdgeError("edge " + to_string(e) + " is already drawn");
    }
    const int i = edge_index(e);
    words_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
  }

  bool box_complete(int r, int c) const {
    return is_drawn(horizontal(r, c)) && is_drawn(horizontal(r + 1, c)) &&
           is_drawn(vertical(r, c)) && is_drawn(vertical(r, c + 1));
  }

  std::vector<Edge> undrawn_edges() const {
    std::vector<Edge> out;
    for (int r = 0; r <= rows_; ++r) {
      for (int c = 0; c < cols_; ++c) {
        if (!is_drawn(horizontal(r, c))) out.push_back(horizontal(r, c));
      }
    }
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c <= cols_; ++c) {
        if (!is_drawn(vertical(r, c))) out.push_back(vertical(r, c));
      }
    }
    return out;
  }

  bool has_undrawn() const {
    int drawn = 0;
    for (std::uint64_t w : words_) drawn += __builtin_popcountll(w);
    return drawn < edge_count();
  }

  /// Canonical key: dimensions followed by the drawn-edge words.
  std::vector<std::uint64_t> key() const {
    std::vector<std::uint64_t> k;
    k.reserve(words_.size() + 1);
    k.push_back((static_cast<std::uint64_t>(rows_) << 32) |
                static_cast<std::uint32_t>(cols_));
    k.insert(k.end(), words_.begin(), words_.end());
    return k;
  }

  friend bool operator==(const Board&, const Board&) = default;
  friend bool operator<(const Board& a, const Board& b) {
    return a.key() < b.key();
  }

 private:
  int edge_index(const Edge& e) const {
    if (!in_bounds(e)) {
      throw OutOfBoundsError("edge " + to_string(e) + " is out of bounds");
    }
    if (e.kind == EdgeKind::Horizontal) return e.row * cols_ + e.col;
    return (rows_ + 1) * cols_ + e.row * (cols_ + 1) + e.col;
  }

  int rows_;
  int cols_;
  std::vector<std::uint64_t> words_;
};

struct MoveResult {
  Board board;
  int newly_completed;  // 0, 1 or 2
};

/// Draws an undrawn edge and counts the boxes it completes. Completing
/// a box obliges the same player to move again; that rule lives in
/// to_form and direct_outcome, not here.
inline MoveResult apply(const Board& b, const Edge& e) {
  if (!b.in_bounds(e) || b.is_drawn(e)) {
    throw IllegalMoveError("edge " + to_string(e) + " cannot be drawn");
  }
  Board next = b;
  next.draw(e);
  int completed = 0;
  if (e.kind == EdgeKind::Horizontal) {
    if (e.row > 0 && next.box_complete(e.row - 1, e.col)) ++completed;
    if (e.row < b.rows() && next.box_complete(e.row, e.col)) ++completed;
  } else {
    if (e.col > 0 && next.box_complete(e.row, e.col - 1)) ++completed;
    if (e.col < b.cols() && next.box_complete(e.row, e.col)) ++completed;
  }
  return {std::move(next), completed};
}

/// Board file format: a "rows cols" line, then one drawn edge per line
/// as "H r c" or "V r c". '#' starts a comment; blank lines are skipped.
inline Board parse_board(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<Board> board;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank
    if (!board) {
      int rows = 0, cols = 0;
      std::istringstream dims(line);
      if (!(dims >> rows >> cols) || rows < 1 || cols < 1) {
        throw BoardSyntaxError("expected 'rows cols'", line_no);
      }
      std::string extra;
      if (dims >> extra) {
        throw BoardSyntaxError("trailing input after 'rows cols'", line_no);
      }
      board.emplace(rows, cols);
      continue;
    }
    if (first != "H" && first != "V") {
      throw BoardSyntaxError("expected 'H r c' or 'V r c'", line_no);
    }
    int r = 0, c = 0;
    if (!(fields >> r >> c)) {
      throw BoardSyntaxError("expected two integers after '" + first + "'",
                             line_no);
    }
    std::string extra;
    if (fields >> extra) {
      throw BoardSyntaxError("trailing input after edge", line_no);
    }
    const Edge e{first == "H" ? EdgeKind::Horizontal : EdgeKind::Vertical, r, c};
    if (!board->in_bounds(e)) {
      throw OutOfBoundsError("edge " + to_string(e) + " is out of bounds (line " +
                             std::to_string(line_no) + ")");
    }
    board->draw(e);  // throws DuplicateEdgeError on repeats
  }
  if (!board) throw BoardSyntaxError("missing 'rows cols' header", 0);
  return *board;
}

namespace detail {

struct U64VecHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

/// Translates a board into its affine impartial form. A quiet edge maps
/// to the resulting board's form; an edge that completes a box becomes
/// the check {inf | rest} (the carry-on threat), or plain oinf when no
/// move remains to carry on with. A board with no undrawn edge is 0:
/// the player obliged to move loses.
inline Form to_form(const Board& b) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::vector<std::uint64_t>, Form, detail::U64VecHash>
      memo;
  const auto key = b.key();
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const auto undrawn = b.undrawn_edges();
  Form result = zero();
  if (!undrawn.empty()) {
    std::vector<Form> left, right;
    left.reserve(undrawn.size());
    right.reserve(undrawn.size());
    for (const Edge& e : undrawn) {
      MoveResult m = apply(b, e);
      if (m.newly_completed == 0) {
        const Form f = to_form(m.board);
        left.push_back(f);
        right.push_back(f);
      } else if (!m.board.has_undrawn()) {
        left.push_back(oinf());
        right.push_back(inf());
      } else {
        const Form f = to_form(m.board);
        left.push_back(make_position({inf()}, {f}));
        right.push_back(make_position({f}, {oinf()}));
      }
    }
    result = make_position(std::move(left), std::move(right));
  }
  std::unique_lock lock(mutex);
  memo.emplace(key, result);
  return result;
}

inline Value value_of_board(const Board& b) { return value(to_form(b)); }

namespace detail {

inline std::vector<std::uint64_t> state_key(const std::vector<Board>& boards) {
  std::vector<std::uint64_t> key;
  for (const Board& b : boards) {
    const auto k = b.key();
    key.push_back(k.size());
    key.insert(key.end(), k.begin(), k.end());
  }
  return key;
}

/// Rules-level search, independent of the form encoding: the mover
/// picks any undrawn edge anywhere; completing a box means the same
/// player moves again; a player with no edge to draw loses.
inline bool mover_wins_rules(std::vector<Board> boards) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::vector<std::uint64_t>, bool, U64VecHash> memo;
  std::sort(boards.begin(), boards.end());
  const auto key = state_key(boards);
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  bool wins = false;
  for (std::size_t i = 0; i < boards.size() && !wins; ++i) {
    if (i > 0 && boards[i] == boards[i - 1]) continue;
    for (const Edge& e : boards[i].undrawn_edges()) {
      MoveResult m = apply(boards[i], e);
      std::vector<Board> next = boards;
      next[i] = std::move(m.board);
      const bool follow_up = mover_wins_rules(std::move(next));
      if (m.newly_completed > 0 ? follow_up : !follow_up) {
        wins = true;
        break;
      }
    }
  }
  std::unique_lock lock(mutex);
  memo.emplace(key, wins);
  return wins;
}

}  // namespace detail

/// Outcome of a disjunctive union of boards under the raw rules. The
/// game is impartial, so only Next and Previous can occur.
inline Outcome direct_outcome(const std::vector<Board>& boards) {
  return detail::mover_wins_rules(boards) ? Outcome::Next : Outcome::Previous;
}

struct Move {
  std::size_t board_index;
  Edge edge;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Every first move that wins the disjunctive union, indices relative
/// to the caller's board order.
inline std::vector<Move> winning_first_moves(const std::vector<Board>& boards) {
  std::vector<Move> out;
  for (std::size_t i = 0; i < boards.size(); ++i) {
    for (const Edge& e : boards[i].undrawn_edges()) {
      MoveResult m = apply(boards[i], e);
      std::vector<Board> next = boards;
      next[i] = std::move(m.board);
      const bool follow_up = detail::mover_wins_rules(std::move(next));
      if (m.newly_completed > 0 ? follow_up : !follow_up) {
        out.push_back(Move{i, e});
      }
    }
  }
  return out;
}

/// Dots-and-lines picture for diagnostics.
inline std::string render(const Board& b) {
  std::string out;
  for (int r = 0; r <= b.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      out += '+';
      out += b.is_drawn(horizontal(r, c)) ? '-' : ' ';
    }
    out += '+';
    out += '\n';
    if (r == b.rows()) break;
    for (int c = 0; c <= b.cols(); ++c) {
      out += b.is_drawn(vertical(r, c)) ? '|' : ' ';
      if (c < b.cols()) out += ' ';
    }
    out += '\n';
  }
  return out;
}

}  // namespace entail::nimstring

#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace voi {

using Move = int;

/// Two-player alternating-move game with a terminal reward for player 1 in
/// {0, 0.5, 1}. Players are numbered 1 and 2. legal_moves() fills `out`
/// (cleared first) in a fixed order and yields nothing at terminal states.
template <class S>
concept GameState = std::copyable<S> && requires(const S& s, S& m, std::vector<Move>& out, Move mv) {
  { s.to_move() } -> std::convertible_to<int>;
  { s.is_terminal() } -> std::convertible_to<bool>;
  { s.value() } -> std::convertible_to<double>;
  s.legal_moves(out);
  m.apply(mv);
};

/// Synthetic game tree: uniform branching, fixed depth, each leaf a win for
/// player 1 with probability `win_prob`, decided by hashing the leaf's path
/// with the tree seed. The tree is never materialized.
class PTreeGame {
 public:
  PTreeGame(int branching, int depth, double win_prob, std::uint64_t tree_seed);

  int to_move() const { return ply_ % 2 == 0 ? 1 : 2; }
  bool is_terminal() const { return ply_ >= depth_; }
  double value() const;
  void legal_moves(std::vector<Move>& out) const;
  void apply(Move move);

  int branching() const { return branching_; }
  int depth() const { return depth_; }

 private:
  int branching_;
  int depth_;
  double win_prob_;
  std::uint64_t tree_seed_;
  int ply_ = 0;
  std::uint64_t path_;
};

/// Four in a row with gravity on a 5x5 board. Moves are column indices.
class Connect4Game {
 public:
  static constexpr int kRows = 5;
  static constexpr int kCols = 5;
  static constexpr int kConnect = 4;

  int to_move() const { return to_move_; }
  bool is_terminal() const { return winner_ != 0 || filled_ == kRows * kCols; }
  /// 1 if player 1 connected four, 0 if player 2 did, 0.5 for a full board.
  double value() const;
  void legal_moves(std::vector<Move>& out) const;
  void apply(Move column);

  /// 0 = empty, otherwise the player who owns the cell; row 0 is the bottom.
  int cell(int row, int col) const { return board_[row * kCols + col]; }
  int winner() const { return winner_; }

 private:
  bool connects(int row, int col) const;

  std::array<std::int8_t, kRows * kCols> board_{};
  std::array<std::int8_t, kCols> heights_{};
  int to_move_ = 1;
  int filled_ = 0;
  int winner_ = 0;
};

/// Small explicit game tree given as nested leaf tables; handy for tests with
/// a known minimax answer. Leaves are listed depth-first, `branching`
/// children per internal node.
class ExplicitTreeGame {
 public:
  ExplicitTreeGame(int branching, int depth, std::vector<double> leaf_values);

  int to_move() const { return ply_ % 2 == 0 ? 1 : 2; }
  bool is_terminal() const { return ply_ >= depth_; }
  double value() const;
  void legal_moves(std::vector<Move>& out) const;
  void apply(Move move);

 private:
  int branching_;
  int depth_;
  std::shared_ptr<const std::vector<double>> leaves_;
  int ply_ = 0;
  std::size_t index_ = 0;
};

/// Same game with the player labels exchanged: player 2 moves first and the
/// terminal value is reported for the relabelled player 1.
template <GameState G>
class SwappedPlayers {
 public:
  explicit SwappedPlayers(G inner) : inner_(std::move(inner)) {}

  int to_move() const { return 3 - inner_.to_move(); }
  bool is_terminal() const { return inner_.is_terminal(); }
  double value() const { return 1.0 - inner_.value(); }
  void legal_moves(std::vector<Move>& out) const { inner_.legal_moves(out); }
  void apply(Move move) { inner_.apply(move); }

 private:
  G inner_;
};

static_assert(GameState<PTreeGame>);
static_assert(GameState<Connect4Game>);
static_assert(GameState<ExplicitTreeGame>);

}  // namespace voi

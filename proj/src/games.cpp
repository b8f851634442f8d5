#include "voi/games.hpp"

#include "voi/errors.hpp"
#include "voi/rng.hpp"

namespace voi {

PTreeGame::PTreeGame(int branching, int depth, double win_prob, std::uint64_t tree_seed)
    : branching_(branching), depth_(depth), win_prob_(win_prob), tree_seed_(tree_seed), path_(mix64(tree_seed)) {
  if (branching < 1) throw ConfigError("ptree branching must be at least 1");
  if (depth < 1) throw ConfigError("ptree depth must be at least 1");
  if (!(win_prob >= 0.0 && win_prob <= 1.0)) throw ConfigError("ptree win probability must lie in [0, 1]");
}

double PTreeGame::value() const {
  if (!is_terminal()) throw PreconditionError("value is defined only at terminal states");
  const double u = static_cast<double>(mix64(path_ ^ tree_seed_) >> 11) * 0x1.0p-53;
  return u < win_prob_ ? 1.0 : 0.0;
}

void PTreeGame::legal_moves(std::vector<Move>& out) const {
  out.clear();
  if (is_terminal()) return;
  for (Move m = 0; m < branching_; ++m) out.push_back(m);
}

void PTreeGame::apply(Move move) {
  if (is_terminal() || move < 0 || move >= branching_) throw UsageError("illegal ptree move");
  path_ = mix64(path_ * 0x100000001b3ULL + static_cast<std::uint64_t>(move) + 1);
  ++ply_;
}

double Connect4Game::value() const {
  if (!is_terminal()) throw PreconditionError("value is defined only at terminal states");
  if (winner_ == 1) return 1.0;
  if (winner_ == 2) return 0.0;
  return 0.5;
}

void Connect4Game::legal_moves(std::vector<Move>& out) const {
  out.clear();
  if (is_terminal()) return;
  for (int c = 0; c < kCols; ++c) {
    if (heights_[c] < kRows) out.push_back(c);
  }
}

void Connect4Game::apply(Move column) {
  if (is_terminal() || column < 0 || column >= kCols || heights_[column] >= kRows) {
    throw UsageError("illegal connect-four move");
  }
  const int row = heights_[column]++;
  board_[row * kCols + column] = static_cast<std::int8_t>(to_move_);
  ++filled_;
  if (connects(row, column)) winner_ = to_move_;
  to_move_ = 3 - to_move_;
}

bool Connect4Game::connects(int row, int col) const {
  const int player = cell(row, col);
  static constexpr int kDirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
  for (const auto& d : kDirs) {
    int run = 1;
    for (int sign : {1, -1}) {
      int r = row + sign * d[0];
      int c = col + sign * d[1];
      while (r >= 0 && r < kRows && c >= 0 && c < kCols && cell(r, c) == player) {
        ++run;
        r += sign * d[0];
        c += sign * d[1];
      }
    }
    if (run >= kConnect) return true;
  }
  return false;
}

ExplicitTreeGame::ExplicitTreeGame(int branching, int depth, std::vector<double> leaf_values)
    : branching_(branching), depth_(depth) {
  if (branching < 1 || depth < 1) throw ConfigError("explicit tree needs branching and depth >= 1");
  std::size_t expected = 1;
  for (int d = 0; d < depth; ++d) expected *= static_cast<std::size_t>(branching);
  if (leaf_values.size() != expected) throw ConfigError("explicit tree leaf count must be branching^depth");
  for (double v : leaf_values) {
    if (v != 0.0 && v != 0.5 && v != 1.0) throw ConfigError("terminal values must be 0, 0.5 or 1");
  }
  leaves_ = std::make_shared<const std::vector<double>>(std::move(leaf_values));
}

double ExplicitTreeGame::value() const {
  if (!is_terminal()) throw PreconditionError("value is defined only at terminal states");
  return (*leaves_)[index_];
}

void ExplicitTreeGame::legal_moves(std::vector<Move>& out) const {
  out.clear();
  if (is_terminal()) return;
  for (Move m = 0; m < branching_; ++m) out.push_back(m);
}

void ExplicitTreeGame::apply(Move move) {
  if (is_terminal() || move < 0 || move >= branching_) throw UsageError("illegal move");
  index_ = index_ * static_cast<std::size_t>(branching_) + static_cast<std::size_t>(move);
  ++ply_;
}

}  // namespace voi

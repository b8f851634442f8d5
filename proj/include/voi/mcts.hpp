#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "voi/bandit.hpp"
#include "voi/errors.hpp"
#include "voi/games.hpp"
#include "voi/policies.hpp"
#include "voi/rng.hpp"

namespace voi {

inline const double kDefaultUctC = std::sqrt(2.0);

/// Search tree grown one leaf per rollout. Each node keeps the statistics of
/// its children as bandit arms, valued from the perspective of the player to
/// move at that node. Below the root, descent always uses ucb1_select; the
/// root child is chosen by a caller-supplied rule, which is the only place
/// the UCT and VOI engines differ.
template <GameState S>
class SearchTree {
 public:
  SearchTree(S root, double c) : root_(std::move(root)), c_(c) {
    if (root_.is_terminal()) throw UsageError("cannot search from a terminal state");
    nodes_.push_back(make_node(root_));
  }

  /// Runs one rollout. `pick_root(const ArmStats&)` returns the root child
  /// index to follow. Moves taken (tree part, then playout) are appended to
  /// `trace` when given.
  template <class RootPick>
  void rollout(RootPick&& pick_root, Rng& rng, std::vector<Move>* trace = nullptr) {
    S state = root_;
    edges_.clear();
    std::uint32_t node = 0;
    while (!state.is_terminal()) {
      const std::size_t i =
          node == 0 ? pick_root(std::as_const(nodes_[0].arms)) : ucb1_select(nodes_[node].arms, nodes_[node].visits, c_);
      const Move move = nodes_[node].moves.at(i);
      edges_.emplace_back(node, i);
      state.apply(move);
      if (trace) trace->push_back(move);
      if (nodes_[node].children[i] == kNoNode) {
        const auto child = static_cast<std::uint32_t>(nodes_.size());
        nodes_.push_back(make_node(state));
        nodes_[node].children[i] = child;
        break;
      }
      node = nodes_[node].children[i];
    }

    const double value = playout(state, rng, trace);
    for (auto [n, i] : edges_) {
      Node& nd = nodes_[n];
      nd.arms.record(i, nd.to_move == 1 ? value : 1.0 - value);
      ++nd.visits;
    }
    ++rollouts_;
  }

  const ArmStats& root_arms() const { return nodes_[0].arms; }
  Move root_move(std::size_t i) const { return nodes_[0].moves.at(i); }
  std::size_t root_moves() const { return nodes_[0].moves.size(); }
  std::uint64_t rollouts() const { return rollouts_; }
  std::size_t size() const { return nodes_.size(); }
  double exploration() const { return c_; }

 private:
  static constexpr std::uint32_t kNoNode = std::numeric_limits<std::uint32_t>::max();

  struct Node {
    int to_move = 1;
    std::vector<Move> moves;
    std::vector<std::uint32_t> children;
    ArmStats arms{0};
    std::uint64_t visits = 0;
  };

  static Node make_node(const S& state) {
    Node nd;
    nd.to_move = state.to_move();
    state.legal_moves(nd.moves);
    nd.children.assign(nd.moves.size(), kNoNode);
    nd.arms = ArmStats(nd.moves.size());
    return nd;
  }

  double playout(S& state, Rng& rng, std::vector<Move>* trace) {
    while (!state.is_terminal()) {
      state.legal_moves(scratch_);
      const Move move = scratch_[rng.below(scratch_.size())];
      state.apply(move);
      if (trace) trace->push_back(move);
    }
    return state.value();
  }

  S root_;
  double c_;
  std::vector<Node> nodes_;
  std::vector<std::pair<std::uint32_t, std::size_t>> edges_;
  std::vector<Move> scratch_;
  std::uint64_t rollouts_ = 0;
};

namespace detail {

template <GameState S>
void check_search(const S& root, std::uint64_t budget) {
  if (root.is_terminal()) throw UsageError("cannot search from a terminal state");
  std::vector<Move> moves;
  root.legal_moves(moves);
  if (budget < moves.size()) throw UsageError("budget must cover every root move once");
}

}  // namespace detail

/// Root move with the most visits after `tree` has been grown; ties to the
/// lowest child index.
template <GameState S>
Move most_visited_move(const SearchTree<S>& tree) {
  const ArmStats& arms = tree.root_arms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < arms.arms(); ++i) {
    if (arms.pulls(i) > arms.pulls(best)) best = i;
  }
  return tree.root_move(best);
}

/// Root move with the highest sample mean (the pure-exploration recommendation).
template <GameState S>
Move highest_mean_move(const SearchTree<S>& tree) {
  if (tree.root_moves() == 1) return tree.root_move(0);
  return tree.root_move(empirical_best_two(tree.root_arms()).alpha);
}

/// Root rule of the UCT engine.
inline auto ucb1_root(double c) {
  return [c](const ArmStats& arms) { return ucb1_select(arms, arms.total_pulls(), c); };
}

/// Root rule of the VOI engine: Lambda-hat maximization with N = rollouts left.
template <GameState S>
auto voi_root(const SearchTree<S>& tree, std::uint64_t budget, VoiVariant variant) {
  return [&tree, budget, variant](const ArmStats& arms) -> std::size_t {
    if (arms.arms() == 1) return 0;
    return voi_select(arms, BudgetState{budget, tree.rollouts()}, variant);
  };
}

/// Plain UCT: UCB1 at every node, exactly `budget` rollouts, most-visited move.
template <GameState S>
Move uct_search(const S& root, std::uint64_t budget, double c, Rng& rng) {
  detail::check_search(root, budget);
  SearchTree<S> tree(root, c);
  auto pick = ucb1_root(c);
  for (std::uint64_t r = 0; r < budget; ++r) tree.rollout(pick, rng);
  return most_visited_move(tree);
}

/// UCT with VOI-based selection at the root only; recommends the root child
/// with the highest sample mean.
template <GameState S>
Move voi_root_search(const S& root, std::uint64_t budget, double c, Rng& rng,
                     VoiVariant variant = VoiVariant::constant_137) {
  detail::check_search(root, budget);
  SearchTree<S> tree(root, c);
  auto pick = voi_root(tree, budget, variant);
  for (std::uint64_t r = 0; r < budget; ++r) tree.rollout(pick, rng);
  return highest_mean_move(tree);
}

}  // namespace voi

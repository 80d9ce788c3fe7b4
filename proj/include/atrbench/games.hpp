// Copyright 2026 The atrbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ATRBENCH_GAMES_HPP_
#define ATRBENCH_GAMES_HPP_

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "atrbench/nat.hpp"
#include "atrbench/tree.hpp"

namespace atrbench {

enum class PayoffKind { kOpen, kClopen };

// A game of bounded depth. Player 1 moves at positions of even length,
// Player 2 at odd length. A position is valid if its moves are < moves()
// and it lies in the validity tree (all words when there is none). It is
// terminal if it has length depth() or no valid successor. Player 1 wins a
// play (a terminal position) if, for clopen games, the play is in the win
// set, and for open games, some prefix of the play is.
class BoundedGame {
 public:
  BoundedGame(Nat moves, size_t depth, PayoffKind kind, std::set<Word> win,
              std::optional<RationalTree> validity = std::nullopt);

  Nat moves() const { return moves_; }
  size_t depth() const { return depth_; }
  PayoffKind kind() const { return kind_; }
  const std::set<Word>& win() const { return win_; }
  const std::optional<RationalTree>& validity() const { return validity_; }

  bool Valid(const Word& p) const;
  std::vector<Nat> ValidMoves(const Word& p) const;
  bool Terminal(const Word& p) const;
  // Player 1 wins the play ending in terminal position p.
  bool Player1Wins(const Word& p) const;
  // For open games: some prefix of p is winning. For clopen games: p is a
  // winning terminal position.
  bool AlreadyWon(const Word& p) const;
  // Valid positions in length-then-lexicographic order.
  const std::vector<Word>& Positions() const { return positions_; }
  // Valid nonterminal positions where the given player (1 or 2) moves.
  std::vector<Word> MovePositions(int player) const;

  bool operator==(const BoundedGame& o) const;

 private:
  Nat moves_;
  size_t depth_;
  PayoffKind kind_;
  std::set<Word> win_;
  std::optional<RationalTree> validity_;
  std::vector<Word> positions_;
};

// Game file: "moves <B>", "depth <D>", "kind open|clopen", optional tree
// lines ("root", "edge") for validity, and "payoff win <position>" lines
// ("." for the empty position).
BoundedGame ParseGame(const std::string& text);
std::string WriteGame(const BoundedGame& g);

// A strategy for one player: a move at each of that player's positions,
// including positions its own choices avoid.
struct Strategy {
  int player = 1;
  std::map<Word, Nat> choice;
  bool operator==(const Strategy& o) const = default;
};

// Strategy file: "player 1|2" then "<position> <move>" lines.
Strategy ParseStrategy(const std::string& text);
std::string WriteStrategy(const Strategy& s);

// Throws kValidation unless s picks a valid move at every position of its
// player.
void ValidateStrategy(const BoundedGame& g, const Strategy& s);

// The terminal position reached by the two strategies.
Word Play(const BoundedGame& g, const Strategy& p1, const Strategy& p2);

// Whether s wins every play consistent with it. On failure *line is a
// consistent play that s loses.
bool WinsAll(const BoundedGame& g, const Strategy& s, Word* line = nullptr);

// Every strategy of the player, for exhaustive checks on small games.
std::vector<Strategy> AllStrategies(const BoundedGame& g, int player);

struct GameSolution {
  int winner;
  // At the winner's positions: the least winning move if there is one,
  // otherwise the least valid move.
  Strategy strategy;
  // Whether Player 1 wins from each valid position.
  std::map<Word, bool> value;
};
// Backward induction. Works for both kinds since depth is bounded.
GameSolution SolveGame(const BoundedGame& g);

// The tree of Player 1's options against tau in an open game. Nodes are
// Player 1 positions (named by the position), plus a leaf "won" reached
// when Player 1 has won and a node "lost" with a 0-loop reached at a lost
// terminal position. Edges are Player 1's moves, each followed by tau's
// reply.
struct OptionTree {
  RationalTree tree;
  std::map<NodeId, Word> position;
  // True iff "won" is unreachable, i.e. tau wins every play.
  bool pruned = false;
  // When pruned: the least move at each Player 1 position that keeps the
  // tree going.
  std::map<Word, Nat> witness;
  // When not pruned: a play in which Player 1 beats tau.
  Word winning_line;
};
OptionTree BuildOptionTree(const BoundedGame& g, const Strategy& tau);

// Player 2's options if the game is at v (a Player 1 position), Player 1
// plays i and then follows sigma. Reaching a position Player 1 has won is a
// leaf; a lost terminal position is a 0-loop.
RationalTree Player2Options(const BoundedGame& g, const Strategy& sigma, const Word& v, Nat i);

// Whether some map from the unfolding of a to that of b preserves the
// strict prefix order. With avoid_root the image may not contain b's root.
// Computed as a greatest fixed point over pairs of graph nodes.
bool PrefixMapExists(const RationalTree& a, const RationalTree& b, bool avoid_root);
// An explicit such map on the unfolding of a well-founded a: pairs
// (node of a, node of b) as words.
std::vector<std::pair<Word, Word>> PrefixMap(const RationalTree& a, const RationalTree& b,
                                             bool avoid_root);

struct PositionCertificate {
  Word position;
  Nat move;
  // For each other valid move i: the map into Player2Options(v, i), minus
  // its root when i < move.
  std::vector<std::pair<Nat, std::vector<std::pair<Word, Word>>>> maps;
};
struct OptimalityResult {
  bool certified = false;
  std::vector<PositionCertificate> positions;
  // On refusal: why, and a position or line.
  std::string reason;
  Word at;
};
OptimalityResult CertifyOptimality(const BoundedGame& g, const Strategy& sigma);
// The strategy that admits certificates: at each Player 1 position, the
// least move whose options tree has least height.
Strategy OptimalStrategy(const BoundedGame& g);

// Player 1 opens with 0 to play g as Player 1 (after a forced reply 0), or
// with 1 to play g as Player 2 with the payoff complemented. Clopen only.
BoundedGame BuildSideChoice(const BoundedGame& g);
struct SideChoiceExtraction {
  int winner;
  Strategy strategy;
};
SideChoiceExtraction ExtractSideChoice(const BoundedGame& g, const Strategy& derived);

// Player 1 plays a dummy 0, Player 2 picks i, then g_i is played.
BoundedGame BuildJoin(const std::vector<BoundedGame>& gs);
std::vector<Strategy> ExtractJoin(const std::vector<BoundedGame>& gs, const Strategy& derived);

// A Borel code: a well-founded tree whose even levels are existential and
// odd levels universal; leaves carry truth values.
struct BorelCode {
  RationalTree tree;
  std::set<NodeId> true_leaves;
};
// "root"/"edge" lines plus "true <node>" lines.
BorelCode ParseBorelCode(const std::string& text);
bool EvaluateBorelCode(const BorelCode& c);
BoundedGame BuildBorelGame(const BorelCode& c);

// Small game families. A shape is a prefix-closed set of binary words of
// length <= depth, listed by length then lexicographically.
std::vector<std::vector<Word>> BinaryShapes(size_t depth);
// Node "s" followed by the letters of the word, for each word of the shape.
RationalTree ShapeTree(const std::vector<Word>& shape);
std::vector<Word> ShapeLeaves(const std::vector<Word>& shape);
// Every shape of depth <= max_depth with every set of winning leaves.
std::vector<BoundedGame> BinaryClopenGames(size_t max_depth);
// Every shape with every antichain of winning positions.
std::vector<BoundedGame> BinaryOpenGames(size_t max_depth);

}  // namespace atrbench

#endif  // ATRBENCH_GAMES_HPP_

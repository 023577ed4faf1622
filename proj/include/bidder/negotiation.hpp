#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bidder/game.hpp"

namespace bidder::negotiation {

// Item order: Peppers, Strawberries, Cherries.
using ItemVector = std::array<int, 3>;
extern const std::array<std::string, 3> kItemNames;

int dot(const ItemVector& a, const ItemVector& b);
std::string item_vector_to_string(const ItemVector& v);  // "[a, b, c]"

// One sampled game: pool, both private utility vectors (equal total value
// over the pool) and the turn budget.
struct NegotiationInstance {
  ItemVector pool{};
  std::array<ItemVector, 2> values{};  // by seat; seat 0 acts on odd turns
  int max_turns = 4;
  std::uint64_t seed = 0;

  std::string to_json_string() const;
  static NegotiationInstance from_json_string(const std::string& s);

  bool operator==(const NegotiationInstance&) const = default;
};

// Pool counts uniform in [1,5]; seat-0 utilities uniform integers in
// [1,10]; seat-1 utilities are non-negative integers <= 10 solved so both
// players value the full pool equally (resampling internally until the
// constraint holds); max_turns uniform in [4,10].
NegotiationInstance sample_instance(std::uint64_t seed);

// The two agents swap utility vectors (the symmetric repeat of a game).
NegotiationInstance mirror(const NegotiationInstance& inst);

// Action tokens:
//   "accept"
//   "propose [a, b, c]"
//   "propose [a, b, c] say [x, y, z]"
// A proposal is the vector of item quantities the actor requests for
// itself; the optional utterance is a proposal-shaped message with no
// mechanical effect. legal_actions() lists in-bounds proposals (without
// utterance) in lexicographic order, then "accept" when a proposal is
// pending. apply() additionally admits any well-formed proposal, even one
// requesting more than the pool: accepting such a proposal voids the game.
struct ParsedAction {
  bool accept = false;
  ItemVector proposal{};
  std::optional<ItemVector> utterance;
};

ParsedAction parse_action(const std::string& token);
std::string propose_token(const ItemVector& proposal,
                          const std::optional<ItemVector>& utterance = std::nullopt);
extern const std::string kAccept;

// {"type":"propose","proposal":[...],"utterance":[...]} or {"type":"accept"}.
std::string action_to_json_string(const std::string& token);
std::string action_from_json_string(const std::string& json_text);

class NegotiationState final : public game::GameState {
 public:
  static NegotiationState initial(const NegotiationInstance& inst);

  game::NodeKind kind() const override { return kind_; }
  game::PlayerId to_act() const override;
  int step() const override { return static_cast<int>(history_.events.size()); }
  std::vector<std::string> legal_actions() const override;
  std::unique_ptr<game::GameState> apply(const std::string& action) const override;
  std::unique_ptr<game::GameState> resolve_chance() const override;  // never a chance node
  double payoff(game::PlayerId p) const override;
  const game::Trajectory& history() const override { return history_; }
  std::unique_ptr<game::GameState> clone() const override;

  const NegotiationInstance& instance() const { return inst_; }
  int turn() const { return turn_; }
  std::optional<ItemVector> last_proposal() const { return last_proposal_; }
  std::optional<ItemVector> last_utterance() const { return last_utterance_; }
  bool agreed() const { return agreed_; }
  // Final allocation received by each seat (zeros unless agreed).
  std::array<ItemVector, 2> allocation() const { return allocation_; }

  std::vector<std::string> public_event_lines() const;

 private:
  NegotiationState() = default;

  NegotiationInstance inst_;
  game::NodeKind kind_ = game::NodeKind::Decision;
  int turn_ = 1;  // seat 0 acts on odd turns
  std::optional<ItemVector> last_proposal_;
  std::optional<ItemVector> last_utterance_;
  bool agreed_ = false;
  std::array<double, 2> rewards_{0, 0};
  std::array<ItemVector, 2> allocation_{};
  game::Trajectory history_;
};

// True iff no alternative split of the pool improves one player's score
// without reducing the other's. `deal_a` is the share received by the
// player holding `u_a`; the other player receives the remainder.
bool pareto_optimal(const ItemVector& deal_a, const ItemVector& pool,
                    const ItemVector& u_a, const ItemVector& u_b);

}  // namespace bidder::negotiation

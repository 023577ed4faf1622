#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bidder/cards.hpp"
#include "bidder/game.hpp"

namespace bidder::holdem {

using cards::Card;

enum class Street : int { Preflop = 0, Flop = 1, Turn = 2, River = 3 };

std::string street_name(Street s);

// Small blind 1, big blind 2. Fixed raise sizes: small bet (2) on
// Preflop/Flop, big bet (4) on Turn/River.
constexpr int kSmallBlind = 1;
constexpr int kBigBlind = 2;
constexpr int kMaxRaisesPerRound = 4;

int bet_size(Street s);

// Action tokens in canonical order: Call < Raise < Fold < Check.
extern const std::string kCall;
extern const std::string kRaise;
extern const std::string kFold;
extern const std::string kCheck;

// A fully predetermined deal. Hole cards and board are attached to seats;
// seat 0 posts the small blind and acts first preflop. `mirrored` says the
// focal agent occupies seat 1, which hands the two agents each other's
// cards while seat context (blinds, order, board) stays fixed.
struct SessionSpec {
  std::uint64_t seed = 0;
  std::array<std::array<Card, 2>, 2> hole{};  // by seat
  std::array<Card, 5> board{};
  bool mirrored = false;

  std::string to_json_string() const;
  static SessionSpec from_json_string(const std::string& s);

  bool operator==(const SessionSpec&) const = default;
};

// The two agents switch hands: same deal, seat occupancy flipped.
SessionSpec mirror(const SessionSpec& spec);

// Rejection-sampling weights over the stronger player's final 7-card
// category (index = category 0..8). Larger weight = more likely to keep a
// deal whose best hand lands in that category. Uniform weights reproduce
// the natural deal distribution.
struct StrengthBoostConfig {
  std::array<double, 9> weights{1, 1, 1, 1, 1, 1, 1, 1, 1};

  static StrengthBoostConfig natural() { return {}; }
  // Default shipped boost: damps the two weakest categories so strong
  // hands show up more often than under a natural deal.
  static StrengthBoostConfig boosted() {
    return {{0.35, 0.55, 0.9, 1, 1, 1, 1, 1, 1}};
  }
};

// Deterministic under seed. Throws ConfigError when all weights are zero
// or any weight is negative.
SessionSpec sample_session(std::uint64_t seed, const StrengthBoostConfig& boost);

// Final 7-card category of the stronger seat (used by the sampler and the
// harness hand-strength histogram).
cards::HandCategory session_top_category(const SessionSpec& spec);

class HoldemState final : public game::GameState {
 public:
  static HoldemState initial(const SessionSpec& spec);

  // GameState interface.
  game::NodeKind kind() const override { return kind_; }
  game::PlayerId to_act() const override;
  int step() const override { return static_cast<int>(history_.events.size()); }
  std::vector<std::string> legal_actions() const override;
  std::unique_ptr<game::GameState> apply(const std::string& action) const override;
  std::unique_ptr<game::GameState> resolve_chance() const override;
  double payoff(game::PlayerId p) const override;
  const game::Trajectory& history() const override { return history_; }
  std::unique_ptr<game::GameState> clone() const override;

  // Environment accessors.
  Street street() const { return street_; }
  const std::array<Card, 2>& hole(game::PlayerId seat) const { return spec_.hole[seat]; }
  std::vector<Card> visible_board() const;
  int invested(game::PlayerId seat) const { return invested_[seat]; }
  int pot() const { return invested_[0] + invested_[1]; }
  int raises_this_round() const { return raises_; }
  const SessionSpec& session() const { return spec_; }

  // Public history rendered one line per event, blinds included. Safe to
  // show to either player.
  std::vector<std::string> public_event_lines() const;

 private:
  HoldemState() = default;

  HoldemState child_after(game::PlayerId actor, const std::string& action) const;
  void close_round();

  SessionSpec spec_;
  game::NodeKind kind_ = game::NodeKind::Decision;
  Street street_ = Street::Preflop;
  std::array<int, 2> invested_{kSmallBlind, kBigBlind};
  std::array<bool, 2> acted_{false, false};
  int raises_ = 0;
  game::PlayerId next_ = game::kPlayer0;
  game::PlayerId folded_ = game::kChance;  // kChance = nobody folded
  game::Trajectory history_;
};

int board_size(Street s);

}  // namespace bidder::holdem

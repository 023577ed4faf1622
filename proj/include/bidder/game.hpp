#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bidder::game {

// Two-player games only. -1 marks chance (board reveals etc.) in event logs.
using PlayerId = int;
constexpr PlayerId kPlayer0 = 0;
constexpr PlayerId kPlayer1 = 1;
constexpr PlayerId kChance = -1;

inline PlayerId other(PlayerId p) { return 1 - p; }

struct IllegalActionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct ActionRecord {
  PlayerId actor = kChance;
  std::string action;
  int step = 0;

  bool operator==(const ActionRecord&) const = default;
};

// Ordered public event log plus an optional private payload (the owner's
// initial hidden state: hole cards, utility vector). The payload never
// appears in the public view.
struct Trajectory {
  std::vector<ActionRecord> events;
  std::optional<std::string> initial_hidden;

  Trajectory public_view() const {
    return Trajectory{events, std::nullopt};
  }

  // Events taken by one actor (e.g. the opponent's action history).
  Trajectory filter_actor(PlayerId p) const {
    Trajectory out;
    for (const auto& e : events) {
      if (e.actor == p) out.events.push_back(e);
    }
    return out;
  }
};

enum class NodeKind { Decision, Chance, Terminal };

// Immutable extensive-form game state. apply() returns a fresh successor;
// states are safe to share across threads.
class GameState {
 public:
  virtual ~GameState() = default;

  virtual NodeKind kind() const = 0;
  virtual PlayerId to_act() const = 0;  // Decision nodes only
  virtual int step() const = 0;

  // Canonical, deterministic order. Throws ContractViolation at terminals.
  virtual std::vector<std::string> legal_actions() const = 0;

  // Throws IllegalActionError naming the action and the legal set.
  virtual std::unique_ptr<GameState> apply(const std::string& action) const = 0;

  // Resolves pending public information (e.g. deals the next street).
  // Chance nodes only.
  virtual std::unique_ptr<GameState> resolve_chance() const = 0;

  // Terminal nodes only.
  virtual double payoff(PlayerId p) const = 0;

  virtual const Trajectory& history() const = 0;

  virtual std::unique_ptr<GameState> clone() const = 0;

  bool is_terminal() const { return kind() == NodeKind::Terminal; }
  bool is_chance() const { return kind() == NodeKind::Chance; }
};

inline void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

[[noreturn]] inline void throw_illegal(const std::string& action,
                                       const std::vector<std::string>& legal) {
  std::string msg = "illegal action '" + action + "'; legal: {";
  for (size_t i = 0; i < legal.size(); ++i) {
    if (i) msg += ", ";
    msg += legal[i];
  }
  msg += "}";
  throw IllegalActionError(msg);
}

}  // namespace bidder::game

#include "bidder/holdem.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "bidder/errors.hpp"
#include "bidder/rng.hpp"

namespace bidder::holdem {

const std::string kCall = "Call";
const std::string kRaise = "Raise";
const std::string kFold = "Fold";
const std::string kCheck = "Check";

std::string street_name(Street s) {
  switch (s) {
    case Street::Preflop: return "Preflop";
    case Street::Flop: return "Flop";
    case Street::Turn: return "Turn";
    case Street::River: return "River";
  }
  return "?";
}

int bet_size(Street s) {
  return (s == Street::Preflop || s == Street::Flop) ? 2 * kSmallBlind
                                                     : 4 * kSmallBlind;
}

int board_size(Street s) {
  switch (s) {
    case Street::Preflop: return 0;
    case Street::Flop: return 3;
    case Street::Turn: return 4;
    case Street::River: return 5;
  }
  return 0;
}

std::string SessionSpec::to_json_string() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  for (int seat = 0; seat < 2; ++seat) {
    nlohmann::ordered_json h = nlohmann::ordered_json::array();
    for (const Card& c : hole[seat]) h.push_back(cards::card_to_string(c));
    j["hole"].push_back(h);
  }
  j["board"] = nlohmann::ordered_json::array();
  for (const Card& c : board) j["board"].push_back(cards::card_to_string(c));
  j["mirrored"] = mirrored;
  return j.dump();
}

SessionSpec SessionSpec::from_json_string(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  SessionSpec spec;
  spec.seed = j.at("seed").get<std::uint64_t>();
  for (int seat = 0; seat < 2; ++seat) {
    for (int k = 0; k < 2; ++k) {
      spec.hole[seat][k] = cards::card_from_string(j.at("hole")[seat][k].get<std::string>());
    }
  }
  for (int k = 0; k < 5; ++k) {
    spec.board[k] = cards::card_from_string(j.at("board")[k].get<std::string>());
  }
  spec.mirrored = j.at("mirrored").get<bool>();
  return spec;
}

SessionSpec mirror(const SessionSpec& spec) {
  SessionSpec m = spec;
  m.mirrored = !m.mirrored;
  return m;
}

cards::HandCategory session_top_category(const SessionSpec& spec) {
  cards::HandValue best = 0;
  for (int seat = 0; seat < 2; ++seat) {
    std::vector<Card> seven(spec.hole[seat].begin(), spec.hole[seat].end());
    seven.insert(seven.end(), spec.board.begin(), spec.board.end());
    best = std::max(best, cards::evaluate7(seven));
  }
  return cards::value_category(best);
}

SessionSpec sample_session(std::uint64_t seed, const StrengthBoostConfig& boost) {
  double max_w = 0;
  for (double w : boost.weights) {
    if (w < 0) throw ConfigError("strength boost weights must be non-negative");
    max_w = std::max(max_w, w);
  }
  if (max_w <= 0) throw ConfigError("strength boost weights must not all be zero");

  rng::Rng gen(seed);
  std::vector<Card> deck(52);
  for (int i = 0; i < 52; ++i) deck[i] = cards::card_from_index(i);

  for (;;) {
    gen.shuffle(deck);
    SessionSpec spec;
    spec.seed = seed;
    spec.hole[0] = {deck[0], deck[1]};
    spec.hole[1] = {deck[2], deck[3]};
    for (int k = 0; k < 5; ++k) spec.board[k] = deck[4 + k];
    int cat = static_cast<int>(session_top_category(spec));
    if (gen.next_unit() < boost.weights[cat] / max_w) return spec;
  }
}

HoldemState HoldemState::initial(const SessionSpec& spec) {
  HoldemState s;
  s.spec_ = spec;
  return s;
}

game::PlayerId HoldemState::to_act() const {
  game::require(kind_ == game::NodeKind::Decision, "to_act on non-decision state");
  return next_;
}

std::vector<Card> HoldemState::visible_board() const {
  int n = board_size(street_);
  return std::vector<Card>(spec_.board.begin(), spec_.board.begin() + n);
}

std::vector<std::string> HoldemState::legal_actions() const {
  game::require(kind_ == game::NodeKind::Decision, "legal_actions on non-decision state");
  int diff = invested_[game::other(next_)] - invested_[next_];
  std::vector<std::string> out;
  if (diff > 0) out.push_back(kCall);
  if (raises_ < kMaxRaisesPerRound) out.push_back(kRaise);
  out.push_back(kFold);
  if (diff == 0) out.push_back(kCheck);
  return out;
}

HoldemState HoldemState::child_after(game::PlayerId actor, const std::string& action) const {
  HoldemState s = *this;
  s.history_.events.push_back({actor, action, step()});
  return s;
}

void HoldemState::close_round() {
  if (street_ == Street::River) {
    kind_ = game::NodeKind::Terminal;
  } else {
    kind_ = game::NodeKind::Chance;
  }
}

std::unique_ptr<game::GameState> HoldemState::apply(const std::string& action) const {
  game::require(kind_ == game::NodeKind::Decision, "apply on non-decision state");
  auto legal = legal_actions();
  if (std::find(legal.begin(), legal.end(), action) == legal.end()) {
    game::throw_illegal(action, legal);
  }

  game::PlayerId me = next_;
  game::PlayerId opp = game::other(me);
  int diff = invested_[opp] - invested_[me];

  HoldemState s = child_after(me, action);
  if (action == kFold) {
    s.folded_ = me;
    s.kind_ = game::NodeKind::Terminal;
  } else if (action == kCall) {
    s.invested_[me] += diff;
    s.acted_[me] = true;
    if (s.acted_[opp]) {
      s.close_round();
    } else {
      s.next_ = opp;
    }
  } else if (action == kCheck) {
    s.acted_[me] = true;
    if (s.acted_[opp]) {
      s.close_round();
    } else {
      s.next_ = opp;
    }
  } else {  // Raise
    s.invested_[me] += diff + bet_size(street_);
    s.raises_ += 1;
    s.acted_[me] = true;
    s.next_ = opp;
  }
  return std::make_unique<HoldemState>(s);
}

std::unique_ptr<game::GameState> HoldemState::resolve_chance() const {
  game::require(kind_ == game::NodeKind::Chance, "resolve_chance on non-chance state");
  HoldemState s = *this;
  s.street_ = static_cast<Street>(static_cast<int>(street_) + 1);
  int from = board_size(street_);
  int to = board_size(s.street_);
  std::vector<Card> revealed(spec_.board.begin() + from, spec_.board.begin() + to);
  s.history_.events.push_back(
      {game::kChance, street_name(s.street_) + " " + cards::cards_to_string(revealed),
       step()});
  s.raises_ = 0;
  s.acted_ = {false, false};
  s.next_ = game::kPlayer1;  // big blind acts first after the flop
  s.kind_ = game::NodeKind::Decision;
  return std::make_unique<HoldemState>(s);
}

double HoldemState::payoff(game::PlayerId p) const {
  game::require(kind_ == game::NodeKind::Terminal, "payoff on non-terminal state");
  if (folded_ != game::kChance) {
    game::PlayerId winner = game::other(folded_);
    int amount = invested_[folded_];
    return p == winner ? amount : -amount;
  }
  // Showdown; matched bets by construction.
  game::require(invested_[0] == invested_[1], "showdown with unmatched bets");
  std::array<cards::HandValue, 2> v{};
  for (int seat = 0; seat < 2; ++seat) {
    std::vector<Card> seven(spec_.hole[seat].begin(), spec_.hole[seat].end());
    seven.insert(seven.end(), spec_.board.begin(), spec_.board.end());
    v[seat] = cards::evaluate7(seven);
  }
  if (v[0] == v[1]) return 0.0;
  game::PlayerId winner = v[0] > v[1] ? 0 : 1;
  int amount = invested_[game::other(winner)];
  return p == winner ? amount : -amount;
}

std::unique_ptr<game::GameState> HoldemState::clone() const {
  return std::make_unique<HoldemState>(*this);
}

std::vector<std::string> HoldemState::public_event_lines() const {
  std::vector<std::string> lines;
  lines.push_back("Player 0 posts small blind " + std::to_string(kSmallBlind));
  lines.push_back("Player 1 posts big blind " + std::to_string(kBigBlind));
  Street st = Street::Preflop;
  for (const auto& e : history_.events) {
    if (e.actor == game::kChance) {
      st = static_cast<Street>(static_cast<int>(st) + 1);
      lines.push_back("Community cards revealed: " + e.action);
    } else {
      lines.push_back("[" + street_name(st) + "] Player " + std::to_string(e.actor) +
                      ": " + e.action);
    }
  }
  return lines;
}

}  // namespace bidder::holdem

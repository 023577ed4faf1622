#include "bidder/negotiation.hpp"

#include <algorithm>

#include <json.hpp>

#include "bidder/rng.hpp"

namespace bidder::negotiation {

const std::array<std::string, 3> kItemNames = {"Peppers", "Strawberries", "Cherries"};
const std::string kAccept = "accept";

int dot(const ItemVector& a, const ItemVector& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::string item_vector_to_string(const ItemVector& v) {
  return "[" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " +
         std::to_string(v[2]) + "]";
}

std::string NegotiationInstance::to_json_string() const {
  nlohmann::ordered_json j;
  j["pool"] = pool;
  j["values"] = {{"player_0", values[0]}, {"player_1", values[1]}};
  j["max_turns"] = max_turns;
  j["seed"] = seed;
  return j.dump();
}

NegotiationInstance NegotiationInstance::from_json_string(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  NegotiationInstance inst;
  inst.pool = j.at("pool").get<ItemVector>();
  inst.values[0] = j.at("values").at("player_0").get<ItemVector>();
  inst.values[1] = j.at("values").at("player_1").get<ItemVector>();
  inst.max_turns = j.at("max_turns").get<int>();
  inst.seed = j.at("seed").get<std::uint64_t>();
  return inst;
}

NegotiationInstance mirror(const NegotiationInstance& inst) {
  NegotiationInstance m = inst;
  std::swap(m.values[0], m.values[1]);
  return m;
}

NegotiationInstance sample_instance(std::uint64_t seed) {
  rng::Rng gen(seed);
  for (;;) {
    NegotiationInstance inst;
    inst.seed = seed;
    for (int i = 0; i < 3; ++i) inst.pool[i] = gen.next_int(1, 5);
    for (int i = 0; i < 3; ++i) inst.values[0][i] = gen.next_int(1, 10);
    int total = dot(inst.values[0], inst.pool);

    // Solve seat 1's values with the same pool total: draw two components,
    // derive the third.
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::array<int, 3> order = {0, 1, 2};
      int k = static_cast<int>(gen.next_below(3));
      std::swap(order[2], order[k]);
      ItemVector ub{};
      ub[order[0]] = gen.next_int(0, 10);
      ub[order[1]] = gen.next_int(0, 10);
      int rem = total - ub[order[0]] * inst.pool[order[0]] -
                ub[order[1]] * inst.pool[order[1]];
      int count = inst.pool[order[2]];
      if (rem < 0 || rem % count != 0 || rem / count > 10) continue;
      ub[order[2]] = rem / count;
      if (ub[0] == 0 && ub[1] == 0 && ub[2] == 0) continue;
      inst.values[1] = ub;
      inst.max_turns = gen.next_int(4, 10);
      return inst;
    }
    // No solution found for this draw; resample everything.
  }
}

namespace {

// Parses "[a, b, c]" starting at pos; returns position after ']'.
size_t parse_vector(const std::string& s, size_t pos, ItemVector& out) {
  auto fail = [&]() -> size_t {
    throw game::IllegalActionError("malformed item vector in action: " + s);
  };
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size() || s[pos] != '[') return fail();
  ++pos;
  for (int i = 0; i < 3; ++i) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return fail();
    out[i] = std::stoi(s.substr(start, pos - start));
    while (pos < s.size() && s[pos] == ' ') ++pos;
    char expect = i < 2 ? ',' : ']';
    if (pos >= s.size() || s[pos] != expect) return fail();
    ++pos;
  }
  return pos;
}

}  // namespace

ParsedAction parse_action(const std::string& token) {
  if (token == kAccept) return ParsedAction{true, {}, std::nullopt};
  ParsedAction a;
  const std::string kPropose = "propose ";
  if (token.rfind(kPropose, 0) != 0) {
    throw game::IllegalActionError("unrecognized action token: " + token);
  }
  size_t pos = parse_vector(token, kPropose.size(), a.proposal);
  while (pos < token.size() && token[pos] == ' ') ++pos;
  if (pos == token.size()) return a;
  const std::string kSay = "say ";
  if (token.compare(pos, kSay.size(), kSay) != 0) {
    throw game::IllegalActionError("unrecognized action token: " + token);
  }
  ItemVector utter{};
  pos = parse_vector(token, pos + kSay.size(), utter);
  while (pos < token.size() && token[pos] == ' ') ++pos;
  if (pos != token.size()) {
    throw game::IllegalActionError("trailing content in action token: " + token);
  }
  a.utterance = utter;
  return a;
}

std::string propose_token(const ItemVector& proposal,
                          const std::optional<ItemVector>& utterance) {
  std::string t = "propose " + item_vector_to_string(proposal);
  if (utterance) t += " say " + item_vector_to_string(*utterance);
  return t;
}

std::string action_to_json_string(const std::string& token) {
  ParsedAction a = parse_action(token);
  nlohmann::ordered_json j;
  if (a.accept) {
    j["type"] = "accept";
  } else {
    j["type"] = "propose";
    j["proposal"] = a.proposal;
    j["utterance"] = a.utterance.value_or(a.proposal);
  }
  return j.dump();
}

std::string action_from_json_string(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (j.at("type") == "accept") return kAccept;
  ItemVector p = j.at("proposal").get<ItemVector>();
  std::optional<ItemVector> u;
  if (j.contains("utterance")) u = j.at("utterance").get<ItemVector>();
  return propose_token(p, u);
}

NegotiationState NegotiationState::initial(const NegotiationInstance& inst) {
  NegotiationState s;
  s.inst_ = inst;
  return s;
}

game::PlayerId NegotiationState::to_act() const {
  game::require(kind_ == game::NodeKind::Decision, "to_act on non-decision state");
  return turn_ % 2 == 1 ? game::kPlayer0 : game::kPlayer1;
}

std::vector<std::string> NegotiationState::legal_actions() const {
  game::require(kind_ == game::NodeKind::Decision, "legal_actions on non-decision state");
  std::vector<std::string> out;
  for (int a = 0; a <= inst_.pool[0]; ++a) {
    for (int b = 0; b <= inst_.pool[1]; ++b) {
      for (int c = 0; c <= inst_.pool[2]; ++c) {
        out.push_back(propose_token({a, b, c}));
      }
    }
  }
  if (last_proposal_) out.push_back(kAccept);
  return out;
}

std::unique_ptr<game::GameState> NegotiationState::apply(const std::string& action) const {
  game::require(kind_ == game::NodeKind::Decision, "apply on non-decision state");
  ParsedAction parsed = parse_action(action);

  game::PlayerId me = to_act();
  game::PlayerId opp = game::other(me);
  NegotiationState s = *this;
  s.history_.events.push_back({me, action, step()});

  if (parsed.accept) {
    if (!last_proposal_) {
      throw game::IllegalActionError("accept with no pending proposal");
    }
    s.kind_ = game::NodeKind::Terminal;
    const ItemVector& req = *last_proposal_;
    bool valid = true;
    for (int i = 0; i < 3; ++i) valid = valid && req[i] <= inst_.pool[i];
    if (!valid) {
      s.rewards_ = {0, 0};  // invalid proposal accepted voids the game
      return std::make_unique<NegotiationState>(s);
    }
    s.agreed_ = true;
    ItemVector mine{}, theirs = req;  // proposer = opp
    for (int i = 0; i < 3; ++i) mine[i] = inst_.pool[i] - req[i];
    s.allocation_[me] = mine;
    s.allocation_[opp] = theirs;
    s.rewards_[me] = dot(inst_.values[me], mine);
    s.rewards_[opp] = dot(inst_.values[opp], theirs);
    return std::make_unique<NegotiationState>(s);
  }

  s.last_proposal_ = parsed.proposal;
  s.last_utterance_ = parsed.utterance.value_or(parsed.proposal);
  if (turn_ >= inst_.max_turns) {
    s.kind_ = game::NodeKind::Terminal;  // out of turns, no agreement
    s.rewards_ = {0, 0};
    return std::make_unique<NegotiationState>(s);
  }
  s.turn_ = turn_ + 1;
  return std::make_unique<NegotiationState>(s);
}

std::unique_ptr<game::GameState> NegotiationState::resolve_chance() const {
  throw game::ContractViolation("negotiation has no chance nodes");
}

double NegotiationState::payoff(game::PlayerId p) const {
  game::require(kind_ == game::NodeKind::Terminal, "payoff on non-terminal state");
  return rewards_[p];
}

std::unique_ptr<game::GameState> NegotiationState::clone() const {
  return std::make_unique<NegotiationState>(*this);
}

std::vector<std::string> NegotiationState::public_event_lines() const {
  std::vector<std::string> lines;
  int t = 1;
  for (const auto& e : history_.events) {
    ParsedAction a = parse_action(e.action);
    std::string who = "Player " + std::to_string(e.actor);
    if (a.accept) {
      lines.push_back("Turn " + std::to_string(t) + ": " + who +
                      " accepted the last proposal");
    } else {
      lines.push_back("Turn " + std::to_string(t) + ": " + who + " proposed " +
                      item_vector_to_string(a.proposal) + " and said " +
                      item_vector_to_string(a.utterance.value_or(a.proposal)));
    }
    ++t;
  }
  return lines;
}

bool pareto_optimal(const ItemVector& deal_a, const ItemVector& pool,
                    const ItemVector& u_a, const ItemVector& u_b) {
  ItemVector b_share{};
  for (int i = 0; i < 3; ++i) {
    game::require(deal_a[i] >= 0 && deal_a[i] <= pool[i],
                  "deal is not a partition of the pool");
    b_share[i] = pool[i] - deal_a[i];
  }
  int sa = dot(u_a, deal_a);
  int sb = dot(u_b, b_share);

  ItemVector alt{0, 0, 0};
  for (;;) {
    int aa = dot(u_a, alt);
    int ab = dot(u_b, {pool[0] - alt[0], pool[1] - alt[1], pool[2] - alt[2]});
    if (aa >= sa && ab >= sb && (aa > sa || ab > sb)) return false;
    // Odometer over all allocations.
    int i = 0;
    while (i < 3 && alt[i] == pool[i]) {
      alt[i] = 0;
      ++i;
    }
    if (i == 3) break;
    ++alt[i];
  }
  return true;
}

}  // namespace bidder::negotiation

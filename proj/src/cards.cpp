#include "bidder/cards.hpp"

#include <algorithm>
#include <stdexcept>

namespace bidder::cards {

namespace {

constexpr char kRankChars[] = "23456789TJQKA";
constexpr char kSuitChars[] = "shdc";

int rank_from_char(char c) {
  for (int i = 0; i < 13; ++i) {
    if (kRankChars[i] == c) return i + 2;
  }
  throw std::invalid_argument(std::string("bad rank char: ") + c);
}

int suit_from_char(char c) {
  for (int i = 0; i < 4; ++i) {
    if (kSuitChars[i] == c) return i;
  }
  throw std::invalid_argument(std::string("bad suit char: ") + c);
}

void check_distinct(std::span<const Card> cs) {
  for (size_t i = 0; i < cs.size(); ++i) {
    for (size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i] == cs[j]) {
        throw std::invalid_argument("duplicate card: " + card_to_string(cs[i]));
      }
    }
  }
}

HandValue encode(HandCategory cat, std::array<int, 5> tiebreak) {
  HandValue v = static_cast<HandValue>(cat) * kCategoryBase;
  std::uint32_t mul = kCategoryBase / 15;
  for (int t : tiebreak) {
    v += static_cast<std::uint32_t>(t) * mul;
    mul /= 15;
  }
  return v;
}

// High card of a straight within the rank set, or 0. Ace plays low in
// A-2-3-4-5 (high card 5).
int straight_high(std::uint32_t rank_mask) {
  // rank_mask bit r set means rank r present, r in [2,14].
  std::uint32_t m = rank_mask;
  if (m & (1u << 14)) m |= 1u << 1;  // wheel ace
  for (int high = 14; high >= 5; --high) {
    std::uint32_t run = 0x1Fu << (high - 4);
    if ((m & run) == run) return high;
  }
  return 0;
}

}  // namespace

Card card_from_index(int idx) {
  if (idx < 0 || idx >= 52) throw std::invalid_argument("card index out of range");
  return Card{idx / 4 + 2, idx % 4};
}

int card_index(Card c) {
  if (c.rank < 2 || c.rank > 14 || c.suit < 0 || c.suit > 3) {
    throw std::invalid_argument("card out of range");
  }
  return (c.rank - 2) * 4 + c.suit;
}

std::string card_to_string(Card c) {
  if (c.rank < 2 || c.rank > 14 || c.suit < 0 || c.suit > 3) {
    throw std::invalid_argument("card out of range");
  }
  return std::string{kRankChars[c.rank - 2], kSuitChars[c.suit]};
}

Card card_from_string(const std::string& s) {
  if (s.size() != 2) throw std::invalid_argument("bad card string: " + s);
  return Card{rank_from_char(s[0]), suit_from_char(s[1])};
}

std::vector<Card> parse_cards(const std::string& space_separated) {
  std::vector<Card> out;
  std::string cur;
  for (char ch : space_separated) {
    if (ch == ' ') {
      if (!cur.empty()) out.push_back(card_from_string(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(card_from_string(cur));
  return out;
}

std::string cards_to_string(std::span<const Card> cs) {
  std::string out;
  for (const Card& c : cs) {
    if (!out.empty()) out += ' ';
    out += card_to_string(c);
  }
  return out;
}

std::string category_name(HandCategory c) {
  switch (c) {
    case HandCategory::HighCard: return "High Card";
    case HandCategory::OnePair: return "One Pair";
    case HandCategory::TwoPair: return "Two Pair";
    case HandCategory::ThreeOfAKind: return "Three of a Kind";
    case HandCategory::Straight: return "Straight";
    case HandCategory::Flush: return "Flush";
    case HandCategory::FullHouse: return "Full House";
    case HandCategory::FourOfAKind: return "Four of a Kind";
    case HandCategory::StraightFlush: return "Straight Flush";
  }
  return "?";
}

HandValue evaluate5(std::span<const Card> five) {
  if (five.size() != 5) throw std::invalid_argument("evaluate5 needs 5 cards");
  check_distinct(five);

  std::array<int, 15> count{};
  std::uint32_t rank_mask = 0;
  bool flush = true;
  for (const Card& c : five) {
    ++count[c.rank];
    rank_mask |= 1u << c.rank;
    flush = flush && c.suit == five[0].suit;
  }

  int sh = straight_high(rank_mask);
  if (flush && sh) return encode(HandCategory::StraightFlush, {sh, 0, 0, 0, 0});

  // Distinct ranks ordered by (multiplicity, rank) descending; pad with zeros.
  std::array<int, 5> tb{};
  int distinct = 0;
  for (int mult = 4; mult >= 1; --mult) {
    for (int r = 14; r >= 2; --r) {
      if (count[r] == mult) tb[distinct++] = r;
    }
  }
  if (distinct == 2) {
    // 4+1 or 3+2
    int top = tb[0];
    return count[top] == 4 ? encode(HandCategory::FourOfAKind, {tb[0], tb[1], 0, 0, 0})
                           : encode(HandCategory::FullHouse, {tb[0], tb[1], 0, 0, 0});
  }
  if (distinct == 3) {
    // 3+1+1 or 2+2+1
    int top = tb[0];
    return count[top] == 3 ? encode(HandCategory::ThreeOfAKind, {tb[0], tb[1], tb[2], 0, 0})
                           : encode(HandCategory::TwoPair, {tb[0], tb[1], tb[2], 0, 0});
  }
  if (distinct == 4) return encode(HandCategory::OnePair, {tb[0], tb[1], tb[2], tb[3], 0});

  if (flush) return encode(HandCategory::Flush, tb);
  if (sh) return encode(HandCategory::Straight, {sh, 0, 0, 0, 0});
  return encode(HandCategory::HighCard, tb);
}

HandValue evaluate7(std::span<const Card> seven) {
  if (seven.size() != 7) throw std::invalid_argument("evaluate7 needs 7 cards");
  check_distinct(seven);

  std::array<int, 15> count{};
  std::array<int, 4> suit_count{};
  std::array<std::uint32_t, 4> suit_rank_mask{};
  std::uint32_t rank_mask = 0;
  for (const Card& c : seven) {
    ++count[c.rank];
    ++suit_count[c.suit];
    suit_rank_mask[c.suit] |= 1u << c.rank;
    rank_mask |= 1u << c.rank;
  }

  // Straight flush: only one suit can hold 5+ of 7 cards.
  for (int s = 0; s < 4; ++s) {
    if (suit_count[s] >= 5) {
      if (int sh = straight_high(suit_rank_mask[s]); sh) {
        return encode(HandCategory::StraightFlush, {sh, 0, 0, 0, 0});
      }
    }
  }

  // Distinct ranks by multiplicity then rank, both descending.
  std::vector<std::pair<int, int>> by_mult;  // (mult, rank)
  for (int r = 14; r >= 2; --r) {
    if (count[r]) by_mult.emplace_back(count[r], r);
  }
  std::stable_sort(by_mult.begin(), by_mult.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  auto kickers = [&](int skip_a, int skip_b, int want) {
    std::vector<int> ks;
    for (int r = 14; r >= 2 && static_cast<int>(ks.size()) < want; --r) {
      if (count[r] && r != skip_a && r != skip_b) ks.push_back(r);
    }
    return ks;
  };

  if (by_mult[0].first == 4) {
    int quad = by_mult[0].second;
    int kick = kickers(quad, 0, 1)[0];
    return encode(HandCategory::FourOfAKind, {quad, kick, 0, 0, 0});
  }

  // Full house: best trips + best pair (a second trips plays as the pair).
  if (by_mult[0].first == 3) {
    int trips = by_mult[0].second;
    int pair = 0;
    for (size_t i = 1; i < by_mult.size(); ++i) {
      if (by_mult[i].first >= 2) {
        pair = std::max(pair, by_mult[i].second);
      }
    }
    if (pair) return encode(HandCategory::FullHouse, {trips, pair, 0, 0, 0});
  }

  for (int s = 0; s < 4; ++s) {
    if (suit_count[s] >= 5) {
      std::array<int, 5> tb{};
      int n = 0;
      for (int r = 14; r >= 2 && n < 5; --r) {
        if (suit_rank_mask[s] & (1u << r)) tb[n++] = r;
      }
      return encode(HandCategory::Flush, tb);
    }
  }

  if (int sh = straight_high(rank_mask); sh) {
    return encode(HandCategory::Straight, {sh, 0, 0, 0, 0});
  }

  if (by_mult[0].first == 3) {
    int trips = by_mult[0].second;
    auto ks = kickers(trips, 0, 2);
    return encode(HandCategory::ThreeOfAKind, {trips, ks[0], ks[1], 0, 0});
  }

  if (by_mult[0].first == 2) {
    int hi_pair = by_mult[0].second;
    int lo_pair = 0;
    for (size_t i = 1; i < by_mult.size(); ++i) {
      if (by_mult[i].first == 2) {
        lo_pair = std::max(lo_pair, by_mult[i].second);
      }
    }
    if (lo_pair) {
      int kick = kickers(hi_pair, lo_pair, 1)[0];
      return encode(HandCategory::TwoPair, {hi_pair, lo_pair, kick, 0, 0});
    }
    auto ks = kickers(hi_pair, 0, 3);
    return encode(HandCategory::OnePair, {hi_pair, ks[0], ks[1], ks[2], 0});
  }

  auto ks = kickers(0, 0, 5);
  return encode(HandCategory::HighCard, {ks[0], ks[1], ks[2], ks[3], ks[4]});
}

HandCategory categorize(std::span<const Card> seven) {
  return value_category(evaluate7(seven));
}

HandValue evaluate_best(std::span<const Card> cs) {
  if (cs.size() == 5) return evaluate5(cs);
  if (cs.size() == 7) return evaluate7(cs);
  if (cs.size() != 6) throw std::invalid_argument("evaluate_best needs 5..7 cards");
  check_distinct(cs);
  HandValue best = 0;
  std::array<Card, 5> five{};
  for (size_t skip = 0; skip < 6; ++skip) {
    int n = 0;
    for (size_t i = 0; i < 6; ++i) {
      if (i != skip) five[n++] = cs[i];
    }
    best = std::max(best, evaluate5(five));
  }
  return best;
}

}  // namespace bidder::cards

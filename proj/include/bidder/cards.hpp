#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bidder::cards {

// Rank 2..14 (14 = Ace), suit 0..3 (s, h, d, c).
struct Card {
  int rank = 0;
  int suit = 0;

  bool operator==(const Card&) const = default;
  auto operator<=>(const Card&) const = default;
};

// 0..51 index <-> Card. Index = (rank - 2) * 4 + suit.
Card card_from_index(int idx);
int card_index(Card c);

// Short form like "As", "Td", "2c". Throws std::invalid_argument on bad input.
std::string card_to_string(Card c);
Card card_from_string(const std::string& s);

std::vector<Card> parse_cards(const std::string& space_separated);
std::string cards_to_string(std::span<const Card> cs);

// Hand categories, weakest to strongest.
enum class HandCategory : int {
  HighCard = 0,
  OnePair = 1,
  TwoPair = 2,
  ThreeOfAKind = 3,
  Straight = 4,
  Flush = 5,
  FullHouse = 6,
  FourOfAKind = 7,
  StraightFlush = 8,
};

std::string category_name(HandCategory c);

// Total-order hand value. Encoded as category * 15^5 plus five tiebreak
// ranks in descending significance (unused slots are zero), so two values
// compare exactly like the hands they encode.
using HandValue = std::uint32_t;

constexpr std::uint32_t kCategoryBase = 759375;  // 15^5

inline HandCategory value_category(HandValue v) {
  return static_cast<HandCategory>(v / kCategoryBase);
}

// Rank the best 5-card hand. Cards must be distinct.
HandValue evaluate5(std::span<const Card> five);

// Rank the best 5-of-7 hand directly (rank multiplicities, flush and
// straight detection, kicker selection). Throws on duplicates.
HandValue evaluate7(std::span<const Card> seven);

HandCategory categorize(std::span<const Card> seven);

// Best hand value over all 5-card subsets of 5..7 cards. Used for partial
// boards (flop: 5 cards, turn: 6 cards).
HandValue evaluate_best(std::span<const Card> cs);

}  // namespace bidder::cards

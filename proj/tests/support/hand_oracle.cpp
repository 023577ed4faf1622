#include "support/hand_oracle.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace bidder::testsupport {

using cards::Card;
using cards::HandCategory;
using cards::HandValue;

namespace {

HandValue pack(HandCategory cat, const std::vector<int>& ranks) {
  HandValue v = static_cast<HandValue>(cat);
  for (int i = 0; i < 5; ++i) {
    v = v * 15 + (i < static_cast<int>(ranks.size()) ? ranks[i] : 0);
  }
  return v;
}

}  // namespace

cards::HandValue oracle_rank5(std::span<const Card> five) {
  std::vector<int> ranks;
  for (const Card& c : five) ranks.push_back(c.rank);
  std::sort(ranks.rbegin(), ranks.rend());

  bool flush = std::all_of(five.begin(), five.end(),
                           [&](const Card& c) { return c.suit == five[0].suit; });

  bool straight = true;
  int straight_high = ranks[0];
  for (int i = 1; i < 5; ++i) {
    if (ranks[i] != ranks[0] - i) straight = false;
  }
  if (!straight && ranks == std::vector<int>{14, 5, 4, 3, 2}) {
    straight = true;
    straight_high = 5;  // ace plays low
  }

  // Multiplicity pattern, e.g. quads = {4,1}, full house = {3,2}.
  std::vector<std::pair<int, int>> groups;  // (count, rank), sorted desc
  for (size_t i = 0; i < ranks.size();) {
    size_t j = i;
    while (j < ranks.size() && ranks[j] == ranks[i]) ++j;
    groups.emplace_back(static_cast<int>(j - i), ranks[i]);
    i = j;
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second > b.second;
  });
  std::vector<int> sig;
  for (const auto& [cnt, r] : groups) sig.push_back(r);

  if (straight && flush) return pack(HandCategory::StraightFlush, {straight_high});
  if (groups[0].first == 4) return pack(HandCategory::FourOfAKind, sig);
  if (groups[0].first == 3 && groups.size() == 2) return pack(HandCategory::FullHouse, sig);
  if (flush) return pack(HandCategory::Flush, sig);
  if (straight) return pack(HandCategory::Straight, {straight_high});
  if (groups[0].first == 3) return pack(HandCategory::ThreeOfAKind, sig);
  if (groups[0].first == 2 && groups[1].first == 2) return pack(HandCategory::TwoPair, sig);
  if (groups[0].first == 2) return pack(HandCategory::OnePair, sig);
  return pack(HandCategory::HighCard, sig);
}

cards::HandValue oracle_rank7(std::span<const Card> seven) {
  HandValue best = 0;
  std::array<Card, 5> pick{};
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      int n = 0;
      for (int k = 0; k < 7; ++k) {
        if (k != i && k != j) pick[n++] = seven[k];
      }
      best = std::max(best, oracle_rank5(pick));
    }
  }
  return best;
}

}  // namespace bidder::testsupport

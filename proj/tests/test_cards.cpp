#include <doctest.h>

#include <set>
#include <vector>

#include "bidder/cards.hpp"
#include "bidder/rng.hpp"
#include "support/hand_oracle.hpp"

using namespace bidder;
using cards::Card;
using cards::HandCategory;

namespace {

std::vector<Card> cs(const std::string& s) { return cards::parse_cards(s); }

std::vector<Card> random_seven(rng::Rng& gen) {
  std::set<int> idx;
  while (idx.size() < 7) idx.insert(static_cast<int>(gen.next_below(52)));
  std::vector<Card> out;
  for (int i : idx) out.push_back(cards::card_from_index(i));
  return out;
}

}  // namespace

TEST_CASE("card string round trip") {
  for (int i = 0; i < 52; ++i) {
    Card c = cards::card_from_index(i);
    CHECK(cards::card_from_string(cards::card_to_string(c)) == c);
    CHECK(cards::card_index(c) == i);
  }
  CHECK(cards::card_to_string({14, 0}) == "As");
  CHECK(cards::card_from_string("Td") == Card{10, 2});
  CHECK_THROWS(cards::card_from_string("Xz"));
}

TEST_CASE("straight flush beats four of a kind") {
  auto royal = cs("As Ks Qs Js Ts 2h 3d");
  auto quads = cs("Ah Ad Ac As Kd 2h 3d");
  CHECK(cards::evaluate7(royal) > cards::evaluate7(quads));
  CHECK(cards::categorize(royal) == HandCategory::StraightFlush);
  CHECK(cards::categorize(quads) == HandCategory::FourOfAKind);
}

TEST_CASE("kicker decides otherwise equal hands") {
  auto hi = cs("Ah Ad Ks 7c 5d 3h 2s");
  auto lo = cs("As Ac Qs 7d 5h 3c 2d");
  CHECK(cards::evaluate7(hi) > cards::evaluate7(lo));
}

TEST_CASE("wheel straight uses ace low") {
  auto wheel = cs("Ah 2d 3s 4c 5h Kd Qs");
  auto six_high = cs("2h 3d 4s 5c 6h Kd Qs");
  CHECK(cards::categorize(wheel) == HandCategory::Straight);
  CHECK(cards::evaluate7(six_high) > cards::evaluate7(wheel));
}

TEST_CASE("pair on unpaired board categorizes as one pair") {
  auto h = cs("As Ah 9d 7c 5s 3h 2d");
  CHECK(cards::categorize(h) == HandCategory::OnePair);
}

TEST_CASE("board-only flush counts") {
  auto h = cs("2h 3h Kd Qd 9d 7d 5d");
  CHECK(cards::categorize(h) == HandCategory::Flush);
}

TEST_CASE("duplicate cards rejected") {
  auto h = cs("As As Qs Js Ts 2h 3d");
  CHECK_THROWS(cards::evaluate7(h));
}

TEST_CASE("evaluate7 matches exhaustive five-of-seven oracle") {
  rng::Rng gen(20240601);
  for (int trial = 0; trial < 2000; ++trial) {
    auto hand = random_seven(gen);
    CAPTURE(cards::cards_to_string(hand));
    CHECK(cards::evaluate7(hand) == testsupport::oracle_rank7(hand));
  }
}

TEST_CASE("evaluate_best on six cards matches subset max") {
  rng::Rng gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto hand = random_seven(gen);
    hand.pop_back();
    cards::HandValue best = 0;
    std::vector<Card> five(hand.begin(), hand.begin() + 5);
    for (size_t skip = 0; skip < 6; ++skip) {
      int n = 0;
      for (size_t i = 0; i < 6; ++i) {
        if (i != skip) five[n++] = hand[i];
      }
      best = std::max(best, testsupport::oracle_rank5(five));
    }
    CHECK(cards::evaluate_best(hand) == best);
  }
}

#pragma once

// Test-only reference evaluator: ranks a 7-card hand by exhaustively
// enumerating all C(7,5) five-card subsets with an independently written
// five-card classifier. Kept separate from the library implementation on
// purpose; do not reuse code from src/cards.cpp here.

#include <span>

#include "bidder/cards.hpp"

namespace bidder::testsupport {

cards::HandValue oracle_rank5(std::span<const cards::Card> five);
cards::HandValue oracle_rank7(std::span<const cards::Card> seven);

}  // namespace bidder::testsupport

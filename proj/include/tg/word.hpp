// word.hpp -- free-word calculus on the involutive alphabet {1,2,3}
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tg {

// A word over {1,2,3}; symbol i stands for the reflection r_i. The
// generators are involutions, so inverses never need explicit signs.
using Word = std::vector<uint8_t>;

struct BadSymbol : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotStable : std::domain_error {
    using std::domain_error::domain_error;
};

// Digit-string codec used on every CLI/JSON surface ("123123" etc.).
Word parse_word(std::string_view digits);
std::string format_word(const Word& w);

// Deletes adjacent equal symbols until none remain.
Word free_reduce(const Word& w);

// Reduced word with unequal first/last symbol, conjugate to w in the
// free product <r1>*<r2>*<r3>.
Word cyclic_reduce(const Word& w);

// True iff the word has even length and every symbol occurs equally
// often at odd and at even positions (1-based).
bool is_stable(const Word& w);

// One rewriting move on a word. Positions are 1-based.
//   Transpose(p):  swap the two-symbol blocks at p..p+1 and p+2..p+3
//   DeletePair(p): remove the equal symbols at p, p+1
struct Move {
    enum Kind : uint8_t { Transpose, DeletePair } kind;
    int pos;
    bool operator==(const Move&) const = default;
};

// Applies one move; throws std::out_of_range / std::invalid_argument on
// a move that does not fit the word.
Word apply_move(const Word& w, const Move& m);

// A move sequence that takes a stable word to the empty word.
// Throws NotStable when the input is not stable.
std::vector<Move> stable_reduction(const Word& w);

// Replays moves and reports whether the result is empty.
bool replay_to_empty(const Word& w, const std::vector<Move>& moves);

// Lexicographically least word over the orbit of w under the six symbol
// permutations, reversal and all cyclic rotations. Expects w cyclically
// reduced.
Word word_canonical(const Word& w);

}  // namespace tg

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bulab::freegroup {

// Reduced words over the letters x, X, y, Y where X and Y are the inverses
// of x and y. The empty string is the identity. Strings double as the wire
// format, so "yxYX" is the commutator y x y^-1 x^-1.
using Word = std::string;

bool is_generator_letter(char c);
char inverse_letter(char c);

bool is_reduced(std::string_view letters);

// Free reduction: delete adjacent inverse pairs until none remain. The
// result does not depend on deletion order.
Word reduce(std::string_view letters);

// Concatenate and reduce. Associative with the empty word as identity.
Word multiply(const Word& u, const Word& v);

Word inverse(const Word& w);

// Reduced length mod 2. A homomorphism onto Z_2: reduction deletes letters
// two at a time.
int parity(const Word& w);

// All reduced words of length <= max_length, shortest first, lexicographic
// within a length. 1 + 2*(3^max_length - 1) words.
std::vector<Word> enumerate_reduced_words(int max_length);

}  // namespace bulab::freegroup

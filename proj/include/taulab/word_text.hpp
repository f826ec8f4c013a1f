#pragma once

// Text form of functor words.  Whitespace-separated tokens:
//   S            the transform letter          S^-1   its inverse
//   T            the twist letter              T^k    k-fold twist
//   [1] / [-1]   shift up / down               [k]    k-fold shift
// Exponents and shift amounts are nonzero integers.  Parsing expands every
// token into single letters, so printing is letter-by-letter and the
// round trip parse(format(w)) == w holds for every word.

#include "taulab/cover.hpp"

#include <stdexcept>
#include <string>

namespace taulab {

struct WordParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FunctorWord parse_word(const std::string& text);

std::string format_word(const FunctorWord& w);

}  // namespace taulab

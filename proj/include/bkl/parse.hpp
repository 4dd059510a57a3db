#pragma once

#include <string_view>
#include <variant>

#include "bkl/braid_word.hpp"

namespace bkl {

/// Parses `B<n>: token token ...` where a token is one of
///   a(i,j)  A(i,j)   positive / negative band, i < j
///   s(i)    S(i)     Artin sigma_i^{+-1}
///   d       D        delta^{+-1}
/// each optionally followed by `^<int>`; a negative exponent inverts.
/// Whitespace between tokens is optional. A delta appearing after other
/// letters is moved to the front by conjugating the preceding letters.
///
/// The result is an ArtinWord when every token is `s`/`S`, otherwise a
/// BandWord (Artin tokens are mapped to a(i,i+1)).
std::variant<BandWord, ArtinWord> parse_word(std::string_view text);

/// parse_word with Artin results converted to band letters.
BandWord parse_band_word(std::string_view text);

}  // namespace bkl

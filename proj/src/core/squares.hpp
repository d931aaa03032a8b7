#pragma once

#include <cstdint>

#include "core/system.hpp"

namespace wkpc {

/// The two shipped editions of the built-in squares system. The published
/// transition table contains a target state "s3" that appears nowhere else
/// and two endgame rows whose lower-strand letters contradict the narrative
/// trace of the construction. AS_PRINTED encodes the table verbatim;
/// CORRECTED applies the minimal repair (s3 -> q3, swapped endgame letters,
/// uniform (q4,..) naming). Which one actually recognizes the squares
/// language is settled empirically by the test suite, not assumed.
enum class SquaresVariant { Corrected, AsPrinted };

const char* to_string(SquaresVariant v);

/// Builds the two-component system over V = {a,b,c} with the non-injective
/// relation {(a,b),(a,c)} that recognizes { a^(n^2) : n > 1 } by checking the
/// lower strand for n alternating blocks of length n. State sets are derived
/// from the transition table; tuple-shaped state names are flattened with
/// underscores ("(q2,aa,b)" becomes "q2_aa_b", with "l" for the empty word).
System build_squares_system(SquaresVariant variant);

/// The canonical accepting lower strand for a^(n^2): n alternating blocks of
/// length n starting with b, hence n-1 block boundaries. Requires n >= 2.
/// Symbol ids match build_squares_system's alphabet.
Word squares_witness(std::uint32_t n);

/// Number of adjacent positions with different letters in a {b,c}-word.
/// Throws std::invalid_argument when the word uses any other symbol of the
/// squares alphabet.
std::uint32_t boundary_count(const Alphabet& alphabet, WordView w);

}  // namespace wkpc

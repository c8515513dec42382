#pragma once

// Published reference data for the worked examples: a 2-register product over
// x^2+x+1 and x^3+x+1 (period 21), and a 3-register generator that adds x^5+x^2+1
// (period 651) used both as a pure product and as a majority combiner.

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>

namespace lfsrcrt::fixtures {

using IndexExponent = std::pair<std::uint32_t, std::uint32_t>;  // (k, d) meaning S_k = base^d

// Feedback polynomials as hex bitsets.
inline constexpr std::string_view kFeedback2 = "7";    // x^2 + x + 1
inline constexpr std::string_view kFeedback3 = "B";    // x^3 + x + 1
inline constexpr std::string_view kFeedback5 = "25";   // x^5 + x^2 + 1
inline constexpr std::string_view kProductMinPoly21 = "57";  // x^6 + x^4 + x^2 + x + 1
// x^30 + x^25 + x^24 + x^20 + x^19 + x^17 + x^16 + x^13 + x^10 + x^9 + x^8 + x^7 + x^4 + x^2 + 1
inline constexpr std::string_view kProductMinPoly651 = "431B2795";
// Degree-31 minimal polynomial of the majority-combiner output (reducible).
inline constexpr std::string_view kCombinerMinPoly651 = "B9D7AFB7";

inline constexpr std::string_view kSeqA = "011";
inline constexpr std::string_view kSeqB = "0010111";
// Only the first 21 characters of the printed product string are one period of a*b.
inline constexpr std::string_view kProduct21 = "001011000001010010011";
inline constexpr std::string_view kProduct21Printed = "001011000001010010011101110111011101";

// Spectra of the canonical streams relative to x modulo their feedback polynomials.
inline constexpr std::array<IndexExponent, 2> kSpectrumA = {{{1, 0}, {2, 0}}};
inline constexpr std::array<IndexExponent, 3> kSpectrumB = {{{3, 4}, {5, 2}, {6, 1}}};
inline constexpr std::array<IndexExponent, 5> kSpectrumC = {{{15, 29}, {23, 30}, {27, 15}, {29, 23}, {30, 27}}};
// Period-21 product spectrum relative to x mod x^6+x^4+x^2+x+1.
inline constexpr std::array<IndexExponent, 6> kSpectrumProduct21 = {
    {{5, 9}, {10, 18}, {13, 15}, {17, 18}, {19, 9}, {20, 15}}};

// Period-651 product spectrum relative to x mod kProductMinPoly651.
inline constexpr std::array<IndexExponent, 30> kSpectrumProduct651 = {{
    {61, 492},  {89, 387},  {122, 333}, {139, 246}, {178, 123}, {185, 585}, {209, 309}, {215, 240},
    {244, 15},  {271, 30},  {278, 492}, {325, 60},  {356, 246}, {370, 519}, {395, 123}, {418, 618},
    {430, 480}, {433, 120}, {461, 15},  {488, 30},  {523, 387}, {542, 60},  {556, 333}, {587, 519},
    {619, 585}, {635, 618}, {643, 309}, {647, 480}, {649, 240}, {650, 120},
}};

// Majority-combiner spectrum as published, relative to the same base. Several entries
// disagree with direct computation (index 156 is not even in the CRT-predicted support).
inline constexpr std::array<IndexExponent, 31> kSpectrumCombinerPublished = {{
    {27, 15},   {31, 186},  {54, 30},   {62, 372},  {77, 123},  {91, 60},   {108, 309}, {124, 93},
    {153, 519}, {156, 30},  {182, 492}, {201, 618}, {213, 480}, {216, 120}, {248, 186}, {306, 618},
    {308, 387}, {339, 333}, {341, 93},  {364, 30},  {371, 387}, {402, 585}, {426, 309}, {432, 240},
    {495, 492}, {496, 372}, {511, 309}, {573, 246}, {581, 240}, {612, 123}, {616, 387},
}};

// Majority combiner z = x1x2 + x2x3 + x3x1 with impulse fills.
inline constexpr std::string_view kMajorityMasks = "3,6,5";
inline constexpr std::string_view kCombinerPrefix = "0010110101110110";
inline constexpr std::string_view kCombinerPrintedHead =
    "0010110101110110110110110110101010110110110010111000110110110"
    "110010111011011110100110010111010010100101110";
inline constexpr std::string_view kCombinerPrintedTail = "101011010010111001011110001111010111";

// Known keystream window and its recovery.
inline constexpr std::string_view kAttackWindow = "1011110001";
inline constexpr std::uint64_t kAttackOffset = 632;
inline constexpr std::array<std::uint64_t, 3> kAttackResidues = {2, 2, 12};
inline constexpr std::array<std::string_view, 3> kRecoveredStates = {"10", "101", "01111"};
// Shift counts quoted alongside the recovered states; they equal the negated residues.
inline constexpr std::array<std::int64_t, 3> kQuotedShifts = {1, 5, 19};

struct ShiftCase {
  std::int64_t shift_a;
  std::int64_t shift_b;
  std::uint64_t combined;
};

// Two-register product: shifting a by k1 and b by k2 shifts the product by tau.
inline constexpr std::array<ShiftCase, 4> kShiftCases = {{{1, 0, 7}, {2, 0, 14}, {0, 1, 15}, {1, 3, 10}}};

}  // namespace lfsrcrt::fixtures

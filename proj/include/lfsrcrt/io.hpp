#pragma once

// Text formats:
//   sequence file   "period <n>\n<bits>\n"
//   spectrum CSV    "n,<n>,modulus,<hex>[,base,<hex>]" then "k,<exponent>" per nonzero value
//   generator spec  "lfsr <poly-hex> <init-bits>" per register, then "anf <mask-list>"
// Lines starting with '#' and blank lines are ignored in generator specs.

#include <iosfwd>
#include <string>

#include "lfsrcrt/combiner.hpp"

namespace lfsrcrt {

/// Declared period plus the stored bits. The payload may be shorter than the period
/// (a prefix) or longer (one period followed by its continuation).
struct SequenceFile {
  std::uint64_t period = 0;
  BitVector bits;

  /// One period; requires the payload to cover it and any extra bits to repeat it.
  PeriodicSequence one_period() const;
};

SequenceFile read_sequence(std::istream& in);
void write_sequence(std::ostream& out, std::uint64_t period, std::span<const std::uint8_t> bits);

/// Values inside the cyclic group of the base are written as exponents; any other
/// nonzero value as "0x<hex>" of its polynomial residue.
void write_spectrum_csv(std::ostream& out, const Spectrum& spec);
Spectrum read_spectrum_csv(std::istream& in);

GeneratorSpec read_generator_spec(std::istream& in);
void write_generator_spec(std::ostream& out, const GeneratorSpec& spec);

std::string read_file(const std::string& path);

}  // namespace lfsrcrt

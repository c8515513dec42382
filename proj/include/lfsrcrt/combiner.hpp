#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lfsrcrt/crt.hpp"
#include "lfsrcrt/sequences.hpp"
#include "lfsrcrt/spectra.hpp"

namespace lfsrcrt {

/// Boolean function in algebraic normal form: XOR over monomials, each monomial an AND
/// of the variables whose bits are set in its mask. The empty mask is the constant 1.
class AnfFunction {
 public:
  /// Repeated masks cancel in pairs. Throws when a mask uses a variable index >= arity.
  AnfFunction(std::size_t arity, std::vector<std::uint32_t> monomials);

  /// Moebius transform of a truth table of length 2^arity (entry i = f at input bits of i).
  static AnfFunction from_truth_table(std::span<const std::uint8_t> table);
  /// Comma-separated hex masks, e.g. "3,6,5" for x1x2 + x2x3 + x3x1.
  static AnfFunction parse(std::size_t arity, std::string_view masks);
  /// Single monomial x1 x2 ... x_r.
  static AnfFunction product(std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  /// Sorted, duplicate-free.
  const std::vector<std::uint32_t>& monomials() const noexcept { return monomials_; }
  bool has_constant() const noexcept;
  std::string to_string() const;  // "x1*x2 + x2*x3 + ..."

  friend bool operator==(const AnfFunction&, const AnfFunction&) = default;

 private:
  std::size_t arity_;
  std::vector<std::uint32_t> monomials_;
};

/// Throws Error on arity mismatch.
std::uint8_t anf_eval(const AnfFunction& f, std::span<const std::uint8_t> inputs);

/// LFSRs combined through an ANF function. Constituent periods must be pairwise coprime.
class GeneratorSpec {
 public:
  GeneratorSpec(std::vector<LfsrConfig> lfsrs, AnfFunction f);

  const std::vector<LfsrConfig>& lfsrs() const noexcept { return lfsrs_; }
  const AnfFunction& function() const noexcept { return f_; }
  const std::vector<std::uint64_t>& periods() const noexcept { return periods_; }
  const ResidueSystem& residues() const noexcept { return system_; }
  /// lcm of the constituent periods.
  std::uint64_t period() const noexcept { return system_.product(); }

  /// Same feedback polynomials, impulse fills.
  GeneratorSpec canonical() const;
  /// Same feedback polynomials and function, the given fills.
  GeneratorSpec with_fills(std::span<const BitVector> fills) const;

 private:
  std::vector<LfsrConfig> lfsrs_;
  AnfFunction f_;
  std::vector<std::uint64_t> periods_;
  ResidueSystem system_;
};

/// Pointwise AND of the constituent streams.
BitVector product_sequence(std::span<const LfsrConfig> lfsrs, std::size_t count);

/// Bit t = f(a^1_t, ..., a^r_t).
BitVector combiner_sequence(const GeneratorSpec& spec, std::size_t count);

/// x modulo the minimal polynomial of the product of the impulse-seeded constituent
/// streams: an element of order lcm(n_i) compatible with every constituent base
/// x mod f_i, so that CRT-predicted spectra agree with direct DFTs.
FieldElt product_basis(std::span<const LfsrConfig> lfsrs);

/// DFT of each impulse-seeded constituent stream relative to x mod its feedback polynomial.
std::vector<Spectrum> constituent_spectra(std::span<const LfsrConfig> lfsrs);

/// Combiner spectrum as a sum over monomials of CRT-predicted product spectra. Variables
/// absent from a monomial contribute the all-ones sequence of their period.
Spectrum predict_combiner_spectrum(const AnfFunction& f, std::span<const Spectrum> constituents,
                                   const FieldElt& target_base);

}  // namespace lfsrcrt

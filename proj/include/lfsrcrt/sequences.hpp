#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lfsrcrt/galois.hpp"

namespace lfsrcrt {

/// One bit per byte, values 0 or 1.
using BitVector = std::vector<std::uint8_t>;

/// Parses ASCII '0'/'1'; whitespace is ignored.
BitVector parse_bits(std::string_view text);
std::string format_bits(std::span<const std::uint8_t> bits);

/// Fibonacci LFSR: feedback f(x) = x^m + sum c_i x^i, state s_0 .. s_{m-1}.
class LfsrConfig {
 public:
  /// Requires a nonzero constant term, init length equal to deg f and a nonzero fill.
  LfsrConfig(BinaryPoly feedback, BitVector init);

  /// Canonical fill 0...01 (s_{m-1} = 1).
  static LfsrConfig impulse(BinaryPoly feedback);

  const BinaryPoly& feedback() const noexcept { return feedback_; }
  const BitVector& init() const noexcept { return init_; }
  int degree() const noexcept { return feedback_.degree(); }

  friend bool operator==(const LfsrConfig&, const LfsrConfig&) = default;

 private:
  BinaryPoly feedback_;
  BitVector init_;
};

/// s_{t+m} = sum_{c_i = 1, i < m} s_{t+i}; output bit t is s_t.
BitVector lfsr_generate(const LfsrConfig& cfg, std::size_t count);

/// Least period of the generated stream (order of x when the feedback is irreducible,
/// state stepping otherwise).
std::uint64_t lfsr_period(const LfsrConfig& cfg);

/// State whose stream equals the impulse-seeded stream shifted left by tau (tau mod period).
BitVector state_at_shift(const LfsrConfig& cfg, std::int64_t tau);

/// Exactly one period of a binary sequence; index t reads bits[t mod n].
class PeriodicSequence {
 public:
  explicit PeriodicSequence(BitVector one_period);

  std::size_t period() const noexcept { return bits_.size(); }
  const BitVector& bits() const noexcept { return bits_; }
  std::uint8_t at(std::int64_t t) const;
  /// `count` bits starting at index 0, wrapping cyclically.
  BitVector unroll(std::size_t count) const;

  friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

 private:
  BitVector bits_;
};

struct MinimalPolynomial {
  BinaryPoly polynomial;  // recurrence form: sum m_i s_{t+i} = 0, monic of degree L
  std::size_t complexity = 0;
};

/// Berlekamp-Massey over GF(2). Throws Error("empty sequence") for empty input.
MinimalPolynomial min_poly_bm(std::span<const std::uint8_t> bits);

/// u_t = s_{t+tau}.
PeriodicSequence cyclic_shift(const PeriodicSequence& seq, std::int64_t tau);

/// Every offset i in [0, n) where the window matches the reference cyclically, ascending.
std::vector<std::size_t> locate_window(const PeriodicSequence& reference,
                                       std::span<const std::uint8_t> window);

/// Absolute trace Tr(y) = sum_{k<m} y^(2^k) of an element of GF(2^m).
std::uint8_t absolute_trace(const FieldElt& y);

/// Tr(beta * alpha^t) for t = 0 .. count-1.
BitVector trace_sequence(const FieldElt& beta, const FieldElt& alpha, std::size_t count);

}  // namespace lfsrcrt

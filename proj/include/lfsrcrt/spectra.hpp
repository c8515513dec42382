#pragma once

// Finite-field DFT of periodic binary sequences:
//   S_k = sum_t s_t * g^(t k),   s_t = sum_k S_k * g^(-t k),
// where g has multiplicative order n equal to the period.

#include <cstdint>
#include <span>
#include <vector>

#include "lfsrcrt/galois.hpp"
#include "lfsrcrt/sequences.hpp"

namespace lfsrcrt {

/// Length-n vector of field elements indexed by frequency, relative to a base of order n.
/// Construction checks the order of the base and the conjugacy rule S_{2k mod n} = S_k^2.
class Spectrum {
 public:
  Spectrum(FieldElt base, std::vector<std::uint64_t> values);

  const FieldPtr& field() const noexcept { return base_.field(); }
  const FieldElt& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return values_.size(); }
  FieldElt operator[](std::size_t k) const { return FieldElt(base_.field(), values_.at(k)); }
  std::span<const std::uint64_t> raw() const noexcept { return values_; }

  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.base_ == b.base_ && a.values_ == b.values_;
  }

 private:
  FieldElt base_;
  std::vector<std::uint64_t> values_;
};

/// Throws Error("base order != period") unless base has exact order seq.period().
Spectrum dft(const PeriodicSequence& seq, const FieldElt& base);

/// s(base^k) = sum_t s_t base^(t k), evaluated by Horner's rule.
FieldElt dft_point(const PeriodicSequence& seq, const FieldElt& base, std::uint64_t k);

/// Throws Error("spectrum not binary-consistent") when a reconstructed value is outside {0, 1}.
PeriodicSequence idft(const Spectrum& spec);

/// Spectrum of the left-shifted sequence u_t = s_{t+tau}: U_k = base^(-k tau) S_k.
Spectrum shift_spectrum(const Spectrum& spec, std::int64_t tau);

struct CyclotomicCosets {
  std::vector<std::vector<std::uint64_t>> cosets;  // each sorted; ordered by leader
  std::vector<std::uint64_t> leaders;              // minimum of each coset
};

/// Orbits of k -> 2k mod n. Throws Error("2 not invertible") for even n.
CyclotomicCosets cyclotomic_cosets(std::uint64_t n);

/// Orbit of k under doubling, in generation order: k, 2k, 4k, ... (mod n).
std::vector<std::uint64_t> harmonics(std::uint64_t k, std::uint64_t n);

/// s_t = sum over coset leaders j of Tr_{m_j}(S_j base^(-j t)), m_j the coset size.
PeriodicSequence trace_reconstruct(const Spectrum& spec);

/// Indices of nonzero values, ascending.
std::vector<std::uint64_t> support(const Spectrum& spec);

/// Default DFT base for a sequence: x in GF(2)[x]/m(x) when the Berlekamp-Massey
/// polynomial m(x) is irreducible and x has order n, else an order-n element of
/// GF(2^ord_n(2)) built on the first irreducible polynomial of that degree.
FieldElt default_base(const PeriodicSequence& seq);

}  // namespace lfsrcrt

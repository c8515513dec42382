#pragma once

// Chinese remainder machinery over pairwise-coprime periods: shift composition,
// spectral support mapping and the exponent (degree) mapping between the
// constituent fields and the field of the combined sequence.

#include <cstdint>
#include <span>
#include <vector>

#include "lfsrcrt/spectra.hpp"

namespace lfsrcrt {

class ResidueSystem {
 public:
  /// Throws Error("moduli not coprime") unless the moduli are positive and pairwise coprime.
  explicit ResidueSystem(std::vector<std::uint64_t> moduli);

  const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
  std::size_t size() const noexcept { return moduli_.size(); }
  /// N = product of the moduli.
  std::uint64_t product() const noexcept { return product_; }

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t product_ = 1;
};

/// Unique x in [0, N) with x = residues[i] mod n_i. Residues may be negative or unreduced.
std::uint64_t crt_solve(std::span<const std::int64_t> residues, const ResidueSystem& sys);

/// delta_i = N / n_i: how often constituent i repeats within one combined period.
std::vector<std::uint64_t> repetition_counts(const ResidueSystem& sys);

/// Left shift of the combined stream produced by shifting constituent i by shifts[i].
std::uint64_t compose_shift(std::span<const std::int64_t> shifts, const ResidueSystem& sys);

/// { crt(k_1..k_r) : k_i in supports[i] }, sorted.
std::vector<std::uint64_t> map_support(std::span<const std::vector<std::uint64_t>> supports,
                                       const ResidueSystem& sys);

/// Exponent d with d = degrees[i] mod n_i.
std::uint64_t map_degree(std::span<const std::int64_t> degrees, const ResidueSystem& sys);

/// (d mod n_1, ..., d mod n_r).
std::vector<std::uint64_t> decompose_degree(std::uint64_t d, const ResidueSystem& sys);

/// Spectrum of the pointwise product of the constituents, computed without the
/// product sequence: at k = crt(k_i) with every A^i_{k_i} = alpha_i^{d_i} nonzero the
/// value is target^crt(d_i), zero elsewhere. Exact when target^(N/n_i * u_i) (with
/// u_i = (N/n_i)^-1 mod n_i) is a conjugate embedding of alpha_i, which holds for x
/// modulo the minimal polynomial of the product sequence.
Spectrum predict_spectrum(std::span<const Spectrum> constituents, const FieldElt& target_base);

}  // namespace lfsrcrt

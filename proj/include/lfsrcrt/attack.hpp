#pragma once

// Initial-state recovery for combiner generators, in the time domain (locate a known
// keystream window in the impulse-seeded reference period and split the offset by CRT)
// and in the frequency domain (invert the DFT shift rule per constituent field).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lfsrcrt/combiner.hpp"

namespace lfsrcrt {

struct AttackOptions {
  /// Upper bound on the combined period that may be generated in full.
  std::uint64_t period_limit = std::uint64_t{1} << 20;
};

struct RecoveryReport {
  std::uint64_t tau = 0;                  // offset of the observed stream in the reference
  std::vector<std::uint64_t> residues;    // tau mod n_i
  std::vector<BitVector> states;          // recovered fill per register
  bool verified = false;                  // regeneration reproduces the observation
  std::size_t ambiguity_count = 1;        // number of candidate offsets
  bool below_uniqueness_threshold = false;
  std::vector<RecoveryReport> alternatives;  // other candidates when ambiguous
};

/// ceil(log2 n) + 4: windows at least this long are expected to match once.
std::size_t uniqueness_threshold(std::uint64_t period);

/// Hard floor ceil(log2 n): shorter windows cannot single out one of n offsets.
std::size_t minimum_window(std::uint64_t period);

/// Throws Error("not a subsequence of reference") when the window never occurs and
/// Error("window below minimum length") for windows shorter than minimum_window.
RecoveryReport time_domain_recover(const GeneratorSpec& spec, std::span<const std::uint8_t> window,
                                   const AttackOptions& options = {});

/// tau with U_k = base^(-k tau) S_k, i.e. the left shift taking the reference to the
/// observed sequence. Throws Error("reference component zero") or Error("index not invertible").
std::uint64_t shift_from_spectra(const FieldElt& observed, const FieldElt& reference, std::uint64_t k,
                                 const FieldElt& base, std::uint64_t n);

using SpectralComponent = std::pair<std::uint64_t, FieldElt>;

/// Per-constituent shifts from observed spectral components of the combined stream
/// (relative to target_base, normally product_basis(spec.lfsrs())). For each
/// component the unique contributing monomial is identified; the observed exponent is
/// split by CRT into constituent exponents and each shift follows from the shift rule.
/// The recovered fills are verified by regenerating one period and comparing its DFT
/// at every observed index.
RecoveryReport spectral_recover(const GeneratorSpec& spec, std::span<const SpectralComponent> observed,
                                const FieldElt& target_base, const AttackOptions& options = {});

}  // namespace lfsrcrt

#include "lfsrcrt/attack.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "lfsrcrt/error.hpp"
#include "lfsrcrt/numtheory.hpp"

namespace lfsrcrt {

std::size_t minimum_window(std::uint64_t period) {
  return period <= 1 ? 1 : static_cast<std::size_t>(std::bit_width(period - 1));
}

std::size_t uniqueness_threshold(std::uint64_t period) { return minimum_window(period) + 4; }

namespace {

void check_limit(const GeneratorSpec& spec, const AttackOptions& options) {
  if (spec.period() > options.period_limit) throw Error("combined period exceeds period limit");
}

RecoveryReport report_for_offset(const GeneratorSpec& spec, std::uint64_t tau,
                                 std::span<const std::uint8_t> window) {
  RecoveryReport r;
  r.tau = tau;
  for (std::size_t i = 0; i < spec.lfsrs().size(); ++i) {
    r.residues.push_back(tau % spec.periods()[i]);
    r.states.push_back(state_at_shift(spec.lfsrs()[i], static_cast<std::int64_t>(r.residues.back())));
  }
  const BitVector regenerated = combiner_sequence(spec.with_fills(r.states), window.size());
  r.verified = std::equal(regenerated.begin(), regenerated.end(), window.begin(), window.end());
  return r;
}

}  // namespace

RecoveryReport time_domain_recover(const GeneratorSpec& spec, std::span<const std::uint8_t> window,
                                   const AttackOptions& options) {
  check_limit(spec, options);
  const std::uint64_t n = spec.period();
  if (window.size() < minimum_window(n)) throw Error("window below minimum length");
  const PeriodicSequence reference(combiner_sequence(spec.canonical(), n));
  const std::vector<std::size_t> hits = locate_window(reference, window);
  if (hits.empty()) throw Error("not a subsequence of reference");

  RecoveryReport head = report_for_offset(spec, hits.front(), window);
  for (std::size_t i = 1; i < hits.size(); ++i) head.alternatives.push_back(report_for_offset(spec, hits[i], window));
  head.ambiguity_count = hits.size();
  head.below_uniqueness_threshold = window.size() < uniqueness_threshold(n);
  for (auto& alt : head.alternatives) {
    alt.ambiguity_count = hits.size();
    alt.below_uniqueness_threshold = head.below_uniqueness_threshold;
  }
  return head;
}

std::uint64_t shift_from_spectra(const FieldElt& observed, const FieldElt& reference, std::uint64_t k,
                                 const FieldElt& base, std::uint64_t n) {
  if (reference.is_zero()) throw Error("reference component zero");
  const std::uint64_t k_inv = mod_inverse(static_cast<std::int64_t>(k % n), n);
  if (observed.is_zero()) throw Error("observed component zero");
  // observed / reference = base^(-k tau)
  const std::uint64_t e = dlog(observed * reference.inverse(), base, n);
  return mod_normalize(-static_cast<std::int64_t>(mul_mod(e, k_inv, n)), n);
}

RecoveryReport spectral_recover(const GeneratorSpec& spec, std::span<const SpectralComponent> observed,
                                const FieldElt& target_base, const AttackOptions& options) {
  check_limit(spec, options);
  const std::size_t r = spec.lfsrs().size();
  const std::uint64_t n = spec.period();
  const ResidueSystem& sys = spec.residues();
  if (!has_order(target_base, n)) throw Error("base order != period");
  const std::vector<Spectrum> refs = constituent_spectra(spec.lfsrs());

  std::vector<std::optional<std::uint64_t>> shifts(r);
  bool saw_invertible_gap = false;
  for (const auto& [k_raw, value] : observed) {
    const std::uint64_t k = k_raw % n;
    if (value.is_zero()) continue;
    // Monomial whose CRT-predicted spectrum is nonzero at k.
    std::optional<std::uint32_t> active;
    for (std::uint32_t mask : spec.function().monomials()) {
      bool nonzero = true;
      for (std::size_t i = 0; i < r && nonzero; ++i) {
        const std::uint64_t ki = k % spec.periods()[i];
        nonzero = ((mask >> i) & 1U) ? !refs[i][ki].is_zero() : ki == 0;
      }
      if (nonzero) {
        if (active) throw Error("component has several contributing monomials");
        active = mask;
      }
    }
    if (!active) throw Error("component not predicted by any monomial");

    const std::uint64_t d = dlog(value, target_base, n);
    const std::vector<std::uint64_t> parts = decompose_degree(d, sys);
    for (std::size_t i = 0; i < r; ++i) {
      if (!((*active >> i) & 1U) || shifts[i]) continue;
      const std::uint64_t ni = spec.periods()[i];
      const std::uint64_t ki = k % ni;
      if (std::gcd(ki, ni) != 1) {
        saw_invertible_gap = true;
        continue;
      }
      const Spectrum& ref = refs[i];
      const FieldElt obs_i = ref.base().pow(static_cast<std::int64_t>(parts[i]));
      shifts[i] = shift_from_spectra(obs_i, ref[ki], ki, ref.base(), ni);
    }
  }

  RecoveryReport report;
  std::vector<std::int64_t> residues;
  for (std::size_t i = 0; i < r; ++i) {
    if (!shifts[i]) {
      throw Error(saw_invertible_gap ? "index not invertible" : "no usable component for a register");
    }
    report.residues.push_back(*shifts[i]);
    residues.push_back(static_cast<std::int64_t>(*shifts[i]));
    report.states.push_back(state_at_shift(spec.lfsrs()[i], residues.back()));
  }
  report.tau = crt_solve(residues, sys);

  const PeriodicSequence regenerated(combiner_sequence(spec.with_fills(report.states), n));
  report.verified = true;
  for (const auto& [k, value] : observed) {
    if (!(dft_point(regenerated, target_base, k % n) == value)) {
      report.verified = false;
      break;
    }
  }
  return report;
}

}  // namespace lfsrcrt

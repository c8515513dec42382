#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <random>

#include "helpers.hpp"
#include "lfsrcrt/attack.hpp"
#include "lfsrcrt/crt.hpp"
#include "lfsrcrt/error.hpp"

using namespace lfsrcrt;
using namespace testutil;

namespace {

GeneratorSpec majority() {
  return GeneratorSpec(registers({"7", "B", "25"}), AnfFunction::parse(3, fixtures::kMajorityMasks));
}

std::vector<std::string> states_text(const RecoveryReport& r) {
  std::vector<std::string> out;
  for (const auto& s : r.states) out.push_back(format_bits(s));
  return out;
}

// Observed components of the combined stream produced by shifting each register.
std::vector<SpectralComponent> observe(const GeneratorSpec& spec, std::span<const std::int64_t> shifts,
                                       const FieldElt& target) {
  std::vector<BitVector> fills;
  for (std::size_t i = 0; i < shifts.size(); ++i) fills.push_back(state_at_shift(spec.lfsrs()[i], shifts[i]));
  const PeriodicSequence z(combiner_sequence(spec.with_fills(fills), spec.period()));
  const auto spec_z = dft(z, target);
  std::vector<SpectralComponent> out;
  for (auto k : support(spec_z)) out.emplace_back(k, spec_z[k]);
  return out;
}

}  // namespace

TEST_CASE("window thresholds") {
  CHECK(minimum_window(651) == 10);
  CHECK(uniqueness_threshold(651) == 14);
  CHECK(minimum_window(21) == 5);
  CHECK(minimum_window(2) == 1);
}

TEST_CASE("time-domain recovery of the published window") {
  const auto r = time_domain_recover(majority(), parse_bits(fixtures::kAttackWindow));
  CHECK(r.tau == fixtures::kAttackOffset);
  CHECK(r.residues == std::vector<std::uint64_t>{2, 2, 12});
  CHECK(states_text(r) == std::vector<std::string>{"10", "101", "01111"});
  CHECK(r.verified);
  CHECK(r.ambiguity_count == 1);
  CHECK(r.below_uniqueness_threshold);
}

TEST_CASE("time-domain recovery edge cases") {
  const auto g = majority();
  CHECK_THROWS_WITH_AS(time_domain_recover(g, parse_bits("101")), "window below minimum length", Error);
  const auto r0 = time_domain_recover(g, parse_bits(std::string_view(fixtures::kCombinerPrefix).substr(0, 12)));
  CHECK(r0.tau == 0);
  CHECK(states_text(r0) == std::vector<std::string>{"01", "001", "00001"});

  // 20 zeros never occur in one period of the majority stream.
  CHECK_THROWS_WITH_AS(time_domain_recover(g, BitVector(20, 0)), "not a subsequence of reference", Error);

  AttackOptions tight;
  tight.period_limit = 100;
  CHECK_THROWS_AS(time_domain_recover(g, parse_bits(fixtures::kAttackWindow), tight), Error);
}

TEST_CASE("ambiguous windows report every candidate") {
  const auto g = GeneratorSpec(registers({"7", "B"}), AnfFunction::product(2));
  const auto r = time_domain_recover(g, parse_bits("00101"));
  CHECK(r.ambiguity_count == 2);
  CHECK(r.tau == 0);
  CHECK(r.alternatives.front().tau == 9);
  CHECK(r.alternatives.size() + 1 == r.ambiguity_count);
  CHECK(r.verified);
}

TEST_CASE("time-domain recovery on random fills") {
  const auto g = majority();
  const auto reference = PeriodicSequence(combiner_sequence(g, 651));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto fills = random_fills(rng, g.lfsrs());
    const auto moved = g.with_fills(fills);
    const auto stream = combiner_sequence(moved, 40);
    const auto r = time_domain_recover(g, stream);
    REQUIRE(r.verified);
    REQUIRE(r.ambiguity_count == 1);
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(r.states[i] == fills[i]);
    REQUIRE(cyclic_shift(reference, static_cast<std::int64_t>(r.tau)).unroll(40) == stream);
  }
}

TEST_CASE("shift inversion in the spectral domain") {
  const FieldPtr f = make_field(BinaryPoly::parse("B"));
  const FieldElt beta = f->x();
  const auto ref = dft(periodic(fixtures::kSeqB), beta);
  // b shifted left by 1 has U_3 = beta^-3 * beta^4 = beta.
  CHECK(shift_from_spectra(beta, ref[3], 3, beta, 7) == 1);
  CHECK(shift_from_spectra(f->one(), ref[3], 3, beta, 7) == 6);

  for (std::int64_t tau = 0; tau < 7; ++tau) {
    const auto moved = dft(cyclic_shift(periodic(fixtures::kSeqB), tau), beta);
    for (std::uint64_t k : support(ref))
      REQUIRE(shift_from_spectra(moved[k], ref[k], k, beta, 7) == static_cast<std::uint64_t>(tau));
  }
  CHECK_THROWS_WITH_AS(shift_from_spectra(beta, ref[1], 1, beta, 7), "reference component zero", Error);
  const FieldPtr f6 = make_field(BinaryPoly::parse(fixtures::kProductMinPoly21));
  CHECK_THROWS_WITH_AS(shift_from_spectra(f6->x(), f6->x(), 3, f6->x(), 21), "index not invertible", Error);
}

TEST_CASE("spectral recovery") {
  const auto g = majority();
  const auto target = product_basis(g.lfsrs());

  SUBCASE("shifts by the published residues give the published states") {
    const std::vector<std::int64_t> shifts{2, 2, 12};
    const auto r = spectral_recover(g, observe(g, shifts, target), target);
    CHECK(r.verified);
    CHECK(r.tau == 632);
    CHECK(r.residues == std::vector<std::uint64_t>{2, 2, 12});
    CHECK(states_text(r) == std::vector<std::string>{"10", "101", "01111"});
  }

  SUBCASE("the quoted shift counts are recovered and verified") {
    const std::vector<std::int64_t> shifts(fixtures::kQuotedShifts.begin(), fixtures::kQuotedShifts.end());
    const auto r = spectral_recover(g, observe(g, shifts, target), target);
    CHECK(r.verified);
    CHECK(r.residues == std::vector<std::uint64_t>{1, 5, 19});
    CHECK(r.tau == compose_shift(shifts, g.residues()));
  }

  SUBCASE("agrees with the time-domain attack on random fills") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
      const auto fills = random_fills(rng, g.lfsrs());
      const auto moved = g.with_fills(fills);
      const PeriodicSequence z(combiner_sequence(moved, 651));
      const auto sz = dft(z, target);
      std::vector<SpectralComponent> obs;
      for (auto k : support(sz)) obs.emplace_back(k, sz[k]);
      const auto spectral = spectral_recover(g, obs, target);
      const auto timed = time_domain_recover(g, z.unroll(30));
      REQUIRE(spectral.verified);
      REQUIRE(spectral.tau == timed.tau);
      REQUIRE(spectral.states == timed.states);
    }
  }

  SUBCASE("a tampered component fails verification") {
    auto obs = observe(g, std::vector<std::int64_t>{1, 1, 1}, target);
    obs.back().second = obs.back().second * target;
    bool verified = true;
    try {
      verified = spectral_recover(g, obs, target).verified;
    } catch (const Error&) {
      verified = false;
    }
    CHECK_FALSE(verified);
  }
}

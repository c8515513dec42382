// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "helpers.hpp"
#include "lfsrcrt/attack.hpp"
#include "lfsrcrt/bench.hpp"
#include "lfsrcrt/crt.hpp"
#include "lfsrcrt/error.hpp"

using namespace lfsrcrt;
using namespace testutil;

namespace {

using Clock = std::chrono::steady_clock;

// Wall-clock budgets in seconds; 0 means untimed.
constexpr double kExampleSpectraLimit = 1.0;
constexpr double kTable2Limit = 30.0;
constexpr double kOracleLimit = 60.0;
constexpr double kAttackLimit = 5.0;
constexpr int kOracleFillTrials = 20;
constexpr int kRoundTripSamples = 50;
constexpr int kBenchTrials = 10;

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void run(const char* id, const char* title, double limit, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit > 0) c.expect(secs < limit, "over time budget");
  if (!c.ok) ++failures;
  std::printf("[%s] %s %s (%.3fs%s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, secs,
              limit > 0 ? (", limit " + std::to_string(static_cast<int>(limit)) + "s").c_str() : "",
              c.detail.empty() ? "" : ": ", c.detail.c_str());
  std::fflush(stdout);
}

FieldElt x_mod(std::string_view hex) { return make_field(BinaryPoly::parse(hex))->x(); }

bool blahut_holds(const PeriodicSequence& s, const FieldElt& base) {
  return support(dft(s, base)).size() == min_poly_bm(s.unroll(2 * s.period())).complexity;
}

GeneratorSpec majority() {
  return GeneratorSpec(registers({"7", "B", "25"}), AnfFunction::parse(3, fixtures::kMajorityMasks));
}

// Register sets for the oracle comparison: pairs and the triple from degrees {2,3,5}, and (3,4).
std::vector<std::vector<LfsrConfig>> oracle_sets() {
  return {registers({"7", "B"}), registers({"7", "25"}), registers({"B", "25"}), registers({"7", "B", "25"}),
          registers({"B", "13"})};
}

}  // namespace

int main() {
  std::mt19937_64 rng(20261018);
  std::vector<std::pair<PeriodicSequence, FieldElt>> seen;  // sequences checked for the Blahut criterion

  run("AC1", "single-register and product spectra", kExampleSpectraLimit, [&](Check& c) {
    const auto a = periodic(fixtures::kSeqA);
    const auto b = periodic(fixtures::kSeqB);
    const auto p = periodic(fixtures::kProduct21);
    const auto ga = x_mod("7"), gb = x_mod("B"), gp = x_mod(fixtures::kProductMinPoly21);
    c.expect(exponents_of(dft(a, ga)) == listing(fixtures::kSpectrumA), "DFT(011)");
    c.expect(exponents_of(dft(b, gb)) == listing(fixtures::kSpectrumB), "DFT(0010111)");
    c.expect(exponents_of(dft(p, gp)) == listing(fixtures::kSpectrumProduct21), "DFT of the period-21 product");
    seen.insert(seen.end(), {{a, ga}, {b, gb}, {p, gp}});
  });

  run("AC2", "period-651 product spectrum (30 entries)", kTable2Limit, [&](Check& c) {
    const auto regs = registers({"7", "B", "25"});
    const PeriodicSequence s(product_sequence(regs, 651));
    const auto g = x_mod(fixtures::kProductMinPoly651);
    const auto got = exponents_of(dft(s, g));
    c.expect(got.size() == 30, "support size " + std::to_string(got.size()));
    c.expect(got == listing(fixtures::kSpectrumProduct651), "exponent mismatch");
    seen.emplace_back(s, g);
  });

  run("AC3", "CRT prediction equals direct DFT", kOracleLimit, [&](Check& c) {
    int compared = 0;
    for (const auto& regs : oracle_sets()) {
      const auto basis = product_basis(regs);
      const ResidueSystem sys(GeneratorSpec(regs, AnfFunction::product(regs.size())).periods());
      for (int trial = 0; trial < kOracleFillTrials; ++trial) {
        std::vector<LfsrConfig> filled;
        for (const auto& r : regs) filled.emplace_back(r.feedback(), random_fill(rng, r.degree()));
        const PeriodicSequence s(product_sequence(filled, sys.product()));
        const auto direct = dft(s, basis);
        std::vector<Spectrum> parts;
        for (const auto& r : filled) {
          const PeriodicSequence own(lfsr_generate(r, lfsr_period(r)));
          parts.push_back(dft(own, make_field(r.feedback())->x()));
        }
        const auto predicted = predict_spectrum(parts, basis);
        c.expect(predicted == direct, "mismatch for a " + std::to_string(regs.size()) + "-register set");
        if (trial == 0) seen.emplace_back(s, basis);
        ++compared;
      }
    }
    c.detail = c.ok ? std::to_string(compared) + " comparisons" : c.detail;
  });

  run("AC4", "shift composition over all 21 shift pairs", 0, [&](Check& c) {
    const auto regs = registers({"7", "B"});
    const ResidueSystem sys({3, 7});
    for (const auto& f : {AnfFunction::product(2), random_anf(rng, 2)}) {
      const GeneratorSpec spec(regs, f);
      const PeriodicSequence ref(combiner_sequence(spec, 21));
      for (std::int64_t k1 = 0; k1 < 3; ++k1)
        for (std::int64_t k2 = 0; k2 < 7; ++k2) {
          const std::vector<BitVector> fills{state_at_shift(regs[0], k1), state_at_shift(regs[1], k2)};
          const std::vector<std::int64_t> shifts{k1, k2};
          const PeriodicSequence moved(combiner_sequence(spec.with_fills(fills), 21));
          c.expect(moved == cyclic_shift(ref, static_cast<std::int64_t>(compose_shift(shifts, sys))),
                   "f = " + f.to_string() + ", shifts " + std::to_string(k1) + "," + std::to_string(k2));
          seen.emplace_back(moved, x_mod(fixtures::kProductMinPoly21));
        }
    }
  });

  run("AC5", "spectral weight equals linear complexity", 0, [&](Check& c) {
    for (const auto& [s, base] : seen) c.expect(blahut_holds(s, base), "sequence of period " + std::to_string(s.period()));
    const PeriodicSequence z(combiner_sequence(majority(), 651));
    const auto target = product_basis(majority().lfsrs());
    const auto lc = min_poly_bm(z.unroll(1302)).complexity;
    const auto weight = support(dft(z, target)).size();
    c.expect(lc == 31, "combiner complexity " + std::to_string(lc));
    c.expect(weight == 31, "combiner spectral weight " + std::to_string(weight));
    if (c.ok) c.detail = std::to_string(seen.size() + 1) + " sequences";
  });

  run("AC6", "known-window state recovery at offset 632", kAttackLimit, [&](Check& c) {
    const auto g = majority();
    const auto r = time_domain_recover(g, parse_bits(fixtures::kAttackWindow));
    c.expect(r.tau == 632, "tau " + std::to_string(r.tau));
    c.expect(r.residues == std::vector<std::uint64_t>{2, 2, 12}, "residues");
    std::vector<std::string> states;
    for (const auto& s : r.states) states.push_back(format_bits(s));
    c.expect(states == std::vector<std::string>{"10", "101", "01111"}, "states");
    c.expect(r.verified, "not verified");
    const PeriodicSequence full(combiner_sequence(g.with_fills(r.states), 651));
    c.expect(full == cyclic_shift(PeriodicSequence(combiner_sequence(g, 651)), 632), "regenerated keystream differs");
  });

  run("AC7", "shift inversion, exhaustive for period 7", 0, [&](Check& c) {
    const auto beta = x_mod("B");
    const auto b = periodic(fixtures::kSeqB);
    const auto ref = dft(b, beta);
    int cases = 0;
    for (std::int64_t tau = 0; tau < 7; ++tau) {
      const auto moved = dft(cyclic_shift(b, tau), beta);
      for (std::uint64_t k = 1; k < 7; ++k) {
        if (ref[k].is_zero()) continue;
        c.expect(shift_from_spectra(moved[k], ref[k], k, beta, 7) == static_cast<std::uint64_t>(tau),
                 "tau " + std::to_string(tau) + " at k " + std::to_string(k));
        ++cases;
      }
    }
    c.expect(cases == 21, "expected 21 invertible cases");
  });

  run("AC8", "conjugacy and round trips on random sequences", 0, [&](Check& c) {
    constexpr std::uint64_t periods[] = {3, 5, 7, 9, 15, 17, 21, 31, 63};
    for (int i = 0; i < kRoundTripSamples; ++i) {
      const std::uint64_t n = periods[rng() % std::size(periods)];
      BitVector bits(n);
      for (auto& v : bits) v = static_cast<std::uint8_t>(rng() & 1);
      const PeriodicSequence s(bits);
      const auto spec = dft(s, default_base(s));
      for (std::uint64_t k = 0; k < n; ++k) c.expect(spec[(2 * k) % n] == spec[k].pow(2), "conjugacy");
      c.expect(idft(spec) == s, "inverse DFT");
      c.expect(trace_reconstruct(spec) == s, "trace form");
    }
  });

  run("AC9", "CRT route faster than direct DFT for degrees 2,3,5", 0, [&](Check& c) {
    const std::vector<int> degrees{2, 3, 5};
    const auto r = run_bench(degrees, kBenchTrials);
    c.expect(r.spectra_equal, "spectra differ");
    c.expect(r.ratio() > 1.0, "ratio " + std::to_string(r.ratio()));
    char buf[96];
    std::snprintf(buf, sizeof buf, "direct %.2e s, crt %.2e s, ratio %.1f", r.direct_seconds, r.crt_seconds, r.ratio());
    if (c.ok) c.detail = buf;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

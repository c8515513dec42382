// Command-line front end: generation, analysis, transforms, CRT prediction,
// state recovery, reproduction of the reference data and the cost benchmark.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "lfsrcrt/attack.hpp"
#include "lfsrcrt/bench.hpp"
#include "lfsrcrt/error.hpp"
#include "lfsrcrt/io.hpp"
#include "lfsrcrt/reproduce.hpp"

namespace {

using namespace lfsrcrt;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitInput = 3;

GeneratorSpec load_spec(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_generator_spec(in);
}

SequenceFile load_sequence(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_sequence(in);
}

// Writes to the named file, or to stdout for "" / "-".
template <typename F>
void emit(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write(out);
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join_states(const std::vector<BitVector>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_bits(v[i]);
  return s;
}

// One period of the file's sequence: taken directly when the payload covers it,
// otherwise extended from a prefix by the Berlekamp-Massey recurrence.
PeriodicSequence establish_period(const SequenceFile& file) {
  if (file.bits.size() >= file.period) return file.one_period();
  if (file.bits.empty()) throw Error("empty payload");
  const MinimalPolynomial mp = min_poly_bm(file.bits);
  if (2 * mp.complexity > file.bits.size()) {
    throw Error("insufficient bits: linear complexity " + std::to_string(mp.complexity) + " needs " +
                std::to_string(2 * mp.complexity) + " bits, got " + std::to_string(file.bits.size()));
  }
  const std::size_t L = mp.complexity;
  BitVector bits = file.bits;
  while (bits.size() < 2 * file.period) {
    const std::size_t t = bits.size() - L;
    std::uint8_t v = 0;
    for (std::size_t i = 0; i < L; ++i) v ^= static_cast<std::uint8_t>(mp.polynomial.coeff(static_cast<int>(i)) & bits[t + i]);
    bits.push_back(v);
  }
  SequenceFile extended{file.period, std::move(bits)};
  return extended.one_period();
}

FieldElt base_for(const PeriodicSequence& seq, const std::string& modulus) {
  if (modulus.empty()) return default_base(seq);
  const FieldPtr f = make_field(BinaryPoly::parse(modulus));
  return order_n_element(f, seq.period());
}

void print_report(const RecoveryReport& r) {
  std::cout << "tau=" << r.tau << '\n'
            << "residues=" << join(r.residues) << '\n'
            << "states=" << join_states(r.states) << '\n'
            << "verified=" << (r.verified ? "true" : "false") << '\n'
            << "ambiguity=" << r.ambiguity_count << '\n';
  if (r.below_uniqueness_threshold) std::cout << "warning=window below uniqueness threshold\n";
  for (const auto& alt : r.alternatives) {
    std::cout << "candidate=tau:" << alt.tau << " residues:" << join(alt.residues)
              << " states:" << join_states(alt.states) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CRT-based structural analysis of LFSR combiner generators"};
  app.require_subcommand(1);
  std::uint64_t period_limit = std::uint64_t{1} << 20;
  app.add_option("--period-limit", period_limit, "Largest period generated in full")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate keystream from a generator spec");
  std::string gen_spec;
  std::optional<std::uint64_t> gen_count;
  std::string gen_out;
  gen->add_option("spec", gen_spec, "Generator spec file")->required();
  gen->add_option("-n,--count", gen_count, "Number of bits (default: one period)");
  gen->add_option("-o,--output", gen_out, "Output sequence file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Minimal polynomial, linear complexity and DFT support");
  std::string an_file;
  std::string an_spectrum;
  std::string an_modulus;
  analyze->add_option("sequence", an_file, "Sequence file")->required();
  analyze->add_option("--spectrum-out", an_spectrum, "Write the spectrum CSV here");
  analyze->add_option("--modulus", an_modulus, "Field modulus (hex) instead of the default base");

  // dft
  auto* dftc = app.add_subcommand("dft", "DFT of a periodic sequence as spectrum CSV");
  std::string dft_file;
  std::string dft_modulus;
  std::string dft_out;
  dftc->add_option("sequence", dft_file, "Sequence file")->required();
  dftc->add_option("--modulus", dft_modulus, "Field modulus (hex) instead of the default base");
  dftc->add_option("-o,--output", dft_out, "Output CSV (default stdout)");

  // crt
  auto* crt = app.add_subcommand("crt", "Solve x = r_i mod m_i from r/m tokens");
  std::vector<std::string> crt_tokens;
  crt->add_option("residues", crt_tokens, "Tokens r/m, e.g. 1/3 3/7 15/31")->required();

  // predict
  auto* predict = app.add_subcommand("predict", "CRT-predicted spectrum of a generator's canonical output");
  std::string pr_spec;
  std::string pr_out;
  bool pr_verify = false;
  predict->add_option("spec", pr_spec, "Generator spec file")->required();
  predict->add_option("-o,--output", pr_out, "Output CSV (default stdout)");
  predict->add_flag("--verify", pr_verify, "Compare with the direct DFT (exit 2 on mismatch)");

  // attack
  auto* attack = app.add_subcommand("attack", "Recover initial states from keystream or spectral components");
  std::string at_spec;
  std::string at_bits;
  std::string at_seq;
  std::string at_spectrum;
  attack->add_option("spec", at_spec, "Generator spec file (feedback polynomials and function)")->required();
  auto* bits_opt = attack->add_option("--bits", at_bits, "Known keystream bits");
  auto* seq_opt = attack->add_option("--seq", at_seq, "Sequence file holding the known keystream bits");
  auto* spec_opt = attack->add_option("--spectrum", at_spectrum, "Spectrum CSV of observed components");
  bits_opt->excludes(seq_opt)->excludes(spec_opt);
  seq_opt->excludes(spec_opt);

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "Check the built-in reference data");
  std::string repro_id;
  repro->add_option("target", repro_id, "example1-shifts, example2-spectra, table2, table3, table6, attack632 or all")
      ->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Direct big-field DFT versus constituent DFTs + CRT");
  std::vector<int> bench_degrees = {2, 3, 5};
  int bench_trials = 10;
  bench->add_option("--degrees", bench_degrees, "Register degrees (pairwise coprime)")->delimiter(',')
      ->capture_default_str();
  bench->add_option("--trials", bench_trials, "Timing repetitions")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const AttackOptions options{period_limit};
  try {
    if (*gen) {
      const GeneratorSpec spec = load_spec(gen_spec);
      const std::uint64_t n = spec.period();
      const std::uint64_t count = gen_count.value_or(n);
      if (count > period_limit && !gen_count) throw Error("combined period exceeds period limit");
      const BitVector bits = combiner_sequence(spec, count);
      emit(gen_out, [&](std::ostream& os) { write_sequence(os, n, bits); });
      return kExitOk;
    }

    if (*analyze) {
      const PeriodicSequence seq = establish_period(load_sequence(an_file));
      const MinimalPolynomial mp = min_poly_bm(seq.unroll(2 * seq.period()));
      std::cout << "period=" << seq.period() << '\n'
                << "linear_complexity=" << mp.complexity << '\n'
                << "minimal_polynomial=" << mp.polynomial.to_string() << '\n'
                << "minimal_polynomial_hex=" << mp.polynomial.to_hex() << '\n';
      const FieldElt base = base_for(seq, an_modulus);
      const Spectrum spec = dft(seq, base);
      const auto supp = support(spec);
      std::cout << "modulus=" << base.field()->modulus().to_hex() << '\n'
                << "base=" << base.poly().to_hex() << '\n'
                << "support_size=" << supp.size() << '\n'
                << "support=" << join(supp) << '\n'
                << "blahut=" << (supp.size() == mp.complexity ? "ok" : "MISMATCH") << '\n';
      if (!an_spectrum.empty()) emit(an_spectrum, [&](std::ostream& os) { write_spectrum_csv(os, spec); });
      return supp.size() == mp.complexity ? kExitOk : kExitMismatch;
    }

    if (*dftc) {
      const PeriodicSequence seq = establish_period(load_sequence(dft_file));
      const Spectrum spec = dft(seq, base_for(seq, dft_modulus));
      emit(dft_out, [&](std::ostream& os) { write_spectrum_csv(os, spec); });
      return kExitOk;
    }

    if (*crt) {
      std::vector<std::int64_t> residues;
      std::vector<std::uint64_t> moduli;
      for (const auto& tok : crt_tokens) {
        const auto slash = tok.find('/');
        if (slash == std::string::npos) throw ParseError("expected r/m, got '" + tok + "'");
        try {
          residues.push_back(std::stoll(tok.substr(0, slash)));
          moduli.push_back(std::stoull(tok.substr(slash + 1)));
        } catch (const std::logic_error&) {
          throw ParseError("expected r/m, got '" + tok + "'");
        }
      }
      const ResidueSystem sys(moduli);
      std::cout << "x=" << crt_solve(residues, sys) << '\n' << "modulus=" << sys.product() << '\n';
      return kExitOk;
    }

    if (*predict) {
      const GeneratorSpec spec = load_spec(pr_spec);
      if (spec.period() > period_limit) throw Error("combined period exceeds period limit");
      if (spec.function().has_constant()) std::cerr << "note: function has a constant term\n";
      const FieldElt gamma = product_basis(spec.lfsrs());
      const Spectrum predicted = predict_combiner_spectrum(spec.function(), constituent_spectra(spec.lfsrs()), gamma);
      emit(pr_out, [&](std::ostream& os) { write_spectrum_csv(os, predicted); });
      if (pr_verify) {
        const PeriodicSequence z(combiner_sequence(spec.canonical(), spec.period()));
        const bool same = dft(z, gamma) == predicted;
        std::cerr << "verify=" << (same ? "ok" : "MISMATCH") << '\n';
        if (!same) return kExitMismatch;
      }
      return kExitOk;
    }

    if (*attack) {
      const GeneratorSpec spec = load_spec(at_spec);
      RecoveryReport report;
      if (!at_spectrum.empty()) {
        std::istringstream in(read_file(at_spectrum));
        const Spectrum observed = read_spectrum_csv(in);
        std::vector<SpectralComponent> comps;
        for (auto k : support(observed)) comps.emplace_back(k, observed[k]);
        report = spectral_recover(spec, comps, observed.base(), options);
      } else {
        BitVector window;
        if (!at_bits.empty()) {
          window = parse_bits(at_bits);
        } else if (!at_seq.empty()) {
          window = load_sequence(at_seq).bits;
        } else {
          throw ParseError("one of --bits, --seq or --spectrum is required");
        }
        report = time_domain_recover(spec, window, options);
      }
      print_report(report);
      return report.verified ? kExitOk : kExitMismatch;
    }

    if (*repro) {
      std::vector<std::string> ids;
      if (repro_id == "all") {
        ids = repro_targets();
      } else {
        ids.push_back(repro_id);
      }
      bool all_pass = true;
      for (const auto& id : ids) {
        const ReproOutcome r = reproduce(id);
        for (const auto& line : r.lines) std::cout << "  " << line << '\n';
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << '\n';
        all_pass &= r.pass;
      }
      return all_pass ? kExitOk : kExitMismatch;
    }

    if (*bench) {
      const BenchResult r = run_bench(bench_degrees, bench_trials);
      std::cout << "registers:";
      for (const auto& f : r.feedback) std::cout << ' ' << f;
      std::cout << "\nperiod: " << r.period << "\nproduct field: GF(2^" << r.field_degree << ")"
                << "\nnonzero components: " << r.support_size
                << "\ncorrectness gate: spectra identical\n"
                << std::fixed << std::setprecision(6) << "direct DFT (median of " << bench_trials
                << "): " << r.direct_seconds << " s\n"
                << "constituent DFTs + CRT (median): " << r.crt_seconds << " s\n"
                << std::setprecision(1) << "ratio: " << r.ratio() << "x\n"
                << "cost model (XOR operations, for reference only):\n"
                << "  direct, per component:  O((m log m log log m)(log k + deg s(x)))\n"
                << "  CRT step, all components: O(LS(s) * len(n)^2) after constituent DFTs\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

#include "lfsrcrt/bench.hpp"

#include <algorithm>
#include <chrono>

#include "lfsrcrt/combiner.hpp"
#include "lfsrcrt/error.hpp"

namespace lfsrcrt {

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

BenchResult run_bench(std::span<const int> degrees, int trials) {
  if (degrees.size() < 2) throw Error("bench needs at least two registers");
  if (trials < 1) throw Error("bench needs at least one trial");
  std::vector<LfsrConfig> lfsrs;
  BenchResult result;
  for (int d : degrees) {
    lfsrs.push_back(LfsrConfig::impulse(find_primitive(d)));
    result.feedback.push_back(lfsrs.back().feedback().to_hex());
  }
  const GeneratorSpec spec(lfsrs, AnfFunction::product(lfsrs.size()));
  result.period = spec.period();
  const FieldElt target = product_basis(lfsrs);
  result.field_degree = target.field()->degree();
  const PeriodicSequence seq(product_sequence(lfsrs, result.period));

  const Spectrum direct = dft(seq, target);
  const Spectrum predicted = predict_spectrum(constituent_spectra(lfsrs), target);
  result.spectra_equal = direct == predicted;
  if (!result.spectra_equal) throw Error("CRT prediction differs from direct DFT");
  result.support_size = support(direct).size();

  std::vector<double> direct_times;
  std::vector<double> crt_times;
  for (int i = 0; i < trials; ++i) {
    direct_times.push_back(seconds([&] { (void)dft(seq, target); }));
    crt_times.push_back(seconds([&] { (void)predict_spectrum(constituent_spectra(lfsrs), target); }));
  }
  result.direct_seconds = median(direct_times);
  result.crt_seconds = median(crt_times);
  return result;
}

}  // namespace lfsrcrt

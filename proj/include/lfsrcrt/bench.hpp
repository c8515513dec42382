#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lfsrcrt {

struct BenchResult {
  std::vector<std::string> feedback;  // hex
  std::uint64_t period = 0;
  int field_degree = 0;
  std::size_t support_size = 0;
  bool spectra_equal = false;
  double direct_seconds = 0;  // median direct DFT of the product sequence
  double crt_seconds = 0;     // median constituent DFTs + CRT prediction
  double ratio() const { return crt_seconds > 0 ? direct_seconds / crt_seconds : 0; }
};

/// Compares the direct DFT of the product of maximal-length registers of the given
/// degrees with the CRT route. Timings are taken only after both routes are checked
/// to produce identical spectra; throws Error when they differ, when fewer than two
/// degrees are given or when the periods are not coprime.
BenchResult run_bench(std::span<const int> degrees, int trials);

}  // namespace lfsrcrt

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lfsrcrt/combiner.hpp"
#include "lfsrcrt/fixtures.hpp"
#include "lfsrcrt/galois.hpp"
#include "lfsrcrt/sequences.hpp"
#include "lfsrcrt/spectra.hpp"

namespace testutil {

using namespace lfsrcrt;

inline LfsrConfig impulse(std::string_view hex) { return LfsrConfig::impulse(BinaryPoly::parse(hex)); }

inline std::vector<LfsrConfig> registers(std::initializer_list<std::string_view> hexes) {
  std::vector<LfsrConfig> out;
  for (auto h : hexes) out.push_back(impulse(h));
  return out;
}

inline PeriodicSequence periodic(std::string_view bits) { return PeriodicSequence(parse_bits(bits)); }

// Sparse (k, exponent) listing of a spectrum relative to its base.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> exponents_of(const Spectrum& s) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s.raw()[k] == 0) continue;
    out.emplace_back(static_cast<std::uint32_t>(k),
                     static_cast<std::uint32_t>(dlog(s[k], s.base(), s.size())));
  }
  return out;
}

template <std::size_t N>
std::vector<std::pair<std::uint32_t, std::uint32_t>> listing(const std::array<fixtures::IndexExponent, N>& a) {
  return {a.begin(), a.end()};
}

inline BitVector random_fill(std::mt19937_64& rng, int degree) {
  BitVector b(static_cast<std::size_t>(degree));
  do {
    for (auto& bit : b) bit = static_cast<std::uint8_t>(rng() & 1);
  } while (std::all_of(b.begin(), b.end(), [](auto v) { return v == 0; }));
  return b;
}

inline std::vector<BitVector> random_fills(std::mt19937_64& rng, std::span<const LfsrConfig> regs) {
  std::vector<BitVector> out;
  for (const auto& r : regs) out.push_back(random_fill(rng, r.degree()));
  return out;
}

inline AnfFunction random_anf(std::mt19937_64& rng, std::size_t arity) {
  std::vector<std::uint32_t> masks;
  const std::uint32_t full = (1u << arity);
  do {
    masks.clear();
    for (std::uint32_t m = 1; m < full; ++m)
      if (rng() & 1) masks.push_back(m);
  } while (masks.empty());
  return AnfFunction(arity, masks);
}

}  // namespace testutil

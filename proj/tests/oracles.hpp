#pragma once

// Brute-force reference computations used only by the tests. Each one takes a
// different route from the library code it checks.

#include <cstdint>
#include <optional>
#include <vector>

#include "lfsrcrt/galois.hpp"
#include "lfsrcrt/sequences.hpp"

namespace oracle {

using lfsrcrt::BinaryPoly;
using lfsrcrt::BitVector;
using lfsrcrt::FieldElt;

// Trial division by every polynomial of degree 1 .. deg/2.
inline bool irreducible_by_trial_division(const BinaryPoly& p) {
  const int d = p.degree();
  for (int k = 1; k <= d / 2; ++k) {
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << k); ++low) {
      const BinaryPoly q = BinaryPoly::monomial(k) + BinaryPoly(low);
      if ((p % q).is_zero()) return false;
    }
  }
  return true;
}

// Repeated multiplication until the identity comes back.
inline std::uint64_t order_by_stepping(const FieldElt& a) {
  FieldElt v = a;
  std::uint64_t t = 1;
  while (!v.is_one()) {
    v = v * a;
    ++t;
  }
  return t;
}

inline std::optional<std::uint64_t> dlog_by_enumeration(const FieldElt& a, const FieldElt& base, std::uint64_t n) {
  FieldElt v = a.field()->one();
  for (std::uint64_t d = 0; d < n; ++d) {
    if (v == a) return d;
    v = v * base;
  }
  return std::nullopt;
}

// S_k = sum_t s_t base^(t k mod n) from a table of powers built by repeated multiplication.
inline std::vector<std::uint64_t> dft_by_power_table(const BitVector& s, const FieldElt& base) {
  const std::size_t n = s.size();
  std::vector<std::uint64_t> powers(n);
  FieldElt v = base.field()->one();
  for (std::size_t i = 0; i < n; ++i) {
    powers[i] = v.repr();
    v = v * base;
  }
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s[t]) out[k] ^= powers[(t * k) % n];
    }
  }
  return out;
}

inline std::uint64_t crt_by_search(const std::vector<std::int64_t>& residues, const std::vector<std::uint64_t>& moduli) {
  std::uint64_t n = 1;
  for (auto m : moduli) n *= m;
  for (std::uint64_t x = 0; x < n; ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < moduli.size() && ok; ++i) {
      const auto m = static_cast<std::int64_t>(moduli[i]);
      ok = static_cast<std::int64_t>(x % moduli[i]) == ((residues[i] % m) + m) % m;
    }
    if (ok) return x;
  }
  return n;
}

// Does sum_i m_i s_{t+i} = 0 hold for every t with t + deg m < len?
inline bool annihilates(const BinaryPoly& m, const BitVector& s) {
  const int L = m.degree();
  for (std::size_t t = 0; t + static_cast<std::size_t>(L) < s.size(); ++t) {
    std::uint8_t acc = 0;
    for (int i = 0; i <= L; ++i) acc ^= static_cast<std::uint8_t>(m.coeff(i) & s[t + static_cast<std::size_t>(i)]);
    if (acc) return false;
  }
  return true;
}

// Smallest L admitting a monic degree-L recurrence, by exhaustive search.
inline std::size_t linear_complexity_by_search(const BitVector& s) {
  for (int L = 0;; ++L) {
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << L); ++low) {
      if (annihilates(BinaryPoly::monomial(L) + BinaryPoly(low), s)) return static_cast<std::size_t>(L);
    }
  }
}

}  // namespace oracle

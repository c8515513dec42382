#include "lfsrcrt/sequences.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "lfsrcrt/error.hpp"
#include "lfsrcrt/numtheory.hpp"

namespace lfsrcrt {

BitVector parse_bits(std::string_view text) {
  BitVector out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError("bad bit character '" + std::string(1, c) + "'");
    }
  }
  return out;
}

std::string format_bits(std::span<const std::uint8_t> bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b != 0 ? '1' : '0');
  return out;
}

LfsrConfig::LfsrConfig(BinaryPoly feedback, BitVector init)
    : feedback_(std::move(feedback)), init_(std::move(init)) {
  if (feedback_.degree() < 1) throw Error("degenerate degree");
  if (!feedback_.coeff(0)) throw Error("feedback needs a nonzero constant term");
  if (init_.size() != static_cast<std::size_t>(feedback_.degree())) {
    throw Error("init length must equal feedback degree");
  }
  for (auto& b : init_) {
    if (b > 1) throw Error("init bits must be 0 or 1");
  }
  if (std::all_of(init_.begin(), init_.end(), [](auto b) { return b == 0; })) {
    throw Error("zero fill");
  }
}

LfsrConfig LfsrConfig::impulse(BinaryPoly feedback) {
  const int m = feedback.degree();
  if (m < 1) throw Error("degenerate degree");
  BitVector fill(static_cast<std::size_t>(m), 0);
  fill.back() = 1;
  return LfsrConfig(std::move(feedback), std::move(fill));
}

BitVector lfsr_generate(const LfsrConfig& cfg, std::size_t count) {
  const auto m = static_cast<std::size_t>(cfg.degree());
  std::vector<std::size_t> taps;
  for (int i = 0; i < cfg.degree(); ++i) {
    if (cfg.feedback().coeff(i)) taps.push_back(static_cast<std::size_t>(i));
  }
  BitVector s(cfg.init());
  s.reserve(std::max(count, m));
  while (s.size() < count) {
    const std::size_t t = s.size() - m;
    std::uint8_t v = 0;
    for (auto i : taps) v ^= s[t + i];
    s.push_back(v);
  }
  s.resize(count);
  return s;
}

std::uint64_t lfsr_period(const LfsrConfig& cfg) {
  const BinaryPoly& f = cfg.feedback();
  if (f.degree() <= 63 && is_irreducible(f)) {
    return element_order(make_field(f)->x());
  }
  // Reducible feedback: step the packed state until it recurs.
  constexpr int kMaxSteppedDegree = 28;
  if (cfg.degree() > kMaxSteppedDegree) throw Error("period search limited to degree 28 for reducible feedback");
  const int m = cfg.degree();
  std::uint64_t taps = f.to_u64() & ((std::uint64_t{1} << m) - 1);
  std::uint64_t start = 0;
  for (int i = 0; i < m; ++i) start |= std::uint64_t{cfg.init()[static_cast<std::size_t>(i)]} << i;
  std::uint64_t state = start;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t step = 1; step <= limit; ++step) {
    const std::uint64_t next = static_cast<std::uint64_t>(std::popcount(state & taps) & 1);
    state = (state >> 1U) | (next << (m - 1));
    if (state == start) return step;
  }
  // Non-periodic prefix cannot occur with a nonzero constant term.
  throw Error("sequence is not purely periodic");
}

BitVector state_at_shift(const LfsrConfig& cfg, std::int64_t tau) {
  const LfsrConfig canonical = LfsrConfig::impulse(cfg.feedback());
  const std::uint64_t n = lfsr_period(canonical);
  const std::uint64_t shift = mod_normalize(tau, n);
  const auto m = static_cast<std::size_t>(cfg.degree());
  const BitVector stream = lfsr_generate(canonical, shift + m);
  return {stream.begin() + static_cast<std::ptrdiff_t>(shift), stream.end()};
}

PeriodicSequence::PeriodicSequence(BitVector one_period) : bits_(std::move(one_period)) {
  if (bits_.empty()) throw Error("period must be at least 1");
  for (auto b : bits_) {
    if (b > 1) throw Error("bits must be 0 or 1");
  }
}

std::uint8_t PeriodicSequence::at(std::int64_t t) const { return bits_[mod_normalize(t, bits_.size())]; }

BitVector PeriodicSequence::unroll(std::size_t count) const {
  BitVector out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = bits_[i % bits_.size()];
  return out;
}

MinimalPolynomial min_poly_bm(std::span<const std::uint8_t> s) {
  if (s.empty()) throw Error("empty sequence");
  const std::size_t len = s.size();
  // Connection polynomials C(x) = 1 + c_1 x + ... as coefficient vectors.
  BitVector c(len + 1, 0), b(len + 1, 0), t;
  c[0] = b[0] = 1;
  std::size_t lc = 0;
  std::size_t gap = 1;
  for (std::size_t n = 0; n < len; ++n) {
    std::uint8_t d = s[n];
    for (std::size_t i = 1; i <= lc; ++i) d ^= static_cast<std::uint8_t>(c[i] & s[n - i]);
    if (d == 0) {
      ++gap;
      continue;
    }
    if (2 * lc <= n) {
      t = c;
      for (std::size_t i = 0; i + gap <= len; ++i) c[i + gap] ^= b[i];
      lc = n + 1 - lc;
      b = std::move(t);
      gap = 1;
    } else {
      for (std::size_t i = 0; i + gap <= len; ++i) c[i + gap] ^= b[i];
      ++gap;
    }
  }
  // Recurrence form m(x) = x^L C(1/x).
  MinimalPolynomial out;
  out.complexity = lc;
  for (std::size_t i = 0; i <= lc; ++i) {
    if (c[i] != 0) out.polynomial.set_coeff(static_cast<int>(lc - i), true);
  }
  return out;
}

PeriodicSequence cyclic_shift(const PeriodicSequence& seq, std::int64_t tau) {
  const std::size_t n = seq.period();
  const std::size_t shift = mod_normalize(tau, n);
  BitVector out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = seq.bits()[(t + shift) % n];
  return PeriodicSequence(std::move(out));
}

std::vector<std::size_t> locate_window(const PeriodicSequence& reference,
                                       std::span<const std::uint8_t> window) {
  if (window.empty()) throw Error("empty window");
  const std::size_t n = reference.period();
  const BitVector& r = reference.bits();
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < n; ++i) {
    bool match = true;
    for (std::size_t j = 0; j < window.size(); ++j) {
      if (r[(i + j) % n] != window[j]) {
        match = false;
        break;
      }
    }
    if (match) hits.push_back(i);
  }
  return hits;
}

std::uint8_t absolute_trace(const FieldElt& y) {
  const GaloisField& f = *y.field();
  std::uint64_t acc = 0;
  std::uint64_t p = y.repr();
  for (int k = 0; k < f.degree(); ++k) {
    acc ^= p;
    p = f.square(p);
  }
  if (acc > 1) throw std::logic_error("trace left the prime field");
  return static_cast<std::uint8_t>(acc);
}

BitVector trace_sequence(const FieldElt& beta, const FieldElt& alpha, std::size_t count) {
  if (beta.is_zero()) throw Error("trace coefficient must be nonzero");
  BitVector out(count);
  FieldElt v = beta;
  for (std::size_t t = 0; t < count; ++t) {
    out[t] = absolute_trace(v);
    v = v * alpha;
  }
  return out;
}

}  // namespace lfsrcrt

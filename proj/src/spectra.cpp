#include "lfsrcrt/spectra.hpp"

#include <algorithm>

#include "lfsrcrt/error.hpp"
#include "lfsrcrt/numtheory.hpp"

namespace lfsrcrt {

Spectrum::Spectrum(FieldElt base, std::vector<std::uint64_t> values)
    : base_(std::move(base)), values_(std::move(values)) {
  const std::uint64_t n = values_.size();
  if (!has_order(base_, n)) throw Error("base order != period");
  const GaloisField& f = *base_.field();
  for (auto v : values_) {
    if (v >= f.size()) throw Error("residue not reduced");
  }
  for (std::uint64_t k = 0; k < n; ++k) {
    if (values_[(2 * k) % n] != f.square(values_[k])) throw Error("spectrum violates conjugacy");
  }
}

namespace {

void require_period_order(const PeriodicSequence& seq, const FieldElt& base) {
  if (!has_order(base, seq.period())) throw Error("base order != period");
}

// Horner evaluation of sum_t bits[t] y^t.
std::uint64_t evaluate(const GaloisField& f, const BitVector& bits, std::uint64_t y) {
  std::uint64_t acc = 0;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) acc = f.mul(acc, y) ^ *it;
  return acc;
}

}  // namespace

FieldElt dft_point(const PeriodicSequence& seq, const FieldElt& base, std::uint64_t k) {
  require_period_order(seq, base);
  const GaloisField& f = *base.field();
  const std::uint64_t y = f.pow(base.repr(), static_cast<std::int64_t>(k % seq.period()));
  return FieldElt(base.field(), evaluate(f, seq.bits(), y));
}

Spectrum dft(const PeriodicSequence& seq, const FieldElt& base) {
  require_period_order(seq, base);
  const GaloisField& f = *base.field();
  const std::size_t n = seq.period();
  std::vector<std::uint64_t> values(n);
  std::uint64_t y = 1;  // base^k
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = evaluate(f, seq.bits(), y);
    y = f.mul(y, base.repr());
  }
  return Spectrum(base, std::move(values));
}

PeriodicSequence idft(const Spectrum& spec) {
  const GaloisField& f = *spec.field();
  const std::size_t n = spec.size();
  const std::uint64_t inv_base = f.inv(spec.base().repr());
  BitVector bits(n);
  std::uint64_t y = 1;  // base^(-t)
  for (std::size_t t = 0; t < n; ++t) {
    std::uint64_t acc = 0;
    const auto values = spec.raw();
    for (auto it = values.rbegin(); it != values.rend(); ++it) acc = f.mul(acc, y) ^ *it;
    if (acc > 1) throw Error("spectrum not binary-consistent");
    bits[t] = static_cast<std::uint8_t>(acc);
    y = f.mul(y, inv_base);
  }
  return PeriodicSequence(std::move(bits));
}

Spectrum shift_spectrum(const Spectrum& spec, std::int64_t tau) {
  const GaloisField& f = *spec.field();
  const std::size_t n = spec.size();
  const std::uint64_t step = f.pow(spec.base().repr(), -static_cast<std::int64_t>(mod_normalize(tau, n)));
  std::vector<std::uint64_t> out(n);
  std::uint64_t factor = 1;  // base^(-k tau)
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = f.mul(factor, spec.raw()[k]);
    factor = f.mul(factor, step);
  }
  return Spectrum(spec.base(), std::move(out));
}

CyclotomicCosets cyclotomic_cosets(std::uint64_t n) {
  if (n == 0 || n % 2 == 0) throw Error("2 not invertible");
  CyclotomicCosets out;
  std::vector<bool> seen(n, false);
  for (std::uint64_t k = 0; k < n; ++k) {
    if (seen[k]) continue;
    auto orbit = harmonics(k, n);
    for (auto j : orbit) seen[j] = true;
    std::sort(orbit.begin(), orbit.end());
    out.leaders.push_back(orbit.front());
    out.cosets.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::uint64_t> harmonics(std::uint64_t k, std::uint64_t n) {
  if (n == 0 || n % 2 == 0) throw Error("2 not invertible");
  std::vector<std::uint64_t> orbit;
  std::uint64_t j = k % n;
  do {
    orbit.push_back(j);
    j = (2 * j) % n;
  } while (j != k % n);
  return orbit;
}

PeriodicSequence trace_reconstruct(const Spectrum& spec) {
  const GaloisField& f = *spec.field();
  const std::size_t n = spec.size();
  const CyclotomicCosets cc = cyclotomic_cosets(n);
  const std::uint64_t inv_base = f.inv(spec.base().repr());
  BitVector bits(n, 0);
  for (std::size_t c = 0; c < cc.cosets.size(); ++c) {
    const std::uint64_t j = cc.leaders[c];
    const std::uint64_t a = spec.raw()[j];
    if (a == 0) continue;
    const std::size_t mj = cc.cosets[c].size();
    const std::uint64_t step = f.pow(inv_base, static_cast<std::int64_t>(j));
    std::uint64_t y = a;  // a * base^(-j t)
    for (std::size_t t = 0; t < n; ++t) {
      std::uint64_t tr = 0;
      std::uint64_t p = y;
      for (std::size_t i = 0; i < mj; ++i) {
        tr ^= p;
        p = f.square(p);
      }
      if (tr > 1) throw Error("spectrum not binary-consistent");
      bits[t] ^= static_cast<std::uint8_t>(tr);
      y = f.mul(y, step);
    }
  }
  return PeriodicSequence(std::move(bits));
}

std::vector<std::uint64_t> support(const Spectrum& spec) {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    if (spec.raw()[k] != 0) out.push_back(k);
  }
  return out;
}

FieldElt default_base(const PeriodicSequence& seq) {
  const std::uint64_t n = seq.period();
  if (n % 2 == 0) throw Error("no DFT for even period");
  const MinimalPolynomial mp = min_poly_bm(seq.unroll(2 * n));
  const BinaryPoly& m = mp.polynomial;
  if (m.degree() >= 1 && m.degree() <= 63 && is_irreducible(m)) {
    const FieldPtr f = make_field(m);
    const FieldElt x = f->x();
    if (has_order(x, n)) return x;
  }
  const std::uint64_t degree = multiplicative_order_of_two(n);
  if (degree > 63) throw Error("DFT field degree exceeds 63");
  const FieldPtr f = make_field(find_irreducible(static_cast<int>(degree)));
  return order_n_element(f, n);
}

}  // namespace lfsrcrt

#include "lfsrcrt/combiner.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "lfsrcrt/error.hpp"

namespace lfsrcrt {

AnfFunction::AnfFunction(std::size_t arity, std::vector<std::uint32_t> monomials) : arity_(arity) {
  if (arity > 31) throw Error("ANF arity limited to 31 variables");
  const std::uint32_t allowed = (arity == 0) ? 0U : ((std::uint32_t{1} << arity) - 1U);
  std::sort(monomials.begin(), monomials.end());
  for (std::size_t i = 0; i < monomials.size();) {
    const std::uint32_t mask = monomials[i];
    if ((mask & ~allowed) != 0) throw Error("monomial uses a variable beyond the arity");
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == mask) ++j;
    if ((j - i) % 2 == 1) monomials_.push_back(mask);
    i = j;
  }
}

AnfFunction AnfFunction::from_truth_table(std::span<const std::uint8_t> table) {
  if (table.empty() || !std::has_single_bit(table.size())) {
    throw Error("truth table length must be a power of two");
  }
  const auto arity = static_cast<std::size_t>(std::countr_zero(table.size()));
  std::vector<std::uint8_t> coef(table.begin(), table.end());
  for (std::size_t step = 1; step < coef.size(); step <<= 1U) {
    for (std::size_t i = 0; i < coef.size(); ++i) {
      if (i & step) coef[i] ^= coef[i ^ step];
    }
  }
  std::vector<std::uint32_t> monomials;
  for (std::size_t i = 0; i < coef.size(); ++i) {
    if (coef[i] & 1U) monomials.push_back(static_cast<std::uint32_t>(i));
  }
  return AnfFunction(arity, std::move(monomials));
}

AnfFunction AnfFunction::parse(std::size_t arity, std::string_view masks) {
  std::vector<std::uint32_t> monomials;
  std::size_t pos = 0;
  while (pos <= masks.size()) {
    const std::size_t comma = std::min(masks.find(',', pos), masks.size());
    std::string_view tok = masks.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      const BinaryPoly bits = BinaryPoly::parse(tok);
      if (bits.degree() >= 32) throw ParseError("monomial mask too wide");
      monomials.push_back(static_cast<std::uint32_t>(bits.to_u64()));
    }
    pos = comma + 1;
  }
  return AnfFunction(arity, std::move(monomials));
}

AnfFunction AnfFunction::product(std::size_t arity) {
  return AnfFunction(arity, {(std::uint32_t{1} << arity) - 1U});
}

bool AnfFunction::has_constant() const noexcept {
  return !monomials_.empty() && monomials_.front() == 0;
}

std::string AnfFunction::to_string() const {
  if (monomials_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (i != 0) os << " + ";
    const std::uint32_t mask = monomials_[i];
    if (mask == 0) {
      os << "1";
      continue;
    }
    bool first = true;
    for (std::size_t v = 0; v < arity_; ++v) {
      if ((mask >> v) & 1U) {
        os << (first ? "" : "*") << 'x' << (v + 1);
        first = false;
      }
    }
  }
  return os.str();
}

std::uint8_t anf_eval(const AnfFunction& f, std::span<const std::uint8_t> inputs) {
  if (inputs.size() != f.arity()) throw Error("arity mismatch");
  std::uint32_t packed = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) packed |= std::uint32_t{inputs[i] & 1U} << i;
  std::uint8_t out = 0;
  for (auto mask : f.monomials()) out ^= static_cast<std::uint8_t>((packed & mask) == mask);
  return out;
}

namespace {

std::vector<std::uint64_t> periods_of(const std::vector<LfsrConfig>& lfsrs) {
  std::vector<std::uint64_t> out;
  for (const auto& l : lfsrs) out.push_back(lfsr_period(l));
  return out;
}

}  // namespace

GeneratorSpec::GeneratorSpec(std::vector<LfsrConfig> lfsrs, AnfFunction f)
    : lfsrs_(std::move(lfsrs)), f_(std::move(f)), periods_(periods_of(lfsrs_)), system_(periods_) {
  if (f_.arity() != lfsrs_.size()) throw Error("arity mismatch");
}

GeneratorSpec GeneratorSpec::canonical() const {
  std::vector<LfsrConfig> out;
  for (const auto& l : lfsrs_) out.push_back(LfsrConfig::impulse(l.feedback()));
  return GeneratorSpec(std::move(out), f_);
}

GeneratorSpec GeneratorSpec::with_fills(std::span<const BitVector> fills) const {
  if (fills.size() != lfsrs_.size()) throw Error("fill count does not match register count");
  std::vector<LfsrConfig> out;
  for (std::size_t i = 0; i < fills.size(); ++i) out.emplace_back(lfsrs_[i].feedback(), fills[i]);
  return GeneratorSpec(std::move(out), f_);
}

BitVector product_sequence(std::span<const LfsrConfig> lfsrs, std::size_t count) {
  BitVector out(count, 1);
  for (const auto& l : lfsrs) {
    const BitVector s = lfsr_generate(l, count);
    for (std::size_t t = 0; t < count; ++t) out[t] &= s[t];
  }
  return out;
}

BitVector combiner_sequence(const GeneratorSpec& spec, std::size_t count) {
  std::vector<BitVector> streams;
  for (const auto& l : spec.lfsrs()) streams.push_back(lfsr_generate(l, count));
  BitVector out(count);
  std::vector<std::uint8_t> inputs(streams.size());
  for (std::size_t t = 0; t < count; ++t) {
    for (std::size_t i = 0; i < streams.size(); ++i) inputs[i] = streams[i][t];
    out[t] = anf_eval(spec.function(), inputs);
  }
  return out;
}

FieldElt product_basis(std::span<const LfsrConfig> lfsrs) {
  std::vector<LfsrConfig> canonical;
  std::vector<std::uint64_t> periods;
  for (const auto& l : lfsrs) {
    canonical.push_back(LfsrConfig::impulse(l.feedback()));
    periods.push_back(lfsr_period(canonical.back()));
  }
  const ResidueSystem sys(periods);
  const std::uint64_t n = sys.product();
  const MinimalPolynomial mp = min_poly_bm(product_sequence(canonical, 2 * n));
  if (mp.polynomial.degree() > 63) throw Error("product field degree exceeds 63");
  if (mp.polynomial.degree() < 1 || !is_irreducible(mp.polynomial)) {
    throw Error("product minimal polynomial is reducible; constituents must be irreducible");
  }
  const FieldElt x = make_field(mp.polynomial)->x();
  if (!has_order(x, n)) throw Error("base order != period");
  return x;
}

std::vector<Spectrum> constituent_spectra(std::span<const LfsrConfig> lfsrs) {
  std::vector<Spectrum> out;
  for (const auto& l : lfsrs) {
    const LfsrConfig canonical = LfsrConfig::impulse(l.feedback());
    const std::uint64_t n = lfsr_period(canonical);
    const PeriodicSequence seq(lfsr_generate(canonical, n));
    out.push_back(dft(seq, make_field(l.feedback())->x()));
  }
  return out;
}

namespace {

// Spectrum of the all-ones sequence of period n: n = 1 in characteristic 2 at k = 0.
Spectrum unit_spectrum(const Spectrum& like) {
  std::vector<std::uint64_t> values(like.size(), 0);
  values[0] = 1;
  return Spectrum(like.base(), std::move(values));
}

}  // namespace

Spectrum predict_combiner_spectrum(const AnfFunction& f, std::span<const Spectrum> constituents,
                                   const FieldElt& target_base) {
  if (f.arity() != constituents.size()) throw Error("arity mismatch");
  const std::uint64_t n = ResidueSystem([&] {
                            std::vector<std::uint64_t> m;
                            for (const auto& c : constituents) m.push_back(c.size());
                            return m;
                          }()).product();
  std::vector<std::uint64_t> values(n, 0);
  for (std::uint32_t mask : f.monomials()) {
    std::vector<Spectrum> factors;
    for (std::size_t i = 0; i < constituents.size(); ++i) {
      factors.push_back(((mask >> i) & 1U) ? constituents[i] : unit_spectrum(constituents[i]));
    }
    const Spectrum term = predict_spectrum(factors, target_base);
    for (std::uint64_t k = 0; k < n; ++k) values[k] ^= term.raw()[k];
  }
  return Spectrum(target_base, std::move(values));
}

}  // namespace lfsrcrt

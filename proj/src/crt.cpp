#include "lfsrcrt/crt.hpp"

#include <algorithm>
#include <numeric>

#include "lfsrcrt/error.hpp"
#include "lfsrcrt/numtheory.hpp"

namespace lfsrcrt {

ResidueSystem::ResidueSystem(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw Error("empty residue system");
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] == 0) throw Error("zero modulus");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(moduli_[i], moduli_[j]) != 1) throw Error("moduli not coprime");
    }
    product_ = lcm_checked(product_, moduli_[i]);
  }
}

std::uint64_t crt_solve(std::span<const std::int64_t> residues, const ResidueSystem& sys) {
  if (residues.size() != sys.size()) throw Error("residue count does not match moduli");
  // Fold pairwise: x = x0 mod m0 and x = r mod n  ->  x = x0 + m0 * ((r - x0) * m0^-1 mod n).
  std::uint64_t x = 0;
  std::uint64_t m = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const std::uint64_t n = sys.moduli()[i];
    const std::uint64_t r = mod_normalize(residues[i], n);
    const std::uint64_t inv = mod_inverse(static_cast<std::int64_t>(m % n), n);
    const std::uint64_t diff = mod_normalize(static_cast<std::int64_t>(r) - static_cast<std::int64_t>(x % n), n);
    const std::uint64_t t = mul_mod(diff, inv, n);
    x += m * t;
    m *= n;
  }
  return x;
}

std::vector<std::uint64_t> repetition_counts(const ResidueSystem& sys) {
  std::vector<std::uint64_t> out;
  for (auto n : sys.moduli()) out.push_back(sys.product() / n);
  return out;
}

std::uint64_t compose_shift(std::span<const std::int64_t> shifts, const ResidueSystem& sys) {
  return crt_solve(shifts, sys);
}

std::vector<std::uint64_t> map_support(std::span<const std::vector<std::uint64_t>> supports,
                                       const ResidueSystem& sys) {
  if (supports.size() != sys.size()) throw Error("support count does not match moduli");
  std::vector<std::uint64_t> out;
  std::vector<std::size_t> cursor(supports.size(), 0);
  for (const auto& s : supports) {
    if (s.empty()) return out;
  }
  std::vector<std::int64_t> combo(supports.size());
  while (true) {
    for (std::size_t i = 0; i < supports.size(); ++i) {
      combo[i] = static_cast<std::int64_t>(supports[i][cursor[i]]);
    }
    out.push_back(crt_solve(combo, sys));
    std::size_t i = 0;
    while (i < cursor.size() && ++cursor[i] == supports[i].size()) cursor[i++] = 0;
    if (i == cursor.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t map_degree(std::span<const std::int64_t> degrees, const ResidueSystem& sys) {
  return crt_solve(degrees, sys);
}

std::vector<std::uint64_t> decompose_degree(std::uint64_t d, const ResidueSystem& sys) {
  std::vector<std::uint64_t> out;
  for (auto n : sys.moduli()) out.push_back(d % n);
  return out;
}

Spectrum predict_spectrum(std::span<const Spectrum> constituents, const FieldElt& target_base) {
  std::vector<std::uint64_t> moduli;
  std::vector<std::vector<std::uint64_t>> supports;
  for (const auto& c : constituents) {
    moduli.push_back(c.size());
    supports.push_back(support(c));
  }
  const ResidueSystem sys(std::move(moduli));
  const std::uint64_t n = sys.product();
  if (!has_order(target_base, n)) throw Error("base order != period");

  const GaloisField& target = *target_base.field();
  std::vector<std::uint64_t> values(n, 0);
  std::vector<std::int64_t> degrees(constituents.size());
  for (std::uint64_t k : map_support(supports, sys)) {
    for (std::size_t i = 0; i < constituents.size(); ++i) {
      const Spectrum& c = constituents[i];
      degrees[i] = static_cast<std::int64_t>(dlog(c[k % c.size()], c.base(), c.size()));
    }
    values[k] = target.pow(target_base.repr(), static_cast<std::int64_t>(map_degree(degrees, sys)));
  }
  return Spectrum(target_base, std::move(values));
}

}  // namespace lfsrcrt

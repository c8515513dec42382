#include "lfsrcrt/galois.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

#include "lfsrcrt/error.hpp"
#include "lfsrcrt/numtheory.hpp"

namespace lfsrcrt {

// ---------------------------------------------------------------------------
// BinaryPoly

BinaryPoly::BinaryPoly(std::uint64_t bits) {
  if (bits != 0) words_.push_back(bits);
}

BinaryPoly BinaryPoly::monomial(int exponent) {
  BinaryPoly p;
  p.set_coeff(exponent, true);
  return p;
}

BinaryPoly BinaryPoly::from_exponents(std::span<const int> exponents) {
  BinaryPoly p;
  for (int e : exponents) {
    if (e < 0) throw ParseError("negative exponent");
    p.set_coeff(e, !p.coeff(e));
  }
  return p;
}

BinaryPoly BinaryPoly::from_exponents(std::initializer_list<int> exponents) {
  return from_exponents(std::span<const int>(exponents.begin(), exponents.size()));
}

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BinaryPoly BinaryPoly::parse(std::string_view text) {
  text = trim_view(text);
  if (text.empty()) throw ParseError("empty polynomial");
  if (text.find(',') != std::string_view::npos) {
    std::vector<int> exps;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string_view tok = trim_view(text.substr(pos, comma - pos));
      if (!tok.empty()) {
        int e = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || e < 0) {
          throw ParseError("bad exponent '" + std::string(tok) + "'");
        }
        exps.push_back(e);
      }
      pos = comma + 1;
    }
    return from_exponents(exps);
  }
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) text.remove_prefix(2);
  BinaryPoly p;
  int bit = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it, bit += 4) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
    int v = 0;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else {
      throw ParseError("bad hex digit '" + std::string(1, *it) + "'");
    }
    for (int b = 0; b < 4; ++b) {
      if ((v >> b) & 1) p.set_coeff(bit + b, true);
    }
  }
  return p;
}

int BinaryPoly::degree() const noexcept {
  if (words_.empty()) return -1;
  return static_cast<int>(words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back());
}

bool BinaryPoly::coeff(int i) const noexcept {
  if (i < 0) return false;
  const auto w = static_cast<std::size_t>(i / 64);
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1U) != 0;
}

void BinaryPoly::set_coeff(int i, bool value) {
  if (i < 0) throw Error("negative exponent");
  const auto w = static_cast<std::size_t>(i / 64);
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  words_[w] = value ? (words_[w] | mask) : (words_[w] & ~mask);
  trim();
}

std::uint64_t BinaryPoly::to_u64() const {
  if (words_.size() > 1) throw Error("polynomial degree exceeds 63");
  return words_.empty() ? 0 : words_[0];
}

std::string BinaryPoly::to_hex() const {
  if (words_.empty()) return "0";
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out;
  for (int nib = degree() / 4; nib >= 0; --nib) {
    int v = 0;
    for (int b = 0; b < 4; ++b) v |= coeff(nib * 4 + b) ? (1 << b) : 0;
    out.push_back(kDigits[v]);
  }
  return out;
}

std::string BinaryPoly::to_string() const {
  if (words_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e : exponents()) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << "1";
    } else if (e == 1) {
      os << "x";
    } else {
      os << "x^" << e;
    }
  }
  return os.str();
}

std::vector<int> BinaryPoly::exponents() const {
  std::vector<int> out;
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i)) out.push_back(i);
  }
  return out;
}

BinaryPoly& BinaryPoly::operator+=(const BinaryPoly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

BinaryPoly BinaryPoly::shifted(int k) const {
  if (words_.empty() || k == 0) return *this;
  BinaryPoly out;
  const auto word_shift = static_cast<std::size_t>(k / 64);
  const int bit_shift = k % 64;
  out.words_.assign(words_.size() + word_shift + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + word_shift] ^= words_[i] << bit_shift;
    if (bit_shift != 0) out.words_[i + word_shift + 1] ^= words_[i] >> (64 - bit_shift);
  }
  out.trim();
  return out;
}

BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b) {
  BinaryPoly out;
  const int db = b.degree();
  for (int i = 0; i <= db; ++i) {
    if (b.coeff(i)) out += a.shifted(i);
  }
  return out;
}

PolyDivision divmod(const BinaryPoly& a, const BinaryPoly& b) {
  if (b.is_zero()) throw Error("zero modulus");
  PolyDivision r{BinaryPoly{}, a};
  const int db = b.degree();
  for (int d = r.remainder.degree(); d >= db; d = r.remainder.degree()) {
    r.quotient.set_coeff(d - db, true);
    r.remainder += b.shifted(d - db);
  }
  return r;
}

BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b) { return divmod(a, b).remainder; }
BinaryPoly operator/(const BinaryPoly& a, const BinaryPoly& b) { return divmod(a, b).quotient; }

BinaryPoly gcd(BinaryPoly a, BinaryPoly b) {
  while (!b.is_zero()) {
    BinaryPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BinaryPoly mulmod(const BinaryPoly& a, const BinaryPoly& b, const BinaryPoly& m) {
  return (a * b) % m;
}

void BinaryPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

// Ben-Or: p of degree d is irreducible iff gcd(x^(2^i) - x, p) = 1 for 1 <= i <= d/2.
bool is_irreducible(const BinaryPoly& p) {
  const int d = p.degree();
  if (d < 1) throw Error("degenerate degree");
  const BinaryPoly x = BinaryPoly::monomial(1);
  const BinaryPoly one(1);
  BinaryPoly power = x % p;
  for (int i = 1; i <= d / 2; ++i) {
    power = mulmod(power, power, p);
    if (gcd(power + x, p) != one) return false;
  }
  return true;
}

bool is_primitive(const BinaryPoly& p) {
  if (p.degree() > 63 || !is_irreducible(p)) return false;
  const FieldPtr f = make_field(p);
  if (f->x().is_zero()) return false;
  return element_order(f->x()) == f->group_order();
}

BinaryPoly find_irreducible(int degree) {
  if (degree < 1 || degree > 63) throw Error("degenerate degree");
  for (std::uint64_t low = 0;; ++low) {
    if (degree < 63 && low >= (std::uint64_t{1} << degree)) break;
    const BinaryPoly p = BinaryPoly::monomial(degree) + BinaryPoly(low);
    if (is_irreducible(p)) return p;
  }
  throw Error("no irreducible polynomial found");
}

BinaryPoly find_primitive(int degree) {
  if (degree < 1 || degree > 63) throw Error("degenerate degree");
  for (std::uint64_t low = 1;; low += 2) {
    if (degree < 63 && low >= (std::uint64_t{1} << degree)) break;
    const BinaryPoly p = BinaryPoly::monomial(degree) + BinaryPoly(low);
    if (is_primitive(p)) return p;
  }
  throw Error("no primitive polynomial found");
}

// ---------------------------------------------------------------------------
// SubgroupLog

SubgroupLog::SubgroupLog(const GaloisField& field, std::uint64_t base, std::uint64_t n) : n_(n) {
  table_.reserve(n);
  std::uint64_t v = 1;
  for (std::uint64_t d = 0; d < n; ++d) {
    if (!table_.emplace(v, d).second) throw Error("base order mismatch");
    v = field.mul(v, base);
  }
  if (v != 1) throw Error("base order mismatch");
}

std::uint64_t SubgroupLog::log(std::uint64_t value) const {
  if (value == 0) throw Error("zero has no logarithm");
  const auto it = table_.find(value);
  if (it == table_.end()) throw Error("not in subgroup");
  return it->second;
}

// ---------------------------------------------------------------------------
// GaloisField

GaloisField::GaloisField(Token, BinaryPoly modulus)
    : modulus_(std::move(modulus)),
      mod_bits_(modulus_.to_u64()),
      degree_(modulus_.degree()) {
  top_bit_ = std::uint64_t{1} << degree_;
  group_order_ = (degree_ == 64) ? ~std::uint64_t{0} : top_bit_ - 1;
  factors_ = prime_factors(group_order_);
}

FieldPtr make_field(const BinaryPoly& modulus) {
  if (modulus.degree() < 1) throw Error("degenerate degree");
  if (modulus.degree() > 63) throw Error("field degree exceeds 63");
  if (!is_irreducible(modulus)) throw Error("reducible modulus");
  return std::make_shared<const GaloisField>(GaloisField::Token{}, modulus);
}

std::uint64_t GaloisField::mul(std::uint64_t a, std::uint64_t b) const noexcept {
  // Shift-and-add with the reduction folded into every doubling of a.
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1U;
    a <<= 1U;
    if (a & top_bit_) a ^= mod_bits_;
  }
  return r;
}

std::uint64_t GaloisField::pow(std::uint64_t a, std::int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw Error("zero inverse");
    return 0;
  }
  std::uint64_t k = mod_normalize(e, group_order_);
  std::uint64_t result = 1;
  while (k != 0) {
    if (k & 1U) result = mul(result, a);
    a = mul(a, a);
    k >>= 1U;
  }
  return result;
}

std::uint64_t GaloisField::inv(std::uint64_t a) const {
  if (a == 0) throw Error("zero inverse");
  return pow(a, -1);
}

std::uint64_t GaloisField::reduce(const BinaryPoly& p) const { return (p % modulus_).to_u64(); }

FieldElt GaloisField::element(std::uint64_t repr) const {
  if (repr >= top_bit_) return FieldElt(shared_from_this(), reduce(BinaryPoly(repr)));
  return FieldElt(shared_from_this(), repr);
}

FieldElt GaloisField::element(const BinaryPoly& p) const { return FieldElt(shared_from_this(), reduce(p)); }
FieldElt GaloisField::zero() const { return FieldElt(shared_from_this(), 0); }
FieldElt GaloisField::one() const { return FieldElt(shared_from_this(), 1); }
FieldElt GaloisField::x() const { return element(std::uint64_t{2}); }

const SubgroupLog& GaloisField::subgroup_log(std::uint64_t base, std::uint64_t n) const {
  std::lock_guard lock(log_mutex_);
  auto& slot = logs_[{base, n}];
  if (!slot) slot = std::make_unique<SubgroupLog>(*this, base, n);
  return *slot;
}

// ---------------------------------------------------------------------------
// FieldElt

FieldElt::FieldElt(FieldPtr field, std::uint64_t repr) : field_(std::move(field)), repr_(repr) {
  if (!field_) throw Error("null field");
  if (repr_ >= field_->size()) throw Error("residue not reduced");
}

namespace {

void require_same(const FieldElt& a, const FieldElt& b) {
  if (!a.field()->same_field(*b.field())) throw Error("field mismatch");
}

}  // namespace

FieldElt FieldElt::operator+(const FieldElt& other) const {
  require_same(*this, other);
  return FieldElt(field_, repr_ ^ other.repr_);
}

FieldElt FieldElt::operator*(const FieldElt& other) const {
  require_same(*this, other);
  return FieldElt(field_, field_->mul(repr_, other.repr_));
}

FieldElt FieldElt::inverse() const { return FieldElt(field_, field_->inv(repr_)); }

FieldElt FieldElt::pow(std::int64_t e) const { return FieldElt(field_, field_->pow(repr_, e)); }

std::uint64_t element_order(const FieldElt& a) {
  if (a.is_zero()) throw Error("zero has no order");
  const GaloisField& f = *a.field();
  std::uint64_t t = f.group_order();
  for (std::uint64_t p : f.group_order_factors()) {
    while (t % p == 0 && f.pow(a.repr(), static_cast<std::int64_t>(t / p)) == 1) t /= p;
  }
  return t;
}

bool has_order(const FieldElt& e, std::uint64_t n) {
  if (e.is_zero() || n == 0) return false;
  const GaloisField& f = *e.field();
  if (f.pow(e.repr(), static_cast<std::int64_t>(n)) != 1) return false;
  for (std::uint64_t p : prime_factors(n)) {
    if (f.pow(e.repr(), static_cast<std::int64_t>(n / p)) == 1) return false;
  }
  return true;
}

FieldElt order_n_element(const FieldPtr& field, std::uint64_t n) {
  if (n == 0 || field->group_order() % n != 0) throw Error("no order-n element");
  const FieldElt x = field->x();
  if (!x.is_zero() && has_order(x, n)) return x;
  for (std::uint64_t cand = 2; cand < field->size(); ++cand) {
    const FieldElt g(field, cand);
    if (element_order(g) == field->group_order()) {
      return g.pow(static_cast<std::int64_t>(field->group_order() / n));
    }
  }
  // GF(2): the only nonzero element is 1.
  return field->one();
}

std::uint64_t dlog(const FieldElt& a, const FieldElt& base, std::uint64_t n) {
  require_same(a, base);
  if (a.is_zero()) throw Error("zero has no logarithm");
  return a.field()->subgroup_log(base.repr(), n).log(a.repr());
}

}  // namespace lfsrcrt

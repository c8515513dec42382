#pragma once

// Binary polynomials, GF(2^m) fields in polynomial basis, element orders and
// discrete logarithms over cyclic subgroups.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lfsrcrt {

/// Polynomial over GF(2), stored as a coefficient bitset (bit i = coefficient of x^i).
/// Degree is unbounded; the zero polynomial has degree -1.
class BinaryPoly {
 public:
  BinaryPoly() = default;
  explicit BinaryPoly(std::uint64_t bits);

  static BinaryPoly monomial(int exponent);
  static BinaryPoly from_exponents(std::span<const int> exponents);
  static BinaryPoly from_exponents(std::initializer_list<int> exponents);

  /// Accepts a hex bitset ("B", "0x25") or a comma-separated exponent list ("3,1,0").
  /// A string without a comma is always read as hex.
  static BinaryPoly parse(std::string_view text);

  int degree() const noexcept;
  bool is_zero() const noexcept { return words_.empty(); }
  bool coeff(int i) const noexcept;
  void set_coeff(int i, bool value);

  /// Throws Error when the degree exceeds 63.
  std::uint64_t to_u64() const;

  std::string to_hex() const;       // uppercase, no prefix; "0" for zero
  std::string to_string() const;    // "x^3 + x + 1"
  std::vector<int> exponents() const;  // descending

  BinaryPoly& operator+=(const BinaryPoly& other);
  friend BinaryPoly operator+(BinaryPoly a, const BinaryPoly& b) { return a += b; }
  friend BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b);
  friend BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b);
  friend BinaryPoly operator/(const BinaryPoly& a, const BinaryPoly& b);
  friend bool operator==(const BinaryPoly&, const BinaryPoly&) = default;

  /// Multiplication by x^k.
  BinaryPoly shifted(int k) const;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

struct PolyDivision {
  BinaryPoly quotient;
  BinaryPoly remainder;
};

/// Long division; throws Error("zero modulus") for b = 0.
PolyDivision divmod(const BinaryPoly& a, const BinaryPoly& b);

/// Monic gcd (every nonzero binary polynomial is monic).
BinaryPoly gcd(BinaryPoly a, BinaryPoly b);

BinaryPoly mulmod(const BinaryPoly& a, const BinaryPoly& b, const BinaryPoly& m);

/// Throws Error("degenerate degree") for constant polynomials.
bool is_irreducible(const BinaryPoly& p);

/// Irreducible of degree m whose root x generates the full multiplicative group.
bool is_primitive(const BinaryPoly& p);

/// First irreducible (resp. primitive) polynomial of the given degree in increasing bitset order.
BinaryPoly find_irreducible(int degree);
BinaryPoly find_primitive(int degree);

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;
class FieldElt;

FieldPtr make_field(const BinaryPoly& modulus);

/// Precomputed logarithm table for the cyclic subgroup generated by `base` (order n).
class SubgroupLog {
 public:
  SubgroupLog(const GaloisField& field, std::uint64_t base, std::uint64_t n);

  std::uint64_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  /// Throws Error("zero has no logarithm") / Error("not in subgroup").
  std::uint64_t log(std::uint64_t value) const;
  bool contains(std::uint64_t value) const { return table_.count(value) != 0; }

 private:
  std::uint64_t n_;
  std::unordered_map<std::uint64_t, std::uint64_t> table_;
};

/// GF(2^m) = GF(2)[x]/(modulus), m <= 63. Immutable apart from a lazily filled
/// cache of subgroup logarithm tables, which is guarded by a mutex.
class GaloisField : public std::enable_shared_from_this<GaloisField> {
 public:
  class Token {
    Token() = default;
    friend FieldPtr make_field(const BinaryPoly& modulus);
  };
  GaloisField(Token, BinaryPoly modulus);

  const BinaryPoly& modulus() const noexcept { return modulus_; }
  int degree() const noexcept { return degree_; }
  std::uint64_t size() const noexcept { return group_order_ + 1; }
  std::uint64_t group_order() const noexcept { return group_order_; }

  // Raw residue arithmetic; inputs must already be reduced.
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept { return a ^ b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t square(std::uint64_t a) const noexcept { return mul(a, a); }
  std::uint64_t pow(std::uint64_t a, std::int64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const BinaryPoly& p) const;

  FieldElt element(std::uint64_t repr) const;
  FieldElt element(const BinaryPoly& p) const;
  FieldElt zero() const;
  FieldElt one() const;
  /// Residue class of the indeterminate.
  FieldElt x() const;

  /// Prime factors of 2^m - 1, computed once at construction.
  const std::vector<std::uint64_t>& group_order_factors() const noexcept { return factors_; }

  /// Shared table for (base, n); built on first request.
  const SubgroupLog& subgroup_log(std::uint64_t base, std::uint64_t n) const;

  bool same_field(const GaloisField& other) const noexcept { return modulus_ == other.modulus_; }

 private:
  BinaryPoly modulus_;
  std::uint64_t mod_bits_;
  std::uint64_t top_bit_;
  int degree_;
  std::uint64_t group_order_;
  std::vector<std::uint64_t> factors_;

  mutable std::mutex log_mutex_;
  mutable std::map<std::pair<std::uint64_t, std::uint64_t>, std::unique_ptr<SubgroupLog>> logs_;
};

/// Throws Error("reducible modulus") unless modulus is irreducible of degree 1..63.
FieldPtr make_field(const BinaryPoly& modulus);

/// Element of a GaloisField. Arithmetic between different fields throws Error("field mismatch").
class FieldElt {
 public:
  FieldElt(FieldPtr field, std::uint64_t repr);

  const FieldPtr& field() const noexcept { return field_; }
  std::uint64_t repr() const noexcept { return repr_; }
  BinaryPoly poly() const { return BinaryPoly(repr_); }
  bool is_zero() const noexcept { return repr_ == 0; }
  bool is_one() const noexcept { return repr_ == 1; }

  FieldElt operator+(const FieldElt& other) const;
  FieldElt operator*(const FieldElt& other) const;
  FieldElt inverse() const;
  /// Negative exponents are taken modulo the group order; requires a nonzero base.
  FieldElt pow(std::int64_t e) const;

  friend bool operator==(const FieldElt& a, const FieldElt& b) {
    return a.repr_ == b.repr_ && a.field_->same_field(*b.field_);
  }

 private:
  FieldPtr field_;
  std::uint64_t repr_;
};

/// Least t > 0 with a^t = 1. Throws for a = 0.
std::uint64_t element_order(const FieldElt& a);

/// Element of exact order n: x itself when x has order n, otherwise g^((2^m-1)/n)
/// for the first primitive g in increasing residue order.
FieldElt order_n_element(const FieldPtr& field, std::uint64_t n);

/// True when e^n = 1 and e^(n/p) != 1 for every prime p | n.
bool has_order(const FieldElt& e, std::uint64_t n);

/// Unique d in [0, n) with base^d = a.
std::uint64_t dlog(const FieldElt& a, const FieldElt& base, std::uint64_t n);

}  // namespace lfsrcrt

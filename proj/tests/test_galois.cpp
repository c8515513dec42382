#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "lfsrcrt/error.hpp"
#include "lfsrcrt/galois.hpp"
#include "lfsrcrt/numtheory.hpp"
#include "oracles.hpp"

using namespace lfsrcrt;

namespace {

const BinaryPoly kM30 = BinaryPoly::from_exponents({30, 25, 24, 20, 19, 17, 16, 13, 10, 9, 8, 7, 4, 2, 0});

BinaryPoly P(std::initializer_list<int> e) { return BinaryPoly::from_exponents(e); }

}  // namespace

TEST_CASE("binary polynomial arithmetic") {
  CHECK(P({1, 0}) * P({1, 0}) == P({2, 0}));
  CHECK(P({3, 1, 0}) % P({2, 1, 0}) == P({1}));
  CHECK(gcd(P({2, 1}), P({1})) == P({1}));
  CHECK(P({3, 1, 0}) + P({3, 2}) == P({2, 1, 0}));
  CHECK(BinaryPoly().degree() == -1);
  CHECK((P({70, 3}) * P({65, 1})).degree() == 135);

  auto [q, r] = divmod(P({3, 1, 0}), P({2, 1, 0}));
  CHECK(q * P({2, 1, 0}) + r == P({3, 1, 0}));

  CHECK_THROWS_WITH_AS(P({3}) % BinaryPoly(), "zero modulus", Error);
}

TEST_CASE("division identity on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const BinaryPoly a = BinaryPoly(rng()) * BinaryPoly(rng());
    const BinaryPoly b(rng() >> (rng() % 60));
    if (b.is_zero()) continue;
    const auto d = divmod(a, b);
    REQUIRE(d.remainder.degree() < b.degree());
    REQUIRE(d.quotient * b + d.remainder == a);
  }
}

TEST_CASE("polynomial parsing and formatting") {
  CHECK(BinaryPoly::parse("B") == P({3, 1, 0}));
  CHECK(BinaryPoly::parse("b") == P({3, 1, 0}));
  CHECK(BinaryPoly::parse("0xB") == P({3, 1, 0}));
  CHECK(BinaryPoly::parse("3,1,0") == P({3, 1, 0}));
  CHECK(BinaryPoly::parse(" 0, 1 ,3 ") == P({3, 1, 0}));
  CHECK(BinaryPoly::parse("431B2795") == kM30);
  CHECK(kM30.to_hex() == "431B2795");
  CHECK(P({3, 1, 0}).to_string() == "x^3 + x + 1");
  CHECK(BinaryPoly::parse(P({100, 64, 63, 0}).to_hex()) == P({100, 64, 63, 0}));
  CHECK_THROWS_AS(BinaryPoly::parse("xyz"), ParseError);
  CHECK_THROWS_AS(BinaryPoly::parse("3,-1"), ParseError);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(P({2, 1, 0})));
  CHECK_FALSE(is_irreducible(P({2, 0})));
  CHECK(is_irreducible(kM30));
  CHECK(oracle::irreducible_by_trial_division(kM30));
  CHECK_THROWS_WITH_AS(is_irreducible(BinaryPoly(1)), "degenerate degree", Error);

  SUBCASE("agrees with trial division for every polynomial of degree <= 9") {
    for (std::uint64_t bits = 2; bits < 1024; ++bits) {
      const BinaryPoly p(bits);
      REQUIRE(is_irreducible(p) == oracle::irreducible_by_trial_division(p));
    }
  }
}

TEST_CASE("primitive polynomial search is deterministic") {
  CHECK(find_primitive(2) == P({2, 1, 0}));
  CHECK(find_primitive(3) == P({3, 1, 0}));
  CHECK(find_primitive(4) == P({4, 1, 0}));
  CHECK(find_primitive(5) == P({5, 2, 0}));
  CHECK(find_irreducible(6) == P({6, 1, 0}));
}

TEST_CASE("field construction") {
  const FieldPtr f = make_field(P({3, 1, 0}));
  CHECK(f->size() == 8);
  CHECK(f->degree() == 3);
  CHECK_THROWS_WITH_AS(make_field(P({2, 0})), "reducible modulus", Error);

  const FieldPtr f5 = make_field(P({5, 2, 0}));
  CHECK(element_order(f5->x()) == 31);
}

TEST_CASE("element arithmetic") {
  const FieldPtr f = make_field(P({3, 1, 0}));
  const FieldElt x = f->x();
  CHECK(x.pow(3) == f->element(P({1, 0})));
  CHECK(x.pow(7).is_one());
  CHECK(x.pow(-1) * x == f->one());

  const FieldPtr f2 = make_field(P({2, 1, 0}));
  CHECK(f2->x() + f2->x().pow(2) == f2->one());

  CHECK_THROWS_WITH_AS(x * f2->x(), "field mismatch", Error);
  CHECK_THROWS_WITH_AS(f->zero().inverse(), "zero inverse", Error);

  // Distinct contexts over the same modulus are the same field.
  const FieldPtr again = make_field(P({3, 1, 0}));
  CHECK(x * again->x() == x.pow(2));
}

TEST_CASE("field axioms over every element of small fields") {
  for (const auto& mod : {P({2, 1, 0}), P({3, 1, 0}), P({4, 1, 0}), P({5, 2, 0}), P({6, 4, 2, 1, 0})}) {
    const FieldPtr f = make_field(mod);
    for (std::uint64_t a = 1; a < f->size(); ++a) {
      const FieldElt e(f, a);
      REQUIRE(e.pow(static_cast<std::int64_t>(f->group_order())).is_one());
      REQUIRE((e * e.inverse()).is_one());
      for (std::uint64_t b = 0; b < f->size(); b += 3) {
        const FieldElt g(f, b);
        REQUIRE((e + g).pow(2) == e.pow(2) + g.pow(2));  // Frobenius
      }
    }
  }
}

TEST_CASE("element order") {
  const FieldPtr f3 = make_field(P({3, 1, 0}));
  CHECK(element_order(f3->x()) == 7);
  CHECK(element_order(f3->one()) == 1);
  CHECK_THROWS_AS(element_order(f3->zero()), Error);

  const FieldPtr f30 = make_field(kM30);
  CHECK(element_order(f30->x()) == 651);
  CHECK(f30->x().pow(651).is_one());
  for (std::uint64_t p : {3, 7, 31}) CHECK_FALSE(f30->x().pow(static_cast<std::int64_t>(651 / p)).is_one());

  const FieldPtr f6 = make_field(P({6, 1, 0}));
  for (std::uint64_t a = 1; a < f6->size(); ++a) {
    const FieldElt e(f6, a);
    REQUIRE(element_order(e) == oracle::order_by_stepping(e));
  }
}

TEST_CASE("order-n elements") {
  const FieldPtr f3 = make_field(P({3, 1, 0}));
  CHECK(order_n_element(f3, 7) == f3->x());
  CHECK_THROWS_WITH_AS(order_n_element(f3, 5), "no order-n element", Error);

  const FieldPtr f6 = make_field(P({6, 4, 2, 1, 0}));
  const FieldElt e21 = order_n_element(f6, 21);
  CHECK(e21 == f6->x());
  CHECK(f6->x().pow(21).is_one());
  CHECK_FALSE(f6->x().pow(7).is_one());
  CHECK_FALSE(f6->x().pow(3).is_one());

  const FieldPtr f8 = make_field(find_irreducible(8));
  for (std::uint64_t n : {1, 3, 5, 15, 17, 51, 85, 255}) {
    const FieldElt e = order_n_element(f8, n);
    CHECK(has_order(e, n));
    CHECK(oracle::order_by_stepping(e) == n);
  }
}

TEST_CASE("discrete logarithm") {
  const FieldPtr f3 = make_field(P({3, 1, 0}));
  const FieldElt x = f3->x();
  CHECK(dlog(f3->one(), x, 7) == 0);
  CHECK(dlog(f3->element(P({2, 1})), x, 7) == 4);
  const FieldPtr f2 = make_field(P({2, 1, 0}));
  CHECK(dlog(f2->element(P({1, 0})), f2->x(), 3) == 2);

  CHECK_THROWS_WITH_AS(dlog(f3->zero(), x, 7), "zero has no logarithm", Error);
  const FieldPtr f4 = make_field(P({4, 1, 0}));
  const FieldElt g5 = order_n_element(f4, 5);
  CHECK_THROWS_WITH_AS(dlog(f4->x(), g5, 5), "not in subgroup", Error);

  SUBCASE("dlog inverts pow on the order-651 subgroup") {
    const FieldPtr f30 = make_field(kM30);
    const FieldElt g = f30->x();
    for (std::uint64_t d = 0; d < 2 * 651; d += 7) {
      REQUIRE(dlog(g.pow(static_cast<std::int64_t>(d)), g, 651) == d % 651);
    }
    CHECK(f30->subgroup_log(g.repr(), 651).size() == 651);
  }

  SUBCASE("agrees with enumeration") {
    for (std::uint64_t d = 0; d < 7; ++d) CHECK(oracle::dlog_by_enumeration(x.pow(d), x, 7) == dlog(x.pow(d), x, 7));
  }
}

TEST_CASE("logarithm tables are shared safely across threads") {
  const FieldPtr f = make_field(kM30);
  const FieldElt g = f->x();
  std::vector<std::thread> pool;
  std::vector<std::uint64_t> results(8, 0);
  for (std::size_t i = 0; i < results.size(); ++i) {
    pool.emplace_back([&, i] { results[i] = dlog(g.pow(static_cast<std::int64_t>(100 + i)), g, 651); });
  }
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < results.size(); ++i) CHECK(results[i] == 100 + i);
}

TEST_CASE("number theory helpers") {
  CHECK(prime_factors(651) == std::vector<std::uint64_t>{3, 7, 31});
  CHECK(prime_factors((std::uint64_t{1} << 32) - 1) == std::vector<std::uint64_t>{3, 5, 17, 257, 65537});
  CHECK(prime_factors((std::uint64_t{1} << 59) - 1) == std::vector<std::uint64_t>{179951, 3203431780337});
  CHECK(multiplicative_order_of_two(651) == 30);
  CHECK(multiplicative_order_of_two(21) == 6);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK_THROWS_WITH_AS(mod_inverse(3, 21), "index not invertible", Error);
  CHECK(mod_normalize(-11, 21) == 10);
}

#include <complex>
#include <random>

#include "doctest.h"
#include "ydkit/cyclotomic.hpp"
#include "ydkit/errors.hpp"
#include "ydkit/roots.hpp"

using namespace ydkit;

namespace {

// Floating-point evaluation straight from the coordinates, independent of Cyc::approx.
std::complex<double> numeric(const Cyc& x) {
  std::complex<double> acc = 0;
  const double pi = std::acos(-1.0);
  for (std::size_t j = 0; j < x.coords().size(); ++j)
    acc += x.coords()[j].get_d() * std::polar(1.0, 2 * pi * double(j) / double(x.order()));
  return acc;
}

Cyc random_element(std::mt19937_64& rng, unsigned n) {
  std::vector<mpq_class> c(euler_phi(n));
  for (auto& q : c) q = mpq_class(long(rng() % 11) - 5, long(rng() % 4) + 1);
  for (auto& q : c) q.canonicalize();
  return Cyc::from_coords(n, c);
}

Cyc half_one_plus_i() { return (Cyc(1) + Cyc::zeta(4)) / Cyc(2); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(105).size() == 49);
  CHECK(euler_phi(24) == 8);
  CHECK(euler_phi(105) == 48);
}

TEST_CASE("worked arithmetic examples") {
  const Cyc a = half_one_plus_i();
  const Cyc b = (Cyc(1) - Cyc::zeta(4)) / Cyc(2);
  CHECK(a * b == Cyc(mpq_class(1, 2)));
  CHECK((a * b).is_rational());
  CHECK(Cyc::zeta(3) + Cyc::zeta(3, 2) == Cyc(-1));
  CHECK(a.inv() == Cyc(1) - Cyc::zeta(4));
  CHECK(Cyc::zeta(8, 2) == Cyc::zeta(4));
  CHECK(Cyc::zeta(12, 3) == Cyc::zeta(4));
  CHECK_THROWS_AS(Cyc::zero(5).inv(), DivisionByZero);
}

TEST_CASE("mixed orders embed into the larger field") {
  const Cyc i = Cyc::zeta(4);
  const Cyc w = Cyc::zeta(3);
  CHECK_THROWS_AS(i + w, FieldMismatch);
  const Cyc i12 = i.embedded(12);
  const Cyc s = i12 + w;
  CHECK(s.order() == 12);
  CHECK(std::abs(numeric(s) - (numeric(i) + numeric(w))) < 1e-12);
  CHECK(Cyc(3) * i == i + i + i);
}

TEST_CASE("field axioms against floating-point evaluation") {
  std::mt19937_64 rng(7);
  for (unsigned n : {1u, 3u, 4u, 5u, 8u, 12u, 24u}) {
    for (int trial = 0; trial < 15; ++trial) {
      const Cyc a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      CHECK(std::abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-9);
      CHECK(std::abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-9);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * (b * c) == (a * b) * c);
      if (!a.is_zero()) CHECK(a * a.inv() == Cyc::one(n));
      CHECK(std::abs(numeric(a.conj()) - std::conj(numeric(a))) < 1e-9);
      CHECK(a.galois(1) == a);
    }
  }
}

TEST_CASE("text format round trip is bit exact") {
  std::mt19937_64 rng(11);
  for (unsigned n : {1u, 4u, 8u, 12u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Cyc a = random_element(rng, n);
      const Cyc back = Cyc::parse(a.str());
      CHECK(back == a);
      CHECK(back.str() == a.str());
    }
  }
  CHECK(Cyc::parse("1/2") == Cyc(mpq_class(1, 2)));
  CHECK(Cyc::parse("[1/2, 1/2]@4") == half_one_plus_i());
  CHECK(Cyc::parse("-3") == Cyc(-3));
  CHECK_THROWS_AS(Cyc::parse("[1, 2, 3]@4"), ParseError);
  CHECK_THROWS_AS(Cyc::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Cyc::parse("abc"), ParseError);
}

TEST_CASE("roots in field") {
  SUBCASE("x^2 + 1 over Q(i)") {
    const Poly p{Cyc::one(4), Cyc::zero(4), Cyc::one(4)};
    auto r = split_in_field(p);
    REQUIRE(r.size() == 2);
    for (const auto& fr : r) CHECK(fr.value * fr.value == Cyc(-1));
    CHECK(r[0].value != r[1].value);
  }
  SUBCASE("x^2 - x over Q") {
    auto r = split_in_field({Cyc(0), Cyc(-1), Cyc(1)});
    REQUIRE(r.size() == 2);
    CHECK(r[0].value == Cyc(0));
    CHECK(r[1].value == Cyc(1));
  }
  SUBCASE("x^2 + x + 1 over Q(zeta3)") {
    const Poly p{Cyc::one(3), Cyc::one(3), Cyc::one(3)};
    auto r = split_in_field(p);
    REQUIRE(r.size() == 2);
    CHECK(r[0].value + r[1].value == Cyc(-1));
  }
  SUBCASE("x^2 + 1 over Q does not split") {
    auto s = search_roots({Cyc(1), Cyc(0), Cyc(1)});
    CHECK(s.roots.empty());
    CHECK(s.uncertified.size() == 2);
    CHECK_THROWS_AS(split_in_field({Cyc(1), Cyc(0), Cyc(1)}), ReconstructionFailed);
  }
  SUBCASE("multiplicities") {
    // (x - 1/3)^3 (x + 2)
    Poly p{Cyc(1)};
    auto mul = [](const Poly& a, const Poly& b) {
      Poly c(a.size() + b.size() - 1);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
      return c;
    };
    for (int k = 0; k < 3; ++k) p = mul(p, {Cyc(mpq_class(-1, 3)), Cyc(1)});
    p = mul(p, {Cyc(2), Cyc(1)});
    auto r = split_in_field(p);
    REQUIRE(r.size() == 2);
    CHECK(r[0].value == Cyc(-2));
    CHECK(r[0].multiplicity == 1);
    CHECK(r[1].value == Cyc(mpq_class(1, 3)));
    CHECK(r[1].multiplicity == 3);
  }
  SUBCASE("products of random linear factors over Q(zeta24)") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Cyc> want;
      Poly p{Cyc::one(24)};
      for (int k = 0; k < 4; ++k) {
        Cyc r = random_element(rng, 24);
        want.push_back(r);
        Poly next(p.size() + 1, Cyc::zero(24));
        for (std::size_t i = 0; i < p.size(); ++i) {
          next[i + 1] += p[i];
          next[i] -= p[i] * r;
        }
        p = next;
      }
      auto got = split_in_field(p);
      unsigned total = 0;
      for (const auto& fr : got) {
        total += fr.multiplicity;
        CHECK(poly::eval(p, fr.value).is_zero());
        CHECK(std::find(want.begin(), want.end(), fr.value) != want.end());
      }
      CHECK(total == 4);
    }
  }
  SUBCASE("denominator bound rejects roots") {
    auto s = search_roots({Cyc(-1), Cyc(1000)}, 100);
    CHECK(s.roots.size() == 1);  // degree one is exact
    auto t = search_roots({Cyc(-1), Cyc(0), Cyc(1000000)}, 100);
    CHECK(t.roots.empty());
  }
}

#include <doctest.h>

#include <set>

#include "ydkit/catalog.hpp"
#include "ydkit/errors.hpp"
#include "ydkit/hopf.hpp"

using namespace ydkit;

namespace {

Cyc q(long a, long b = 1) { return Cyc(mpq_class(a, b)); }

// Rebuild a Hopf algebra with one product entry replaced.
HopfAlgebra with_product(const HopfAlgebra& h, std::size_t i, std::size_t j, Vec v) {
  auto mult = h.mult_table();
  mult[i * h.dim() + j] = std::move(v);
  return HopfAlgebra(h.names(), h.field(), mult, h.comult_table(), h.unit(), h.counit(), h.antipode());
}

// k[x]/x^2 with x primitive; not a bialgebra, only used to probe integrals.
HopfAlgebra dual_numbers() {
  std::vector<Vec> mult{unit_vec(2, 0), unit_vec(2, 1), unit_vec(2, 1), Vec(2)};
  Vec dx(4);
  dx[1] = q(1);
  dx[2] = q(1);
  std::vector<Vec> comult{unit_vec(4, 0), dx};
  Mat s(2, 2);
  s(0, 0) = q(1);
  s(1, 1) = q(-1);
  return HopfAlgebra({"1", "x"}, 1, mult, comult, unit_vec(2, 0), unit_vec(2, 0), s);
}

bool is_commutative(const HopfAlgebra& h) {
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (h.product(i, j) != h.product(j, i)) return false;
  return true;
}

bool is_cocommutative(const HopfAlgebra& h) {
  for (std::size_t k = 0; k < h.dim(); ++k)
    if (h.flip(h.coproduct(k)) != h.coproduct(k)) return false;
  return true;
}

std::vector<std::string> failing(const Report& r) {
  std::vector<std::string> out;
  for (const auto& e : r.entries)
    if (!e.passed && !e.informational && !e.skipped) out.push_back(e.id);
  return out;
}

}  // namespace

TEST_CASE("verify_hopf on group algebras and h8") {
  const CatalogEntry s3 = builtin("s3");
  const Report r = verify_hopf(s3.hopf);
  CHECK(r.ok());
  CHECK(failing(r).empty());
  REQUIRE(r.find("S2_id"));
  CHECK(r.find("S2_id")->passed);
  REQUIRE(r.find("unimodular"));
  CHECK(r.find("unimodular")->passed);
  CHECK_FALSE(r.find("unimodular")->skipped);
  CHECK(r.find("dual_unimodular")->passed);
  CHECK(r.find("semisimple")->passed);
  CHECK(r.find("cosemisimple")->passed);

  const CatalogEntry h8 = builtin("h8");
  const Report r8 = verify_hopf(h8.hopf);
  CHECK(failing(r8).empty());
  CHECK(r8.find("S2_id")->passed);
}

TEST_CASE("corrupted z^2 entry gives an associativity witness") {
  const HopfAlgebra h = builtin("h8").hopf;
  const std::size_t z = 4;
  Vec bad = h.product(z, z);
  bad[3] = -bad[3];  // flip the sign of the xy term
  const Report r = verify_hopf(with_product(h, z, z, bad));
  CHECK_FALSE(r.ok());
  const CheckEntry* e = r.find("assoc");
  REQUIRE(e);
  CHECK_FALSE(e->passed);
  CHECK(e->witness == std::vector<std::size_t>{4, 4, 1});
  CHECK(h.names()[e->witness[2]] == "x");
}

TEST_CASE("dual structures") {
  const HopfAlgebra z2 = builtin("z2").hopf;
  const HopfAlgebra d = dual(z2);
  CHECK(verify_hopf(d).ok());
  // kZ2* has orthogonal idempotents d_e, d_g; e_0 = (d_e + d_g), e_1 = (d_e - d_g) is a grouplike basis.
  Mat p(2, 2);
  p(0, 0) = q(1);
  p(1, 0) = q(1);
  p(0, 1) = q(1);
  p(1, 1) = q(-1);
  const Vec g0 = p.col(0), g1 = p.col(1);
  CHECK(d.mul(g1, g1) == g0);
  CHECK(d.comul(g1) == kron(Mat::from_columns({g1}, 2), Mat::from_columns({g1}, 2)).col(0));
  CHECK(d.eps(g1) == q(1));

  const HopfAlgebra s3 = builtin("s3").hopf;
  const HopfAlgebra ds3 = dual(s3);
  CHECK(is_commutative(ds3));
  CHECK_FALSE(is_cocommutative(ds3));
  CHECK(verify_hopf(ds3).ok());

  const HopfAlgebra h8 = builtin("h8").hopf;
  const HopfAlgebra d8 = dual(h8);
  CHECK(d8.dim() == 8);
  CHECK(verify_hopf(d8).ok());
  const HopfAlgebra dd = dual(d8);
  CHECK(dd.mult_table() == h8.mult_table());
  CHECK(dd.comult_table() == h8.comult_table());
  CHECK(dd.antipode() == h8.antipode());
}

TEST_CASE("harpoons") {
  const HopfAlgebra h8 = builtin("h8").hopf;
  const std::size_t n = h8.dim();
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(left_hit(h8, h8.counit(), h8.basis(k)) == h8.basis(k));
    CHECK(right_hit(h8, h8.basis(k), h8.counit()) == h8.basis(k));
    CHECK(coadjoint(h8, unit_vec(n, k), h8.unit()) == unit_vec(n, k));
  }
  // Delta z = ... pairs with d_z on the right leg: d_z -> z = 1/2 (z + yz).
  Vec want(n);
  want[4] = q(1, 2);
  want[6] = q(1, 2);
  CHECK(left_hit(h8, unit_vec(n, 4), h8.basis(4)) == want);

  // Group algebra oracle: (d_g <-<- h)(x) = d_g(h x h^-1), so the result is d_{h^-1 g h}.
  for (const char* name : {"z2", "s3"}) {
    const CatalogEntry e = builtin(name);
    const GroupTable& t = *e.group;
    const std::size_t m = t.order();
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t h = 0; h < m; ++h) {
        Vec oracle(m);
        for (std::size_t x = 0; x < m; ++x)
          if (t.mul[t.mul[h][x]][t.inverse(h)] == g) oracle[x] = q(1);
        CHECK(coadjoint(e.hopf, unit_vec(m, g), unit_vec(m, h)) == oracle);
        CHECK(oracle == unit_vec(m, t.mul[t.mul[t.inverse(h)][g]][h]));
      }
  }

  // Functional actions against their defining pairings.
  const Vec f = [&] {
    Vec v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = q(static_cast<long>(k * k) - 3, 1 + static_cast<long>(k));
    return v;
  }();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(pair(hit_functional_left(h8, h8.basis(a), f), h8.basis(x)) == pair(f, h8.product(x, a)));
      CHECK(pair(hit_functional_right(h8, f, h8.basis(a)), h8.basis(x)) == pair(f, h8.product(a, x)));
    }
}

TEST_CASE("integrals") {
  for (const char* name : {"z2", "z3", "s3", "q8"}) {
    const CatalogEntry e = builtin(name);
    const std::size_t m = e.hopf.dim();
    const IntegralData d = integrals(e.hopf);
    CHECK(d.Lambda == Vec(m, q(1, static_cast<long>(m))));
    CHECK(d.lambda == unit_vec(m, e.group->identity()));
    CHECK(d.unimodular);
    CHECK(d.dual_unimodular);
    CHECK(d.alpha == e.hopf.counit());
    CHECK(d.a == e.hopf.unit());
  }
  const HopfAlgebra h8 = builtin("h8").hopf;
  const IntegralData d = integrals(h8);
  CHECK(h8.eps(d.Lambda) == q(1));
  CHECK(pair(d.lambda, h8.unit()) == q(1));
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(h8.mul(h8.basis(i), d.Lambda) == h8.counit()[i] * d.Lambda);
    CHECK(h8.mul(d.Lambda, h8.basis(i)) == h8.counit()[i] * d.Lambda);
    Vec rhs = pair(d.lambda, h8.basis(i)) * h8.unit();
    CHECK(right_hit(h8, h8.basis(i), d.lambda) == rhs);
  }
  CHECK(d.unimodular);
  CHECK(d.dual_unimodular);
  CHECK_THROWS_AS(integrals(dual_numbers()), NonSemisimple);
}

TEST_CASE("grouplikes") {
  for (const char* name : {"z2", "z4", "s3", "d4", "q8"}) {
    const CatalogEntry e = builtin(name);
    const std::size_t m = e.hopf.dim();
    const auto gs = grouplikes(e.hopf.coalgebra(), &e.hopf.algebra(), {});
    REQUIRE(gs.size() == m);
    for (std::size_t k = 0; k < m; ++k) {
      CHECK(gs[k].g == unit_vec(m, k));
      const auto cls = e.group->centralizer(k);
      CHECK(gs[k].central == (cls.size() == m));
    }
  }
  const HopfAlgebra h8 = builtin("h8").hopf;
  const auto gs = grouplikes(h8.coalgebra(), &h8.algebra(), {});
  REQUIRE(gs.size() == 4);
  std::vector<std::size_t> central;
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(gs[k].g == unit_vec(8, k));
    if (gs[k].central) central.push_back(k);
  }
  CHECK(central == std::vector<std::size_t>{0, 3});
}

TEST_CASE("properties: antipode on grouplikes and duals") {
  for (const char* name : {"z2_minus", "z5", "s3", "d4", "h8"}) {
    const HopfAlgebra h = builtin(name).hopf;
    CHECK(verify_hopf(dual(h)).ok());
    const auto gs = grouplikes(h.coalgebra(), nullptr, {});
    std::set<std::vector<std::string>> before, after;
    for (const auto& g : gs) {
      CHECK(h.mul(h.S(g.g), g.g) == h.unit());
      CHECK(h.mul(g.g, h.S(g.g)) == h.unit());
      std::vector<std::string> a, b;
      for (const auto& c : g.g) a.push_back(c.str());
      for (const auto& c : h.S(h.S(g.g))) b.push_back(c.str());
      before.insert(a);
      after.insert(b);
    }
    CHECK(before == after);
  }
}

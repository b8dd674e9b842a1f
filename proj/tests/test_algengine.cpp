#include <array>
#include <map>
#include <set>

#include "doctest.h"
#include "ydkit/algebra.hpp"
#include "ydkit/errors.hpp"

using namespace ydkit;

namespace {

// Group algebra from a multiplication table; basis element 0 is the identity.
std::shared_ptr<FinAlgebra> group_alg(const std::vector<std::vector<int>>& table) {
  const std::size_t n = table.size();
  std::vector<Vec> mult;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult.push_back(unit_vec(n, table[i][j]));
  return std::make_shared<FinAlgebra>(n, mult, unit_vec(n, 0));
}

std::vector<std::vector<int>> cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

// S3 as permutations of {0,1,2}, listed with the identity first.
std::vector<std::vector<int>> s3() {
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = int(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

// Quaternion group: elements +-1, +-i, +-j, +-k encoded as sign * unit.
std::vector<std::vector<int>> q8() {
  // unit products: units 0=1,1=i,2=j,3=k; table[u][v] = (sign, unit)
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto idx = [](int s, int u) { return u * 2 + (s < 0 ? 1 : 0); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ua][ub];
      t[a][b] = idx(s, unit[ua][ub]);
    }
  return t;
}

std::shared_ptr<FinAlgebra> matrix_algebra(std::size_t k) {
  const std::size_t n = k * k;
  std::vector<Vec> mult;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // E_{pq} E_{rs} = [q == r] E_{ps}
      const std::size_t p = a / k, q = a % k, r = b / k, s = b % k;
      mult.push_back(q == r ? unit_vec(n, p * k + s) : zero_vec(n));
    }
  Vec unit(n);
  for (std::size_t i = 0; i < k; ++i) unit[i * k + i] = Cyc(1);
  return std::make_shared<FinAlgebra>(n, mult, unit);
}

std::shared_ptr<FinAlgebra> dual_numbers() {
  std::vector<Vec> mult{unit_vec(2, 0), unit_vec(2, 1), unit_vec(2, 1), zero_vec(2)};
  return std::make_shared<FinAlgebra>(2, mult, unit_vec(2, 0));
}

SplitOptions over(unsigned field, std::uint64_t seed = 0) {
  SplitOptions o;
  o.field = field;
  o.seed = seed;
  return o;
}

std::multiset<std::size_t> dims(const std::vector<Summand>& s) {
  std::multiset<std::size_t> out;
  for (const auto& x : s) out.insert(x.space.dim());
  return out;
}

// (dim, class size) multiset: independent of how classes are numbered.
std::multiset<std::pair<std::size_t, std::size_t>> class_profile(const std::vector<Summand>& s) {
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> per;
  for (const auto& x : s) {
    per[x.iso_class].first = x.space.dim();
    per[x.iso_class].second++;
  }
  std::multiset<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [k, v] : per) out.insert(v);
  return out;
}

void check_direct_sum(const AlgModule& m, const std::vector<Summand>& parts) {
  Subspace total(m.dim());
  std::size_t sum = 0;
  for (const auto& p : parts) {
    sum += p.space.dim();
    total = total.sum(p.space);
    for (const auto& op : m.action)
      for (const auto& v : p.space.basis_vectors()) CHECK(p.space.contains(op * v));
    CHECK_FALSE(find_submodule(restrict_ops(m.action, p.space), p.space.dim(), over(24)).has_value());
  }
  CHECK(sum == m.dim());
  CHECK(total.dim() == m.dim());
}

}  // namespace

TEST_CASE("algebra axioms of the fixtures") {
  for (auto a : {group_alg(cyclic(4)), group_alg(s3()), group_alg(q8()), matrix_algebra(2), dual_numbers()}) {
    CHECK_FALSE(a->associativity_witness().has_value());
    CHECK_FALSE(a->unit_witness().has_value());
    CHECK_FALSE(AlgModule::regular(a, Side::Left).axiom_witness().has_value());
    CHECK_FALSE(AlgModule::regular(a, Side::Right).axiom_witness().has_value());
  }
}

TEST_CASE("radical") {
  CHECK(radical(*matrix_algebra(2)).dim() == 0);
  CHECK(radical(*dual_numbers()) == Subspace::span(2, {unit_vec(2, 1)}));
  CHECK(radical(*group_alg(cyclic(3))).dim() == 0);
}

TEST_CASE("central primitive idempotents") {
  SUBCASE("discrete Fourier idempotents of Z/3") {
    auto a = group_alg(cyclic(3));
    auto es = central_primitive_idempotents(*a, over(3));
    REQUIRE(es.size() == 3);
    // Oracle: e_j = (1/3) sum_k zeta^{-jk} g^k.
    std::vector<Vec> want;
    for (int j = 0; j < 3; ++j) {
      Vec e(3);
      for (int k = 0; k < 3; ++k) e[k] = Cyc::zeta(3, -j * k) / Cyc(3);
      want.push_back(e);
    }
    for (const auto& w : want) CHECK(std::find(es.begin(), es.end(), w) != es.end());
  }
  SUBCASE("simple algebra has only the unit") {
    auto a = matrix_algebra(2);
    auto es = central_primitive_idempotents(*a, over(1));
    REQUIRE(es.size() == 1);
    CHECK(es[0] == a->unit());
  }
  SUBCASE("Q[Z/3] does not split") {
    CHECK_THROWS_AS(central_primitive_idempotents(*group_alg(cyclic(3)), over(1)), FieldNotSplitting);
  }
  SUBCASE("orthogonality and completeness") {
    for (auto [a, field] : std::vector<std::pair<std::shared_ptr<FinAlgebra>, unsigned>>{
             {group_alg(s3()), 3}, {group_alg(q8()), 4}, {group_alg(cyclic(6)), 6}}) {
      auto es = central_primitive_idempotents(*a, over(field));
      Vec sum(a->dim());
      std::size_t blocks = 0;
      for (std::size_t i = 0; i < es.size(); ++i) {
        sum = sum + es[i];
        blocks += rank(a->left_mult(es[i]));
        for (std::size_t j = 0; j < es.size(); ++j)
          CHECK(a->mul(es[i], es[j]) == (i == j ? es[i] : zero_vec(a->dim())));
        CHECK(a->center().contains(es[i]));
      }
      CHECK(sum == a->unit());
      CHECK(blocks == a->dim());
    }
  }
  SUBCASE("seed does not change the result") {
    auto a = group_alg(q8());
    CHECK(central_primitive_idempotents(*a, over(4, 0)) == central_primitive_idempotents(*a, over(4, 99)));
  }
}

TEST_CASE("module decomposition") {
  SUBCASE("regular module of Q(i)[Z/4]") {
    auto m = AlgModule::regular(group_alg(cyclic(4)), Side::Left);
    auto parts = decompose_module(m, over(4));
    CHECK(dims(parts) == std::multiset<std::size_t>{1, 1, 1, 1});
    check_direct_sum(m, parts);
    CHECK(class_profile(parts).size() == 4);
  }
  SUBCASE("regular module of S3: two copies of the 2-dim irreducible") {
    auto a = group_alg(s3());
    auto m = AlgModule::regular(a, Side::Right);
    auto parts = decompose_module(m, over(3));
    CHECK(dims(parts) == std::multiset<std::size_t>{1, 1, 2, 2});
    check_direct_sum(m, parts);
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(class_profile(parts) == std::multiset<P>{{1, 1}, {1, 1}, {2, 2}});
  }
  SUBCASE("Q8 over Q(i) splits, over Q it does not") {
    auto a = group_alg(q8());
    auto m = AlgModule::regular(a, Side::Left);
    auto parts = decompose_module(m, over(4));
    std::size_t sq = 0;
    std::map<std::size_t, std::size_t> by_class;
    for (const auto& p : parts) by_class[p.iso_class] = p.space.dim();
    for (const auto& [c, d] : by_class) sq += d * d;
    CHECK(sq == 8);
    CHECK(dims(parts) == std::multiset<std::size_t>{1, 1, 1, 1, 2, 2});
    check_direct_sum(m, parts);
    CHECK_THROWS_AS(decompose_module(m, over(1)), FieldNotSplitting);
  }
  SUBCASE("irreducible module is returned whole") {
    auto a = matrix_algebra(2);
    AlgModule m;
    m.algebra = a;
    for (std::size_t i = 0; i < 4; ++i) {
      Mat e(2, 2);
      e(i / 2, i % 2) = Cyc(1);
      m.action.push_back(e);
    }
    CHECK_FALSE(m.axiom_witness().has_value());
    auto parts = decompose_module(m, over(1));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].space == Subspace::full(2));
  }
  SUBCASE("seed independence of the class profile") {
    auto m = AlgModule::regular(group_alg(q8()), Side::Right);
    const auto base = class_profile(decompose_module(m, over(16, 0)));
    for (std::uint64_t seed : {1u, 7u, 12345u}) CHECK(class_profile(decompose_module(m, over(16, seed))) == base);
  }
  SUBCASE("non-semisimple module is refused") {
    auto m = AlgModule::regular(dual_numbers(), Side::Left);
    CHECK_THROWS_AS(decompose_module(m, over(1)), NonSemisimple);
    CHECK(find_submodule(m.action, 2, over(1)).has_value());
  }
}

TEST_CASE("hom spaces") {
  auto z2 = group_alg(cyclic(2));
  auto reg = AlgModule::regular(z2, Side::Left);
  CHECK(hom_space(reg, reg).dim() == 2);
  AlgModule triv{z2, Side::Left, {Mat::identity(1), Mat::identity(1)}};
  AlgModule sign{z2, Side::Left, {Mat::identity(1), Cyc(-1) * Mat::identity(1)}};
  CHECK(hom_space(triv, sign).dim() == 0);
  CHECK(hom_space(triv, triv).dim() == 1);
  CHECK_FALSE(find_isomorphism(triv, sign).has_value());
  CHECK(find_isomorphism(sign, sign).has_value());

  auto a = group_alg(s3());
  auto m = AlgModule::regular(a, Side::Left);
  auto parts = decompose_module(m, over(3));
  for (const auto& p : parts) {
    AlgModule sub{a, Side::Left, restrict_ops(m.action, p.space)};
    CHECK(hom_space(sub, sub).dim() == 1);
  }
  // Regular module is its own endomorphism ring's dual size: dim End = dim A for kG.
  CHECK(hom_space(m, m).dim() == 6);
}

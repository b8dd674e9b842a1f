#include "ydkit/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ydkit/errors.hpp"

namespace ydkit {

void GroupTable::validate() const {
  const std::size_t n = order();
  if (n == 0) throw NotAGroup(name + ": empty table");
  if (names.size() != n) throw NotAGroup(name + ": name list does not match the table size");
  for (const auto& row : mul) {
    if (row.size() != n) throw NotAGroup(name + ": table is not square");
    for (std::size_t v : row)
      if (v >= n) throw NotAGroup(name + ": product index out of range");
  }
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = mul[a][b] == b && mul[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw NotAGroup(name + ": no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw NotAGroup(name + ": not associative at (" + names[a] + ", " + names[b] + ", " + names[c] + ")");
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = mul[a][b] == *e && mul[b][a] == *e;
    if (!found) throw NotAGroup(name + ": " + names[a] + " has no inverse");
  }
}

std::size_t GroupTable::identity() const {
  for (std::size_t a = 0; a < order(); ++a)
    if (mul[a][a] == a) return a;
  throw NotAGroup(name + ": no identity element");
}

std::size_t GroupTable::inverse(std::size_t g) const {
  const std::size_t e = identity();
  for (std::size_t b = 0; b < order(); ++b)
    if (mul[g][b] == e) return b;
  throw NotAGroup(name + ": " + names[g] + " has no inverse");
}

std::size_t GroupTable::element_order(std::size_t g) const {
  const std::size_t e = identity();
  std::size_t k = 1, x = g;
  while (x != e) {
    x = mul[x][g];
    ++k;
  }
  return k;
}

std::size_t GroupTable::exponent() const {
  std::size_t m = 1;
  for (std::size_t g = 0; g < order(); ++g) m = std::lcm(m, element_order(g));
  return m;
}

std::vector<std::vector<std::size_t>> GroupTable::conjugacy_classes() const {
  std::vector<int> seen(order(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t g = 0; g < order(); ++g) {
    if (seen[g]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < order(); ++h) {
      const std::size_t c = mul[mul[h][g]][inverse(h)];
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::size_t> GroupTable::centralizer(std::size_t g) const {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < order(); ++h)
    if (mul[h][g] == mul[g][h]) out.push_back(h);
  return out;
}

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw NotAGroup("cyclic group of order 0");
  GroupTable t{"Z" + std::to_string(n), {}, {}};
  for (std::size_t a = 0; a < n; ++a) {
    t.names.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
    std::vector<std::size_t> row;
    for (std::size_t b = 0; b < n; ++b) row.push_back((a + b) % n);
    t.mul.push_back(std::move(row));
  }
  return t;
}

GroupTable symmetric_group3() {
  const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  GroupTable t{"S3", {"e", "(12)", "(23)", "(13)", "(123)", "(132)"}, {}};
  for (const auto& p : perms) {
    std::vector<std::size_t> row;
    for (const auto& q : perms) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = p[q[k]];
      row.push_back(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
    t.mul.push_back(std::move(row));
  }
  return t;
}

GroupTable dihedral_group4() {
  // r^a s^b at index 4b + a, with s r = r^-1 s.
  GroupTable t{"D4", {"1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"}, {}};
  for (std::size_t x = 0; x < 8; ++x) {
    std::vector<std::size_t> row;
    const std::size_t a = x % 4, b = x / 4;
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t c = y % 4, d = y / 4;
      const std::size_t rot = (a + (b ? 4 - c : c)) % 4;
      row.push_back(((b + d) % 2) * 4 + rot);
    }
    t.mul.push_back(std::move(row));
  }
  return t;
}

GroupTable quaternion_group() {
  // +-u at index 2u (+) and 2u + 1 (-), units 1, i, j, k.
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  GroupTable t{"Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, {}};
  for (int a = 0; a < 8; ++a) {
    std::vector<std::size_t> row;
    for (int b = 0; b < 8; ++b) {
      const int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[a / 2][b / 2];
      row.push_back(static_cast<std::size_t>(unit[a / 2][b / 2] * 2 + (s < 0 ? 1 : 0)));
    }
    t.mul.push_back(std::move(row));
  }
  return t;
}

CatalogEntry group_algebra(const GroupTable& g, unsigned field) {
  g.validate();
  const std::size_t n = g.order();
  if (field == 0) field = static_cast<unsigned>(4 * g.exponent());
  std::vector<Vec> mult, comult;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult.push_back(unit_vec(n, g.mul[a][b]));
  for (std::size_t a = 0; a < n; ++a) comult.push_back(unit_vec(n * n, a * n + a));
  Mat s(n, n);
  for (std::size_t a = 0; a < n; ++a) s(g.inverse(a), a) = Cyc(1);
  const std::size_t e = g.identity();
  Vec counit(n, Cyc(1));
  HopfAlgebra h(g.names, field, std::move(mult), std::move(comult), unit_vec(n, e), std::move(counit), std::move(s));
  return {g.name, std::move(h), unit_vec(n * n, e * n + e), g};
}

CatalogEntry kac_paljutkin() {
  // Basis index 4e + k for k z^e, k in the Klein group {1, x, y, xy} coded by bits (x = 1, y = 2).
  const std::size_t n = 8;
  auto swap_xy = [](std::size_t k) { return ((k & 1) << 1) | ((k >> 1) & 1); };
  const Cyc half(mpq_class(1, 2));
  Vec z2(n);  // z^2 = 1/2 (1 + x + y - xy)
  z2[0] = half;
  z2[1] = half;
  z2[2] = half;
  z2[3] = -half;

  std::vector<Vec> mult;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ea = a / 4, ka = a % 4, eb = b / 4, kb = b % 4;
      const std::size_t k = ka ^ (ea ? swap_xy(kb) : kb);
      Vec v(n);
      if (ea + eb < 2) {
        v[(ea + eb) * 4 + k] = Cyc(1);
      } else {
        for (std::size_t t = 0; t < 4; ++t)
          if (!z2[t].is_zero()) v[k ^ t] += z2[t];
      }
      mult.push_back(std::move(v));
    }

  std::vector<Vec> comult;
  for (std::size_t a = 0; a < n; ++a) {
    Vec v(n * n);
    const std::size_t e = a / 4, k = a % 4;
    if (e == 0) {
      v[a * n + a] = Cyc(1);
    } else {
      // Delta(k z) = 1/2 (kz x kz + kz x kxz + kyz x kz - kyz x kxz)
      const std::size_t kz = 4 + k, kxz = 4 + (k ^ 1), kyz = 4 + (k ^ 2);
      v[kz * n + kz] += half;
      v[kz * n + kxz] += half;
      v[kyz * n + kz] += half;
      v[kyz * n + kxz] -= half;
    }
    comult.push_back(std::move(v));
  }

  Mat s(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t e = a / 4, k = a % 4;
    s(e ? 4 + swap_xy(k) : k, a) = Cyc(1);  // S(k z) = z k = swap(k) z
  }
  HopfAlgebra h({"1", "x", "y", "xy", "z", "xz", "yz", "xyz"}, 4, std::move(mult), std::move(comult), unit_vec(n, 0),
                Vec(n, Cyc(1)), std::move(s));
  // R = 1/2 (1x1 + 1xx + yx1 - yxx)
  Vec r(n * n);
  r[0 * n + 0] = half;
  r[0 * n + 1] = half;
  r[2 * n + 0] = half;
  r[2 * n + 1] = -half;
  return {"h8", std::move(h), std::move(r), std::nullopt};
}

CatalogEntry z2_minus() {
  CatalogEntry e = group_algebra(cyclic_group(2));
  const Cyc half(mpq_class(1, 2));
  Vec r(4);
  r[0] = half;
  r[1] = half;
  r[2] = half;
  r[3] = -half;
  e.name = "z2_minus";
  e.R = std::move(r);
  return e;
}

namespace {

HopfAlgebra with_field(const HopfAlgebra& h, unsigned field) {
  return HopfAlgebra(h.names(), field, h.mult_table(), h.comult_table(), h.unit(), h.counit(), h.antipode());
}

std::optional<unsigned long> cyclic_order(std::string_view name) {
  if (name.size() < 2 || name[0] != 'z') return std::nullopt;
  std::string_view digits = name.substr(name[1] == '_' ? 2 : 1);
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  return std::stoul(std::string(digits));
}

}  // namespace

CatalogEntry builtin(std::string_view name, unsigned field) {
  CatalogEntry e;
  if (name == "h8") {
    e = kac_paljutkin();
  } else if (name == "z2_minus") {
    e = z2_minus();
  } else if (name == "s3") {
    e = group_algebra(symmetric_group3());
  } else if (name == "d4") {
    e = group_algebra(dihedral_group4());
  } else if (name == "q8") {
    e = group_algebra(quaternion_group());
  } else if (cyclic_order(name)) {
    const unsigned long n = *cyclic_order(name);
    if (n == 0 || n > 64) throw ParseError("cyclic builtin order out of range: " + std::string(name));
    e = group_algebra(cyclic_group(n));
    e.name = "z" + std::to_string(n);
  } else {
    throw ParseError("unknown builtin: " + std::string(name));
  }
  if (e.name == "Z2" || e.name == "S3" || e.name == "D4" || e.name == "Q8") {
    std::string lower = e.name;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    e.name = lower;
  }
  if (field != 0) e.hopf = with_field(e.hopf, field);
  return e;
}

std::vector<std::string> builtin_names() { return {"z2", "z2_minus", "z3", "z4", "z5", "z6", "s3", "d4", "q8", "h8"}; }

}  // namespace ydkit

#pragma once

#include <cstdint>
#include <vector>

#include "ydkit/cyclotomic.hpp"

namespace ydkit {

inline constexpr std::int64_t kDefaultMaxDen = std::int64_t{1} << 16;

/// Univariate polynomial over a cyclotomic field, coefficients low to high.
using Poly = std::vector<Cyc>;

namespace poly {

void trim(Poly& p);
/// Degree of a trimmed polynomial; -1 for the zero polynomial.
int degree(const Poly& p);
Cyc eval(const Poly& p, const Cyc& x);
Poly derivative(const Poly& p);
Poly monic(Poly p);
/// Quotient and remainder of a / b (b nonzero).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic greatest common divisor.
Poly gcd(Poly a, Poly b);
/// Order of the smallest cyclotomic field holding every coefficient as given.
unsigned field_order(const Poly& p);

}  // namespace poly

struct FieldRoot {
  Cyc value;
  unsigned multiplicity = 0;
};

/// Outcome of a root search: certified roots plus indices (into the numeric
/// root list of the squarefree part) of roots that failed certification.
struct RootSearch {
  std::vector<FieldRoot> roots;
  std::vector<std::size_t> uncertified;
};

/// Roots of p lying in Q(zeta_n), n = lcm(field, orders of the coefficients).
///
/// Distinct roots of the squarefree part are located numerically at the
/// embedding zeta -> exp(2 pi i / n); each is turned into field coordinates by
/// an integer-relation search and kept only after p(root) = 0 holds exactly.
/// Coordinates with denominator above `max_den` are rejected. Output order is
/// canonical (see compare()).
RootSearch search_roots(const Poly& p, std::int64_t max_den = kDefaultMaxDen, unsigned field = 1);

/// Certified roots only; never fails because the field does not split p.
std::vector<FieldRoot> find_roots_in_field(const Poly& p, std::int64_t max_den = kDefaultMaxDen,
                                           unsigned field = 1);

/// Like find_roots_in_field, but throws ReconstructionFailed when some
/// complex root of p is not certified in the field.
std::vector<FieldRoot> split_in_field(const Poly& p, std::int64_t max_den = kDefaultMaxDen, unsigned field = 1);

}  // namespace ydkit

#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ydkit {

namespace detail {

/// Immutable data of Q(zeta_n): phi(n) and the n-th cyclotomic polynomial.
struct CycloContext {
  unsigned order;
  std::size_t degree;
  std::vector<long long> modulus;  // monic, low to high, length degree + 1
};

const CycloContext& cyclo_context(unsigned n);

}  // namespace detail

/// n-th cyclotomic polynomial, coefficients low to high.
std::vector<long long> cyclotomic_polynomial(unsigned n);
unsigned euler_phi(unsigned n);

/// Element of the cyclotomic field Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
///
/// Elements of different orders combine when one field embeds in the other
/// (m | n); the result lives in the larger field. Rational values (order 1)
/// therefore act as scalars everywhere.
class Cyc {
 public:
  Cyc();
  Cyc(int v) : Cyc(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Cyc(long v);  // NOLINT(google-explicit-constructor)
  Cyc(const mpq_class& q);  // NOLINT(google-explicit-constructor)

  static Cyc zeta(unsigned n, long k = 1);
  static Cyc from_coords(unsigned n, std::vector<mpq_class> coords);
  static Cyc zero(unsigned n);
  static Cyc one(unsigned n);

  unsigned order() const { return ctx_->order; }
  std::size_t degree() const { return ctx_->degree; }
  const std::vector<mpq_class>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Coefficient of 1; equals the value when is_rational().
  const mpq_class& constant_term() const { return c_[0]; }

  /// Same value viewed in Q(zeta_n); requires order() | n.
  Cyc embedded(unsigned n) const;
  /// Galois automorphism zeta -> zeta^k (gcd(k, n) = 1).
  Cyc galois(long k) const;
  /// Complex conjugation, zeta -> zeta^{-1}.
  Cyc conj() const { return galois(-1); }
  Cyc inv() const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);
  Cyc operator-() const;

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// acc -= a * b without materializing more temporaries than needed.
  friend void submul(Cyc& acc, const Cyc& a, const Cyc& b);
  friend void addmul(Cyc& acc, const Cyc& a, const Cyc& b);

  /// Total bit size of all numerators and denominators (pivot heuristic).
  std::size_t height() const;

  /// "a/b" when rational, otherwise "[c0, c1, ...]@n".
  std::string str() const;
  static Cyc parse(std::string_view text);

  std::complex<double> approx() const;

 private:
  explicit Cyc(const detail::CycloContext* ctx);
  void reduce_from(std::vector<mpq_class>&& poly);
  static const detail::CycloContext* common(const Cyc& a, const Cyc& b);

  const detail::CycloContext* ctx_;
  std::vector<mpq_class> c_;
};

/// Lexicographic order on coordinates (after embedding into a common field);
/// used only to make outputs canonical.
int compare(const Cyc& a, const Cyc& b);

std::ostream& operator<<(std::ostream& os, const Cyc& x);

}  // namespace ydkit

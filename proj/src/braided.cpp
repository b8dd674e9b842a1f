#include "ydkit/braided.hpp"

#include "ydkit/errors.hpp"

namespace ydkit {

namespace {

std::vector<std::size_t> digits(std::size_t idx, std::size_t legs, std::size_t n) {
  std::vector<std::size_t> d(legs);
  for (std::size_t l = legs; l-- > 0;) {
    d[l] = idx % n;
    idx /= n;
  }
  return d;
}

// Witness of a failed tensor identity: the leg indices of the first differing coordinate.
std::vector<std::size_t> diff_witness(const Vec& a, const Vec& b, std::size_t legs, std::size_t n) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return digits(i, legs, n);
  return {};
}

// x in H (x) H placed on legs (p, q) of H^(x)3, the remaining leg carrying 1.
Vec embed3(const HopfAlgebra& h, const Vec& x, std::size_t p, std::size_t q) {
  const std::size_t n = h.dim();
  const std::size_t other = 3 - p - q;
  Vec out(n * n * n);
  const Terms one = nonzeros(h.unit());
  for (const auto& [ab, c] : nonzeros(x))
    for (const auto& [e, ce] : one) {
      std::size_t d[3];
      d[p] = ab / n;
      d[q] = ab % n;
      d[other] = e;
      out[(d[0] * n + d[1]) * n + d[2]] += c * ce;
    }
  return out;
}

Vec one2(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Vec out(n * n);
  for (const auto& [a, ca] : nonzeros(h.unit()))
    for (const auto& [b, cb] : nonzeros(h.unit())) out[a * n + b] = ca * cb;
  return out;
}

// Left multiplication by x in H (x) H as an n^2 x n^2 matrix.
Mat tensor_left_mult(const HopfAlgebra& h, const Vec& x) {
  const std::size_t m = h.dim() * h.dim();
  Mat l(m, m);
  for (std::size_t cd = 0; cd < m; ++cd) l.set_col(cd, h.tensor_mul(x, unit_vec(m, cd), 2));
  return l;
}

Vec contract_left(const HopfAlgebra& h, const Vec& f, const Vec& x) {
  const std::size_t n = h.dim();
  Vec out(n);
  for (const auto& [ab, c] : nonzeros(x))
    if (!f[ab / n].is_zero()) addmul(out[ab % n], c, f[ab / n]);
  return out;
}

Vec contract_right(const HopfAlgebra& h, const Vec& x, const Vec& f) {
  const std::size_t n = h.dim();
  Vec out(n);
  for (const auto& [ab, c] : nonzeros(x))
    if (!f[ab % n].is_zero()) addmul(out[ab / n], c, f[ab % n]);
  return out;
}

}  // namespace

QTHopf::QTHopf(HopfAlgebra h, Vec R) : h_(std::move(h)), r_(std::move(R)) {
  const std::size_t n = h_.dim();
  if (r_.size() != n * n) throw DimensionMismatch("R-matrix must have dim^2 coordinates");
  r_t_ = nonzeros(r_);

  auto inv = solve(tensor_left_mult(h_, r_), one2(h_));
  if (!inv || h_.tensor_mul(*inv, r_, 2) != one2(h_))
    throw VerifyError("R_invertible", {}, "R is not invertible in H (x) H");
  rinv_ = std::move(*inv);

  u_.assign(n, Cyc());
  for (const auto& [pq, c] : r_t_) axpy(u_, c, h_.mul(h_.S(h_.basis(pq % n)), h_.basis(pq / n)));
  auto ui = solve(h_.algebra().left_mult(u_), h_.unit());
  if (!ui || h_.mul(*ui, u_) != h_.unit()) throw VerifyError("drinfeld_u", {}, "Drinfeld element is not invertible");
  u_inv_ = std::move(*ui);

  // Products b_a S(b_q) and adjoint images are reused across k.
  const auto& ad = h_.adjoint_matrices();
  dr_.assign(n, Vec(n * n));
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [ab, c] : h_.coproduct_terms(k)) {
      const std::size_t a = ab / n, b = ab % n;
      for (const auto& [pq, r] : r_t_) {
        const std::size_t p = pq / n, q = pq % n;
        const Vec left = h_.mul(h_.basis(a), h_.S(h_.basis(q)));
        const Vec right = ad[p].col(b);
        const Cyc cr = c * r;
        for (const auto& [i, li] : nonzeros(left))
          for (const auto& [j, rj] : nonzeros(right)) addmul(dr_[k][i * n + j], cr, li * rj);
      }
    }
    dr_t_.push_back(nonzeros(dr_[k]));
  }

  sr_ = Mat(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec col(n);
    for (const auto& [pq, r] : r_t_)
      axpy(col, r, h_.mul(h_.basis(pq % n), h_.S(ad[pq / n].col(k))));
    sr_.set_col(k, col);
  }
}

Vec QTHopf::delta_R(const Vec& h) const {
  Vec out(dim() * dim());
  for (const auto& [k, c] : nonzeros(h))
    for (const auto& [ab, d] : dr_t_[k]) addmul(out[ab], c, d);
  return out;
}

Report verify_qt(const QTHopf& q) {
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim();
  const Vec& R = q.R();
  Report rep;

  rep.add("R_invertible", h.tensor_mul(R, q.Rinv(), 2) == one2(h) && h.tensor_mul(q.Rinv(), R, 2) == one2(h), {},
          "R Rinv = 1 (x) 1 = Rinv R");
  {
    std::vector<std::size_t> w;
    for (std::size_t k = 0; k < n && w.empty(); ++k)
      if (h.tensor_mul(R, h.coproduct(k), 2) != h.tensor_mul(h.flip(h.coproduct(k)), R, 2)) w = {k};
    rep.add("QT1", w.empty(), w, "R Delta(h) = Delta^op(h) R");
  }
  const Vec r12 = embed3(h, R, 0, 1), r13 = embed3(h, R, 0, 2), r23 = embed3(h, R, 1, 2);
  {
    const Vec lhs = h.comul_leg(R, 2, 0), rhs = h.tensor_mul(r13, r23, 3);
    rep.add("QT2", lhs == rhs, diff_witness(lhs, rhs, 3, n), "(Delta x id) R = R13 R23");
  }
  {
    const Vec lhs = h.comul_leg(R, 2, 1), rhs = h.tensor_mul(r13, r12, 3);
    rep.add("QT3", lhs == rhs, diff_witness(lhs, rhs, 3, n), "(id x Delta) R = R13 R12");
  }
  {
    const Vec lhs = h.tensor_mul(h.tensor_mul(r12, r13, 3), r23, 3);
    const Vec rhs = h.tensor_mul(h.tensor_mul(r23, r13, 3), r12, 3);
    rep.add("QYBE", lhs == rhs, diff_witness(lhs, rhs, 3, n), "R12 R13 R23 = R23 R13 R12");
  }
  {
    const Vec ss = h.apply_leg(h.apply_leg(R, 2, 0, h.antipode()), 2, 1, h.antipode());
    rep.add("S_S", ss == R, diff_witness(ss, R, 2, n), "(S x S) R = R");
    const Vec sid = h.apply_leg(R, 2, 0, h.antipode());
    rep.add("S_id", sid == q.Rinv(), diff_witness(sid, q.Rinv(), 2, n), "(S x id) R = R^-1");
    const auto sinv = inverse(h.antipode());
    if (sinv) {
      const Vec idsb = h.apply_leg(R, 2, 1, *sinv);
      rep.add("id_Sbar", idsb == q.Rinv(), diff_witness(idsb, q.Rinv(), 2, n), "(id x S^-1) R = R^-1");
    } else {
      rep.add("id_Sbar", false, {}, "antipode is not invertible");
    }
  }
  rep.add("eps_left", contract_left(h, h.counit(), R) == h.unit(), {}, "(eps x id) R = 1");
  rep.add("eps_right", contract_right(h, R, h.counit()) == h.unit(), {}, "(id x eps) R = 1");
  {
    std::vector<std::size_t> w;
    const Mat s2 = h.antipode() * h.antipode();
    for (std::size_t k = 0; k < n && w.empty(); ++k)
      if (h.mul(h.mul(q.u(), h.basis(k)), q.u_inv()) != s2.col(k)) w = {k};
    rep.add("drinfeld_u", w.empty(), w, "S^2(h) = u h u^-1");
  }

  const Coalgebra cr = q.coalgebra_R();
  {
    auto w = cr.coassociativity_witness();
    rep.add("deltaR_coassoc", !w, w ? std::vector<std::size_t>{*w} : std::vector<std::size_t>{},
            "Delta_R is coassociative");
    auto wc = cr.counit_witness();
    rep.add("deltaR_counit", !wc, wc ? std::vector<std::size_t>{*wc} : std::vector<std::size_t>{},
            "(eps x id) Delta_R = id = (id x eps) Delta_R");
  }
  const auto& ad = h.adjoint_matrices();
  {
    std::vector<std::size_t> w;
    for (std::size_t j = 0; j < n && w.empty(); ++j)
      for (std::size_t i = 0; i < n && w.empty(); ++i) {
        const Vec lhs = q.delta_R(ad[i].col(j));
        Vec rhs(n * n);
        for (const auto& [ab, c] : h.coproduct_terms(i))
          axpy(rhs, c, h.apply_leg(h.apply_leg(q.delta_R(j), 2, 0, ad[ab / n]), 2, 1, ad[ab % n]));
        if (lhs != rhs) w = {i, j};
      }
    rep.add("eqc", w.empty(), w, "Delta_R(h .ad a) = sum h1 .ad a^(1) (x) h2 .ad a^(2)");
  }
  {
    // Delta_R(h) = sum R2 .ad h2 (x) R1 h1
    std::vector<std::size_t> w;
    for (std::size_t k = 0; k < n && w.empty(); ++k) {
      Vec alt(n * n);
      for (const auto& [ab, c] : h.coproduct_terms(k))
        for (const auto& [pq, r] : q.R_terms()) {
          const Vec left = ad[pq % n].col(ab % n);
          const Vec right = h.product(pq / n, ab / n);
          for (const auto& [i, li] : nonzeros(left))
            for (const auto& [j, rj] : nonzeros(right)) addmul(alt[i * n + j], c * r, li * rj);
        }
      if (alt != q.delta_R(k)) w = {k};
    }
    rep.add("deltaR_alt", w.empty(), w, "Delta_R agrees with sum R2 .ad h2 (x) R1 h1");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t k = 0; k < n && w.empty(); ++k) {
      Vec l(n), r(n);
      for (const auto& [ab, c] : q.delta_R_terms(k)) {
        axpy(l, c, h.mul(q.S_R().col(ab / n), h.basis(ab % n)));
        axpy(r, c, h.mul(h.basis(ab / n), q.S_R().col(ab % n)));
      }
      const Vec want = h.counit()[k] * h.unit();
      if (l != want || r != want) w = {k};
    }
    rep.add("SR_antipode", w.empty(), w, "m(S_R x id) Delta_R = 1 eps = m(id x S_R) Delta_R");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t b = 0; b < n && w.empty(); ++b)
      for (std::size_t a = 0; a < n && w.empty(); ++a) {
        const Vec f = unit_vec(n, a), g = unit_vec(n, b);
        if (convolution_R(q, f, g) != convolution_R_dual(q, f, g)) w = {a, b};
      }
    rep.add("starR_dual", w.empty(), w, "*_R is the convolution dual to Delta_R");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t k = 0; k < n && w.empty(); ++k)
      for (std::size_t b = 0; b < n && w.empty(); ++b)
        for (std::size_t a = 0; a < n && w.empty(); ++a) {
          const Vec f = unit_vec(n, a), g = unit_vec(n, b);
          const Vec lhs = coadjoint(h, convolution_R_dual(q, f, g), h.basis(k));
          Vec rhs(n);
          for (const auto& [cd, c] : h.coproduct_terms(k))
            axpy(rhs, c,
                 convolution_R_dual(q, coadjoint(h, f, h.basis(cd / n)), coadjoint(h, g, h.basis(cd % n))));
          if (lhs != rhs) w = {a, b, k};
        }
    rep.add("coadjoint_compat", w.empty(), w, "(f *_R g) <-<- h = sum (f <-<- h1) *_R (g <-<- h2)");
  }
  return rep;
}

QTHopf make_qt(HopfAlgebra h, Vec R) {
  QTHopf q(std::move(h), std::move(R));
  const Report rep = verify_qt(q);
  if (const CheckEntry* e = rep.first_failure())
    throw VerifyError(e->id, e->witness, "R-matrix check failed: " + e->id + " (" + e->detail + ")");
  return q;
}

AlgModule adjoint_action(const QTHopf& q) {
  return AlgModule{q.hopf().algebra_ptr(), Side::Left, q.hopf().adjoint_matrices()};
}

Vec convolution_R(const QTHopf& q, const Vec& f, const Vec& g) {
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim();
  Vec out(n);
  for (const auto& [pq, r] : q.R_terms()) {
    const Vec sr2 = h.S(h.basis(pq % n));
    axpy(out, r, convolve(h, hit_functional_left(h, sr2, f), coadjoint(h, g, h.basis(pq / n))));
  }
  return out;
}

Vec convolution_R_dual(const QTHopf& q, const Vec& f, const Vec& g) {
  const std::size_t n = q.dim();
  Vec out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [ab, c] : q.delta_R_terms(k)) {
      const Cyc& fa = f[ab / n];
      const Cyc& gb = g[ab % n];
      if (!fa.is_zero() && !gb.is_zero()) addmul(out[k], c * fa, gb);
    }
  return out;
}

FinAlgebra dual_algebra_R(const QTHopf& q) { return q.coalgebra_R().dual_algebra(); }

Mat separable_idempotent(const QTHopf& q, const Vec& lambda) {
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim();
  const Mat st = h.antipode().transpose();
  Mat e(n, n);
  // lambda_(1) (x) lambda_(2) has coefficient lambda(b_a b_b) on d_a (x) d_b.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Cyc l = pair(lambda, h.product(a, b));
      if (l.is_zero()) continue;
      const Vec sb = st * unit_vec(n, b);
      for (const auto& [pq, r] : q.R_terms()) {
        const Vec left = hit_functional_left(h, h.basis(pq % n), unit_vec(n, a));
        const Vec right = coadjoint(h, sb, h.basis(pq / n));
        const Cyc c = l * r;
        for (const auto& [i, li] : nonzeros(left))
          for (const auto& [j, rj] : nonzeros(right)) addmul(e(i, j), c, li * rj);
      }
    }
  return e;
}

Report check_separable_idempotent(const QTHopf& q) {
  Report rep;
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim();
  const bool cosemisimple = radical(h.coalgebra().dual_algebra()).dim() == 0;
  std::optional<IntegralData> d;
  try {
    d = integrals(h);
  } catch (const NonSemisimple&) {
  }
  if (!cosemisimple || !d || !d->unimodular) {
    rep.skip("eR_part1", "hypothesis unmet: needs H cosemisimple and unimodular");
    rep.skip("eR_part2", "hypothesis unmet: needs H cosemisimple and unimodular");
    return rep;
  }
  const Mat e = separable_idempotent(q, d->lambda);

  Vec collapse(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!e(a, b).is_zero()) axpy(collapse, e(a, b), convolution_R_dual(q, unit_vec(n, a), unit_vec(n, b)));
  rep.add("eR_part1", collapse == h.counit(), {}, "sum e1 *_R e2 = eps");

  std::vector<std::size_t> w;
  for (std::size_t k = 0; k < n && w.empty(); ++k) {
    const Vec f = unit_vec(n, k);
    Mat left(n, n), right(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      left.set_col(a, convolution_R_dual(q, f, unit_vec(n, a)));
      right.set_col(a, convolution_R_dual(q, unit_vec(n, a), f));
    }
    if (left * e != e * right.transpose()) w = {k};
  }
  rep.add("eR_part2", w.empty(), w, "(f (x) eps) *_R e_R = e_R *_R (eps (x) f)");
  return rep;
}

std::optional<std::size_t> cocommutativity_defect(const Coalgebra& c, const Vec& x) {
  const std::size_t n = c.dim;
  Vec d(n * n);
  for (std::size_t k = 0; k < n; ++k)
    if (!x[k].is_zero()) axpy(d, x[k], c.comult[k]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d[a * n + b] != d[b * n + a]) return a * n + b;
  return std::nullopt;
}

Report check_integral_cocommutative(const QTHopf& q) {
  Report rep;
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim();
  std::optional<IntegralData> d;
  try {
    d = integrals(h);
  } catch (const NonSemisimple&) {
  }
  const bool s2 = (h.antipode() * h.antipode()).is_identity();
  if (!d || !d->unimodular || !s2) {
    rep.skip("integral_cocomm", "hypothesis unmet: needs H unimodular with S^2 = id");
    return rep;
  }
  const auto w = cocommutativity_defect(q.coalgebra_R(), d->Lambda);
  rep.add("integral_cocomm", !w, w ? digits(*w, 2, n) : std::vector<std::size_t>{},
          "Delta_R(Lambda) equals its flip");
  rep.info("alpha_tilde_trivial", alpha_tilde(q, d->alpha) == h.unit(), "(alpha x id) R = 1");
  return rep;
}

Vec alpha_tilde(const QTHopf& q, const Vec& alpha) { return contract_left(q.hopf(), alpha, q.R()); }

}  // namespace ydkit

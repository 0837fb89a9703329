#include "opbar/inequalities.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "opbar/asymptotics.hpp"

namespace opbar {

mpq_class u_exact(PbarCache& c, long n) {
  if (n < 1) throw std::domain_error("u: n must be >= 1");
  c.ensure(n + 1);
  mpq_class r(c.at(n - 1) * c.at(n + 1), c.at(n) * c.at(n));
  r.canonicalize();
  return r;
}

mpq_class s_exact(PbarCache& c, long n) {
  if (n < 2) throw std::domain_error("s: n must be >= 2");
  const mpq_class a = u_exact(c, n - 1), b = u_exact(c, n + 1);
  return a + b - a * b;
}

CReal alpha(const CReal& t) {
  return pow_si(t, 6) - pow_si(t, 5) + CReal::from_long(1, t.precision());
}

CReal beta(const CReal& t) {
  return pow_si(t, 6) - pow_si(t, 5) - CReal::from_long(1, t.precision());
}

namespace {
// shared rational-function core of f and g; top = beta for f, alpha for g
CReal fg_core(long n, mpfr_prec_t prec, bool is_f) {
  if (n < 2) throw std::domain_error("f/g: n must be >= 2");
  const CReal x = mu(n - 1, prec), y = mu(n, prec), z = mu(n + 1, prec);
  const CReal expo = exp(x - CReal::from_long(2, prec) * y + z);
  const CReal num_x = is_f ? beta(x) : alpha(x);
  const CReal num_z = is_f ? beta(z) : alpha(z);
  const CReal den_y = is_f ? alpha(y) : beta(y);
  return expo * num_x * pow_si(y, 16) * num_z /
         (pow_si(x, 8) * pow_si(den_y, 2) * pow_si(z, 8));
}
}  // namespace

CReal f_of(long n, mpfr_prec_t prec) { return fg_core(n, prec, true); }
CReal g_of(long n, mpfr_prec_t prec) { return fg_core(n, prec, false); }

CReal s1_of(long n, mpfr_prec_t prec) {
  if (n < 3) throw std::domain_error("s1: n must be >= 3");
  return f_of(n - 1, prec) + f_of(n + 1, prec) -
         g_of(n - 1, prec) * g_of(n + 1, prec);
}

CReal s2_of(long n, mpfr_prec_t prec) {
  if (n < 3) throw std::domain_error("s2: n must be >= 3");
  return g_of(n - 1, prec) + g_of(n + 1, prec) -
         f_of(n - 1, prec) * f_of(n + 1, prec);
}

CReal phi_root(const CReal& t) {
  const mpfr_prec_t p = t.precision();
  const CReal one = CReal::from_long(1, p);
  if (!t.is_positive() || !surely_less(t, one))
    throw std::domain_error("phi_root: argument not inside (0,1)");
  // (1 - sqrt(1-t))/t without the cancellation near t = 0
  return one / (one + sqrt(one - t));
}

FivePoint five_point(long n, mpfr_prec_t prec) {
  if (n < 3) throw std::domain_error("five_point: n must be >= 3");
  return FivePoint{mu(n - 2, prec), mu(n - 1, prec), mu(n, prec),
                   mu(n + 1, prec), mu(n + 2, prec)};
}

namespace {
using Coef = std::pair<long, long>;

// sum_i (num_i/den_i) pi^{2i} y^{1-2i}
CReal laurent(const CReal& y, mpfr_prec_t prec,
              std::initializer_list<Coef> coeffs) {
  const CReal pi = CReal::pi(prec);
  CReal acc = CReal::from_long(0, prec);
  long i = 0;
  for (const auto& [num, den] : coeffs) {
    mpq_class c(num, den);
    c.canonicalize();
    acc = acc + CReal::from_mpq(c, prec) * pow_si(pi, 2 * i) *
                    pow_si(y, 1 - 2 * i);
    ++i;
  }
  return acc;
}
}  // namespace

Brackets brackets(long n, mpfr_prec_t prec) {
  // pure Laurent polynomials in y = mu(n): defined for any n >= 1, though
  // the bracketing inequalities only make sense once mu(n-2) exists
  if (n < 1) throw std::domain_error("brackets: n must be >= 1");
  const CReal y = mu(n, prec);
  // series of sqrt(y^2 -+ 2 pi^2) and sqrt(y^2 -+ pi^2) in 1/y; the
  // published displays drop the 1/2 on the pi^4/y^3 coefficient of r and
  // w, but the companion closed forms for r2-2x1+y etc. require it
  // (binomial expansion)
  return Brackets{
      laurent(y, prec, {{1, 1}, {-1, 1}, {-1, 2}, {-1, 2}, {-5, 8}, {-7, 8}, {-21, 16}, {-34, 16}}),
      laurent(y, prec, {{1, 1}, {-1, 1}, {-1, 2}, {-1, 2}, {-5, 8}, {-7, 8}, {-21, 16}, {-33, 16}}),
      laurent(y, prec, {{1, 1}, {-1, 2}, {-1, 8}, {-1, 16}, {-5, 128}, {-7, 256}, {-21, 1024}, {-34, 2048}}),
      laurent(y, prec, {{1, 1}, {-1, 2}, {-1, 8}, {-1, 16}, {-5, 128}, {-7, 256}, {-21, 1024}, {-33, 2048}}),
      laurent(y, prec, {{1, 1}, {1, 2}, {-1, 8}, {1, 16}, {-5, 128}, {7, 256}, {-21, 1024}}),
      laurent(y, prec, {{1, 1}, {1, 2}, {-1, 8}, {1, 16}, {-5, 128}, {7, 256}, {-21, 1024}, {33, 2048}}),
      laurent(y, prec, {{1, 1}, {1, 1}, {-1, 2}, {1, 2}, {-5, 8}, {7, 8}, {-21, 16}}),
      laurent(y, prec, {{1, 1}, {1, 1}, {-1, 2}, {1, 2}, {-5, 8}, {7, 8}, {-21, 16}, {33, 16}})};
}

// Taylor partial sums via Horner: 1 + t(1 + t/2 (1 + t/3 (...)))
CReal taylor_upper6(const CReal& t) {
  const mpfr_prec_t p = t.precision();
  CReal acc = CReal::from_long(1, p);
  for (int i = 6; i >= 1; --i)
    acc = CReal::from_long(1, p) + t * acc / CReal::from_long(i, p);
  return acc;
}

CReal taylor_lower7(const CReal& t) {
  const mpfr_prec_t p = t.precision();
  CReal acc = CReal::from_long(1, p);
  for (int i = 7; i >= 1; --i)
    acc = CReal::from_long(1, p) + t * acc / CReal::from_long(i, p);
  return acc;
}

mpq_class taylor_upper6_exact(const mpq_class& t) {
  mpq_class acc(1);
  for (int i = 6; i >= 1; --i) acc = 1 + t * acc / i;
  return acc;
}

mpq_class taylor_lower7_exact(const mpq_class& t) {
  mpq_class acc(1);
  for (int i = 7; i >= 1; --i) acc = 1 + t * acc / i;
  return acc;
}

RBounds r_bounds(long n, mpfr_prec_t prec) {
  if (n < 59) throw std::domain_error("r_bounds: n must be >= 59");
  const auto [r, x, y, z, w] = five_point(n, prec);
  const auto bk = brackets(n, prec);
  const CReal one = CReal::from_long(1, prec);
  const CReal two = CReal::from_long(2, prec);

  const CReal x16 = pow_si(x, 16), z16 = pow_si(z, 16);
  const CReal y8 = pow_si(y, 8), r8 = pow_si(r, 8), w8 = pow_si(w, 8);
  const CReal x4 = pow_si(x, 4), x6 = pow_si(x, 6), x10 = pow_si(x, 10),
              x12 = pow_si(x, 12);
  const CReal z4 = pow_si(z, 4), z6 = pow_si(z, 6), z10 = pow_si(z, 10),
              z12 = pow_si(z, 12);

  // host-inequality bounds on alpha(x)^2, beta(x)^2 (and z alike)
  const CReal ax2_hi = x12 - two * bk.x1 * x10 + x10 + two * x6 - two * bk.x1 * x4 + one;
  const CReal az2_hi = z12 - two * bk.z1 * z10 + z10 + two * z6 - two * bk.z1 * z4 + one;
  const CReal bx2_lo = x12 - two * bk.x2 * x10 + x10 - two * x6 + two * bk.x1 * x4 + one;
  const CReal bz2_lo = z12 - two * bk.z2 * z10 + z10 - two * z6 + two * bk.z1 * z4 + one;

  const CReal r4 = pow_si(r, 4), r6 = pow_si(r, 6);
  const CReal w4 = pow_si(w, 4), w6 = pow_si(w, 6);

  // note: the published R2 display misprints two of its w's as r's;
  // the corrected, w-side mirror of R1 is used (Eq. 2.27 fails otherwise)
  RBounds out{
      (r6 - bk.r1 * r4 + one) * x16 * alpha(y) *
          taylor_upper6(bk.r2 - two * bk.x1 + y) / (r8 * y8 * bx2_lo),
      (w6 - bk.w1 * w4 + one) * z16 * alpha(y) *
          taylor_upper6(y - two * bk.z1 + bk.w2) / (w8 * y8 * bz2_lo),
      (r6 - bk.r2 * r4 - one) * x16 * beta(y) *
          taylor_lower7(bk.r1 - two * bk.x2 + y) / (r8 * y8 * ax2_hi),
      (w6 - bk.w2 * w4 - one) * z16 * beta(y) *
          taylor_lower7(y - two * bk.z2 + bk.w1) / (w8 * y8 * az2_hi)};
  return out;
}

mpq_class q_poly_exact(PbarCache& c, long n, const mpq_class& t) {
  const mpq_class s = s_exact(c, n);
  return s * t * t - 2 * t + 1;
}

CReal q_poly(PbarCache& c, long n, const mpq_class& t, mpfr_prec_t prec) {
  return CReal::from_mpq(q_poly_exact(c, n, t), prec);
}

mpz_class two_log_lhs(PbarCache& c, long n) {
  if (n < 2) throw std::domain_error("two_log_lhs: n must be >= 2");
  c.ensure(n + 2);
  const mpz_class &a = c.at(n), &b = c.at(n + 1), &cc = c.at(n + 2),
                  &d = c.at(n - 1), &e = c.at(n - 2);
  const mpz_class inner = a * a - d * b;
  return inner * inner - (d * d - e * a) * (b * b - a * cc);
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw std::domain_error("bareiss_det: not square");
  if (k == 0) return 1;
  int sign = 1;
  mpz_class prev(1);
  for (size_t p = 0; p + 1 < k; ++p) {
    if (m[p][p] == 0) {
      size_t piv = p + 1;
      while (piv < k && m[piv][p] == 0) ++piv;
      if (piv == k) return 0;
      std::swap(m[p], m[piv]);
      sign = -sign;
    }
    for (size_t i = p + 1; i < k; ++i) {
      for (size_t j = p + 1; j < k; ++j) {
        m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
      }
      m[i][p] = 0;
    }
    prev = m[p][p];
  }
  return sign * m[k - 1][k - 1];
}

ToeplitzReport toeplitz_det(PbarCache& c, long n, long k) {
  if (k < 1) throw std::domain_error("toeplitz_det: k must be >= 1");
  if (n < k - 1)
    throw std::domain_error("toeplitz_det: requires n >= k-1");
  c.ensure(n + k - 1);
  std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) m[i][j] = c.at(n - i + j);

  ToeplitzReport rep{n, k, bareiss_det(m), {}, {}};
  if (k == 3) {
    for (long i = 0; i < 3; ++i)
      for (long j = 0; j < 3; ++j) {
        const long r0 = (i == 0) ? 1 : 0, r1 = (i == 2) ? 1 : 2;
        const long c0 = (j == 0) ? 1 : 0, c1 = (j == 2) ? 1 : 2;
        mpz_class v = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        rep.minor_signs.push_back(sgn(v));
        rep.minors.push_back(std::move(v));
      }
  }
  return rep;
}

BoundProfile bound_profile(PbarCache& c, long n, mpfr_prec_t prec) {
  if (n < 3) throw std::domain_error("bound_profile: n must be >= 3");
  BoundProfile bp{n,
                  u_exact(c, n),
                  s_exact(c, n),
                  f_of(n, prec),
                  g_of(n, prec),
                  s1_of(n, prec),
                  s2_of(n, prec),
                  std::nullopt};
  if (bp.s > 0 && bp.s < 1)
    bp.phi_of_s = phi_root(CReal::from_mpq(bp.s, prec));
  return bp;
}

}  // namespace opbar

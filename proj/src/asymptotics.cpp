#include "opbar/asymptotics.hpp"

#include <numeric>
#include <stdexcept>

namespace opbar {

CReal mu(long n, mpfr_prec_t prec) {
  if (n < 1) throw std::domain_error("mu: n must be >= 1");
  return CReal::pi(prec) * sqrt(CReal::from_long(n, prec));
}

namespace {
CReal b_common(long n, mpfr_prec_t prec, int tail_sign) {
  if (n < 1) throw std::domain_error("b1/b2: n must be >= 1");
  const CReal m = mu(n, prec);
  const CReal one = CReal::from_long(1, prec);
  const CReal inv_mu = one / m;
  const CReal inv_mu6 = one / pow_si(m, 6);
  CReal factor = one - inv_mu;
  factor = (tail_sign > 0) ? factor + inv_mu6 : factor - inv_mu6;
  return exp(m) / CReal::from_long(8 * n, prec) * factor;
}
}  // namespace

CReal b1(long n, mpfr_prec_t prec) { return b_common(n, prec, -1); }
CReal b2(long n, mpfr_prec_t prec) { return b_common(n, prec, +1); }

CReal ttilde_bound(long n, mpfr_prec_t prec) {
  if (n < 1) throw std::domain_error("ttilde_bound: n must be >= 1");
  const CReal half_mu =
      mu(n, prec) / CReal::from_long(2, prec);
  return CReal::from_long(10, prec) * exp(-half_mu);
}

OmegaPhase omega_phase(long h, long k) {
  if (k < 1 || k % 2 == 0)
    throw std::domain_error("omega_phase: k must be odd and >= 1");
  if (h < 0 || h >= k)
    throw std::domain_error("omega_phase: h out of range [0, k)");
  if (std::gcd(h, k) != 1)
    throw std::domain_error("omega_phase: h, k not coprime");
  // q = sum_{r=1}^{k-1} (r/k)(hr/k - floor(hr/k) - 1/2), exact
  mpq_class q(0);
  for (long r = 1; r < k; ++r) {
    // hr/k - floor(hr/k) = (hr mod k)/k; go through mpz to dodge overflow
    const long hr_mod = mpz_class(mpz_class(h) * r % k).get_si();
    mpq_class term(2 * hr_mod - k, 2 * k);  // (hr mod k)/k - 1/2
    term.canonicalize();
    mpq_class rk(r, k);
    rk.canonicalize();
    q += term * rk;
  }
  q.canonicalize();
  // reduce mod 2 into [0, 2)
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  fl = fl - (fl % 2 + 2) % 2;  // round down to even integer below q
  q -= mpq_class(fl);
  q.canonicalize();
  return OmegaPhase{h, k, q};
}

CReal zuckerman_dterm(long n, long k, mpfr_prec_t prec) {
  if (n < 1 || k < 1) throw std::domain_error("zuckerman_dterm: bad args");
  const CReal pi = CReal::pi(prec);
  const CReal nn = CReal::from_long(n, prec);
  const CReal arg = pi * sqrt(nn) / CReal::from_long(k, prec);
  const CReal lead = pi / CReal::from_long(2 * k * n, prec);
  const CReal sub =
      CReal::from_long(1, prec) /
      (CReal::from_long(2, prec) * nn * sqrt(nn));
  return lead * cosh(arg) - sub * sinh(arg);
}

ZuckEstimate zuckerman_estimate(long n, long N, mpfr_prec_t prec) {
  if (n < 1) throw std::domain_error("zuckerman_estimate: n must be >= 1");
  if (N < 1) throw std::domain_error("zuckerman_estimate: N must be >= 1");
  const CReal pi = CReal::pi(prec);
  CReal re = CReal::from_long(0, prec);
  CReal im = CReal::from_long(0, prec);
  for (long k = 1; k <= N; k += 2) {
    const CReal d = zuckerman_dterm(n, k, prec);
    const CReal sqrt_k = sqrt(CReal::from_long(k, prec));
    for (long h = 0; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;  // admits h=0 only for k=1
      // total phase: pi*(2 q(h,k) - q(2h mod k, k)) - 2 pi n h / k,
      // assembled as one exact rational multiple of pi, reduced mod 2
      const mpq_class q1 = omega_phase(h, k).q;
      const mpq_class q2 = omega_phase((2 * h) % k, k).q;
      mpq_class frac(mpz_class(n) * (2 * h), mpz_class(k));
      frac.canonicalize();
      mpq_class qq = 2 * q1 - q2 - frac;
      qq.canonicalize();
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), qq.get_num_mpz_t(), qq.get_den_mpz_t());
      fl = fl - (fl % 2 + 2) % 2;
      qq -= mpq_class(fl);
      qq.canonicalize();
      const CReal theta = pi * CReal::from_mpq(qq, prec);
      re = re + sqrt_k * cos(theta) * d;
      im = im + sqrt_k * sin(theta) * d;
    }
  }
  const CReal two_pi = CReal::from_long(2, prec) * pi;
  ZuckEstimate z{n, N, re / two_pi, CReal(prec), im / two_pi};
  // Engel: |R2(n,N)| < N^{5/2}/(pi n^{3/2}) sinh(pi sqrt(n)/N)
  const CReal nn = CReal::from_long(n, prec);
  const CReal bigN = CReal::from_long(N, prec);
  const CReal num = pow_si(sqrt(bigN), 5);
  const CReal den = pi * nn * sqrt(nn);
  z.error_bound = num / den * sinh(pi * sqrt(nn) / bigN);
  return z;
}

}  // namespace opbar

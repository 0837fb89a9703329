// Analytic approximants: mu(n) = pi sqrt(n), the B1/B2 bounds, the
// truncated Zuckerman series with exact omega(h,k) phases, the Engel
// truncation error bound, and the Ttilde tail bound.
#pragma once

#include <gmpxx.h>

#include "opbar/interval.hpp"

namespace opbar {

// pi * sqrt(n); n >= 1
CReal mu(long n, mpfr_prec_t prec = kDefaultPrec);

// B1(n) = e^mu/(8n) (1 - 1/mu - 1/mu^6), B2 with + 1/mu^6; n >= 1
CReal b1(long n, mpfr_prec_t prec = kDefaultPrec);
CReal b2(long n, mpfr_prec_t prec = kDefaultPrec);

// 10 e^{-mu(n)/2}; n >= 1
CReal ttilde_bound(long n, mpfr_prec_t prec = kDefaultPrec);

// omega(h,k) = exp(pi i q) with q an exact rational reduced mod 2;
// requires k odd, gcd(h,k) = 1, 0 <= h < k
struct OmegaPhase {
  long h, k;
  mpq_class q;
};
OmegaPhase omega_phase(long h, long k);

struct ZuckEstimate {
  long n;
  long terms_used;   // truncation bound N (odd k <= N contribute)
  CReal value;       // truncated main sum
  CReal error_bound; // upper bound on |R2(n,N)|
  CReal imag;        // enclosure of the imaginary part (must contain 0)
};

// truncated series (1/2pi) sum_{k odd <= N} sqrt(k) sum_h
//   omega(h,k)^2/omega(2h mod k, k) e^{-2 pi i n h/k} D(n,k)
// with D(n,k) = (pi/(2kn)) cosh(pi sqrt n / k) - (1/(2 n^{3/2})) sinh(pi sqrt n / k);
// all phases combine as exact rationals mod 2 before any rounding
ZuckEstimate zuckerman_estimate(long n, long N,
                                mpfr_prec_t prec = kDefaultPrec);

// D(n,k) alone (exposed for the finite-difference cross-check)
CReal zuckerman_dterm(long n, long k, mpfr_prec_t prec = kDefaultPrec);

}  // namespace opbar

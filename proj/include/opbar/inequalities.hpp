// The bound ladder: u_n, s(n), f/g, s1/s2, the phi root, the bracketing
// Laurent polynomials r1..w2, Taylor truncations Phi/phi, the R1..R4
// bounds, Q(t), and exact Toeplitz determinants with 2x2 minors.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "opbar/interval.hpp"
#include "opbar/overpartition.hpp"

namespace opbar {

// u_n = pbar(n-1) pbar(n+1) / pbar(n)^2, exact; n >= 1
mpq_class u_exact(PbarCache& c, long n);
// s(n) = u_{n-1} + u_{n+1} - u_{n-1} u_{n+1}, exact; n >= 2
mpq_class s_exact(PbarCache& c, long n);

// alpha(t) = t^6 - t^5 + 1, beta(t) = t^6 - t^5 - 1
CReal alpha(const CReal& t);
CReal beta(const CReal& t);

// f(n) = e^{x-2y+z} beta(x) y^16 beta(z) / (x^8 alpha(y)^2 z^8),
// g(n) with alpha/beta exchanged; x,y,z = mu(n-1),mu(n),mu(n+1); n >= 2
CReal f_of(long n, mpfr_prec_t prec = kDefaultPrec);
CReal g_of(long n, mpfr_prec_t prec = kDefaultPrec);

// s1(n) = f(n-1) + f(n+1) - g(n-1) g(n+1); s2 exchanges f and g; n >= 3
CReal s1_of(long n, mpfr_prec_t prec = kDefaultPrec);
CReal s2_of(long n, mpfr_prec_t prec = kDefaultPrec);

// phi(t) = (1 - sqrt(1-t))/t on (0,1), computed as 1/(1 + sqrt(1-t));
// the argument interval must lie strictly inside (0,1)
CReal phi_root(const CReal& t);

struct FivePoint {
  CReal r, x, y, z, w;  // mu(n-2) .. mu(n+2)
};
FivePoint five_point(long n, mpfr_prec_t prec = kDefaultPrec);  // n >= 3

// the eight explicit Laurent polynomials in y = mu(n) bracketing r,x,z,w
struct Brackets {
  CReal r1, r2, x1, x2, z1, z2, w1, w2;
};
Brackets brackets(long n, mpfr_prec_t prec = kDefaultPrec);  // n >= 1

// Phi(t) = sum_{i<=6} t^i/i!  (upper bound of e^t for t < 0)
// phi(t) = sum_{i<=7} t^i/i!  (lower bound of e^t for t < 0)
CReal taylor_upper6(const CReal& t);
CReal taylor_lower7(const CReal& t);
mpq_class taylor_upper6_exact(const mpq_class& t);
mpq_class taylor_lower7_exact(const mpq_class& t);

struct RBounds {
  CReal R1, R2, R3, R4;  // g(n-1) < R1, g(n+1) < R2, f(n-1) > R3, f(n+1) > R4
};
RBounds r_bounds(long n, mpfr_prec_t prec = kDefaultPrec);  // n >= 59

// Q(t) = s(n) t^2 - 2t + 1 at exact rational t; n >= 2
mpq_class q_poly_exact(PbarCache& c, long n, const mpq_class& t);
CReal q_poly(PbarCache& c, long n, const mpq_class& t,
             mpfr_prec_t prec = kDefaultPrec);

// exact left side of the 2-log-concavity inequality:
// (pbar(n)^2 - pbar(n-1)pbar(n+1))^2
//   - (pbar(n-1)^2 - pbar(n-2)pbar(n))(pbar(n+1)^2 - pbar(n)pbar(n+2)); n >= 2
mpz_class two_log_lhs(PbarCache& c, long n);

// exact determinant of an integer matrix (fraction-free elimination)
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m);

struct ToeplitzReport {
  long n, k;
  mpz_class det;
  // for k = 3: the nine 2x2 minors (delete row i, col j; row-major) and signs
  std::vector<mpz_class> minors;
  std::vector<int> minor_signs;
};
// k x k matrix with entry (i,j) = pbar(n - i + j), 1 <= i,j <= k; n >= k-1
ToeplitzReport toeplitz_det(PbarCache& c, long n, long k);

struct BoundProfile {
  long n;
  mpq_class u, s;
  CReal f, g, s1, s2;
  std::optional<CReal> phi_of_s;  // absent when s(n) is not inside (0,1)
};
BoundProfile bound_profile(PbarCache& c, long n,
                           mpfr_prec_t prec = kDefaultPrec);  // n >= 3

}  // namespace opbar

#include "opbar/interval.hpp"

#include <algorithm>
#include <cstdio>

namespace opbar {

namespace {
mpfr_prec_t clamp_prec(mpfr_prec_t p) {
  if (p < kMinPrec) throw std::domain_error("precision below minimum (32)");
  return p;
}
}  // namespace

CReal::CReal(mpfr_prec_t prec) : prec_(clamp_prec(prec)) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

CReal::CReal(const CReal& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

CReal::CReal(CReal&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, kMinPrec);
  mpfr_init2(hi_, kMinPrec);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

CReal& CReal::operator=(const CReal& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    prec_ = o.prec_;
  }
  return *this;
}

CReal& CReal::operator=(CReal&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    prec_ = o.prec_;
  }
  return *this;
}

CReal::~CReal() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

CReal CReal::from_long(long v, mpfr_prec_t prec) {
  CReal r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

CReal CReal::from_double(double v, mpfr_prec_t prec) {
  CReal r(prec);
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

CReal CReal::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  CReal r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

CReal CReal::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
  CReal r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

CReal CReal::pi(mpfr_prec_t prec) {
  CReal r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

CReal CReal::hull(const CReal& a, const CReal& b) {
  CReal r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

bool CReal::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool CReal::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool CReal::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool CReal::is_negative() const { return mpfr_sgn(hi_) < 0; }

double CReal::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2si(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

double CReal::width_double() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool CReal::width_below_2exp(long e) const {
  mpfr_t w, b;
  mpfr_init2(w, prec_);
  mpfr_init2(b, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_set_ui_2exp(b, 1, e, MPFR_RNDN);
  bool ok = mpfr_cmp(w, b) <= 0;
  mpfr_clear(w);
  mpfr_clear(b);
  return ok;
}

namespace {
std::string fmt_endpoint(const mpfr_t x, int sig, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x)) return "0";
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dR*e", sig - 1);
  int need = mpfr_snprintf(nullptr, 0, fmt, rnd, x);
  std::string buf(static_cast<size_t>(need) + 1, '\0');
  mpfr_snprintf(buf.data(), buf.size(), fmt, rnd, x);
  buf.resize(static_cast<size_t>(need));
  return buf;
}
}  // namespace

std::string CReal::lo_string(int sig) const {
  return fmt_endpoint(lo_, sig, MPFR_RNDD);
}

std::string CReal::hi_string(int sig) const {
  return fmt_endpoint(hi_, sig, MPFR_RNDU);
}

void CReal::check_finite(const char* op) const {
  if (!mpfr_number_p(lo_) || !mpfr_number_p(hi_))
    throw std::overflow_error(std::string("interval overflow in ") + op);
}

CReal operator+(const CReal& a, const CReal& b) {
  CReal r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  r.check_finite("+");
  return r;
}

CReal operator-(const CReal& a, const CReal& b) {
  CReal r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  r.check_finite("-");
  return r;
}

CReal operator-(const CReal& a) {
  CReal r(a.prec_);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

namespace {
// lo = min of the four endpoint products rounded down,
// hi = max of the four rounded up
void minmax4(mpfr_ptr out_lo, mpfr_ptr out_hi, const mpfr_t a_lo,
             const mpfr_t a_hi, const mpfr_t b_lo, const mpfr_t b_hi,
             int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t),
             mpfr_prec_t prec) {
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_srcptr as[2] = {a_lo, a_hi};
  const mpfr_srcptr bs[2] = {b_lo, b_hi};
  bool first = true;
  for (auto av : as)
    for (auto bv : bs) {
      op(t, av, bv, MPFR_RNDD);
      if (first || mpfr_cmp(t, out_lo) < 0) mpfr_set(out_lo, t, MPFR_RNDD);
      op(t, av, bv, MPFR_RNDU);
      if (first || mpfr_cmp(t, out_hi) > 0) mpfr_set(out_hi, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
}
}  // namespace

CReal operator*(const CReal& a, const CReal& b) {
  CReal r(std::max(a.prec_, b.prec_));
  minmax4(r.lo_, r.hi_, a.lo_, a.hi_, b.lo_, b.hi_, mpfr_mul, r.prec_);
  r.check_finite("*");
  return r;
}

CReal operator/(const CReal& a, const CReal& b) {
  if (b.contains_zero())
    throw std::domain_error("division by interval containing zero");
  CReal r(std::max(a.prec_, b.prec_));
  minmax4(r.lo_, r.hi_, a.lo_, a.hi_, b.lo_, b.hi_, mpfr_div, r.prec_);
  r.check_finite("/");
  return r;
}

CReal sqrt(const CReal& a) {
  if (mpfr_sgn(a.lo_) < 0)
    throw std::domain_error("sqrt of interval reaching below 0");
  CReal r(a.prec_);
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

CReal exp(const CReal& a) {
  CReal r(a.prec_);
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  r.check_finite("exp");
  return r;
}

CReal log(const CReal& a) {
  if (mpfr_sgn(a.lo_) <= 0)
    throw std::domain_error("log of interval reaching <= 0");
  CReal r(a.prec_);
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

CReal sinh(const CReal& a) {
  CReal r(a.prec_);
  mpfr_sinh(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sinh(r.hi_, a.hi_, MPFR_RNDU);
  r.check_finite("sinh");
  return r;
}

CReal cosh(const CReal& a) {
  CReal r(a.prec_);
  if (a.contains_zero()) {
    // even function, minimum 1 at 0
    mpfr_set_si(r.lo_, 1, MPFR_RNDD);
    mpfr_t c1, c2;
    mpfr_init2(c1, r.prec_);
    mpfr_init2(c2, r.prec_);
    mpfr_cosh(c1, a.lo_, MPFR_RNDU);
    mpfr_cosh(c2, a.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, c1, c2, MPFR_RNDU);
    mpfr_clear(c1);
    mpfr_clear(c2);
  } else if (mpfr_sgn(a.lo_) > 0) {
    mpfr_cosh(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_cosh(r.hi_, a.hi_, MPFR_RNDU);
  } else {
    mpfr_cosh(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_cosh(r.hi_, a.lo_, MPFR_RNDU);
  }
  r.check_finite("cosh");
  return r;
}

CReal abs(const CReal& a) {
  CReal r(a.prec_);
  if (a.contains_zero()) {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t1, t2;
    mpfr_init2(t1, r.prec_);
    mpfr_init2(t2, r.prec_);
    mpfr_abs(t1, a.lo_, MPFR_RNDU);
    mpfr_abs(t2, a.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, t1, t2, MPFR_RNDU);
    mpfr_clear(t1);
    mpfr_clear(t2);
  } else if (mpfr_sgn(a.lo_) > 0) {
    mpfr_set(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
  } else {
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  }
  return r;
}

CReal pow_si(const CReal& a, long k) {
  if (k == 0) return CReal::from_long(1, a.prec_);
  if (k < 0) return CReal::from_long(1, a.prec_) / pow_si(a, -k);
  CReal r(a.prec_);
  const bool even = (k % 2 == 0);
  if (!even || mpfr_sgn(a.lo_) >= 0) {
    // odd powers increase everywhere; even powers increase on [0, inf)
    mpfr_pow_si(r.lo_, a.lo_, k, MPFR_RNDD);
    mpfr_pow_si(r.hi_, a.hi_, k, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi_) <= 0) {  // even power, decreasing branch
    mpfr_pow_si(r.lo_, a.hi_, k, MPFR_RNDD);
    mpfr_pow_si(r.hi_, a.lo_, k, MPFR_RNDU);
  } else {
    // even power of interval spanning zero
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t1, t2;
    mpfr_init2(t1, r.prec_);
    mpfr_init2(t2, r.prec_);
    mpfr_pow_si(t1, a.lo_, k, MPFR_RNDU);
    mpfr_pow_si(t2, a.hi_, k, MPFR_RNDU);
    mpfr_max(r.hi_, t1, t2, MPFR_RNDU);
    mpfr_clear(t1);
    mpfr_clear(t2);
  }
  r.check_finite("pow");
  return r;
}

// cos/sin: hull of the endpoint values widened by the interval width
// (|derivative| <= 1), clamped to [-1, 1]; valid for any argument interval
CReal cos(const CReal& a) {
  CReal r(a.prec_);
  mpfr_t t, w, vlo, vhi;
  mpfr_init2(t, a.prec_);
  mpfr_init2(w, a.prec_);
  mpfr_init2(vlo, a.prec_);
  mpfr_init2(vhi, a.prec_);
  mpfr_sub(w, a.hi_, a.lo_, MPFR_RNDU);
  mpfr_cos(vlo, a.lo_, MPFR_RNDD);
  mpfr_cos(t, a.hi_, MPFR_RNDD);
  mpfr_min(vlo, vlo, t, MPFR_RNDD);
  mpfr_sub(vlo, vlo, w, MPFR_RNDD);
  mpfr_cos(vhi, a.lo_, MPFR_RNDU);
  mpfr_cos(t, a.hi_, MPFR_RNDU);
  mpfr_max(vhi, vhi, t, MPFR_RNDU);
  mpfr_add(vhi, vhi, w, MPFR_RNDU);
  mpfr_set_si(t, -1, MPFR_RNDD);
  mpfr_max(r.lo_, vlo, t, MPFR_RNDD);
  mpfr_set_si(t, 1, MPFR_RNDU);
  mpfr_min(r.hi_, vhi, t, MPFR_RNDU);
  mpfr_clear(t);
  mpfr_clear(w);
  mpfr_clear(vlo);
  mpfr_clear(vhi);
  return r;
}

CReal sin(const CReal& a) {
  CReal r(a.prec_);
  mpfr_t t, w, vlo, vhi;
  mpfr_init2(t, a.prec_);
  mpfr_init2(w, a.prec_);
  mpfr_init2(vlo, a.prec_);
  mpfr_init2(vhi, a.prec_);
  mpfr_sub(w, a.hi_, a.lo_, MPFR_RNDU);
  mpfr_sin(vlo, a.lo_, MPFR_RNDD);
  mpfr_sin(t, a.hi_, MPFR_RNDD);
  mpfr_min(vlo, vlo, t, MPFR_RNDD);
  mpfr_sub(vlo, vlo, w, MPFR_RNDD);
  mpfr_sin(vhi, a.lo_, MPFR_RNDU);
  mpfr_sin(t, a.hi_, MPFR_RNDU);
  mpfr_max(vhi, vhi, t, MPFR_RNDU);
  mpfr_add(vhi, vhi, w, MPFR_RNDU);
  mpfr_set_si(t, -1, MPFR_RNDD);
  mpfr_max(r.lo_, vlo, t, MPFR_RNDD);
  mpfr_set_si(t, 1, MPFR_RNDU);
  mpfr_min(r.hi_, vhi, t, MPFR_RNDU);
  mpfr_clear(t);
  mpfr_clear(w);
  mpfr_clear(vlo);
  mpfr_clear(vhi);
  return r;
}

bool surely_less(const CReal& a, const CReal& b) {
  return mpfr_cmp(a.hi_, b.lo_) < 0;
}

bool surely_greater(const CReal& a, const CReal& b) {
  return mpfr_cmp(a.lo_, b.hi_) > 0;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Less: return "Less";
    case Verdict::Greater: return "Greater";
    default: return "Undecided";
  }
}

Verdict compare_escalate(const EvalFn& a, const EvalFn& b, mpfr_prec_t cap,
                         mpfr_prec_t start) {
  for (mpfr_prec_t p = start; p <= cap; p *= 2) {
    CReal A = a(p), B = b(p);
    if (surely_less(A, B)) return Verdict::Less;
    if (surely_greater(A, B)) return Verdict::Greater;
  }
  return Verdict::Undecided;
}

Tri decide_less(const EvalFn& a, const EvalFn& b, mpfr_prec_t cap) {
  switch (compare_escalate(a, b, cap)) {
    case Verdict::Less: return Tri::True;
    case Verdict::Greater: return Tri::False;
    default: return Tri::Undecided;
  }
}

}  // namespace opbar

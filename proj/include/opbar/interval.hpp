// Certified interval arithmetic over MPFR with outward rounding.
// Every operation returns an enclosure guaranteed to contain the exact
// image; strict comparisons are decided only when intervals are disjoint.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <stdexcept>
#include <string>

namespace opbar {

inline constexpr mpfr_prec_t kMinPrec = 32;
inline constexpr mpfr_prec_t kLadderStart = 128;
inline constexpr mpfr_prec_t kDefaultPrec = 256;
inline constexpr mpfr_prec_t kPrecCap = 8192;

class CReal {
 public:
  explicit CReal(mpfr_prec_t prec = kDefaultPrec);
  CReal(const CReal& o);
  CReal(CReal&& o) noexcept;
  CReal& operator=(const CReal& o);
  CReal& operator=(CReal&& o) noexcept;
  ~CReal();

  // exact embeddings (outward-rounded to prec where not representable)
  static CReal from_long(long v, mpfr_prec_t prec = kDefaultPrec);
  static CReal from_double(double v, mpfr_prec_t prec = kDefaultPrec);
  static CReal from_mpz(const mpz_class& v, mpfr_prec_t prec = kDefaultPrec);
  static CReal from_mpq(const mpq_class& v, mpfr_prec_t prec = kDefaultPrec);
  static CReal pi(mpfr_prec_t prec = kDefaultPrec);
  // smallest interval containing both a and b
  static CReal hull(const CReal& a, const CReal& b);

  mpfr_prec_t precision() const { return prec_; }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

  bool contains_zero() const;
  bool contains(const mpq_class& v) const;
  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0
  double mid_double() const;
  // hi - lo, rounded up, as a double (may be 0 for exact singletons)
  double width_double() const;
  // width <= 2^e ?
  bool width_below_2exp(long e) const;

  // decimal endpoints rounded outward, `sig` significant digits
  std::string lo_string(int sig = 40) const;
  std::string hi_string(int sig = 40) const;

  friend CReal operator+(const CReal& a, const CReal& b);
  friend CReal operator-(const CReal& a, const CReal& b);
  friend CReal operator*(const CReal& a, const CReal& b);
  friend CReal operator/(const CReal& a, const CReal& b);
  friend CReal operator-(const CReal& a);

  friend CReal sqrt(const CReal& a);
  friend CReal exp(const CReal& a);
  friend CReal log(const CReal& a);
  friend CReal sinh(const CReal& a);
  friend CReal cosh(const CReal& a);
  friend CReal abs(const CReal& a);
  friend CReal pow_si(const CReal& a, long k);
  // Lipschitz hulls, valid for arbitrary argument intervals
  friend CReal cos(const CReal& a);
  friend CReal sin(const CReal& a);

  // a.hi < b.lo / a.lo > b.hi
  friend bool surely_less(const CReal& a, const CReal& b);
  friend bool surely_greater(const CReal& a, const CReal& b);

 private:
  void check_finite(const char* op) const;
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
};

enum class Verdict { Less, Greater, Undecided };

const char* verdict_name(Verdict v);

// Re-evaluates both sides at 128, 256, ... bits up to `cap` until the
// enclosures separate. Identical or touching enclosures stay Undecided.
using EvalFn = std::function<CReal(mpfr_prec_t)>;
Verdict compare_escalate(const EvalFn& a, const EvalFn& b,
                         mpfr_prec_t cap = kPrecCap,
                         mpfr_prec_t start = kLadderStart);

// Tribool for predicate scans: Undecided is tracked separately from False.
enum class Tri { True, False, Undecided };

// decide whether a < b, escalating precision
Tri decide_less(const EvalFn& a, const EvalFn& b, mpfr_prec_t cap = kPrecCap);

}  // namespace opbar

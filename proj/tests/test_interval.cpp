#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "opbar/interval.hpp"
#include "test_util.hpp"

using opbar::CReal;
using opbar::Tri;
using opbar::Verdict;
using opbar::testing::inside;
using opbar::testing::mpq_dec;

namespace {

bool endpoint_le(const CReal& a, const CReal& b) {
  // a.lo <= b.lo and b.hi <= a.hi, i.e. b nested in a
  return mpfr_cmp(a.lo(), b.lo()) <= 0 && mpfr_cmp(b.hi(), a.hi()) <= 0;
}

CReal wide(long lo, long hi, mpfr_prec_t prec = 256) {
  return CReal::hull(CReal::from_long(lo, prec), CReal::from_long(hi, prec));
}

}  // namespace

TEST_CASE("pi enclosures: width, digits, nesting") {
  const CReal p64 = CReal::pi(64);
  CHECK(p64.width_below_2exp(-60));
  CHECK(inside(p64, "3.14159265358979", "3.14159265358980"));
  const CReal p512 = CReal::pi(512);
  CHECK(endpoint_le(p64, p512));
  CHECK(p512.width_below_2exp(-500));
  CHECK(CReal::pi(128).width_double() > CReal::pi(256).width_double());
  CHECK(CReal::pi(256).width_double() > CReal::pi(1024).width_double());
}

TEST_CASE("exact embeddings are tight") {
  CHECK(CReal::from_long(5).contains(mpq_class(5)));
  CHECK(CReal::from_long(5).width_below_2exp(-10000));
  CHECK(CReal::from_mpz(mpz_class("123456789012345678901234567890"))
            .contains(mpq_class(mpz_class("123456789012345678901234567890"))));
  const CReal third = CReal::from_mpq(mpq_class(1, 3), 192);
  CHECK(third.contains(mpq_class(1, 3)));
  CHECK(third.width_below_2exp(-190));
  CHECK_FALSE(third.contains(mpq_class(1, 2)));
}

TEST_CASE("arithmetic: exact endpoint cases") {
  const CReal r = CReal::from_long(2) * CReal::from_long(3);
  CHECK(mpfr_cmp_si(r.lo(), 6) == 0);
  CHECK(mpfr_cmp_si(r.hi(), 6) == 0);

  const CReal m = wide(-2, 3) * wide(-1, 4);
  CHECK(mpfr_cmp_si(m.lo(), -8) == 0);
  CHECK(mpfr_cmp_si(m.hi(), 12) == 0);

  const CReal d = CReal::from_long(1) / CReal::from_long(4);
  CHECK(d.contains(mpq_class(1, 4)));
  CHECK(d.width_below_2exp(-10000));

  const CReal s = CReal::from_long(7) - CReal::from_long(7);
  CHECK(s.contains_zero());

  const CReal sub = wide(1, 2) - wide(1, 2);
  CHECK(mpfr_cmp_si(sub.lo(), -1) == 0);
  CHECK(mpfr_cmp_si(sub.hi(), 1) == 0);

  const CReal neg = -wide(1, 2);
  CHECK(mpfr_cmp_si(neg.lo(), -2) == 0);
  CHECK(mpfr_cmp_si(neg.hi(), -1) == 0);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(wide(1, 2) / wide(-1, 1), std::domain_error);
  CHECK_THROWS_AS(wide(1, 2) / CReal::from_long(0), std::domain_error);
  CHECK_THROWS_AS(sqrt(wide(-2, 3)), std::domain_error);
  CHECK_THROWS_AS(log(wide(0, 3)), std::domain_error);
  CHECK_THROWS_AS(log(wide(-1, 3)), std::domain_error);
  CHECK_THROWS_AS(CReal::from_long(1, 16), std::domain_error);  // below 32
}

TEST_CASE("overflow raises instead of returning infinities") {
  CHECK_THROWS_AS(exp(CReal::from_double(1e19)), std::overflow_error);
  CHECK_THROWS_AS(sinh(CReal::from_double(1e19)), std::overflow_error);
}

TEST_CASE("sqrt/exp/log basics") {
  const CReal s4 = sqrt(CReal::from_long(4));
  CHECK(s4.contains(mpq_class(2)));
  CHECK(s4.width_below_2exp(-250));
  const CReal e0 = exp(CReal::from_long(0));
  CHECK(e0.contains(mpq_class(1)));
  const CReal l1 = log(CReal::from_long(1));
  CHECK(l1.contains_zero());
  // log(exp(x)) contains x
  const CReal x = CReal::from_mpq(mpq_class(7, 5));
  CHECK(log(exp(x)).contains(mpq_class(7, 5)));
}

TEST_CASE("pow_si sign branches") {
  const CReal a = wide(-2, 3);
  const CReal even = pow_si(a, 2);
  CHECK(mpfr_cmp_si(even.lo(), 0) == 0);
  CHECK(mpfr_cmp_si(even.hi(), 9) == 0);
  const CReal odd = pow_si(a, 3);
  CHECK(mpfr_cmp_si(odd.lo(), -8) == 0);
  CHECK(mpfr_cmp_si(odd.hi(), 27) == 0);
  const CReal negsq = pow_si(wide(-3, -2), 2);
  CHECK(mpfr_cmp_si(negsq.lo(), 4) == 0);
  CHECK(mpfr_cmp_si(negsq.hi(), 9) == 0);
  CHECK(pow_si(a, 0).contains(mpq_class(1)));
  const CReal inv = pow_si(wide(2, 4), -1);
  CHECK(inv.contains(mpq_class(1, 4)));
  CHECK(inv.contains(mpq_class(1, 2)));
  CHECK_FALSE(inv.contains(mpq_class(3, 5)));
  CHECK_THROWS_AS(pow_si(wide(-1, 1), -2), std::domain_error);
}

TEST_CASE("cosh and abs handle zero-spanning intervals") {
  const CReal c = cosh(wide(-1, 2));
  CHECK(mpfr_cmp_si(c.lo(), 1) == 0);        // min of cosh on [-1,2]
  CHECK(c.contains(mpq_dec("3.7621956910836")));  // cosh(2) = 3.7621956...
  const CReal cneg = cosh(wide(-3, -2));
  CHECK(surely_greater(cneg, CReal::from_long(3)));

  const CReal av = abs(wide(-5, 2));
  CHECK(mpfr_cmp_si(av.lo(), 0) == 0);
  CHECK(mpfr_cmp_si(av.hi(), 5) == 0);
  const CReal an = abs(wide(-5, -2));
  CHECK(mpfr_cmp_si(an.lo(), 2) == 0);
  CHECK(mpfr_cmp_si(an.hi(), 5) == 0);
}

TEST_CASE("cos/sin Lipschitz hulls stay certified") {
  CHECK(cos(CReal::from_long(0)).contains(mpq_class(1)));
  CHECK(sin(CReal::from_long(0)).contains(mpq_class(0)));
  CHECK(cos(CReal::pi()).contains(mpq_class(-1)));
  CHECK(sin(CReal::pi()).contains(mpq_class(0)));
  // clamped to [-1, 1] even for very wide arguments
  const CReal w = cos(wide(-1000, 1000));
  CHECK(mpfr_cmp_si(w.lo(), -1) == 0);
  CHECK(mpfr_cmp_si(w.hi(), 1) == 0);
  // half-angle identity sampled: cos(2t) in 1 - 2 sin(t)^2
  const CReal t = CReal::from_mpq(mpq_class(3, 7));
  const CReal lhs = cos(t + t);
  const CReal rhs = CReal::from_long(1) -
                    CReal::from_long(2) * pow_si(sin(t), 2);
  CHECK(mpfr_cmp(lhs.lo(), rhs.hi()) <= 0);
  CHECK(mpfr_cmp(rhs.lo(), lhs.hi()) <= 0);
}

TEST_CASE("outward decimal endpoints") {
  const CReal third = CReal::from_mpq(mpq_class(1, 3), 192);
  const std::string lo = third.lo_string();
  const std::string hi = third.hi_string();
  CHECK(lo != hi);
  mpfr_t parsed;
  mpfr_init2(parsed, 320);
  mpfr_set_str(parsed, lo.c_str(), 10, MPFR_RNDN);
  CHECK(mpfr_cmp(parsed, third.lo()) <= 0);  // printed lo rounds down
  mpfr_set_str(parsed, hi.c_str(), 10, MPFR_RNDN);
  CHECK(mpfr_cmp(parsed, third.hi()) >= 0);  // printed hi rounds up
  mpfr_clear(parsed);
  CHECK(CReal::from_long(0).lo_string() == "0");
  CHECK(CReal::from_long(0).hi_string() == "0");
}

TEST_CASE("surely_less / surely_greater need disjointness") {
  CHECK(surely_less(CReal::from_long(1), CReal::from_long(2)));
  CHECK(surely_greater(CReal::from_long(2), CReal::from_long(1)));
  CHECK_FALSE(surely_less(wide(1, 3), wide(2, 4)));
  CHECK_FALSE(surely_greater(wide(2, 4), wide(1, 3)));
  CHECK_FALSE(surely_less(CReal::from_long(1), CReal::from_long(1)));
}

TEST_CASE("compare_escalate decides separable pairs, never equal ones") {
  auto one = [](mpfr_prec_t p) { return CReal::from_long(1, p); };
  auto two = [](mpfr_prec_t p) { return CReal::from_long(2, p); };
  auto root2 = [](mpfr_prec_t p) { return sqrt(CReal::from_long(2, p)); };
  CHECK(opbar::compare_escalate(one, two, 256) == Verdict::Less);
  CHECK(opbar::compare_escalate(two, one, 256) == Verdict::Greater);
  CHECK(opbar::compare_escalate(root2, root2, 1024) == Verdict::Undecided);
  // a genuinely tiny but nonzero gap is resolved by escalation:
  // sqrt(2) vs 665857/470832 (a continued-fraction convergent, gap ~ 2e-12)
  auto conv = [](mpfr_prec_t p) {
    return CReal::from_mpq(mpq_class(665857, 470832), p);
  };
  CHECK(opbar::compare_escalate(root2, conv) == Verdict::Less);
  CHECK(opbar::decide_less(root2, conv) == Tri::True);
  CHECK(opbar::decide_less(conv, root2) == Tri::False);
  CHECK(opbar::decide_less(root2, root2) == Tri::Undecided);
}

namespace {

// small deterministic expression trees over total (never-throwing) ops
struct Node {
  int op;  // 0 leaf, 1 +, 2 -, 3 *, 4 safe-div, 5 sqrt|.|, 6 exp-squash,
           // 7 sinh-squash, 8 cos, 9 sin
  int a = -1, b = -1;
  mpq_class leaf;
};

int gen(std::vector<Node>& nodes, std::mt19937_64& rng, int depth) {
  Node nd;
  if (depth == 0 || rng() % 4 == 0) {
    nd.op = 0;
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = 1 + static_cast<long>(rng() % 9);
    nd.leaf = mpq_class(num, den);
    nd.leaf.canonicalize();
  } else {
    nd.op = 1 + static_cast<int>(rng() % 9);
    nd.a = gen(nodes, rng, depth - 1);
    if (nd.op <= 4) nd.b = gen(nodes, rng, depth - 1);
  }
  nodes.push_back(nd);
  return static_cast<int>(nodes.size()) - 1;
}

CReal eval(const std::vector<Node>& nodes, int i, mpfr_prec_t p) {
  const Node& nd = nodes[i];
  switch (nd.op) {
    case 0: return CReal::from_mpq(nd.leaf, p);
    case 1: return eval(nodes, nd.a, p) + eval(nodes, nd.b, p);
    case 2: return eval(nodes, nd.a, p) - eval(nodes, nd.b, p);
    case 3: return eval(nodes, nd.a, p) * eval(nodes, nd.b, p);
    case 4: {
      const CReal d = eval(nodes, nd.b, p);
      return eval(nodes, nd.a, p) / (CReal::from_long(1, p) + abs(d));
    }
    case 5: return sqrt(abs(eval(nodes, nd.a, p)));
    case 6: {
      const CReal x = eval(nodes, nd.a, p);
      return exp(x / (CReal::from_long(1, p) + abs(x)));
    }
    case 7: {
      const CReal x = eval(nodes, nd.a, p);
      return sinh(x / (CReal::from_long(1, p) + abs(x)));
    }
    case 8: return cos(eval(nodes, nd.a, p));
    default: return sin(eval(nodes, nd.a, p));
  }
}

}  // namespace

TEST_CASE("randomized trees: enclosures nest as precision doubles") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Node> nodes;
    const int root = gen(nodes, rng, 5);
    const CReal v1 = eval(nodes, root, 128);
    const CReal v2 = eval(nodes, root, 256);
    const CReal v4 = eval(nodes, root, 512);
    CAPTURE(trial);
    CHECK(endpoint_le(v1, v2));
    CHECK(endpoint_le(v2, v4));
    CHECK(v4.width_double() <= v1.width_double());
  }
}

TEST_CASE("randomized pairs: verdicts never flip under escalation") {
  std::mt19937_64 rng(67890);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Node> an, bn;
    const int ra = gen(an, rng, 4);
    const int rb = gen(bn, rng, 4);
    auto fa = [&an, ra](mpfr_prec_t p) { return eval(an, ra, p); };
    auto fb = [&bn, rb](mpfr_prec_t p) { return eval(bn, rb, p); };
    const Verdict low = opbar::compare_escalate(fa, fb, 512);
    const CReal a4 = fa(4096), b4 = fb(4096);
    CAPTURE(trial);
    if (low == Verdict::Less) CHECK_FALSE(surely_greater(a4, b4));
    if (low == Verdict::Greater) CHECK_FALSE(surely_less(a4, b4));
  }
}

TEST_CASE("hull covers both operands") {
  const CReal h = CReal::hull(CReal::from_long(-3), CReal::from_long(7));
  CHECK(h.contains(mpq_class(-3)));
  CHECK(h.contains(mpq_class(7)));
  CHECK(h.contains(mpq_class(0)));
  CHECK_FALSE(h.contains(mpq_class(8)));
}

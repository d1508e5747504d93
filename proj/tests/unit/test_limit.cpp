#include "doctest.h"

#include "f1zeta/catalog.hpp"
#include "f1zeta/errors.hpp"
#include "f1zeta/limit.hpp"
#include "support/oracles.hpp"

using namespace f1zeta;
using f1zeta::testing::uniform;

namespace {

double rel(const HighReal& a, const HighReal& b) { return static_cast<double>(abs(a - b) / abs(b)); }

}  // namespace

TEST_CASE("probe offsets") {
  const LimitProbe probe = LimitProbe::decimal(HighReal(3), 4);
  REQUIRE(probe.offsets.size() == 4);
  CHECK(rel(probe.offsets[0], HighReal("0.1")) < 1e-40);
  CHECK(rel(probe.offsets[3], HighReal("1e-4")) < 1e-40);
}

TEST_CASE("series and closed forms on P(1)") {
  const IntPolynomial p{1, 1};
  // prod (1 - q^{i-s})^{-1} for i = 0, 1 at q = 2, s = 3: 1/((7/8)(3/4)) = 32/21
  CHECK(rel(zeta_q_closed(p, HighReal(2), HighReal(3)), HighReal(32) / 21) < 1e-40);
  CHECK(rel(zeta_q_series(p, HighReal(2), HighReal(3), 200), HighReal(32) / 21) < 1e-40);
  CHECK_THROWS_AS(zeta_q_closed(p, HighReal(2), HighReal(1)), PoleAt);
}

TEST_CASE("divergent parameters") {
  const IntPolynomial p{1, 1};
  CHECK_THROWS_AS(zeta_q_series(p, HighReal(1), HighReal(3), 100), DivergentParameters);
  CHECK_THROWS_AS(zeta_q_series(p, HighReal("0.5"), HighReal(3), 100), DivergentParameters);
  CHECK_THROWS_AS(zeta_q_series(p, HighReal(2), HighReal(1), 100), DivergentParameters);
  CHECK_THROWS_AS(soule_limit_check(parse("P(1)"), LimitProbe::decimal(HighReal(1))), DivergentParameters);
  CHECK_THROWS_AS(soule_limit_check(parse("P(2)"), LimitProbe::decimal(HighReal("1.5"))), DivergentParameters);
}

TEST_CASE("P(1) at s0 = 3 approaches 1/6") {
  const LimitReport r = soule_limit_check(parse("P(1)"), LimitProbe::decimal(HighReal(3), 6));
  CHECK(r.chi == 2);
  CHECK(r.target == BigRational(1, 6));
  REQUIRE(r.steps.size() == 6);
  const double frozen[] = {0.23169472018414617, 0.17256545070758547, 0.16725065295132062,
                           0.16672500652795138, 0.16667250006527795, 0.16666725000065278};
  for (std::size_t k = 0; k < 6; ++k) CHECK(rel(r.steps[k].value, HighReal(frozen[k])) < 1e-12);
  CHECK(static_cast<double>(r.steps.back().relative_error) < 4e-6);
  CHECK(r.tail_monotone);
  CHECK(r.holds);
}

TEST_CASE("limit holds for groups and flag varieties") {
  for (const char* s : {"P(2)", "SL(2)", "GL(2)", "Gr(2,4)", "Flag(A2)", "T(1)", "A(1)xP(1)"}) {
    CAPTURE(s);
    const SchemeDescriptor d = parse(s);
    const LimitReport r = soule_limit_check(d, LimitProbe::decimal(HighReal(d.dimension + 2), 6));
    CHECK(r.holds);
    CHECK(static_cast<double>(abs(r.steps.back().relative_error)) < kLimitFinalTolerance);
  }
}

TEST_CASE("error shrinks at least linearly in h") {
  // Halving h must at least halve the error. For GL(2) at s0 = 6 the
  // first-order term cancels and the ratio drops to 1/4.
  for (const char* s : {"P(1)", "P(2)", "SL(2)", "GL(2)"}) {
    const std::string name = s;
    CAPTURE(name);
    const SchemeDescriptor d = parse(s);
    for (const char* h : {"1e-3", "1e-4", "1e-5"}) {
      LimitProbe probe{HighReal(d.dimension + 2), {HighReal(h), HighReal(h) / 2}};
      const LimitReport r = soule_limit_check(d, probe);
      const double ratio = static_cast<double>(abs(r.steps[1].relative_error / r.steps[0].relative_error));
      CHECK(ratio >= 0.2);
      CHECK(ratio <= 0.55);
    }
  }
}

TEST_CASE("property: series agrees with the closed product") {
  const char* names[] = {"P(1)", "P(2)", "P(3)", "SL(2)", "GL(2)", "Gr(2,4)", "T(2)", "A(2)", "Flag(A2)", "SL(3)"};
  for (int trial = 0; trial < 1000; ++trial) {
    const IntPolynomial p = counting_polynomial(parse(names[uniform(0, 9)]));
    const HighReal q = HighReal("1.05") + HighReal(uniform(0, 450)) / 1000;
    const HighReal s0 = HighReal(p.degree() + 2) + HighReal(uniform(0, 20)) / 10;
    CHECK(rel(zeta_q_series(p, q, s0, 200), zeta_q_closed(p, q, s0)) < 1e-6);
  }
}

TEST_CASE("close to q = 1 the series needs more terms") {
  // The tail beyond R terms is about E1(2 R ln q): 4e-3 at q = 1.01, R = 200.
  const IntPolynomial p = counting_polynomial(parse("P(2)"));
  const HighReal q("1.01"), s0(4);
  const double short_gap = rel(zeta_q_series(p, q, s0, 200), zeta_q_closed(p, q, s0));
  CHECK(short_gap > 1e-3);
  CHECK(short_gap < 1e-2);
  CHECK(rel(zeta_q_series(p, q, s0, 2000), zeta_q_closed(p, q, s0)) < 1e-6);
}

#include "f1zeta/limit.hpp"

#include <boost/multiprecision/number.hpp>

#include "f1zeta/errors.hpp"
#include "f1zeta/zeta.hpp"

namespace f1zeta {

namespace {

HighReal to_real(const BigRational& x) { return HighReal(numerator(x)) / HighReal(denominator(x)); }

void require_convergent(const IntPolynomial& p, const HighReal& s0) {
  if (!p.is_zero() && !(s0 > p.degree()))
    throw DivergentParameters("s0 must exceed " + std::to_string(p.degree()) + ", the largest root");
}

}  // namespace

LimitProbe LimitProbe::decimal(const HighReal& s0, int steps) {
  LimitProbe probe;
  probe.s0 = s0;
  HighReal h = 1;
  for (int k = 1; k <= steps; ++k) {
    h /= 10;
    probe.offsets.push_back(h);
  }
  return probe;
}

HighReal zeta_q_series(const IntPolynomial& p, const HighReal& q, const HighReal& s0, int terms) {
  if (!(q > 1)) throw DivergentParameters("series form needs q > 1");
  require_convergent(p, s0);
  HighReal sum = 0;
  HighReal q_r = 1;
  for (int r = 1; r <= terms; ++r) {
    q_r *= q;
    sum += eval_real(p, q_r) * boost::multiprecision::pow(q_r, -s0) / r;
  }
  return boost::multiprecision::exp(sum);
}

HighReal zeta_q_closed(const IntPolynomial& p, const HighReal& q, const HighReal& s0) {
  HighReal out = 1;
  for (long i = 0; i <= p.degree(); ++i) {
    const BigInt a = p.coefficient(i);
    if (a == 0) continue;
    const HighReal base = 1 - boost::multiprecision::pow(q, HighReal(i) - s0);
    if (base == 0) throw PoleAt(i);
    out *= boost::multiprecision::pow(base, static_cast<int>(-a));
  }
  return out;
}

LimitReport soule_limit_check(const SchemeDescriptor& d, const LimitProbe& probe) {
  return soule_limit_check(counting_polynomial(d), probe);
}

LimitReport soule_limit_check(const IntPolynomial& p, const LimitProbe& probe) {
  require_convergent(p, probe.s0);
  LimitReport report;
  report.chi = euler_characteristic(p).convert_to<int>();

  // The target is exact only at rational s0; the probe's s0 is converted
  // through its exact binary value.
  const BigRational s0_exact = static_cast<BigRational>(probe.s0);
  report.target = evaluate(zeta_from_counting(p), s0_exact);
  const HighReal target = to_real(report.target);

  for (const HighReal& h : probe.offsets) {
    const HighReal q = 1 + h;
    LimitStep step;
    step.h = h;
    step.value = boost::multiprecision::pow(h, report.chi) * zeta_q_closed(p, q, probe.s0);
    step.relative_error = boost::multiprecision::abs(step.value - target) / boost::multiprecision::abs(target);
    report.steps.push_back(std::move(step));
  }

  const std::size_t n = report.steps.size();
  report.tail_monotone = n >= 4;
  for (std::size_t i = n >= 4 ? n - 3 : 1; i < n; ++i)
    report.tail_monotone = report.tail_monotone && report.steps[i].relative_error < report.steps[i - 1].relative_error;
  report.holds = report.tail_monotone && n > 0 && report.steps.back().relative_error < kLimitFinalTolerance;
  return report;
}

}  // namespace f1zeta

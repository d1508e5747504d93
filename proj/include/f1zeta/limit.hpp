#pragma once

#include <vector>

#include "f1zeta/catalog.hpp"
#include "f1zeta/numeric.hpp"
#include "f1zeta/polyq.hpp"

namespace f1zeta {

/// Evaluation plan for the q -> 1 limit. `offsets` are the h in q = 1 + h.
struct LimitProbe {
  HighReal s0;
  std::vector<HighReal> offsets;
  /// Truncation for the series form; at least 50.
  int series_terms = 200;

  /// h = 10^-1 .. 10^-steps.
  static LimitProbe decimal(const HighReal& s0, int steps = 6);
};

/// exp(sum_{r=1}^{R} N(q^r) q^{-s0 r} / r). Throws DivergentParameters unless
/// q > 1 and s0 exceeds every exponent of q that carries a nonzero coefficient.
HighReal zeta_q_series(const IntPolynomial& p, const HighReal& q, const HighReal& s0, int terms);

/// prod_i (1 - q^{i - s0})^{-a_i}. Throws PoleAt when some q^{i - s0} == 1.
HighReal zeta_q_closed(const IntPolynomial& p, const HighReal& q, const HighReal& s0);

struct LimitStep {
  HighReal h;
  HighReal value;
  HighReal relative_error;
};

struct LimitReport {
  int chi = 0;
  BigRational target;
  std::vector<LimitStep> steps;
  bool tail_monotone = false;
  bool holds = false;
};

inline constexpr double kLimitFinalTolerance = 1e-3;

/// (q-1)^chi zeta_X(q, s0) along the probe against the exact zeta(s0). Holds
/// when the relative errors decrease over the last four steps and the final
/// error is below kLimitFinalTolerance. Throws DivergentParameters when s0 does
/// not exceed every root of the zeta factorization.
LimitReport soule_limit_check(const SchemeDescriptor& d, const LimitProbe& probe);
LimitReport soule_limit_check(const IntPolynomial& p, const LimitProbe& probe);

}  // namespace f1zeta

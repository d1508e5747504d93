#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "f1zeta/catalog.hpp"
#include "f1zeta/numeric.hpp"
#include "f1zeta/polyq.hpp"

namespace f1zeta {

/// sign * prod_i (s - i)^{e_i}, with factors kept sorted by root and no zero
/// exponents stored.
class SignedZeta {
 public:
  using Factors = std::map<std::int64_t, BigInt>;

  SignedZeta() = default;
  /// Drops zero exponents. `sign` must be +1 or -1.
  SignedZeta(int sign, Factors factors);

  int sign() const { return sign_; }
  const Factors& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  SignedZeta negated() const { return SignedZeta(-sign_, factors_); }

  friend bool operator==(const SignedZeta&, const SignedZeta&) = default;

 private:
  int sign_ = 1;
  Factors factors_;
};

/// Exponent of (s - i) is -a_i.
SignedZeta zeta_from_counting(const IntPolynomial& p);
/// Throws NegativeSign for sign -1, std::domain_error for a negative root.
IntPolynomial counting_from_zeta(const SignedZeta& z);

/// Sum of the exponents: the power of -1 that reflection contributes.
BigInt reflection_sign_exponent(const SignedZeta& z);

/// Substitutes s -> c - s. Each (s-i)^e becomes (-1)^e (s-(c-i))^e; the
/// exponents of -1 are summed exactly before the parity is taken.
SignedZeta reflect(const SignedZeta& z, std::int64_t c);

/// z^eps for eps = +1 or -1.
SignedZeta power(const SignedZeta& z, int eps);

/// Exact value at a rational point. Throws PoleAt on a factor with negative exponent.
BigRational evaluate(const SignedZeta& z, const BigRational& s0);

struct Witness {
  BigRational s0;
  BigRational lhs;
  BigRational rhs;
};

/// Outcome of testing zeta(center - s) == sign_factor * zeta(s)^exponent_flip.
struct FunctionalEquationReport {
  std::int64_t center = 0;
  int sign_factor = 1;
  int exponent_flip = 1;
  bool holds = false;
  /// Present exactly when holds is false.
  std::optional<Witness> witness;
};

/// Symbolic comparison of reflect(z, center) with sign * power(z, eps). On
/// failure the witness is the first s0 in 0, 1/2, 1, 3/2, ... where both sides
/// are finite and differ, evaluated pointwise as z(center - s0) and
/// sign * z(s0)^eps.
FunctionalEquationReport check_functional_equation(const SignedZeta& z, std::int64_t center, int sign, int eps);

struct ProjectiveReport {
  FunctionalEquationReport fe;
  BigInt chi;
  int n = 0;
  /// Middle Betti number b_n (zero when n is odd).
  BigInt middle_betti;
  /// The parity rule: the sign is -1 iff n is even and b_n is odd.
  bool predicts_negative_sign = false;
  bool sign_rule_holds = false;
};

/// Reflection about the dimension for a smooth projective scheme. Throws NotSmoothProjective.
ProjectiveReport check_fe_projective(const SchemeDescriptor& d);

struct LemmaRow {
  long i = 0;
  long upper_index = 0;  // d - i
  long lower_index = 0;  // i + N
  BigInt upper;
  BigInt lower;
  bool ok = false;
};

struct LemmaReport {
  GroupShape shape;
  IntPolynomial counting;
  /// a_0 .. a_{N-1} all vanish.
  bool low_coefficients_vanish = false;
  /// First index below N with a nonzero coefficient, if any.
  std::optional<long> first_nonvanishing;
  /// a_{d-i} == (-1)^r a_{i+N} for i in [-N, d].
  std::vector<LemmaRow> rows;
  bool symmetry_holds = false;
  bool holds = false;
};

/// Throws NotAGroup.
LemmaReport check_lemma_group(const SchemeDescriptor& d);

/// Exponent flip (-1)^r and sign (-1)^chi, tested at the given center.
/// Throws NotAGroup.
FunctionalEquationReport check_fe_group(const SchemeDescriptor& d, std::int64_t center);

struct ReflectionCenter {
  std::int64_t center = 0;
  int exponent_flip = 1;
  int sign_factor = 1;

  friend bool operator==(const ReflectionCenter&, const ReflectionCenter&) = default;
};

/// Every (c, eps, sigma) with reflect(z, c) == sigma * power(z, eps), scanning
/// eps in {+1, -1} and c over [2 min_root, 2 max_root]. Throws EmptyZeta.
std::vector<ReflectionCenter> find_reflection_centers(const SignedZeta& z);

enum class RenderFormat { Plain, Latex };

/// Plain: "(s)^-1 (s-1)^-1", leading "-" for sign -1.
/// Latex: "\frac{s-1}{s-3}" with positive exponents upstairs.
std::string render(const SignedZeta& z, RenderFormat format);

}  // namespace f1zeta

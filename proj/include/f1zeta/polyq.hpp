#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "f1zeta/numeric.hpp"

namespace f1zeta {

/// Dense polynomial in q with arbitrary-precision integer coefficients.
///
/// `coeffs()[i]` is the coefficient of q^i. Trailing zeros are always trimmed,
/// so the zero polynomial has an empty coefficient vector and equality is plain
/// sequence comparison.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(std::size_t degree, const BigInt& c = 1);
  /// q - 1
  static IntPolynomial q_minus_one();

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^i; zero outside the stored range (including negative i).
  BigInt coefficient(long i) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Descending-degree rendering, e.g. "q^3-q" or "q^2+2q+1"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial pow(const IntPolynomial& p, unsigned k);

/// Long division by a divisor whose leading coefficient is +1 or -1, so the
/// quotient stays integral. Returns (quotient, remainder).
/// Throws std::invalid_argument for a zero divisor or a non-unit leading coefficient.
std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& num, const IntPolynomial& den);

/// sum_{k=0}^{r} (-1)^{r-k} C(r,k) q^k, built from binomial coefficients
/// rather than repeated multiplication.
IntPolynomial binomial_alternating(unsigned r);

BigInt eval_int(const IntPolynomial& p, const BigInt& x);
HighReal eval_real(const IntPolynomial& p, const HighReal& x);

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) { return add(a, b); }
inline IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return sub(a, b); }
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) { return mul(a, b); }

}  // namespace f1zeta

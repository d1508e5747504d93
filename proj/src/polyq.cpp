#include "f1zeta/polyq.hpp"

#include <algorithm>
#include <stdexcept>

namespace f1zeta {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::q_minus_one() { return IntPolynomial{-1, 1}; }

BigInt IntPolynomial::coefficient(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& r) {
  const auto& a = p.coeffs();
  const auto& b = r.coeffs();
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& r) {
  const auto& a = p.coeffs();
  const auto& b = r.coeffs();
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& r) {
  if (p.is_zero() || r.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = r.coeffs();
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial pow(const IntPolynomial& p, unsigned k) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  const BigInt& lead = den.coeffs().back();
  if (lead != 1 && lead != -1) throw std::invalid_argument("divisor leading coefficient must be +1 or -1");

  std::vector<BigInt> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  if (rem.size() < d.size()) return {IntPolynomial{}, num};

  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt c = rem[k + dd] * lead;  // lead is its own inverse
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= c * d[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial binomial_alternating(unsigned r) {
  std::vector<BigInt> out(r + 1);
  BigInt binom = 1;  // C(r, k)
  for (unsigned k = 0; k <= r; ++k) {
    out[k] = ((r - k) % 2 == 0) ? binom : BigInt(-binom);
    binom = binom * (r - k) / (k + 1);
  }
  return IntPolynomial(std::move(out));
}

BigInt eval_int(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

HighReal eval_real(const IntPolynomial& p, const HighReal& x) {
  HighReal acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + HighReal(c[i]);
  return acc;
}

}  // namespace f1zeta

#include "f1zeta/zeta.hpp"

#include <limits>
#include <stdexcept>

#include "f1zeta/errors.hpp"

namespace f1zeta {

namespace {

BigRational rational_pow(BigRational base, const BigInt& exponent) {
  if (exponent > std::numeric_limits<long>::max() || exponent < -std::numeric_limits<long>::max())
    throw std::overflow_error("exponent too large for exact evaluation");
  long e = exponent.convert_to<long>();
  if (e < 0) {
    base = BigRational(1) / base;
    e = -e;
  }
  BigRational out = 1;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return out;
}

int parity_sign(const BigInt& exponent) { return (exponent % 2 == 0) ? 1 : -1; }

bool has_pole_at(const SignedZeta& z, const BigRational& s0) {
  if (denominator(s0) != 1) return false;
  const BigInt root = numerator(s0);
  if (root > std::numeric_limits<std::int64_t>::max() || root < std::numeric_limits<std::int64_t>::min()) return false;
  auto it = z.factors().find(root.convert_to<std::int64_t>());
  return it != z.factors().end() && it->second < 0;
}

std::string linear_factor(std::int64_t root) {
  if (root == 0) return "s";
  if (root > 0) return "s-" + std::to_string(root);
  return "s+" + std::to_string(-root);
}

std::string latex_group(const std::vector<std::pair<std::int64_t, BigInt>>& group) {
  if (group.empty()) return "1";
  if (group.size() == 1 && group[0].second == 1) return linear_factor(group[0].first);
  std::string out;
  for (const auto& [root, e] : group) {
    out += root == 0 ? "s" : "(" + linear_factor(root) + ")";
    if (e != 1) out += "^{" + e.str() + "}";
  }
  return out;
}

}  // namespace

SignedZeta::SignedZeta(int sign, Factors factors) : sign_(sign), factors_(std::move(factors)) {
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("sign must be +1 or -1");
  for (auto it = factors_.begin(); it != factors_.end();) it = it->second == 0 ? factors_.erase(it) : std::next(it);
}

SignedZeta zeta_from_counting(const IntPolynomial& p) {
  SignedZeta::Factors f;
  for (long i = 0; i <= p.degree(); ++i) {
    const BigInt a = p.coefficient(i);
    if (a != 0) f.emplace(i, -a);
  }
  return SignedZeta(1, std::move(f));
}

IntPolynomial counting_from_zeta(const SignedZeta& z) {
  if (z.sign() != 1) throw NegativeSign("a zeta function with sign -1 has no counting polynomial");
  if (z.empty()) return {};
  if (z.factors().begin()->first < 0) throw std::domain_error("negative root has no counting-polynomial coefficient");
  std::vector<BigInt> c(static_cast<std::size_t>(z.factors().rbegin()->first) + 1);
  for (const auto& [root, e] : z.factors()) c[static_cast<std::size_t>(root)] = -e;
  return IntPolynomial(std::move(c));
}

BigInt reflection_sign_exponent(const SignedZeta& z) {
  BigInt total = 0;
  for (const auto& [root, e] : z.factors()) total += e;
  return total;
}

SignedZeta reflect(const SignedZeta& z, std::int64_t c) {
  SignedZeta::Factors f;
  for (const auto& [root, e] : z.factors()) f.emplace(c - root, e);
  return SignedZeta(z.sign() * parity_sign(reflection_sign_exponent(z)), std::move(f));
}

SignedZeta power(const SignedZeta& z, int eps) {
  if (eps == 1) return z;
  if (eps != -1) throw std::invalid_argument("exponent flip must be +1 or -1");
  SignedZeta::Factors f;
  for (const auto& [root, e] : z.factors()) f.emplace(root, -e);
  return SignedZeta(z.sign(), std::move(f));
}

BigRational evaluate(const SignedZeta& z, const BigRational& s0) {
  BigRational out = z.sign();
  for (const auto& [root, e] : z.factors()) {
    const BigRational base = s0 - BigRational(root);
    if (base == 0) {
      if (e < 0) throw PoleAt(root);
      return 0;
    }
    out *= rational_pow(base, e);
  }
  return out;
}

FunctionalEquationReport check_functional_equation(const SignedZeta& z, std::int64_t center, int sign, int eps) {
  FunctionalEquationReport report;
  report.center = center;
  report.sign_factor = sign;
  report.exponent_flip = eps;

  const SignedZeta rhs = power(z, eps);
  const SignedZeta rhs_signed = sign == 1 ? rhs : rhs.negated();
  report.holds = reflect(z, center) == rhs_signed;
  if (report.holds) return report;

  // Two distinct rational functions agree at finitely many points, bounded by
  // the total factor count on both sides.
  std::int64_t span = 8;
  for (const auto& [root, e] : z.factors()) span += 2 * (root < 0 ? -root : root) + 2;
  span += 2 * (center < 0 ? -center : center);
  for (std::int64_t k = 0; k <= 4 * span; ++k) {
    const BigRational s0(k, 2);
    const BigRational reflected = BigRational(center) - s0;
    if (has_pole_at(z, reflected) || has_pole_at(rhs, s0)) continue;
    const BigRational left = evaluate(z, reflected);
    const BigRational right = BigRational(sign) * evaluate(rhs, s0);
    if (left != right) {
      report.witness = Witness{s0, left, right};
      return report;
    }
  }
  throw InternalInconsistency("symbolic mismatch without a pointwise witness");
}

ProjectiveReport check_fe_projective(const SchemeDescriptor& d) {
  if (!d.is_smooth_projective) throw NotSmoothProjective(d.to_string() + " is not smooth projective");
  const IntPolynomial p = counting_polynomial(d);
  const BettiVector betti = betti_from_counting(p, d.dimension);

  ProjectiveReport out;
  out.n = d.dimension;
  out.chi = euler_characteristic(p);
  out.middle_betti = betti.b[static_cast<std::size_t>(out.n)];
  out.predicts_negative_sign = out.n % 2 == 0 && out.middle_betti % 2 != 0;
  out.fe = check_functional_equation(zeta_from_counting(p), out.n, parity_sign(out.chi), 1);
  out.sign_rule_holds = (out.fe.sign_factor == -1) == out.predicts_negative_sign;
  return out;
}

LemmaReport check_lemma_group(const SchemeDescriptor& d) {
  LemmaReport out;
  out.shape = group_shape(d);
  out.counting = counting_polynomial(d);
  const long r = out.shape.rank_r;
  const long big_n = out.shape.num_positive_roots_N;
  const long dim = out.shape.dimension_d;

  out.low_coefficients_vanish = true;
  for (long i = 0; i < big_n; ++i) {
    if (out.counting.coefficient(i) != 0) {
      out.low_coefficients_vanish = false;
      out.first_nonvanishing = i;
      break;
    }
  }

  const int flip = r % 2 == 0 ? 1 : -1;
  out.symmetry_holds = true;
  for (long i = -big_n; i <= dim; ++i) {
    LemmaRow row;
    row.i = i;
    row.upper_index = dim - i;
    row.lower_index = i + big_n;
    row.upper = out.counting.coefficient(row.upper_index);
    row.lower = out.counting.coefficient(row.lower_index);
    row.ok = row.upper == flip * row.lower;
    out.symmetry_holds = out.symmetry_holds && row.ok;
    out.rows.push_back(std::move(row));
  }
  out.holds = out.low_coefficients_vanish && out.symmetry_holds;
  return out;
}

FunctionalEquationReport check_fe_group(const SchemeDescriptor& d, std::int64_t center) {
  const GroupShape shape = group_shape(d);
  const IntPolynomial p = counting_polynomial(d);
  const int eps = shape.rank_r % 2 == 0 ? 1 : -1;
  const int sign = parity_sign(euler_characteristic(p));
  return check_functional_equation(zeta_from_counting(p), center, sign, eps);
}

std::vector<ReflectionCenter> find_reflection_centers(const SignedZeta& z) {
  if (z.empty()) throw EmptyZeta("zeta function has no factors");
  const std::int64_t lo = z.factors().begin()->first;
  const std::int64_t hi = z.factors().rbegin()->first;
  std::vector<ReflectionCenter> out;
  for (int eps : {1, -1}) {
    const SignedZeta target = power(z, eps);
    for (std::int64_t c = 2 * lo; c <= 2 * hi; ++c) {
      const SignedZeta reflected = reflect(z, c);
      if (reflected.factors() != target.factors()) continue;
      out.push_back({c, eps, reflected.sign() * target.sign()});
    }
  }
  return out;
}

std::string render(const SignedZeta& z, RenderFormat format) {
  std::string prefix = z.sign() == -1 ? "-" : "";
  if (format == RenderFormat::Plain) {
    if (z.empty()) return prefix + "1";
    std::string out;
    for (const auto& [root, e] : z.factors()) {
      if (!out.empty()) out += " ";
      out += "(" + linear_factor(root) + ")^" + e.str();
    }
    return prefix + out;
  }

  std::vector<std::pair<std::int64_t, BigInt>> upstairs, downstairs;
  for (const auto& [root, e] : z.factors()) {
    if (e > 0)
      upstairs.emplace_back(root, e);
    else
      downstairs.emplace_back(root, BigInt(-e));
  }
  if (downstairs.empty()) return prefix + latex_group(upstairs);
  return prefix + "\\frac{" + latex_group(upstairs) + "}{" + latex_group(downstairs) + "}";
}

}  // namespace f1zeta

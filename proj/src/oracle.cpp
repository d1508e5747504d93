#include "f1zeta/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "f1zeta/errors.hpp"
#include "f1zeta/polyq.hpp"

namespace f1zeta {

namespace {

using Row = std::vector<int>;
using Matrix = std::vector<Row>;

// Advances `digits` as a base-p counter; false once it wraps to all zeros.
bool odometer(std::vector<int>& digits, int p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

int rank_mod_p(Matrix m, const PrimeField& f) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const int inv = f.inv(m[rank][c]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const int factor = f.mul(m[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[rank][k]));
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int determinant_mod_p(Matrix m, const PrimeField& f) {
  const std::size_t n = m.size();
  int det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = f.sub(0, det);
    }
    det = f.mul(det, m[c][c]);
    const int inv = f.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const int factor = f.mul(m[r][c], inv);
      for (std::size_t k = c; k < n; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[c][k]));
    }
  }
  return det;
}

void check_size(double estimate, const OracleOptions& options) {
  if (estimate > options.max_enumeration) throw TooLargeInstance(estimate);
}

// All k-subsets of {0..n-1}, ascending.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Every k-dimensional subspace of F_p^n as its reduced row-echelon basis.
std::vector<Matrix> rref_subspaces(int k, int n, const PrimeField& f) {
  std::vector<Matrix> out;
  for (const auto& pivots : subsets(n, k)) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::pair<int, int>> free_slots;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_slots.emplace_back(r, c);

    std::vector<int> digits(free_slots.size(), 0);
    do {
      Matrix m(static_cast<std::size_t>(k), Row(static_cast<std::size_t>(n), 0));
      for (int r = 0; r < k; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[r])] = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        m[static_cast<std::size_t>(free_slots[s].first)][static_cast<std::size_t>(free_slots[s].second)] = digits[s];
      if (rank_mod_p(m, f) != k) throw InternalInconsistency("row-echelon candidate is rank deficient");
      out.push_back(std::move(m));
    } while (!free_slots.empty() && odometer(digits, f.p()));
  }
  return out;
}

bool contained_in(const Matrix& small, const Matrix& big, const PrimeField& f) {
  Matrix stacked = big;
  stacked.insert(stacked.end(), small.begin(), small.end());
  return rank_mod_p(stacked, f) == static_cast<int>(big.size());
}

std::uint64_t count_projective(int n, const PrimeField& f) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t count = 0;
  while (odometer(v, f.p())) {
    // canonical representative: first nonzero coordinate equals 1
    for (int x : v) {
      if (x == 0) continue;
      count += x == 1;
      break;
    }
  }
  return count;
}

std::uint64_t count_tuples(int n, const PrimeField& f, bool nonzero_only) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int x : v) ok = ok && (!nonzero_only || x != 0);
    count += ok;
  } while (!v.empty() && odometer(v, f.p()));
  return count;
}

std::uint64_t count_matrices(int n, const PrimeField& f, bool special) {
  std::vector<int> entries(static_cast<std::size_t>(n * n), 0);
  std::uint64_t count = 0;
  do {
    Matrix m(static_cast<std::size_t>(n), Row(static_cast<std::size_t>(n)));
    for (int i = 0; i < n * n; ++i) m[static_cast<std::size_t>(i / n)][static_cast<std::size_t>(i % n)] = entries[i];
    const int det = determinant_mod_p(std::move(m), f);
    count += special ? det == 1 : det != 0;
  } while (odometer(entries, f.p()));
  return count;
}

std::uint64_t count_flags(int n, const PrimeField& f) {
  // ways[j] holds, for each (j+1)-dimensional subspace, the number of chains below it.
  std::vector<Matrix> prev = rref_subspaces(1, n, f);
  std::vector<std::uint64_t> ways(prev.size(), 1);
  for (int dim = 2; dim < n; ++dim) {
    std::vector<Matrix> cur = rref_subspaces(dim, n, f);
    std::vector<std::uint64_t> next(cur.size(), 0);
    for (std::size_t w = 0; w < cur.size(); ++w)
      for (std::size_t v = 0; v < prev.size(); ++v)
        if (contained_in(prev[v], cur[w], f)) next[w] += ways[v];
    prev = std::move(cur);
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

double pow_d(int p, int e) { return std::pow(static_cast<double>(p), e); }

BigInt count(const SchemeDescriptor& d, const PrimeField& f, const OracleOptions& options) {
  const int p = f.p();
  if (const auto* v = std::get_if<ProjectiveSpace>(&d.variant)) {
    if (v->n > 8) throw TooLargeInstance(pow_d(p, v->n + 1));
    check_size(pow_d(p, v->n + 1), options);
    return count_projective(v->n, f);
  }
  if (const auto* v = std::get_if<AffineSpace>(&d.variant)) {
    if (v->n > 6) throw TooLargeInstance(pow_d(p, v->n));
    check_size(pow_d(p, v->n), options);
    return count_tuples(v->n, f, false);
  }
  if (const auto* v = std::get_if<Torus>(&d.variant)) {
    if (v->r > 6) throw TooLargeInstance(pow_d(p, v->r));
    check_size(pow_d(p, v->r), options);
    return count_tuples(v->r, f, true);
  }
  if (const auto* v = std::get_if<Grassmannian>(&d.variant)) {
    const double size = pow_d(p, v->k * (v->n - v->k)) * std::pow(2.0, v->n);
    if (v->n > 5) throw TooLargeInstance(size);
    check_size(size, options);
    return rref_subspaces(v->k, v->n, f).size();
  }
  if (const auto* v = std::get_if<FlagVariety>(&d.variant)) {
    const auto& cs = v->root.components;
    if (cs.size() != 1 || cs[0].family != Family::A) throw OracleUnsupported("flag varieties other than type A");
    const int n = cs[0].rank + 1;
    const double size = pow_d(p, 2 * n) * n;
    if (n > 3) throw TooLargeInstance(size);
    check_size(size, options);
    return count_flags(n, f);
  }
  if (const auto* v = std::get_if<ReductiveGroup>(&d.variant)) {
    const auto& cs = v->root.components;
    const bool type_a = cs.empty() || (cs.size() == 1 && cs[0].family == Family::A);
    if (!type_a || v->torus_rank > 1) throw OracleUnsupported("groups other than GL(n) and SL(n)");
    const int n = cs.empty() ? 1 : cs[0].rank + 1;
    const double size = pow_d(p, n * n);
    if (n > 3) throw TooLargeInstance(size);
    check_size(size, options);
    return count_matrices(n, f, v->torus_rank == 0);
  }
  const auto& prod = std::get<Product>(d.variant);
  return count(*prod.left, f, options) * count(*prod.right, f, options);
}

}  // namespace

PrimeField::PrimeField(int p) : p_(p) {
  bool prime = p >= 2;
  for (int i = 2; prime && i * i <= p; ++i) prime = p % i != 0;
  if (!prime || p > 46'340) throw std::invalid_argument("field size must be a prime, got " + std::to_string(p));
}

int PrimeField::inv(int a) const {
  if (a % p_ == 0) throw std::domain_error("zero has no inverse");
  // a^(p-2)
  int result = 1;
  int base = a % p_;
  for (int e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

BigInt count_points(const SchemeDescriptor& d, int p, const OracleOptions& options) {
  return count(d, PrimeField(p), options);
}

std::vector<OracleRow> verify_counting(const SchemeDescriptor& d, const std::vector<int>& primes,
                                       const OracleOptions& options) {
  const IntPolynomial n_q = counting_polynomial(d);
  std::vector<OracleRow> rows;
  for (int p : primes) {
    OracleRow row;
    row.p = p;
    row.predicted = eval_int(n_q, p);
    try {
      row.counted = count_points(d, p, options);
      row.status = *row.counted == row.predicted ? OracleStatus::Match : OracleStatus::Mismatch;
    } catch (const TooLargeInstance& e) {
      row.status = OracleStatus::Skipped;
      row.note = e.what();
    } catch (const OracleUnsupported& e) {
      row.status = OracleStatus::Skipped;
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace f1zeta

#include "f1zeta/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include "f1zeta/errors.hpp"

namespace f1zeta {

namespace {

constexpr int kMaxClassicalRank = 64;

using Matrix = std::vector<std::vector<int>>;

void link(Matrix& m, int offset, int i, int j, int ij = -1, int ji = -1) {
  m[offset + i][offset + j] = ij;
  m[offset + j][offset + i] = ji;
}

// Bourbaki numbering. For a double or triple bond, the row of the short root
// carries the -2 or -3.
void fill_component(Matrix& m, int offset, const RootComponent& c) {
  const int n = c.rank;
  for (int i = 0; i < n; ++i) m[offset + i][offset + i] = 2;
  switch (c.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(m, offset, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(m, offset, i, i + 1);
      link(m, offset, n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(m, offset, i, i + 1);
      link(m, offset, n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(m, offset, i, i + 1);
      link(m, offset, n - 3, n - 1);
      break;
    case Family::E:
      link(m, offset, 0, 2);
      link(m, offset, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(m, offset, i, i + 1);
      break;
    case Family::F:
      link(m, offset, 0, 1);
      link(m, offset, 1, 2, -1, -2);  // alpha_3, alpha_4 short
      link(m, offset, 2, 3);
      break;
    case Family::G:
      link(m, offset, 0, 1, -3, -1);  // alpha_1 short
      break;
  }
}

std::vector<int> component_degrees(const RootComponent& c) {
  std::vector<int> d;
  switch (c.family) {
    case Family::A:
      for (int i = 2; i <= c.rank + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= c.rank; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < c.rank; ++i) d.push_back(2 * i);
      d.push_back(c.rank);
      break;
    case Family::E:
      if (c.rank == 6) d = {2, 5, 6, 8, 9, 12};
      if (c.rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (c.rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F:
      d = {2, 6, 8, 12};
      break;
    case Family::G:
      d = {2, 6};
      break;
  }
  return d;
}

bool is_positive(const RootVector& v) {
  bool any = false;
  for (int x : v) {
    if (x < 0) return false;
    any = any || x != 0;
  }
  return any;
}

// Reflection s_i(v) = v - <alpha_i^vee, v> alpha_i.
RootVector reflect(const Matrix& cartan, int i, RootVector v) {
  int pairing = 0;
  for (std::size_t j = 0; j < v.size(); ++j) pairing += cartan[i][j] * v[j];
  v[i] -= pairing;
  return v;
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family family_from_letter(char c) {
  const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u < 'A' || u > 'G') throw InvalidRank(std::string("unknown root system family '") + c + "'");
  return static_cast<Family>(u - 'A');
}

void validate_component(const RootComponent& c) {
  const int n = c.rank;
  bool ok = false;
  switch (c.family) {
    case Family::A: ok = n >= 1 && n <= kMaxClassicalRank; break;
    case Family::B:
    case Family::C: ok = n >= 2 && n <= kMaxClassicalRank; break;
    case Family::D: ok = n >= 3 && n <= kMaxClassicalRank; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok)
    throw InvalidRank(std::string("invalid rank ") + std::to_string(n) + " for type " + family_letter(c.family));
}

RootComponent normalize_component(RootComponent c) {
  if (c.family == Family::C && c.rank == 2) return {Family::B, 2};
  if (c.family == Family::D && c.rank == 3) return {Family::A, 3};
  return c;
}

RootSystemSpec RootSystemSpec::make(std::vector<RootComponent> components) {
  RootSystemSpec spec;
  for (const auto& c : components) {
    validate_component(c);
    spec.components.push_back(normalize_component(c));
  }
  return spec;
}

int RootSystemSpec::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string RootSystemSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += "x";
    out += family_letter(components[i].family);
    out += std::to_string(components[i].rank);
  }
  return out;
}

std::vector<std::vector<int>> cartan_matrix(const RootSystemSpec& spec) {
  const int r = spec.rank();
  Matrix m(r, std::vector<int>(r, 0));
  int offset = 0;
  for (const auto& c : spec.components) {
    fill_component(m, offset, c);
    offset += c.rank;
  }
  return m;
}

std::vector<RootVector> positive_roots(const RootSystemSpec& spec) {
  const Matrix cartan = cartan_matrix(spec);
  const int r = spec.rank();
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (int i = 0; i < r; ++i) {
    RootVector e(r, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& root : frontier) {
      for (int i = 0; i < r; ++i) {
        RootVector image = reflect(cartan, i, root);
        if (is_positive(image) && seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  std::vector<RootVector> out(seen.begin(), seen.end());
  auto height = [](const RootVector& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const RootVector& a, const RootVector& b) { return height(a) < height(b); });
  return out;
}

std::vector<int> invariant_degrees(const RootSystemSpec& spec) {
  std::vector<int> out;
  for (const auto& c : spec.components) {
    auto d = component_degrees(c);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

BigInt weyl_order_by_degrees(const RootSystemSpec& spec) {
  BigInt order = 1;
  for (int d : invariant_degrees(spec)) order *= d;
  return order;
}

WeylGroupData weyl_enumerate(const RootSystemSpec& spec, std::uint64_t cap, bool verify_lengths) {
  const BigInt predicted = weyl_order_by_degrees(spec);
  if (predicted > cap) {
    const std::uint64_t order = predicted > std::numeric_limits<std::uint64_t>::max()
                                    ? std::numeric_limits<std::uint64_t>::max()
                                    : predicted.convert_to<std::uint64_t>();
    throw TooLarge(order, cap);
  }

  const Matrix cartan = cartan_matrix(spec);
  const int r = spec.rank();
  const std::vector<RootVector> roots = verify_lengths ? positive_roots(spec) : std::vector<RootVector>{};

  // An element is the r x r matrix whose column j is w(alpha_j), stored
  // column-major as signed bytes.
  using Element = std::string;
  auto column_positive = [r](const Element& w, int j) {
    bool any = false;
    for (int k = 0; k < r; ++k) {
      const auto x = static_cast<signed char>(w[j * r + k]);
      if (x < 0) return false;
      any = any || x != 0;
    }
    return any;
  };
  auto inversions = [&](const Element& w) {
    int count = 0;
    for (const auto& beta : roots) {
      bool negative = false;
      for (int k = 0; k < r && !negative; ++k) {
        int coord = 0;
        for (int j = 0; j < r; ++j) coord += beta[j] * static_cast<signed char>(w[j * r + k]);
        negative = coord < 0;
      }
      count += negative;
    }
    return count;
  };

  Element identity(static_cast<std::size_t>(r) * r, '\0');
  for (int j = 0; j < r; ++j) identity[j * r + j] = 1;

  WeylGroupData data;
  data.semisimple_rank = r;
  std::vector<Element> level{identity};
  std::uint64_t total = 0;
  while (!level.empty()) {
    const auto length = data.length_histogram.size();
    data.length_histogram.push_back(level.size());
    total += level.size();
    if (verify_lengths) {
      for (const auto& w : level)
        if (inversions(w) != static_cast<int>(length))
          throw InternalInconsistency("BFS depth differs from inversion count");
    }

    std::vector<Element> next;
    std::unordered_set<Element> seen;
    for (const auto& w : level) {
      for (int j = 0; j < r; ++j) {
        if (!column_positive(w, j)) continue;
        // (w s_j)(alpha_k) = w(alpha_k) - <alpha_j^vee, alpha_k> w(alpha_j)
        Element v = w;
        for (int k = 0; k < r; ++k) {
          const int a = cartan[j][k];
          if (a == 0) continue;
          for (int t = 0; t < r; ++t)
            v[k * r + t] = static_cast<char>(static_cast<signed char>(v[k * r + t]) -
                                             a * static_cast<signed char>(w[j * r + t]));
        }
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    level = std::move(next);
  }

  data.num_positive_roots = static_cast<int>(data.length_histogram.size()) - 1;
  data.group_order = total;
  return data;
}

IntPolynomial poincare_polynomial(const WeylGroupData& w) {
  std::vector<BigInt> c;
  c.reserve(w.length_histogram.size());
  for (auto n : w.length_histogram) c.emplace_back(n);
  return IntPolynomial(std::move(c));
}

IntPolynomial poincare_by_degrees(const RootSystemSpec& spec) {
  for (const auto& c : spec.components) validate_component(c);
  IntPolynomial out = IntPolynomial::constant(1);
  for (int d : invariant_degrees(spec)) {
    std::vector<BigInt> ones(static_cast<std::size_t>(d), BigInt(1));
    out = mul(out, IntPolynomial(std::move(ones)));
  }
  return out;
}

IntPolynomial weyl_poincare(const RootSystemSpec& spec, std::uint64_t cap) {
  try {
    return poincare_polynomial(weyl_enumerate(spec, cap));
  } catch (const TooLarge&) {
    return poincare_by_degrees(spec);
  }
}

}  // namespace f1zeta

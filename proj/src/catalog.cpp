#include "f1zeta/catalog.hpp"

#include <type_traits>

#include "f1zeta/errors.hpp"

namespace f1zeta {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr int kMaxParameter = 64;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidRank(what);
}

void require_parameter(int value, int min, const char* name) {
  require(value >= min && value <= kMaxParameter, std::string(name) + " must be in [" + std::to_string(min) + ", " +
                                                      std::to_string(kMaxParameter) + "], got " +
                                                      std::to_string(value));
}

int positive_root_count(const RootSystemSpec& root) { return static_cast<int>(positive_roots(root).size()); }

SchemeDescriptor make(SchemeDescriptor::Variant v, int dimension, bool smooth_projective) {
  SchemeDescriptor d;
  d.variant = std::move(v);
  d.dimension = dimension;
  d.is_smooth_projective = smooth_projective;
  return d;
}

IntPolynomial gaussian_binomial(int n, int k) {
  const IntPolynomial one = IntPolynomial::constant(1);
  IntPolynomial num = one;
  IntPolynomial den = one;
  for (int i = 1; i <= k; ++i) {
    num = mul(num, sub(IntPolynomial::monomial(static_cast<std::size_t>(n - k + i)), one));
    den = mul(den, sub(IntPolynomial::monomial(static_cast<std::size_t>(i)), one));
  }
  auto [quot, rem] = divmod(num, den);
  if (!rem.is_zero())
    throw InternalInconsistency("Gaussian binomial [" + std::to_string(n) + " choose " + std::to_string(k) +
                                "] left a nonzero remainder");
  return quot;
}

}  // namespace

SchemeDescriptor SchemeDescriptor::projective_space(int n) {
  require_parameter(n, 0, "P(n): n");
  return make(ProjectiveSpace{n}, n, true);
}

SchemeDescriptor SchemeDescriptor::affine_space(int n) {
  require_parameter(n, 0, "A(n): n");
  return make(AffineSpace{n}, n, false);
}

SchemeDescriptor SchemeDescriptor::torus(int r) {
  require_parameter(r, 1, "T(r): r");
  return make(Torus{r}, r, false);
}

SchemeDescriptor SchemeDescriptor::grassmannian(int k, int n) {
  require_parameter(n, 0, "Gr(k,n): n");
  require(k >= 0 && k <= n, "Gr(k,n) requires 0 <= k <= n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
  return make(Grassmannian{k, n}, k * (n - k), true);
}

SchemeDescriptor SchemeDescriptor::flag_variety(RootSystemSpec root) {
  root = RootSystemSpec::make(std::move(root.components));
  require(!root.components.empty(), "Flag requires a nonempty root system");
  const int dim = positive_root_count(root);
  return make(FlagVariety{std::move(root)}, dim, true);
}

SchemeDescriptor SchemeDescriptor::reductive_group(RootSystemSpec root, int torus_rank) {
  root = RootSystemSpec::make(std::move(root.components));
  require(torus_rank >= 0 && torus_rank <= kMaxParameter,
          "central torus rank must be in [0, " + std::to_string(kMaxParameter) + "]");
  const int r = root.rank() + torus_rank;
  const int dim = r + 2 * positive_root_count(root);
  return make(ReductiveGroup{std::move(root), torus_rank}, dim, false);
}

SchemeDescriptor SchemeDescriptor::general_linear(int n) {
  require_parameter(n, 1, "GL(n): n");
  RootSystemSpec root = n == 1 ? RootSystemSpec{} : RootSystemSpec::single(Family::A, n - 1);
  return reductive_group(std::move(root), 1);
}

SchemeDescriptor SchemeDescriptor::special_linear(int n) {
  require_parameter(n, 1, "SL(n): n");
  RootSystemSpec root = n == 1 ? RootSystemSpec{} : RootSystemSpec::single(Family::A, n - 1);
  return reductive_group(std::move(root), 0);
}

SchemeDescriptor SchemeDescriptor::product(SchemeDescriptor left, SchemeDescriptor right) {
  const int dim = left.dimension + right.dimension;
  const bool sp = left.is_smooth_projective && right.is_smooth_projective;
  return make(Product{std::make_shared<const SchemeDescriptor>(std::move(left)),
                      std::make_shared<const SchemeDescriptor>(std::move(right))},
              dim, sp);
}

std::string SchemeDescriptor::to_string() const {
  return std::visit(
      Overloaded{
          [](const ProjectiveSpace& v) { return "P(" + std::to_string(v.n) + ")"; },
          [](const AffineSpace& v) { return "A(" + std::to_string(v.n) + ")"; },
          [](const Torus& v) { return "T(" + std::to_string(v.r) + ")"; },
          [](const Grassmannian& v) { return "Gr(" + std::to_string(v.k) + "," + std::to_string(v.n) + ")"; },
          [](const FlagVariety& v) { return "Flag(" + v.root.to_string() + ")"; },
          [](const ReductiveGroup& v) -> std::string {
            const auto& cs = v.root.components;
            const bool type_a = cs.size() == 1 && cs[0].family == Family::A;
            if ((cs.empty() || type_a) && v.torus_rank <= 1) {
              const int n = cs.empty() ? 1 : cs[0].rank + 1;
              return (v.torus_rank == 1 ? "GL(" : "SL(") + std::to_string(n) + ")";
            }
            if (cs.empty()) return "T(" + std::to_string(v.torus_rank) + ")";
            std::string out = "Group(" + v.root.to_string();
            if (v.torus_rank != 0) out += ",torus=" + std::to_string(v.torus_rank);
            return out + ")";
          },
          [](const Product& v) { return v.left->to_string() + "x" + v.right->to_string(); },
      },
      variant);
}

bool operator==(const SchemeDescriptor& a, const SchemeDescriptor& b) {
  if (a.variant.index() != b.variant.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.variant);
        if constexpr (std::is_same_v<T, ProjectiveSpace> || std::is_same_v<T, AffineSpace>) return x.n == y.n;
        else if constexpr (std::is_same_v<T, Torus>) return x.r == y.r;
        else if constexpr (std::is_same_v<T, Grassmannian>) return x.k == y.k && x.n == y.n;
        else if constexpr (std::is_same_v<T, FlagVariety>) return x.root == y.root;
        else if constexpr (std::is_same_v<T, ReductiveGroup>) return x.root == y.root && x.torus_rank == y.torus_rank;
        else return *x.left == *y.left && *x.right == *y.right;
      },
      a.variant);
}

IntPolynomial counting_polynomial(const SchemeDescriptor& d) {
  IntPolynomial p = std::visit(
      Overloaded{
          [](const ProjectiveSpace& v) {
            return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(v.n) + 1, BigInt(1)));
          },
          [](const AffineSpace& v) { return IntPolynomial::monomial(static_cast<std::size_t>(v.n)); },
          [](const Torus& v) { return pow(IntPolynomial::q_minus_one(), static_cast<unsigned>(v.r)); },
          [](const Grassmannian& v) { return gaussian_binomial(v.n, v.k); },
          [](const FlagVariety& v) { return weyl_poincare(v.root); },
          [](const ReductiveGroup& v) {
            const auto r = static_cast<unsigned>(v.root.rank() + v.torus_rank);
            const auto big_n = static_cast<std::size_t>(positive_root_count(v.root));
            return mul(mul(pow(IntPolynomial::q_minus_one(), r), IntPolynomial::monomial(big_n)),
                       weyl_poincare(v.root));
          },
          [](const Product& v) { return mul(counting_polynomial(*v.left), counting_polynomial(*v.right)); },
      },
      d.variant);
  if (p.degree() != d.dimension)
    throw InternalInconsistency("counting polynomial of " + d.to_string() + " has degree " +
                                std::to_string(p.degree()) + ", expected dimension " + std::to_string(d.dimension));
  return p;
}

std::optional<ReductiveGroup> as_reductive_group(const SchemeDescriptor& d) {
  if (const auto* g = std::get_if<ReductiveGroup>(&d.variant)) return *g;
  if (const auto* t = std::get_if<Torus>(&d.variant)) return ReductiveGroup{RootSystemSpec{}, t->r};
  if (const auto* p = std::get_if<Product>(&d.variant)) {
    auto left = as_reductive_group(*p->left);
    auto right = as_reductive_group(*p->right);
    if (!left || !right) return std::nullopt;
    ReductiveGroup g = *left;
    g.root.components.insert(g.root.components.end(), right->root.components.begin(), right->root.components.end());
    g.torus_rank += right->torus_rank;
    return g;
  }
  return std::nullopt;
}

GroupShape group_shape(const SchemeDescriptor& d) {
  auto g = as_reductive_group(d);
  if (!g) throw NotAGroup(d.to_string() + " is not a reductive group");
  GroupShape s;
  s.rank_r = g->root.rank() + g->torus_rank;
  s.num_positive_roots_N = positive_root_count(g->root);
  s.dimension_d = s.rank_r + 2 * s.num_positive_roots_N;
  if (s.dimension_d != d.dimension)
    throw InternalInconsistency("group dimension r+2N disagrees with stored dimension for " + d.to_string());
  return s;
}

BettiVector betti_from_counting(const IntPolynomial& p, int n) {
  for (long i = 0; i <= p.degree(); ++i)
    if (p.coefficient(i) < 0)
      throw NotEffective("coefficient of q^" + std::to_string(i) + " is negative: " + p.coefficient(i).str());
  if (p.degree() > n)
    throw DualityViolation("degree " + std::to_string(p.degree()) + " exceeds dimension " + std::to_string(n));

  BettiVector out;
  out.n = n;
  out.b.assign(static_cast<std::size_t>(2 * n + 1), BigInt(0));
  for (int i = 0; i <= n; ++i) out.b[static_cast<std::size_t>(2 * i)] = p.coefficient(i);
  for (int i = 0; i <= n; ++i) {
    if (out.b[static_cast<std::size_t>(2 * n - 2 * i)] != out.b[static_cast<std::size_t>(2 * i)])
      throw DualityViolation("b_" + std::to_string(2 * n - 2 * i) + " != b_" + std::to_string(2 * i));
  }
  return out;
}

BigInt euler_characteristic(const IntPolynomial& p) { return eval_int(p, 1); }

}  // namespace f1zeta

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "f1zeta/polyq.hpp"
#include "f1zeta/weyl.hpp"

namespace f1zeta {

struct SchemeDescriptor;

struct ProjectiveSpace {
  int n;
};
struct AffineSpace {
  int n;
};
struct Torus {
  int r;
};
struct Grassmannian {
  int k;
  int n;
};
struct FlagVariety {
  RootSystemSpec root;
};
/// Split reductive group with the given semisimple root datum and a central
/// torus of rank `torus_rank`. GL(n) is (A_{n-1}, 1), SL(n) is (A_{n-1}, 0).
struct ReductiveGroup {
  RootSystemSpec root;
  int torus_rank;
};
struct Product {
  std::shared_ptr<const SchemeDescriptor> left;
  std::shared_ptr<const SchemeDescriptor> right;
};

/// One scheme of the catalog. Immutable once built; construct through the
/// factory functions, which validate parameter ranges and record the dimension.
struct SchemeDescriptor {
  using Variant =
      std::variant<ProjectiveSpace, AffineSpace, Torus, Grassmannian, FlagVariety, ReductiveGroup, Product>;

  Variant variant;
  int dimension = 0;
  bool is_smooth_projective = false;

  static SchemeDescriptor projective_space(int n);
  static SchemeDescriptor affine_space(int n);
  static SchemeDescriptor torus(int r);
  static SchemeDescriptor grassmannian(int k, int n);
  static SchemeDescriptor flag_variety(RootSystemSpec root);
  static SchemeDescriptor reductive_group(RootSystemSpec root, int torus_rank);
  static SchemeDescriptor general_linear(int n);
  static SchemeDescriptor special_linear(int n);
  static SchemeDescriptor product(SchemeDescriptor left, SchemeDescriptor right);

  /// Canonical text that parses back to an equal descriptor.
  std::string to_string() const;
};

bool operator==(const SchemeDescriptor& a, const SchemeDescriptor& b);

/// Grammar (keywords case-insensitive, blanks allowed between tokens):
///
///   expr   := term ("x" term)*
///   term   := "P(" int ")" | "A(" int ")" | "T(" int ")" | "Gr(" int "," int ")"
///           | "GL(" int ")" | "SL(" int ")" | "Flag(" family rank ")"
///           | "Group(" family rank ("," "torus" "=" int)? ")"
///   family := "A" | "B" | "C" | "D" | "E" | "F" | "G"
///
/// Products associate to the left. Throws ParseError (with byte offset and the
/// expected tokens) or InvalidRank.
SchemeDescriptor parse(std::string_view text);

/// Renders a parse error as the input line, a caret line, and the message.
std::string format_parse_error(std::string_view text, std::size_t offset, const std::string& message);

/// Exact counting polynomial N(q). Grassmannians go through exact polynomial
/// division and throw InternalInconsistency on a nonzero remainder.
IntPolynomial counting_polynomial(const SchemeDescriptor& d);

struct GroupShape {
  int rank_r = 0;
  int num_positive_roots_N = 0;
  int dimension_d = 0;
};

/// The single reductive group a descriptor denotes, if any. Tori and products
/// of groups are groups as well; their root data are concatenated.
std::optional<ReductiveGroup> as_reductive_group(const SchemeDescriptor& d);

/// Throws NotAGroup.
GroupShape group_shape(const SchemeDescriptor& d);

struct BettiVector {
  int n = 0;
  /// b_0 .. b_{2n}
  std::vector<BigInt> b;
};

/// Reads b_{2i} off the coefficients of q^i. Throws NotEffective for a
/// negative coefficient and DualityViolation when b_{2n-2i} != b_{2i}.
BettiVector betti_from_counting(const IntPolynomial& p, int n);

BigInt euler_characteristic(const IntPolynomial& p);

}  // namespace f1zeta

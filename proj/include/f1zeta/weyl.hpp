#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "f1zeta/numeric.hpp"
#include "f1zeta/polyq.hpp"

namespace f1zeta {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
/// Accepts upper or lower case; throws InvalidRank for anything else.
Family family_from_letter(char c);

struct RootComponent {
  Family family;
  int rank;

  friend bool operator==(const RootComponent&, const RootComponent&) = default;
};

/// A (possibly reducible) crystallographic root system, one entry per simple
/// component. The empty spec is the root system of a torus.
struct RootSystemSpec {
  std::vector<RootComponent> components;

  /// Validates and normalizes (C2 -> B2, D3 -> A3). Throws InvalidRank.
  static RootSystemSpec make(std::vector<RootComponent> components);
  static RootSystemSpec single(Family f, int rank) { return make({{f, rank}}); }

  int rank() const;
  /// "A2", "A1xB2", or "" for the empty system.
  std::string to_string() const;

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Throws InvalidRank unless (family, rank) is one of the supported types.
void validate_component(const RootComponent& c);
RootComponent normalize_component(RootComponent c);

/// Block-diagonal Cartan matrix, entry [i][j] = <alpha_i^vee, alpha_j>.
std::vector<std::vector<int>> cartan_matrix(const RootSystemSpec& spec);

using RootVector = std::vector<int>;

/// Positive roots in simple-root coordinates, sorted by height then lexicographically.
std::vector<RootVector> positive_roots(const RootSystemSpec& spec);

/// Invariant degrees of all components, concatenated in component order.
std::vector<int> invariant_degrees(const RootSystemSpec& spec);

/// |W| as the product of the invariant degrees.
BigInt weyl_order_by_degrees(const RootSystemSpec& spec);

inline constexpr std::uint64_t kWeylEnumerationCap = 4'000'000;

struct WeylGroupData {
  int semisimple_rank = 0;
  int num_positive_roots = 0;
  /// Entry l is the number of elements of length l.
  std::vector<std::uint64_t> length_histogram;
  BigInt group_order;
};

/// Breadth-first enumeration of W by words in the simple reflections.
///
/// Elements are keyed by the images of the simple roots. A right
/// multiplication w -> w s_j is taken exactly when w(alpha_j) is positive,
/// which is when it raises the length by one, so the level at which an element
/// is first reached is its length. With `verify_lengths` every element's
/// inversion count is recomputed against the full positive-root set.
///
/// Throws TooLarge when |W| (from the degrees) exceeds `cap`.
WeylGroupData weyl_enumerate(const RootSystemSpec& spec, std::uint64_t cap = kWeylEnumerationCap,
                             bool verify_lengths = false);

IntPolynomial poincare_polynomial(const WeylGroupData& w);

/// prod_i (1 + q + ... + q^{d_i - 1}) over the invariant degrees.
IntPolynomial poincare_by_degrees(const RootSystemSpec& spec);

/// Poincare polynomial by enumeration, falling back to the degree formula
/// when the group is above the enumeration cap.
IntPolynomial weyl_poincare(const RootSystemSpec& spec, std::uint64_t cap = kWeylEnumerationCap);

}  // namespace f1zeta

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f1zeta/catalog.hpp"
#include "f1zeta/numeric.hpp"

namespace f1zeta {

/// Z/pZ. Construction rejects non-primes.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int mul(int a, int b) const { return (a * b) % p_; }
  int inv(int a) const;

 private:
  int p_;
};

struct OracleOptions {
  /// Largest number of candidate objects a single count may enumerate.
  double max_enumeration = 1e7;
};

/// #X(F_p) by direct enumeration: projective points as normalized vectors,
/// matrices by determinant, subspaces as reduced row-echelon forms, flags as
/// chains of those. Throws TooLargeInstance (outside the size bounds) or
/// OracleUnsupported (no enumeration strategy, e.g. groups other than GL/SL).
BigInt count_points(const SchemeDescriptor& d, int p, const OracleOptions& options = {});

enum class OracleStatus { Match, Mismatch, Skipped };

struct OracleRow {
  int p = 0;
  BigInt predicted;
  std::optional<BigInt> counted;
  OracleStatus status = OracleStatus::Skipped;
  std::string note;
};

/// Compares count_points with N(p) prime by prime. A skipped prime does not
/// affect the others.
std::vector<OracleRow> verify_counting(const SchemeDescriptor& d, const std::vector<int>& primes,
                                       const OracleOptions& options = {});

}  // namespace f1zeta

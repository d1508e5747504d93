#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace f1zeta {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class InvalidRank : public Error {
 public:
  using Error::Error;
};

// Weyl group enumeration refused because the predicted order exceeds the cap.
class TooLarge : public Error {
 public:
  TooLarge(std::uint64_t order, std::uint64_t cap);
  std::uint64_t order() const { return order_; }

 private:
  std::uint64_t order_;
};

class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

class NotSmoothProjective : public Error {
 public:
  using Error::Error;
};

class NotEffective : public Error {
 public:
  using Error::Error;
};

class DualityViolation : public Error {
 public:
  using Error::Error;
};

class NegativeSign : public Error {
 public:
  using Error::Error;
};

class PoleAt : public Error {
 public:
  explicit PoleAt(std::int64_t root);
  std::int64_t root() const { return root_; }

 private:
  std::int64_t root_;
};

class EmptyZeta : public Error {
 public:
  using Error::Error;
};

class TooLargeInstance : public Error {
 public:
  explicit TooLargeInstance(double estimated_size);
  double estimated_size() const { return estimated_size_; }

 private:
  double estimated_size_;
};

// The brute-force counter has no enumeration strategy for this descriptor.
class OracleUnsupported : public Error {
 public:
  using Error::Error;
};

class DivergentParameters : public Error {
 public:
  using Error::Error;
};

}  // namespace f1zeta

#include "f1zeta/errors.hpp"

#include <sstream>

namespace f1zeta {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : Error(message), offset_(offset), expected_(std::move(expected)) {}

TooLarge::TooLarge(std::uint64_t order, std::uint64_t cap)
    : Error("Weyl group of order " + std::to_string(order) + " exceeds enumeration cap " +
            std::to_string(cap) + "; use the invariant-degree formula"),
      order_(order) {}

PoleAt::PoleAt(std::int64_t root) : Error("pole at s = " + std::to_string(root)), root_(root) {}

namespace {
std::string describe_size(double size) {
  std::ostringstream os;
  os << "enumeration of about " << size << " candidates exceeds the brute-force bound";
  return os.str();
}
}  // namespace

TooLargeInstance::TooLargeInstance(double estimated_size)
    : Error(describe_size(estimated_size)), estimated_size_(estimated_size) {}

}  // namespace f1zeta

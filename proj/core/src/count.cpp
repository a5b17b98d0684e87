#include "rbasis/count.hpp"

#include <stdexcept>

namespace rbasis {

bool Count::in(const FiniteSet& target) const {
  if (saturated_) {
    if (value_ <= target.max())
      throw std::logic_error("saturated count " + to_string() + " cannot be compared against " +
                             target.to_string());
    return false;
  }
  if (value_ > target.max()) return false;
  return target.contains(value_.convert_to<Int>());
}

std::string Count::to_string() const {
  std::string s = value_.str();
  if (saturated_) s += '+';
  return s;
}

}  // namespace rbasis

#include "loopswap/weight.hpp"

namespace loopswap {

std::string Weight::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(raw_);
}

std::ostream& operator<<(std::ostream& os, Weight w) { return os << w.to_string(); }

}  // namespace loopswap

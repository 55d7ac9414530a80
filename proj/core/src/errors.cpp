#include "awtk/errors.hpp"

namespace awtk {

Unclassified::Unclassified(long long prime, long long limit)
    : std::runtime_error("prime " + std::to_string(prime) +
                         " is beyond the classification limit " +
                         std::to_string(limit)),
      prime_(prime),
      limit_(limit) {}

std::string Unclassified::reason() const {
  return "unclassified:p=" + std::to_string(prime_) + ":limit=" + std::to_string(limit_);
}

}  // namespace awtk

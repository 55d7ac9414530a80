#include "awtk/group.hpp"

#include <stdexcept>
#include <string>

namespace awtk {

std::string_view to_string(GroupKind kind) {
  return kind == GroupKind::Interval ? "interval" : "cyclic";
}

GroupKind parse_group_kind(std::string_view text) {
  if (text == "interval") return GroupKind::Interval;
  if (text == "cyclic") return GroupKind::Cyclic;
  throw std::invalid_argument("unknown group kind '" + std::string(text) +
                              "' (expected interval|cyclic)");
}

GroupInstance::GroupInstance(GroupKind kind, long long order)
    : kind_(kind), order_(order) {
  if (order < 1) throw std::invalid_argument("group order must be >= 1");
}

std::size_t GroupInstance::index_of(Element x) const {
  if (!contains(x)) {
    throw std::out_of_range("element " + std::to_string(x) + " not in " +
                            name());
  }
  return static_cast<std::size_t>(x - first_element());
}

std::string GroupInstance::name() const {
  return is_interval() ? "[" + std::to_string(order_) + "]"
                       : "Z" + std::to_string(order_);
}

}  // namespace awtk

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace awtk {

using Element = long long;

enum class GroupKind { Interval, Cyclic };

std::string_view to_string(GroupKind kind);
GroupKind parse_group_kind(std::string_view text);

/// The ambient structure: the interval [n] = {1..n} or the cyclic group
/// Z_n = {0..n-1}. Elements are addressed either by value or by their
/// 0-based position in element order.
class GroupInstance {
 public:
  GroupInstance(GroupKind kind, long long order);

  static GroupInstance interval(long long n) { return {GroupKind::Interval, n}; }
  static GroupInstance cyclic(long long n) { return {GroupKind::Cyclic, n}; }

  GroupKind kind() const noexcept { return kind_; }
  long long order() const noexcept { return order_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(order_); }
  bool is_interval() const noexcept { return kind_ == GroupKind::Interval; }

  Element first_element() const noexcept { return is_interval() ? 1 : 0; }
  Element last_element() const noexcept { return first_element() + order_ - 1; }
  bool contains(Element x) const noexcept {
    return x >= first_element() && x <= last_element();
  }

  /// Throws std::out_of_range for elements outside the group.
  std::size_t index_of(Element x) const;
  Element element_at(std::size_t index) const noexcept {
    return first_element() + static_cast<Element>(index);
  }

  /// "[9]" or "Z9".
  std::string name() const;

  friend bool operator==(const GroupInstance&, const GroupInstance&) = default;

 private:
  GroupKind kind_;
  long long order_;
};

}  // namespace awtk

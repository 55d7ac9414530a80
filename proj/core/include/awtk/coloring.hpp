#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "awtk/group.hpp"

namespace awtk {

using Color = int;

/// An exact coloring: every color id in 1..palette occurs at least once and
/// nothing outside that range occurs. Construction rejects anything else, so
/// a `Coloring` value is exact by type.
class Coloring {
 public:
  /// `assignment[i]` is the color of `group.element_at(i)`.
  Coloring(GroupInstance group, std::vector<Color> assignment);

  const GroupInstance& group() const noexcept { return group_; }
  int palette() const noexcept { return palette_; }
  std::size_t size() const noexcept { return assignment_.size(); }
  std::span<const Color> assignment() const noexcept { return assignment_; }

  Color color_at(std::size_t index) const { return assignment_.at(index); }
  Color color_of(Element x) const { return assignment_[group_.index_of(x)]; }

  /// Number of elements carrying each color; entry c-1 belongs to color c.
  std::vector<std::size_t> class_sizes() const;

  /// Some color is used on exactly one element.
  bool is_unitary() const;

  /// First occurrences of colors 1, 2, ... appear in increasing order.
  bool is_canonical() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  GroupInstance group_;
  std::vector<Color> assignment_;
  int palette_ = 0;
};

/// Relabel colors so first occurrences are in increasing id order.
Coloring canonicalize(const Coloring& c);

/// Color id -> elements (by value, ascending) carrying it.
std::map<Color, std::vector<Element>> color_classes(const Coloring& c);

/// Two-line text form:
///   group=<interval|cyclic> n=<n>
///   <color ids separated by spaces, in element order>
std::string to_text(const Coloring& c);

/// Inverse of to_text. Throws std::invalid_argument on malformed headers,
/// wrong body length, or non-exact bodies.
Coloring parse_coloring(std::string_view text);

}  // namespace awtk

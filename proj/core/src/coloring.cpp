#include "awtk/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

namespace awtk {

Coloring::Coloring(GroupInstance group, std::vector<Color> assignment)
    : group_(group), assignment_(std::move(assignment)) {
  if (assignment_.size() != group_.size()) {
    throw std::invalid_argument("coloring of " + group_.name() + " needs " +
                                std::to_string(group_.order()) +
                                " colors, got " +
                                std::to_string(assignment_.size()));
  }
  Color max_color = 0;
  for (Color c : assignment_) {
    if (c < 1) throw std::invalid_argument("color ids must be >= 1");
    max_color = std::max(max_color, c);
  }
  std::vector<bool> seen(static_cast<std::size_t>(max_color) + 1, false);
  for (Color c : assignment_) seen[static_cast<std::size_t>(c)] = true;
  for (Color c = 1; c <= max_color; ++c) {
    if (!seen[static_cast<std::size_t>(c)]) {
      throw std::invalid_argument("coloring is not exact: color " +
                                  std::to_string(c) + " of 1.." +
                                  std::to_string(max_color) + " is unused");
    }
  }
  palette_ = max_color;
}

std::vector<std::size_t> Coloring::class_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(palette_), 0);
  for (Color c : assignment_) ++sizes[static_cast<std::size_t>(c - 1)];
  return sizes;
}

bool Coloring::is_unitary() const {
  auto sizes = class_sizes();
  return std::find(sizes.begin(), sizes.end(), std::size_t{1}) != sizes.end();
}

bool Coloring::is_canonical() const {
  Color next = 1;
  for (Color c : assignment_) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return true;
}

Coloring canonicalize(const Coloring& c) {
  std::vector<Color> relabel(static_cast<std::size_t>(c.palette()) + 1, 0);
  std::vector<Color> out;
  out.reserve(c.size());
  Color next = 1;
  for (Color old : c.assignment()) {
    auto& slot = relabel[static_cast<std::size_t>(old)];
    if (slot == 0) slot = next++;
    out.push_back(slot);
  }
  return Coloring(c.group(), std::move(out));
}

std::map<Color, std::vector<Element>> color_classes(const Coloring& c) {
  std::map<Color, std::vector<Element>> classes;
  for (std::size_t i = 0; i < c.size(); ++i) {
    classes[c.color_at(i)].push_back(c.group().element_at(i));
  }
  return classes;
}

std::string to_text(const Coloring& c) {
  std::string out = "group=";
  out += to_string(c.group().kind());
  out += " n=" + std::to_string(c.group().order()) + "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(c.color_at(i));
  }
  out += '\n';
  return out;
}

namespace {

long long parse_int(std::string_view token, const char* what) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" +
                                std::string(token) + "'");
  }
  return value;
}

std::string_view strip_prefix(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) {
    throw std::invalid_argument("malformed coloring header: expected '" +
                                std::string(key) + "...', got '" +
                                std::string(token) + "'");
  }
  return token.substr(key.size());
}

}  // namespace

Coloring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  std::string body;
  // Skip blank lines before the header.
  while (std::getline(in, header) && header.find_first_not_of(" \t\r") ==
                                         std::string::npos) {
  }
  if (header.empty()) throw std::invalid_argument("empty coloring text");
  if (!header.empty() && header.back() == '\r') header.pop_back();

  std::istringstream head(header);
  std::string kind_token;
  std::string n_token;
  std::string extra;
  if (!(head >> kind_token >> n_token) || (head >> extra)) {
    throw std::invalid_argument("malformed coloring header '" + header + "'");
  }
  GroupKind kind = parse_group_kind(strip_prefix(kind_token, "group="));
  long long n = parse_int(strip_prefix(n_token, "n="), "order");
  if (n < 1) throw std::invalid_argument("group order must be >= 1");

  std::getline(in, body);
  std::istringstream colors(body);
  std::vector<Color> assignment;
  std::string token;
  while (colors >> token) {
    assignment.push_back(static_cast<Color>(parse_int(token, "color id")));
  }
  std::string rest;
  while (std::getline(in, rest)) {
    if (rest.find_first_not_of(" \t\r") != std::string::npos) {
      throw std::invalid_argument("unexpected trailing content after body");
    }
  }
  return Coloring(GroupInstance(kind, n), std::move(assignment));
}

}  // namespace awtk

#include "awtk/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "awtk/errors.hpp"

namespace awtk {

namespace {

void require_length(int k) {
  if (k < 3) throw std::invalid_argument("progression length k must be >= 3");
}

/// Distinctness test over k colors using an epoch-stamped scratch table.
class DistinctChecker {
 public:
  explicit DistinctChecker(int palette)
      : stamp_(static_cast<std::size_t>(palette) + 1, 0) {}

  template <class ColorAt>
  bool all_distinct(int k, ColorAt&& color_at) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    for (int i = 0; i < k; ++i) {
      auto& s = stamp_[static_cast<std::size_t>(color_at(i))];
      if (s == epoch_) return false;
      s = epoch_;
    }
    return true;
  }

 private:
  std::vector<unsigned> stamp_;
  unsigned epoch_ = 0;
};

std::optional<Progression> find_rainbow_interval(const Coloring& c, int k) {
  const long long n = c.group().order();
  auto col = c.assignment();
  if (k == 3) {
    for (long long d = 1; 2 * d <= n - 1; ++d) {
      for (long long i = 0; i + 2 * d < n; ++i) {
        Color x = col[static_cast<std::size_t>(i)];
        Color y = col[static_cast<std::size_t>(i + d)];
        Color z = col[static_cast<std::size_t>(i + 2 * d)];
        if (x != y && y != z && x != z) {
          return make_progression(c.group(), i + 1, d, 3);
        }
      }
    }
    return std::nullopt;
  }
  DistinctChecker checker(c.palette());
  for (long long d = 1; d * (k - 1) <= n - 1; ++d) {
    for (long long i = 0; i + d * (k - 1) < n; ++i) {
      bool rainbow = checker.all_distinct(k, [&](int j) {
        return col[static_cast<std::size_t>(i + d * j)];
      });
      if (rainbow) return make_progression(c.group(), i + 1, d, k);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Progression> find_rainbow(const Coloring& c, int k) {
  require_length(k);
  if (c.group().is_interval()) return find_rainbow_interval(c, k);
  const long long n = c.group().order();
  auto col = c.assignment();
  DistinctChecker checker(c.palette());
  for (auto [a, d] : ap_specs(c.group(), k)) {
    bool rainbow = checker.all_distinct(k, [&](int j) {
      return col[static_cast<std::size_t>((a + d * j) % n)];
    });
    if (rainbow) return make_progression(c.group(), a, d, k);
  }
  return std::nullopt;
}

bool is_rainbow_free(const Coloring& c, int k) {
  return !find_rainbow(c, k).has_value();
}

std::optional<SpecialCertificate> is_special(const Coloring& c) {
  if (!c.group().is_interval()) return std::nullopt;
  const long long n = c.group().order();
  if (n < 8 || (n - 1) % 7 != 0) return std::nullopt;
  const long long q = (n - 1) / 7;
  auto sizes = c.class_sizes();
  auto size_of = [&](Color col) { return sizes[static_cast<std::size_t>(col - 1)]; };

  SpecialCertificate cert;
  cert.q = q;
  cert.first_color = c.color_of(1);
  cert.last_color = c.color_of(n);
  if (size_of(cert.first_color) != 1 || size_of(cert.last_color) != 1) {
    return std::nullopt;
  }
  cert.alpha_positions = {q + 1, 2 * q + 1, 4 * q + 1};
  cert.beta_positions = {3 * q + 1, 5 * q + 1, 6 * q + 1};

  auto class_is = [&](const std::array<Element, 3>& positions) -> std::optional<Color> {
    Color col = c.color_of(positions[0]);
    for (Element x : positions) {
      if (c.color_of(x) != col) return std::nullopt;
    }
    if (size_of(col) != positions.size()) return std::nullopt;
    return col;
  };
  auto alpha = class_is(cert.alpha_positions);
  auto beta = class_is(cert.beta_positions);
  if (!alpha || !beta) return std::nullopt;
  cert.alpha = *alpha;
  cert.beta = *beta;
  return cert;
}

int residue_color_count(const Coloring& c, int residue) {
  if (!c.group().is_interval()) {
    throw std::invalid_argument("residue_color_count needs an interval coloring");
  }
  if (residue < 0 || residue > 2) {
    throw std::invalid_argument("residue must be 0, 1 or 2");
  }
  std::vector<bool> seen(static_cast<std::size_t>(c.palette()) + 1, false);
  int count = 0;
  for (Element x = c.group().first_element(); x <= c.group().last_element(); ++x) {
    if (x % 3 != residue) continue;
    auto col = static_cast<std::size_t>(c.color_of(x));
    if (!seen[col]) {
      seen[col] = true;
      ++count;
    }
  }
  return count;
}

std::string_view to_string(DichotomyBranch branch) {
  switch (branch) {
    case DichotomyBranch::Special: return "special";
    case DichotomyBranch::ResidueOne: return "residue-1";
    case DichotomyBranch::ResidueN: return "residue-N";
  }
  return "?";
}

DichotomyResult dichotomy_holds(const Coloring& c) {
  if (!c.group().is_interval()) {
    throw PreconditionViolation("dichotomy applies to colorings of [N]");
  }
  const long long n = c.group().order();
  auto sizes = c.class_sizes();
  if (sizes[static_cast<std::size_t>(c.color_of(1) - 1)] != 1 ||
      sizes[static_cast<std::size_t>(c.color_of(n) - 1)] != 1) {
    throw PreconditionViolation("endpoints 1 and N must each be uniquely colored");
  }
  if (auto rainbow = find_rainbow(c, 3)) {
    std::string msg = "coloring has a rainbow 3-AP {";
    for (std::size_t i = 0; i < rainbow->elements.size(); ++i) {
      msg += (i ? "," : "") + std::to_string(rainbow->elements[i]);
    }
    throw PreconditionViolation(msg + "}");
  }

  if (is_special(c)) return {true, DichotomyBranch::Special};
  const int r = c.palette();
  if (residue_color_count(c, 1) >= r - 1) return {true, DichotomyBranch::ResidueOne};
  if (residue_color_count(c, static_cast<int>(n % 3)) >= r - 1) {
    return {true, DichotomyBranch::ResidueN};
  }
  return {false, std::nullopt};
}

bool is_ap_free(const ApFreeSet& s) {
  require_length(s.forbidden_length);
  const long long n = s.ambient_n;
  std::vector<bool> member(static_cast<std::size_t>(std::max(n, 0LL)) + 1, false);
  for (Element x : s.members) {
    if (x < 1 || x > n) {
      throw std::invalid_argument("member " + std::to_string(x) +
                                  " outside [" + std::to_string(n) + "]");
    }
    member[static_cast<std::size_t>(x)] = true;
  }
  std::vector<Element> sorted;
  for (Element x = 1; x <= n; ++x) {
    if (member[static_cast<std::size_t>(x)]) sorted.push_back(x);
  }
  const int k = s.forbidden_length;
  if (k == 3) {
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) {
        Element z = 2 * sorted[j] - sorted[i];
        if (z > n) break;
        if (member[static_cast<std::size_t>(z)]) return false;
      }
    }
    return true;
  }
  for (Element a : sorted) {
    for (long long d = 1; a + d * (k - 1) <= n; ++d) {
      int j = 1;
      while (j < k && member[static_cast<std::size_t>(a + d * j)]) ++j;
      if (j == k) return false;
    }
  }
  return true;
}

}  // namespace awtk

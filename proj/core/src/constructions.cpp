#include "awtk/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "awtk/closed_forms.hpp"
#include "awtk/errors.hpp"

namespace awtk {

namespace {

void require_interval_base(const Coloring& base, const char* op) {
  if (!base.group().is_interval()) {
    throw PreconditionViolation(std::string(op) + ": base must color an interval");
  }
  if (!base.is_unitary()) throw PreconditionViolation(std::string(op) + ": base is not unitary");
  if (!is_rainbow_free(base, 3)) {
    throw PreconditionViolation(std::string(op) + ": base has a rainbow 3-AP");
  }
}

long long pow3(int m) {
  long long p = 1;
  while (m-- > 0) p *= 3;
  return p;
}

// m >= 3 with n in {3^m - 1, 3^m - 2}, else 0.
int below_power_of_3(long long n) {
  long long p = 27;
  for (int m = 3; p - 2 <= n; ++m, p *= 3) {
    if (n == p - 1 || n == p - 2) return m;
  }
  return 0;
}

}  // namespace

Coloring construct_c1(long long n, const Coloring& base) {
  require_interval_base(base, "construct_c1");
  const long long h = base.group().order();
  const long long s = 3 * h - n;
  if (h < 2 || h >= n || s < 0 || s > 2) {
    throw PreconditionViolation("construct_c1: need n = 3h - s with s in {0,1,2}, 2 <= h < n");
  }
  const Color red = base.palette() + 1;
  std::vector<Color> colors(static_cast<std::size_t>(n), red);
  for (long long x = 1; x <= n; x += 3) {
    colors[static_cast<std::size_t>(x - 1)] = base.color_of((x + 2) / 3);
  }
  return Coloring(GroupInstance::interval(n), std::move(colors));
}

Coloring construct_c2(long long n, const Coloring& base) {
  require_interval_base(base, "construct_c2");
  const long long len = base.group().order();
  // Only s = 1 or 2 is allowed, which pins h to ceil(n/3).
  const long long h = (n + 2) / 3;
  const long long s = 3 * h - n;
  if (s == 0) throw PreconditionViolation("construct_c2: n must not be a multiple of 3");
  if (len != h - 1 && len != h) {
    throw PreconditionViolation("construct_c2: base must color [h-1] or [h] with h = " +
                                std::to_string(h));
  }
  long long shift = 0;
  if (len == h) {
    auto sizes = base.class_sizes();
    const Color last = base.color_of(h);
    bool only = sizes[static_cast<std::size_t>(last - 1)] == 1 &&
                std::count(sizes.begin(), sizes.end(), std::size_t{1}) == 1;
    shift = only ? 1 : 0;
  }
  const Color red = base.palette() + 1;
  std::vector<Color> colors(static_cast<std::size_t>(n), red);
  for (long long x = 3; x <= n; x += 3) {
    colors[static_cast<std::size_t>(x - 1)] = base.color_of(x / 3 + shift);
  }
  // With a base over [h] one base element is dropped, which may lose a color.
  std::vector<Color> seen(static_cast<std::size_t>(red) + 1, 0);
  for (Color c : colors) seen[static_cast<std::size_t>(c)] = 1;
  if (std::count(seen.begin() + 1, seen.end(), 1) != red) {
    throw PreconditionViolation("construct_c2: dropping a base element loses a color");
  }
  return Coloring(GroupInstance::interval(n), std::move(colors));
}

Coloring construct_extremal(long long n) {
  if (n < 1) throw std::invalid_argument("construct_extremal requires n >= 1");
  const auto g = GroupInstance::interval(n);
  switch (n) {
    case 1: return Coloring(g, {1});
    case 2: return Coloring(g, {1, 2});
    case 3: return Coloring(g, {1, 2, 2});
    case 8: return Coloring(g, {1, 2, 2, 3, 2, 3, 3, 4});
    default: break;
  }
  if (int m = below_power_of_3(n)) {
    const long long h = pow3(m - 1);
    return construct_c2(n, construct_extremal(h - 1));
  }
  const long long h = (n + 2) / 3;
  return construct_c1(n, construct_extremal(h));
}

Coloring canonical_special(long long q, const Coloring& filler) {
  if (q < 1) throw PreconditionViolation("canonical_special: q must be >= 1");
  if (filler.group().is_interval() || filler.group().order() != 2 * q) {
    throw PreconditionViolation("canonical_special: filler must color Z_" + std::to_string(2 * q));
  }
  if (!is_rainbow_free(filler, 3)) {
    throw PreconditionViolation("canonical_special: filler has a rainbow 3-AP");
  }
  const long long n = 7 * q + 1;
  std::vector<Color> colors(static_cast<std::size_t>(n), 0);
  // Filler colors are renumbered in order of appearance after 1, alpha, beta.
  std::vector<Color> fresh(static_cast<std::size_t>(filler.palette()) + 1, 0);
  Color next = 3;
  const Color first = 1, alpha = 2, beta = 3;
  for (long long x = 1; x <= n; ++x) {
    long long y = x - 1;
    Color c = 0;
    if (y % q == 0) {
      switch (y / q) {
        case 0: c = first; break;
        case 1: case 2: case 4: c = alpha; break;
        case 3: case 5: case 6: c = beta; break;
        default: c = -1; break;  // last element, colored below
      }
    } else {
      long long s = y % (2 * q);
      Color f = filler.color_of(s < q ? s : 2 * q - s);
      auto& slot = fresh[static_cast<std::size_t>(f)];
      if (slot == 0) slot = ++next;
      c = slot;
    }
    colors[static_cast<std::size_t>(y)] = c;
  }
  colors.back() = next + 1;
  return canonicalize(Coloring(GroupInstance::interval(n), std::move(colors)));
}

BehrendResult behrend_set(long long n) {
  if (n < 1) throw std::invalid_argument("behrend_set requires n >= 1");
  BehrendParams best_params;
  long long best_count = -1;
  std::vector<int> digits;
  // Elements are x + 1 for x in [0, n), x read in base 2d-1 with digits < d.
  // Past d ~ sqrt(n) only one- and two-digit numbers remain, whose shells
  // hold a handful of points.
  long long d_max = 2;
  while (d_max * d_max < n) ++d_max;
  for (int d = 2; d <= d_max; ++d) {
    const long long b = 2LL * d - 1;
    long long top = 1;
    for (int dim = 1; dim <= 64; ++dim) {
      // Dimensions past the first that reaches n add only zero digits.
      if (top >= n && dim > 1) break;
      top *= b;
      std::vector<long long> shells(static_cast<std::size_t>(dim) * (d - 1) * (d - 1) + 1, 0);
      long long box = 0;
      for (long long x = 0; x < std::min(n, top); ++x) {
        long long v = x, norm = 0;
        bool ok = true;
        for (int i = 0; i < dim; ++i) {
          long long a = v % b;
          v /= b;
          if (a >= d) { ok = false; break; }
          norm += a * a;
        }
        if (!ok) continue;
        ++shells[static_cast<std::size_t>(norm)];
        ++box;
      }
      auto consider = [&](long long count, long long shell) {
        if (count > best_count) {
          best_count = count;
          best_params = {dim, d, b, shell};
        }
      };
      if (d == 2) consider(box, -1);
      for (std::size_t s = 0; s < shells.size(); ++s) {
        consider(shells[s], static_cast<long long>(s));
      }
    }
  }

  BehrendResult result;
  result.params = best_params;
  result.set.ambient_n = n;
  result.set.forbidden_length = 3;
  const auto& p = best_params;
  for (long long x = 0; x < n; ++x) {
    long long v = x, norm = 0;
    bool ok = true;
    for (int i = 0; i < p.dimension; ++i) {
      long long a = v % p.base;
      v /= p.base;
      if (a >= p.digit_bound) { ok = false; break; }
      norm += a * a;
    }
    if (ok && v == 0 && (p.shell < 0 || norm == p.shell)) result.set.members.push_back(x + 1);
  }
  return result;
}

ApFreeSet greedy_ap_free_set(long long n) {
  if (n < 0) throw std::invalid_argument("greedy_ap_free_set requires n >= 0");
  ApFreeSet s;
  s.ambient_n = n;
  s.forbidden_length = 3;
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  for (long long x = 1; x <= n; ++x) {
    bool blocked = false;
    for (long long y : s.members) {
      long long z = 2 * y - x;  // z, y, x would be a 3-AP
      if (z >= 1 && in[static_cast<std::size_t>(z)]) { blocked = true; break; }
    }
    if (!blocked) {
      s.members.push_back(x);
      in[static_cast<std::size_t>(x)] = 1;
    }
  }
  return s;
}

std::optional<Coloring> lower_bound_coloring(long long n, const ApFreeSet& b, int k) {
  if (k < 3) throw std::invalid_argument("k must be >= 3");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<Color> colors(static_cast<std::size_t>(n), 0);
  Color next = 0;
  std::vector<Element> members = b.members;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Element x : members) {
    if (x < 1 || x > n) throw std::invalid_argument("set member outside [n]");
    colors[static_cast<std::size_t>(x - 1)] = ++next;
  }
  const Color rest = next + 1;
  for (auto& c : colors) {
    if (c == 0) c = rest;
  }
  Coloring c(GroupInstance::interval(n), std::move(colors));
  if (!is_rainbow_free(c, k)) return std::nullopt;
  return c;
}

}  // namespace awtk

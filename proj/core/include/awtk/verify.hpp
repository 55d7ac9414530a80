#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "awtk/coloring.hpp"
#include "awtk/progression.hpp"

namespace awtk {

/// First rainbow k-AP in enumeration order (difference, then start), or
/// nullopt if the coloring is rainbow-free. Throws for k < 3.
std::optional<Progression> find_rainbow(const Coloring& c, int k);

bool is_rainbow_free(const Coloring& c, int k);

/// Structure of a special coloring of [7q+1]: endpoint colors used once, and
/// two colors whose classes are exactly the alpha and beta anchor triples.
struct SpecialCertificate {
  long long q = 0;
  Color alpha = 0;
  Color beta = 0;
  std::array<Element, 3> alpha_positions{};
  std::array<Element, 3> beta_positions{};
  Color first_color = 0;
  Color last_color = 0;

  friend bool operator==(const SpecialCertificate&,
                         const SpecialCertificate&) = default;
};

/// Literal structural test; rainbow-freeness is not part of it.
std::optional<SpecialCertificate> is_special(const Coloring& c);

/// Distinct colors among elements of [n] congruent to `residue` mod 3.
int residue_color_count(const Coloring& c, int residue);

enum class DichotomyBranch { Special, ResidueOne, ResidueN };

std::string_view to_string(DichotomyBranch branch);

struct DichotomyResult {
  bool holds = false;
  std::optional<DichotomyBranch> branch;
};

/// For an exact rainbow-3-AP-free coloring of [N] whose endpoints are each
/// uniquely colored: is it special, or do the residue classes of 1 or of N
/// (mod 3) see at least r-1 colors? Throws PreconditionViolation when the
/// input does not qualify, so a `false` here is a genuine counterexample.
DichotomyResult dichotomy_holds(const Coloring& c);

/// A candidate subset of [ambient_n] with no forbidden_length-term AP.
struct ApFreeSet {
  long long ambient_n = 0;
  std::vector<Element> members;
  int forbidden_length = 3;
};

/// True iff no forbidden_length-AP lies inside members. Throws
/// std::invalid_argument if a member lies outside [ambient_n].
bool is_ap_free(const ApFreeSet& s);

}  // namespace awtk

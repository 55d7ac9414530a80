#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "awtk/closed_forms.hpp"
#include "awtk/constructions.hpp"
#include "awtk/dichotomy.hpp"
#include "awtk/errors.hpp"
#include "awtk/reference_table.hpp"
#include "awtk/result_store.hpp"
#include "awtk/solver.hpp"
#include "awtk/verify.hpp"
#include "awtk/version.hpp"
#include "cli.hpp"

namespace awtk::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

struct Common {
  std::string format = "text";
  double timeout_s = 0;  // 0: none
  std::string cache;
  bool no_cache = false;
  unsigned workers = 1;

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "json") return Format::Json;
    return Format::Text;
  }

  SolverOptions solver(std::optional<double> fallback_timeout = std::nullopt) const {
    SolverOptions o;
    o.workers = workers;
    double t = timeout_s > 0 ? timeout_s : fallback_timeout.value_or(0);
    if (t > 0) o.timeout = std::chrono::milliseconds(static_cast<long long>(t * 1000));
    return o;
  }

  std::optional<ResultStore> open_store() const {
    if (no_cache) return std::nullopt;
    return std::optional<ResultStore>(std::in_place,
                                      ResultStore::resolve_path(cache.empty()
                                                                    ? std::nullopt
                                                                    : std::optional(cache)));
  }
};

const auto kPositive = CLI::Range(1LL, 1000000000000LL);

void add_common(CLI::App* cmd, Common& c, bool solver_flags) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  if (!solver_flags) return;
  cmd->add_option("--timeout", c.timeout_s, "Seconds per solver call")->check(CLI::NonNegativeNumber);
  cmd->add_option("--cache", c.cache, "Result store path (default $AW_CACHE or ./aw-cache.jsonl)");
  cmd->add_flag("--no-cache", c.no_cache, "Do not read or write the result store");
  cmd->add_option("--workers", c.workers, "Solver worker threads")->check(CLI::Range(1u, 256u));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(std::span<const Color> colors) {
  std::ostringstream s;
  for (std::size_t i = 0; i < colors.size(); ++i) s << (i ? " " : "") << colors[i];
  return s.str();
}

std::string join(const std::vector<Element>& xs, const char* sep = " ") {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? sep : "") << xs[i];
  return s.str();
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read " + path);
  return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

// --- solving through the store ---------------------------------------------

struct Solved {
  int aw_value = 0;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
  double seconds = 0;
  bool from_cache = false;
};

Solved solve_cached(const GroupInstance& g, int k, bool unitary, const SolverOptions& options,
                    ResultStore* store) {
  if (store) {
    if (auto hit = store->get(g.kind(), g.order(), k, unitary)) {
      return {hit->aw_value, hit->witness, hit->stats.nodes_explored,
              hit->stats.elapsed_seconds, true};
    }
  }
  SolverOutcome o = unitary ? aw_u(g, k, options) : aw(g, k, options);
  if (store) store->put(make_record(g, k, o));
  return {o.aw_value, o.witness, o.nodes_explored,
          std::chrono::duration<double>(o.elapsed).count(), false};
}

// --- solve -------------------------------------------------------------------

struct SolveArgs {
  Common common;
  std::string group = "interval";
  long long n = 0;
  int k = 3;
  bool unitary = false;
  std::string emit;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const GroupInstance g(parse_group_kind(a.group), a.n);
  auto store = a.common.open_store();
  Solved s = solve_cached(g, a.k, a.unitary, a.common.solver(), store ? &*store : nullptr);
  if (!a.emit.empty() && s.witness) write_file(a.emit, to_text(*s.witness));
  const std::string label = a.unitary ? "aw_u" : "aw";
  const std::string witness = s.witness ? join(s.witness->assignment()) : "";
  const std::string source = s.from_cache ? "cache" : "solver";
  switch (a.common.fmt()) {
    case Format::Text:
      out << label << "=" << s.aw_value << "\n"
          << "group=" << a.group << " n=" << a.n << " k=" << a.k
          << " unitary=" << yes_no(a.unitary) << " source=" << source << " nodes=" << s.nodes
          << " elapsed=" << fixed(s.seconds) << "s\n"
          << "witness=" << witness << "\n";
      break;
    case Format::Csv:
      out << "group,n,k,unitary,aw,nodes,elapsed_s,source,witness\n"
          << a.group << "," << a.n << "," << a.k << "," << (a.unitary ? 1 : 0) << ","
          << s.aw_value << "," << s.nodes << "," << fixed(s.seconds) << "," << source << ","
          << witness << "\n";
      break;
    case Format::Json:
      out << json{{"group", a.group}, {"n", a.n}, {"k", a.k}, {"unitary", a.unitary},
                  {"aw", s.aw_value}, {"nodes", s.nodes}, {"elapsed_s", s.seconds},
                  {"source", source}, {"witness", witness}}
                 .dump()
          << "\n";
      break;
  }
  return kOk;
}

// --- check-coloring ----------------------------------------------------------

struct CheckArgs {
  Common common;
  std::string file;
  int k = 3;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  Coloring c = parse_coloring(read_file(a.file));
  auto witness = find_rainbow(c, a.k);
  const std::string verdict = witness ? "rainbow" : "rainbow-free";
  std::string elements = witness ? join(witness->elements, ",") : "";
  switch (a.common.fmt()) {
    case Format::Text:
      out << "VERDICT " << verdict << "\n";
      if (witness) {
        out << "witness={" << elements << "} start=" << witness->start
            << " difference=" << witness->difference << "\n";
      }
      break;
    case Format::Csv:
      out << "group,n,k,palette,verdict,witness\n"
          << to_string(c.group().kind()) << "," << c.group().order() << "," << a.k << ","
          << c.palette() << "," << verdict << "," << join(witness ? witness->elements : std::vector<Element>{}) << "\n";
      break;
    case Format::Json: {
      json j{{"group", std::string(to_string(c.group().kind()))}, {"n", c.group().order()},
             {"k", a.k}, {"palette", c.palette()}, {"verdict", verdict}};
      j["witness"] = witness ? json(witness->elements) : json(nullptr);
      out << j.dump() << "\n";
      break;
    }
  }
  return witness ? kPropertyViolated : kOk;
}

// --- dichotomy ---------------------------------------------------------------

struct DichotomyArgs {
  Common common;
  long long n = 0;
};

int cmd_dichotomy(const DichotomyArgs& a, std::ostream& out) {
  if (a.n < 2) throw std::invalid_argument("--N must be at least 2");
  DichotomyReport r = exhaustive_dichotomy(a.n);
  const auto special = r.count(DichotomyBranch::Special);
  const auto one = r.count(DichotomyBranch::ResidueOne);
  const auto last = r.count(DichotomyBranch::ResidueN);
  switch (a.common.fmt()) {
    case Format::Text:
      out << "N=" << a.n << " examined=" << r.examined << "\n"
          << "special=" << special << " residue-1=" << one << " residue-N=" << last << "\n"
          << "failures=" << r.failures.size() << "\n";
      for (const auto& c : r.failures) out << "failure: " << join(c.assignment()) << "\n";
      break;
    case Format::Csv:
      out << "N,examined,special,residue_1,residue_N,failures\n"
          << a.n << "," << r.examined << "," << special << "," << one << "," << last << ","
          << r.failures.size() << "\n";
      break;
    case Format::Json: {
      json failures = json::array();
      for (const auto& c : r.failures) failures.push_back(join(c.assignment()));
      out << json{{"N", a.n}, {"examined", r.examined}, {"special", special},
                  {"residue_1", one}, {"residue_N", last}, {"failures", failures}}
                 .dump()
          << "\n";
      break;
    }
  }
  return r.failures.empty() ? kOk : kPropertyViolated;
}

// --- formulas ----------------------------------------------------------------

struct FormulaArgs {
  Common common;
  long long n = 0;
  long long limit = kDefaultPrimeLimit;
};

std::string factorization_text(const Factorization& fac) {
  std::vector<std::string> parts;
  if (fac.exponent_of_2 > 0) parts.push_back("2^" + std::to_string(fac.exponent_of_2));
  for (auto [p, e] : fac.odd_factors) {
    parts.push_back(std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : ""));
  }
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " * " + parts[i];
  return s;
}

int cmd_zn_formula(const FormulaArgs& a, std::ostream& out) {
  if (a.n < 3) throw std::invalid_argument("--n must be at least 3");
  auto store = a.common.open_store();
  Factorization fac = factorize(a.n);
  classify(fac, a.limit, store ? &*store : nullptr, a.common.solver());
  const int value = aw_zn3(fac);
  const Log3Bound bound = log3_bound(a.n);
  std::string classes;
  for (auto [p, v] : fac.classification) {
    classes += (classes.empty() ? "" : " ") + std::to_string(p) + ":" + std::to_string(v);
  }
  switch (a.common.fmt()) {
    case Format::Text:
      out << "n=" << a.n << " factorization=" << factorization_text(fac) << "\n"
          << "classification=" << (classes.empty() ? "-" : classes) << "\n"
          << "aw(Z_n,3)=" << value << "\n"
          << "log3_bound=" << bound.bound << " tight=" << yes_no(bound.tight) << "\n";
      break;
    case Format::Csv:
      out << "n,factorization,classification,aw,log3_bound,tight\n"
          << a.n << "," << factorization_text(fac) << "," << classes << "," << value << ","
          << bound.bound << "," << (bound.tight ? 1 : 0) << "\n";
      break;
    case Format::Json: {
      json cls = json::object();
      for (auto [p, v] : fac.classification) cls[std::to_string(p)] = v;
      out << json{{"n", a.n}, {"factorization", factorization_text(fac)},
                  {"classification", cls}, {"aw", value}, {"log3_bound", bound.bound},
                  {"tight", bound.tight}}
                 .dump()
          << "\n";
      break;
    }
  }
  return kOk;
}

int cmd_classify_prime(const FormulaArgs& a, std::ostream& out) {
  auto store = a.common.open_store();
  const int value = classify_prime(a.n, a.limit, store ? &*store : nullptr, a.common.solver());
  switch (a.common.fmt()) {
    case Format::Text:
      out << "aw(Z_" << a.n << ",3)=" << value << "\n";
      break;
    case Format::Csv:
      out << "p,aw\n" << a.n << "," << value << "\n";
      break;
    case Format::Json:
      out << json{{"p", a.n}, {"aw", value}}.dump() << "\n";
      break;
  }
  return kOk;
}

int cmd_f(const FormulaArgs& a, std::ostream& out) {
  const int value = f(a.n);
  const std::string m = a.n >= 2 ? std::to_string(m_of(a.n)) : "-";
  switch (a.common.fmt()) {
    case Format::Text:
      out << "f(" << a.n << ")=" << value << " m=" << m << "\n";
      break;
    case Format::Csv:
      out << "n,f,m\n" << a.n << "," << value << "," << m << "\n";
      break;
    case Format::Json: {
      json j{{"n", a.n}, {"f", value}};
      j["m"] = a.n >= 2 ? json(m_of(a.n)) : json(nullptr);
      out << j.dump() << "\n";
      break;
    }
  }
  return kOk;
}

// --- constructions -----------------------------------------------------------

struct ConstructArgs {
  Common common;
  long long n = 0;
  std::string emit;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  Coloring c = construct_extremal(a.n);
  const int expected = f(a.n) - 1;
  const bool unitary = c.is_unitary();
  const bool free = is_rainbow_free(c, 3);
  const bool palette_ok = c.palette() == expected;
  if (!a.emit.empty()) write_file(a.emit, to_text(c));
  json summary{{"n", a.n},        {"palette", c.palette()}, {"expected_palette", expected},
               {"exact", true},   {"unitary", unitary},     {"rainbow_free", free},
               {"verified", unitary && free && palette_ok}};
  switch (a.common.fmt()) {
    case Format::Text:
      out << to_text(c) << summary.dump() << "\n";
      break;
    case Format::Csv:
      out << "n,palette,expected_palette,unitary,rainbow_free,coloring\n"
          << a.n << "," << c.palette() << "," << expected << "," << (unitary ? 1 : 0) << ","
          << (free ? 1 : 0) << "," << join(c.assignment()) << "\n";
      break;
    case Format::Json:
      summary["coloring"] = join(c.assignment());
      out << summary.dump() << "\n";
      break;
  }
  return unitary && free && palette_ok ? kOk : kPropertyViolated;
}

int cmd_behrend(const ConstructArgs& a, std::ostream& out) {
  if (a.n < 1) throw std::invalid_argument("--n must be at least 1");
  BehrendResult b = behrend_set(a.n);
  ApFreeSet greedy = greedy_ap_free_set(a.n);
  const bool free = is_ap_free(b.set);
  if (!a.emit.empty()) write_file(a.emit, join(b.set.members) + "\n");
  const auto size = b.set.members.size();
  json j{{"n", a.n},
         {"size", size},
         {"dimension", b.params.dimension},
         {"digit_bound", b.params.digit_bound},
         {"base", b.params.base},
         {"shell", b.params.shell},
         {"ap_free", free},
         {"greedy_size", greedy.members.size()},
         {"beats_greedy", size > greedy.members.size()}};
  switch (a.common.fmt()) {
    case Format::Text:
      out << "size=" << size << " dimension=" << b.params.dimension
          << " digit_bound=" << b.params.digit_bound << " base=" << b.params.base
          << " shell=" << (b.params.shell < 0 ? std::string("all") : std::to_string(b.params.shell))
          << "\n"
          << "ap_free=" << yes_no(free) << " greedy_size=" << greedy.members.size()
          << " beats_greedy=" << yes_no(size > greedy.members.size()) << "\n";
      break;
    case Format::Csv:
      out << "n,size,dimension,digit_bound,base,shell,ap_free,greedy_size\n"
          << a.n << "," << size << "," << b.params.dimension << "," << b.params.digit_bound << ","
          << b.params.base << "," << b.params.shell << "," << (free ? 1 : 0) << ","
          << greedy.members.size() << "\n";
      break;
    case Format::Json:
      out << j.dump() << "\n";
      break;
  }
  return free ? kOk : kPropertyViolated;
}

struct SpecialArgs {
  Common common;
  long long q = 0;
  std::string filler;
};

int cmd_special(const SpecialArgs& a, std::ostream& out) {
  if (a.q < 1) throw std::invalid_argument("--q must be at least 1");
  std::uint64_t fillers = 0, special = 0, rainbow_free = 0;
  auto consider = [&](const Coloring& filler) {
    Coloring c = canonical_special(a.q, filler);
    ++fillers;
    if (is_special(c)) ++special;
    if (is_rainbow_free(c, 3)) ++rainbow_free;
  };
  if (!a.filler.empty()) {
    consider(parse_coloring(read_file(a.filler)));
  } else {
    for_each_rainbow_free(GroupInstance::cyclic(2 * a.q), 3, {}, consider);
  }
  const double rate = fillers ? static_cast<double>(rainbow_free) / static_cast<double>(fillers) : 0;
  switch (a.common.fmt()) {
    case Format::Text:
      out << "q=" << a.q << " n=" << 7 * a.q + 1 << " fillers=" << fillers
          << " special=" << special << " rainbow_free=" << rainbow_free
          << " rate=" << fixed(rate, 4) << "\n";
      break;
    case Format::Csv:
      out << "q,n,fillers,special,rainbow_free,rate\n"
          << a.q << "," << 7 * a.q + 1 << "," << fillers << "," << special << ","
          << rainbow_free << "," << fixed(rate, 4) << "\n";
      break;
    case Format::Json:
      out << json{{"q", a.q}, {"n", 7 * a.q + 1}, {"fillers", fillers}, {"special", special},
                  {"rainbow_free", rainbow_free}, {"rate", rate}}
                 .dump()
          << "\n";
      break;
  }
  return special == fillers ? kOk : kPropertyViolated;
}

// --- table / verify-theorem --------------------------------------------------

struct TableArgs {
  Common common;
  int n_min = 3;
  int n_max = 0;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n_max < 3 || a.n_min < 3 || a.n_min > a.n_max) {
    throw std::invalid_argument("need 3 <= --n-min <= --n-max");
  }
  auto store = a.common.open_store();
  const SolverOptions options = a.common.solver(60.0);
  struct Cell {
    int n, k;
    std::optional<int> value, reference;
  };
  std::vector<Cell> cells;
  int mismatches = 0, timeouts = 0, compared = 0;
  for (int n = a.n_min; n <= a.n_max; ++n) {
    for (int k = 3; k <= reference::published_max_k(n); ++k) {
      Cell c{n, k, std::nullopt, reference::published(n, k)};
      try {
        c.value = solve_cached(GroupInstance::interval(n), k, false, options,
                               store ? &*store : nullptr)
                      .aw_value;
      } catch (const SolverTimeout&) {
        ++timeouts;
        err << "timeout: n=" << n << " k=" << k << "\n";
      }
      if (c.value && c.reference) {
        ++compared;
        if (*c.value != *c.reference) ++mismatches;
      }
      cells.push_back(c);
    }
  }
  auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("?"); };
  switch (a.common.fmt()) {
    case Format::Text: {
      const int kmax = reference::published_max_k(a.n_max);
      out << std::setw(4) << "n\\k";
      for (int k = 3; k <= kmax; ++k) out << std::setw(4) << k;
      out << "\n";
      int row = -1;
      for (const auto& c : cells) {
        if (c.n != row) {
          if (row != -1) out << "\n";
          row = c.n;
          out << std::setw(4) << c.n;
        }
        out << std::setw(4) << show(c.value);
      }
      out << "\n";
      break;
    }
    case Format::Csv:
      out << "n,k,aw,reference,match\n";
      for (const auto& c : cells) {
        out << c.n << "," << c.k << "," << show(c.value) << ","
            << (c.reference ? std::to_string(*c.reference) : "") << ","
            << (c.value && c.reference ? (*c.value == *c.reference ? "1" : "0") : "") << "\n";
      }
      break;
    case Format::Json: {
      json rows = json::array();
      for (const auto& c : cells) {
        json j{{"n", c.n}, {"k", c.k}};
        j["aw"] = c.value ? json(*c.value) : json(nullptr);
        j["reference"] = c.reference ? json(*c.reference) : json(nullptr);
        rows.push_back(j);
      }
      out << json{{"cells", rows}, {"compared", compared}, {"mismatches", mismatches},
                  {"timeouts", timeouts}}
                 .dump()
          << "\n";
      break;
    }
  }
  if (a.common.fmt() != Format::Json) {
    err << "diff against reference: compared=" << compared << " mismatches=" << mismatches
        << " timeouts=" << timeouts << "\n";
  }
  return mismatches == 0 ? kOk : kPropertyViolated;
}

struct TheoremArgs {
  Common common;
  long long from = 3;
  long long to = 0;
};

int cmd_verify_theorem(const TheoremArgs& a, std::ostream& out, std::ostream& err) {
  if (a.from < 1 || a.to < a.from) throw std::invalid_argument("need 1 <= --from <= --to");
  auto store = a.common.open_store();
  const SolverOptions options = a.common.solver();
  int mismatches = 0, timeouts = 0;
  const Format fmt = a.common.fmt();
  json rows = json::array();
  if (fmt == Format::Text) out << "n aw aw_u f equal\n";
  if (fmt == Format::Csv) out << "n,aw,aw_u,f,equal\n";
  for (long long n = a.from; n <= a.to; ++n) {
    const auto g = GroupInstance::interval(n);
    std::optional<int> plain, unitary;
    try {
      plain = solve_cached(g, 3, false, options, store ? &*store : nullptr).aw_value;
      unitary = solve_cached(g, 3, true, options, store ? &*store : nullptr).aw_value;
    } catch (const SolverTimeout&) {
      ++timeouts;
      err << "timeout: n=" << n << "\n";
    }
    const int fn = f(n);
    const bool done = plain && unitary;
    const bool equal = done && *plain == fn && *unitary == fn;
    if (done && !equal) ++mismatches;
    auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("?"); };
    const std::string verdict = done ? (equal ? "yes" : "no") : "?";
    if (fmt == Format::Text) {
      out << n << " " << show(plain) << " " << show(unitary) << " " << fn << " " << verdict << "\n";
    } else if (fmt == Format::Csv) {
      out << n << "," << show(plain) << "," << show(unitary) << "," << fn << "," << verdict << "\n";
    } else {
      json j{{"n", n}, {"f", fn}};
      j["aw"] = plain ? json(*plain) : json(nullptr);
      j["aw_u"] = unitary ? json(*unitary) : json(nullptr);
      j["equal"] = done ? json(equal) : json(nullptr);
      rows.push_back(j);
    }
  }
  if (fmt == Format::Json) {
    out << json{{"rows", rows}, {"mismatches", mismatches}, {"timeouts", timeouts}}.dump() << "\n";
  } else {
    err << "mismatches=" << mismatches << " timeouts=" << timeouts << "\n";
  }
  return mismatches == 0 ? kOk : kPropertyViolated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anti-van der Waerden numbers: exact solver, formulas and constructions", "awtk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Compute aw or aw_u of [n] or Z_n exactly");
  add_common(s, solve.common, true);
  s->add_option("--group", solve.group, "interval or cyclic")
      ->check(CLI::IsMember({"interval", "cyclic"}));
  s->add_option("--n", solve.n, "Group order")->required()->check(kPositive);
  s->add_option("--k", solve.k, "Progression length")->check(CLI::Range(3, 64));
  s->add_flag("--unitary", solve.unitary, "Compute aw_u instead of aw");
  s->add_option("--emit-witness", solve.emit, "Write the witness coloring here");

  CheckArgs check;
  auto* c = app.add_subcommand("check-coloring", "Look for a rainbow k-AP in a coloring file");
  add_common(c, check.common, false);
  c->add_option("--file", check.file, "Coloring in text form")->required();
  c->add_option("--k", check.k, "Progression length")->check(CLI::Range(3, 64));

  DichotomyArgs dich;
  auto* d = app.add_subcommand("dichotomy",
                               "Check the special-or-residue dichotomy on every qualifying coloring of [N]");
  add_common(d, dich.common, false);
  d->add_option("--N", dich.n, "Interval length")->required();

  FormulaArgs zn;
  auto* z = app.add_subcommand("zn-formula", "aw(Z_n,3) from the prime decomposition of n");
  add_common(z, zn.common, true);
  z->add_option("--n", zn.n, "Group order")->required();
  z->add_option("--limit", zn.limit, "Largest prime to classify by search");

  FormulaArgs cp;
  auto* p = app.add_subcommand("classify-prime", "aw(Z_p,3) for an odd prime p");
  add_common(p, cp.common, true);
  p->add_option("--p", cp.n, "Odd prime")->required();
  p->add_option("--limit", cp.limit, "Largest prime to classify by search");

  FormulaArgs fa;
  auto* fc = app.add_subcommand("f", "Closed form f(n) for aw([n],3)");
  add_common(fc, fa.common, false);
  fc->add_option("--n", fa.n, "Interval length")->required()->check(kPositive);

  ConstructArgs cons;
  auto* co = app.add_subcommand("construct", "Extremal unitary coloring of [n] with f(n)-1 colors");
  add_common(co, cons.common, false);
  co->add_option("--n", cons.n, "Interval length")->required()->check(kPositive);
  co->add_option("--emit", cons.emit, "Write the coloring here");

  ConstructArgs beh;
  auto* b = app.add_subcommand("behrend", "3-AP-free subset of [n] from Behrend's construction");
  add_common(b, beh.common, false);
  b->add_option("--n", beh.n, "Interval length")->required()->check(kPositive);
  b->add_option("--emit", beh.emit, "Write the members here");

  SpecialArgs spec;
  auto* sp = app.add_subcommand("special",
                                "Unfold rainbow-free colorings of Z_2q into special colorings of [7q+1]");
  add_common(sp, spec.common, false);
  sp->add_option("--q", spec.q, "Special coloring parameter")->required()->check(CLI::Range(1, 12));
  sp->add_option("--filler", spec.filler, "Use only this coloring of Z_2q");

  TableArgs table;
  auto* t = app.add_subcommand("table", "Compute aw([n],k) for 3 <= k <= (n+3)/2 and diff against the published table");
  add_common(t, table.common, true);
  t->add_option("--n-max", table.n_max, "Last row")->required();
  t->add_option("--n-min", table.n_min, "First row");

  TheoremArgs thm;
  auto* v = app.add_subcommand("verify-theorem", "Check aw([n],3) = aw_u([n],3) = f(n) over a range");
  add_common(v, thm.common, true);
  v->add_option("--from", thm.from, "First n");
  v->add_option("--to", thm.to, "Last n")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*s) return cmd_solve(solve, out);
    if (*c) return cmd_check(check, out);
    if (*d) return cmd_dichotomy(dich, out);
    if (*z) return cmd_zn_formula(zn, out);
    if (*p) return cmd_classify_prime(cp, out);
    if (*fc) return cmd_f(fa, out);
    if (*co) return cmd_construct(cons, out);
    if (*b) return cmd_behrend(beh, out);
    if (*sp) return cmd_special(spec, out);
    if (*t) return cmd_table(table, out, err);
    if (*v) return cmd_verify_theorem(thm, out, err);
  } catch (const SolverTimeout& e) {
    err << "timeout: " << e.what() << "\n";
    return kTimeout;
  } catch (const Unclassified& e) {
    err << "error: " << e.what() << "\n";
    out << "reason=" << e.reason() << "\n";
    return kInvalidInput;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return kPropertyViolated;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kPropertyViolated;
  }
  return kInvalidInput;
}

}  // namespace awtk::cli

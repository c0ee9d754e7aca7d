#pragma once

// Command implementations behind the `permbounds` executable. Each command
// writes its report to `out` and returns the process exit code:
//
//   0 ok, 1 usage/parse/range error, 2 verification failure, 3 limits exceeded.

#include <cstddef>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "permbounds/bounds.hpp"
#include "permbounds/constructions.hpp"
#include "permbounds/error.hpp"
#include "permbounds/pa_file.hpp"
#include "permbounds/search.hpp"

namespace permbounds::cli {

enum ExitCode : int { ok = 0, usage = 1, verification_failed = 2, limits_exceeded = 3 };

struct Options {
  bool json = false;
  bool scientific = false;
  std::optional<std::string> out_path;
  std::optional<std::string> cw_table_path;
  SearchLimits limits;
};

namespace detail {

/// Display-only scientific form of an exact integer, e.g. 2.174e14.
inline std::string scientific(const ExactInt &v, std::size_t digits = 4) {
  const std::string s = v.str();
  if (s.size() <= digits) {
    return s;
  }
  std::string out = s.substr(0, 1) + "." + s.substr(1, digits - 1);
  return out + "e" + std::to_string(s.size() - 1);
}

inline std::string shown(const ExactInt &v, const Options &opt) {
  return opt.scientific ? scientific(v) : v.str();
}

inline nlohmann::json bound_json(const BoundResult &b) {
  nlohmann::json j{{"rule", b.rule()}, {"applicable", b.applicable},
                   {"derivation", b.derivation}};
  if (b.applicable) {
    j["value"] = b.value.str();
    j["kind"] = to_string(b.kind);
  }
  return j;
}

inline std::optional<CwTable> load_table(const Options &opt) {
  if (!opt.cw_table_path) {
    return std::nullopt;
  }
  std::ifstream in(*opt.cw_table_path);
  if (!in) {
    throw Error(Errc::parse_error, "cannot open cw table " + *opt.cw_table_path);
  }
  return CwTable::load(in);
}

inline char rule_letter(const BoundResult &b) {
  const auto &r = b.rule();
  if (r == "DV") return 'D';
  if (r == "SP") return 'S';
  if (r == "ME") return 'E';
  if (r.rfind("MO", 0) == 0) return 'O';
  return '?';
}

template <class Write> void emit(const Options &opt, std::ostream &out, Write &&write) {
  if (opt.out_path) {
    std::ofstream file(*opt.out_path);
    if (!file) {
      throw Error(Errc::parse_error, "cannot write " + *opt.out_path);
    }
    write(file);
  } else {
    write(out);
  }
}

} // namespace detail

/// Every bound on P(n,d) with its derivation, and the best one.
inline int cmd_bound(std::size_t n, std::size_t d, const Options &opt, std::ostream &out) {
  const auto table = detail::load_table(opt);
  const CwTable *tp = table ? &*table : nullptr;
  const std::size_t dd = (d == 1 && n >= 2) ? 2 : d;
  const auto bounds = all_upper_bounds(n, dd, tp);
  const auto best = best_upper_bound(n, d, tp);
  const auto family = perfect_family_for(n, dd);
  const bool tight = family && best.rule() == "DV";

  if (opt.json) {
    nlohmann::json j{{"n", n}, {"d", d}, {"best", detail::bound_json(best)}};
    j["bounds"] = nlohmann::json::array();
    for (const auto &b : bounds) {
      j["bounds"].push_back(detail::bound_json(b));
    }
    j["tight"] = tight ? nlohmann::json(std::string(to_string(family->first)) + "(" +
                                        std::to_string(family->second) + ")")
                       : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
    return ok;
  }
  out << "upper bounds on P(" << n << "," << d << ")";
  if (dd != d) {
    out << " (d=1 treated as d=2)";
  }
  out << '\n';
  for (const auto &b : bounds) {
    out << "  " << std::left << std::setw(14) << b.rule();
    if (b.applicable) {
      out << std::setw(28) << detail::shown(b.value, opt) << b.trace();
      if (b.derivation == best.derivation && b.value == best.value) {
        out << "   <- best";
      }
    } else {
      out << "n/a  " << b.derivation.back();
    }
    out << '\n';
  }
  out << "best: " << detail::shown(best.value, opt) << " (" << best.trace() << ")";
  if (tight) {
    out << " tight: attained by " << to_string(family->first) << "(" << family->second << ")";
  }
  out << '\n';
  return ok;
}

/// Best bound for every n in [n_lo,n_hi], d in [d_lo,d_hi] with d <= n.
inline int cmd_table(std::size_t n_lo, std::size_t n_hi, std::size_t d_lo, std::size_t d_hi,
                     const Options &opt, std::ostream &out) {
  if (n_lo < 1 || n_lo > n_hi || d_lo < 1 || d_lo > d_hi) {
    throw Error(Errc::out_of_range, "empty or invalid table range");
  }
  const auto table = detail::load_table(opt);
  const CwTable *tp = table ? &*table : nullptr;
  if (opt.json) {
    nlohmann::json cells = nlohmann::json::array();
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      for (std::size_t d = d_lo; d <= std::min(d_hi, n); ++d) {
        const auto b = best_upper_bound(n, d, tp);
        cells.push_back({{"n", n}, {"d", d}, {"value", b.value.str()}, {"rule", b.rule()}});
      }
    }
    out << nlohmann::json{{"cells", cells}}.dump(2) << '\n';
    return ok;
  }
  std::vector<std::vector<std::string>> rows;
  std::size_t width = 2;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    std::vector<std::string> row;
    for (std::size_t d = d_lo; d <= d_hi; ++d) {
      if (d > n) {
        row.emplace_back("-");
        continue;
      }
      const auto b = best_upper_bound(n, d, tp);
      row.push_back(detail::shown(b.value, opt) + detail::rule_letter(b));
      width = std::max(width, row.back().size());
    }
    rows.push_back(std::move(row));
  }
  out << std::right << std::setw(4) << "n\\d";
  for (std::size_t d = d_lo; d <= d_hi; ++d) {
    out << ' ' << std::setw(static_cast<int>(width)) << d;
  }
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << std::setw(4) << n_lo + i;
    for (const auto &cell : rows[i]) {
      out << ' ' << std::setw(static_cast<int>(width)) << cell;
    }
    out << '\n';
  }
  out << "rules: D=DV S=SP E=ME O=MO\n";
  return ok;
}

/// Builds a family and writes it as a PA file (stdout unless --out is set).
///
///   cyclic n | symmetric n | alternating n | agl p | pgl2 p
///   block-cycle n k          floor(n/k) disjoint k-cycles, distance 2k
///   steiner-lift n k         greedy pair packing of (k+1)-sets, lifted, distance 2k+1
inline int cmd_construct(const std::string &family, const std::vector<std::size_t> &params,
                         const Options &opt, std::ostream &out) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(Errc::precondition, family + " takes " + std::to_string(count) +
                                          " parameter(s)");
    }
  };
  PaFile file;
  if (auto f = parse_perfect_family(family)) {
    need(1);
    file.array = perfect_pa(*f, params[0]);
    file.distance = perfect_pa_distance(*f, params[0]);
  } else if (family == "block-cycle") {
    need(2);
    file.array = block_cycle_cwpa(params[0], params[1]);
    file.distance = 2 * params[1];
    file.weight = params[1];
  } else if (family == "steiner-lift") {
    need(2);
    if (params[1] < 1) {
      throw Error(Errc::out_of_range, "steiner-lift needs k >= 1");
    }
    file.array = lift_binary_cw_code(greedy_partial_steiner(params[0], params[1] + 1), params[1]);
    file.distance = 2 * params[1] + 1;
    file.weight = params[1] + 1;
  } else {
    throw Error(Errc::precondition, "unknown family '" + family + "'");
  }
  detail::emit(opt, out, [&](std::ostream &sink) {
    if (opt.json) {
      sink << pa_to_json(file).dump() << '\n';
    } else {
      write_pa_file(sink, file);
    }
  });
  if (opt.out_path) {
    out << "wrote " << file.array.size() << " permutations of length " << file.array.n()
        << " (claimed distance " << file.distance << ") to " << *opt.out_path << '\n';
  }
  return ok;
}

/// kind: p (P(n,d)), pcw (P(n,d,w)) or acw (A(n,d,w)).
inline int cmd_search(const std::string &kind, std::size_t n, std::size_t d,
                      std::optional<std::size_t> w, const Options &opt, std::ostream &out) {
  SearchStatus status{};
  ExactInt value;
  std::uint64_t nodes = 0;
  std::string label;
  std::function<void(std::ostream &)> write_witness;
  if (kind == "p") {
    if (w) {
      throw Error(Errc::precondition, "search p takes no weight");
    }
    auto r = exact_p(n, d, opt.limits);
    status = r.status;
    value = r.value;
    nodes = r.nodes;
    label = "P(" + std::to_string(n) + "," + std::to_string(d) + ")";
    write_witness = [r, d, &opt](std::ostream &sink) {
      PaFile f{d, std::nullopt, r.witness};
      if (opt.json) {
        sink << pa_to_json(f).dump() << '\n';
      } else {
        write_pa_file(sink, f);
      }
    };
  } else if (kind == "pcw" || kind == "acw") {
    if (!w) {
      throw Error(Errc::precondition, "search " + kind + " needs a weight");
    }
    label = std::string(kind == "pcw" ? "P" : "A") + "(" + std::to_string(n) + "," +
            std::to_string(d) + "," + std::to_string(*w) + ")";
    if (kind == "pcw") {
      auto r = exact_p_cw(n, d, *w, opt.limits);
      status = r.status;
      value = r.value;
      nodes = r.nodes;
      write_witness = [r, d, w, &opt](std::ostream &sink) {
        PaFile f{d, w, r.witness};
        if (opt.json) {
          sink << pa_to_json(f).dump() << '\n';
        } else {
          write_pa_file(sink, f);
        }
      };
    } else {
      auto r = exact_a_cw(n, d, *w, opt.limits);
      status = r.status;
      value = r.value;
      nodes = r.nodes;
      write_witness = [r](std::ostream &sink) { write_cw_file(sink, r.witness); };
    }
  } else {
    throw Error(Errc::precondition, "unknown search kind '" + kind + "' (p, pcw, acw)");
  }

  if (opt.json) {
    out << nlohmann::json{{"quantity", label},
                          {"value", value.str()},
                          {"status", to_string(status)},
                          {"nodes", nodes}}
               .dump(2)
        << '\n';
  } else {
    out << label << (status == SearchStatus::exact ? " = " : " >= ") << value << " ("
        << to_string(status) << ", " << nodes << " nodes)\n";
  }
  if (opt.out_path) {
    std::ofstream file(*opt.out_path);
    if (!file) {
      throw Error(Errc::parse_error, "cannot write " + *opt.out_path);
    }
    write_witness(file);
  }
  return status == SearchStatus::exact ? ok : limits_exceeded;
}

/// Checks a PA file against distance d (defaults to the header's d).
inline int cmd_verify(const std::string &path, std::optional<std::size_t> d, const Options &opt,
                      std::ostream &out) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::parse_error, "cannot open " + path);
  }
  const auto file = read_pa_file(in);
  const std::size_t target = d.value_or(file.distance);
  const auto report = verify_pa(file.array, target);
  if (opt.json) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto &v : report.violations) {
      pairs.push_back({{"first", v.first}, {"second", v.second}, {"distance", v.distance}});
    }
    out << nlohmann::json{{"path", path},
                          {"n", file.array.n()},
                          {"count", file.array.size()},
                          {"d", target},
                          {"passed", report.passed()},
                          {"violations", pairs}}
               .dump(2)
        << '\n';
  } else if (report.passed()) {
    out << "PASS: " << file.array.size() << " permutations of length " << file.array.n()
        << " have pairwise distance >= " << target;
    if (file.array.size() >= 2) {
      out << " (minimum " << file.array.min_distance() << ")";
    }
    out << '\n';
  } else {
    out << "FAIL: " << report.violations.size() << " pair(s) closer than " << target << '\n';
    for (const auto &v : report.violations) {
      out << "  #" << v.first << " (" << file.array[v.first].str() << ") and #" << v.second
          << " (" << file.array[v.second].str() << ") at distance " << v.distance << '\n';
    }
  }
  return report.passed() ? ok : verification_failed;
}

} // namespace permbounds::cli

// permbounds: bounds, constructions and exact searches for permutation arrays.

#include <chrono>
#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permbounds/cli.hpp"

namespace {

// "a" or "a-b"
std::pair<std::size_t, std::size_t> parse_range(const std::string &text) {
  const auto dash = text.find('-');
  auto num = [&](const std::string &s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw permbounds::Error(permbounds::Errc::parse_error, "bad range '" + text + "'");
    }
    return static_cast<std::size_t>(std::stoul(s));
  };
  if (dash == std::string::npos) {
    const auto v = num(text);
    return {v, v};
  }
  return {num(text.substr(0, dash)), num(text.substr(dash + 1))};
}

} // namespace

int main(int argc, char **argv) {
  namespace cli = permbounds::cli;

  CLI::App app{"Upper bounds, constructions and exact searches for permutation arrays"};
  app.require_subcommand(1);

  cli::Options opt;
  std::optional<std::uint64_t> limit_nodes;
  std::optional<double> limit_seconds;
  app.add_flag("--json", opt.json, "Structured JSON output");
  app.add_option("--out", opt.out_path, "Write the PA/witness file here");
  app.add_option("--cw-table", opt.cw_table_path, "A(n,d,w) table: lines 'n d w value kind'");
  app.add_option("--limit-nodes", limit_nodes, "Search node budget (default 1e8)");
  app.add_option("--limit-seconds", limit_seconds, "Search time budget (default 300)");
  app.add_flag("--sci", opt.scientific, "Show large values in scientific notation (display only)");

  std::size_t n = 0, d = 0;
  auto *bound = app.add_subcommand("bound", "All upper bounds on P(n,d)");
  bound->add_option("n", n)->required();
  bound->add_option("d", d)->required();

  std::string n_range, d_range;
  auto *table = app.add_subcommand("table", "Best bound per (n,d); ranges like 4-20");
  table->add_option("n_range", n_range)->required();
  table->add_option("d_range", d_range)->required();

  std::string family;
  std::vector<std::size_t> params;
  auto *construct = app.add_subcommand(
      "construct", "Build a PA: cyclic|symmetric|alternating n, agl|pgl2 p, block-cycle|steiner-lift n k");
  construct->add_option("family", family)->required();
  construct->add_option("params", params)->required();

  std::string kind;
  std::optional<std::size_t> w;
  auto *search = app.add_subcommand("search", "Exact search: p n d | pcw n d w | acw n d w");
  search->add_option("kind", kind)->required();
  search->add_option("n", n)->required();
  search->add_option("d", d)->required();
  search->add_option("w", w);

  std::string path;
  std::optional<std::size_t> verify_d;
  auto *verify = app.add_subcommand("verify", "Check a PA file against distance d");
  verify->add_option("path", path)->required();
  verify->add_option("d", verify_d, "Target distance (default: the file header's d)");

  for (auto *sub : {bound, table, construct, search, verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? cli::ok : cli::usage;
  }

  if (limit_nodes) {
    opt.limits.max_nodes = *limit_nodes;
  }
  if (limit_seconds) {
    opt.limits.max_seconds = std::chrono::duration<double>(*limit_seconds);
  }

  try {
    if (*bound) {
      return cli::cmd_bound(n, d, opt, std::cout);
    }
    if (*table) {
      const auto [n_lo, n_hi] = parse_range(n_range);
      const auto [d_lo, d_hi] = parse_range(d_range);
      return cli::cmd_table(n_lo, n_hi, d_lo, d_hi, opt, std::cout);
    }
    if (*construct) {
      return cli::cmd_construct(family, params, opt, std::cout);
    }
    if (*search) {
      return cli::cmd_search(kind, n, d, w, opt, std::cout);
    }
    if (*verify) {
      return cli::cmd_verify(path, verify_d, opt, std::cout);
    }
  } catch (const permbounds::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::usage;
  }
  return cli::usage;
}

#pragma once

// Plain-text and JSON forms of permutation arrays and binary codes.
//
// Permutation array file:
//
//   PA n=5 d=4 count=20          (optional w=<weight> before count)
//   0,1,2,3,4
//   1,2,3,4,0
//   ...
//
// Binary constant-weight code file (one support per line):
//
//   CW n=7 d=4 w=3 count=7
//   0,1,2
//   ...
//
// Blank lines and lines starting with '#' are ignored. The JSON form of a PA
// is {"format":"permutation-array","n":..,"d":..,"w":..,"count":..,"members":[[..],..]}.

#include <cctype>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "permbounds/codes.hpp"
#include "permbounds/error.hpp"
#include "permbounds/perm.hpp"

namespace permbounds {

struct PaFile {
  std::size_t distance = 0;
  std::optional<std::size_t> weight;
  PermutationArray array;
};

struct CwFile {
  BinaryCwCode code;
};

namespace detail {

inline std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::size_t parse_count(const std::string &text, const std::string &what) {
  if (text.empty() || text.size() > 9 ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(Errc::parse_error, what + ": '" + text + "' is not a nonnegative integer");
  }
  return std::stoul(text);
}

inline std::vector<Point> parse_point_list(const std::string &line, const std::string &what) {
  std::vector<Point> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(static_cast<Point>(parse_count(trim(item), what)));
  }
  return out;
}

struct Header {
  std::string tag;
  std::map<std::string, std::size_t> fields;
};

inline Header parse_header(const std::string &line) {
  std::istringstream in(line);
  Header h;
  in >> h.tag;
  for (std::string kv; in >> kv;) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::parse_error, "header field '" + kv + "' is not key=value");
    }
    h.fields[kv.substr(0, eq)] = parse_count(kv.substr(eq + 1), "header field " + kv);
  }
  return h;
}

inline std::size_t require_field(const Header &h, const std::string &key) {
  auto it = h.fields.find(key);
  if (it == h.fields.end()) {
    throw Error(Errc::parse_error, h.tag + " header lacks " + key + "=");
  }
  return it->second;
}

// Next non-blank, non-comment line, with its line number.
inline bool next_content_line(std::istream &in, std::string &line, std::size_t &lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (!line.empty() && line[0] != '#') {
      return true;
    }
  }
  return false;
}

inline void check_weights(const PermutationArray &array, std::optional<std::size_t> w) {
  if (!w) {
    return;
  }
  for (std::size_t i = 0; i < array.size(); ++i) {
    if (weight(array[i]) != *w) {
      throw Error(Errc::parse_error, "member " + std::to_string(i) + " has weight " +
                                         std::to_string(weight(array[i])) + ", header says " +
                                         std::to_string(*w));
    }
  }
}

inline PaFile read_pa_json(std::istream &in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::parse_error, std::string("malformed JSON: ") + e.what());
  }
  try {
    PaFile f;
    const std::size_t n = j.at("n").get<std::size_t>();
    f.distance = j.at("d").get<std::size_t>();
    if (j.contains("w") && !j.at("w").is_null()) {
      f.weight = j.at("w").get<std::size_t>();
    }
    std::vector<Permutation> members;
    for (const auto &m : j.at("members")) {
      auto images = m.get<std::vector<Point>>();
      if (images.size() != n) {
        throw Error(Errc::parse_error, "member of length " + std::to_string(images.size()) +
                                           " in an array of length " + std::to_string(n));
      }
      members.emplace_back(std::move(images));
    }
    if (j.contains("count") && j.at("count").get<std::size_t>() != members.size()) {
      throw Error(Errc::parse_error, "count does not match the number of members");
    }
    f.array = PermutationArray(n, std::move(members));
    check_weights(f.array, f.weight);
    return f;
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::parse_error, std::string("bad PA JSON: ") + e.what());
  } catch (const Error &e) {
    if (e.code() == Errc::parse_error) {
      throw;
    }
    throw Error(Errc::parse_error, e.what());
  }
}

} // namespace detail

inline void write_pa_file(std::ostream &out, const PaFile &f) {
  out << "PA n=" << f.array.n() << " d=" << f.distance;
  if (f.weight) {
    out << " w=" << *f.weight;
  }
  out << " count=" << f.array.size() << '\n';
  for (const auto &m : f.array) {
    out << m.str() << '\n';
  }
}

inline nlohmann::json pa_to_json(const PaFile &f) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto &m : f.array) {
    members.push_back(std::vector<Point>(m.images().begin(), m.images().end()));
  }
  return {{"format", "permutation-array"},
          {"n", f.array.n()},
          {"d", f.distance},
          {"w", f.weight ? nlohmann::json(*f.weight) : nlohmann::json(nullptr)},
          {"count", f.array.size()},
          {"members", members}};
}

/// Reads either form; JSON is recognized by a leading '{'.
inline PaFile read_pa_file(std::istream &in) {
  in >> std::ws;
  if (in.peek() == '{') {
    return detail::read_pa_json(in);
  }
  std::string line;
  std::size_t lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) {
    throw Error(Errc::parse_error, "empty PA file");
  }
  const auto header = detail::parse_header(line);
  if (header.tag != "PA") {
    throw Error(Errc::parse_error, "expected a 'PA' header, got '" + header.tag + "'");
  }
  PaFile f;
  const std::size_t n = detail::require_field(header, "n");
  f.distance = detail::require_field(header, "d");
  const std::size_t count = detail::require_field(header, "count");
  if (auto it = header.fields.find("w"); it != header.fields.end()) {
    f.weight = it->second;
  }
  std::vector<Permutation> members;
  while (detail::next_content_line(in, line, lineno)) {
    const std::string where = "line " + std::to_string(lineno);
    auto images = detail::parse_point_list(line, where);
    if (images.size() != n) {
      throw Error(Errc::parse_error, where + ": " + std::to_string(images.size()) +
                                         " images, expected " + std::to_string(n));
    }
    try {
      members.emplace_back(std::move(images));
    } catch (const Error &e) {
      throw Error(Errc::parse_error, where + ": " + e.what());
    }
  }
  if (members.size() != count) {
    throw Error(Errc::parse_error, "header count " + std::to_string(count) + " but " +
                                       std::to_string(members.size()) + " members");
  }
  try {
    f.array = PermutationArray(n, std::move(members));
  } catch (const Error &e) {
    throw Error(Errc::parse_error, e.what());
  }
  detail::check_weights(f.array, f.weight);
  return f;
}

inline void write_cw_file(std::ostream &out, const BinaryCwCode &code) {
  out << "CW n=" << code.n() << " d=" << code.distance() << " w=" << code.weight()
      << " count=" << code.size() << '\n';
  for (const auto &word : code) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      out << (i ? "," : "") << word[i];
    }
    out << '\n';
  }
}

inline BinaryCwCode read_cw_file(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) {
    throw Error(Errc::parse_error, "empty CW file");
  }
  const auto header = detail::parse_header(line);
  if (header.tag != "CW") {
    throw Error(Errc::parse_error, "expected a 'CW' header, got '" + header.tag + "'");
  }
  const std::size_t n = detail::require_field(header, "n");
  const std::size_t d = detail::require_field(header, "d");
  const std::size_t w = detail::require_field(header, "w");
  const std::size_t count = detail::require_field(header, "count");
  std::vector<SupportSet> words;
  while (detail::next_content_line(in, line, lineno)) {
    const std::string where = "line " + std::to_string(lineno);
    try {
      words.emplace_back(detail::parse_point_list(line, where));
    } catch (const Error &e) {
      throw Error(Errc::parse_error, where + ": " + e.what());
    }
  }
  if (words.size() != count) {
    throw Error(Errc::parse_error, "header count does not match the number of words");
  }
  try {
    return BinaryCwCode(n, w, d, std::move(words));
  } catch (const Error &e) {
    throw Error(Errc::parse_error, e.what());
  }
}

} // namespace permbounds

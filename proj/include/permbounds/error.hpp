#pragma once

#include <stdexcept>
#include <string>

namespace permbounds {

enum class Errc {
  invalid_radius,
  length_mismatch,
  not_a_bijection,
  impossible_weight,
  out_of_range,
  unsupported,
  precondition,
  not_prime,
  parse_error,
};

inline const char *to_string(Errc code) {
  switch (code) {
  case Errc::invalid_radius: return "invalid-radius";
  case Errc::length_mismatch: return "length-mismatch";
  case Errc::not_a_bijection: return "not-a-bijection";
  case Errc::impossible_weight: return "impossible-weight";
  case Errc::out_of_range: return "out-of-range";
  case Errc::unsupported: return "unsupported";
  case Errc::precondition: return "precondition-violation";
  case Errc::not_prime: return "not-prime";
  case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace permbounds

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace epigraph {

using Rational = mpq_class;

// Base of every error the library throws on bad input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when an enumeration would exceed the configured model budget.
class LimitError : public Error {
 public:
  using Error::Error;
};

// Accepts "0.25", ".5", "1", "3/4". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

// Terminating decimals print as decimals, anything else as "p/q".
std::string to_string(const Rational& r);

// n/d in lowest terms, d > 0
Rational ratio(std::int64_t n, std::int64_t d);

bool is_integer(const Rational& r);
std::int64_t to_int64(const mpz_class& z);  // throws Error on overflow

// r * denominator, which must come out integral
std::int64_t scaled_units(const Rational& r, std::int64_t denominator);

}  // namespace epigraph

#include "epigraph/rational.hpp"

#include <cctype>

namespace epigraph {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed fraction '" + std::string(text) + "'", 0);
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
    Rational r(n, d);
    r.canonicalize();
    return r;
  }
  auto dot = text.find('.');
  std::string_view ip = text, fp;
  if (dot != std::string_view::npos) {
    ip = text.substr(0, dot);
    fp = text.substr(dot + 1);
    if (fp.empty() || !all_digits(fp)) throw ParseError("malformed decimal '" + std::string(text) + "'", 0);
    if (!ip.empty() && !all_digits(ip)) throw ParseError("malformed decimal '" + std::string(text) + "'", 0);
  } else if (!all_digits(ip)) {
    throw ParseError("malformed number '" + std::string(text) + "'", 0);
  }
  mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip));
  mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(std::string(fp));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
  Rational r(whole * scale + frac, scale);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  mpz_class den = r.get_den();
  unsigned twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return r.get_num().get_str() + "/" + r.get_den().get_str();
  unsigned digits = std::max(twos, fives);
  if (digits == 0) return r.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = r.get_num() * scale / r.get_den();
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  return neg ? "-" + s : s;
}

Rational ratio(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error("zero denominator");
  Rational r{mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))};
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error("integer overflow: " + z.get_str());
  return z.get_si();
}

std::int64_t scaled_units(const Rational& r, std::int64_t denominator) {
  Rational s = r * Rational(mpz_class(static_cast<long>(denominator)));
  s.canonicalize();
  if (s.get_den() != 1) throw PreconditionError(to_string(r) + " is not a multiple of 1/" + std::to_string(denominator));
  return to_int64(s.get_num());
}

}  // namespace epigraph

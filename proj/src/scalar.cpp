#include "gridguard/scalar.hpp"

#include "gridguard/errors.hpp"

#include <cctype>

namespace gridguard {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar scalar_from_string(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError("empty number in '" + std::string(text) + "'");

  Scalar value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class n{std::string(num), 10};
    mpz_class d{std::string(den), 10};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Scalar(n, d);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("malformed decimal '" + std::string(text) + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip), 10);
    mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(std::string(fp), 10);
    mpz_class den(1);
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    value = Scalar(whole * den + frac, den);
    value.canonicalize();
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
    value = Scalar(mpz_class(std::string(s), 10));
  }
  return negative ? Scalar(-value) : value;
}

double scalar_to_double(const Scalar& s) { return s.get_d(); }

std::string scalar_to_decimal(const Scalar& s, int frac_digits) {
  mpz_class pow10(1);
  for (int i = 0; i < frac_digits; ++i) pow10 *= 10;

  // round half away from zero on |s| * 10^d
  mpq_class scaled = abs(Scalar(s)) * pow10;
  mpz_class twice_num = 2 * scaled.get_num() + scaled.get_den();
  mpz_class rounded = twice_num / (2 * scaled.get_den());

  mpz_class ip = rounded / pow10;
  mpz_class fp = rounded % pow10;

  std::string out;
  if (sgn(s) < 0 && rounded != 0) out += '-';
  out += ip.get_str();
  if (fp != 0) {
    std::string digits = fp.get_str();
    digits.insert(0, static_cast<size_t>(frac_digits) - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

}  // namespace gridguard

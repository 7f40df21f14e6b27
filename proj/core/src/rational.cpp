#include "constrict/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "constrict/errors.hpp"

namespace constrict {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// mpz_set_str rejects an explicit plus sign.
mpz_class to_mpz(std::string s) {
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  return mpz_class(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ValidationError("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw ValidationError("malformed rational literal '" + text + "'");
    mpz_class n = to_mpz(num), d = to_mpz(den);
    if (d == 0) throw ValidationError("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (!is_integer_token(head) || frac.empty() || !is_integer_token(frac) ||
        frac[0] == '-' || frac[0] == '+')
      throw ValidationError("malformed decimal literal '" + text + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class whole = to_mpz(head), part = to_mpz(frac);
    bool neg = !head.empty() && head[0] == '-';
    mpz_class total = whole * scale + (neg ? -part : part);
    Rational q(total, scale);
    q.canonicalize();
    return q;
  }

  if (!is_integer_token(s))
    throw ValidationError("malformed rational literal '" + text + "'");
  return Rational(to_mpz(s));
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string decimal_string(const Rational& q, int significant) {
  if (significant < 1) significant = 1;
  if (q == 0) return "0";
  bool neg = q < 0;
  Rational a = neg ? Rational(-q) : q;

  // exp10 = count of digits left of the decimal point; 0 or negative when
  // a < 1 (e.g. a = 0.03 has exp10 = -1). Determined by exact comparison
  // against powers of ten.
  mpz_class num = a.get_num(), den = a.get_den();
  int exp10;
  if (num >= den) {
    exp10 = 0;
    mpz_class d2 = den;
    while (num >= d2) {
      d2 *= 10;
      ++exp10;
    }
  } else {
    exp10 = 1;
    mpz_class n2 = num;
    while (n2 < den) {
      n2 *= 10;
      --exp10;
    }
  }

  int frac_digits = significant - exp10;
  if (frac_digits < 0) frac_digits = 0;

  // M = round(a * 10^frac_digits), round half away from zero.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits);
  mpz_class scaled_num = num * scale;
  mpz_class m = (2 * scaled_num + den) / (2 * den);

  std::string digits = m.get_str();
  std::string out;
  if (frac_digits == 0) {
    out = digits;
  } else {
    if (static_cast<int>(digits.size()) <= frac_digits)
      digits.insert(0, frac_digits + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - frac_digits) + "." +
          digits.substr(digits.size() - frac_digits);
    while (!out.empty() && out.back() == '0') out.pop_back();
    if (!out.empty() && out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

}  // namespace constrict

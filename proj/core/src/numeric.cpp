#include "qfv/numeric.hpp"

#include <cctype>

#include "qfv/errors.hpp"

namespace qfv {

namespace {

bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Int parse_int(const std::string& text) {
  if (!is_decimal(text))
    fail(ErrorCode::InvalidInput, "not a decimal integer: '" + text + "'");
  // mpz rejects an explicit plus sign even though the contract allows it.
  return Int(text[0] == '+' ? text.substr(1) : text, 10);
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den))
    fail(ErrorCode::InvalidInput, "not a rational: '" + text + "'");
  Int d = parse_int(den);
  if (d == 0) fail(ErrorCode::InvalidInput, "zero denominator: '" + text + "'");
  Rat q(parse_int(num), d);
  q.canonicalize();
  return q;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

long floor_long(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return fl.get_si();
}

}  // namespace qfv

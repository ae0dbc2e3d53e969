#include "permspec/exact.hpp"

#include <cctype>

namespace permspec {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

ExactValue parse_exact(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(Errc::parse_error, "invalid rational literal '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  ExactValue r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const ExactValue& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

bool is_integer(const ExactValue& v) { return v.get_den() == 1; }

ExactValue pow(const ExactValue& v, long e) {
  if (e < 0) {
    if (v == 0) throw Error(Errc::invalid_argument, "zero to a negative power");
    ExactValue inv = 1 / v;
    return pow(inv, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), v.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), v.get_den_mpz_t(), static_cast<unsigned long>(e));
  ExactValue r(num, den);
  r.canonicalize();
  return r;
}

BigInt pow(const BigInt& v, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), e);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

double to_double(const ExactValue& v) { return v.get_d(); }

}  // namespace permspec

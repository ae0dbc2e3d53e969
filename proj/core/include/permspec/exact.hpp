#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace permspec {

// Exact arbitrary-precision rational. Integers carry denominator 1.
using ExactValue = mpq_class;
using BigInt = mpz_class;

enum class Errc {
  invalid_argument,
  empty_matrix,
  oracle_limit,
  formula_mismatch,
  cycle_too_short,
  hypothesis_violated,
  undefined_case,
  missing_spectrum,
  enumeration_limit,
  not_in_class,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parses "p" or "p/q" (optional sign, decimal digits). The result is canonical.
ExactValue parse_exact(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const ExactValue& v);

bool is_integer(const ExactValue& v);

// v^e for any integer e; e < 0 requires v != 0.
ExactValue pow(const ExactValue& v, long e);

BigInt pow(const BigInt& v, unsigned long e);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);  // zero outside 0 <= k <= n

// Converts to double for advisory (non-exact) comparisons only.
double to_double(const ExactValue& v);

inline ExactValue exact(long v) { return ExactValue(v); }
inline ExactValue exact(long p, long q) {
  ExactValue r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace permspec

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permspec/exact.hpp"
#include "permspec/matrix.hpp"
#include "permspec/partitions.hpp"

namespace permspec {

// Maximum permanent over Lambda_n^3: a(4)^h a(3)^((n-4h)/3) with h = n mod 3.
// n = 5 admits no such product; its value 13 comes from exhaustive search.
ExactValue merriell_max(long n);

// Second largest permanent over Lambda_n^3 for n = 0 mod 3, n >= 6.
ExactValue bolshakov_second(long n);

// 6 (4/3)^(n-3).
ExactValue voorhoeve_bound(long n);

struct Condition {
  std::string name;
  bool holds = false;
  friend bool operator==(const Condition&, const Condition&) = default;
};

// Triangle inequalities plus a(4)^3 <= a(3)^4 and alpha gamma + beta x <= x^2
// with x^3 = a(3). Every comparison is exact.
std::vector<Condition> check_theorem4_conditions(const Weights& w);

// Sign of x^2 - b x - c at the real cube root x of `cube`, decided exactly.
int sign_at_cube_root(const ExactValue& cube, const ExactValue& b, const ExactValue& c);

// (2^(1/3) - 1)^(1/4) compared with alpha/gamma; requires gamma > 0. Returns -1, 0 or 1
// as alpha/gamma is below, at or above the threshold.
int compare_with_theta(const ExactValue& alpha, const ExactValue& gamma);

enum class ClosedForm { None, CubeBlocks, TwoWeightCubeBlocks, TwoWeightQuarticBlocks };

std::string to_string(ClosedForm form);

struct ExtremalReport {
  long n = 0;
  ClassSpec spec = ClassSpec::binary(ClassKind::Lambda3Sym);
  ExactValue max_value;
  std::vector<Partition> attaining_partitions;
  std::vector<Condition> conditions_checked;
  ClosedForm closed_form = ClosedForm::None;
  std::optional<ExactValue> closed_form_value;
};

// Largest value of the weighted symmetric spectrum by partition search, annotated
// with whichever closed form applies.
ExtremalReport max_weighted_symmetric(long n, const Weights& w);

// Partitions 4^(3i) 3^((n-12i)/3), i = 0..n/12, for n divisible by 12.
std::vector<Partition> boundary_maximizer_partitions(long n);

// 2^(n/3) versus (2(theta^4 + 1))^(n/4) in double precision at the threshold ratio.
double boundary_relative_gap(long n, double ratio);

}  // namespace permspec

#include "permspec/extremal.hpp"

#include <cmath>

#include "permspec/enumerator.hpp"
#include "permspec/sequences.hpp"
#include "permspec/spectrum.hpp"

namespace permspec {

ExactValue merriell_max(long n) {
  if (n < 3) throw Error(Errc::invalid_argument, "merriell_max needs n >= 3");
  if (n == 5) return brute_spectrum(ClassSpec::binary(ClassKind::Lambda3), 5).max();
  const long h = n % 3;
  return pow(a_seq(4), h) * pow(a_seq(3), (n - 4 * h) / 3);
}

ExactValue bolshakov_second(long n) {
  if (n % 3 != 0 || n < 6) throw Error(Errc::undefined_case, "undefined case: n must be a multiple of 3 and >= 6");
  if (n == 6) return 20;
  if (n == 9) return 120;
  return exact(9, 16) * pow(ExactValue(6), n / 3);
}

ExactValue voorhoeve_bound(long n) {
  if (n < 3) throw Error(Errc::invalid_argument, "voorhoeve_bound needs n >= 3");
  return 6 * pow(exact(4, 3), n - 3);
}

int sign_at_cube_root(const ExactValue& cube, const ExactValue& b, const ExactValue& c) {
  auto f = [&](const ExactValue& x) -> ExactValue { return x * x - b * x - c; };
  // a rational cube root settles it directly
  {
    mpz_class num, den, rn, rd;
    num = cube.get_num();
    den = cube.get_den();
    const bool negative = num < 0;
    if (negative) num = -num;
    mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 3);
    mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3);
    if (rn * rn * rn == num && rd * rd * rd == den) {
      ExactValue x(negative ? -rn : rn, rd);
      x.canonicalize();
      return ::sgn(f(x));
    }
  }
  // otherwise x is irrational of degree 3 and cannot be a root of f or its vertex
  ExactValue bound = abs(cube) + 1;
  ExactValue lo = -bound, hi = bound;
  const ExactValue vertex = b / 2;
  for (int iter = 0; iter < 100000; ++iter) {
    const ExactValue flo = f(lo), fhi = f(hi);
    const bool vertex_inside = lo <= vertex && vertex <= hi;
    if (!vertex_inside && ::sgn(flo) == ::sgn(fhi) && ::sgn(flo) != 0) return ::sgn(flo);
    ExactValue mid = (lo + hi) / 2;
    if (mid * mid * mid <= cube)
      lo = mid;
    else
      hi = mid;
  }
  throw Error(Errc::invalid_argument, "cube-root comparison did not converge");
}

int compare_with_theta(const ExactValue& alpha, const ExactValue& gamma) {
  if (gamma <= 0) throw Error(Errc::invalid_argument, "threshold comparison needs gamma > 0");
  if (alpha < 0) return -1;
  const ExactValue r = alpha / gamma;
  // r <= theta  <=>  (r^4 + 1)^3 <= 2 for r >= 0
  const ExactValue lhs = pow(pow(r, 4) + 1, 3);
  return ::sgn(lhs - 2);
}

std::vector<Condition> check_theorem4_conditions(const Weights& w) {
  const auto& [al, be, ga] = w;
  const ExactValue a3 = a_general(w, 3);
  const ExactValue a4 = a_general(w, 4);
  return {
      {"0 <= alpha <= beta + gamma", 0 <= al && al <= be + ga},
      {"0 <= gamma <= alpha + beta", 0 <= ga && ga <= al + be},
      {"a(4)^3 <= a(3)^4", pow(a4, 3) <= pow(a3, 4)},
      {"alpha gamma + beta a(3)^(1/3) <= a(3)^(2/3)", sign_at_cube_root(a3, be, al * ga) >= 0},
  };
}

std::string to_string(ClosedForm form) {
  switch (form) {
    case ClosedForm::None: return "none";
    case ClosedForm::CubeBlocks: return "a(3)^(n/3)";
    case ClosedForm::TwoWeightCubeBlocks: return "2^(n/3) gamma^n";
    case ClosedForm::TwoWeightQuarticBlocks: return "(2(alpha^4 + gamma^4))^(n/4)";
  }
  return "none";
}

ExtremalReport max_weighted_symmetric(long n, const Weights& w) {
  auto spectrum = spectrum_weighted_report(n, w);
  ExtremalReport report;
  report.n = n;
  report.spec = ClassSpec::weighted(ClassKind::LambdaABGSym, w);
  report.max_value = spectrum.spectrum.max();
  report.attaining_partitions = spectrum.attaining.at(report.max_value);

  const auto& [al, be, ga] = w;
  report.conditions_checked = check_theorem4_conditions(w);
  bool cube_ok = true;
  for (const auto& c : report.conditions_checked) cube_ok = cube_ok && c.holds;
  const bool two_weight = be == ga - al && ga > 0 && al >= 0;
  const int theta = two_weight ? compare_with_theta(al, ga) : 0;
  report.conditions_checked.push_back({"n divisible by 3", n % 3 == 0});
  report.conditions_checked.push_back({"n divisible by 4", n % 4 == 0});
  report.conditions_checked.push_back({"beta = gamma - alpha, 0 <= alpha, 0 < gamma", two_weight});
  report.conditions_checked.push_back({"alpha <= theta gamma", two_weight && theta <= 0});
  report.conditions_checked.push_back({"alpha >= theta gamma", two_weight && theta >= 0});

  if (two_weight && theta <= 0 && n % 3 == 0) {
    report.closed_form = ClosedForm::TwoWeightCubeBlocks;
    report.closed_form_value = pow(ExactValue(2), n / 3) * pow(ga, n);
  } else if (two_weight && theta >= 0 && n % 4 == 0) {
    report.closed_form = ClosedForm::TwoWeightQuarticBlocks;
    report.closed_form_value = pow(2 * (pow(al, 4) + pow(ga, 4)), n / 4);
  } else if (cube_ok && n % 3 == 0) {
    report.closed_form = ClosedForm::CubeBlocks;
    report.closed_form_value = pow(a_general(w, 3), n / 3);
  }
  return report;
}

std::vector<Partition> boundary_maximizer_partitions(long n) {
  if (n <= 0 || n % 12 != 0) throw Error(Errc::undefined_case, "undefined case: n must be a positive multiple of 12");
  std::vector<Partition> out;
  for (long i = 0; i <= n / 12; ++i) {
    Partition p{std::vector<long>(static_cast<std::size_t>(3 * i), 4), 3};
    p.parts.insert(p.parts.end(), static_cast<std::size_t>((n - 12 * i) / 3), 3);
    out.push_back(std::move(p));
  }
  return out;
}

double boundary_relative_gap(long n, double ratio) {
  const double cubes = std::pow(2.0, static_cast<double>(n) / 3.0);
  const double quartics = std::pow(2.0 * (std::pow(ratio, 4) + 1.0), static_cast<double>(n) / 4.0);
  return std::abs(cubes - quartics) / cubes;
}

}  // namespace permspec

#pragma once

#include <map>
#include <string>
#include <vector>

#include "permspec/exact.hpp"
#include "permspec/matrix.hpp"

namespace permspec {

// Derangement numbers: D(0) = 1, D(n) = n D(n-1) + (-1)^n.
ExactValue subfactorial(long n);

// Menage numbers through the Cayley recursion with U(0)=1, U(1)=-1, U(2)=0.
// The inhomogeneous term is 4(-1)^(n-1)/(n-2); with (-1)^n the recursion
// yields U(3) = -7 instead of the menage value 1.
ExactValue menage_u(long n);

// Reduced three-rowed Latin rectangles of length n (n >= 3).
ExactValue latin_k(long n);

// |Lambda_n^3| from the exact triple-sum formula (n >= 3).
ExactValue count_lambda3(long n);

// S(0)=1, S(1)=0, S(n) = (n-1)(S(n-1) + S(n-2)/2).
ExactValue s_seq(long n);

// |Lambda_n^3| restricted to ones on the diagonal (n >= 3).
ExactValue count_lambda3_diag(long n);

// a(3)=6, a(4)=9, a(n) = a(n-1) + a(n-2) - 2: the permanent of I + P + P^2.
ExactValue a_seq(long n);

// Lucas(n) + 2, the closed form of a_seq.
ExactValue a_seq_closed(long n);

ExactValue lucas(long n);

// per(alpha I + beta P + gamma P^2) through its linear recursion (n >= 3).
ExactValue a_general(const Weights& w, long n);

// a_general(alpha, gamma - alpha, gamma, n): 2 gamma^n for odd n, 2(alpha^n + gamma^n) for even n.
ExactValue a_lemma4(const ExactValue& alpha, const ExactValue& gamma, long n);

enum class AsymptoticClass { Lambda3, Lambda3Diag };

// Leading-order size estimates. Advisory floating-point values only.
double asymptotic_estimate(AsymptoticClass which, long n);

// 2 sqrt(pi e^-5).
double diag_asymptotic_constant();

enum class SequenceSource { Recursion, ClosedForm };

struct SequenceTable {
  std::string name;
  std::map<long, ExactValue> values;
  SequenceSource source = SequenceSource::Recursion;
};

// Names accepted by sequence_table: D, U, K, S, a, a-closed, lucas, lambda3, lambda3-diag.
std::vector<std::string> sequence_names();

// Values of the named sequence for first..last (inclusive).
SequenceTable sequence_table(const std::string& name, long first, long last);

}  // namespace permspec

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permspec/exact.hpp"

namespace permspec {

// Square (0,1) pattern, one 64-bit word per row. Bit j of row i is entry (i, j).
class BinaryMatrix {
 public:
  static constexpr std::size_t max_dimension = 64;

  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t n);
  BinaryMatrix(std::size_t n, std::vector<std::uint64_t> rows);

  static BinaryMatrix identity(std::size_t n);
  static BinaryMatrix ones(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
  void set(std::size_t i, std::size_t j, bool value = true);
  std::uint64_t row(std::size_t i) const { return rows_[i]; }
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }

  int row_sum(std::size_t i) const;
  int col_sum(std::size_t j) const;
  std::uint64_t column(std::size_t j) const;  // bit i set iff entry (i, j) is 1
  BinaryMatrix transpose() const;

  // Entrywise OR; the patterns of circulants and direct sums only ever add disjoint ones.
  BinaryMatrix operator|(const BinaryMatrix& other) const;
  // Clears the ones of `other` (entrywise AND-NOT).
  BinaryMatrix without(const BinaryMatrix& other) const;
  // Boolean product of permutation-like patterns; exact for permutation matrices.
  BinaryMatrix operator*(const BinaryMatrix& other) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Square matrix of exact rationals, row-major.
class WeightedMatrix {
 public:
  WeightedMatrix() = default;
  explicit WeightedMatrix(std::size_t n);
  WeightedMatrix(std::size_t n, std::vector<ExactValue> entries);
  WeightedMatrix(const BinaryMatrix& pattern);  // NOLINT: implicit widening is intended

  static WeightedMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const ExactValue& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  ExactValue& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  std::span<const ExactValue> entries() const noexcept { return entries_; }

  WeightedMatrix transpose() const;
  WeightedMatrix operator+(const WeightedMatrix& other) const;
  WeightedMatrix operator-(const WeightedMatrix& other) const;
  WeightedMatrix operator*(const WeightedMatrix& other) const;
  friend WeightedMatrix operator*(const ExactValue& scalar, const WeightedMatrix& m);

  // The (0,1) pattern if every entry is 0 or 1.
  std::optional<BinaryMatrix> as_binary() const;

  friend bool operator==(const WeightedMatrix&, const WeightedMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExactValue> entries_;
};

struct Weights {
  ExactValue alpha;
  ExactValue beta;
  ExactValue gamma;

  bool all_nonzero() const { return alpha != 0 && beta != 0 && gamma != 0; }
  bool pairwise_distinct() const { return alpha != beta && beta != gamma && alpha != gamma; }
  friend bool operator==(const Weights&, const Weights&) = default;
};

enum class ClassKind {
  Lambda3,         // three ones in every row and column
  Lambda3Diag,     // ... with ones on the main diagonal
  Lambda3Sym,      // ... symmetric, ones on the diagonal
  LambdaABG,       // alpha, beta, gamma once in every row and column
  LambdaABGDiag,   // ... with beta on the main diagonal
  LambdaABGSym,    // ... and m(i,j) = alpha iff m(j,i) = gamma
};

// A matrix class. Weights are present exactly for the weighted kinds and are all nonzero.
class ClassSpec {
 public:
  static ClassSpec binary(ClassKind kind);
  static ClassSpec weighted(ClassKind kind, Weights weights);

  ClassKind kind() const noexcept { return kind_; }
  const std::optional<Weights>& weights() const noexcept { return weights_; }
  bool is_weighted() const noexcept;
  bool requires_diagonal() const noexcept;
  bool requires_symmetry() const noexcept;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;

 private:
  ClassSpec(ClassKind kind, std::optional<Weights> weights) : kind_(kind), weights_(std::move(weights)) {}
  ClassKind kind_ = ClassKind::Lambda3;
  std::optional<Weights> weights_;
};

std::string to_string(ClassKind kind);
std::optional<ClassKind> parse_class_kind(std::string_view name);

// P^k for the cyclic shift P with ones at (i, i+1 mod n); k is reduced mod n.
BinaryMatrix power_matrix(std::size_t n, long k);

WeightedMatrix direct_sum(const WeightedMatrix& a, const WeightedMatrix& b);
BinaryMatrix direct_sum(const BinaryMatrix& a, const BinaryMatrix& b);

bool is_class_member(const WeightedMatrix& m, const ClassSpec& spec);
bool is_class_member(const BinaryMatrix& m, const ClassSpec& spec);

// Row and column index sets of one connected block of the bipartite support graph.
struct SupportComponent {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// Connected components of the bipartite row/column support graph, ordered by smallest row.
std::vector<SupportComponent> support_components(const WeightedMatrix& m);
std::vector<SupportComponent> support_components(const BinaryMatrix& m);

// Direct summands under simultaneous row/column permutation.
std::vector<WeightedMatrix> decompose_components(const WeightedMatrix& m);

// Single-block test for bit-packed rows, used on the enumeration hot path.
bool is_connected_support(std::span<const std::uint64_t> rows);

// Text format: a line with n, then n lines of n rationals ("p" or "p/q").
WeightedMatrix read_matrix(std::istream& in);
WeightedMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const WeightedMatrix& m);
std::string format_matrix(const WeightedMatrix& m);

}  // namespace permspec

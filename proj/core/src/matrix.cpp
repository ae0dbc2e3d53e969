#include "permspec/matrix.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace permspec {

namespace {

void check_dimension(std::size_t n) {
  if (n > BinaryMatrix::max_dimension)
    throw Error(Errc::invalid_argument, "binary matrices are limited to dimension 64");
}

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Union-find over rows [0, n) and columns [n, 2n).
class Dsu {
 public:
  explicit Dsu(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

template <class NonZero>
std::vector<SupportComponent> components_impl(std::size_t n, NonZero nonzero) {
  Dsu dsu(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (nonzero(i, j)) dsu.unite(i, n + j);
  std::vector<SupportComponent> out;
  std::vector<std::size_t> slot(2 * n, SIZE_MAX);
  for (std::size_t x = 0; x < 2 * n; ++x) {
    std::size_t root = dsu.find(x);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    auto& comp = out[slot[root]];
    if (x < n)
      comp.rows.push_back(x);
    else
      comp.cols.push_back(x - n);
  }
  // Roots are minimal indices, so rows come first; an all-zero column would form a column-only block.
  std::stable_sort(out.begin(), out.end(), [](const SupportComponent& a, const SupportComponent& b) {
    auto key = [](const SupportComponent& c) { return c.rows.empty() ? SIZE_MAX : c.rows.front(); };
    return key(a) < key(b);
  });
  return out;
}

}  // namespace

// ---------------------------------------------------------------- BinaryMatrix

BinaryMatrix::BinaryMatrix(std::size_t n) : n_(n), rows_(n, 0) { check_dimension(n); }

BinaryMatrix::BinaryMatrix(std::size_t n, std::vector<std::uint64_t> rows) : n_(n), rows_(std::move(rows)) {
  check_dimension(n);
  if (rows_.size() != n) throw Error(Errc::invalid_argument, "row count does not match dimension");
  for (auto r : rows_)
    if (r & ~low_mask(n)) throw Error(Errc::invalid_argument, "row has bits beyond the dimension");
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) { return power_matrix(n, 0); }

BinaryMatrix BinaryMatrix::ones(std::size_t n) {
  check_dimension(n);
  return BinaryMatrix(n, std::vector<std::uint64_t>(n, low_mask(n)));
}

void BinaryMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (value)
    rows_[i] |= std::uint64_t{1} << j;
  else
    rows_[i] &= ~(std::uint64_t{1} << j);
}

int BinaryMatrix::row_sum(std::size_t i) const { return std::popcount(rows_[i]); }

int BinaryMatrix::col_sum(std::size_t j) const { return std::popcount(column(j)); }

std::uint64_t BinaryMatrix::column(std::size_t j) const {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n_; ++i) c |= ((rows_[i] >> j) & 1u) << i;
  return c;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(n_);
  for (std::size_t j = 0; j < n_; ++j) t.rows_[j] = column(j);
  return t;
}

BinaryMatrix BinaryMatrix::operator|(const BinaryMatrix& other) const {
  if (other.n_ != n_) throw Error(Errc::invalid_argument, "dimension mismatch");
  BinaryMatrix r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.rows_[i] |= other.rows_[i];
  return r;
}

BinaryMatrix BinaryMatrix::without(const BinaryMatrix& other) const {
  if (other.n_ != n_) throw Error(Errc::invalid_argument, "dimension mismatch");
  BinaryMatrix r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.rows_[i] &= ~other.rows_[i];
  return r;
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix& other) const {
  if (other.n_ != n_) throw Error(Errc::invalid_argument, "dimension mismatch");
  BinaryMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t acc = 0;
    for (std::uint64_t bits = rows_[i]; bits; bits &= bits - 1) acc |= other.rows_[std::countr_zero(bits)];
    r.rows_[i] = acc;
  }
  return r;
}

// -------------------------------------------------------------- WeightedMatrix

WeightedMatrix::WeightedMatrix(std::size_t n) : n_(n), entries_(n * n) {}

WeightedMatrix::WeightedMatrix(std::size_t n, std::vector<ExactValue> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) throw Error(Errc::invalid_argument, "entry count does not match dimension");
}

WeightedMatrix::WeightedMatrix(const BinaryMatrix& pattern) : WeightedMatrix(pattern.size()) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (pattern.get(i, j)) (*this)(i, j) = 1;
}

WeightedMatrix WeightedMatrix::identity(std::size_t n) { return WeightedMatrix(BinaryMatrix::identity(n)); }

WeightedMatrix WeightedMatrix::transpose() const {
  WeightedMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

WeightedMatrix WeightedMatrix::operator+(const WeightedMatrix& other) const {
  if (other.n_ != n_) throw Error(Errc::invalid_argument, "dimension mismatch");
  WeightedMatrix r(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += other.entries_[k];
  return r;
}

WeightedMatrix WeightedMatrix::operator-(const WeightedMatrix& other) const {
  if (other.n_ != n_) throw Error(Errc::invalid_argument, "dimension mismatch");
  WeightedMatrix r(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= other.entries_[k];
  return r;
}

WeightedMatrix WeightedMatrix::operator*(const WeightedMatrix& other) const {
  if (other.n_ != n_) throw Error(Errc::invalid_argument, "dimension mismatch");
  WeightedMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const ExactValue& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r(i, j) += a * other(k, j);
    }
  return r;
}

WeightedMatrix operator*(const ExactValue& scalar, const WeightedMatrix& m) {
  WeightedMatrix r(m);
  for (auto& e : r.entries_) e *= scalar;
  return r;
}

std::optional<BinaryMatrix> WeightedMatrix::as_binary() const {
  if (n_ > BinaryMatrix::max_dimension) return std::nullopt;
  BinaryMatrix b(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const ExactValue& e = (*this)(i, j);
      if (e == 1)
        b.set(i, j);
      else if (e != 0)
        return std::nullopt;
    }
  return b;
}

// ------------------------------------------------------------------- ClassSpec

ClassSpec ClassSpec::binary(ClassKind kind) {
  ClassSpec spec(kind, std::nullopt);
  if (spec.is_weighted()) throw Error(Errc::invalid_argument, "weighted class kinds need weights");
  return spec;
}

ClassSpec ClassSpec::weighted(ClassKind kind, Weights weights) {
  ClassSpec spec(kind, weights);
  if (!spec.is_weighted()) throw Error(Errc::invalid_argument, "binary class kinds take no weights");
  if (!weights.all_nonzero()) throw Error(Errc::invalid_argument, "class weights must be nonzero");
  return spec;
}

bool ClassSpec::is_weighted() const noexcept {
  return kind_ == ClassKind::LambdaABG || kind_ == ClassKind::LambdaABGDiag || kind_ == ClassKind::LambdaABGSym;
}

bool ClassSpec::requires_diagonal() const noexcept {
  return kind_ != ClassKind::Lambda3 && kind_ != ClassKind::LambdaABG;
}

bool ClassSpec::requires_symmetry() const noexcept {
  return kind_ == ClassKind::Lambda3Sym || kind_ == ClassKind::LambdaABGSym;
}

namespace {
constexpr std::array<std::pair<ClassKind, std::string_view>, 6> kind_names{{
    {ClassKind::Lambda3, "lambda3"},
    {ClassKind::Lambda3Diag, "lambda3-diag"},
    {ClassKind::Lambda3Sym, "lambda3-sym"},
    {ClassKind::LambdaABG, "abg"},
    {ClassKind::LambdaABGDiag, "abg-diag"},
    {ClassKind::LambdaABGSym, "abg-sym"},
}};
}  // namespace

std::string to_string(ClassKind kind) {
  for (auto [k, name] : kind_names)
    if (k == kind) return std::string(name);
  return "unknown";
}

std::optional<ClassKind> parse_class_kind(std::string_view name) {
  for (auto [k, n] : kind_names)
    if (n == name) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------- constructors

BinaryMatrix power_matrix(std::size_t n, long k) {
  if (n == 0) throw Error(Errc::empty_matrix, "empty matrix");
  BinaryMatrix p(n);
  long shift = k % static_cast<long>(n);
  if (shift < 0) shift += static_cast<long>(n);
  for (std::size_t i = 0; i < n; ++i) p.set(i, (i + static_cast<std::size_t>(shift)) % n);
  return p;
}

WeightedMatrix direct_sum(const WeightedMatrix& a, const WeightedMatrix& b) {
  const std::size_t na = a.size(), nb = b.size();
  WeightedMatrix r(na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) r(na + i, na + j) = b(i, j);
  return r;
}

BinaryMatrix direct_sum(const BinaryMatrix& a, const BinaryMatrix& b) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<std::uint64_t> rows;
  rows.reserve(na + nb);
  for (auto r : a.rows()) rows.push_back(r);
  for (auto r : b.rows()) rows.push_back(r << na);
  return BinaryMatrix(na + nb, std::move(rows));
}

// ------------------------------------------------------------------ membership

bool is_class_member(const BinaryMatrix& m, const ClassSpec& spec) {
  if (spec.is_weighted()) return is_class_member(WeightedMatrix(m), spec);
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    if (m.row_sum(i) != 3 || m.col_sum(i) != 3) return false;
  if (spec.requires_diagonal())
    for (std::size_t i = 0; i < n; ++i)
      if (!m.get(i, i)) return false;
  if (spec.requires_symmetry() && m.transpose() != m) return false;
  return true;
}

bool is_class_member(const WeightedMatrix& m, const ClassSpec& spec) {
  if (!spec.is_weighted()) {
    auto b = m.as_binary();
    return b && is_class_member(*b, spec);
  }
  const Weights& w = *spec.weights();
  const std::size_t n = m.size();
  std::array<ExactValue, 3> expected{w.alpha, w.beta, w.gamma};
  std::sort(expected.begin(), expected.end());

  auto line_ok = [&](auto entry) {
    std::vector<ExactValue> nz;
    for (std::size_t k = 0; k < n; ++k)
      if (entry(k) != 0) nz.push_back(entry(k));
    if (nz.size() != 3) return false;
    std::sort(nz.begin(), nz.end());
    return std::equal(nz.begin(), nz.end(), expected.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!line_ok([&](std::size_t k) -> const ExactValue& { return m(i, k); })) return false;
    if (!line_ok([&](std::size_t k) -> const ExactValue& { return m(k, i); })) return false;
  }
  if (spec.requires_diagonal())
    for (std::size_t i = 0; i < n; ++i)
      if (m(i, i) != w.beta) return false;
  if (spec.requires_symmetry())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && (m(i, j) == w.alpha) != (m(j, i) == w.gamma)) return false;
  return true;
}

// -------------------------------------------------------------- decomposition

std::vector<SupportComponent> support_components(const WeightedMatrix& m) {
  return components_impl(m.size(), [&](std::size_t i, std::size_t j) { return m(i, j) != 0; });
}

std::vector<SupportComponent> support_components(const BinaryMatrix& m) {
  return components_impl(m.size(), [&](std::size_t i, std::size_t j) { return m.get(i, j); });
}

std::vector<WeightedMatrix> decompose_components(const WeightedMatrix& m) {
  std::vector<WeightedMatrix> out;
  for (const auto& comp : support_components(m)) {
    if (comp.rows.size() != comp.cols.size())
      throw Error(Errc::invalid_argument, "support is not a doubly-stochastic pattern");
    const std::size_t k = comp.rows.size();
    WeightedMatrix block(k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) block(a, b) = m(comp.rows[a], comp.cols[b]);
    out.push_back(std::move(block));
  }
  return out;
}

bool is_connected_support(std::span<const std::uint64_t> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return false;
  std::uint64_t reached_rows = 1, cols = rows[0];
  for (;;) {
    std::uint64_t grow = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!((reached_rows >> i) & 1u) && (rows[i] & cols)) grow |= std::uint64_t{1} << i;
    if (!grow) break;
    reached_rows |= grow;
    for (std::uint64_t g = grow; g; g &= g - 1) cols |= rows[std::countr_zero(g)];
  }
  return reached_rows == low_mask(n);
}

// ------------------------------------------------------------------------- I/O

WeightedMatrix read_matrix(std::istream& in) {
  long n = 0;
  if (!(in >> n) || n <= 0) throw Error(Errc::parse_error, "matrix text must start with a positive dimension");
  const auto dim = static_cast<std::size_t>(n);
  WeightedMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      std::string token;
      if (!(in >> token))
        throw Error(Errc::parse_error, "matrix text ended early at entry (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ")");
      m(i, j) = parse_exact(token);
    }
  return m;
}

WeightedMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const WeightedMatrix& m) {
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
}

std::string format_matrix(const WeightedMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

}  // namespace permspec

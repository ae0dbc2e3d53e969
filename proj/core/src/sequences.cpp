#include "permspec/sequences.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <unordered_map>

namespace permspec {

namespace {

using Term = std::function<ExactValue(const std::vector<ExactValue>& prefix, long k)>;

// Memoized prefixes keyed by sequence name plus parameters. Readers share the
// lock; extension takes it exclusively.
class MemoTable {
 public:
  static MemoTable& instance() {
    static MemoTable table;
    return table;
  }

  ExactValue get(const std::string& key, long n, const Term& term) {
    {
      std::shared_lock lock(mutex_);
      auto it = prefixes_.find(key);
      if (it != prefixes_.end() && static_cast<long>(it->second.size()) > n) return it->second[n];
    }
    std::unique_lock lock(mutex_);
    auto& prefix = prefixes_[key];
    while (static_cast<long>(prefix.size()) <= n) prefix.push_back(term(prefix, static_cast<long>(prefix.size())));
    return prefix[n];
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::string, std::vector<ExactValue>> prefixes_;
};

void require(bool ok, const char* message) {
  if (!ok) throw Error(Errc::invalid_argument, message);
}

long sign(long n) { return n % 2 == 0 ? 1 : -1; }

BigInt power(long base, long e) { return pow(BigInt(base), static_cast<unsigned long>(e)); }

std::string weights_key(const char* name, const Weights& w) {
  return std::string(name) + ":" + to_string(w.alpha) + "," + to_string(w.beta) + "," + to_string(w.gamma);
}

ExactValue require_integer(ExactValue v, const char* what, long n) {
  if (!is_integer(v))
    throw Error(Errc::formula_mismatch, std::string("formula mismatch: ") + what + " at n=" + std::to_string(n) +
                                            " evaluated to non-integer " + to_string(v));
  return v;
}

}  // namespace

ExactValue subfactorial(long n) {
  require(n >= 0, "subfactorial needs n >= 0");
  return MemoTable::instance().get("D", n, [](const std::vector<ExactValue>& d, long k) -> ExactValue {
    if (k == 0) return 1;
    return k * d[k - 1] + sign(k);
  });
}

ExactValue menage_u(long n) {
  require(n >= 0, "menage_u needs n >= 0");
  return MemoTable::instance().get("U", n, [](const std::vector<ExactValue>& u, long k) -> ExactValue {
    switch (k) {
      case 0: return 1;
      case 1: return -1;
      case 2: return 0;
      default: break;
    }
    return k * u[k - 1] + exact(k, k - 2) * u[k - 2] + exact(4 * sign(k - 1), k - 2);
  });
}

ExactValue latin_k(long n) {
  require(n >= 3, "latin_k needs n >= 3");
  ExactValue sum = 0;
  for (long k = 0; k <= n / 2; ++k)
    sum += ExactValue(binomial(n, k)) * subfactorial(n - k) * subfactorial(k) * menage_u(n - 2 * k);
  return require_integer(sum, "latin_k", n);
}

ExactValue count_lambda3(long n) {
  require(n >= 3, "count_lambda3 needs n >= 3");
  return MemoTable::instance().get("lambda3", n, [](const std::vector<ExactValue>&, long m) -> ExactValue {
    if (m < 3) return 0;
    const BigInt nfact2 = factorial(m) * factorial(m);
    ExactValue sum = 0;
    for (long k1 = 0; k1 <= m; ++k1)
      for (long k2 = 0; k1 + k2 <= m; ++k2) {
        const long k3 = m - k1 - k2;
        BigInt num = nfact2 * factorial(k2 + 3 * k3) * power(2, k1) * power(3, k2);
        BigInt k3f = factorial(k3);
        BigInt den = factorial(k1) * factorial(k2) * k3f * k3f * power(6, k3);
        ExactValue term(num, den);
        term.canonicalize();
        if (k2 % 2 == 1)
          sum -= term;
        else
          sum += term;
      }
    sum /= ExactValue(power(6, m));
    return require_integer(sum, "count_lambda3", m);
  });
}

ExactValue s_seq(long n) {
  require(n >= 0, "s_seq needs n >= 0");
  return MemoTable::instance().get("S", n, [](const std::vector<ExactValue>& s, long k) -> ExactValue {
    if (k == 0) return 1;
    if (k == 1) return 0;
    return (k - 1) * (s[k - 1] + s[k - 2] / 2);
  });
}

ExactValue count_lambda3_diag(long n) {
  require(n >= 3, "count_lambda3_diag needs n >= 3");
  ExactValue sum = 0;
  for (long k = 0; k <= n / 2; ++k)
    sum += ExactValue(binomial(n, k)) * s_seq(n - k) * s_seq(k) * menage_u(n - 2 * k);
  return require_integer(sum, "count_lambda3_diag", n);
}

ExactValue a_seq(long n) {
  require(n >= 3, "a_seq needs n >= 3");
  return MemoTable::instance().get("a", n, [](const std::vector<ExactValue>& a, long k) -> ExactValue {
    if (k < 3) return 0;
    if (k == 3) return 6;
    if (k == 4) return 9;
    return a[k - 1] + a[k - 2] - 2;
  });
}

ExactValue lucas(long n) {
  require(n >= 0, "lucas needs n >= 0");
  return MemoTable::instance().get("lucas", n, [](const std::vector<ExactValue>& l, long k) -> ExactValue {
    if (k == 0) return 2;
    if (k == 1) return 1;
    return l[k - 1] + l[k - 2];
  });
}

ExactValue a_seq_closed(long n) {
  require(n >= 3, "a_seq_closed needs n >= 3");
  // phi^n + (-phi)^-n is the Lucas number L(n).
  return lucas(n) + 2;
}

ExactValue a_general(const Weights& w, long n) {
  require(n >= 3, "a_general needs n >= 3");
  require(w.all_nonzero(), "a_general needs nonzero weights");
  const Weights weights = w;
  return MemoTable::instance().get(
      weights_key("abg", w), n, [weights](const std::vector<ExactValue>& a, long k) -> ExactValue {
        const auto& [al, be, ga] = weights;
        if (k < 3) return 0;
        if (k == 3) return al * al * al + be * be * be + ga * ga * ga + 3 * al * be * ga;
        if (k == 4) {
          ExactValue ag = al * ga;
          return pow(al, 4) + pow(be, 4) + pow(ga, 4) + 4 * al * be * be * ga + 2 * ag * ag;
        }
        return be * a[k - 1] + al * ga * a[k - 2] + pow(al, k - 1) * (al - be - ga) + pow(ga, k - 1) * (ga - be - al);
      });
}

ExactValue a_lemma4(const ExactValue& alpha, const ExactValue& gamma, long n) {
  require(n >= 3, "a_lemma4 needs n >= 3");
  if (n % 2 == 1) return 2 * pow(gamma, n);
  return 2 * (pow(alpha, n) + pow(gamma, n));
}

double diag_asymptotic_constant() { return 2.0 * std::sqrt(std::numbers::pi * std::exp(-5.0)); }

double asymptotic_estimate(AsymptoticClass which, long n) {
  require(n >= 3, "asymptotic_estimate needs n >= 3");
  const double x = static_cast<double>(n);
  if (which == AsymptoticClass::Lambda3) return std::exp(std::lgamma(3 * x + 1) - x * std::log(36.0) - 2.0);
  return diag_asymptotic_constant() * std::sqrt(x) * std::exp(2 * x * (std::log(x) - 1.0));
}

std::vector<std::string> sequence_names() {
  return {"D", "U", "K", "S", "a", "a-closed", "lucas", "lambda3", "lambda3-diag"};
}

SequenceTable sequence_table(const std::string& name, long first, long last) {
  static const std::unordered_map<std::string, std::function<ExactValue(long)>> table{
      {"D", subfactorial},     {"U", menage_u},  {"K", latin_k},
      {"S", s_seq},            {"a", a_seq},     {"a-closed", a_seq_closed},
      {"lucas", lucas},        {"lambda3", count_lambda3},
      {"lambda3-diag", count_lambda3_diag},
  };
  auto it = table.find(name);
  if (it == table.end()) throw Error(Errc::invalid_argument, "unknown sequence '" + name + "'");
  if (first > last) throw Error(Errc::invalid_argument, "empty index range");
  SequenceTable out{name, {}, name == "a-closed" ? SequenceSource::ClosedForm : SequenceSource::Recursion};
  for (long k = first; k <= last; ++k) out.values.emplace(k, it->second(k));
  return out;
}

}  // namespace permspec

#include "lkgraph/smith.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "lkgraph/errors.hpp"

namespace lkgraph {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

/// Nonzero entry of least absolute value in the block starting at (t, t);
/// row-major scan keeps the lexicographically first among equals.
std::optional<Position> pick_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  BigInt best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      BigInt v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = Position{i, j};
        best_abs = std::move(v);
      }
    }
  return best;
}

/// Row and column of pivot (t, t) reduced by division; true when both are
/// cleared with zero remainders.
bool clear_cross(IntMatrix& a, IntMatrix& u, IntMatrix& v, std::size_t t) {
  bool clean = true;
  const BigInt pivot = a(t, t);
  for (std::size_t i = t + 1; i < a.rows(); ++i) {
    if (a(i, t) == 0) continue;
    BigInt q = a(i, t) / pivot;
    a.add_row_multiple(i, t, -q);
    u.add_row_multiple(i, t, -q);
    clean = clean && a(i, t) == 0;
  }
  for (std::size_t j = t + 1; j < a.cols(); ++j) {
    if (a(t, j) == 0) continue;
    BigInt q = a(t, j) / pivot;
    a.add_col_multiple(j, t, -q);
    v.add_col_multiple(j, t, -q);
    clean = clean && a(t, j) == 0;
  }
  return clean;
}

std::optional<std::size_t> row_not_divisible(const IntMatrix& a, std::size_t t) {
  for (std::size_t i = t + 1; i < a.rows(); ++i)
    for (std::size_t j = t + 1; j < a.cols(); ++j)
      if (a(i, j) % a(t, t) != 0) return i;
  return std::nullopt;
}

BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

/// Calls `visit` with every increasing k-subset of {0, ..., n-1}.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    visit(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::string certificate_defect(const IntMatrix& m, const SnfCertificate& cert) {
  const auto& [U, D, V, divisors] = cert;
  if (U.rows() != m.rows() || U.cols() != m.rows()) return "U has wrong dimensions";
  if (V.rows() != m.cols() || V.cols() != m.cols()) return "V has wrong dimensions";
  if (D.rows() != m.rows() || D.cols() != m.cols()) return "D has wrong dimensions";
  if (U * m * V != D) return "U*M*V != D";
  if (abs(determinant(U)) != 1) return "U is not unimodular";
  if (abs(determinant(V)) != 1) return "V is not unimodular";
  if (divisors.size() > std::min(m.rows(), m.cols())) return "too many divisors";
  for (std::size_t i = 0; i < D.rows(); ++i)
    for (std::size_t j = 0; j < D.cols(); ++j) {
      const BigInt expected = (i == j && i < divisors.size()) ? divisors[i] : BigInt(0);
      if (D(i, j) != expected) return "D does not match the divisor list";
    }
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i] <= 0) return "non-positive divisor";
    if (i + 1 < divisors.size() && divisors[i + 1] % divisors[i] != 0) return "divisibility chain broken";
  }
  return {};
}

SnfCertificate smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  std::vector<BigInt> divisors;

  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    while (true) {
      auto pivot = pick_pivot(a, t);
      if (!pivot) break;
      a.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);
      if (!clear_cross(a, u, v, t)) continue;
      if (auto r = row_not_divisible(a, t)) {
        // Pulls a non-multiple into row t; the next pass leaves a smaller remainder.
        a.add_row_multiple(t, *r, 1);
        u.add_row_multiple(t, *r, 1);
        continue;
      }
      break;
    }
    if (a(t, t) == 0) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
    divisors.push_back(a(t, t));
  }

  SnfCertificate cert{std::move(u), std::move(a), std::move(v), std::move(divisors)};
  if (auto defect = certificate_defect(m, cert); !defect.empty()) {
    throw std::logic_error("smith_normal_form produced an invalid certificate: " + defect);
  }
  return cert;
}

std::vector<BigInt> divisors_via_minors(const IntMatrix& m) {
  const std::size_t limit = std::min(m.rows(), m.cols());
  if (limit > kMinorOracleLimit) {
    throw DomainError("minor oracle limited to min(rows, cols) <= " + std::to_string(kMinorOracleLimit));
  }
  std::vector<BigInt> out;
  BigInt previous = 1;
  for (std::size_t k = 1; k <= limit; ++k) {
    BigInt g = 0;
    IntMatrix minor(k, k);
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rows[i], cols[j]);
        g = gcd_of(g, determinant(minor));
      });
    });
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

LkInvariant::LkInvariant(std::vector<BigInt> chain) : chain_(std::move(chain)) {
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (chain_[i] <= 0) throw DomainError("divisor chain entries must be positive");
    if (i + 1 < chain_.size() && chain_[i + 1] % chain_[i] != 0) {
      throw DomainError(chain_[i].str() + " does not divide " + chain_[i + 1].str());
    }
  }
}

std::string LkInvariant::to_string() const {
  if (chain_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < chain_.size(); ++i) out << (i ? " " : "") << chain_[i];
  return out.str();
}

LkInvariant lk_invariant(const IntMatrix& m) { return LkInvariant(smith_normal_form(m).divisors); }

IntMatrix random_unimodular(std::size_t n, std::uint64_t seed, std::size_t ops) {
  IntMatrix out = IntMatrix::identity(n);
  if (n == 0) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> multiplier(-3, 3);

  auto distinct_pair = [&] {
    std::size_t a = index(rng);
    std::size_t b = index(rng);
    while (b == a) b = index(rng);
    return std::pair{a, b};
  };

  for (std::size_t k = 0; k < ops; ++k) {
    int op = kind(rng);
    if (n < 2) op = 1;
    switch (op) {
      case 0: {
        auto [a, b] = distinct_pair();
        out.swap_rows(a, b);
        break;
      }
      case 1:
        out.negate_row(index(rng));
        break;
      default: {
        auto [a, b] = distinct_pair();
        out.add_row_multiple(a, b, multiplier(rng));
        break;
      }
    }
  }
  return out;
}

}  // namespace lkgraph

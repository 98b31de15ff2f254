#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lkgraph/int_matrix.hpp"

namespace lkgraph {

/// Smith normal form with its unimodular certificate: U * M * V == D.
struct SnfCertificate {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<BigInt> divisors;
};

/// Empty string when `cert` is a valid certificate for `m`, otherwise a
/// description of the first failed check.
std::string certificate_defect(const IntMatrix& m, const SnfCertificate& cert);

/// Diagonalizes `m` with row/column swaps, negations and additions of integer
/// multiples. The pivot is the nonzero entry of least absolute value in the
/// remaining block, ties broken by (row, col). The certificate is verified
/// before returning; a failed check throws std::logic_error.
SnfCertificate smith_normal_form(const IntMatrix& m);

/// Elementary divisors from gcds of k x k minors. Independent of the
/// elimination above; limited to min(rows, cols) <= kMinorOracleLimit.
inline constexpr std::size_t kMinorOracleLimit = 6;
std::vector<BigInt> divisors_via_minors(const IntMatrix& m);

/// Lk value: Zero when there are no elementary divisors, otherwise the chain.
class LkInvariant {
 public:
  LkInvariant() = default;
  explicit LkInvariant(std::vector<BigInt> chain);

  static LkInvariant zero() { return {}; }

  bool is_zero() const noexcept { return chain_.empty(); }
  const std::vector<BigInt>& chain() const noexcept { return chain_; }

  /// "0" or the space-separated chain.
  std::string to_string() const;

  bool operator==(const LkInvariant&) const = default;

 private:
  std::vector<BigInt> chain_;
};

LkInvariant lk_invariant(const IntMatrix& m);

/// Product of `ops` random elementary matrices (swap, negate, add a multiple
/// in [-3, 3]). Deterministic in `seed`.
IntMatrix random_unimodular(std::size_t n, std::uint64_t seed, std::size_t ops);

}  // namespace lkgraph

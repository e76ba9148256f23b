#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "logarr/core/truncated.hpp"
#include "logarr/core/univariate.hpp"

namespace logarr {

/// Hilbert series N(X) / (1 - X)^denom_power of a graded module over a polynomial
/// ring in denom_power variables.
struct HilbertSeries {
  LaurentPoly numerator;
  int denom_power = 0;
  /// Highest degree whose dimension was computed (absent for closed forms).
  std::optional<int> cutoff;
  /// Number of trailing numerator coefficients verified to vanish.
  int stable_window = 0;

  /// dim M_m predicted by the series (exact for every m when numerator is exact).
  std::int64_t dim(int m) const;

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.numerator == b.numerator && a.denom_power == b.denom_power;
  }
};

/// Series of the free module sum_a S(a) over a polynomial ring in n + 1 variables:
/// numerator sum_a X^{-a}, denominator power n + 1.
HilbertSeries hilbert_series_free(const std::vector<int>& twists, int n);

/// Coefficients of (sum_i dims[i] X^(lo+i)) (1 - X)^k over the same window of degrees;
/// entry i belongs to X^(lo+i).  Degrees above the window are not determined.
std::vector<Rat> numerator_from_dims(const std::vector<std::int64_t>& dims, int k);

/// Laurent expansion of num(X) / (1 - X)^denom_power at X = 1 + u, kept up to u^order_cap,
/// with coefficients lifted into Q[t]/(t^modulus).
USeries expand_at_one(const LaurentPoly& num, int denom_power, int modulus, int order_cap);

}  // namespace logarr

#include "logarr/core/hilbert.hpp"

#include <stdexcept>

#include "logarr/core/monomial.hpp"

namespace logarr {

std::int64_t HilbertSeries::dim(int m) const {
  Rat total = 0;
  for (const auto& [e, c] : numerator.terms()) total += c * static_cast<long>(dim_polys(denom_power, m - e));
  return to_int64(total);
}

HilbertSeries hilbert_series_free(const std::vector<int>& twists, int n) {
  if (n < 0) throw std::invalid_argument("projective dimension must be nonnegative");
  HilbertSeries h;
  h.denom_power = n + 1;
  for (int a : twists) h.numerator.add_term(-a, 1);
  return h;
}

std::vector<Rat> numerator_from_dims(const std::vector<std::int64_t>& dims, int k) {
  const LaurentPoly factor = one_minus_x_pow(k);
  std::vector<Rat> out(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    for (const auto& [j, c] : factor.terms()) {
      if (static_cast<std::size_t>(j) > i) break;
      out[i] += c * static_cast<long>(dims[i - static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

USeries expand_at_one(const LaurentPoly& num, int denom_power, int modulus, int order_cap) {
  if (order_cap < -denom_power) throw std::invalid_argument("order cap below the pole order");
  USeries out(modulus, order_cap);
  // num(1+u) = sum_e c_e (1+u)^e; dividing by (-u)^k shifts orders down by k.
  const int need = order_cap + denom_power;
  const Rat sign = (denom_power % 2) ? -1 : 1;
  for (int j = 0; j <= need; ++j) {
    Rat s = 0;
    for (const auto& [e, c] : num.terms()) s += c * gen_binomial(e, j);
    if (s != 0) out.add(j - denom_power, TruncPoly(modulus, s * sign));
  }
  return out;
}

}  // namespace logarr

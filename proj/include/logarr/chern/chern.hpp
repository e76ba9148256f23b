#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logarr/arrangement/arrangement.hpp"
#include "logarr/core/hilbert.hpp"
#include "logarr/core/truncated.hpp"
#include "logarr/logmodules/modules.hpp"

namespace logarr {

/// Element of Z[t]/(t^{n+1}).
struct TruncChernPoly {
  enum class Tag { Chern, PoincareClass };
  int n = 0;
  TruncPoly c{1};
  Tag tag = Tag::Chern;

  TruncChernPoly() = default;
  TruncChernPoly(int n_, TruncPoly c_, Tag tag_ = Tag::Chern);
  std::vector<std::int64_t> coeffs() const { return c.integer_coeffs(); }
  friend bool operator==(const TruncChernPoly& a, const TruncChernPoly& b) { return a.n == b.n && a.c == b.c; }
};

TruncChernPoly chern_split(const std::vector<int>& twists, int n);
/// Throws std::invalid_argument("resolution incomplete") for a truncated table.
TruncChernPoly chern_from_betti(const BettiTable& b, int n);
/// t -> -t.
TruncChernPoly dual_chern(const TruncChernPoly& c);

/// Hilbert series of the exterior powers 0..r of a rank-r module on P^n.
struct RInput {
  int r = 0;
  int n = 0;
  std::vector<HilbertSeries> series;
};

/// Series of the split bundle sum O(a) and its exterior powers.
RInput split_r_input(const std::vector<int>& twists, int n);

/// R(E;t,X) at X = 1 + u, kept up to u^1, with t replaced by sign_of_t * t.
USeries assemble_R(const RInput& input, int sign_of_t);

class LimitDoesNotExist : public std::runtime_error {
public:
  LimitDoesNotExist(int order, int t_power, const Rat& value);
  int order() const { return order_; }
  int t_power() const { return t_power_; }
  const Rat& value() const { return value_; }

private:
  int order_;
  int t_power_;
  Rat value_;
};

TruncChernPoly limit_at_one(const USeries& rs);

/// chi(A,t) from the Hilbert series of D^0..D^{n+1}; each series stabilizes below max_cutoff.
UPoly solomon_terao(const Arrangement& a, int max_cutoff, Backend backend = Backend::Exact);
/// The same limit from precomputed series of D^0..D^{n+1}.
UPoly solomon_terao_from_series(const std::vector<HilbertSeries>& der_series, int n_vars);

class HypothesisFailed : public std::runtime_error {
public:
  HypothesisFailed(const std::string& what, std::optional<ElementVerdict> witness)
      : std::runtime_error("hypothesis failed: " + what), witness_(std::move(witness)) {}
  const std::optional<ElementVerdict>& witness() const { return witness_; }

private:
  std::optional<ElementVerdict> witness_;
};

enum class Strategy { Limit, Betti };

struct MainTheoremOptions {
  Strategy strategy = Strategy::Betti;
  /// Limit strategy: highest degree tried for each D^p series.
  int max_cutoff = -1;
  BettiOptions betti;
};

struct MainTheoremReport {
  Strategy strategy = Strategy::Betti;
  UPoly pi;
  TruncChernPoly pi_bar;
  TruncChernPoly ct_der1;
  TruncChernPoly ct_omega1;
  TruncChernPoly ct_omega1_0;
  /// pi_bar == c_t(Omega^1~).
  bool equal = false;
  /// pi == (1 + t) c_t(Omega^1_0~) as polynomials of degree n+1.
  bool euler_factor = false;
  std::optional<BettiTable> betti;
  std::vector<HilbertSeries> der_series;
};

/// Throws HypothesisFailed when A is not locally free.
MainTheoremReport verify_main_theorem(const Arrangement& a, const MainTheoremOptions& opts = {});

/// Hilbert polynomial T with T(m) = dim M_m for every m >= threshold.
struct HilbertPolynomial {
  UPoly poly;
  int threshold = 0;
};
HilbertPolynomial hilbert_poly_from_series(const HilbertSeries& h);

/// chi(E(m)) for a rank-3 bundle on P^3 with Chern classes c1, c2, c3.  The constant
/// term carries c1^3/6, the value forced by split bundles.
UPoly chi_twist_poly_p3_rank3(const Rat& c1, const Rat& c2, const Rat& c3);

struct TopChernReport {
  bool first_applicable = false;
  Rat first_lhs, first_rhs;
  bool first_ok = false;
  bool second_applicable = false;
  UPoly second_lhs, second_rhs;
  bool second_ok = false;
};
/// Throws std::invalid_argument when r < n.
TopChernReport top_chern_checks(const std::vector<int>& twists, int n);

/// Recomputes the limit after replacing every D^p series by that of its truncation in
/// degrees >= m0; true when the limit is unchanged.
bool remark42_check(const Arrangement& a, int m0, int max_cutoff = -1);

/// Series of the truncation M_{>= m0}.
HilbertSeries truncate_series(const HilbertSeries& h, int m0);

}  // namespace logarr

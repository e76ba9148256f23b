#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logarr/arrangement/arrangement.hpp"
#include "logarr/core/mpoly.hpp"
#include "logarr/logmodules/modules.hpp"

namespace logarr {

class GenericityViolated : public std::invalid_argument {
public:
  explicit GenericityViolated(std::vector<int> witness);
  /// Indices of a linearly dependent set of at most n+1 forms.
  const std::vector<int>& witness() const { return witness_; }

private:
  std::vector<int> witness_;
};

/// The resolution 0 -> S^{d-n-1} -> S(1)^d -> Omega^1 -> 0 of a generic arrangement.
/// Coordinates are changed so that the first n+1 forms become x_0..x_n; every later form
/// is l_i = sum_j a_{i,j} x_j in those coordinates.
struct ZieglerData {
  int n_vars = 0;
  int d = 0;
  /// a[i][j] for every form i (the first n+1 rows are unit vectors).
  std::vector<std::vector<Rat>> coefficients;
  /// d rows, d-n-1 columns.
  std::vector<std::vector<MPoly>> tau;
  std::vector<int> source_twists;
  std::vector<int> target_twists;
  int columns() const { return d - n_vars; }
};

ZieglerData ziegler_matrix(const Arrangement& a);

struct ZieglerDegree {
  int m = 0;
  std::int64_t module_dim = 0;
  std::int64_t predicted = 0;
  bool injective = false;
  bool ok() const { return module_dim == predicted && injective; }
};

struct ZieglerReport {
  ZieglerData data;
  /// The columns of tau are relations among the dl_i / l_i.
  bool complex_ok = false;
  std::vector<ZieglerDegree> degrees;
  bool ok() const;
  std::optional<int> first_failure() const;
};

/// Checks degrees lo..hi.
ZieglerReport ziegler_check(const Arrangement& a, int lo, int hi, Backend backend = Backend::Exact);

/// One term D_i F_1 (x) Lambda^{p-i} F_0 of the complex; twists listed largest first.
struct LebeltTerm {
  int i = 0;
  std::int64_t rank = 0;
  std::vector<int> twists;
};

struct LebeltTerms {
  int p = 0;
  /// Indexed by i = 0..p, i.e. by homological position.
  std::vector<LebeltTerm> terms;
  /// sum_i (-1)^i dim (term_i)_m over a polynomial ring in n_vars variables.
  std::int64_t euler_dim(int n_vars, int m) const;
  std::int64_t euler_rank() const;
};

/// Twists in the S(a) convention: a generator of degree g contributes twist -g.
LebeltTerms lebelt_terms(const std::vector<int>& f0_twists, const std::vector<int>& f1_twists, int p);

struct LebeltReport {
  Side side = Side::Form;
  int p = 0;
  bool hypothesis_ok = false;
  std::string hypothesis;
  BettiTable base;
  LebeltTerms terms;
  /// m -> (alternating count, direct dimension)
  std::map<int, std::pair<std::int64_t, std::int64_t>> euler;
  std::map<int, WedgeComparison> wedge;
  std::optional<int> pdim;
  std::optional<int> pdim_top;
  bool euler_ok() const;
  bool wedge_ok() const;
  bool pdim_ok() const { return pdim && *pdim == p; }
  bool top_ok() const { return pdim_top && *pdim_top == 0; }
  bool ok() const { return hypothesis_ok && euler_ok() && wedge_ok() && pdim_ok() && top_ok(); }
};

struct LebeltOptions {
  Backend backend = Backend::Exact;
  bool compare_wedge = true;
  bool probe_pdim = true;
};

/// Euler characteristic, wedge and projective dimension checks of the complex built from a
/// length-one resolution of the first module, in degrees lo..hi.  Hypothesis failures are
/// returned with hypothesis_ok == false rather than thrown.
LebeltReport lebelt_check(const Arrangement& a, int p, int lo, int hi, Side side = Side::Form,
                          const LebeltOptions& opts = {});

}  // namespace logarr

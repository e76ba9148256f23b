#pragma once

#include <memory>
#include <string>
#include <vector>

#include "logarr/arrangement/arrangement.hpp"
#include "logarr/logmodules/graded_free.hpp"

namespace logarr {

enum class Side { Der, Form };

/// Which module: D^p (Der) or Omega^p (Form).  With euler_complement set, the
/// selector means D^1_0, the derivations that kill Q.
struct ModuleSelector {
  Side side = Side::Der;
  int p = 1;
  bool euler_complement = false;

  std::string str() const;
};

/// Throws std::invalid_argument("invalid exterior degree") when p is outside [0, n_vars].
void validate(const ModuleSelector& sel, int n_vars);

/// A graded submodule of a free module cut out degreewise by linear conditions:
/// in degree m it is the kernel of conditions(m), whose columns are the columns of
/// ambient() in degree m.
class KernelProblem {
public:
  virtual ~KernelProblem() = default;
  virtual const GradedFreeModule& ambient() const = 0;
  virtual std::vector<RatRow> conditions(int m) const = 0;
  /// Rank of the submodule as an S-module, when known in advance.
  virtual int expected_rank() const { return -1; }
};

/// D^p, Omega^p or D^1_0 of an arrangement inside the free module of all p-derivations
/// (or of all p-forms eta standing for eta / Q).
class LogModuleProblem : public KernelProblem {
public:
  LogModuleProblem(const Arrangement& a, const ModuleSelector& sel);

  const GradedFreeModule& ambient() const override { return ambient_; }
  std::vector<RatRow> conditions(int m) const override;
  int expected_rank() const override;

  const Arrangement& arrangement() const { return arr_; }
  const ModuleSelector& selector() const { return sel_; }
  /// Lowest degree a nonzero element can have: 0 for derivations, -d for forms.
  int min_degree() const;
  /// p-subsets of the variables in lex order, one per ambient component.
  const std::vector<std::vector<int>>& subsets() const { return subsets_; }

private:
  /// Image of mu under x_pivot -> s_i on the hyperplane l_i = 0, as (column in
  /// monomial_basis(nvars, deg mu), coefficient) pairs.
  std::vector<std::pair<int, Rat>> restrict_monomial(int i, const Monomial& mu) const;
  /// Quotient of mu by l_i with remainder free of the pivot variable.
  MPoly quotient_monomial(int i, const Monomial& mu) const;
  const MPoly& s_power(int i, int e) const;

  Arrangement arr_;
  ModuleSelector sel_;
  GradedFreeModule ambient_;
  std::vector<std::vector<int>> subsets_;
  std::vector<int> pivot_;
  std::vector<std::vector<Rat>> forms_;
  mutable std::vector<std::vector<MPoly>> s_powers_;
};

/// Kernel of the map from the free module on the given generators to their ambient module.
class SyzygyProblem : public KernelProblem {
public:
  SyzygyProblem(GradedFreeModule target, std::vector<GradedVector> generators);

  const GradedFreeModule& ambient() const override { return source_; }
  std::vector<RatRow> conditions(int m) const override;

  const GradedFreeModule& target() const { return target_; }
  const std::vector<GradedVector>& generators() const { return gens_; }

private:
  GradedFreeModule target_;
  GradedFreeModule source_;
  std::vector<GradedVector> gens_;
};

/// k-subsets of {0..n-1} in lex order.
std::vector<std::vector<int>> subsets_of(int n, int k);

}  // namespace logarr

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logarr/core/mpoly.hpp"
#include "logarr/core/rational.hpp"

namespace logarr {

/// Coefficient vector of a linear form, primitive with positive leading entry.
using Form = std::vector<std::int64_t>;

/// Central arrangement of hyperplanes in a vector space of dimension n_vars.
class Arrangement {
public:
  Arrangement() = default;

  int n_vars() const { return n_vars_; }
  /// Projective dimension n = n_vars - 1.
  int n() const { return n_vars_ - 1; }
  int d() const { return static_cast<int>(forms_.size()); }
  const std::vector<Form>& forms() const { return forms_; }
  const Form& form(int i) const { return forms_[static_cast<std::size_t>(i)]; }
  std::vector<Rat> form_rat(int i) const;
  /// Rank of the coefficient matrix.
  int rank() const { return rank_; }
  bool essential() const { return rank_ == n_vars_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Defining polynomial: the product of the forms.
  MPoly Q() const;

  friend Arrangement make_arrangement(int n_vars, const std::vector<std::vector<Rat>>& forms, std::string name);

private:
  int n_vars_ = 0;
  int rank_ = 0;
  std::vector<Form> forms_;
  std::string name_;
};

/// Normalizes every form to a primitive integer vector with positive first nonzero entry.
/// Throws std::invalid_argument("degenerate form") or ("duplicate hyperplane").
Arrangement make_arrangement(int n_vars, const std::vector<std::vector<Rat>>& forms, std::string name = "");
Arrangement make_arrangement(int n_vars, const std::vector<Form>& forms, std::string name = "");

/// Built-in families.
Arrangement boolean_arrangement(int m);
Arrangement braid_arrangement(int m);
/// d seeded random forms in n+1 variables, every subset of at most n+1 forms independent.
Arrangement generic_arrangement(int n, int d, std::uint64_t seed);
Arrangement edelman_reiner();
Arrangement nlf_demo();

/// Parses "boolean:3", "braid:4", "generic:2,4,7" (n,d,seed), "edelman-reiner", "nlf-demo".
/// Underscores and hyphens are interchangeable.  Throws std::invalid_argument.
Arrangement family(const std::string& spec);

/// Rank of a set of rational vectors.
int vector_rank(const std::vector<std::vector<Rat>>& vs);

}  // namespace logarr

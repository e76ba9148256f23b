#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "logarr/logmodules/problem.hpp"

namespace logarr {

enum class Backend { Exact, Modular };

/// Degree-by-degree extraction of minimal generators of a KernelProblem.
///
/// In each degree m the span U_m of all monomial multiples of the generators found
/// so far is compared with the kernel of conditions(m).  Over Z/p both ranks can only
/// drop, so rank_p(U_m) <= dim_Q U_m <= dim_Q ker <= dim_p ker; when the outer two agree
/// the degree has no new generators and its dimension is exact.  Otherwise the kernel
/// is recomputed over Q and new generators are read off the basis vectors whose free
/// column is not a pivot of U_m projected onto the free columns.
class GeneratorEngine {
public:
  GeneratorEngine(const KernelProblem& problem, int start_degree, std::uint32_t prime);

  /// Processes the next degree and returns it.
  int step();
  int next_degree() const { return next_; }

  const std::vector<GradedVector>& generators() const { return gens_; }
  /// Exact dimension of the submodule in every processed degree.
  const std::map<int, std::int64_t>& dims() const { return dims_; }
  int exact_steps() const { return exact_steps_; }

private:
  std::int64_t certified_step(int m, const std::vector<RatRow>& cond, bool& certified);
  std::int64_t exact_step(int m, const std::vector<RatRow>& cond);
  std::vector<GradedVector> multiples(int m) const;

  const KernelProblem& problem_;
  int next_;
  ModField field_;
  std::vector<GradedVector> gens_;
  std::map<int, std::int64_t> dims_;
  int exact_steps_ = 0;
};

/// Kernel dimension of conditions(m) over Z/p: an upper bound for the rational dimension.
std::int64_t modular_kernel_dim(const KernelProblem& problem, int m, const ModField& field);
/// Exact kernel dimension over Q computed by rational elimination.
std::int64_t exact_kernel_dim(const KernelProblem& problem, int m);

/// Fixed prime used by the certificate and the modular backend.
std::uint32_t default_prime();

}  // namespace logarr

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logarr/arrangement/arrangement.hpp"
#include "logarr/core/hilbert.hpp"
#include "logarr/logmodules/generators.hpp"

namespace logarr {

struct GradedDimTable {
  ModuleSelector selector;
  std::map<int, std::int64_t> dims;
  /// Set when the modular backend produced the numbers.
  bool probabilistic = false;
};

/// Raised when a cutoff does not leave room for the stabilization window.
class CutoffTooSmall : public std::runtime_error {
public:
  CutoffTooSmall(const std::string& what, GradedDimTable partial = {})
      : std::runtime_error("cutoff too small: " + what), partial_(std::move(partial)) {}
  const GradedDimTable& partial() const { return partial_; }

private:
  GradedDimTable partial_;
};

std::int64_t graded_dim(const Arrangement& a, const ModuleSelector& sel, int m, Backend backend = Backend::Exact);

/// Dimensions on [lo, hi]; exact ones are certified degree by degree through the generator engine.
GradedDimTable graded_dims(const Arrangement& a, const ModuleSelector& sel, int lo, int hi,
                           Backend backend = Backend::Exact);

struct GeneratorSet {
  ModuleSelector selector;
  int cutoff = 0;
  GradedFreeModule ambient;
  std::vector<GradedVector> generators;

  std::vector<int> degrees() const;
};

GeneratorSet minimal_generators(const Arrangement& a, const ModuleSelector& sel, int cutoff);

struct FreenessReport {
  bool free = false;
  std::vector<int> exponents;
  /// det(coefficients of the basis) = certificate * Q.
  std::optional<Rat> certificate;
  /// Degrees of the minimal generators found below the search bound.
  std::vector<int> generator_degrees;
  int search_bound = 0;
  std::string reason;
};

/// Works on the essentialization; exponents refer to it.
FreenessReport freeness_test(const Arrangement& a);

struct ElementVerdict {
  int element = 0;
  int rank = 0;
  std::vector<int> members;
  FreenessReport report;
};

struct LocalFreenessReport {
  bool locally_free = true;
  std::vector<ElementVerdict> elements;
  /// First non-free element, in lattice order.
  std::optional<ElementVerdict> witness;
};

LocalFreenessReport local_freeness_test(const Arrangement& a);

/// Series numerator / (1-X)^{n_vars}; throws CutoffTooSmall when the numerator has not
/// stabilized, i.e. its last n+2 computed coefficients are not all zero or its value at 1
/// differs from the rank of the module.
HilbertSeries hilbert_series(const Arrangement& a, const ModuleSelector& sel, int cutoff,
                             Backend backend = Backend::Exact);
/// Raises the cutoff until the series stabilizes, up to max_cutoff.
HilbertSeries hilbert_series_auto(const Arrangement& a, const ModuleSelector& sel, int max_cutoff,
                                  Backend backend = Backend::Exact);
/// Stabilization test on a table of dimensions starting at its lowest degree.
std::optional<HilbertSeries> series_from_dims(const std::map<int, std::int64_t>& dims, int n_vars, int window,
                                              std::optional<int> rank);

struct BettiTable {
  /// (homological index, j) -> multiplicity of S(-j).
  std::map<std::pair<int, int>, std::int64_t> entries;
  int gen_cutoff = 0;
  int syz_cutoff = 0;
  int window = 0;
  /// Whether an empty index was reached, so the table is a full resolution.
  bool complete = false;
  int pdim() const;
  std::vector<int> row(int i) const;
  HilbertSeries series(int n_vars) const;
};

struct BettiOptions {
  /// Unset means adaptive: stop each stage after `window` quiet degrees, capped by the
  /// defaults d and d + n + 2.
  std::optional<int> gen_cutoff;
  std::optional<int> syz_cutoff;
  int max_index = -1;
  int window = -1;
};

BettiTable betti_probe(const Arrangement& a, const ModuleSelector& sel, const BettiOptions& opts = {});

struct WedgeComparison {
  std::int64_t wedge_image = 0;
  std::int64_t module_dim = 0;
  bool equal() const { return wedge_image == module_dim; }
};

/// Compares the image of the p-th exterior power of the first log module with D^p or
/// Omega^p in degree m.
WedgeComparison wedge_compare(const Arrangement& a, Side side, int p, int m);

/// For free A: generator degrees of Omega^p are the negatives of those of D^p.
bool duality_check_free(const Arrangement& a, int p);

}  // namespace logarr

#pragma once

#include "json.hpp"
#include "logarr/arrangement/lattice.hpp"
#include "logarr/chern/chern.hpp"
#include "logarr/logmodules/modules.hpp"
#include "logarr/resolutions/resolutions.hpp"

namespace logarr::report {

using Json = nlohmann::ordered_json;

/// Integers become JSON numbers when they fit in 64 bits; everything else is a "p/q" string.
Json rat(const Rat& q);
/// Always a string, for certificates.
Json rat_string(const Rat& q);
/// Coefficients lowest degree first.
Json poly(const UPoly& p);
Json poly(const TruncPoly& p);
Json laurent(const LaurentPoly& p);
Json series(const HilbertSeries& h);
Json selector(const ModuleSelector& s);

Json arrangement(const Arrangement& a);
Json lattice(const Arrangement& a, const Lattice& l);
Json charpoly(const Arrangement& a);
Json freeness(const FreenessReport& r);
Json local_freeness(const LocalFreenessReport& r);
Json element_verdict(const ElementVerdict& v);
Json graded_dims(const GradedDimTable& t);
Json betti(const BettiTable& b);
Json chern(const TruncChernPoly& c);
Json main_theorem(const MainTheoremReport& r);
Json hilbert_polynomial(const HilbertPolynomial& h);
Json top_chern(const TopChernReport& r);
Json ziegler(const ZieglerReport& r);
Json lebelt_terms(const LebeltTerms& t);
Json lebelt(const LebeltReport& r);

/// Rank census: for every rank, elements grouped by how many hyperplanes contain them,
/// each group with the multiset of mu values one rank below.
Json rank_census(const Lattice& l, int r);

}  // namespace logarr::report

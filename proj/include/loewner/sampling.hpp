#pragma once

#include <cstdint>
#include <string>

#include "loewner/commuting.hpp"
#include "loewner/matrix.hpp"
#include "loewner/rng.hpp"

namespace loewner {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Commutation regime of an ordered pair of tuples. `cross`: all 2n matrices
/// pairwise commute. `tuple_only`: commutation is guaranteed only within each
/// tuple.
enum class Regime { cross, tuple_only };

const char* to_string(Regime r);
Regime regime_from_string(const std::string& s);

/// Ordered pair of commuting tuples with A_j <= B_j for every j.
struct DominatingPair {
    CommutingTuple a;
    CommutingTuple b;
    Regime regime;
};

/// Haar-ish random orthogonal matrix: Gram-Schmidt on a Gaussian matrix.
Matrix random_orthogonal(Rng& rng, int d);

/// Tuple with one shared random eigenbasis and diagonal values uniform in
/// `box`; commutes exactly up to rounding. Pure function of the seed.
CommutingTuple sample_commuting_tuple(int n, int d, Interval box, std::uint64_t seed);

/// Ordered pair sampler. cross: shared eigenbasis, B's diagonal values are
/// A's plus gaps drawn from `gap_box`. tuple_only: independent eigenbases for
/// A and B, then the pair is repaired into Loewner order by a multiple of the
/// identity (B shifted up on positive boxes; A shifted down when box.hi <= 0,
/// which keeps both spectra in the nonpositive orthant). Pure in the seed.
DominatingPair sample_dominating_pair(Regime regime, int n, int d, Interval box,
                                      Interval gap_box, std::uint64_t seed);

} // namespace loewner

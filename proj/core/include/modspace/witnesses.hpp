#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modspace/indices.hpp"
#include "modspace/lattice.hpp"

namespace modspace {

enum class MapKind { Product, Convolution };

const char* to_string(MapKind k);

/// Indicator of {|i|_inf <= N}.
Sequence box(long N, Dimension dim);

/// i -> <i>^gamma on {|i|_inf <= N}.
Sequence power_box(const Rational& gamma, long N, Dimension dim);

/// The extremal product family for the finite-r branch of multilinear
/// Hoelder: a_j(i) = (1/m_j(i)) (m / prod m_j)^{r/q_j}(i) on |i|_inf <= N,
/// with x^0 := 1. Throws InvalidBranchError unless 1/r = 1/q - sum 1/q_j > 0.
std::vector<Sequence> holder_power_witness(long N, const IndexPair& out,
                                           const std::vector<IndexPair>& ins, Dimension dim);

/// ||map(seqs)||_{out} / prod_j ||seqs_j||_{ins_j}. Product with one factor is
/// the identity map (embedding probes). Throws ZeroDenominatorError.
double ratio(MapKind kind, const IndexPair& out, const std::vector<IndexPair>& ins,
             const std::vector<Sequence>& seqs, Dimension dim);

/// A parametric witness family: per-input construction roles plus the exact
/// growth exponent of its norm ratio, read off the indices.
struct WitnessFamily {
    enum class Role { UnitOrigin, DeltaRim, DeltaRimNeg, Box, PowerBox, HolderPower };

    struct Slot {
        Role role = Role::Box;
        Rational gamma{0};  // PowerBox exponent
        long scale = 1;     // box half-width N*scale
    };

    std::string label;
    std::vector<Slot> slots;      // one per input
    Rational predicted_slope{0};  // asymptotic d log2(ratio) / d log2(N)
    bool counts_for_margin = true;
};

std::vector<Sequence> instantiate(const WitnessFamily& family, long N, const IndexPair& out,
                                  const std::vector<IndexPair>& ins, Dimension dim);

/// The canonical menu for a discrete-side query: delta transports, boxes,
/// tuned power boxes over input subsets, and the Hoelder power family on its
/// valid branch.
std::vector<WitnessFamily> plan_families(MapKind kind, const IndexPair& out,
                                         const std::vector<IndexPair>& ins, Dimension dim);

/// Largest predicted family exponent in units of 1/q + s/n (exact rational);
/// positive iff some canonical family certifies unbounded growth.
struct MarginReport {
    Rational margin{0};
    std::string family;
};
MarginReport refutation_margin(MapKind kind, const IndexPair& out,
                               const std::vector<IndexPair>& ins, Dimension dim);

inline constexpr double kSlopeThreshold = 0.05;
inline constexpr double kBoundedBand = 0.02;

struct OracleReport {
    enum class Outcome { Bounded, BlowUp, Inconclusive };

    std::string family;
    std::vector<std::pair<long, double>> points;  // (N, ratio)
    double slope = 0.0;      // asymptotic log2-log2 slope estimate
    double slope_lsq = 0.0;  // plain least-squares fit over the same points
    bool monotone = false;
    Rational predicted_slope{0};
    Outcome verdict = Outcome::Inconclusive;

    std::string to_json_string() const;
};

const char* to_string(OracleReport::Outcome o);

std::vector<long> default_N_list(Dimension dim);

/// Evaluates the family ratio along N_list and classifies growth. BlowUp
/// requires slope >= kSlopeThreshold and monotone ratios; Bounded requires
/// slope <= kBoundedBand; anything else is Inconclusive.
OracleReport blowup_probe(MapKind kind, const IndexPair& out, const std::vector<IndexPair>& ins,
                          const WitnessFamily& family, Dimension dim,
                          const std::vector<long>& N_list);

/// Worst case over the canonical families. BlowUp anywhere refutes the
/// relation; the refuting data stays replayable from the stored points.
struct OracleSummary {
    std::vector<OracleReport> reports;
    OracleReport::Outcome verdict = OracleReport::Outcome::Inconclusive;
    double worst_slope = 0.0;
    std::string worst_family;

    std::string to_json_string() const;
};

OracleSummary empirical_decide(MapKind kind, const IndexPair& out,
                               const std::vector<IndexPair>& ins, Dimension dim,
                               const std::vector<long>& N_list = {});

/// Slope of a least-squares line through (x, y).
double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);

/// Limiting slope estimate: accelerates the per-octave slopes when they
/// contract geometrically (transient of a convergent ratio), otherwise the
/// least-squares fit.
double asymptotic_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace modspace

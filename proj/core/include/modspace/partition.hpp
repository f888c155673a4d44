#pragma once

#include "modspace/grid.hpp"
#include "modspace/lattice.hpp"

namespace modspace {

/// Frequency-uniform partition of unity: sigma_k(xi) = rho(xi - k) / sum_l
/// rho(xi - l), sampled on the spectrum lattice for |k|_inf <= K. The
/// normalized multipliers sum to exactly 1 on the covered band
/// {|xi|_inf <= K - 1}; each sigma_k is supported in {|xi - k|_inf < outer}
/// and equals 1 on {|xi - k|_inf <= plateau()}.
class SigmaPartition {
  public:
    static SigmaPartition build(int K, const GridSpec& grid, double inner = 0.5,
                                double outer = 0.6);

    int K() const { return K_; }
    int coverage() const { return K_ - 1; }
    const GridSpec& grid() const { return grid_; }
    double plateau() const { return 1.0 - outer_; }
    const std::vector<LatticePoint>& centers() const { return centers_; }

    std::size_t index_of(const LatticePoint& k) const;  // throws OutOfRangeError

    struct Patch {
        std::vector<int> base;    // per-axis first signed bin
        std::vector<int> extent;  // per-axis bin count
        std::vector<double> values;
    };
    const Patch& patch(std::size_t i) const { return patches_[i]; }

    /// Multiplies a spectrum by sigma_k (zero outside the patch).
    Spectrum apply(const Spectrum& in, std::size_t i) const;

    double sigma_value(std::size_t i, const std::vector<double>& xi) const;

    /// max |sum_k sigma_k - 1| over the covered band bins.
    double partition_defect() const;
    /// max |sigma_k(xi)| over bins with |xi - k|_inf >= 1.
    double max_support_violation() const;
    /// min over k of sigma_k(k).
    double min_center_value() const;

  private:
    SigmaPartition(int K, const GridSpec& grid, double inner, double outer)
        : K_(K), grid_(grid), inner_(inner), outer_(outer) {}

    int K_;
    GridSpec grid_;
    double inner_, outer_;
    std::vector<LatticePoint> centers_;
    std::vector<Patch> patches_;
};

/// Frequency-localization operator: inverse FT of sigma_k times the FT.
/// Throws OutOfRangeError when k is outside the partition range and
/// BandExceededError when f's declared band exceeds the covered band.
GridFunction box_op(const GridFunction& f, const LatticePoint& k, const SigmaPartition& P);

}  // namespace modspace

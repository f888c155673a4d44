#include "modspace/partition.hpp"

#include <algorithm>
#include <cmath>

#include "modspace/windows.hpp"

namespace modspace {

namespace {

// sum_m rho(t - m): >= 1 everywhere because the plateaus tile the line.
double profile_periodization(double t, double inner, double outer) {
    double sum = 0.0;
    const long lo = static_cast<long>(std::floor(t - outer));
    const long hi = static_cast<long>(std::ceil(t + outer));
    for (long m = lo; m <= hi; ++m) sum += bump_step_profile(t - m, inner, outer);
    return sum;
}

}  // namespace

SigmaPartition SigmaPartition::build(int K, const GridSpec& grid, double inner, double outer) {
    grid.validate();
    if (K < 1) throw InvalidShapeError("partition needs K >= 1");
    if (!(inner < outer) || outer > 1.0)
        throw InvalidShapeError("partition profile needs inner < outer <= 1");
    if (K > static_cast<int>(grid.nyquist()))
        throw InvalidShapeError("partition range exceeds the grid Nyquist band");

    SigmaPartition P(K, grid, inner, outer);
    const int n = grid.dim;
    const int M = grid.samples;
    const double L = grid.period;

    // centers |k|_inf <= K, odometer order
    LatticePoint k(n, -K);
    for (;;) {
        P.centers_.push_back(k);
        int axis = n - 1;
        while (axis >= 0) {
            if (++k[axis] <= K) break;
            k[axis] = -K;
            --axis;
        }
        if (axis < 0) break;
    }

    P.patches_.reserve(P.centers_.size());
    for (const auto& center : P.centers_) {
        Patch patch;
        patch.base.resize(n);
        patch.extent.resize(n);
        std::vector<std::vector<double>> axis_vals(n);
        for (int i = 0; i < n; ++i) {
            long lo = static_cast<long>(std::floor((center[i] - outer) * L)) + 1;
            long hi = static_cast<long>(std::ceil((center[i] + outer) * L)) - 1;
            lo = std::max<long>(lo, -M / 2);
            hi = std::min<long>(hi, M / 2 - 1);
            patch.base[i] = static_cast<int>(lo);
            patch.extent[i] = static_cast<int>(std::max<long>(0, hi - lo + 1));
            axis_vals[i].resize(patch.extent[i]);
            for (int b = 0; b < patch.extent[i]; ++b) {
                const double xi = (patch.base[i] + b) / L;
                axis_vals[i][b] = bump_step_profile(xi - center[i], inner, outer) /
                                  profile_periodization(xi, inner, outer);
            }
        }
        std::size_t total = 1;
        for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(patch.extent[i]);
        patch.values.resize(total);
        if (n == 1) {
            patch.values = axis_vals[0];
        } else {
            for (int b0 = 0; b0 < patch.extent[0]; ++b0)
                for (int b1 = 0; b1 < patch.extent[1]; ++b1)
                    patch.values[std::size_t(b0) * patch.extent[1] + b1] =
                        axis_vals[0][b0] * axis_vals[1][b1];
        }
        P.patches_.push_back(std::move(patch));
    }
    return P;
}

std::size_t SigmaPartition::index_of(const LatticePoint& k) const {
    if (static_cast<int>(k.size()) != grid_.dim)
        throw DimensionMismatchError("partition center dimension mismatch");
    std::size_t idx = 0;
    for (int i = 0; i < grid_.dim; ++i) {
        if (k[i] < -K_ || k[i] > K_)
            throw OutOfRangeError("frequency center outside the partition range");
        idx = idx * (2 * K_ + 1) + static_cast<std::size_t>(k[i] + K_);
    }
    return idx;
}

Spectrum SigmaPartition::apply(const Spectrum& in, std::size_t i) const {
    if (!(in.spec == grid_)) throw DimensionMismatchError("partition/spectrum grid mismatch");
    const Patch& p = patches_[i];
    const int M = grid_.samples;
    Spectrum out{grid_, std::vector<Complex>(in.values.size(), Complex(0, 0))};
    auto wrap = [M](int m) { return static_cast<std::size_t>(((m % M) + M) % M); };
    if (grid_.dim == 1) {
        for (int b = 0; b < p.extent[0]; ++b) {
            const std::size_t f = wrap(p.base[0] + b);
            out.values[f] = in.values[f] * p.values[b];
        }
    } else {
        for (int b0 = 0; b0 < p.extent[0]; ++b0)
            for (int b1 = 0; b1 < p.extent[1]; ++b1) {
                const std::size_t f = wrap(p.base[0] + b0) * M + wrap(p.base[1] + b1);
                out.values[f] = in.values[f] * p.values[std::size_t(b0) * p.extent[1] + b1];
            }
    }
    return out;
}

double SigmaPartition::sigma_value(std::size_t i, const std::vector<double>& xi) const {
    const auto& center = centers_[i];
    double v = 1.0;
    for (int a = 0; a < grid_.dim; ++a)
        v *= bump_step_profile(xi[a] - center[a], inner_, outer_) /
             profile_periodization(xi[a], inner_, outer_);
    return v;
}

double SigmaPartition::partition_defect() const {
    const double L = grid_.period;
    const long band = static_cast<long>((K_ - 1) * L);

    // Per-axis restricted sums over |k| <= K; tensorization gives the full sum.
    auto axis_ratio = [&](long bin) {
        const double xi = bin / L;
        double num = 0.0;
        for (long k = -K_; k <= K_; ++k) num += bump_step_profile(xi - k, inner_, outer_);
        return num / profile_periodization(xi, inner_, outer_);
    };

    double defect = 0.0;
    if (grid_.dim == 1) {
        for (long m = -band; m <= band; ++m) defect = std::max(defect, std::abs(axis_ratio(m) - 1.0));
    } else {
        std::vector<double> ratios;
        ratios.reserve(2 * band + 1);
        for (long m = -band; m <= band; ++m) ratios.push_back(axis_ratio(m));
        for (double r0 : ratios)
            for (double r1 : ratios) defect = std::max(defect, std::abs(r0 * r1 - 1.0));
    }
    return defect;
}

double SigmaPartition::max_support_violation() const {
    const double L = grid_.period;
    double worst = 0.0;
    std::vector<double> xi(grid_.dim, 0.0);
    for (std::size_t i = 0; i < centers_.size(); ++i) {
        const auto& c = centers_[i];
        const long lo = static_cast<long>((c[0] - 1.5) * L), hi = static_cast<long>((c[0] + 1.5) * L);
        for (long m = lo; m <= hi; ++m) {
            xi[0] = m / L;
            if (grid_.dim == 2) xi[1] = static_cast<double>(c[1]);
            double inf = 0.0;
            for (int a = 0; a < grid_.dim; ++a) inf = std::max(inf, std::abs(xi[a] - c[a]));
            if (inf >= 1.0) worst = std::max(worst, std::abs(sigma_value(i, xi)));
        }
    }
    return worst;
}

double SigmaPartition::min_center_value() const {
    double worst = 1.0;
    std::vector<double> xi(grid_.dim);
    for (std::size_t i = 0; i < centers_.size(); ++i) {
        for (int a = 0; a < grid_.dim; ++a) xi[a] = static_cast<double>(centers_[i][a]);
        worst = std::min(worst, sigma_value(i, xi));
    }
    return worst;
}

GridFunction box_op(const GridFunction& f, const LatticePoint& k, const SigmaPartition& P) {
    if (f.declared_band() && *f.declared_band() > P.coverage() + 1e-12)
        throw BandExceededError("function band exceeds the partition coverage");
    const std::size_t i = P.index_of(k);
    return fft_inverse(P.apply(fft_forward(f), i));
}

}  // namespace modspace

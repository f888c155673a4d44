#include "modspace/windows.hpp"

#include <array>
#include <cmath>

namespace modspace {

namespace {

double bump(double t) {
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

// Cumulative integral of the bump over [-1, u], normalized to 1 at u = 1.
double bump_cumulative(double u) {
    if (u <= -1.0) return 0.0;
    if (u >= 1.0) return 1.0;
    static const std::array<double, 4097>& table = [] {
        static std::array<double, 4097> t{};
        const int n = 4096;
        double acc = 0.0;
        t[0] = 0.0;
        const double h = 2.0 / n;
        for (int i = 1; i <= n; ++i) {
            const double a = -1.0 + (i - 1) * h, b = -1.0 + i * h;
            acc += h / 6.0 * (bump(a) + 4.0 * bump(0.5 * (a + b)) + bump(b));
            t[i] = acc;
        }
        for (auto& v : t) v /= acc;
        return t;
    }();
    const double pos = (u + 1.0) / 2.0 * 4096.0;
    const int i = std::min(4095, std::max(0, static_cast<int>(pos)));
    const double frac = pos - i;
    return table[i] * (1.0 - frac) + table[i + 1] * frac;
}

}  // namespace

double bump_step_profile(double t, double inner, double outer) {
    const double a = std::abs(t);
    if (a <= inner) return 1.0;
    if (a >= outer) return 0.0;
    const double u = (a - inner) / (outer - inner);  // in (0,1)
    return 1.0 - bump_cumulative(2.0 * u - 1.0);
}

double tensor_profile(const std::vector<double>& xi, double inner, double outer) {
    double v = 1.0;
    for (double c : xi) v *= bump_step_profile(c, inner, outer);
    return v;
}

WindowSpec default_window(WindowKind kind) {
    switch (kind) {
        case WindowKind::PartitionBump: return {kind, 0.5, 0.6};
        case WindowKind::AnalysisWindow: return {kind, 1.0, 0.0};
        case WindowKind::CombAtom: return {kind, 0.0, 0.125};
        case WindowKind::ReconstructionCutoff: return {kind, 0.25, 1.0 / 3.0};
    }
    throw InvalidShapeError("unknown window kind");
}

namespace {

// Frequency-side tensor profile sampled on the spectrum lattice.
Spectrum profile_spectrum(const GridSpec& grid, double inner, double outer) {
    Spectrum s{grid, std::vector<Complex>(grid.size(), Complex(0, 0))};
    const int M = grid.samples;
    std::vector<double> xi(grid.dim);
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        std::size_t rest = i;
        for (int axis = grid.dim - 1; axis >= 0; --axis) {
            const int bin = static_cast<int>(rest % static_cast<std::size_t>(M));
            rest /= static_cast<std::size_t>(M);
            xi[axis] = s.freq(bin);
        }
        const double v = tensor_profile(xi, inner, outer);
        if (v != 0.0) s.values[i] = Complex(v, 0.0);
    }
    return s;
}

GridFunction gaussian_window(const GridSpec& grid, double width) {
    if (!(width > 0.0)) throw InvalidShapeError("analysis window needs positive width");
    GridFunction w(grid);
    const int M = grid.samples;
    auto g1 = [&](int j) {
        const double x = w.coord(j) / width;
        return std::exp(-M_PI * x * x);
    };
    if (grid.dim == 1) {
        for (int j = 0; j < M; ++j) w.values()[j] = g1(j);
    } else {
        for (int j0 = 0; j0 < M; ++j0)
            for (int j1 = 0; j1 < M; ++j1) w.values()[std::size_t(j0) * M + j1] = g1(j0) * g1(j1);
    }
    const double l2 = std::sqrt(w.energy());
    w *= 1.0 / l2;
    return w;
}

}  // namespace

GridFunction make_window(const WindowSpec& spec, const GridSpec& grid) {
    grid.validate();
    switch (spec.kind) {
        case WindowKind::AnalysisWindow:
            return gaussian_window(grid, spec.inner);

        case WindowKind::PartitionBump: {
            if (spec.inner >= spec.outer)
                throw InvalidShapeError("partition bump needs inner < outer radius");
            GridFunction w(grid);
            const int M = grid.samples;
            std::vector<double> x(grid.dim);
            for (std::size_t i = 0; i < w.values().size(); ++i) {
                std::size_t rest = i;
                for (int axis = grid.dim - 1; axis >= 0; --axis) {
                    x[axis] = w.coord(static_cast<int>(rest % static_cast<std::size_t>(M)));
                    rest /= static_cast<std::size_t>(M);
                }
                w.values()[i] = tensor_profile(x, spec.inner, spec.outer);
            }
            return w;
        }

        case WindowKind::ReconstructionCutoff: {
            if (spec.inner >= spec.outer)
                throw InvalidShapeError("reconstruction cutoff needs inner < outer radius");
            GridFunction psi = fft_inverse(profile_spectrum(grid, spec.inner, spec.outer));
            psi.declare_band(spec.outer);
            return psi;
        }

        case WindowKind::CombAtom: {
            const double band = spec.outer;
            if (!(band > 0.0) || band >= grid.nyquist() / 2.0)
                throw InvalidShapeError("comb atom band radius out of range");
            // |g|^2 with supp(g-hat) in the half cube: nonnegative, positive
            // at 0, Fourier support inside the requested cube.
            GridFunction g = fft_inverse(profile_spectrum(grid, band / 4.0, band / 2.0));
            GridFunction atom(grid);
            for (std::size_t i = 0; i < g.values().size(); ++i)
                atom.values()[i] = Complex(std::norm(g.values()[i]), 0.0);
            const double peak = atom.sup_abs();
            if (peak > 0.0) atom *= 1.0 / peak;
            atom.declare_band(band);
            return atom;
        }
    }
    throw InvalidShapeError("unknown window kind");
}

}  // namespace modspace

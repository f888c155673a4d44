#pragma once

#include "modspace/grid.hpp"

namespace modspace {

/// Short-time Fourier transform sampled on a stride sub-lattice in x and the
/// spectrum lattice in xi (optionally capped at |xi|_inf <= freq_radius).
struct StftResult {
    GridSpec spec;
    int x_stride = 1;
    std::vector<std::size_t> positions;  // flat spatial indices
    std::vector<std::size_t> freq_bins;  // flat spectrum indices
    std::vector<Complex> values;         // row per position

    std::size_t rows() const { return positions.size(); }
    std::size_t cols() const { return freq_bins.size(); }
    const Complex& at(std::size_t row, std::size_t col) const {
        return values[row * cols() + col];
    }
};

/// Stride that keeps the x sampling at or below a quarter unit.
int default_x_stride(const GridSpec& spec);

/// V_phi f(x, xi) = FT of f . conj(phi(. - x)) at xi; the window should be
/// L^2-normalized for the isometry checks to come out at 1.
StftResult stft(const GridFunction& f, const GridFunction& window, int x_stride = 0,
                double freq_radius = -1.0);

}  // namespace modspace

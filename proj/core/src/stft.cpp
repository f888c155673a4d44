#include "modspace/stft.hpp"

#include <cmath>

namespace modspace {

int default_x_stride(const GridSpec& spec) {
    const int per_unit = static_cast<int>(std::lround(spec.samples / spec.period));
    return std::max(1, per_unit / 4);
}

StftResult stft(const GridFunction& f, const GridFunction& window, int x_stride,
                double freq_radius) {
    if (!(f.spec() == window.spec())) throw DimensionMismatchError("stft: grid spec mismatch");
    const GridSpec& spec = f.spec();
    const int M = spec.samples;
    if (x_stride <= 0) x_stride = default_x_stride(spec);
    if (M % x_stride != 0) throw InvalidShapeError("stft: stride must divide the sample count");

    StftResult out;
    out.spec = spec;
    out.x_stride = x_stride;

    // Frequency bins within the requested radius, in flat spectrum order.
    {
        Spectrum probe{spec, {}};
        for (std::size_t i = 0; i < spec.size(); ++i) {
            std::size_t rest = i;
            double inf = 0.0;
            for (int axis = 0; axis < spec.dim; ++axis) {
                const int bin = static_cast<int>(rest % static_cast<std::size_t>(M));
                rest /= static_cast<std::size_t>(M);
                inf = std::max(inf, std::abs(probe.freq(bin)));
            }
            if (freq_radius < 0.0 || inf <= freq_radius) out.freq_bins.push_back(i);
        }
    }

    const int positions_per_axis = M / x_stride;
    std::size_t n_positions = positions_per_axis;
    if (spec.dim == 2) n_positions *= positions_per_axis;
    out.positions.reserve(n_positions);
    out.values.reserve(n_positions * out.freq_bins.size());

    GridFunction product(spec);
    std::vector<long> shift(spec.dim, 0);
    for (std::size_t p = 0; p < n_positions; ++p) {
        std::vector<int> pos_idx(spec.dim);
        if (spec.dim == 1) {
            pos_idx[0] = static_cast<int>(p) * x_stride;
        } else {
            pos_idx[0] = static_cast<int>(p / positions_per_axis) * x_stride;
            pos_idx[1] = static_cast<int>(p % positions_per_axis) * x_stride;
        }
        for (int a = 0; a < spec.dim; ++a) shift[a] = pos_idx[a] - M / 2;  // center -> x position
        const GridFunction moved = translate_samples(window, shift);
        for (std::size_t i = 0; i < product.values().size(); ++i)
            product.values()[i] = f.values()[i] * std::conj(moved.values()[i]);
        const Spectrum spec_row = fft_forward(product);

        out.positions.push_back(product.flat(pos_idx));
        for (std::size_t b : out.freq_bins) out.values.push_back(spec_row.values[b]);
    }
    return out;
}

}  // namespace modspace

#include "modspace/combs.hpp"

#include <cmath>

namespace modspace {

namespace {

// Samples per unit length; integer translates must land on grid samples.
long samples_per_unit(const GridSpec& spec) {
    const double ratio = spec.samples / spec.period;
    const long r = std::lround(ratio);
    if (std::abs(ratio - r) > 1e-9 || r < 1)
        throw GridMisalignedError("integer lattice points must lie on the sample grid");
    return r;
}

void check_comb_support(const Sequence& a, const GridSpec& spec) {
    if (a.dim().n != spec.dim) throw DimensionMismatchError("comb: dimension mismatch");
    if (static_cast<double>(a.support_radius()) > spec.period / 4.0)
        throw PeriodOverflowError("coefficient support too wide for the period");
}

}  // namespace

namespace {

GridFunction translate_sum(const Sequence& a, const GridFunction& atom) {
    const GridSpec& spec = atom.spec();
    const long per_unit = samples_per_unit(spec);
    GridFunction out(spec);
    std::vector<long> shift(spec.dim);
    for (const auto& [k, v] : a.entries()) {
        for (int i = 0; i < spec.dim; ++i) shift[i] = k[i] * per_unit;
        const GridFunction moved = translate_samples(atom, shift);
        for (std::size_t i = 0; i < out.values().size(); ++i)
            out.values()[i] += v * moved.values()[i];
    }
    if (atom.declared_band()) out.declare_band(*atom.declared_band());
    return out;
}

}  // namespace

GridFunction comb(const Sequence& a, const GridFunction& atom) {
    check_comb_support(a, atom.spec());
    return translate_sum(a, atom);
}

GridFunction gabor_comb(const Sequence& a, const GridFunction& atom) {
    const GridSpec& spec = atom.spec();
    if (a.dim().n != spec.dim) throw DimensionMismatchError("gabor_comb: dimension mismatch");

    const double atom_band = atom.declared_band().value_or(0.0);
    const double band = static_cast<double>(a.support_radius()) + atom_band;
    if (band >= spec.nyquist())
        throw BandExceededError("modulated train exceeds the grid Nyquist band");

    const int M = spec.samples;
    GridFunction out(spec);
    // phase sum per grid point: sum_k a_k e^{2 pi i k.x}
    if (spec.dim == 1) {
        for (int j = 0; j < M; ++j) {
            const double x = out.coord(j);
            Complex acc(0, 0);
            for (const auto& [k, v] : a.entries()) {
                const double phase = 2.0 * M_PI * k[0] * x;
                acc += v * Complex(std::cos(phase), std::sin(phase));
            }
            out.values()[j] = acc * atom.values()[j];
        }
    } else {
        for (int j0 = 0; j0 < M; ++j0)
            for (int j1 = 0; j1 < M; ++j1) {
                const double x0 = out.coord(j0), x1 = out.coord(j1);
                Complex acc(0, 0);
                for (const auto& [k, v] : a.entries()) {
                    const double phase = 2.0 * M_PI * (k[0] * x0 + k[1] * x1);
                    acc += v * Complex(std::cos(phase), std::sin(phase));
                }
                out.values()[std::size_t(j0) * M + j1] =
                    acc * atom.values()[std::size_t(j0) * M + j1];
            }
    }
    out.declare_band(band);
    return out;
}

Sequence sample_values(const GridFunction& f) {
    const GridSpec& spec = f.spec();
    const long per_unit = samples_per_unit(spec);
    const long half = std::lround(spec.period / 2.0);
    if (std::abs(spec.period / 2.0 - half) > 1e-9)
        throw GridMisalignedError("period must be an even integer for lattice sampling");

    const double cutoff = 1e-12 * f.sup_abs();
    Sequence out(Dimension(spec.dim));
    const int M = spec.samples;

    auto index_of_lattice = [&](long k) {
        return static_cast<int>((k + half) * per_unit);  // x = -L/2 + idx * step
    };

    if (spec.dim == 1) {
        LatticePoint k(1);
        for (long k0 = -half; k0 < half; ++k0) {
            const double v = std::abs(f.values()[index_of_lattice(k0)]);
            if (v > cutoff) {
                k[0] = k0;
                out.add(k, v);
            }
        }
    } else {
        LatticePoint k(2);
        for (long k0 = -half; k0 < half; ++k0)
            for (long k1 = -half; k1 < half; ++k1) {
                const std::size_t flat =
                    std::size_t(index_of_lattice(k0)) * M + index_of_lattice(k1);
                const double v = std::abs(f.values()[flat]);
                if (v > cutoff) {
                    k[0] = k0;
                    k[1] = k1;
                    out.add(k, v);
                }
            }
    }
    return out;
}

GridFunction shannon_reconstruct(const Sequence& samples, const GridFunction& cutoff) {
    // samples legitimately cover the whole period window
    if (samples.dim().n != cutoff.dim())
        throw DimensionMismatchError("shannon_reconstruct: dimension mismatch");
    if (static_cast<double>(samples.support_radius()) >= cutoff.spec().period / 2.0)
        throw PeriodOverflowError("sample support leaves the period window");
    return translate_sum(samples, cutoff);
}

GridFunction shannon_roundtrip(const GridFunction& f, const GridFunction& cutoff) {
    const GridSpec& spec = f.spec();
    if (!(spec == cutoff.spec())) throw DimensionMismatchError("roundtrip: grid spec mismatch");
    const long per_unit = samples_per_unit(spec);
    const long half = std::lround(spec.period / 2.0);

    GridFunction out(spec);
    std::vector<long> shift(spec.dim);
    auto add_term = [&](const std::vector<long>& k, Complex v) {
        if (std::abs(v) == 0.0) return;
        for (int i = 0; i < spec.dim; ++i) shift[i] = k[i] * per_unit;
        const GridFunction moved = translate_samples(cutoff, shift);
        for (std::size_t i = 0; i < out.values().size(); ++i)
            out.values()[i] += v * moved.values()[i];
    };

    const int M = spec.samples;
    if (spec.dim == 1) {
        for (long k0 = -half; k0 < half; ++k0)
            add_term({k0}, f.values()[static_cast<std::size_t>((k0 + half) * per_unit)]);
    } else {
        for (long k0 = -half; k0 < half; ++k0)
            for (long k1 = -half; k1 < half; ++k1)
                add_term({k0, k1}, f.values()[std::size_t((k0 + half) * per_unit) * M +
                                              (k1 + half) * per_unit]);
    }
    return out;
}

}  // namespace modspace

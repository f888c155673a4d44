#include "modspace/norms.hpp"

#include <cmath>

#include "modspace/stft.hpp"

namespace modspace {

namespace {

double point_weight(const std::vector<double>& x, double order) {
    if (order == 0.0) return 1.0;
    double sq = 1.0;
    for (double c : x) sq += c * c;
    return std::pow(std::sqrt(sq), order);
}

std::vector<double> freqs_of_flat(const Spectrum& s, std::size_t flat) {
    const int M = s.spec.samples;
    std::vector<double> xi(s.spec.dim);
    for (int axis = s.spec.dim - 1; axis >= 0; --axis) {
        xi[axis] = s.freq(static_cast<int>(flat % static_cast<std::size_t>(M)));
        flat /= static_cast<std::size_t>(M);
    }
    return xi;
}

// Streams V(x_p, .) rows without materializing the full transform.
void stream_stft(const GridFunction& f, const GridFunction& window, int x_stride,
                 const std::function<void(const std::vector<double>& x,
                                          const std::vector<Complex>& row)>& sink) {
    if (!(f.spec() == window.spec()))
        throw DimensionMismatchError("stft norms: grid spec mismatch");
    const GridSpec& spec = f.spec();
    const int M = spec.samples;
    if (x_stride <= 0) x_stride = default_x_stride(spec);
    if (M % x_stride != 0) throw InvalidShapeError("stft stride must divide the sample count");

    const int per_axis = M / x_stride;
    std::size_t n_positions = per_axis;
    if (spec.dim == 2) n_positions *= per_axis;

    GridFunction product(spec);
    std::vector<long> shift(spec.dim, 0);
    std::vector<double> x(spec.dim);
    for (std::size_t p = 0; p < n_positions; ++p) {
        std::vector<int> idx(spec.dim);
        if (spec.dim == 1) {
            idx[0] = static_cast<int>(p) * x_stride;
        } else {
            idx[0] = static_cast<int>(p / per_axis) * x_stride;
            idx[1] = static_cast<int>(p % per_axis) * x_stride;
        }
        for (int a = 0; a < spec.dim; ++a) {
            shift[a] = idx[a] - M / 2;
            x[a] = product.coord(idx[a]);
        }
        const GridFunction moved = translate_samples(window, shift);
        for (std::size_t i = 0; i < product.values().size(); ++i)
            product.values()[i] = f.values()[i] * std::conj(moved.values()[i]);
        const Spectrum row = fft_forward(product);
        sink(x, row.values);
    }
}

}  // namespace

double weighted_Lp_norm(const GridFunction& f, const Exponent& p, const Rational& t) {
    const double order = to_double(t);
    const int M = f.spec().samples;
    double cell = 1.0;
    for (int i = 0; i < f.dim(); ++i) cell *= f.spec().step();

    std::vector<double> x(f.dim());
    auto weight_at = [&](std::size_t flat) {
        for (int axis = f.dim() - 1; axis >= 0; --axis) {
            x[axis] = f.coord(static_cast<int>(flat % static_cast<std::size_t>(M)));
            flat /= static_cast<std::size_t>(M);
        }
        return point_weight(x, order);
    };

    if (p.is_infinite()) {
        double m = 0.0;
        for (std::size_t i = 0; i < f.values().size(); ++i)
            m = std::max(m, std::abs(f.values()[i]) * weight_at(i));
        return m;
    }
    const double pd = p.value();
    double sum = 0.0;
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        const double v = std::abs(f.values()[i]) * weight_at(i);
        if (v != 0.0) sum += std::pow(v, pd);
    }
    return std::pow(sum * cell, 1.0 / pd);
}

std::vector<std::vector<double>> box_inner_norms(
    const GridFunction& f, const SigmaPartition& P,
    const std::vector<std::pair<Exponent, Rational>>& inner_pt) {
    if (f.declared_band()) {
        if (*f.declared_band() > P.coverage() + 1e-12)
            throw BandExceededError("function band exceeds the partition coverage");
    } else if (band_energy_defect(f, P.coverage()) > 1e-8) {
        throw BandExceededError("spectral mass outside the partition coverage");
    }

    const Spectrum spectrum = fft_forward(f);
    std::vector<std::vector<double>> out(inner_pt.size(),
                                         std::vector<double>(P.centers().size(), 0.0));
    for (std::size_t c = 0; c < P.centers().size(); ++c) {
        const GridFunction block = fft_inverse(P.apply(spectrum, c));
        for (std::size_t i = 0; i < inner_pt.size(); ++i)
            out[i][c] = weighted_Lp_norm(block, inner_pt[i].first, inner_pt[i].second);
    }
    return out;
}

double outer_weighted_lq(const std::vector<double>& by_center,
                         const std::vector<LatticePoint>& centers, const Exponent& q,
                         const Rational& s) {
    const PowerWeight w{s};
    if (q.is_infinite()) {
        double m = 0.0;
        for (std::size_t c = 0; c < by_center.size(); ++c)
            m = std::max(m, by_center[c] * w(centers[c]));
        return m;
    }
    const double qd = q.value();
    double sum = 0.0;
    for (std::size_t c = 0; c < by_center.size(); ++c) {
        const double v = by_center[c] * w(centers[c]);
        if (v != 0.0) sum += std::pow(v, qd);
    }
    return std::pow(sum, 1.0 / qd);
}

double modulation_norm_discrete(const GridFunction& f, const Exponent& p, const Exponent& q,
                                const Rational& t, const Rational& s, const SigmaPartition& P) {
    const auto inner = box_inner_norms(f, P, {{p, t}});
    return outer_weighted_lq(inner[0], P.centers(), q, s);
}

std::vector<std::vector<double>> modulation_norms_batch(
    const GridFunction& f, const GridFunction& window,
    const std::vector<std::pair<Exponent, Rational>>& inner_pt,
    const std::vector<std::pair<Exponent, Rational>>& outer_qs, int x_stride) {
    const GridSpec& spec = f.spec();
    const std::size_t bins = spec.size();
    if (x_stride <= 0) x_stride = default_x_stride(spec);

    double cellx = 1.0, cellxi = 1.0;
    for (int i = 0; i < spec.dim; ++i) {
        cellx *= spec.step() * x_stride;
        cellxi *= spec.freq_step();
    }

    // acc[pt][bin]: integral (or sup) over x of |V w_t(x)|^p
    std::vector<std::vector<double>> acc(inner_pt.size(), std::vector<double>(bins, 0.0));
    stream_stft(f, window, x_stride, [&](const std::vector<double>& x,
                                         const std::vector<Complex>& row) {
        for (std::size_t i = 0; i < inner_pt.size(); ++i) {
            const auto& [p, t] = inner_pt[i];
            const double wt = point_weight(x, to_double(t));
            auto& slot = acc[i];
            if (p.is_infinite()) {
                for (std::size_t b = 0; b < bins; ++b)
                    slot[b] = std::max(slot[b], std::abs(row[b]) * wt);
            } else {
                const double pd = p.value();
                for (std::size_t b = 0; b < bins; ++b) {
                    const double v = std::abs(row[b]) * wt;
                    if (v != 0.0) slot[b] += std::pow(v, pd) * cellx;
                }
            }
        }
    });

    const Spectrum probe{spec, {}};
    std::vector<double> freq_weight_base(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        const auto xi = freqs_of_flat(probe, b);
        double sq = 1.0;
        for (double c : xi) sq += c * c;
        freq_weight_base[b] = std::sqrt(sq);
    }

    std::vector<std::vector<double>> table(inner_pt.size(),
                                           std::vector<double>(outer_qs.size(), 0.0));
    for (std::size_t i = 0; i < inner_pt.size(); ++i) {
        const auto& p = inner_pt[i].first;
        std::vector<double> inner_norm(bins);
        for (std::size_t b = 0; b < bins; ++b)
            inner_norm[b] = p.is_infinite() ? acc[i][b] : std::pow(acc[i][b], 1.0 / p.value());
        for (std::size_t o = 0; o < outer_qs.size(); ++o) {
            const auto& [q, s] = outer_qs[o];
            const double sd = to_double(s);
            if (q.is_infinite()) {
                double m = 0.0;
                for (std::size_t b = 0; b < bins; ++b)
                    m = std::max(m, inner_norm[b] * std::pow(freq_weight_base[b], sd));
                table[i][o] = m;
            } else {
                const double qd = q.value();
                double sum = 0.0;
                for (std::size_t b = 0; b < bins; ++b) {
                    const double v = inner_norm[b] * std::pow(freq_weight_base[b], sd);
                    if (v != 0.0) sum += std::pow(v, qd);
                }
                table[i][o] = std::pow(sum * cellxi, 1.0 / qd);
            }
        }
    }
    return table;
}

double modulation_norm_continuous(const GridFunction& f, const GridFunction& window,
                                  const Exponent& p, const Exponent& q, const Rational& t,
                                  const Rational& s, int x_stride) {
    return modulation_norms_batch(f, window, {{p, t}}, {{q, s}}, x_stride)[0][0];
}

double wiener_norm(const GridFunction& f, const GridFunction& window, const Exponent& p,
                   const Exponent& q, const Rational& t, const Rational& s, int x_stride) {
    const GridSpec& spec = f.spec();
    const std::size_t bins = spec.size();
    if (x_stride <= 0) x_stride = default_x_stride(spec);

    double cellx = 1.0, cellxi = 1.0;
    for (int i = 0; i < spec.dim; ++i) {
        cellx *= spec.step() * x_stride;
        cellxi *= spec.freq_step();
    }

    const Spectrum probe{spec, {}};
    std::vector<double> freq_weight(bins);
    const double sd = to_double(s);
    for (std::size_t b = 0; b < bins; ++b) {
        const auto xi = freqs_of_flat(probe, b);
        double sq = 1.0;
        for (double c : xi) sq += c * c;
        freq_weight[b] = std::pow(std::sqrt(sq), sd);
    }

    double outer_sum = 0.0, outer_max = 0.0;
    const double td = to_double(t);
    stream_stft(f, window, x_stride, [&](const std::vector<double>& x,
                                         const std::vector<Complex>& row) {
        double inner;
        if (q.is_infinite()) {
            inner = 0.0;
            for (std::size_t b = 0; b < bins; ++b)
                inner = std::max(inner, std::abs(row[b]) * freq_weight[b]);
        } else {
            const double qd = q.value();
            double sum = 0.0;
            for (std::size_t b = 0; b < bins; ++b) {
                const double v = std::abs(row[b]) * freq_weight[b];
                if (v != 0.0) sum += std::pow(v, qd);
            }
            inner = std::pow(sum * cellxi, 1.0 / qd);
        }
        const double weighted = inner * point_weight(x, td);
        if (p.is_infinite())
            outer_max = std::max(outer_max, weighted);
        else if (weighted != 0.0)
            outer_sum += std::pow(weighted, p.value()) * cellx;
    });

    return p.is_infinite() ? outer_max : std::pow(outer_sum, 1.0 / p.value());
}

}  // namespace modspace

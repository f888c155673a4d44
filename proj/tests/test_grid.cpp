#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "modspace/grid.hpp"
#include "modspace/partition.hpp"
#include "modspace/windows.hpp"

using namespace modspace;

namespace {

GridFunction sampled_gaussian(const GridSpec& spec) {
    GridFunction f(spec);
    for (int j = 0; j < spec.samples; ++j) {
        const double x = f.coord(j);
        f.values()[j] = std::exp(-M_PI * x * x);
    }
    return f;
}

}  // namespace

TEST_CASE("fft round trip and the Gaussian pair") {
    const GridSpec spec = default_grid(1);
    const GridFunction f = sampled_gaussian(spec);

    const auto back = fft_inverse(fft_forward(f));
    double err = 0.0;
    for (std::size_t i = 0; i < f.values().size(); ++i)
        err = std::max(err, std::abs(back.values()[i] - f.values()[i]));
    CHECK(err <= 1e-10 * f.sup_abs());

    // exp(-pi x^2) transforms to exp(-pi xi^2)
    const Spectrum s = fft_forward(f);
    for (int bin : {0, 7, 64, 200}) {
        const double xi = s.freq(bin);
        CHECK(std::abs(s.values[bin] - std::exp(-M_PI * xi * xi)) <= 1e-10);
    }

    // Parseval
    double spectral = 0.0;
    for (const auto& v : s.values) spectral += std::norm(v);
    spectral *= spec.freq_step();
    CHECK(spectral == doctest::Approx(f.energy()).epsilon(1e-10));
}

TEST_CASE("two dimensional fft round trip") {
    const GridSpec spec = default_grid(2);
    GridFunction f(spec);
    for (int j0 = 0; j0 < spec.samples; ++j0)
        for (int j1 = 0; j1 < spec.samples; ++j1) {
            const double x = f.coord(j0), y = f.coord(j1);
            f.values()[std::size_t(j0) * spec.samples + j1] = std::exp(-M_PI * (x * x + y * y));
        }
    const auto back = fft_inverse(fft_forward(f));
    double err = 0.0;
    for (std::size_t i = 0; i < f.values().size(); ++i)
        err = std::max(err, std::abs(back.values()[i] - f.values()[i]));
    CHECK(err <= 1e-10);
}

TEST_CASE("grid translation and modulation are exact") {
    const GridSpec spec = default_grid(1);
    const GridFunction f = sampled_gaussian(spec);
    const long shift = 3 * spec.samples / static_cast<long>(spec.period);  // x0 = 3
    const auto moved = translate_samples(f, {shift});
    CHECK(std::abs(moved.values()[f.spec().samples / 2 + shift] - f.values()[f.spec().samples / 2])
          <= 1e-15);

    const auto tone = modulate(f, {4});
    const Spectrum s = fft_forward(tone);
    // spectrum is the Gaussian shifted to xi = 4
    const int bin4 = 4 * static_cast<int>(spec.period);
    CHECK(std::abs(s.values[bin4] - 1.0) <= 1e-9);
}

TEST_CASE("grid csv round trip") {
    const GridSpec spec{1, 8.0, 16};
    GridFunction f(spec);
    for (int j = 0; j < 16; ++j) f.values()[j] = Complex(j * 0.25, -j);
    std::stringstream ss;
    write_grid_csv(ss, f);
    const auto back = read_grid_csv(ss);
    CHECK(back.spec() == spec);
    for (int j = 0; j < 16; ++j) CHECK(back.values()[j] == f.values()[j]);
}

TEST_CASE("window shapes") {
    const GridSpec spec = default_grid(1);

    // partition bump: plateau 1, support edge 0
    const auto rho = make_window(default_window(WindowKind::PartitionBump), spec);
    const int mid = spec.samples / 2;
    const int per_unit = static_cast<int>(spec.samples / spec.period);
    CHECK(rho.values()[mid].real() == doctest::Approx(1.0));                      // xi = 0
    CHECK(rho.values()[mid + per_unit / 2].real() == doctest::Approx(1.0));       // xi = 1/2
    CHECK(rho.values()[mid + per_unit].real() == doctest::Approx(0.0));           // xi = 1
    CHECK(bump_step_profile(0.55, 0.5, 0.6) > 0.0);
    CHECK(bump_step_profile(0.55, 0.5, 0.6) < 1.0);
    CHECK_THROWS_AS(make_window(WindowSpec{WindowKind::PartitionBump, 0.7, 0.6}, spec),
                    InvalidShapeError);

    // comb atom: nonnegative, positive at 0, Fourier support in the quarter cube
    const auto atom = make_window(default_window(WindowKind::CombAtom), spec);
    CHECK(atom.values()[mid].real() > 0.0);
    for (const auto& v : atom.values()) {
        CHECK(v.imag() == 0.0);
        CHECK(v.real() >= 0.0);
    }
    const Spectrum sa = fft_forward(atom);
    double peak = 0.0, leak = 0.0;
    for (std::size_t b = 0; b < sa.values.size(); ++b) {
        const double mag = std::abs(sa.values[b]);
        peak = std::max(peak, mag);
        if (std::abs(sa.freq(static_cast<int>(b))) > 0.125) leak = std::max(leak, mag);
    }
    CHECK(leak <= 1e-8 * peak);

    // reconstruction cutoff: FT is 1 on the half cube of the band, 0 outside
    const auto psi = make_window(default_window(WindowKind::ReconstructionCutoff), spec);
    const Spectrum sp = fft_forward(psi);
    for (std::size_t b = 0; b < sp.values.size(); ++b) {
        const double xi = std::abs(sp.freq(static_cast<int>(b)));
        if (xi <= 0.25) CHECK(std::abs(sp.values[b] - 1.0) <= 1e-9);
        if (xi >= 1.0 / 3.0) CHECK(std::abs(sp.values[b]) <= 1e-9);
    }

    // analysis window: unit L2 norm
    const auto phi = make_window(default_window(WindowKind::AnalysisWindow), spec);
    CHECK(std::sqrt(phi.energy()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partition of unity") {
    const GridSpec g1 = default_grid(1);
    const auto P = SigmaPartition::build(16, g1);
    CHECK(P.partition_defect() <= 1e-9);
    CHECK(P.max_support_violation() == 0.0);
    CHECK(P.min_center_value() >= 1.0 - 1e-12);  // >= 3^{-n} with plenty of room

    // sum over centers at xi = 0
    double sum = 0.0;
    for (std::size_t i = 0; i < P.centers().size(); ++i) sum += P.sigma_value(i, {0.0});
    CHECK(std::abs(sum - 1.0) <= 1e-9);

    const GridSpec g2 = default_grid(2);
    const auto P2 = SigmaPartition::build(4, g2);
    CHECK(P2.partition_defect() <= 1e-9);
    CHECK(P2.min_center_value() >= 1.0 - 1e-12);
}

TEST_CASE("frequency block operators") {
    const GridSpec spec = default_grid(1);
    const auto P = SigmaPartition::build(16, spec);

    // band inside the plateau: block 0 reproduces f, far blocks vanish
    GridFunction f = fft_inverse([&] {
        Spectrum s{spec, std::vector<Complex>(spec.size(), Complex(0, 0))};
        for (std::size_t b = 0; b < s.values.size(); ++b) {
            const double xi = s.freq(static_cast<int>(b));
            s.values[b] = tensor_profile({xi}, 0.2, 0.4);
        }
        return s;
    }());
    f.declare_band(0.4);

    const auto b0 = box_op(f, {0}, P);
    double err = 0.0;
    for (std::size_t i = 0; i < f.values().size(); ++i)
        err = std::max(err, std::abs(b0.values()[i] - f.values()[i]));
    CHECK(err <= 1e-8 * f.sup_abs());

    const auto b2 = box_op(f, {2}, P);
    CHECK(b2.sup_abs() <= 1e-10 * f.sup_abs());

    // block sum reproduces any covered band-limited function
    GridFunction g = fft_inverse([&] {
        Spectrum s{spec, std::vector<Complex>(spec.size(), Complex(0, 0))};
        for (std::size_t b = 0; b < s.values.size(); ++b) {
            const double xi = s.freq(static_cast<int>(b));
            if (std::abs(xi) < 10.0)
                s.values[b] = std::cos(xi) + Complex(0, 1) * 0.2 * std::sin(3 * xi);
        }
        return s;
    }());
    g.declare_band(10.0);
    GridFunction acc(spec);
    for (const auto& k : P.centers()) acc += box_op(g, k, P);
    err = 0.0;
    for (std::size_t i = 0; i < g.values().size(); ++i)
        err = std::max(err, std::abs(acc.values()[i] - g.values()[i]));
    CHECK(err <= 1e-8 * g.sup_abs());

    // single-bin multiplier on a pure tone
    GridFunction one(spec);
    for (auto& v : one.values()) v = 1.0;
    const auto tone = modulate(one, {5});
    GridFunction toneb = tone;
    toneb.declare_band(5.0);
    const auto b5 = box_op(toneb, {5}, P);
    err = 0.0;
    for (std::size_t i = 0; i < tone.values().size(); ++i)
        err = std::max(err, std::abs(b5.values()[i] - tone.values()[i]));
    CHECK(err <= 1e-9);  // sigma_5(5) = 1

    CHECK_THROWS_AS(box_op(f, {40}, P), OutOfRangeError);
    GridFunction wide = fft_inverse([&] {
        Spectrum s{spec, std::vector<Complex>(spec.size(), Complex(0, 0))};
        for (std::size_t b = 0; b < s.values.size(); ++b)
            if (std::abs(s.freq(static_cast<int>(b))) < 20.0) s.values[b] = 1.0;
        return s;
    }());
    wide.declare_band(20.0);
    CHECK_THROWS_AS(box_op(wide, {0}, P), BandExceededError);
}

TEST_CASE("band declarations and energy defect") {
    const GridSpec spec = default_grid(1);
    GridFunction f = sampled_gaussian(spec);
    CHECK(band_energy_defect(f, 4.0) <= 1e-8);
    CHECK(band_energy_defect(f, 0.1) > 1e-3);
    CHECK_THROWS_AS(f.declare_band(64.0), BandExceededError);
}

#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include "modspace/errors.hpp"
#include "modspace/indices.hpp"

namespace modspace {

using Complex = std::complex<double>;

/// Uniform periodic grid on [-L/2, L/2)^n; sample j is x_j = -L/2 + j L/M per
/// axis, M a power of two. Frequencies live on the lattice m/L with
/// m in [-M/2, M/2) per axis.
struct GridSpec {
    int dim = 1;
    double period = 64.0;
    int samples = 4096;

    std::size_t size() const;
    double step() const { return period / samples; }
    double freq_step() const { return 1.0 / period; }
    double nyquist() const { return samples / (2.0 * period); }
    void validate() const;
    bool operator==(const GridSpec&) const = default;
};

/// L = 64, M = 4096 for n = 1; L = 32, M = 256 per axis for n = 2.
GridSpec default_grid(int dim);

class GridFunction {
  public:
    explicit GridFunction(const GridSpec& spec);
    GridFunction(const GridSpec& spec, std::vector<Complex> values);

    const GridSpec& spec() const { return spec_; }
    int dim() const { return spec_.dim; }
    const std::vector<Complex>& values() const { return values_; }
    std::vector<Complex>& values() { return values_; }

    /// Spatial coordinate of a per-axis sample index.
    double coord(int index) const { return -spec_.period / 2.0 + index * spec_.step(); }
    std::size_t flat(const std::vector<int>& idx) const;

    std::optional<double> declared_band() const { return band_; }
    void declare_band(double radius);

    double sup_abs() const;
    /// Riemann ||f||_2^2.
    double energy() const;

    GridFunction& operator*=(Complex c);
    GridFunction& operator+=(const GridFunction& other);

  private:
    GridSpec spec_;
    std::vector<Complex> values_;
    std::optional<double> band_;
};

/// Samples of the continuous-normalized Fourier transform on the frequency
/// lattice, stored in FFT index order (index i is bin i, or i - M, per axis).
struct Spectrum {
    GridSpec spec;
    std::vector<Complex> values;

    int signed_bin(int index) const { return index < spec.samples / 2 ? index : index - spec.samples; }
    double freq(int index) const { return signed_bin(index) / spec.period; }
};

Spectrum fft_forward(const GridFunction& f);
GridFunction fft_inverse(const Spectrum& s);

/// Fraction of spectral energy outside {|xi|_inf <= radius}.
double band_energy_defect(const GridFunction& f, double radius);

/// Periodic convolution (f*g)(x) = integral over the torus, Riemann scale.
GridFunction convolve_periodic(const GridFunction& f, const GridFunction& g);

/// Translation by whole samples per axis (exact on the grid).
GridFunction translate_samples(const GridFunction& f, const std::vector<long>& shift);

/// e^{2 pi i k.x} f(x) with integer tone k.
GridFunction modulate(const GridFunction& f, const std::vector<long>& k);

/// CSV: "# dim,L,M" header, then "index,re,im" rows (row-major flat index).
void write_grid_csv(std::ostream& os, const GridFunction& f);
GridFunction read_grid_csv(std::istream& is);

}  // namespace modspace

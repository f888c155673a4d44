#include "modspace/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

namespace modspace {

std::size_t GridSpec::size() const {
    std::size_t s = 1;
    for (int i = 0; i < dim; ++i) s *= static_cast<std::size_t>(samples);
    return s;
}

void GridSpec::validate() const {
    if (dim < 1 || dim > 2) throw InvalidShapeError("grid dimension must be 1 or 2");
    if (period <= 0.0) throw InvalidShapeError("grid period must be positive");
    if (samples < 8 || (samples & (samples - 1)) != 0)
        throw InvalidShapeError("samples per axis must be a power of two >= 8");
}

GridSpec default_grid(int dim) {
    if (dim == 1) return GridSpec{1, 64.0, 4096};
    if (dim == 2) return GridSpec{2, 32.0, 256};
    throw InvalidShapeError("continuous experiments cover n in {1,2}");
}

GridFunction::GridFunction(const GridSpec& spec) : spec_(spec) {
    spec_.validate();
    values_.assign(spec_.size(), Complex(0.0, 0.0));
}

GridFunction::GridFunction(const GridSpec& spec, std::vector<Complex> values)
    : spec_(spec), values_(std::move(values)) {
    spec_.validate();
    if (values_.size() != spec_.size()) throw InvalidShapeError("grid value count mismatch");
}

std::size_t GridFunction::flat(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != spec_.dim)
        throw DimensionMismatchError("grid index dimension mismatch");
    std::size_t f = 0;
    for (int i = 0; i < spec_.dim; ++i) {
        if (idx[i] < 0 || idx[i] >= spec_.samples) throw InvalidShapeError("grid index range");
        f = f * spec_.samples + static_cast<std::size_t>(idx[i]);
    }
    return f;
}

void GridFunction::declare_band(double radius) {
    if (!(radius >= 0.0) || radius >= spec_.nyquist())
        throw BandExceededError("declared band must satisfy R < M/(2L)");
    band_ = radius;
}

double GridFunction::sup_abs() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

double GridFunction::energy() const {
    double sum = 0.0;
    for (const auto& v : values_) sum += std::norm(v);
    double cell = 1.0;
    for (int i = 0; i < spec_.dim; ++i) cell *= spec_.step();
    return sum * cell;
}

GridFunction& GridFunction::operator*=(Complex c) {
    for (auto& v : values_) v *= c;
    return *this;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
    if (!(spec_ == other.spec_)) throw DimensionMismatchError("grid spec mismatch in +=");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

namespace {

struct PlanEntry {
    fftw_plan plan = nullptr;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    std::mutex mx;
};

// FFTW planning is not thread-safe; execution on an entry is serialized by
// its own mutex.
PlanEntry& plan_for(int dim, int samples, int sign) {
    static std::mutex registry_mx;
    static std::map<std::tuple<int, int, int>, PlanEntry> registry;
    std::scoped_lock lock(registry_mx);
    auto& entry = registry[{dim, samples, sign}];
    if (!entry.plan) {
        std::size_t total = 1;
        for (int i = 0; i < dim; ++i) total *= static_cast<std::size_t>(samples);
        entry.in = fftw_alloc_complex(total);
        entry.out = fftw_alloc_complex(total);
        entry.plan = dim == 1 ? fftw_plan_dft_1d(samples, entry.in, entry.out, sign, FFTW_ESTIMATE)
                              : fftw_plan_dft_2d(samples, samples, entry.in, entry.out, sign,
                                                 FFTW_ESTIMATE);
    }
    return entry;
}

void run_dft(int dim, int samples, int sign, const std::vector<Complex>& src,
             std::vector<Complex>& dst) {
    PlanEntry& entry = plan_for(dim, samples, sign);
    std::scoped_lock lock(entry.mx);
    for (std::size_t i = 0; i < src.size(); ++i) {
        entry.in[i][0] = src[i].real();
        entry.in[i][1] = src[i].imag();
    }
    fftw_execute(entry.plan);
    dst.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = Complex(entry.out[i][0], entry.out[i][1]);
}

// Parity of the signed bin along every axis; the (-1)^m factors fold the
// -L/2 sample offset into the transform.
int flat_parity(std::size_t flat, int dim, int samples) {
    int parity = 0;
    for (int i = 0; i < dim; ++i) {
        parity ^= static_cast<int>(flat % static_cast<std::size_t>(samples)) & 1;
        flat /= static_cast<std::size_t>(samples);
    }
    return parity;
}

}  // namespace

Spectrum fft_forward(const GridFunction& f) {
    const auto& spec = f.spec();
    Spectrum s{spec, {}};
    run_dft(spec.dim, spec.samples, FFTW_FORWARD, f.values(), s.values);
    double cell = 1.0;
    for (int i = 0; i < spec.dim; ++i) cell *= spec.step();
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const double sign = flat_parity(i, spec.dim, spec.samples) ? -1.0 : 1.0;
        s.values[i] *= sign * cell;
    }
    return s;
}

GridFunction fft_inverse(const Spectrum& s) {
    const auto& spec = s.spec;
    std::vector<Complex> staged(s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const double sign = flat_parity(i, spec.dim, spec.samples) ? -1.0 : 1.0;
        staged[i] = s.values[i] * sign;
    }
    GridFunction out(spec);
    run_dft(spec.dim, spec.samples, FFTW_BACKWARD, staged, out.values());
    double scale = 1.0;
    for (int i = 0; i < spec.dim; ++i) scale /= spec.period;
    out *= scale;
    return out;
}

double band_energy_defect(const GridFunction& f, double radius) {
    const Spectrum s = fft_forward(f);
    const int M = f.spec().samples;
    double total = 0.0, outside = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const double e = std::norm(s.values[i]);
        total += e;
        std::size_t rest = i;
        double inf = 0.0;
        for (int axis = 0; axis < f.dim(); ++axis) {
            const int bin = static_cast<int>(rest % static_cast<std::size_t>(M));
            rest /= static_cast<std::size_t>(M);
            inf = std::max(inf, std::abs(s.freq(bin)));
        }
        if (inf > radius) outside += e;
    }
    return total == 0.0 ? 0.0 : outside / total;
}

GridFunction convolve_periodic(const GridFunction& f, const GridFunction& g) {
    if (!(f.spec() == g.spec())) throw DimensionMismatchError("convolve_periodic: spec mismatch");
    Spectrum a = fft_forward(f);
    const Spectrum b = fft_forward(g);
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] *= b.values[i];
    return fft_inverse(a);
}

GridFunction translate_samples(const GridFunction& f, const std::vector<long>& shift) {
    if (static_cast<int>(shift.size()) != f.dim())
        throw DimensionMismatchError("translate_samples: dimension mismatch");
    const int M = f.spec().samples;
    GridFunction out(f.spec());
    const auto& src = f.values();
    auto wrap = [M](long v) { return ((v % M) + M) % M; };
    if (f.dim() == 1) {
        for (int j = 0; j < M; ++j) out.values()[j] = src[wrap(j - shift[0])];
    } else {
        for (int j0 = 0; j0 < M; ++j0)
            for (int j1 = 0; j1 < M; ++j1)
                out.values()[std::size_t(j0) * M + j1] =
                    src[std::size_t(wrap(j0 - shift[0])) * M + wrap(j1 - shift[1])];
    }
    if (f.declared_band()) out.declare_band(*f.declared_band());
    return out;
}

GridFunction modulate(const GridFunction& f, const std::vector<long>& k) {
    if (static_cast<int>(k.size()) != f.dim())
        throw DimensionMismatchError("modulate: dimension mismatch");
    const int M = f.spec().samples;
    GridFunction out(f.spec());
    const auto& src = f.values();
    if (f.dim() == 1) {
        for (int j = 0; j < M; ++j) {
            const double phase = 2.0 * M_PI * k[0] * f.coord(j);
            out.values()[j] = src[j] * Complex(std::cos(phase), std::sin(phase));
        }
    } else {
        for (int j0 = 0; j0 < M; ++j0)
            for (int j1 = 0; j1 < M; ++j1) {
                const double phase = 2.0 * M_PI * (k[0] * f.coord(j0) + k[1] * f.coord(j1));
                out.values()[std::size_t(j0) * M + j1] =
                    src[std::size_t(j0) * M + j1] * Complex(std::cos(phase), std::sin(phase));
            }
    }
    return out;
}

void write_grid_csv(std::ostream& os, const GridFunction& f) {
    os << "# " << f.dim() << "," << f.spec().period << "," << f.spec().samples << "\n";
    char buf[96];
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g", i, f.values()[i].real(),
                      f.values()[i].imag());
        os << buf << "\n";
    }
}

GridFunction read_grid_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.size() < 2 || line[0] != '#')
        throw InvalidShapeError("grid CSV must start with '# dim,L,M'");
    GridSpec spec;
    {
        std::stringstream header(line.substr(1));
        std::string cell;
        if (!std::getline(header, cell, ',')) throw InvalidShapeError("bad grid CSV header");
        spec.dim = std::stoi(cell);
        if (!std::getline(header, cell, ',')) throw InvalidShapeError("bad grid CSV header");
        spec.period = std::stod(cell);
        if (!std::getline(header, cell, ',')) throw InvalidShapeError("bad grid CSV header");
        spec.samples = std::stoi(cell);
    }
    GridFunction out(spec);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        if (!std::getline(row, cell, ',')) throw InvalidShapeError("bad grid CSV row");
        const std::size_t index = std::stoull(cell);
        if (index >= out.values().size()) throw InvalidShapeError("grid CSV index out of range");
        if (!std::getline(row, cell, ',')) throw InvalidShapeError("bad grid CSV row");
        const double re = std::stod(cell);
        if (!std::getline(row, cell, ',')) throw InvalidShapeError("bad grid CSV row");
        out.values()[index] = Complex(re, std::stod(cell));
    }
    return out;
}

}  // namespace modspace

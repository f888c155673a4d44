#include "modspace/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace modspace {

Coord norm_inf(const LatticePoint& k) {
    Coord m = 0;
    for (Coord c : k) m = std::max(m, std::abs(c));
    return m;
}

double bracket(const LatticePoint& k) {
    double sq = 1.0;
    for (Coord c : k) sq += static_cast<double>(c) * static_cast<double>(c);
    return std::sqrt(sq);
}

double PowerWeight::operator()(const LatticePoint& k) const {
    if (s == Rational(0)) return 1.0;
    return std::pow(bracket(k), to_double(s));
}

Sequence::Sequence(Dimension dim, std::map<LatticePoint, double> entries) : dim_(dim) {
    for (auto& [k, v] : entries) add(k, v);
}

void Sequence::add(const LatticePoint& k, double v) {
    if (static_cast<int>(k.size()) != dim_.n)
        throw DimensionMismatchError("lattice point dimension mismatch");
    if (v < 0.0) throw InvalidShapeError("sequences are nonnegative");
    if (v == 0.0) return;
    entries_[k] += v;
    radius_ = std::max(radius_, norm_inf(k));
}

double Sequence::at(const LatticePoint& k) const {
    const auto it = entries_.find(k);
    return it == entries_.end() ? 0.0 : it->second;
}

Sequence delta(Dimension dim, const LatticePoint& k) {
    Sequence s(dim);
    s.add(k, 1.0);
    return s;
}

Sequence delta_origin(Dimension dim) { return delta(dim, LatticePoint(dim.n, 0)); }

double weighted_norm(const Sequence& a, const Exponent& p, const PowerWeight& w) {
    if (a.empty()) return 0.0;
    if (p.is_infinite()) {
        double m = 0.0;
        for (const auto& [k, v] : a.entries()) m = std::max(m, v * w(k));
        return m;
    }
    const double pd = p.value();
    double sum = 0.0;
    for (const auto& [k, v] : a.entries()) sum += std::pow(v * w(k), pd);
    return std::pow(sum, 1.0 / pd);
}

namespace {

// Dense accumulation over the bounding box of supp(a) + supp(b).
struct DenseBox {
    std::vector<Coord> lo, hi;
    std::vector<std::size_t> stride;
    std::vector<double> cells;

    DenseBox(const std::vector<Coord>& lo_, const std::vector<Coord>& hi_) : lo(lo_), hi(hi_) {
        const int n = static_cast<int>(lo.size());
        stride.assign(n, 1);
        std::size_t total = 1;
        for (int i = n - 1; i >= 0; --i) {
            stride[i] = total;
            total *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
            if (total > (std::size_t{1} << 27))
                throw InvalidShapeError("convolution support too large for dense accumulation");
        }
        cells.assign(total, 0.0);
    }

    std::size_t index(const LatticePoint& k) const {
        std::size_t ix = 0;
        for (std::size_t i = 0; i < k.size(); ++i)
            ix += stride[i] * static_cast<std::size_t>(k[i] - lo[i]);
        return ix;
    }
};

void support_bounds(const Sequence& s, std::vector<Coord>& lo, std::vector<Coord>& hi) {
    const int n = s.dim().n;
    lo.assign(n, 0);
    hi.assign(n, 0);
    bool first = true;
    for (const auto& [k, v] : s.entries()) {
        (void)v;
        for (int i = 0; i < n; ++i) {
            if (first || k[i] < lo[i]) lo[i] = k[i];
            if (first || k[i] > hi[i]) hi[i] = k[i];
        }
        first = false;
    }
}

}  // namespace

Sequence convolve(const Sequence& a, const Sequence& b) {
    if (a.dim().n != b.dim().n) throw DimensionMismatchError("convolve: dimension mismatch");
    Sequence out(a.dim());
    if (a.empty() || b.empty()) return out;

    const int n = a.dim().n;
    std::vector<Coord> alo, ahi, blo, bhi, lo(n), hi(n);
    support_bounds(a, alo, ahi);
    support_bounds(b, blo, bhi);
    for (int i = 0; i < n; ++i) {
        lo[i] = alo[i] + blo[i];
        hi[i] = ahi[i] + bhi[i];
    }
    DenseBox box(lo, hi);

    LatticePoint sum(n);
    for (const auto& [ka, va] : a.entries()) {
        for (const auto& [kb, vb] : b.entries()) {
            for (int i = 0; i < n; ++i) sum[i] = ka[i] + kb[i];
            box.cells[box.index(sum)] += va * vb;
        }
    }

    // Unflatten the nonzero cells.
    LatticePoint k(n);
    for (std::size_t flat = 0; flat < box.cells.size(); ++flat) {
        if (box.cells[flat] == 0.0) continue;
        std::size_t rest = flat;
        for (int i = 0; i < n; ++i) {
            k[i] = lo[i] + static_cast<Coord>(rest / box.stride[i]);
            rest %= box.stride[i];
        }
        out.add(k, box.cells[flat]);
    }
    return out;
}

Sequence pointwise_product(const Sequence& a, const Sequence& b) {
    if (a.dim().n != b.dim().n)
        throw DimensionMismatchError("pointwise_product: dimension mismatch");
    Sequence out(a.dim());
    const Sequence& small = a.support_size() <= b.support_size() ? a : b;
    const Sequence& large = a.support_size() <= b.support_size() ? b : a;
    for (const auto& [k, v] : small.entries()) {
        const double w = large.at(k);
        if (w != 0.0) out.add(k, v * w);
    }
    return out;
}

void write_csv(std::ostream& os, const Sequence& a) {
    for (int i = 0; i < a.dim().n; ++i) os << "k" << (i + 1) << ",";
    os << "value\n";
    char buf[64];
    for (const auto& [k, v] : a.entries()) {
        for (Coord c : k) os << c << ",";
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf << "\n";
    }
}

Sequence read_sequence_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw InvalidShapeError("empty sequence CSV");
    int n = 0;
    {
        std::stringstream header(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(header, cell, ',')) cells.push_back(cell);
        if (cells.empty() || cells.back() != "value")
            throw InvalidShapeError("sequence CSV header must end with 'value'");
        n = static_cast<int>(cells.size()) - 1;
        if (n < 1) throw InvalidShapeError("sequence CSV needs at least one coordinate column");
    }
    Sequence out((Dimension(n)));
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        LatticePoint k(n);
        for (int i = 0; i < n; ++i) {
            if (!std::getline(row, cell, ','))
                throw InvalidShapeError("sequence CSV row too short");
            k[i] = std::stoll(cell);
        }
        if (!std::getline(row, cell, ',')) throw InvalidShapeError("sequence CSV row too short");
        out.add(k, std::stod(cell));
    }
    return out;
}

}  // namespace modspace

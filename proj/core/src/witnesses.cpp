#include "modspace/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "modspace/parallel.hpp"

namespace modspace {

const char* to_string(MapKind k) { return k == MapKind::Product ? "product" : "convolution"; }

const char* to_string(OracleReport::Outcome o) {
    switch (o) {
        case OracleReport::Outcome::Bounded: return "Bounded";
        case OracleReport::Outcome::BlowUp: return "BlowUp";
        case OracleReport::Outcome::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

template <class F>
void for_each_box_point(long N, int n, F&& f) {
    if (N < 0) throw InvalidShapeError("box needs N >= 0");
    double count = 1;
    for (int i = 0; i < n; ++i) count *= static_cast<double>(2 * N + 1);
    if (count > double(1 << 22)) throw InvalidShapeError("box support too large");

    LatticePoint k(n, -N);
    for (;;) {
        f(k);
        int axis = n - 1;
        while (axis >= 0) {
            if (++k[axis] <= N) break;
            k[axis] = -N;
            --axis;
        }
        if (axis < 0) break;
    }
}

LatticePoint rim_point(long N, int n, bool negate) {
    LatticePoint k(n, 0);
    k[0] = negate ? -N : N;
    return k;
}

Rational alpha_of(const IndexPair& a, Dimension dim) {
    return a.q.recip() + a.s / Rational(dim.n);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

Sequence box(long N, Dimension dim) {
    Sequence out(dim);
    for_each_box_point(N, dim.n, [&](const LatticePoint& k) { out.add(k, 1.0); });
    return out;
}

Sequence power_box(const Rational& gamma, long N, Dimension dim) {
    const double g = to_double(gamma);
    Sequence out(dim);
    for_each_box_point(N, dim.n,
                       [&](const LatticePoint& k) { out.add(k, std::pow(bracket(k), g)); });
    return out;
}

std::vector<Sequence> holder_power_witness(long N, const IndexPair& out,
                                           const std::vector<IndexPair>& ins, Dimension dim) {
    if (ins.empty()) throw InvalidShapeError("holder_power_witness needs at least one factor");
    Rational recip_sum(0), s_sum(0);
    for (const auto& in : ins) {
        recip_sum += in.q.recip();
        s_sum += in.s;
    }
    const Rational one_over_r = out.q.recip() - recip_sum;
    if (one_over_r <= Rational(0))
        throw InvalidBranchError("holder power family needs 1/r = 1/q - sum 1/q_j > 0");
    const Rational r = Rational(1) / one_over_r;
    const Rational d = out.s - s_sum;

    std::vector<Sequence> seqs;
    seqs.reserve(ins.size());
    for (const auto& in : ins) {
        // exponent of <i> in a_j; r/q_j = 0 when q_j = inf (x^0 := 1)
        const Rational e = -in.s + d * r * in.q.recip();
        seqs.push_back(power_box(e, N, dim));
    }
    return seqs;
}

double ratio(MapKind kind, const IndexPair& out, const std::vector<IndexPair>& ins,
             const std::vector<Sequence>& seqs, Dimension dim) {
    if (seqs.empty() || seqs.size() != ins.size())
        throw InvalidShapeError("ratio: one sequence per input index pair");
    double denom = 1.0;
    for (std::size_t j = 0; j < seqs.size(); ++j) {
        if (seqs[j].dim().n != dim.n) throw DimensionMismatchError("ratio: dimension mismatch");
        const double nj = weighted_norm(seqs[j], ins[j].q, PowerWeight{ins[j].s});
        if (nj == 0.0) throw ZeroDenominatorError("ratio: zero input norm");
        denom *= nj;
    }
    Sequence acc = seqs[0];
    for (std::size_t j = 1; j < seqs.size(); ++j)
        acc = kind == MapKind::Product ? pointwise_product(acc, seqs[j]) : convolve(acc, seqs[j]);
    return weighted_norm(acc, out.q, PowerWeight{out.s}) / denom;
}

std::vector<Sequence> instantiate(const WitnessFamily& family, long N, const IndexPair& out,
                                  const std::vector<IndexPair>& ins, Dimension dim) {
    if (family.slots.size() != ins.size())
        throw InvalidShapeError("witness family arity mismatch");
    if (!family.slots.empty() && family.slots[0].role == WitnessFamily::Role::HolderPower)
        return holder_power_witness(N, out, ins, dim);

    std::vector<Sequence> seqs;
    seqs.reserve(family.slots.size());
    for (const auto& slot : family.slots) {
        switch (slot.role) {
            case WitnessFamily::Role::UnitOrigin:
                seqs.push_back(delta_origin(dim));
                break;
            case WitnessFamily::Role::DeltaRim:
                seqs.push_back(delta(dim, rim_point(N, dim.n, false)));
                break;
            case WitnessFamily::Role::DeltaRimNeg:
                seqs.push_back(delta(dim, rim_point(N, dim.n, true)));
                break;
            case WitnessFamily::Role::Box:
                seqs.push_back(box(N * slot.scale, dim));
                break;
            case WitnessFamily::Role::PowerBox:
                seqs.push_back(power_box(slot.gamma, N * slot.scale, dim));
                break;
            case WitnessFamily::Role::HolderPower:
                throw InvalidShapeError("holder power role must fill every slot");
        }
    }
    return seqs;
}

std::vector<WitnessFamily> plan_families(MapKind kind, const IndexPair& out,
                                         const std::vector<IndexPair>& ins, Dimension dim) {
    if (ins.empty()) throw InvalidShapeError("plan_families needs at least one input");
    const std::size_t J = ins.size();
    const Rational n(dim.n);
    const Rational half(1, 2);

    std::vector<Rational> alpha_in;
    Rational s_sum(0), recip_sum(0);
    alpha_in.reserve(J);
    for (const auto& in : ins) {
        alpha_in.push_back(alpha_of(in, dim));
        s_sum += in.s;
        recip_sum += in.q.recip();
    }
    const Rational alpha_out = alpha_of(out, dim);

    std::vector<WitnessFamily> plan;
    auto all_slots = [&](WitnessFamily::Role role) {
        return std::vector<WitnessFamily::Slot>(J, WitnessFamily::Slot{role, Rational(0), 1});
    };

    if (kind == MapKind::Product) {
        {
            WitnessFamily f;
            f.label = "delta";
            f.slots = all_slots(WitnessFamily::Role::DeltaRim);
            f.predicted_slope = out.s - s_sum;
            plan.push_back(std::move(f));
        }
        {
            WitnessFamily f;
            f.label = "box";
            f.slots = all_slots(WitnessFamily::Role::Box);
            f.predicted_slope = n * positive_part(alpha_out);
            for (const auto& a : alpha_in) f.predicted_slope -= n * positive_part(a);
            f.counts_for_margin = false;
            plan.push_back(std::move(f));
        }
        if (J == 1) {
            // identity-map probe: a tuned power box separates the alpha levels
            WitnessFamily f;
            f.label = "power-box";
            const Rational gamma = rational_max(
                Rational(0), n * rational_max(half - alpha_in[0], half - alpha_out));
            f.slots = {WitnessFamily::Slot{WitnessFamily::Role::PowerBox, gamma, 1}};
            f.predicted_slope = n * (alpha_out - alpha_in[0]);
            plan.push_back(std::move(f));
        }
        if (out.q.recip() - recip_sum > Rational(0)) {
            WitnessFamily f;
            f.label = "holder-power";
            f.slots = all_slots(WitnessFamily::Role::HolderPower);
            f.predicted_slope = n * (out.q.recip() - recip_sum) + (out.s - s_sum);
            plan.push_back(std::move(f));
        }
        return plan;
    }

    // Convolution families.
    for (std::size_t i = 0; i < J; ++i) {
        WitnessFamily f;
        f.label = "delta-sub-" + std::to_string(i + 1);
        f.slots = all_slots(WitnessFamily::Role::UnitOrigin);
        f.slots[i].role = WitnessFamily::Role::DeltaRim;
        f.predicted_slope = out.s - ins[i].s;
        plan.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < J; ++i) {
        for (std::size_t j = i + 1; j < J; ++j) {
            WitnessFamily f;
            f.label = "delta-pair-" + std::to_string(i + 1) + "-" + std::to_string(j + 1);
            f.slots = all_slots(WitnessFamily::Role::UnitOrigin);
            f.slots[i].role = WitnessFamily::Role::DeltaRim;
            f.slots[j].role = WitnessFamily::Role::DeltaRimNeg;
            f.predicted_slope = -(ins[i].s + ins[j].s);
            plan.push_back(std::move(f));
        }
    }

    // Tuned power boxes over input subsets; exponents keep every factor norm
    // on a clean positive power of N.
    std::vector<std::vector<std::size_t>> subsets;
    if (J <= 6) {
        for (unsigned mask = 1; mask < (1u << J); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t j = 0; j < J; ++j)
                if (mask & (1u << j)) s.push_back(j);
            subsets.push_back(std::move(s));
        }
    } else {
        for (std::size_t j = 0; j < J; ++j) subsets.push_back({j});
        std::vector<std::size_t> full(J);
        for (std::size_t j = 0; j < J; ++j) full[j] = j;
        subsets.push_back(std::move(full));
    }
    for (const auto& subset : subsets) {
        WitnessFamily f;
        std::string tag;
        for (std::size_t j : subset) tag += (tag.empty() ? "" : ",") + std::to_string(j + 1);
        f.label = "power-box{" + tag + "}";
        f.slots = all_slots(WitnessFamily::Role::UnitOrigin);
        f.predicted_slope =
            n * (Rational(static_cast<long long>(subset.size()) - 1) + positive_part(alpha_out));
        for (std::size_t j : subset) {
            f.slots[j].role = WitnessFamily::Role::PowerBox;
            f.slots[j].gamma = rational_max(Rational(0), n * (half - alpha_in[j]));
            f.predicted_slope -= n * alpha_in[j];
        }
        plan.push_back(std::move(f));
    }

    {
        WitnessFamily f;
        f.label = "box";
        f.slots = all_slots(WitnessFamily::Role::Box);
        f.predicted_slope =
            n * (Rational(static_cast<long long>(J) - 1) + positive_part(alpha_out));
        for (const auto& a : alpha_in) f.predicted_slope -= n * positive_part(a);
        f.counts_for_margin = false;
        plan.push_back(std::move(f));
    }
    if (J == 2) {
        WitnessFamily f;
        f.label = "box-staggered";
        f.slots = all_slots(WitnessFamily::Role::Box);
        f.slots[1].scale = 2;
        f.predicted_slope = n * (Rational(1) + positive_part(alpha_out)) -
                            n * positive_part(alpha_in[0]) - n * positive_part(alpha_in[1]);
        f.counts_for_margin = false;
        plan.push_back(std::move(f));
    }
    return plan;
}

MarginReport refutation_margin(MapKind kind, const IndexPair& out,
                               const std::vector<IndexPair>& ins, Dimension dim) {
    const auto plan = plan_families(kind, out, ins, dim);
    MarginReport best;
    bool first = true;
    for (const auto& f : plan) {
        if (!f.counts_for_margin) continue;
        const Rational m = f.predicted_slope / Rational(dim.n);
        if (first || best.margin < m) {
            best.margin = m;
            best.family = f.label;
            first = false;
        }
    }
    return best;
}

std::vector<long> default_N_list(Dimension dim) {
    if (dim.n <= 1) return {8, 16, 32, 64, 128};
    return {8, 16, 32};
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t m = xs.size();
    if (m < 2) return 0.0;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= double(m);
    my /= double(m);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < m; ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return den == 0.0 ? 0.0 : num / den;
}

double asymptotic_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double lsq = least_squares_slope(xs, ys);
    if (xs.size() < 4) return lsq;

    std::vector<double> sig;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        sig.push_back((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]));

    const std::size_t m = sig.size();
    const double d1 = sig[m - 1] - sig[m - 2];
    const double d2 = sig[m - 2] - sig[m - 3];
    if (std::abs(d1) < 1e-12) return sig[m - 1];
    // Consistent geometric contraction of the octave slopes: Aitken limit.
    if (d1 * d2 > 0.0 && std::abs(d1) <= 0.95 * std::abs(d2)) {
        double ait = sig[m - 1] - d1 * d1 / (d1 - d2);
        if (sig[m - 1] > 0.0 && ait < 0.0) ait = 0.0;
        if (sig[m - 1] < 0.0 && ait > 0.0) ait = 0.0;
        return ait;
    }
    return lsq;
}

OracleReport blowup_probe(MapKind kind, const IndexPair& out, const std::vector<IndexPair>& ins,
                          const WitnessFamily& family, Dimension dim,
                          const std::vector<long>& N_list) {
    int big = 0;
    for (std::size_t i = 0; i < N_list.size(); ++i) {
        if (i > 0 && N_list[i] <= N_list[i - 1])
            throw InvalidShapeError("N_list must be ascending");
        if (N_list[i] >= 8) ++big;
    }
    if (big < 3) throw InvalidShapeError("N_list needs at least 3 entries >= 8");

    OracleReport report;
    report.family = family.label;
    report.predicted_slope = family.predicted_slope;

    for (long N : N_list) {
        const auto seqs = instantiate(family, N, out, ins, dim);
        report.points.emplace_back(N, ratio(kind, out, ins, seqs, dim));
    }

    std::vector<double> xs, ys;
    report.monotone = true;
    double prev = -1.0;
    for (const auto& [N, r] : report.points) {
        if (!(r > 0.0)) {
            report.verdict = OracleReport::Outcome::Inconclusive;
            return report;
        }
        if (prev >= 0.0 && r < prev * (1.0 - 1e-12) - 1e-300) report.monotone = false;
        prev = r;
        if (N >= 8) {
            xs.push_back(std::log2(double(N)));
            ys.push_back(std::log2(r));
        }
    }
    report.slope_lsq = least_squares_slope(xs, ys);
    report.slope = asymptotic_slope(xs, ys);

    if (report.slope >= kSlopeThreshold && report.monotone)
        report.verdict = OracleReport::Outcome::BlowUp;
    else if (report.slope <= kBoundedBand)
        report.verdict = OracleReport::Outcome::Bounded;
    else
        report.verdict = OracleReport::Outcome::Inconclusive;
    return report;
}

OracleSummary empirical_decide(MapKind kind, const IndexPair& out,
                               const std::vector<IndexPair>& ins, Dimension dim,
                               const std::vector<long>& N_list) {
    const auto plan = plan_families(kind, out, ins, dim);
    const auto Ns = N_list.empty() ? default_N_list(dim) : N_list;

    OracleSummary summary;
    summary.reports.resize(plan.size());
    parallel_indexed(plan.size(), [&](std::size_t i) {
        summary.reports[i] = blowup_probe(kind, out, ins, plan[i], dim, Ns);
    });

    bool any_blowup = false, all_bounded = true;
    bool first = true;
    for (const auto& r : summary.reports) {
        any_blowup = any_blowup || r.verdict == OracleReport::Outcome::BlowUp;
        all_bounded = all_bounded && r.verdict == OracleReport::Outcome::Bounded;
        if (first || r.slope > summary.worst_slope) {
            summary.worst_slope = r.slope;
            summary.worst_family = r.family;
            first = false;
        }
    }
    summary.verdict = any_blowup    ? OracleReport::Outcome::BlowUp
                      : all_bounded ? OracleReport::Outcome::Bounded
                                    : OracleReport::Outcome::Inconclusive;
    return summary;
}

std::string OracleReport::to_json_string() const {
    std::ostringstream os;
    os << "{\"family\":\"" << family << "\",\"points\":[";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) os << ",";
        os << "{\"N\":" << points[i].first << ",\"ratio\":" << format_double(points[i].second)
           << "}";
    }
    os << "],\"slope\":" << format_double(slope) << ",\"slope_lsq\":" << format_double(slope_lsq)
       << ",\"monotone\":" << (monotone ? "true" : "false") << ",\"predicted_slope\":\""
       << format_rational(predicted_slope) << "\",\"verdict\":\"" << to_string(verdict) << "\"}";
    return os.str();
}

std::string OracleSummary::to_json_string() const {
    std::ostringstream os;
    os << "{\"verdict\":\"" << to_string(verdict) << "\",\"worst_slope\":"
       << format_double(worst_slope) << ",\"worst_family\":\"" << worst_family
       << "\",\"reports\":[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) os << ",";
        os << reports[i].to_json_string();
    }
    os << "]}";
    return os.str();
}

}  // namespace modspace

#include "modspace/indices.hpp"

#include <limits>
#include <sstream>

namespace modspace {

namespace {

Rational alpha(const IndexPair& a, Dimension dim) {
    return a.q.recip() + a.s / Rational(dim.n);
}

}  // namespace

Exponent Exponent::from_recip(const Rational& r) {
    if (r < Rational(0)) throw OutOfRangeError("exponent reciprocal must be >= 0");
    return Exponent(r);
}

Exponent Exponent::from_value(const Rational& p) {
    if (p <= Rational(0)) throw OutOfRangeError("exponent must be positive");
    return Exponent(Rational(1) / p);
}

Exponent Exponent::conjugate() const {
    if (!is_banach()) throw OutOfRangeError("conjugate exponent needs p >= 1");
    return Exponent(Rational(1) - recip_);
}

double Exponent::value() const {
    if (is_infinite()) return std::numeric_limits<double>::infinity();
    return 1.0 / to_double(recip_);
}

Exponent Exponent::parse(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF") return infinity();
    return from_value(parse_rational(text));
}

std::string Exponent::str() const {
    if (is_infinite()) return "inf";
    return format_rational(Rational(1) / recip_);
}

std::string IndexPair::str() const { return "(" + q.str() + "," + format_rational(s) + ")"; }

const char* to_string(ConditionTag tag) {
    switch (tag) {
        case ConditionTag::A1: return "A1";
        case ConditionTag::A2: return "A2";
        case ConditionTag::A3: return "A3";
        case ConditionTag::A4: return "A4";
        case ConditionTag::B1: return "B1";
        case ConditionTag::B2: return "B2";
        case ConditionTag::C1: return "C1";
        case ConditionTag::C2: return "C2";
        case ConditionTag::YoungS: return "YoungS";
        case ConditionTag::HolderLr: return "HolderLr";
    }
    return "?";
}

const char* to_string(SpaceFamily f) {
    return f == SpaceFamily::Modulation ? "modulation" : "wiener";
}

const char* to_string(RelationKind k) {
    switch (k) {
        case RelationKind::Product: return "product";
        case RelationKind::Convolution: return "convolution";
        case RelationKind::Embedding: return "embedding";
    }
    return "?";
}

SideVerdict cond_holder_weighted(const IndexPair& out, const IndexPair& in1, const IndexPair& in2,
                                 Dimension dim) {
    const Rational a = alpha(out, dim), a1 = alpha(in1, dim), a2 = alpha(in2, dim);
    const Rational r = out.q.recip(), r1 = in1.q.recip(), r2 = in2.q.recip();

    SideVerdict v;
    if (r > r1 + r2 && a < a1 + a2) {
        v.holds = true;
        v.tag = ConditionTag::B1;
        return v;
    }
    if (r <= r1 + r2 && out.s <= in1.s + in2.s) {
        v.holds = true;
        v.tag = ConditionTag::B2;
        return v;
    }
    return v;
}

SideVerdict cond_young_weighted(const IndexPair& out, const IndexPair& in1, const IndexPair& in2,
                                Dimension dim) {
    if (!out.q.is_banach() || !in1.q.is_banach() || !in2.q.is_banach())
        throw OutOfRangeError("weighted Young conditions cover only 1 <= q <= inf; got " +
                              out.q.str() + ", " + in1.q.str() + ", " + in2.q.str());

    const Rational a = alpha(out, dim), a1 = alpha(in1, dim), a2 = alpha(in2, dim);
    const Rational r = out.q.recip(), r1 = in1.q.recip(), r2 = in2.q.recip();
    const Rational &s = out.s, &s1 = in1.s, &s2 = in2.s;
    const Rational zero(0), one(1);

    SideVerdict v;

    // A1, with every active endpoint sub-clause required to hold.
    {
        int active = 0;
        bool ok = s <= s1 && s <= s2 && zero <= s1 + s2;
        ok = ok && one + positive_part(a) < positive_part(a1) + positive_part(a2);
        ok = ok && a <= a1 && a <= a2 && one <= a1 + a2;
        if (a == a1) {
            ++active;
            ok = ok && r == r1 && s == s1;
        }
        if (a == a2) {
            ++active;
            ok = ok && r == r2 && s == s2;
        }
        if (one == a1 + a2) {
            ++active;
            ok = ok && one - r1 == r2 && s2 == -s1;
        }
        if (active >= 2) v.notes = "A1: multiple endpoint sub-clauses active; all conjoined";
        if (ok) {
            v.holds = true;
            v.tag = ConditionTag::A1;
            return v;
        }
    }

    if (s == zero && s1 == zero && s2 == zero) {
        const bool a2cond = (r == r1 && r2 == one) || (r == r2 && r1 == one) ||
                            (out.q.is_infinite() && r1 + r2 == one);
        if (a2cond) {
            v.holds = true;
            v.tag = ConditionTag::A2;
            return v;
        }
    }

    if (s <= s1 && s <= s2 && r1 + r2 == one && s1 + s2 == zero && a < zero && zero <= a1 &&
        zero <= a2) {
        v.holds = true;
        v.tag = ConditionTag::A3;
        return v;
    }

    {
        bool ok = s <= s1 && s <= s2 && zero <= s1 + s2;
        ok = ok && one + a == a1 + a2 && r <= r1 + r2;
        ok = ok && a < a1 && a < a2 && a > zero;
        if (s == s1 || s == s2)
            ok = ok && !out.q.is_infinite() && r1 != one && r2 != one;
        if (ok) {
            v.holds = true;
            v.tag = ConditionTag::A4;
            return v;
        }
    }

    return v;
}

SideVerdict cond_embedding(const IndexPair& from, const IndexPair& to, Dimension dim) {
    SideVerdict v;
    if (to.q.recip() <= from.q.recip() && to.s <= from.s) {
        v.holds = true;
        v.tag = ConditionTag::C1;
        return v;
    }
    if (to.q.recip() > from.q.recip() && alpha(to, dim) < alpha(from, dim)) {
        v.holds = true;
        v.tag = ConditionTag::C2;
        return v;
    }
    return v;
}

SideVerdict cond_young_unweighted_multilinear(const Exponent& out,
                                              const std::vector<Exponent>& ins) {
    if (ins.size() < 2) throw InvalidShapeError("multilinear Young needs J >= 2 factors");

    Rational banach_sum(0);
    int banach_count = 0;
    bool pointwise = true;
    for (const auto& q : ins) {
        if (q.is_banach()) {
            banach_sum += q.recip();
            ++banach_count;
        }
        pointwise = pointwise && out.recip() <= q.recip();
    }
    // With S empty the S-restricted sum imposes nothing.
    const bool bulk =
        banach_count == 0 || Rational(banach_count - 1) + out.recip() <= banach_sum;

    SideVerdict v;
    if (bulk && pointwise) {
        v.holds = true;
        v.tag = ConditionTag::YoungS;
    }
    return v;
}

SideVerdict cond_holder_lr_multilinear(const IndexPair& out, const std::vector<IndexPair>& ins,
                                       Dimension dim) {
    if (ins.empty()) throw InvalidShapeError("multilinear Hoelder needs J >= 1 factors");
    Rational recip_sum(0), s_sum(0);
    for (const auto& in : ins) {
        recip_sum += in.q.recip();
        s_sum += in.s;
    }
    const Rational one_over_r = positive_part(out.q.recip() - recip_sum);
    const Exponent r = Exponent::from_recip(one_over_r);
    const Rational s_diff = out.s - s_sum;

    SideVerdict v;
    v.notes = "1/r=" + format_rational(one_over_r) + ", s_diff=" + format_rational(s_diff);
    if (lr_membership(s_diff, r, dim)) {
        v.holds = true;
        v.tag = ConditionTag::HolderLr;
    }
    return v;
}

bool lr_membership(const Rational& s_diff, const Exponent& r, Dimension dim) {
    if (r.is_infinite()) return s_diff <= Rational(0);
    // s_diff * r < -n, rewritten with the reciprocal to stay exact.
    return s_diff < Rational(-dim.n) * r.recip();
}

namespace {

struct BilinearSides {
    IndexPair out;
    IndexPair in1;
    IndexPair in2;
};

BilinearSides side_of(const RelationQuery& q, bool spatial) {
    auto pick = [&](const SpaceIndices& si) { return spatial ? si.spatial : si.frequency; };
    return {pick(q.output), pick(q.inputs[0]), pick(q.inputs[1])};
}

}  // namespace

Verdict decide_relation(const RelationQuery& query) {
    const auto J = query.inputs.size();
    if (query.kind == RelationKind::Embedding) {
        if (J != 1) throw InvalidShapeError("embedding takes exactly one input space");
    } else if (J < 2) {
        throw InvalidShapeError("product/convolution take at least two input spaces");
    }

    Verdict verdict;

    if (query.kind == RelationKind::Embedding) {
        const auto sp = cond_embedding(query.inputs[0].spatial, query.output.spatial, query.dim);
        const auto fr =
            cond_embedding(query.inputs[0].frequency, query.output.frequency, query.dim);
        verdict.holds = sp.holds && fr.holds;
        verdict.spatial_tag = sp.tag;
        verdict.frequency_tag = fr.tag;
        return verdict;
    }

    const bool product = query.kind == RelationKind::Product;

    // The norm order (modulation vs Wiener) does not change the discrete-side
    // conditions; only the output exponent that must be Banach moves with it.
    if (product && query.family == SpaceFamily::Modulation &&
        !query.output.spatial.q.is_banach())
        throw OutOfRangeError("modulation product needs output spatial exponent p >= 1");
    if (!product && query.family == SpaceFamily::Wiener &&
        !query.output.frequency.q.is_banach())
        throw OutOfRangeError("wiener convolution needs output frequency exponent q >= 1");

    // Product acts as a pointwise product on the spatial axis and as a
    // convolution on the frequency axis; convolution the other way around.
    const bool holder_is_spatial = product;

    auto holder_pairs = [&](const SpaceIndices& si) {
        return holder_is_spatial ? si.spatial : si.frequency;
    };
    auto young_pairs = [&](const SpaceIndices& si) {
        return holder_is_spatial ? si.frequency : si.spatial;
    };

    bool young_weights_zero = young_pairs(query.output).s == Rational(0);
    bool young_banach = young_pairs(query.output).q.is_banach();
    for (const auto& in : query.inputs) {
        young_weights_zero = young_weights_zero && young_pairs(in).s == Rational(0);
        young_banach = young_banach && young_pairs(in).q.is_banach();
    }

    SideVerdict hv, yv;
    if (J == 2 && young_banach) {
        const auto h = side_of(query, holder_is_spatial);
        const auto y = side_of(query, !holder_is_spatial);
        hv = cond_holder_weighted(h.out, h.in1, h.in2, query.dim);
        yv = cond_young_weighted(y.out, y.in1, y.in2, query.dim);
    } else if (young_weights_zero) {
        std::vector<IndexPair> holder_ins;
        std::vector<Exponent> young_ins;
        holder_ins.reserve(J);
        young_ins.reserve(J);
        for (const auto& in : query.inputs) {
            holder_ins.push_back(holder_pairs(in));
            young_ins.push_back(young_pairs(in).q);
        }
        hv = cond_holder_lr_multilinear(holder_pairs(query.output), holder_ins, query.dim);
        yv = cond_young_unweighted_multilinear(young_pairs(query.output).q, young_ins);
    } else if (J > 2) {
        throw OutOfRangeError(
            "weighted multilinear relations are characterized only bilinearly; "
            "J > 2 needs zero weights on the convolution-type side");
    } else {
        throw OutOfRangeError(
            "weighted Young conditions cover only Banach exponents on the convolution-type side");
    }

    verdict.holds = hv.holds && yv.holds;
    verdict.spatial_tag = holder_is_spatial ? hv.tag : yv.tag;
    verdict.frequency_tag = holder_is_spatial ? yv.tag : hv.tag;

    std::ostringstream notes;
    if (!hv.notes.empty()) notes << "holder-side: " << hv.notes << "; ";
    if (!yv.notes.empty()) notes << "young-side: " << yv.notes << "; ";
    verdict.notes = notes.str();
    return verdict;
}

}  // namespace modspace

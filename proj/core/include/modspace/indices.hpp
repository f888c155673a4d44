#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modspace/errors.hpp"
#include "modspace/rational.hpp"

namespace modspace {

/// A Lebesgue exponent p in (0, inf], stored as its reciprocal so that every
/// clause of the form 1/q + s/n evaluates uniformly (recip = 0 encodes inf).
class Exponent {
  public:
    Exponent() : recip_(1) {}

    static Exponent from_recip(const Rational& r);
    static Exponent from_value(const Rational& p);
    static Exponent infinity() { return from_recip(Rational(0)); }

    const Rational& recip() const { return recip_; }
    bool is_infinite() const { return recip_ == Rational(0); }
    bool is_banach() const { return recip_ <= Rational(1); }

    /// 1/q' = 1 - 1/q. Only defined on the Banach range.
    Exponent conjugate() const;

    /// p as a double, +inf when recip = 0.
    double value() const;

    /// Accepts "inf", "a", "a/b".
    static Exponent parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.recip_ == b.recip_; }
    friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

  private:
    explicit Exponent(Rational r) : recip_(std::move(r)) {}
    Rational recip_;  // >= 0
};

/// One axis of a weighted sequence space l_{q,s}: exponent q and the order s
/// of the power weight <k>^s.
struct IndexPair {
    Exponent q;
    Rational s{0};

    std::string str() const;
};

struct Dimension {
    int n = 1;

    Dimension() = default;
    explicit Dimension(int n_) : n(n_) {
        if (n < 1) throw InvalidShapeError("dimension must be >= 1");
    }
};

enum class ConditionTag { A1, A2, A3, A4, B1, B2, C1, C2, YoungS, HolderLr };

const char* to_string(ConditionTag tag);

/// Result of a one-sided predicate: whether the condition set holds and which
/// member of it matched.
struct SideVerdict {
    bool holds = false;
    std::optional<ConditionTag> tag;
    std::string notes;
};

/// Result of a full relation decision; tags are reported per side.
struct Verdict {
    bool holds = false;
    std::optional<ConditionTag> spatial_tag;    // conditions on the (p,t) pairs
    std::optional<ConditionTag> frequency_tag;  // conditions on the (q,s) pairs
    std::string notes;
};

enum class SpaceFamily { Modulation, Wiener };
enum class RelationKind { Product, Convolution, Embedding };

const char* to_string(SpaceFamily f);
const char* to_string(RelationKind k);

/// Index data of one modulation/Wiener space: spatial pair (p, t) and
/// frequency pair (q, s).
struct SpaceIndices {
    IndexPair spatial;
    IndexPair frequency;
};

struct RelationQuery {
    SpaceFamily family = SpaceFamily::Modulation;
    RelationKind kind = RelationKind::Product;
    Dimension dim;
    std::vector<SpaceIndices> inputs;
    SpaceIndices output;
};

// --- condition sets -------------------------------------------------------

/// Weighted Hoelder: l_{q1,s1} * l_{q2,s2} (pointwise) into l_{q,s}.
/// Holds iff B1 or B2. Total on (0,inf].
SideVerdict cond_holder_weighted(const IndexPair& out, const IndexPair& in1, const IndexPair& in2,
                                 Dimension dim);

/// Weighted Young: l_{q1,s1} convolved with l_{q2,s2} into l_{q,s}.
/// Holds iff one of A1..A4. Throws OutOfRangeError outside [1,inf].
SideVerdict cond_young_weighted(const IndexPair& out, const IndexPair& in1, const IndexPair& in2,
                                Dimension dim);

/// l_{q1,s1} embeds into l_{q2,s2}.
SideVerdict cond_embedding(const IndexPair& from, const IndexPair& to, Dimension dim);

/// Unweighted multilinear Young with S = { j : q_j >= 1 }.
SideVerdict cond_young_unweighted_multilinear(const Exponent& out, const std::vector<Exponent>& ins);

/// Multilinear Hoelder via L^r membership of the weight quotient,
/// 1/r = max(1/q - sum 1/q_j, 0).
SideVerdict cond_holder_lr_multilinear(const IndexPair& out, const std::vector<IndexPair>& ins,
                                       Dimension dim);

/// <x>^{s_diff} in L^r(R^n): true iff (r = inf and s_diff <= 0) or
/// (r < inf and s_diff * r < -n).
bool lr_membership(const Rational& s_diff, const Exponent& r, Dimension dim);

/// Decides a product/convolution/embedding relation between weighted
/// modulation or Wiener amalgam spaces by composing the discrete-side
/// condition sets. Throws OutOfRangeError when the indices leave the range
/// the characterization covers.
Verdict decide_relation(const RelationQuery& query);

}  // namespace modspace

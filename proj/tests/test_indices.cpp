#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "modspace/indices.hpp"
#include "modspace/lattice.hpp"

using namespace modspace;

namespace {

IndexPair ip(const char* q, const char* s) {
    return IndexPair{Exponent::parse(q), parse_rational(s)};
}

const Dimension n1(1);

// Independent check that a weighted sequence-space inclusion fails: the
// truncated-indicator ratio must keep growing when the support doubles.
double box_ratio(const IndexPair& out, const IndexPair& in1, const IndexPair& in2,
                 bool convolution, long N) {
    auto norm = [](const Sequence& a, const IndexPair& i) {
        return weighted_norm(a, i.q, PowerWeight{i.s});
    };
    Sequence a(n1), b(n1);
    for (long k = -N; k <= N; ++k) {
        a.add({k}, 1.0);
        b.add({k}, 1.0);
    }
    const Sequence c = convolution ? convolve(a, b) : pointwise_product(a, b);
    return norm(c, out) / (norm(a, in1) * norm(b, in2));
}

}  // namespace

TEST_CASE("exponent encoding and parsing") {
    CHECK(Exponent::parse("inf").is_infinite());
    CHECK(Exponent::parse("inf").recip() == Rational(0));
    CHECK(Exponent::parse("4/3").recip() == Rational(3, 4));
    CHECK(Exponent::parse("2").is_banach());
    CHECK_FALSE(Exponent::parse("1/2").is_banach());
    CHECK(Exponent::parse("4").conjugate().recip() == Rational(3, 4));
    CHECK_THROWS_AS(Exponent::parse("0"), OutOfRangeError);
    CHECK_THROWS_AS(Exponent::parse("-2"), OutOfRangeError);
    CHECK_THROWS(Exponent::parse("abc"));
}

TEST_CASE("weighted Hoelder conditions") {
    // (2,0) <- (2,0)x(2,0): holds via B2
    auto v = cond_holder_weighted(ip("2", "0"), ip("2", "0"), ip("2", "0"), n1);
    CHECK(v.holds);
    CHECK(*v.tag == ConditionTag::B2);

    // (1,0) <- (4,0)x(4,0): fails; box ratio grows like N / N^{1/2}
    v = cond_holder_weighted(ip("1", "0"), ip("4", "0"), ip("4", "0"), n1);
    CHECK_FALSE(v.holds);
    const double r8 = box_ratio(ip("1", "0"), ip("4", "0"), ip("4", "0"), false, 8);
    const double r64 = box_ratio(ip("1", "0"), ip("4", "0"), ip("4", "0"), false, 64);
    CHECK(r64 / r8 > 2.0);  // ~ (129/17)^{1/2} ~ 2.75

    // (1,0) <- (2,1)x(2,1): B1 fails, B2 holds
    v = cond_holder_weighted(ip("1", "0"), ip("2", "1"), ip("2", "1"), n1);
    CHECK(v.holds);
    CHECK(*v.tag == ConditionTag::B2);

    // B1 branch: (1,0) <- (4,1)x(inf,0)
    v = cond_holder_weighted(ip("1", "0"), ip("4", "1"), ip("inf", "0"), n1);
    CHECK(v.holds);
    CHECK(*v.tag == ConditionTag::B1);
}

TEST_CASE("weighted Young conditions") {
    auto v = cond_young_weighted(ip("1", "0"), ip("1", "0"), ip("1", "0"), n1);
    CHECK(v.holds);
    CHECK(*v.tag == ConditionTag::A2);

    v = cond_young_weighted(ip("2", "0"), ip("2", "0"), ip("2", "0"), n1);
    CHECK_FALSE(v.holds);
    const double r8 = box_ratio(ip("2", "0"), ip("2", "0"), ip("2", "0"), true, 8);
    const double r64 = box_ratio(ip("2", "0"), ip("2", "0"), ip("2", "0"), true, 64);
    CHECK(r64 / r8 > 2.0);  // ~ 8^{1/2}

    v = cond_young_weighted(ip("inf", "0"), ip("2", "0"), ip("2", "0"), n1);
    CHECK(v.holds);
    CHECK(*v.tag == ConditionTag::A2);

    // A1 strict interior case: l_{1,2} * l_{1,2} -> l_{2,0}
    v = cond_young_weighted(ip("2", "0"), ip("1", "2"), ip("1", "2"), n1);
    CHECK(v.holds);
    CHECK(*v.tag == ConditionTag::A1);

    // A3: conjugate input exponents, opposite weights, negative output level
    v = cond_young_weighted(ip("2", "-1"), ip("2", "1/2"), ip("2", "-1/2"), n1);
    CHECK(v.holds);
    CHECK(*v.tag == ConditionTag::A3);

    CHECK_THROWS_AS(cond_young_weighted(ip("1/2", "0"), ip("1", "0"), ip("1", "0"), n1),
                    OutOfRangeError);
}

TEST_CASE("embedding conditions") {
    // l_1 into l_2 holds; brute-force the norm comparison on random data
    auto v = cond_embedding(ip("1", "0"), ip("2", "0"), n1);
    CHECK(v.holds);
    CHECK(*v.tag == ConditionTag::C1);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        Sequence a(n1);
        for (long k = -10; k <= 10; ++k)
            if (U(rng) < 0.5) a.add({k}, U(rng));
        const double l1 = weighted_norm(a, Exponent::parse("1"), {});
        const double l2 = weighted_norm(a, Exponent::parse("2"), {});
        CHECK(l2 <= l1 + 1e-12);
    }

    // identity embedding
    v = cond_embedding(ip("4/3", "-1"), ip("4/3", "-1"), n1);
    CHECK(v.holds);

    // l_2 into l_1 fails; box witness ||.||_1 / ||.||_2 = (2N+1)^{1/2}
    v = cond_embedding(ip("2", "0"), ip("1", "0"), n1);
    CHECK_FALSE(v.holds);
    Sequence boxN(n1);
    for (long k = -8; k <= 8; ++k) boxN.add({k}, 1.0);
    const double r = weighted_norm(boxN, Exponent::parse("1"), {}) /
                     weighted_norm(boxN, Exponent::parse("2"), {});
    CHECK(r == doctest::Approx(std::sqrt(17.0)));

    // weight-driven C2 branch
    v = cond_embedding(ip("2", "1"), ip("1", "-1/2"), n1);
    CHECK(v.holds);
    CHECK(*v.tag == ConditionTag::C2);
}

TEST_CASE("unweighted multilinear Young") {
    std::vector<Exponent> ones{Exponent::parse("1"), Exponent::parse("1")};
    auto v = cond_young_unweighted_multilinear(Exponent::parse("1"), ones);
    CHECK(v.holds);

    std::vector<Exponent> twos{Exponent::parse("2"), Exponent::parse("2")};
    v = cond_young_unweighted_multilinear(Exponent::parse("2"), twos);
    CHECK_FALSE(v.holds);

    std::vector<Exponent> trip{Exponent::parse("3/2"), Exponent::parse("3/2"),
                               Exponent::parse("3")};
    v = cond_young_unweighted_multilinear(Exponent::infinity(), trip);
    CHECK_FALSE(v.holds);  // 2 > 2/3 + 2/3 + 1/3

    // quasi-Banach factors drop out of the S-restricted sum
    std::vector<Exponent> quasi{Exponent::parse("1/2"), Exponent::parse("1/2")};
    v = cond_young_unweighted_multilinear(Exponent::parse("1/2"), quasi);
    CHECK(v.holds);
    v = cond_young_unweighted_multilinear(Exponent::parse("2"), quasi);
    CHECK(v.holds);
}

TEST_CASE("multilinear Hoelder via L^r membership") {
    CHECK(cond_holder_lr_multilinear(ip("2", "0"), {ip("2", "0"), ip("inf", "0")}, n1).holds);
    CHECK(cond_holder_lr_multilinear(ip("1", "0"), {ip("2", "0"), ip("2", "1")}, n1).holds);
    CHECK_FALSE(
        cond_holder_lr_multilinear(ip("1", "0"), {ip("inf", "0"), ip("inf", "0")}, n1).holds);
}

TEST_CASE("lr membership closed form matches partial-sum behaviour") {
    CHECK(lr_membership(Rational(0), Exponent::infinity(), n1));
    CHECK(lr_membership(Rational(-2), Exponent::parse("1"), n1));
    CHECK_FALSE(lr_membership(Rational(-1), Exponent::parse("1"), n1));

    // partial sums of <k>^{-2} stabilize; <k>^{-1} keeps drifting
    auto partial = [](double e, long N) {
        double s = 0.0;
        for (long k = -N; k <= N; ++k) s += std::pow(1.0 + double(k) * k, e / 2.0);
        return s;
    };
    CHECK(partial(-2.0, 4000) - partial(-2.0, 2000) < 1e-3);
    CHECK(partial(-1.0, 4000) - partial(-1.0, 2000) > 0.5);
}

TEST_CASE("condition sets are symmetric in the two inputs") {
    const char* qs[] = {"1", "4/3", "2", "4", "inf"};
    const char* ss[] = {"-2", "-1", "0", "1", "2"};
    for (const char* q : qs)
        for (const char* s : ss)
            for (const char* q1 : qs)
                for (const char* s1 : ss) {
                    const auto a = ip(q1, s1);
                    const auto b = ip("2", "1");
                    const auto out = ip(q, s);
                    CHECK(cond_holder_weighted(out, a, b, n1).holds ==
                          cond_holder_weighted(out, b, a, n1).holds);
                    CHECK(cond_young_weighted(out, a, b, n1).holds ==
                          cond_young_weighted(out, b, a, n1).holds);
                }
}

TEST_CASE("embedding conditions are transitive on a grid") {
    const char* qs[] = {"1", "2", "inf"};
    const char* ss[] = {"-1", "0", "1"};
    std::vector<IndexPair> pairs;
    for (const char* q : qs)
        for (const char* s : ss) pairs.push_back(ip(q, s));
    for (const auto& a : pairs)
        for (const auto& b : pairs)
            for (const auto& c : pairs)
                if (cond_embedding(a, b, n1).holds && cond_embedding(b, c, n1).holds)
                    CHECK(cond_embedding(a, c, n1).holds);
}

TEST_CASE("weighted Young with zero weights reduces to the unweighted form") {
    const char* qs[] = {"1", "4/3", "2", "4", "inf"};
    for (const char* q : qs)
        for (const char* q1 : qs)
            for (const char* q2 : qs) {
                const auto weighted =
                    cond_young_weighted(ip(q, "0"), ip(q1, "0"), ip(q2, "0"), n1);
                const auto plain = cond_young_unweighted_multilinear(
                    Exponent::parse(q), {Exponent::parse(q1), Exponent::parse(q2)});
                CHECK(weighted.holds == plain.holds);
            }
}

TEST_CASE("decide_relation composes the two sides") {
    auto space = [](const char* p, const char* q, const char* s, const char* t) {
        return SpaceIndices{ip(p, t), ip(q, s)};
    };

    RelationQuery conv;
    conv.family = SpaceFamily::Modulation;
    conv.kind = RelationKind::Convolution;
    conv.dim = n1;
    conv.inputs = {space("1", "1", "0", "0"), space("1", "1", "0", "0")};
    conv.output = space("1", "1", "0", "0");
    auto v = decide_relation(conv);
    CHECK(v.holds);
    CHECK(*v.spatial_tag == ConditionTag::A2);
    CHECK(*v.frequency_tag == ConditionTag::B2);

    RelationQuery prod = conv;
    prod.kind = RelationKind::Product;
    prod.inputs = {space("inf", "1", "0", "0"), space("inf", "1", "0", "0")};
    prod.output = space("inf", "1", "0", "0");
    v = decide_relation(prod);
    CHECK(v.holds);
    CHECK(*v.spatial_tag == ConditionTag::B2);
    CHECK(*v.frequency_tag == ConditionTag::A2);

    RelationQuery fail = conv;
    fail.kind = RelationKind::Product;
    fail.inputs = {space("2", "2", "0", "0"), space("2", "2", "0", "0")};
    fail.output = space("2", "2", "0", "0");
    v = decide_relation(fail);
    CHECK_FALSE(v.holds);
    CHECK(v.spatial_tag.has_value());          // B2 on the (p,t) side
    CHECK_FALSE(v.frequency_tag.has_value());  // Young side fails

    // the Wiener cases share the discrete conditions
    RelationQuery wiener = prod;
    wiener.family = SpaceFamily::Wiener;
    CHECK(decide_relation(wiener).holds);

    // embedding: M^{1,1}_{2,2} into M^{0,0}_{1,1}
    RelationQuery emb;
    emb.family = SpaceFamily::Modulation;
    emb.kind = RelationKind::Embedding;
    emb.dim = n1;
    emb.inputs = {space("2", "2", "1", "1")};
    emb.output = space("1", "1", "0", "0");
    v = decide_relation(emb);
    CHECK(v.holds);
    CHECK(*v.spatial_tag == ConditionTag::C2);
    CHECK(*v.frequency_tag == ConditionTag::C2);
}

TEST_CASE("embedding of a space into itself always holds") {
    auto space = [](const char* p, const char* q, const char* s, const char* t) {
        return SpaceIndices{ip(p, t), ip(q, s)};
    };
    const char* qs[] = {"1/2", "1", "2", "inf"};
    const char* ss[] = {"-1", "0", "2"};
    for (const char* p : qs)
        for (const char* t : ss)
            for (const char* q : qs)
                for (const char* s : ss) {
                    RelationQuery self;
                    self.kind = RelationKind::Embedding;
                    self.dim = n1;
                    self.inputs = {space(p, q, s, t)};
                    self.output = space(p, q, s, t);
                    CHECK(decide_relation(self).holds);
                }
}

TEST_CASE("decide_relation range handling") {
    auto space = [](const char* p, const char* q, const char* s, const char* t) {
        return SpaceIndices{ip(p, t), ip(q, s)};
    };

    // modulation product needs output spatial p >= 1
    RelationQuery bad;
    bad.kind = RelationKind::Product;
    bad.dim = n1;
    bad.inputs = {space("2", "1", "0", "0"), space("2", "1", "0", "0")};
    bad.output = space("1/2", "1", "0", "0");
    CHECK_THROWS_AS(decide_relation(bad), OutOfRangeError);

    // quasi-Banach Young side with weights is out of range
    RelationQuery quasi = bad;
    quasi.output = space("2", "1/2", "1", "0");
    quasi.inputs = {space("2", "1/2", "1", "0"), space("2", "1/2", "1", "0")};
    CHECK_THROWS_AS(decide_relation(quasi), OutOfRangeError);

    // ... but with zero Young-side weights it routes through the corollary
    RelationQuery ok = quasi;
    ok.inputs = {space("2", "1/2", "0", "0"), space("2", "1/2", "0", "0")};
    ok.output = space("2", "1/2", "0", "0");
    const auto v = decide_relation(ok);
    CHECK(v.holds);
    CHECK(*v.frequency_tag == ConditionTag::YoungS);
    CHECK(*v.spatial_tag == ConditionTag::HolderLr);

    // multilinear with weighted Young side is rejected
    RelationQuery tri;
    tri.kind = RelationKind::Convolution;
    tri.dim = n1;
    tri.inputs = {space("1", "1", "0", "1"), space("1", "1", "0", "1"),
                  space("1", "1", "0", "1")};
    tri.output = space("1", "1", "0", "1");
    CHECK_THROWS_AS(decide_relation(tri), OutOfRangeError);

    // multilinear convolution with zero spatial weights works
    RelationQuery tri_ok = tri;
    tri_ok.inputs = {space("1", "1", "1", "0"), space("1", "1", "1", "0"),
                     space("1", "1", "1", "0")};
    tri_ok.output = space("1", "1", "1", "0");
    CHECK(decide_relation(tri_ok).holds);

    // shape errors
    RelationQuery shape;
    shape.kind = RelationKind::Embedding;
    shape.dim = n1;
    shape.inputs = {space("1", "1", "0", "0"), space("1", "1", "0", "0")};
    shape.output = space("1", "1", "0", "0");
    CHECK_THROWS_AS(decide_relation(shape), InvalidShapeError);
}

TEST_CASE("bilinear Hoelder matches the L^r form on the acceptance grid") {
    const char* qs[] = {"1", "4/3", "2", "4", "inf"};
    const char* ss[] = {"-2", "-1", "0", "1", "2"};
    int mismatches = 0;
    for (const char* q : qs)
        for (const char* s : ss)
            for (const char* q1 : qs)
                for (const char* s1 : ss)
                    for (const char* q2 : qs)
                        for (const char* s2 : ss) {
                            const auto direct =
                                cond_holder_weighted(ip(q, s), ip(q1, s1), ip(q2, s2), n1);
                            const auto lr = cond_holder_lr_multilinear(
                                ip(q, s), {ip(q1, s1), ip(q2, s2)}, n1);
                            if (direct.holds != lr.holds) ++mismatches;
                        }
    CHECK(mismatches == 0);
}

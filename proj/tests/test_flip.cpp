#include <gtest/gtest.h>

#include "support.hpp"

using namespace lso;

namespace {

using Sets = std::vector<std::vector<Index>>;

// definition scan over all subsets
Sets autonomous_by_definition(const PartialOrder& p) {
    const std::size_t n = p.size();
    Sets out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Index> a;
        for (Index v = 0; v < n; ++v)
            if (mask >> v & 1u) a.push_back(v);
        if (a.size() < 2 || a.size() >= n) continue;
        bool ok = true;
        for (Index v = 0; v < n && ok; ++v) {
            if (mask >> v & 1u) continue;
            for (Index u : a)
                if (p.less(v, u) != p.less(v, a[0]) || p.less(u, v) != p.less(a[0], v)) ok = false;
        }
        if (ok) out.push_back(a);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

Sets sorted(Sets s) {
    std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return s;
}

PartialOrder abc() { return make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

}  // namespace

TEST(AutonomousSets, Chain) { EXPECT_EQ(find_autonomous_sets(abc()), (Sets{{0, 1}, {1, 2}})); }

TEST(AutonomousSets, Antichain) {
    EXPECT_EQ(sorted(find_autonomous_sets(PartialOrder::antichain(3))), (Sets{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(AutonomousSets, TwoPlusTwo) {
    auto found = find_autonomous_sets(fixtures::two_plus_two());
    EXPECT_EQ(sorted(found), (Sets{{0, 1}, {2, 3}}));
}

TEST(AutonomousSets, ChevronDualHasNone) {
    // every pair is split by some outsider, so the flip examples use other orders
    EXPECT_TRUE(find_autonomous_sets(fixtures::chevron_dual()).empty());
}

TEST(AutonomousSets, MatchDefinitionScan) {
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& p : enumerate_posets(n)) ASSERT_EQ(sorted(find_autonomous_sets(p)), autonomous_by_definition(p));
    EXPECT_THROW((void)find_autonomous_sets(PartialOrder::antichain(17)), TooLarge);
}

TEST(ReverseAutonomous, Examples) {
    auto p = abc();
    std::vector<Index> single{1};
    EXPECT_EQ(reverse_autonomous(p, single), p);
    std::vector<Index> ab{0, 1};
    auto q = reverse_autonomous(p, ab);
    EXPECT_TRUE(q.less(1, 0));
    EXPECT_TRUE(q.less(0, 2));
    EXPECT_TRUE(q.less(1, 2));
    std::vector<Index> ac{0, 2};
    EXPECT_THROW((void)reverse_autonomous(p, ac), NotAutonomous);
    std::vector<Index> all{0, 1, 2};
    EXPECT_EQ(reverse_autonomous(p, all), p.dual());
}

TEST(ReverseAutonomous, KeepsComparabilityGraph) {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        auto p = random_poset(static_cast<std::size_t>(rng.between(3, 8)), rng.uniform(), rng.next());
        auto sets = find_autonomous_sets(p);
        if (sets.empty()) continue;
        const auto& a = sets[rng.below(sets.size())];
        auto q = reverse_autonomous(p, a);
        ASSERT_EQ(comparability_graph(q), comparability_graph(p));
        ASSERT_EQ(reverse_autonomous(q, a), p);
    }
}

TEST(TriangleRep, CertificateRoundTrip) {
    auto p = fixtures::chevron_dual();
    auto cert = *recognize(p).certificate;
    auto t = TriangleRep::from_certificate(cert);
    EXPECT_EQ(t.decode(p.names()), p);
    EXPECT_EQ(t.to_certificate().order, cert.order);
    t.apex[1] = t.apex[0];
    EXPECT_THROW((void)t.to_certificate(), ContractViolation);
}

TEST(FlipRepresentation, WholeChainIsReflected) {
    auto p = abc();
    auto rep = TriangleRep::from_certificate(*recognize(p).certificate);
    Row all = member_row(3, std::vector<Index>{0, 1, 2});
    auto step = flip_representation(rep, p, all);
    EXPECT_EQ(step.b, all);
    EXPECT_EQ(step.rep.decode(p.names()), p.dual());
    EXPECT_EQ(step.rep.apex, (std::vector<std::int64_t>{2, 1, 0}));
}

TEST(FlipRepresentation, IsolatedMembersOnlyLeaveRepUnchanged) {
    auto p = PartialOrder::antichain(3);
    auto rep = TriangleRep::from_certificate(*recognize(p).certificate);
    auto step = flip_representation(rep, p, member_row(3, std::vector<Index>{0, 1}));
    EXPECT_TRUE(step.a_star.none());
    EXPECT_TRUE(step.b.none());
    EXPECT_EQ(step.rep.apex, rep.apex);
    EXPECT_EQ(step.rep.base, rep.base);
}

TEST(FlipRepresentation, TwoPlusTwo) {
    auto p = fixtures::two_plus_two();
    auto rep = TriangleRep::from_certificate(*recognize(p).certificate);
    Row xy = member_row(4, std::vector<Index>{0, 1});
    auto step = flip_representation(rep, p, xy);
    ASSERT_TRUE(is_autonomous(p, step.b));
    EXPECT_EQ(step.rep.decode(p.names()), reverse_autonomous(p, step.b));
    EXPECT_FALSE(trichotomy_violation(rep, p, step).has_value());
    EXPECT_THROW((void)flip_representation(rep, p, member_row(4, std::vector<Index>{0, 2})), NotAutonomous);
}

TEST(FlipRepresentation, DecodesToReversalOfB) {
    Rng rng(21);
    int flips = 0;
    for (int i = 0; i < 2000; ++i) {
        auto n = static_cast<std::size_t>(rng.between(3, 8));
        auto p = i % 2 ? random_linear_semiorder(n, rng.between(1, 4), rng.next())
                       : random_poset(n, rng.uniform(), rng.next());
        auto r = recognize(p);
        if (!r.yes) continue;
        auto sets = find_autonomous_sets(p);
        if (sets.empty()) continue;
        Row a = member_row(n, sets[rng.below(sets.size())]);
        auto rep = TriangleRep::from_certificate(*r.certificate);
        auto step = flip_representation(rep, p, a);
        if (step.a_star.none()) continue;
        ++flips;
        ASSERT_TRUE((step.a_star - step.b).none());
        ASSERT_TRUE(is_autonomous(p, step.b));
        ASSERT_EQ(step.rep.decode(p.names()), reverse_autonomous(p, step.b));
        ASSERT_FALSE(trichotomy_violation(rep, p, step).has_value());
    }
    EXPECT_GT(flips, 200);
}

TEST(FlipCertificate, SingletonKeepsCertificate) {
    auto p = fixtures::two_plus_two();
    auto cert = *recognize(p).certificate;
    auto out = flip_certificate(p, cert, std::vector<Index>{2});
    EXPECT_EQ(out.certificate.order, cert.order);
    EXPECT_EQ(out.certificate.intervals, cert.intervals);
    EXPECT_FALSE(out.fallback);
}

TEST(FlipCertificate, WholeChain) {
    auto p = abc();
    auto out = flip_certificate(p, *recognize(p).certificate, std::vector<Index>{0, 1, 2});
    EXPECT_EQ(out.certificate.order.perm(), (std::vector<Index>{2, 1, 0}));
    EXPECT_FALSE(verify_certificate(p.dual(), out.certificate).has_value());
    EXPECT_FALSE(out.fallback);
}

TEST(FlipCertificate, RejectsBadInput) {
    auto p = fixtures::two_plus_two();
    auto cert = *recognize(p).certificate;
    EXPECT_THROW((void)flip_certificate(p, cert, std::vector<Index>{0, 2}), NotAutonomous);
    Certificate wrong{LinearOrder({1, 0, 2, 3}), cert.intervals};
    EXPECT_THROW((void)flip_certificate(p, wrong, std::vector<Index>{0, 1}), Error);
}

TEST(FlipCertificate, OutputVerifiesWithoutFallback) {
    Rng rng(77);
    int checked = 0, rebuilt = 0;
    for (int i = 0; i < 1500; ++i) {
        auto n = static_cast<std::size_t>(rng.between(3, 8));
        auto p = i % 2 ? random_linear_semiorder(n, rng.between(1, 4), rng.next())
                       : random_poset(n, rng.uniform(), rng.next());
        auto r = recognize(p);
        if (!r.yes) continue;
        auto sets = find_autonomous_sets(p);
        if (sets.empty()) continue;
        const auto& a = sets[rng.below(sets.size())];
        auto out = flip_certificate(p, *r.certificate, a);
        ++checked;
        rebuilt += out.rebuilt;
        ASSERT_FALSE(verify_certificate(reverse_autonomous(p, a), out.certificate).has_value());
        ASSERT_FALSE(out.fallback);
    }
    EXPECT_GT(checked, 500);
    RecordProperty("rebuilt", rebuilt);
}

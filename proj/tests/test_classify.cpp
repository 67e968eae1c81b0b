#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "twobridge/classify.hpp"

using namespace twobridge;
using twobridge::testing::for_each_pair;
using twobridge::testing::ints;

namespace {

TwoBridge K(long long p, long long q) { return TwoBridge::from(p, q); }

}  // namespace

TEST(Classify, EvenCfPredicate)
{
    EXPECT_TRUE(is_even_cf(NegCF(ints({6, 2, 2}))));
    EXPECT_FALSE(is_even_cf(NegCF(ints({2, 3}))));
    EXPECT_TRUE(is_even_cf(NegCF(ints({2, 2, 2, 2, 4}))));
}

TEST(Classify, Examples)
{
    const auto t = classify(K(3, 2));
    EXPECT_EQ(t.status, Status::Quasipositive);
    EXPECT_TRUE(t.has_reason(Reason::EvenCf));
    EXPECT_EQ(t.is_positive, true);
    EXPECT_EQ(t.is_strongly_quasipositive, true);

    const auto f = classify(K(5, 3));
    EXPECT_EQ(f.status, Status::NonQuasipositive);
    EXPECT_TRUE(f.has_reason(Reason::OddCoeff));
    EXPECT_EQ(f.is_positive, false);

    const auto l = classify(K(16, 3));
    EXPECT_EQ(l.status, Status::LinkConditionHoldsUndetermined);
    EXPECT_TRUE(l.has_reason(Reason::LinkCaveat));
    EXPECT_FALSE(l.is_positive.has_value());
    EXPECT_EQ(classify(K(16, 13)).status, Status::LinkConditionHoldsUndetermined);
    EXPECT_EQ(classify(K(16, 13)).cf.coeffs(), ints({2, 2, 2, 2, 4}));

    const auto s = classify(K(15, 7));
    EXPECT_EQ(s.status, Status::NonQuasipositive);
    EXPECT_TRUE(s.has_reason(Reason::PqOdd));
    EXPECT_TRUE(s.has_reason(Reason::OddCoeff));

    // Links with an odd coefficient are excluded outright.
    EXPECT_EQ(classify(K(8, 3)).status, Status::NonQuasipositive);
    EXPECT_EQ(classify(K(2, 1)).status, Status::LinkConditionHoldsUndetermined);
}

TEST(Classify, StatusNames)
{
    EXPECT_EQ(to_string(Status::Quasipositive), "QUASIPOSITIVE");
    EXPECT_EQ(to_string(Status::NonQuasipositive), "NON_QUASIPOSITIVE");
    EXPECT_EQ(to_string(Status::LinkConditionHoldsUndetermined), "LINK_CONDITION_HOLDS_UNDETERMINED");
    EXPECT_EQ(to_string(Reason::EvenCf), "EVEN_CF");
    EXPECT_EQ(to_string(Reason::OddCoeff), "ODD_COEFF");
    EXPECT_EQ(to_string(Reason::PqOdd), "PQ_ODD");
    EXPECT_EQ(to_string(Reason::LinkCaveat), "LINK_CAVEAT");
}

TEST(Classify, Representatives)
{
    EXPECT_TRUE(pq_odd_shortcut(K(15, 7)));
    EXPECT_FALSE(pq_odd_shortcut(K(9, 2)));
    EXPECT_TRUE(pq_odd_shortcut(K(25, 9)));

    EXPECT_EQ(mirror(K(16, 3)), K(16, 13));
    EXPECT_EQ(mirror(K(2, 1)), K(2, 1));
    EXPECT_EQ(mirror(K(3, 1)), K(3, 2));

    EXPECT_EQ(inverse_rep(K(9, 2)), K(9, 5));
    EXPECT_EQ(inverse_rep(K(11, 1)), K(11, 1));
    EXPECT_EQ(inverse_rep(K(16, 3)), K(16, 11));
    EXPECT_EQ(inverse_rep(K(2, 1)), K(2, 1));

    EXPECT_EQ(canonical_isotopy_rep(K(9, 5)), K(9, 2));
    EXPECT_EQ(canonical_isotopy_rep(K(9, 2)), K(9, 2));
    EXPECT_EQ(canonical_isotopy_rep(K(16, 11)), K(16, 3));
}

TEST(Classify, ModInverse)
{
    EXPECT_EQ(mod_inverse(3, 16), 11);
    EXPECT_EQ(mod_inverse(-3, 16), 5);
    EXPECT_EQ(mod_inverse(1, 2), 1);
    EXPECT_THROW(mod_inverse(4, 16), std::invalid_argument);
}

TEST(LiscaO, Membership)
{
    auto a = in_lisca_O(K(9, 2));
    ASSERT_TRUE(a);
    EXPECT_EQ(a->m, 3);
    EXPECT_EQ(a->h, 1);
    auto b = in_lisca_O(K(25, 9));
    ASSERT_TRUE(b);
    EXPECT_EQ(b->m, 5);
    EXPECT_EQ(b->h, 2);
    EXPECT_FALSE(in_lisca_O(K(9, 4)));
    EXPECT_FALSE(in_lisca_O(K(16, 3)));   // even square
    EXPECT_FALSE(in_lisca_O(K(15, 4)));   // not a square
    EXPECT_TRUE(in_lisca_O(K(25, 4)));    // m = 5, h = 1
}

TEST(LiscaO, SliceVerdicts)
{
    const auto v1 = verify_slice_nonqp({3, 1});
    EXPECT_TRUE(v1.holds) << v1.failure;
    EXPECT_EQ(v1.branch, SliceVerdict::Branch::HOdd);
    EXPECT_EQ(v1.q_used, 5);
    const auto v2 = verify_slice_nonqp({5, 2});
    EXPECT_TRUE(v2.holds) << v2.failure;
    EXPECT_EQ(v2.branch, SliceVerdict::Branch::HEven);
    EXPECT_EQ(v2.q_used, 9);
    const auto v3 = verify_slice_nonqp({5, 4});
    EXPECT_TRUE(v3.holds) << v3.failure;
    EXPECT_EQ(v3.q, 19);
    EXPECT_FALSE(verify_slice_nonqp({9, 3}).holds);  // gcd(m, h) != 1
}

// Brute-force membership: scan every odd square and every h.
TEST(LiscaO, MatchesEnumeration)
{
    for_each_pair(2, 1000, [](std::int64_t p, std::int64_t q) {
        bool member = false;
        for (std::int64_t m = 3; m * m <= p; m += 2)
            if (m * m == p)
                for (std::int64_t h = 1; h < m; ++h) member |= std::gcd(m, h) == 1 && m * h - 1 == q;
        ASSERT_EQ(in_lisca_O(K(p, q)).has_value(), member) << p << "/" << q;
    });
}

TEST(Properties, ClassifierConsistency)
{
    for_each_pair(2, 500, [](std::int64_t p, std::int64_t q) {
        const TwoBridge tb = K(p, q);
        const auto c = classify(tb);
        const bool even = is_even_cf(c.cf);
        if (p % 2 == 1) {
            ASSERT_EQ(c.status == Status::Quasipositive, even);
            ASSERT_EQ(c.is_positive, even);
            ASSERT_EQ(c.is_strongly_quasipositive, even);
            ASSERT_EQ(complement_regular_criterion(tb), even);
            ASSERT_FALSE(even && is_even_cf(neg_cf(tb.r().complement())));
        } else {
            ASSERT_EQ(c.status == Status::LinkConditionHoldsUndetermined, even);
        }
        if (pq_odd_shortcut(tb)) ASSERT_EQ(c.status, Status::NonQuasipositive);

        // Isotopy: q' gives the reversed expansion and the same verdict.
        const TwoBridge inv = inverse_rep(tb);
        ASSERT_EQ(Integer(tb.q() * inv.q()) % tb.p(), 1);
        auto rev = c.cf.coeffs();
        std::reverse(rev.begin(), rev.end());
        ASSERT_EQ(neg_cf(inv.r()).coeffs(), rev);
        ASSERT_EQ(classify(inv).status, c.status);
        ASSERT_EQ(inverse_rep(inv), tb);
    });
}

#include "sqhe/core.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sqhe;

// Reference values from a 40-digit mpmath evaluation.
constexpr double kBE_1p4_2 = 0.9864338636344632981824;
constexpr double kSq_0p9835_1 = 5.081217307722567270;
constexpr double kNh = 0.98643386363446;
constexpr double kNc = 1.216369215160870795;
constexpr double kNl = 0.4175847986887594696;

TEST(BoseEinstein, ReferenceValues) {
    EXPECT_NEAR(bose_einstein(1.4, 2.0), kBE_1p4_2, 1e-15);
    EXPECT_NEAR(bose_einstein(std::log(2.0), 1.0), 1.0, 1e-15);
}

TEST(BoseEinstein, FrozenModeLimit) {
    EXPECT_EQ(bose_einstein(1.0, 1e-6), 0.0);
    EXPECT_LT(bose_einstein(1.0, 0.01), 1e-40);
}

TEST(BoseEinstein, RejectsBadInput) {
    EXPECT_THROW(bose_einstein(0.0, 1.0), DomainError);
    EXPECT_THROW(bose_einstein(-1.0, 1.0), DomainError);
    EXPECT_THROW(bose_einstein(1.0, 0.0), DomainError);
    EXPECT_THROW(bose_einstein(1.0, -2.0), DomainError);
}

TEST(SqueezedOccupation, ZeroSqueezeIsIdentity) {
    for (double n : {0.0, 0.5, 1e-12, 3.7, 1e6}) EXPECT_EQ(squeezed_occupation(n, 0.0), n);
}

TEST(SqueezedOccupation, ReferenceValue) {
    EXPECT_NEAR(squeezed_occupation(0.9835, 1.0), kSq_0p9835_1, 1e-13);
}

TEST(SqueezedOccupation, MatchesDefinition) {
    for (double n : {0.0, 0.2, 1.5})
        for (double x : {0.1, 0.7, 2.0, 5.0}) {
            const double def = std::cosh(2 * x) * (n + 0.5) - 0.5;
            EXPECT_NEAR(squeezed_occupation(n, x), def, 1e-13 * def);
        }
}

TEST(SqueezedOccupation, VacuumGrowth) {
    const double x = 12.0;
    EXPECT_NEAR(squeezed_occupation(0.0, x) / (std::exp(2 * x) / 4), 1.0, 1e-9);
}

TEST(SqueezedOccupation, MonotoneInBothArguments) {
    const double h = 1e-6;
    for (double n : {0.0, 0.3, 2.0})
        for (double x : {0.0, 0.5, 1.0, 2.0}) {
            EXPECT_GT(squeezed_occupation(n, x + h) - squeezed_occupation(n, x), 0.0);
            EXPECT_GT(squeezed_occupation(n + h, x) - squeezed_occupation(n, x), 0.0);
        }
}

TEST(SqueezedOccupation, OverflowGuard) {
    EXPECT_NO_THROW(squeezed_occupation(1.0, 300.0));
    EXPECT_THROW(squeezed_occupation(1.0, 300.5), DomainError);
    EXPECT_THROW(squeezed_occupation(1.0, -0.1), DomainError);
    EXPECT_THROW(squeezed_occupation(-0.1, 1.0), DomainError);
}

TEST(Occupations, DefaultsUnsqueezed) {
    const EngineParameters p;  // Th = 2, Tc = 0.5, Tl = 0.9
    const auto o = occupations(p, SqueezeSet{});
    EXPECT_NEAR(o.nh, kNh, 1e-14);
    EXPECT_NEAR(o.nc, kNc, 1e-14);
    EXPECT_NEAR(o.nl, kNl, 1e-14);
    EXPECT_EQ(o.Nh, o.nh);
    EXPECT_EQ(o.Nc, o.nc);
    EXPECT_EQ(o.Nl, o.nl);
}

TEST(Occupations, ChannelsAreIndependent) {
    const EngineParameters p;
    const auto a = occupations(p, SqueezeSet{});
    const auto b = occupations(p, SqueezeSet{1.0, 0.0, 0.0, 0.0, 0.0});
    EXPECT_EQ(a.Nh, b.Nh);
    EXPECT_EQ(a.Nc, b.Nc);
    EXPECT_GT(b.Nl, a.Nl);
}

TEST(Occupations, DerivedQuantities) {
    EngineParameters p;
    p.Th = 3.0;
    const SqueezeSet s{0.4, 0.7, 1.1, 0.3, 0.8};
    const auto o = occupations(p, s);
    EXPECT_EQ(o.n, o.Nh + o.Nc);
    EXPECT_EQ(o.y, o.Nc * s.pc + o.Nh * s.ph);
    EXPECT_EQ(o.Nh_tilde() - o.Nh, 1.0);
    EXPECT_EQ(o.Nc_tilde() - o.Nc, 1.0);
    EXPECT_EQ(o.Nl_tilde() - o.Nl, 1.0);
    EXPECT_GE(o.Nh, o.nh);
    EXPECT_GE(o.Nc, o.nc);
    EXPECT_GE(o.Nl, o.nl);
}

TEST(Occupations, GapAssignment) {
    EngineParameters p;
    p.Ea = 2.0;
    p.Eb = 0.7;
    const auto o = occupations(p, SqueezeSet{});
    EXPECT_EQ(o.nh, bose_einstein(2.0 - 0.1, p.Th));
    EXPECT_EQ(o.nc, bose_einstein(0.7 - 0.1, p.Tc));
    EXPECT_EQ(o.nl, bose_einstein(2.0 - 0.7, p.Tl));
}

TEST(Validation, EngineParameters) {
    EngineParameters p;
    EXPECT_NO_THROW(p.validate());
    auto bad = [](auto mutate) {
        EngineParameters q;
        mutate(q);
        return q;
    };
    EXPECT_THROW(bad([](auto& q) { q.E2 = 0.2; }).validate(), DomainError);
    EXPECT_THROW(bad([](auto& q) { q.Eb = 0.05; }).validate(), DomainError);
    EXPECT_THROW(bad([](auto& q) { q.Ea = 0.3; }).validate(), DomainError);
    EXPECT_THROW(bad([](auto& q) { q.Tc = 0.0; }).validate(), DomainError);
    EXPECT_THROW(bad([](auto& q) { q.g = 0.0; }).validate(), DomainError);
    EXPECT_THROW(bad([](auto& q) { q.r = -1.0; }).validate(), DomainError);
    EXPECT_THROW(bad([](auto& q) { q.tau = -0.1; }).validate(), DomainError);
    EXPECT_THROW(bad([](auto& q) { q.Th = NAN; }).validate(), DomainError);
    EXPECT_NO_THROW(bad([](auto& q) { q.tau = 0.0; }).validate());
}

TEST(Validation, SqueezeSet) {
    EXPECT_NO_THROW((SqueezeSet{10, 0, 0, 1, 1}).validate());
    EXPECT_THROW((SqueezeSet{-1, 0, 0, 0, 0}).validate(), DomainError);
    EXPECT_THROW((SqueezeSet{0, 0, 0, 1.1, 0}).validate(), DomainError);
    EXPECT_THROW((SqueezeSet{0, 0, 0, 0, -0.1}).validate(), DomainError);
    EXPECT_THROW((SqueezeSet{0, 301, 0, 0, 0}).validate(), DomainError);
}

TEST(Carnot, Efficiency) {
    EngineParameters p;
    EXPECT_DOUBLE_EQ(carnot_efficiency(p), 0.75);
}

#include <gtest/gtest.h>

#include <array>

#include "su11/channels.hpp"
#include "su11/fock.hpp"
#include "support.hpp"

using namespace su11;
using test::max_abs_diff;
using test::uniform;

TEST(Squeezer, ZeroIsIdentity) {
    EXPECT_LT(max_abs_diff(pumped_two_mode_squeezer(0.0, 0.4).matrix(), Matrix::Identity(6, 6)), 1e-15);
}

TEST(Squeezer, MatrixEntries) {
    const Matrix s = pumped_two_mode_squeezer(1.0, 0.0).matrix();
    EXPECT_NEAR(s(2, 2), std::cosh(1.0), 1e-12);
    EXPECT_NEAR(s(2, 4), std::sinh(1.0), 1e-12);
    EXPECT_NEAR(s(2, 2), 1.5431, 1e-4);
    EXPECT_NEAR(s(2, 4), 1.1752, 1e-4);
    EXPECT_LT(max_abs_diff(s.topLeftCorner(2, 2), Matrix::Identity(2, 2)), 1e-15);
}

TEST(Squeezer, InverseComposition) {
    const auto p = pumped_two_mode_squeezer(0.8, 0.3) * pumped_two_mode_squeezer(-0.8, 0.3);
    EXPECT_LT(max_abs_diff(p.matrix(), Matrix::Identity(6, 6)), 1e-12);
}

TEST(Tritter, ZeroAngleIsIdentity) {
    for (double ph : {0.0, 0.7, 3.0}) {
        EXPECT_LT(max_abs_diff(tritter(0.0, ph).matrix(), Matrix::Identity(6, 6)), 1e-15);
    }
}

TEST(Tritter, HalfTurnEntries) {
    for (double ph : {0.0, 1.3}) {
        const Matrix s = tritter(kPi, ph).matrix();
        EXPECT_NEAR(s(2, 4), -1.0, 1e-12);
        EXPECT_NEAR(s(0, 0), -1.0, 1e-12);
        EXPECT_NEAR(s(1, 1), -1.0, 1e-12);
    }
}

TEST(Tritter, ReverseComposition) {
    const auto p = tritter(0.6, 0.3) * tritter(-0.6, 0.3);
    EXPECT_LT(max_abs_diff(p.matrix(), Matrix::Identity(6, 6)), 1e-12);
}

TEST(TritterGenerator, ZeroAngleIsIdentity) {
    EXPECT_LT(max_abs_diff(tritter_from_generator(0.0, 0.5).matrix(), Matrix::Identity(6, 6)), 1e-15);
}

TEST(TritterGenerator, MatchesClosedForm) {
    const Matrix g = tritter_from_generator(0.6, 0.3).matrix();
    EXPECT_LT(max_abs_diff(g, tritter(0.6, 0.3).matrix()), 1e-8);
    EXPECT_TRUE(check_symplectic(g, 1e-10));
}

TEST(TritterGenerator, MatchesClosedFormOnGrid) {
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double theta = kPi * i / 19.0;
            const double phase = 2.0 * kPi * j / 19.0;
            ASSERT_LT(max_abs_diff(tritter_from_generator(theta, phase).matrix(), tritter(theta, phase).matrix()), 1e-8)
                << theta << ' ' << phase;
        }
    }
}

TEST(SqueezingChannel, Entries) {
    EXPECT_LT(max_abs_diff(squeezing_channel(0.0, 1.0).matrix(), Matrix::Identity(4, 4)), 1e-15);
    const Matrix s = squeezing_channel(0.5, 0.0).matrix();
    EXPECT_NEAR(s(0, 2), 0.52110, 1e-5);
    EXPECT_NEAR(s(0, 0), 1.12763, 1e-5);
}

TEST(SqueezingChannel, NegativeArgumentIsPhaseShiftedChannel) {
    EXPECT_LT(max_abs_diff(squeezing_channel(-0.4, 0.3).matrix(), squeezing_channel(0.4, 0.3 + kPi).matrix()), 1e-14);
}

TEST(SqueezingChannel, VacuumOccupationMatchesFock) {
    const double s = 0.5;
    const double gaussian = apply_symplectic(vacuum_state(2), squeezing_channel(s, 0.0)).total_occupation();
    const std::array<FockOperatorSpec, 1> seq{FockOperatorSpec::two_mode_squeeze(0, 1, Complex(s, 0.0))};
    const std::array<std::size_t, 2> both{0, 1};
    const double oracle = number_moments_fock(prepare_state_fock(seq, FockSpace{2, 30}), both).mean;
    EXPECT_NEAR(gaussian, oracle, 1e-9);
    EXPECT_NEAR(gaussian, 2.0 * std::sinh(s) * std::sinh(s), 1e-12);
}

TEST(ModeMixingChannel, Entries) {
    EXPECT_LT(max_abs_diff(mode_mixing_channel(0.0, 1.0).matrix(), Matrix::Identity(4, 4)), 1e-15);
    const Matrix s = mode_mixing_channel(0.5 * kPi, 0.0).matrix();
    EXPECT_LT(max_abs_diff(s.topLeftCorner(2, 2), Matrix::Zero(2, 2)), 1e-15);
    EXPECT_LT(max_abs_diff(s.topRightCorner(2, 2), Matrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs_diff(s.bottomLeftCorner(2, 2), -Matrix::Identity(2, 2)), 1e-15);
}

TEST(ModeMixingChannel, IsOrthogonal) {
    const Matrix s = mode_mixing_channel(0.7, 1.2).matrix();
    EXPECT_LT(max_abs_diff(s * s.transpose(), Matrix::Identity(4, 4)), 1e-14);
}

TEST(ModeMixingChannel, PreservesOccupation) {
    const auto state = apply_symplectic(GaussianState(Vector::Constant(4, 0.7), Matrix::Identity(4, 4)),
                                        squeezing_channel(0.6, 0.4));
    const auto out = apply_symplectic(state, mode_mixing_channel(0.9, 2.0));
    EXPECT_NEAR(out.total_occupation(), state.total_occupation(), 1e-10);
}

TEST(PhaseChannel, Entries) {
    EXPECT_LT(max_abs_diff(phase_channel(0.0).matrix(), Matrix::Identity(6, 6)), 1e-15);
    const Matrix s = phase_channel(kPi).matrix();
    Matrix block(2, 2);
    block << 0, 1, -1, 0;
    EXPECT_LT(max_abs_diff(s.block(2, 2, 2, 2), block), 1e-15);
    EXPECT_LT(max_abs_diff(s.block(4, 4, 2, 2), block), 1e-15);
    EXPECT_LT(max_abs_diff(s.topLeftCorner(2, 2), Matrix::Identity(2, 2)), 1e-15);
    const auto v = apply_symplectic(vacuum_state(3), phase_channel(1.3));
    EXPECT_LT(max_abs_diff(v.covariance(), Matrix::Identity(6, 6)), 1e-15);
}

TEST(GwChannels, ZeroIsIdentity) {
    EXPECT_LT(max_abs_diff(gw_squeezing_channel(0.0, 0.3).matrix(), Matrix::Identity(4, 4)), 1e-15);
    EXPECT_LT(max_abs_diff(gw_mode_mixing_channel(0.0, 0.3).matrix(), Matrix::Identity(4, 4)), 1e-15);
}

TEST(GwChannels, ExactFormsMatchGenericChannels) {
    EXPECT_LT(max_abs_diff(gw_squeezing_channel(0.2, 0.7).matrix(), squeezing_channel(0.2, 0.7).matrix()), 1e-15);
    EXPECT_LT(max_abs_diff(gw_mode_mixing_channel(0.2, 0.7).matrix(), mode_mixing_channel(0.2, 0.7).matrix()), 1e-15);
    EXPECT_TRUE(check_symplectic(gw_mode_mixing_channel(0.3, 1.1).matrix(), 1e-10));
}

TEST(GwChannels, SecondOrderFormsDifferAtThirdOrder) {
    const double s = 0.01;
    for (double ph : {0.0, 0.8, 2.5}) {
        EXPECT_LT(max_abs_diff(gw_squeezing_matrix(s, ph, GwForm::second_order), gw_squeezing_matrix(s, ph, GwForm::exact)),
                  s * s * s);
        EXPECT_LT(max_abs_diff(gw_mode_mixing_matrix(s, ph, GwForm::second_order),
                               gw_mode_mixing_matrix(s, ph, GwForm::exact)),
                  s * s * s);
    }
}

TEST(Embed, LayoutAndValidation) {
    EXPECT_LT(max_abs_diff(embed_on_side_modes(SymplecticOp::identity(2)).matrix(), Matrix::Identity(6, 6)), 1e-15);
    const auto op4 = squeezing_channel(0.3, 0.2);
    const Matrix e = embed_on_side_modes(op4).matrix();
    EXPECT_EQ(e.bottomRightCorner(4, 4), op4.matrix());
    EXPECT_EQ(e.topLeftCorner(2, 2), Matrix::Identity(2, 2));
    EXPECT_EQ(e.topRightCorner(2, 4), Matrix::Zero(2, 4));
    EXPECT_TRUE(check_symplectic(e));
    EXPECT_THROW(embed_on_side_modes(SymplecticOp::identity(3)), std::invalid_argument);
}

TEST(ChannelSpecTest, ArgumentAndOperator) {
    ChannelSpec spec{ChannelKind::squeezing, 2.0, 0.3, 0.4};
    EXPECT_DOUBLE_EQ(spec.argument(), 0.2);
    EXPECT_LT(max_abs_diff(channel_operator(spec).matrix(), embed_on_side_modes(squeezing_channel(0.2, 0.3)).matrix()),
              1e-15);
    spec.kind = ChannelKind::mode_mixing;
    EXPECT_LT(max_abs_diff(channel_operator(spec).matrix(), embed_on_side_modes(mode_mixing_channel(0.2, 0.3)).matrix()),
              1e-15);
    spec.kind = ChannelKind::phase;
    EXPECT_DOUBLE_EQ(spec.argument(), 0.3 + 0.4 * 2.0);
    EXPECT_LT(max_abs_diff(channel_operator(spec).matrix(), phase_channel(1.1).matrix()), 1e-15);
    EXPECT_DOUBLE_EQ(spec.at_epsilon(0.0).argument(), 0.3);
    spec.strength = -1.0;
    EXPECT_THROW(channel_operator(spec), std::invalid_argument);
}

TEST(ChannelProperties, ConstructorsAreSymplectic) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 1000; ++i) {
        const double a = uniform(rng, -2, 2);
        const double ph = uniform(rng, 0, 2 * kPi);
        ASSERT_TRUE(check_symplectic(pumped_two_mode_squeezer(a, ph).matrix(), 1e-10));
        ASSERT_TRUE(check_symplectic(tritter(a, ph).matrix(), 1e-10));
        ASSERT_TRUE(check_symplectic(tritter_from_generator(a, ph).matrix(), 1e-10));
        ASSERT_TRUE(check_symplectic(squeezing_channel(a, ph).matrix(), 1e-10));
        ASSERT_TRUE(check_symplectic(mode_mixing_channel(a, ph).matrix(), 1e-10));
        ASSERT_TRUE(check_symplectic(phase_channel(ph).matrix(), 1e-10));
        ASSERT_TRUE(check_symplectic(gw_squeezing_channel(a, ph).matrix(), 1e-10));
        ASSERT_TRUE(check_symplectic(gw_mode_mixing_channel(a, ph).matrix(), 1e-10));
        ASSERT_TRUE(check_symplectic(embed_on_side_modes(squeezing_channel(a, ph)).matrix(), 1e-10));
    }
}

TEST(ChannelProperties, InverseCompositions) {
    std::mt19937_64 rng(22);
    const Matrix i6 = Matrix::Identity(6, 6);
    const Matrix i4 = Matrix::Identity(4, 4);
    for (int i = 0; i < 1000; ++i) {
        const double r = uniform(rng, 0, 2);
        const double ph = uniform(rng, 0, 2 * kPi);
        ASSERT_LT(max_abs_diff((pumped_two_mode_squeezer(r, ph) * pumped_two_mode_squeezer(-r, ph)).matrix(), i6), 1e-12);
        ASSERT_LT(max_abs_diff((tritter(r, ph) * tritter(-r, ph)).matrix(), i6), 1e-12);
        ASSERT_LT(max_abs_diff((squeezing_channel(r, ph) * squeezing_channel(-r, ph)).matrix(), i4), 1e-12);
        ASSERT_LT(max_abs_diff((mode_mixing_channel(r, ph) * mode_mixing_channel(-r, ph)).matrix(), i4), 1e-12);
    }
}

TEST(ChannelProperties, PassiveOpsConserveParticles) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        Vector d(6);
        for (int k = 0; k < 6; ++k) {
            d(k) = uniform(rng, -3, 3);
        }
        Matrix sigma = Matrix::Identity(6, 6);
        for (int k = 0; k < 3; ++k) {
            sigma(2 * k, 2 * k) = sigma(2 * k + 1, 2 * k + 1) = uniform(rng, 1, 3);
        }
        const auto active = pumped_two_mode_squeezer(uniform(rng, 0, 1.5), uniform(rng, 0, 6.3));
        const auto state = apply_symplectic(GaussianState(d, sigma), active);
        const double n = state.total_occupation();
        const double ph = uniform(rng, 0, 2 * kPi);
        ASSERT_LT(test::rel_err(apply_symplectic(state, tritter(uniform(rng, 0, kPi), ph)).total_occupation(), n), 1e-9);
        ASSERT_LT(test::rel_err(apply_symplectic(state, phase_channel(ph)).total_occupation(), n), 1e-9);
        ASSERT_LT(test::rel_err(
                      apply_symplectic(state, embed_on_side_modes(mode_mixing_channel(uniform(rng, 0, 3), ph))).total_occupation(),
                      n),
                  1e-9);
    }
}

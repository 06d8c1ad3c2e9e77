#include <gtest/gtest.h>

#include <array>

#include "su11/fock.hpp"
#include "su11/metrology.hpp"
#include "support.hpp"

using namespace su11;
using test::rel_err;

namespace {

constexpr std::array<std::size_t, 2> kSide{1, 2};

}  // namespace

TEST(FockSpace, Validation) {
    EXPECT_NO_THROW((FockSpace{3, 25}.validate()));
    EXPECT_THROW((FockSpace{1, 25}.validate()), std::invalid_argument);
    EXPECT_THROW((FockSpace{3, 5}.validate()), std::invalid_argument);
    EXPECT_THROW((FockSpace{3, 41}.validate()), std::invalid_argument);
    EXPECT_EQ((FockSpace{3, 25}.dimension()), 15625u);
    const FockSpace s{3, 10};
    EXPECT_EQ(s.occupation(321, 0), 1u);
    EXPECT_EQ(s.occupation(321, 1), 2u);
    EXPECT_EQ(s.occupation(321, 2), 3u);
}

TEST(FockPrepare, EmptySequenceIsVacuum) {
    const auto state = prepare_state_fock({}, FockSpace{2, 10});
    EXPECT_EQ(state.amplitudes(0), Complex(1.0, 0.0));
    EXPECT_NEAR(state.amplitudes.norm(), 1.0, 1e-15);
}

TEST(FockPrepare, CoherentState) {
    const std::array<FockOperatorSpec, 1> seq{FockOperatorSpec::displacement(0, Complex(1.0, 1.0))};
    const auto state = prepare_state_fock(seq, FockSpace{2, 30});
    const std::array<std::size_t, 1> mode{0};
    const auto m = number_moments_fock(state, mode);
    EXPECT_NEAR(m.mean, 2.0, 1e-6);
    EXPECT_NEAR(m.var, 2.0, 1e-6);
}

TEST(FockPrepare, TwoModeSqueezedVacuum) {
    const std::array<std::size_t, 2> modes{0, 1};
    const std::array<FockOperatorSpec, 1> half{FockOperatorSpec::two_mode_squeeze(0, 1, Complex(0.5, 0.0))};
    EXPECT_NEAR(number_moments_fock(prepare_state_fock(half, FockSpace{2, 30}), modes).mean,
                2.0 * std::pow(std::sinh(0.5), 2), 1e-5);

    const std::array<FockOperatorSpec, 1> one{FockOperatorSpec::two_mode_squeeze(0, 1, Complex(0.0, 1.0))};
    const auto state = prepare_state_fock(one, FockSpace{2, 60});
    const auto m = number_moments_fock(state, modes);
    EXPECT_NEAR(m.mean, 2.76220, 1e-5);
    EXPECT_LT(rel_err(m.var, std::pow(std::sinh(2.0), 2)), 1e-6);
    EXPECT_NEAR(number_difference_moments_fock(state, 0, 1).mean, 0.0, 1e-10);
    EXPECT_NEAR(number_difference_moments_fock(state, 0, 1).var, 0.0, 1e-10);
}

TEST(FockPrepare, PreservesNorm) {
    auto c = test::make_config(ChannelKind::squeezing, 3.0, 0.4, 0.6);
    c.tritter_phase = 0.7;
    c.squeezing_phase = 1.1;
    c.channel.strength = 2.0;
    const auto state = prepare_state_fock(interferometer_sequence(c, 0.3), FockSpace{3, 25});
    EXPECT_NEAR(state.amplitudes.norm(), 1.0, 1e-9);
}

TEST(FockPrepare, LeakageGuard) {
    const std::array<FockOperatorSpec, 1> seq{FockOperatorSpec::two_mode_squeeze(0, 1, Complex(1.5, 0.0))};
    EXPECT_THROW(prepare_state_fock(seq, FockSpace{2, 10}), NumericalError);
    const auto state = prepare_state_fock_adaptive(seq, FockSpace{2, 10});
    EXPECT_GT(state.space.cutoff, 10u);
    EXPECT_LE(state.leakage, kFockLeakageLimit);
    const std::array<std::size_t, 2> modes{0, 1};
    EXPECT_LT(rel_err(number_moments_fock(state, modes).mean, 2.0 * std::pow(std::sinh(1.5), 2)), 1e-5);
}

TEST(FockGenerator, VarianceExamples) {
    ChannelSpec ch;
    ch.kind = ChannelKind::squeezing;
    ch.strength = 1.0;
    ch.phase = 0.0;
    const std::array<std::size_t, 2> modes{0, 1};
    const auto vac = prepare_state_fock({}, FockSpace{2, 20});
    EXPECT_NEAR(generator_variance(vac, ch, modes), 0.25, 1e-12);

    // ϑ_sq − φ_B = π/2
    const std::array<FockOperatorSpec, 1> seq{
        FockOperatorSpec::two_mode_squeeze(0, 1, std::polar(0.5, 0.5 * kPi))};
    const auto state = prepare_state_fock(seq, FockSpace{2, 30});
    const double expected = 0.25 * (1.0 + std::pow(std::sinh(1.0), 2));
    EXPECT_LT(rel_err(generator_variance(state, ch, modes), expected), 1e-8);
}

TEST(FockGenerator, AntiHermitian) {
    const FockSpace space{3, 10};
    for (const auto& spec : {FockOperatorSpec::two_mode_squeeze(1, 2, Complex(0.3, -0.2)),
                             FockOperatorSpec::mode_mix(1, 2, Complex(0.1, 0.4)),
                             FockOperatorSpec::tritter(0, 1, 2, 0.7, 1.1), FockOperatorSpec::phase_shift(1, 2, 0.9),
                             FockOperatorSpec::displacement(0, Complex(0.5, 0.5))}) {
        const SparseOperator k = fock_generator(space, spec);
        const SparseOperator sum = k + SparseOperator(k.adjoint());
        EXPECT_LT(sum.norm(), 1e-12);
    }
}

TEST(FockGaussianEquivalence, QfiAndMomentsAllChannels) {
    for (auto kind : {ChannelKind::squeezing, ChannelKind::mode_mixing, ChannelKind::phase}) {
        auto c = test::make_config(kind, 2.0, 0.5, 0.4);
        c.pump_phase = 0.3;
        c.squeezing_phase = 0.9;
        c.tritter_phase = 0.2;
        c.channel.phase = 0.6;
        c.channel.strength = 2.0;
        const auto probe = prepare_state_fock(probe_sequence(c), FockSpace{3, 25});
        EXPECT_LT(rel_err(generator_variance(probe, c.channel, kSide), qfi_numeric(c)), 1e-3) << to_string(kind);

        const double eps = 0.4;
        const auto out = prepare_state_fock(interferometer_sequence(c, eps), FockSpace{3, 25});
        const auto g = side_modes_output(c, eps);
        const auto fs = number_moments_fock(out, kSide);
        const auto gs = number_sum_moments(g);
        EXPECT_LT(rel_err(fs.mean, gs.mean), 1e-3) << to_string(kind);
        EXPECT_LT(rel_err(fs.var, gs.var), 1e-3) << to_string(kind);
        const auto fd = number_difference_moments_fock(out, 1, 2);
        const auto gd = heterodyne_moments(g);
        EXPECT_NEAR(fd.mean, gd.mean, 1e-6) << to_string(kind);
        EXPECT_LT(rel_err(fd.var, gd.var), 1e-3) << to_string(kind);
    }
}

TEST(FockGaussianEquivalence, SpecExampleState) {
    auto c = test::make_config(ChannelKind::squeezing, 2.0 + test::side_particles(0.5), 0.5, 0.4);
    c.squeezing_phase = 0.5 * kPi;
    const auto probe = prepare_state_fock(probe_sequence(c), FockSpace{3, 25});
    EXPECT_LT(rel_err(generator_variance(probe, c.channel, kSide), qfi_numeric(c)), 1e-3);
}

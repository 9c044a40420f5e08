// Copyright 2026 The hyperconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "hyperconc/state_space.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hyperconc/concurrence.hpp"
#include "hyperconc/errors.hpp"
#include "random_specs.hpp"

namespace hyperconc {
namespace {

using hctest::photon;

PureState single(std::vector<LabeledPhoton> photons) {
    const std::size_t slots = photons.size();
    const std::vector<LabeledTerm> terms{{std::move(photons), 1.0}};
    return PureState::from_labeled(slots, terms);
}

TEST(ModeRegistry, IndicesFollowSortedLabels) {
    ModeRegistry r({"b2", "a1", "c1", "a2"});
    ASSERT_EQ(r.size(), 4u);
    EXPECT_EQ(r.index_of("a1"), 0);
    EXPECT_EQ(r.index_of("a2"), 1);
    EXPECT_EQ(r.index_of("b2"), 2);
    EXPECT_EQ(r.label(3), "c1");
    EXPECT_FALSE(r.contains("d9"));
    EXPECT_THROW(r.index_of("d9"), UnknownModeError);
}

TEST(ModeRegistry, DuplicateLabelsRejected) {
    EXPECT_THROW(ModeRegistry({"a1", "b1", "a1"}), ModeCollisionError);
}

TEST(BasisConfig, PacksPolarizationAndModePerSlot) {
    BasisConfig c;
    c = c.with_photon(0, {Polarization::V, 5}).with_photon(3, {Polarization::H, 127});
    EXPECT_EQ(c.photon(0), (Photon{Polarization::V, 5}));
    EXPECT_EQ(c.photon(3), (Photon{Polarization::H, 127}));
    EXPECT_EQ(c.photon(1), (Photon{Polarization::H, 0}));
    EXPECT_EQ(c.packed(), 0x7f000085ull);
}

TEST(PureState, FromLabeledMergesRepeatsAndPrunesCancellations) {
    const std::vector<LabeledTerm> terms{
        {{photon('H', "a1")}, 0.5},
        {{photon('V', "a1")}, 0.25},
        {{photon('H', "a1")}, 0.5},
        {{photon('V', "a1")}, -0.25},
    };
    const auto s = PureState::from_labeled(1, terms);
    ASSERT_EQ(s.size(), 1u);
    const std::vector<LabeledPhoton> h{photon('H', "a1")};
    EXPECT_DOUBLE_EQ(s.amplitude(h).real(), 1.0);
    const std::vector<LabeledPhoton> v{photon('V', "a1")};
    EXPECT_EQ(s.amplitude(v), Complex{});
}

TEST(PureState, DoubleOccupancyIsRejected) {
    const std::vector<LabeledTerm> terms{{{photon('H', "a1"), photon('V', "a1")}, 1.0}};
    EXPECT_THROW(PureState::from_labeled(2, terms), OccupancyError);
}

TEST(PureState, NormalizedRejectsZeroState) {
    const std::vector<LabeledTerm> terms{{{photon('H', "a1")}, 1e-17}};
    const auto s = PureState::from_labeled(1, terms);
    EXPECT_TRUE(s.empty());
    EXPECT_THROW(s.normalized(), DegenerateStateError);
}

TEST(PureState, ToStringListsTerms) {
    const auto s = single({photon('H', "a1"), photon('V', "b2")});
    EXPECT_NE(s.to_string().find("a1"), std::string::npos);
    EXPECT_NE(s.to_string().find("b2"), std::string::npos);
}

TEST(HyperPair, AmplitudesAreProductsOfBlocks) {
    HyperPairSpec spec;
    spec.pol = {0.6, 0.8, 0.0, 0.0};
    spec.mom = {0.8, {0.0, 0.6}, 0.0, 0.0};
    const auto s = make_hyper_pair(spec);
    EXPECT_EQ(s.size(), 4u);
    EXPECT_NEAR(norm(s), 1.0, 1e-15);
    const std::vector<LabeledPhoton> hh11{photon('H', "a1"), photon('H', "b1")};
    EXPECT_NEAR(std::abs(s.amplitude(hh11) - Complex(0.48, 0.0)), 0.0, 1e-15);
    const std::vector<LabeledPhoton> vv22{photon('V', "a2"), photon('V', "b2")};
    EXPECT_NEAR(std::abs(s.amplitude(vv22) - Complex(0.0, 0.48)), 0.0, 1e-15);
    const std::vector<LabeledPhoton> hv11{photon('H', "a1"), photon('V', "b1")};
    EXPECT_EQ(s.amplitude(hv11), Complex{});
}

TEST(HyperPair, CrossTermsUseAliceBobOrdering) {
    HyperPairSpec spec;
    spec.pol = {0.0, 0.0, 1.0, 0.0};  // gamma: H at Alice, V at Bob
    spec.mom = {0.0, 0.0, 0.0, 1.0};  // delta: Alice second mode, Bob first
    const auto s = make_hyper_pair(spec);
    ASSERT_EQ(s.size(), 1u);
    const std::vector<LabeledPhoton> expected{photon('H', "a2"), photon('V', "b1")};
    EXPECT_DOUBLE_EQ(s.amplitude(expected).real(), 1.0);
}

TEST(HyperPair, ValidationReportsNorm) {
    HyperPairSpec spec;
    spec.pol = {0.8, 0.5, 0.0, 0.0};  // 0.89
    spec.mom = hctest::bell_block();
    try {
        validate(spec);
        FAIL() << "expected NormalizationError";
    } catch (const NormalizationError& e) {
        EXPECT_NE(std::string(e.what()).find("0.89"), std::string::npos) << e.what();
    }
}

TEST(Tensor, ConcatenatesSlotsAndRejectsSharedModes) {
    HyperPairSpec spec;
    spec.pol = hctest::bell_block();
    spec.mom = hctest::bell_block();
    const auto a = make_hyper_pair(spec);
    const auto b = make_hyper_pair(spec.on_modes({"a3", "a4"}, {"b3", "b4"}));
    const auto ab = tensor(a, b);
    EXPECT_EQ(ab.slot_count(), 4u);
    EXPECT_EQ(ab.size(), a.size() * b.size());
    EXPECT_NEAR(norm(ab), 1.0, 1e-15);
    EXPECT_THROW(tensor(a, a), ModeCollisionError);
}

TEST(Fidelity, IgnoresGlobalPhaseAndChecksRegistries) {
    hyperconc::RandomStream rng(3, 1);
    const auto spec = hctest::random_general_spec(rng);
    const auto s = make_hyper_pair(spec);
    EXPECT_NEAR(fidelity_up_to_phase(s, s.scaled(std::polar(1.0, 0.7))), 1.0, 1e-14);
    const auto moved = make_hyper_pair(spec.on_modes({"a3", "a4"}, {"b3", "b4"}));
    EXPECT_THROW(fidelity_up_to_phase(s, moved), BasisMismatchError);
}

TEST(ReducedDensity, BellPolarizationIsMaximallyMixed) {
    HyperPairSpec spec;
    spec.pol = hctest::bell_block();
    spec.mom = {0.8, 0.6, 0.0, 0.0};
    const auto s = make_hyper_pair(spec);
    const std::size_t keep[] = {0};
    const auto rho = reduced_density(s, keep, Observable::kPolarization);
    ASSERT_EQ(rho.dimension(), 2u);
    EXPECT_EQ(rho.basis()[0], "H");
    EXPECT_NEAR(std::abs(rho.matrix()(0, 0) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rho.matrix()(0, 1)), 0.0, 1e-15);
    EXPECT_NEAR(rho.purity(), 0.5, 1e-15);

    const auto spatial = reduced_density(s, keep, Observable::kSpatial);
    EXPECT_EQ(spatial.basis()[0], "a1");
    EXPECT_NEAR(spatial.matrix()(0, 0).real(), 0.64, 1e-15);
    EXPECT_NEAR(spatial.matrix()(1, 1).real(), 0.36, 1e-15);
}

TEST(ReducedDensity, BothSlotsOfAPureDofArePure) {
    HyperPairSpec spec;
    spec.pol = hctest::bell_block();
    spec.mom = {0.8, 0.6, 0.0, 0.0};
    const auto s = make_hyper_pair(spec);
    const std::size_t keep[] = {0, 1};
    const auto rho = reduced_density(s, keep, Observable::kPolarization);
    EXPECT_EQ(rho.dimension(), 4u);
    EXPECT_NEAR(rho.purity(), 1.0, 1e-14);
}

TEST(ReducedDensity, RejectsBadSlots) {
    HyperPairSpec spec;
    spec.pol = hctest::bell_block();
    spec.mom = hctest::bell_block();
    const auto s = make_hyper_pair(spec);
    const std::size_t out_of_range[] = {2};
    EXPECT_THROW(reduced_density(s, out_of_range, Observable::kSpatial), InvalidSlotError);
    const std::size_t twice[] = {0, 0};
    EXPECT_THROW(reduced_density(s, twice, Observable::kSpatial), InvalidSlotError);
}

TEST(ReducedDensity, PropertiesOverRandomStates) {
    hyperconc::RandomStream rng(11, 2);
    for (int i = 0; i < 200; ++i) {
        const auto spec = hctest::random_general_spec(rng);
        const auto s = make_hyper_pair(spec);
        const std::size_t keep[] = {0};
        for (auto obs : {Observable::kPolarization, Observable::kSpatial}) {
            const auto rho = reduced_density(s, keep, obs);
            EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
            EXPECT_LT(rho.hermiticity_error(), 1e-14);
            EXPECT_GT(rho.eigenvalues().minCoeff(), -1e-12);
            // purity of a qubit marginal is 1 - C^2/2
            const auto& block = obs == Observable::kPolarization ? spec.pol : spec.mom;
            const double c = hctest::determinant_concurrence(block);
            EXPECT_NEAR(rho.purity(), 1.0 - c * c / 2.0, 1e-12);
        }
    }
}

TEST(TraceDistance, ZeroForEqualAndOneForOrthogonal) {
    const std::vector<std::string> basis{"H", "V"};
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
    h(0, 0) = 1.0;
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(2, 2);
    v(1, 1) = 1.0;
    const DensityMatrix a(basis, h), b(basis, v);
    EXPECT_NEAR(trace_distance(a, a), 0.0, 1e-15);
    EXPECT_NEAR(trace_distance(a, b), 1.0, 1e-15);
    const DensityMatrix other({"a1", "a2"}, h);
    EXPECT_THROW(trace_distance(a, other), BasisMismatchError);
}

}  // namespace
}  // namespace hyperconc

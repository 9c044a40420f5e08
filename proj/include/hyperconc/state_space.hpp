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

// Sparse pure states of a few photons, each photon carrying one polarization
// and one spatial mode label (single occupancy, no bosonic symmetrization).

#ifndef HYPERCONC_STATE_SPACE_HPP_
#define HYPERCONC_STATE_SPACE_HPP_

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace hyperconc {

using Complex = std::complex<double>;

/// Amplitudes with modulus at or below this are dropped from a state.
inline constexpr double kPruneThreshold = 1e-15;
/// Tolerance for accepting user-supplied coefficient blocks as normalized.
inline constexpr double kNormalizationTolerance = 1e-9;

enum class Polarization : std::uint8_t { H = 0, V = 1 };

char polarization_symbol(Polarization p) noexcept;

/// Sorted, duplicate-free set of spatial mode labels. A mode's index is its
/// rank in label order, so two registries with the same labels agree on
/// every index.
class ModeRegistry {
   public:
    static constexpr std::size_t kMaxModes = 127;

    ModeRegistry() = default;
    explicit ModeRegistry(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::uint8_t index) const { return labels_.at(index); }
    std::span<const std::string> labels() const noexcept { return labels_; }
    std::optional<std::uint8_t> find(std::string_view label) const noexcept;
    /// Like find() but throws UnknownModeError.
    std::uint8_t index_of(std::string_view label) const;
    bool contains(std::string_view label) const noexcept { return find(label).has_value(); }

    friend bool operator==(const ModeRegistry&, const ModeRegistry&) = default;

   private:
    std::vector<std::string> labels_;
};

struct Photon {
    Polarization pol = Polarization::H;
    std::uint8_t mode = 0;

    friend bool operator==(const Photon&, const Photon&) = default;
};

/// One basis configuration: a fixed number of photon slots, packed one byte
/// per slot (bit 7 = polarization, bits 0-6 = registry index). Ordering is
/// the packed integer order, which is what keeps iteration deterministic.
class BasisConfig {
   public:
    static constexpr std::size_t kMaxSlots = 8;

    constexpr BasisConfig() = default;

    Photon photon(std::size_t slot) const noexcept {
        const auto byte = static_cast<std::uint8_t>(packed_ >> (8 * slot));
        return Photon{(byte & 0x80u) ? Polarization::V : Polarization::H,
                      static_cast<std::uint8_t>(byte & 0x7fu)};
    }

    BasisConfig with_photon(std::size_t slot, Photon p) const noexcept {
        const std::uint64_t byte =
            (p.pol == Polarization::V ? 0x80u : 0u) | static_cast<std::uint64_t>(p.mode & 0x7fu);
        BasisConfig out;
        out.packed_ = (packed_ & ~(std::uint64_t{0xff} << (8 * slot))) | (byte << (8 * slot));
        return out;
    }

    std::uint64_t packed() const noexcept { return packed_; }

    friend constexpr auto operator<=>(const BasisConfig&, const BasisConfig&) = default;

   private:
    std::uint64_t packed_ = 0;
};

struct Term {
    BasisConfig config;
    Complex amplitude;
};

struct LabeledPhoton {
    Polarization pol = Polarization::H;
    std::string mode;
};

struct LabeledTerm {
    std::vector<LabeledPhoton> photons;
    Complex amplitude;
};

/// Immutable sparse pure state. Terms are sorted by configuration, carry no
/// duplicates and no amplitudes at or below kPruneThreshold. Construction
/// does not renormalize; the protocol operations do.
class PureState {
   public:
    PureState();

    /// Builds a state from arbitrary (unsorted, possibly repeated) terms.
    /// Repeated configurations are summed. Throws OccupancyError when a
    /// surviving term puts two photons in one mode.
    static PureState from_terms(std::shared_ptr<const ModeRegistry> registry,
                                std::size_t slot_count, std::vector<Term> terms);

    /// Builds a state from human-readable terms. The registry is the union of
    /// the labels used and `extra_modes`.
    static PureState from_labeled(std::size_t slot_count, std::span<const LabeledTerm> terms,
                                  std::span<const std::string> extra_modes = {});

    std::size_t slot_count() const noexcept { return slot_count_; }
    const ModeRegistry& registry() const noexcept { return *registry_; }
    const std::shared_ptr<const ModeRegistry>& registry_ptr() const noexcept { return registry_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// Amplitude of a labeled configuration, zero when absent.
    Complex amplitude(std::span<const LabeledPhoton> photons) const;

    double norm_squared() const noexcept;

    PureState scaled(Complex factor) const;
    /// Throws DegenerateStateError when the norm is at or below kPruneThreshold.
    PureState normalized() const;

    /// Terms in the given order are kept; caller guarantees sortedness and
    /// single occupancy (used by projections, which only filter).
    PureState filtered_copy(std::vector<Term> sorted_terms) const;

    /// Registry indices of the modes that slot `slot` occupies in any term.
    std::vector<std::uint8_t> modes_in_slot(std::size_t slot) const;

    std::string to_string() const;

   private:
    PureState(std::shared_ptr<const ModeRegistry> registry, std::size_t slot_count,
              std::vector<Term> terms);

    std::shared_ptr<const ModeRegistry> registry_;
    std::size_t slot_count_ = 0;
    std::vector<Term> terms_;
};

/// Two-qubit coefficient block in the (HH, VV, HV, VH) labeling for
/// polarization, and (first-first, second-second, first-second,
/// second-first) for the two spatial alternatives of each photon.
struct CoefficientBlock {
    Complex alpha;
    Complex beta;
    Complex gamma;
    Complex delta;

    double norm_squared() const noexcept;
    std::array<Complex, 4> as_array() const noexcept { return {alpha, beta, gamma, delta}; }

    friend bool operator==(const CoefficientBlock&, const CoefficientBlock&) = default;
};

struct HyperPairSpec {
    CoefficientBlock pol;
    CoefficientBlock mom;
    std::array<std::string, 2> alice_modes{"a1", "a2"};
    std::array<std::string, 2> bob_modes{"b1", "b2"};

    /// Same coefficients placed on a different set of spatial modes.
    HyperPairSpec on_modes(std::array<std::string, 2> alice, std::array<std::string, 2> bob) const;

    friend bool operator==(const HyperPairSpec&, const HyperPairSpec&) = default;
};

/// Throws NormalizationError (naming the offending block and its squared
/// norm) when either block is off by more than kNormalizationTolerance.
void validate(const HyperPairSpec& spec);

/// Slot 0 is Alice's photon, slot 1 is Bob's.
PureState make_hyper_pair(const HyperPairSpec& spec);

/// Slots of `b` follow those of `a`. Throws ModeCollisionError when the
/// registries share a label.
PureState tensor(const PureState& a, const PureState& b);

double norm(const PureState& s);

/// |<a|b>|. Throws BasisMismatchError when registries or slot counts differ.
double fidelity_up_to_phase(const PureState& a, const PureState& b);

enum class Observable { kPolarization, kSpatial };

/// Density matrix over an explicit ordered basis; basis element labels are
/// kept so two matrices can be checked for compatibility.
class DensityMatrix {
   public:
    DensityMatrix(std::vector<std::string> basis, Eigen::MatrixXcd matrix);

    std::size_t dimension() const noexcept { return basis_.size(); }
    std::span<const std::string> basis() const noexcept { return basis_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

    Complex trace() const { return matrix_.trace(); }
    double hermiticity_error() const;
    Eigen::VectorXd eigenvalues() const;
    double purity() const;

   private:
    std::vector<std::string> basis_;
    Eigen::MatrixXcd matrix_;
};

/// Partial trace keeping only `observable` of the photons in `keep_slots`;
/// everything else (including the other degree of freedom of kept photons)
/// is traced out. Normalized to unit trace. Throws InvalidSlotError.
DensityMatrix reduced_density(const PureState& s, std::span<const std::size_t> keep_slots,
                              Observable observable);

/// Half the trace norm of the difference. Throws BasisMismatchError when the
/// bases differ.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace hyperconc

#endif  // HYPERCONC_STATE_SPACE_HPP_

#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "stirling/constants.hpp"

namespace stirling {

/// Relative tolerance under which two energies count as one degenerate level.
inline constexpr double degeneracy_rel_tol = 1e-12;

/// One energy level of a spectrum.
struct Level {
    double energy;            // J
    std::uint64_t degeneracy; // >= 1
};

/// Infinite square well of the given width.
struct SingleWell {
    double width;  // m
};

/// Well of total width split into `parts` equal wells by parts-1
/// barriers placed on the nodes of the parts-th eigenstate.
struct SymmetricSplit {
    double total_width;  // m
    std::uint32_t parts;
};

/// Set of disjoint infinite wells; the spectrum is the merged multiset of
/// the per-well spectra.
struct UnionOfWells {
    std::vector<double> widths;  // m
};

/// Declarative spectrum description. Construct through the factories so the
/// invariants (positive widths, parts >= 1, non-empty union) are checked.
class SpectrumModel {
public:
    using Variant = std::variant<SingleWell, SymmetricSplit, UnionOfWells>;

    static SpectrumModel single_well(double width);
    static SpectrumModel symmetric_split(double total_width, std::uint32_t parts);
    static SpectrumModel union_of_wells(std::vector<double> widths);

    const Variant& variant() const noexcept { return variant_; }

private:
    explicit SpectrumModel(Variant v) : variant_(std::move(v)) {}
    Variant variant_;
};

/// n-th level of a single infinite well of width L: n^2 pi^2 hbar^2 / (2 m L^2).
double single_well_level(double width, double mass, std::uint64_t n,
                         const PhysicalConstants& constants = codata);

/// Lazily produces the levels of a SpectrumModel in nondecreasing energy
/// order, without a fixed cutoff. Equal energies (to degeneracy_rel_tol) from
/// different wells are coalesced into one Level.
class LevelStream {
public:
    LevelStream(const SpectrumModel& model, double mass,
                const PhysicalConstants& constants = codata);

    Level next();

private:
    struct Well {
        double ground;        // lowest level of this well
        std::uint64_t index;  // next quantum number to emit
        std::uint64_t multiplicity;

        double energy() const {
            const auto n = static_cast<double>(index);
            return ground * n * n;
        }
    };
    std::vector<Well> wells_;
};

/// First `count` levels of the model in nondecreasing energy.
std::vector<Level> enumerate_levels(const SpectrumModel& model, double mass, std::size_t count,
                                    const PhysicalConstants& constants = codata);

struct SymmetricCount {
    std::uint32_t parts = 2;  // N equal wells, N-1 barriers
};

struct AsymmetricSingle {
    double offset;  // m, barrier displacement from the centre
};

/// Geometry of the working medium: a box of width 2a and the barrier layout
/// inserted during the cycle.
struct WellConfig {
    double half_width;  // a, m
    double mass;        // kg
    std::variant<SymmetricCount, AsymmetricSingle> partition = SymmetricCount{};

    /// Throws DomainError if the invariants do not hold.
    void validate() const;

    bool is_symmetric() const { return std::holds_alternative<SymmetricCount>(partition); }
};

/// Spectrum with no barrier: SingleWell{2a}.
SpectrumModel unpartitioned_model(const WellConfig& well);

/// Spectrum with the barriers fully inserted: SymmetricSplit{2a, N} or
/// UnionOfWells{a + eps, a - eps}.
SpectrumModel partitioned_model(const WellConfig& well);

}  // namespace stirling

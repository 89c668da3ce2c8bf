#include "stirling/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(what) + " must be positive and finite, got " +
                          std::to_string(value));
    }
}

bool same_energy(double lhs, double rhs) {
    return std::abs(lhs - rhs) <= degeneracy_rel_tol * std::max(lhs, rhs);
}

}  // namespace

SpectrumModel SpectrumModel::single_well(double width) {
    require_positive(width, "well width");
    return SpectrumModel(SingleWell{width});
}

SpectrumModel SpectrumModel::symmetric_split(double total_width, std::uint32_t parts) {
    require_positive(total_width, "well width");
    if (parts < 1) throw DomainError("symmetric split needs at least one part");
    return SpectrumModel(SymmetricSplit{total_width, parts});
}

SpectrumModel SpectrumModel::union_of_wells(std::vector<double> widths) {
    if (widths.empty()) throw DomainError("union of wells needs at least one well");
    for (double w : widths) require_positive(w, "well width");
    return SpectrumModel(UnionOfWells{std::move(widths)});
}

double single_well_level(double width, double mass, std::uint64_t n,
                         const PhysicalConstants& constants) {
    require_positive(width, "well width");
    require_positive(mass, "mass");
    if (n < 1) throw DomainError("quantum number must be >= 1");
    const double pi_hbar = std::numbers::pi * constants.hbar;
    const double ground = pi_hbar * pi_hbar / (2.0 * mass * width * width);
    const auto nn = static_cast<double>(n);
    return ground * nn * nn;
}

LevelStream::LevelStream(const SpectrumModel& model, double mass,
                         const PhysicalConstants& constants) {
    require_positive(mass, "mass");
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, SingleWell>) {
                wells_.push_back({single_well_level(m.width, mass, 1, constants), 1, 1});
            } else if constexpr (std::is_same_v<T, SymmetricSplit>) {
                // Sub-well width 2a/N: energies (N n)^2 E_1(2a) = n^2 E_1(2a/N).
                const double sub = m.total_width / static_cast<double>(m.parts);
                wells_.push_back({single_well_level(sub, mass, 1, constants), 1, m.parts});
            } else {
                for (double w : m.widths) {
                    wells_.push_back({single_well_level(w, mass, 1, constants), 1, 1});
                }
            }
        },
        model.variant());
}

Level LevelStream::next() {
    double lowest = wells_.front().energy();
    for (const auto& w : wells_) lowest = std::min(lowest, w.energy());

    Level level{lowest, 0};
    for (auto& w : wells_) {
        if (same_energy(w.energy(), lowest)) {
            level.degeneracy += w.multiplicity;
            ++w.index;
        }
    }
    return level;
}

std::vector<Level> enumerate_levels(const SpectrumModel& model, double mass, std::size_t count,
                                    const PhysicalConstants& constants) {
    if (count < 1) throw DomainError("level count must be >= 1");
    LevelStream stream(model, mass, constants);
    std::vector<Level> levels;
    levels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) levels.push_back(stream.next());
    return levels;
}

void WellConfig::validate() const {
    require_positive(half_width, "half width");
    require_positive(mass, "mass");
    if (const auto* sym = std::get_if<SymmetricCount>(&partition)) {
        if (sym->parts < 1) throw DomainError("partition count must be >= 1");
    } else {
        const double eps = std::get<AsymmetricSingle>(partition).offset;
        if (!(eps >= 0.0) || !(eps < half_width)) {
            throw DomainError("barrier offset must satisfy 0 <= eps < a");
        }
    }
}

SpectrumModel unpartitioned_model(const WellConfig& well) {
    well.validate();
    return SpectrumModel::single_well(2.0 * well.half_width);
}

SpectrumModel partitioned_model(const WellConfig& well) {
    well.validate();
    if (const auto* sym = std::get_if<SymmetricCount>(&well.partition)) {
        return SpectrumModel::symmetric_split(2.0 * well.half_width, sym->parts);
    }
    const double eps = std::get<AsymmetricSingle>(well.partition).offset;
    return SpectrumModel::union_of_wells({well.half_width + eps, well.half_width - eps});
}

}  // namespace stirling

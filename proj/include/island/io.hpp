#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "island/asymptotics.hpp"
#include "island/centre_manifold.hpp"
#include "island/compartments.hpp"
#include "island/model.hpp"
#include "island/qssa.hpp"
#include "island/simulate.hpp"

namespace island {

using Json = nlohmann::ordered_json;

// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

Json params_to_json(const ModelParams& params);
Json series_to_json(const TruncatedSeries& series);
Json expansion_to_json(const CentreManifoldExpansion& expansion);
Json qssa_to_json(const QssaExpansion& expansion);
Json divergence_to_json(const DivergenceReport& report);
Json decomposition_to_json(const CompartmentDecomposition& decomposition);
Json law_to_json(const AsymptoticLaw& law);
Json state_to_json(const TruncatedState& state);

std::string trajectory_csv(const TruncatedTrajectory& trajectory);
std::string observables_csv(const ModelParams& params, const TruncatedTrajectory& trajectory);
std::string state_csv_row(const TruncatedState& state);
std::string snapshot_csv(const SimilaritySnapshot& snapshot);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace island

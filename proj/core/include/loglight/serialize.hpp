#pragma once

#include "loglight/bases.hpp"
#include "loglight/domains.hpp"
#include "loglight/fit.hpp"
#include "loglight/laplace.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <vector>

namespace loglight {

using Json = nlohmann::json;

/// Approximant documents carry branch points, rotations, pole data,
/// Hessenberg recurrences, column scalings and coefficients: everything a
/// separate process needs to re-evaluate the fit exactly.
Json to_json(const ReciprocalLogApproximant& g);
ReciprocalLogApproximant approximant_from_json(const Json& j);

Json to_json(const LightningRationalApproximant& r);
LightningRationalApproximant lightning_from_json(const Json& j);

Json to_json(const PlanarDomain& domain);

/// Write-temp-rename; no partial files on failure.
void save_json_atomic(const std::filesystem::path& path, const Json& j);
void save_text_atomic(const std::filesystem::path& path,
                      const std::function<void(std::ostream&)>& writer);

void write_report_csv(std::ostream& os, const ConvergenceReport& report);
void write_error_curve_csv(std::ostream& os, const std::vector<ErrorCurvePoint>& curve);
void write_grid_csv(std::ostream& os, const ClusteredGrid& grid);
void write_field_csv(std::ostream& os, const std::vector<FieldSample>& field);

}  // namespace loglight

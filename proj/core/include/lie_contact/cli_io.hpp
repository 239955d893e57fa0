#pragma once

// Problem configuration, subcommand dispatch and artifact emission
// (CSV trajectories, SVG figures, JSON reports).

#include "lie_contact/cone_geometry.hpp"
#include "lie_contact/lie_core.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lie_contact {

struct OutputSpec {
  std::string kind;  // csv | svg | json
  std::string path;
};

struct SeedSpec {
  std::optional<Vec> alpha;
  std::optional<Mat> g;            // empty: identity
  std::optional<double> theta0;    // contact angle of a wheel seed
  double s0 = 0.0;                 // arc-length offset (se2)
  std::optional<Vec2> x0;          // base point (hom2)
};

struct FrontSpec {
  std::string field = "wheel";  // wheel | disc
  double disc_radius = 1.0;
  Vec2 center = Vec2::Zero();
  double radius = 0.5;
  int samples = 128;
  double dt = 1e-2;
  int steps = 100;
};

struct InvoluteSpec {
  double theta0 = 0.0;
  double s0 = 0.0;
  double theta_end = 6.283185307179586;
};

struct ProblemConfig {
  std::string group;
  Algebra algebra = make_algebra("se2");
  std::optional<WheelCurve> wheel;
  std::optional<SphericalWheel> spherical_wheel;
  SeedSpec seed;
  double T = 10.0;
  double h = 1e-3;
  int samples = 512;
  std::string subgroup;
  std::vector<OutputSpec> outputs;
  std::optional<Vec> lambda;
  std::optional<int> ambient_dim;
  int circuits = 40;
  FrontSpec front;
  InvoluteSpec involute;
};

/// Validated config with defaults h = 1e-3, T = 10, samples = 512. Throws
/// UnknownGroup, DimensionMismatch, NonConvexWheel or ValidationError.
ProblemConfig parse_config(const std::string& text);
ProblemConfig load_config(const std::string& path);

WheelCurve parse_wheel(const nlohmann::json& j);
SphericalWheel parse_spherical_wheel(const nlohmann::json& j);

/// Cone for the configured group and wheel.
ConeSpec config_cone(const ProblemConfig& cfg);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Comma separated, header row, 17 significant digits, LF line endings.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
std::string format_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows);
CsvTable read_csv(const std::string& path);

struct ViewBox {
  double x = 0.0;
  double y = 0.0;
  double width = 1.0;
  double height = 1.0;
};

/// Bounding box of the curves with a 5% margin (y is flipped in the SVG).
ViewBox fit_view_box(const std::vector<std::vector<Vec2>>& polylines);
std::string format_svg(const std::vector<std::vector<Vec2>>& polylines,
                       const std::optional<ViewBox>& view = std::nullopt);
void write_svg(const std::string& path, const std::vector<std::vector<Vec2>>& polylines,
               const std::optional<ViewBox>& view = std::nullopt);

void write_json(const std::string& path, const nlohmann::json& j);

std::vector<std::string> subcommands();

/// Output directory: `requested` if nonempty, else $LIE_CONTACT_OUT, else ".".
std::string resolve_output_dir(const std::string& requested);

/// Runs a subcommand and writes its artifacts into `out_dir`. Returns 0 on
/// success, 1 on validation errors, 2 on numerical failures or failed checks.
int run(const std::string& subcommand, const ProblemConfig& cfg, const std::string& out_dir,
        std::ostream& log);

}  // namespace lie_contact

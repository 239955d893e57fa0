#include "lie_contact/cli_io.hpp"

#include "lie_contact/errors.hpp"
#include "lie_contact/lp_dynamics.hpp"
#include "lie_contact/reduction.hpp"
#include "lie_contact/verify.hpp"
#include "lie_contact/worked_examples.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace lie_contact {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

Vec to_vec(const json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be a number list");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ValidationError(what + " must contain numbers only");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Vec2 to_vec2(const json& j, const std::string& what) {
  const Vec v = to_vec(j, what);
  if (v.size() != 2) throw DimensionMismatch(what + " must have two entries");
  return {v(0), v(1)};
}

json from_vec(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

double number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ValidationError(std::string(key) + " must be a number");
  return j.at(key).get<double>();
}

int integer(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw ValidationError(std::string(key) + " must be an integer");
  return j.at(key).get<int>();
}

Algebra parse_custom_algebra(const json& j) {
  if (!j.is_object()) throw ValidationError("algebra must be an object");
  const std::string name = j.value("name", std::string("custom"));
  const int dim = integer(j, "dim", 0);
  if (dim < 1) throw ValidationError("custom algebra needs dim >= 1");
  const Vec c = to_vec(j.at("constants"), "algebra.constants");
  if (c.size() != static_cast<Eigen::Index>(dim) * dim * dim) {
    throw DimensionMismatch("algebra.constants must have dim^3 entries");
  }
  return Algebra(name, dim, std::vector<double>(c.data(), c.data() + c.size()), {}, GroupKind::kCustom);
}

std::string join_path(const std::string& dir, const std::string& path) {
  const fs::path p(path);
  return p.is_absolute() ? path : (fs::path(dir) / p).string();
}

std::string default_subgroup(const Algebra& alg) {
  const std::string& n = alg.name();
  if (n == "se2") return "rotations";
  if (n == "so3") return "axis_rotations";
  if (n.rfind("hom", 0) == 0) return "dilations";
  throw ValidationError("no quotient available for " + n);
}

TrivializedState build_seed(const ProblemConfig& cfg, const ConeSpec& cone) {
  const Algebra& alg = cone.algebra();
  const SeedSpec& s = cfg.seed;
  if (s.alpha) {
    const Vec a = *s.alpha / s.alpha->norm();
    const GroupElement g = s.g ? GroupElement{*s.g} : alg.identity();
    if (std::abs(cone.value(Momentum{a})) > 1e-8) {
      throw ValidationError("seed alpha is not on the equation surface f = 0");
    }
    return normalized_state({g, Momentum{a}}, cone);
  }
  const double theta = s.theta0.value_or(0.0);
  if (alg.name() == "se2") return involute_seed(cone, theta, s.s0);
  if (alg.name() == "hom2") return homothety_seed(cone, s.x0.value_or(Vec2::Zero()), theta);
  if (alg.name() == "so3") return spherical_seed(cone, theta);
  throw ValidationError("group " + alg.name() + " needs an explicit seed alpha");
}

std::vector<Vec2> as_points(const std::vector<Vec>& q) {
  std::vector<Vec2> out;
  for (const Vec& v : q) out.emplace_back(v(0), v(1));
  return out;
}

std::vector<Vec2> sample_wheel(const WheelCurve& w, int samples) {
  std::vector<Vec2> out;
  for (int i = 0; i <= samples; ++i) out.push_back(w.point(2.0 * std::numbers::pi * i / samples));
  return out;
}

struct Artifacts {
  std::string dir;
  const std::vector<OutputSpec>& requested;

  // Path for an artifact of `kind`, or empty when the config lists outputs and
  // this kind is not among them.
  std::string path(const std::string& kind, const std::string& fallback) const {
    if (requested.empty()) return join_path(dir, fallback);
    for (const OutputSpec& o : requested)
      if (o.kind == kind) return join_path(dir, o.path);
    return {};
  }
};

int cmd_classify(const ProblemConfig& cfg, const Artifacts& out, std::ostream& log) {
  Vec lam;
  if (cfg.lambda) {
    lam = *cfg.lambda;
  } else {
    const ConeSpec cone = config_cone(cfg);
    lam = l_of_x(build_seed(cfg, cone), cone.algebra()).lambda.coords;
  }
  const ReductionReport rep = classify({Momentum{lam}}, cfg.algebra, cfg.ambient_dim.value_or(-1));
  json j;
  j["algebra"] = rep.algebra;
  j["lambda"] = from_vec(rep.lambda);
  j["stabilizer_dim"] = rep.stabilizer_dim();
  j["gl_dim"] = rep.gl_dim();
  j["residual_dim"] = rep.residual_dim;
  j["case"] = rep.case_tag;
  j["ambient_dim"] = rep.ambient_dim;
  j["reduced_dim"] = rep.reduced_dim;
  j["stabilizer_basis"] = json::array();
  for (const auto& b : rep.stabilizer_basis) j["stabilizer_basis"].push_back(from_vec(b.coords));
  j["gl_basis"] = json::array();
  for (const auto& b : rep.gl_basis) j["gl_basis"].push_back(from_vec(b.coords));
  if (const std::string p = out.path("json", "classify.json"); !p.empty()) write_json(p, j);
  log << j.dump(2) << "\n";
  return 0;
}

int cmd_integrate(const ProblemConfig& cfg, const Artifacts& out, std::ostream& log) {
  const ConeSpec cone = config_cone(cfg);
  const Algebra& alg = cone.algebra();
  const Trajectory traj = lp_integrate(build_seed(cfg, cone), cone, cfg.T, cfg.h);
  const SubgroupSpec sub = make_subgroup(cfg.subgroup.empty() ? default_subgroup(alg) : cfg.subgroup, alg);
  const std::vector<Vec> q = project(traj, sub, alg);

  std::vector<std::string> header{"t"};
  const auto n = alg.rep_dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) header.push_back("g" + std::to_string(r) + std::to_string(c));
  for (int i = 0; i < alg.dim(); ++i) header.push_back("alpha" + std::to_string(i));
  header.insert(header.end(), {"f", "momentum_drift"});
  for (Eigen::Index i = 0; i < q.front().size(); ++i) header.push_back("q" + std::to_string(i));

  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    std::vector<double> row{traj.times[k]};
    const Mat& g = traj.states[k].g.matrix;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) row.push_back(g(r, c));
    const Vec& a = traj.states[k].alpha.coords;
    row.insert(row.end(), a.data(), a.data() + a.size());
    row.push_back(cone.value(traj.states[k].alpha));
    row.push_back(traj.momentum_drift[k]);
    row.insert(row.end(), q[k].data(), q[k].data() + q[k].size());
    rows.push_back(std::move(row));
  }
  if (const std::string p = out.path("csv", "trajectory.csv"); !p.empty()) write_csv(p, header, rows);

  if (const std::string p = out.path("svg", "projection.svg"); !p.empty()) {
    std::vector<std::vector<Vec2>> curves{as_points(q)};
    if (cone.planar_wheel() && alg.name() == "se2" && sub.kind == SubgroupKind::kRotations) {
      curves.insert(curves.begin(), sample_wheel(*cone.planar_wheel(), cfg.samples));
    }
    write_svg(p, curves);
    if (alg.name() == "se2") {
      // the other half of the duality pair: the same characteristic in line space
      const DualityPair pair = duality_pair(traj, alg);
      write_svg(join_path(fs::path(p).parent_path().string(), "lines.svg"), {as_points(pair.lines)});
    }
  }

  json summary;
  summary["group"] = alg.name();
  summary["steps"] = traj.states.size() - 1;
  summary["max_f_drift"] = traj.max_f_drift;
  summary["max_momentum_drift"] = traj.max_momentum_drift;
  summary["max_membership_residual"] = traj.max_membership_residual;
  summary["halvings"] = traj.halvings;
  if (const std::string p = out.path("json", "summary.json"); !p.empty()) write_json(p, summary);
  log << summary.dump(2) << "\n";
  return 0;
}

int cmd_involute(const ProblemConfig& cfg, const Artifacts& out, std::ostream& log) {
  if (!cfg.wheel) throw ValidationError("involute needs a planar wheel");
  const InvoluteSpec& s = cfg.involute;
  const PlaneCurve c = involute(*cfg.wheel, s.theta0, s.s0, s.theta_end, cfg.samples);
  const std::vector<Flag> flags = flag_lift(c);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    rows.push_back({c.params[i], c.points[i].x(), c.points[i].y(), c.velocities[i].x(), c.velocities[i].y(),
                    flags[i].line_angle});
  }
  if (const std::string p = out.path("csv", "involute.csv"); !p.empty()) {
    write_csv(p, {"theta", "x", "y", "vx", "vy", "line_angle"}, rows);
  }
  if (const std::string p = out.path("svg", "involute.svg"); !p.empty()) {
    write_svg(p, {sample_wheel(*cfg.wheel, cfg.samples), c.points});
  }
  log << "involute: " << c.points.size() << " samples\n";
  return 0;
}

int cmd_front(const ProblemConfig& cfg, const Artifacts& out, std::ostream& log) {
  const FrontSpec& f = cfg.front;
  DiagramField field;
  if (f.field == "disc") {
    field = disc_diagram_field(f.disc_radius);
  } else {
    if (!cfg.wheel) throw ValidationError("wheel front needs a planar wheel");
    field = wheel_diagram_field(*cfg.wheel);
  }
  const FrontPolyline front0 = circle_front(field, f.center, f.radius, f.samples);
  const HuygensResult res = huygens_front(front0, field, f.dt, f.steps);

  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < res.fronts.size(); ++k) {
    for (std::size_t i = 0; i < res.fronts[k].size(); ++i) {
      const FrontSample& s = res.fronts[k][i];
      rows.push_back({static_cast<double>(k), f.dt * static_cast<double>(k), static_cast<double>(i), s.x.x(),
                      s.x.y(), s.p.x(), s.p.y()});
    }
  }
  if (const std::string p = out.path("csv", "front.csv"); !p.empty()) {
    write_csv(p, {"step", "t", "sample", "x", "y", "px", "py"}, rows);
  }
  if (const std::string p = out.path("svg", "front.svg"); !p.empty()) {
    std::vector<std::vector<Vec2>> curves;
    if (cfg.wheel && f.field != "disc") curves.push_back(sample_wheel(*cfg.wheel, cfg.samples));
    const std::size_t stride = std::max<std::size_t>(1, res.fronts.size() / 10);
    for (std::size_t k = 0; k < res.fronts.size(); k += stride) {
      std::vector<Vec2> pts;
      for (const FrontSample& s : res.fronts[k]) pts.push_back(s.x);
      pts.push_back(res.fronts[k].front().x);
      curves.push_back(std::move(pts));
    }
    write_svg(p, curves);
  }
  json summary;
  summary["fronts"] = res.fronts.size();
  summary["caustic_steps"] = res.caustic_steps;
  if (const std::string p = out.path("json", "front.json"); !p.empty()) write_json(p, summary);
  log << "front: " << res.fronts.size() << " fronts, " << res.caustic_steps.size() << " steps flagged as caustic\n";
  return 0;
}

int cmd_holonomy(const ProblemConfig& cfg, const Artifacts& out, std::ostream& log) {
  if (!cfg.spherical_wheel) throw ValidationError("holonomy needs a spherical_circle wheel");
  const HolonomyResult res = so3_holonomy(*cfg.spherical_wheel, cfg.circuits, cfg.h);
  json j;
  j["angle_axis"] = {res.angle, res.axis.x(), res.axis.y(), res.axis.z()};
  j["closure"] = res.closure;
  j["closure_order"] = res.closure_order ? json(*res.closure_order) : json(nullptr);
  j["circuits"] = cfg.circuits;
  j["circuit_time"] = res.circuit_time;
  j["perimeter"] = cfg.spherical_wheel->perimeter();
  j["closest_power_distance"] = res.closest_power_distance;
  if (const std::string p = out.path("json", "holonomy.json"); !p.empty()) write_json(p, j);
  log << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Artifacts& out, std::ostream& log) {
  const std::vector<CheckResult> results = run_acceptance_suite();
  print_results(results, log);
  json j = json::array();
  bool all = true;
  for (const CheckResult& r : results) {
    j.push_back({{"name", r.name}, {"measured", r.measured}, {"threshold", r.threshold}, {"pass", r.pass},
                 {"seconds", r.seconds}, {"detail", r.detail}});
    all = all && r.pass;
  }
  if (const std::string p = out.path("json", "verify.json"); !p.empty()) write_json(p, j);
  return all ? 0 : 2;
}

}  // namespace

WheelCurve parse_wheel(const json& j) {
  const std::string type = j.value("type", std::string());
  if (type == "circle") {
    const Vec2 c = j.contains("center") ? to_vec2(j.at("center"), "wheel.center") : Vec2::Zero();
    const double r = number(j, "r", 1.0);
    if (!(r > 0.0)) throw NonConvexWheel("circle radius must be positive");
    return WheelCurve::circle(r, c);
  }
  if (type == "fourier") {
    const Vec a = to_vec(j.at("cos"), "wheel.cos");
    const Vec b = j.contains("sin") ? to_vec(j.at("sin"), "wheel.sin") : Vec(Vec::Zero(a.size()));
    return WheelCurve(std::vector<double>(a.data(), a.data() + a.size()),
                      std::vector<double>(b.data(), b.data() + b.size()));
  }
  throw ValidationError("unknown planar wheel type '" + type + "'");
}

SphericalWheel parse_spherical_wheel(const json& j) {
  const Vec axis = j.contains("axis") ? to_vec(j.at("axis"), "wheel.axis") : Vec(Vec3::UnitZ());
  if (axis.size() != 3) throw DimensionMismatch("spherical wheel axis must have three entries");
  return SphericalWheel(Vec3(axis(0), axis(1), axis(2)), number(j, "rho", 0.5235987755982988));
}

ProblemConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config must be a JSON object");

  try {
    ProblemConfig cfg;
    if (j.contains("algebra")) {
      cfg.algebra = parse_custom_algebra(j.at("algebra"));
      cfg.group = cfg.algebra.name();
    } else {
      if (!j.contains("group") || !j.at("group").is_string()) throw ValidationError("config needs a group name");
      cfg.group = j.at("group").get<std::string>();
      cfg.algebra = make_algebra(cfg.group);
    }
    const int dim = cfg.algebra.dim();

    if (j.contains("wheel")) {
      const json& w = j.at("wheel");
      if (w.value("type", std::string()) == "spherical_circle") {
        cfg.spherical_wheel = parse_spherical_wheel(w);
      } else {
        cfg.wheel = parse_wheel(w);
      }
    }

    if (j.contains("seed")) {
      const json& s = j.at("seed");
      if (s.contains("alpha")) {
        cfg.seed.alpha = to_vec(s.at("alpha"), "seed.alpha");
        if (cfg.seed.alpha->size() != dim) throw DimensionMismatch("seed.alpha length must equal the algebra dimension");
        if (!(cfg.seed.alpha->norm() > 0.0)) throw ValidationError("seed.alpha must be nonzero");
      }
      if (s.contains("g") && !(s.at("g").is_string() && s.at("g").get<std::string>() == "identity")) {
        const json& rows = s.at("g");
        if (!rows.is_array()) throw ValidationError("seed.g must be \"identity\" or a list of rows");
        const auto n = static_cast<Eigen::Index>(rows.size());
        if (!cfg.algebra.has_representation() || n != cfg.algebra.rep_dim()) {
          throw DimensionMismatch("seed.g must be a square matrix of the representation size");
        }
        Mat g(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
          const Vec row = to_vec(rows[static_cast<std::size_t>(r)], "seed.g row");
          if (row.size() != n) throw DimensionMismatch("seed.g must be square");
          g.row(r) = row.transpose();
        }
        if (cfg.algebra.membership_residual(GroupElement{g}) > 1e-8) {
          throw ValidationError("seed.g is not an element of " + cfg.group);
        }
        cfg.seed.g = g;
      }
      if (s.contains("theta0")) cfg.seed.theta0 = number(s, "theta0", 0.0);
      cfg.seed.s0 = number(s, "s0", 0.0);
      if (s.contains("x0")) cfg.seed.x0 = to_vec2(s.at("x0"), "seed.x0");
    }

    if (j.contains("integrator")) {
      const json& it = j.at("integrator");
      cfg.T = number(it, "T", cfg.T);
      cfg.h = number(it, "h", cfg.h);
    }
    if (!(cfg.h > 0.0)) throw ValidationError("integrator.h must be positive");
    if (!(cfg.T > 0.0)) throw ValidationError("integrator.T must be positive");

    cfg.samples = integer(j, "samples", cfg.samples);
    if (cfg.samples < 3) throw ValidationError("samples must be at least 3");
    cfg.subgroup = j.value("subgroup", std::string());
    if (j.contains("outputs")) {
      for (const json& o : j.at("outputs")) {
        OutputSpec spec{o.at("kind").get<std::string>(), o.at("path").get<std::string>()};
        if (spec.kind != "csv" && spec.kind != "svg" && spec.kind != "json") {
          throw ValidationError("output kind must be csv, svg or json");
        }
        cfg.outputs.push_back(spec);
      }
    }
    if (j.contains("lambda")) {
      cfg.lambda = to_vec(j.at("lambda"), "lambda");
      if (cfg.lambda->size() != dim) throw DimensionMismatch("lambda length must equal the algebra dimension");
      if (!(cfg.lambda->norm() > 0.0)) throw ValidationError("lambda must be nonzero");
    }
    if (j.contains("ambient_dim")) cfg.ambient_dim = integer(j, "ambient_dim", 0);
    cfg.circuits = integer(j, "circuits", cfg.circuits);
    if (cfg.circuits < 1) throw ValidationError("circuits must be positive");

    if (j.contains("front")) {
      const json& f = j.at("front");
      cfg.front.field = f.value("field", cfg.front.field);
      if (cfg.front.field != "wheel" && cfg.front.field != "disc") {
        throw ValidationError("front.field must be wheel or disc");
      }
      cfg.front.disc_radius = number(f, "disc_radius", cfg.front.disc_radius);
      if (f.contains("center")) cfg.front.center = to_vec2(f.at("center"), "front.center");
      cfg.front.radius = number(f, "radius", cfg.front.radius);
      cfg.front.samples = integer(f, "samples", cfg.front.samples);
      cfg.front.dt = number(f, "dt", cfg.front.dt);
      cfg.front.steps = integer(f, "steps", cfg.front.steps);
    }
    if (j.contains("involute")) {
      const json& iv = j.at("involute");
      cfg.involute.theta0 = number(iv, "theta0", cfg.involute.theta0);
      cfg.involute.s0 = number(iv, "s0", cfg.involute.s0);
      cfg.involute.theta_end = number(iv, "theta_end", cfg.involute.theta_end);
    }
    return cfg;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed config: ") + e.what());
  }
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

ConeSpec config_cone(const ProblemConfig& cfg) {
  const std::string& g = cfg.algebra.name();
  if (g == "so3") {
    if (!cfg.spherical_wheel) throw ValidationError("so3 needs a spherical_circle wheel");
    return cone_from_wheel(*cfg.spherical_wheel, cfg.algebra);
  }
  if (g == "se2" || g == "hom2") {
    if (!cfg.wheel) throw ValidationError(g + " needs a planar wheel");
    return cone_from_wheel(*cfg.wheel, cfg.algebra, 0);
  }
  throw ValidationError("no cone construction for group " + g);
}

std::string format_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  char buf[32];
  for (const auto& row : rows) {
    if (row.size() != header.size()) throw ValidationError("CSV rows must match the header width");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  const std::string text = format_csv(header, rows);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot write " + path);
  os << text;
  if (!os) throw IoError("write failed for " + path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  CsvTable t;
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  if (!std::getline(in, line)) throw IoError("empty CSV " + path);
  t.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const std::string& c : split(line)) {
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      if (end == c.c_str()) throw IoError("bad number '" + c + "' in " + path);
      row.push_back(v);
    }
    if (row.size() != t.header.size()) throw IoError("ragged row in " + path);
    t.rows.push_back(std::move(row));
  }
  return t;
}

ViewBox fit_view_box(const std::vector<std::vector<Vec2>>& polylines) {
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  for (const auto& pl : polylines)
    for (const Vec2& p : pl) {
      x0 = std::min(x0, p.x());
      x1 = std::max(x1, p.x());
      y0 = std::min(y0, -p.y());
      y1 = std::max(y1, -p.y());
    }
  if (!(x1 >= x0)) return {};
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double m = 0.05 * span;
  return {x0 - m, y0 - m, x1 - x0 + 2.0 * m, y1 - y0 + 2.0 * m};
}

std::string format_svg(const std::vector<std::vector<Vec2>>& polylines, const std::optional<ViewBox>& view) {
  static const char* colors[] = {"#1f3b73", "#b5402a", "#2e7d32", "#6a1b9a", "#c17900", "#00838f"};
  const ViewBox vb = view.value_or(fit_view_box(polylines));
  const double stroke = 0.004 * std::max(vb.width, vb.height);
  std::ostringstream os;
  os.precision(10);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << vb.x << ' ' << vb.y << ' ' << vb.width << ' '
     << vb.height << "\">\n";
  for (std::size_t k = 0; k < polylines.size(); ++k) {
    os << "  <polyline fill=\"none\" stroke=\"" << colors[k % 6] << "\" stroke-width=\"" << stroke
       << "\" points=\"";
    for (std::size_t i = 0; i < polylines[k].size(); ++i) {
      if (i) os << ' ';
      os << polylines[k][i].x() << ',' << -polylines[k][i].y();
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_svg(const std::string& path, const std::vector<std::vector<Vec2>>& polylines,
               const std::optional<ViewBox>& view) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot write " + path);
  os << format_svg(polylines, view);
  if (!os) throw IoError("write failed for " + path);
}

void write_json(const std::string& path, const json& j) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot write " + path);
  os << j.dump(2) << '\n';
  if (!os) throw IoError("write failed for " + path);
}

std::vector<std::string> subcommands() { return {"classify", "integrate", "involute", "front", "holonomy", "verify"}; }

std::string resolve_output_dir(const std::string& requested) {
  if (!requested.empty()) return requested;
  if (const char* env = std::getenv("LIE_CONTACT_OUT"); env && *env) return env;
  return ".";
}

int run(const std::string& subcommand, const ProblemConfig& cfg, const std::string& out_dir, std::ostream& log) {
  try {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
    const Artifacts out{out_dir, cfg.outputs};
    if (subcommand == "classify") return cmd_classify(cfg, out, log);
    if (subcommand == "integrate") return cmd_integrate(cfg, out, log);
    if (subcommand == "involute") return cmd_involute(cfg, out, log);
    if (subcommand == "front") return cmd_front(cfg, out, log);
    if (subcommand == "holonomy") return cmd_holonomy(cfg, out, log);
    if (subcommand == "verify") return cmd_verify(out, log);
    throw ValidationError("unknown subcommand '" + subcommand + "'");
  } catch (const NumericalError& e) {
    log << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lie_contact

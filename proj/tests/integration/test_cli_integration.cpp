#include "lie_contact/cli_io.hpp"
#include "lie_contact/curves.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path kConfigs = LIE_CONTACT_CONFIGS;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("lie_contact_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int cli(const std::string& args) {
  const std::string cmd = std::string("\"") + LIE_CONTACT_CLI + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path p = dir / "config.json";
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("every subcommand runs on the shipped configs") {
  const fs::path out = scratch("shipped");
  CHECK(cli("integrate --config " + (kConfigs / "se2_circle.json").string() + " --out " + out.string()) == 0);
  CHECK(cli("integrate --config " + (kConfigs / "so3_symmetric.json").string() + " --out " + out.string()) == 0);
  CHECK(cli("integrate --config " + (kConfigs / "hom2.json").string() + " --out " + out.string()) == 0);
  CHECK(cli("involute --config " + (kConfigs / "se2_two_harmonic.json").string() + " --out " + out.string()) == 0);
  CHECK(cli("front --config " + (kConfigs / "se2_two_harmonic.json").string() + " --out " + out.string()) == 0);
  CHECK(cli("front --config " + (kConfigs / "front_disc.json").string() + " --out " + out.string()) == 0);
  CHECK(cli("holonomy --config " + (kConfigs / "so3_symmetric.json").string() + " --out " + out.string()) == 0);
  CHECK(cli("holonomy --config " + (kConfigs / "so3_irrational.json").string() + " --out " + out.string()) == 0);
  for (const char* c : {"classify_so3.json", "classify_sl2_borel.json", "classify_se2_ideal.json",
                        "custom_heisenberg.json"}) {
    CAPTURE(c);
    CHECK(cli("classify --config " + (kConfigs / c).string() + " --out " + out.string()) == 0);
  }
  for (const char* f : {"trajectory.csv", "projection.svg", "summary.json", "involute.csv", "front.svg",
                        "holonomy.json", "classify.json"}) {
    CAPTURE(f);
    CHECK(fs::exists(out / f));
  }
}

TEST_CASE("holonomy closure of the shipped spherical wheels") {
  const fs::path a = scratch("holonomy_a");
  const fs::path b = scratch("holonomy_b");
  REQUIRE(cli("holonomy --config " + (kConfigs / "so3_symmetric.json").string() + " --out " + a.string()) == 0);
  REQUIRE(cli("holonomy --config " + (kConfigs / "so3_irrational.json").string() + " --out " + b.string()) == 0);
  const auto ja = nlohmann::json::parse(slurp(a / "holonomy.json"));
  const auto jb = nlohmann::json::parse(slurp(b / "holonomy.json"));
  CHECK(ja.at("closure") == true);
  CHECK(jb.at("closure") == false);
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch("codes");
  CHECK(cli("classify --config " + write_config(dir, R"({"group":"e8"})").string() + " --out " + dir.string()) == 1);
  CHECK(cli("integrate --config " + write_config(dir, "{ not json").string() + " --out " + dir.string()) == 1);
  CHECK(cli("integrate --config " + (dir / "absent.json").string()) == 1);
  CHECK(cli("") == 1);
  // zero-speed interior point of the involute: a numerical failure
  const fs::path bad = write_config(
      dir, R"({"group":"se2","wheel":{"type":"circle","r":1.0},"samples":3,)"
           R"("involute":{"theta0":0.0,"s0":1.0,"theta_end":2.0}})");
  CHECK(cli("involute --config " + bad.string() + " --out " + dir.string()) == 2);
}

TEST_CASE("outputs are deterministic and readable") {
  const fs::path a = scratch("det_a");
  const fs::path b = scratch("det_b");
  const std::string cfg = (kConfigs / "se2_two_harmonic.json").string();
  REQUIRE(cli("integrate --config " + cfg + " --out " + a.string()) == 0);
  REQUIRE(cli("integrate --config " + cfg + " --out " + b.string()) == 0);
  const std::string ta = slurp(a / "trajectory.csv");
  CHECK(!ta.empty());
  CHECK(ta == slurp(b / "trajectory.csv"));

  const lie_contact::CsvTable t = lie_contact::read_csv((a / "trajectory.csv").string());
  CHECK(lie_contact::format_csv(t.header, t.rows) == ta);
}

TEST_CASE("the output directory falls back to the environment") {
  const fs::path dir = scratch("env");
  const std::string cmd = "LIE_CONTACT_OUT=" + dir.string() + " ";
  const int status = std::system((cmd + "\"" + LIE_CONTACT_CLI + "\" classify --config " +
                                  (kConfigs / "classify_so3.json").string() + " > /dev/null 2>&1")
                                     .c_str());
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(fs::exists(dir / "classify.json"));
}

TEST_CASE("homothety extremals from the CLI are straight") {
  const fs::path dir = scratch("hom2");
  REQUIRE(cli("integrate --config " + (kConfigs / "hom2.json").string() + " --out " + dir.string()) == 0);
  const lie_contact::CsvTable t = lie_contact::read_csv((dir / "trajectory.csv").string());
  const auto col = [&](const std::string& name) {
    const auto it = std::find(t.header.begin(), t.header.end(), name);
    REQUIRE(it != t.header.end());
    return static_cast<std::size_t>(it - t.header.begin());
  };
  const std::size_t qx = col("q0");
  const std::size_t qy = col("q1");
  lie_contact::Polyline line;
  for (const auto& r : t.rows) line.push_back(lie_contact::Vec2(r[qx], r[qy]));
  double worst = 0.0;
  const lie_contact::Vec a = line.front();
  const lie_contact::Vec d = (line.back() - a).normalized();
  for (const auto& p : line) {
    const lie_contact::Vec r = p - a;
    worst = std::max(worst, std::abs(r(0) * d(1) - r(1) * d(0)));
  }
  CHECK(worst <= 1e-10);
}

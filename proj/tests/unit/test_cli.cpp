#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "common.hpp"
#include "doctest.h"
#include "nlft/io.hpp"

using namespace nlft;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation invoke(std::vector<std::string> args)
{
  args.insert(args.begin(), "nlft2d");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json small_config(const std::filesystem::path& dir)
{
  return {{"grid", {{"n", 32}, {"h", 0.625}}},
          {"kgrid", {{"m", 16}, {"dk", pi / 20.0}}},
          {"potential", {{"kind", "gaussian"}, {"amplitude", 0.5}}},
          {"output_dir", (dir / "out").string()}};
}

std::string write_config(const std::filesystem::path& dir, const json& j, const std::string& name = "cfg.json")
{
  const auto path = dir / name;
  std::ofstream(path) << j.dump();
  return path.string();
}

}  // namespace

TEST_SUITE("cli")
{
  TEST_CASE("configuration parsing is strict")
  {
    CHECK_THROWS_AS(cli::RunConfig::from_json({{"grd", {{"n", 32}}}}), cli::ConfigError);
    CHECK_THROWS_AS(cli::RunConfig::from_json({{"grid", {{"n", 32}, {"spacing", 1.0}}}}), cli::ConfigError);
    CHECK_THROWS_AS(cli::RunConfig::from_json({{"grid", {{"n", "big"}}}}), cli::ConfigError);
    CHECK_THROWS_AS(cli::RunConfig::from_json({{"evolution", {{"mode", "fast"}}}}), cli::ConfigError);
    CHECK_THROWS_AS(cli::RunConfig::from_json({{"potential", {{"shape", "ring"}}}}), cli::ConfigError);
    const auto c = cli::RunConfig::from_json({{"seed", "0x10"}, {"solver", {{"method", "neumann"}}}});
    CHECK(c.seed == 16);
    CHECK(c.solver.method == Method::neumann);
    const auto again = cli::RunConfig::from_json(c.to_json());
    CHECK(again.to_json() == c.to_json());
  }

  TEST_CASE("overrides")
  {
    json doc = json::object();
    cli::apply_override(doc, "grid.n=128");
    cli::apply_override(doc, "potential.kind=ring");
    cli::apply_override(doc, "evolution.times=[0.5,1]");
    CHECK(doc["grid"]["n"] == 128);
    CHECK(doc["potential"]["kind"] == "ring");
    CHECK(doc["evolution"]["times"].size() == 2);
    CHECK_THROWS_AS(cli::apply_override(doc, "novalue"), cli::ConfigError);
    CHECK_THROWS_AS(cli::apply_override(doc, "grid.n.deeper=1"), cli::ConfigError);
  }

  TEST_CASE("exit codes")
  {
    const auto dir = testing::scratch_dir("cli");
    const auto cfg = write_config(dir, small_config(dir));

    CHECK(invoke({"forward"}).code == cli::config_error);
    CHECK(invoke({"transmogrify", "--config", cfg}).code == cli::config_error);
    CHECK(invoke({"forward", "--config", (dir / "absent.json").string()}).code == cli::config_error);
    CHECK(invoke({"forward", "--config", cfg, "--set", "grid.colour=1"}).code == cli::config_error);
    CHECK(invoke({"evolve", "--config", cfg, "--set", "evolution.dt=1"}).code == cli::config_error);

    const Invocation fwd = invoke({"forward", "--config", cfg, "--threads", "1"});
    REQUIRE(fwd.code == cli::ok);
    const json report = json::parse(fwd.out);
    CHECK(report["holes"] == 0);
    CHECK(std::filesystem::exists(dir / "out" / "s.nlf2"));
    CHECK(std::filesystem::exists(dir / "out" / "s.csv"));

    const auto stem = (dir / "out" / "s").string();
    const Invocation inv = invoke({"inverse", "--config", cfg, "--set", "inputs=[\"" + stem + "\"]", "--set",
                                   "output_dir=\"" + (dir / "inv").string() + "\""});
    CHECK(inv.code == cli::ok);

    CHECK(invoke({"inverse", "--config", cfg, "--set", "inputs=[\"" + (dir / "nothing").string() + "\"]"}).code ==
          cli::bad_input);
    std::ofstream(dir / "junk.nlf2") << "not a field";
    CHECK(invoke({"compare", "--config", cfg, "--set",
                  "inputs=[\"" + (dir / "junk.nlf2").string() + "\",\"" + (dir / "junk.nlf2").string() + "\"]"})
              .code == cli::bad_input);

    const Invocation holes = invoke({"forward", "--config", cfg, "--set", "solver.max_iter=1", "--set",
                                     "solver.restart=1", "--set", "solver.tol=1e-15", "--set",
                                     "potential.amplitude=3"});
    CHECK(holes.code == cli::excessive_holes);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("compare reports identical runs and leaves inputs untouched")
  {
    const auto dir = testing::scratch_dir("cmp");
    const auto cfg = write_config(dir, small_config(dir));
    REQUIRE(invoke({"forward", "--config", cfg}).code == cli::ok);
    const auto q = (dir / "out" / "q.nlf2").string();
    const auto before = io::read_field(q);
    const Invocation c = invoke({"compare", "--config", cfg, "--set", "inputs=[\"" + q + "\",\"" + q + "\"]"});
    REQUIRE(c.code == cli::ok);
    CHECK(json::parse(c.out)["identical"] == true);
    CHECK(relative_l2(io::read_field(q), before) == 0.0);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("evolve and audit commands run")
  {
    const auto dir = testing::scratch_dir("evo");
    const auto cfg = write_config(dir, small_config(dir));
    for (const char* mode : {"direct", "ist", "both"}) {
      const Invocation e = invoke({"evolve", "--config", cfg, "--set", std::string("evolution.mode=") + mode, "--set",
                                   "evolution.t=0.02", "--set", "evolution.dt=0.005"});
      CAPTURE(mode);
      CAPTURE(e.err);
      CHECK(e.code == cli::ok);
    }
    for (const char* which : {"frac", "besov", "pdo"}) {
      const Invocation a = invoke({"audit", "--config", cfg, "--set", std::string("audit.which=") + which, "--set",
                                   "audit.trials=2"});
      CAPTURE(which);
      CAPTURE(a.err);
      REQUIRE(a.code == cli::ok);
      for (const auto& r : json::parse(a.out)["reports"]) CHECK(!r["constant"].is_null());
    }
    std::filesystem::remove_all(dir);
  }
}

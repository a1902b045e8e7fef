#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/fixtures.hpp"
#include "torembed/pipeline.hpp"

using namespace torembed;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("torembed-pipeline-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_SUITE("pipeline") {
    TEST_CASE("presets run to a certified embedding") {
        for (const auto& name : preset_names()) {
            RunConfig config;
            config.preset = name;
            config.seed = 3;
            const RunOutcome out = run_pipeline(config);
            CHECK(out.exit_code == kExitOk);
            CHECK(out.report["status"] == "ok");
            REQUIRE(out.certificate.has_value());
            CHECK(out.certificate->embedding);
            CHECK(out.retries == 0);
        }
    }

    TEST_CASE("invalid fan exits with code 2 and names the ray") {
        const auto dir = scratch_dir("invalid");
        Fan f = preset("p3");
        f.rays[1] = make_vec3(0, 3, 0);
        save_fan(dir / "fan.json", f);
        RunConfig config;
        config.fan_path = dir / "fan.json";
        const RunOutcome out = run_pipeline(config);
        CHECK(out.exit_code == kExitInvalidFan);
        CHECK(out.report["error"]["ray"] == 1);

        Fan incomplete = preset("p3");
        incomplete.cones.pop_back();
        save_fan(dir / "incomplete.json", incomplete);
        config.fan_path = dir / "incomplete.json";
        CHECK(run_pipeline(config).exit_code == kExitInvalidFan);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("non-projective fan exits with code 3") {
        const auto dir = scratch_dir("nonproj");
        save_fan(dir / "fan.json", fixtures::non_projective());
        RunConfig config;
        config.fan_path = dir / "fan.json";
        const RunOutcome out = run_pipeline(config);
        CHECK(out.exit_code == kExitNotProjective);
        CHECK(out.report["error"]["kind"] == "NotProjective");
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("usage errors exit with code 1") {
        RunConfig none;
        CHECK(run_pipeline(none).exit_code == kExitError);
        RunConfig unknown;
        unknown.preset = "p7";
        CHECK(run_pipeline(unknown).exit_code == kExitError);
        RunConfig negative;
        negative.preset = "p3";
        negative.max_retries = -1;
        CHECK(run_pipeline(negative).exit_code == kExitError);
        CHECK_THROWS(parse_torus("1,0,2"));
        CHECK_THROWS(parse_torus("1,2"));
        CHECK(parse_torus("1/2,-3,4") == TorusElement{Rational(1, 2), Rational(-3), Rational(4)});
    }

    TEST_CASE("replaying config.json reproduces every artifact") {
        const auto first = scratch_dir("first");
        const auto second = scratch_dir("second");
        RunConfig config;
        config.preset = "bl-p3-point";
        config.seed = 17;
        config.torus = parse_torus("2,1/3,-1");
        config.out_dir = first;
        REQUIRE(run_pipeline(config).exit_code == kExitOk);

        RunConfig replay = config_from_json(read_json_file(first / "config.json"));
        CHECK(config_to_json(replay) == config_to_json(config));
        replay.out_dir = second;
        REQUIRE(run_pipeline(replay).exit_code == kExitOk);
        for (const char* name : {"embedding.json", "certificate.json", "config.json"})
            CHECK(slurp(first / name) == slurp(second / name));
        std::filesystem::remove_all(first);
        std::filesystem::remove_all(second);
    }
}

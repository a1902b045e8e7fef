#include <doctest.h>

#include <filesystem>

#include "support/fixtures.hpp"
#include "torembed/errors.hpp"
#include "torembed/io.hpp"

using namespace torembed;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("torembed-io-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("rationals") {
        CHECK(rational_to_string(Rational(6, 4)) == "3/2");
        CHECK(rational_to_string(Rational(-7)) == "-7");
        CHECK(rational_from_string("-10/4") == Rational(-5, 2));
        CHECK_THROWS_AS(rational_from_string("1/0"), FormatError);
        CHECK_THROWS_AS(rational_from_string("x"), FormatError);
    }

    TEST_CASE("fan documents are parsed strictly") {
        const Json good = fan_to_json(preset("p3"));
        CHECK(fan_from_json(good) == preset("p3"));
        Json extra = good;
        extra["weights"] = Json::array();
        CHECK_THROWS_AS(fan_from_json(extra), FormatError);
        Json missing = good;
        missing.erase("cones");
        CHECK_THROWS_AS(fan_from_json(missing), FormatError);
        Json short_ray = good;
        short_ray["rays"][0] = Json::array({1, 0});
        CHECK_THROWS_AS(fan_from_json(short_ray), FormatError);
        Json float_entry = good;
        float_entry["rays"][0][0] = 0.5;
        CHECK_THROWS_AS(fan_from_json(float_entry), FormatError);
        CHECK_THROWS_AS(fan_from_json(Json::array()), FormatError);
    }

    TEST_CASE("fan, embedding and certificate round trip bit-exactly") {
        const auto dir = scratch_dir("roundtrip");
        for (const auto& name : preset_names()) {
            const Fan f = preset(name);
            save_fan(dir / "fan.json", f);
            CHECK(load_fan(dir / "fan.json") == f);

            const TDivisor h = find_ample(f);
            const EmbeddingData data = build_embedding_data(f, h, xi_vector(f, h, XiMethod::Intersection), 21,
                                                            {Rational(2, 3), Rational(-5), Rational(7, 11)});
            save_embedding(dir / "embedding.json", data);
            const EmbeddingData back = load_embedding(dir / "embedding.json");
            CHECK(back == data);
            CHECK(dump(embedding_to_json(back)) == dump(embedding_to_json(data)));

            const std::string cert = dump(certificate_to_json(certify(data)));
            CHECK(dump(certificate_to_json(certify(back))) == cert);
        }
        const EmbeddingData sym = fixtures::symmetric_p3();
        CHECK(embedding_from_json(embedding_to_json(sym)) == sym);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("failing certificates carry their witnesses") {
        const Json j = certificate_to_json(certify(fixtures::symmetric_p3()));
        CHECK(j["embedding"] == false);
        bool has_witness = false;
        for (const auto& c : j["charts"])
            if (!c["witnesses"].empty()) has_witness = true;
        CHECK(has_witness);
        const Json d = certificate_to_json(certify(fixtures::doubled_point_p3()));
        CHECK(d["pullback"]["reason"] == "reducedness");
    }

    TEST_CASE("missing files and bad json") {
        CHECK_THROWS(read_json_file("/nonexistent/torembed.json"));
        const auto dir = scratch_dir("bad");
        write_text_file(dir / "bad.json", "{ not json");
        CHECK_THROWS_AS(read_json_file(dir / "bad.json"), FormatError);
        std::filesystem::remove_all(dir);
    }
}

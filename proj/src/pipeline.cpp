#include "torembed/pipeline.hpp"

#include <sstream>

#include "torembed/errors.hpp"

namespace torembed {

Json config_to_json(const RunConfig& config) {
    Json torus = Json::array();
    for (const auto& t : config.torus) torus.push_back(rational_to_string(t));
    Json out;
    out["fan"] = config.fan_path ? Json(config.fan_path->string()) : Json(nullptr);
    out["preset"] = config.preset ? Json(*config.preset) : Json(nullptr);
    out["ample"] = config.ample_path ? Json(config.ample_path->string()) : Json("auto");
    out["xi_method"] = to_string(config.xi_method);
    out["seed"] = config.seed;
    out["torus"] = std::move(torus);
    out["max_retries"] = config.max_retries;
    out["degree_cap"] = config.verify.degree_cap;
    return out;
}

RunConfig config_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("config: expected an object");
    RunConfig config;
    try {
        if (j.contains("fan") && !j["fan"].is_null()) config.fan_path = j["fan"].get<std::string>();
        if (j.contains("preset") && !j["preset"].is_null()) config.preset = j["preset"].get<std::string>();
        if (j.contains("ample") && j["ample"] != "auto") config.ample_path = j["ample"].get<std::string>();
        if (j.contains("xi_method")) config.xi_method = xi_method_from_string(j["xi_method"].get<std::string>());
        if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("torus")) {
            std::string joined;
            for (const auto& t : j["torus"]) joined += (joined.empty() ? "" : ",") + t.get<std::string>();
            config.torus = parse_torus(joined);
        }
        if (j.contains("max_retries")) config.max_retries = j["max_retries"].get<int>();
        if (j.contains("degree_cap")) config.verify.degree_cap = j["degree_cap"].get<long>();
    } catch (const Json::exception& e) {
        throw FormatError(std::string("config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("config: ") + e.what());
    }
    return config;
}

TorusElement parse_torus(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) parts.push_back(item);
    if (parts.size() != 3) throw std::invalid_argument("torus must have three comma-separated entries");
    TorusElement t;
    for (std::size_t i = 0; i < 3; ++i) {
        t[i] = rational_from_string(parts[i]);
        if (t[i] == 0) throw std::invalid_argument("torus entries must be nonzero");
    }
    return t;
}

Fan load_fan_source(const RunConfig& config) {
    if (config.fan_path.has_value() == config.preset.has_value())
        throw std::invalid_argument("exactly one of a fan file and a preset is required");
    return config.fan_path ? load_fan(*config.fan_path) : preset(*config.preset);
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const MalformedFan*>(&e) || dynamic_cast<const NotComplete*>(&e) ||
        dynamic_cast<const NotUnimodular*>(&e))
        return kExitInvalidFan;
    if (dynamic_cast<const NotProjective*>(&e)) return kExitNotProjective;
    return kExitError;
}

Json error_to_json(const std::exception& e) {
    Json out;
    const auto* err = dynamic_cast<const Error*>(&e);
    out["kind"] = err ? err->kind() : std::string("InvalidArgument");
    out["message"] = e.what();
    return out;
}

RunOutcome run_pipeline(const RunConfig& config) {
    RunOutcome outcome;
    Json& report = outcome.report;
    report["status"] = "error";
    report["exit_code"] = kExitError;
    report["config"] = config_to_json(config);
    auto finish = [&](int code) {
        outcome.exit_code = code;
        report["status"] = code == kExitOk ? "ok" : "error";
        report["exit_code"] = code;
        return outcome;
    };
    try {
        if (config.max_retries < 0) throw std::invalid_argument("max retries must be nonnegative");
        const Fan fan = load_fan_source(config);
        report["fan"] = fan.name;

        const ValidationReport validation = validate(fan);
        report["validation"] = validation_to_json(validation);
        if (!validation.smooth || !validation.complete) {
            Json err;
            err["kind"] = "InvalidFan";
            err["message"] = validation.problems.empty() ? "fan is not smooth and complete" : validation.problems.front();
            err["ray"] = validation.bad_ray ? Json(*validation.bad_ray) : Json(nullptr);
            report["error"] = std::move(err);
            return finish(kExitInvalidFan);
        }

        TDivisor h;
        if (config.ample_path) {
            const Json doc = read_json_file(*config.ample_path);
            h = divisor_from_json(doc.is_object() && doc.contains("divisor") ? doc["divisor"] : doc);
            if (h.size() != fan.num_rays()) throw FormatError("ample divisor needs one entry per ray");
            if (!is_ample(fan, h)) throw NotAmple("the supplied divisor is not ample");
        } else {
            h = find_ample(fan);
        }
        report["ample"] = divisor_to_json(h);

        const XiVector xi = xi_vector(fan, h, config.xi_method);
        report["xi"] = xi_to_json(xi);

        Json attempts = Json::array();
        for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
            const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(attempt);
            EmbeddingData data = build_embedding_data(fan, h, xi, seed, config.torus);
            Certificate cert = certify(data, config.verify);
            Json a;
            a["seed"] = seed;
            a["embedding"] = cert.embedding;
            attempts.push_back(std::move(a));
            outcome.retries = attempt;
            outcome.data = std::move(data);
            outcome.certificate = std::move(cert);
            if (outcome.certificate->embedding) break;
        }
        report["attempts"] = std::move(attempts);
        report["retries"] = outcome.retries;
        report["seed"] = outcome.data->seed;
        report["certificate"] = certificate_to_json(*outcome.certificate);

        if (config.out_dir) {
            const auto& dir = *config.out_dir;
            save_embedding(dir / "embedding.json", *outcome.data);
            write_text_file(dir / "certificate.json", dump(certificate_to_json(*outcome.certificate)));
            write_text_file(dir / "config.json", dump(config_to_json(config)));
            Json artifacts;
            artifacts["embedding"] = (dir / "embedding.json").string();
            artifacts["certificate"] = (dir / "certificate.json").string();
            artifacts["config"] = (dir / "config.json").string();
            report["artifacts"] = std::move(artifacts);
        }
        if (!outcome.certificate->embedding) {
            Json err;
            err["kind"] = "RetriesExhausted";
            err["message"] = "no certified embedding after " + std::to_string(config.max_retries + 1) + " attempts";
            report["error"] = std::move(err);
            return finish(kExitRetriesExhausted);
        }
        return finish(kExitOk);
    } catch (const std::exception& e) {
        report["error"] = error_to_json(e);
        return finish(exit_code_for(e));
    }
}

}  // namespace torembed

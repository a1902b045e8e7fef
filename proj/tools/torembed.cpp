#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "torembed/errors.hpp"
#include "torembed/pipeline.hpp"

using namespace torembed;

namespace {

struct SourceOptions {
    std::string fan_path;
    std::string preset_name;
    std::string ample = "auto";
    std::string xi_method = "intersection";
    std::uint64_t seed = 0;
    std::string torus = "1,1,1";
    int max_retries = 3;
    std::string out;
    long degree_cap = 512;
};

void add_fan_source(CLI::App* cmd, SourceOptions& o) {
    auto* f = cmd->add_option("--fan", o.fan_path, "Fan file");
    auto* p = cmd->add_option("--preset", o.preset_name, "Named preset fan");
    f->excludes(p);
}

void add_pipeline_options(CLI::App* cmd, SourceOptions& o) {
    cmd->add_option("--ample", o.ample, "Ample divisor file, or 'auto'");
    cmd->add_option("--xi-method", o.xi_method, "intersection or kernel")
        ->check(CLI::IsMember({"intersection", "kernel"}));
    cmd->add_option("--seed", o.seed, "Sampling seed");
    cmd->add_option("--torus", o.torus, "Torus element a,b,c");
    cmd->add_option("--max-retries", o.max_retries, "Further seeds tried after a failed certificate")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", o.out, "Directory for artifacts");
    cmd->add_option("--degree-cap", o.degree_cap, "Largest admissible resultant degree");
}

RunConfig to_config(const SourceOptions& o) {
    RunConfig c;
    if (!o.fan_path.empty()) c.fan_path = o.fan_path;
    if (!o.preset_name.empty()) c.preset = o.preset_name;
    if (o.ample != "auto") c.ample_path = o.ample;
    c.xi_method = xi_method_from_string(o.xi_method);
    c.seed = o.seed;
    c.torus = parse_torus(o.torus);
    c.max_retries = o.max_retries;
    if (!o.out.empty()) c.out_dir = o.out;
    c.verify.degree_cap = o.degree_cap;
    return c;
}

TDivisor resolve_ample(const Fan& fan, const RunConfig& c) {
    if (!c.ample_path) return find_ample(fan);
    const Json doc = read_json_file(*c.ample_path);
    TDivisor h = divisor_from_json(doc.is_object() && doc.contains("divisor") ? doc["divisor"] : doc);
    if (h.size() != fan.num_rays()) throw FormatError("ample divisor needs one entry per ray");
    if (!is_ample(fan, h)) throw NotAmple("the supplied divisor is not ample");
    return h;
}

Json base_report(const std::string& command) {
    Json r;
    r["command"] = command;
    r["status"] = "ok";
    r["exit_code"] = kExitOk;
    return r;
}

int emit(Json report, int code) {
    report["status"] = code == kExitOk ? "ok" : "error";
    report["exit_code"] = code;
    std::cout << report.dump(2) << std::endl;
    return code;
}

int fail(Json report, const std::exception& e) {
    report["error"] = error_to_json(e);
    return emit(std::move(report), exit_code_for(e));
}

int cmd_fan_validate(const SourceOptions& o) {
    Json r = base_report("fan validate");
    try {
        const Fan fan = load_fan_source(to_config(o));
        r["fan"] = fan.name;
        const ValidationReport v = validate(fan);
        r["validation"] = validation_to_json(v);
        if (!v.smooth || !v.complete) {
            Json err;
            err["kind"] = "InvalidFan";
            err["message"] = v.problems.empty() ? "fan is not smooth and complete" : v.problems.front();
            err["ray"] = v.bad_ray ? Json(*v.bad_ray) : Json(nullptr);
            r["error"] = std::move(err);
            return emit(std::move(r), kExitInvalidFan);
        }
        return emit(std::move(r), kExitOk);
    } catch (const std::exception& e) {
        return fail(std::move(r), e);
    }
}

int cmd_fan_preset(const std::string& name, const std::string& out) {
    Json r = base_report("fan preset");
    try {
        const Fan fan = preset(name);
        if (!out.empty()) {
            save_fan(out, fan);
            r["written"] = out;
        }
        r["fan_document"] = fan_to_json(fan);
        return emit(std::move(r), kExitOk);
    } catch (const std::exception& e) {
        return fail(std::move(r), e);
    }
}

int cmd_fan_subdivide(const SourceOptions& o, std::size_t cone, const std::string& out) {
    Json r = base_report("fan subdivide");
    try {
        const Fan fan = load_fan_source(to_config(o));
        if (cone >= fan.cones.size()) throw ConeNotInFan("cone index " + std::to_string(cone) + " out of range");
        const Fan sub = star_subdivision(fan, fan.cones[cone]);
        if (!out.empty()) {
            save_fan(out, sub);
            r["written"] = out;
        }
        r["fan_document"] = fan_to_json(sub);
        return emit(std::move(r), kExitOk);
    } catch (const std::exception& e) {
        return fail(std::move(r), e);
    }
}

int cmd_ample_find(const SourceOptions& o) {
    Json r = base_report("ample find");
    try {
        const Fan fan = load_fan_source(to_config(o));
        r["fan"] = fan.name;
        try {
            const TDivisor h = find_ample(fan);
            r["divisor"] = divisor_to_json(h);
            r["ample"] = is_ample(fan, h);
            if (!o.out.empty()) {
                Json doc;
                doc["divisor"] = divisor_to_json(h);
                write_text_file(o.out, dump(doc));
                r["written"] = o.out;
            }
            return emit(std::move(r), kExitOk);
        } catch (const NotProjective& e) {
            Json weights = Json::array();
            for (const auto& y : non_projectivity_certificate(fan)) weights.push_back(rational_to_string(y));
            r["wall_weights"] = std::move(weights);
            return fail(std::move(r), e);
        }
    } catch (const std::exception& e) {
        return fail(std::move(r), e);
    }
}

int cmd_xi(const SourceOptions& o) {
    Json r = base_report("xi");
    try {
        const RunConfig c = to_config(o);
        const Fan fan = load_fan_source(c);
        r["fan"] = fan.name;
        const TDivisor h = resolve_ample(fan, c);
        r["ample"] = divisor_to_json(h);
        r["xi"] = xi_to_json(xi_vector(fan, h, c.xi_method));
        return emit(std::move(r), kExitOk);
    } catch (const std::exception& e) {
        return fail(std::move(r), e);
    }
}

int cmd_embed(const SourceOptions& o) {
    Json r = base_report("embed");
    try {
        const RunConfig c = to_config(o);
        const Fan fan = load_fan_source(c);
        const TDivisor h = resolve_ample(fan, c);
        const XiVector xi = xi_vector(fan, h, c.xi_method);
        const EmbeddingData data = build_embedding_data(fan, h, xi, c.seed, c.torus);
        r["conditions"] = conditions_to_json(check_theorem_conditions(data));
        if (c.out_dir) {
            save_embedding(*c.out_dir / "embedding.json", data);
            r["written"] = (*c.out_dir / "embedding.json").string();
        }
        r["embedding_data"] = embedding_to_json(data);
        return emit(std::move(r), kExitOk);
    } catch (const std::exception& e) {
        return fail(std::move(r), e);
    }
}

int cmd_verify(const std::string& path, const SourceOptions& o) {
    Json r = base_report("verify");
    try {
        const EmbeddingData data = load_embedding(path);
        VerifyOptions options;
        options.degree_cap = o.degree_cap;
        const Certificate cert = certify(data, options);
        const Json doc = certificate_to_json(cert);
        if (!o.out.empty()) {
            write_text_file(std::filesystem::path(o.out) / "certificate.json", dump(doc));
            r["written"] = (std::filesystem::path(o.out) / "certificate.json").string();
        }
        r["certificate"] = doc;
        return emit(std::move(r), cert.embedding ? kExitOk : kExitRetriesExhausted);
    } catch (const std::exception& e) {
        return fail(std::move(r), e);
    }
}

int cmd_run(const std::string& command, const RunConfig& config) {
    RunOutcome outcome = run_pipeline(config);
    Json r = base_report(command);
    for (auto& [key, value] : outcome.report.items())
        if (key != "status" && key != "exit_code") r[key] = value;
    return emit(std::move(r), outcome.exit_code);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Embeddings of curves into smooth projective toric 3-folds, with exact certificates"};
    app.require_subcommand(1);
    SourceOptions o;

    auto* fan_cmd = app.add_subcommand("fan", "Fan utilities");
    fan_cmd->require_subcommand(1);
    auto* fan_validate = fan_cmd->add_subcommand("validate", "Check smoothness and completeness");
    add_fan_source(fan_validate, o);
    std::string preset_name;
    std::string fan_out;
    auto* fan_preset = fan_cmd->add_subcommand("preset", "Print a preset fan");
    fan_preset->add_option("name", preset_name, "Preset name")->required();
    fan_preset->add_option("--out", fan_out, "Write the fan file here");
    std::size_t cone_index = 0;
    auto* fan_subdivide = fan_cmd->add_subcommand("subdivide", "Star subdivision of one maximal cone");
    add_fan_source(fan_subdivide, o);
    fan_subdivide->add_option("--cone", cone_index, "Index of the maximal cone")->required();
    fan_subdivide->add_option("--out", fan_out, "Write the fan file here");

    auto* ample_cmd = app.add_subcommand("ample", "Ample divisors");
    ample_cmd->require_subcommand(1);
    auto* ample_find = ample_cmd->add_subcommand("find", "Find an ample divisor or prove none exists");
    add_fan_source(ample_find, o);
    ample_find->add_option("--out", o.out, "Write the divisor file here");

    auto* xi_cmd = app.add_subcommand("xi", "Positive coefficient vector");
    add_fan_source(xi_cmd, o);
    xi_cmd->add_option("--ample", o.ample, "Ample divisor file, or 'auto'");
    xi_cmd->add_option("--xi-method", o.xi_method, "intersection or kernel")
        ->check(CLI::IsMember({"intersection", "kernel"}));

    auto* embed_cmd = app.add_subcommand("embed", "Sample divisors and build the map data");
    add_fan_source(embed_cmd, o);
    add_pipeline_options(embed_cmd, o);

    std::string embedding_path;
    auto* verify_cmd = app.add_subcommand("verify", "Certify an embedding data file");
    verify_cmd->add_option("embedding", embedding_path, "Embedding data file")->required();
    verify_cmd->add_option("--out", o.out, "Directory for the certificate");
    verify_cmd->add_option("--degree-cap", o.degree_cap, "Largest admissible resultant degree");

    auto* demo_cmd = app.add_subcommand("demo", "Full pipeline on a preset");
    demo_cmd->add_option("name", o.preset_name, "Preset name")->required();
    add_pipeline_options(demo_cmd, o);

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "Full pipeline on a fan file, preset or recorded config");
    add_fan_source(run_cmd, o);
    add_pipeline_options(run_cmd, o);
    run_cmd->add_option("--config", config_path, "Recorded config.json to replay");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        Json r = base_report("usage");
        Json err;
        err["kind"] = "UsageError";
        err["message"] = e.what();
        r["error"] = std::move(err);
        return emit(std::move(r), kExitError);
    }

    try {
        if (fan_validate->parsed()) return cmd_fan_validate(o);
        if (fan_preset->parsed()) return cmd_fan_preset(preset_name, fan_out);
        if (fan_subdivide->parsed()) return cmd_fan_subdivide(o, cone_index, fan_out);
        if (ample_find->parsed()) return cmd_ample_find(o);
        if (xi_cmd->parsed()) return cmd_xi(o);
        if (embed_cmd->parsed()) return cmd_embed(o);
        if (verify_cmd->parsed()) return cmd_verify(embedding_path, o);
        if (demo_cmd->parsed()) {
            RunConfig c = to_config(o);
            if (!c.out_dir) c.out_dir = std::filesystem::path("demo-" + o.preset_name);
            return cmd_run("demo", c);
        }
        if (run_cmd->parsed()) {
            RunConfig c = config_path.empty() ? to_config(o) : config_from_json(read_json_file(config_path));
            if (!config_path.empty() && !o.out.empty()) c.out_dir = o.out;
            return cmd_run("run", c);
        }
    } catch (const std::exception& e) {
        return fail(base_report("usage"), e);
    }
    return kExitError;
}

#include "torembed/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "torembed/errors.hpp"

namespace torembed {

namespace {

Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Integer integer_from_json(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) == 0) return z;
    }
    throw FormatError(what + ": expected an integer");
}

void require_object(const Json& j, const std::vector<std::string>& fields, const std::string& what) {
    if (!j.is_object()) throw FormatError(what + ": expected an object");
    const std::set<std::string> allowed(fields.begin(), fields.end());
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw FormatError(what + ": unknown field '" + key + "'");
    for (const auto& f : fields)
        if (!j.contains(f)) throw FormatError(what + ": missing field '" + f + "'");
}

const Json& require_array(const Json& j, const std::string& what, std::optional<std::size_t> size = std::nullopt) {
    if (!j.is_array()) throw FormatError(what + ": expected an array");
    if (size && j.size() != *size)
        throw FormatError(what + ": expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
    return j;
}

std::string require_string(const Json& j, const std::string& what) {
    if (!j.is_string()) throw FormatError(what + ": expected a string");
    return j.get<std::string>();
}

Json point_to_json(const std::optional<CurvePoint>& p) { return p ? Json(p->str()) : Json(nullptr); }

CurvePoint point_from_json(const Json& j, const std::string& what) {
    try {
        return CurvePoint::parse(require_string(j, what));
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw FormatError(what + ": " + e.what());
    }
}

Json poly_to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(rational_to_string(c));
    return out;
}

Json cdivisor_to_json(const CDivisor& d) {
    Json out = Json::array();
    for (const auto& [p, m] : d.terms()) out.push_back(Json::array({p.str(), m}));
    return out;
}

CDivisor cdivisor_from_json(const Json& j, const std::string& what) {
    CDivisor d;
    for (const auto& term : require_array(j, what)) {
        require_array(term, what + " term", 2);
        if (!term[1].is_number_integer()) throw FormatError(what + ": multiplicity must be an integer");
        const CurvePoint p = point_from_json(term[0], what);
        if (d.contains(p)) throw FormatError(what + ": point " + p.str() + " listed twice");
        d.add(p, term[1].get<long>());
    }
    return d;
}

Json function_to_json(const RationalFunction& f) {
    Json factors = Json::array();
    for (const auto& [a, e] : f.factors()) factors.push_back(Json::array({rational_to_string(a), e}));
    Json out;
    out["constant"] = rational_to_string(f.constant_factor());
    out["factors"] = std::move(factors);
    return out;
}

RationalFunction function_from_json(const Json& j, const std::string& what) {
    require_object(j, {"constant", "factors"}, what);
    std::vector<RationalFunction::Factor> factors;
    for (const auto& term : require_array(j["factors"], what + ".factors")) {
        require_array(term, what + " factor", 2);
        if (!term[1].is_number_integer()) throw FormatError(what + ": exponent must be an integer");
        factors.emplace_back(rational_from_string(require_string(term[0], what)), term[1].get<long>());
    }
    const Rational c = rational_from_string(require_string(j["constant"], what + ".constant"));
    if (c == 0) throw FormatError(what + ": constant must be nonzero");
    RationalFunction f(c, factors);
    if (f.factors().size() != factors.size()) throw FormatError(what + ": factors must be distinct and nonzero");
    return f;
}

template <typename T>
Json optional_index(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string rational_to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_den() == 1 ? c.get_num().get_str() : c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    Integer num, den = 1;
    const bool ok = num.set_str(s.substr(0, slash), 10) == 0 &&
                    (slash == std::string::npos || den.set_str(s.substr(slash + 1), 10) == 0);
    if (!ok || s.empty() || den == 0) throw FormatError("not a rational number: '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Json fan_to_json(const Fan& fan) {
    Json rays = Json::array();
    for (const auto& r : fan.rays) rays.push_back(Json::array({integer_to_json(r[0]), integer_to_json(r[1]), integer_to_json(r[2])}));
    Json cones = Json::array();
    for (const auto& c : fan.cones) cones.push_back(Json::array({c[0], c[1], c[2]}));
    Json out;
    out["name"] = fan.name;
    out["rays"] = std::move(rays);
    out["cones"] = std::move(cones);
    return out;
}

Fan fan_from_json(const Json& j) {
    require_object(j, {"name", "rays", "cones"}, "fan");
    Fan fan;
    fan.name = require_string(j["name"], "fan.name");
    for (const auto& r : require_array(j["rays"], "fan.rays")) {
        require_array(r, "fan ray", 3);
        fan.rays.push_back({integer_from_json(r[0], "fan ray"), integer_from_json(r[1], "fan ray"),
                            integer_from_json(r[2], "fan ray")});
    }
    for (const auto& c : require_array(j["cones"], "fan.cones")) {
        require_array(c, "fan cone", 3);
        ConeIndices cone{};
        for (std::size_t q = 0; q < 3; ++q) {
            if (!c[q].is_number_unsigned()) throw FormatError("fan cone: entries must be nonnegative integers");
            cone[q] = c[q].get<std::size_t>();
        }
        fan.cones.push_back(cone);
    }
    return fan;
}

Json divisor_to_json(const TDivisor& d) {
    Json out = Json::array();
    for (const auto& c : d) out.push_back(integer_to_json(c));
    return out;
}

TDivisor divisor_from_json(const Json& j) {
    TDivisor d;
    for (const auto& c : require_array(j, "divisor")) d.push_back(integer_from_json(c, "divisor"));
    return d;
}

Json validation_to_json(const ValidationReport& report) {
    Json out;
    out["smooth"] = report.smooth;
    out["complete"] = report.complete;
    out["num_rays"] = report.num_rays;
    out["num_walls"] = report.num_walls;
    out["num_cones"] = report.num_cones;
    out["problems"] = report.problems;
    out["bad_ray"] = optional_index(report.bad_ray);
    return out;
}

Json xi_to_json(const XiVector& xi) {
    Json out;
    out["values"] = divisor_to_json(xi.xi);
    out["method"] = to_string(xi.method);
    out["scale"] = integer_to_json(xi.scale);
    return out;
}

XiVector xi_from_json(const Json& j) {
    require_object(j, {"values", "method", "scale"}, "xi");
    XiVector xi;
    xi.xi = divisor_from_json(j["values"]);
    try {
        xi.method = xi_method_from_string(require_string(j["method"], "xi.method"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("xi.method: ") + e.what());
    }
    xi.scale = integer_from_json(j["scale"], "xi.scale");
    return xi;
}

Json embedding_to_json(const EmbeddingData& data) {
    Json divisors = Json::array();
    for (const auto& d : data.divisors) divisors.push_back(cdivisor_to_json(d));
    Json epsilon = Json::array();
    for (const auto& f : data.epsilon) epsilon.push_back(function_to_json(f));
    Json torus = Json::array();
    for (const auto& t : data.torus) torus.push_back(rational_to_string(t));
    Json out;
    out["fan"] = fan_to_json(data.fan);
    out["ample"] = divisor_to_json(data.h);
    out["xi"] = xi_to_json(data.xi);
    out["seed"] = data.seed;
    out["divisors"] = std::move(divisors);
    out["epsilon"] = std::move(epsilon);
    out["torus"] = std::move(torus);
    return out;
}

EmbeddingData embedding_from_json(const Json& j) {
    require_object(j, {"fan", "ample", "xi", "seed", "divisors", "epsilon", "torus"}, "embedding");
    EmbeddingData data;
    data.fan = fan_from_json(j["fan"]);
    data.h = divisor_from_json(j["ample"]);
    data.xi = xi_from_json(j["xi"]);
    if (!j["seed"].is_number_unsigned()) throw FormatError("embedding.seed: expected an unsigned integer");
    data.seed = j["seed"].get<std::uint64_t>();
    const std::size_t r = data.fan.num_rays();
    if (data.h.size() != r) throw FormatError("embedding.ample: expected one entry per ray");
    if (data.xi.xi.size() != r) throw FormatError("embedding.xi: expected one entry per ray");
    const Json& divisors = require_array(j["divisors"], "embedding.divisors", r);
    for (std::size_t k = 0; k < r; ++k) {
        data.divisors.push_back(cdivisor_from_json(divisors[k], "embedding.divisors[" + std::to_string(k) + "]"));
        if (Integer(data.divisors.back().degree()) != data.xi.xi[k])
            throw FormatError("embedding.divisors[" + std::to_string(k) + "]: degree differs from xi");
    }
    const Json& eps = require_array(j["epsilon"], "embedding.epsilon", 3);
    const Json& torus = require_array(j["torus"], "embedding.torus", 3);
    for (std::size_t i = 0; i < 3; ++i) {
        data.epsilon[i] = function_from_json(eps[i], "embedding.epsilon[" + std::to_string(i) + "]");
        data.torus[i] = rational_from_string(require_string(torus[i], "embedding.torus"));
        if (data.torus[i] == 0) throw FormatError("embedding.torus: entries must be nonzero");
    }
    return data;
}

Json conditions_to_json(const ConditionReport& report) {
    Json out;
    out["disjointness"] = report.disjointness;
    out["divisor_relation"] = report.divisor_relation;
    out["failing_collection"] = report.failing_collection ? Json(*report.failing_collection) : Json(nullptr);
    out["shared_point"] = point_to_json(report.shared_point);
    out["failing_basis_index"] = optional_index(report.failing_basis_index);
    out["mismatch_point"] = point_to_json(report.mismatch_point);
    return out;
}

Json witness_to_json(const Witness& w) {
    Json out;
    out["kind"] = w.kind == Witness::Kind::Collision ? "collision" : "derivative-zero";
    out["s"] = point_to_json(w.s);
    out["u"] = point_to_json(w.u);
    out["s_poly"] = w.s_poly.is_zero() ? Json(nullptr) : poly_to_json(w.s_poly);
    if (w.u_poly.empty()) {
        out["u_poly"] = nullptr;
    } else {
        Json u = Json::array();
        for (const auto& c : w.u_poly) u.push_back(poly_to_json(c));
        out["u_poly"] = std::move(u);
    }
    out["rechecked"] = w.rechecked;
    return out;
}

Json certificate_to_json(const Certificate& cert) {
    Json charts = Json::array();
    for (const auto& c : cert.charts) {
        Json chart;
        chart["cone"] = c.cone;
        chart["rays"] = Json::array({c.rays[0], c.rays[1], c.rays[2]});
        chart["injective"] = c.injective;
        chart["immersive"] = c.immersive;
        Json ws = Json::array();
        for (const auto& w : c.witnesses) ws.push_back(witness_to_json(w));
        chart["witnesses"] = std::move(ws);
        charts.push_back(std::move(chart));
    }
    Json pullback;
    pullback["passed"] = cert.pullback.passed;
    pullback["cone"] = optional_index(cert.pullback.cone);
    pullback["ray"] = optional_index(cert.pullback.ray);
    pullback["point"] = point_to_json(cert.pullback.point);
    pullback["reason"] = cert.pullback.reason.empty() ? Json(nullptr) : Json(cert.pullback.reason);
    Json out;
    out["conditions"] = conditions_to_json(cert.conditions);
    out["charts"] = std::move(charts);
    out["pullback"] = std::move(pullback);
    out["embedding"] = cert.embedding;
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

Fan load_fan(const std::filesystem::path& path) { return fan_from_json(read_json_file(path)); }

void save_fan(const std::filesystem::path& path, const Fan& fan) { write_text_file(path, dump(fan_to_json(fan))); }

EmbeddingData load_embedding(const std::filesystem::path& path) {
    return embedding_from_json(read_json_file(path));
}

void save_embedding(const std::filesystem::path& path, const EmbeddingData& data) {
    write_text_file(path, dump(embedding_to_json(data)));
}

}  // namespace torembed

#include "torembed/embed.hpp"

#include <algorithm>
#include <set>

#include "torembed/errors.hpp"

namespace torembed {

TorusElement default_torus() { return {Rational(1), Rational(1), Rational(1)}; }

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finaliser over (seed, stream)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

void check_torus(const TorusElement& torus) {
    for (const auto& t : torus)
        if (t == 0) throw std::invalid_argument("torus element must have nonzero entries");
}

}  // namespace

RationalFunction EmbeddingData::epsilon_of(const IntVector& m) const {
    if (m.size() != 3) throw std::invalid_argument("epsilon_of: character must have 3 entries");
    RationalFunction f;
    for (std::size_t i = 0; i < 3; ++i) {
        if (m[i] == 0) continue;
        if (!m[i].fits_slong_p()) throw std::overflow_error("epsilon_of: exponent too large");
        f *= epsilon[i].pow(m[i].get_si());
    }
    return f;
}

CDivisor EmbeddingData::character_pullback(const IntVector& m) const {
    CDivisor d;
    for (std::size_t j = 0; j < fan.num_rays(); ++j) {
        Integer c = dot(m, to_vector(fan.rays[j]));
        if (c != 0) d += c.get_si() * divisors[j];
    }
    return d;
}

EmbeddingData assemble_embedding_data(const Fan& fan, const TDivisor& h, const XiVector& xi,
                                      std::vector<CDivisor> divisors, const TorusElement& torus) {
    check_torus(torus);
    if (!is_valid_xi(fan, xi.xi)) throw XiMismatch("xi is not a positive kernel vector of the ray matrix");
    if (divisors.size() != fan.num_rays()) throw std::invalid_argument("need one curve divisor per ray");
    for (std::size_t j = 0; j < divisors.size(); ++j) {
        if (!divisors[j].is_effective()) throw std::invalid_argument("D_" + std::to_string(j) + " is not effective");
        if (divisors[j].contains(CurvePoint::infinity()))
            throw std::invalid_argument("D_" + std::to_string(j) + " contains the reserved point at infinity");
        if (Integer(divisors[j].degree()) != xi.xi[j])
            throw XiMismatch("deg D_" + std::to_string(j) + " = " + std::to_string(divisors[j].degree()) +
                             " but xi_" + std::to_string(j) + " = " + xi.xi[j].get_str());
    }
    EmbeddingData data;
    data.fan = fan;
    data.h = h;
    data.xi = xi;
    data.divisors = std::move(divisors);
    data.torus = torus;
    for (std::size_t i = 0; i < 3; ++i) {
        IntVector m(3);
        m[i] = 1;
        const CDivisor target = data.character_pullback(m);
        if (target.degree() != 0) throw std::logic_error("sum_j a_ij D_j has nonzero degree despite A xi = 0");
        data.epsilon[i] = principal_function(target).scaled(torus[i]);
    }
    return data;
}

EmbeddingData build_embedding_data(const Fan& fan, const TDivisor& h, const XiVector& xi, std::uint64_t seed,
                                   const TorusElement& torus) {
    if (!is_valid_xi(fan, xi.xi)) throw XiMismatch("xi is not a positive kernel vector of the ray matrix");
    std::vector<CurvePoint> used;
    std::vector<CDivisor> divisors;
    divisors.reserve(fan.num_rays());
    for (std::size_t j = 0; j < fan.num_rays(); ++j) {
        CDivisor d = sample_divisor(xi.xi[j].get_si(), mix_seed(seed, j), used);
        for (const auto& p : d.support()) used.push_back(p);
        divisors.push_back(std::move(d));
    }
    EmbeddingData data = assemble_embedding_data(fan, h, xi, std::move(divisors), torus);
    data.seed = seed;
    return data;
}

ConditionReport check_theorem_conditions(const EmbeddingData& data) {
    ConditionReport report;
    for (const auto& collection : primitive_collections(data.fan)) {
        std::vector<CurvePoint> common = data.divisors.at(collection[0]).support();
        for (std::size_t q = 1; q < collection.size() && !common.empty(); ++q) {
            std::vector<CurvePoint> next;
            for (const auto& p : common)
                if (data.divisors.at(collection[q]).contains(p)) next.push_back(p);
            common = std::move(next);
        }
        if (!common.empty()) {
            report.disjointness = false;
            report.failing_collection = collection;
            report.shared_point = common.front();
            break;
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        IntVector m(3);
        m[i] = 1;
        const CDivisor expected = data.character_pullback(m);
        const CDivisor actual = data.epsilon[i].divisor();
        if (expected == actual) continue;
        report.divisor_relation = false;
        report.failing_basis_index = i;
        std::set<CurvePoint> pts;
        for (const auto& p : expected.support()) pts.insert(p);
        for (const auto& p : actual.support()) pts.insert(p);
        for (const auto& p : pts)
            if (expected.multiplicity(p) != actual.multiplicity(p)) {
                report.mismatch_point = p;
                break;
            }
        break;
    }
    return report;
}

bool ChartMap::in_domain(const CurvePoint& p) const {
    return !std::binary_search(excluded.begin(), excluded.end(), p);
}

ChartMap chart_map(const EmbeddingData& data, std::size_t cone) {
    ChartMap chart;
    chart.cone = cone;
    chart.rays = data.fan.cones.at(cone);
    const IntMatrix duals = cone_duals(data.fan, cone);
    for (std::size_t q = 0; q < 3; ++q) {
        chart.duals[q] = duals.row(q);
        chart.coords[q] = data.epsilon_of(chart.duals[q]);
    }
    std::set<CurvePoint> excluded;
    for (std::size_t j = 0; j < data.fan.num_rays(); ++j) {
        if (j == chart.rays[0] || j == chart.rays[1] || j == chart.rays[2]) continue;
        for (const auto& p : data.divisors[j].support()) excluded.insert(p);
    }
    chart.excluded.assign(excluded.begin(), excluded.end());
    return chart;
}

std::vector<ChartMap> chart_maps(const EmbeddingData& data) {
    std::vector<ChartMap> out;
    out.reserve(data.fan.cones.size());
    for (std::size_t c = 0; c < data.fan.cones.size(); ++c) out.push_back(chart_map(data, c));
    return out;
}

}  // namespace torembed

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "torembed/embed.hpp"
#include "torembed/fan.hpp"

namespace fixtures {

using namespace torembed;

// Complete smooth fan with no ample divisor. Rays u1, u2, u3 = e1, e2, e3,
// u4 = -(e1 + e2 + e3) and w_i = u_i + u4. The quadrilaterals u_i u_{i+1}
// w_{i+1} w_i are all cut along the diagonal from u_i to w_{i+1}, which turns
// the same way around the fan and rules out a strictly convex support function.
inline Fan non_projective() {
    Fan f;
    f.name = "non-projective";
    f.rays = {make_vec3(1, 0, 0),   make_vec3(0, 1, 0),  make_vec3(0, 0, 1), make_vec3(-1, -1, -1),
              make_vec3(0, -1, -1), make_vec3(-1, 0, -1), make_vec3(-1, -1, 0)};
    f.cones = {{0, 1, 2}};
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t u = i, un = (i + 1) % 3, w = 4 + i, wn = 4 + (i + 1) % 3;
        f.cones.push_back({3, w, wn});
        f.cones.push_back({u, un, wn});
        f.cones.push_back({u, w, wn});
    }
    return f;
}

// p3 with xi = (2,2,2,2) and D_j = {r_j, -r_j}: every chart coordinate is an
// even function of t, so s and -s always collide.
inline EmbeddingData symmetric_p3() {
    const Fan f = preset("p3");
    std::vector<CDivisor> ds;
    for (long r = 1; r <= 4; ++r) ds.push_back(CDivisor({{CurvePoint(r), 1}, {CurvePoint(-r), 1}}));
    return assemble_embedding_data(f, unit_divisor(f, 0), XiVector{{2, 2, 2, 2}, XiMethod::Kernel, 1}, ds);
}

// p3 with xi = (2,1,1,2) is not a kernel vector, so use (2,2,2,2) and make
// D_1 the doubled point 2*(5).
inline EmbeddingData doubled_point_p3() {
    const Fan f = preset("p3");
    std::vector<CDivisor> ds{CDivisor({{CurvePoint(5), 2}}), CDivisor({{CurvePoint(1), 1}, {CurvePoint(2), 1}}),
                             CDivisor({{CurvePoint(3), 1}, {CurvePoint(4), 1}}),
                             CDivisor({{CurvePoint(6), 1}, {CurvePoint(7), 1}})};
    return assemble_embedding_data(f, unit_divisor(f, 0), XiVector{{2, 2, 2, 2}, XiMethod::Kernel, 1}, ds);
}

// Pipeline data on p3 with eps(m_1) multiplied by (t - z) for a fresh z.
inline EmbeddingData extra_zero_p3(const Rational& z = Rational(1000)) {
    const Fan f = preset("p3");
    const TDivisor h = unit_divisor(f, 0);
    EmbeddingData data = build_embedding_data(f, h, xi_vector(f, h, XiMethod::Intersection), 11);
    data.epsilon[0] *= RationalFunction(Rational(1), {{z, 1}});
    return data;
}

// p1p1p1 data where the point 1000 is added to both D(e1) and D(-e1); those
// two rays form a primitive collection. Degrees stay consistent by adding the
// point to every divisor of the xi vector (2,...,2) -> (3,...,3).
inline EmbeddingData shared_point_p1p1p1() {
    const Fan f = preset("p1p1p1");
    std::vector<CDivisor> ds;
    for (long j = 0; j < 6; ++j) {
        CDivisor d({{CurvePoint(10 * j + 1), 1}, {CurvePoint(10 * j + 2), 1}});
        if (j <= 1) {
            d.add(CurvePoint(1000), 1);
        } else {
            d.add(CurvePoint(10 * j + 3), 1);
        }
        ds.push_back(d);
    }
    return assemble_embedding_data(f, TDivisor(6, Integer(1)), XiVector{{3, 3, 3, 3, 3, 3}, XiMethod::Kernel, 1}, ds);
}

// Star subdivisions of p3 at seeded random cones until the fan has `rays` rays.
inline Fan random_subdivision(std::uint64_t seed, std::size_t rays) {
    std::mt19937_64 gen(seed);
    Fan f = preset("p3");
    while (f.num_rays() < rays) {
        const std::size_t c = gen() % f.cones.size();
        f = star_subdivision(f, f.cones[c]);
    }
    f.name = "p3-subdivided-" + std::to_string(seed);
    return f;
}

}  // namespace fixtures

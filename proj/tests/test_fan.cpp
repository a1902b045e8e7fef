#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "torembed/errors.hpp"
#include "torembed/fan.hpp"

using namespace torembed;

namespace {

std::vector<std::vector<std::size_t>> sorted(std::vector<std::vector<std::size_t>> v) {
    std::sort(v.begin(), v.end());
    return v;
}

const Wall& wall_between(const std::vector<Wall>& ws, std::size_t i, std::size_t j) {
    for (const auto& w : ws)
        if (w.i == i && w.j == j) return w;
    FAIL("no such wall");
    return ws.front();
}

void check_wall_relations(const Fan& f) {
    for (const Wall& w : walls(f)) {
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(f.rays[w.k][c] + f.rays[w.l][c] + w.a * f.rays[w.i][c] + w.b * f.rays[w.j][c] == 0);
        // k and l are the third rays of the two cones through the wall.
        const auto& s = f.cones[w.cone];
        const auto& t = f.cones[w.other_cone];
        CHECK(std::find(s.begin(), s.end(), w.k) != s.end());
        CHECK(std::find(t.begin(), t.end(), w.l) != t.end());
    }
}

void check_euler(const Fan& f) {
    const ValidationReport v = validate(f);
    CHECK(v.num_cones == 2 * v.num_rays - 4);
    CHECK(v.num_walls == 3 * v.num_rays - 6);
    CHECK(v.num_walls == oracle::count_two_faces(f));
}

}  // namespace

TEST_SUITE("fan") {
    TEST_CASE("presets validate with the expected counts") {
        const ValidationReport p3 = validate(preset("p3"));
        CHECK(p3.smooth);
        CHECK(p3.complete);
        CHECK(p3.num_rays == 4);
        CHECK(p3.num_walls == 6);
        CHECK(p3.num_cones == 4);
        const ValidationReport p111 = validate(preset("p1p1p1"));
        CHECK(p111.smooth);
        CHECK(p111.complete);
        CHECK(p111.num_rays == 6);
        CHECK(p111.num_cones == 8);
        const ValidationReport bl = validate(preset("bl-p3-point"));
        CHECK(bl.smooth);
        CHECK(bl.complete);
        CHECK(bl.num_rays == 5);
        CHECK(bl.num_cones == 6);
        CHECK_THROWS_AS(preset("p2"), UnknownPreset);
    }

    TEST_CASE("preset ray order") {
        const Fan bl = preset("bl-p3-point");
        CHECK(bl.rays[4] == make_vec3(1, 1, 1));
        CHECK(bl.rays[3] == make_vec3(-1, -1, -1));
        const Fan p111 = preset("p1p1p1");
        CHECK(p111.rays[0] == make_vec3(1, 0, 0));
        CHECK(p111.rays[1] == make_vec3(-1, 0, 0));
        CHECK(p111.rays[5] == make_vec3(0, 0, -1));
    }

    TEST_CASE("non-primitive ray is reported with its index") {
        Fan f = preset("p3");
        f.rays[0] = make_vec3(2, 0, 0);
        const ValidationReport v = validate(f);
        CHECK_FALSE(v.smooth);
        REQUIRE(v.bad_ray.has_value());
        CHECK(*v.bad_ray == 0);
    }

    TEST_CASE("deleting a cone breaks completeness") {
        Fan f = preset("p3");
        f.cones.pop_back();
        const ValidationReport v = validate(f);
        CHECK(v.smooth);
        CHECK_FALSE(v.complete);
        CHECK_THROWS_AS(walls(f), NotComplete);
    }

    TEST_CASE("overlapping cones are rejected") {
        // (1,1,1) lies inside <e1,e2,e3>; the extra cone overlaps it.
        Fan f = preset("p3");
        f.rays.push_back(make_vec3(1, 1, 1));
        f.cones.push_back({0, 1, 4});
        CHECK_FALSE(validate(f).complete);
    }

    TEST_CASE("malformed fans are rejected") {
        Fan f = preset("p3");
        f.rays.push_back(f.rays[0]);
        CHECK_THROWS_AS(check_well_formed(f), MalformedFan);
        Fan g = preset("p3");
        g.cones[0] = {0, 1, 9};
        CHECK_THROWS_AS(validate(g), MalformedFan);
        Fan h = preset("p3");
        h.cones[0] = {0, 0, 1};
        CHECK_THROWS_AS(validate(h), MalformedFan);
        Fan z = preset("p3");
        z.rays[0] = make_vec3(0, 0, 0);
        CHECK_THROWS_AS(validate(z), MalformedFan);
    }

    TEST_CASE("wall relations on presets") {
        const auto p111 = walls(preset("p1p1p1"));
        const Wall& w = wall_between(p111, 0, 2);
        CHECK(w.a == 0);
        CHECK(w.b == 0);
        const auto p3 = walls(preset("p3"));
        const Wall& v = wall_between(p3, 0, 1);
        CHECK(v.a == 1);
        CHECK(v.b == 1);
        // Blow-up: e2 + e3 + a e1 + b (1,1,1) = 0 forces a = 1, b = -1.
        const auto bl = walls(preset("bl-p3-point"));
        const Wall& u = wall_between(bl, 0, 4);
        CHECK(((u.k == 1 && u.l == 2) || (u.k == 2 && u.l == 1)));
        CHECK(u.a == 1);
        CHECK(u.b == -1);
        for (const auto& name : preset_names()) check_wall_relations(preset(name));
        check_wall_relations(fixtures::non_projective());
    }

    TEST_CASE("primitive collections match exhaustive search") {
        using V = std::vector<std::vector<std::size_t>>;
        CHECK(primitive_collections(preset("p3")) == V{{0, 1, 2, 3}});
        CHECK(primitive_collections(preset("p1p1p1")) == V{{0, 1}, {2, 3}, {4, 5}});
        const auto bl = primitive_collections(preset("bl-p3-point"));
        CHECK(std::find(bl.begin(), bl.end(), std::vector<std::size_t>{3, 4}) != bl.end());
        CHECK(sorted(bl) == oracle::minimal_non_faces(preset("bl-p3-point")));
        CHECK(sorted(primitive_collections(fixtures::non_projective())) == oracle::minimal_non_faces(fixtures::non_projective()));
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            const Fan f = fixtures::random_subdivision(seed, 9);
            CHECK(sorted(primitive_collections(f)) == oracle::minimal_non_faces(f));
        }
    }

    TEST_CASE("every ray subset is a face or contains a primitive collection") {
        const Fan f = fixtures::random_subdivision(3, 10);
        const auto prim = primitive_collections(f);
        for (unsigned long mask = 1; mask < (1UL << f.num_rays()); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t k = 0; k < f.num_rays(); ++k)
                if (mask & (1UL << k)) s.push_back(k);
            if (s.size() <= 3 && f.is_face(s)) continue;
            const bool contains = std::any_of(prim.begin(), prim.end(), [&](const auto& p) {
                return std::includes(s.begin(), s.end(), p.begin(), p.end());
            });
            CHECK(contains);
        }
    }

    TEST_CASE("star subdivision") {
        const Fan p3 = preset("p3");
        const Fan once = star_subdivision(p3, {0, 1, 2});
        CHECK(once.num_rays() == 5);
        CHECK(once.cones.size() == 6);
        CHECK(once.rays.back() == make_vec3(1, 1, 1));
        const Fan twice = star_subdivision(once, once.cones.back());
        CHECK(twice.num_rays() == 6);
        CHECK(twice.cones.size() == 8);
        const ValidationReport v = validate(twice);
        CHECK(v.smooth);
        CHECK(v.complete);
        CHECK_THROWS_AS(star_subdivision(p3, {0, 1, 4}), ConeNotInFan);
        CHECK_THROWS_AS(star_subdivision(p3, {0, 1, 9}), ConeNotInFan);
        CHECK(once.rays == preset("bl-p3-point").rays);
    }

    TEST_CASE("Euler counts on presets and subdivisions up to twelve rays") {
        for (const auto& name : preset_names()) check_euler(preset(name));
        check_euler(fixtures::non_projective());
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            Fan f = preset("p3");
            std::mt19937_64 gen(seed);
            while (f.num_rays() < 12) {
                f = star_subdivision(f, f.cones[gen() % f.cones.size()]);
                const ValidationReport v = validate(f);
                CHECK(v.smooth);
                CHECK(v.complete);
                check_euler(f);
            }
        }
    }

    TEST_CASE("cone duals are the inverse of the cone matrix") {
        const Fan f = preset("p3");
        // Cone {e2, e3, (-1,-1,-1)}: dual to (-1,-1,-1) is (-1,0,0).
        const IntMatrix d = cone_duals(f, 0);
        CHECK(d.row(2) == IntVector{-1, 0, 0});
        for (std::size_t c = 0; c < f.cones.size(); ++c)
            CHECK(cone_duals(f, c) * f.cone_matrix(c) == IntMatrix::identity(3));
    }
}

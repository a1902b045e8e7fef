#include "torembed/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torembed/errors.hpp"
#include "torembed/lp.hpp"

namespace torembed {

Vec3 make_vec3(long x, long y, long z) { return {Integer(x), Integer(y), Integer(z)}; }

IntVector to_vector(const Vec3& v) { return {v[0], v[1], v[2]}; }

namespace {

std::string format_vec(const Vec3& v) {
    return "(" + v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str() + ")";
}

std::string format_cone(const ConeIndices& c) {
    return "{" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + "}";
}

std::set<std::size_t> as_set(const ConeIndices& c) { return {c[0], c[1], c[2]}; }

bool contains(const ConeIndices& c, std::size_t ray) {
    return c[0] == ray || c[1] == ray || c[2] == ray;
}

// True when the two simplicial cones meet in something larger than the cone
// on their common rays. Exact LP: look for x = B a = B' b with a, b >= 0 and
// positive weight on some non-common ray.
bool overlaps_improperly(const Fan& fan, std::size_t s, std::size_t t) {
    const ConeIndices& cs = fan.cones[s];
    const ConeIndices& ct = fan.cones[t];
    LinearProgram lp(6);
    for (std::size_t v = 0; v < 6; ++v) lp.set_nonnegative(v);
    for (std::size_t coord = 0; coord < 3; ++coord) {
        RatVector row(6);
        for (std::size_t q = 0; q < 3; ++q) {
            row[q] = fan.rays[cs[q]][coord];
            row[3 + q] = -fan.rays[ct[q]][coord];
        }
        lp.add_row(std::move(row), Sense::Eq, 0);
    }
    RatVector norm(6);
    for (std::size_t q = 0; q < 3; ++q) {
        if (!contains(ct, cs[q])) norm[q] = 1;
        if (!contains(cs, ct[q])) norm[3 + q] = 1;
    }
    lp.add_row(std::move(norm), Sense::Eq, 1);
    return lp.minimize().status == LpStatus::Optimal;
}

}  // namespace

IntMatrix Fan::ray_matrix() const {
    IntMatrix a(3, rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j)
        for (std::size_t i = 0; i < 3; ++i) a(i, j) = rays[j][i];
    return a;
}

IntMatrix Fan::cone_matrix(std::size_t cone) const {
    IntMatrix b(3, 3);
    for (std::size_t q = 0; q < 3; ++q)
        for (std::size_t i = 0; i < 3; ++i) b(i, q) = rays.at(cones.at(cone)[q])[i];
    return b;
}

std::optional<std::size_t> Fan::cone_containing(const std::vector<std::size_t>& ray_ids) const {
    for (std::size_t c = 0; c < cones.size(); ++c)
        if (std::all_of(ray_ids.begin(), ray_ids.end(), [&](std::size_t r) { return contains(cones[c], r); }))
            return c;
    return std::nullopt;
}

std::optional<std::size_t> Fan::find_cone(const ConeIndices& cone) const {
    const auto wanted = as_set(cone);
    for (std::size_t c = 0; c < cones.size(); ++c)
        if (as_set(cones[c]) == wanted) return c;
    return std::nullopt;
}

void check_well_formed(const Fan& fan) {
    for (std::size_t j = 0; j < fan.rays.size(); ++j) {
        const Vec3& v = fan.rays[j];
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw MalformedFan("ray " + std::to_string(j) + " is zero");
        for (std::size_t k = 0; k < j; ++k)
            if (fan.rays[k] == v)
                throw MalformedFan("rays " + std::to_string(k) + " and " + std::to_string(j) + " coincide: " +
                                   format_vec(v));
    }
    std::set<std::set<std::size_t>> seen;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        const ConeIndices& cone = fan.cones[c];
        for (std::size_t r : cone)
            if (r >= fan.rays.size())
                throw MalformedFan("cone " + std::to_string(c) + " references ray " + std::to_string(r) +
                                   " out of range");
        auto s = as_set(cone);
        if (s.size() != 3) throw MalformedFan("cone " + std::to_string(c) + " repeats a ray: " + format_cone(cone));
        if (!seen.insert(s).second) throw MalformedFan("cone " + format_cone(cone) + " listed twice");
    }
}

ValidationReport validate(const Fan& fan) {
    check_well_formed(fan);
    ValidationReport report;
    report.num_rays = fan.rays.size();
    report.num_cones = fan.cones.size();

    report.smooth = true;
    for (std::size_t j = 0; j < fan.rays.size(); ++j)
        if (gcd_of(to_vector(fan.rays[j])) != 1) {
            report.smooth = false;
            report.bad_ray = j;
            report.problems.push_back("ray " + std::to_string(j) + " " + format_vec(fan.rays[j]) +
                                      " is not primitive");
            break;
        }
    bool full_dimensional = true;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        Integer d = determinant(fan.cone_matrix(c));
        if (abs(d) != 1) {
            if (report.smooth)
                report.problems.push_back("cone " + format_cone(fan.cones[c]) + " has determinant " + d.get_str());
            report.smooth = false;
            if (d == 0) full_dimensional = false;
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> face_count;
    for (const auto& cone : fan.cones) {
        auto sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        ++face_count[{sorted[0], sorted[1]}];
        ++face_count[{sorted[0], sorted[2]}];
        ++face_count[{sorted[1], sorted[2]}];
    }
    report.num_walls = face_count.size();

    report.complete = !fan.cones.empty() && full_dimensional;
    if (fan.cones.empty()) report.problems.push_back("fan has no maximal cones");
    if (!full_dimensional) report.problems.push_back("a maximal cone is not full-dimensional");
    if (report.complete) {
        for (const auto& [face, count] : face_count)
            if (count != 2) {
                report.complete = false;
                report.problems.push_back("2-face {" + std::to_string(face.first) + "," +
                                          std::to_string(face.second) + "} lies in " + std::to_string(count) +
                                          " maximal cone(s)");
                break;
            }
    }
    if (report.complete) {
        for (std::size_t s = 0; s < fan.cones.size() && report.complete; ++s)
            for (std::size_t t = s + 1; t < fan.cones.size(); ++t)
                if (overlaps_improperly(fan, s, t)) {
                    report.complete = false;
                    report.problems.push_back("cones " + format_cone(fan.cones[s]) + " and " +
                                              format_cone(fan.cones[t]) + " do not meet in a common face");
                    break;
                }
    }
    return report;
}

IntMatrix cone_duals(const Fan& fan, std::size_t cone) {
    // Rows of B^{-1} pair with the columns of B.
    return unimodular_inverse(fan.cone_matrix(cone));
}

std::vector<Wall> walls(const Fan& fan) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> adjacent;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        auto sorted = fan.cones[c];
        std::sort(sorted.begin(), sorted.end());
        adjacent[{sorted[0], sorted[1]}].emplace_back(c, sorted[2]);
        adjacent[{sorted[0], sorted[2]}].emplace_back(c, sorted[1]);
        adjacent[{sorted[1], sorted[2]}].emplace_back(c, sorted[0]);
    }
    std::vector<Wall> out;
    out.reserve(adjacent.size());
    for (const auto& [face, cones] : adjacent) {
        if (cones.size() != 2)
            throw NotComplete("2-face {" + std::to_string(face.first) + "," + std::to_string(face.second) +
                              "} lies in " + std::to_string(cones.size()) + " maximal cone(s)");
        Wall w;
        w.i = face.first;
        w.j = face.second;
        w.cone = cones[0].first;
        w.k = cones[0].second;
        w.other_cone = cones[1].first;
        w.l = cones[1].second;

        const IntMatrix duals = cone_duals(fan, w.cone);
        const ConeIndices& c = fan.cones[w.cone];
        auto dual_of = [&](std::size_t ray) {
            for (std::size_t q = 0; q < 3; ++q)
                if (c[q] == ray) return duals.row(q);
            throw std::logic_error("ray not in cone");
        };
        const IntVector nl = to_vector(fan.rays[w.l]);
        w.a = -dot(dual_of(w.i), nl);
        w.b = -dot(dual_of(w.j), nl);
        if (dot(dual_of(w.k), nl) != -1)
            throw MalformedFan("cones " + format_cone(fan.cones[w.cone]) + " and " + format_cone(fan.cones[w.other_cone]) +
                               " are not separated by their common wall");
        for (std::size_t q = 0; q < 3; ++q)
            if (fan.rays[w.k][q] + fan.rays[w.l][q] + w.a * fan.rays[w.i][q] + w.b * fan.rays[w.j][q] != 0)
                throw std::logic_error("wall relation failed to verify");
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<std::vector<std::size_t>> primitive_collections(const Fan& fan) {
    const std::size_t r = fan.rays.size();
    std::vector<std::vector<std::size_t>> out;
    auto all_faces_below = [&](const std::vector<std::size_t>& s) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> sub;
            for (std::size_t q = 0; q < s.size(); ++q)
                if (q != drop) sub.push_back(s[q]);
            if (!fan.is_face(sub)) return false;
        }
        return true;
    };
    std::vector<std::size_t> s;
    // Enumerate subsets of size 2..4 in lexicographic order per size.
    for (std::size_t size = 2; size <= std::min<std::size_t>(4, r); ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t q = 0; q < size; ++q) idx[q] = q;
        while (true) {
            if (!fan.is_face(idx) && all_faces_below(idx)) out.push_back(idx);
            std::size_t q = size;
            while (q > 0 && idx[q - 1] == r - size + q - 1) --q;
            if (q == 0) break;
            ++idx[q - 1];
            for (std::size_t p = q; p < size; ++p) idx[p] = idx[p - 1] + 1;
        }
    }
    return out;
}

Fan star_subdivision(const Fan& fan, const ConeIndices& cone) {
    check_well_formed(fan);
    auto pos = fan.find_cone(cone);
    if (!pos) throw ConeNotInFan("cone " + format_cone(cone) + " is not a maximal cone of the fan");
    const ConeIndices old = fan.cones[*pos];

    Fan out;
    out.name = fan.name + "+star" + format_cone(old);
    out.rays = fan.rays;
    Vec3 sum;
    for (std::size_t i = 0; i < 3; ++i) sum[i] = fan.rays[old[0]][i] + fan.rays[old[1]][i] + fan.rays[old[2]][i];
    const std::size_t fresh = out.rays.size();
    out.rays.push_back(sum);

    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        if (c != *pos) {
            out.cones.push_back(fan.cones[c]);
            continue;
        }
        for (std::size_t q = 0; q < 3; ++q) {
            ConeIndices replaced = old;
            replaced[q] = fresh;
            out.cones.push_back(replaced);
        }
    }
    return out;
}

std::vector<std::string> preset_names() { return {"p3", "p1p1p1", "bl-p3-point"}; }

Fan preset(const std::string& name) {
    if (name == "p3") {
        Fan f;
        f.name = "p3";
        f.rays = {make_vec3(1, 0, 0), make_vec3(0, 1, 0), make_vec3(0, 0, 1), make_vec3(-1, -1, -1)};
        f.cones = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
        return f;
    }
    if (name == "p1p1p1") {
        Fan f;
        f.name = "p1p1p1";
        f.rays = {make_vec3(1, 0, 0),  make_vec3(-1, 0, 0), make_vec3(0, 1, 0),
                  make_vec3(0, -1, 0), make_vec3(0, 0, 1),  make_vec3(0, 0, -1)};
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y)
                for (std::size_t z = 0; z < 2; ++z) f.cones.push_back({x, 2 + y, 4 + z});
        return f;
    }
    if (name == "bl-p3-point") {
        Fan f = star_subdivision(preset("p3"), {0, 1, 2});
        f.name = "bl-p3-point";
        return f;
    }
    throw UnknownPreset("unknown preset '" + name + "'");
}

}  // namespace torembed

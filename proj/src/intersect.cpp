#include "torembed/intersect.hpp"

#include <algorithm>

#include "torembed/errors.hpp"
#include "torembed/lp.hpp"

namespace torembed {

TDivisor unit_divisor(const Fan& fan, std::size_t ray) {
    TDivisor d(fan.num_rays());
    d.at(ray) = 1;
    return d;
}

TDivisor character_divisor(const Fan& fan, const IntVector& m) {
    TDivisor d(fan.num_rays());
    for (std::size_t j = 0; j < fan.num_rays(); ++j) d[j] = dot(m, to_vector(fan.rays[j]));
    return d;
}

Integer wall_curve_degree(const Wall& wall, const TDivisor& d) {
    return d.at(wall.k) + d.at(wall.l) + wall.a * d.at(wall.i) + wall.b * d.at(wall.j);
}

namespace {

// m with <m, n_ray> = -1 and <m, n> = 0 on the other rays of `cone`.
IntVector shift_character(const Fan& fan, std::size_t cone, std::size_t ray) {
    const IntMatrix duals = cone_duals(fan, cone);
    for (std::size_t q = 0; q < 3; ++q)
        if (fan.cones[cone][q] == ray) {
            IntVector m = duals.row(q);
            for (auto& x : m) x = -x;
            return m;
        }
    throw std::logic_error("shift_character: ray not in cone");
}

bool in_cone(const ConeIndices& c, std::size_t ray) { return c[0] == ray || c[1] == ray || c[2] == ray; }

Integer distinct_product(const Fan& fan, std::size_t i, std::size_t j, std::size_t k) {
    return fan.is_face({i, j, k}) ? 1 : 0;
}

// V_a^2 V_b for a != b. Replacing one V_a by V_a + div(m) clears every
// coefficient in the chosen cone, leaving only distinct-index terms.
Integer square_times(const Fan& fan, std::size_t a, std::size_t b) {
    auto cone = fan.cone_containing({a, b});
    if (!cone) return 0;
    const IntVector m = shift_character(fan, *cone, a);
    Integer total = 0;
    for (std::size_t p = 0; p < fan.num_rays(); ++p) {
        if (in_cone(fan.cones[*cone], p)) continue;
        Integer coeff = dot(m, to_vector(fan.rays[p]));
        if (coeff != 0) total += coeff * distinct_product(fan, a, b, p);
    }
    return total;
}

Integer cube(const Fan& fan, std::size_t a) {
    auto cone = fan.cone_containing({a});
    if (!cone) return 0;
    const IntVector m = shift_character(fan, *cone, a);
    Integer total = 0;
    for (std::size_t p = 0; p < fan.num_rays(); ++p) {
        if (in_cone(fan.cones[*cone], p)) continue;
        Integer coeff = dot(m, to_vector(fan.rays[p]));
        if (coeff != 0) total += coeff * square_times(fan, a, p);
    }
    return total;
}

void require_smooth_complete(const Fan& fan) {
    check_well_formed(fan);
    for (std::size_t c = 0; c < fan.cones.size(); ++c) cone_duals(fan, c);
    walls(fan);
}

}  // namespace

Integer triple_intersection(const Fan& fan, std::size_t i, std::size_t j, std::size_t k) {
    std::array<std::size_t, 3> idx{i, j, k};
    for (std::size_t x : idx)
        if (x >= fan.num_rays()) throw std::out_of_range("triple_intersection: ray index out of range");
    std::sort(idx.begin(), idx.end());
    if (idx[0] != idx[1] && idx[1] != idx[2]) return distinct_product(fan, idx[0], idx[1], idx[2]);
    if (idx[0] == idx[2]) return cube(fan, idx[0]);
    if (idx[0] == idx[1]) return square_times(fan, idx[0], idx[2]);
    return square_times(fan, idx[1], idx[0]);
}

IntersectionTable::IntersectionTable(const Fan& fan) : r_(fan.num_rays()), table_(r_ * r_ * r_) {
    require_smooth_complete(fan);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = i; j < r_; ++j)
            for (std::size_t k = j; k < r_; ++k) {
                Integer v = triple_intersection(fan, i, j, k);
                const std::array<std::size_t, 3> p{i, j, k};
                std::array<std::size_t, 3> perm{0, 1, 2};
                do {
                    table_[(p[perm[0]] * r_ + p[perm[1]]) * r_ + p[perm[2]]] = v;
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
}

const Integer& IntersectionTable::operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return table_.at((i * r_ + j) * r_ + k);
}

Integer IntersectionTable::product(const TDivisor& d1, const TDivisor& d2, const TDivisor& d3) const {
    if (d1.size() != r_ || d2.size() != r_ || d3.size() != r_)
        throw std::invalid_argument("divisor length does not match the fan");
    Integer total = 0;
    for (std::size_t i = 0; i < r_; ++i) {
        if (d1[i] == 0) continue;
        for (std::size_t j = 0; j < r_; ++j) {
            if (d2[j] == 0) continue;
            for (std::size_t k = 0; k < r_; ++k) {
                if (d3[k] == 0) continue;
                total += d1[i] * d2[j] * d3[k] * (*this)(i, j, k);
            }
        }
    }
    return total;
}

bool is_ample(const Fan& fan, const TDivisor& d) {
    if (d.size() != fan.num_rays()) throw std::invalid_argument("divisor length does not match the fan");
    const auto ws = walls(fan);
    std::vector<IntVector> support(fan.cones.size());
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        const IntMatrix duals = cone_duals(fan, c);
        IntVector m(3);
        for (std::size_t q = 0; q < 3; ++q)
            for (std::size_t x = 0; x < 3; ++x) m[x] -= d[fan.cones[c][q]] * duals(q, x);
        support[c] = std::move(m);
    }
    for (const Wall& w : ws) {
        if (dot(support[w.cone], to_vector(fan.rays[w.l])) <= -d[w.l]) return false;
        if (dot(support[w.other_cone], to_vector(fan.rays[w.k])) <= -d[w.k]) return false;
    }
    return true;
}

namespace {

RatVector wall_row(const Wall& w, std::size_t r) {
    RatVector row(r);
    row[w.k] += 1;
    row[w.l] += 1;
    row[w.i] += w.a;
    row[w.j] += w.b;
    return row;
}

Integer denominator_lcm(const RatVector& x) {
    Integer l = 1;
    for (const auto& v : x) l = lcm(l, v.get_den());
    return l;
}

IntVector scale_to_integers(const RatVector& x) {
    const Integer l = denominator_lcm(x);
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Rational v = x[i] * l;
        out[i] = v.get_num();
    }
    return out;
}

}  // namespace

TDivisor find_ample(const Fan& fan) {
    const auto ws = walls(fan);
    const std::size_t r = fan.num_rays();
    // Every class has a representative vanishing on the first cone; there the
    // support function of an ample divisor is positive, so sum c_j is bounded.
    LinearProgram lp(r);
    for (std::size_t q = 0; q < 3; ++q) {
        RatVector pin(r);
        pin[fan.cones.at(0)[q]] = 1;
        lp.add_row(std::move(pin), Sense::Eq, 0);
    }
    for (const Wall& w : ws) lp.add_row(wall_row(w, r), Sense::GreaterEq, 1);
    lp.set_objective(RatVector(r, Rational(1)));
    LpResult res = lp.minimize();
    if (res.status == LpStatus::Infeasible)
        throw NotProjective("no divisor is positive on every invariant curve of '" + fan.name + "'");
    if (res.status != LpStatus::Optimal) throw std::logic_error("find_ample: unbounded normalised program");
    TDivisor h = scale_to_integers(res.x);
    if (!is_ample(fan, h)) throw std::logic_error("find_ample: solution failed the ampleness check");
    return h;
}

std::vector<Rational> non_projectivity_certificate(const Fan& fan) {
    const auto ws = walls(fan);
    const std::size_t r = fan.num_rays();
    LinearProgram lp(ws.size());
    for (std::size_t w = 0; w < ws.size(); ++w) lp.set_nonnegative(w);
    std::vector<RatVector> rows;
    for (const Wall& w : ws) rows.push_back(wall_row(w, r));
    for (std::size_t j = 0; j < r; ++j) {
        RatVector eq(ws.size());
        for (std::size_t w = 0; w < ws.size(); ++w) eq[w] = rows[w][j];
        lp.add_row(std::move(eq), Sense::Eq, 0);
    }
    lp.add_row(RatVector(ws.size(), Rational(1)), Sense::Eq, 1);
    LpResult res = lp.minimize();
    if (res.status != LpStatus::Optimal) return {};
    return res.x;
}

std::string to_string(XiMethod m) { return m == XiMethod::Intersection ? "intersection" : "kernel"; }

XiMethod xi_method_from_string(const std::string& s) {
    if (s == "intersection") return XiMethod::Intersection;
    if (s == "kernel") return XiMethod::Kernel;
    throw std::invalid_argument("unknown xi method '" + s + "'");
}

bool is_valid_xi(const Fan& fan, const IntVector& xi) {
    if (xi.size() != fan.num_rays()) return false;
    if (!std::all_of(xi.begin(), xi.end(), [](const Integer& x) { return x > 0; })) return false;
    const IntVector ax = fan.ray_matrix() * xi;
    return std::all_of(ax.begin(), ax.end(), [](const Integer& x) { return x == 0; });
}

XiVector xi_vector(const Fan& fan, const TDivisor& h, XiMethod method, const FunctionField& curve) {
    XiVector out;
    out.method = method;
    const std::size_t r = fan.num_rays();
    if (method == XiMethod::Intersection) {
        if (!is_ample(fan, h)) throw NotAmple("H is not ample on '" + fan.name + "'");
        IntersectionTable table(fan);
        out.xi.resize(r);
        for (std::size_t j = 0; j < r; ++j) out.xi[j] = table.product(h, h, unit_divisor(fan, j));
    } else {
        const IntMatrix a = fan.ray_matrix();
        LinearProgram lp(r);
        for (std::size_t j = 0; j < r; ++j) {
            lp.set_nonnegative(j);
            RatVector lower(r);
            lower[j] = 1;
            lp.add_row(std::move(lower), Sense::GreaterEq, 1);
        }
        for (std::size_t i = 0; i < 3; ++i) {
            RatVector row(r);
            for (std::size_t j = 0; j < r; ++j) row[j] = a(i, j);
            lp.add_row(std::move(row), Sense::Eq, 0);
        }
        lp.set_objective(RatVector(r, Rational(1)));
        LpResult res = lp.minimize();
        if (res.status != LpStatus::Optimal) throw NoPositiveKernel("ray matrix has no strictly positive kernel vector");
        out.xi = scale_to_integers(res.x);
    }
    if (!is_valid_xi(fan, out.xi)) throw NoPositiveKernel("computed xi is not a positive kernel vector");

    const Integer threshold = 2 * curve.genus();
    const Integer smallest = *std::min_element(out.xi.begin(), out.xi.end());
    Integer k = 1;
    while (k * smallest <= threshold) ++k;
    out.scale = k;
    for (auto& x : out.xi) x *= k;
    return out;
}

}  // namespace torembed

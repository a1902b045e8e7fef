#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torembed/linalg.hpp"

namespace torembed {

/// Primitive generator of a ray in the rank-3 lattice N.
using Vec3 = std::array<Integer, 3>;
using ConeIndices = std::array<std::size_t, 3>;

Vec3 make_vec3(long x, long y, long z);
IntVector to_vector(const Vec3& v);

/// A simplicial fan in N = Z^3, stored by its rays and maximal cones. Ray
/// order is the canonical index order for every per-ray vector downstream.
struct Fan {
    std::string name;
    std::vector<Vec3> rays;
    std::vector<ConeIndices> cones;

    std::size_t num_rays() const { return rays.size(); }

    /// 3 x r matrix whose columns are the rays; row i holds <m_i, n_j>.
    IntMatrix ray_matrix() const;
    /// 3 x 3 matrix with the cone's rays as columns, in stored order.
    IntMatrix cone_matrix(std::size_t cone) const;
    /// Index of the first maximal cone containing all the given rays.
    std::optional<std::size_t> cone_containing(const std::vector<std::size_t>& ray_ids) const;
    bool is_face(const std::vector<std::size_t>& ray_ids) const { return cone_containing(ray_ids).has_value(); }
    std::optional<std::size_t> find_cone(const ConeIndices& cone) const;

    friend bool operator==(const Fan&, const Fan&) = default;
};

struct ValidationReport {
    bool smooth = false;
    bool complete = false;
    std::size_t num_rays = 0;
    std::size_t num_walls = 0;
    std::size_t num_cones = 0;
    /// Human-readable reasons for a false flag (first offending item each).
    std::vector<std::string> problems;
    /// Ray index of the first non-primitive ray, if any.
    std::optional<std::size_t> bad_ray;
};

/// Throws MalformedFan for duplicate or zero rays, out-of-range or repeated
/// cone indices, and duplicate cones.
void check_well_formed(const Fan& fan);

ValidationReport validate(const Fan& fan);

/// A 2-face shared by two maximal cones, with the relation
///   n_k + n_l + a n_i + b n_j = 0
/// where k and l are the third rays of the two cones.
struct Wall {
    std::size_t i = 0, j = 0;
    std::size_t cone = 0, other_cone = 0;
    std::size_t k = 0, l = 0;
    Integer a, b;
};

/// One wall per 2-face, ordered by (i, j) with i < j. Throws NotComplete if a
/// 2-face does not lie in exactly two maximal cones.
std::vector<Wall> walls(const Fan& fan);

/// Minimal ray subsets that do not span a cone, each sorted, in lexicographic
/// order. Minimal non-faces of a triangulated 2-sphere have at most 4 rays.
std::vector<std::vector<std::size_t>> primitive_collections(const Fan& fan);

/// Replaces `cone` by three cones around the new ray n_1 + n_2 + n_3, which is
/// appended as the last ray. The three new cones take the old cone's position.
Fan star_subdivision(const Fan& fan, const ConeIndices& cone);

/// Named presets: "p3", "p1p1p1", "bl-p3-point".
Fan preset(const std::string& name);
std::vector<std::string> preset_names();

/// Duals of the cone's rays: row q of the result pairs to 1 with the q-th ray
/// of the cone (stored order) and to 0 with the other two.
IntMatrix cone_duals(const Fan& fan, std::size_t cone);

}  // namespace torembed

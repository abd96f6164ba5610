#pragma once

#include "casbem/types.hpp"

#include <array>
#include <filesystem>
#include <vector>

namespace casbem::geom {

/// Multi-object triangle surface mesh. Triangles of one object are stored
/// contiguously and carry its id; vertices are not shared across objects.
/// Lengths are dimensionless in a user scale L.
struct TriScene {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> object_id;        // one entry per triangle
    std::vector<Vec3> object_offset;   // accumulated rigid displacement per object

    int object_count() const { return static_cast<int>(object_offset.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }

    Vec3 triangle_vertex(int tri, int corner) const {
        return vertices[static_cast<size_t>(triangles[tri][corner])];
    }
    double triangle_area(int tri) const;
    Vec3 triangle_centroid(int tri) const;
    Vec3 triangle_normal(int tri) const; // unit, by winding
    double triangle_max_edge(int tri) const;

    double total_area() const;
    Vec3 object_centroid(int object) const;
};

/// Closed icosphere: icosahedron subdivided `subdivisions` times, vertices
/// projected onto the sphere of the given radius.
TriScene generate_sphere(double radius, int subdivisions);

/// Closed capsule: cylinder of hemispherically capped total length along
/// `axis`, meshed as rings of quads split into triangles with pole fans.
/// `resolution` is the number of subdivisions along a quarter arc of a cap.
TriScene generate_capsule(double total_length, double radius, int resolution,
                          const Vec3& axis = Vec3(0, 0, 1));

/// Open square plate in the z=0 plane, centered at the origin,
/// 2*resolution^2 triangles. Boundary edges carry no RWG function.
TriScene generate_plate(double side, int resolution);

/// Rigid translation of one object; all other objects are untouched.
TriScene translate_object(const TriScene& scene, int object, const Vec3& delta);

/// Concatenate two scenes; object ids of `b` are shifted past those of `a`.
TriScene merge_scenes(const TriScene& a, const TriScene& b);

/// Check all TriScene invariants (manifold edges, consistent winding,
/// positive areas, contiguous grouped object ids). Throws MeshError.
void validate_scene(const TriScene& scene);

struct EdgeCensus {
    int interior = 0;  // shared by exactly two triangles
    int boundary = 0;  // owned by exactly one triangle
    int total = 0;
};
EdgeCensus census_edges(const TriScene& scene);

/// Minimum surface-to-surface distance between two objects, computed from
/// point-triangle distances in both directions.
double min_gap(const TriScene& scene, int object_a, int object_b);

/// Minimum gap over all object pairs; throws for single-object scenes.
double min_gap(const TriScene& scene);

// OFF mesh I/O. Faces may carry a trailing per-face object id (extension);
// plain OFF files load as a single object.
TriScene load_off(const std::filesystem::path& path);
void save_off(const TriScene& scene, const std::filesystem::path& path);

} // namespace casbem::geom

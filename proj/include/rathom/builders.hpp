#pragma once

#include "rathom/simplicial_complex.hpp"

namespace rathom {

/// Boundary of the m-simplex on vertices 0..m, a triangulated (m-1)-sphere.
/// Requires m >= 1.
SimplicialComplex simplex_boundary(int m);

SimplicialComplex point();

/// Mobius-Csaszar torus: 7 vertices, 14 triangles.
SimplicialComplex torus7();

/// Six-vertex real projective plane (hemi-icosahedron).
SimplicialComplex rp2_6();

/// Eight-vertex Klein bottle, 16 triangles.
SimplicialComplex klein8();

// The operations below keep the labels of `x` and relabel everything else
// past x.max_label(), so the result never collides with `x`.

SimplicialComplex disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y);

/// Identifies `x_base` in x with `y_base` in y.  Throws if either basepoint
/// is not a vertex of its complex.
SimplicialComplex wedge(const SimplicialComplex& x, const SimplicialComplex& y, Vertex x_base,
                        Vertex y_base);

SimplicialComplex cone(const SimplicialComplex& x);

/// Two cone points over x.
SimplicialComplex suspension(const SimplicialComplex& x);

}  // namespace rathom

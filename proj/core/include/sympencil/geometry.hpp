#pragma once

#include "sympencil/canonical.hpp"
#include "sympencil/extract.hpp"
#include "sympencil/pencil.hpp"

namespace sympencil {

/// Matrix of X ↦ (XᵀA + AX, XᵀB + BX) in upper-triangle coordinates.
///
/// Rows: the n(n+1)/2 upper-triangle entries of the A-image, then those of the
/// B-image. Columns: the n² entries of X in column-major order.
ComplexMatrix tangent_map_matrix(const SymmetricPencil& s);

/// n(n+1) − rank of the tangent map.
int codim_orbit_numeric(const SymmetricPencil& s, const RankOptions& opts = {});

/// Orbit codimension minus the number of distinct eigenvalues (∞ included)
/// found by extract_structure.
int codim_bundle_numeric(const SymmetricPencil& s, const ExtractOptions& opts = {});

/// (n−a)(n−r+1).
int codim_orbit_generic(const GenericComponent& c);

/// (n+1)(n−r) − a(n−r−1).
int codim_bundle_generic(const GenericComponent& c);

}  // namespace sympencil

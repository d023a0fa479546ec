#pragma once

#include <string>
#include <string_view>

#include "dmt/gradient.hpp"
#include "dmt/matrix.hpp"
#include "dmt/morse_complex.hpp"

namespace dmt {

// GVF files: one pair per line, "alpha_vertices | sigma_vertices"
// (e.g. "1 | 1 2"); '#' starts a comment. An empty file is the empty field.
GradientVectorField parse_gvf(const SimplicialComplex& K, std::string_view text);
std::string serialize_gvf(const SimplicialComplex& K, const GradientVectorField& V);

// DMF files: one line per simplex, "vertices : value" with an integer or
// "p/q" rational value; every simplex of K must be assigned exactly once.
DiscreteMorseFunction parse_dmf(const SimplicialComplex& K, std::string_view text);
std::string serialize_dmf(const SimplicialComplex& K, const DiscreteMorseFunction& f);

// "dim q: rows=R, cols=C" headers followed by dense rows.
std::string dump_boundary_matrices(const std::vector<Mat>& D);

}  // namespace dmt

#pragma once

#include <vector>

#include "dmt/gradient.hpp"
#include "dmt/matrix.hpp"

namespace dmt {

// The discrete Morse chain complex of an acyclic matching: one free module
// per dimension on the critical simplices, with boundary entries given by
// signed gradient-path counts. basis[q] lists critical ids sorted by
// (dimension, lexicographic vertices); D[q] maps dimension q to q-1 with
// columns indexed by basis[q]. D[q] * D[q+1] == 0 is asserted at build time.
struct MorseChainComplex {
  const SimplicialComplex* K = nullptr;
  GradientVectorField V;
  std::vector<std::vector<int>> basis;
  std::vector<Mat> D;

  int dim() const { return static_cast<int>(basis.size()) - 1; }
  int basis_index(int q, int id) const;
};

MorseChainComplex build_morse_complex(const SimplicialComplex& K, const GradientVectorField& V,
                                      const Limits& limits = {});

enum class CoeffMode { boundary, same_dimension };

// n^f(sigma, alpha): boundary mode needs dim alpha == dim sigma - 1, the
// same-dimension mode equal dimensions.
long long connectedness_coefficient(const SimplicialComplex& K, const GradientVectorField& V,
                                    int sigma, int alpha, CoeffMode mode,
                                    const Limits& limits = {});

// Betti numbers over Q from boundary matrices D[0..d] (D[d+1] treated as 0):
// beta_q = dim ker D_q - rank D_{q+1}, by exact elimination.
std::vector<long long> betti_of(const std::vector<Mat>& D);
std::vector<long long> betti(const MorseChainComplex& C);
std::vector<long long> simplicial_betti(const SimplicialComplex& K);

struct MorseEqualityReport {
  std::vector<long long> critical_counts;
  long long critical_alt_sum = 0;
  long long euler = 0;
  std::vector<long long> betti;
  long long betti_alt_sum = 0;
  bool pass = false;
};

MorseEqualityReport morse_equality_report(const SimplicialComplex& K,
                                          const GradientVectorField& V,
                                          const Limits& limits = {});

}  // namespace dmt

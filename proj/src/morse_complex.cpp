#include "dmt/morse_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmt {

int MorseChainComplex::basis_index(int q, int id) const {
  if (q < 0 || q >= static_cast<int>(basis.size())) return -1;
  auto it = std::lower_bound(basis[q].begin(), basis[q].end(), id);
  if (it == basis[q].end() || *it != id) return -1;
  return static_cast<int>(it - basis[q].begin());
}

MorseChainComplex build_morse_complex(const SimplicialComplex& K, const GradientVectorField& V,
                                      const Limits& limits) {
  if (!is_acyclic(K, V.pairs())) throw std::invalid_argument("gradient vector field is cyclic");
  MorseChainComplex C;
  C.K = &K;
  C.V = V;
  C.basis = critical_set(K, V);  // id order is (dim, lex) order
  C.D.resize(K.dimension() + 1);
  for (int q = 0; q <= K.dimension(); ++q) {
    std::size_t rows = (q == 0) ? 0 : C.basis[q - 1].size();
    C.D[q] = Mat(rows, C.basis[q].size());
    if (q == 0) continue;
    for (std::size_t j = 0; j < C.basis[q].size(); ++j) {
      for (std::size_t r = 0; r < C.basis[q - 1].size(); ++r) {
        long long n = boundary_coefficient(K, V, C.basis[q][j], C.basis[q - 1][r], limits);
        if (n != 0) C.D[q](r, j) = n;
      }
    }
  }
  for (int q = 0; q < K.dimension(); ++q) {
    if (!(C.D[q] * C.D[q + 1]).is_zero()) {
      throw std::logic_error("Morse boundary does not square to zero");
    }
  }
  return C;
}

long long connectedness_coefficient(const SimplicialComplex& K, const GradientVectorField& V,
                                    int sigma, int alpha, CoeffMode mode, const Limits& limits) {
  if (mode == CoeffMode::boundary) return boundary_coefficient(K, V, sigma, alpha, limits);
  return samedim_coefficient(K, V, sigma, alpha, limits);
}

std::vector<long long> betti_of(const std::vector<Mat>& D) {
  std::vector<long long> beta(D.size());
  for (std::size_t q = 0; q < D.size(); ++q) {
    long long n = static_cast<long long>(D[q].cols());
    long long r = static_cast<long long>(D[q].rank());
    long long r_above = (q + 1 < D.size()) ? static_cast<long long>(D[q + 1].rank()) : 0;
    beta[q] = n - r - r_above;
  }
  return beta;
}

std::vector<long long> betti(const MorseChainComplex& C) { return betti_of(C.D); }

std::vector<long long> simplicial_betti(const SimplicialComplex& K) {
  std::vector<Mat> D(K.dimension() + 1);
  for (int q = 0; q <= K.dimension(); ++q) D[q] = K.boundary_matrix(q);
  return betti_of(D);
}

MorseEqualityReport morse_equality_report(const SimplicialComplex& K,
                                          const GradientVectorField& V, const Limits& limits) {
  MorseEqualityReport rep;
  auto crit = critical_set(K, V);
  for (const auto& c : crit) rep.critical_counts.push_back(static_cast<long long>(c.size()));
  for (std::size_t q = 0; q < rep.critical_counts.size(); ++q) {
    rep.critical_alt_sum += (q % 2 == 0) ? rep.critical_counts[q] : -rep.critical_counts[q];
  }
  rep.euler = K.euler_characteristic();
  rep.betti = betti(build_morse_complex(K, V, limits));
  for (std::size_t q = 0; q < rep.betti.size(); ++q) {
    rep.betti_alt_sum += (q % 2 == 0) ? rep.betti[q] : -rep.betti[q];
  }
  rep.pass = rep.critical_alt_sum == rep.euler && rep.euler == rep.betti_alt_sum;
  return rep;
}

}  // namespace dmt

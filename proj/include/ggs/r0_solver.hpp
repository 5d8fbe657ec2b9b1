// Computes the canonical Cartan part r0_tilde of the r-matrix for a triple:
// skew matrix in the dual basis of (alpha_i - tau alpha_i), congruence to the
// dual basis of (alpha_i), then expansion over the diagonal matrix units via
// the fundamental coweights of sl(n).

#ifndef GGS_R0_SOLVER_HPP
#define GGS_R0_SOLVER_HPP

#include "ggs/bd_triple.hpp"
#include "ggs/rat_matrix.hpp"

#include <vector>

namespace ggs {

// An element of h (x) h: entries[i][k] is the coefficient of e_ii (x) e_kk.
struct CartanTensor {
    int n = 0;
    RatMatrix entries;

    CartanTensor() = default;
    explicit CartanTensor(int n_) : n(n_), entries(n_, n_) {}

    Rat& at(int i, int k) { return entries.at(i, k); }
    const Rat& at(int i, int k) const { return entries.at(i, k); }

    bool operator==(const CartanTensor&) const = default;
};

// Cartan projection of the swap element: (n-1)/n on the diagonal, -1/n off.
CartanTensor p0(int n);

// r0_tilde as a skew (n-1)x(n-1) matrix in the basis dual to
// (alpha_i - tau alpha_i): rows in Gamma1 from the inner-product formula
// b_ij = (alpha_i + tau alpha_i, alpha_j - tau alpha_j)/2, rows outside
// Gamma1 by skew-symmetry, free entries set to zero.
RatMatrix r0_tilde_f_basis(const BDTriple& t);

// Matrix of 1 - tau on the simple-root basis; column i holds the
// coordinates of alpha_i - tau alpha_i. Invertible for valid triples.
RatMatrix one_minus_tau_matrix(const BDTriple& t);

// b' = M^{-T} b M^{-1} with M = one_minus_tau_matrix(t).
RatMatrix change_to_g_basis(const RatMatrix& b, const BDTriple& t);

// [r0_tilde] over e_ii (x) e_kk: W^T b' W where row i of W holds the
// fundamental coweight dual to alpha_i in diagonal-unit coordinates.
CartanTensor expand_to_weight_basis(const RatMatrix& bp, int n);

// Skewness plus, for every alpha in Gamma1,
//   ((alpha - tau alpha) (x) 1) r = ((alpha + tau alpha) (x) 1) P0 / 2.
bool validate_r0(const BDTriple& t, const CartanTensor& r);

// r' variants of the homogeneous system: skew and
// ((alpha - tau alpha) (x) 1) r' = 0 for all alpha in Gamma1.
bool in_free_space(const BDTriple& t, const CartanTensor& r);

// Basis of the free space, dimension C(n-m-1, 2): each unordered pair
// i < j outside Gamma1 contributes an elementary skew matrix pushed
// through the same basis-change pipeline.
std::vector<CartanTensor> free_space_basis(const BDTriple& t);

// Full pipeline with the zero choice for the free entries; the result
// always satisfies validate_r0.
CartanTensor r0_tilde(const BDTriple& t);

} // namespace ggs

#endif

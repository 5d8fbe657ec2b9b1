// Construction of the GGS matrix R for a triple and its Cartan part:
// the precedence relation with signs, the tensors a, c, epsilon, a_tilde,
// the standard R_s, and the diagonal conjugation.

#ifndef GGS_R_MATRIX_HPP
#define GGS_R_MATRIX_HPP

#include "ggs/banded.hpp"
#include "ggs/bd_triple.hpp"
#include "ggs/r0_solver.hpp"

#include <optional>
#include <vector>

namespace ggs {

// e_i - e_j with i < j; as a chain of simple roots alpha_i + .. + alpha_{j-1}.
struct PositiveRoot {
    int i = 0, j = 0;
    auto operator<=>(const PositiveRoot&) const = default;
};

std::vector<PositiveRoot> positive_roots(int n);

// Image of a positive root under the additive extension of tau, together
// with whether the underlying simple-root chain is traversed in reverse.
struct RootImage {
    PositiveRoot root;
    bool reversed = false;
};

// Defined exactly on roots all of whose simple summands lie in Gamma1.
std::optional<RootImage> extend_tau(const BDTriple& t, const PositiveRoot& a);

// alpha precedes beta (tau^k(alpha) = beta, k >= 1) with the sign
// (-1)^p when the iterate carries alpha's left endpoint to beta's right
// endpoint, +1 otherwise.
struct PrecPair {
    PositiveRoot alpha, beta;
    int sign = 1;
};

std::vector<PrecPair> prec_pairs(const BDTriple& t);

// a = sum over prec pairs of sign * (e_{-alpha} (x) e_beta - e_beta (x)
// e_{-alpha}); entries are the constants +1 or -1.
BandedOperator build_a(const BDTriple& t);

// c = (1/2) sum_{alpha>0} (e_{-alpha} (x) e_alpha - e_alpha (x) e_{-alpha})
BandedOperator build_c(int n);

// epsilon = ac + ca + a^2; constant entries
BandedOperator build_epsilon(const BandedOperator& a, const BandedOperator& c);

// entry-wise s * q^(s * eps) over the support of a, with s = +-1
BandedOperator build_a_tilde(const BandedOperator& a, const BandedOperator& eps);

// Standard Drinfeld-Jimbo R-matrix: q e_ii (x) e_ii + e_ii (x) e_kk (i != k)
// + q_hat e_ik (x) e_ki (i > k).
BandedOperator build_rs(int n);

// q^r x q^r for diagonal r: entry (i,k,j) picks up q^(r[i][k] + r[j][i+k-j]).
BandedOperator conjugate_by_q_r0(const BandedOperator& x, const CartanTensor& r);

// R = q^{r0} (R_s + q_hat a_tilde) q^{r0}; requires validate_r0(t, r).
BandedOperator build_R(const BDTriple& t, const CartanTensor& r);

} // namespace ggs

#endif

#include "ggs/r0_solver.hpp"

#include <stdexcept>

namespace ggs {

CartanTensor p0(int n) {
    if (n < 2) throw std::invalid_argument("p0: n must be >= 2");
    CartanTensor p(n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) p.at(i, k) = i == k ? Rat(n - 1, n) : Rat(-1, n);
    return p;
}

namespace {

// (alpha_i + s1 * tau alpha_i, alpha_j + s2 * tau alpha_j), with
// tau alpha = 0 outside Gamma1.
Rat bracket(const BDTriple& t, int i, int s1, int j, int s2) {
    const int n = t.n;
    Rat v = inner_product(i, j, n);
    if (t.defined(j)) v += s2 * inner_product(i, t.image(j), n);
    if (t.defined(i)) {
        v += s1 * inner_product(t.image(i), j, n);
        if (t.defined(j)) v += s1 * s2 * inner_product(t.image(i), t.image(j), n);
    }
    return v;
}

} // namespace

RatMatrix r0_tilde_f_basis(const BDTriple& t) {
    const int n = t.n;
    RatMatrix b(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            if (t.defined(i)) {
                b.at(i, j) = bracket(t, i, +1, j, -1) / 2;
                // rows i,j both in Gamma1 are doubly determined; the two
                // formulas must agree with skew-symmetry
                if (t.defined(j) && b.at(i, j) != -bracket(t, j, +1, i, -1) / 2)
                    throw std::logic_error("r0_tilde_f_basis: skew consistency violated");
            } else if (t.defined(j)) {
                b.at(i, j) = -bracket(t, j, +1, i, -1) / 2;
            }
            // i, j both outside Gamma1: free entry, chosen 0
        }
    if (!b.is_skew()) throw std::logic_error("r0_tilde_f_basis: result not skew");
    return b;
}

RatMatrix one_minus_tau_matrix(const BDTriple& t) {
    const int n = t.n;
    RatMatrix m(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
        m.at(i, i) += 1;
        if (t.defined(i)) m.at(t.image(i), i) -= 1;
    }
    return m;
}

RatMatrix change_to_g_basis(const RatMatrix& b, const BDTriple& t) {
    RatMatrix minv;
    try {
        minv = one_minus_tau_matrix(t).inverse();
    } catch (const std::domain_error&) {
        throw std::logic_error("change_to_g_basis: 1 - tau singular; triple not nilpotent");
    }
    return minv.transpose() * b * minv;
}

namespace {

// Row i: the fundamental coweight dual to alpha_i, in e_jj coordinates:
// (1/n)((n-i)(e_11+..+e_ii) - i(e_{i+1,i+1}+..+e_nn)).
RatMatrix coweight_matrix(int n) {
    RatMatrix w(n - 1, n);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j) w.at(i, j) = j <= i ? Rat(n - i, n) : Rat(-i, n);
    return w;
}

} // namespace

CartanTensor expand_to_weight_basis(const RatMatrix& bp, int n) {
    RatMatrix w = coweight_matrix(n);
    RatMatrix half = bp * w; // (n-1) x n intermediate
    // First column must reproduce (1/n) sum_j (n-j) bp_ij.
    for (int i = 1; i < n; ++i) {
        Rat expected = 0;
        for (int j = 1; j < n; ++j) expected += Rat(n - j) * bp.at(i, j);
        if (half.at(i, 1) != expected / n)
            throw std::logic_error("expand_to_weight_basis: first-column identity violated");
    }
    CartanTensor r(n);
    r.entries = w.transpose() * half;
    return r;
}

namespace {

// lambda applied to the first tensor leg: k-th entry sum_a lambda_a r[a][k].
std::vector<Rat> apply_first_leg(const std::vector<Rat>& lambda, const RatMatrix& m) {
    std::vector<Rat> out(m.cols(), Rat(0));
    for (int k = 1; k <= m.cols(); ++k)
        for (int a = 1; a <= m.rows(); ++a)
            if (lambda[a - 1] != 0) out[k - 1] += lambda[a - 1] * m.at(a, k);
    return out;
}

// coordinates of alpha_i + s * tau alpha_i in the e basis
std::vector<Rat> root_functional(const BDTriple& t, int i, int s) {
    std::vector<Rat> v(t.n, Rat(0));
    v[i - 1] += 1;
    v[i] -= 1;
    int w = t.image(i);
    if (w == 0) throw std::logic_error("root_functional: index outside Gamma1");
    v[w - 1] += s;
    v[w] -= s;
    return v;
}

} // namespace

bool validate_r0(const BDTriple& t, const CartanTensor& r) {
    if (r.n != t.n) throw std::invalid_argument("validate_r0: shape mismatch");
    if (!r.entries.is_skew()) return false;
    CartanTensor p = p0(t.n);
    for (int i : t.gamma1()) {
        auto lhs = apply_first_leg(root_functional(t, i, -1), r.entries);
        auto rhs = apply_first_leg(root_functional(t, i, +1), p.entries);
        for (int k = 0; k < t.n; ++k)
            if (lhs[k] != rhs[k] / 2) return false;
    }
    return true;
}

bool in_free_space(const BDTriple& t, const CartanTensor& r) {
    if (r.n != t.n) throw std::invalid_argument("in_free_space: shape mismatch");
    if (!r.entries.is_skew()) return false;
    for (int i : t.gamma1()) {
        auto lhs = apply_first_leg(root_functional(t, i, -1), r.entries);
        for (const Rat& v : lhs)
            if (v != 0) return false;
    }
    return true;
}

std::vector<CartanTensor> free_space_basis(const BDTriple& t) {
    const int n = t.n;
    std::vector<CartanTensor> basis;
    for (int i = 1; i < n; ++i) {
        if (t.defined(i)) continue;
        for (int j = i + 1; j < n; ++j) {
            if (t.defined(j)) continue;
            RatMatrix e(n - 1, n - 1);
            e.at(i, j) = 1;
            e.at(j, i) = -1;
            basis.push_back(expand_to_weight_basis(change_to_g_basis(e, t), n));
        }
    }
    return basis;
}

CartanTensor r0_tilde(const BDTriple& t) {
    if (!is_valid_triple(t)) throw std::invalid_argument("r0_tilde: invalid triple");
    return expand_to_weight_basis(change_to_g_basis(r0_tilde_f_basis(t), t), t.n);
}

} // namespace ggs

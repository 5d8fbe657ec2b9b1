#include "ggs/r_matrix.hpp"

#include <stdexcept>

namespace ggs {

std::vector<PositiveRoot> positive_roots(int n) {
    std::vector<PositiveRoot> out;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
    return out;
}

std::optional<RootImage> extend_tau(const BDTriple& t, const PositiveRoot& a) {
    // chain of simple roots alpha_i .. alpha_{j-1}
    for (int s = a.i; s < a.j; ++s)
        if (!t.defined(s)) return std::nullopt;
    int lo = t.image(a.i), hi = lo;
    for (int s = a.i; s < a.j; ++s) {
        int v = t.image(s);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    // the isometry condition makes the image a run of the same length
    if (hi - lo != a.j - 1 - a.i)
        throw std::logic_error("extend_tau: image of a chain is not a chain");
    bool reversed = a.j - a.i > 1 && t.image(a.i) == hi;
    return RootImage{PositiveRoot{lo, hi + 1}, reversed};
}

std::vector<PrecPair> prec_pairs(const BDTriple& t) {
    std::vector<PrecPair> out;
    for (const PositiveRoot& alpha : positive_roots(t.n)) {
        const int p = alpha.j - alpha.i - 1; // common chain length - 1
        PositiveRoot cur = alpha;
        int left_image = alpha.i; // simple index tracking tau^k(alpha_left)
        while (true) {
            auto img = extend_tau(t, cur);
            if (!img) break;
            left_image = t.image(left_image);
            cur = img->root;
            // right endpoint of cur's chain is simple root cur.j - 1
            int sign = (left_image == cur.j - 1 && p % 2 == 1) ? -1 : 1;
            out.push_back({alpha, cur, sign});
        }
    }
    return out;
}

BandedOperator build_a(const BDTriple& t) {
    BandedOperator a(t.n);
    for (const PrecPair& pr : prec_pairs(t)) {
        LaurentPoly s = LaurentPoly::constant(pr.sign);
        // e_{-alpha} (x) e_beta: first leg e_{j_a, i_a}, second leg e_{i_b, j_b}
        a.add(pr.alpha.j, pr.beta.i, pr.alpha.i, s);
        // - e_beta (x) e_{-alpha}
        a.add(pr.beta.i, pr.alpha.j, pr.beta.j, -s);
    }
    return a;
}

BandedOperator build_c(int n) {
    BandedOperator c(n);
    LaurentPoly half = LaurentPoly::constant(Rat(1, 2));
    for (const PositiveRoot& a : positive_roots(n)) {
        c.add(a.j, a.i, a.i, half);
        c.add(a.i, a.j, a.j, -half);
    }
    return c;
}

BandedOperator build_epsilon(const BandedOperator& a, const BandedOperator& c) {
    return banded_mul(a, c) + banded_mul(c, a) + banded_mul(a, a);
}

BandedOperator build_a_tilde(const BandedOperator& a, const BandedOperator& eps) {
    BandedOperator out(a.n);
    for (const auto& [k, p] : a.entries()) {
        if (!p.is_constant()) throw std::logic_error("build_a_tilde: non-constant entry in a");
        Rat s = p.constant_value();
        LaurentPoly e = eps.get(k.i, k.k, k.j);
        if (!e.is_constant()) throw std::logic_error("build_a_tilde: non-constant entry in epsilon");
        LaurentPoly term = LaurentPoly::q_power(s * e.constant_value());
        if (s == -1)
            term = -term;
        else if (s != 1)
            throw std::logic_error("build_a_tilde: entry of a is not +-1");
        out.add(k.i, k.k, k.j, term);
    }
    return out;
}

BandedOperator build_rs(int n) {
    BandedOperator r(n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            r.set(i, k, i, i == k ? LaurentPoly::q_power(1) : LaurentPoly::constant(1));
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k < i; ++k) r.set(i, k, k, LaurentPoly::q_hat());
    return r;
}

BandedOperator conjugate_by_q_r0(const BandedOperator& x, const CartanTensor& r) {
    if (x.n != r.n) throw std::invalid_argument("conjugate_by_q_r0: shape mismatch");
    BandedOperator out(x.n);
    for (const auto& [k, p] : x.entries()) {
        Rat e = r.at(k.i, k.k) + r.at(k.j, k.i + k.k - k.j);
        out.add(k.i, k.k, k.j, p * LaurentPoly::q_power(e));
    }
    return out;
}

BandedOperator build_R(const BDTriple& t, const CartanTensor& r) {
    if (!validate_r0(t, r)) throw std::invalid_argument("build_R: r0 does not satisfy the constraints");
    BandedOperator a = build_a(t);
    BandedOperator eps = build_epsilon(a, build_c(t.n));
    BandedOperator inner = build_rs(t.n) + build_a_tilde(a, eps).scaled(LaurentPoly::q_hat());
    return conjugate_by_q_r0(inner, r);
}

} // namespace ggs

#include "ggs/verifier.hpp"

#include "ggs/r_matrix.hpp"

#include <array>
#include <chrono>
#include <map>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace ggs {

namespace {

using QKey = std::array<int, 5>; // (i,j,k,l,m)

// Both sides of the QYBE in component form, accumulated by walking triples
// of nonzero entries of R; every produced index tuple is automatically in
// range because it comes from a real product of matrix units.
void qybe_sides_sparse(const BandedOperator& R, std::map<QKey, LaurentPoly>& lhs,
                       std::map<QKey, LaurentPoly>& rhs) {
    auto accumulate = [](std::map<QKey, LaurentPoly>& m, const QKey& key, const LaurentPoly& v) {
        if (v.is_zero()) return;
        auto it = m.find(key);
        if (it == m.end()) {
            m.emplace(key, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) m.erase(it);
        }
    };
    const auto& es = R.entries();
    for (const auto& [x, px] : es) {
        for (const auto& [y, py] : es) {
            // LHS R12 R13 R23: x in legs (1,2), y in (1,3), z in (2,3)
            if (y.i == x.j) {
                LaurentPoly pxy = px * py;
                for (const auto& [z, pz] : es) {
                    if (z.i != x.i + x.k - x.j || z.k != y.i + y.k - y.j) continue;
                    accumulate(lhs, {x.i, y.j, x.k, z.j, y.k}, pxy * pz);
                }
            }
            // RHS R23 R13 R12: x in legs (2,3), y in (1,3), z in (1,2)
            if (y.k == x.i + x.k - x.j) {
                LaurentPoly pxy = px * py;
                for (const auto& [z, pz] : es) {
                    if (z.i != y.j || z.k != x.j) continue;
                    accumulate(rhs, {y.i, z.j, x.i, z.i + z.k - z.j, x.k}, pxy * pz);
                }
            }
        }
    }
}

void qybe_side_terms(const BandedOperator& R, int i, int j, int k, int l, int m,
                     LaurentPoly& lhs, LaurentPoly& rhs) {
    for (int p = 1; p <= R.n; ++p) {
        lhs += R.get(i, k, k + i - p) * R.get(k + i - p, m, j) * R.get(p, m + k + i - p - j, l);
        rhs += R.get(k, m, p) * R.get(i, m + k - p, j + l - p) * R.get(j + l - p, p, j);
    }
}

} // namespace

CheckResult check_qybe(const BandedOperator& R, bool full_range, bool verbose) {
    CheckResult res;
    auto record = [&](const QKey& key, LaurentPoly l, LaurentPoly r) {
        CheckFailure f{{key.begin(), key.end()}, std::move(l), std::move(r)};
        if (res.ok) {
            res.ok = false;
            res.failure = f;
        }
        if (verbose) res.all_failures.push_back(std::move(f));
    };
    if (full_range) {
        const int n = R.n;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l)
                        for (int m = 1; m <= n; ++m) {
                            LaurentPoly lhs, rhs;
                            qybe_side_terms(R, i, j, k, l, m, lhs, rhs);
                            if (lhs != rhs) {
                                record({i, j, k, l, m}, std::move(lhs), std::move(rhs));
                                if (!verbose) return res;
                            }
                        }
        return res;
    }
    std::map<QKey, LaurentPoly> lhs, rhs;
    qybe_sides_sparse(R, lhs, rhs);
    // walk both maps in lexicographic key order so the first witness matches
    // the full-range scan
    auto il = lhs.begin();
    auto ir = rhs.begin();
    while (il != lhs.end() || ir != rhs.end()) {
        if (ir == rhs.end() || (il != lhs.end() && il->first < ir->first)) {
            record(il->first, il->second, {});
            ++il;
        } else if (il == lhs.end() || ir->first < il->first) {
            record(ir->first, {}, ir->second);
            ++ir;
        } else {
            if (il->second != ir->second) record(il->first, il->second, ir->second);
            ++il;
            ++ir;
        }
        if (!res.ok && !verbose) return res;
    }
    return res;
}

CheckResult check_hecke(const BandedOperator& R, bool verbose) {
    CheckResult res;
    const int n = R.n;
    const LaurentPoly qhat = LaurentPoly::q_hat();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                LaurentPoly lhs;
                for (int l = 1; l <= n; ++l) lhs += R.get(k, i, l) * R.get(k + i - l, l, j);
                LaurentPoly rhs = qhat * R.get(k, i, j);
                if (i == j) rhs += LaurentPoly::constant(1);
                if (lhs != rhs) {
                    CheckFailure f{{i, j, k}, std::move(lhs), std::move(rhs)};
                    if (res.ok) {
                        res.ok = false;
                        res.failure = f;
                    }
                    if (verbose)
                        res.all_failures.push_back(std::move(f));
                    else
                        return res;
                }
            }
    return res;
}

namespace {

// Dense matrices of Laurent polynomials for the brute-force oracle.
struct DenseMat {
    int dim = 0;
    std::vector<LaurentPoly> e;

    explicit DenseMat(int d) : dim(d), e(d * d) {}
    LaurentPoly& at(int r, int c) { return e[r * dim + c]; } // 0-indexed
    const LaurentPoly& at(int r, int c) const { return e[r * dim + c]; }

    DenseMat operator*(const DenseMat& o) const {
        DenseMat r(dim);
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k) {
                const LaurentPoly& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < dim; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += a * o.at(k, j);
                }
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& p : e)
            if (!p.is_zero()) return false;
        return true;
    }

    bool operator==(const DenseMat& o) const { return dim == o.dim && e == o.e; }
};

DenseMat densify(const BandedOperator& R) {
    const int n = R.n;
    DenseMat m(n * n);
    for (const auto& [k, p] : R.entries())
        m.at((k.i - 1) * n + (k.k - 1), (k.j - 1) * n + (k.i + k.k - k.j - 1)) = p;
    return m;
}

// Embeddings into the triple tensor product; legs index rows/cols as
// (a-1)n^2 + (b-1)n + (c-1).
DenseMat embed(const DenseMat& r2, int n, int leg_a, int leg_b) {
    DenseMat m(n * n * n);
    auto split = [n](int x, int idx[3]) {
        idx[0] = x / (n * n);
        idx[1] = (x / n) % n;
        idx[2] = x % n;
    };
    for (int row = 0; row < n * n * n; ++row)
        for (int col = 0; col < n * n * n; ++col) {
            int ri[3], ci[3];
            split(row, ri);
            split(col, ci);
            bool fixed_ok = true;
            for (int leg = 0; leg < 3; ++leg)
                if (leg != leg_a && leg != leg_b && ri[leg] != ci[leg]) fixed_ok = false;
            if (!fixed_ok) continue;
            m.at(row, col) = r2.at(ri[leg_a] * n + ri[leg_b], ci[leg_a] * n + ci[leg_b]);
        }
    return m;
}

} // namespace

std::pair<bool, bool> dense_oracle(const BandedOperator& R) {
    const int n = R.n;
    if (n > 4) throw std::invalid_argument("dense_oracle: refusing n > 4");
    DenseMat r2 = densify(R);

    DenseMat r12 = embed(r2, n, 0, 1);
    DenseMat r13 = embed(r2, n, 0, 2);
    DenseMat r23 = embed(r2, n, 1, 2);
    bool qybe = (r12 * r13) * r23 == (r23 * r13) * r12;

    // (PR - q)(PR + q^{-1}) = 0 with P the tensor swap
    DenseMat pr(n * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int c = 0; c < n * n; ++c) pr.at(i * n + k, c) = r2.at(k * n + i, c);
    DenseMat left = pr, right = pr;
    for (int d = 0; d < n * n; ++d) {
        left.at(d, d) = left.at(d, d) - LaurentPoly::q_power(1);
        right.at(d, d) = right.at(d, d) + LaurentPoly::q_power(-1);
    }
    bool hecke = (left * right).is_zero();
    return {qybe, hecke};
}

bool gauge_check(const BDTriple& t, const BandedOperator& R, const CartanTensor& rp) {
    if (!in_free_space(t, rp))
        throw std::invalid_argument("gauge_check: r' is not in the free space");
    BandedOperator shifted = conjugate_by_q_r0(R, rp);
    return check_qybe(shifted).ok && check_hecke(shifted).ok;
}

BandedOperator inject_fault(const BandedOperator& R, const FaultSpec& f) {
    if (R.nonzero_count() == 0) throw std::invalid_argument("inject_fault: R has no entries");
    BandedOperator out = R;
    std::size_t target = f.entry_index % R.nonzero_count();
    std::size_t pos = 0;
    for (const auto& [k, p] : R.entries()) {
        if (pos++ != target) continue;
        LaurentPoly perturbed = p;
        perturbed.add_term(p.terms().begin()->first, 1);
        out.set(k.i, k.k, k.j, perturbed);
        break;
    }
    return out;
}

VerificationReport verify_triple(const BDTriple& t, const std::optional<FaultSpec>& fault,
                                 bool verbose) {
    VerificationReport rep;
    rep.triple = t;
    auto start = std::chrono::steady_clock::now();
    try {
        rep.r0 = r0_tilde(t);
        BandedOperator R = build_R(t, rep.r0);
        if (fault) R = inject_fault(R, *fault);
        CheckResult q = check_qybe(R, false, verbose);
        CheckResult h = check_hecke(R, verbose);
        rep.qybe_ok = q.ok;
        rep.hecke_ok = h.ok;
        if (!q.ok) {
            rep.witness = q.failure;
            rep.witness_check = "qybe";
        } else if (!h.ok) {
            rep.witness = h.failure;
            rep.witness_check = "hecke";
        }
    } catch (const std::exception& ex) {
        rep.error = ex.what();
        rep.qybe_ok = rep.hecke_ok = false;
    }
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
    return rep;
}

namespace {

nlohmann::json report_json(const VerificationReport& rep) {
    nlohmann::json j;
    auto& jt = j["triple"] = nlohmann::json::array();
    for (auto [s, d] : rep.triple.pairs()) jt.push_back({s, d});
    auto& jr = j["r0"] = nlohmann::json::array();
    for (int i = 1; i <= rep.r0.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 1; k <= rep.r0.n; ++k) row.push_back(rat_str(rep.r0.at(i, k)));
        jr.push_back(row);
    }
    j["qybe_ok"] = rep.qybe_ok;
    j["hecke_ok"] = rep.hecke_ok;
    if (rep.witness) {
        j["witness"] = {{"check", rep.witness_check},
                        {"indices", rep.witness->indices},
                        {"lhs", rep.witness->lhs.str()},
                        {"rhs", rep.witness->rhs.str()}};
    }
    if (!rep.error.empty()) j["error"] = rep.error;
    j["ms"] = rep.ms;
    return j;
}

} // namespace

std::string report_to_json(const VerificationReport& rep) { return report_json(rep).dump(); }

std::string reports_to_json(int n, const std::vector<VerificationReport>& reps) {
    std::size_t passed = 0;
    for (const auto& r : reps)
        if (r.passed()) ++passed;
    nlohmann::json j;
    j["n"] = n;
    j["total"] = reps.size();
    j["passed"] = passed;
    j["failed"] = reps.size() - passed;
    auto& arr = j["results"] = nlohmann::json::array();
    for (const auto& r : reps) arr.push_back(report_json(r));
    return j.dump(2);
}

} // namespace ggs

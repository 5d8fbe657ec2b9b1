// Exact verification of the quantum Yang-Baxter equation and the Hecke
// relation in banded component form, with a dense brute-force cross-check
// for small n and the gauge-shift property test.

#ifndef GGS_VERIFIER_HPP
#define GGS_VERIFIER_HPP

#include "ggs/banded.hpp"
#include "ggs/bd_triple.hpp"
#include "ggs/r0_solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ggs {

struct CheckFailure {
    std::vector<int> indices; // (i,j,k,l,m) for QYBE, (i,j,k) for Hecke
    LaurentPoly lhs, rhs;
};

struct CheckResult {
    bool ok = true;
    std::optional<CheckFailure> failure; // first witness in lexicographic order
    std::vector<CheckFailure> all_failures; // populated in verbose mode only
};

// sum_p r_{ik}^{k+i-p} r_{k+i-p,m}^j r_{p,m+k+i-p-j}^l
//   == sum_p r_{km}^p r_{i,m+k-p}^{j+l-p} r_{j+l-p,p}^j  for all i,j,k,l,m.
// Default walks only over triples of nonzero entries; full_range audits
// every index tuple directly (slow, test use).
CheckResult check_qybe(const BandedOperator& R, bool full_range = false, bool verbose = false);

// sum_l r_{ki}^l r_{k+i-l,l}^j == delta_ij + q_hat r_{ki}^j  for all i,j,k.
CheckResult check_hecke(const BandedOperator& R, bool verbose = false);

// Expands R densely, forms the n^3 x n^3 leg embeddings, and checks
// R12 R13 R23 = R23 R13 R12 and (PR - q)(PR + q^{-1}) = 0 by full matrix
// arithmetic. Guarded to n <= 4.
std::pair<bool, bool> dense_oracle(const BandedOperator& R);

// Conjugates R by q^{r'} for r' in the free space and re-runs both checks.
bool gauge_check(const BDTriple& t, const BandedOperator& R, const CartanTensor& rp);

struct VerificationReport {
    BDTriple triple;
    CartanTensor r0;
    bool qybe_ok = false;
    bool hecke_ok = false;
    std::optional<CheckFailure> witness;
    std::string witness_check; // "qybe" or "hecke" when witness is set
    std::string error;         // nonempty if a pipeline stage threw
    double ms = 0;

    bool passed() const { return error.empty() && qybe_ok && hecke_ok; }
};

struct FaultSpec {
    std::size_t entry_index = 0; // which nonzero entry of R, in key order
};

// Full pipeline for one triple: r0, R, both checks. Never throws; stage
// errors land in the report. An optional fault perturbs one coefficient of
// R by +1 before checking (test hook).
VerificationReport verify_triple(const BDTriple& t,
                                 const std::optional<FaultSpec>& fault = std::nullopt,
                                 bool verbose = false);

// Adds 1 to one coefficient of the entry_index-th nonzero entry of R.
BandedOperator inject_fault(const BandedOperator& R, const FaultSpec& f);

// JSON record for one report; reports_to_json wraps a batch with its
// summary {n, total, passed, failed}.
std::string report_to_json(const VerificationReport& rep);
std::string reports_to_json(int n, const std::vector<VerificationReport>& reps);

} // namespace ggs

#endif

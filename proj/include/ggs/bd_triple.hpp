// Belavin-Drinfeld triples of type A_{n-1}: validation, enumeration, and
// canonical forms modulo the index-reversal / inverse-map symmetry group.

#ifndef GGS_BD_TRIPLE_HPP
#define GGS_BD_TRIPLE_HPP

#include <compare>
#include <string>
#include <vector>

namespace ggs {

// A triple (tau, Gamma1, Gamma2) on the simple roots alpha_1..alpha_{n-1}.
// tau[i-1] = 0 means alpha_i is outside Gamma1; otherwise tau maps i to
// tau[i-1]. Gamma1 and Gamma2 are derived, never stored.
struct BDTriple {
    int n = 2;
    std::vector<int> tau; // length n-1, entries in {0, 1..n-1}

    BDTriple() : tau(1, 0) {}
    explicit BDTriple(int n_) : n(n_), tau(n_ - 1, 0) {}
    BDTriple(int n_, std::vector<std::pair<int, int>> pairs);

    bool defined(int i) const { return tau[i - 1] != 0; }
    int image(int i) const { return tau[i - 1]; } // 0 if undefined

    std::vector<int> gamma1() const;
    std::vector<int> gamma2() const;
    int gamma1_size() const;

    // pairs [source, target], sorted by source; the catalog encoding
    std::vector<std::pair<int, int>> pairs() const;

    auto operator<=>(const BDTriple&) const = default;

    std::string str() const;
};

// Gram matrix of the A_{n-1} simple roots: 2, -1 (adjacent), 0.
int inner_product(int i, int j, int n);

// Conditions (a) isometry and (b) nilpotency, plus injectivity.
bool is_valid_triple(const BDTriple& t);

// Every valid triple (not modulo isomorphism), deterministic lexicographic
// order. Uses run-structure pruning: tau maps each maximal run of Gamma1
// onto a run of equal length, order-preserving or order-reversing, with
// images of distinct runs non-adjacent.
std::vector<BDTriple> enumerate_all(int n);

// The two isomorphism generators: (a) index reversal m -> n-m on both
// sides, (b) inverse map.
BDTriple reverse_indices(const BDTriple& t);
BDTriple invert(const BDTriple& t);

// Minimum of the 4-element orbit {t, a(t), b(t), ab(t)} under the default
// (n, tau-array) lexicographic order. Idempotent.
BDTriple canonical_form(const BDTriple& t);

struct TripleCatalog {
    int n = 2;
    std::vector<BDTriple> triples; // canonical representatives, sorted

    std::size_t count() const { return triples.size(); }
};

// Orbit representatives in sorted order; counts reproduce the published
// census (1, 2, 4, 13, 41, 161, 611, 2490, 10434, 45069, 201300, 919479
// for n = 2..13).
TripleCatalog enumerate_canonical(int n);

// Catalog JSON: {"n":3,"count":2,"triples":[[],[[1,2]]]}
std::string catalog_to_json(const TripleCatalog& cat);
TripleCatalog catalog_from_json(const std::string& text);

// Parse a triple literal like [[1,2],[3,4]]; throws std::invalid_argument
// on malformed input or an invalid triple.
BDTriple triple_from_json(int n, const std::string& text);

} // namespace ggs

#endif

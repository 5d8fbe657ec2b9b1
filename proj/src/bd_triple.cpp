#include "ggs/bd_triple.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace ggs {

BDTriple::BDTriple(int n_, std::vector<std::pair<int, int>> ps) : n(n_), tau(n_ - 1, 0) {
    for (auto [src, dst] : ps) {
        if (src < 1 || src > n - 1 || dst < 1 || dst > n - 1)
            throw std::invalid_argument("BDTriple: root index out of range");
        if (tau[src - 1] != 0)
            throw std::invalid_argument("BDTriple: duplicate source index");
        tau[src - 1] = dst;
    }
}

std::vector<int> BDTriple::gamma1() const {
    std::vector<int> g;
    for (int i = 1; i < n; ++i)
        if (defined(i)) g.push_back(i);
    return g;
}

std::vector<int> BDTriple::gamma2() const {
    std::vector<int> g;
    for (int i = 1; i < n; ++i)
        if (defined(i)) g.push_back(tau[i - 1]);
    std::sort(g.begin(), g.end());
    return g;
}

int BDTriple::gamma1_size() const {
    int m = 0;
    for (int i = 1; i < n; ++i)
        if (defined(i)) ++m;
    return m;
}

std::vector<std::pair<int, int>> BDTriple::pairs() const {
    std::vector<std::pair<int, int>> ps;
    for (int i = 1; i < n; ++i)
        if (defined(i)) ps.emplace_back(i, tau[i - 1]);
    return ps;
}

std::string BDTriple::str() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (auto [s, d] : pairs()) {
        if (!first) out << ", ";
        first = false;
        out << s << "->" << d;
    }
    out << "}";
    return out.str();
}

int inner_product(int i, int j, int n) {
    if (i < 1 || i > n - 1 || j < 1 || j > n - 1)
        throw std::invalid_argument("inner_product: root index out of range");
    if (i == j) return 2;
    if (i - j == 1 || j - i == 1) return -1;
    return 0;
}

bool is_valid_triple(const BDTriple& t) {
    const int n = t.n;
    if (n < 2 || (int)t.tau.size() != n - 1) return false;
    for (int v : t.tau)
        if (v < 0 || v > n - 1) throw std::invalid_argument("is_valid_triple: tau entry out of range");

    auto g1 = t.gamma1();

    // injectivity
    std::vector<char> seen(n, 0);
    for (int i : g1) {
        int v = t.image(i);
        if (seen[v]) return false;
        seen[v] = 1;
    }

    // (a) isometry on all pairs of Gamma1
    for (int i : g1)
        for (int j : g1)
            if (inner_product(t.image(i), t.image(j), n) != inner_product(i, j, n)) return false;

    // (b) nilpotency: iterating tau leaves Gamma1 within n-1 steps
    for (int i : g1) {
        int cur = i;
        int steps = 0;
        while (t.defined(cur)) {
            cur = t.image(cur);
            if (++steps >= n) return false;
        }
    }
    return true;
}

namespace {

struct Run {
    int start = 0;
    int len = 0;
};

std::vector<Run> runs_of(const std::vector<int>& sorted_indices) {
    std::vector<Run> rs;
    for (std::size_t p = 0; p < sorted_indices.size();) {
        Run r{sorted_indices[p], 1};
        while (p + r.len < sorted_indices.size() && sorted_indices[p + r.len] == r.start + r.len) ++r.len;
        p += r.len;
        rs.push_back(r);
    }
    return rs;
}

// Recursively place image runs (one per source run, equal length,
// order-preserving or -reversing, pairwise non-adjacent), then filter by
// nilpotency.
void assign_runs(const std::vector<Run>& runs, std::size_t idx, int n, BDTriple& t,
                 std::vector<BDTriple>& out) {
    if (idx == runs.size()) {
        bool nilpotent = true;
        for (int i = 1; i < n && nilpotent; ++i) {
            int cur = i, steps = 0;
            while (t.defined(cur)) {
                cur = t.image(cur);
                if (++steps >= n) {
                    nilpotent = false;
                    break;
                }
            }
        }
        if (nilpotent) out.push_back(t);
        return;
    }
    const Run& r = runs[idx];
    for (int s = 1; s + r.len - 1 <= n - 1; ++s) {
        // image interval [s, s+len-1] must be non-adjacent to earlier images
        bool ok = true;
        for (std::size_t p = 0; p < idx && ok; ++p) {
            int lo = t.image(runs[p].start);
            int hi = t.image(runs[p].start + runs[p].len - 1);
            if (lo > hi) std::swap(lo, hi);
            if (s <= hi + 1 && s + r.len - 1 >= lo - 1) ok = false;
        }
        if (!ok) continue;
        for (int orient = 0; orient < (r.len == 1 ? 1 : 2); ++orient) {
            for (int d = 0; d < r.len; ++d)
                t.tau[r.start + d - 1] = orient == 0 ? s + d : s + r.len - 1 - d;
            assign_runs(runs, idx + 1, n, t, out);
        }
    }
    for (int d = 0; d < r.len; ++d) t.tau[r.start + d - 1] = 0;
}

} // namespace

std::vector<BDTriple> enumerate_all(int n) {
    if (n < 2) throw std::invalid_argument("enumerate_all: n must be >= 2");
    std::vector<BDTriple> out;
    const int m = n - 1;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> g1;
        for (int i = 1; i <= m; ++i)
            if (mask & (1u << (i - 1))) g1.push_back(i);
        auto runs = runs_of(g1);
        BDTriple t(n);
        assign_runs(runs, 0, n, t, out);
    }
    return out;
}

BDTriple reverse_indices(const BDTriple& t) {
    BDTriple r(t.n);
    for (int m = 1; m < t.n; ++m) {
        int v = t.image(t.n - m);
        if (v != 0) r.tau[m - 1] = t.n - v;
    }
    return r;
}

BDTriple invert(const BDTriple& t) {
    BDTriple r(t.n);
    for (int i = 1; i < t.n; ++i)
        if (t.defined(i)) r.tau[t.image(i) - 1] = i;
    return r;
}

BDTriple canonical_form(const BDTriple& t) {
    if (!is_valid_triple(t)) throw std::invalid_argument("canonical_form: invalid triple");
    BDTriple best = t;
    for (const BDTriple& c : {reverse_indices(t), invert(t), reverse_indices(invert(t))})
        if (c < best) best = c;
    return best;
}

TripleCatalog enumerate_canonical(int n) {
    TripleCatalog cat;
    cat.n = n;
    // A triple is kept iff it is its own canonical form; avoids storing the
    // full orbit list.
    for (const BDTriple& t : enumerate_all(n))
        if (canonical_form(t) == t) cat.triples.push_back(t);
    std::sort(cat.triples.begin(), cat.triples.end());
    return cat;
}

std::string catalog_to_json(const TripleCatalog& cat) {
    nlohmann::json j;
    j["n"] = cat.n;
    j["count"] = cat.triples.size();
    auto& arr = j["triples"] = nlohmann::json::array();
    for (const BDTriple& t : cat.triples) {
        nlohmann::json jt = nlohmann::json::array();
        for (auto [s, d] : t.pairs()) jt.push_back({s, d});
        arr.push_back(jt);
    }
    return j.dump();
}

TripleCatalog catalog_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TripleCatalog cat;
    cat.n = j.at("n").get<int>();
    for (const auto& jt : j.at("triples")) {
        std::vector<std::pair<int, int>> ps;
        for (const auto& pr : jt) {
            if (!pr.is_array() || pr.size() != 2)
                throw std::invalid_argument("catalog_from_json: pair must be [source, target]");
            ps.emplace_back(pr[0].get<int>(), pr[1].get<int>());
        }
        cat.triples.emplace_back(cat.n, ps);
    }
    if (cat.triples.size() != j.at("count").get<std::size_t>())
        throw std::invalid_argument("catalog_from_json: count does not match triples");
    return cat;
}

BDTriple triple_from_json(int n, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        throw std::invalid_argument("triple literal: not valid JSON");
    }
    if (!j.is_array()) throw std::invalid_argument("triple literal: expected an array of pairs");
    std::vector<std::pair<int, int>> ps;
    for (const auto& pr : j) {
        if (!pr.is_array() || pr.size() != 2)
            throw std::invalid_argument("triple literal: pair must be [source, target]");
        ps.emplace_back(pr[0].get<int>(), pr[1].get<int>());
    }
    BDTriple t(n, ps);
    if (!is_valid_triple(t)) throw std::invalid_argument("triple literal: not a valid triple");
    return t;
}

} // namespace ggs

// Elements of Mat_n (x) Mat_n supported on the weight-preserving band
// e_ij (x) e_{k,i+k-j}, stored sparsely as entries x_{ik}^j with Laurent
// polynomial values.

#ifndef GGS_BANDED_HPP
#define GGS_BANDED_HPP

#include "ggs/laurent.hpp"

#include <compare>
#include <map>

namespace ggs {

struct BandKey {
    int i = 0, k = 0, j = 0; // implied fourth index l = i + k - j
    auto operator<=>(const BandKey&) const = default;
};

class BandedOperator {
public:
    BandedOperator() = default;
    explicit BandedOperator(int n_) : n(n_) {}

    int n = 0;

    bool in_range(int i, int k, int j) const {
        return 1 <= i && i <= n && 1 <= k && k <= n && 1 <= j && j <= n && 1 <= i + k - j &&
               i + k - j <= n;
    }

    // zero for out-of-band or absent entries
    LaurentPoly get(int i, int k, int j) const;
    void set(int i, int k, int j, LaurentPoly p);
    void add(int i, int k, int j, const LaurentPoly& p);

    const std::map<BandKey, LaurentPoly>& entries() const& { return e_; }
    // guard against range-for over a temporary's entries
    std::map<BandKey, LaurentPoly> entries() && { return std::move(e_); }
    std::size_t nonzero_count() const { return e_.size(); }

    BandedOperator operator+(const BandedOperator& o) const;
    // scale every entry by p
    BandedOperator scaled(const LaurentPoly& p) const;

    bool operator==(const BandedOperator&) const = default;

private:
    std::map<BandKey, LaurentPoly> e_;
};

// (xy)_{ik}^j = sum_p x_{ik}^p y_{p,i+k-p}^j; matches the dense product of
// the corresponding Mat_n (x) Mat_n elements.
BandedOperator banded_mul(const BandedOperator& x, const BandedOperator& y);

// Identity of Mat_n (x) Mat_n in banded form: x_{ik}^i = 1.
BandedOperator banded_identity(int n);

} // namespace ggs

#endif

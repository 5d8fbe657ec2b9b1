#include "ggs/banded.hpp"

#include <stdexcept>

namespace ggs {

LaurentPoly BandedOperator::get(int i, int k, int j) const {
    if (!in_range(i, k, j)) return {};
    auto it = e_.find(BandKey{i, k, j});
    return it == e_.end() ? LaurentPoly{} : it->second;
}

void BandedOperator::set(int i, int k, int j, LaurentPoly p) {
    if (!in_range(i, k, j)) throw std::invalid_argument("BandedOperator: index outside band");
    if (p.is_zero())
        e_.erase(BandKey{i, k, j});
    else
        e_[BandKey{i, k, j}] = std::move(p);
}

void BandedOperator::add(int i, int k, int j, const LaurentPoly& p) {
    if (p.is_zero()) return;
    if (!in_range(i, k, j)) throw std::invalid_argument("BandedOperator: index outside band");
    auto [it, inserted] = e_.emplace(BandKey{i, k, j}, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) e_.erase(it);
    }
}

BandedOperator BandedOperator::operator+(const BandedOperator& o) const {
    if (n != o.n) throw std::invalid_argument("BandedOperator: dimension mismatch");
    BandedOperator r = *this;
    for (const auto& [k, p] : o.e_) r.add(k.i, k.k, k.j, p);
    return r;
}

BandedOperator BandedOperator::scaled(const LaurentPoly& p) const {
    BandedOperator r(n);
    for (const auto& [k, v] : e_) r.add(k.i, k.k, k.j, v * p);
    return r;
}

BandedOperator banded_mul(const BandedOperator& x, const BandedOperator& y) {
    if (x.n != y.n) throw std::invalid_argument("banded_mul: dimension mismatch");
    BandedOperator r(x.n);
    for (const auto& [kx, px] : x.entries()) {
        for (const auto& [ky, py] : y.entries()) {
            if (ky.i != kx.j || ky.k != kx.i + kx.k - kx.j) continue;
            r.add(kx.i, kx.k, ky.j, px * py);
        }
    }
    return r;
}

BandedOperator banded_identity(int n) {
    BandedOperator r(n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) r.set(i, k, i, LaurentPoly::constant(1));
    return r;
}

} // namespace ggs

#include "ggs/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ggs {

LaurentPoly LaurentPoly::constant(const Rat& c) {
    LaurentPoly p;
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::q_power(const Rat& e) {
    LaurentPoly p;
    p.add_term(e, 1);
    return p;
}

LaurentPoly LaurentPoly::q_hat() {
    LaurentPoly p;
    p.add_term(1, 1);
    p.add_term(-1, -1);
    return p;
}

Rat LaurentPoly::coeff(const Rat& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(const Rat& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 0;
}

Rat LaurentPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("LaurentPoly: not a constant");
    return terms_.begin()->second;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        if (it->first == 0) {
            out << rat_str(it->second);
        } else {
            out << rat_str(it->second) << "*q^(" << rat_str(it->first) << ")";
        }
    }
    return out.str();
}

} // namespace ggs

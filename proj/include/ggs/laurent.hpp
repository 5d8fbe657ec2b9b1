// Sparse Laurent polynomials in q with rational exponents and rational
// coefficients. Canonical form: no zero coefficients stored, so equality is
// structural map equality.

#ifndef GGS_LAURENT_HPP
#define GGS_LAURENT_HPP

#include "ggs/rational.hpp"

#include <map>
#include <string>

namespace ggs {

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const Rat& c);
    // The monomial 1 * q^e.
    static LaurentPoly q_power(const Rat& e);
    // q_hat = q - q^{-1}.
    static LaurentPoly q_hat();

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // coefficient of q^e (zero if absent)
    Rat coeff(const Rat& e) const;
    void add_term(const Rat& e, const Rat& c);

    const std::map<Rat, Rat>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

    // True iff the polynomial is a single q^0 term (or zero, for c = 0).
    bool is_constant() const;
    // Requires is_constant().
    Rat constant_value() const;

    // Terms by decreasing exponent, "c*q^(e)" joined by " + "; q^0 elided.
    std::string str() const;

private:
    std::map<Rat, Rat> terms_; // exponent -> nonzero coefficient
};

} // namespace ggs

#endif

#pragma once

#include <h3/numbers.hpp>

namespace h3 {

// Element of the real quadratic field Q(sqrt 5), stored as rat + irr*sqrt(5).
// This is a field: every nonzero element has an exact inverse, so all linear
// algebra downstream runs with exact division and no fractions-of-fractions.
struct Golden {
    Rational rat;  // rational part
    Rational irr;  // coefficient of sqrt(5)

    Golden() : rat(0), irr(0) {}
    Golden(long n) : rat(n), irr(0) {}
    Golden(const Rational& r) : rat(r), irr(0) {}
    Golden(Rational a, Rational b) : rat(std::move(a)), irr(std::move(b)) {}

    static Golden sqrt5() { return Golden(Rational(0), Rational(1)); }
    static Golden phi_plus();   // (1+sqrt5)/2, the golden ratio
    static Golden phi_minus();  // (1-sqrt5)/2, its algebraic conjugate

    bool is_zero() const { return rat == 0 && irr == 0; }
    bool is_rational() const { return irr == 0; }

    Golden conj() const { return Golden(rat, -irr); }  // Galois conjugation
    Rational norm() const { return rat * rat - 5 * irr * irr; }
    Golden inv() const;  // throws DivisionByZero on zero

    Golden operator-() const { return Golden(-rat, -irr); }
    Golden& operator+=(const Golden& o);
    Golden& operator-=(const Golden& o);
    Golden& operator*=(const Golden& o);
    Golden& operator/=(const Golden& o);

    friend Golden operator+(Golden a, const Golden& b) { return a += b; }
    friend Golden operator-(Golden a, const Golden& b) { return a -= b; }
    friend Golden operator*(Golden a, const Golden& b) { return a *= b; }
    friend Golden operator/(Golden a, const Golden& b) { return a /= b; }
    friend bool operator==(const Golden& a, const Golden& b) {
        return a.rat == b.rat && a.irr == b.irr;
    }
    friend bool operator!=(const Golden& a, const Golden& b) { return !(a == b); }

    // container order (rat, then irr); not the numeric order on the real line
    friend bool operator<(const Golden& a, const Golden& b) {
        int c = cmp(a.rat, b.rat);
        if (c != 0) return c < 0;
        return cmp(a.irr, b.irr) < 0;
    }

    int sign() const;  // exact numeric sign of rat + irr*sqrt(5)
};

std::string str(const Golden& g);  // "p/q", "r/s*r5", or "p/q + r/s*r5" / "p/q - r/s*r5"
Golden parse_golden(const std::string& s);

}  // namespace h3

#pragma once

#include <h3/diffop.hpp>
#include <h3/linalg.hpp>

#include <map>
#include <string>
#include <vector>

namespace h3 {

// Laurent polynomial in the radial invariant t1, exact scalar coefficients.
// Negative exponents only ever enter through the gauge factor t1^gamma.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Golden& c);
    static LaurentPoly monomial(long e, const Golden& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Golden>& terms() const { return terms_; }
    Golden coeff(long e) const;
    bool is_polynomial() const;  // no negative exponents
    long degree() const;         // largest exponent, zero polynomial has none

    LaurentPoly derivative() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(const Golden& c, LaurentPoly p);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string str() const;  // "(1/2)*t1^3 + (-10)*t1 + (23/8)*t1^-1"

private:
    std::map<long, Golden> terms_;
    void put(long e, const Golden& c);
};

// finite sum of c_m(t1) d^m over the t1 line, d = d/dt1
class OneVarOperator {
public:
    OneVarOperator() = default;
    static OneVarOperator derivative(unsigned order = 1);
    static OneVarOperator multiplication(const LaurentPoly& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<unsigned, LaurentPoly>& terms() const { return terms_; }
    LaurentPoly coefficient(unsigned order) const;
    void add(unsigned order, const LaurentPoly& c);

    LaurentPoly apply(const LaurentPoly& p) const;
    OneVarOperator compose(const OneVarOperator& rhs) const;  // rhs acts first
    OneVarOperator commutator(const OneVarOperator& rhs) const;

    // conjugation by a formal factor with logarithmic derivative u:
    // every d becomes d + u, multiplicative parts are untouched
    OneVarOperator shift_derivative(const LaurentPoly& u) const;

    OneVarOperator operator-() const;
    OneVarOperator& operator+=(const OneVarOperator& o);
    OneVarOperator& operator-=(const OneVarOperator& o);
    friend OneVarOperator operator+(OneVarOperator a, const OneVarOperator& b) {
        return a += b;
    }
    friend OneVarOperator operator-(OneVarOperator a, const OneVarOperator& b) {
        return a -= b;
    }
    friend OneVarOperator operator*(const Golden& c, OneVarOperator op);
    bool operator==(const OneVarOperator& o) const { return terms_ == o.terms_; }
    bool operator!=(const OneVarOperator& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<unsigned, LaurentPoly> terms_;
};

// J+ = t1^2 d - k t1,  J0 = t1 d - k/2,  J- = d.
// The realization closes with [J0, J+-] = +-J+- and [J-, J+] = 2 J0;
// for integer k all three keep polynomials of degree at most k.
struct SL2Triple {
    unsigned k;
    OneVarOperator plus, zero, minus;
};
SL2Triple sl2_triple(unsigned k);

// the radial line of the algebraic hamiltonian: derivative terms in the
// other two invariants dropped, their variables then set to zero; the
// result is 4 t1 d^2 - 4 om t1 d + 6(1+10 nu) d, whose negation carries
// the spectrum 4 om n1 on the Laguerre family
OneVarOperator restrict_to_tau1(const DiffOperator& h);

struct LaguerreCertificate {
    LaurentPoly eigenfunction;  // L_{n1}^{(1+30nu)/2}(om t1) by exact recurrence
    Golden eigenvalue;          // 4 om n1, eigenvalue of minus the restriction
};
// builds the Laguerre eigenfunction and verifies the eigenvalue equation
// termwise; a nonvanishing residual throws NonZeroResidual
LaguerreCertificate laguerre_check(unsigned n1, const Golden& nu, const Golden& om);

struct QESParams {
    Rational a;        // anharmonic strength, must be nonnegative
    Rational gamma_q;  // radial exponent of the extra gauge factor
    unsigned k;        // mark of the preserved block
    QESParams(Rational a_in, Rational gamma_in, unsigned k_in);
};

// (1/2) a^2 t1^3 + a om t1^2 - a(2k + 2 gamma_q + 15 nu + 5/2) t1
//   + gamma_q(2 gamma_q + 30 nu + 1) / t1
LaurentPoly qes_potential(const QESParams& qp, const Golden& nu, const Golden& om);

// the algebraic form 4 J0_k J- - 4a J+_k - 4 om J0_k
//   + 2(k + 4 gamma_q + 3(1+10 nu)) J-
OneVarOperator qes_operator(const QESParams& qp, const Golden& nu, const Golden& om);

struct GaugeCertificate {
    // algebraic form minus the rotated potential-augmented line operator;
    // must be a bare constant, and is reported rather than assumed
    Golden dropped_constant;
};
GaugeCertificate qes_gauge_check(const QESParams& qp, const Golden& nu, const Golden& om);

struct PreservationReport {
    unsigned preserved_dim;  // k+1 once every basis image stays inside
    Golden escape_coeff;     // t1^{k+2} part of the image of t1^{k+1}
};
// images of 1..t1^k must stay in the block; for a > 0 the image of
// t1^{k+1} must leave the next block, with the witness coefficient reported
PreservationReport invariant_subspace_check(const QESParams& qp, const Golden& nu,
                                            const Golden& om);

struct BlockSpectrum {
    Matrix block;                  // action on 1, t1, ..., t1^k
    std::vector<Golden> charpoly;  // ascending, monic
    Golden dropped_constant;       // recomputed through the gauge check
    Golden ground_energy;          // (3/2) om (1 + 10 nu + 4 gamma_q / 3)
};
// exact block of the algebraic operator; for k = 0 the single eigenvalue
// must reproduce ground_energy after the dropped constant is added back,
// for k = 1 trace and determinant must match the symmetric functions of
// the two-sheeted pair, so no irrational root is ever materialized
BlockSpectrum block_spectrum(const QESParams& qp, const Golden& nu, const Golden& om);

// the partner operator carries no d/dt1 and commutes with multiplication
// by any function of t1 alone, hence with every radial potential term
bool integral_ignores_tau1_potential(const Golden& nu);

}  // namespace h3

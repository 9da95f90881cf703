#pragma once

#include <h3/diffop.hpp>

#include <array>

namespace h3 {

// strictly positive lattice steps, one per tau direction
struct Spacings {
    Rational d1, d2, d3;

    Spacings(Rational a, Rational b, Rational c);  // rejects non-positive steps
    static Spacings unit() { return {Rational(1), Rational(1), Rational(1)}; }

    const Rational& operator[](std::size_t i) const;
    friend bool operator==(const Spacings& a, const Spacings& b) {
        return a.d1 == b.d1 && a.d2 == b.d2 && a.d3 == b.d3;
    }
};

// tau^(n) = tau (tau - d)(tau - 2d) ... (tau - (n-1)d), monic of degree n;
// at d = 0 it collapses back to the plain power
struct QuasiMonomial {
    std::size_t var;
    unsigned n;
    Rational delta;

    MultiPoly expand(const VariableSpace* space) const;
};

using ShiftVec = std::array<long, 3>;

// finite sum of c_k(tau) * (tau -> tau + k.delta) with polynomial
// coefficients; shifts touch the three variable slots only, parameters ride
// along untouched, so formal coefficients work the same as numeric ones
class ShiftOperator {
public:
    ShiftOperator(const VariableSpace* space, Spacings delta);

    const VariableSpace* space() const { return space_; }
    const Spacings& spacings() const { return delta_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const ShiftVec& k, const MultiPoly& coef);
    MultiPoly coefficient(const ShiftVec& k) const;
    const std::map<ShiftVec, MultiPoly>& terms() const { return terms_; }

    MultiPoly apply(const MultiPoly& p) const;
    ShiftOperator compose(const ShiftOperator& rhs) const;  // acts as this after rhs
    ShiftOperator commutator(const ShiftOperator& rhs) const;

    ShiftOperator operator-() const;
    ShiftOperator& operator+=(const ShiftOperator& o);
    ShiftOperator& operator-=(const ShiftOperator& o);
    friend ShiftOperator operator+(ShiftOperator a, const ShiftOperator& b) { return a += b; }
    friend ShiftOperator operator-(ShiftOperator a, const ShiftOperator& b) { return a -= b; }
    friend ShiftOperator operator*(const Golden& c, ShiftOperator a);
    friend bool operator==(const ShiftOperator& a, const ShiftOperator& b) {
        return a.space_ == b.space_ && a.delta_ == b.delta_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ShiftOperator& a, const ShiftOperator& b) { return !(a == b); }

private:
    const VariableSpace* space_;
    Spacings delta_;
    std::map<ShiftVec, MultiPoly> terms_;
};

// canonical substitution tau_i -> tau_i e^(-d_i del_i), del_i -> forward
// difference, with coefficients normal-ordered to the left of the shifts;
// an algebra homomorphism, so composites and commutators carry over exactly
ShiftOperator discretize(const DiffOperator& op, const Spacings& delta);

// monomial-to-quasi-monomial linear extension and its exact inverse
MultiPoly to_quasi_basis(const MultiPoly& p, const Spacings& delta);
MultiPoly from_quasi_basis(const MultiPoly& p, const Spacings& delta);

Matrix flag_matrix(const ShiftOperator& op, const FlagSpace& flag);

// golden 22-point tables transcribed from the source displays, spacings
// folded in, couplings formal; these are references for diffing, the
// normal-ordered derivation stays ground truth
std::map<ShiftVec, MultiPoly> reference_h_table(const Spacings& delta);
std::map<ShiftVec, MultiPoly> reference_f_table(const Spacings& delta);

// entry-by-entry comparison of a derived operator against a reference
// table; footprint facts about the derived side are asserted hard
// (22 nonzero shifts, distinct offsets per axis), value differences are
// itemized and left to the caller
struct EntryDiff {
    ShiftVec shift;
    std::string derived, tabulated;  // canonical text, "0" for a missing side
    bool equal;
};
struct TableDiff {
    std::vector<EntryDiff> entries;  // every shift on either side, sorted
    std::size_t matching = 0, differing = 0, derived_only = 0, tabulated_only = 0;
};
TableDiff compare_tables(const ShiftOperator& s, const std::map<ShiftVec, MultiPoly>& table,
                         const std::array<std::size_t, 3>& footprint);

// discretized Hamiltonian versus the continuous one on the (1,2,3) flag:
// equal characteristic polynomials, and every continuous eigenfunction
// transfers through the quasi-monomial map with its eigenvalue intact
struct SpectrumCertificate {
    std::vector<Golden> charpoly;  // shared, ascending coefficients
    std::size_t dimension;
    unsigned transferred;
};
SpectrumCertificate discrete_spectrum_check(unsigned n, const Spacings& delta,
                                            const Golden& nu, const Golden& om);

// the discretized pair still commutes: exact normal-ordered identity plus
// annihilation on the (1,3,5) flag at level n
struct CommutationCertificate {
    bool operator_identity;
    std::size_t annihilated;
};
CommutationCertificate discrete_commutation(const Spacings& delta, const Golden& nu,
                                            const Golden& om, unsigned n);

}  // namespace h3

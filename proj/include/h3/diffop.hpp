#pragma once

#include <h3/linalg.hpp>
#include <h3/poly.hpp>

#include <map>
#include <optional>
#include <set>

namespace h3 {

// derivative multi-index over the true variables of a space
using DerivIndex = std::vector<unsigned>;

// linear differential operator with polynomial coefficients, kept in normal
// form: sum of coefficient(tau) * d^beta with all derivatives rightmost
class DiffOperator {
public:
    explicit DiffOperator(const VariableSpace* space);
    static DiffOperator derivative(const VariableSpace* space, std::size_t var,
                                   unsigned order = 1);
    static DiffOperator multiplication(const MultiPoly& c);

    const VariableSpace* space() const { return space_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned order() const;
    void add(const DerivIndex& beta, const MultiPoly& coef);
    MultiPoly coefficient(const DerivIndex& beta) const;
    const std::map<DerivIndex, MultiPoly>& terms() const { return terms_; }

    MultiPoly apply(const MultiPoly& p) const;
    DiffOperator compose(const DiffOperator& rhs) const;  // acts as this after rhs
    DiffOperator commutator(const DiffOperator& rhs) const;

    DiffOperator operator-() const;
    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator-=(const DiffOperator& o);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend DiffOperator operator*(const Golden& c, DiffOperator a);
    friend DiffOperator operator*(const MultiPoly& c, DiffOperator a);  // premultiply
    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    std::string str() const;  // one "(coef) d/d..." chunk per term, canonical order

private:
    const VariableSpace* space_;
    std::map<DerivIndex, MultiPoly> terms_;
};

// monomial basis of the invariant subspace spanned by tau^p with alpha.p <= n,
// ordered by ascending weight (ties by the canonical monomial order)
struct FlagSpace {
    const VariableSpace* space;
    std::vector<long> alpha;
    unsigned n;
    std::vector<Mono> basis;

    static FlagSpace build(const VariableSpace* space, std::vector<long> alpha, unsigned n);
    std::size_t dim() const { return basis.size(); }
    long weight_of(const Mono& m) const;
    MultiPoly to_poly(const std::vector<Golden>& coords) const;
    std::vector<Golden> coords_of(const MultiPoly& p) const;  // NotInvariant if outside
};

// multiset of alpha-weight shifts produced by the operator's terms
std::set<long> weight_shifts(const DiffOperator& op, const std::vector<long>& alpha);

// the part of op whose terms shift alpha-weight by exactly s
DiffOperator weight_component(const DiffOperator& op, const std::vector<long>& alpha, long s);

// matrix of op on the flag basis; NotInvariant (with the witness monomial)
// if any image leaves the space
Matrix flag_matrix(const DiffOperator& op, const FlagSpace& flag);

struct EigenLevel {
    Golden lambda;                      // matrix eigenvalue
    std::size_t algebraic;              // multiplicity in the characteristic polynomial
    std::vector<MultiPoly> functions;   // exact eigenbasis (geometric multiplicity)
};

// exact eigenvalues and eigenfunctions: candidates from the diagonal of the
// graded matrix, validated by deflating the characteristic polynomial;
// UnsplitDegeneracy if the candidates do not exhaust the spectrum
std::vector<EigenLevel> spectrum(const DiffOperator& op, const FlagSpace& flag);

struct JointEigen {
    MultiPoly phi;
    Golden h_lambda;
    Golden f_lambda;
};
struct JointBasis {
    std::vector<JointEigen> items;
    std::vector<std::string> unsplit_notes;  // empty when everything split
};

// simultaneous eigenbasis of two commuting operators: h-eigenspaces first,
// then the partner diagonalized inside each block
JointBasis joint_eigenbasis(const DiffOperator& h, const DiffOperator& f,
                            const FlagSpace& flag);

// does the substitution tau1 += a, tau2 += b1 t1^2 + b2 t1 + b3,
// tau3 += c1 t1 t2 + c2 t1^3 + c3 t2 + c4 t1^2 + c5 t1 + c6
// preserve the (1,2,3) flag at level n?
struct WptParams {
    Golden a;
    Golden b1, b2, b3;
    Golden c1, c2, c3, c4, c5, c6;
};
bool wpt_check(const WptParams& w, unsigned n);

// cos(angle to the diagonal) = numer / sqrt(radicand), exact
struct FlagAngle {
    long numer;
    long radicand;
};
FlagAngle flag_angle(const std::vector<long>& alpha);

}  // namespace h3

#pragma once

#include <h3/golden.hpp>

#include <map>
#include <vector>
#include <string>
#include <memory>

namespace h3 {

// Named list of variables plus trailing formal parameters.  Polynomials carry a
// pointer to their space; mixing spaces throws SpaceMismatch rather than
// guessing an embedding.
struct VariableSpace {
    std::vector<std::string> vars;    // true variables (differentiation acts on these)
    std::vector<std::string> params;  // formal parameters (nu, om): inert slots

    std::size_t size() const { return vars.size() + params.size(); }
    std::size_t var_count() const { return vars.size(); }
    const std::string& name(std::size_t i) const {
        return i < vars.size() ? vars[i] : params[i - vars.size()];
    }
    int index_of(const std::string& n) const;  // -1 if absent

    // shared singletons so identity comparison works across the library
    static const VariableSpace* x3();         // x1 x2 x3
    static const VariableSpace* tau3();       // t1 t2 t3
    static const VariableSpace* tau3_nuom();  // t1 t2 t3 | nu om
    static const VariableSpace* tau1();       // t1
    static const VariableSpace* tau1_nuom();  // t1 | nu om
};

using Mono = std::vector<unsigned>;  // exponent vector over space.size() slots

// graded lex, descending: higher total degree first, ties broken by the
// lexicographically greater exponent vector.  Fixes the canonical print order.
struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const;
};

class MultiPoly {
public:
    explicit MultiPoly(const VariableSpace* space = VariableSpace::x3());
    static MultiPoly zero(const VariableSpace* space);
    static MultiPoly constant(const VariableSpace* space, const Golden& c);
    static MultiPoly variable(const VariableSpace* space, std::size_t index);
    static MultiPoly variable(const VariableSpace* space, const std::string& name);

    const VariableSpace* space() const { return space_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Golden constant_value() const;  // coefficient of the unit monomial

    void add_term(const Mono& m, const Golden& c);  // accumulates, drops zeros
    Golden coeff(const Mono& m) const;
    const std::map<Mono, Golden, MonoOrder>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    unsigned total_degree() const;                          // max over terms, vars+params
    unsigned degree_in(std::size_t index) const;            // max exponent of one slot
    long weighted_degree(const std::vector<long>& w) const; // max of w.m over var slots only

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Golden& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend MultiPoly operator*(MultiPoly a, const Golden& c) { return a *= c; }
    friend MultiPoly operator*(const Golden& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned e) const;
    MultiPoly differentiate(std::size_t var_index) const;  // d/d(vars[i]); params are inert

    Golden eval(const std::vector<Golden>& point) const;  // point covers all slots

    // simultaneous substitution: images[i] replaces slot i (vars and params alike);
    // images live in target and must be supplied for every slot
    MultiPoly substitute(const VariableSpace* target,
                         const std::vector<MultiPoly>& images) const;

    // fix the parameter slots to numbers, keep the variables (result in plain space)
    MultiPoly eval_params(const VariableSpace* target,
                          const std::vector<Golden>& param_values) const;

    // exact quotient; throws NonDivisible if remainder is nonzero
    MultiPoly exact_divide(const MultiPoly& divisor) const;

    std::string str() const;  // canonical text form, stable across runs

private:
    const VariableSpace* space_;
    std::map<Mono, Golden, MonoOrder> terms_;
};

MultiPoly parse_poly(const VariableSpace* space, const std::string& text);

// re-slot a polynomial into another space, matching variables by name;
// SpaceMismatch if a used name is absent from the target
MultiPoly transport(const MultiPoly& p, const VariableSpace* target);

}  // namespace h3

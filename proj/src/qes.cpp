#include <h3/qes.hpp>

#include <h3/gauge.hpp>
#include <h3/integral.hpp>

namespace h3 {

namespace {

Golden q(long a, long b = 1) { return Golden(rational(a, b)); }

Golden binom_golden(unsigned n, unsigned k) {
    return Golden(rational(binomial(n, k), Int(1)));
}

}  // namespace

LaurentPoly::LaurentPoly(const Golden& c) { put(0, c); }

LaurentPoly LaurentPoly::monomial(long e, const Golden& c) {
    LaurentPoly p;
    p.put(e, c);
    return p;
}

void LaurentPoly::put(long e, const Golden& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Golden LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Golden() : it->second;
}

bool LaurentPoly::is_polynomial() const {
    return terms_.empty() || terms_.begin()->first >= 0;
}

long LaurentPoly::degree() const {
    if (terms_.empty()) throw Error("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        if (e != 0) out.put(e - 1, Golden(Rational(e)) * c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) put(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) put(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.put(e1 + e2, c1 * c2);
    terms_ = std::move(out.terms_);
    return *this;
}

LaurentPoly operator*(const Golden& c, LaurentPoly p) {
    if (c.is_zero()) {
        p.terms_.clear();
        return p;
    }
    for (auto& [e, g] : p.terms_) g *= c;
    return p;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + h3::str(it->second) + ")";
        if (it->first == 1)
            out += "*t1";
        else if (it->first != 0)
            out += "*t1^" + std::to_string(it->first);
    }
    return out;
}

OneVarOperator OneVarOperator::derivative(unsigned order) {
    OneVarOperator op;
    op.add(order, LaurentPoly(Golden(1)));
    return op;
}

OneVarOperator OneVarOperator::multiplication(const LaurentPoly& c) {
    OneVarOperator op;
    op.add(0, c);
    return op;
}

LaurentPoly OneVarOperator::coefficient(unsigned order) const {
    auto it = terms_.find(order);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void OneVarOperator::add(unsigned order, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(order);
    if (it == terms_.end()) {
        terms_.emplace(order, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly OneVarOperator::apply(const LaurentPoly& p) const {
    LaurentPoly out;
    if (terms_.empty()) return out;
    std::vector<LaurentPoly> dp{p};
    for (unsigned m = 1; m <= terms_.rbegin()->first; ++m)
        dp.push_back(dp.back().derivative());
    for (const auto& [m, c] : terms_) out += c * dp[m];
    return out;
}

OneVarOperator OneVarOperator::compose(const OneVarOperator& rhs) const {
    OneVarOperator out;
    for (const auto& [m, c] : terms_)
        for (const auto& [j, d] : rhs.terms_) {
            LaurentPoly di = d;
            for (unsigned i = 0; i <= m; ++i) {
                out.add(m - i + j, binom_golden(m, i) * (c * di));
                di = di.derivative();
            }
        }
    return out;
}

OneVarOperator OneVarOperator::commutator(const OneVarOperator& rhs) const {
    return compose(rhs) - rhs.compose(*this);
}

OneVarOperator OneVarOperator::shift_derivative(const LaurentPoly& u) const {
    OneVarOperator shifted = derivative();
    shifted.add(0, u);
    OneVarOperator out;
    if (terms_.empty()) return out;
    std::vector<OneVarOperator> pw{multiplication(LaurentPoly(Golden(1)))};
    for (unsigned m = 1; m <= terms_.rbegin()->first; ++m)
        pw.push_back(shifted.compose(pw.back()));
    for (const auto& [m, c] : terms_) out += multiplication(c).compose(pw[m]);
    return out;
}

OneVarOperator OneVarOperator::operator-() const {
    OneVarOperator out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

OneVarOperator& OneVarOperator::operator+=(const OneVarOperator& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

OneVarOperator& OneVarOperator::operator-=(const OneVarOperator& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

OneVarOperator operator*(const Golden& c, OneVarOperator op) {
    if (c.is_zero()) {
        op.terms_.clear();
        return op;
    }
    for (auto& [m, p] : op.terms_) p = c * p;
    return op;
}

std::string OneVarOperator::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "[" + it->second.str() + "]";
        if (it->first == 1)
            out += " d";
        else if (it->first != 0)
            out += " d^" + std::to_string(it->first);
    }
    return out;
}

SL2Triple sl2_triple(unsigned k) {
    Golden mark(static_cast<long>(k));
    SL2Triple t{k, {}, {}, {}};
    t.plus.add(1, LaurentPoly::monomial(2, Golden(1)));
    t.plus.add(0, LaurentPoly::monomial(1, -mark));
    t.zero.add(1, LaurentPoly::monomial(1, Golden(1)));
    t.zero.add(0, LaurentPoly(-mark / q(2)));
    t.minus.add(1, LaurentPoly(Golden(1)));
    return t;
}

OneVarOperator restrict_to_tau1(const DiffOperator& h) {
    const VariableSpace* sp = h.space();
    if (sp->var_count() != 3 || !sp->params.empty())
        throw SpaceMismatch("radial restriction expects three tau variables and numeric couplings");
    OneVarOperator out;
    for (const auto& [beta, c] : h.terms()) {
        if (beta[1] != 0 || beta[2] != 0) continue;  // kills functions of t1
        LaurentPoly coef;
        for (const auto& [m, g] : c.terms()) {
            if (m[1] != 0 || m[2] != 0) continue;  // evaluated at t2 = t3 = 0
            coef += LaurentPoly::monomial(m[0], g);
        }
        out.add(beta[0], coef);
    }
    return out;
}

LaguerreCertificate laguerre_check(unsigned n1, const Golden& nu, const Golden& om) {
    if (n1 > 64) throw Error("Laguerre level out of the supported range");
    Golden alpha = (q(1) + q(30) * nu) / q(2);
    LaurentPoly x = LaurentPoly::monomial(1, om);
    LaurentPoly prev(Golden(1));
    LaurentPoly cur = LaurentPoly(q(1) + alpha) - x;
    if (n1 == 0) cur = prev;
    for (unsigned n = 1; n < n1; ++n) {
        Golden nn(static_cast<long>(n));
        LaurentPoly next =
            (LaurentPoly(q(2) * nn + q(1) + alpha) - x) * cur - (nn + alpha) * prev;
        prev = cur;
        cur = (q(1) / (nn + q(1))) * next;
    }

    Golden eps = q(4) * om * Golden(static_cast<long>(n1));
    OneVarOperator h1 = restrict_to_tau1(build_h(nu, om));
    LaurentPoly residual = h1.apply(cur) + eps * cur;
    if (!residual.is_zero())
        throw NonZeroResidual("Laguerre eigenvalue equation leaves " + residual.str() +
                              " at n1 = " + std::to_string(n1));
    return {cur, eps};
}

QESParams::QESParams(Rational a_in, Rational gamma_in, unsigned k_in)
    : a(std::move(a_in)), gamma_q(std::move(gamma_in)), k(k_in) {
    if (sgn(a) < 0) throw Error("anharmonic strength must be nonnegative");
}

LaurentPoly qes_potential(const QESParams& qp, const Golden& nu, const Golden& om) {
    Golden A(qp.a), G(qp.gamma_q), K(static_cast<long>(qp.k));
    LaurentPoly v = LaurentPoly::monomial(3, A * A / q(2));
    v += LaurentPoly::monomial(2, A * om);
    v += LaurentPoly::monomial(1, -A * (q(2) * K + q(2) * G + q(15) * nu + q(5, 2)));
    v += LaurentPoly::monomial(-1, G * (q(2) * G + q(30) * nu + q(1)));
    return v;
}

OneVarOperator qes_operator(const QESParams& qp, const Golden& nu, const Golden& om) {
    Golden A(qp.a), G(qp.gamma_q), K(static_cast<long>(qp.k));
    SL2Triple t = sl2_triple(qp.k);
    OneVarOperator op = q(4) * t.zero.compose(t.minus);
    op -= q(4) * A * t.plus;
    op -= q(4) * om * t.zero;
    op += q(2) * (K + q(4) * G + q(3) * (q(1) + q(10) * nu)) * t.minus;
    return op;
}

GaugeCertificate qes_gauge_check(const QESParams& qp, const Golden& nu, const Golden& om) {
    Golden A(qp.a), G(qp.gamma_q);
    LaurentPoly u = LaurentPoly::monomial(-1, G) + LaurentPoly::monomial(1, -A / q(2));
    OneVarOperator line = restrict_to_tau1(build_h(nu, om));
    line -= q(2) * OneVarOperator::multiplication(qes_potential(qp, nu, om));
    OneVarOperator rotated = line.shift_derivative(u);

    OneVarOperator diff = qes_operator(qp, nu, om) - rotated;
    if (diff.is_zero()) return {Golden()};
    if (diff.terms().size() != 1 || diff.terms().begin()->first != 0)
        throw GaugeMismatch("derivative terms survive: " + diff.str());
    const LaurentPoly& c = diff.terms().begin()->second;
    if (c.terms().size() != 1 || c.terms().begin()->first != 0)
        throw GaugeMismatch("the two constructions differ by " + c.str() +
                            ", not a constant");
    return {c.coeff(0)};
}

PreservationReport invariant_subspace_check(const QESParams& qp, const Golden& nu,
                                            const Golden& om) {
    OneVarOperator s = qes_operator(qp, nu, om);
    long k = static_cast<long>(qp.k);
    for (long p = 0; p <= k; ++p) {
        LaurentPoly img = s.apply(LaurentPoly::monomial(p, Golden(1)));
        if (!img.is_zero() && (!img.is_polynomial() || img.degree() > k))
            throw PreservationFailure("image of t1^" + std::to_string(p) +
                                      " leaves the block: " + img.str());
    }
    LaurentPoly beyond = s.apply(LaurentPoly::monomial(k + 1, Golden(1)));
    Golden witness = beyond.coeff(k + 2);
    if (sgn(qp.a) > 0 && witness.is_zero())
        throw PreservationFailure("expected t1^" + std::to_string(k + 1) +
                                  " to escape the next block");
    return {qp.k + 1, witness};
}

BlockSpectrum block_spectrum(const QESParams& qp, const Golden& nu, const Golden& om) {
    OneVarOperator s = qes_operator(qp, nu, om);
    long k = static_cast<long>(qp.k);
    Matrix M(qp.k + 1, qp.k + 1);
    for (long p = 0; p <= k; ++p) {
        LaurentPoly img = s.apply(LaurentPoly::monomial(p, Golden(1)));
        if (!img.is_zero() && (!img.is_polynomial() || img.degree() > k))
            throw PreservationFailure("block column t1^" + std::to_string(p) +
                                      " leaves the block: " + img.str());
        for (long i = 0; i <= k; ++i) M.at(i, p) = img.coeff(i);
    }

    Golden A(qp.a), G(qp.gamma_q);
    Golden c = qes_gauge_check(qp, nu, om).dropped_constant;
    Golden e0 = q(3, 2) * om * (q(1) + q(10) * nu + q(4, 3) * G);
    if (qp.k == 0) {
        Golden recovered = q(3, 2) * om * (q(1) + q(10) * nu) + (c - M.at(0, 0)) / q(2);
        if (recovered != e0)
            throw SymmetricFunctionMismatch("one-state block recovers " + h3::str(recovered) +
                                            " instead of " + h3::str(e0));
    }
    if (qp.k == 1) {
        if (!M.trace().is_zero())
            throw SymmetricFunctionMismatch("two-state block has trace " + h3::str(M.trace()));
        Golden offset2 = om * om + q(2) * A * (q(4) * G + q(3) * (q(1) + q(10) * nu));
        if (q(-1, 4) * M.det() != offset2)
            throw SymmetricFunctionMismatch("squared level offset is " +
                                            h3::str(q(-1, 4) * M.det()) + ", expected " +
                                            h3::str(offset2));
    }
    return {M, M.charpoly(), c, e0};
}

bool integral_ignores_tau1_potential(const Golden& nu) {
    DiffOperator f = build_f(nu);
    for (const auto& [beta, c] : f.terms())
        if (beta[0] != 0) return false;
    MultiPoly t1 = MultiPoly::variable(f.space(), "t1");
    for (unsigned j = 1; j <= 3; ++j) {
        DiffOperator w = DiffOperator::multiplication(t1.pow(j));
        if (!f.commutator(w).is_zero())
            throw NonZeroCommutator("radial power " + std::to_string(j) +
                                    " fails to commute with the partner operator");
    }
    return true;
}

}  // namespace h3

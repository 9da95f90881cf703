#include <h3/discrete.hpp>

#include <h3/gauge.hpp>
#include <h3/integral.hpp>

#include <set>

namespace h3 {

namespace {

MultiPoly slot(const VariableSpace* sp, std::size_t i) {
    Mono m(sp->size(), 0);
    m[i] = 1;
    MultiPoly p(sp);
    p.add_term(m, Golden(1));
    return p;
}

// p with tau_i -> tau_i + k_i d_i; parameter slots map to themselves
MultiPoly shift_poly(const MultiPoly& p, const ShiftVec& k, const Spacings& d) {
    const VariableSpace* sp = p.space();
    std::vector<MultiPoly> images;
    images.reserve(sp->size());
    for (std::size_t i = 0; i < sp->size(); ++i) {
        MultiPoly v = slot(sp, i);
        if (i < sp->var_count() && k[i] != 0)
            v += MultiPoly::constant(sp, Golden(Rational(k[i]) * d[i]));
        images.push_back(v);
    }
    return p.substitute(sp, images);
}

}  // namespace

Spacings::Spacings(Rational a, Rational b, Rational c)
    : d1(std::move(a)), d2(std::move(b)), d3(std::move(c)) {
    if (sgn(d1) <= 0 || sgn(d2) <= 0 || sgn(d3) <= 0)
        throw Error("spacings must be strictly positive");
}

const Rational& Spacings::operator[](std::size_t i) const {
    return i == 0 ? d1 : (i == 1 ? d2 : d3);
}

MultiPoly QuasiMonomial::expand(const VariableSpace* space) const {
    MultiPoly t = slot(space, var);
    MultiPoly out = MultiPoly::constant(space, Golden(1));
    for (unsigned j = 0; j < n; ++j)
        out *= t - MultiPoly::constant(space, Golden(Rational(static_cast<long>(j)) * delta));
    return out;
}

ShiftOperator::ShiftOperator(const VariableSpace* space, Spacings delta)
    : space_(space), delta_(std::move(delta)) {}

void ShiftOperator::add(const ShiftVec& k, const MultiPoly& coef) {
    if (coef.space() != space_) throw SpaceMismatch("shift coefficient lives elsewhere");
    if (coef.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, coef);
        return;
    }
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly ShiftOperator::coefficient(const ShiftVec& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? MultiPoly::zero(space_) : it->second;
}

MultiPoly ShiftOperator::apply(const MultiPoly& p) const {
    if (p.space() != space_) throw SpaceMismatch("applying a shift operator across spaces");
    MultiPoly out = MultiPoly::zero(space_);
    for (const auto& [k, c] : terms_) out += c * shift_poly(p, k, delta_);
    return out;
}

ShiftOperator ShiftOperator::compose(const ShiftOperator& rhs) const {
    if (space_ != rhs.space_ || !(delta_ == rhs.delta_))
        throw SpaceMismatch("composing shift operators over different lattices");
    ShiftOperator out(space_, delta_);
    for (const auto& [a, c1] : terms_)
        for (const auto& [b, c2] : rhs.terms_) {
            ShiftVec k{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
            out.add(k, c1 * shift_poly(c2, a, delta_));
        }
    return out;
}

ShiftOperator ShiftOperator::commutator(const ShiftOperator& rhs) const {
    return compose(rhs) - rhs.compose(*this);
}

ShiftOperator ShiftOperator::operator-() const {
    ShiftOperator out(space_, delta_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

ShiftOperator& ShiftOperator::operator+=(const ShiftOperator& o) {
    if (space_ != o.space_ || !(delta_ == o.delta_))
        throw SpaceMismatch("adding shift operators over different lattices");
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

ShiftOperator& ShiftOperator::operator-=(const ShiftOperator& o) {
    if (space_ != o.space_ || !(delta_ == o.delta_))
        throw SpaceMismatch("adding shift operators over different lattices");
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

ShiftOperator operator*(const Golden& c, ShiftOperator a) {
    if (c.is_zero()) {
        a.terms_.clear();
        return a;
    }
    for (auto& [k, p] : a.terms_) p *= c;
    return a;
}

ShiftOperator discretize(const DiffOperator& op, const Spacings& delta) {
    const VariableSpace* sp = op.space();
    std::size_t nv = sp->var_count();
    if (nv != 3) throw SpaceMismatch("discretization expects three tau variables");

    ShiftOperator out(sp, delta);
    for (const auto& [beta, cpoly] : op.terms()) {
        Rational dpow(1);
        for (std::size_t i = 0; i < nv; ++i)
            for (unsigned b = 0; b < beta[i]; ++b) dpow *= delta[i];

        for (const auto& [mono, g] : cpoly.terms()) {
            // multiplication side: quasi-monomial coefficient with the
            // lowering shift attached, parameters ride along untouched
            Mono pm(sp->size(), 0);
            for (std::size_t j = nv; j < sp->size(); ++j) pm[j] = mono[j];
            MultiPoly coef(sp);
            coef.add_term(pm, g / Golden(dpow));
            for (std::size_t i = 0; i < nv; ++i)
                if (mono[i]) coef *= QuasiMonomial{i, mono[i], delta[i]}.expand(sp);

            // derivative side: forward differences expanded shift by shift
            std::vector<unsigned> j(nv, 0);
            while (true) {
                Golden w(1);
                ShiftVec k{};
                for (std::size_t i = 0; i < nv; ++i) {
                    w *= Golden(rational(binomial(beta[i], j[i]), Int(1)));
                    if ((beta[i] - j[i]) % 2 == 1) w = -w;
                    k[i] = static_cast<long>(j[i]) - static_cast<long>(mono[i]);
                }
                out.add(k, coef * w);
                std::size_t pos = 0;
                while (pos < nv && j[pos] == beta[pos]) {
                    j[pos] = 0;
                    ++pos;
                }
                if (pos == nv) break;
                ++j[pos];
            }
        }
    }
    return out;
}

MultiPoly to_quasi_basis(const MultiPoly& p, const Spacings& delta) {
    const VariableSpace* sp = p.space();
    if (sp->var_count() != 3) throw SpaceMismatch("quasi basis expects three tau variables");
    MultiPoly out = MultiPoly::zero(sp);
    for (const auto& [mono, g] : p.terms()) {
        Mono pm(sp->size(), 0);
        for (std::size_t j = 3; j < sp->size(); ++j) pm[j] = mono[j];
        MultiPoly t(sp);
        t.add_term(pm, g);
        for (std::size_t i = 0; i < 3; ++i)
            if (mono[i]) t *= QuasiMonomial{i, mono[i], delta[i]}.expand(sp);
        out += t;
    }
    return out;
}

MultiPoly from_quasi_basis(const MultiPoly& p, const Spacings& delta) {
    // unitriangular: peel the leading monomial, subtract its quasi image
    MultiPoly out = MultiPoly::zero(p.space()), rest = p;
    while (!rest.is_zero()) {
        auto lead = *rest.terms().begin();
        MultiPoly m(p.space());
        m.add_term(lead.first, lead.second);
        out += m;
        rest -= to_quasi_basis(m, delta);
    }
    return out;
}

Matrix flag_matrix(const ShiftOperator& op, const FlagSpace& flag) {
    if (flag.space != op.space()) throw SpaceMismatch("flag and operator spaces differ");
    if (!op.space()->params.empty())
        throw SpaceMismatch("flag matrices need numeric coefficients");
    Matrix M(flag.dim(), flag.dim());
    for (std::size_t jcol = 0; jcol < flag.dim(); ++jcol) {
        MultiPoly b(flag.space);
        b.add_term(flag.basis[jcol], Golden(1));
        std::vector<Golden> col = flag.coords_of(op.apply(b));
        for (std::size_t i = 0; i < flag.dim(); ++i) M.at(i, jcol) = col[i];
    }
    return M;
}

std::map<ShiftVec, MultiPoly> reference_h_table(const Spacings& dd) {
    const VariableSpace* S = VariableSpace::tau3_nuom();
    const Rational &d1 = dd.d1, &d2 = dd.d2, &d3 = dd.d3;
    MultiPoly t1 = slot(S, 0), t2 = slot(S, 1), t3 = slot(S, 2), nu = slot(S, 3),
              om = slot(S, 4);
    auto c = [&](const Rational& v) { return MultiPoly::constant(S, Golden(v)); };
    Rational one(1);

    std::map<ShiftVec, MultiPoly> A;
    A[{0, 0, 0}] = c(-4 / d1) * (c(2) + c(d1) * om) *
                       (c(one / d1) * t1 + c(3 / d2) * t2 + c(5 / d3) * t3) +
                   c(-6 / d1) * (c(1) + c(10) * nu);
    A[{1, 0, 0}] = c(2 / d1) * (c(2 / d1) * t1 + c(12 / d2) * t2 + c(20 / d3) * t3 +
                                c(3) * (c(1) + c(10) * nu));
    A[{-1, 0, 0}] = c(4 / (d1 * d1)) * (c(1) + c(d1) * om) * t1;
    A[{-2, 0, 0}] = c(48 / (5 * d2)) * t1 * (t1 - c(d1)) *
                    (c(2 / d2) * t2 + c(5 / d3) * t3 + c(1) + c(5) * nu);
    A[{0, -1, 0}] = c(12 / (d1 * d2)) * (c(2) + c(d1) * om) * t2;
    A[{0, 0, -1}] =
        c(Rational(5) / 2) *
        (c(8 / (d1 * d3)) * (c(2) + c(d1) * om) + c(9 / (d2 * d2))) * t3;
    A[{0, -3, 0}] = c(128 / (45 * d3 * d3)) * t2 * (t2 - c(d2)) * (t2 - c(2 * d2));
    A[{1, -1, 0}] = c(-24 / (d1 * d2)) * t2;
    A[{1, 0, -1}] = c(-40 / (d1 * d3)) * t3;
    A[{-1, -1, 0}] = c(-32 / (15 * d3)) * t1 * t2 *
                     (c(one / d2) * t2 - c(20 / d3) * t3 - c(5) * (c(1) + c(2) * nu));
    A[{-1, -2, 0}] = c(32 / (15 * d2 * d3)) * t1 * t2 * (t2 - c(d2));
    A[{-1, -1, 1}] = c(32 / (15 * d3)) * t1 * t2 *
                     (c(one / d2) * t2 - c(10 / d3) * t3 - c(5) * (c(1) + c(2) * nu));
    A[{-1, -1, -1}] = c(-64 / (3 * d3 * d3)) * t1 * t2 * t3;
    A[{-1, -2, 1}] = c(-32 / (15 * d2 * d3)) * t1 * t2 * (t2 - c(d2));
    A[{-2, 1, 0}] = c(-48 / (5 * d2)) * t1 * (t1 - c(d1)) *
                    (c(one / d2) * t2 + c(5 / d3) * t3 + c(1) + c(5) * nu);
    A[{-2, -1, 0}] = c(-48 / (5 * d2 * d2)) * t2 * t1 * (t1 - c(d1));
    A[{-2, 0, -1}] = c(-48 / (d2 * d3)) * t3 * t1 * (t1 - c(d1));
    A[{-2, 1, -1}] = c(48 / (d2 * d3)) * t3 * t1 * (t1 - c(d1));
    A[{0, 1, -1}] = c(-45 / (d2 * d2)) * t3;
    A[{0, 2, -1}] = c(45 / (2 * d2 * d2)) * t3;
    A[{0, -3, 1}] = c(256 / (45 * d3 * d3)) * t2 * (t2 - c(d2)) * (t2 - c(2 * d2));
    A[{0, -3, 2}] = c(128 / (45 * d3 * d3)) * t2 * (t2 - c(d2)) * (t2 - c(2 * d2));
    return A;
}

std::map<ShiftVec, MultiPoly> reference_f_table(const Spacings& dd) {
    const VariableSpace* S = VariableSpace::tau3_nuom();
    const Rational &d1 = dd.d1, &d2 = dd.d2, &d3 = dd.d3;
    MultiPoly t1 = slot(S, 0), t2 = slot(S, 1), t3 = slot(S, 2), nu = slot(S, 3);
    auto c = [&](const Rational& v) { return MultiPoly::constant(S, Golden(v)); };
    Rational one(1);

    std::map<ShiftVec, MultiPoly> B;
    B[{0, -1, 0}] =
        c(-3 / d2) * t2 * (c(10 / d3) * t3 + c(12 / d2) * t2 + c(5) + c(30) * nu);
    B[{0, -2, 0}] = c(18 / (d2 * d2)) * t2 * (t2 - c(d2));
    B[{0, 0, -1}] =
        c(-5 / d3) * t3 * (c(6 / d2) * t2 + c(20 / d3) * t3 - c(9) + c(30) * nu);
    B[{0, 0, -2}] = c(50 / (d3 * d3)) * t3 * (t3 - c(d3));
    B[{-1, 1, 0}] = c(12 / (d2 * d3)) * t3 * t1 * (t1 - c(d1)) * (t1 - c(2 * d1));
    B[{-1, 1, -1}] = c(3 / (2 * d2)) * t1 * t3 *
                     (c(8 / d3) * (t1 - c(d1)) * (t1 - c(2 * d1)) + c(15 / d2));
    B[{-1, 2, -1}] = c(-45 / (4 * d2 * d2)) * t1 * t3;
    B[{-1, 0, -1}] = c(-3 / (4 * d3)) * t1 * t3 *
                     (c(15 / d3) - c(16 / d2) * (t1 - c(d1)) * (t1 - c(2 * d1)));
    B[{-1, -3, 0}] = c(-64 / (45 * d3 * d3)) * t1 * t2 * (t2 - c(d2)) * (t2 - c(2 * d2));
    B[{-1, -3, 1}] = c(128 / (45 * d3 * d3)) * t1 * t2 * (t2 - c(d2)) * (t2 - c(2 * d2));
    B[{-1, -3, 2}] = c(-64 / (45 * d3 * d3)) * t1 * t2 * (t2 - c(d2)) * (t2 - c(2 * d2));
    B[{-2, -1, 0}] = c(8 / (15 * d3)) * t1 * (t1 - c(d1)) * t2 *
                     (c(one / d2) * t2 - c(40 / d3) * t3 - c(9) - c(20) * nu);
    B[{-2, -2, 0}] = c(-8 / (15 * d2 * d3)) * t1 * (t1 - c(d1)) * t2 * (t2 - c(d2));
    B[{-2, -1, 1}] = c(-8 / (15 * d3)) * t1 * (t1 - c(d1)) * t2 *
                     (c(one / d2) * t2 - c(20 / d3) * t3 - c(9) - c(20) * nu);
    B[{-2, -1, -1}] = c(32 / (3 * d3 * d3)) * t1 * (t1 - c(d1)) * t2 * t3;
    B[{-2, -2, 1}] = c(8 / (15 * d2 * d3)) * t1 * (t1 - c(d1)) * t2 * (t2 - c(d2));
    B[{-3, 1, 0}] = c(24 / (5 * d2)) * t1 * (t1 - c(d1)) * (t1 - c(2 * d1)) *
                    (c(one / d2) * t2 + c(1) + c(5) * nu);
    B[{-3, -1, 0}] = c(24 / (5 * d2 * d2)) * t1 * (t1 - c(d1)) * (t1 - c(2 * d1)) * t2;
    B[{0, -1, -1}] = c(30 / (d2 * d3)) * t2 * t3;
    return B;
}

TableDiff compare_tables(const ShiftOperator& s, const std::map<ShiftVec, MultiPoly>& table,
                         const std::array<std::size_t, 3>& footprint) {
    if (s.space() != VariableSpace::tau3_nuom())
        throw SpaceMismatch("table comparison needs formal couplings");
    if (s.terms().size() != 22)
        throw StructuralMismatch("expected a 22-point operator, found " +
                                 std::to_string(s.terms().size()) + " shifts");
    std::set<long> axes[3];
    for (const auto& [k, c] : s.terms())
        for (std::size_t i = 0; i < 3; ++i) axes[i].insert(k[i]);
    for (std::size_t i = 0; i < 3; ++i)
        if (axes[i].size() != footprint[i])
            throw StructuralMismatch("direction " + std::to_string(i + 1) + " touches " +
                                     std::to_string(axes[i].size()) +
                                     " points, expected " + std::to_string(footprint[i]));

    TableDiff out;
    std::set<ShiftVec> keys;
    for (const auto& [k, c] : s.terms()) keys.insert(k);
    for (const auto& [k, c] : table) keys.insert(k);
    for (const ShiftVec& k : keys) {
        bool have_d = s.terms().count(k) != 0, have_t = table.count(k) != 0;
        EntryDiff e;
        e.shift = k;
        e.derived = have_d ? s.coefficient(k).str() : "0";
        e.tabulated = have_t ? table.at(k).str() : "0";
        e.equal = have_d && have_t && s.coefficient(k) == table.at(k);
        if (e.equal)
            ++out.matching;
        else if (!have_d)
            ++out.tabulated_only;
        else if (!have_t)
            ++out.derived_only;
        else
            ++out.differing;
        out.entries.push_back(e);
    }
    return out;
}

SpectrumCertificate discrete_spectrum_check(unsigned n, const Spacings& delta,
                                            const Golden& nu, const Golden& om) {
    DiffOperator h = build_h(nu, om);
    ShiftOperator hd = discretize(h, delta);
    FlagSpace flag = FlagSpace::build(VariableSpace::tau3(), {1, 2, 3}, n);
    std::vector<Golden> p = flag_matrix(h, flag).charpoly();
    std::vector<Golden> pd = flag_matrix(hd, flag).charpoly();
    if (p != pd)
        throw SpectrumMismatch(
            "characteristic polynomials differ on the (1,2,3) flag at level " +
            std::to_string(n));

    unsigned moved = 0;
    for (const EigenLevel& lvl : spectrum(h, flag))
        for (const MultiPoly& phi : lvl.functions) {
            MultiPoly psi = to_quasi_basis(phi, delta);
            if (hd.apply(psi) != lvl.lambda * psi)
                throw TransferFailure("quasi image is not an eigenfunction at lambda = " +
                                      str(lvl.lambda));
            ++moved;
        }
    return {p, flag.dim(), moved};
}

CommutationCertificate discrete_commutation(const Spacings& delta, const Golden& nu,
                                            const Golden& om, unsigned n) {
    ShiftOperator hd = discretize(build_h(nu, om), delta);
    ShiftOperator fd = discretize(build_f(nu), delta);
    ShiftOperator c = hd.commutator(fd);
    if (!c.is_zero())
        throw NonZeroCommutator("discretized pair fails as an operator identity, " +
                                std::to_string(c.terms().size()) + " shifts survive");

    CommutationCertificate cert{true, 0};
    FlagSpace flag = FlagSpace::build(VariableSpace::tau3(), {1, 3, 5}, n);
    for (std::size_t i = 0; i < flag.dim(); ++i) {
        MultiPoly b(flag.space);
        b.add_term(flag.basis[i], Golden(1));
        if (!(hd.apply(fd.apply(b)) - fd.apply(hd.apply(b))).is_zero())
            throw NonZeroCommutator(
                "basis monomial survives the discrete commutator: " + b.str());
        ++cert.annihilated;
    }
    return cert;
}

}  // namespace h3

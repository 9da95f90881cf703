#include <h3/invariants.hpp>
#include <h3/linalg.hpp>

#include <map>

namespace h3 {

namespace {

// x1^a x2^b x3^c plus its two cyclic shifts
MultiPoly cyc(unsigned a, unsigned b, unsigned c, const Golden& coef) {
    MultiPoly p(VariableSpace::x3());
    p.add_term({a, b, c}, coef);
    p.add_term({c, a, b}, coef);
    p.add_term({b, c, a}, coef);
    return p;
}

Golden qr(long a, long b = 1) { return Golden(rational(a, b)); }

TauBasis build_basis() {
    const VariableSpace* X = VariableSpace::x3();
    const Golden pp = Golden::phi_plus(), pm = Golden::phi_minus();

    MultiPoly t1(X);
    t1.add_term({2, 0, 0}, Golden(1));
    t1.add_term({0, 2, 0}, Golden(1));
    t1.add_term({0, 0, 2}, Golden(1));

    MultiPoly t2 = cyc(6, 0, 0, qr(-3, 10));
    t2 += cyc(2, 4, 0, qr(3, 10) * (Golden(2) - Golden(5) * pp));
    t2 += cyc(2, 0, 4, qr(3, 10) * (Golden(2) - Golden(5) * pm));
    t2.add_term({2, 2, 2}, qr(-39, 5));

    MultiPoly t3 = cyc(10, 0, 0, qr(2, 125));
    t3 += cyc(8, 2, 0, qr(2, 25) * (Golden(1) + Golden(5) * pm));
    t3 += cyc(8, 0, 2, qr(2, 25) * (Golden(1) + Golden(5) * pp));
    t3 += cyc(6, 4, 0, qr(4, 25) * (Golden(1) - Golden(5) * pm));
    t3 += cyc(6, 0, 4, qr(4, 25) * (Golden(1) - Golden(5) * pp));
    t3 += cyc(6, 2, 2, qr(-112, 25));
    t3 += cyc(2, 4, 4, qr(212, 25));

    return TauBasis{t1, t2, t3};
}

}  // namespace

const TauBasis& TauBasis::instance() {
    static const TauBasis tb = build_basis();
    return tb;
}

MultiPoly compose_tau(const MultiPoly& taupoly) {
    const TauBasis& tb = TauBasis::instance();
    const VariableSpace* sp = taupoly.space();
    if (sp != VariableSpace::tau3()) throw SpaceMismatch("expected tau-space input");
    return taupoly.substitute(VariableSpace::x3(), tb.list());
}

namespace {

// exact-degree decomposition of one homogeneous piece
MultiPoly decompose_homogeneous(const MultiPoly& Q, unsigned d) {
    const VariableSpace* T = VariableSpace::tau3();
    const TauBasis& tb = TauBasis::instance();

    std::vector<Mono> candidates;  // (a,b,c) with 2a+6b+10c = d
    for (unsigned c = 0; 10 * c <= d; ++c)
        for (unsigned b = 0; 6 * b + 10 * c <= d; ++b) {
            unsigned rest = d - 6 * b - 10 * c;
            if (rest % 2) continue;
            candidates.push_back({rest / 2, b, c});
        }
    if (candidates.empty()) throw NotInImage("no tau-monomials at degree " + std::to_string(d));

    // incremental powers of the basis polynomials
    std::vector<std::vector<MultiPoly>> pows(3);
    auto list = tb.list();
    for (int i = 0; i < 3; ++i)
        pows[i].push_back(MultiPoly::constant(VariableSpace::x3(), Golden(1)));
    auto power = [&](int i, unsigned e) -> const MultiPoly& {
        while (pows[i].size() <= e) pows[i].push_back(pows[i].back() * list[i]);
        return pows[i][e];
    };

    std::vector<MultiPoly> expansions;
    std::map<Mono, std::size_t, MonoOrder> index;
    for (const auto& m : candidates) {
        MultiPoly e = power(0, m[0]) * power(1, m[1]) * power(2, m[2]);
        for (const auto& [mono, c] : e.terms()) index.emplace(mono, 0);
        expansions.push_back(std::move(e));
    }
    for (const auto& [mono, c] : Q.terms()) index.emplace(mono, 0);
    std::size_t width = 0;
    for (auto& [mono, idx] : index) idx = width++;

    auto to_vec = [&](const MultiPoly& p) {
        std::vector<Golden> v(width);
        for (const auto& [mono, c] : p.terms()) v[index.at(mono)] = c;
        return v;
    };

    Echelon ech(width);
    for (const auto& e : expansions)
        if (!ech.insert(to_vec(e)))
            throw InconsistentBasis("tau-monomials dependent at degree " + std::to_string(d));
    std::vector<Golden> coeffs;
    try {
        coeffs = ech.express(to_vec(Q));
    } catch (const NotInImage&) {
        throw NotInImage("polynomial is not in the invariant ring (degree " +
                         std::to_string(d) + ")");
    }
    MultiPoly out(T);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        out.add_term(candidates[i], coeffs[i]);
    return out;
}

}  // namespace

MultiPoly decompose_in_tau(const MultiPoly& Q) {
    if (Q.space() != VariableSpace::x3()) throw SpaceMismatch("expected x-space input");
    // split into homogeneous parts; each must decompose on its own
    std::map<unsigned, MultiPoly> parts;
    for (const auto& [m, c] : Q.terms()) {
        unsigned d = m[0] + m[1] + m[2];
        auto it = parts.find(d);
        if (it == parts.end())
            it = parts.emplace(d, MultiPoly::zero(VariableSpace::x3())).first;
        it->second.add_term(m, c);
    }
    MultiPoly out(VariableSpace::tau3());
    for (const auto& [d, p] : parts) out += decompose_homogeneous(p, d);
    return out;
}

OrbitRelation relate_orbit_invariants(const std::vector<Vec3>& orb) {
    MultiPoly t2 = decompose_in_tau(orbit_average(2, orb));
    MultiPoly t6 = decompose_in_tau(orbit_average(6, orb));
    MultiPoly t10 = decompose_in_tau(orbit_average(10, orb));

    const Mono T1{1, 0, 0}, T1_3{3, 0, 0}, T2{0, 1, 0};
    const Mono T3{0, 0, 1}, T12{2, 1, 0}, T1_5{5, 0, 0};

    if (t2.term_count() != 1 || t2.coeff(T1).is_zero())
        throw InconsistentBasis("degree-2 average is not a multiple of t1");
    Golden c = t2.coeff(T1);

    MultiPoly t6_span =
        t6 - t6.coeff(T2) * MultiPoly::variable(VariableSpace::tau3(), 1) -
        t6.coeff(T1_3) * MultiPoly::variable(VariableSpace::tau3(), 0).pow(3);
    if (!t6_span.is_zero())
        throw InconsistentBasis("degree-6 average outside span{t2, t1^3}");
    Golden c1 = t6.coeff(T2), c2 = t6.coeff(T1_3);
    if (c1.is_zero()) throw InconsistentBasis("degree-6 average misses t2");

    MultiPoly t10_span =
        t10 - t10.coeff(T3) * MultiPoly::variable(VariableSpace::tau3(), 2) -
        t10.coeff(T12) * MultiPoly::variable(VariableSpace::tau3(), 0).pow(2) *
            MultiPoly::variable(VariableSpace::tau3(), 1) -
        t10.coeff(T1_5) * MultiPoly::variable(VariableSpace::tau3(), 0).pow(5);
    if (!t10_span.is_zero())
        throw InconsistentBasis("degree-10 average outside span{t3, t1^2 t2, t1^5}");
    Golden d1 = t10.coeff(T3), d2 = t10.coeff(T12), d3 = t10.coeff(T1_5);
    if (d1.is_zero()) throw InconsistentBasis("degree-10 average misses t3");

    OrbitRelation rel;
    rel.s2 = c.inv();
    rel.s6 = c1.inv();
    rel.s10 = d1.inv();
    rel.A = -(c2 / c1);
    rel.B = -(d2 / d1);
    rel.C = rel.A * rel.B - rel.s10 * d3;
    Golden s2_2 = rel.s2 * rel.s2, s2_3 = s2_2 * rel.s2;
    rel.A_raw = -(c2 * s2_3);
    rel.B_raw = -(d2 * s2_2 / c1);
    rel.C_raw = -((d3 + rel.B_raw * c2 / s2_2) * s2_3 * s2_2);
    return rel;
}

MultiPoly jacobian() {
    const TauBasis& tb = TauBasis::instance();
    auto list = tb.list();
    std::vector<std::vector<MultiPoly>> d(3, std::vector<MultiPoly>(3, MultiPoly(VariableSpace::x3())));
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) d[i][k] = list[i].differentiate(k);
    return d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) -
           d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
           d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
}

MultiPoly mirror_product() {
    MultiPoly p = MultiPoly::constant(VariableSpace::x3(), Golden(1));
    for (const auto& f : positive_forms()) p *= f.poly();
    return p;
}

MultiPoly boundary_poly() {
    MultiPoly b(VariableSpace::tau3());
    b.add_term({5, 0, 2}, qr(12960));
    b.add_term({4, 2, 1}, qr(-5760));
    b.add_term({3, 4, 0}, qr(640));
    b.add_term({2, 1, 2}, qr(54000));
    b.add_term({1, 3, 1}, qr(-21600));
    b.add_term({0, 5, 0}, qr(2304));
    b.add_term({0, 0, 3}, qr(50625));
    return b;
}

BoundaryReport boundary_check() {
    MultiPoly J = jacobian();
    MultiPoly c = J.exact_divide(mirror_product());
    if (!c.is_constant())
        throw ProportionalityFailure("jacobian over mirror product is not constant");
    MultiPoly dec = decompose_in_tau(J * J);
    MultiPoly b = boundary_poly();
    const auto& [lead_m, lead_c] = *b.terms().begin();
    Golden factor = dec.coeff(lead_m) / lead_c;
    if (dec != factor * b)
        throw ProportionalityFailure("jacobian squared is not a multiple of the boundary");
    return BoundaryReport{c.constant_value(), factor};
}

std::size_t flag_dim_123(unsigned n) {
    std::size_t count = 0;
    for (unsigned p3 = 0; 3 * p3 <= n; ++p3)
        for (unsigned p2 = 0; 2 * p2 + 3 * p3 <= n; ++p2)
            count += n - 2 * p2 - 3 * p3 + 1;
    return count;
}

}  // namespace h3

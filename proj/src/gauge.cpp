#include <h3/gauge.hpp>

#include <h3/coxeter.hpp>

namespace h3 {

namespace {

const VariableSpace* X = VariableSpace::x3();
const VariableSpace* T = VariableSpace::tau3();
const VariableSpace* TF = VariableSpace::tau3_nuom();

MultiPoly grad_dot(const MultiPoly& f, const MultiPoly& g) {
    MultiPoly out(X);
    for (std::size_t i = 0; i < 3; ++i) out += f.differentiate(i) * g.differentiate(i);
    return out;
}

MultiPoly laplacian(const MultiPoly& f) {
    MultiPoly out(X);
    for (std::size_t i = 0; i < 3; ++i) out += f.differentiate(i).differentiate(i);
    return out;
}

MultiPoly decompose_entry(const MultiPoly& q, const char* label) {
    try {
        return decompose_in_tau(q);
    } catch (const NotInImage& e) {
        throw DecompositionFailure(std::string(label) + ": " + e.what());
    }
}

}  // namespace

MultiPoly prefactor() { return mirror_product(); }

void ground_state_identities() {
    MultiPoly P = prefactor();
    if (!laplacian(P).is_zero()) throw IdentityFailure("prefactor is not harmonic");

    MultiPoly grad2 = grad_dot(P, P);
    MultiPoly mirror_sum(X);
    for (const LinearForm& l : positive_forms()) {
        MultiPoly quot = P.exact_divide(l.poly());
        mirror_sum += l.norm2() * quot * quot;
    }
    if (grad2 != mirror_sum)
        throw IdentityFailure("|grad P|^2 does not match the weighted mirror sum");

    MultiPoly euler(X);
    for (std::size_t i = 0; i < 3; ++i)
        euler += MultiPoly::variable(X, i) * P.differentiate(i);
    if (euler != P * Golden(15)) throw IdentityFailure("prefactor degree is not 15");
}

Golden ground_energy(const Golden& nu, const Golden& om) {
    return Golden(rational(3, 2)) * om * (Golden(1) + Golden(10) * nu);
}

Metric derive_metric() {
    static const Metric cached = [] {
        std::vector<MultiPoly> taus = TauBasis::instance().list();
        auto entry = [&](std::size_t i, std::size_t j, const char* label) {
            return decompose_entry(grad_dot(taus[i], taus[j]), label);
        };
        Metric m;
        m.a11 = entry(0, 0, "A11");
        m.a12 = entry(0, 1, "A12");
        m.a13 = entry(0, 2, "A13");
        m.a22 = entry(1, 1, "A22");
        m.a23 = entry(1, 2, "A23");
        m.a33 = entry(2, 2, "A33");
        return m;
    }();
    return cached;
}

Metric tabulated_metric() {
    Metric m;
    m.a11 = parse_poly(T, "(4)*t1");
    m.a12 = parse_poly(T, "(12)*t2");
    m.a13 = parse_poly(T, "(20)*t3");
    m.a22 = parse_poly(T, "(-48/5)*t1^2*t2 + (45/2)*t3");
    m.a23 = parse_poly(T, "(-24)*t1^2*t3 + (16/15)*t1*t2^2");
    m.a33 = parse_poly(T, "(-64/3)*t1*t2*t3 + (128/45)*t2^3");
    return m;
}

void compare_metric() {
    Metric d = derive_metric(), t = tabulated_metric();
    auto check = [](const MultiPoly& got, const MultiPoly& want, const char* name) {
        if (got != want)
            throw TableMismatch(std::string(name) + ": derived " + got.str() + " vs " +
                                want.str());
    };
    check(d.a11, t.a11, "A11");
    check(d.a12, t.a12, "A12");
    check(d.a13, t.a13, "A13");
    check(d.a22, t.a22, "A22");
    check(d.a23, t.a23, "A23");
    check(d.a33, t.a33, "A33");
}

Drift derive_drift() {
    static const Drift cached = [] {
        std::vector<MultiPoly> taus = TauBasis::instance().list();
        MultiPoly P = prefactor();
        MultiPoly nu = MultiPoly::variable(TF, "nu");
        MultiPoly om = MultiPoly::variable(TF, "om");
        const long dims[3] = {2, 6, 10};
        std::vector<MultiPoly> b;
        for (std::size_t i = 0; i < 3; ++i) {
            MultiPoly lap = decompose_entry(laplacian(taus[i]), "drift laplacian");
            MultiPoly cross = decompose_entry(grad_dot(P, taus[i]).exact_divide(P),
                                              "drift logarithmic term");
            b.push_back(transport(lap, TF) + Golden(2) * nu * transport(cross, TF) -
                        Golden(2 * dims[i]) * om * MultiPoly::variable(TF, i));
        }
        return Drift{b[0], b[1], b[2]};
    }();
    return cached;
}

Drift tabulated_drift() {
    Drift d;
    d.b1 = parse_poly(TF, "(-4)*t1*om + (60)*nu + (6)");
    d.b2 = parse_poly(TF, "(-48)*t1^2*nu + (-48/5)*t1^2 + (-12)*t2*om");
    d.b3 = parse_poly(TF, "(-64/3)*t1*t2*nu + (-128/15)*t1*t2 + (-20)*t3*om");
    return d;
}

void compare_drift() {
    Drift d = derive_drift(), t = tabulated_drift();
    auto check = [](const MultiPoly& got, const MultiPoly& want, const char* name) {
        if (got != want)
            throw TableMismatch(std::string(name) + ": derived " + got.str() + " vs " +
                                want.str());
    };
    check(d.b1, t.b1, "B1");
    check(d.b2, t.b2, "B2");
    check(d.b3, t.b3, "B3");
}

DiffOperator build_h_formal() {
    static const DiffOperator cached = [] {
        Metric m = derive_metric();
        Drift dr = derive_drift();
        auto lift = [](const MultiPoly& p) { return transport(p, TF); };
        DiffOperator h(TF);
        h.add({2, 0, 0}, lift(m.a11));
        h.add({1, 1, 0}, lift(m.a12) * Golden(2));
        h.add({1, 0, 1}, lift(m.a13) * Golden(2));
        h.add({0, 2, 0}, lift(m.a22));
        h.add({0, 1, 1}, lift(m.a23) * Golden(2));
        h.add({0, 0, 2}, lift(m.a33));
        h.add({1, 0, 0}, dr.b1);
        h.add({0, 1, 0}, dr.b2);
        h.add({0, 0, 1}, dr.b3);
        return h;
    }();
    return cached;
}

DiffOperator build_h(const Golden& nu, const Golden& om) {
    DiffOperator formal = build_h_formal();
    DiffOperator h(T);
    for (const auto& [beta, coef] : formal.terms()) h.add(beta, coef.eval_params(T, {nu, om}));
    return h;
}

}  // namespace h3

#include <h3/integral.hpp>

#include <h3/gauge.hpp>

#include <algorithm>

namespace h3 {

namespace {

const VariableSpace* T = VariableSpace::tau3();
const VariableSpace* TF = VariableSpace::tau3_nuom();

Golden q(long a, long b = 1) { return Golden(rational(a, b)); }

}  // namespace

DiffOperator build_f_formal() {
    static const DiffOperator cached = [] {
        MultiPoly t1 = MultiPoly::variable(TF, 0), t2 = MultiPoly::variable(TF, 1),
                  t3 = MultiPoly::variable(TF, 2), nu = MultiPoly::variable(TF, "nu");
        auto c = [](const Golden& g) { return MultiPoly::constant(TF, g); };

        MultiPoly f22 = c(q(24, 5)) * t1.pow(3) * t2 - c(q(45, 4)) * t1 * t3 +
                        c(q(18)) * t2 * t2;
        MultiPoly f23 = c(q(-8, 15)) * t1.pow(2) * t2.pow(2) + c(q(12)) * t1.pow(3) * t3 +
                        c(q(30)) * t2 * t3;
        MultiPoly f33 = c(q(-64, 45)) * t1 * t2.pow(3) + c(q(32, 3)) * t1.pow(2) * t2 * t3 +
                        c(q(50)) * t3 * t3;
        MultiPoly g2 = c(q(24, 5)) * (c(q(1)) + c(q(5)) * nu) * t1.pow(3) +
                       c(q(3)) * (c(q(7)) + c(q(30)) * nu) * t2;
        MultiPoly g3 = c(q(32, 15)) * (c(q(2)) + c(q(5)) * nu) * t1.pow(2) * t2 +
                       c(q(5)) * (c(q(11)) + c(q(30)) * nu) * t3;

        DiffOperator f(TF);
        f.add({0, 2, 0}, f22);
        f.add({0, 1, 1}, f23 * Golden(2));
        f.add({0, 0, 2}, f33);
        f.add({0, 1, 0}, g2);
        f.add({0, 0, 1}, g3);
        return f;
    }();
    return cached;
}

DiffOperator build_f(const Golden& nu) {
    DiffOperator formal = build_f_formal();
    DiffOperator f(T);
    // om never appears; any value works
    for (const auto& [beta, coef] : formal.terms())
        f.add(beta, coef.eval_params(T, {nu, Golden(0)}));
    return f;
}

void verify_commutation(const DiffOperator& h, const DiffOperator& f) {
    DiffOperator c = h.commutator(f);
    if (c.is_zero()) return;
    std::string text = c.str();
    if (text.size() > 160) text = text.substr(0, 160) + "...";
    throw NonZeroCommutator(std::to_string(c.terms().size()) + " surviving terms: " + text);
}

Golden gamma_value(long k2, long k3, const Golden& nu) {
    Golden s = q(3 * k2 + 5 * k3);
    return q(2) * s * s - q(30 * k2 * k3) + (q(1) + q(30) * nu) * s;
}

Golden gamma_value_separable(long k2, long k3, const Golden& nu) {
    Golden s = q(3 * k2 + 5 * k3);
    return q(2) * s * s + (q(1) + q(30) * nu) * s;
}

Golden gamma_offset(const Golden& nu) { return q(15, 2) * nu * (q(1) + q(15) * nu); }

std::vector<LabeledEigenfunction> reference_eigenfunctions(const Golden& nu,
                                                           const Golden& om) {
    MultiPoly t1 = MultiPoly::variable(T, 0), t2 = MultiPoly::variable(T, 1);
    auto c = [](const Golden& g) { return MultiPoly::constant(T, g); };
    Golden one(1);

    std::vector<LabeledEigenfunction> out;
    out.push_back({0, 0, c(one), Golden(0), Golden(0)});
    out.push_back({1, 0, t1 - c(q(3) / (q(2) * om) * (one + q(10) * nu)), q(2) * om,
                   Golden(0)});
    out.push_back({2, 0,
                   t1 * t1 - c(q(5) / om * (one + q(6) * nu)) * t1 +
                       c(q(15) / (q(4) * om * om) * (one + q(6) * nu) * (one + q(10) * nu)),
                   q(4) * om, Golden(0)});
    Golden a6 = one + q(6) * nu, a10 = one + q(10) * nu, a30 = q(7) + q(30) * nu;
    out.push_back({3, 0,
                   t1 * t1 * t1 - c(q(3) / (q(2) * om) * a30) * t1 * t1 +
                       c(q(15) / (q(4) * om * om) * a6 * a30) * t1 -
                       c(q(15) / (q(8) * om * om * om) * a6 * a30 * a10),
                   q(6) * om, Golden(0)});
    out.push_back({3, 1, t2 + c(q(8) * (one + q(5) * nu) / (q(5) * a30)) * t1 * t1 * t1,
                   q(6) * om, q(21) + q(90) * nu});
    return out;
}

void compare_reference(const Golden& nu, const Golden& om) {
    DiffOperator h = build_h(nu, om), f = build_f(nu);
    JointBasis jb = joint_eigenbasis(h, f, FlagSpace::build(T, {1, 3, 5}, 3));
    for (const LabeledEigenfunction& r : reference_eigenfunctions(nu, om)) {
        std::string label =
            "phi_{" + std::to_string(r.n) + "," + std::to_string(r.i) + "}";
        Golden lambda = q(-2) * r.eps;
        const JointEigen* hit = nullptr;
        for (const JointEigen& item : jb.items)
            if (item.h_lambda == lambda && item.f_lambda == r.gamma) {
                if (hit) throw MismatchAtLabel(label + ": eigenvalue pair is degenerate");
                hit = &item;
            }
        if (!hit) throw MismatchAtLabel(label + ": no joint eigenfunction with its labels");
        const Golden& ca = hit->phi.terms().begin()->second;
        const Golden& cb = r.phi.terms().begin()->second;
        if (hit->phi * cb != r.phi * ca)
            throw MismatchAtLabel(label + ": not proportional to the computed function");
    }
}

GammaLabeling label_spectrum(const Golden& nu, const Golden& om, unsigned n) {
    DiffOperator h = build_h(nu, om), f = build_f(nu);
    FlagSpace flag = FlagSpace::build(T, {1, 3, 5}, n);
    JointBasis jb = joint_eigenbasis(h, f, flag);

    GammaLabeling out;
    bool split = jb.unsplit_notes.empty();
    out.tabulated_rotated = split;
    out.tabulated_offset = split;
    out.separable_rotated = split;
    out.separable_offset = split;
    out.bijective = split;
    Golden offset = gamma_offset(nu);

    std::map<long, std::vector<std::pair<long, long>>> used;  // level -> labels taken
    for (const JointEigen& item : jb.items) {
        Golden eps = q(-1, 2) * item.h_lambda;
        Golden level = eps / (q(2) * om);
        long m = to_long(level.rat);  // spectrum is 2 om (k1 + 3 k2 + 5 k3), exact
        GammaLabeling::Row row{eps, item.f_lambda, -1, -1, 0};
        bool tab_rot = false, tab_off = false, sep_off = false;
        for (long k2 = 0; 3 * k2 <= m; ++k2)
            for (long k3 = 0; 3 * k2 + 5 * k3 <= m; ++k3) {
                Golden sep = gamma_value_separable(k2, k3, nu);
                Golden tab = gamma_value(k2, k3, nu);
                if (sep == item.f_lambda) {
                    row.k2 = k2;
                    row.k3 = k3;
                    ++row.fits;
                }
                if (tab == item.f_lambda) tab_rot = true;
                if (tab + offset == item.f_lambda) tab_off = true;
                if (sep + offset == item.f_lambda) sep_off = true;
            }
        if (row.fits != 1) out.separable_rotated = false;
        if (!tab_rot) {
            out.tabulated_rotated = false;
            if (row.fits == 1)
                out.mismatches.push_back(
                    "state (" + std::to_string(row.k2) + "," + std::to_string(row.k3) +
                    ") at eps = " + str(eps) + ": spectrum has " + str(item.f_lambda) +
                    ", tabulated form gives " + str(gamma_value(row.k2, row.k3, nu)));
        }
        if (!tab_off) out.tabulated_offset = false;
        if (!sep_off) out.separable_offset = false;
        if (row.fits == 1) used[m].push_back({row.k2, row.k3});
        out.rows.push_back(row);
    }

    // per level the labels must sweep the lattice section exactly once
    std::map<long, long> level_count;
    for (const auto& row : out.rows)
        if (!(q(2) * om).is_zero()) ++level_count[to_long((row.eps / (q(2) * om)).rat)];
    for (auto& [m, labels] : used) {
        std::vector<std::pair<long, long>> lattice;
        for (long k2 = 0; 3 * k2 <= m; ++k2)
            for (long k3 = 0; 3 * k2 + 5 * k3 <= m; ++k3) lattice.push_back({k2, k3});
        std::sort(labels.begin(), labels.end());
        std::sort(lattice.begin(), lattice.end());
        if (labels != lattice || level_count[m] != static_cast<long>(lattice.size()))
            out.bijective = false;
    }
    return out;
}

}  // namespace h3

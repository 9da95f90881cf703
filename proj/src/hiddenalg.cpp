#include <h3/hiddenalg.hpp>

#include <h3/gauge.hpp>

namespace h3 {

namespace {

Golden q(long a, long b = 1) { return Golden(rational(a, b)); }

const VariableSpace* T() { return VariableSpace::tau3(); }

MultiPoly tau_mono(unsigned a, unsigned b, unsigned c) {
    MultiPoly p(T());
    p.add_term({a, b, c}, Golden(1));
    return p;
}

// one normal-form term tau^m d^beta
DiffOperator single(unsigned a, unsigned b, unsigned c, const DerivIndex& beta) {
    DiffOperator op(T());
    op.add(beta, tau_mono(a, b, c));
    return op;
}

DiffOperator identity_op() {
    return DiffOperator::multiplication(MultiPoly::constant(T(), Golden(1)));
}

DiffOperator diagonal_op(long n) {
    DiffOperator op(T());
    op.add({1, 0, 0}, tau_mono(1, 0, 0));
    op.add({0, 1, 0}, q(2) * tau_mono(0, 1, 0));
    op.add({0, 0, 1}, q(3) * tau_mono(0, 0, 1));
    op.add({0, 0, 0}, MultiPoly::constant(T(), q(-n)));
    return op;
}

// one coordinate slot per (derivative index, coefficient monomial) pair
using OpKey = std::pair<DerivIndex, Mono>;
using OpIndex = std::map<OpKey, std::size_t>;

void collect_keys(const DiffOperator& op, OpIndex& index) {
    for (const auto& [beta, coef] : op.terms())
        for (const auto& [m, g] : coef.terms()) index.emplace(OpKey{beta, m}, 0);
}

void number_keys(OpIndex& index) {
    std::size_t k = 0;
    for (auto& [key, slot] : index) slot = k++;
}

std::vector<Golden> vectorize(const DiffOperator& op, const OpIndex& index) {
    std::vector<Golden> v(index.size());
    for (const auto& [beta, coef] : op.terms())
        for (const auto& [m, g] : coef.terms()) v[index.at({beta, m})] = g;
    return v;
}

std::vector<const DiffOperator*> members(const GeneratorCatalog& cat,
                                         const SubalgebraTable& table,
                                         const std::string& key,
                                         std::vector<std::string>* names = nullptr) {
    std::vector<const DiffOperator*> out;
    for (const std::string& name : table.sets.at(key)) {
        out.push_back(&cat.get(name));
        if (names) names->push_back(name);
    }
    return out;
}

// identity plus every ordered product of up to k factors from gens
std::vector<DiffOperator> products_up_to(const std::vector<const DiffOperator*>& gens,
                                         unsigned k) {
    std::vector<DiffOperator> all;
    all.push_back(identity_op());
    std::vector<DiffOperator> layer = all;
    for (unsigned d = 1; d <= k; ++d) {
        std::vector<DiffOperator> next;
        for (const DiffOperator& p : layer)
            for (const DiffOperator* g : gens) next.push_back(p.compose(*g));
        for (const DiffOperator& p : next) all.push_back(p);
        layer = std::move(next);
    }
    return all;
}

}  // namespace

const DiffOperator& GeneratorCatalog::get(const std::string& name) const {
    for (const auto& [key, op] : first_class)
        if (key == name) return op;
    for (const auto& [key, op] : second_class)
        if (key == name) return op;
    if (name == "J0") return j0;
    throw Error("unknown generator: " + name);
}

GeneratorCatalog build_catalog(long n) {
    GeneratorCatalog cat{n, {}, {}, diagonal_op(n)};

    cat.first_class = {
        {"T0^(1)", single(0, 0, 0, {1, 0, 0})},
        {"T1^(1)", single(1, 0, 0, {1, 0, 0})},
        {"T0^(2)", single(0, 0, 0, {0, 1, 0})},
        {"T1^(2)", single(1, 0, 0, {0, 1, 0})},
        {"T11^(2)", single(2, 0, 0, {0, 1, 0})},
        {"T2^(2)", single(0, 1, 0, {0, 1, 0})},
        {"T0^(3)", single(0, 0, 0, {0, 0, 1})},
        {"T1^(3)", single(1, 0, 0, {0, 0, 1})},
        {"T11^(3)", single(2, 0, 0, {0, 0, 1})},
        {"T111^(3)", single(3, 0, 0, {0, 0, 1})},
        {"T2^(3)", single(0, 1, 0, {0, 0, 1})},
        {"T12^(3)", single(1, 1, 0, {0, 0, 1})},
        {"T3^(3)", single(0, 0, 1, {0, 0, 1})},
        {"T2^(11)", single(0, 1, 0, {2, 0, 0})},
        {"T3^(12)", single(0, 0, 1, {1, 1, 0})},
        {"T3^(22)", single(0, 0, 1, {0, 2, 0})},
        {"T13^(22)", single(1, 0, 1, {0, 2, 0})},
        {"T22^(13)", single(0, 2, 0, {1, 0, 1})},
        {"T222^(33)", single(0, 3, 0, {0, 0, 2})},
        {"T3^(111)", single(0, 0, 1, {3, 0, 0})},
        {"T33^(222)", single(0, 0, 2, {0, 3, 0})},
    };

    const DiffOperator& j0 = cat.j0;
    DiffOperator id = identity_op();
    DiffOperator j01 = j0 + id;
    DiffOperator j02 = j0 + q(2) * id;
    auto mult = [](const MultiPoly& p) { return DiffOperator::multiplication(p); };
    auto d = [](std::size_t var, unsigned order) {
        return DiffOperator::derivative(T(), var, order);
    };

    cat.second_class = {
        {"J1^+", mult(tau_mono(1, 0, 0)).compose(j0)},
        {"J2,-1^+", mult(tau_mono(0, 1, 0)).compose(d(0, 1).compose(j0))},
        {"J2^+", mult(tau_mono(0, 1, 0)).compose(j0.compose(j01))},
        {"J3,-2^+", mult(tau_mono(0, 0, 1)).compose(d(1, 1).compose(j0))},
        {"J22,-3^+", mult(tau_mono(0, 2, 0)).compose(d(2, 1).compose(j0))},
        {"J3,-11^+", mult(tau_mono(0, 0, 1)).compose(d(0, 2).compose(j0))},
        {"J3,-1^+", mult(tau_mono(0, 0, 1)).compose(d(0, 1).compose(j0.compose(j01)))},
        {"J3^+", mult(tau_mono(0, 0, 1)).compose(j0.compose(j01.compose(j02)))},
    };
    return cat;
}

SubalgebraTable subalgebra_table() {
    SubalgebraTable t;
    t.sets = {
        {"L", {"T0^(3)", "T1^(3)", "T11^(3)", "T111^(3)"}},
        {"Lf", {"T3^(111)", "J3,-11^+", "J3,-1^+", "J3^+"}},
        {"R", {"T0^(2)", "T1^(2)", "T11^(2)"}},
        {"Rf", {"T2^(11)", "J2,-1^+", "J2^+"}},
        {"F", {"T2^(3)", "T12^(3)"}},
        {"Ff", {"T3^(12)", "J3,-2^+"}},
        {"E", {"T3^(22)", "T13^(22)"}},
        {"Ef", {"T22^(13)", "J22,-3^+"}},
        {"G", {"T222^(33)"}},
        {"Gf", {"T33^(222)"}},
        {"B", {"T0^(1)", "T1^(1)", "T2^(2)", "T3^(3)", "J0", "J1^+"}},
    };
    // listed against the reversed order of the partner family
    t.conjugation = {
        {"T0^(3)", "J3^+"},       {"T1^(3)", "J3,-1^+"},  {"T11^(3)", "J3,-11^+"},
        {"T111^(3)", "T3^(111)"}, {"T0^(2)", "J2^+"},     {"T1^(2)", "J2,-1^+"},
        {"T11^(2)", "T2^(11)"},   {"T2^(3)", "J3,-2^+"},  {"T12^(3)", "T3^(12)"},
        {"T3^(22)", "J22,-3^+"},  {"T13^(22)", "T22^(13)"},
        {"T222^(33)", "T33^(222)"},
        {"T0^(1)", "J1^+"},       {"T1^(1)", "T1^(1)"},
        {"T2^(2)", "T2^(2)"},     {"T3^(3)", "T3^(3)"},
    };
    return t;
}

bool span_contains(const GeneratorCatalog& cat, const std::vector<std::string>& names,
                   const DiffOperator& target) {
    OpIndex index;
    for (const std::string& name : names) collect_keys(cat.get(name), index);
    collect_keys(target, index);
    number_keys(index);
    Echelon ech(index.size());
    for (const std::string& name : names) ech.insert(vectorize(cat.get(name), index));
    return ech.contains(vectorize(target, index));
}

FlagReport flag_behavior_check(const GeneratorCatalog& cat,
                               const std::vector<unsigned>& levels) {
    FlagReport rep;
    rep.preserved_images = 0;
    for (unsigned m : levels) {
        FlagSpace flag = FlagSpace::build(T(), {1, 2, 3}, m);
        auto must_preserve = [&](const std::string& name, const DiffOperator& op) {
            for (const Mono& b : flag.basis) {
                MultiPoly mono(T());
                mono.add_term(b, Golden(1));
                try {
                    flag.coords_of(op.apply(mono));
                } catch (const NotInvariant&) {
                    throw ClassificationFailure(name + " leaves level " +
                                                std::to_string(m));
                }
                ++rep.preserved_images;
            }
        };
        for (const auto& [name, op] : cat.first_class) must_preserve(name, op);
        for (const auto& [name, op] : cat.second_class) {
            if (static_cast<long>(m) == cat.n) {
                must_preserve(name, op);
                continue;
            }
            if (rep.escapes.count(name)) continue;
            for (const Mono& b : flag.basis) {
                MultiPoly mono(T());
                mono.add_term(b, Golden(1));
                MultiPoly img = op.apply(mono);
                if (img.is_zero()) continue;
                try {
                    flag.coords_of(img);
                } catch (const NotInvariant&) {
                    rep.escapes[name] = {m, mono.str()};
                    break;
                }
            }
        }
    }
    for (const auto& [name, op] : cat.second_class)
        if (!rep.escapes.count(name))
            throw ClassificationFailure(name + " preserved every sampled alien level");
    return rep;
}

AbelianReport abelian_checks(const GeneratorCatalog& cat, const SubalgebraTable& table) {
    AbelianReport rep{0};
    for (const char* key : {"L", "Lf", "R", "Rf", "F", "Ff", "E", "Ef", "G", "Gf"}) {
        std::vector<std::string> names;
        std::vector<const DiffOperator*> ops = members(cat, table, key, &names);
        for (std::size_t i = 0; i < ops.size(); ++i)
            for (std::size_t j = i + 1; j < ops.size(); ++j) {
                if (!ops[i]->commutator(*ops[j]).is_zero())
                    throw NonAbelian(std::string(key) + ": [" + names[i] + ", " +
                                     names[j] + "]");
                ++rep.pairs_checked;
            }
    }
    return rep;
}

StructureReport structure_checks(const GeneratorCatalog& cat,
                                 const SubalgebraTable& table) {
    StructureReport rep{0, 0, 0, false, false};

    struct ZeroBlock { const char* x; const char* y; };
    for (const ZeroBlock& blk : std::initializer_list<ZeroBlock>{
             {"L", "R"}, {"L", "F"}, {"L", "G"}, {"R", "E"}, {"F", "G"},
             {"Lf", "Rf"}, {"Lf", "Ff"}, {"Lf", "Gf"}, {"Rf", "Ef"}, {"Ff", "Gf"}}) {
        std::vector<std::string> xn, yn;
        auto xs = members(cat, table, blk.x, &xn);
        auto ys = members(cat, table, blk.y, &yn);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j) {
                if (!xs[i]->commutator(*ys[j]).is_zero())
                    throw MembershipFailure("[" + xn[i] + ", " + yn[j] +
                                            "] expected to vanish");
                ++rep.zero_pairs;
            }
    }

    struct SpanBlock { const char* x; const char* y; const char* into; };
    for (const SpanBlock& blk : std::initializer_list<SpanBlock>{
             {"R", "F", "L"}, {"Rf", "Ff", "Lf"}, {"R", "Ff", "E"},
             {"Rf", "F", "Ef"}, {"F", "Ef", "G"}, {"Ff", "E", "Gf"}}) {
        std::vector<std::string> xn, yn;
        auto xs = members(cat, table, blk.x, &xn);
        auto ys = members(cat, table, blk.y, &yn);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j) {
                DiffOperator c = xs[i]->commutator(*ys[j]);
                if (!span_contains(cat, table.sets.at(blk.into), c))
                    throw MembershipFailure("[" + xn[i] + ", " + yn[j] +
                                            "] outside span " + blk.into);
                ++rep.span_members;
            }
    }

    struct PolyBlock { const char* x; const char* y; const char* base; unsigned deg; };
    for (const PolyBlock& blk : std::initializer_list<PolyBlock>{
             {"L", "Lf", "B", 3}, {"R", "Rf", "B", 2}, {"F", "Ff", "B", 2},
             {"L", "E", "R", 2}}) {
        std::vector<std::string> xn, yn;
        auto xs = members(cat, table, blk.x, &xn);
        auto ys = members(cat, table, blk.y, &yn);
        std::vector<DiffOperator> prods =
            products_up_to(members(cat, table, blk.base), blk.deg);

        std::vector<std::pair<std::string, DiffOperator>> targets;
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j)
                targets.push_back({"[" + xn[i] + ", " + yn[j] + "]",
                                   xs[i]->commutator(*ys[j])});

        OpIndex index;
        for (const DiffOperator& p : prods) collect_keys(p, index);
        for (const auto& [label, c] : targets) collect_keys(c, index);
        number_keys(index);
        Echelon ech(index.size());
        for (const DiffOperator& p : prods) ech.insert(vectorize(p, index));
        for (const auto& [label, c] : targets) {
            if (!ech.contains(vectorize(c, index)))
                throw MembershipFailure(label + " outside degree-" +
                                        std::to_string(blk.deg) + " envelope of " +
                                        blk.base);
            ++rep.polynomial_members;
        }
    }

    std::vector<std::string> bn;
    auto bs = members(cat, table, "B", &bn);
    rep.core_closes = true;
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j)
            if (!span_contains(cat, table.sets.at("B"), bs[i]->commutator(*bs[j])))
                rep.core_closes = false;

    // sl(2) doubled by its center: {e, f, h} plus z, t2 d2, t3 d3 commuting out
    DiffOperator e = cat.get("J1^+");
    DiffOperator f = q(-1) * cat.get("T0^(1)");
    DiffOperator h = cat.j0 + cat.get("T1^(1)");
    DiffOperator z = cat.j0 - cat.get("T1^(1)");
    bool gl2 = h.commutator(e) == q(2) * e && h.commutator(f) == q(-2) * f &&
               e.commutator(f) == h && z.commutator(e).is_zero() &&
               z.commutator(f).is_zero();
    for (const char* center : {"T2^(2)", "T3^(3)"})
        for (const std::string& other : table.sets.at("B"))
            if (!cat.get(center).commutator(cat.get(other)).is_zero()) gl2 = false;
    rep.core_gl2_structure = gl2;
    return rep;
}

DiffOperator h_decomposition_check(const Golden& nu, const Golden& om) {
    GeneratorCatalog cat = build_catalog(0);
    auto g = [&](const char* name) -> const DiffOperator& { return cat.get(name); };

    DiffOperator assembled =
        q(4) * g("T1^(1)").compose(g("T0^(1)")) +
        q(24) * g("T2^(2)").compose(g("T0^(1)")) +
        q(40) * g("T3^(3)").compose(g("T0^(1)")) +
        q(-48, 5) * g("T2^(2)").compose(g("T11^(2)")) +
        q(45, 2) * g("T3^(22)") +
        q(32, 15) * g("T12^(3)").compose(g("T2^(2)")) +
        q(-48) * g("T3^(3)").compose(g("T11^(2)")) +
        q(-64, 3) * g("T3^(3)").compose(g("T12^(3)")) +
        q(128, 45) * g("T222^(33)") +
        (q(6) + q(60) * nu) * g("T0^(1)") +
        (q(-4) * om) * g("T1^(1)") +
        (q(-48, 5) * (q(1) + q(5) * nu)) * g("T11^(2)") +
        (q(-12) * om) * g("T2^(2)") +
        (q(-64, 15) * (q(2) + q(5) * nu)) * g("T12^(3)") +
        (q(-20) * om) * g("T3^(3)");

    DiffOperator h = build_h(nu, om);
    if (assembled != h) throw DecompositionMismatch((assembled - h).str());
    return assembled;
}

}  // namespace h3

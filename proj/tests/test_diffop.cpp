#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <h3/diffop.hpp>
#include <h3/gauge.hpp>

using namespace h3;

namespace {

Golden q(long a, long b = 1) { return Golden(rational(a, b)); }
const VariableSpace* T = VariableSpace::tau3();

MultiPoly tvar(std::size_t i) { return MultiPoly::variable(T, i); }

DiffOperator d(std::size_t var, unsigned order = 1) {
    return DiffOperator::derivative(T, var, order);
}
DiffOperator mult(const MultiPoly& c) { return DiffOperator::multiplication(c); }

// scaled Euler operator sum_i w_i t_i d_i
DiffOperator weighted_euler(const std::vector<long>& w) {
    DiffOperator out(T);
    for (std::size_t i = 0; i < 3; ++i)
        out += mult(tvar(i) * q(w[i])).compose(d(i));
    return out;
}

}  // namespace

TEST_CASE("derivatives and multiplications act pointwise") {
    MultiPoly p = tvar(0).pow(2) * tvar(1) + tvar(2);
    CHECK(d(0).apply(p).str() == "(2)*t1*t2");
    CHECK(d(0, 2).apply(p).str() == "(2)*t2");
    CHECK(mult(tvar(2)).apply(p) == p * tvar(2));
    CHECK((d(0).compose(d(1))).apply(p).str() == "(2)*t1");
}

TEST_CASE("composition matches successive application") {
    DiffOperator a = mult(tvar(0)).compose(d(0)) + d(1, 2);
    DiffOperator b = mult(tvar(1) * tvar(1)).compose(d(0)) + mult(tvar(2));
    MultiPoly p = tvar(0).pow(3) + tvar(0) * tvar(1).pow(2) + tvar(1) * tvar(2);
    CHECK(a.compose(b).apply(p) == a.apply(b.apply(p)));
    CHECK(b.compose(a).apply(p) == b.apply(a.apply(p)));
}

TEST_CASE("normal ordering pushes derivatives right") {
    // d1 t1 = t1 d1 + 1, so the commutator is the identity
    DiffOperator comm = d(0).commutator(mult(tvar(0)));
    CHECK(comm.terms().size() == 1);
    CHECK(comm.coefficient({0, 0, 0}) == MultiPoly::constant(T, q(1)));

    // d1^2 t1^2 = t1^2 d1^2 + 4 t1 d1 + 2
    DiffOperator full = d(0, 2).compose(mult(tvar(0) * tvar(0)));
    CHECK(full.coefficient({2, 0, 0}) == tvar(0) * tvar(0));
    CHECK(full.coefficient({1, 0, 0}) == tvar(0) * q(4));
    CHECK(full.coefficient({0, 0, 0}) == MultiPoly::constant(T, q(2)));
    CHECK(full.terms().size() == 3);

    CHECK(full.str() == "{(1)*t1^2} d1^2 + {(4)*t1} d1 + {(2)}");
}

TEST_CASE("operator algebra: associativity, antisymmetry, Jacobi") {
    DiffOperator a = mult(tvar(0)).compose(d(1)) + d(0);
    DiffOperator b = mult(tvar(1) * tvar(2)).compose(d(2, 2)) + mult(tvar(0));
    DiffOperator c = d(2).compose(d(0)) + mult(tvar(1)).compose(d(1));

    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    CHECK(a.commutator(b) == -(b.commutator(a)));
    DiffOperator jacobi = a.commutator(b.commutator(c)) + b.commutator(c.commutator(a)) +
                          c.commutator(a.commutator(b));
    CHECK(jacobi.is_zero());
}

TEST_CASE("weight shifts track coefficient degree minus derivative order") {
    std::vector<long> alpha = {1, 2, 3};
    CHECK(weight_shifts(mult(tvar(0)).compose(d(1)), alpha) == std::set<long>{-1});
    CHECK(weight_shifts(mult(tvar(1)).compose(d(0)), alpha) == std::set<long>{1});
    CHECK(weight_shifts(mult(MultiPoly::constant(T, q(3))), alpha) == std::set<long>{0});
    CHECK(weight_shifts(DiffOperator(T), alpha).empty());
    CHECK(weight_shifts(mult(tvar(2) + tvar(0)).compose(d(0)), alpha) ==
          std::set<long>({0, 2}));
}

TEST_CASE("flag dimensions match the lattice counts") {
    CHECK(FlagSpace::build(T, {1, 2, 3}, 6).dim() == 23);
    CHECK(FlagSpace::build(T, {1, 2, 3}, 8).dim() == 41);
    CHECK(FlagSpace::build(T, {1, 3, 5}, 5).dim() == 10);
    CHECK(FlagSpace::build(T, {1, 3, 5}, 8).dim() == 23);

    // independent count by brute enumeration
    for (long n = 0; n <= 10; ++n) {
        std::size_t count123 = 0, count135 = 0;
        for (long p1 = 0; p1 <= n; ++p1)
            for (long p2 = 0; 2 * p2 <= n; ++p2)
                for (long p3 = 0; 3 * p3 <= n; ++p3) {
                    if (p1 + 2 * p2 + 3 * p3 <= n) ++count123;
                    if (p1 + 3 * p2 + 5 * p3 <= n) ++count135;
                }
        CHECK(FlagSpace::build(T, {1, 2, 3}, static_cast<unsigned>(n)).dim() == count123);
        CHECK(FlagSpace::build(T, {1, 3, 5}, static_cast<unsigned>(n)).dim() == count135);
    }
}

TEST_CASE("flag escape is reported with a witness") {
    FlagSpace flag = FlagSpace::build(T, {1, 2, 3}, 1);
    CHECK(flag.dim() == 2);
    CHECK_THROWS_AS(flag_matrix(mult(tvar(0)), flag), NotInvariant);
    try {
        flag_matrix(mult(tvar(0)), flag);
    } catch (const NotInvariant& e) {
        CHECK(std::string(e.what()).find("t1^2") != std::string::npos);
    }
}

TEST_CASE("euler operator splits the flag by weight") {
    FlagSpace flag = FlagSpace::build(T, {1, 2, 3}, 3);
    CHECK(flag.dim() == 7);
    std::vector<EigenLevel> levels = spectrum(weighted_euler({1, 2, 3}), flag);
    REQUIRE(levels.size() == 4);
    // sorted by descending eigenvalue: weights 3, 2, 1, 0
    CHECK(levels[0].lambda == q(3));
    CHECK(levels[0].algebraic == 3);
    CHECK(levels[0].functions.size() == 3);
    CHECK(levels[1].lambda == q(2));
    CHECK(levels[1].algebraic == 2);
    CHECK(levels[2].lambda == q(1));
    CHECK(levels[3].lambda == q(0));
    CHECK(levels[3].functions.size() == 1);
    CHECK(levels[3].functions[0].is_constant());
}

TEST_CASE("commuting pair is split jointly") {
    FlagSpace flag = FlagSpace::build(T, {1, 2, 3}, 2);  // 1, t1, t1^2, t2
    DiffOperator h = weighted_euler({1, 2, 0});
    DiffOperator f = mult(tvar(1)).compose(d(1));
    CHECK(h.commutator(f).is_zero());

    JointBasis jb = joint_eigenbasis(h, f, flag);
    CHECK(jb.unsplit_notes.empty());
    REQUIRE(jb.items.size() == 4);
    // descending h-eigenvalue, f ascending inside the degenerate block
    CHECK(jb.items[0].h_lambda == q(2));
    CHECK(jb.items[0].f_lambda == q(0));
    CHECK(jb.items[0].phi == tvar(0) * tvar(0) * jb.items[0].phi.coeff({2, 0, 0}));
    CHECK(jb.items[1].h_lambda == q(2));
    CHECK(jb.items[1].f_lambda == q(1));
    CHECK(jb.items[1].phi == tvar(1) * jb.items[1].phi.coeff({0, 1, 0}));
    CHECK(jb.items[2].h_lambda == q(1));
    CHECK(jb.items[3].h_lambda == q(0));
}

TEST_CASE("hamiltonian on the two-dimensional flag") {
    DiffOperator h = build_h(q(1, 3), q(1));
    FlagSpace flag = FlagSpace::build(T, {1, 2, 3}, 1);
    Matrix m = flag_matrix(h, flag);
    Matrix expect(2, 2);
    expect.at(0, 0) = q(0);
    expect.at(0, 1) = q(26);
    expect.at(1, 0) = q(0);
    expect.at(1, 1) = q(-4);
    CHECK(m == expect);

    std::vector<EigenLevel> levels = spectrum(h, flag);
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].lambda == q(0));
    REQUIRE(levels[1].functions.size() == 1);
    const MultiPoly& phi = levels[1].functions[0];
    // proportional to t1 - 13/2
    CHECK(phi == (tvar(0) - MultiPoly::constant(T, q(13, 2))) * phi.coeff({1, 0, 0}));
}

TEST_CASE("spectrum through level three shows the double level") {
    DiffOperator h = build_h(q(1, 3), q(1));
    FlagSpace flag = FlagSpace::build(T, {1, 2, 3}, 3);
    std::vector<EigenLevel> levels = spectrum(h, flag);
    REQUIRE(levels.size() == 6);
    std::vector<std::pair<long, std::size_t>> got;
    for (const EigenLevel& l : levels) {
        CHECK(l.lambda.is_rational());
        CHECK(l.functions.size() == l.algebraic);
        got.push_back({to_long(l.lambda.rat), l.algebraic});
    }
    std::vector<std::pair<long, std::size_t>> expect = {
        {0, 1}, {-4, 1}, {-8, 1}, {-12, 2}, {-16, 1}, {-20, 1}};
    CHECK(got == expect);

    // the same eigenvalues at a second coupling: charpoly is nu-independent
    Matrix m1 = flag_matrix(h, flag);
    Matrix m2 = flag_matrix(build_h(q(2, 7), q(1)), flag);
    CHECK(m1.charpoly() == m2.charpoly());
}

TEST_CASE("tabulated eigenfunctions are reproduced") {
    Golden nu = q(1, 3), om = q(1);
    DiffOperator h = build_h(nu, om);
    MultiPoly t1 = tvar(0), t2 = tvar(1);
    auto c = [&](const Golden& g) { return MultiPoly::constant(T, g); };

    // level two: t1^2 - (5/om)(1+6nu) t1 + (15/4om^2)(1+6nu)(1+10nu)
    MultiPoly phi20 = t1 * t1 - c(q(15)) * t1 + c(q(195, 4));
    CHECK(h.apply(phi20) == phi20 * q(-8));

    // level three, gamma = 0 branch
    MultiPoly phi30 =
        t1 * t1 * t1 - c(q(51, 2)) * t1 * t1 + c(q(765, 4)) * t1 - c(q(3315, 8));
    CHECK(h.apply(phi30) == phi30 * q(-12));

    // level three, invariant-t2 branch: t2 + 8(1+5nu)/(5(7+30nu)) t1^3
    MultiPoly phi31 = t2 + c(q(64, 255)) * t1 * t1 * t1;
    CHECK(h.apply(phi31) == phi31 * q(-12));
}

TEST_CASE("weight-zero part in the spectral grading is the scaled euler operator") {
    DiffOperator h = build_h(q(1, 3), q(1));
    std::vector<long> alpha = {1, 3, 5};
    CHECK(weight_shifts(h, alpha) == std::set<long>({-1, 0}));
    CHECK(weight_component(h, alpha, 0) == q(-4) * weighted_euler({1, 3, 5}));

    // under the triangular grading the shifts are the same two values
    CHECK(weight_shifts(h, {1, 2, 3}) == std::set<long>({-1, 0}));
}

TEST_CASE("flag angles to the diagonal") {
    FlagAngle a123 = flag_angle({1, 2, 3});
    CHECK(a123.numer == 6);
    CHECK(a123.radicand == 42);
    FlagAngle a135 = flag_angle({1, 3, 5});
    CHECK(a135.numer == 9);
    CHECK(a135.radicand == 105);
    FlagAngle diag = flag_angle({1, 1, 1});
    CHECK(diag.numer * diag.numer == diag.radicand);
}

TEST_CASE("triangular flag survives the shift substitutions") {
    WptParams w;
    w.a = q(2);
    w.b1 = q(-1);
    w.b2 = q(3, 2);
    w.b3 = q(5);
    w.c1 = q(1, 3);
    w.c2 = q(-2);
    w.c3 = q(7);
    w.c4 = q(1);
    w.c5 = q(-5, 4);
    w.c6 = q(11);
    CHECK(wpt_check(w, 4));

    WptParams zero;
    zero.a = zero.b1 = zero.b2 = zero.b3 = q(0);
    zero.c1 = zero.c2 = zero.c3 = zero.c4 = zero.c5 = zero.c6 = q(0);
    CHECK(wpt_check(zero, 6));
}

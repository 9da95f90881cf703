#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <h3/poly.hpp>

using namespace h3;

namespace {

const VariableSpace* X = VariableSpace::x3();
const VariableSpace* T = VariableSpace::tau3();

MultiPoly xv(std::size_t i) { return MultiPoly::variable(X, i); }
MultiPoly tv(std::size_t i) { return MultiPoly::variable(T, i); }
Golden q(long a, long b = 1) { return Golden(rational(a, b)); }

}  // namespace

TEST_CASE("construction and arithmetic") {
    MultiPoly p = xv(0) * xv(0) + q(3) * xv(1) - MultiPoly::constant(X, q(7));
    CHECK(p.term_count() == 3);
    CHECK(p.coeff({2, 0, 0}) == q(1));
    CHECK(p.coeff({0, 1, 0}) == q(3));
    CHECK(p.coeff({0, 0, 0}) == q(-7));
    CHECK(p.coeff({1, 1, 1}) == Golden());
    CHECK((p - p).is_zero());
    CHECK(p + p == q(2) * p);
}

TEST_CASE("multiplication cancels exactly") {
    // (x1 - r5 x2)(x1 + r5 x2) = x1^2 - 5 x2^2
    MultiPoly a = xv(0) - Golden::sqrt5() * xv(1);
    MultiPoly b = xv(0) + Golden::sqrt5() * xv(1);
    MultiPoly prod = a * b;
    CHECK(prod == xv(0) * xv(0) - q(5) * xv(1) * xv(1));
    CHECK(prod.term_count() == 2);
}

TEST_CASE("exact division") {
    MultiPoly a = xv(0) - Golden::sqrt5() * xv(1);
    MultiPoly b = xv(0) + Golden::sqrt5() * xv(1);
    MultiPoly prod = a * b;
    CHECK(prod.exact_divide(a) == b);
    CHECK(prod.exact_divide(b) == a);
    MultiPoly p15 = (xv(0) + xv(1) + xv(2)).pow(15);
    MultiPoly d = (xv(0) + xv(1) + xv(2)).pow(6);
    CHECK(p15.exact_divide(d) == (xv(0) + xv(1) + xv(2)).pow(9));
    CHECK_THROWS_AS(prod.exact_divide(xv(2)), NonDivisible);
    CHECK_THROWS_AS((prod + MultiPoly::constant(X, q(1))).exact_divide(a), NonDivisible);
    CHECK_THROWS_AS(prod.exact_divide(MultiPoly::zero(X)), DivisionByZero);
}

TEST_CASE("degrees") {
    MultiPoly p = tv(0) * tv(1) * tv(1) + tv(2);
    CHECK(p.total_degree() == 3);
    CHECK(p.degree_in(1) == 2);
    CHECK(p.weighted_degree({1, 3, 5}) == 7);   // t1*t2^2 carries 1+6
    CHECK(p.weighted_degree({2, 6, 10}) == 14);
    CHECK(MultiPoly::zero(T).weighted_degree({1, 3, 5}) == -1);
}

TEST_CASE("differentiation") {
    MultiPoly p = xv(0).pow(3) * xv(1) + q(2) * xv(2);
    CHECK(p.differentiate(0) == q(3) * xv(0).pow(2) * xv(1));
    CHECK(p.differentiate(1) == xv(0).pow(3));
    CHECK(p.differentiate(2) == MultiPoly::constant(X, q(2)));
    CHECK(p.differentiate(0).differentiate(1) == q(3) * xv(0).pow(2));
}

TEST_CASE("evaluation") {
    MultiPoly p = xv(0) * xv(0) - q(5) * xv(1) * xv(1);
    CHECK(p.eval({Golden::phi_plus(), q(1, 2), q(0)}) ==
          Golden::phi_plus() * Golden::phi_plus() - q(5, 4));
    CHECK(p.eval({q(3), q(1), q(9)}) == q(4));
}

TEST_CASE("substitution") {
    // x1 -> t1 + t2, x2 -> t1 - t2, x3 -> 0 applied to x1*x2 gives t1^2 - t2^2
    std::vector<MultiPoly> images = {tv(0) + tv(1), tv(0) - tv(1), MultiPoly::zero(T)};
    MultiPoly p = xv(0) * xv(1);
    CHECK(p.substitute(T, images) == tv(0) * tv(0) - tv(1) * tv(1));
}

TEST_CASE("parameter slots") {
    const VariableSpace* TP = VariableSpace::tau3_nuom();
    MultiPoly nu = MultiPoly::variable(TP, "nu");
    MultiPoly t1 = MultiPoly::variable(TP, "t1");
    MultiPoly p = q(6) * t1 * nu + q(2) * t1;
    CHECK(p.differentiate(0) == q(6) * nu + MultiPoly::constant(TP, q(2)));
    MultiPoly fixed = p.eval_params(VariableSpace::tau3(), {q(1, 3), q(1)});
    CHECK(fixed == q(4) * tv(0));
    // weighted degree ignores parameter slots
    CHECK(p.weighted_degree({1, 3, 5}) == 1);
}

TEST_CASE("canonical rendering") {
    MultiPoly p = q(-48, 5) * tv(0) * tv(0) * tv(1) + q(45, 2) * tv(2);
    CHECK(p.str() == "(-48/5)*t1^2*t2 + (45/2)*t3");
    CHECK(MultiPoly::zero(T).str() == "0");
    CHECK(MultiPoly::constant(T, q(1)).str() == "(1)");
    MultiPoly withsurd = (q(2) + q(1) * Golden::sqrt5()) * tv(0) +
                         (Golden(rational(0), rational(-1, 3))) * tv(1);
    CHECK(withsurd.str() == "(2 + r5)*t1 + (-1/3*r5)*t2");

    const VariableSpace* TP = VariableSpace::tau3_nuom();
    MultiPoly t1 = MultiPoly::variable(TP, "t1");
    MultiPoly t2 = MultiPoly::variable(TP, "t2");
    MultiPoly nu = MultiPoly::variable(TP, "nu");
    MultiPoly om = MultiPoly::variable(TP, "om");
    MultiPoly b = q(-48) * t1 * t1 * nu + q(-12) * t2 * om + q(-48, 5) * t1 * t1;
    CHECK(b.str() == "(-48)*t1^2*nu + (-48/5)*t1^2 + (-12)*t2*om");
}

TEST_CASE("term order is graded lex descending") {
    MultiPoly p = tv(2) + tv(0) * tv(1) + tv(0).pow(2) + tv(1);
    // degree 2 terms first (t1^2 before t1*t2), then degree 1 (t2 before t3)
    CHECK(p.str() == "(1)*t1^2 + (1)*t1*t2 + (1)*t2 + (1)*t3");
}

TEST_CASE("parse round trip") {
    for (const char* s : {"0", "(1)", "(-48/5)*t1^2*t2 + (45/2)*t3",
                          "(-2)*t2^4 + (1/2 + 1/2*r5)*t1*t3"}) {
        MultiPoly p = parse_poly(T, s);
        CHECK(p.str() == std::string(s));
    }
    const VariableSpace* TP = VariableSpace::tau3_nuom();
    MultiPoly b = parse_poly(TP, "(-48)*t1^2*nu + (-12)*t2*om + (-48/5)*t1^2");
    CHECK(b.coeff({2, 0, 0, 1, 0}) == q(-48));
    CHECK(b.coeff({0, 1, 0, 0, 1}) == q(-12));
    CHECK(b.coeff({2, 0, 0, 0, 0}) == q(-48, 5));
}

TEST_CASE("space mismatch is rejected") {
    MultiPoly a = xv(0);
    MultiPoly b = tv(0);
    CHECK_THROWS_AS(a + b, SpaceMismatch);
    CHECK_THROWS_AS(a * b, SpaceMismatch);
}

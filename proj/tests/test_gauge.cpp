#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <h3/coxeter.hpp>
#include <h3/gauge.hpp>

using namespace h3;

namespace {

Golden q(long a, long b = 1) { return Golden(rational(a, b)); }
const VariableSpace* X = VariableSpace::x3();
const VariableSpace* T = VariableSpace::tau3();
const VariableSpace* TF = VariableSpace::tau3_nuom();

}  // namespace

TEST_CASE("prefactor is the odd degree-15 mirror product") {
    MultiPoly P = prefactor();
    CHECK(P.total_degree() == 15);

    MultiPoly euler(X);
    for (std::size_t i = 0; i < 3; ++i)
        euler += MultiPoly::variable(X, i) * P.differentiate(i);
    CHECK(euler == P * q(15));

    // antisymmetric under every generating reflection
    for (const Mat3& r : Group::instance().reflections()) CHECK(act(r, P) == -P);
}

TEST_CASE("ground state identities certify the lowest eigenvalue") {
    CHECK_NOTHROW(ground_state_identities());

    // recomputed from scratch: harmonicity and the mirror-sum expansion
    MultiPoly P = prefactor();
    MultiPoly lap(X);
    for (std::size_t i = 0; i < 3; ++i) lap += P.differentiate(i).differentiate(i);
    CHECK(lap.is_zero());

    MultiPoly grad2(X);
    for (std::size_t i = 0; i < 3; ++i) {
        MultiPoly d = P.differentiate(i);
        grad2 += d * d;
    }
    MultiPoly mirror_sum(X);
    for (const LinearForm& l : positive_forms()) {
        MultiPoly quot = P.exact_divide(l.poly());
        mirror_sum += l.norm2() * quot * quot;
    }
    CHECK(grad2 == mirror_sum);

    CHECK(ground_energy(q(1, 3), q(1)) == q(13, 2));
    CHECK(ground_energy(q(0), q(2)) == q(3));
}

TEST_CASE("derived metric matches the frozen table") {
    Metric m = derive_metric();
    CHECK(m.a11.str() == "(4)*t1");
    CHECK(m.a12.str() == "(12)*t2");
    CHECK(m.a13.str() == "(20)*t3");
    CHECK(m.a22.str() == "(-48/5)*t1^2*t2 + (45/2)*t3");
    CHECK(m.a23.str() == "(-24)*t1^2*t3 + (16/15)*t1*t2^2");
    CHECK(m.a33.str() == "(-64/3)*t1*t2*t3 + (128/45)*t2^3");
    CHECK_NOTHROW(compare_metric());
}

TEST_CASE("derived drift matches the frozen table") {
    Drift d = derive_drift();
    CHECK(d.b1.str() == "(-4)*t1*om + (60)*nu + (6)");
    CHECK(d.b2.str() == "(-48)*t1^2*nu + (-48/5)*t1^2 + (-12)*t2*om");
    CHECK(d.b3.str() == "(-64/3)*t1*t2*nu + (-128/15)*t1*t2 + (-20)*t3*om");
    CHECK_NOTHROW(compare_drift());
}

TEST_CASE("drift samples interpolate the formal table") {
    Drift d = derive_drift();
    // degree-one dependence on nu and om: three samples pin each entry
    std::vector<std::pair<Golden, Golden>> samples = {
        {q(1, 3), q(1)}, {q(0), q(2)}, {q(5, 7), q(3, 2)}};
    for (const auto& [nu, om] : samples) {
        DiffOperator h = build_h(nu, om);
        CHECK(h.coefficient({1, 0, 0}) == d.b1.eval_params(T, {nu, om}));
        CHECK(h.coefficient({0, 1, 0}) == d.b2.eval_params(T, {nu, om}));
        CHECK(h.coefficient({0, 0, 1}) == d.b3.eval_params(T, {nu, om}));
    }
}

TEST_CASE("gauge-rotated operator has no free term and kills constants") {
    DiffOperator h = build_h(q(1, 3), q(1));
    CHECK(h.coefficient({0, 0, 0}).is_zero());
    CHECK(h.apply(MultiPoly::constant(T, q(1))).is_zero());
    CHECK(h.apply(MultiPoly::variable(T, 0)).str() == "(-4)*t1 + (26)");
}

TEST_CASE("first excited eigenfunction") {
    {
        DiffOperator h = build_h(q(1, 3), q(1));
        MultiPoly phi = MultiPoly::variable(T, 0) - MultiPoly::constant(T, q(13, 2));
        CHECK(h.apply(phi) == phi * q(-4));
    }
    {
        DiffOperator h = build_h(q(1, 2), q(2));
        MultiPoly phi = MultiPoly::variable(T, 0) - MultiPoly::constant(T, q(9, 2));
        CHECK(h.apply(phi) == phi * q(-8));
    }
}

TEST_CASE("formal operator specializes to the numeric one") {
    DiffOperator hf = build_h_formal();
    CHECK(hf.coefficient({0, 0, 0}).is_zero());
    CHECK(hf.apply(MultiPoly::variable(TF, 0)) ==
          parse_poly(TF, "(-4)*t1*om + (60)*nu + (6)"));
    std::vector<std::pair<Golden, Golden>> samples = {{q(1, 3), q(1)}, {q(2, 7), q(3)}};
    for (const auto& [nu, om] : samples) {
        DiffOperator hn = build_h(nu, om);
        for (const auto& [beta, coef] : hf.terms())
            CHECK(coef.eval_params(T, {nu, om}) == hn.coefficient(beta));
        CHECK(hf.terms().size() == hn.terms().size());
    }
}

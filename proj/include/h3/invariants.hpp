#pragma once

#include <h3/coxeter.hpp>

namespace h3 {

// the three basic invariants of degrees 2, 6, 10, as explicit x-polynomials
struct TauBasis {
    MultiPoly tau1, tau2, tau3;

    static const TauBasis& instance();
    std::vector<MultiPoly> list() const { return {tau1, tau2, tau3}; }
};

// R(t1,t2,t3) composed with the basis: tau-space polynomial into x-space
MultiPoly compose_tau(const MultiPoly& taupoly);

// inverse rewriting: invariant x-polynomial as a polynomial in t1,t2,t3,
// found by an exact linear solve over tau-monomials; NotInImage if Q is
// not in the invariant ring (wrong parity, not invariant, bad transcription)
MultiPoly decompose_in_tau(const MultiPoly& Q);

// how the degree-(2,6,10) orbit averages over Omega(w1) line up with the basis.
// Normalized convention: with ta_hat = s_a * t_a,
//   tau1 = t2_hat, tau2 = t6_hat + A t2_hat^3,
//   tau3 = t10_hat + B t2_hat^2 t6_hat + C t2_hat^5.
// Raw convention: the same mixing applied to the bare averages,
//   t6 + A_raw t2^3 and t10 + B_raw t2^2 t6 + C_raw t2^5 proportional to tau2, tau3.
struct OrbitRelation {
    Golden s2, s6, s10;
    Golden A, B, C;
    Golden A_raw, B_raw, C_raw;
};
OrbitRelation relate_orbit_invariants(const std::vector<Vec3>& orb);

MultiPoly jacobian();        // det(d tau_i / d x_k), homogeneous of degree 15
MultiPoly mirror_product();  // product of the 15 mirror forms
MultiPoly boundary_poly();   // the degree-30 boundary surface in tau-space

// J = mirror_factor * (mirror product); decompose(J^2) = boundary_factor * boundary
struct BoundaryReport {
    Golden mirror_factor;
    Golden boundary_factor;
};
BoundaryReport boundary_check();  // ProportionalityFailure on any mismatch

// number of tau-monomials with p1 + 2 p2 + 3 p3 <= n (minimal flag dimension)
std::size_t flag_dim_123(unsigned n);

}  // namespace h3

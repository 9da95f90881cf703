#pragma once

#include <h3/diffop.hpp>
#include <h3/invariants.hpp>

namespace h3 {

// product of the 15 mirror forms: the polynomial part of the ground state
MultiPoly prefactor();

// certifies the ground state exactly: the prefactor P satisfies
//   (i)  Delta P = 0
//   (ii) |grad P|^2 = sum over mirror forms l of |l|^2 (P / l)^2
//   (iii) x . grad P = 15 P
// which together pin the lowest eigenvalue; IdentityFailure names the culprit
void ground_state_identities();

// lowest eigenvalue (3/2) om (1 + 10 nu)
Golden ground_energy(const Golden& nu, const Golden& om);

// symmetric coefficient matrix of the second-order part, entries over tau3
struct Metric {
    MultiPoly a11, a12, a13, a22, a23, a33;
};
Metric derive_metric();     // A_ij = grad tau_i . grad tau_j rewritten in tau
Metric tabulated_metric();  // frozen table
void compare_metric();      // TableMismatch naming the entry

// first-order coefficients, kept formal in nu and om (over tau3_nuom)
struct Drift {
    MultiPoly b1, b2, b3;
};
Drift derive_drift();     // B_i = Lap tau_i + 2 nu (grad P . grad tau_i)/P - 2 om d_i tau_i
Drift tabulated_drift();  // frozen table
void compare_drift();     // TableMismatch naming the entry

// h = sum_ij A_ij d_i d_j + sum_i B_i d_i, no zeroth-order term
DiffOperator build_h_formal();                             // over tau3_nuom
DiffOperator build_h(const Golden& nu, const Golden& om);  // over tau3

}  // namespace h3

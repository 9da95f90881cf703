#pragma once

#include <h3/diffop.hpp>

namespace h3 {

// the commuting second-order operator: F22 F23 F33 over tau3, G2 G3 formal in
// nu; everything in the first row/column vanishes, so t1 rides along as a
// parameter
DiffOperator build_f_formal();             // over tau3_nuom
DiffOperator build_f(const Golden& nu);    // over tau3

// exact operator commutation; NonZeroCommutator shows the surviving terms
void verify_commutation(const DiffOperator& h, const DiffOperator& f);

// tabulated closed form for the partner eigenvalue, rotated convention
// (lowest = 0): 2(3k2+5k3)^2 - 30 k2 k3 + (1+30nu)(3k2+5k3)
Golden gamma_value(long k2, long k3, const Golden& nu);

// the cross-term-free variant forced by radial separability; with
// s = 3k2+5k3 this is 2s^2 + (1+30nu)s, and it is what the operator's
// spectrum actually realizes (the two forms agree whenever k2 k3 = 0)
Golden gamma_value_separable(long k2, long k3, const Golden& nu);

// additive offset of the un-rotated operator: (15/2) nu (1+15nu)
Golden gamma_offset(const Golden& nu);

struct LabeledEigenfunction {
    unsigned n, i;   // phi_{n,i}
    MultiPoly phi;   // over tau3
    Golden eps;      // h phi = -2 eps phi
    Golden gamma;    // f phi = gamma phi
};
// the explicit closed-form eigenfunctions through level three
std::vector<LabeledEigenfunction> reference_eigenfunctions(const Golden& nu,
                                                           const Golden& om);

// checks every tabulated eigenfunction against the computed joint basis,
// up to scalar normalization; MismatchAtLabel names the offender
void compare_reference(const Golden& nu, const Golden& om);

// full labeling of the joint spectrum on the (1,3,5) flag at level n.
// Each eigenfunction is assigned the (k2,k3) whose separable value matches;
// four closed-form conventions (tabulated / separable, each with and
// without the gamma_offset) are scored against the computed spectrum, and
// every state the tabulated form misses is itemized. The caller decides,
// nothing is silently reconciled.
struct GammaLabeling {
    struct Row {
        Golden eps, gamma;
        long k2, k3;      // -1,-1 when no label fits
        std::size_t fits; // candidate labels matched by the separable form
    };
    std::vector<Row> rows;
    bool tabulated_rotated;   // gamma_value reproduces every eigenvalue
    bool tabulated_offset;    // gamma_value + gamma_offset does
    bool separable_rotated;   // gamma_value_separable does, uniquely per row
    bool separable_offset;    // gamma_value_separable + gamma_offset does
    bool bijective;           // labels exhaust the lattice level by level
    std::vector<std::string> mismatches;  // states where the tabulated form
                                          // disagrees with the spectrum
};
GammaLabeling label_spectrum(const Golden& nu, const Golden& om, unsigned n);

}  // namespace h3

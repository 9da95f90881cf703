#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace h3 {

// Failure taxonomy shared across the library.  Every throwing operation is
// exact-or-error: there is no silent fallback anywhere.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct NonDivisible : Error {
    explicit NonDivisible(const std::string& what) : Error("not divisible: " + what) {}
};
struct NotInImage : Error {
    explicit NotInImage(const std::string& what) : Error("not in image: " + what) {}
};
struct NotInvariant : Error {
    explicit NotInvariant(const std::string& what) : Error("not invariant: " + what) {}
};
struct StructuralMismatch : Error {
    explicit StructuralMismatch(const std::string& what) : Error("structural mismatch: " + what) {}
};
struct UnsplitDegeneracy : Error {
    explicit UnsplitDegeneracy(const std::string& what) : Error("unsplit degeneracy: " + what) {}
};
struct SpaceMismatch : Error {
    explicit SpaceMismatch(const std::string& what) : Error("variable space mismatch: " + what) {}
};
struct ClosureOverflow : Error {
    explicit ClosureOverflow(const std::string& what) : Error("closure overflow: " + what) {}
};
struct TableMismatch : Error {
    explicit TableMismatch(const std::string& what) : Error("table mismatch: " + what) {}
};
struct InconsistentBasis : Error {
    explicit InconsistentBasis(const std::string& what) : Error("inconsistent basis: " + what) {}
};
struct ProportionalityFailure : Error {
    explicit ProportionalityFailure(const std::string& what)
        : Error("proportionality failure: " + what) {}
};
struct IdentityFailure : Error {
    explicit IdentityFailure(const std::string& what) : Error("identity failure: " + what) {}
};
struct NonZeroCommutator : Error {
    explicit NonZeroCommutator(const std::string& what)
        : Error("nonzero commutator: " + what) {}
};
struct MismatchAtLabel : Error {
    explicit MismatchAtLabel(const std::string& what) : Error("mismatch at label: " + what) {}
};
struct DecompositionFailure : Error {
    explicit DecompositionFailure(const std::string& what)
        : Error("decomposition failure: " + what) {}
};
struct SpectrumMismatch : Error {
    explicit SpectrumMismatch(const std::string& what) : Error("spectrum mismatch: " + what) {}
};
struct TransferFailure : Error {
    explicit TransferFailure(const std::string& what) : Error("transfer failure: " + what) {}
};
struct NonZeroResidual : Error {
    explicit NonZeroResidual(const std::string& what) : Error("nonzero residual: " + what) {}
};
struct GaugeMismatch : Error {
    explicit GaugeMismatch(const std::string& what) : Error("gauge mismatch: " + what) {}
};
struct PreservationFailure : Error {
    explicit PreservationFailure(const std::string& what)
        : Error("preservation failure: " + what) {}
};
struct SymmetricFunctionMismatch : Error {
    explicit SymmetricFunctionMismatch(const std::string& what)
        : Error("symmetric function mismatch: " + what) {}
};
struct ClassificationFailure : Error {
    explicit ClassificationFailure(const std::string& what)
        : Error("classification failure: " + what) {}
};
struct NonAbelian : Error {
    explicit NonAbelian(const std::string& what) : Error("non-abelian pair: " + what) {}
};
struct MembershipFailure : Error {
    explicit MembershipFailure(const std::string& what)
        : Error("membership failure: " + what) {}
};
struct DecompositionMismatch : Error {
    explicit DecompositionMismatch(const std::string& what)
        : Error("decomposition mismatch: " + what) {}
};

using Int = mpz_class;
using Rational = mpq_class;  // invariant: canonical (reduced, denominator > 0)

Rational rational(long num, long den = 1);
Rational rational(const Int& num, const Int& den);
Rational parse_rational(const std::string& s);  // "p" or "p/q", optional sign
std::string str(const Rational& r);

bool is_integer(const Rational& r);
long to_long(const Rational& r);  // throws Error unless an integer fitting in long

Int binomial(unsigned n, unsigned k);

}  // namespace h3

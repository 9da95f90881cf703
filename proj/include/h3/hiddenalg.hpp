#pragma once

#include <h3/diffop.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace h3 {

// The generating operators of the infinite-dimensional algebra carried by
// the (1,2,3) flag: 21 lowering and Cartan operators that preserve every
// level, 8 raising operators tied to one level through the diagonal
// operator J0 = t1 d1 + 2 t2 d2 + 3 t3 d3 - n, and J0 itself, 30 in all.
struct GeneratorCatalog {
    long n;
    std::vector<std::pair<std::string, DiffOperator>> first_class;   // 21 T's
    std::vector<std::pair<std::string, DiffOperator>> second_class;  // 8 J+'s
    DiffOperator j0;

    const DiffOperator& get(const std::string& name) const;  // Error if unknown
};
GeneratorCatalog build_catalog(long n);

// the ten Abelian families, their conjugation pairing, and the
// non-commutative core B; names refer into a GeneratorCatalog,
// frak twins carry an "f" suffix
struct SubalgebraTable {
    std::map<std::string, std::vector<std::string>> sets;
    std::vector<std::pair<std::string, std::string>> conjugation;
};
SubalgebraTable subalgebra_table();

// membership of an operator in the exact linear span of named generators
bool span_contains(const GeneratorCatalog& cat, const std::vector<std::string>& names,
                   const DiffOperator& target);

struct FlagReport {
    // second-class name -> (level != n where it escapes, witness monomial)
    std::map<std::string, std::pair<unsigned, std::string>> escapes;
    unsigned preserved_images;  // basis images checked across all levels
};
// first-class generators must keep every sampled level, second-class ones
// must keep their own level and demonstrably leave some other sampled one
FlagReport flag_behavior_check(const GeneratorCatalog& cat,
                               const std::vector<unsigned>& levels);

struct AbelianReport {
    unsigned pairs_checked;
};
AbelianReport abelian_checks(const GeneratorCatalog& cat, const SubalgebraTable& table);

struct StructureReport {
    unsigned zero_pairs;         // cross-family commutators vanishing identically
    unsigned span_members;       // commutators landing in a single family span
    unsigned polynomial_members; // commutators landing in P_k of a family
    bool core_closes;            // B brackets stay inside span B
    bool core_gl2_structure;     // explicit gl(2) + two commuting center lines
};
StructureReport structure_checks(const GeneratorCatalog& cat, const SubalgebraTable& table);

// reassembles the hamiltonian from flag-preserving generators and verifies
// the combination against the gauge construction; returns the assembled
// operator, throws DecompositionMismatch with the residual otherwise
DiffOperator h_decomposition_check(const Golden& nu, const Golden& om);

}  // namespace h3

// Small tour of the library API: decompose Sym^2 x Sym^2 over the monomial
// matrix group, restrict a GL irreducible, and count tensor-power walks.

#include <iostream>

#include "wreath/gl_restrict.hpp"
#include "wreath/io.hpp"
#include "wreath/labels.hpp"
#include "wreath/sym_products.hpp"

int main() {
    using namespace wreath;
    const int n = 4;

    std::cout << "Sym^2 x Sym^2 of C^" << n << " as stable permutation modules:\n";
    for (const auto& [seq, mult] : decompose_sym_product_to_perm({2, 2}, n))
        std::cout << "  " << perm_text(seq) << " x" << mult.str()
                  << "   (dim " << WeightedPermLabel::from_sequence(seq, n).dimension().str()
                  << ")\n";

    std::cout << "\n...and as irreducibles:\n";
    for (const auto& [seq, mult] : decompose_sym_product_to_irreps({2, 2}, n))
        std::cout << "  " << irrep_text(seq) << " x" << mult.str() << "   (dim "
                  << seq.dimension(n).str() << ")\n";

    std::cout << "\nW[2,2] restricted from GL_" << n << ":\n";
    for (const auto& [seq, mult] : restrict_gl_irrep(Partition{2, 2}, n))
        std::cout << "  " << irrep_text(seq) << " x" << mult.str() << "\n";

    const PartitionSequence target{Partition{1}, Partition{1}};
    std::cout << "\nmultiplicity of " << irrep_text(target) << " in V^(x3), n=3: "
              << tensor_power_multiplicity(target, 3, 3).str() << "\n";
    return 0;
}

// Prints the octonion basis table and the canonical non-associativity
// witness.

#include <octoloop/octonion.hpp>
#include <octoloop/table_document.hpp>

#include <iostream>

int main() {
    using namespace octoloop;
    std::cout << to_text(make_table_document(8)) << "\n";

    const Octonion L = Octonion::unit(4);
    const Octonion j = Octonion::unit(2);
    const Octonion k = Octonion::unit(3);
    std::cout << "(L*j)*k = " << (L * j) * k << "\n";
    std::cout << "L*(j*k) = " << L * (j * k) << "\n";
    std::cout << "associator(L, j, k) = " << associator(L, j, k) << "\n";
    return 0;
}

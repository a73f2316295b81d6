#include <affverma/singular.hpp>

#include <iostream>

int main() {
    using namespace affverma;
    verma::Module m(LieAlgebra::build(AlgebraType::B, 4), make_rational(-5, 2));
    const bool ok = singular::check_singular(m, singular::build_vB(m), "v_B").pass;
    std::cout << (ok ? "v_B singular\n" : "v_B not singular\n");
    return ok ? 0 : 1;
}

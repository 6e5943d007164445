// Compares the vertex function of Gr(2,4) at omega=1/2 with the p-adic limit of
// the T_s product, coefficient by coefficient, mod 5^2.

#include <iostream>

#include "pvx/pvx.hpp"

int main() {
    const pvx::OmegaParam omega(1, 2);
    const long dmax = 3;
    const auto exact = pvx::vertex_residue(2, 4, omega, dmax);
    const auto reduced = pvx::reduce_vertex(exact, 5, 2);
    const auto limit = pvx::vertex_padic_limit(2, 4, omega, 5, 2, dmax);

    bool ok = true;
    for (long d = 0; d <= dmax; ++d) {
        const auto i = static_cast<std::size_t>(d);
        const bool same = reduced[i] == limit.coeffs[i];
        ok = ok && same;
        std::cout << "c_" << d << " = " << exact.coeffs[i].get_str() << "  mod 25: " << reduced[i].get_str() << "  limit: " << limit.coeffs[i].get_str()
                  << (same ? "" : "  MISMATCH") << "\n";
    }
    return ok ? 0 : 1;
}

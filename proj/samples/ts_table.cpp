// Prints T_1 .. T_3 for the Legendre-type family (k=1, n=2, omega=1/2) at a few
// primes, then checks the Dwork congruences between consecutive levels.

#include <cstdint>
#include <iostream>

#include "pvx/pvx.hpp"

int main() {
    const pvx::OmegaParam omega(1, 2);
    bool ok = true;
    for (std::uint64_t p : {3, 5, 7}) {
        const unsigned smax = p == 3 ? 3 : 2;
        const auto Ts = pvx::compute_Ts_family(1, 2, omega, p, smax);
        for (unsigned s = 1; s <= smax; ++s) std::cout << "p=" << p << " T_" << s << " = " << Ts[s].signed_poly.str() << "\n";
        for (unsigned s = 1; s < smax; ++s) {
            const auto rep = pvx::dwork_check(Ts, s);
            std::cout << "  Dwork level " << s << " mod " << rep.modulus.get_str() << ": " << (rep.pass ? "pass" : "fail") << "\n";
            ok = ok && rep.pass;
        }
    }
    return ok ? 0 : 1;
}

// Exact dense-state validation of the protocol's quantum subroutines at tiny
// dimension: magic-state gate teleportation for one s=5 qudit (1024
// amplitudes for the two-qudit system), CCZ teleportation on 3+3 qubits, and
// the 8-term twirl that diagonalizes densities in the Z^b|CCZ> basis. Plain
// double-precision complex arithmetic with explicit tolerances.
#pragma once

#include <cstdint>

namespace agd {

// Max over all 32 measurement outcomes (and 100 random input states) of
// ||output - U|psi>|| after global-phase alignment; expected < 1e-10.
double teleport_u_check(std::uint64_t seed);

// Same for the 3-qubit CCZ teleportation over all 8 outcomes.
double teleport_ccz_check(std::uint64_t seed);

// Max |off-diagonal| of the twirled density in the {Z^b|CCZ>} basis over 100
// random densities; expected < 1e-12.
double twirl_check(std::uint64_t seed);

}  // namespace agd

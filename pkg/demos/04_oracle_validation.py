"""
Checking the Pekeris levels against exact numerics
==================================================

A Numerov shooting solver integrates the radial equation with the true
1/r^2 barrier.  At l = 0 both routes must agree exactly; for l > 0 the
difference measures the quality of the Pekeris expansion.
"""

from rotmorse import CO, LIH, energy_level, solve_level
from rotmorse.spectrum import morse_closed_form

###############################################################################
# l = 0: the oracle reproduces the textbook Morse levels.
for n in (0, 5, 10):
    res = solve_level(CO, n, 0)
    print(f"CO n={n}: oracle {res.energy:.8f}  closed form {morse_closed_form(CO, n):.8f}")

###############################################################################
# l > 0: the analytic levels sit slightly above the exact ones, and the gap
# grows with n and l.  LiH, with its light reduced mass, shows it most.
print("\n mol  n   l     analytic      oracle       delta")
for p in (CO, LIH):
    for n in (0, 5, 7):
        for l in (0, 5, 10):
            res = solve_level(p, n, l)
            e = energy_level(p, n, l).energy
            print(f"{p.name:>4} {n:2d} {l:3d} {e:12.6f} {res.energy:12.6f} {e - res.energy:+.2e}")

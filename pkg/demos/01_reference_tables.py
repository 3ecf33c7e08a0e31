"""
Ro-vibrational levels of CO and LiH
===================================

Energies of the rotating Morse oscillator for a grid of vibrational (n)
and rotational (l) quantum numbers, with the centrifugal barrier replaced by
its Pekeris expansion.
"""

from rotmorse import CO, LIH, energy_level, max_bound_n

###############################################################################
# The two molecules ship as ready-made parameter sets (D in eV, a in 1/A,
# r0 in A, mu in amu).
for p in (CO, LIH):
    print(f"{p.name}: D = {p.D:.4f} eV, a = {p.a} 1/A, r0 = {p.r0} A, mu = {p.mu} amu")

###############################################################################
# Energy grid, n outer and l inner.
for p in (CO, LIH):
    print(f"\n{p.name}")
    print(" n   l    E (eV)")
    for n in (0, 5, 7):
        for l in (0, 5, 10):
            print(f"{n:2d} {l:3d} {energy_level(p, n, l).energy:10.4f}")

###############################################################################
# How many vibrational levels survive as l grows.  The bracket
# eps2 / (2 sqrt(eps3)) - (n + 1/2) must stay positive.
for p in (CO, LIH):
    print(p.name, [max_bound_n(p, l) for l in (0, 10, 20, 40)])

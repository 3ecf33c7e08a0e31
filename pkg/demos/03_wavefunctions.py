"""
Radial wavefunctions
====================

Normalized R_nl(r) built from associated Laguerre polynomials, and the
closed-form normalization constant compared with quadrature.
"""

import math

import numpy as np
from scipy.integrate import simpson

from rotmorse import LIH, radial_wavefunction
from rotmorse.spectrum import count_nodes, log_normalization_exact, log_normalization_closed_form

r = np.linspace(0.5, 6.0, 20001)

###############################################################################
# Norm and node count of a few LiH states.
for n, l in [(0, 0), (1, 5), (3, 10), (7, 10)]:
    wf = radial_wavefunction(LIH, n, l)
    R = wf(r)
    print(f"n={n} l={l}: E={wf.level.energy:.5f} eV  norm={simpson(R**2, x=r):.8f}  nodes={count_nodes(R)}")

###############################################################################
# The quadrature normalization agrees with the value implied by Laguerre
# orthogonality; the alternative closed form with a (1+n+eps1)^2 factor does
# not, by an amount that grows with n.
for n in (0, 3, 7):
    wf = radial_wavefunction(LIH, n, 5)
    exact = math.exp(log_normalization_exact(LIH, n, 5) - wf.log_norm)
    alt = math.exp(log_normalization_closed_form(LIH, n, 5) - wf.log_norm)
    print(f"n={n}: A_orthogonality/A_quad = {exact:.10f}   A_closed_form/A_quad = {alt:.4f}")

###############################################################################
# A coarse text plot of the n = 3 state.
wf = radial_wavefunction(LIH, 3, 0)
rr = np.linspace(1.0, 3.0, 41)
vals = wf(rr)
scale = 30 / np.abs(vals).max()
for x, v in zip(rr, vals):
    bar = int(round(v * scale))
    print(f"{x:5.2f} " + (" " * 30 + "|" + "#" * bar if bar >= 0 else " " * (30 + bar) + "#" * -bar + "|"))

"""
Nikiforov-Uvarov branches
=========================

The NU reduction turns the radial equation into sigma y'' + tau y' + lambda y = 0.
Here we look at the four candidate pi(s) polynomials of the Morse problem and
see which one survives.
"""

import math

from rotmorse import CO, NuProblem, Poly2
from rotmorse.nu import all_branches, quantization, weight_function_exponents
from rotmorse.spectrum import dimensionless_params, energy_level

###############################################################################
# A small hand-sized instance first: eps1 = 1, eps2 = 5, eps3 = 4.
problem = NuProblem(sigma=Poly2(0, 1), sigma_tilde=Poly2(-1, 5, -4), tau_tilde=Poly2(1))
for b in all_branches(problem):
    print(
        f"k={b.k:4.1f} sign={b.sign:+d}  pi={b.pi_poly.c0:+.1f}{b.pi_poly.c1:+.1f}s  "
        f"tau'={b.tau.c1:+.1f}  regular={b.regular}  admissible={b.admissible}"
    )

###############################################################################
# Two branches have a decreasing tau, but only one keeps
# phi = exp(int pi/sigma) finite at s = 0.

###############################################################################
# The same machinery on a real level: CO with n = 3, l = 8.
level = energy_level(CO, 3, 8)
dp = dimensionless_params(CO, 8)
prob = dp.problem(level.eps1)
(branch,) = [b for b in all_branches(prob) if b.admissible]
print("lambda from k + pi'       :", branch.lam)
print("lambda_n = 2 n sqrt(eps3) :", quantization(branch, prob, 3), 2 * 3 * math.sqrt(dp.eps3))

###############################################################################
# The weight function follows from (sigma rho)' = tau rho.  Its power of s,
# 2 eps1, is the order of the Laguerre polynomial in the wavefunction.
w = weight_function_exponents(branch, prob)
print(f"rho(s) = s^{w.power:.4f} exp({w.rate:.4f} s),  2*eps1 = {2 * level.eps1:.4f}")

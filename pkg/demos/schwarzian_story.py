"""The noncommutative Schwarzian, three ways.

1. as the third-order coefficient of a cross-ratio expansion;
2. as the gauge-invariant second coefficient of a left ODE;
3. as the right-hand side of the Schwarzian equation for ratios of
   solutions.
"""

import math

from ncross import QUATERNION, Seed, sample
from ncross.jets import Jet, cos_jet, tan_jet
from ncross.schwarzian import (expansion_check, gauge_theorem_check,
                               nc_schwarzian, propagate_left,
                               schwarzian_equation_check)
from ncross.scalars import COMPLEX

# --- 1: the expansion ---------------------------------------------------

z = tan_jet(COMPLEX)
print("Sch(tan) =", nc_schwarzian(z), " (classically 2)")

gaps = []
for k in range(3, 8):
    eps = 2.0 ** -k
    gaps.append(expansion_check(z, 0, eps, 2 * eps, 3 * eps).residual)
slopes = [math.log2(a / b) for a, b in zip(gaps, gaps[1:])]
print("expansion gap decay slopes:", ["%.3f" % s for s in slopes],
      " (third order)")

# --- 2: the gauge picture ----------------------------------------------


def qjet(tag, order=4):
    return Jet([sample(QUATERNION, Seed(tag, k)) for k in range(order + 1)])


a, b = qjet(1), qjet(2)
f1 = propagate_left(a, b, sample(QUATERNION, Seed(3, 0)),
                    sample(QUATERNION, Seed(3, 1)), 6)
f2 = propagate_left(a, b, sample(QUATERNION, Seed(3, 2)),
                    sample(QUATERNION, Seed(3, 3)), 6)
rep = gauge_theorem_check(f1, f2, a, b)
print("gauged first coefficient residual:", rep.a_tilde_residual)
print("which reading of b~ wins:", rep.winner,
      " (theta' - theta^2/2, not theta' - theta/2)")

# --- 3: the equation ----------------------------------------------------

eq = schwarzian_equation_check(cos_jet(COMPLEX, 6), COMPLEX.zero, COMPLEX.one)
print("h = tan satisfies the Schwarzian equation, residual:", eq.residual)
print("NCSch(h) =", eq.ncsch_value, " F =", eq.F)

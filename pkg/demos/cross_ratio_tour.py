"""A quick tour of noncommutative cross-ratios.

Run as a script; every block prints what it checks and the residual it
gets.  Start here if you want to see the library used end to end before
reading the API.
"""

import numpy as np

from ncross import (QUATERNION, Seed, Vec2, conjugate_by, cross_ratio,
                    cross_ratio_bar, sample, similar)
from ncross.crossratio import PolarizationQuad, dv

rng_tag = 2024


def qvec(counter):
    return Vec2(sample(QUATERNION, Seed(rng_tag, 2 * counter)),
                sample(QUATERNION, Seed(rng_tag, 2 * counter + 1)))


# --- four points on the quaternionic projective line --------------------

x, y, z, t = (qvec(k) for k in range(4))
k0 = cross_ratio(x, y, z, t)
print("kappa(x, y, z, t) =", k0)

# the cross-ratio is only defined up to conjugation; rescaling each
# vector on the right moves it inside its conjugacy class
lam = [sample(QUATERNION, Seed(7, k)) for k in range(4)]
scaled = [Vec2(v.x1 * m, v.x2 * m) for v, m in zip((x, y, z, t), lam)]
k1 = cross_ratio(*scaled)
print("after scaling, similar? ", similar(k0, k1))
witness = conjugate_by(k0, lam[2].inv())
print("conjugacy witness residual:", (k1 - witness).norm())

# swapping both argument pairs conjugates rather than fixes the value
kbar = cross_ratio_bar(x, y, z, t)
print("bar is an involution:", (cross_ratio_bar(*scaled) - k1).norm() < 1e-6
      or "value moved, class did not")

# --- the operator form --------------------------------------------------
# dv() consumes four pairwise differences and agrees with the vector
# cross-ratio whenever both are defined
a, b, c, d = (sample(QUATERNION, Seed(5, k)) for k in range(4))
quad = PolarizationQuad(a - c, a - d, b - c, b - d)
print("dv of an affine quadruple:", dv(quad))

print("done.")

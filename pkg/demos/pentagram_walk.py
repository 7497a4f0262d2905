"""Pentagramma mirificum, from Gauss's recurrence to quaternions.

The classical statement: five points on a line give five values y_i with
y_i y_{i+1} = 1 + y_{i+3}.  The noncommutative statement replaces the
y_i by cross-ratios of five vectors and inserts quasi-Pluecker
conjugators; the recurrence closes only with the double-swap
continuation of the sequence.
"""

from fractions import Fraction

from ncross import QUATERNION, Seed, Vec2, sample
from ncross.pentagram import (Pentad, classical_pentagram,
                              pentagram_relations_check)
from ncross.scalars import RationalScalar

# --- the classical picture, exactly ------------------------------------

points = [RationalScalar(Fraction(p)) for p in range(5)]
y, residuals = classical_pentagram(points)
print("p = 0..4  ->  y =", [str(v) for v in y])
print("recurrence residuals:", residuals)

# --- the quaternionic picture ------------------------------------------


def qvec(counter):
    return Vec2(sample(QUATERNION, Seed(11, 2 * counter)),
                sample(QUATERNION, Seed(11, 2 * counter + 1)))


pentad = Pentad(*(qvec(k) for k in range(5)))
report = pentagram_relations_check(pentad)
print("five relation residuals (double swap):",
      ["%.2e" % r for r in report.residuals])
print("same relations, single-swap bar:     ",
      ["%.2e" % r for r in report.printed_bar_residuals])
print("(the single swap is not the right continuation: relations 4 and 5 "
      "only close with the double swap)")

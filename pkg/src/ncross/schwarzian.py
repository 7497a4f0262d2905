"""Noncommutative Schwarzian derivative, second-order ODE gauge theory,
and the distorted-Ceva functional for a conformal factor on the plane.

Everything here works on truncated jets (module jets); derivatives are
exact jet shifts, so the only floating-point noise comes from ring
arithmetic — except infinitesimal_ceva, which integrates a real scalar
field along segments with scipy quadrature.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, NamedTuple

import numpy as np
from scipy.integrate import quad

from .errors import (DegeneratePair, NonPositiveKappa, NotInvertible,
                     NumericalBreakdown, PointsTooClose, QuadratureFailure,
                     UndefinedExpression)
from .jets import DEFAULT_ORDER, Jet
from .plucker import qp_right
from .scalars import DEFAULT_ATOL, Ring, Scalar


def nc_schwarzian(z: Jet) -> Scalar:
    """S(z) = (z')^-1 z''' - (3/2)((z')^-1 z'')^2 at the base point."""
    if z.order < 3:
        raise ValueError("need a jet of order >= 3")
    w = z[1].inv()
    u = w * z[2]
    return w * z[3] - Fraction(3, 2) * (u * u)


def ncsch(h: Jet) -> Scalar:
    """(h')^-1 h''' - (3/2)(h')^-1 h''(h')^-1 h''.  Identical to
    nc_schwarzian; both displayed forms are kept."""
    if h.order < 3:
        raise ValueError("need a jet of order >= 3")
    w = h[1].inv()
    return w * h[3] - Fraction(3, 2) * (w * h[2] * w * h[2])


class ExpansionCheck(NamedTuple):
    lhs: Scalar
    rhs: Scalar
    residual: float


def expansion_check(z: Jet, t: float, t1: float, t2: float, t3: float,
                    min_gap: float = 1e-12) -> ExpansionCheck:
    """Compare the four-point cross-ratio of a curve with its second-order
    expansion.

    lhs = (z(t2)-z(t1))^-1 (z(t1)-z(t)) (z(t)-z(t3))^-1 (z(t3)-z(t2));
    rhs = [classical cross-ratio of the parameters] * (1 + (t2-t)(t3-t1) K)
    with kernel K = (1/6)(z')^-1 z''' - (1/4)((z')^-1 z'')^2.  The gap is
    O(eps^3) when the parameters scale like eps."""
    pts = (t, t1, t2, t3)
    for a in range(4):
        for b in range(a + 1, 4):
            if abs(pts[a] - pts[b]) < min_gap:
                raise PointsTooClose(f"parameters {a},{b} closer than {min_gap}")
    if z.order < 3:
        raise ValueError("need a jet of order >= 3")
    zv = [z.eval(s) for s in pts]
    lhs = ((zv[2] - zv[1]).inv() * (zv[1] - zv[0])
           * (zv[0] - zv[3]).inv() * (zv[3] - zv[2]))

    w = z[1].inv()
    u = w * z[2]
    kernel = Fraction(1, 6) * (w * z[3]) - Fraction(1, 4) * (u * u)
    pref = ((t1 - t) * (t3 - t2)) / ((t2 - t1) * (t - t3))
    one = z.ring.one
    rhs = z.ring.from_real(pref) * (one + ((t2 - t) * (t3 - t1)) * kernel)
    return ExpansionCheck(lhs, rhs, (lhs - rhs).norm())


# ---------------------------------------------------------------------------
# second-order ODEs with left coefficients: f'' + a f' + b f = 0


def propagate_left(a: Jet, b: Jet, f0: Scalar, f1: Scalar,
                   order: int = DEFAULT_ORDER) -> Jet:
    """Jet of the solution of f'' + a f' + b f = 0 (coefficients acting
    from the left) with f(0) = f0, f'(0) = f1."""
    c = [f0, f1]
    ring = f0.ring
    for n in range(order - 1):
        acc = ring.zero
        for k in range(n + 1):
            cnk = math.comb(n, k)
            acc = acc + cnk * (a[k] * c[n + 1 - k] + b[k] * c[n - k])
        c.append(-acc)
    return Jet(c, ring)


def propagate_right(r: Jet, f0: Scalar, f1: Scalar,
                    order: int = DEFAULT_ORDER) -> Jet:
    """Jet of the solution of f'' = f r (coefficient on the right)."""
    c = [f0, f1]
    ring = f0.ring
    for n in range(order - 1):
        acc = ring.zero
        for k in range(n + 1):
            acc = acc + math.comb(n, k) * (c[k] * r[n - k])
        c.append(acc)
    return Jet(c, ring)


def recover_ode_coeffs(f1: Jet, f2: Jet, tol: float = DEFAULT_ATOL) -> tuple:
    """From two solutions of f'' + a f' + b f = 0, recover (a, b) as minus
    the right quasi-Pluecker coordinates of the 3 x 2 Wronskian-style
    matrix with rows (f1, f2), (f1', f2'), (f1'', f2'')."""
    rows = [(f1[0], f2[0]), (f1[1], f2[1]), (f1[2], f2[2])]
    a = -qp_right(rows, 2, 1, 0, tol)
    b = -qp_right(rows, 2, 0, 1, tol)
    scale = 1.0 + max(x.norm() for r in rows for x in r)
    for f in (f1, f2):
        res = (f[2] + a * f[1] + b * f[0]).norm()
        if res > 100.0 * tol * scale * (1.0 + a.norm() + b.norm()):
            raise DegeneratePair(
                f"recovered coefficients do not annihilate the pair "
                f"(residual {res:.3g}); solutions dependent?")
    return a, b


def gauge_transform_a(a: Jet, h: Jet) -> Jet:
    """Gauge action on the first coefficient: -2 h' h^-1 + h a h^-1."""
    k = min(h.order - 1, a.order)
    hk = h.truncate(k)
    hinv = hk.inv()
    return (-2.0) * (h.derivative().truncate(k) * hinv) + hk * a.truncate(k) * hinv


def propagate_gauge(a: Jet, order: int | None = None) -> Jet:
    """h with h' = (1/2) h a and h(0) = 1; this gauge kills the first
    coefficient of the ODE."""
    if order is None:
        order = a.order + 1
    ring = a.ring
    c = [ring.one]
    for n in range(order):
        acc = ring.zero
        for k in range(n + 1):
            acc = acc + math.comb(n, k) * (c[k] * a[n - k])
        c.append(Fraction(1, 2) * acc)
    return Jet(c, ring)


class GaugeReport(NamedTuple):
    a_tilde_residual: float       # how close the gauged first coefficient is to 0
    prop_residual: float          # | f1~' + (f1~/2) theta |
    b_direct: Scalar              # recovered from the gauged solution pair
    b_candidate_linear: Scalar    # (1/2) f1~ (theta' - theta/2) f1~^-1
    b_candidate_square: Scalar    # (1/2) f1~ (theta' - theta^2/2) f1~^-1
    winner: str                   # "linear" | "square" | "both" | "neither"


def gauge_theorem_check(f1: Jet, f2: Jet, a: Jet, b: Jet,
                        tol: float = DEFAULT_ATOL) -> GaugeReport:
    """Gauge away the first ODE coefficient and test the two readings of
    the transformed second coefficient against the recovery oracle.

    theta = phi'' (phi')^-1 with phi = f1^-1 f2.  The "square" candidate
    (1/2) f1~ (theta' - theta^2/2) f1~^-1 reduces to half the classical
    Schwarzian of phi in the commutative case; the "linear" one replaces
    theta^2 by theta."""
    h = propagate_gauge(a)
    k = min(h.order, f1.order)
    f1t = h.truncate(k) * f1.truncate(k)
    f2t = h.truncate(k) * f2.truncate(k)

    a_tilde = gauge_transform_a(a, h)
    scale = 1.0 + max(c.norm() for c in a.coeffs)
    a_res = max(c.norm() for c in a_tilde.coeffs[: max(1, a_tilde.order)]) / scale

    m = f1.order - 2
    phi = f1.inv() * f2
    pd0 = phi.derivative()[0]
    if f1.ring.name != "rational":
        # theta inverts phi'; past this conditioning the candidate gap is
        # pure rounding noise, so the draw is reported as a breakdown
        kappa = pd0.norm() * pd0.inv().norm()
        if kappa > 1e4:
            raise NumericalBreakdown(
                f"phi' conditioning {kappa:.3g} too large for theta")
    theta = phi.derivative().derivative().truncate(m) * \
        phi.derivative().truncate(m).inv()
    # transformed f1 satisfies f1~' = -(f1~/2) theta
    lhs = f1t.derivative().truncate(m - 1)
    rhs = Fraction(-1, 2) * (f1t.truncate(m - 1) * theta.truncate(m - 1))
    # forward error is relative to the size of the jets entering the
    # product; theta coefficients dominate on ill-conditioned draws
    prop_scale = 1.0 + max(max(v.norm() for v in rhs.coeffs),
                           max(v.norm() for v in theta.coeffs))
    prop_res = max((u - v).norm() for u, v in zip(lhs.coeffs, rhs.coeffs)) \
        / prop_scale

    _, b_direct = recover_ode_coeffs(f1t, f2t, tol)
    g = f1t[0]
    ginv = g.inv()
    th, thp = theta[0], theta[1]
    cand_lin = Fraction(1, 2) * (g * (thp - Fraction(1, 2) * th) * ginv)
    cand_sq = Fraction(1, 2) * (g * (thp - Fraction(1, 2) * (th * th)) * ginv)

    # a candidate wins through either an absolute match or a clear
    # separation from its rival (robust when rounding inflates both gaps)
    gap_lin = (cand_lin - b_direct).norm()
    gap_sq = (cand_sq - b_direct).norm()
    mtol = 1e-8 * (1.0 + b_direct.norm())
    lin_ok = gap_lin <= mtol or gap_lin <= 1e-6 * gap_sq
    sq_ok = gap_sq <= mtol or gap_sq <= 1e-6 * gap_lin
    winner = {(True, False): "linear", (False, True): "square",
              (True, True): "both", (False, False): "neither"}[(lin_ok, sq_ok)]
    return GaugeReport(a_res, prop_res, b_direct, cand_lin, cand_sq, winner)


class SchwarzianEquationReport(NamedTuple):
    residual: float      # | h''' - (3/2) h'' (h')^-1 h'' + 2 h' F |
    ncsch_value: Scalar
    F: Scalar


def schwarzian_equation_check(g: Jet, f0: Scalar, f1: Scalar,
                              tol: float = DEFAULT_ATOL) -> SchwarzianEquationReport:
    """Build h = f g^-1 from two solutions of the same right-coefficient
    equation u'' = u r (r = g^-1 g'') and verify the Schwarzian equation
    h''' - (3/2) h'' (h')^-1 h'' = -2 h' F with F = g'' g^-1."""
    if g.order < 3:
        raise ValueError("need a jet of order >= 3")
    r = g.inv().truncate(g.order - 2) * g.derivative().derivative()
    f = propagate_right(r, f0, f1, g.order)
    h = f * g.inv()
    F = g[2] * g[0].inv()
    try:
        core = h[3] - Fraction(3, 2) * (h[2] * h[1].inv() * h[2])
    except NotInvertible as e:
        raise UndefinedExpression(f"h' not invertible: {e}") from e
    rhs = (-2) * (h[1] * F)
    res = (core - rhs).norm() / (1.0 + max(core.norm(), rhs.norm()))
    return SchwarzianEquationReport(res, ncsch(h), F)


# ---------------------------------------------------------------------------
# infinitesimal Ceva for a conformal factor on the plane


class KappaField(NamedTuple):
    name: str
    value: Callable[[float, float], float]
    hessian: Callable[[float, float], np.ndarray]  # closed-form 2x2


def _gauss(x, y):
    return math.exp(-(x * x + y * y) / 2)


KAPPA_FIELDS = {
    "const1": KappaField(
        "const1", lambda x, y: 1.0,
        lambda x, y: np.zeros((2, 2))),
    "exp_y": KappaField(
        "exp_y", lambda x, y: math.exp(y),
        lambda x, y: np.array([[0.0, 0.0], [0.0, math.exp(y)]])),
    "gauss": KappaField(
        "gauss", _gauss,
        lambda x, y: _gauss(x, y) * np.array(
            [[x * x - 1.0, x * y], [x * y, y * y - 1.0]])),
    "poly": KappaField(
        "poly", lambda x, y: 1.0 + x * x + 2.0 * y * y,
        lambda x, y: np.array([[2.0, 0.0], [0.0, 4.0]])),
}


class VectorFieldPair(NamedTuple):
    xi: tuple
    eta: tuple
    kappa: KappaField


def kappa_field(name: str) -> KappaField:
    try:
        return KAPPA_FIELDS[name]
    except KeyError:
        raise KeyError(
            f"unknown kappa field {name!r}; have {sorted(KAPPA_FIELDS)}") from None


def _seg_length(field: KappaField, p: np.ndarray, q: np.ndarray) -> float:
    """Time-integral of kappa along the straight segment p -> q traversed
    at unit parameter speed."""

    def integrand(s):
        pt = p + s * (q - p)
        v = field.value(pt[0], pt[1])
        if v <= 0.0:
            raise NonPositiveKappa(f"kappa({pt[0]:.3g},{pt[1]:.3g}) = {v:.3g}")
        return v

    val, err = quad(integrand, 0.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=200)
    if err > 1e-9 * (1.0 + abs(val)):
        raise QuadratureFailure(f"estimated error {err:.3g}")
    return val


class CevaInfinitesimal(NamedTuple):
    c_minus_1: float
    s3: float


def infinitesimal_ceva(vf: VectorFieldPair, x, eps: float) -> CevaInfinitesimal:
    """Distorted Ceva product for the triangle spanned by two constant
    fields.

    Vertices A = x, B = x + 2 eps xi, C = x + 2 eps eta; K, L, M sit at
    the parameter midpoints of AB, BC, CA.  Each side piece's "length" is
    the time-integral of kappa along it; c_minus_1 is the Ceva product of
    the six pieces minus 1.  s3 is the closed-form second-order
    coefficient (5/6)(kappa''_eta_eta - kappa''_xi_xi)/kappa at x."""
    x = np.asarray(x, dtype=float)
    xi = np.asarray(vf.xi, dtype=float)
    eta = np.asarray(vf.eta, dtype=float)
    field = vf.kappa

    A = x
    B = x + 2 * eps * xi
    C = x + 2 * eps * eta
    K = x + eps * xi
    L = B + eps * (eta - xi)
    M = x + eps * eta

    ak = _seg_length(field, A, K)
    kb = _seg_length(field, K, B)
    bl = _seg_length(field, B, L)
    lc = _seg_length(field, L, C)
    cm = _seg_length(field, C, M)
    ma = _seg_length(field, M, A)
    c = (ak / kb) * (bl / lc) * (cm / ma)

    H = field.hessian(x[0], x[1])
    k0 = field.value(x[0], x[1])
    s3 = (5 / 6) * (float(eta @ H @ eta) - float(xi @ H @ xi)) / k0
    return CevaInfinitesimal(c - 1.0, s3)


def richardson_c_over_eps2(vf: VectorFieldPair, x, eps: float) -> float:
    """Richardson-extrapolated limit of (c-1)/eps^2 using eps and eps/2."""
    r1 = infinitesimal_ceva(vf, x, eps).c_minus_1 / eps ** 2
    r2 = infinitesimal_ceva(vf, x, eps / 2).c_minus_1 / (eps / 2) ** 2
    return 2.0 * r2 - r1

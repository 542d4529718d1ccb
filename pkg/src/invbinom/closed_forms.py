"""Cardano auxiliary root, explicit closed forms, hypergeometric
cross-check, and root-of-unity folding to general stride.

Everything here is driven by the auxiliary cubic root

    phi(x) = ((27 - 2x + 3*sqrt(81 - 12x)) / (2x)) ** (1/3).

Real arguments take the real, sign-preserving cube root (the known values
phi(1/2) = 2 + sqrt(3) and phi(-1/4) = -(5 + sqrt(21))/2 force that
choice); complex arguments take principal branches throughout. The branch
policy is validated numerically, by the radical-identity residual inside
``phi`` and by the imaginary-residue check after folding, rather than
trusted on formal grounds.

Closed forms exist for weights 0, 1, 2 at stride 1 (``s01``, ``s11``,
``s21``), and for weight 2 at any stride (``s2m_closed``). ``fold``
reduces S(n, m; x) to m stride-1 evaluations at rotated m-th roots of x.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ArgumentError, BranchFailure, ConvergenceError, DomainError
from .polylog import root_of_unity
from .quadrature import QuadratureSpec
from .series import (
    RADIUS_BASE,
    Evaluation,
    SeriesParams,
    binomial_exact,
    convergence_radius,
    sum_direct,
)

SQRT3 = math.sqrt(3.0)
REAL_BRANCH = "real-cube-root"
PRINCIPAL_BRANCH = "principal-complex"
FOLD_IMAG_TOL = 1e-9
_RESIDUAL_TOL = 1e-9
_EPS = 2.220446049250313e-16
_INNER_ROUTES = ("closed-form", "quad-polylog", "direct-sum")

# Below this the closed forms switch to exact leading series terms: the
# explicit expressions cancel to ~x/3 out of pieces of size x**(2/3), so
# their relative accuracy degrades like eps * |x|**(-1/3), and phi itself
# eventually overflows binary64.
_TINY_X = 1e-8


def _leading_terms(n: int, m: int, x: complex) -> Evaluation:
    """Three exact leading terms; for |x| < _TINY_X the remainder is ~|x|**4."""
    t1 = x / binomial_exact(3 * m, m)
    t2 = x * x / (2**n * binomial_exact(6 * m, 2 * m))
    t3 = x**3 / (3**n * binomial_exact(9 * m, 3 * m))
    err = 2.0 * abs(x) ** 4 / (4**n * binomial_exact(12 * m, 4 * m))
    return Evaluation(t1 + t2 + t3, err, "closed-form", 3)


@dataclass(frozen=True)
class CardanoRoot:
    """phi(x) together with the branch that produced it."""

    x: complex
    phi: complex
    branch: str


def _real_cbrt(v: float) -> float:
    return math.copysign(abs(v) ** (1.0 / 3.0), v)


def phi(x: complex) -> CardanoRoot:
    """Cardano root phi(x); real branch on the real axis, principal otherwise.

    On (0, 27/4] the value is real with phi >= 1 and phi(27/4) = 1; for
    real x < 0 it is real and negative. Raises DomainError at x = 0 (phi
    diverges there; callers own the x -> 0 limit of whatever they build
    from it) and BranchFailure when the radical identity
    2x*phi**3 + 2x - 27 - 3*sqrt(81 - 12x) = 0 fails on the branch taken.
    """
    xc = complex(x)
    if xc == 0:
        raise DomainError("phi(x) diverges as x -> 0; the series limit there is 0")
    if abs(xc) < 1e-306:
        raise DomainError("phi(x) exceeds the binary64 range for |x| < 1e-306")
    if xc.imag == 0.0 and xc.real <= RADIUS_BASE:
        xr = xc.real
        s = complex(math.sqrt(81.0 - 12.0 * xr))
        value = complex(_real_cbrt((27.0 - 2.0 * xr + 3.0 * s.real) / (2.0 * xr)))
        branch = REAL_BRANCH
    else:
        s = cmath.sqrt(81.0 - 12.0 * xc)
        value = ((27.0 - 2.0 * xc + 3.0 * s) / (2.0 * xc)) ** (1.0 / 3.0)
        branch = PRINCIPAL_BRANCH
    residual = abs(2.0 * xc * value**3 + 2.0 * xc - 27.0 - 3.0 * s)
    if residual > _RESIDUAL_TOL * (1.0 + abs(xc)):
        raise BranchFailure(f"radical identity residual {residual:.3e} at x = {xc}")
    return CardanoRoot(xc, value, branch)


def _atan_log_parts(p: complex, real_branch: bool) -> tuple[complex, complex]:
    """arctan(sqrt3 / (2 phi - 1)) and log((phi**3 + 1) / (phi + 1)**3).

    The arctan argument has a removable point at phi = 1/2; the one-sided
    limit pi/2 is substituted there.
    """
    if real_branch:
        pr = p.real
        den = 2.0 * pr - 1.0
        at = complex(math.pi / 2 if den == 0.0 else math.atan(SQRT3 / den))
        lg = complex(math.log((pr**3 + 1.0) / (pr + 1.0) ** 3))
    else:
        den = 2.0 * p - 1.0
        at = complex(math.pi / 2) if den == 0 else cmath.atan(SQRT3 / den)
        lg = cmath.log((p**3 + 1.0) / (p + 1.0) ** 3)
    return at, lg


def s21(x: complex) -> Evaluation:
    """Closed form of S(2, 1; x) on |x| <= 27/4:

        6*arctan(sqrt3/(2 phi - 1))**2 - log((phi**3+1)/(phi+1)**3)**2 / 2.

    x = 0 short-circuits to 0 (phi is undefined there, the series is not).
    """
    xc = complex(x)
    if xc == 0:
        return Evaluation(0j, 0.0, "closed-form", 1)
    if abs(xc) > RADIUS_BASE:
        raise DomainError(f"closed form needs |x| <= 27/4, got |x| = {abs(xc)!r}")
    if abs(xc) < _TINY_X:
        return _leading_terms(2, 1, xc)
    root = phi(xc)
    at, lg = _atan_log_parts(root.phi, root.branch == REAL_BRANCH)
    value = 6.0 * at * at - 0.5 * lg * lg
    err = 8.0 * _EPS * (6.0 * abs(at) ** 2 + 0.5 * abs(lg) ** 2) + _EPS
    return Evaluation(value, err, "closed-form", 1)


def s11(x: complex) -> Evaluation:
    """Closed form of S(1, 1; x) on |x| < 27/4 (strictly inside)."""
    xc = complex(x)
    if xc == 0:
        return Evaluation(0j, 0.0, "closed-form", 1)
    if abs(xc) >= RADIUS_BASE:
        raise DomainError(f"this closed form needs |x| < 27/4 strictly, got |x| = {abs(xc)!r}")
    if abs(xc) < _TINY_X:
        return _leading_terms(1, 1, xc)
    root = phi(xc)
    real_branch = root.branch == REAL_BRANCH
    at, lg = _atan_log_parts(root.phi, real_branch)
    if real_branch:
        p: complex = complex(root.phi.real)
        sq = complex(math.sqrt(27.0 - 4.0 * xc.real))
    else:
        p = root.phi
        sq = cmath.sqrt(27.0 - 4.0 * xc)
    t_at = at * 18.0 * p / (1.0 - p + p * p)
    t_lg = lg * 3.0 * SQRT3 * p * (1.0 - p) / (1.0 + p**3)
    value = (t_at - t_lg) / sq
    err = 8.0 * _EPS * (abs(t_at) + abs(t_lg)) / abs(sq) + _EPS
    return Evaluation(value, err, "closed-form", 1)


def s01(x: complex) -> Evaluation:
    """Closed form of S(0, 1; x) on |x| < 27/4 (strictly inside).

    Four pieces: an arctan group, a log group, and the rational tail
    108 phi**3 / ((27 - 4x) (1 + phi**3)**2).
    """
    xc = complex(x)
    if xc == 0:
        return Evaluation(0j, 0.0, "closed-form", 1)
    if abs(xc) >= RADIUS_BASE:
        raise DomainError(f"this closed form needs |x| < 27/4 strictly, got |x| = {abs(xc)!r}")
    if abs(xc) < _TINY_X:
        return _leading_terms(0, 1, xc)
    root = phi(xc)
    real_branch = root.branch == REAL_BRANCH
    at, lg = _atan_log_parts(root.phi, real_branch)
    if real_branch:
        p: complex = complex(root.phi.real)
        q = complex(27.0 - 4.0 * xc.real)
        q32 = complex(q.real * math.sqrt(q.real))
    else:
        p = root.phi
        q = 27.0 - 4.0 * xc
        q32 = q**1.5
    p3 = p**3
    one_p3 = 1.0 + p3
    quad = 1.0 - p + p * p
    coeff_at = 36.0 * p * xc / (q32 * quad) - 18.0 * SQRT3 * (1.0 - p * p) * p / (quad * quad * q)
    coeff_lg = 9.0 * p * (1.0 - 2.0 * p - 2.0 * p3 + p**4) / (one_p3 * one_p3 * q) - 6.0 * SQRT3 * (
        1.0 - p
    ) * p * xc / (q32 * one_p3)
    tail = 108.0 * p3 / (q * one_p3 * one_p3)
    value = coeff_at * at + coeff_lg * lg + tail
    err = 8.0 * _EPS * (abs(coeff_at * at) + abs(coeff_lg * lg) + abs(tail)) + _EPS
    return Evaluation(value, err, "closed-form", 1)


def pfq(
    numerator: Sequence[float],
    denominator: Sequence[float],
    z: complex,
    tol: float = 1e-16,
) -> complex:
    """Generalized hypergeometric series, standard k = 0 convention:

        sum_{k>=0} prod_i (a_i)_k / prod_j (b_j)_k * z**k / k!

    evaluated by the term-ratio recurrence. Needs p <= q + 1, and |z| < 1
    unless a numerator parameter is a non-positive integer (terminating).
    """
    value, _ = _pfq_terms(numerator, denominator, z, tol)
    return value


def _pfq_terms(
    numerator: Sequence[float],
    denominator: Sequence[float],
    z: complex,
    tol: float = 1e-16,
) -> tuple[complex, int]:
    a = [float(v) for v in numerator]
    b = [float(v) for v in denominator]
    if len(a) > len(b) + 1:
        raise ArgumentError(f"need p <= q + 1, got p = {len(a)}, q = {len(b)}")
    for bj in b:
        if bj <= 0.0 and bj.is_integer():
            raise ArgumentError(f"denominator parameter {bj} is a non-positive integer")
    if tol <= 0.0:
        raise ArgumentError("tol must be positive")
    zc = complex(z)
    if zc == 0:
        return complex(1.0), 1
    terminating = any(ai <= 0.0 and ai.is_integer() for ai in a)
    if abs(zc) >= 1.0 and not terminating:
        raise DomainError(
            f"the series needs |z| < 1 (or a terminating parameter), got |z| = {abs(zc)!r}"
        )
    term = complex(1.0)
    total = 0j
    comp = 0j
    small = 0
    for k in range(100_000):
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 2:
                return total, k + 1
        else:
            small = 0
        num = 1.0
        for ai in a:
            num *= ai + k
        if num == 0.0:
            return total, k + 1
        den = float(k + 1)
        for bj in b:
            den *= bj + k
        term *= zc * num / den
    raise ConvergenceError("hypergeometric series did not converge within 100000 terms")


def _principal_root(xc: complex, m: int) -> complex:
    """Principal m-th root, kept exactly real for positive real input."""
    if xc.imag == 0.0 and xc.real > 0.0:
        return complex(xc.real ** (1.0 / m))
    if m == 2:
        return cmath.sqrt(xc)
    return xc ** (1.0 / m)


def _discard_imag(total: complex, err: float, x: complex) -> tuple[complex, float]:
    """For real x the rotated terms pair up conjugate; enforce cancellation.

    The imaginary residue is checked against FOLD_IMAG_TOL, folded into the
    error estimate, and discarded.
    """
    resid = abs(total.imag)
    if resid > FOLD_IMAG_TOL * (1.0 + abs(total)):
        raise BranchFailure(
            f"imaginary residue {resid:.3e} after folding real x = {x.real!r}"
        )
    return complex(total.real, 0.0), err + resid


def fold(
    n: int,
    m: int,
    x: complex,
    inner: str = "closed-form",
    *,
    rel_tol: float = 1e-15,
    spec: QuadratureSpec | None = None,
) -> Evaluation:
    """S(n, m; x) as m**(n-1) * sum_{j=1..m} S(n, 1; w**j * x**(1/m)).

    ``inner`` names the stride-1 evaluator: "closed-form" (n <= 2),
    "quad-polylog" (n >= 1) or "direct-sum". x**(1/m) is the principal
    root; w**j are the m-th roots of unity, exact on the axes so that
    real rotated arguments stay on the real branch of phi.
    """
    if n < 0:
        raise ArgumentError(f"weight n must be >= 0, got {n}")
    if not 1 <= m <= 6:
        raise ArgumentError(f"folding stride must be in [1, 6], got {m}")
    if inner not in _INNER_ROUTES:
        raise ArgumentError(f"unknown inner route {inner!r}; choose from {_INNER_ROUTES}")
    if inner == "closed-form" and n > 2:
        raise ArgumentError("closed forms exist for n <= 2 only; fold over quad-polylog instead")
    if inner == "quad-polylog" and n < 1:
        raise ArgumentError("the polylog-kernel quadrature needs n >= 1")
    xc = complex(x)
    radius = convergence_radius(m)
    ax = abs(xc)
    if ax > radius:
        raise DomainError(f"|x| = {ax!r} exceeds the folding domain |x| <= (27/4)**{m} = {radius!r}")
    if ax == radius and n < 2:
        raise DomainError(f"the rim |x| = (27/4)**{m} is summable only for n >= 2, got n = {n}")
    if xc == 0:
        return Evaluation(0j, 0.0, "folding", 0)

    root = _principal_root(xc, m)
    total = 0j
    err = 0.0
    work = 0
    for j in range(1, m + 1):
        arg = root_of_unity(j, m) * root
        if inner == "closed-form":
            ev = (s21 if n == 2 else s11 if n == 1 else s01)(arg)
        elif inner == "direct-sum":
            ev = sum_direct(SeriesParams(n, 1, arg), rel_tol=rel_tol)
        else:
            from .integral_reps import quad_polylog  # deferred; that module imports this one

            ev = quad_polylog(n, arg, spec)
        total += ev.value
        err += ev.abs_error_est
        work += ev.work
    scale = float(m ** (n - 1))
    total *= scale
    err *= scale
    if xc.imag == 0.0:
        total, err = _discard_imag(total, err, xc)
    return Evaluation(total, err, "folding", work)


def s2m_closed(m: int, x: complex) -> Evaluation:
    """Weight-2 closed form at stride m, written out from the rotated roots:

        m * sum_{k=1..m} [ 6*arctan(sqrt3/(2 phi_k - 1))**2
                           - log((1 + phi_k**3)/(1 + phi_k)**3)**2 / 2 ]

    with phi_k = phi(w**k * x**(1/m)). Same value as fold(2, m, x) by
    construction, but assembled directly so the two routes stay
    independent above the shared root.
    """
    if not 1 <= m <= 6:
        raise ArgumentError(f"stride must be in [1, 6], got {m}")
    xc = complex(x)
    radius = convergence_radius(m)
    if abs(xc) > radius:
        raise DomainError(f"|x| = {abs(xc)!r} exceeds |x| <= (27/4)**{m} = {radius!r}")
    if xc == 0:
        return Evaluation(0j, 0.0, "closed-form", m)
    if abs(xc) < _TINY_X:
        return _leading_terms(2, m, xc)

    root = _principal_root(xc, m)
    total = 0j
    scale_err = 0.0
    for k in range(1, m + 1):
        arg = root_of_unity(k, m) * root
        r = phi(arg)
        at, lg = _atan_log_parts(r.phi, r.branch == REAL_BRANCH)
        total += 6.0 * at * at - 0.5 * lg * lg
        scale_err += 6.0 * abs(at) ** 2 + 0.5 * abs(lg) ** 2
    total *= m
    err = 8.0 * _EPS * m * scale_err + _EPS
    if xc.imag == 0.0:
        total, err = _discard_imag(total, err, xc)
    return Evaluation(total, err, "closed-form", m)

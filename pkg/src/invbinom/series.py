"""Inverse binomial coefficient series: domain model and direct summation.

The family evaluated throughout this package is

    S(n, m; x) = sum_{k >= 1} x**k / (k**n * C(3*m*k, m*k))

with integer weight n >= 0, integer stride m >= 1 and complex argument x.
The series converges strictly inside |x| < (27/4)**m, and on the rim
|x| = (27/4)**m once n >= 2 (terms there decay like k**(1/2 - n)).

``sum_direct`` is the reference oracle every other evaluation route in the
package is validated against: terms are built by an exact ratio recurrence
and accumulated with compensated (Kahan) summation, because near the rim a
plain running sum loses digits.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum

from .errors import ArgumentError, ConvergenceError, DomainError

RADIUS_BASE = 27.0 / 4.0
ENV_MAX_TERMS = "SERIES_MAX_TERMS"
_EPS = 2.220446049250313e-16


class Domain(Enum):
    """Position of a parameter triple relative to the convergence disk."""

    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def convergence_radius(m: int) -> float:
    """Radius (27/4)**m of the convergence disk at stride m."""
    if m < 1:
        raise ArgumentError(f"stride m must be >= 1, got {m}")
    return RADIUS_BASE**m


@dataclass(frozen=True)
class SeriesParams:
    """Parameter triple (n, m, x) of S(n, m; x)."""

    n: int
    m: int
    x: complex

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ArgumentError(f"weight n must be >= 0, got {self.n}")
        if self.m < 1:
            raise ArgumentError(f"stride m must be >= 1, got {self.m}")
        object.__setattr__(self, "x", complex(self.x))

    @property
    def radius(self) -> float:
        return convergence_radius(self.m)

    def classify(self) -> Domain:
        ax = abs(self.x)
        if ax < self.radius:
            return Domain.INTERIOR
        if ax == self.radius:
            return Domain.BOUNDARY
        return Domain.OUTSIDE

    def summable(self) -> bool:
        """True when the series converges at these parameters (rim needs n >= 2)."""
        dom = self.classify()
        return dom is Domain.INTERIOR or (dom is Domain.BOUNDARY and self.n >= 2)


@dataclass(frozen=True)
class Evaluation:
    """A computed value with its method tag and error bookkeeping.

    ``work`` counts terms summed or integrand evaluations, whichever the
    route performs. A non-finite value is a construction error, never a
    result.
    """

    value: complex
    abs_error_est: float
    method: str
    work: int

    def __post_init__(self) -> None:
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ArgumentError("evaluation produced a non-finite value")
        if not (math.isfinite(self.abs_error_est) and self.abs_error_est >= 0.0):
            raise ArgumentError("abs_error_est must be finite and >= 0")
        if self.work < 0:
            raise ArgumentError("work must be >= 0")
        object.__setattr__(self, "value", v)


def default_max_terms() -> int:
    """Term cap for ``sum_direct``; overridable via SERIES_MAX_TERMS."""
    raw = os.environ.get(ENV_MAX_TERMS)
    if raw is None:
        return 1_000_000
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ArgumentError(f"{ENV_MAX_TERMS} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ArgumentError(f"{ENV_MAX_TERMS} must be >= 1, got {cap}")
    return cap


def binomial_exact(a: int, b: int) -> int:
    """Exact C(a, b) by the multiplicative recurrence, integer arithmetic only.

    Small-argument oracle for term validation; the upper index is capped at
    400, which covers every term the test grids touch.
    """
    if a < 0 or b < 0:
        raise ArgumentError("binomial arguments must be non-negative")
    if b > a:
        raise ArgumentError(f"binomial lower index {b} exceeds upper index {a}")
    if a > 400:
        raise ArgumentError(f"binomial upper index {a} exceeds the supported cap 400")
    b = min(b, a - b)
    out = 1
    for i in range(1, b + 1):
        out = out * (a - b + i) // i
    return out


def beta_term_identity(k: int) -> float:
    """k * Gamma(k) * Gamma(2k + 1) / Gamma(3k + 1), via log-gamma.

    Equals 1 / C(3k, k); retained purely as a cross-check of the ratio
    recurrence, which is the path that actually does the work.
    """
    if not 1 <= k <= 100:
        raise ArgumentError(f"k must be in [1, 100], got {k}")
    return k * math.exp(math.lgamma(k) + math.lgamma(2 * k + 1) - math.lgamma(3 * k + 1))


def _binomial_step(k: int, m: int) -> float:
    """C(3mk, mk) / C(3m(k+1), m(k+1)) as a float; decreasing, limit (4/27)**m."""
    num = 1.0
    for i in range(1, m + 1):
        num *= m * k + i
    for i in range(1, 2 * m + 1):
        num *= 2 * m * k + i
    den = 1.0
    for i in range(1, 3 * m + 1):
        den *= 3 * m * k + i
    return num / den


def term_ratio(k: int, n: int, x: complex) -> complex:
    """Ratio t_{k+1} / t_k of consecutive stride-1 terms.

    Expands to x * (k/(k+1))**n * (k+1)(2k+1)(2k+2) / ((3k+1)(3k+2)(3k+3));
    the modulus tends to 4|x|/27 as k grows.
    """
    return term_ratio_stride(k, n, 1, x)


def term_ratio_stride(k: int, n: int, m: int, x: complex) -> complex:
    """Stride-m term ratio t_{k+1} / t_k, from the Gamma-product form."""
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")
    if m < 1:
        raise ArgumentError(f"stride m must be >= 1, got {m}")
    return complex(x) * (k / (k + 1)) ** n * _binomial_step(k, m)


def series_terms(n: int, m: int, x: complex, count: int) -> list[complex]:
    """First ``count`` terms t_k = x**k / (k**n * C(3mk, mk)), built recursively."""
    if count < 0:
        raise ArgumentError("count must be >= 0")
    xc = complex(x)
    terms: list[complex] = []
    if count == 0:
        return terms
    t = xc / binomial_exact(3 * m, m)
    for k in range(1, count + 1):
        terms.append(t)
        t *= term_ratio_stride(k, n, m, xc)
    return terms


def sum_direct(
    params: SeriesParams,
    rel_tol: float = 1e-15,
    max_terms: int | None = None,
) -> Evaluation:
    """Compensated direct summation of S(n, m; x).

    Stops once two consecutive terms fall below ``rel_tol`` times the
    running sum (a single accidentally tiny term must not stop an
    alternating series). Rim parameters (n >= 2) are accepted but decay
    polynomially; expect ``max_terms`` to run out there and prefer the
    quadrature route instead.

    The error estimate is a geometric tail bound from the last term and
    the current term ratio, plus a rounding floor proportional to the
    accumulated absolute sum. On the rim, where the ratio bound reaches 1,
    an integral tail bound on k**(1/2 - n) is used instead.

    Raises:
        DomainError: outside the disk, or on the rim with n < 2.
        ConvergenceError: ``max_terms`` exhausted before the stop rule hit.
    """
    dom = params.classify()
    if dom is Domain.OUTSIDE:
        raise DomainError(
            f"|x| = {abs(params.x)!r} is outside the convergence disk "
            f"|x| <= (27/4)**{params.m} = {params.radius!r}"
        )
    if dom is Domain.BOUNDARY and params.n < 2:
        raise DomainError(
            f"the rim |x| = (27/4)**{params.m} is summable only for n >= 2, got n = {params.n}"
        )
    if rel_tol <= 0.0:
        raise ArgumentError("rel_tol must be positive")
    if max_terms is None:
        max_terms = default_max_terms()
    if max_terms < 1:
        raise ArgumentError("max_terms must be >= 1")

    n, m, x = params.n, params.m, params.x
    if x == 0:
        return Evaluation(0j, 0.0, "direct-sum", 0)

    t = x / binomial_exact(3 * m, m)
    total = 0j
    comp = 0j
    abs_sum = 0.0
    small = 0
    work = 0
    for k in range(1, max_terms + 1):
        y = t - comp
        s = total + y
        comp = (s - total) - y
        total = s
        abs_sum += abs(t)
        work = k
        if abs(t) <= rel_tol * abs(total):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
        t *= term_ratio_stride(k, n, m, x)
    else:
        hint = (
            " (rim arguments decay polynomially; use the quadrature route)"
            if dom is Domain.BOUNDARY
            else ""
        )
        raise ConvergenceError(
            f"series did not meet rel_tol={rel_tol:g} within {max_terms} terms{hint}"
        )

    # _binomial_step decreases in k, and (k/(k+1))**n <= 1, so this bounds
    # every remaining ratio.
    r = abs(x) * _binomial_step(work, m)
    if r < 1.0:
        tail = abs(t) * r / (1.0 - r)
    else:
        tail = abs(t) * work / max(n - 1.5, 0.5)
    return Evaluation(total, tail + 4.0 * _EPS * abs_sum, "direct-sum", work)

"""Complex polylogarithm Li_n(z) on the closed unit disk.

Weights 0 and 1 use their elementary closed forms, z/(1-z) and
-log(1-z). Higher weights sum the defining series sum_{k>=1} z**k / k**n
up to |z| = 0.99 and switch to the integral representation

    Li_n(z) = (-1)**(n-1) / (n-1)! * int_0^1 z * log(t)**(n-1) / (1 - z*t) dt

near the rim, where the series would need tens of thousands of terms.
Principal branches everywhere; no caches, so every function here is pure
and safe to call from any number of threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ArgumentError, ConvergenceError, DomainError, PoleError
from .quadrature import QuadratureSpec, adaptive_quad

SERIES_RADIUS = 0.99
RIM_TOL = 1e-12
_MAX_SERIES_TERMS = 60_000


@dataclass(frozen=True)
class PolylogQuery:
    """Validated (weight, argument) pair for Li_n(z)."""

    n: int
    z: complex

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ArgumentError(f"polylog weight must be >= 0, got {self.n}")
        z = complex(self.z)
        object.__setattr__(self, "z", z)
        r = abs(z)
        if r > 1.0 + RIM_TOL:
            raise DomainError(f"|z| = {r!r} lies outside the closed unit disk")
        if self.n == 1 and z == 1:
            raise PoleError("Li_1 has a logarithmic singularity at z = 1")
        if self.n == 0:
            if z == 1:
                raise PoleError("Li_0 has a pole at z = 1")
            if r >= 1.0:
                raise DomainError("Li_0 requires |z| < 1")


def li(n: int, z: complex) -> complex:
    """Polylogarithm Li_n(z) for |z| <= 1 (weight >= 2 required on the rim)."""
    query = PolylogQuery(n, z)
    zc = query.z
    if n == 0:
        return zc / (1.0 - zc)
    if n == 1:
        return -cmath.log(1.0 - zc)
    if abs(zc) <= SERIES_RADIUS:
        return _li_series(n, zc)
    return _li_integral(n, zc)


def _li_series(n: int, z: complex, tol: float = 4e-17) -> complex:
    """Direct series with a geometric tail bound; |z| < 1 strictly."""
    if z == 0:
        return 0j
    r = abs(z)
    geo = r / (1.0 - r)
    t = complex(z)
    total = 0j
    comp = 0j
    for k in range(1, _MAX_SERIES_TERMS + 1):
        y = t - comp
        s = total + y
        comp = (s - total) - y
        total = s
        if abs(t) * geo <= tol * abs(total):
            return total
        t *= z * (k / (k + 1)) ** n
    raise ConvergenceError(f"polylog series stalled at |z| = {r!r}")


def _li_integral(n: int, z: complex, spec: QuadratureSpec | None = None) -> complex:
    """Integral representation; only meaningful for weight >= 2."""
    if n < 2:
        raise ArgumentError("the integral representation needs weight >= 2")
    zc = complex(z)
    p = n - 1

    def integrand(t: float) -> complex:
        if t <= 0.0:
            return 0j  # nodes are interior; guard only
        return zc * math.log(t) ** p / (1.0 - zc * t)

    value, _, _ = adaptive_quad(integrand, 0.0, 1.0, spec or QuadratureSpec())
    return (-1.0) ** p / math.factorial(p) * value


def root_of_unity(k: int, m: int) -> complex:
    """exp(2*pi*i*k/m), computed from the angle, exact on the axes."""
    if m < 1:
        raise ArgumentError(f"m must be >= 1, got {m}")
    k %= m
    if k == 0:
        return complex(1.0)
    if 2 * k == m:
        return complex(-1.0)
    if 4 * k == m:
        return 1j
    if 4 * k == 3 * m:
        return -1j
    return cmath.exp(2j * math.pi * k / m)


def li_factorized(n: int, z: complex, m: int) -> complex:
    """Fold Li_n over the m-th roots of unity: m**(n-1) * sum_k Li_n(w**k * z).

    Contract: equals li(n, z**m). The two sides exercise different code
    paths (m rotated arguments against one power), which is what makes the
    identity a useful cross-check.
    """
    if not 1 <= m <= 12:
        raise ArgumentError(f"m must be in [1, 12], got {m}")
    zc = complex(z)
    if abs(zc) ** m > 1.0 + RIM_TOL:
        raise DomainError(f"|z|**m = {abs(zc) ** m!r} lies outside the closed unit disk")
    total = 0j
    for k in range(1, m + 1):
        total += li(n, root_of_unity(k, m) * zc)
    return m ** (n - 1) * total

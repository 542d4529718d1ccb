"""Uniform dispatch over the evaluation routes, plus the auto resolution rule.

An explicitly named method is never silently substituted; requests a route
cannot serve raise instead. x = 0 short-circuits to exactly 0 on every
route, including the ones whose underlying operation excludes it.
"""

from __future__ import annotations

from .closed_forms import _pfq_terms, fold, s01, s11, s21, s2m_closed
from .errors import ArgumentError, DomainError
from .integral_reps import quad_polylog, quad_two_term
from .quadrature import QuadratureSpec
from .series import Domain, Evaluation, SeriesParams, sum_direct

METHODS = (
    "direct-sum",
    "closed-form",
    "quad-polylog",
    "quad-two-term",
    "folding",
    "pfq",
)

# Hypergeometric cross-check forms of S(n, 1; x): value = (x/3) * pFq(...; 4x/27).
PFQ_RECIPES: dict[int, tuple[tuple[float, ...], tuple[float, ...]]] = {
    2: ((1.0, 1.0, 1.0, 1.5), (4.0 / 3.0, 5.0 / 3.0, 2.0)),
    1: ((1.0, 1.0, 1.5), (4.0 / 3.0, 5.0 / 3.0)),
    0: ((1.0, 1.5, 2.0), (4.0 / 3.0, 5.0 / 3.0)),
}


def resolve_auto(n: int, m: int) -> str:
    """Closed form when one exists, folding for higher stride, quadrature otherwise."""
    if n <= 2 and m == 1:
        return "closed-form"
    if n <= 2:
        return "folding"
    if m == 1:
        return "quad-polylog"
    return "folding"


def hypergeometric_value(n: int, x: complex, tol: float = 1e-16) -> tuple[complex, int]:
    """(x/3) * pFq form of S(n, 1; x), n <= 2. Returns (value, terms summed).

    The weight-0 recipe carries the same x/3 prefactor as the others; its
    term ratio matches the series term ratio exactly, which the
    cross-route suite verifies.
    """
    if n not in PFQ_RECIPES:
        raise ArgumentError(f"hypergeometric recipes exist for n in (0, 1, 2), got {n}")
    xc = complex(x)
    if xc == 0:
        return 0j, 0
    num, den = PFQ_RECIPES[n]
    value, terms = _pfq_terms(num, den, 4.0 * xc / 27.0, tol)
    return xc / 3.0 * value, terms


def evaluate(
    n: int,
    m: int,
    x: complex,
    method: str = "auto",
    *,
    rel_tol: float = 1e-15,
    spec: QuadratureSpec | None = None,
    max_terms: int | None = None,
) -> Evaluation:
    """Evaluate S(n, m; x) by the named route ("auto" resolves first).

    Raises DomainError outside the convergence disk, on the rim with
    n < 2, and ArgumentError when the requested route does not serve the
    given (n, m, x) shape.
    """
    params = SeriesParams(n, m, complex(x))
    dom = params.classify()
    if dom is Domain.OUTSIDE:
        raise DomainError(
            f"|x| = {abs(params.x)!r} exceeds the convergence radius "
            f"(27/4)**{m} = {params.radius!r}"
        )
    if dom is Domain.BOUNDARY and n < 2:
        raise DomainError(
            f"the rim |x| = (27/4)**{m} = {params.radius!r} is summable only "
            f"for n >= 2, got n = {n}"
        )
    chosen = resolve_auto(n, m) if method == "auto" else method
    if chosen not in METHODS:
        raise ArgumentError(f"unknown method {method!r}; choose from {METHODS} or 'auto'")
    if params.x == 0:
        return Evaluation(0j, 0.0, chosen, 0)

    if chosen == "direct-sum":
        return sum_direct(params, rel_tol=rel_tol, max_terms=max_terms)
    if chosen == "closed-form":
        if m == 1:
            if n > 2:
                raise ArgumentError("no stride-1 closed form for n >= 3; use quad-polylog")
            return (s21 if n == 2 else s11 if n == 1 else s01)(params.x)
        if n == 2:
            return s2m_closed(m, params.x)
        raise ArgumentError("the stride m >= 2 closed form exists for n = 2 only; use folding")
    if chosen == "quad-polylog":
        if m != 1:
            raise ArgumentError("quad-polylog serves stride 1; use folding for m >= 2")
        return quad_polylog(n, params.x, spec)
    if chosen == "quad-two-term":
        if m != 1:
            raise ArgumentError("quad-two-term serves stride 1; use folding for m >= 2")
        if params.x.imag != 0.0:
            raise ArgumentError("quad-two-term is a real-argument route")
        return quad_two_term(n, params.x.real, spec)
    if chosen == "folding":
        inner = "closed-form" if n <= 2 else "quad-polylog"
        return fold(n, m, params.x, inner, rel_tol=rel_tol, spec=spec)
    # pfq
    if m != 1 or n > 2:
        raise ArgumentError("the hypergeometric route covers n <= 2 at stride 1")
    value, terms = hypergeometric_value(n, params.x)
    return Evaluation(value, 8e-16 * (1.0 + abs(value)), "pfq", terms)

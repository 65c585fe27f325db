"""Exact all-real-roots decisions for integer polynomials via Sturm chains.

Everything runs over the rationals, so a verdict is a proof at this scale,
not a numeric heuristic.  A polynomial has only real roots exactly when its
squarefree part g = f / gcd(f, f') has deg(g) distinct real roots, and the
distinct-root count over (-inf, inf) is the difference of sign variations
of the Sturm chain at the two ends, read off the leading coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Poly = list[Fraction]  # ascending coefficients, no trailing zeros


def _trim(p: list[Fraction]) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _to_poly(coeffs: list[int] | list[Fraction]) -> Poly:
    return _trim([Fraction(c) for c in coeffs])


def _derivative(p: Poly) -> Poly:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean quotient and remainder of a by b (b nonzero)."""
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while _trim(r) and len(r) >= len(b):
        factor = r[-1] / lb
        shift = len(r) - len(b)
        q[shift] = factor
        for i, c in enumerate(b[:-1]):
            r[i + shift] -= factor * c
        r.pop()  # the leading term cancels exactly
    return _trim(q), r


def _rem(a: Poly, b: Poly) -> Poly:
    """Remainder of a by b, rescaled to leading coefficient magnitude 1.
    Only positive scaling, so Sturm sign sequences are unaffected."""
    r = _divmod(a, b)[1]
    if r:
        scale = abs(r[-1])
        r = [c / scale for c in r]
    return r


def _divide_exact(a: Poly, b: Poly) -> Poly:
    q, r = _divmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def _gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _rem(a, b)
    if a:
        a = [c / a[-1] for c in a]  # monic
    return a


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [list(p), _derivative(p)]
    while chain[-1]:
        nxt = [-c for c in _rem(chain[-2], chain[-1])]
        if not nxt:
            break
        chain.append(nxt)
    return [c for c in chain if c]


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def distinct_real_roots(coeffs: list[int] | list[Fraction]) -> int:
    """Number of distinct real roots over (-inf, inf), exactly."""
    p = _to_poly(list(coeffs))
    if len(p) <= 1:
        return 0
    chain = sturm_chain(p)
    at_pos = [(1 if c[-1] > 0 else -1) for c in chain]
    at_neg = [
        (1 if c[-1] > 0 else -1) * (-1 if (len(c) - 1) % 2 else 1) for c in chain
    ]
    return _variations(at_neg) - _variations(at_pos)


@dataclass(frozen=True)
class RootReport:
    """Evidence for an all-real-roots verdict."""

    coeffs: tuple[int, ...]
    degree: int  # after stripping the power of t dividing the polynomial
    stripped_power: int
    squarefree_degree: int
    distinct_roots: int
    all_real: bool
    vacuous: bool  # zero polynomial: nothing to decide, flagged

    def __str__(self) -> str:
        if self.vacuous:
            return "zero polynomial: vacuously real-rooted (flagged)"
        verdict = "real-rooted" if self.all_real else "NOT real-rooted"
        return (
            f"degree {self.degree} (t^{self.stripped_power} stripped), "
            f"squarefree degree {self.squarefree_degree}, "
            f"{self.distinct_roots} distinct real roots: {verdict}"
        )


def real_rooted(coeffs: list[int]) -> RootReport:
    """Decide whether an integer polynomial has only real roots.

    The zero polynomial is reported as vacuously real-rooted with the
    `vacuous` flag set.  Powers of t are stripped first (roots at zero are
    real); the verdict compares the Sturm count of the squarefree part with
    its degree, which also certifies the roots of every multiplicity level.
    """
    coeffs = list(coeffs)
    if not any(coeffs):
        return RootReport((), 0, 0, 0, 0, True, True)
    stripped = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        stripped += 1
    p = _to_poly(coeffs)
    degree = len(p) - 1
    if degree == 0:
        return RootReport(tuple(coeffs), 0, stripped, 0, 0, True, False)
    g = _divide_exact(p, _gcd(p, _derivative(p)))
    sq_deg = len(g) - 1
    count = distinct_real_roots(g)
    return RootReport(
        tuple(int(c) for c in coeffs),
        degree,
        stripped,
        sq_deg,
        count,
        count == sq_deg,
        False,
    )

"""Truncated power series in t over four-variable polynomials, the plane
tree generating function, and its algebraic residual checks.

The central series N(x,y,z,w;t) sums, over plane trees with n edges at t^n,
the monomial x^oe y^ee z^oo w^eo recording even/odd-degree nodes split by
level parity.  It solves the system

    N  = (y + w t N*) / (1 - (t N*)^2),     N* = N(y, x, w, z; t),
    N* = (x + z t N)  / (1 - (t N)^2),

obtained by splitting a root's children into consecutive pairs plus an
optional last one, and eliminating N* gives one quintic polynomial relation
for N; setting w = z in it shows N(x,y,z,z;t) is symmetric in x and z.
Both relations are verified here with exact residuals.
"""

from __future__ import annotations

from .mpoly import MPoly, poly_sum

SERIES_VARS = ("w", "x", "y", "z")


class TruncSeries:
    """Power series in t modulo t^(order+1), coefficients in Z[w,x,y,z]."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: list[MPoly], order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        padded = list(coeffs[: order + 1])
        while len(padded) < order + 1:
            padded.append(MPoly.zero(SERIES_VARS))
        self.coeffs = padded

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([], order)

    @classmethod
    def from_poly(cls, poly: MPoly, order: int, t_power: int = 0) -> "TruncSeries":
        coeffs = [MPoly.zero(SERIES_VARS)] * t_power + [poly]
        return cls(coeffs, order)

    @classmethod
    def var(cls, name: str, order: int) -> "TruncSeries":
        return cls.from_poly(MPoly.var(SERIES_VARS, name), order)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, (int, MPoly)):
            return TruncSeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        out: list[MPoly] = []
        for n in range(self.order + 1):
            out.append(
                poly_sum(
                    SERIES_VARS,
                    (
                        self.coeffs[i] * other.coeffs[n - i]
                        for i in range(n + 1)
                        if self.coeffs[i].terms and other.coeffs[n - i].terms
                    ),
                )
            )
        return TruncSeries(out, self.order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncSeries":
        if n < 0:
            raise ValueError("negative series powers are not supported")
        result = TruncSeries.from_poly(MPoly.const(SERIES_VARS, 1), self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by t^k."""
        return TruncSeries([MPoly.zero(SERIES_VARS)] * k + self.coeffs, self.order)

    def rename_vars(self, mapping: dict[str, str]) -> "TruncSeries":
        return TruncSeries([c.rename(mapping) for c in self.coeffs], self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def is_zero(self) -> bool:
        return all(not c.terms for c in self.coeffs)

    def first_nonzero(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if c.terms:
                return n
        return None

    def __str__(self) -> str:
        return format_series(self)


def geometric(u: TruncSeries) -> TruncSeries:
    """1 / (1 - u) for a series with zero constant term."""
    if u.coeffs[0].terms:
        raise ValueError("geometric inverse needs zero constant term")
    total = TruncSeries.from_poly(MPoly.const(SERIES_VARS, 1), u.order)
    power = total
    for _ in range(u.order):
        power = power * u
        if power.is_zero():
            break
        total = total + power
    return total


def format_series(s: TruncSeries, style: str = "desclex") -> str:
    """Display like `y+wxt+(wyz+x^2y)t^2+...`; multi-term coefficients are
    parenthesised, zero coefficients skipped."""
    parts = []
    for n, c in enumerate(s.coeffs):
        if not c.terms:
            continue
        body = c.canonical_str(style)
        if n == 0:
            parts.append(body)
            continue
        if len(c.terms) > 1:
            body = f"({body})"
        elif body == "1":
            body = ""
        parts.append(body + ("t" if n == 1 else f"t^{n}"))
    return "+".join(parts) if parts else "0"


_SWAP_STAR = {"x": "y", "y": "x", "z": "w", "w": "z"}


def plane_gf(order: int, _return_pair: bool = False):
    """The plane-tree generating function N (and partner N*) mod t^(order+1).

    Fixpoint iteration of the functional-equation pair; iteration k pins the
    coefficient of t^k, so order+1 rounds converge and one extra round is
    run to assert stability.
    """
    y = TruncSeries.var("y", order)
    x = TruncSeries.var("x", order)
    w = MPoly.var(SERIES_VARS, "w")
    z = MPoly.var(SERIES_VARS, "z")
    n_cur, n_star = TruncSeries.zero(order), TruncSeries.zero(order)
    for _ in range(order + 2):
        n_next = (y + (n_star * w).shift(1)) * geometric(n_star.shift(1) ** 2)
        s_next = (x + (n_cur * z).shift(1)) * geometric(n_cur.shift(1) ** 2)
        if n_next == n_cur and s_next == n_star:
            break
        n_cur, n_star = n_next, s_next
    assert n_cur == (y + (n_star * w).shift(1)) * geometric(n_star.shift(1) ** 2), (
        "fixpoint did not stabilise within order+2 rounds"
    )
    assert n_star == n_cur.rename_vars(_SWAP_STAR), (
        "partner series must be the variable-swapped series"
    )
    return (n_cur, n_star) if _return_pair else n_cur


def quintic_residual(n: TruncSeries) -> TruncSeries:
    """Residual of the quintic algebraic relation satisfied by N."""
    order = n.order
    w, x, y, z = (MPoly.var(SERIES_VARS, s) for s in "wxyz")
    n2, n3 = n * n, n * n * n
    n4, n5 = n2 * n2, n2 * n3
    return (
        n5.shift(4)
        - (n4 * y).shift(4)
        - 2 * n3.shift(2)
        + 2 * (n2 * y).shift(2)
        + n
        - TruncSeries.from_poly(y, order)
        - TruncSeries.from_poly(w * x, order).shift(1)
        + (n3 * (w * z - z * z)).shift(4)
        + (n2 * (w * x - 2 * x * z)).shift(3)
        - (n * (w * z + x * x)).shift(2)
    )


def quintic_residual_w_eq_z(nz: TruncSeries) -> TruncSeries:
    """Residual of the specialised quintic for N with w set to z."""
    order = nz.order
    x, y, z = (MPoly.var(SERIES_VARS, s) for s in "xyz")
    n2, n3 = nz * nz, nz * nz * nz
    n4, n5 = n2 * n2, n2 * n3
    return (
        n5.shift(4)
        - (n4 * y).shift(4)
        - 2 * n3.shift(2)
        + 2 * (n2 * y).shift(2)
        - (n2 * (x * z)).shift(3)
        + nz
        - (nz * (z * z + x * x)).shift(2)
        - TruncSeries.from_poly(y, order)
        - TruncSeries.from_poly(z * x, order).shift(1)
    )


def check_algebraic_eq(order: int) -> dict:
    """Verify both algebraic relations and the x/z symmetry at w = z.

    Returns a report dict; zero residuals and a symmetric specialisation
    are the pass condition, with the first offending t-power on failure.
    """
    n = plane_gf(order)
    res1 = quintic_residual(n)
    nz = n.rename_vars({"w": "z"})
    res2 = quintic_residual_w_eq_z(nz)
    sym = nz.rename_vars({"x": "z", "z": "x"})
    report = {
        "order": order,
        "quintic_residual_zero": res1.is_zero(),
        "quintic_residual_first_power": res1.first_nonzero(),
        "w_eq_z_residual_zero": res2.is_zero(),
        "w_eq_z_residual_first_power": res2.first_nonzero(),
        "x_z_symmetric_at_w_eq_z": nz == sym,
    }
    report["ok"] = bool(
        report["quintic_residual_zero"]
        and report["w_eq_z_residual_zero"]
        and report["x_z_symmetric_at_w_eq_z"]
    )
    return report


# ---------------------------------------------------------------------------
# coefficient extraction from the two-variable inversion kernel
# ---------------------------------------------------------------------------

SERIES5_VARS = ("w", "x", "y", "z", "t")

# kernel terms: (coefficient, a-deg, b-deg, t-deg, w, x, y, z)
_KERNEL = (
    (1, 0, 0, 0, 0, 1, 1, 0),   # xy
    (1, 1, 0, 1, 0, 0, 1, 1),   # a t y z
    (1, 0, 1, 1, 1, 1, 0, 0),   # b t w x
    (-2, 2, 2, 3, 0, 0, 0, 1),  # -2 a^2 b^2 t^3 z
    (-2, 2, 2, 3, 1, 0, 0, 0),  # -2 a^2 b^2 t^3 w
    (-4, 3, 3, 4, 0, 0, 0, 0),  # -4 a^3 b^3 t^4
)


def lagrange_coeff(n: int, m: int, order: int) -> MPoly:
    """Coefficient of a^n b^(m+1) in K (t^2 a b^2 + t w b + y)^n
    (t^2 b a^2 + t z a + x)^m, truncated at t^order, over (w,x,y,z,t).

    Summed over all n, m >= 0 this reproduces the plane-tree series N except
    for its constant term y (the root-only tree), which the kernel cannot
    produce; see `lagrange_series`.
    """
    if n < 0 or m < 0:
        raise ValueError("indices must be >= 0")
    from math import comb

    terms: dict[tuple[int, int, int, int, int], int] = {}
    for kc, ka, kb, kt, kw, kx, ky, kz in _KERNEL:
        for j1 in range(n + 1):
            for k1 in range(m + 1):
                j2 = m + 1 - kb - 2 * j1 - k1
                k2 = n - ka - j1 - 2 * k1
                if j2 < 0 or k2 < 0:
                    continue
                j3 = n - j1 - j2
                k3 = m - k1 - k2
                if j3 < 0 or k3 < 0:
                    continue
                tpow = 2 * j1 + j2 + 2 * k1 + k2 + kt
                if tpow > order:
                    continue
                coeff = (
                    kc
                    * comb(n, j1) * comb(n - j1, j2)
                    * comb(m, k1) * comb(m - k1, k2)
                )
                key = (j2 + kw, k3 + kx, j3 + ky, k2 + kz, tpow)
                nc = terms.get(key, 0) + coeff
                if nc:
                    terms[key] = nc
                else:
                    del terms[key]
    return MPoly(SERIES5_VARS, terms)


def lagrange_series(order: int) -> MPoly:
    """Sum of lagrange_coeff over every (n, m) that can reach t^order."""
    nmax = (5 * order) // 2 + 4
    total: dict[tuple[int, ...], int] = {}
    for n in range(nmax + 1):
        for m in range(nmax + 1):
            for e, c in lagrange_coeff(n, m, order).terms.items():
                nc = total.get(e, 0) + c
                if nc:
                    total[e] = nc
                else:
                    del total[e]
    return MPoly(SERIES5_VARS, total)


def series_to_poly5(s: TruncSeries) -> MPoly:
    """Flatten a truncated series into a single (w,x,y,z,t) polynomial."""
    terms: dict[tuple[int, ...], int] = {}
    for n, c in enumerate(s.coeffs):
        for e, coeff in c.terms.items():
            terms[e + (n,)] = coeff
    return MPoly(SERIES5_VARS, terms)

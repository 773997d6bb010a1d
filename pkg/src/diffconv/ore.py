"""The differential operator ring R = F_p(z)[x; delta] and its quotient by x^p - gamma*x.

Coefficients are written on the left, and ``x * a = a * x + delta(a)``.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .rfield import Derivation, RatFun, as_ratfun, const, format_ratfun, parse_ratfun

__all__ = [
    "NEG_INF",
    "OrePoly",
    "QuotientElem",
    "ore_mul",
    "right_divmod",
    "left_divmod",
    "gcrd",
    "llcm",
    "llcm_many",
    "n_values",
    "log_derivative",
    "right_eval",
    "x_minus",
    "central_element",
    "reduce_mod_center",
    "quotient_mul",
    "coords",
    "from_coords",
    "parse_orepoly",
    "format_orepoly",
]

NEG_INF = -math.inf  # degree of the zero polynomial


class OrePoly:
    """Left-coefficient polynomial sum(c_i * x^i) over F_p(z)."""

    __slots__ = ("coeffs", "D")

    def __init__(self, coeffs: Iterable, D: Derivation):
        cs = [as_ratfun(c, D.p) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[RatFun, ...] = tuple(cs)
        self.D = D

    @classmethod
    def _raw(cls, coeffs: list, D: Derivation) -> OrePoly:
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.D = D
        return obj

    @classmethod
    def zero(cls, D: Derivation) -> OrePoly:
        return cls._raw([], D)

    @classmethod
    def one(cls, D: Derivation) -> OrePoly:
        return cls._raw([const(1, D.p)], D)

    @classmethod
    def x(cls, D: Derivation, k: int = 1) -> OrePoly:
        zero = const(0, D.p)
        return cls._raw([zero] * k + [const(1, D.p)], D)

    @classmethod
    def scalar(cls, a: RatFun, D: Derivation) -> OrePoly:
        return cls._raw([as_ratfun(a, D.p)], D)

    # -- basic accessors -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> RatFun:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> RatFun:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return const(0, self.D.p)

    def padded(self, n: int) -> list[RatFun]:
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in {n} coordinates")
        return list(self.coeffs) + [const(0, self.D.p)] * (n - len(self.coeffs))

    def monic(self) -> OrePoly:
        inv = self.leading.inverse()
        return OrePoly._raw([inv * c for c in self.coeffs], self.D)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: OrePoly) -> None:
        if self.D != other.D:
            raise ValueError("Ore polynomials over different derivations")

    def __add__(self, other):
        if isinstance(other, (RatFun, int)):
            other = OrePoly.scalar(other, self.D)
        if not isinstance(other, OrePoly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return OrePoly._raw(out, self.D)

    __radd__ = __add__

    def __neg__(self) -> OrePoly:
        return OrePoly._raw([-c for c in self.coeffs], self.D)

    def __sub__(self, other):
        if isinstance(other, (RatFun, int)):
            other = OrePoly.scalar(other, self.D)
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (RatFun, int)):
            other = OrePoly.scalar(other, self.D)
        if not isinstance(other, OrePoly):
            return NotImplemented
        return ore_mul(self, other)

    def __rmul__(self, other):
        # scalar on the left: plain coefficientwise product
        if isinstance(other, (RatFun, int)):
            a = as_ratfun(other, self.D.p)
            return OrePoly._raw([a * c for c in self.coeffs], self.D)
        return NotImplemented

    def __pow__(self, k: int) -> OrePoly:
        out = OrePoly.one(self.D)
        for _ in range(k):
            out = ore_mul(out, self)
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, OrePoly):
            return self.D == other.D and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"OrePoly({format_orepoly(self)})"

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(format_ratfun(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{format_ratfun(c)}*{mono}")
        return " + ".join(terms) if terms else "0"


def x_minus(a: RatFun, D: Derivation) -> OrePoly:
    """The linear polynomial x - a."""
    return OrePoly._raw([-as_ratfun(a, D.p), const(1, D.p)], D)


def _binomial_rows(n: int, p: int) -> list[list[int]]:
    rows = [[1]]
    for k in range(1, n + 1):
        prev = rows[-1]
        rows.append([1] + [(prev[j - 1] + prev[j]) % p for j in range(1, k)] + [1])
    return rows


def ore_mul(f: OrePoly, g: OrePoly) -> OrePoly:
    """Product in R, via x^i * a = sum_j C(i, j) delta^j(a) x^(i-j)."""
    f._check(g)
    D = f.D
    if not f.coeffs or not g.coeffs:
        return OrePoly.zero(D)
    p = D.p
    m = len(f.coeffs) - 1
    binom = _binomial_rows(m, p)
    out = [const(0, p)] * (m + len(g.coeffs))
    for k, gk in enumerate(g.coeffs):
        if not gk:
            continue
        derivs = D.orbit(gk, m + 1)
        for i, fi in enumerate(f.coeffs):
            if not fi:
                continue
            row = binom[i]
            for j in range(i + 1):
                c = row[j]
                dj = derivs[j]
                if c and dj:
                    out[i - j + k] = out[i - j + k] + fi * (dj * c)
    return OrePoly._raw(out, D)


def _x_times(f: OrePoly) -> OrePoly:
    """x * f = sum(c_i x^(i+1) + delta(c_i) x^i)."""
    D = f.D
    cs = f.coeffs
    if not cs:
        return f
    out = [D(c) for c in cs] + [const(0, D.p)]
    for i, c in enumerate(cs):
        out[i + 1] = out[i + 1] + c
    return OrePoly._raw(out, D)


def right_divmod(f: OrePoly, g: OrePoly) -> tuple[OrePoly, OrePoly]:
    """Return (q, r) with f = q*g + r and deg r < deg g."""
    f._check(g)
    if not g.coeffs:
        raise ZeroDivisionError("right division by the zero polynomial")
    D = f.D
    m = len(g.coeffs) - 1
    n = len(f.coeffs) - 1
    if n < m:
        return OrePoly.zero(D), f
    lead_inv = g.leading.inverse()
    shifts = [g]  # shifts[k] = x^k * g
    for _ in range(n - m):
        shifts.append(_x_times(shifts[-1]))
    q = [const(0, D.p)] * (n - m + 1)
    r = list(f.coeffs)
    for deg in range(n, m - 1, -1):
        lead = r[deg]
        if not lead:
            continue
        k = deg - m
        c = lead * lead_inv
        q[k] = c
        for i, s in enumerate(shifts[k].coeffs):
            if s:
                r[i] = r[i] - c * s
    return OrePoly._raw(q, D), OrePoly._raw(r[:m], D)


def left_divmod(f: OrePoly, g: OrePoly) -> tuple[OrePoly, OrePoly]:
    """Return (q, r) with f = g*q + r and deg r < deg g."""
    f._check(g)
    if not g.coeffs:
        raise ZeroDivisionError("left division by the zero polynomial")
    D = f.D
    m = len(g.coeffs) - 1
    q = [const(0, D.p)] * max(len(f.coeffs) - m, 0)
    r = f
    lead_inv = g.leading.inverse()
    while r.coeffs and len(r.coeffs) - 1 >= m:
        k = len(r.coeffs) - 1 - m
        c = lead_inv * r.leading
        q[k] = q[k] + c
        gc = ore_mul(g, OrePoly.scalar(c, D))
        term = OrePoly._raw([const(0, D.p)] * k + list(gc.coeffs), D)
        r = r - term
    return OrePoly._raw(q, D), r


def _euclid(f: OrePoly, g: OrePoly, track: bool = True):
    """Right Euclid on (f, g): returns (gcrd, u) with u*f in Rg at termination.

    Only the cofactor of f is carried, and only when ``track`` is set; the llcm
    needs nothing else and the gcrd needs no cofactor at all.
    """
    D = f.D
    r0, r1 = f, g
    u0, u1 = OrePoly.one(D), OrePoly.zero(D)
    while r1.coeffs:
        q, rem = right_divmod(r0, r1)
        r0, r1 = r1, rem
        if track:
            u0, u1 = u1, u0 - ore_mul(q, u1)
    return r0, u1


def gcrd(f: OrePoly, g: OrePoly) -> OrePoly:
    """Monic generator of Rf + Rg."""
    f._check(g)
    if not f.coeffs and not g.coeffs:
        raise ValueError("gcrd(0, 0) is undefined")
    return _euclid(f, g, track=False)[0].monic()


def llcm(f: OrePoly, g: OrePoly) -> OrePoly:
    """Monic generator of Rf ∩ Rg."""
    f._check(g)
    if not f.coeffs or not g.coeffs:
        raise ValueError("llcm of the zero polynomial is undefined")
    if len(f.coeffs) == 1:
        return g.monic()
    if len(g.coeffs) == 1:
        return f.monic()
    _, u = _euclid(f, g)
    return ore_mul(u, f).monic()


def llcm_many(polys: Sequence[OrePoly], D: Derivation) -> OrePoly:
    """Fold ``llcm`` over a list; the empty list gives 1."""
    out = OrePoly.one(D)
    for f in polys:
        out = llcm(out, f)
    return out


def n_values(a: RatFun, kmax: int, D: Derivation) -> list[RatFun]:
    """[N_0(a), ..., N_kmax(a)] with N_0 = 1, N_(k+1) = N_k * a + delta(N_k)."""
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    out = [const(1, D.p)]
    for _ in range(kmax):
        nk = out[-1]
        out.append(nk * a + D(nk))
    return out


def log_derivative(a: RatFun, D: Derivation) -> RatFun:
    """L(a) = delta(a) / a."""
    if not a:
        raise ZeroDivisionError("logarithmic derivative of zero")
    return D(a) / a


def right_eval(f: OrePoly, a: RatFun) -> RatFun:
    """f[a] = sum f_i N_i(a), the remainder of f on right division by x - a."""
    D = f.D
    a = as_ratfun(a, D.p)
    if not f.coeffs:
        return const(0, D.p)
    ns = n_values(a, len(f.coeffs) - 1, D)
    acc = const(0, D.p)
    for c, n in zip(f.coeffs, ns):
        if c and n:
            acc = acc + c * n
    return acc


# ---------------------------------------------------------------------------
# quotient R / R(x^p - gamma x)


def central_element(D: Derivation) -> OrePoly:
    """x^p - gamma*x, which generates a two-sided ideal."""
    zero = const(0, D.p)
    cs = [zero] * (D.p + 1)
    cs[1] = -D.gamma
    cs[D.p] = const(1, D.p)
    return OrePoly._raw(cs, D)


class QuotientElem:
    """Element of R/R(x^p - gamma x) held by its representative of degree < p."""

    __slots__ = ("rep",)

    def __init__(self, rep: OrePoly):
        if rep.coeffs and len(rep.coeffs) > rep.D.p:
            raise ValueError(f"representative degree {rep.degree} >= p; use reduce_mod_center")
        self.rep = rep

    @property
    def D(self) -> Derivation:
        return self.rep.D

    def __mul__(self, other: QuotientElem) -> QuotientElem:
        return quotient_mul(self, other)

    def __add__(self, other: QuotientElem) -> QuotientElem:
        return QuotientElem(self.rep + other.rep)

    def __sub__(self, other: QuotientElem) -> QuotientElem:
        return QuotientElem(self.rep - other.rep)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuotientElem):
            return self.rep == other.rep
        return NotImplemented

    def __hash__(self):
        return hash(self.rep)

    def __repr__(self) -> str:
        return f"QuotientElem({format_orepoly(self.rep)})"


def reduce_mod_center(f: OrePoly) -> QuotientElem:
    if len(f.coeffs) <= f.D.p:
        return QuotientElem(f)
    return QuotientElem(right_divmod(f, central_element(f.D))[1])


def quotient_mul(f: QuotientElem, g: QuotientElem) -> QuotientElem:
    return reduce_mod_center(ore_mul(f.rep, g.rep))


def coords(f: QuotientElem | OrePoly) -> list[RatFun]:
    """Coordinates in the basis 1, x, ..., x^(p-1)."""
    rep = f.rep if isinstance(f, QuotientElem) else reduce_mod_center(f).rep
    return rep.padded(rep.D.p)


def from_coords(v: Sequence, D: Derivation) -> QuotientElem:
    if len(v) != D.p:
        raise ValueError(f"expected {D.p} coordinates, got {len(v)}")
    return QuotientElem(OrePoly(v, D))


# ---------------------------------------------------------------------------
# text format


def format_orepoly(f: OrePoly) -> str:
    return "[" + ", ".join(format_ratfun(c) for c in f.coeffs) + "]"


def parse_orepoly(text: str, D: Derivation, strict: bool | None = None) -> OrePoly:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"Ore polynomial must be a bracketed list, got {text!r}")
    body = body[1:-1].strip()
    if not body:
        return OrePoly.zero(D)
    return OrePoly([parse_ratfun(part, D.p, strict=strict) for part in body.split(",")], D)

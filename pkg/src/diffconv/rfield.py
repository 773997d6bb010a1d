"""Exact arithmetic in F_p, F_p[z] and the rational function field F_p(z).

Polynomials in z are tuples of ints in ``range(p)``, little-endian
(index = degree), with no trailing zeros; the zero polynomial is ``()``.
Rational functions are always kept in canonical form: coprime numerator and
denominator, monic denominator, zero stored as ``0/1``.  Structural
equality is therefore field equality.

A derivation of F_p(z) is fixed by the image of ``z``; see :class:`Derivation`.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field

__all__ = [
    "MIN_PRIME",
    "MAX_PRIME",
    "ParseError",
    "RatFun",
    "Derivation",
    "is_prime",
    "check_prime",
    "normalize",
    "rf_add",
    "rf_sub",
    "rf_mul",
    "rf_div",
    "rf_inv",
    "rf_pow",
    "const",
    "zvar",
    "as_ratfun",
    "derive",
    "iterate_derive",
    "compute_gamma",
    "in_constant_field",
    "parse_ratfun",
    "format_ratfun",
]

MIN_PRIME = 3
MAX_PRIME = 31

Poly = tuple  # tuple[int, ...], little-endian


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f"characteristic must be an int, got {type(p).__name__}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not MIN_PRIME <= p <= MAX_PRIME:
        raise ValueError(f"characteristic {p} outside supported range [{MIN_PRIME}, {MAX_PRIME}]")
    return p


# ---------------------------------------------------------------------------
# F_p[z] kernels.  All take and return trimmed tuples.


def _trim(c: list) -> Poly:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def poly_deg(a: Poly) -> int:
    return len(a) - 1


def poly_add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def poly_scale(a: Poly, c: int, p: int) -> Poly:
    c %= p
    if c == 0:
        return ()
    if c == 1:
        return a
    return tuple(x * c % p for x in a)


_KRONECKER_MIN = 12


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return poly_scale(b, a[0], p)
    if len(b) == 1:
        return poly_scale(a, b[0], p)
    if min(len(a), len(b)) >= _KRONECKER_MIN:
        return _mul_kronecker(a, b, p)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([x % p for x in out])


def _mul_kronecker(a: Poly, b: Poly, p: int) -> Poly:
    # pack coefficients into byte-aligned slots wide enough for any convolution sum
    width = (min(len(a), len(b)) * (p - 1) ** 2).bit_length() // 8 + 1
    ia = int.from_bytes(b"".join(x.to_bytes(width, "little") for x in a), "little")
    ib = int.from_bytes(b"".join(x.to_bytes(width, "little") for x in b), "little")
    n = len(a) + len(b) - 1
    raw = (ia * ib).to_bytes(n * width, "little")
    return _trim([int.from_bytes(raw[k:k + width], "little") % p for k in range(0, n * width, width)])


def poly_divmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    inv = pow(b[-1], p - 2, p)
    bm = b[:db] if inv == 1 else [x * inv % p for x in b[:db]]
    r = list(a)
    q = [0] * (len(a) - db)
    # p is small, so reduction can wait: only the leading coefficient is reduced per step
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] % p
        if c:
            q[k] = c
            r[k:k + db] = [x - c * y for x, y in zip(r[k:k + db], bm)]
    if inv != 1:
        q = [x * inv % p for x in q]
    return _trim(q), _trim([x % p for x in r[:db]])


def _rem_monic(a: list, bm: list, p: int) -> list:
    """Remainder of a modulo a monic divisor whose low coefficients are bm."""
    db = len(bm)
    r = a
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] % p
        if c:
            r[k:k + db] = [x - c * y for x, y in zip(r[k:k + db], bm)]
    r = [x % p for x in r[:db]]
    while r and r[-1] == 0:
        r.pop()
    return r


def poly_monic(a: Poly, p: int) -> Poly:
    if not a or a[-1] == 1:
        return a
    return poly_scale(a, pow(a[-1], p - 2, p), p)


def poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return poly_monic(a, p)
    a, b = list(a), list(poly_monic(b, p))
    while True:
        if len(b) == 1:
            return (1,)
        a = _rem_monic(a, b[:-1], p)
        if not a:
            return tuple(b)
        inv = pow(a[-1], p - 2, p)
        if inv != 1:
            a = [x * inv % p for x in a]
        a, b = b, a


def poly_deriv(a: Poly, p: int) -> Poly:
    return _trim([i * a[i] % p for i in range(1, len(a))])


def poly_from_ints(coeffs, p: int) -> Poly:
    return _trim([int(c) % p for c in coeffs])


# ---------------------------------------------------------------------------


class RatFun:
    """An element of F_p(z) in canonical reduced form.

    Supports ``+ - * / **`` with other elements of the same field and with
    Python ints (read modulo p).
    """

    __slots__ = ("num", "den", "p", "_hash")

    def __init__(self, num, den=(1,), p: int | None = None):
        if p is None:
            raise TypeError("RatFun requires the characteristic p")
        n, d = _normalize(poly_from_ints(num, p), poly_from_ints(den, p), p)
        self._set(n, d, p)

    def _set(self, num: Poly, den: Poly, p: int) -> None:
        self.num = num
        self.den = den
        self.p = p
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly, p: int) -> RatFun:
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._set(num, den, p)
        return obj

    @classmethod
    def _from_parts(cls, num: Poly, den: Poly, p: int) -> RatFun:
        return cls._raw(*_normalize(num, den, p), p)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den == (1,)

    def is_constant(self) -> bool:
        """True for elements of the prime field F_p."""
        return self.den == (1,) and len(self.num) <= 1

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> RatFun:
        if isinstance(other, RatFun):
            if other.p != self.p:
                raise ValueError(f"field mismatch: F_{self.p}(z) vs F_{other.p}(z)")
            return other
        if isinstance(other, int):
            return const(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        if not other.num:
            return self
        if not self.num:
            return other
        b, d = self.den, other.den
        if b == d:
            return RatFun._from_parts(poly_add(self.num, other.num, p), b, p)
        # Henrici: only gcds of denominators, result comes out reduced
        g = poly_gcd(b, d, p)
        if g == (1,):
            num = poly_add(poly_mul(self.num, d, p), poly_mul(other.num, b, p), p)
            if not num:
                return RatFun._raw((), (1,), p)
            return RatFun._raw(num, poly_mul(b, d, p), p)
        b1 = poly_divmod(b, g, p)[0]
        d1 = poly_divmod(d, g, p)[0]
        t = poly_add(poly_mul(self.num, d1, p), poly_mul(other.num, b1, p), p)
        if not t:
            return RatFun._raw((), (1,), p)
        g2 = poly_gcd(t, g, p)
        if g2 != (1,):
            t = poly_divmod(t, g2, p)[0]
            d = poly_divmod(d, g2, p)[0]
        return RatFun._raw(t, poly_mul(b1, d, p), p)

    __radd__ = __add__

    def __neg__(self) -> RatFun:
        return RatFun._raw(poly_scale(self.num, -1, self.p), self.den, self.p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        if not self.num or not other.num:
            return RatFun._raw((), (1,), p)
        # cross-cancel so the product is already reduced
        g1 = poly_gcd(self.num, other.den, p)
        g2 = poly_gcd(other.num, self.den, p)
        a = poly_divmod(self.num, g1, p)[0] if len(g1) > 1 else self.num
        d = poly_divmod(other.den, g1, p)[0] if len(g1) > 1 else other.den
        c = poly_divmod(other.num, g2, p)[0] if len(g2) > 1 else other.num
        b = poly_divmod(self.den, g2, p)[0] if len(g2) > 1 else self.den
        num = poly_mul(a, c, p)
        den = poly_mul(b, d, p)
        lead = den[-1]
        if lead != 1:
            inv = pow(lead, p - 2, p)
            num, den = poly_scale(num, inv, p), poly_scale(den, inv, p)
        return RatFun._raw(num, den, p)

    __rmul__ = __mul__

    def inverse(self) -> RatFun:
        if not self.num:
            raise ZeroDivisionError("inverse of zero in F_p(z)")
        p = self.p
        inv = pow(self.num[-1], p - 2, p)
        return RatFun._raw(poly_scale(self.den, inv, p), poly_scale(self.num, inv, p), p)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> RatFun:
        if k < 0:
            return self.inverse() ** (-k)
        result = const(1, self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / display --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFun):
            return self.p == other.p and self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self.den == (1,) and self.num == poly_from_ints([other], self.p)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"RatFun({format_ratfun(self)!r}, p={self.p})"

    def __str__(self) -> str:
        return format_ratfun(self)

    def degrees(self) -> tuple[int, int]:
        """(deg num, deg den); the zero element reports -1 for the numerator."""
        return len(self.num) - 1, len(self.den) - 1


def _normalize(num: Poly, den: Poly, p: int) -> tuple[Poly, Poly]:
    """Reduce ``num/den`` to lowest terms with a monic denominator."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), (1,)
    g = poly_gcd(num, den, p)
    if len(g) > 1:
        num = poly_divmod(num, g, p)[0]
        den = poly_divmod(den, g, p)[0]
    lead = den[-1]
    if lead != 1:
        inv = pow(lead, p - 2, p)
        num, den = poly_scale(num, inv, p), poly_scale(den, inv, p)
    return num, den


def normalize(num, den, p: int) -> RatFun:
    """Canonical RatFun for num/den; coefficient sequences are reduced mod p first."""
    return RatFun(num, den, p)


# Function spellings of the field operations, for callers that prefer them.

def rf_add(a: RatFun, b) -> RatFun:
    return a + b


def rf_sub(a: RatFun, b) -> RatFun:
    return a - b


def rf_mul(a: RatFun, b) -> RatFun:
    return a * b


def rf_div(a: RatFun, b) -> RatFun:
    return a / b


def rf_inv(a: RatFun) -> RatFun:
    return a.inverse()


def rf_pow(a: RatFun, k: int) -> RatFun:
    return a ** k


def const(c: int, p: int) -> RatFun:
    c %= p
    return RatFun._raw((c,) if c else (), (1,), p)


def zvar(p: int) -> RatFun:
    return RatFun._raw((0, 1), (1,), p)


def as_ratfun(value, p: int) -> RatFun:
    """Accept a RatFun, an int, or text in the rational-function grammar."""
    if isinstance(value, RatFun):
        if value.p != p:
            raise ValueError(f"field mismatch: F_{value.p}(z) vs F_{p}(z)")
        return value
    if isinstance(value, int):
        return const(value, p)
    if isinstance(value, str):
        return parse_ratfun(value, p)
    raise TypeError(f"cannot interpret {value!r} as an element of F_{p}(z)")


# ---------------------------------------------------------------------------
# derivations


def _z_derivative(f: RatFun) -> RatFun:
    p = f.p
    if not f.num:
        return f
    dn = poly_deriv(f.num, p)
    if f.den == (1,):
        return RatFun._raw(dn, (1,), p)
    dd = poly_deriv(f.den, p)
    num = poly_sub(poly_mul(dn, f.den, p), poly_mul(f.num, dd, p), p)
    return RatFun._from_parts(num, poly_mul(f.den, f.den, p), p)


def _derive(f: RatFun, dz: RatFun) -> RatFun:
    return _z_derivative(f) * dz


def compute_gamma(p: int, dz: RatFun) -> RatFun:
    """gamma = delta^p(z) / delta(z), the coefficient in delta^p = gamma * delta."""
    if not dz:
        raise ValueError("delta(z) must be nonzero")
    f = dz  # delta(z)
    for _ in range(p - 1):
        f = _derive(f, dz)
    gamma = f / dz
    if _derive(gamma, dz):
        raise ArithmeticError(f"gamma={gamma} is not a constant of the derivation")
    return gamma


@dataclass(frozen=True)
class Derivation:
    """The derivation of F_p(z) sending z to ``dz``.

    ``gamma`` is computed eagerly; instances compare equal iff ``p`` and
    ``dz`` agree.
    """

    p: int
    dz: RatFun
    gamma: RatFun = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        check_prime(self.p)
        dz = as_ratfun(self.dz, self.p)
        object.__setattr__(self, "dz", dz)
        object.__setattr__(self, "gamma", compute_gamma(self.p, dz))

    def __call__(self, f: RatFun) -> RatFun:
        return _derive(f, self.dz)

    def iterate(self, f: RatFun, k: int) -> RatFun:
        for _ in range(k):
            if not f.num:
                break
            f = _derive(f, self.dz)
        return f

    def orbit(self, f: RatFun, n: int) -> list[RatFun]:
        """[f, delta(f), ..., delta^(n-1)(f)]."""
        out = []
        for _ in range(n):
            out.append(f)
            f = _derive(f, self.dz)
        return out

    def const(self, c: int) -> RatFun:
        return const(c, self.p)

    def parse(self, text: str, strict: bool | None = None) -> RatFun:
        return parse_ratfun(text, self.p, strict=strict)

    def __str__(self) -> str:
        return f"delta(z) = {format_ratfun(self.dz)} over F_{self.p}"


def derive(f: RatFun, D: Derivation) -> RatFun:
    return D(f)


def iterate_derive(f: RatFun, D: Derivation, k: int) -> RatFun:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return D.iterate(f, k)


def in_constant_field(f: RatFun, D: Derivation) -> bool:
    return not D(f)


# ---------------------------------------------------------------------------
# text format


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|(z)|([-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("z", "z", m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, p: int, strict: bool):
        self.text = text
        self.p = p
        self.strict = strict
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", self.text, tok[2])
        self.i += 1
        return tok

    def coeff(self, tok) -> int:
        c = int(tok[1])
        if c >= self.p and self.strict:
            raise ParseError(f"coefficient {c} not in [0, {self.p})", self.text, tok[2])
        return c % self.p

    def exponent(self) -> int:
        if self.peek()[1] == "^":
            self.take()
            return int(self.take("int")[1])
        return 1

    def term(self) -> Poly:
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            c = self.coeff(tok)
            if self.peek()[1] == "*":
                self.take()
                self.take("z")
                e = self.exponent()
            else:
                e = 0
        elif tok[0] == "z":
            self.take()
            c, e = 1, self.exponent()
        else:
            raise ParseError(f"expected a term, found {tok[1] or 'end of input'!r}", self.text, tok[2])
        return _trim([0] * e + [c])

    def poly(self) -> Poly:
        p = self.p
        sign = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        acc = poly_scale(self.term(), sign, p)
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            acc = poly_add(acc, t, p) if op == "+" else poly_sub(acc, t, p)
        return acc

    def side(self) -> Poly:
        if self.peek()[1] == "(":
            self.take()
            out = self.poly()
            self.take("op", ")")
            return out
        return self.poly()

    def ratfun(self) -> RatFun:
        num = self.side()
        den = (1,)
        if self.peek()[1] == "/":
            tok = self.take()
            den = self.side()
            if not den:
                raise ParseError("zero denominator", self.text, tok[2])
        self.take("end")
        return RatFun._from_parts(num, den, self.p)


def _strict_default() -> bool:
    return os.environ.get("DIFFCONV_STRICT", "") == "1"


def parse_ratfun(text: str, p: int, strict: bool | None = None) -> RatFun:
    """Parse ``poly``, ``poly/poly`` or ``(poly)/(poly)``.

    In strict mode coefficients must lie in ``[0, p)``; otherwise they are
    reduced mod p.  ``strict=None`` reads ``DIFFCONV_STRICT``.
    """
    if strict is None:
        strict = _strict_default()
    return _Parser(text, p, strict).ratfun()


def _format_poly(a: Poly) -> str:
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
            continue
        mono = "z" if e == 1 else f"z^{e}"
        parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts)


def format_ratfun(f: RatFun) -> str:
    """Canonical text: ``(num)/(den)``, with ``/(1)`` omitted."""
    if f.den == (1,):
        return f"({_format_poly(f.num)})"
    return f"({_format_poly(f.num)})/({_format_poly(f.den)})"

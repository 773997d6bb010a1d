"""Reed-Solomon differential convolutional codes.

A code of length p and designed distance d is the left ideal of
R/R(x^p - gamma x) generated by

    g = llcm(x - L(delta^r(alpha)), ..., x - L(delta^(r+d-2)(alpha)))

for a cyclic vector alpha.  Its dimension is p - d + 1 and its minimum
Hamming distance is d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .linalg import FunMatrix, is_invertible, solve_left, submatrix, vec_mat, wronskian
from .ore import OrePoly, central_element, coords, llcm_many, log_derivative, n_values, ore_mul, right_divmod, x_minus
from .rfield import Derivation, RatFun, as_ratfun, check_prime, const

__all__ = [
    "CodeError",
    "NotCyclicVector",
    "NotACodeword",
    "CodeSpec",
    "build_code",
    "generator_by_linear_system",
    "build_n_matrix",
    "parity_check",
    "encode",
    "unencode",
    "is_codeword",
]


class CodeError(ValueError):
    pass


class NotCyclicVector(CodeError):
    pass


class NotACodeword(CodeError):
    pass


@dataclass(frozen=True, eq=False)
class CodeSpec:
    """Immutable description of an RS differential convolutional code.

    ``orbit[i]`` holds delta^i(alpha) for 0 <= i < 2p, and ``roots[j]`` holds
    L(delta^j(alpha)) for 0 <= j < p.  ``nmat[i, j] = N_i(roots[j])``.
    """

    D: Derivation
    alpha: RatFun
    d: int
    r: int
    g: OrePoly
    nmat: FunMatrix = field(repr=False)
    hmat: FunMatrix = field(repr=False)
    orbit: tuple = field(repr=False)
    roots: tuple = field(repr=False)

    @property
    def p(self) -> int:
        return self.D.p

    @property
    def gamma(self) -> RatFun:
        return self.D.gamma

    @property
    def tau(self) -> int:
        return (self.d - 1) // 2

    @property
    def dimension(self) -> int:
        return self.p - self.d + 1

    def __str__(self) -> str:
        return (f"RS differential convolutional code over F_{self.p}(z): "
                f"delta(z)={self.D.dz}, alpha={self.alpha}, d={self.d}, r={self.r}, "
                f"dim={self.dimension}, tau={self.tau}")


def build_n_matrix(D: Derivation, roots: Sequence[RatFun]) -> FunMatrix:
    """p x p matrix with entry (i, j) = N_i(L(delta^j(alpha)))."""
    p = D.p
    columns = [n_values(a, p - 1, D) for a in roots]
    return FunMatrix._raw([[col[i] for col in columns] for i in range(p)], p, len(roots))


def parity_check(D: Derivation, orbit: Sequence[RatFun], d: int, r: int) -> FunMatrix:
    """The p x (d-1) Wronskian W_p(delta^r(alpha), ..., delta^(r+d-2)(alpha))."""
    if d == 1:
        return FunMatrix._raw([[] for _ in range(D.p)], D.p, 0)
    return wronskian(list(orbit[r:r + d - 1]), D.p, D)


def generator_by_linear_system(D: Derivation, nmat: FunMatrix, d: int, r: int) -> OrePoly:
    """The unique monic degree-(d-1) element of the code, from N.

    Solves (g_0, ..., g_(d-2)) A = -b where A is the top (d-1) x (d-1) block of
    the columns r..r+d-2 of N and b is row d-1 of the same columns.
    """
    if d == 1:
        return OrePoly.one(D)
    m = d - 1
    cols = range(r, r + m)
    A = submatrix(nmat, range(m), cols)
    b = [-nmat[m, j] for j in cols]
    sol = solve_left(A, b)
    return OrePoly(sol + [const(1, D.p)], D)


def build_code(p: int, dz, alpha, d: int, r: int = 0) -> CodeSpec:
    """Construct and verify the RS differential convolutional code.

    ``dz`` and ``alpha`` may be RatFun values, ints or text.  Every structural
    invariant is checked here; a failure raises instead of producing a spec.
    """
    check_prime(p)
    if not isinstance(d, int) or not 1 <= d <= p:
        raise CodeError(f"designed distance out of range: need 1 <= d <= {p}, got {d}")
    if not isinstance(r, int) or not 0 <= r <= p - d:
        raise CodeError(f"offset out of range: need 0 <= r <= {p - d}, got {r}")
    dz = as_ratfun(dz, p)
    if not dz:
        raise CodeError("delta(z) must be nonzero")
    D = Derivation(p, dz)
    alpha = as_ratfun(alpha, p)
    if not alpha:
        raise NotCyclicVector("alpha = 0 is not a cyclic vector")

    orbit = tuple(D.orbit(alpha, 2 * p))
    if not is_invertible(wronskian(list(orbit[:p]), p, D)):
        raise NotCyclicVector(f"alpha = {alpha} is not a cyclic vector for {D}")
    roots = tuple(log_derivative(a, D) for a in orbit[:p])

    g = llcm_many([x_minus(roots[r + i], D) for i in range(d - 1)], D)
    if g.degree != d - 1:
        raise ArithmeticError(f"generator has degree {g.degree}, expected {d - 1}")
    if right_divmod(central_element(D), g)[1]:
        raise ArithmeticError("generator does not right-divide x^p - gamma x")

    nmat = build_n_matrix(D, roots)
    if generator_by_linear_system(D, nmat, d, r) != g:
        raise ArithmeticError("llcm and linear-system generators disagree")
    hmat = parity_check(D, orbit, d, r)
    return CodeSpec(D=D, alpha=alpha, d=d, r=r, g=g, nmat=nmat, hmat=hmat, orbit=orbit, roots=roots)


def encode(message: Sequence, spec: CodeSpec) -> list[RatFun]:
    """Coordinates of m*g, where m is given by its p-d+1 coefficients."""
    if len(message) != spec.dimension:
        raise CodeError(f"message length {len(message)} != code dimension {spec.dimension}")
    m = OrePoly(message, spec.D)
    return coords(ore_mul(m, spec.g))


def unencode(word: Sequence, spec: CodeSpec) -> list[RatFun]:
    """Recover the message from a codeword by right division by g."""
    if len(word) != spec.p:
        raise CodeError(f"word length {len(word)} != {spec.p}")
    q, rem = right_divmod(OrePoly(word, spec.D), spec.g)
    if rem:
        raise NotACodeword("word is not a left multiple of the generator")
    return q.padded(spec.dimension)


def is_codeword(word: Sequence, spec: CodeSpec) -> bool:
    if len(word) != spec.p:
        raise CodeError(f"word length {len(word)} != {spec.p}")
    if spec.d == 1:
        return True
    w = [as_ratfun(c, spec.p) for c in word]
    return not any(vec_mat(w, spec.hmat))

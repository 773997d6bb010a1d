"""Peterson-Gorenstein-Zierler style decoding for RS differential convolutional codes.

Two entry points:

* :func:`decode_basic` raises :class:`DecodingFailure` when the locator
  divisor extracted from the syndrome table is not fully alpha-decomposable,
  which happens exactly when the error values are linearly dependent over
  the constant field.
* :func:`decode` handles that case by reading the error positions off the
  reduced row echelon form of M_rho * N, and always succeeds for at most
  tau errors.

Only codes with offset r = 0 are decodable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .code import CodeSpec, is_codeword, unencode
from .linalg import FunMatrix, is_invertible, rank, rcef, rref, solve_left
from .ore import OrePoly, coords, ore_mul
from .rfield import RatFun, as_ratfun, const

__all__ = [
    "DecodingError",
    "DecodingFailure",
    "BeyondCapacity",
    "SyndromeTable",
    "LocatorDivisor",
    "ErrorVector",
    "ZeroError",
    "syndromes",
    "syndrome_table",
    "locator_divisor",
    "evaluate_locator",
    "candidate_positions",
    "positions_matrix",
    "full_positions",
    "error_values",
    "decode_basic",
    "decode",
    "decode_traced",
    "correct",
]


class DecodingError(Exception):
    pass


class DecodingFailure(DecodingError):
    """The basic decoder found fewer right roots than the locator divisor degree."""

    def __init__(self, mu: int, positions: Sequence[int]):
        super().__init__(f"decoding failure: locator divisor has degree {mu} "
                         f"but {len(positions)} right root(s) {sorted(positions)}")
        self.mu = mu
        self.positions = tuple(positions)


class BeyondCapacity(DecodingError):
    """An internal consistency check failed; the word is not within tau errors of the code."""


@dataclass(frozen=True)
class SyndromeTable:
    s: tuple  # s_0 .. s_(2 tau - 1)
    table: FunMatrix  # (tau+1) x tau block of S_{i,k}


@dataclass(frozen=True)
class LocatorDivisor:
    mu: int
    rho: OrePoly


@dataclass(frozen=True)
class ErrorVector:
    positions: tuple
    values: tuple

    def __post_init__(self):
        if len(self.positions) != len(self.values):
            raise ValueError("positions and values differ in length")
        if len(set(self.positions)) != len(self.positions):
            raise ValueError("duplicate error position")

    @property
    def weight(self) -> int:
        return len(self.positions)

    def to_vector(self, p: int) -> list[RatFun]:
        out = [const(0, p)] * p
        for k, e in zip(self.positions, self.values):
            out[k] = e
        return out

    def __str__(self) -> str:
        if not self.positions:
            return "0"
        terms = []
        for k, e in zip(self.positions, self.values):
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(str(e) + (f"*{mono}" if mono else ""))
        return " + ".join(terms)


class ZeroError(ErrorVector):
    """Returned when every syndrome vanishes: the received word is a codeword."""

    def __init__(self):
        super().__init__((), ())


def _check_decodable(spec: CodeSpec, y: Sequence) -> list[RatFun]:
    if spec.r != 0:
        raise NotImplementedError("decoding is only available for codes with offset r = 0")
    if len(y) != spec.p:
        raise ValueError(f"received word has length {len(y)}, expected {spec.p}")
    return [as_ratfun(c, spec.p) for c in y]


def syndromes(y: Sequence, spec: CodeSpec) -> list[RatFun]:
    """s_i = y[L(delta^i(alpha))] for 0 <= i < 2 tau."""
    y = _check_decodable(spec, y)
    N = spec.nmat
    zero = const(0, spec.p)
    out = []
    for i in range(2 * spec.tau):
        acc = zero
        for j, yj in enumerate(y):
            if yj:
                acc = acc + yj * N[j, i]
        out.append(acc)
    return out


def syndrome_table(s: Sequence[RatFun], spec: CodeSpec) -> SyndromeTable:
    """S_{i,0} = s_i delta^i(alpha); S_{i,k+1} = delta(S_{i,k}) - S_{i+1,k}."""
    tau = spec.tau
    if len(s) != 2 * tau:
        raise ValueError(f"expected {2 * tau} syndromes, got {len(s)}")
    D = spec.D
    col = [si * spec.orbit[i] for i, si in enumerate(s)]
    columns = [col]
    for _ in range(1, tau):
        col = [D(col[i]) - col[i + 1] for i in range(len(col) - 1)]
        columns.append(col)
    block = [[columns[k][i] for k in range(tau)] for i in range(tau + 1)]
    return SyndromeTable(tuple(s), FunMatrix._raw(block, spec.p, tau))


def locator_divisor(table: SyndromeTable | FunMatrix, spec: CodeSpec) -> LocatorDivisor:
    """Read rho = x^mu - sum a_i x^i off the reduced column echelon form of S^tau."""
    S = table.table if isinstance(table, SyndromeTable) else table
    p = spec.p
    E = rcef(S)
    mu = rank(S)
    one, zero = const(1, p), const(0, p)
    if mu == 0:
        raise BeyondCapacity("syndrome table is zero although syndromes are not")
    for i in range(mu):
        for j in range(S.cols):
            if E[i, j] != (one if i == j else zero):
                raise BeyondCapacity("reduced column echelon form of S^tau has unexpected shape")
    if any(E[i, j] for i in range(S.rows) for j in range(mu, S.cols)):
        raise BeyondCapacity("reduced column echelon form of S^tau has unexpected shape")
    a = [E[mu, j] for j in range(mu)]
    rho = OrePoly([-c for c in a] + [one], spec.D)
    return LocatorDivisor(mu, rho)


def evaluate_locator(rho: OrePoly, spec: CodeSpec) -> list[RatFun]:
    """(rho_0, ..., rho_mu, 0, ..., 0) * N: the right evaluations of rho at every root."""
    N = spec.nmat
    zero = const(0, spec.p)
    out = []
    for j in range(spec.p):
        acc = zero
        for i, c in enumerate(rho.coeffs):
            if c:
                acc = acc + c * N[i, j]
        out.append(acc)
    return out


def candidate_positions(rho: OrePoly, spec: CodeSpec) -> list[int]:
    return [j for j, v in enumerate(evaluate_locator(rho, spec)) if not v]


def _is_unit_row(row) -> bool:
    nz = [e for e in row if e]
    return len(nz) == 1 and nz[0] == 1


def positions_matrix(rho: OrePoly, spec: CodeSpec) -> FunMatrix:
    """H_rho = rref(M_rho * N), where M_rho has rows coords(x^i rho), i <= p-1-mu."""
    p = spec.p
    D = spec.D
    rows = []
    f = rho
    x = OrePoly.x(D)
    for _ in range(p - rho.degree):
        rows.append(coords(f))
        f = ore_mul(x, f)
    M = FunMatrix._raw(rows, p, p)
    return rref(M @ spec.nmat)


def full_positions(rho: OrePoly, spec: CodeSpec) -> list[int]:
    """Zero columns of H_rho after deleting every row that is not a unit vector."""
    H = positions_matrix(rho, spec)
    kept = [H.row(i) for i in range(H.rows) if _is_unit_row(H.row(i))]
    return [j for j in range(spec.p) if not any(r[j] for r in kept)]


def error_values(positions: Sequence[int], s: Sequence[RatFun], spec: CodeSpec) -> list[RatFun]:
    """Solve sum_j e_j delta^(k_j + i)(alpha) = delta^i(alpha) s_i for i < v."""
    v = len(positions)
    if not 1 <= v <= len(s):
        raise ValueError(f"cannot solve for {v} error values with {len(s)} syndromes")
    orbit = spec.orbit  # holds delta^n(alpha) for n < 2p > k + i
    A = FunMatrix._raw([[orbit[k + i] for i in range(v)] for k in positions], spec.p, v)
    b = [orbit[i] * s[i] for i in range(v)]
    if not is_invertible(A):
        raise BeyondCapacity("error-value system is singular")
    return solve_left(A, b)


def decode_traced(y: Sequence, spec: CodeSpec, full: bool = True) -> tuple[ErrorVector, bool]:
    """Decode and also report whether the basic decoder would have failed."""
    y = _check_decodable(spec, y)
    s = syndromes(y, spec)
    if not any(s):
        if not is_codeword(y, spec):
            raise BeyondCapacity("syndromes vanish but the word fails the parity check")
        return ZeroError(), False
    table = syndrome_table(s, spec)
    div = locator_divisor(table, spec)
    positions = candidate_positions(div.rho, spec)
    basic_failed = len(positions) != div.mu
    if basic_failed:
        if not full:
            raise DecodingFailure(div.mu, positions)
        positions = full_positions(div.rho, spec)
    if not 1 <= len(positions) <= spec.tau:
        raise BeyondCapacity(f"located {len(positions)} error positions, capacity is {spec.tau}")
    values = error_values(positions, s, spec)
    if not all(values):
        raise BeyondCapacity("a located error position has zero error value")
    err = ErrorVector(tuple(positions), tuple(values))
    residual = [a - b for a, b in zip(y, err.to_vector(spec.p))]
    if not is_codeword(residual, spec):
        raise BeyondCapacity("corrected word is not a codeword")
    return err, basic_failed


def decode_basic(y: Sequence, spec: CodeSpec) -> ErrorVector:
    """Decoder that may report :class:`DecodingFailure` on K-dependent error values."""
    return decode_traced(y, spec, full=False)[0]


def decode(y: Sequence, spec: CodeSpec) -> ErrorVector:
    """Full decoder: finds every error pattern of weight at most tau."""
    return decode_traced(y, spec, full=True)[0]


def correct(y: Sequence, spec: CodeSpec) -> tuple[list[RatFun], list[RatFun]]:
    """Return (codeword, message) recovered from the received word."""
    err = decode(y, spec)
    y = [as_ratfun(c, spec.p) for c in y]
    c = [a - b for a, b in zip(y, err.to_vector(spec.p))]
    return c, unencode(c, spec)

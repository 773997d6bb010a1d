"""Error-channel simulation and the distributed-storage view of codewords.

In the storage setting every coordinate of a codeword is shipped to its own
node, so a corrupted node is a single Hamming error.  ``run_trials`` checks
decoding exactly against planted errors; there is no tolerance.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import ClassVar, Sequence

from .code import CodeSpec, CodeError, NotCyclicVector, build_code, encode, unencode
from .pgz import ZeroError, decode_traced
from .rfield import RatFun, as_ratfun, format_ratfun, normalize, poly_from_ints

__all__ = [
    "TrialConfig",
    "TrialReport",
    "TrialMismatch",
    "NodePayload",
    "inject_errors",
    "random_ratfun",
    "random_message",
    "random_error",
    "random_code",
    "trial_rng",
    "run_trials",
    "sentence_to_nodes",
    "nodes_to_sentence",
    "stream_payload",
]


class TrialMismatch(AssertionError):
    """Decoded output differs from the planted instance."""


def inject_errors(c: Sequence[RatFun], positions: Sequence[int], values: Sequence) -> list[RatFun]:
    """y = c + e with e supported on ``positions``."""
    if len(positions) != len(values):
        raise ValueError("positions and values differ in length")
    if len(set(positions)) != len(positions):
        raise ValueError(f"duplicate error position in {list(positions)}")
    y = list(c)
    p = y[0].p if y else None
    for k, v in zip(positions, values):
        if not 0 <= k < len(y):
            raise ValueError(f"error position {k} outside [0, {len(y)})")
        v = as_ratfun(v, p)
        if not v:
            raise ValueError(f"zero error value at position {k}")
        y[k] = y[k] + v
    return y


def random_ratfun(p: int, degree_bound: int, rng: random.Random, nonzero: bool = False) -> RatFun:
    """Uniform numerator and nonzero denominator of degree <= degree_bound, normalized."""
    while True:
        num = poly_from_ints([rng.randrange(p) for _ in range(degree_bound + 1)], p)
        den = poly_from_ints([rng.randrange(p) for _ in range(degree_bound + 1)], p)
        if not den or (nonzero and not num):
            continue
        return normalize(num, den, p)


def random_message(spec: CodeSpec, degree_bound: int, rng: random.Random) -> list[RatFun]:
    return [random_ratfun(spec.p, degree_bound, rng) for _ in range(spec.dimension)]


def random_error(spec: CodeSpec, v: int, degree_bound: int, rng: random.Random):
    """v distinct positions and v nonzero random values."""
    if not 1 <= v <= spec.tau:
        raise ValueError(f"error weight {v} outside [1, {spec.tau}]")
    positions = sorted(rng.sample(range(spec.p), v))
    values = [random_ratfun(spec.p, degree_bound, rng, nonzero=True) for _ in range(v)]
    return positions, values


_DZ_CHOICES = ("1", "z", "z + 1", "2*z", "z^2")
_ALPHA_CHOICES = ("1/z", "1/(z + 1)", "1/(z + 2)", "z/(z + 1)", "z^2")


def random_code(p: int, d: int, rng: random.Random, max_tries: int = 50) -> CodeSpec:
    """A decodable (r = 0) code with small delta(z) and alpha drawn from a fixed menu."""
    for _ in range(max_tries):
        dz = rng.choice(_DZ_CHOICES)
        alpha = rng.choice(_ALPHA_CHOICES)
        try:
            return build_code(p, dz, alpha, d, 0)
        except NotCyclicVector:
            continue
    raise CodeError(f"no cyclic vector found for p={p} in {max_tries} tries")


def trial_rng(seed: int, index: int) -> random.Random:
    # independent stream per trial, so results do not depend on scheduling
    return random.Random(f"diffconv:{seed}:{index}")


@dataclass(frozen=True)
class TrialConfig:
    spec: CodeSpec
    trials: int
    max_errors: int
    value_degree_bound: int = 2
    seed: int = 0
    exact_errors: bool = False  # every trial uses exactly max_errors errors

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 <= self.max_errors <= self.spec.tau:
            raise ValueError(f"max_errors must lie in [0, {self.spec.tau}]")
        if self.value_degree_bound < 0:
            raise ValueError("value_degree_bound must be >= 0")


@dataclass
class TrialReport:
    trials: int
    successes: int = 0
    basic_failures: int = 0
    total_errors: int = 0
    seed: int = 0

    KEYS: ClassVar[tuple] = ("trials", "successes", "basic_failures", "mean_errors", "seed")

    @property
    def mean_errors(self) -> float:
        return self.total_errors / self.trials if self.trials else 0.0

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.KEYS}

    def to_text(self) -> str:
        return "\n".join(f"{k}={v}" for k, v in self.as_dict().items())

    def summary(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


def _dump(spec, msg, positions, values, detail) -> str:
    return (f"{detail}\n  code: {spec}\n"
            f"  message: {[format_ratfun(c) for c in msg]}\n"
            f"  positions: {positions}\n  values: {[format_ratfun(v) for v in values]}")


def run_one(spec: CodeSpec, cfg: TrialConfig, index: int) -> tuple[int, bool]:
    """Run trial ``index``; return (planted weight, whether the basic decoder failed)."""
    rng = trial_rng(cfg.seed, index)
    msg = random_message(spec, cfg.value_degree_bound, rng)
    c = encode(msg, spec)
    if cfg.exact_errors or cfg.max_errors == 0:
        v = cfg.max_errors
    else:
        v = rng.randint(1, cfg.max_errors)
    positions, values = random_error(spec, v, cfg.value_degree_bound, rng) if v else ([], [])
    y = inject_errors(c, positions, values)

    err, basic_failed = decode_traced(y, spec)
    if v == 0:
        if not isinstance(err, ZeroError):
            raise TrialMismatch(_dump(spec, msg, positions, values, f"trial {index}: expected ZeroError, got {err}"))
    elif list(err.positions) != positions or list(err.values) != values:
        raise TrialMismatch(_dump(spec, msg, positions, values, f"trial {index}: decoded {err}"))
    corrected = [a - b for a, b in zip(y, err.to_vector(spec.p))]
    if corrected != c or unencode(corrected, spec) != msg:
        raise TrialMismatch(_dump(spec, msg, positions, values, f"trial {index}: message not recovered"))
    return v, basic_failed


def run_trials(cfg: TrialConfig) -> TrialReport:
    report = TrialReport(trials=cfg.trials, seed=cfg.seed)
    for i in range(cfg.trials):
        v, basic_failed = run_one(cfg.spec, cfg, i)
        report.successes += 1
        report.basic_failures += basic_failed
        report.total_errors += v
    return report


@dataclass(frozen=True)
class NodePayload:
    """What node ``node`` stores: coordinate ``node`` of the codeword."""

    node: int
    data: RatFun

    @property
    def stream(self) -> tuple[int, ...]:
        """The F_p symbols sum_i v_(i,node) z^i of a polynomial coordinate."""
        if not self.data.is_polynomial():
            raise ValueError(f"node {self.node} holds a non-polynomial payload")
        return self.data.num


def sentence_to_nodes(c: Sequence[RatFun]) -> list[NodePayload]:
    return [NodePayload(j, cj) for j, cj in enumerate(c)]


def nodes_to_sentence(payloads: Sequence[NodePayload]) -> list[RatFun]:
    ordered = sorted(payloads, key=lambda n: n.node)
    if [n.node for n in ordered] != list(range(len(ordered))):
        raise ValueError("node indices must be exactly 0..n-1")
    return [n.data for n in ordered]


def stream_payload(node: int, symbols: Sequence[int], p: int) -> NodePayload:
    """Rebuild a node payload from its symbol stream."""
    return NodePayload(node, RatFun(symbols, (1,), p))

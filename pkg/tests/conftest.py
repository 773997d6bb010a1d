import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from diffconv.ore import OrePoly
from diffconv.rfield import Derivation, RatFun, parse_ratfun

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# (p, delta(z)) pairs exercised by the property suites
PRIMES = (3, 5, 7, 11, 13)
DZ_TEXTS = ("1", "z", "z + 1", "z^2")
PAIRS = [(p, dz) for p in PRIMES for dz in DZ_TEXTS]


def rand_poly(rng: random.Random, p: int, deg: int) -> list[int]:
    return [rng.randrange(p) for _ in range(deg + 1)]


def rand_ratfun(rng: random.Random, p: int, deg: int = 2, nonzero: bool = False) -> RatFun:
    while True:
        den = rand_poly(rng, p, deg)
        if not any(den):
            continue
        f = RatFun(rand_poly(rng, p, deg), den, p)
        if f or not nonzero:
            return f


def rand_ore(rng: random.Random, D: Derivation, deg: int, coeff_deg: int = 1, monic: bool = False) -> OrePoly:
    cs = [rand_ratfun(rng, D.p, coeff_deg) for _ in range(deg)]
    lead = RatFun([1], [1], D.p) if monic else rand_ratfun(rng, D.p, coeff_deg, nonzero=True)
    return OrePoly(cs + [lead], D)


# hypothesis strategies -------------------------------------------------------

def ratfuns(p: int, max_deg: int = 3, nonzero: bool = False):
    coeffs = st.lists(st.integers(0, p - 1), min_size=0, max_size=max_deg + 1)
    dens = st.lists(st.integers(0, p - 1), min_size=1, max_size=max_deg + 1).filter(any)
    out = st.builds(lambda n, d: RatFun(n, d, p), coeffs, dens)
    return out.filter(bool) if nonzero else out


@st.composite
def derivations(draw):
    p = draw(st.sampled_from(PRIMES))
    return Derivation(p, parse_ratfun(draw(st.sampled_from(DZ_TEXTS)), p))


@st.composite
def ore_polys(draw, D: Derivation, max_deg: int = 3):
    n = draw(st.integers(0, max_deg + 1))
    return OrePoly([draw(ratfuns(D.p, 2)) for _ in range(n)], D)


# acceptance reporting ----------------------------------------------------------

def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            for key, value in getattr(rep, "user_properties", []):
                if key == "criterion":
                    num, title = value
                    lines.append((num, "PASS" if outcome == "passed" else "FAIL", title, rep.duration))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for num, status, title, dur in sorted(lines):
        terminalreporter.write_line(f"criterion {num:2d}: {status}  {title}  ({dur:.2f}s)")


@pytest.fixture
def criterion(record_property):
    """Tag a test as acceptance criterion ``num`` and echo a pass/fail line for it."""

    def tag(num: int, title: str):
        record_property("criterion", (num, title))

    return tag

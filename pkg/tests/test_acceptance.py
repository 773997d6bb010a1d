"""Acceptance criteria 1-12.

Each test tags itself with ``criterion(num, title)``; the terminal summary then
prints one PASS/FAIL line per criterion.  Arithmetic is exact, so every
comparison is literal equality of canonical forms.  Runtime bounds are
asserted where a criterion states one.
"""

import itertools
import json
import random
import subprocess
import sys
import time

import pytest

from conftest import PAIRS, rand_ore, rand_ratfun
from diffconv.code import NotCyclicVector, build_code, encode, generator_by_linear_system
from diffconv.linalg import is_invertible, rcef, submatrix
from diffconv.ore import (
    OrePoly, central_element, gcrd, left_divmod, llcm, llcm_many, log_derivative, n_values, ore_mul, right_divmod,
    right_eval, x_minus,
)
from diffconv.pgz import (
    DecodingFailure, decode, decode_basic, decode_traced, evaluate_locator, full_positions, locator_divisor,
    positions_matrix, syndrome_table, syndromes,
)
from diffconv.rfield import Derivation, parse_ratfun
from diffconv.storage import TrialConfig, random_code, run_trials
from diffconv.worked_examples import golden


def vec(texts, p):
    return [parse_ratfun(t, p) for t in texts]


def grid(rows, p):
    return [vec(r, p) for r in rows]


class Clock:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


CODEWORD11 = ["3/z^6", "5/z^5", "3/z^4", "7/z^3", "8/z^2", "5/z", "3", "3*z", "9*z^2", "3*z^3", "z^4"]
TWO = ["3/z^6", "5/z^5", "3/z^4", "7/z^3", "8/z^2", "5/z", "0", "3*z", "0", "3*z^3", "z^4"]
THREE = ["3/z^6", "(z^5 + 5)/z^5", "3/z^4", "7/z^3", "8/z^2", "5/z", "0", "3*z", "9*z^2", "0", "z^4"]
ONE5 = ["2*z^2/(z^2 + 2*z + 1)", "(3*z + 4)/(z + 1)", "1", "0", "z"]


def test_c01_generator_p11(criterion):
    criterion(1, "generator reproduction, p=11")
    with Clock() as clk:
        spec = build_code(11, "1", "1/z", 7, 0)
    want = vec(["5/z^6", "8/z^5", "10/z^4", "2/z^3", "10/z^2", "3/z", "1"], 11)
    assert list(spec.g.coeffs) == want
    assert clk.elapsed < 1.0


def test_c02_generator_p5(criterion):
    criterion(2, "generator reproduction, p=5")
    with Clock() as clk:
        spec = build_code(5, "z", "1/(z + 1)", 3, 0)
        full = llcm_many([x_minus(a, spec.D) for a in spec.roots[:5]], spec.D)
    assert list(spec.g.coeffs) == vec(["2*z^2/(z^2 + 2*z + 1)", "(3*z + 4)/(z + 1)", "1"], 5)
    assert spec.gamma == 1
    assert full == OrePoly.x(spec.D, 5) - OrePoly.x(spec.D, 1)
    assert clk.elapsed < 1.0


def test_c03_encoding_golden(criterion):
    criterion(3, "encoding golden test")
    spec = build_code(11, "1", "1/z", 7)
    assert encode(vec(["1", "z", "0", "0", "z^4"], 11), spec) == vec(CODEWORD11, 11)


def test_c04_two_error_decode(criterion):
    criterion(4, "two-error decode, basic path")
    spec = build_code(11, "1", "1/z", 7)
    with Clock() as clk:
        y = vec(TWO, 11)
        s = syndromes(y, spec)
        table = syndrome_table(s, spec)
        div = locator_divisor(table, spec)
        rho_n = evaluate_locator(div.rho, spec)
        err = decode_basic(y, spec)
    assert table.table.tolist() == grid([["6/z^7", "9/z^8", "9/z^9"], ["4/z^8", "7/z^9", "7/z^10"],
                                         ["5/z^9", "7/z^10", "7/z^11"], ["3/z^10", "0", "0"]], 11)
    assert rcef(table.table).tolist() == grid([["1", "0", "0"], ["0", "1", "0"], ["3/z^2", "5/z", "0"],
                                               ["9/z^3", "1/z^2", "0"]], 11)
    assert list(div.rho.coeffs) == vec(["8/z^2", "6/z", "1"], 11)
    assert rho_n == vec(["4/z^2", "2/z^2", "2/z^2", "4/z^2", "8/z^2", "3/z^2", "0", "10/z^2", "0", "3/z^2",
                         "8/z^2"], 11)
    assert err.positions == (6, 8)
    assert list(err.values) == vec(["8", "2*z^2"], 11)
    assert clk.elapsed < 2.0


def test_c05_failure_then_recover(criterion):
    criterion(5, "failure then recovery, three errors")
    spec = build_code(11, "1", "1/z", 7)
    with Clock() as clk:
        y = vec(THREE, 11)
        with pytest.raises(DecodingFailure):
            decode_basic(y, spec)
        div = locator_divisor(syndrome_table(syndromes(y, spec), spec), spec)
        H = positions_matrix(div.rho, spec)
        positions = full_positions(div.rho, spec)
        err, basic_failed = decode_traced(y, spec)
    assert basic_failed
    assert list(H.row(1)) == vec(["0", "1", "0", "0", "0", "0", "8*z^5", "0", "0", "0", "0"], 11)
    assert positions == [1, 6, 9]
    assert err.positions == (1, 6, 9)
    assert list(err.values) == vec(["1", "8", "8*z^3"], 11)
    # e = x + 8x^6 + 8z^3x^9
    assert err.to_vector(11) == vec(["0", "1", "0", "0", "0", "0", "8", "0", "0", "8*z^3", "0"], 11)
    assert clk.elapsed < 5.0


def test_c06_single_error_p5(criterion):
    criterion(6, "single-error decode, p=5")
    spec = build_code(5, "z", "1/(z + 1)", 3)
    y = vec(ONE5, 5)
    div = locator_divisor(syndrome_table(syndromes(y, spec), spec), spec)
    rho_n = evaluate_locator(div.rho, spec)
    assert [i for i, v in enumerate(rho_n) if not v] == [4]
    err = decode(y, spec)
    assert err.positions == (4,) and err.values == (parse_ratfun("z", 5),)


# criterion 7 ------------------------------------------------------------------

def _leibniz(rng, D):
    a, b = rand_ratfun(rng, D.p, 2), rand_ratfun(rng, D.p, 2)
    return D(a * b) == a * D(b) + D(a) * b


def _p_power(rng, D):
    a = rand_ratfun(rng, D.p, 2)
    return D.iterate(a, D.p) == D.gamma * D(a)


def _division(rng, D):
    f = rand_ore(rng, D, rng.randint(0, 3))
    g = rand_ore(rng, D, rng.randint(0, 2))
    q, r = right_divmod(f, g)
    ql, rl = left_divmod(f, g)
    return (ore_mul(q, g) + r == f and r.degree < g.degree
            and ore_mul(g, ql) + rl == f and rl.degree < g.degree)


def _right_eval(rng, D):
    f = rand_ore(rng, D, rng.randint(0, 3))
    a = rand_ratfun(rng, D.p, 1)
    return right_eval(f, a) == right_divmod(f, x_minus(a, D))[1].coeff(0)


def _duality(rng, D):
    f = rand_ore(rng, D, rng.randint(1, 2))
    g = rand_ore(rng, D, rng.randint(1, 2))
    return llcm(f, g).degree + gcrd(f, g).degree == f.degree + g.degree


def _central(rng, D):
    c = central_element(D)
    f = rand_ore(rng, D, rng.randint(0, 2))
    return ore_mul(c, f) == ore_mul(f, c)


def _n_identity(rng, D):
    a = rand_ratfun(rng, D.p, 2, nonzero=True)
    k = rng.randint(0, D.p)
    return D.iterate(a, k) == n_values(log_derivative(a, D), k, D)[k] * a


PROPERTIES = {
    "Leibniz rule": _leibniz,
    "delta^p = gamma delta": _p_power,
    "division contract": _division,
    "right_eval = remainder": _right_eval,
    "llcm/gcrd degree duality": _duality,
    "centrality of x^p - gamma x": _central,
    "N_k identity": _n_identity,
}


def test_c07_property_suite(criterion):
    criterion(7, "property suite, 200 instances per (p, dz) pair")
    failures = []
    with Clock() as clk:
        for p, dz in PAIRS:
            D = Derivation(p, parse_ratfun(dz, p))
            for name, prop in PROPERTIES.items():
                rng = random.Random(f"{p}:{dz}:{name}")
                bad = sum(not prop(rng, D) for _ in range(200))
                if bad:
                    failures.append((p, dz, name, bad))
    assert failures == []
    assert clk.elapsed < 60.0, f"property suite took {clk.elapsed:.1f}s"


def test_c08_oracle_equivalence(criterion):
    criterion(8, "linear-system generator equals llcm route")
    rng = random.Random(2024)
    checked = 0
    while checked < 50:
        p = (5, 7, 11, 13)[checked % 4]
        d = rng.randint(2, p)
        r = rng.randint(0, p - d)
        try:
            spec = build_code(p, rng.choice(["1", "z", "z + 1", "2*z", "z^2"]), rand_ratfun(rng, p, 1, nonzero=True),
                              d, r)
        except NotCyclicVector:
            continue
        roots = spec.roots[r:r + d - 1]
        assert generator_by_linear_system(spec.D, spec.nmat, d, r) == llcm_many([x_minus(a, spec.D) for a in roots],
                                                                                spec.D)
        checked += 1


CONFIGS = [(p, d) for p in (5, 7, 11, 13) for d in (3, 5, 7) if d <= p]


@pytest.mark.slow
def test_c09_randomized_decoding(criterion):
    criterion(9, "end-to-end randomized decoding, 200 trials per config")
    rng = random.Random(9)
    with Clock() as clk:
        for p, d in CONFIGS:
            spec = random_code(p, d, rng)
            # run_trials raises on any mismatch in positions, values or message
            report = run_trials(TrialConfig(spec, 200, spec.tau, value_degree_bound=2, seed=p * 100 + d))
            assert report.successes == 200, (p, d, report.to_text())
    assert clk.elapsed < 600.0


def test_c10_failure_branch(criterion):
    criterion(10, "constant error values: basic decoder always fails, full decoder always succeeds")
    rng = random.Random(10)
    for p in (5, 7, 11, 13):
        spec = random_code(p, 5, rng)
        report = run_trials(TrialConfig(spec, 20, 2, value_degree_bound=0, seed=p, exact_errors=True))
        assert report.basic_failures == 20 and report.successes == 20, (p, report.to_text())


def test_c11_mds_submatrices(criterion):
    criterion(11, "parity-check row submatrices are invertible")
    H5 = build_code(5, "z", "1/(z + 1)", 3).hmat
    for rows in itertools.combinations(range(5), 2):
        assert is_invertible(submatrix(H5, rows))
    H11 = build_code(11, "1", "1/z", 7).hmat
    rng = random.Random(11)
    subsets = set()
    while len(subsets) < 100:
        subsets.add(tuple(sorted(rng.sample(range(11), 6))))
    for rows in sorted(subsets):
        assert is_invertible(submatrix(H11, rows))


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "diffconv", *args], capture_output=True, text=True)


def test_c12_cli_demos(criterion, tmp_path):
    criterion(12, "CLI demos and negative control")
    for which in ("p11", "p5"):
        proc = _cli("demo", which)
        assert proc.returncode == 0, proc.stderr
    record = golden("p11")
    record["scenarios"][0]["positions"] = [6, 9]
    path = tmp_path / "perturbed.json"
    path.write_text(json.dumps(record))
    proc = _cli("demo", "p11", "--golden", str(path))
    assert proc.returncode == 1


if __name__ == "__main__":
    # a fresh interpreter, so pytest sees hypothesis before anything imports it
    sys.exit(subprocess.call([sys.executable, "-m", "pytest", __file__, "-v", *sys.argv[1:]]))

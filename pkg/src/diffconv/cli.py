"""Command-line frontend.

Exit codes (stable):

    0  success
    1  verification failed: demo mismatch, trial mismatch, roundtrip mismatch
    2  usage or range error (e.g. designed distance out of range), unreadable file
    3  alpha is not a cyclic vector
    4  parse error in an input file or argument
    5  word is beyond the decoding capacity
    6  word is not a codeword

Data goes to stdout (or ``--out``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import difflib
import sys
from pathlib import Path
from typing import Sequence

from .code import CodeError, CodeSpec, NotACodeword, NotCyclicVector, build_code, encode, unencode
from .linalg import FunMatrix, format_matrix, rcef
from .ore import OrePoly, format_orepoly, llcm_many, parse_orepoly, x_minus
from .pgz import (DecodingError, DecodingFailure, ErrorVector, decode, decode_basic, error_values,
                  evaluate_locator, locator_divisor, positions_matrix, syndrome_table, syndromes)
from .rfield import ParseError, RatFun, format_ratfun, parse_ratfun
from .storage import TrialConfig, TrialMismatch, inject_errors, run_trials
from .worked_examples import golden, load_golden

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_NOT_CYCLIC = 3
EXIT_PARSE = 4
EXIT_CAPACITY = 5
EXIT_NOT_CODEWORD = 6

SPEC_KEYS = ("p", "delta_z", "alpha", "d", "r")


class SpecFileError(ValueError):
    """Malformed spec file."""


# ---------------------------------------------------------------------------
# file formats


def format_vector(v: Sequence[RatFun]) -> str:
    return "[" + ", ".join(format_ratfun(c) for c in v) + "]"


def parse_vector(text: str, p: int) -> list[RatFun]:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise SpecFileError(f"expected a bracketed list, got {text!r}")
    body = body[1:-1].strip()
    return [parse_ratfun(part, p) for part in body.split(",")] if body else []


def format_spec(spec: CodeSpec) -> str:
    lines = [
        f"p={spec.p}",
        f"delta_z={format_ratfun(spec.D.dz)}",
        f"alpha={format_ratfun(spec.alpha)}",
        f"d={spec.d}",
        f"r={spec.r}",
        f"g={format_orepoly(spec.g)}",
    ]
    return "\n".join(lines) + "\n"


def _key_values(text: str, where: str) -> dict[str, str]:
    out = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise SpecFileError(f"{where}:{n}: expected key=value, got {line!r}")
        out[key.strip()] = value.strip()
    return out


def parse_spec(text: str, where: str = "<spec>") -> CodeSpec:
    """Rebuild a code from its spec file; a stored g line must agree with the rebuilt generator."""
    kv = _key_values(text, where)
    missing = [k for k in SPEC_KEYS if k not in kv]
    if missing:
        raise SpecFileError(f"{where}: missing keys {missing}")
    try:
        p, d, r = int(kv["p"]), int(kv["d"]), int(kv["r"])
    except ValueError as exc:
        raise SpecFileError(f"{where}: {exc}") from None
    dz = parse_ratfun(kv["delta_z"], p)
    alpha = parse_ratfun(kv["alpha"], p)
    spec = build_code(p, dz, alpha, d, r)
    if "g" in kv and parse_orepoly(kv["g"], spec.D) != spec.g:
        raise SpecFileError(f"{where}: stored generator does not match the rebuilt one")
    return spec


def format_word(v: Sequence[RatFun]) -> str:
    return "".join(format_ratfun(c) + "\n" for c in v)


def parse_word(text: str, p: int) -> list[RatFun]:
    return [parse_ratfun(line, p) for line in text.splitlines() if line.strip()]


def format_decoding(err: ErrorVector, codeword: Sequence[RatFun], message: Sequence[RatFun], p: int) -> str:
    lines = [
        "positions=" + ",".join(str(k) for k in err.positions),
        "values=" + format_vector(err.values),
        "error=" + format_vector(err.to_vector(p)),
        "codeword=" + format_vector(codeword),
        "message=" + format_vector(message),
    ]
    return "\n".join(lines) + "\n"


def parse_decoding(text: str, p: int) -> dict:
    kv = _key_values(text, "<decoding>")
    return {
        "positions": [int(k) for k in kv["positions"].split(",") if k.strip()],
        "values": parse_vector(kv["values"], p),
        "error": parse_vector(kv["error"], p),
        "codeword": parse_vector(kv["codeword"], p),
        "message": parse_vector(kv["message"], p),
    }


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_spec(path: str) -> CodeSpec:
    return parse_spec(_read(path), path)


def _parse_positions(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise SpecFileError(f"bad --positions {text!r}") from None


def _parse_values(text: str | None, p: int) -> list[RatFun]:
    if not text:
        return []
    return [parse_ratfun(t, p) for t in text.split(";") if t.strip()]


# ---------------------------------------------------------------------------
# commands


def cmd_new_code(args) -> int:
    spec = build_code(args.p, parse_ratfun(args.delta_z, args.p), parse_ratfun(args.alpha, args.p), args.d, args.r)
    _emit(format_spec(spec), args.out)
    print(f"built {spec}", file=sys.stderr)
    return EXIT_OK


def cmd_encode(args) -> int:
    spec = _load_spec(args.spec)
    message = parse_word(_read(args.infile), spec.p)
    _emit(format_word(encode(message, spec)), args.out)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    spec = _load_spec(args.spec)
    word = parse_word(_read(args.infile), spec.p)
    y = inject_errors(word, _parse_positions(args.positions), _parse_values(args.values, spec.p))
    _emit(format_word(y), args.out)
    return EXIT_OK


def _decode_word(y, spec):
    err = decode(y, spec)
    codeword = [a - b for a, b in zip(y, err.to_vector(spec.p))]
    return err, codeword, unencode(codeword, spec)


def cmd_decode(args) -> int:
    spec = _load_spec(args.spec)
    y = parse_word(_read(args.infile), spec.p)
    if len(y) != spec.p:
        raise SpecFileError(f"{args.infile}: {len(y)} coordinates, expected {spec.p}")
    err, codeword, message = _decode_word(y, spec)
    _emit(format_decoding(err, codeword, message, spec.p), args.out)
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    spec = _load_spec(args.spec)
    message = parse_word(_read(args.infile), spec.p)
    c = encode(message, spec)
    positions = _parse_positions(args.positions)
    y = inject_errors(c, positions, _parse_values(args.values, spec.p))
    err, codeword, recovered = _decode_word(y, spec)
    ok = codeword == c and recovered == message and list(err.positions) == sorted(positions)
    _emit(format_decoding(err, codeword, recovered, spec.p), args.out)
    if not ok:
        print("roundtrip mismatch: decoded message differs from the input", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_trials(args) -> int:
    spec = _load_spec(args.spec)
    errors = spec.tau if args.errors is None else args.errors
    cfg = TrialConfig(spec, args.trials, errors, args.degree_bound, args.seed, exact_errors=True)
    try:
        report = run_trials(cfg)
    except (TrialMismatch, DecodingError) as exc:
        print(f"trial mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    _emit(report.to_text() + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# demo replay


class GoldenMismatch(Exception):
    def __init__(self, name: str, got: str, expected: str):
        diff = "\n".join(difflib.unified_diff(expected.splitlines(), got.splitlines(),
                                              "golden", "computed", lineterm=""))
        super().__init__(f"{name} differs from the golden value\n{diff}")
        self.name = name


def _render(obj) -> str:
    if isinstance(obj, RatFun):
        return format_ratfun(obj)
    if isinstance(obj, FunMatrix):
        return format_matrix(obj)
    if isinstance(obj, OrePoly):
        return format_orepoly(obj)
    if isinstance(obj, list) and obj and isinstance(obj[0], list):
        return "\n".join(_render(r) for r in obj)
    if isinstance(obj, (list, tuple)) and all(isinstance(c, RatFun) for c in obj):
        return format_vector(obj)
    return str(obj)


def _as_objects(value, p: int):
    if isinstance(value, str):
        return parse_ratfun(value, p, strict=False)
    if isinstance(value, list):
        return [_as_objects(v, p) for v in value]
    return value


class _Replay:
    def __init__(self, p: int, out):
        self.p = p
        self.out = out
        self.checked = 0

    def show(self, name: str, obj) -> None:
        text = _render(obj)
        sep = "\n" if "\n" in text else " "
        print(f"{name}:{sep}{text}", file=self.out)

    def check(self, name: str, got, expected) -> None:
        """Print ``got`` and compare it with the golden value (text is parsed first)."""
        self.show(name, got)
        if expected is None:
            return
        want = _as_objects(expected, self.p)
        if isinstance(got, FunMatrix):
            got_cmp = got.tolist()
        elif isinstance(got, OrePoly):
            got_cmp = list(got.coeffs)
        elif isinstance(got, tuple):
            got_cmp = list(got)
        else:
            got_cmp = got
        if got_cmp != want:
            raise GoldenMismatch(name, _render(got), _render(want))
        self.checked += 1


def replay(record: dict, out=None) -> int:
    """Rebuild one reference scenario end to end; raise GoldenMismatch on the first difference."""
    out = out or sys.stdout
    prm = record["params"]
    p = int(prm["p"])
    R = _Replay(p, out)
    spec = build_code(p, prm["delta_z"], prm["alpha"], int(prm["d"]), int(prm.get("r", 0)))
    R.show("code", spec)
    R.check("gamma", spec.gamma, record.get("gamma"))
    if "factors" in record:
        R.check("factors x + c, c = -L(delta^j(alpha))", [-a for a in spec.roots], record["factors"])
    if "llcm_all" in record:
        whole = llcm_many([x_minus(a, spec.D) for a in spec.roots], spec.D)
        R.check("llcm of all p factors", whole, record["llcm_all"])
    R.check("N", spec.nmat, record.get("N"))
    R.check("g", spec.g, record.get("g"))
    msg = _as_objects(record["message"], p)
    c = encode(msg, spec)
    R.show("message", msg)
    R.check("codeword", c, record.get("codeword"))

    for sc in record.get("scenarios", []):
        print(f"--- scenario: {sc.get('name', '?')}", file=out)
        y = _as_objects(sc["received"], p)
        R.show("received", y)
        s = syndromes(y, spec)
        R.show("syndromes", s)
        table = syndrome_table(s, spec)
        R.check("S^tau", table.table, sc.get("S"))
        R.check("rcef(S^tau)", rcef(table.table), sc.get("rcef"))
        div = locator_divisor(table, spec)
        R.check("rho", div.rho.padded(p), sc.get("rho"))
        R.check("rho_N", evaluate_locator(div.rho, spec), sc.get("rho_N"))
        try:
            decode_basic(y, spec)
            basic_fails = False
        except DecodingFailure as exc:
            print(f"basic decoder: {exc}", file=out)
            basic_fails = True
        R.check("basic decoder fails", basic_fails, sc.get("basic_fails"))
        if basic_fails or "H" in sc:
            R.check("H_rho", positions_matrix(div.rho, spec), sc.get("H"))
        err = decode(y, spec)
        R.check("positions", list(err.positions), sc.get("positions"))
        if "value_system" in sc:
            orbit = spec.orbit
            v = len(err.positions)
            A = [[orbit[k + i] for i in range(v)] for k in err.positions]
            b = [orbit[i] * s[i] for i in range(v)]
            R.check("value system A", A, sc["value_system"].get("A"))
            R.check("value system b", b, sc["value_system"].get("b"))
        R.check("values", error_values(err.positions, s, spec), sc.get("values"))
        R.check("error", err.to_vector(p), sc.get("error"))
        corrected = [a - e for a, e in zip(y, err.to_vector(p))]
        R.check("recovered message", unencode(corrected, spec), record["message"])
    return R.checked


def cmd_demo(args) -> int:
    which = args.which or args.demo
    if which is None:
        raise SpecFileError("demo needs p11 or p5")
    record = load_golden(args.golden) if args.golden else golden(which)
    try:
        n = replay(record)
    except KeyError as exc:
        raise SpecFileError(f"golden record lacks key {exc}") from None
    except GoldenMismatch as exc:
        print(f"demo {which}: MISMATCH\n{exc}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"demo {which}: all {n} golden objects match")
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="diffconv", description=__doc__.split("\n\n")[0],
                                 epilog="Set DIFFCONV_STRICT=1 to reject coefficients outside [0, p).")
    sub = ap.add_subparsers(dest="command", required=True)

    def io(sp, spec=True, infile=True):
        if spec:
            sp.add_argument("--spec", required=True, help="spec file written by new-code")
        if infile:
            sp.add_argument("--in", dest="infile", required=True, help="input file, one coordinate per line")
        sp.add_argument("--out", help="output file (default stdout)")

    sp = sub.add_parser("new-code", help="build a code and write its spec file")
    sp.add_argument("--p", "-p", type=int, required=True)
    sp.add_argument("--delta-z", dest="delta_z", required=True, help="delta(z), e.g. 1 or z")
    sp.add_argument("--alpha", required=True, help="cyclic vector, e.g. 1/z")
    sp.add_argument("--d", "-d", type=int, required=True, help="designed distance")
    sp.add_argument("--r", "-r", type=int, default=0, help="offset (default 0)")
    io(sp, spec=False, infile=False)
    sp.set_defaults(func=cmd_new_code)

    sp = sub.add_parser("encode", help="encode a message file")
    io(sp)
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("corrupt", help="add errors to a word")
    io(sp)
    sp.add_argument("--positions", help="comma separated, e.g. 1,6,9")
    sp.add_argument("--values", help="semicolon separated, e.g. '1;8;8*z^3'")
    sp.set_defaults(func=cmd_corrupt)

    sp = sub.add_parser("decode", help="decode a received word")
    io(sp)
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("roundtrip", help="encode, corrupt, decode and compare")
    io(sp)
    sp.add_argument("--positions")
    sp.add_argument("--values")
    sp.set_defaults(func=cmd_roundtrip)

    sp = sub.add_parser("trials", help="randomized decoding trials")
    io(sp, infile=False)
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--errors", type=int, default=None, help="errors per trial (default tau)")
    sp.add_argument("--degree-bound", dest="degree_bound", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_trials)

    sp = sub.add_parser("demo", help="replay a reference scenario against golden values")
    sp.add_argument("which", nargs="?", choices=("p11", "p5"))
    sp.add_argument("--demo", choices=("p11", "p5"))
    sp.add_argument("--golden", help="JSON golden record overriding the embedded one")
    sp.set_defaults(func=cmd_demo)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotCyclicVector as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CYCLIC
    except NotACodeword as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CODEWORD
    except (ParseError, SpecFileError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DecodingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (CodeError, ValueError, TypeError, NotImplementedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Exact Reed-Solomon differential convolutional codes over F_p(z).

Arithmetic is exact throughout: rational functions are kept in canonical
form (coprime, monic denominator) and compared by literal equality.
"""

from .code import CodeError, CodeSpec, NotACodeword, NotCyclicVector, build_code, encode, is_codeword, unencode
from .linalg import FunMatrix, rcef, rref
from .ore import OrePoly, gcrd, llcm, left_divmod, right_divmod, right_eval
from .pgz import (BeyondCapacity, DecodingError, DecodingFailure, ErrorVector, ZeroError, correct, decode,
                  decode_basic)
from .rfield import Derivation, ParseError, RatFun, format_ratfun, parse_ratfun
from .storage import TrialConfig, TrialReport, run_trials

__version__ = "0.1.0"

__all__ = [
    "BeyondCapacity",
    "CodeError",
    "CodeSpec",
    "DecodingError",
    "DecodingFailure",
    "Derivation",
    "ErrorVector",
    "FunMatrix",
    "NotACodeword",
    "NotCyclicVector",
    "OrePoly",
    "ParseError",
    "RatFun",
    "TrialConfig",
    "TrialReport",
    "ZeroError",
    "build_code",
    "correct",
    "decode",
    "decode_basic",
    "encode",
    "format_ratfun",
    "gcrd",
    "is_codeword",
    "left_divmod",
    "llcm",
    "parse_ratfun",
    "rcef",
    "right_divmod",
    "right_eval",
    "rref",
    "run_trials",
    "unencode",
]

"""Errors whose values are constants defeat the basic decoder.

Two constant error values are linearly dependent over the constant field, so
the syndrome table loses rank and the locator found from it has too few roots.
The full decoder recovers every position from the rows of rref(M_rho N).
"""

from diffconv import build_code, encode
from diffconv.linalg import format_matrix
from diffconv.ore import format_orepoly
from diffconv.pgz import (
    DecodingFailure, decode, decode_basic, locator_divisor, positions_matrix, syndrome_table, syndromes,
)
from diffconv.rfield import parse_ratfun
from diffconv.storage import inject_errors

spec = build_code(11, "1", "1/z", 7)
c = encode([parse_ratfun(t, 11) for t in ["1", "z", "0", "0", "z^4"]], spec)
y = inject_errors(c, [2, 5], [1, 3])

try:
    decode_basic(y, spec)
except DecodingFailure as exc:
    print(f"basic decoder gave up: locator degree {exc.mu}, roots at {list(exc.positions)}")

div = locator_divisor(syndrome_table(syndromes(y, spec), spec), spec)
print("locator:", format_orepoly(div.rho))
print("H_rho:\n" + format_matrix(positions_matrix(div.rho, spec)))
print("full decoder:", decode(y, spec))

# the same effect on a second code, with a nonzero gamma
spec5 = build_code(5, "z", "1/(z + 1)", 5)
c5 = encode([parse_ratfun("1", 5)], spec5)
y5 = inject_errors(c5, [0, 3], [2, 4])
print(spec5)
print("full decoder:", decode(y5, spec5))

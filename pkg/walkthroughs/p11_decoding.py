"""Build the p = 11 code, encode a message, damage two coordinates and decode.

Run with ``python walkthroughs/p11_decoding.py``.
"""

from diffconv import build_code, encode
from diffconv.linalg import format_matrix, rcef
from diffconv.ore import format_orepoly
from diffconv.pgz import correct, decode, evaluate_locator, locator_divisor, syndrome_table, syndromes
from diffconv.rfield import format_ratfun, parse_ratfun
from diffconv.storage import inject_errors


def show(label, values):
    print(f"{label:>10}: " + ", ".join(format_ratfun(v) for v in values))


# delta(z) = 1, alpha = 1/z, designed distance 7, so up to 3 errors are correctable
spec = build_code(11, "1", "1/z", 7)
print(spec)
print("generator:", format_orepoly(spec.g))

msg = [parse_ratfun(t, 11) for t in ["1", "z", "0", "0", "z^4"]]
c = encode(msg, spec)
show("codeword", c)

y = inject_errors(c, [6, 8], [8, parse_ratfun("2*z^2", 11)])
show("received", y)

s = syndromes(y, spec)
table = syndrome_table(s, spec).table
print("syndrome table:\n" + format_matrix(table))
print("column echelon form:\n" + format_matrix(rcef(table)))

div = locator_divisor(syndrome_table(s, spec), spec)
print("locator:", format_orepoly(div.rho))
show("rho_N", evaluate_locator(div.rho, spec))

err = decode(y, spec)
print("error:", err)
c_hat, m_hat = correct(y, spec)
show("message", m_hat)
assert c_hat == c and m_hat == msg

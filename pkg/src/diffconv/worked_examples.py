"""Golden values for the two reference scenarios replayed by ``diffconv demo``.

Every object is stored as text in the package's rational-function syntax and
parsed on use, so a golden file can be dumped to JSON, edited and fed back
through ``--golden``.  Keys missing from a scenario are simply not checked.
"""

from __future__ import annotations

import copy
import json

__all__ = ["EXAMPLES", "golden", "load_golden", "dump_golden"]


def _row(*cells: str) -> list[str]:
    return list(cells)


_P11_N = [
    _row(*["1"] * 11),
    _row("10/z", "9/z", "8/z", "7/z", "6/z", "5/z", "4/z", "3/z", "2/z", "1/z", "0"),
    _row("2/z^2", "6/z^2", "1/z^2", "9/z^2", "8/z^2", "9/z^2", "1/z^2", "6/z^2", "2/z^2", "0", "0"),
    _row("5/z^3", "9/z^3", "6/z^3", "1/z^3", "10/z^3", "5/z^3", "2/z^3", "6/z^3", "0", "0", "0"),
    _row("2/z^4", "10/z^4", "8/z^4", "4/z^4", "8/z^4", "10/z^4", "2/z^4", "0", "0", "0", "0"),
    _row("1/z^5", "6/z^5", "10/z^5", "1/z^5", "5/z^5", "10/z^5", "0", "0", "0", "0", "0"),
    _row("5/z^6", "2/z^6", "8/z^6", "2/z^6", "5/z^6", "0", "0", "0", "0", "0", "0"),
    _row("9/z^7", "6/z^7", "5/z^7", "2/z^7", "0", "0", "0", "0", "0", "0", "0"),
    _row("5/z^8", "1/z^8", "5/z^8", "0", "0", "0", "0", "0", "0", "0", "0"),
    _row("10/z^9", "1/z^9", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
    _row("10/z^10", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
]

_P11_CODEWORD = ["3/z^6", "5/z^5", "3/z^4", "7/z^3", "8/z^2", "5/z", "3", "3*z", "9*z^2", "3*z^3", "z^4"]

_P11_H = [["0"] * 11 for _ in range(9)]
for _i, _j in enumerate([0, 1, 2, 3, 4, 5, 7, 8, 10]):
    _P11_H[_i][_j] = "1"
_P11_H[1][6] = "8*z^5"

_D5 = "z^3 + 4*z^2 + z + 4"
_D7 = "z^7 + 7*z^2"

EXAMPLES: dict = {
    "p11": {
        "params": {"p": 11, "delta_z": "1", "alpha": "1/z", "d": 7, "r": 0},
        "gamma": "0",
        # printed factors x + c, so each root L(delta^j(alpha)) equals -c
        "factors": ["1/z", "2/z", "3/z", "4/z", "5/z", "6/z", "7/z", "8/z", "9/z", "10/z", "0"],
        "llcm_all": ["0"] * 11 + ["1"],
        "N": _P11_N,
        "g": ["5/z^6", "8/z^5", "10/z^4", "2/z^3", "10/z^2", "3/z", "1"],
        "message": ["1", "z", "0", "0", "z^4"],
        "codeword": _P11_CODEWORD,
        "scenarios": [
            {
                "name": "two errors",
                "received": ["3/z^6", "5/z^5", "3/z^4", "7/z^3", "8/z^2", "5/z", "0", "3*z", "0", "3*z^3", "z^4"],
                "S": [
                    ["6/z^7", "9/z^8", "9/z^9"],
                    ["4/z^8", "7/z^9", "7/z^10"],
                    ["5/z^9", "7/z^10", "7/z^11"],
                    ["3/z^10", "0", "0"],
                ],
                "rcef": [
                    ["1", "0", "0"],
                    ["0", "1", "0"],
                    ["3/z^2", "5/z", "0"],
                    ["9/z^3", "1/z^2", "0"],
                ],
                "rho": ["8/z^2", "6/z", "1", "0", "0", "0", "0", "0", "0", "0", "0"],
                "rho_N": ["4/z^2", "2/z^2", "2/z^2", "4/z^2", "8/z^2", "3/z^2", "0", "10/z^2", "0", "3/z^2", "8/z^2"],
                "basic_fails": False,
                "positions": [6, 8],
                "value_system": {
                    "A": [["5/z^7", "9/z^8"], ["5/z^9", "10/z^10"]],
                    "b": ["6/z^7", "4/z^8"],
                },
                "values": ["8", "2*z^2"],
                "error": ["0", "0", "0", "0", "0", "0", "8", "0", "2*z^2", "0", "0"],
            },
            {
                "name": "three errors",
                "received": ["3/z^6", "(z^5 + 5)/z^5", "3/z^4", "7/z^3", "8/z^2", "5/z", "0", "3*z", "9*z^2", "0", "z^4"],
                "rcef": [
                    ["1", "0", "0"],
                    ["0", "1", "0"],
                    [f"(2*z^5 + 5)/({_D7})", "(9*z^5 + 6)/(z^6 + 7*z)", "0"],
                    ["3/z^3", "8/z^2", "0"],
                ],
                "rho_N": [
                    f"(9*z^5 + 4)/({_D7})", f"5/({_D7})", f"(4*z^5 + 9)/({_D7})",
                    f"(10*z^5 + 5)/({_D7})", f"(7*z^5 + 4)/({_D7})", f"(6*z^5 + 6)/({_D7})",
                    "7*z^3/(z^5 + 7)", f"(10*z^5 + 8)/({_D7})", f"(4*z^5 + 8)/({_D7})",
                    "0", f"(9*z^5 + 6)/({_D7})",
                ],
                "basic_fails": True,
                "H": _P11_H,
                "positions": [1, 6, 9],
                "value_system": {
                    "A": [["10/z^2", "2/z^3", "5/z^4"], ["5/z^7", "9/z^8", "5/z^9"], ["10/z^10", "10/z^11", "0"]],
                    "b": ["(10*z^5 + 10)/z^7", "(2*z^5 + 9)/z^8", "(5*z^5 + 7)/z^9"],
                },
                "values": ["1", "8", "8*z^3"],
                "error": ["0", "1", "0", "0", "0", "0", "8", "0", "0", "8*z^3", "0"],
            },
        ],
    },
    "p5": {
        "params": {"p": 5, "delta_z": "z", "alpha": "1/(z + 1)", "d": 3, "r": 0},
        "gamma": "1",
        "factors": [
            "z/(z + 1)",
            "(z + 4)/(z + 1)",
            "(z^2 + z + 1)/(z^2 + 4)",
            "(z^3 + 4*z^2 + z + 4)/(z^3 + 2*z^2 + 2*z + 1)",
            f"(z^3 + 3*z^2 + 3*z + 1)/({_D5})",
        ],
        "llcm_all": ["0", "4", "0", "0", "0", "1"],
        "N": [
            ["1", "1", "1", "1", "1"],
            ["4*z/(z + 1)", "(4*z + 1)/(z + 1)", "(4*z^2 + 4*z + 4)/(z^2 + 4)",
             "(4*z^3 + z^2 + 4*z + 1)/(z^3 + 2*z^2 + 2*z + 1)", f"(4*z^3 + 2*z^2 + 2*z + 4)/({_D5})"],
            ["(z^2 + 4*z)/(z^2 + 2*z + 1)", "(z^2 + z + 1)/(z^2 + 2*z + 1)", "(z^2 + 1)/(z^2 + 2*z + 1)",
             "(z^2 + 2*z + 1)/(z^2 + z + 1)", "(z^2 + 2*z + 1)/(z^2 + 1)"],
            ["(4*z^3 + 4*z^2 + 4*z)/(z^3 + 3*z^2 + 3*z + 1)", "(4*z^3 + z^2 + 4*z + 1)/(z^3 + 3*z^2 + 3*z + 1)",
             "(4*z + 4)/(z + 4)", "(4*z^2 + 1)/(z^2 + z + 1)", f"(4*z^3 + 3*z^2 + 3*z + 4)/({_D5})"],
            ["(z^4 + 4*z^3 + z^2 + 4*z)/(z^4 + 4*z^3 + z^2 + 4*z + 1)", "1", "1", "1", "1"],
        ],
        "g": ["2*z^2/(z^2 + 2*z + 1)", "(3*z + 4)/(z + 1)", "1"],
        "message": ["1", "0", "0"],
        "codeword": ["2*z^2/(z^2 + 2*z + 1)", "(3*z + 4)/(z + 1)", "1", "0", "0"],
        "scenarios": [
            {
                "name": "one error",
                "received": ["2*z^2/(z^2 + 2*z + 1)", "(3*z + 4)/(z + 1)", "1", "0", "z"],
                "S": [["(z^5 + 4*z^4 + z^3 + 4*z^2)/(z^5 + 1)"], ["4*z^2/(z^2 + 2*z + 1)"]],
                "rcef": [["1"], [f"(4*z^3 + 2*z^2 + 2*z + 4)/({_D5})"]],
                "rho": [f"(z^3 + 3*z^2 + 3*z + 1)/({_D5})", "1", "0", "0", "0"],
                "rho_N": [
                    "1/(z^4 + 4)",
                    "(z^3 + 4*z^2 + z)/(z^4 + 4)",
                    "(3*z^2 + 2*z)/(z^3 + z^2 + z + 1)",
                    "(2*z^5 + 3*z^4 + 3*z^3 + 3*z^2 + 2*z)/(z^6 + z^5 + z^4 + 4*z^2 + 4*z + 4)",
                    "0",
                ],
                "basic_fails": False,
                "positions": [4],
                "value_system": {
                    "A": [["(z^4 + 4*z^3 + z^2 + 4*z)/(z^5 + 1)"]],
                    "b": ["(z^5 + 4*z^4 + z^3 + 4*z^2)/(z^5 + 1)"],
                },
                "values": ["z"],
                "error": ["0", "0", "0", "0", "z"],
            },
        ],
    },
}


def golden(which: str) -> dict:
    """A private deep copy of the golden record for ``which``."""
    try:
        return copy.deepcopy(EXAMPLES[which])
    except KeyError:
        raise ValueError(f"unknown example {which!r}; choose from {sorted(EXAMPLES)}") from None


def dump_golden(which: str) -> str:
    return json.dumps(golden(which), indent=1)


def load_golden(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)

"""Distributed storage: one coordinate per node, a few nodes return garbage.

Prints a trial report per code, first with random rational error values and
then with constant ones.  Two or more constant errors always push decoding
into the fallback branch; a single one does not.
"""

import random

from diffconv.storage import TrialConfig, random_code, run_trials

rng = random.Random(7)
for p, d in [(5, 3), (7, 5), (11, 7)]:
    spec = random_code(p, d, rng)
    print(spec)
    for bound, label in [(2, "rational values"), (0, "constant values")]:
        cfg = TrialConfig(spec, 25, spec.tau, value_degree_bound=bound, seed=p, exact_errors=bound == 0)
        rep = run_trials(cfg)
        print(f"  {label}: " + ", ".join(f"{k}={v}" for k, v in rep.as_dict().items()))

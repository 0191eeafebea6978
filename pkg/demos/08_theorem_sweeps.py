"""Running the verification sweeps from Python.

Every closed form in the library has a brute-force twin; the verify module
runs both over whole families at once (vectorised batches of successor
maps) and reports any counterexample.  The same machinery backs the
`kpower verify` command.
"""

import kpower.verify as V

spec = V.SweepSpec(families=("cyclic", "quaternion"), max_n=48)
for check in V.run_verification(spec):
    status = "all pass" if check.passed else f"FAILED: {check.failures[:2]}"
    print(f"{check.name:16s} {check.cells:7d} cells  {status}")

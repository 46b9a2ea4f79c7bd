#!/usr/bin/env python3
"""Cross-validate every analytic catalog ground state against the
finite-difference solver and print one table row per instance.

Exits nonzero if any instance misses the oracle tolerances
(|dE| <= 1e-4, fidelity >= 1 - 1e-5).
"""

import math

from nonlinosc.measures import fidelity_pure
from nonlinosc.numerics import auto_grid, covariance_of, sample_ground_state
from nonlinosc.oracle import fd_ground_state
from nonlinosc.potentials import (
    FellowsSmith,
    Harmonic,
    ModifiedIsotonic,
    ModifiedPoschlTeller,
    Morse,
    ground_energy,
)
from nonlinosc.specfun import entropy_h

CATALOG = [
    Harmonic(1.0),
    Morse(1.0, 0.5),
    Morse(1.0, 1.0),
    Morse(2.0, 1.5),
    ModifiedPoschlTeller(1.0, 0.5),
    ModifiedPoschlTeller(1.0, 1.0),
    ModifiedPoschlTeller(3.0, 1.0),
    ModifiedIsotonic(0.5),
    ModifiedIsotonic(2.0),
    ModifiedIsotonic(8.0),
    FellowsSmith(-0.1),
    FellowsSmith(-0.5),
    FellowsSmith(-0.9),
]


def main() -> int:
    print(f"{'potential':34s} {'E_analytic':>12s} {'E_fd':>12s} {'|dE|':>9s} "
          f"{'1-fidelity':>11s} {'eta_ng(an)':>10s} {'eta_ng(fd)':>10s}")
    failures = 0
    for spec in CATALOG:
        grid = auto_grid(spec)
        fd = fd_ground_state(spec, grid)
        analytic = sample_ground_state(spec, grid)
        e_analytic = ground_energy(spec)
        fidelity = fidelity_pure(analytic, fd.wavefunction)
        ng_analytic = entropy_h(math.sqrt(covariance_of(analytic).det))
        ng_fd = entropy_h(math.sqrt(covariance_of(fd.wavefunction).det))
        d_e = abs(fd.energy - e_analytic)
        ok = d_e <= 1e-4 and fidelity >= 1.0 - 1e-5
        failures += not ok
        flag = "" if ok else "  <-- MISMATCH"
        print(f"{str(spec):34s} {e_analytic:12.8f} {fd.energy:12.8f} {d_e:9.2e} "
              f"{1.0 - fidelity:11.2e} {ng_analytic:10.6f} {ng_fd:10.6f}{flag}")
    if failures:
        print(f"{failures} instance(s) failed the oracle tolerances")
        return 1
    print("all instances match the finite-difference oracle")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

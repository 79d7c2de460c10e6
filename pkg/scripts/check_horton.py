#!/usr/bin/env python3
"""Verify non-Hamiltonicity of the 96-vertex Horton graph by exhaustive
search.  This is the one catalog fact too slow for the default test suite;
expect a long run (hours, depending on hardware).  Everything else about the
graph — order, regularity, connectivity, brace decomposition — is covered by
the normal tests.
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from barnette.catalog import catalog  # noqa: E402
from barnette.hamiltonicity import find_hamiltonian_cycle  # noqa: E402


def main() -> int:
    g = catalog("horton").graph
    print(
        f"searching for a Hamiltonian cycle on {g.n} vertices / {g.edge_count} edges ...",
        flush=True,
    )
    t0 = time.time()
    cycle = find_hamiltonian_cycle(g)
    elapsed = time.time() - t0
    if cycle is None:
        print(f"no Hamiltonian cycle exists ({elapsed:.1f}s)")
        return 0
    print(f"FOUND a Hamiltonian cycle ({elapsed:.1f}s): {cycle}")
    print("this contradicts the catalog entry; please report")
    return 1


if __name__ == "__main__":
    sys.exit(main())

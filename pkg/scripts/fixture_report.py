#!/usr/bin/env python3
"""Sweep the bundled fixture library and print one summary row per quiver:
spectrum size, algebra dimension, reconstruction verdict, center dimension
versus number of connected components, and timing."""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from quivertt.dsl import parse_quiver_file
from quivertt.path_algebra import build_path_algebra, is_tensor_relations
from quivertt.reconstruct import assemble_A, center_and_z
from quivertt.spectrum import spc

FIXTURES = Path(__file__).resolve().parent.parent / "src/quivertt/fixtures"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fixtures", type=Path, default=FIXTURES,
                        help="directory of .quiver files")
    args = parser.parse_args()

    header = (f"{'quiver':<14}{'dim':>5}{'tensor':>8}{'points':>8}"
              f"{'iso':>6}{'Z(A)':>6}{'pi0':>5}{'time':>8}")
    print(header)
    print("-" * len(header))
    for path in sorted(args.fixtures.glob("*.quiver")):
        spec = parse_quiver_file(path)
        t0 = time.perf_counter()
        alg = build_path_algebra(spec.quiver, spec.relations, spec.field)
        ok = is_tensor_relations(alg).ok
        points = spc(spec.quiver, spec.relations, spec.field).point_count
        assembled = assemble_A(spec.quiver, spec.relations, spec.field)
        center = center_and_z(spec.quiver, spec.relations, assembled,
                              spec.field)
        dt = time.perf_counter() - t0
        pi0 = len(spec.quiver.undirected_components())
        print(f"{spec.name:<14}{alg.dim:>5}{str(ok):>8}{points:>8}"
              f"{str(assembled.verdict.isomorphic):>6}"
              f"{center.center_dimension:>6}{pi0:>5}{dt:>7.2f}s")


if __name__ == "__main__":
    main()

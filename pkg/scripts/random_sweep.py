#!/usr/bin/env python3
"""Random stress sweep: generate random tensor-relation quivers, reconstruct
the path algebra from the derived category on each, and cross-check the
support calculus on random complexes.  Any failure prints the seed so the
instance can be replayed."""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from quivertt.complexes import direct_sum_complex, support, tensor_complex
from quivertt.randgen import (random_complex, random_tensor_quiver)
from quivertt.reconstruct import assemble_A, center_and_z


@dataclass
class SweepConfig:
    trials: int = 25
    seed: int = 0
    max_vertices: int = 4
    max_arrows: int = 6
    complexes_per_quiver: int = 10


def run(config):
    rng = random.Random(config.seed)
    failures = 0
    t0 = time.perf_counter()
    for trial in range(config.trials):
        quiver, relations = random_tensor_quiver(
            rng, config.max_vertices, config.max_arrows)
        assembled = assemble_A(quiver, relations)
        center = center_and_z(quiver, relations, assembled)
        ok = (assembled.verdict.isomorphic
              and center.dimensions_match
              and center.z_is_unital_ring_map)
        for _ in range(config.complexes_per_quiver):
            v = random_complex(rng, quiver, relations)
            w = random_complex(rng, quiver, relations)
            ok = ok and support(tensor_complex(v, w)) == support(v) & support(w)
            ok = ok and support(direct_sum_complex(v, w)) == support(v) | support(w)
        status = "ok" if ok else "FAIL"
        failures += not ok
        print(f"trial {trial:3d}: |Q0|={len(quiver.vertices)} "
              f"|Q1|={len(quiver.arrows)} |R|={len(relations)} "
              f"dim={assembled.dim:3d} Z(A)={center.center_dimension} {status}")
    dt = time.perf_counter() - t0
    print(f"\n{config.trials} trials, {failures} failures, {dt:.2f}s "
          f"(seed {config.seed})")
    return failures


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=25)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-vertices", type=int, default=4)
    parser.add_argument("--max-arrows", type=int, default=6)
    parser.add_argument("--complexes-per-quiver", type=int, default=10)
    args = parser.parse_args()
    config = SweepConfig(args.trials, args.seed, args.max_vertices,
                         args.max_arrows, args.complexes_per_quiver)
    raise SystemExit(1 if run(config) else 0)


if __name__ == "__main__":
    main()

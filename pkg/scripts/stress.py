#!/usr/bin/env python3
"""Randomized stress runs beyond the sizes pinned in the test suite.

Every drawn cycle system is checked for agreement between the closed-form
dimension and the truncation oracle, a full-rank permutation Gram matrix,
trace symmetry, and vanishing at the nilpotency bound; every presentation
for a valid symmetrization, a complete quotient certificate, sound orbit
structure, and dimension domination.
"""

import argparse
import random
import time

from multiserial import (
    CycleAlgebra,
    check_orbit_structure,
    derive_successors,
    dimension_comparison,
    enumerate_paths,
    generate_relations,
    nilpotency_bound,
    oracle_dimension,
    symmetrize,
    validate,
    verify_quotient,
)
from multiserial.random_instances import (
    random_presentation,
    tractable_defining_pair,
)


def stress_pairs(rng: random.Random, count: int) -> None:
    worst = 0.0
    dims = []
    for index in range(count):
        t0 = time.perf_counter()
        pair = tractable_defining_pair(rng)
        algebra = CycleAlgebra(pair)
        bound = nilpotency_bound(pair)
        oracle = oracle_dimension(
            pair.quiver, generate_relations(pair).linear_relations(), bound
        )
        assert algebra.dimension == oracle, (index, algebra.dimension, oracle)
        gram = algebra.gram_matrix()
        assert gram.is_permutation and gram.rank == algebra.dimension, index
        assert algebra.check_trace_symmetry().passed, index
        assert algebra.check_multiserial().passed, index
        for p in enumerate_paths(pair.quiver, bound, 1_000_000):
            if len(p) == bound:
                assert not algebra.normal_form(p), (index, p)
        worst = max(worst, time.perf_counter() - t0)
        dims.append(algebra.dimension)
    print(
        f"{count} cycle systems ok; dimensions {min(dims)}..{max(dims)} "
        f"(mean {sum(dims) / len(dims):.1f}), worst instance {worst:.2f}s"
    )


def stress_presentations(rng: random.Random, count: int) -> None:
    worst = 0.0
    covers = []
    for index in range(count):
        t0 = time.perf_counter()
        presentation = random_presentation(rng)
        assert validate(symmetrize(presentation)).passed, index
        assert verify_quotient(presentation).complete, index
        assert check_orbit_structure(derive_successors(presentation)).passed, index
        dim, dim_star = dimension_comparison(presentation)
        assert dim <= dim_star, (index, dim, dim_star)
        worst = max(worst, time.perf_counter() - t0)
        covers.append(dim_star)
    print(
        f"{count} presentations ok; cover dimensions {min(covers)}..{max(covers)}, "
        f"worst instance {worst:.2f}s"
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--kind", choices=("pairs", "presentations", "both"), default="both"
    )
    args = parser.parse_args()
    if args.kind in ("pairs", "both"):
        stress_pairs(random.Random(args.seed), args.count)
    if args.kind in ("presentations", "both"):
        stress_presentations(random.Random(args.seed + 1), args.count)


if __name__ == "__main__":
    main()

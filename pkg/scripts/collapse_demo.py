#!/usr/bin/env python3
"""Walk a batch of count-equality claims through the collapse pipeline.

Draws k random formulas over n variables, claims their true model counts
(optionally corrupting one digit), fuses the claims into a single threshold
query, and checks the verdict two ways: with the splitting counter behind
verify_threshold and with the brute-force oracle. Keep k * (n + 1) small;
the final gadget spans 2k(n+1) + 1 variables and the oracle enumerates all
of them.
"""

import argparse
import random

from dmaxsat import (
    EqualityQuery,
    combine_equalities,
    count_bruteforce,
    print_circuit,
    verify_threshold,
)
from dmaxsat.generate import random_formula


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("-k", type=int, default=2, help="number of claims")
    parser.add_argument("-n", type=int, default=2, help="scope of each operand")
    parser.add_argument(
        "--corrupt",
        type=int,
        default=None,
        metavar="I",
        help="bump claim I by one (mod 2**n + 1) to watch the collapse say no",
    )
    args = parser.parse_args()

    rng = random.Random(args.seed)
    operands = [random_formula(rng, args.n, 2 * args.n + 2) for _ in range(args.k)]
    claims = [count_bruteforce(f) for f in operands]
    if args.corrupt is not None:
        claims[args.corrupt] = (claims[args.corrupt] + 1) % ((1 << args.n) + 1)

    print(f"claims over scope {args.n} (seed {args.seed}):")
    for i, (f, c) in enumerate(zip(operands, claims)):
        marker = " (corrupted)" if args.corrupt == i else ""
        print(f"  #{i}: count = {c}{marker}  {print_circuit(f)}")

    collapse = combine_equalities(
        [EqualityQuery(f, c) for f, c in zip(operands, claims)]
    )
    query = collapse.query
    print(f"packed scope {collapse.packed.scope}, target Y = {collapse.target}")
    print(f"branch {collapse.branch}, delta = {collapse.delta}")
    print(f"final query: scope {query.formula.scope}, size {query.formula.size()}, "
          f"bound {query.bound}")

    verdict = verify_threshold(query)
    oracle = count_bruteforce(query.formula)
    print(f"verify_threshold: {'yes' if verdict else 'no'}")
    print(f"oracle: count {oracle} vs bound {query.bound} "
          f"-> {'yes' if oracle >= query.bound else 'no'}")
    return 0 if verdict == (oracle >= query.bound) else 1


if __name__ == "__main__":
    raise SystemExit(main())

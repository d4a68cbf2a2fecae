#!/usr/bin/env python3
"""Desk-scale survey of one parameter sequence: growth, complexity,
recurrence, and an order census of short words.

Usage: python3 scripts/survey.py [omega-spec] [--seed N]
"""

import argparse
import random
from collections import Counter

from grigorchuk import (
    ball_sizes,
    complexity,
    element_order,
    parse_omega,
    uniform_recurrence_radius,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("omega", nargs="?", default="012")
    parser.add_argument("--seed", type=int, default=1729)
    parser.add_argument("--ball-radius", type=int, default=7)
    parser.add_argument("--order-words", type=int, default=200)
    args = parser.parse_args()

    omega = parse_omega(args.omega)
    print(f"omega = {omega.spec()}  (eventually constant: {omega.is_eventually_constant()})")

    sizes = ball_sizes(omega, args.ball_radius)
    print(f"\nball sizes 0..{args.ball_radius}: {sizes}")
    spheres = [b - a for a, b in zip(sizes, sizes[1:])]
    print(f"sphere sizes 1..{args.ball_radius}: {spheres}")

    rng = random.Random(args.seed)
    census = Counter()
    for _ in range(args.order_words):
        word = "".join(rng.choice("abcd") for _ in range(rng.randint(1, 10)))
        census[element_order(word, omega, 1 << 12)] += 1
    print(f"\norder census of {args.order_words} random words (length <= 10):")
    for order, count in sorted(census.items(), key=lambda kv: (kv[0] is None, kv[0])):
        print(f"  order {order if order is not None else '> 4096'}: {count}")

    if not omega.is_eventually_constant():
        print("\ncomplexity n: rho(n) [n+1 .. 6n]")
        for n in (1, 2, 4, 8, 16, 32, 64, 128, 256):
            print(f"  {n:4d}: {complexity(omega, n):4d}  [{n + 1} .. {6 * n}]")
        print("\nuniform recurrence radius R(n):")
        for n in (1, 2, 4, 8, 16):
            print(f"  R({n}) = {uniform_recurrence_radius(omega, n)}")
    else:
        print("\n(eventually constant: subshift constructions skipped)")


if __name__ == "__main__":
    main()

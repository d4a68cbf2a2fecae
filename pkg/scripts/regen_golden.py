#!/usr/bin/env python3
"""Regenerate the golden graph exports under tests/golden/."""

from pathlib import Path

from grigorchuk import build_gamma_recursive, export_dot, parse_omega

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    omega = parse_omega("012")
    for n in range(1, 7):
        g = build_gamma_recursive(omega, n)
        path = GOLDEN / f"gamma_012_n{n}.dot"
        path.write_text(export_dot(g))
        print(f"{path.name}: {g.n} vertices, {len(g.edges)} edges")


if __name__ == "__main__":
    main()

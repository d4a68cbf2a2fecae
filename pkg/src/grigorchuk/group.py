"""Grigorchuk group machinery: tree/ray actions, word problem, orders, balls.

Generators are the letters a, b, c, d. Words act with the rightmost letter
applied first, so apply_word("xy", v) == apply x after y.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .omega import OmegaSequence

GENERATORS = "abcd"

# b/c/d fix a ray whose first zero sits at a position where omega reads 2/1/0.
GEN_SYMBOL = {"b": 2, "c": 1, "d": 0}
SYMBOL_GEN = {2: "b", 1: "c", 0: "d"}

_KLEIN = {
    frozenset("bc"): "d",
    frozenset("bd"): "c",
    frozenset("cd"): "b",
}


@dataclass(frozen=True)
class Ray:
    """A boundary point cofinal with rho = 111..., stored as the finite prefix
    before the infinite tail of 1s. Canonical form strips trailing 1s, so rho
    itself has empty prefix and ray equality is string equality."""

    prefix: str = ""

    def __post_init__(self) -> None:
        if set(self.prefix) - {"0", "1"}:
            raise ValueError(f"ray prefix must be binary, got {self.prefix!r}")
        object.__setattr__(self, "prefix", self.prefix.rstrip("1"))

    def bit(self, i: int) -> str:
        """The i-th binary digit (1-based); the implicit tail is all 1s."""
        if i < 1:
            raise ValueError("positions are 1-based")
        return self.prefix[i - 1] if i <= len(self.prefix) else "1"

    def __str__(self) -> str:
        return (self.prefix or "") + "111..."


RHO = Ray("")


def _check_word(word: str) -> None:
    bad = set(word) - set(GENERATORS)
    if bad:
        raise ValueError(f"word letters must be in a/b/c/d, got {sorted(bad)}")


def first_zero_position(r: Ray) -> int | None:
    """1-based index of the first 0 digit; None exactly for rho."""
    pos = r.prefix.find("0")
    return None if pos < 0 else pos + 1


def fixing_generator(r: Ray, omega: OmegaSequence) -> str:
    """The unique letter among b, c, d that fixes r (undefined for rho)."""
    m = first_zero_position(r)
    if m is None:
        raise ValueError("rho is fixed by all of b, c, d")
    return SYMBOL_GEN[omega.at(m)]


def _flip(bit: str) -> str:
    return "1" if bit == "0" else "0"


def apply_generator(letter: str, target, omega: OmegaSequence):
    """Act by one generator on a TreeVertex (str over 0/1) or a Ray."""
    if letter not in GENERATORS:
        raise ValueError(f"unknown generator {letter!r}")
    if isinstance(target, Ray):
        return _apply_ray(letter, target, omega)
    return _apply_vertex(letter, target, omega)


def _apply_vertex(letter: str, v: str, omega: OmegaSequence) -> str:
    if letter == "a":
        return v if not v else _flip(v[0]) + v[1:]
    j = v.find("0") + 1  # 1-based position of the first 0
    if j == 0 or j == len(v):
        return v
    if omega.at(j) == GEN_SYMBOL[letter]:
        return v
    return v[:j] + _flip(v[j]) + v[j + 1:]


def _apply_ray(letter: str, r: Ray, omega: OmegaSequence) -> Ray:
    p = r.prefix
    if letter == "a":
        return Ray("0" + p[1:] if not p else _flip(p[0]) + p[1:])
    j = p.find("0") + 1
    if j == 0:  # no zero anywhere: r == rho, fixed by b, c, d
        return r
    if omega.at(j) == GEN_SYMBOL[letter]:
        return r
    if j == len(p):  # the flipped digit is the first 1 of the tail
        return Ray(p + "0")
    return Ray(p[:j] + _flip(p[j]) + p[j + 1:])


def apply_word(word: str, target, omega: OmegaSequence):
    """Fold of apply_generator, rightmost letter first."""
    _check_word(word)
    for letter in reversed(word):
        target = apply_generator(letter, target, omega)
    return target


def normalize_word(word: str) -> str:
    """Reduce using the universal relations only: squares vanish and adjacent
    b/c/d letters fuse through the Klein four-group table. The result
    alternates a-letters and single letters from {b,c,d} and represents the
    same element of every G_omega."""
    _check_word(word)
    stack: list[str] = []
    for ch in word:
        while True:
            if not stack:
                stack.append(ch)
                break
            top = stack[-1]
            if top == ch:
                stack.pop()
                break
            if top != "a" and ch != "a":
                stack.pop()
                ch = _KLEIN[frozenset((top, ch))]
                continue
            stack.append(ch)
            break
    return "".join(stack)


def _is_normalized(word: str) -> bool:
    return all(
        x != y and (x == "a" or y == "a") for x, y in zip(word, word[1:])
    )


def root_and_sections(word: str, omega: OmegaSequence) -> tuple[bool, str, str]:
    """Wreath decomposition of a word in alternating normal form.

    Returns (root_swap, section0, section1) with the sections read in
    G_{shifted omega}: the automorphism acts as w(xv) = swap(x) + section_x(v).
    """
    _check_word(word)
    if not _is_normalized(word):
        raise ValueError(f"word {word!r} is not in alternating normal form")
    swap = False
    sec = ["", ""]
    first = omega.at(1)
    for ch in word:
        if ch == "a":
            swap = not swap
            sec[0], sec[1] = sec[1], sec[0]
        else:
            if GEN_SYMBOL[ch] != first:
                sec[0] += "a"
            sec[1] += ch
    return swap, sec[0], sec[1]


@lru_cache(maxsize=262144)
def _trivial_normalized(word: str, omega: OmegaSequence) -> bool:
    if not word:
        return True
    if len(word) == 1:
        if word == "a":
            return False
        # A single b/c/d is the identity iff every omega symbol keeps its
        # first-level permutation trivial (possible for eventually constant
        # omega, e.g. b over the constant-2 sequence).
        return omega.symbols_from(1) <= {GEN_SYMBOL[word]}
    swap, s0, s1 = root_and_sections(word, omega)
    if swap:
        return False
    shifted = omega.shift(1)
    return _trivial_normalized(
        normalize_word(s0), shifted
    ) and _trivial_normalized(normalize_word(s1), shifted)


def is_trivial(word: str, omega: OmegaSequence) -> bool:
    """Exact word problem: does the word represent the identity of G_omega?

    Contraction argument: sections of a normalized word of length n have
    length <= ceil((n+1)/2) < n for n >= 2, so the recursion terminates.
    """
    return _trivial_normalized(normalize_word(word), omega)


def words_equal(w1: str, w2: str, omega: OmegaSequence) -> bool:
    """Every generator is an involution, so the inverse is the reversed word."""
    return is_trivial(w1 + w2[::-1], omega)


def _power_of_two(k: int) -> bool:
    return k & (k - 1) == 0


def element_order(word: str, omega: OmegaSequence, max_order: int) -> int | None:
    """Smallest k <= max_order with word^k trivial, else None.

    Powers of two are probed first by repeated squaring: the first trivial
    power of two is exactly the order whenever the order is a 2-power (the
    generic torsion case). Otherwise a linear scan settles the remaining k.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    w = normalize_word(word)
    p, k = w, 1
    while k <= max_order:
        if _trivial_normalized(p, omega):
            return k
        p = normalize_word(p + p)
        k *= 2
    acc, k = w, 1
    while k <= max_order:
        if not _power_of_two(k) and _trivial_normalized(acc, omega):
            return k
        acc = normalize_word(acc + w)
        k += 1
    return None


def find_moved_vertex(word: str, omega: OmegaSequence) -> str:
    """Some tree vertex moved by a nontrivial word, found through the section
    recursion (cheap: no exhaustive level scans)."""
    w = normalize_word(word)
    if _trivial_normalized(w, omega):
        raise ValueError("trivial words move no vertex")
    if len(w) == 1:
        if w == "a":
            return "0"
        k = GEN_SYMBOL[w]
        m = 1
        while omega.at(m) == k:
            m += 1
        return "1" * (m - 1) + "00"
    swap, s0, s1 = root_and_sections(w, omega)
    if swap:
        return "0"
    shifted = omega.shift(1)
    s0, s1 = normalize_word(s0), normalize_word(s1)
    if not _trivial_normalized(s0, shifted):
        return "0" + find_moved_vertex(s0, shifted)
    return "1" + find_moved_vertex(s1, shifted)


def orbit_contains(r: Ray, omega: OmegaSequence) -> tuple[bool, str]:
    """Every Ray value lies in the orbit of rho; the witness word maps rho to r
    by alternating first-digit flips with double-edge moves along the orbit
    graph. Moves are accumulated so the rightmost letter acts first."""
    from .schreier import gray_index  # local import: schreier builds on group

    j = gray_index(r)
    word = []
    current = RHO
    for i in range(j):
        if i % 2 == 0:
            letter = "a"
        else:
            fixed = fixing_generator(current, omega)
            letter = next(g for g in "bcd" if g != fixed)
        current = apply_generator(letter, current, omega)
        word.append(letter)
    if current != r:
        raise RuntimeError(f"move walk failed to reach {r!r}")
    return True, "".join(reversed(word))


_PROBE_COUNT = 48
_PROBE_MAX_DEPTH = 12


def _probe_vertices() -> tuple[str, ...]:
    rng = random.Random(0x5EED)
    probes = ["0", "1", "00", "10", "110", "1110"]
    while len(probes) < _PROBE_COUNT:
        depth = rng.randint(4, _PROBE_MAX_DEPTH)
        probes.append("".join(rng.choice("01") for _ in range(depth)))
    return tuple(probes)


_PROBES = _probe_vertices()


def ball_sizes(omega: OmegaSequence, n_max: int) -> list[int]:
    """Sizes of balls of radius 0..n_max in (G_omega, {a,b,c,d}) by breadth
    first search. Deduplication is by words_equal; the action on a fixed probe
    set only buckets candidates, so collisions cost time, never correctness."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")

    def fingerprint(w: str) -> tuple[str, ...]:
        return tuple(apply_word(w, v, omega) for v in _PROBES)

    buckets: dict[tuple[str, ...], list[str]] = {fingerprint(""): [""]}
    sizes = [1]
    frontier = [""]
    for _ in range(n_max):
        new_frontier = []
        for w in frontier:
            for g in GENERATORS:
                cand = normalize_word(w + g)
                key = fingerprint(cand)
                bucket = buckets.setdefault(key, [])
                if any(words_equal(cand, known, omega) for known in bucket):
                    continue
                bucket.append(cand)
                new_frontier.append(cand)
        sizes.append(sizes[-1] + len(new_frontier))
        frontier = new_frontier
    return sizes

"""Partitions and twist-decorated multipartitions.

A partition is a nonincreasing tuple of positive ints.  A conjugacy class of
the wreath product Z_n wr S_d is a multiset of decorated parts (size, twist)
with twist in Z_n; we store it as a tuple sorted by (-size, twist).  An
irreducible representation is labelled by an n-tuple of partitions with total
size d.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from itertools import combinations_with_replacement


# ---------------------------------------------------------------------------
# plain partitions

@lru_cache(maxsize=None)
def partitions_of(d: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    if max_part is None:
        max_part = d
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions_of(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def boxes(lam: tuple[int, ...]):
    """(row, col) pairs, 1-indexed."""
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield (i, j)


def content(i: int, j: int) -> int:
    return j - i

def hook_length(lam: tuple[int, ...], i: int, j: int) -> int:
    conj = conjugate(lam)
    return (lam[i - 1] - j) + (conj[j - 1] - i) + 1


def hook_dimension_factorial_ratio(lam: tuple[int, ...]):
    """d! / prod(hooks) as an exact Fraction-free pair (num, den)."""
    prod = 1
    for i, j in boxes(lam):
        prod *= hook_length(lam, i, j)
    return math.factorial(sum(lam)), prod


def classical_dim(lam: tuple[int, ...]) -> int:
    num, den = hook_dimension_factorial_ratio(lam)
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# decorated multipartitions (conjugacy classes of Z_n wr S_d)

Part = tuple[int, int]  # (size, twist)
Multipartition = tuple[Part, ...]


def normalize(parts) -> Multipartition:
    return tuple(sorted(parts, key=lambda p: (-p[0], p[1])))


def multipartitions(n: int, d: int) -> list[Multipartition]:
    """All conjugacy classes of Z_n wr S_d."""
    out = []
    for lam in partitions_of(d):
        sizes: dict[int, int] = {}
        for s in lam:
            sizes[s] = sizes.get(s, 0) + 1
        choices = [(s, list(combinations_with_replacement(range(n), m))) for s, m in sizes.items()]

        def rec(idx, acc):
            if idx == len(choices):
                out.append(normalize(acc))
                return
            s, opts = choices[idx]
            for tw in opts:
                rec(idx + 1, acc + [(s, t) for t in tw])

        rec(0, [])
    return out


def irrep_labels(n: int, d: int) -> list[tuple[tuple[int, ...], ...]]:
    """n-tuples of partitions with total size d."""
    out: list[tuple[tuple[int, ...], ...]] = [()]
    for comp in range(n):
        last = comp == n - 1
        nxt = []
        for pref in out:
            used = sum(sum(p) for p in pref)
            sizes = [d - used] if last else range(d - used + 1)
            for s in sizes:
                for lam in partitions_of(s):
                    nxt.append(pref + (lam,))
        out = nxt
    return out


def size(mu: Multipartition) -> int:
    return sum(s for s, _ in mu)


def aut_order(mu: Multipartition) -> int:
    mult: dict[Part, int] = {}
    for p in mu:
        mult[p] = mult.get(p, 0) + 1
    out = 1
    for m in mult.values():
        out *= math.factorial(m)
    return out


def z_order(n: int, mu: Multipartition) -> int:
    """Order of the centralizer of the class in Z_n wr S_d."""
    out = aut_order(mu)
    for s, _ in mu:
        out *= n * s
    return out


def negate(n: int, mu: Multipartition) -> Multipartition:
    return normalize((s, (-t) % n) for s, t in mu)


def twisted_part(mu: Multipartition) -> Multipartition:
    return normalize(p for p in mu if p[1] != 0)


def untwisted_part(mu: Multipartition) -> Multipartition:
    return normalize(p for p in mu if p[1] == 0)


def shift_twists(n: int, mu: Multipartition, k: int) -> Multipartition:
    """Part (s, t) goes to (s, s*k - t mod n); an involution for fixed k."""
    return normalize((s, (s * k - t) % n) for s, t in mu)


def underlying(mu: Multipartition) -> tuple[int, ...]:
    return tuple(sorted((s for s, _ in mu), reverse=True))


def union(mu: Multipartition, nu: Multipartition) -> Multipartition:
    return normalize(mu + nu)


# ---------------------------------------------------------------------------
# the ordering and pairing used by the triangular linear system

def ordered_parts(n: int, mu: Multipartition) -> list[Part]:
    """Parts sorted: larger size first, then twist mod gcd(size, n), then twist."""
    return sorted(mu, key=lambda p: (-p[0], p[1] % math.gcd(p[0], n), p[1]))


def twist_word(n: int, mu: Multipartition) -> tuple[int, ...]:
    return tuple(t for _, t in ordered_parts(n, mu))


def shift_candidates(n: int, eta: Multipartition) -> list[int]:
    """Shifts k whose twist action drops the first part's twist to its residue
    mod gcd(size, n)."""
    (s1, h1) = ordered_parts(n, eta)[0]
    c = math.gcd(s1, n)
    hbar = h1 % c
    return [k for k in range(1, n) if (-h1 + s1 * k) % n == (-hbar) % n]


def paired_shift(n: int, eta: Multipartition) -> int:
    """The canonical shift attached to a fully twisted class."""
    if not eta:
        raise ValueError("no shift attached to the empty class")
    (s1, h1) = ordered_parts(n, eta)[0]
    c = math.gcd(s1, n)
    hbar = h1 % c
    cands = shift_candidates(n, eta)
    idx = hbar if 1 <= h1 <= c - 1 else hbar + 1
    if idx < 1 or idx > len(cands):
        raise ValueError(f"no canonical shift for {eta}: candidates {cands}, wanted #{idx}")
    return cands[idx - 1]


def twisted_classes_upto(n: int, d: int) -> list[Multipartition]:
    """Fully twisted classes of size 1..d (column index set)."""
    out = []
    for e in range(1, d + 1):
        for mu in multipartitions(n, e):
            if mu and all(t != 0 for _, t in mu):
                out.append(mu)
    return out


def paired_rows(n: int, d: int) -> list[tuple[Multipartition, int, Multipartition]]:
    """Row index set: (class, shift, source column) triples."""
    out = []
    for eta in twisted_classes_upto(n, d):
        k = paired_shift(n, eta)
        parts = ordered_parts(n, eta)
        tail = normalize(parts[1:])
        mu = union(negate(n, shift_twists(n, tail, k)), (((parts[0][0]), 0),))
        out.append((mu, k, eta))
    return out


# ---------------------------------------------------------------------------
# text format: "2^1,1^0" means parts of size 2 twist 1 and size 1 twist 0

def format_multipartition(mu: Multipartition) -> str:
    if not mu:
        return "-"
    return ",".join(f"{s}^{t}" for s, t in normalize(mu))


def parse_multipartition(text: str, n: int) -> Multipartition:
    text = text.strip()
    if text in ("-", ""):
        return ()
    parts = []
    for chunk in text.split(","):
        m = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(-?\d+)\s*)?", chunk)
        if not m:
            raise ValueError(f"bad part {chunk!r}")
        s = int(m.group(1))
        t = int(m.group(2) or 0) % n
        if s <= 0:
            raise ValueError("part sizes must be positive")
        parts.append((s, t))
    return normalize(parts)


def format_partition_tuple(lams: tuple[tuple[int, ...], ...]) -> str:
    return "|".join("." .join(map(str, lam)) if lam else "-" for lam in lams)


def parse_partition_tuple(text: str, n: int) -> tuple[tuple[int, ...], ...]:
    chunks = text.strip().split("|")
    if len(chunks) != n:
        raise ValueError(f"expected {n} components separated by '|'")
    out = []
    for c in chunks:
        c = c.strip()
        if c in ("-", ""):
            out.append(())
        else:
            lam = tuple(int(x) for x in c.split("."))
            if any(a <= 0 for a in lam) or any(
                lam[i] < lam[i + 1] for i in range(len(lam) - 1)
            ):
                raise ValueError(f"bad partition {c!r}")
            out.append(lam)
    return tuple(out)

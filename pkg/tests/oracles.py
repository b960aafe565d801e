"""Independent oracles used by the test suite.

Everything here is computed from first principles with naive algorithms:
symmetric-group characters by the border-strip recursion, wreath-product
characters by explicit induction over group elements, and analytic series by
rational Taylor expansion.  Nothing imports the package's character or series
machinery except for final-value comparison in the tests.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product


# ---------------------------------------------------------------------------
# symmetric group characters via the border-strip recursion


def oracle_partitions(m: int, max_part: int | None = None):
    if max_part is None:
        max_part = m
    if m == 0:
        return [()]
    out = []
    for first in range(min(m, max_part), 0, -1):
        for rest in oracle_partitions(m - first, first):
            out.append((first,) + rest)
    return out


def _removable_strips(lam: tuple[int, ...], length: int):
    """All (smaller partition, height) from removing one border strip."""
    out = []
    total = sum(lam)
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    cellset = set(cells)
    for mu in oracle_partitions(total - length):
        if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
            continue
        strip = [c for c in cells if c[0] >= len(mu) or c[1] >= mu[c[0]]]
        stripset = set(strip)
        if any(
            (i + 1, j) in stripset and (i, j + 1) in stripset and (i + 1, j + 1) in stripset
            for (i, j) in stripset
        ):
            continue
        seen = {strip[0]}
        stack = [strip[0]]
        while stack:
            i, j = stack.pop()
            for p in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if p in stripset and p not in seen:
                    seen.add(p)
                    stack.append(p)
        if len(seen) != len(strip):
            continue
        ht = len({i for i, _ in strip}) - 1
        out.append((mu, ht))
    return out


@lru_cache(maxsize=None)
def mn_character(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Symmetric group character by peeling border strips."""
    if not rho:
        return 1
    length, rest = rho[0], rho[1:]
    return sum(
        (-1) ** ht * mn_character(mu, rest) for mu, ht in _removable_strips(lam, length)
    )


# ---------------------------------------------------------------------------
# wreath product group elements and induced characters


def wreath_elements(n: int, d: int):
    """All (permutation, twists) pairs; perm[i] is the image of position i."""
    return [
        (perm, tw)
        for perm in permutations(range(d))
        for tw in product(range(n), repeat=d)
    ]


def wreath_mul(n: int, x, y):
    sx, ax = x
    sy, ay = y
    perm = tuple(sx[sy[i]] for i in range(len(sx)))
    tw = tuple((ax[sy[i]] + ay[i]) % n for i in range(len(sx)))
    return perm, tw


def wreath_inv(n: int, x):
    sx, ax = x
    d = len(sx)
    inv = [0] * d
    for i in range(d):
        inv[sx[i]] = i
    tw = tuple((-ax[inv[i]]) % n for i in range(d))
    return tuple(inv), tw


def wreath_class(n: int, g) -> tuple[tuple[int, int], ...]:
    """Conjugacy invariant: sorted (cycle length, cycle twist) pairs."""
    perm, tw = g
    d = len(perm)
    seen = [False] * d
    parts = []
    for start in range(d):
        if seen[start]:
            continue
        cur, length, twist = start, 0, 0
        while not seen[cur]:
            seen[cur] = True
            length += 1
            twist += tw[cur]
            cur = perm[cur]
        parts.append((length, twist % n))
    return tuple(sorted(parts, reverse=True))


def _perm_cycle_type(perm) -> tuple[int, ...]:
    d = len(perm)
    seen = [False] * d
    out = []
    for start in range(d):
        if seen[start]:
            continue
        cur, length = start, 0
        while not seen[cur]:
            seen[cur] = True
            length += 1
            cur = perm[cur]
        out.append(length)
    return tuple(sorted(out, reverse=True))


def _subgroup_value(n: int, blocks, labels, g):
    """Character of the block subgroup on g, as a dict exponent -> integer.

    The block for component j carries the linear character twist -> zeta^(-j t)
    tensored with the symmetric group character of labels[j]; returns None if
    g does not preserve the blocks.
    """
    perm, tw = g
    expo = 0
    value = 1
    for j, block in enumerate(blocks):
        if any(perm[i] not in block for i in block):
            return None
        sub = [i for i in block]
        rel = {p: r for r, p in enumerate(sub)}
        subperm = tuple(rel[perm[p]] for p in sub)
        expo += -j * sum(tw[i] for i in block)
        value *= mn_character(labels[j], _perm_cycle_type(subperm))
    if value == 0:
        return {}
    return {expo % n: value}


def wreath_character_oracle(n: int, d: int):
    """Entry-for-entry character table by induction from block subgroups.

    Returns (class representatives, class sizes, {label: {class: vector}}),
    where a vector maps exponents of the primitive n-th root to rationals.
    """
    elements = wreath_elements(n, d)
    order = len(elements)
    reps: dict = {}
    sizes: dict = {}
    for g in elements:
        c = wreath_class(n, g)
        reps.setdefault(c, g)
        sizes[c] = sizes.get(c, 0) + 1
    table: dict = {}
    for shapes in _component_shapes(n, d):
        blocks = []
        start = 0
        for comp in shapes:
            blocks.append(tuple(range(start, start + sum(comp))))
            start += sum(comp)
        h_order = n**d
        for comp in shapes:
            h_order *= _fact(sum(comp))
        row = {}
        for cls, y in reps.items():
            acc: dict[int, int] = {}
            for x in elements:
                conj = wreath_mul(n, wreath_mul(n, x, y), wreath_inv(n, x))
                val = _subgroup_value(n, blocks, shapes, conj)
                if val:
                    for e, v in val.items():
                        acc[e] = acc.get(e, 0) + v
            row[cls] = {e: Fraction(v, h_order) for e, v in acc.items() if v}
        table[shapes] = row
    return list(reps), sizes, table


def _fact(m: int) -> int:
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def _component_shapes(n: int, d: int):
    """All n-tuples of partitions with total size d."""
    def rec(remaining, slots):
        if slots == 1:
            return [(p,) for p in map(tuple, [s for s in oracle_partitions(remaining)])]
        out = []
        for here in range(remaining + 1):
            for p in oracle_partitions(here):
                for rest in rec(remaining - here, slots - 1):
                    out.append((tuple(p),) + rest)
        return out

    return rec(d, n)


# ---------------------------------------------------------------------------
# analytic Taylor oracles


def csc_taylor(order: int) -> list[Fraction]:
    """Coefficients of t*csc(t) = t/sin(t) through t^order."""
    sin_over_t = [
        Fraction((-1) ** (m // 2), _fact(m + 1)) if m % 2 == 0 else Fraction(0)
        for m in range(order + 1)
    ]
    inv = [Fraction(0)] * (order + 1)
    inv[0] = Fraction(1)
    for m in range(1, order + 1):
        inv[m] = -sum(sin_over_t[j] * inv[m - j] for j in range(1, m + 1))
    return inv

"""Beta-sets (Maya diagrams), n-quotients and border strips.

A partition lam is encoded by first moments beta_r = lam_r + L - r for a
window length L.  Residue classes of the beta numbers mod n give the
n-quotient; a partition with empty n-core has balanced residue classes and is
determined by its quotient.  Border strip additions/removals are single jumps
b -> b +/- len of one beta number.
"""

from __future__ import annotations

from .partitions import conjugate, partitions_of


def beta_set(lam: tuple[int, ...], length: int) -> tuple[int, ...]:
    if length < len(lam):
        raise ValueError("window too short")
    padded = lam + (0,) * (length - len(lam))
    return tuple(padded[r - 1] + length - r for r in range(1, length + 1))


def partition_from_beta(betas) -> tuple[int, ...]:
    bs = sorted(betas, reverse=True)
    lam = tuple(b - (len(bs) - r) for r, b in enumerate(bs, start=1))
    return tuple(p for p in lam if p > 0)


def _window(lam: tuple[int, ...], n: int, extra: int = 0) -> int:
    L = len(lam) + extra
    return L + (-L) % n if L else n


def n_quotient(lam: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    """The n-tuple of quotient partitions, component i from betas = i mod n."""
    L = _window(lam, n)
    betas = beta_set(lam, L)
    comps = []
    for i in range(n):
        sub = sorted(((b - i) // n for b in betas if b % n == i), reverse=True)
        comps.append(partition_from_beta(sub))
    return tuple(comps)


def is_balanced(lam: tuple[int, ...], n: int) -> bool:
    L = _window(lam, n)
    betas = beta_set(lam, L)
    counts = [0] * n
    for b in betas:
        counts[b % n] += 1
    return len(set(counts)) == 1


def n_core(lam: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Partition left after removing all possible n-strips."""
    L = _window(lam, n)
    betas = beta_set(lam, L)
    new = []
    for i in range(n):
        cnt = sum(1 for b in betas if b % n == i)
        new.extend(n * j + i for j in range(cnt))
    return partition_from_beta(new)


def combine_quotient(comps: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Inverse of n_quotient on balanced partitions (empty core)."""
    n = len(comps)
    m = max([len(c) for c in comps] + [1])
    betas = []
    for i, comp in enumerate(comps):
        for b in beta_set(comp, m):
            betas.append(n * b + i)
    return partition_from_beta(betas)


def add_strip(lam: tuple[int, ...], length: int) -> list[tuple[tuple[int, ...], int]]:
    """All ways to add a border strip: (new partition, height)."""
    L = _window(lam, max(length, 1), extra=length)
    betas = set(beta_set(lam, L))
    out = []
    for b in sorted(betas):
        if b + length not in betas:
            ht = sum(1 for x in betas if b < x < b + length)
            new = set(betas)
            new.remove(b)
            new.add(b + length)
            out.append((partition_from_beta(new), ht))
    return out


def remove_strip(lam: tuple[int, ...], length: int) -> list[tuple[tuple[int, ...], int]]:
    """All ways to remove a border strip: (new partition, height)."""
    L = _window(lam, max(length, 1), extra=length)
    betas = set(beta_set(lam, L))
    out = []
    for b in sorted(betas):
        if b >= length and b - length not in betas:
            ht = sum(1 for x in betas if b - length < x < b)
            new = set(betas)
            new.remove(b)
            new.add(b - length)
            out.append((partition_from_beta(new), ht))
    return out


def strip_sign(lam: tuple[int, ...], n: int) -> int:
    """Product of (-1)^height over a full n-strip removal sequence.

    Requires an empty n-core; the value does not depend on the order of
    removals.
    """
    sign = 1
    cur = lam
    while cur:
        choices = remove_strip(cur, n)
        if not choices:
            raise ValueError(f"{lam} has a nonempty {n}-core")
        cur, ht = choices[0]
        sign *= (-1) ** ht
    return sign


def verify_sign_recursion(n: int, d: int) -> bool:
    """Adding a long border strip multiplies the strip-removal sign by
    (-1)^(quotient stones jumped + rows occupied - 1).

    The rows occupied minus one equals the total stones jumped by the long
    move, and the quotient jumps are those landing a multiple of n away.
    Checked for every balanced partition of size up to n*(d-1) and every
    admissible strip addition keeping the size at most n*d.
    """
    for d0 in range(0, d):
        for lam in partitions_of(n * d0):
            if not is_balanced(lam, n):
                continue
            s_lam = strip_sign(lam, n)
            for k in range(1, d - d0 + 1):
                length = k * n
                L = _window(lam, max(length, 1), extra=length)
                betas = set(beta_set(lam, L))
                for b in sorted(betas):
                    if b + length in betas:
                        continue
                    ht = sum(1 for x in betas if b < x < b + length)
                    jumps = sum(
                        1 for x in betas if x % n == b % n and b < x < b + length
                    )
                    new = set(betas)
                    new.remove(b)
                    new.add(b + length)
                    sigma = partition_from_beta(new)
                    if strip_sign(sigma, n) != (-1) ** (jumps + ht) * s_lam:
                        return False
    return True


def colored_box_data(lam: tuple[int, ...], n: int):
    """Per box (1-indexed): (row, col, content mod n, hook color vector).

    The hook color vector counts, for each color c, the boxes of color c in
    the hook of the box.
    """
    conj = conjugate(lam)
    out = []
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            colors = [0] * n
            for jj in range(j, row + 1):
                colors[(jj - i) % n] += 1
            for ii in range(i + 1, conj[j - 1] + 1):
                colors[(j - ii) % n] += 1
            out.append((i, j, (j - i) % n, tuple(colors)))
    return out


def color_counts(lam: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Number of boxes of each content color."""
    out = [0] * n
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            out[(j - i) % n] += 1
    return tuple(out)


def weighted_row_counts(lam: tuple[int, ...], n: int) -> tuple[int, ...]:
    """For each color c, sum over boxes of that color of (row index - 1)."""
    out = [0] * n
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            out[(j - i) % n] += i - 1
    return tuple(out)

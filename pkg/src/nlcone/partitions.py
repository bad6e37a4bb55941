"""Partitions, dominant weights, and subsets of [n].

Partitions are stored as tuples of weakly decreasing positive integers with
no trailing zeros (the empty tuple is the empty partition).  Dominant
weights keep their explicit length, since identities like the shift by a
scalar depend on the rank.  Subsets of [n] are strictly increasing tuples of
1-based indices; the ambient n is passed alongside where it matters.
"""

from __future__ import annotations

from itertools import combinations


Partition = tuple  # weakly decreasing, positive entries, canonical
Weight = tuple     # weakly decreasing integers, explicit length
Subset = tuple     # strictly increasing 1-based indices


def partition(parts) -> Partition:
    """Canonicalize an iterable of nonnegative integers into a partition."""
    p = tuple(int(x) for x in parts)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def weight(parts) -> Weight:
    """Validate a dominant weight (weakly decreasing, zeros kept)."""
    w = tuple(int(x) for x in parts)
    if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
        raise ValueError(f"not weakly decreasing: {w}")
    return w


def subset(elements, n: int) -> Subset:
    """Validate a subset of [n] given as 1-based indices."""
    s = tuple(sorted(int(x) for x in elements))
    if len(set(s)) != len(s):
        raise ValueError(f"repeated elements in {s}")
    if s and not (1 <= s[0] and s[-1] <= n):
        raise ValueError(f"{s} not inside [1, {n}]")
    return s


def size(p) -> int:
    return sum(p)


def length(p) -> int:
    return len(p)


def part(p, i: int) -> int:
    """i-th part (1-based), zero beyond the length."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def contains(big, small) -> bool:
    """Young-diagram containment, with zero padding."""
    return all(part(big, i) >= part(small, i)
               for i in range(1, max(len(big), len(small)) + 1))


def intersect(p, q) -> Partition:
    """Intersection of Young diagrams (entrywise min)."""
    return partition(min(part(p, i), part(q, i))
                     for i in range(1, min(len(p), len(q)) + 1))


def conjugate(p) -> Partition:
    """Transpose of the Young diagram."""
    if not p:
        return ()
    out = [0] * p[0]
    for v in p:
        for j in range(v):
            out[j] += 1
    return tuple(out)


def complement(p, width: int, height: int) -> Partition:
    """Complement inside the width^height rectangle (an involution)."""
    p = tuple(p)
    if len(p) > height or (p and p[0] > width):
        raise ValueError(f"{p} does not fit in ({width}^{height})")
    return partition(width - part(p, height - i) for i in range(height))


def tau_of_subset(a: Subset) -> Partition:
    """Partition (i_r - r >= ... >= i_1 - 1) attached to A = {i_1<...<i_r}."""
    r = len(a)
    return partition(a[k] - (k + 1) for k in reversed(range(r)))


def restrict(w, a: Subset) -> Partition:
    """Parts of w indexed by A (zero-padded), as a partition."""
    return partition(part(w, i) for i in a)


def restrict_sum(w, a: Subset) -> int:
    return sum(part(w, i) for i in a)


def weight_AA(lam, a: Subset, a_prime: Subset) -> Weight:
    """GL-weight (lam_{i'_1},...,lam_{i'_s}, -lam_{i_t},...,-lam_{i_1})."""
    if set(a) & set(a_prime):
        raise ValueError("A and A' overlap")
    pos = [part(lam, i) for i in a_prime]
    neg = [-part(lam, i) for i in reversed(a)]
    return weight(pos + neg)


def weight_upper(lam, a: Subset, a_prime: Subset, n: int) -> Partition:
    """Restriction of lam to [n] minus (A union A')."""
    if set(a) & set(a_prime):
        raise ValueError("A and A' overlap")
    used = set(a) | set(a_prime)
    return partition(part(lam, i) for i in range(1, n + 1) if i not in used)


def star_dual(w: Weight) -> Weight:
    """Highest weight of the dual representation: (-w_r,...,-w_1)."""
    return tuple(-x for x in reversed(w))


def shift(w: Weight, a: int) -> Weight:
    """Add the scalar a to every entry (tensoring by det^a)."""
    return tuple(x + a for x in w)


def prefix_union(a: int, ell: int, nu) -> Partition:
    """The partition a^ell followed by nu; requires a >= nu_1."""
    if nu and a < nu[0]:
        raise ValueError(f"prefix {a} smaller than nu_1={nu[0]}")
    return partition((a,) * ell + tuple(nu))


def subpartitions(p):
    """All partitions contained in p, by descending-row backtracking."""
    p = tuple(p)

    def rec(i, cap):
        if i == len(p):
            yield ()
            return
        hi = min(cap, p[i])
        for v in range(hi, 0, -1):
            for rest in rec(i + 1, v):
                yield (v,) + rest
        yield ()

    yield from rec(0, p[0] if p else 0)


def partitions_of(total: int, max_part: int | None = None,
                  max_len: int | None = None):
    """All partitions of `total` with the given bounds."""
    if max_part is None:
        max_part = total
    if max_len is None:
        max_len = total

    def rec(rem, cap, slots):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        for v in range(min(cap, rem), 0, -1):
            for rest in rec(rem - v, v, slots - 1):
                yield (v,) + rest

    yield from rec(total, max_part, max_len)


def all_subsets(n: int, k: int | None = None):
    """Subsets of [n], optionally of fixed size k."""
    base = range(1, n + 1)
    if k is not None:
        yield from combinations(base, k)
        return
    for r in range(n + 1):
        yield from combinations(base, r)


def parse_partition(text: str) -> Partition:
    """Parse the CLI text form: comma-separated parts; '' or '0' is empty."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    return partition(int(x) for x in text.split(","))


def format_partition(p) -> str:
    return ",".join(str(x) for x in p) if p else "0"


def parse_subset(text: str, n: int) -> Subset:
    text = text.strip()
    if text == "":
        return ()
    return subset((int(x) for x in text.split(",")), n)

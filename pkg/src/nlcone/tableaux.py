"""Semistandard tableaux: ballotness, jeu de taquin, RSK, infusion, demotion.

A tableau is stored as an immutable pair (skew shape, row fillings).  Cells
are addressed (row, column), 1-based, English orientation.  Entries may be
any integers; negative entries are used for the auxiliary inner fillings of
the demotion-RSK correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, contains, part, partition


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise ValueError(f"inner {self.inner} not inside outer {self.outer}")

    @property
    def n_cells(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self):
        """All cells (row, col), 1-based, row-major."""
        for r in range(1, len(self.outer) + 1):
            for c in range(part(self.inner, r) + 1, self.outer[r - 1] + 1):
                yield (r, c)

    def inner_corners(self):
        """Maximally-southeast cells of the inner shape."""
        inner = self.inner
        out = []
        for r in range(1, len(inner) + 1):
            c = inner[r - 1]
            if c > 0 and part(inner, r + 1) < c:
                out.append((r, c))
        return out


def skew(outer, inner=()) -> SkewShape:
    return SkewShape(partition(outer), partition(inner))


def star_shape(lam, mu) -> SkewShape:
    """lam and mu corner to corner, lam southwest of mu."""
    lam, mu = partition(lam), partition(mu)
    w = lam[0] if lam else 0
    outer = tuple(w + m for m in mu) + lam
    inner = (w,) * len(mu)
    return SkewShape(partition(outer), partition(inner))


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    rows: tuple  # rows[i] is the tuple of entries of row i+1, left to right

    def __post_init__(self):
        outer, inner = self.shape.outer, self.shape.inner
        if len(self.rows) != len(outer):
            raise ValueError("row count does not match shape")
        for r in range(1, len(outer) + 1):
            row = self.rows[r - 1]
            lo = part(inner, r)
            if len(row) != outer[r - 1] - lo:
                raise ValueError(f"row {r} has wrong length")
            for j in range(len(row) - 1):
                if row[j] > row[j + 1]:
                    raise ValueError(f"row {r} not weakly increasing")
        for (r, c) in self.shape.cells():
            if r > 1 and self.entry(r - 1, c) is not None:
                if self.entry(r - 1, c) >= self.entry(r, c):
                    raise ValueError(f"column {c} not strictly increasing")

    def entry(self, r: int, c: int):
        """Entry at (row, col) or None outside the skew shape."""
        outer, inner = self.shape.outer, self.shape.inner
        if not (1 <= r <= len(outer)):
            return None
        lo = part(inner, r)
        if not (lo < c <= outer[r - 1]):
            return None
        return self.rows[r - 1][c - 1 - lo]

    def content(self):
        """Content vector as a dict value -> multiplicity."""
        cnt = {}
        for row in self.rows:
            for v in row:
                cnt[v] = cnt.get(v, 0) + 1
        return cnt

    def content_partition(self) -> Partition:
        """Content as a partition; requires entries 1..k with weakly
        decreasing multiplicities."""
        cnt = self.content()
        if not cnt:
            return ()
        k = max(cnt)
        if min(cnt) < 1:
            raise ValueError("content has nonpositive entries")
        mult = tuple(cnt.get(i, 0) for i in range(1, k + 1))
        return partition(mult)

    def render(self) -> str:
        """Aligned text rendering; dots mark inner cells."""
        outer, inner = self.shape.outer, self.shape.inner
        width = max((len(str(v)) for row in self.rows for v in row), default=1)
        lines = []
        for r in range(1, len(outer) + 1):
            cells = ["." * width] * part(inner, r)
            cells += [str(v).rjust(width) for v in self.rows[r - 1]]
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"outer": list(self.shape.outer),
                "inner": list(self.shape.inner),
                "rows": [list(r) for r in self.rows]}


def tableau(outer, inner, rows) -> Tableau:
    return Tableau(skew(outer, inner), tuple(tuple(r) for r in rows))


def yamanouchi(mu) -> Tableau:
    """Super-semistandard tableau Y_mu: row i filled with i's."""
    mu = partition(mu)
    return Tableau(skew(mu), tuple((i + 1,) * m for i, m in enumerate(mu)))


def row_word(t: Tableau):
    """Reading word: right to left along rows, top to bottom."""
    out = []
    for row in t.rows:
        out.extend(reversed(row))
    return tuple(out)


def rev_row_word(t: Tableau):
    return tuple(reversed(row_word(t)))


def is_ballot_word(w) -> bool:
    """Every prefix has #(i-1) >= #(i) for all i >= 2."""
    cnt = {}
    for v in w:
        cnt[v] = cnt.get(v, 0) + 1
        if v >= 2 and cnt.get(v - 1, 0) < cnt[v]:
            return False
    return True


def is_ballot(t: Tableau) -> bool:
    return is_ballot_word(row_word(t))


def _grid(t: Tableau):
    """Mutable dict {(r, c): entry} of the filled cells."""
    return {cell: t.entry(*cell) for cell in t.shape.cells()}


def _from_grid(grid) -> Tableau:
    if not grid:
        return Tableau(skew((), ()), ())
    nrows = max(r for r, _ in grid)
    outer, inner, rows = [], [], []
    for r in range(1, nrows + 1):
        cols = sorted(c for (rr, c) in grid if rr == r)
        if cols:
            if cols != list(range(cols[0], cols[-1] + 1)):
                raise ValueError("row cells not contiguous")
            inner.append(cols[0] - 1)
            outer.append(cols[-1])
            rows.append(tuple(grid[(r, c)] for c in cols))
        else:
            inner.append(0)
            outer.append(0)
            rows.append(())
    while outer and outer[-1] == 0:
        outer.pop(), inner.pop(), rows.pop()
    return Tableau(SkewShape(partition(outer), partition(inner)),
                   tuple(rows))


def jdt_slide(t: Tableau, corner) -> Tableau:
    """One jeu de taquin slide into the given inner corner."""
    if corner not in t.shape.inner_corners():
        raise ValueError(f"{corner} is not an inner corner")
    grid = _grid(t)
    r, c = corner
    while True:
        a = grid.get((r, c + 1))  # east
        b = grid.get((r + 1, c))  # south
        if a is None and b is None:
            break
        if a is None or (b is not None and b <= a):
            grid[(r, c)] = b
            del grid[(r + 1, c)]
            r += 1
        else:
            grid[(r, c)] = a
            del grid[(r, c + 1)]
            c += 1
    return _from_grid(grid)


def rectify(t: Tableau, order=None) -> Tableau:
    """Iterated slides to a straight shape (corner-order independent)."""
    if order is not None:
        for corner in order:
            t = jdt_slide(t, tuple(corner))
        if t.shape.inner:
            raise ValueError("corner sequence did not rectify")
        return t
    while t.shape.inner:
        t = jdt_slide(t, t.shape.inner_corners()[-1])
    return t


def _std_corner(s: Tableau):
    """Corner holding the largest entry of a straight tableau, rightmost
    occurrence first (standardization order)."""
    best = None
    for r in range(1, len(s.shape.outer) + 1):
        row = s.rows[r - 1]
        if not row:
            continue
        v, c = row[-1], s.shape.outer[r - 1]
        if best is None or v > best[0] or (v == best[0] and c > best[2]):
            best = (v, r, c)
    _, r, c = best
    return (r, c)


def infusion(s: Tableau, t: Tableau):
    """Tableau switching: slide t through s, recording evacuated entries.

    s must be straight of shape t.inner.  Returns (Rect(t), record) where
    the record occupies t.outer / Rect(t).outer; applying infusion to the
    output returns (s, t).
    """
    if s.shape.inner or s.shape.outer != t.shape.inner:
        raise ValueError("shape mismatch: need straight s with t on top")
    s_grid = _grid(s)
    record = {}
    cur = t
    while s_grid:
        inner = _from_grid(s_grid).shape.outer if s_grid else ()
        corner = _std_corner(_from_grid(s_grid))
        old_outer = cur.shape.outer
        cur = jdt_slide(cur, corner)
        # the slide vacates exactly one cell of the old outer boundary
        vacated = _vacated_cell(old_outer, cur.shape.outer)
        record[vacated] = s_grid.pop(corner)
    rect = cur
    rec_t = _record_tableau(t.shape.outer, rect.shape.outer, record)
    return rect, rec_t


def _vacated_cell(old_outer, new_outer):
    for r in range(1, len(old_outer) + 1):
        if part(new_outer, r) != old_outer[r - 1]:
            return (r, old_outer[r - 1])
    raise AssertionError("no cell vacated by slide")


def _record_tableau(outer, inner, entries) -> Tableau:
    rows = []
    for r in range(1, len(outer) + 1):
        lo = part(inner, r)
        rows.append(tuple(entries[(r, c)] for c in range(lo + 1, outer[r - 1] + 1)))
    while rows and not rows[-1] and len(rows) > len(outer):
        rows.pop()
    return Tableau(SkewShape(partition(outer), partition(inner)), tuple(rows))


# ---------------------------------------------------------------------------
# RSK


@dataclass(frozen=True)
class Biword:
    top: tuple
    bottom: tuple

    def __post_init__(self):
        if len(self.top) != len(self.bottom):
            raise ValueError("rows of unequal length")
        for i in range(len(self.top) - 1):
            if self.top[i] > self.top[i + 1]:
                raise ValueError("top row not weakly increasing")
            if self.top[i] == self.top[i + 1] and \
                    self.bottom[i] > self.bottom[i + 1]:
                raise ValueError("bottom row not sorted within equal tops")


def biword(top, bottom) -> Biword:
    return Biword(tuple(top), tuple(bottom))


def _insert_row(rows, x):
    """Row-insert x; returns the (row, col) of the new box, 1-based."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return (r + 1, 1)
        row = rows[r]
        # leftmost entry strictly greater than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] <= x:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(row):
            row.append(x)
            return (r + 1, lo + 1)
        row[lo], x = x, row[lo]
        r += 1


def rsk(b: Biword):
    """Row-insertion RSK: biword -> (P, Q) of the same straight shape."""
    p_rows, q_rows = [], []
    for q, x in zip(b.top, b.bottom):
        r, _ = _insert_row(p_rows, x)
        if r > len(q_rows):
            q_rows.append([])
        q_rows[r - 1].append(q)
    shape_ = partition(len(r_) for r_ in p_rows)
    p = Tableau(skew(shape_), tuple(tuple(r_) for r_ in p_rows))
    q = Tableau(skew(shape_), tuple(tuple(r_) for r_ in q_rows))
    return p, q


def rsk_inverse(p: Tableau, q: Tableau) -> Biword:
    """Inverse RSK by reverse row insertion from the largest Q entries."""
    if p.shape != q.shape or p.shape.inner:
        raise ValueError("need equal straight shapes")
    p_rows = [list(r) for r in p.rows]
    q_rows = [list(r) for r in q.rows]
    pairs = []
    for _ in range(p.shape.n_cells):
        # rightmost largest entry of Q is at the end of some row; among
        # rows ending with the max, take the lowest (largest column ties
        # were created last).
        best = None
        for r in range(len(q_rows)):
            row = q_rows[r]
            if row and (best is None or row[-1] >= best[0]):
                best = (row[-1], r)
        val, r = best
        if len(q_rows[r]) != len(p_rows[r]) or \
                (r + 1 < len(p_rows) and len(p_rows[r + 1]) >= len(p_rows[r])):
            raise ValueError("recording tableau is not a valid Q-tableau")
        q_rows[r].pop()
        x = p_rows[r].pop()
        for rr in range(r - 1, -1, -1):
            row = p_rows[rr]
            # rightmost entry strictly smaller than x
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            row[lo - 1], x = x, row[lo - 1]
        pairs.append((val, x))
        if not q_rows[-1]:
            q_rows.pop(), p_rows.pop()
    pairs.reverse()
    return biword([a for a, _ in pairs], [b for _, b in pairs])


def insertion_tableau(word) -> Tableau:
    """P-tableau of a plain word."""
    rows = []
    for x in word:
        _insert_row(rows, x)
    return Tableau(skew(partition(len(r) for r in rows)),
                   tuple(tuple(r) for r in rows))


def knuth_equivalent(w, u) -> bool:
    """True iff the two words have equal insertion tableaux."""
    return insertion_tableau(tuple(w)) == insertion_tableau(tuple(u))


# ---------------------------------------------------------------------------
# Demotion


def _column_order(outer):
    """Cells of a straight shape in column reading order: columns left to
    right, top to bottom within a column."""
    out = []
    width = outer[0] if outer else 0
    for c in range(1, width + 1):
        for r in range(1, len(outer) + 1):
            if outer[r - 1] >= c:
                out.append((r, c))
    return out


def demote(t: Tableau, c0):
    """Demotion at the inner corner c0; returns (tableau, row index).

    The input is a ballot tableau of shape nu/lam, c0 a corner of lam.
    The output has shape nu/(lam minus c0) and content grown by one box,
    in the returned row.
    """
    lam = t.shape.inner
    r0, col0 = c0
    if part(lam, r0) != col0 or part(lam, r0 + 1) >= col0:
        raise ValueError(f"{c0} is not a corner of the inner shape")
    grid = _grid(t)
    order = _column_order(t.shape.outer)
    pos = {cell: i for i, cell in enumerate(order)}
    grid[c0] = 1
    cur, val = c0, 1
    while True:
        nxt = None
        for cell in order[pos[cur] + 1:]:
            if grid.get(cell) == val:
                nxt = cell
                break
        if nxt is None:
            break
        grid[nxt] = val + 1
        cur, val = nxt, val + 1
    return _from_grid(grid), val


def demotion_rho(t: Tableau, a_prime: int, ell: int) -> Partition:
    """Content of the tableau obtained by demoting away the inner rows
    below a_prime, right to left and bottom to top.

    t must be ballot of shape nu/mu with content lam, len(lam) <= ell, and
    entries below row ell at most a_prime.
    """
    if not is_ballot(t):
        raise ValueError("tableau is not ballot")
    lam = t.content_partition()
    mu = t.shape.inner
    if len(lam) > ell:
        raise ValueError("content longer than ell")
    for (r, c) in t.shape.cells():
        if r > ell and t.entry(r, c) > a_prime:
            raise ValueError("entry below row ell exceeds a_prime")
    inf = infusion(yamanouchi(mu), t)[1]  # SSYT(nu/lam, mu)
    cur = inf
    for r in range(len(lam), a_prime, -1):
        for c in range(lam[r - 1], 0, -1):
            cur, _ = demote(cur, (r, c))
    return cur.content_partition()


def super_negative(lam, corner=None) -> Tableau:
    """Standard filling of lam with entries -|lam|..-1 whose largest entry
    (-1) sits at the given corner (default: column-superstandard order)."""
    lam = partition(lam)
    n = sum(lam)
    if corner is None:
        vals = iter(range(-n, 0))
        grid = {}
        for (r, c) in _column_order(lam):
            grid[(r, c)] = next(vals)
        return _from_grid(grid) if grid else Tableau(skew(()), ())
    r0, c0 = corner
    if part(lam, r0) != c0 or part(lam, r0 + 1) >= c0:
        raise ValueError(f"{corner} is not a corner of {lam}")
    rest = list(lam)
    rest[r0 - 1] -= 1
    inner = super_negative(partition(rest))
    grid = _grid(inner) if sum(rest) else {}
    grid = {cell: v - 1 for cell, v in grid.items()}
    grid[(r0, c0)] = -1
    return _from_grid(grid)


def union_fill(t0: Tableau, s: Tableau) -> Tableau:
    """Place the straight tableau t0 inside the inner shape of s."""
    if t0.shape.outer != s.shape.inner or t0.shape.inner:
        raise ValueError("t0 must fill the inner shape of s")
    grid = _grid(s)
    grid.update(_grid(t0))
    return _from_grid(grid)


def enumerate_ssyt(shape: SkewShape, content):
    """All semistandard fillings of the skew shape with the given content.

    Fills in reading-word order (rows top to bottom, right to left) so the
    ballot property of prefixes can be tested incrementally by callers.
    """
    content = tuple(content)
    cells = []
    for r in range(1, len(shape.outer) + 1):
        for c in range(shape.outer[r - 1], part(shape.inner, r), -1):
            cells.append((r, c))
    total = shape.n_cells
    if total != sum(content):
        return
    k = len(content)
    remaining = list(content)
    grid = {}

    def rec(i):
        if i == total:
            yield _from_grid(dict(grid)) if grid else \
                Tableau(shape, tuple(() for _ in shape.outer))
            return
        r, c = cells[i]
        right = grid.get((r, c + 1))
        above = grid.get((r - 1, c))
        lo = 1 if above is None else above + 1
        hi = k if right is None else right
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            grid[(r, c)] = v
            remaining[v - 1] -= 1
            yield from rec(i + 1)
            remaining[v - 1] += 1
            del grid[(r, c)]

    yield from rec(0)

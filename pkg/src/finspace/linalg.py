"""Exact integer and F2 linear algebra.

Matrices are plain lists of lists of Python ints (arbitrary precision), or,
for the large sparse boundary matrices, lists of ``{column: value}`` dicts.
"""
from math import gcd


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    out = zeros(len(a), ncols)
    for i, row in enumerate(a):
        acc = out[i]
        for k in range(inner):
            v = row[k]
            if v:
                brow = b[k]
                for j in range(ncols):
                    if brow[j]:
                        acc[j] += v * brow[j]
    return out


def is_zero(a):
    return all(v == 0 for row in a for v in row)


def _divisor_chain(values):
    """Normalize a multiset of positive diagonal entries into d1 | d2 | ..."""
    vals = sorted(abs(v) for v in values if v)
    n = len(vals)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                a, b = vals[i], vals[j]
                if b % a:
                    g = gcd(a, b)
                    vals[i], vals[j] = g, a // g * b
                    changed = True
        vals.sort()
    return vals


def smith_normal_form(a, ncols=None):
    """Dense Smith form with transforms.

    Returns ``(u, d, v)`` with ``u * a * v == d`` where ``u`` and ``v`` are
    unimodular and ``d`` is diagonal with d[i][i] dividing d[i+1][i+1].
    ``ncols`` is only needed when ``a`` has no rows.
    """
    m = len(a)
    n = ncols if ncols is not None else (len(a[0]) if m else 0)
    d = [list(row) for row in a]
    u = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        if k:
            rs, rd = d[src], d[dst]
            for j in range(n):
                if rs[j]:
                    rd[j] += k * rs[j]
            us, ud = u[src], u[dst]
            for j in range(m):
                if us[j]:
                    ud[j] += k * us[j]

    def add_col(src, dst, k):  # col dst += k * col src
        if k:
            for row in d:
                if row[src]:
                    row[dst] += k * row[src]
            for row in v:
                if row[src]:
                    row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = d[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // p))
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // p))
                    if d[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in row/column t to the pivot
                cands = [(abs(d[i][t]), i, t) for i in range(t + 1, m) if d[i][t]]
                cands += [(abs(d[t][j]), t, j) for j in range(t + 1, n) if d[t][j]]
                _, i, j = min(cands)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            # pivot must divide the whole trailing block
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, d, v


def invariant_factors_dense(a):
    _, d, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


def invariant_factors(rows, ncols=None):
    """Nonzero invariant factors of a sparse integer matrix.

    ``rows`` is a list of ``{col: value}`` dicts (or dense lists).  Uses unit
    pivots greedily (Markowitz-style) and falls back to gcd reduction, so the
    boundary matrices of order complexes reduce in near-linear time.
    """
    R = {}
    C = {}
    for i, row in enumerate(rows):
        if isinstance(row, dict):
            items = [(j, x) for j, x in row.items() if x]
        else:
            items = [(j, x) for j, x in enumerate(row) if x]
        if items:
            R[i] = dict(items)
            for j, _ in items:
                C.setdefault(j, set()).add(i)
    diag = []

    def row_axpy(dst, src, k):
        rd = R[dst]
        for j, x in R[src].items():
            nv = rd.get(j, 0) + k * x
            if nv:
                rd[j] = nv
                C[j].add(dst)
            else:
                rd.pop(j, None)
                C[j].discard(dst)

    def col_axpy(dst, src, k):
        for i in list(C.get(src, ())):
            r = R[i]
            nv = r.get(dst, 0) + k * r[src]
            if nv:
                r[dst] = nv
                C.setdefault(dst, set()).add(i)
            else:
                r.pop(dst, None)
                C[dst].discard(i)

    def drop(r, c):
        for j in R.pop(r):
            C[j].discard(r)
        for i in C.pop(c, set()):
            R[i].pop(c, None)

    while R:
        for i in [i for i, r in R.items() if not r]:
            del R[i]
        if not R:
            break
        pivot = None
        for i, r in R.items():
            for j, x in r.items():
                if x in (1, -1):
                    cost = (len(r) - 1) * (len(C[j]) - 1)
                    if pivot is None or cost < pivot[0]:
                        pivot = (cost, i, j)
                        if cost == 0:
                            break
            if pivot and pivot[0] == 0:
                break
        if pivot is not None:
            _, pr, pc = pivot
            p = R[pr][pc]
            for i in list(C[pc]):
                if i != pr:
                    row_axpy(i, pr, -R[i][pc] * p)
            drop(pr, pc)
            diag.append(1)
            continue
        # no unit left: gcd-reduce around the smallest entry
        _, pr, pc = min((abs(x), i, j) for i, r in R.items() for j, x in r.items())
        while True:
            p = R[pr][pc]
            for i in list(C[pc]):
                if i != pr:
                    row_axpy(i, pr, -(R[i][pc] // p))
            for j in list(R[pr]):
                if j != pc:
                    col_axpy(j, pc, -(R[pr][j] // p))
            rest = [(abs(R[i][pc]), i, pc) for i in C[pc] if i != pr]
            rest += [(abs(x), pr, j) for j, x in R[pr].items() if j != pc]
            if not rest:
                break
            _, pr, pc = min(rest)
        diag.append(abs(R[pr][pc]))
        drop(pr, pc)
    return _divisor_chain(diag)


def rank(rows):
    return len(invariant_factors(rows))


def kernel_basis(a, ncols=None):
    """Z-basis of the integer kernel {x : a x = 0} (column vectors).

    Column-reduces ``a`` while tracking a unimodular transform; the transform
    columns that end up over zero columns span the kernel as a saturated
    lattice, so a rank-one kernel comes out as a primitive vector.
    """
    m = len(a)
    n = ncols if ncols is not None else (len(a[0]) if m else 0)
    cols = [[a[i][j] for i in range(m)] for j in range(n)]
    tr = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    live = list(range(n))
    for i in range(m):
        while True:
            nz = [j for j in live if cols[j][i]]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda j: abs(cols[j][i]))
            p = cols[piv][i]
            for j in nz:
                if j != piv:
                    q = cols[j][i] // p
                    cj, cp = cols[j], cols[piv]
                    for r in range(m):
                        if cp[r]:
                            cj[r] -= q * cp[r]
                    tj, tp = tr[j], tr[piv]
                    for r in range(n):
                        if tp[r]:
                            tj[r] -= q * tp[r]
        nz = [j for j in live if cols[j][i]]
        if nz:
            live.remove(nz[0])
    return [tr[j] for j in live]


def normalize_sign(vec):
    for x in vec:
        if x:
            return list(vec) if x > 0 else [-y for y in vec]
    return list(vec)


def solve_integer(a, b):
    """Some integer solution x of a x = b, or None (via Smith form)."""
    m = len(a)
    n = len(a[0]) if m else 0
    u, d, v = smith_normal_form(a)
    ub = [sum(u[i][k] * b[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < n else 0
        if di == 0:
            if ub[i]:
                return None
        else:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
    return [sum(v[i][k] * y[k] for k in range(n)) for i in range(n)]


# ---------------------------------------------------------------- F2 ------

class F2Basis:
    """Incremental row echelon basis over F2, vectors stored as int bitmasks.

    Each reduced vector remembers which inserted vectors it combines
    (``combo`` bitmask), so membership queries also return a witness.
    """

    def __init__(self):
        self._rows = {}  # pivot bit -> (vector, combo)
        self.count = 0

    def reduce(self, vec):
        combo = 0
        while vec:
            top = vec.bit_length() - 1
            hit = self._rows.get(top)
            if hit is None:
                break
            vec ^= hit[0]
            combo ^= hit[1]
        return vec, combo

    def add(self, vec):
        """Insert; returns True when the vector was independent."""
        idx = self.count
        self.count += 1
        rest, combo = self.reduce(vec)
        if not rest:
            return False
        self._rows[rest.bit_length() - 1] = (rest, combo ^ (1 << idx))
        return True

    @property
    def rank(self):
        return len(self._rows)

    def express(self, vec):
        """Bitmask of inserted vectors summing to ``vec``, or None."""
        rest, combo = self.reduce(vec)
        return None if rest else combo


def f2_rank(vectors):
    b = F2Basis()
    for v in vectors:
        b.add(v)
    return b.rank


def f2_nullspace(vectors, nbits):
    """Basis of {x in F2^k : sum x_i vectors[i] = 0} as bitmasks over indices."""
    b = F2Basis()
    out = []
    for i, v in enumerate(vectors):
        rest, combo = b.reduce(v)
        if rest:
            b._rows[rest.bit_length() - 1] = (rest, combo ^ (1 << i))
        else:
            out.append(combo ^ (1 << i))
        b.count += 1
    return out

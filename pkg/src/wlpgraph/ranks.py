"""Exact rank of integer matrices over the rationals.

Three cooperating routes:

* fraction-free Bareiss elimination over arbitrary-precision integers, with
  partial pivoting on magnitude (smallest nonzero pivot, to limit entry
  growth) -- unconditional, used whenever the matrix is small enough;
* modular elimination.  A single prime certifies full rank (a nonzero minor
  mod p is nonzero over Z) and always lower-bounds the rational rank;
* exact deficiency certificates: candidate null vectors are lifted from a
  modular solution by Dixon's p-adic iteration, reconstructed as rationals,
  and then verified against the original matrix in exact integer arithmetic.
  A verified nonzero null vector unconditionally caps the rank.

Large eliminations run as blocked LU over float64 with primes below 2^23 so
panel updates become BLAS matrix products (64 * (p-1)^2 < 2^53 keeps every
intermediate exactly representable).  The separate :func:`rank_modular` route
uses random primes above 2^30 in plain int64 arithmetic and exists as an
independent cross-check of the Bareiss route.
"""

from __future__ import annotations

import random
from contextlib import contextmanager
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

# Blocked-LU panel width; bounds float64 accumulation to 64*(p-1)^2 < 2^53.
_PANEL = 64
_SMALL_PRIME_BOUND = 1 << 23

# Route-selection caps (calibrated on this machine; correctness never depends
# on them, only which exact route runs).
BAREISS_CAP = 180          # min dimension up to which Bareiss is the default
BAREISS_OPS_CAP = 2_500_000  # rows*cols*min budget for the Bareiss default
DENSE_ELEMS_CAP = 70_000_000  # dense float64 core budget (~560 MB)
DEFICIENCY_CAP = 160       # max nullity we try to certify exactly
DIXON_MAX_STEPS = 700

CROSSCHECK_CAP = 110       # registry mode: run Bareiss + >2^30 modular up to this min-dim


class RankComputationError(RuntimeError):
    """Internal disagreement between independent rank routes."""


# ---------------------------------------------------------------------------
# sparse column-major representation


class SparseCols:
    """Integer matrix stored as per-column sorted lists of (row, value)."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: list[list[tuple[int, int]]]):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols

    @classmethod
    def from_dense(cls, rows) -> "SparseCols":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols: list[list[tuple[int, int]]] = [[] for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged dense matrix")
            for j, v in enumerate(row):
                if v:
                    cols[j].append((i, int(v)))
        return cls(nrows, ncols, cols)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries) -> "SparseCols":
        cols: list[list[tuple[int, int]]] = [[] for _ in range(ncols)]
        for r, c, v in entries:
            if v:
                cols[c].append((r, int(v)))
        for col in cols:
            col.sort()
        return cls(nrows, ncols, cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col:
                out[i][j] = v
        return out

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self.cols)

    def max_abs(self) -> int:
        best = 0
        for col in self.cols:
            for _, v in col:
                a = -v if v < 0 else v
                if a > best:
                    best = a
        return best

    def transpose(self) -> "SparseCols":
        cols: list[list[tuple[int, int]]] = [[] for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col:
                cols[i].append((j, v))
        return SparseCols(self.ncols, self.nrows, cols)

    def matmul(self, other: "SparseCols") -> "SparseCols":
        """Exact integer product self @ other."""
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols: list[list[tuple[int, int]]] = []
        for bcol in other.cols:
            acc: dict[int, int] = {}
            for k, vb in bcol:
                for i, va in self.cols[k]:
                    acc[i] = acc.get(i, 0) + va * vb
            cols.append(sorted((i, v) for i, v in acc.items() if v))
        return SparseCols(self.nrows, other.ncols, cols)

    def matvec(self, vec) -> list[int]:
        """Exact integer product self @ vec (vec indexed by columns)."""
        out = [0] * self.nrows
        for j, col in enumerate(self.cols):
            x = vec[j]
            if x:
                for i, v in col:
                    out[i] += v * x
        return out

    def column(self, j: int) -> list[int]:
        out = [0] * self.nrows
        for i, v in self.cols[j]:
            out[i] = v
        return out

    def submatrix(self, row_idx, col_idx) -> "SparseCols":
        rmap = {r: k for k, r in enumerate(row_idx)}
        cols = []
        for j in col_idx:
            cols.append(sorted((rmap[i], v) for i, v in self.cols[j] if i in rmap))
        return SparseCols(len(row_idx), len(col_idx), cols)

    def to_json_dict(self, rank: int | None = None) -> dict:
        triples = [[i, j, v] for j, col in enumerate(self.cols) for i, v in col]
        out = {"shape": [self.nrows, self.ncols], "entries": triples}
        if rank is not None:
            out["rank"] = rank
        return out


def _coerce(matrix) -> SparseCols:
    if isinstance(matrix, SparseCols):
        return matrix
    if isinstance(matrix, np.ndarray):
        return SparseCols.from_dense(matrix.tolist())
    return SparseCols.from_dense([list(row) for row in matrix])


# ---------------------------------------------------------------------------
# Bareiss fraction-free elimination


def rank_bareiss(matrix) -> int:
    """Rank over Q by fraction-free integer elimination.

    Pivots are chosen within each column by smallest nonzero magnitude, which
    keeps the (determinant-valued) intermediate entries as small as the
    pivoting freedom allows.  All divisions are exact.
    """
    sp = _coerce(matrix)
    m = sp.to_dense()
    nrows, ncols = sp.nrows, sp.ncols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv_i = -1
        piv_abs = None
        for i in range(r, nrows):
            v = m[i][c]
            if v:
                a = -v if v < 0 else v
                if piv_abs is None or a < piv_abs:
                    piv_i, piv_abs = i, a
        if piv_i < 0:
            continue
        if piv_i != r:
            m[piv_i], m[r] = m[r], m[piv_i]
        piv = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            f = row_i[c]
            if f:
                row_i[c + 1:] = [
                    (a * piv - f * b) // prev
                    for a, b in zip(row_i[c + 1:], row_r[c + 1:])
                ]
            elif piv != prev:
                row_i[c + 1:] = [a * piv // prev for a in row_i[c + 1:]]
            row_i[c] = 0
        prev = piv
        r += 1
    return r


# ---------------------------------------------------------------------------
# primes


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3 * 10^24 with these bases
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_below(limit: int, count: int) -> tuple[int, ...]:
    out = []
    n = limit - 1
    while len(out) < count:
        if _is_probable_prime(n):
            out.append(n)
        n -= 2 if n % 2 else 1
    return tuple(out)


SMALL_PRIMES: tuple[int, ...] = _primes_below(_SMALL_PRIME_BOUND, 60)


def random_primes(lo: int, hi: int, count: int, rng: random.Random) -> list[int]:
    """Distinct probable primes sampled uniformly-ish from (lo, hi)."""
    out: set[int] = set()
    while len(out) < count:
        n = rng.randrange(lo + 1, hi) | 1
        while n < hi and not _is_probable_prime(n):
            n += 2
        if n < hi:
            out.add(n)
    return sorted(out)


# ---------------------------------------------------------------------------
# structural peeling (exact, field-independent rank splits)


def _peel(sp: SparseCols):
    """Strip singleton rows/columns; returns (core, base_rank).

    A column with a single nonzero entry contributes 1 to the rank and its
    pivot row can be deleted outright (clearing the pivot row only alters the
    row being deleted); symmetrically for singleton rows.  Zero rows/columns
    are dropped.  All of this is exact over any field, in particular over Q.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for j, col in enumerate(sp.cols):
        for i, v in col:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)
    base = 0

    def kill_row(i: int):
        for j in list(rows[i]):
            cols[j].discard(i)
            if not cols[j]:
                del cols[j]
        del rows[i]

    def kill_col(j: int):
        for i in list(cols[j]):
            del rows[i][j]
            if not rows[i]:
                del rows[i]
        del cols[j]

    changed = True
    while changed:
        changed = False
        for j in [j for j, rs in cols.items() if len(rs) == 1]:
            if j not in cols or len(cols[j]) != 1:
                continue
            (i,) = cols[j]
            kill_col(j)
            if i in rows:
                kill_row(i)
            base += 1
            changed = True
        for i in [i for i, cs in rows.items() if len(cs) == 1]:
            if i not in rows or len(rows[i]) != 1:
                continue
            (j,) = rows[i]
            kill_row(i)
            if j in cols:
                kill_col(j)
            base += 1
            changed = True
    if not rows:
        return SparseCols(0, 0, []), base
    row_idx = sorted(rows)
    col_idx = sorted(cols)
    rpos = {r: k for k, r in enumerate(row_idx)}
    cpos = {c: k for k, c in enumerate(col_idx)}
    out_cols: list[list[tuple[int, int]]] = [[] for _ in col_idx]
    for i, cs in rows.items():
        for j, v in cs.items():
            out_cols[cpos[j]].append((rpos[i], v))
    for col in out_cols:
        col.sort()
    return SparseCols(len(row_idx), len(col_idx), out_cols), base


# ---------------------------------------------------------------------------
# dense modular elimination


def _dense_float_mod(sp: SparseCols, p: int) -> np.ndarray:
    a = np.zeros((sp.nrows, sp.ncols), dtype=np.float64)
    for j, col in enumerate(sp.cols):
        for i, v in col:
            a[i, j] = v % p
    return a


def _dense_int64_mod(sp: SparseCols, p: int) -> np.ndarray:
    a = np.zeros((sp.nrows, sp.ncols), dtype=np.int64)
    for j, col in enumerate(sp.cols):
        for i, v in col:
            a[i, j] = v % p
    return a


def _rank_mod_p_int64(a: np.ndarray, p: int) -> int:
    """Plain row-reduction rank mod p for int64 entries (p < 2^31)."""
    a = a % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        below = a[r + 1:, c]
        nzb = np.nonzero(below)[0]
        if nzb.size:
            rows = r + 1 + nzb
            a[rows, c:] = (a[rows, c:] - a[rows, c:c + 1] * a[r, c:]) % p
        r += 1
    return r


class _BlockedLU:
    """In-place blocked LU mod p (p < 2^23) over float64 with BLAS updates.

    Handles rectangular, rank-deficient input; records pivot columns and the
    row permutation.  When the matrix is square and every column pivots, the
    retained factors support exact mod-p solves (used by Dixon lifting).
    """

    def __init__(self, a: np.ndarray, p: int):
        if p >= _SMALL_PRIME_BOUND:
            raise ValueError("blocked LU requires p < 2^23")
        self.p = p
        self.a = a
        self.nrows, self.ncols = a.shape
        self.perm = np.arange(self.nrows)
        self.piv_cols: list[int] = []
        self.piv_inv: list[int] = []
        self._factor()

    def _factor(self):
        a, p = self.a, self.p
        nrows, ncols = self.nrows, self.ncols
        fp = float(p)
        r = 0
        k0 = 0
        while k0 < ncols and r < nrows:
            k1 = min(k0 + _PANEL, ncols)
            r0 = r
            w = k1 - k0
            # factor the panel in a Fortran-order scratch block (contiguous
            # columns); pivot columns are swapped to the panel front so the
            # L/U blocks stay contiguous slices
            panel = np.asfortranarray(a[r0:, k0:k1])
            orig = list(range(k0, k1))
            row_swaps: list[tuple[int, int]] = []
            linv = np.identity(w, dtype=np.float64)  # inverse of the unit-lower multiplier triangle
            t = 0
            for jl in range(w):
                src = jl
                col = panel[:, src]
                if t:
                    u = linv[:t, :t] @ col[:t] % fp
                    col[:t] = u
                    col[t:] = (col[t:] - panel[t:, :t] @ u) % fp
                nz = np.nonzero(col[t:])[0]
                if nz.size == 0:
                    continue
                il = t + int(nz[0])
                if il != t:
                    panel[[t, il]] = panel[[il, t]]
                    row_swaps.append((t, il))
                if src != t:
                    panel[:, [t, src]] = panel[:, [src, t]]
                    orig[t], orig[src] = orig[src], orig[t]
                piv = int(panel[t, t])
                inv = pow(piv, -1, p)
                self.piv_inv.append(inv)
                panel[t + 1:, t] = panel[t + 1:, t] * float(inv) % fp
                self.piv_cols.append(orig[t])
                if t:
                    linv[t, :t] = -(panel[t, :t] @ linv[:t, :t]) % fp
                t += 1
            np_ = t
            # replay the panel's row swaps on the rest of the matrix
            for il, jl_ in row_swaps:
                gi, gj = r0 + il, r0 + jl_
                a[gi, :k0], a[gj, :k0] = a[gj, :k0].copy(), a[gi, :k0].copy()
                if k1 < ncols:
                    a[gi, k1:], a[gj, k1:] = a[gj, k1:].copy(), a[gi, k1:].copy()
                self.perm[[gi, gj]] = self.perm[[gj, gi]]
            a[r0:, k0:k1] = panel
            r = r0 + np_
            if np_ and k1 < ncols:
                a[r0:r, k1:] = linv[:np_, :np_] @ a[r0:r, k1:] % fp
                if r < nrows:
                    llow = np.ascontiguousarray(panel[np_:, :np_])
                    update = llow @ a[r0:r, k1:]
                    np.subtract(a[r:, k1:], update, out=update)
                    np.mod(update, fp, out=update)
                    a[r:, k1:] = update
            k0 = k1
        self.rank = r

    # -- exact mod-p solves on retained square factors ----------------------

    def solve(self, b: np.ndarray) -> np.ndarray:
        """Solve A x = b mod p; valid when the factored matrix was square with
        full rank (piv_cols == 0..n-1)."""
        p = self.p
        fp = float(p)
        n = self.rank
        y = b[self.perm].astype(np.float64) % fp
        a = self.a
        # forward: unit lower triangle stored below pivots
        for k0 in range(0, n, _PANEL):
            k1 = min(k0 + _PANEL, n)
            if k0:
                y[k0:k1] = (y[k0:k1] - _chunk_dot(a[k0:k1, :k0], y[:k0], fp)) % fp
            for i in range(k0, k1):
                if i > k0:
                    y[i] = (y[i] - a[i, k0:i] @ y[k0:i]) % fp
        # backward: upper triangle with recorded pivot inverses
        x = y
        for k1 in range(n, 0, -_PANEL):
            k0 = max(k1 - _PANEL, 0)
            if k1 < n:
                x[k0:k1] = (x[k0:k1] - _chunk_dot(a[k0:k1, k1:n], x[k1:n], fp)) % fp
            for i in range(k1 - 1, k0 - 1, -1):
                if i + 1 < k1:
                    x[i] = (x[i] - a[i, i + 1:k1] @ x[i + 1:k1]) % fp
                x[i] = x[i] * self.piv_inv[i] % fp
        return x


def _chunk_dot(mat: np.ndarray, vec: np.ndarray, fp: float) -> np.ndarray:
    """mat @ vec with a reduction every _PANEL columns (exact in float64);
    vec may carry several right-hand sides as extra columns."""
    n = mat.shape[1]
    shape = (mat.shape[0],) if vec.ndim == 1 else (mat.shape[0], vec.shape[1])
    out = np.zeros(shape, dtype=np.float64)
    for c0 in range(0, n, _PANEL):
        c1 = min(c0 + _PANEL, n)
        out = (out + mat[:, c0:c1] @ vec[c0:c1]) % fp
    return out


def _rank_mod_p(sp: SparseCols, p: int) -> int:
    """Rank of sp modulo p, choosing a dense route by size."""
    if sp.nrows == 0 or sp.ncols == 0:
        return 0
    if sp.nrows * sp.ncols > DENSE_ELEMS_CAP:
        return _rank_mod_p_big_sparse(sp, p)
    if p < _SMALL_PRIME_BOUND:
        return _BlockedLU(_dense_float_mod(sp, p), p).rank
    return _rank_mod_p_int64(_dense_int64_mod(sp, p), p)


def _rank_mod_p_big_sparse(sp: SparseCols, p: int) -> int:
    """Markowitz-style sparse elimination mod p, densifying once feasible.

    Only exercised for matrices whose dense image would not fit the budget;
    the structured reductions keep the library's own matrices well below it.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for j, col in enumerate(sp.cols):
        for i, v in col:
            w = v % p
            if w:
                rows.setdefault(i, {})[j] = w
                cols.setdefault(j, set()).add(i)
    rank = 0
    while rows:
        live_rows = len(rows)
        live_cols = len(cols)
        if live_rows * live_cols <= DENSE_ELEMS_CAP:
            col_order = {j: k for k, j in enumerate(sorted(cols))}
            entries = [
                (ri, col_order[j], v)
                for ri, (_, cs) in enumerate(sorted(rows.items()))
                for j, v in cs.items()
            ]
            core = SparseCols.from_entries(live_rows, live_cols, entries)
            return rank + _rank_mod_p(core, p)
        # pick pivot minimizing (row_nnz - 1)*(col_nnz - 1)
        j = min(cols, key=lambda c: len(cols[c]))
        i = min(cols[j], key=lambda r: len(rows[r]))
        piv_row = rows.pop(i)
        inv = pow(piv_row[j], -1, p)
        for jj in piv_row:
            cols[jj].discard(i)
            if not cols[jj]:
                del cols[jj]
        piv = {jj: v * inv % p for jj, v in piv_row.items() if jj != j}
        for ii in list(cols.get(j, ())):
            row = rows[ii]
            f = row.pop(j)
            for jj, v in piv.items():
                w = (row.get(jj, 0) - f * v) % p
                if w:
                    if jj not in row:
                        cols.setdefault(jj, set()).add(ii)
                    row[jj] = w
                elif jj in row:
                    del row[jj]
                    cols[jj].discard(ii)
                    if not cols[jj]:
                        del cols[jj]
            if not row:
                del rows[ii]
        if j in cols:
            del cols[j]
        rank += 1
    return rank


def rank_modular(matrix, prime_count: int = 3, seed: int = 0) -> int:
    """Max of ranks modulo ``prime_count`` random primes in (2^30, 2^31).

    Always a lower bound for the rational rank; equality holds unless every
    sampled prime divides the pivotal minor.  Serves as the independent
    cross-check of the Bareiss route.
    """
    sp = _coerce(matrix)
    if sp.nrows == 0 or sp.ncols == 0:
        return 0
    rng = random.Random(seed)
    best = 0
    for p in random_primes(1 << 30, 1 << 31, prime_count, rng):
        best = max(best, _rank_mod_p(sp, p))
    return best


# ---------------------------------------------------------------------------
# rational reconstruction + Dixon lifting for exact null vectors


def _rational_reconstruct(a: int, m: int):
    """Wang reconstruction of a mod m as n/d with |n|, d <= sqrt(m/2)."""
    a %= m
    if a == 0:
        return (0, 1)
    bound = isqrt(m // 2)
    r0, r1 = m, a
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    n, d = r1, t1
    if d < 0:
        n, d = -n, -d
    if gcd(n, d) != 1:
        return None
    return (n, d)


def _dixon_solve_batch(a_int: np.ndarray, lu: _BlockedLU, b_cols, p: int):
    """Solve a_int @ x = b over Q for several right-hand sides at once by
    p-adic lifting; returns a list of (nums, den) or None per column.

    ``a_int`` must be the exact integer matrix whose mod-p LU is ``lu`` and it
    must fit int64 comfortably (|a| * n * p < 2^63), which holds for every
    matrix this library generates.  All columns are lifted together (the
    triangular solves then run as matrix passes); reconstruction attempts
    follow a doubling schedule because each Wang pass is itself Euclid-heavy.
    """
    n = a_int.shape[0]
    k = len(b_cols)
    if k == 0:
        return []
    residual = np.array(b_cols, dtype=np.int64).T.reshape(n, k)
    xaccs = [[0] * n for _ in range(k)]
    done: list = [None] * k
    pk = 1
    next_attempt = 2
    for step in range(1, DIXON_MAX_STEPS + 1):
        xi = lu.solve((residual % p).astype(np.float64))
        xi64 = xi.astype(np.int64)
        residual = (residual - a_int @ xi64) // p
        for c in range(k):
            if done[c] is None:
                acc = xaccs[c]
                col = xi64[:, c]
                for i in range(n):
                    v = int(col[i])
                    if v:
                        acc[i] += v * pk
        pk *= p
        if step >= next_attempt or step == DIXON_MAX_STEPS:
            next_attempt = step * 2
            finished = True
            for c in range(k):
                if done[c] is not None:
                    continue
                recon = _try_reconstruct_vector(xaccs[c], pk)
                if recon is not None and _spot_check_solution(a_int, recon, b_cols[c]):
                    done[c] = recon
                else:
                    finished = False
            if finished:
                break
    return done


def _spot_check_solution(a_int: np.ndarray, recon, b_col) -> bool:
    """Exact check of a few rows of a_int @ nums == den * b; cheap insurance
    against a spuriously early rational reconstruction."""
    nums, den = recon
    n = a_int.shape[0]
    for row in {0, n // 2, n - 1}:
        lhs = sum(int(a) * x for a, x in zip(a_int[row], nums))
        if lhs != den * int(b_col[row]):
            return False
    return True


def _try_reconstruct_vector(xacc: list[int], pk: int):
    if not xacc:
        return ([], 1)
    # sentinel first: a failed attempt then costs one Euclid run, not len(xacc)
    sentinel = max(range(len(xacc)), key=lambda i: abs(xacc[i]))
    if _rational_reconstruct(xacc[sentinel], pk) is None:
        return None
    nums: list[int] = []
    dens: list[int] = []
    for v in xacc:
        r = _rational_reconstruct(v, pk)
        if r is None:
            return None
        nums.append(r[0])
        dens.append(r[1])
    den = 1
    for d in dens:
        den = den * d // gcd(den, d)
    return ([n * (den // d) for n, d in zip(nums, dens)], den)


def _int64_safe(sp: SparseCols, p: int) -> bool:
    return sp.max_abs() * max(sp.nrows, sp.ncols, 1) * p < (1 << 62)


def exact_right_null_vectors(matrix, count: int, seed: int = 0) -> list[list[int]]:
    """Up to ``count`` independent integer vectors v with M v = 0, each verified
    in exact arithmetic.  Independence comes from the reduced echelon shape:
    vector k carries the k-th free column's unit coordinate."""
    sp = _coerce(matrix)
    if sp.ncols == 0:
        return []
    rng = random.Random(seed)
    for attempt in range(3):
        p = SMALL_PRIMES[rng.randrange(len(SMALL_PRIMES))]
        if not _int64_safe(sp, p):
            return _null_vectors_object_fallback(sp, count)
        out = _null_vectors_mod(sp, count, p)
        if out is not None:
            return out
    return []


def _null_vectors_mod(sp: SparseCols, count: int, p: int):
    lu = _BlockedLU(_dense_float_mod(sp, p), p)
    r = lu.rank
    piv_cols = lu.piv_cols
    free_cols = [j for j in range(sp.ncols) if j not in set(piv_cols)]
    if not free_cols:
        return []
    piv_rows = [int(lu.perm[i]) for i in range(r)]
    sub = sp.submatrix(piv_rows, piv_cols)
    a_int = np.zeros((r, r), dtype=np.int64)
    for j, col in enumerate(sub.cols):
        for i, v in col:
            a_int[i, j] = v
    sub_lu = _BlockedLU(a_int.astype(np.float64) % p, p)
    if sub_lu.rank < r:
        return None  # unlucky prime
    wanted = free_cols[:count]
    b_cols = []
    for f in wanted:
        col_f = sp.column(f)
        b_cols.append([-col_f[i] for i in piv_rows])
    solutions = _dixon_solve_batch(a_int, sub_lu, b_cols, p)
    vectors: list[list[int]] = []
    for f, sol in zip(wanted, solutions):
        if sol is None:
            continue
        nums, den = sol
        v = [0] * sp.ncols
        for j, nv in zip(piv_cols, nums):
            v[j] = nv
        v[f] = den
        g = 0
        for x in v:
            g = gcd(g, x)
        if g > 1:
            v = [x // g for x in v]
        if any(v) and not any(sp.matvec(v)):
            vectors.append(v)
    return vectors


def _null_vectors_object_fallback(sp: SparseCols, count: int) -> list[list[int]]:
    """Exact fraction-free nullspace for matrices with huge entries (rare)."""
    from fractions import Fraction

    dense = [[Fraction(v) for v in row] for row in sp.to_dense()]
    nrows, ncols = sp.nrows, sp.ncols
    piv_of_col: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if dense[i][c]), None)
        if piv is None:
            continue
        dense[piv], dense[r] = dense[r], dense[piv]
        inv = 1 / dense[r][c]
        dense[r] = [x * inv for x in dense[r]]
        for i in range(nrows):
            if i != r and dense[i][c]:
                f = dense[i][c]
                dense[i] = [a - f * b for a, b in zip(dense[i], dense[r])]
        piv_of_col[c] = r
        r += 1
    out = []
    for f in range(ncols):
        if f in piv_of_col:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for c, pr in piv_of_col.items():
            v[c] = -dense[pr][f]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        iv = [int(x * den) for x in v]
        if any(iv) and not any(sp.matvec(iv)):
            out.append(iv)
            if len(out) >= count:
                break
    return out


def exact_left_null_vectors(matrix, count: int, seed: int = 0) -> list[list[int]]:
    sp = _coerce(matrix)
    return exact_right_null_vectors(sp.transpose(), count, seed)


# ---------------------------------------------------------------------------
# the exact-rank front end


@dataclass
class RankInfo:
    """Outcome of a rank computation, with certification bookkeeping."""

    rank: int
    certified: bool          # the value is unconditional
    method: str
    shape: tuple[int, int]
    nnz: int
    crosscheck: dict = field(default_factory=dict)


_registry: list | None = None


@contextmanager
def recording(registry: list):
    """Route every rank computation into ``registry`` and cross-check the
    Bareiss and >2^30 modular engines on small enough matrices."""
    global _registry
    prev = _registry
    _registry = registry
    try:
        yield registry
    finally:
        _registry = prev


def exact_rank(matrix) -> int:
    """Rank over the rationals.  See :func:`exact_rank_info`."""
    return exact_rank_info(matrix).rank


def exact_rank_info(matrix, seed: int = 0) -> RankInfo:
    """Rank over Q with the route picked by size.

    Small matrices go through Bareiss (unconditional).  Larger ones are peeled,
    then eliminated modulo small primes: full modular rank certifies itself,
    and deficient ranks are certified by exact integer null vectors (one per
    unit of nullity on the short side) lifted via Dixon iteration.  If a
    certificate cannot be completed the best modular consensus is returned
    with ``certified=False``; no matrix produced by this library does that.
    """
    sp = _coerce(matrix)
    info = _exact_rank_info_inner(sp, seed)
    if _registry is not None:
        if min(sp.nrows, sp.ncols) and min(sp.nrows, sp.ncols) <= CROSSCHECK_CAP:
            rb = rank_bareiss(sp)
            rm = rank_modular(sp, prime_count=3, seed=seed)
            info.crosscheck = {"bareiss": rb, "modular": rm}
            if not (rb == rm == info.rank):
                raise RankComputationError(
                    f"rank routes disagree: engine={info.rank} bareiss={rb} modular={rm}"
                )
        _registry.append(info)
    return info


def _exact_rank_info_inner(sp: SparseCols, seed: int) -> RankInfo:
    shape = (sp.nrows, sp.ncols)
    nnz = sp.nnz
    if sp.nrows == 0 or sp.ncols == 0 or nnz == 0:
        return RankInfo(0, True, "trivial", shape, nnz)
    core, base = _peel(sp)
    if core.nrows == 0 or core.ncols == 0:
        return RankInfo(base, True, "peel", shape, nnz)
    mind = min(core.nrows, core.ncols)
    if mind <= BAREISS_CAP and core.nrows * core.ncols * mind <= BAREISS_OPS_CAP:
        return RankInfo(base + rank_bareiss(core), True, "peel+bareiss", shape, nnz)
    rng = random.Random(seed ^ (shape[0] * 1_000_003 + shape[1]))
    primes = list(SMALL_PRIMES)
    rng.shuffle(primes)
    max_entry = core.max_abs()
    usable = [p for p in primes if p > max_entry] or primes
    r = _rank_mod_p(core, usable[0])
    if r == mind:
        return RankInfo(base + r, True, "peel+modular-full", shape, nnz)
    # deficient: certify with exact null vectors on the short side (the
    # certificate also confirms the modular value, so no second prime is
    # needed when it succeeds)
    total = base + r
    deficiency = min(shape) - total
    if 0 < deficiency <= DEFICIENCY_CAP:
        if sp.ncols <= sp.nrows:
            vecs = exact_right_null_vectors(sp, deficiency, seed)
        else:
            vecs = exact_left_null_vectors(sp, deficiency, seed)
        if len(vecs) == deficiency:
            return RankInfo(total, True, "peel+modular+nullcert", shape, nnz)
    # consensus fallback; further primes can still reveal full rank
    for p in usable[1:5]:
        r = max(r, _rank_mod_p(core, p))
        if r == mind:
            return RankInfo(base + r, True, "peel+modular-full", shape, nnz)
    return RankInfo(base + r, False, "modular-consensus", shape, nnz)

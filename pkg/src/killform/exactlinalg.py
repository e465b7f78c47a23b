"""Exact and floating linear algebra for symmetric integer matrices.

Rank is certified exactly without full big-integer elimination: a mod-p
elimination bounds the rank from below (a pivot minor nonzero mod p is nonzero
over Q) and, when the matrix is singular, supplies a candidate nullspace which
is CRT-lifted to rationals and then verified in exact arithmetic; the verified
nullity bounds the rank from above.  Fraction-free Bareiss remains as the
small-dimension path and as an independent oracle.

Floating eigenwork goes through LAPACK (numpy.linalg.eigh).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .errors import CapExceeded, SeparationFailure, SingularMatrix

EXACT_CAP = 4096
INVERSE_CAP = 512
SPECTRUM_TOL = 1e-8
_LDLT_FALLBACK_CAP = 600


class IntSymMatrix:
    def __init__(self, data):
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"not square: shape {arr.shape}")
        if not np.array_equal(arr, arr.T):
            raise ValueError("not symmetric")
        self.data = arr
        self.dim = arr.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntSymMatrix) and np.array_equal(self.data, other.data)

    def __repr__(self) -> str:
        return f"IntSymMatrix(dim={self.dim})"

    def dump(self) -> str:
        lines = [f"dim {self.dim}"]
        for row in self.data:
            lines.append(" ".join(str(int(x)) for x in row))
        return "\n".join(lines) + "\n"

    @staticmethod
    def load(text: str) -> "IntSymMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("dim "):
            raise ValueError("matrix dump must start with 'dim n'")
        n = int(lines[0][4:])
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1 : n + 1]]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("matrix dump has wrong shape")
        return IntSymMatrix(rows)


@dataclass(frozen=True)
class Signature:
    positive: int
    negative: int
    zero: int

    def astuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)


@dataclass
class SpectrumEntry:
    value: float
    multiplicity: int
    vectors: np.ndarray  # dim x multiplicity, orthonormal columns
    integral: bool


# ---------------------------------------------------------------------------
# primes

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)  # deterministic below 3.3e24


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def random_prime_31(rng: random.Random) -> int:
    while True:
        c = rng.randrange(1 << 30, 1 << 31) | 1
        if _is_prime(c):
            return c


def random_prime_22(rng: random.Random) -> int:
    """Small enough that float64 matmul over GF(p) blocks stays exact."""
    while True:
        c = rng.randrange(1 << 21, 1 << 22) | 1
        if _is_prime(c):
            return c


# ---------------------------------------------------------------------------
# mod-p elimination (int64 is safe: entries in [0,p), p < 2**31, so products
# stay under 2**62 before each reduction)

def _echelon_rank_mod_p(A: np.ndarray, p: int):
    """Destructive row echelon form over GF(p); returns (rank, pivot_cols)."""
    n_rows, n_cols = A.shape
    r = 0
    pivots = []
    for col in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(A[r:, col])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, col]), p - 2, p)
        A[r, col:] = A[r, col:] * inv % p
        sub = A[r + 1 :, col:]
        if sub.size:
            sub -= A[r + 1 :, col, None] * A[r, col:][None, :]
            sub %= p
        pivots.append(col)
        r += 1
    return r, pivots


def _rref_mod_p(A: np.ndarray, p: int):
    """Destructive reduced row echelon form over GF(p); returns (rank, pivot_cols)."""
    n_rows, n_cols = A.shape
    r = 0
    pivots = []
    for col in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(A[r:, col])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, col]), p - 2, p)
        A[r, col:] = A[r, col:] * inv % p
        mult = A[:, col].copy()
        mult[r] = 0
        if np.any(mult):
            A[:, col:] -= mult[:, None] * A[r, col:][None, :]
            A[:, col:] %= p
        pivots.append(col)
        r += 1
    return r, pivots


def _gf_block_width(p: int, cap: int = 256) -> int:
    # dot products of length b over entries < p must stay below 2**53 so the
    # float64 matmul is exact
    return min(cap, (1 << 53) // (p * p))


def _echelon_rank_blocked(A: np.ndarray, p: int, block: int) -> int:
    """Echelon rank over GF(p) with BLAS-backed Schur updates.

    The panel factorization mirrors the scalar routine; trailing columns are
    updated once per panel via an exact float64 matmul.  The moment a panel
    column has no pivot (a rank drop), pending updates are flushed and the
    scalar routine finishes the remaining submatrix, so skipped columns never
    reach the blocked path.
    """
    n_rows, n_cols = A.shape
    r0 = 0
    c0 = 0
    while r0 < n_rows and c0 < n_cols:
        kb = min(block, n_cols - c0, n_rows - r0)
        c1 = c0 + kb
        # L rows track A rows r0..; column k holds the multipliers of pivot k
        L = np.zeros((n_rows - r0, kb), dtype=np.int64)
        invs = []
        pv = 0
        stopped_col = None
        for j in range(c0, c1):
            rr = r0 + pv
            nz = np.nonzero(A[rr:, j])[0]
            if nz.size == 0:
                stopped_col = j
                break
            i = rr + int(nz[0])
            if i != rr:
                A[[rr, i]] = A[[i, rr]]
                L[[rr - r0, i - r0]] = L[[i - r0, rr - r0]]
            inv = pow(int(A[rr, j]), p - 2, p)
            invs.append(inv)
            A[rr, j:c1] = A[rr, j:c1] * inv % p
            mult = A[rr + 1 :, j].copy()
            L[pv + 1 :, pv] = mult
            sub = A[rr + 1 :, j:c1]
            if sub.size:
                sub -= mult[:, None] * A[rr, j:c1][None, :]
                sub %= p
            pv += 1
        if pv and c1 < n_cols:
            # finish the pivot rows across the trailing columns (forward
            # substitution against earlier pivots of this panel), then one
            # Schur update for everything below
            U = A[r0 : r0 + pv, c1:]
            for k in range(pv):
                if k:
                    U[k] -= np.dot(L[k, :k].astype(np.float64),
                                   U[:k].astype(np.float64)).astype(np.int64)
                    U[k] %= p
                U[k] = U[k] * invs[k] % p
            below = A[r0 + pv :, c1:]
            Lf = L[pv:, :pv].astype(np.float64)
            for start in range(0, below.shape[0], 1024):
                stop = start + 1024
                prod = (Lf[start:stop] @ U.astype(np.float64)).astype(np.int64)
                below[start:stop] -= prod
                below[start:stop] %= p
        if stopped_col is not None:
            tail, _ = _echelon_rank_mod_p(A[r0 + pv :, stopped_col + 1 :], p)
            return r0 + pv + tail
        r0 += pv
        c0 = c1
    return r0


def rank_mod_p(M: IntSymMatrix, p: int) -> int:
    if p <= 2 or p >= (1 << 31):
        raise ValueError("need 2 < p < 2**31")
    A = np.mod(M.data, p)
    block = _gf_block_width(p)
    if block >= 8 and M.dim >= 192:
        return _echelon_rank_blocked(A, p, block)
    r, _ = _echelon_rank_mod_p(A, p)
    return r


def _nullspace_mod_p(M: IntSymMatrix, p: int):
    """(rank, pivot_cols, nullspace vectors mod p, free-column normalized)."""
    A = np.mod(M.data, p)
    r, pivots = _rref_mod_p(A, p)
    n = M.dim
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    vecs = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for row_idx, c in enumerate(pivots):
            v[c] = (-int(A[row_idx, f])) % p
        vecs.append(v)
    return r, tuple(pivots), vecs


# ---------------------------------------------------------------------------
# CRT / rational reconstruction

def _rational_reconstruct(r: int, m: int) -> Fraction | None:
    """Wang reconstruction: find n/d == r (mod m) with |n|, |d| <= sqrt(m/2)."""
    bound = isqrt(m // 2)
    r0, t0 = m, 0
    r1, t1 = r % m, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or gcd(r1, abs(t1)) != 1:
        return None
    if t1 < 0:
        return Fraction(-r1, -t1)
    return Fraction(r1, t1)


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    inv = pow(m1 % m2, m2 - 2, m2)  # m2 prime and coprime to m1
    t = (r2 - r1) % m2 * inv % m2
    return r1 + m1 * t, m1 * m2


def _verify_integer_nullvector(M: IntSymMatrix, v: list[int]) -> bool:
    """Exact check M @ v == 0 via modular matvecs with modulus beating |M @ v|."""
    max_abs = max((abs(x) for x in v), default=0)
    if max_abs == 0:
        return False
    max_entry = int(np.abs(M.data).max()) if M.dim else 0
    bound_bits = (
        max_abs.bit_length() + max_entry.bit_length() + M.dim.bit_length() + 2
    )
    rng = random.Random(0xC0FFEE)
    bits = 0
    used = set()
    while bits <= bound_bits:
        p = random_prime_31(rng)
        if p in used:
            continue
        used.add(p)
        Mp = M.data % p
        vp = np.array([x % p for x in v], dtype=np.int64)
        lo = vp & 0xFFFF
        hi = vp >> 16
        res = ((Mp @ lo) % p + ((Mp @ hi) % p << 16)) % p
        if np.any(res):
            return False
        bits += 31
    return True


def _rank_bareiss(M: IntSymMatrix) -> int:
    """Fraction-free Bareiss elimination (exact, arbitrary-precision integers)."""
    a = [[int(x) for x in row] for row in M.data]
    n = M.dim
    prev = 1
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if a[i][col]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pivot_val = a[r][col]
        for i in range(r + 1, n):
            row_i, row_r = a[i], a[r]
            f = row_i[col]
            for j in range(col, n):
                row_i[j] = (row_i[j] * pivot_val - f * row_r[j]) // prev
        prev = pivot_val
        r += 1
        if r == n:
            break
    return r


def exact_rank_bareiss(M: IntSymMatrix, cap: int = EXACT_CAP) -> int:
    if M.dim > cap:
        raise CapExceeded(f"dim {M.dim} exceeds exact cap {cap}")
    return _rank_bareiss(M)


def exact_rank(M: IntSymMatrix, seed: int = 0, cap: int = EXACT_CAP) -> int:
    """Certified rank of M over Q."""
    if M.dim > cap:
        raise CapExceeded(f"dim {M.dim} exceeds exact cap {cap}")
    if M.dim == 0:
        return 0
    if M.dim <= 12:
        return _rank_bareiss(M)
    rng = random.Random(seed)
    p0 = random_prime_22(rng)
    if rank_mod_p(M, p0) == M.dim:
        return M.dim  # a nonzero n x n minor mod p is nonzero over Q
    best_rank = -1
    best_pivots: tuple | None = None
    residues: list[list[tuple[int, int]]] = []
    for _ in range(64):
        p = random_prime_31(rng)
        r, pivots, null_p = _nullspace_mod_p(M, p)
        if r == M.dim:
            return M.dim
        if r > best_rank:
            best_rank, best_pivots = r, pivots
            residues = [[(int(x), p) for x in vec] for vec in null_p]
        elif r < best_rank or pivots != best_pivots:
            continue  # unlucky prime for the consensus structure; discard it
        else:
            for acc, vec in zip(residues, null_p):
                for j in range(M.dim):
                    acc[j] = _crt_pair(acc[j][0], acc[j][1], int(vec[j]), p)
        lifted = []
        for acc in residues:
            fracs = [_rational_reconstruct(res, mod) for res, mod in acc]
            if any(f is None for f in fracs):
                break
            den = 1
            for f in fracs:
                den = den * f.denominator // gcd(den, f.denominator)
            lifted.append([int(f * den) for f in fracs])
        else:
            if all(_verify_integer_nullvector(M, v) for v in lifted):
                # nullity >= dim - best_rank (free-column pattern keeps the
                # verified vectors independent) and rank >= best_rank from the
                # mod-p pivot minor: together that pins rank = best_rank.
                return best_rank
    return _rank_bareiss(M)  # certification stalled; exact but slow


# ---------------------------------------------------------------------------
# signature / spectrum / components / inverse

def _exact_inertia_ldlt(M: IntSymMatrix) -> tuple[int, int, int]:
    """Inertia by exact LDL^T with full symmetric pivoting (1x1 and 2x2 blocks)."""
    n = M.dim
    a = {}
    for i in range(n):
        for j in range(i, n):
            a[(i, j)] = Fraction(int(M.data[i, j]))

    def get(i, j):
        return a[(i, j)] if i <= j else a[(j, i)]

    def put(i, j, v):
        a[(i, j) if i <= j else (j, i)] = v

    active = list(range(n))
    pos = neg = zero = 0
    while active:
        k = max(active, key=lambda i: abs(get(i, i)))
        if get(k, k) != 0:
            d = get(k, k)
            if d > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in active if i != k]
            col = {i: get(i, k) for i in rest}
            for x, i in enumerate(rest):
                if col[i] == 0:
                    continue
                for j in rest[x:]:
                    if col[j] != 0:
                        put(i, j, get(i, j) - col[i] * col[j] / d)
            active = rest
            continue
        # every active diagonal is zero: use a hyperbolic 2x2 pivot
        pair = None
        for ii, i in enumerate(active):
            for j in active[ii + 1 :]:
                if get(i, j) != 0:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            zero += len(active)
            break
        k, l = pair
        b = get(k, l)  # block [[0, b], [b, 0]]: inertia (1, 1)
        pos += 1
        neg += 1
        rest = [i for i in active if i not in (k, l)]
        colk = {i: get(i, k) for i in rest}
        coll = {i: get(i, l) for i in rest}
        for x, i in enumerate(rest):
            for j in rest[x:]:
                delta = (colk[i] * coll[j] + coll[i] * colk[j]) / b
                if delta:
                    put(i, j, get(i, j) - delta)
        active = rest
    return pos, neg, zero


def signature(M: IntSymMatrix, seed: int = 0) -> Signature:
    n = M.dim
    if n == 0:
        return Signature(0, 0, 0)
    zero = n - exact_rank(M, seed=seed)
    evals = np.linalg.eigvalsh(M.data.astype(np.float64))
    by_mag = np.sort(np.abs(evals))
    disc_max = float(by_mag[zero - 1]) if zero else 0.0
    kept_min = float(by_mag[zero]) if zero < n else float("inf")
    noise = 1e-13 * n * float(by_mag[-1])
    if kept_min >= max(1e3 * disc_max, 1e3 * noise, 1e-300):
        order = np.argsort(np.abs(evals))
        kept = evals[order[zero:]]
        return Signature(int((kept > 0).sum()), int((kept < 0).sum()), zero)
    if n > _LDLT_FALLBACK_CAP:
        raise SeparationFailure(
            f"float eigenvalue separation {kept_min:.3g} vs {disc_max:.3g} is below 10^3 "
            f"and dim {n} exceeds the exact-inertia fallback cap"
        )
    pos, neg, z2 = _exact_inertia_ldlt(M)
    if z2 != zero:
        raise SeparationFailure(f"rank certificate ({zero} zeros) disagrees with LDL^T ({z2})")
    return Signature(pos, neg, zero)


def spectrum(M: IntSymMatrix, tol: float = SPECTRUM_TOL) -> list[SpectrumEntry]:
    """Floating eigendecomposition with eigenvalues merged at relative tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if M.dim == 0:
        return []
    evals, vecs = np.linalg.eigh(M.data.astype(np.float64))
    scale = max(float(np.max(np.abs(evals))), 1.0)
    order = np.argsort(-evals)
    evals = evals[order]
    vecs = vecs[:, order]
    entries = []
    start = 0
    for i in range(1, M.dim + 1):
        if i == M.dim or evals[i - 1] - evals[i] > tol * scale:
            vals = evals[start:i]
            mean = float(np.mean(vals))
            entries.append(
                SpectrumEntry(
                    value=mean,
                    multiplicity=i - start,
                    vectors=vecs[:, start:i],
                    integral=abs(mean - round(mean)) <= 1e-6 * max(1.0, abs(mean)),
                )
            )
            start = i
    return entries


def integer_eigen_multiplicity(M: IntSymMatrix, k: int, seed: int = 0) -> int:
    """Certified multiplicity of the integer k in the spectrum of M."""
    shifted = IntSymMatrix(M.data - k * np.eye(M.dim, dtype=np.int64))
    return M.dim - exact_rank(shifted, seed=seed)


def connected_components(M: IntSymMatrix) -> list[list[int]]:
    """Components of the graph with an edge (i,j) wherever M[i][j] != 0."""
    n = M.dim
    seen = np.zeros(n, dtype=bool)
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = []
        frontier = [s]
        seen[s] = True
        while frontier:
            i = frontier.pop()
            comp.append(i)
            for j in np.nonzero(M.data[i])[0]:
                if not seen[j]:
                    seen[j] = True
                    frontier.append(int(j))
        comps.append(sorted(comp))
    return comps


def exact_inverse(M: IntSymMatrix, cap: int = INVERSE_CAP) -> list[list[Fraction]]:
    """Exact rational inverse by Gauss-Jordan over Fraction."""
    n = M.dim
    if n > cap:
        raise CapExceeded(f"dim {n} exceeds inverse cap {cap}")
    aug = [
        [Fraction(int(M.data[i, j])) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise SingularMatrix(f"column {col} has no pivot")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        d = aug[col][col]
        aug[col] = [x / d for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]

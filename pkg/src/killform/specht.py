"""Symmetric-group machinery: partitions, tableaux, Young symmetrizers,
projections into conjugation modules, the sign-representation criterion, and
the closed forms for the 2-cycles spectrum.

Irreducible characters of S_n are computed here independently of the modular
character-table code, by the Murnaghan-Nakayama border-strip recursion; the
two routes cross-check each other in the tests.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .errors import CapExceeded, NotAnEigenvector
from .groups import ConjClass, symmetric_class
from .killing import AlgebraVector, KillingForm, apply_form
from .perms import Perm

SPECHT_N_CAP = 8
SYMMETRIZER_TERM_CAP = 10**6


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __init__(self, parts):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p > j)
                               for j in range(self.parts[0])))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def partitions_of(n: int, max_part: int | None = None):
    """Partitions of n as descending tuples."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def class_size(n: int, mu) -> int:
    """|C_mu| in S_n: n! / prod(k^m_k m_k!) over cycle lengths k."""
    mu = tuple(mu)
    z = 1
    for k in set(mu):
        m = mu.count(k)
        z *= k**m * factorial(m)
    return factorial(n) // z


def class_sign(n: int, mu) -> int:
    return (-1) ** (n - len(tuple(mu)))


@dataclass(frozen=True)
class Tableau:
    rows: tuple

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        entries = [x for r in rows for x in r]
        n = len(entries)
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError("tableau entries must be a bijection onto 1..n")
        if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
            raise ValueError("row lengths must be weakly decreasing")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def columns(self) -> tuple:
        ncols = len(self.rows[0]) if self.rows else 0
        return tuple(tuple(r[j] for r in self.rows if len(r) > j)
                     for j in range(ncols))

    def is_standard(self) -> bool:
        for r in self.rows:
            if any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
                return False
        for c in self.columns():
            if any(c[i] >= c[i + 1] for i in range(len(c) - 1)):
                return False
        return True

    @staticmethod
    def row_reading(shape: Partition) -> "Tableau":
        rows = []
        k = 1
        for p in shape:
            rows.append(tuple(range(k, k + p)))
            k += p
        return Tableau(rows)

    def __str__(self) -> str:
        return " / ".join(",".join(map(str, r)) for r in self.rows)


def standard_tableaux(shape: Partition):
    """All standard tableaux of the shape; the row-reading one comes first."""
    parts = shape.parts
    n = shape.n
    filled = [0] * len(parts)
    rows = [[] for _ in parts]

    def place(k):
        if k > n:
            yield Tableau(tuple(tuple(r) for r in rows))
            return
        for r in range(len(parts)):
            if filled[r] < parts[r] and (r == 0 or filled[r - 1] > filled[r]):
                rows[r].append(k)
                filled[r] += 1
                yield from place(k + 1)
                rows[r].pop()
                filled[r] -= 1

    yield from place(1)


def _block_permutations(blocks, n: int):
    """All permutations of {0..n-1} permuting each block (1-based entries) within itself."""
    blocks = [tuple(b) for b in blocks if len(b) > 1]
    out = []
    for assignment in itertools.product(*[itertools.permutations(b) for b in blocks]):
        images = list(range(n))
        for block, img in zip(blocks, assignment):
            for src, dst in zip(block, img):
                images[src - 1] = dst - 1
        out.append(Perm(images))
    return out


def row_and_column_groups(T: Tableau) -> tuple:
    """(R(T), C(T)): permutations preserving each row set / each column set."""
    n = T.n
    return (set(_block_permutations(T.rows, n)),
            set(_block_permutations(T.columns(), n)))


def young_symmetrizer(T: Tableau, cap: int = SYMMETRIZER_TERM_CAP) -> AlgebraVector:
    """c_T = (sum of sgn(s)*s over C(T)) * (sum over R(T)), with +-1 coefficients."""
    R, C = row_and_column_groups(T)
    if len(R) * len(C) > cap:
        raise CapExceeded(f"symmetrizer would have {len(R) * len(C)} terms (cap {cap})")
    coeffs: dict[Perm, int] = {}
    for s in C:
        sgn = s.sign
        for t in R:
            g = s * t
            coeffs[g] = coeffs.get(g, 0) + sgn
    return AlgebraVector(coeffs)


def project_to_class(v: AlgebraVector, C: ConjClass,
                     rep: Perm | None = None) -> AlgebraVector:
    """The quotient map sigma -> sigma * rep * sigma^-1, extended linearly.

    rep defaults to the class representative; any other member may be chosen
    (the image differs by a right translation but spans the same components).
    """
    if rep is None:
        rep = C.representative
    elif rep not in C:
        raise ValueError(f"{rep} is not a member of the class")
    out: dict[Perm, object] = {}
    for sigma, coef in v.coeffs.items():
        h = rep.conj_by(sigma)
        out[h] = out.get(h, 0) + coef
    result = AlgebraVector(out)
    for h in result.coeffs:
        if h not in C:
            raise ValueError(f"projection left the class: {h}")
    return result


# --------------------------------------------------- characters of S_n (exact)

@lru_cache(maxsize=None)
def sn_character(lam: tuple, mu: tuple) -> int:
    """chi^lam(mu) by the Murnaghan-Nakayama border-strip recursion."""
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    m = len(lam)
    if m == 0:
        return 0
    beta = [lam[i] + m - 1 - i for i in range(m)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        nbeta = sorted([x for x in beta if x != b] + [nb], reverse=True)
        newlam = tuple(nbeta[i] - (m - 1 - i) for i in range(m))
        newlam = tuple(p for p in newlam if p > 0)
        total += (-1) ** height * sn_character(newlam, rest)
    return total


def specht_dimension(lam) -> int:
    """Hook length formula."""
    lam = tuple(lam)
    conj = Partition(lam).conjugate().parts
    num = factorial(sum(lam))
    den = 1
    for i, p in enumerate(lam):
        for j in range(p):
            den *= (p - j) + (conj[j] - i) - 1
    return num // den


@lru_cache(maxsize=None)
def _sym_class(n: int, mu: tuple) -> ConjClass:
    return symmetric_class(n, mu)


@lru_cache(maxsize=None)
def _fixed_counts(n: int, mu: tuple) -> tuple:
    """(nu, |C_nu|, |Z(g_nu) ∩ C_mu|) for every class nu of S_n."""
    Cmu = _sym_class(n, mu)
    return tuple((nu, class_size(n, nu), Cmu.commuting_count(_sym_class(n, nu).representative))
                 for nu in partitions_of(n))


def specht_multiplicity(lam, mu) -> int:
    """<chi_{C C_mu}, chi^lam> over S_n, via exact characters and fixed counts."""
    lam, mu = tuple(lam), tuple(mu)
    n = sum(lam)
    if sum(mu) != n:
        raise ValueError("partitions must have the same size")
    total = 0
    for nu, size, fix in _fixed_counts(n, mu):
        if fix:
            total += size * fix * sn_character(lam, nu)
    q, r = divmod(total, factorial(n))
    if r:
        raise ArithmeticError(f"non-integral multiplicity for {lam} in class {mu}")
    return q


# --------------------------------------------------------------- the theorems

@lru_cache(maxsize=None)
def _symmetrizer_arrays(T: Tableau):
    """Image rows and signs of the symmetrizer terms, for batch conjugation."""
    R, C = row_and_column_groups(T)
    rows, signs = [], []
    for s in C:
        si = np.array(s.images, dtype=np.int32)
        sg = s.sign
        for t in R:
            rows.append(si[np.array(t.images, dtype=np.int32)])
            signs.append(sg)
    return np.array(rows, dtype=np.int32), np.array(signs, dtype=np.int64)


def _projected_vanishes(Q: "np.ndarray", signs: "np.ndarray", rep_images) -> bool:
    """Whether sum_k signs[k] * (Q_k * rep * Q_k^-1) collapses to zero."""
    conj = np.empty_like(Q)
    np.put_along_axis(conj, Q, Q[:, np.array(rep_images)], axis=1)
    _, inv = np.unique(conj, axis=0, return_inverse=True)
    acc = np.zeros(inv.max() + 1, dtype=np.int64)
    np.add.at(acc, inv, signs)
    return not np.any(acc)


def _symmetrizer_term_count(shape: Partition) -> int:
    conj = shape.conjugate()
    out = 1
    for p in shape:
        out *= factorial(p)
    for q in conj:
        out *= factorial(q)
    return out


def specht_occurs(lam: Partition, mu: Partition, cap: int = SPECHT_N_CAP,
                  term_cap: int = SYMMETRIZER_TERM_CAP) -> bool:
    """Does S^lam occur in the conjugation module on the class of cycle type mu?

    Tests project_to_class(c_T, C_mu) != 0 over standard tableaux T of shape
    lam (row-reading first), with the projection evaluated in batch.  A shape
    whose symmetrizer would exceed term_cap falls back to the exact character
    computation.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    if lam.n != mu.n:
        raise ValueError("partitions must have the same size")
    if lam.n > cap:
        raise CapExceeded(f"n = {lam.n} exceeds the Specht cap {cap}")
    if _symmetrizer_term_count(lam) > term_cap:
        return specht_multiplicity(lam.parts, mu.parts) > 0
    rep_images = _sym_class(lam.n, mu.parts).representative.images
    for T in standard_tableaux(lam):
        Q, signs = _symmetrizer_arrays(T)
        if not _projected_vanishes(Q, signs, rep_images):
            return True
    return False


def sign_rep_occurs(mu: Partition) -> bool:
    """The sign representation occurs in C C_mu iff mu has distinct odd parts."""
    parts = tuple(mu if not isinstance(mu, Partition) else mu.parts)
    return len(set(parts)) == len(parts) and all(p % 2 == 1 for p in parts)


def sign_rep_multiplicity(mu) -> int:
    """<chi_{C C_mu}, sign> computed exactly (test oracle for sign_rep_occurs)."""
    mu = tuple(mu)
    n = sum(mu)
    total = Fraction(0)
    for nu, size, fix in _fixed_counts(n, mu):
        if fix:
            total += Fraction(size * class_sign(n, nu) * fix, factorial(n))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral sign multiplicity for {mu}")
    return int(total)


def euler_count(n: int) -> tuple:
    """(number of partitions of n into distinct odd parts,
        #even-sign classes - #odd-sign classes); the two agree for every n."""
    if n < 1:
        raise ValueError("n must be positive")
    distinct_odd = 0
    signed = 0
    for mu in partitions_of(n):
        signed += class_sign(n, mu)
        if len(set(mu)) == len(mu) and all(p % 2 == 1 for p in mu):
            distinct_odd += 1
    return distinct_odd, signed


def two_cycles_eigenvalues(n: int) -> tuple:
    """(E_trivial, E_standard, E_hook22) for the 2-cycles class of S_n.

    E_trivial = (n^4 - 10n^3 + 41n^2 - 72n + 48)/4 (the row sum), the
    standard representation sits at n^2 - 6n + 12, and S^(n-2,2) at 2n.
    """
    if n < 4:
        raise ValueError("closed forms need n >= 4")
    e_triv = (n**4 - 10 * n**3 + 41 * n**2 - 72 * n + 48) // 4
    return e_triv, n * n - 6 * n + 12, 2 * n


def eigenvalue_from_vector(K: KillingForm, v: AlgebraVector) -> Fraction:
    """The exact eigenvalue of K on v, verifying K v = lambda v with no residual."""
    if v.is_zero():
        raise NotAnEigenvector("the zero vector spans no eigenspace")
    for b in v.coeffs:
        try:
            K.basis_index(b)
        except KeyError:
            raise ValueError(f"{b} is not in the form's basis") from None
    Kv = apply_form(K, v)
    pivot = next(b for b in K.basis if v[b] != 0)
    lam = Fraction(Kv[pivot]) / Fraction(v[pivot])
    if Kv != v.scale(lam):
        raise NotAnEigenvector("K v is not proportional to v")
    return lam

"""Killing forms K(x_a, x_b) = |Z(ab) ∩ C| of class calculi, and their analysis.

The class matrix is filled by the section trick: with a fixed representative g
and section s(a)*g*s(a)^-1 = a, ad-invariance of |Z(x) ∩ C| gives
K[a][b] = f(s(a)^-1 * b * s(a)) where f(h) = |Z(gh) ∩ C| is computed once per
class member.  The brute-force double loop over |Z(ab) ∩ C| exists only as a
test oracle (killing_matrix_bruteforce).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CapExceeded, NotCentral, RowSumMismatch, ZeroMultiplicity
from .exactlinalg import (
    IntSymMatrix,
    Signature,
    connected_components,
    exact_inverse,
    signature,
    spectrum,
)
from .groups import ConjClass, Group
from .perms import Perm

MATRIX_CAP = 4096


class AlgebraVector:
    """Sparse exact linear combination of permutations (group-algebra element)."""

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {}
        if coeffs:
            for k, v in coeffs.items():
                if v != 0:
                    self.coeffs[k] = v

    def __getitem__(self, k):
        return self.coeffs.get(k, 0)

    def __add__(self, other: "AlgebraVector") -> "AlgebraVector":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return AlgebraVector(out)

    def __sub__(self, other: "AlgebraVector") -> "AlgebraVector":
        return self + other.scale(-1)

    def scale(self, c) -> "AlgebraVector":
        return AlgebraVector({k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraVector) and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self):
        return set(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        terms = sorted(self.coeffs.items(), key=lambda kv: kv[0].images)
        inner = " + ".join(f"{v}*{k}" for k, v in terms[:6])
        if len(terms) > 6:
            inner += f" + ... ({len(terms)} terms)"
        return f"AlgebraVector({inner})"


@dataclass
class KillingAnalysis:
    is_real: bool | None
    lambda_max: int | None
    component_count: int
    signature: Signature
    nondegenerate: bool
    chi_on_class: int | None


class KillingForm:
    def __init__(self, matrix: IntSymMatrix, basis: tuple[Perm, ...],
                 group: Group | None = None, conj_class: ConjClass | None = None,
                 universal: bool = False, includes_identity: bool = False):
        self.matrix = matrix
        self.basis = basis
        self.group = group
        self.conj_class = conj_class
        self.universal = universal
        self.includes_identity = includes_identity
        self.analysis: KillingAnalysis | None = None
        self._spectrum = None
        self._index = {p.images: i for i, p in enumerate(basis)}

    @property
    def is_class_calculus(self) -> bool:
        return self.conj_class is not None

    def basis_index(self, p: Perm) -> int:
        return self._index[p.images]

    def spectrum(self, tol: float = 1e-8):
        if self._spectrum is None:
            self._spectrum = spectrum(self.matrix, tol=tol)
        return self._spectrum

    def __repr__(self) -> str:
        what = "universal" if self.universal else (self.conj_class.label or "class")
        return f"KillingForm({what}, dim={self.matrix.dim})"


def _rows_to_indices(X: np.ndarray, sorted_keys: np.ndarray, void_dt) -> np.ndarray:
    keys = np.ascontiguousarray(X).view(void_dt).ravel()
    idx = np.searchsorted(sorted_keys, keys)
    return idx


def killing_matrix(G: Group | None, C: ConjClass, cap: int = MATRIX_CAP) -> KillingForm:
    """K[a][b] = |Z(ab) ∩ C| over the class basis, by the section method.

    Only the class itself is consumed; the group handle is carried along for
    later analysis stages (Casimir, decompositions) and may be None.
    """
    if C.is_trivial():
        raise ValueError("Killing form needs a nontrivial class")
    m = C.size
    if m > cap:
        raise CapExceeded(f"class size {m} exceeds matrix cap {cap}")
    g = C.representative
    members = C.members
    B = C.arr
    void_dt = np.dtype((np.void, B.shape[1] * B.dtype.itemsize))
    sorted_keys = np.ascontiguousarray(B).view(void_dt).ravel()  # members are sorted

    f_vals = np.empty(m, dtype=np.int64)
    for i, h in enumerate(members):
        f_vals[i] = C.commuting_count(g * h)

    K = np.empty((m, m), dtype=np.int64)
    for i, a in enumerate(members):
        s = C.section[a]
        s_arr = np.asarray(s.images, dtype=np.intp)
        sinv_arr = np.asarray(s.inverse().images, dtype=B.dtype)
        X = sinv_arr[B[:, s_arr]]  # row b -> images of s^-1 * b * s
        K[i] = f_vals[_rows_to_indices(X, sorted_keys, void_dt)]
    return KillingForm(IntSymMatrix(K), members, group=G, conj_class=C)


def killing_matrix_bruteforce(C: ConjClass) -> IntSymMatrix:
    """Direct K[a][b] = |Z(ab) ∩ C| with no section/caching tricks (test oracle)."""
    m = C.size
    K = np.empty((m, m), dtype=np.int64)
    for i, a in enumerate(C.members):
        for j, b in enumerate(C.members):
            K[i, j] = C.commuting_count(a * b)
    return IntSymMatrix(K)


def universal_killing(G: Group, cap: int = MATRIX_CAP, include_identity: bool = False) -> KillingForm:
    """K over the basis G \\ {e} with K[a][b] = |Z(ab)| - 1 = chi_W(ab).

    include_identity=True emits the full |G| x |G| matrix of chi_W values
    (diagnostic mode; the corner entry is chi_W(e) = |G| - 1).
    """
    if G.order < 2:
        raise ValueError("universal calculus needs |G| >= 2")
    basis = G.elements if include_identity else G.elements[1:]
    m = len(basis)
    if m > cap:
        raise CapExceeded(f"universal basis size {m} exceeds matrix cap {cap}")
    zvals = np.empty(G.order, dtype=np.int64)
    for ci, cl in enumerate(G.classes()):
        zsize = G.order // cl.size
        for h in cl.members:
            zvals[G.index(h)] = zsize
    arr = G.arr
    off = 0 if include_identity else 1
    Bfull = arr[off:]
    void_dt = np.dtype((np.void, arr.shape[1] * arr.dtype.itemsize))
    group_keys = np.ascontiguousarray(arr).view(void_dt).ravel()  # sorted
    K = np.empty((m, m), dtype=np.int64)
    for i, a in enumerate(basis):
        a_np = np.asarray(a.images, dtype=arr.dtype)
        X = a_np[Bfull]  # row b -> images of a * b
        idx = _rows_to_indices(X, group_keys, void_dt)
        K[i] = zvals[idx] - 1
    return KillingForm(IntSymMatrix(K), basis, group=G, universal=True,
                       includes_identity=include_identity)


def analyze(K: KillingForm, seed: int = 0) -> KillingForm:
    """Fill the analysis bundle: lambda_max, components, signature, chi."""
    M = K.matrix
    lam = chi = real = None
    if K.is_class_calculus:
        sums = M.data.sum(axis=1)
        if not np.all(sums == sums[0]):
            raise RowSumMismatch(
                f"row sums of {K!r} are not constant: {sorted(set(int(s) for s in sums))[:4]}"
            )
        lam = int(sums[0])
        chi = K.conj_class.commuting_count(K.conj_class.representative)
        real = K.conj_class.is_real
    comps = connected_components(M)
    sig = signature(M, seed=seed)
    K.analysis = KillingAnalysis(
        is_real=real,
        lambda_max=lam,
        component_count=len(comps),
        signature=sig,
        nondegenerate=sig.zero == 0,
        chi_on_class=chi,
    )
    return K


def theta_vector(K: KillingForm) -> AlgebraVector:
    """The all-ones vector over the class; an exact eigenvector at lambda_max."""
    if not K.is_class_calculus:
        raise ValueError("theta is defined for class calculi")
    return AlgebraVector({p: Fraction(1) for p in K.basis})


def apply_form(K: KillingForm, v: AlgebraVector) -> AlgebraVector:
    """K applied to a vector over the basis: (K v)_a = sum_b K[a][b] v_b, exact."""
    out: dict[Perm, object] = {}
    data = K.matrix.data
    for b, coef in v.coeffs.items():
        j = K.basis_index(b)
        col = data[:, j]
        for i in np.nonzero(col)[0]:
            a = K.basis[i]
            out[a] = out.get(a, 0) + int(col[i]) * coef
    return AlgebraVector(out)


def pairing(K: KillingForm, v, w) -> complex:
    """K(v, w) for coefficient mappings over the basis (floating/complex OK)."""
    data = K.matrix.data
    vi = np.zeros(K.matrix.dim, dtype=complex)
    wi = np.zeros(K.matrix.dim, dtype=complex)
    for p, c in v.items():
        vi[K.basis_index(p)] = c
    for p, c in w.items():
        wi[K.basis_index(p)] = c
    return complex(vi @ data @ wi)


@dataclass
class CasimirExpansion:
    """Sum over a,b of K^{ab} * (a*b), re-expressed as q_e * e + sum of q_C * theta_C."""
    e_coeff: Fraction
    theta_coeffs: dict  # class label -> Fraction (zero coefficients dropped)

    def terms(self):
        yield ("e", self.e_coeff)
        for label in sorted(self.theta_coeffs):
            yield (f"theta[{label}]", self.theta_coeffs[label])

    def __str__(self) -> str:
        parts = []
        for name, q in self.terms():
            parts.append(f"{'-' if q < 0 else ('+' if parts else '')} {abs(q)}*{name}".strip())
        return " ".join(parts) if parts else "0"


def casimir(K: KillingForm, inverse_cap: int = 512) -> CasimirExpansion:
    """Quadratic Casimir of a nondegenerate class calculus, in the theta basis."""
    if not K.is_class_calculus:
        raise ValueError("Casimir is defined for class calculi here")
    if K.group is None:
        raise ValueError("Casimir expansion needs the ambient group")
    G = K.group
    Kinv = exact_inverse(K.matrix, cap=inverse_cap)  # SingularMatrix if degenerate
    coeffs: dict[tuple, Fraction] = {}
    members = K.basis
    for i, a in enumerate(members):
        row = Kinv[i]
        for j, b in enumerate(members):
            q = row[j]
            if q:
                key = (a * b).images
                coeffs[key] = coeffs.get(key, Fraction(0)) + q
    e_coeff = coeffs.pop(G.identity.images, Fraction(0))
    theta: dict[str, Fraction] = {}
    for cl in G.classes():
        if cl.is_trivial():
            continue
        vals = {coeffs.pop(h.images, Fraction(0)) for h in cl.members}
        if len(vals) > 1:
            raise NotCentral(f"coefficients vary over class {cl.label}: {sorted(vals)[:3]}")
        (q,) = vals
        if q:
            theta[cl.label] = q
    if coeffs:
        raise NotCentral("Casimir has support outside the group (construction bug)")
    return CasimirExpansion(e_coeff=e_coeff, theta_coeffs=theta)


def m_vector(G: Group, W_multiplicities, table) -> dict:
    """The nondegeneracy witness m: coefficient at g is
    sum_i dim(V_i)^2 * conj(chi_i(g)) / <chi_i, chi_W>, as a map Perm -> complex.

    Character values are floating (Dixon lift), so coefficients are complex
    floats; m_e = sum_i dim^3 / mult_i is real and strictly positive.
    """
    mults = list(W_multiplicities)
    if len(mults) != len(table.degrees):
        raise ValueError("one multiplicity per irreducible, please")
    if any(m <= 0 for m in mults):
        raise ZeroMultiplicity(f"multiplicities must be positive: {mults}")
    class_values = []
    for j in range(len(table.class_labels)):
        val = 0j
        for i, d in enumerate(table.degrees):
            val += d * d * np.conj(table.chars[i][j]) / mults[i]
        class_values.append(complex(val))
    out = {}
    for ci, cl in enumerate(G.classes()):
        for h in cl.members:
            out[h] = class_values[ci]
    return out

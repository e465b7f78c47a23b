"""Permutation groups, conjugacy classes, centralizers, named constructors.

Groups are fully enumerated (no stabilizer chains): the survey operates at desk
scale, default cap 10^5 elements.  Conjugacy classes carry an explicit section
s: C -> G with s(h) * rep * s(h)^-1 = h, which is what the Killing-matrix
construction consumes.
"""
from __future__ import annotations

import re
from itertools import permutations as _itt_permutations
from math import factorial, lcm
from pathlib import Path

import numpy as np

from .errors import BadField, CapExceeded, DegreeMismatch, ElementNotInGroup, UnknownSpec
from .gf import GFField
from .perms import Perm

DEFAULT_ELEMENT_CAP = 100_000

_LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _class_letter(i: int) -> str:
    # A..Z, then AA, AB, ... (anything past Z is already exotic at desk scale)
    if i < 26:
        return _LETTERS[i]
    return _LETTERS[i // 26 - 1] + _LETTERS[i % 26]


def _closure(gen_images, degree: int, cap: int, stop_at: int | None = None):
    """BFS closure of generator image-tuples; returns a set of image tuples."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gen_images:
                y = tuple(g[j] for j in x)
                if y not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"group closure exceeds cap {cap}")
                    seen.add(y)
                    nxt.append(y)
                    if stop_at is not None and len(seen) >= stop_at:
                        return seen
        frontier = nxt
    return seen


class Group:
    def __init__(self, degree: int, generators: list[Perm], elements: tuple[Perm, ...], name: str = ""):
        self.degree = degree
        self.generators = list(generators)
        self.elements = elements
        self.order = len(elements)
        self.name = name or f"group of order {self.order}"
        self.identity = Perm.identity(degree)
        self._index = {p.images: i for i, p in enumerate(elements)}
        self._arr = None
        self._classes = None
        self._class_of = None

    def __contains__(self, p: Perm) -> bool:
        return p.images in self._index

    def index(self, p: Perm) -> int:
        try:
            return self._index[p.images]
        except KeyError:
            raise ElementNotInGroup(f"{p} not in {self.name}") from None

    @property
    def arr(self) -> np.ndarray:
        """(order x degree) array of element images, rows aligned with .elements."""
        if self._arr is None:
            dtype = np.uint8 if self.degree <= 255 else np.uint16
            self._arr = np.array([p.images for p in self.elements], dtype=dtype)
        return self._arr

    def classes(self) -> list["ConjClass"]:
        if self._classes is None:
            self._classes = conjugacy_classes(self)
        return self._classes

    def class_index_of(self, p: Perm) -> int:
        """Index into classes() of the class containing p."""
        if self._class_of is None:
            lookup = {}
            for ci, cl in enumerate(self.classes()):
                for h in cl.members:
                    lookup[h.images] = ci
            self._class_of = lookup
        try:
            return self._class_of[p.images]
        except KeyError:
            raise ElementNotInGroup(f"{p} not in {self.name}") from None

    def centre(self) -> list[Perm]:
        gen_arrs = [np.array(g.images) for g in self.generators]
        arr = self.arr
        mask = np.ones(self.order, dtype=bool)
        for g in gen_arrs:
            mask &= (arr[:, g] == g[arr]).all(axis=1)
        return [self.elements[i] for i in np.nonzero(mask)[0]]

    def exponent(self) -> int:
        return lcm(*(c.element_order for c in self.classes()))

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order}, degree={self.degree})"


class ConjClass:
    """A conjugacy class with a section map back to the representative.

    members are sorted lexicographically; representative is members[0];
    section(h) conjugates the representative to h.
    """

    def __init__(self, members: tuple[Perm, ...], section: dict, label: str = "",
                 group_order: int | None = None):
        self.members = members
        self.representative = members[0]
        self.section = section
        self.label = label
        self.group_order = group_order
        self.degree = members[0].degree
        self.element_order = members[0].order()
        inv = self.representative.inverse()
        self.is_real = inv.images in {m.images for m in members} if len(members) > 64 else inv in members
        self._arr = None
        self._idx = None

    @property
    def size(self) -> int:
        return len(self.members)

    def is_trivial(self) -> bool:
        return self.size == 1 and self.representative.is_identity()

    @property
    def arr(self) -> np.ndarray:
        if self._arr is None:
            dtype = np.uint8 if self.degree <= 255 else np.uint16
            self._arr = np.array([p.images for p in self.members], dtype=dtype)
        return self._arr

    def index(self, p: Perm) -> int:
        if self._idx is None:
            self._idx = {m.images: i for i, m in enumerate(self.members)}
        return self._idx[p.images]

    def __contains__(self, p: Perm) -> bool:
        if self._idx is None:
            self._idx = {m.images: i for i, m in enumerate(self.members)}
        return p.images in self._idx

    def commuting_count(self, x: Perm) -> int:
        """|Z(x) ∩ C|, vectorized over the member array."""
        arr = self.arr
        xi = np.asarray(x.images, dtype=arr.dtype)
        return int((arr[:, xi] == xi[arr]).all(axis=1).sum())

    def __repr__(self) -> str:
        return f"ConjClass({self.label or str(self.representative)}, size={self.size})"


def generate_group(generators: list[Perm], name: str = "", degree: int | None = None,
                   cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Enumerate the group generated by ``generators`` (BFS closure)."""
    if generators:
        degrees = {g.degree for g in generators}
        if len(degrees) != 1:
            raise DegreeMismatch(f"generators of mixed degrees {sorted(degrees)}")
        if degree is not None and degree != degrees.pop():
            raise DegreeMismatch("explicit degree disagrees with generators")
        degree = generators[0].degree
    elif degree is None:
        raise DegreeMismatch("empty generating set needs an explicit degree")
    images = _closure([g.images for g in generators], degree, cap)
    elements = tuple(Perm(im) for im in sorted(images))
    return Group(degree, generators, elements, name=name)


def conjugacy_classes(G: Group) -> list[ConjClass]:
    """Classes of G sorted by (element order, size, members), labelled nA, nB, ...

    Processing elements in lexicographic order makes each representative the
    smallest member of its class.
    """
    gen_pairs = [(g, g.inverse()) for g in G.generators]
    assigned = set()
    raw = []
    for seed in G.elements:
        if seed.images in assigned:
            continue
        section = {seed: Perm.identity(G.degree)}
        frontier = [seed]
        while frontier:
            nxt = []
            for h in frontier:
                s_h = section[h]
                for g, g_inv in gen_pairs:
                    h2 = g * h * g_inv
                    if h2 not in section:
                        section[h2] = g * s_h
                        nxt.append(h2)
            frontier = nxt
        members = tuple(sorted(section))
        assigned.update(m.images for m in members)
        raw.append(ConjClass(members, section, group_order=G.order))
    raw.sort(key=lambda c: (c.element_order, c.size, tuple(m.images for m in c.members)))
    by_order: dict[int, int] = {}
    for cl in raw:
        i = by_order.get(cl.element_order, 0)
        by_order[cl.element_order] = i + 1
        cl.label = f"{cl.element_order}{_class_letter(i)}"
    return raw


def centralizer_count(G: Group, g: Perm, within: ConjClass | None = None) -> int:
    """|Z(g)| in G, or |Z(g) ∩ within| when a class is given."""
    if g not in G:
        raise ElementNotInGroup(f"{g} not in {G.name}")
    if within is not None:
        return within.commuting_count(g)
    arr = G.arr
    gi = np.asarray(g.images, dtype=arr.dtype)
    return int((arr[:, gi] == gi[arr]).all(axis=1).sum())


def class_generates(G: Group, C: ConjClass) -> bool:
    """Does the subgroup generated by the class equal G?"""
    if C.is_trivial():
        raise ValueError("trivial class never generates a nontrivial group")
    gens: list[tuple] = []
    current: set = {tuple(range(G.degree))}
    for c in C.members:
        if c.images not in current:
            gens.append(c.images)
            current = _closure(gens, G.degree, cap=G.order + 1, stop_at=G.order)
            if len(current) >= G.order:
                return True
    return len(current) == G.order


def is_simple_via_classes(G: Group) -> bool:
    """True iff every nontrivial conjugacy class generates G."""
    if G.order <= 1:
        raise ValueError("simplicity test needs |G| > 1")
    return all(class_generates(G, c) for c in G.classes() if not c.is_trivial())


# ---------------------------------------------------------------------------
# direct construction of symmetric-group classes (no S_n enumeration)

def _full_cycle_type(n: int, mu) -> tuple[int, ...]:
    mu = tuple(sorted((int(m) for m in mu), reverse=True))
    if any(m < 1 for m in mu) or sum(mu) > n:
        raise ValueError(f"bad cycle type {mu} for degree {n}")
    return mu + (1,) * (n - sum(mu))


def _perms_of_cycle_type(n: int, lens: tuple[int, ...]):
    """All images-tuples in S_n whose nontrivial cycle lengths are ``lens``.

    Each cycle is anchored at its smallest point, and anchors are taken in
    increasing order, so every permutation comes out exactly once.
    """
    big = sorted((l for l in lens if l >= 2), reverse=True)

    def rec(remaining: tuple, todo: tuple, acc: list):
        if not todo:
            yield list(acc)
            return
        anchor = remaining[0]
        rest = remaining[1:]
        tried = set()
        for k, l in enumerate(todo):
            if l in tried:
                continue
            tried.add(l)
            sub = todo[:k] + todo[k + 1:]
            for tail in _itt_permutations(rest, l - 1):
                cyc = (anchor,) + tail
                left = tuple(x for x in rest if x not in set(tail))
                yield from rec(left, sub, acc + [cyc])
        # anchor may also stay fixed, provided enough points remain for todo
        if sum(todo) <= len(rest):
            yield from rec(rest, todo, acc)

    for cycs in rec(tuple(range(n)), tuple(big), []):
        images = list(range(n))
        for cyc in cycs:
            for i, pt in enumerate(cyc):
                images[pt] = cyc[(i + 1) % len(cyc)]
        yield tuple(images)


def _conjugator(src: Perm, dst: Perm) -> Perm:
    """A permutation s with s * src * s^-1 = dst (same cycle type)."""
    n = src.degree
    key = lambda c: (-len(c), c[0])
    sc = sorted(src.cycles(), key=key)
    dc = sorted(dst.cycles(), key=key)
    images = [-1] * n
    for a, b in zip(sc, dc):
        for x, y in zip(a, b):
            images[x] = y
    src_fixed = sorted(set(range(n)) - {x for c in sc for x in c})
    dst_fixed = sorted(set(range(n)) - {x for c in dc for x in c})
    for x, y in zip(src_fixed, dst_fixed):
        images[x] = y
    return Perm(images)


def symmetric_class(n: int, mu) -> ConjClass:
    """The conjugacy class of S_n with cycle type mu, built combinatorially.

    Works even when S_n itself is too big to enumerate; this is how the
    2-cycles classes of large symmetric groups are analysed.
    """
    lens = _full_cycle_type(n, mu)
    members = tuple(Perm(im) for im in sorted(_perms_of_cycle_type(n, lens)))
    rep = members[0]
    section = {h: _conjugator(rep, h) for h in members}
    label = ",".join(str(l) for l in lens)
    return ConjClass(members, section, label=label, group_order=factorial(n))


# ---------------------------------------------------------------------------
# named constructors

def symmetric_group(n: int, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    if n < 1:
        raise UnknownSpec("S_n needs n >= 1")
    if n == 1:
        return generate_group([], name="S1", degree=1, cap=cap)
    gens = [Perm.from_cycles([(0, 1)], n), Perm.from_cycles([tuple(range(n))], n)]
    return generate_group(gens, name=f"S{n}", cap=cap)


def alternating_group(n: int, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    if n < 1:
        raise UnknownSpec("A_n needs n >= 1")
    if n <= 2:
        return generate_group([], name=f"A{n}", degree=max(n, 1), cap=cap)
    if n == 3:
        gens = [Perm.from_cycles([(0, 1, 2)], 3)]
    elif n % 2 == 1:
        gens = [Perm.from_cycles([(0, 1, 2)], n), Perm.from_cycles([tuple(range(n))], n)]
    else:
        gens = [Perm.from_cycles([(0, 1, 2)], n), Perm.from_cycles([tuple(range(1, n))], n)]
    return generate_group(gens, name=f"A{n}", cap=cap)


def psl2(q: int, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """PSL(2,q) acting on the q+1 points of the projective line.

    Points: field elements at indices 0..q-1 (integer encoding), infinity at q.
    Generators: x -> x+1, x -> m*x, x -> -1/x, where m = w for even q and w^2
    for odd q (w a primitive element) so the multiplier has square determinant.
    """
    F = GFField(q)
    inf = q
    t = [0] * (q + 1)
    for e in range(q):
        t[e] = F.add(e, 1)
    t[inf] = inf
    m = F.generator if q % 2 == 0 else F.mul(F.generator, F.generator)
    w = [F.mul(m, e) for e in range(q)] + [inf]
    s = [0] * (q + 1)
    s[0] = inf
    s[inf] = 0
    for e in range(1, q):
        s[e] = F.neg(F.inv(e))
    gens = [Perm(t), Perm(w), Perm(s)]
    return generate_group(gens, name=f"PSL(2,{q})", cap=cap)


def psl3(q: int, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """PSL(3,q) acting on the q^2+q+1 points of the projective plane.

    SL(3,q) is generated by the transvections E12(w^i) plus the cyclic
    coordinate shift; scalars act trivially on points, so the permutation
    image is PSL(3,q).
    """
    F = GFField(q)
    points = [(1, b, c) for b in range(q) for c in range(q)]
    points += [(0, 1, c) for c in range(q)]
    points.append((0, 0, 1))
    index = {v: i for i, v in enumerate(points)}

    def normalize(v):
        for x in v:
            if x:
                xi = F.inv(x)
                return tuple(F.mul(xi, y) for y in v)
        raise ValueError("zero vector")

    def perm_of_matrix(M):
        images = []
        for v in points:
            u = tuple(
                F.add(F.add(F.mul(M[r][0], v[0]), F.mul(M[r][1], v[1])), F.mul(M[r][2], v[2]))
                for r in range(3)
            )
            images.append(index[normalize(u)])
        return Perm(images)

    gens = []
    for i in range(F.k):
        lam = F.pow(F.generator, i) if F.k > 1 else 1
        gens.append(perm_of_matrix([[1, lam, 0], [0, 1, 0], [0, 0, 1]]))
    gens.append(perm_of_matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]]))
    return generate_group(gens, name=f"PSL(3,{q})", cap=cap)


def parse_group_file(path) -> tuple[str, int, list[Perm]]:
    """Read the text generator format: `name X`, `degree n`, then 1-based cycles."""
    name = None
    degree = None
    gens = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("name "):
            name = line[5:].strip()
        elif line.startswith("degree "):
            degree = int(line[7:].strip())
        else:
            if degree is None:
                raise UnknownSpec(f"{path}:{lineno}: generator before degree line")
            gens.append(Perm.parse(line, degree))
    if name is None or degree is None:
        raise UnknownSpec(f"{path}: missing name/degree header")
    return name, degree, gens


_SPEC_RE = re.compile(
    r"^(?:S(?P<sn>\d+)|A(?P<an>\d+)|PSL\(\s*2\s*,\s*(?P<q2>\d+)\s*\)|"
    r"PSL\(\s*3\s*,\s*(?P<q3>\d+)\s*\)|file:(?P<path>.+))$"
)


def build_named_group(spec: str, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Grammar: "S<n>" | "A<n>" | "PSL(2,<q>)" | "PSL(3,<q>)" | "file:<path>"."""
    m = _SPEC_RE.match(spec.strip())
    if not m:
        raise UnknownSpec(f"unrecognized group spec {spec!r}")
    if m.group("sn"):
        return symmetric_group(int(m.group("sn")), cap=cap)
    if m.group("an"):
        return alternating_group(int(m.group("an")), cap=cap)
    if m.group("q2"):
        return psl2(int(m.group("q2")), cap=cap)
    if m.group("q3"):
        return psl3(int(m.group("q3")), cap=cap)
    name, degree, gens = parse_group_file(m.group("path"))
    if not gens:
        return generate_group([], name=name, degree=degree, cap=cap)
    g = generate_group(gens, name=name, cap=cap)
    if g.degree != degree:
        raise DegreeMismatch(f"{spec}: header degree {degree} != generator degree {g.degree}")
    return g

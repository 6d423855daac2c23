"""Root data and the characteristic-dependent vanishing computations on them.

A root datum stores integer roots in a basis of the character lattice and
integer coroots in the dual basis of the cocharacter lattice, so the pairing
is the ordinary dot product.  The torus Lie algebra is the cocharacter
lattice tensored with the field; the differential of a root evaluated on a
torus element ``y`` is the dot product reduced into the field.

Genericity is never decided by sampling: "vanishes at a generic point of a
subspace" is a rank comparison over F_p (or Q when p = 0).

Text format (UTF-8, ``#`` starts a comment, blank lines ignored)::

    LABEL
    GL2
    RANK
    2
    ROOTS
    1 -1
    -1 1
    COROOTS
    1 -1
    -1 1

For quotient lattices (PGL_n) the cocharacter basis is the images of
``e_1 .. e_{n-1}`` in ``Z^n / Z(1,...,1)`` (the last coordinate is dropped)
and the character basis is the dual basis ``e_i - e_n``.  For SL_n the
cocharacter basis is the simple coroots and the character basis the
fundamental weights.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .fields import FFElement, check_characteristic, coerce
from .linalg import rank, rank_mod_p, row_reduce

Vector = tuple[int, ...]


class RootDatumError(ValueError):
    """A root datum violates one of its invariants (the message names it)."""


@dataclass(frozen=True)
class RootDatum:
    label: str
    rank: int
    roots: tuple[Vector, ...]
    coroots: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(tuple(int(x) for x in r) for r in self.roots))
        object.__setattr__(self, "coroots", tuple(tuple(int(x) for x in r) for r in self.coroots))
        validate(self)

    @property
    def num_roots(self) -> int:
        return len(self.roots)

    def pairing(self, i: int) -> int:
        return sum(a * b for a, b in zip(self.roots[i], self.coroots[i]))


def validate(d: RootDatum) -> None:
    if d.rank < 1:
        raise RootDatumError("rank: must be a positive integer")
    if len(d.roots) != len(d.coroots):
        raise RootDatumError("pairing: roots and coroots must have equal length")
    for v in itertools.chain(d.roots, d.coroots):
        if len(v) != d.rank:
            raise RootDatumError(f"shape: vector {v} does not have length {d.rank}")
    for i in range(len(d.roots)):
        if d.pairing(i) != 2:
            raise RootDatumError(f"pairing: <root_{i}, coroot_{i}> = {d.pairing(i)}, expected 2")
    if len(set(d.roots)) != len(d.roots):
        raise RootDatumError("duplicates: root list contains a repeated root")
    present = set(d.roots)
    for r in d.roots:
        if tuple(-x for x in r) not in present:
            raise RootDatumError(f"negation: -{r} is missing from the root list")


def type_a_pairs(n: int) -> list[tuple[int, int]]:
    """Index order of the roots ``e_i - e_j`` used by all type-A builders."""
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def build_gl(n: int) -> RootDatum:
    if n < 1:
        raise ValueError("GL_n needs n >= 1")
    vecs = []
    for i, j in type_a_pairs(n):
        v = [0] * n
        v[i], v[j] = 1, -1
        vecs.append(tuple(v))
    return RootDatum(f"GL{n}", n, tuple(vecs), tuple(vecs))


def build_sl(n: int) -> RootDatum:
    if n < 2:
        raise ValueError("SL_n needs n >= 2")
    roots, coroots = [], []
    for i, j in type_a_pairs(n):
        # weight coordinates: <e_i - e_j, e_k - e_{k+1}>
        roots.append(tuple(int(k == i) - int(k + 1 == i) - int(k == j) + int(k + 1 == j) for k in range(n - 1)))
        lo, hi = min(i, j), max(i, j)
        sign = 1 if i < j else -1
        coroots.append(tuple(sign * int(lo <= k < hi) for k in range(n - 1)))
    return RootDatum(f"SL{n}", n - 1, tuple(roots), tuple(coroots))


def build_pgl(n: int) -> RootDatum:
    if n < 2:
        raise ValueError("PGL_n needs n >= 2")

    def cochar(v):
        # image in Z^n / Z(1..1) written in the basis e_1..e_{n-1}: subtract v_n from every coordinate
        return tuple(v[k] - v[n - 1] for k in range(n - 1))

    roots, coroots = [], []
    for i, j in type_a_pairs(n):
        v = [0] * n
        v[i], v[j] = 1, -1
        # e_i - e_j = f_i - f_j with f_k = e_k - e_n and f_n = 0
        roots.append(tuple(v[k] for k in range(n - 1)))
        coroots.append(cochar(v))
    return RootDatum(f"PGL{n}", n - 1, tuple(roots), tuple(coroots))


def build(family: str, n: int) -> RootDatum:
    builders = {"gl": build_gl, "sl": build_sl, "pgl": build_pgl}
    try:
        return builders[family.lower()](n)
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of gl, sl, pgl") from None


# --- serialization -------------------------------------------------------

_SECTIONS = ("LABEL", "RANK", "ROOTS", "COROOTS")


def dump_root_datum(d: RootDatum) -> str:
    lines = ["LABEL", d.label, "RANK", str(d.rank), "ROOTS"]
    lines += [" ".join(map(str, r)) for r in d.roots]
    lines.append("COROOTS")
    lines += [" ".join(map(str, r)) for r in d.coroots]
    return "\n".join(lines) + "\n"


def load_root_datum(source: str) -> RootDatum:
    sections: dict[str, list[str]] = {}
    current = None
    for raw in source.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.upper() in _SECTIONS:
            current = line.upper()
            if current in sections:
                raise RootDatumError(f"parse: section {current} appears twice")
            sections[current] = []
        elif current is None:
            raise RootDatumError(f"parse: data line {line!r} before any section header")
        else:
            sections[current].append(line)
    missing = [s for s in _SECTIONS if s not in sections]
    if missing:
        raise RootDatumError(f"parse: missing section(s) {', '.join(missing)}")
    if len(sections["LABEL"]) != 1 or len(sections["RANK"]) != 1:
        raise RootDatumError("parse: LABEL and RANK take exactly one line each")
    try:
        rk = int(sections["RANK"][0])
        roots = [tuple(int(x) for x in ln.split()) for ln in sections["ROOTS"]]
        coroots = [tuple(int(x) for x in ln.split()) for ln in sections["COROOTS"]]
    except ValueError as exc:
        raise RootDatumError(f"parse: {exc}") from None
    return RootDatum(sections["LABEL"][0], rk, tuple(roots), tuple(coroots))


# --- vanishing computations ----------------------------------------------


@dataclass(frozen=True)
class SubspaceDescriptor:
    """Common zero set in the torus Lie algebra of integer functionals, read mod p."""

    ambient_rank: int
    equations: tuple[Vector, ...]
    p: int = 0

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(tuple(int(x) for x in e) for e in self.equations))
        for e in self.equations:
            if len(e) != self.ambient_rank:
                raise ValueError(f"equation {e} does not have length {self.ambient_rank}")

    def dimension(self) -> int:
        return self.ambient_rank - _rank(self.equations, self.p)


@dataclass(frozen=True)
class LeviDescriptor:
    root_indices: frozenset[int]
    block_sizes: tuple[int, ...] | None = field(default=None, compare=False)


def _rank(rows: Sequence[Vector], p: int) -> int:
    if not rows:
        return 0
    return rank_mod_p(rows, p) if p else rank([list(r) for r in rows])


def phi_y(datum: RootDatum, p: int, y: Sequence) -> frozenset[int]:
    """Indices of the roots whose differential kills the torus element ``y``."""
    check_characteristic(p)
    if len(y) != datum.rank:
        raise ValueError(f"y has length {len(y)}, datum has rank {datum.rank}")
    field_ = next((x.field for x in y if isinstance(x, FFElement)), None)
    yy = [coerce(x, p, field_) for x in y]
    zero = yy[0] - yy[0]
    out = set()
    for i, r in enumerate(datum.roots):
        if sum((a * b for a, b in zip(r, yy)), start=zero) == 0:
            out.add(i)
    return frozenset(out)


def validate_levi(datum: RootDatum, levi: LeviDescriptor) -> None:
    """Indices in range and the subsystem closed under negation."""
    position = {r: i for i, r in enumerate(datum.roots)}
    for i in levi.root_indices:
        if not 0 <= i < datum.num_roots:
            raise ValueError(f"root index {i} out of range")
        if position[tuple(-x for x in datum.roots[i])] not in levi.root_indices:
            raise ValueError(f"Levi subsystem contains root {i} but not its negative")


def center_of_levi(datum: RootDatum, p: int, levi: LeviDescriptor) -> SubspaceDescriptor:
    check_characteristic(p)
    for i in levi.root_indices:
        if not 0 <= i < datum.num_roots:
            raise ValueError(f"root index {i} out of range")
    eqs = tuple(datum.roots[i] for i in sorted(levi.root_indices))
    return SubspaceDescriptor(datum.rank, eqs, p)


def generic_phi(datum: RootDatum, p: int, subspace: SubspaceDescriptor) -> frozenset[int]:
    """Roots vanishing identically on the subspace, i.e. at its generic point."""
    check_characteristic(p)
    base = _rank(subspace.equations, p)
    out = set()
    for i, r in enumerate(datum.roots):
        if _rank(subspace.equations + (r,), p) == base:
            out.add(i)
    return frozenset(out)


def is_stabiliser_type(datum: RootDatum, p: int, levi: LeviDescriptor) -> bool:
    return generic_phi(datum, p, center_of_levi(datum, p, levi)) == levi.root_indices


def levi_from_blocks(n: int, blocks: Iterable[int]) -> LeviDescriptor:
    """Standard block-diagonal Levi of a type-A datum built by this module."""
    blocks = tuple(blocks)
    if any(b < 1 for b in blocks) or sum(blocks) != n:
        raise ValueError(f"block sizes {blocks} do not form a composition of {n}")
    owner = []
    for k, b in enumerate(blocks):
        owner += [k] * b
    idx = frozenset(i for i, (a, b) in enumerate(type_a_pairs(n)) if owner[a] == owner[b])
    return LeviDescriptor(idx, blocks)


def torus_levi() -> LeviDescriptor:
    return LeviDescriptor(frozenset())


def whole_group_levi(datum: RootDatum) -> LeviDescriptor:
    return LeviDescriptor(frozenset(range(datum.num_roots)))


def subspace_basis(subspace: SubspaceDescriptor, field_=None):
    """A basis of the subspace as vectors over the field (used for sampling checks)."""
    from .linalg import nullspace

    p = subspace.p
    if p == 0:
        rows = [[Fraction(x) for x in e] for e in subspace.equations]
        one = Fraction(1)
    else:
        rows = [[coerce(x, p, field_) for x in e] for e in subspace.equations]
        one = coerce(1, p, field_)
    return nullspace(rows, subspace.ambient_rank, one=one)


def levi_subsystems(datum: RootDatum) -> list[LeviDescriptor]:
    """Every Levi subsystem ``Phi ∩ V`` with ``V`` a rational span of roots.

    These are the flats of the root arrangement, found breadth-first by
    adding one root at a time and closing under rational span.  Sorted by
    size, then by index tuple.
    """
    roots = datum.roots

    def close(idx: frozenset[int]) -> frozenset[int]:
        # reduce every root against one echelon basis of the span
        rref, pivots = row_reduce([[Fraction(x) for x in roots[i]] for i in sorted(idx)])
        basis = list(zip(rref, pivots))
        out = set()
        for i, r in enumerate(roots):
            v = [Fraction(x) for x in r]
            for row, pc in basis:
                if v[pc]:
                    c = v[pc]
                    v = [a - c * b for a, b in zip(v, row)]
            if not any(v):
                out.add(i)
        return frozenset(out)

    start = frozenset()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for flat in frontier:
            for i in range(len(roots)):
                if i not in flat:
                    new = close(flat | {i})
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
        frontier = nxt
    return [LeviDescriptor(f) for f in sorted(seen, key=lambda f: (len(f), sorted(f)))]

"""Decomposition classes of gl_n and their closure order.

A class is named by a multiset of blocks ``(n_i, e_i)``: the connected
stabiliser of the semisimple part is ``prod GL_{n_i}`` (one eigenvalue per
block, eigenvalues pairwise distinct) and ``e_i`` is the Jordan type of the
nilpotent part on that block.

The closure order is computed combinatorially: ``d1`` lies in the closure of
``d2`` iff the blocks of ``d2`` can be grouped onto the blocks of ``d1`` with
matching sizes so that each target partition is dominated by the induced
partition of its group.  This order is characteristic-free for GL_n; it is
verified against the matrix oracle in characteristic 0 (see
:mod:`decompclasses.oracle`).

Stabiliser and centraliser dimensions coincide on gl_n in every
characteristic, so a single ``level`` is reported per class.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import zip_longest
from typing import Hashable, Iterable, Sequence

from .partitions import Partition, as_partition, centralizer_dim, dominance_leq, induce, partitions_of

Block = tuple[int, Partition]

MAX_CLOSURE_N = 12


@dataclass(frozen=True)
class GLDecompDatum:
    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = []
        for size, lam in self.blocks:
            lam = as_partition(lam)
            if size < 1 or lam.size != size:
                raise ValueError(f"block ({size}, {lam}) is not a partition of its size")
            blocks.append((int(size), lam))
        if not blocks:
            raise ValueError("a decomposition datum needs at least one block")
        object.__setattr__(self, "blocks", tuple(sorted(blocks, reverse=True)))

    @classmethod
    def of(cls, *blocks) -> "GLDecompDatum":
        """``GLDecompDatum.of((2, (1, 1)), (1, (1,)))``"""
        return cls(tuple((size, as_partition(lam)) for size, lam in blocks))

    @property
    def n(self) -> int:
        return sum(size for size, _ in self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(size for size, _ in self.blocks)

    @property
    def nilpotent_parts(self) -> tuple[Partition, ...]:
        return tuple(lam for _, lam in self.blocks)

    def __lt__(self, other: "GLDecompDatum") -> bool:
        return self.blocks < other.blocks

    def __str__(self) -> str:
        return "".join(f"({size},{lam})" for size, lam in self.blocks)

    def to_json(self) -> list:
        return [[size, lam.to_json()] for size, lam in self.blocks]

    @classmethod
    def from_json(cls, data) -> "GLDecompDatum":
        return cls(tuple((int(size), Partition(tuple(parts))) for size, parts in data))


@dataclass(frozen=True)
class LeviShape:
    block_sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "block_sizes", tuple(sorted(self.block_sizes, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.block_sizes)

    @property
    def dim_levi(self) -> int:
        return sum(b * b for b in self.block_sizes)

    @property
    def dim_center(self) -> int:
        return len(self.block_sizes)

    @property
    def dim_unipotent_radical(self) -> int:
        return (self.n**2 - self.dim_levi) // 2


@dataclass(frozen=True)
class ClassInfo:
    datum: GLDecompDatum
    dim: int
    level: int
    is_sheet_dense: bool = False
    is_isolated: bool = False
    sheet_nilpotent: Partition | None = None

    def to_json(self) -> dict:
        out = {
            "blocks": self.datum.to_json(),
            "dim": self.dim,
            "level": self.level,
            "sheet_dense": self.is_sheet_dense,
            "isolated": self.is_isolated,
        }
        if self.sheet_nilpotent is not None:
            out["sheet_nilpotent"] = self.sheet_nilpotent.to_json()
        return out


@dataclass(frozen=True)
class HasseDiagram:
    group: str
    n: int
    nodes: tuple[ClassInfo, ...]
    covers: tuple[tuple[int, int], ...]  # (lower, upper) node indices

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "n": self.n,
            "nodes": [c.to_json() for c in self.nodes],
            "covers": [list(c) for c in self.covers],
        }

    def to_dot(self) -> str:
        lines = [f'digraph "{self.group}{self.n}" {{', "  rankdir=BT;", "  node [shape=box];"]
        for i, c in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{c.datum} | dim {c.dim}"];')
        by_dim = defaultdict(list)
        for i, c in enumerate(self.nodes):
            by_dim[c.dim].append(i)
        for d in sorted(by_dim):
            lines.append("  { rank=same; " + " ".join(f"n{i};" for i in by_dim[d]) + " }")
        for lo, hi in self.covers:
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# --- enumeration and dimensions -------------------------------------------


def _atoms(n: int) -> list[Block]:
    return [(m, lam) for m in range(n, 0, -1) for lam in partitions_of(m)]


def enumerate_classes(n: int) -> list[GLDecompDatum]:
    """All decomposition classes of gl_n, in descending canonical order."""
    if n < 1:
        raise ValueError("n must be positive")
    atoms = _atoms(n)
    out: list[GLDecompDatum] = []

    def rec(start: int, remaining: int, chosen: list[Block]):
        if remaining == 0:
            out.append(GLDecompDatum(tuple(chosen)))
            return
        for i in range(start, len(atoms)):
            size, _ = atoms[i]
            if size <= remaining:
                chosen.append(atoms[i])
                rec(i, remaining - size, chosen)
                chosen.pop()

    rec(0, n, [])
    return out


@lru_cache(maxsize=None)
def level_of(d: GLDecompDatum) -> int:
    """Stabiliser dimension of any element of the class."""
    return sum(centralizer_dim(lam) for lam in d.nilpotent_parts)


def class_dim(d: GLDecompDatum) -> int:
    return len(d.blocks) + d.n**2 - level_of(d)


def levi_shape(d: GLDecompDatum) -> LeviShape:
    return LeviShape(d.block_sizes)


def sheet_nilpotent(d: GLDecompDatum) -> Partition:
    """The nilpotent orbit in the regular closure of the class (its induced orbit)."""
    return induce(d.nilpotent_parts)


def center_class(n: int) -> GLDecompDatum:
    return GLDecompDatum(((n, Partition((1,) * n)),))


def regular_semisimple_class(n: int) -> GLDecompDatum:
    return GLDecompDatum(((1, Partition((1,))),) * n)


def nilpotent_class(lam) -> GLDecompDatum:
    lam = as_partition(lam)
    return GLDecompDatum(((lam.size, lam),))


# --- closure order -----------------------------------------------------------


def _sub_multisets(pool: tuple[tuple[Block, int], ...], total: int):
    """Yield ``(chosen blocks, remaining pool)`` for sub-multisets of block size ``total``."""
    if total == 0:
        yield (), pool
        return
    if not pool:
        return
    (block, count), rest = pool[0], pool[1:]
    size = block[0]
    for take in range(min(count, total // size), -1, -1):
        for chosen, remaining in _sub_multisets(rest, total - take * size):
            left = ((block, count - take),) if count > take else ()
            yield (block,) * take + chosen, left + remaining


# The search below runs on raw ``(size, parts tuple)`` blocks; hashing
# Partition objects dominates the cost otherwise.

def _induced_dominates(f: tuple[int, ...], chosen) -> bool:
    """``dominance_leq(f, induce(chosen))`` on raw parts tuples."""
    cols = list(zip_longest(*(parts for _, parts in chosen), fillvalue=0))
    a = b = 0
    for k in range(max(len(f), len(cols))):
        a += f[k] if k < len(f) else 0
        b += sum(cols[k]) if k < len(cols) else 0
        if a > b:
            return False
    return True


@lru_cache(maxsize=None)
def _fits(targets: tuple, pool: tuple) -> bool:
    if not targets:
        return not pool
    (m, f), rest = targets[0], targets[1:]
    for chosen, remaining in _sub_multisets(pool, m):
        if chosen and _induced_dominates(f, chosen) and _fits(rest, remaining):
            return True
    return False


def _raw(blocks: Iterable[Block]) -> tuple:
    return tuple((size, lam.parts) for size, lam in blocks)


def _multiset(blocks: Iterable[Block]) -> tuple:
    return tuple(sorted(Counter(_raw(blocks)).items(), reverse=True))


def closure_leq(d1: GLDecompDatum, d2: GLDecompDatum) -> bool:
    """True iff the class ``d1`` lies in the closure of the class ``d2``."""
    if d1.n != d2.n:
        raise ValueError(f"classes of gl_{d1.n} and gl_{d2.n} are not comparable")
    # The grouping is onto d1's blocks, and induction preserves centraliser
    # dimension while dominance can only raise it: both give cheap rejections.
    if len(d1.blocks) > len(d2.blocks) or level_of(d1) < level_of(d2):
        return False
    return _fits(_raw(d1.blocks), _multiset(d2.blocks))


def closure_matrix(data: Sequence[GLDecompDatum]) -> list[list[bool]]:
    """``m[i][j] = closure_leq(data[i], data[j])``."""
    if len({d.n for d in data}) > 1:
        raise ValueError("all classes must belong to the same gl_n")
    keys = [(len(d.blocks), level_of(d), _raw(d.blocks), _multiset(d.blocks)) for d in data]
    return [
        [nb1 <= nb2 and lv1 >= lv2 and _fits(b1, ms2) for nb2, lv2, _, ms2 in keys]
        for nb1, lv1, b1, _ in keys
    ]


def transitive_reduction(leq: list[list[bool]]) -> list[tuple[int, int]]:
    """Cover pairs ``(i, j)`` of a partial order given as a boolean matrix."""
    n = len(leq)
    above = [sum(1 << j for j in range(n) if leq[i][j] and i != j) for i in range(n)]
    covers = []
    for i in range(n):
        indirect = 0
        rest = above[i]
        while rest:
            k = (rest & -rest).bit_length() - 1
            indirect |= above[k]
            rest &= rest - 1
        direct = above[i] & ~indirect
        covers += [(i, j) for j in range(n) if direct >> j & 1]
    return covers


def _check_tractable(n: int) -> None:
    if n > MAX_CLOSURE_N:
        raise ValueError(f"closure order is only supported for n <= {MAX_CLOSURE_N} (got {n})")


def _ordered_classes(n: int) -> list[GLDecompDatum]:
    return sorted(enumerate_classes(n), key=lambda d: (class_dim(d), d.blocks), reverse=True)


def class_infos(n: int) -> list[ClassInfo]:
    """Every class of gl_n with dimension, level and sheet flags.

    Within a level set the sheet-dense classes are the closure-maximal
    ones; isolated classes are both maximal and minimal there.
    """
    _check_tractable(n)
    data = _ordered_classes(n)
    groups: dict[int, list[GLDecompDatum]] = defaultdict(list)
    for d in data:
        groups[level_of(d)].append(d)
    flags = {}
    for members in groups.values():
        for d in members:
            others = [e for e in members if e != d]
            maximal = not any(closure_leq(d, e) for e in others)
            minimal = not any(closure_leq(e, d) for e in others)
            flags[d] = (maximal, maximal and minimal)
    infos = []
    for d in data:
        dense, isolated = flags[d]
        infos.append(ClassInfo(d, class_dim(d), level_of(d), dense, isolated, sheet_nilpotent(d) if dense else None))
    return infos


def hasse(n: int) -> HasseDiagram:
    infos = class_infos(n)
    leq = closure_matrix([c.datum for c in infos])
    return HasseDiagram("GL", n, tuple(infos), tuple(transitive_reduction(leq)))


def sheets(n: int) -> list[tuple[int, list[ClassInfo]]]:
    """Classes grouped by level, ascending; flags mark sheet-dense and isolated classes."""
    groups: dict[int, list[ClassInfo]] = defaultdict(list)
    for c in class_infos(n):
        groups[c.level].append(c)
    return sorted(groups.items())


def pgl_transport(diagram: HasseDiagram) -> HasseDiagram:
    """Hasse diagram of PGL_n from that of GL_n.

    ``d pi`` is surjective with one-dimensional kernel (the scalars), so
    the order is unchanged and every class (and stabiliser) loses one
    dimension.
    """
    if diagram.group != "GL":
        raise ValueError("pgl_transport expects a GL_n diagram")
    return HasseDiagram("PGL", diagram.n, tuple(map(pgl_info, diagram.nodes)), diagram.covers)


def pgl_info(c: ClassInfo) -> ClassInfo:
    """The image in pgl_n of a gl_n class (scalars quotiented out)."""
    return replace(c, dim=c.dim - 1, level=c.level - 1)


def group_class_infos(group: str, n: int) -> list[ClassInfo]:
    group = group.lower()
    if group not in ("gl", "pgl"):
        raise ValueError(f"unknown group {group!r}; expected gl or pgl")
    infos = class_infos(n)
    return infos if group == "gl" else [pgl_info(c) for c in infos]


def group_hasse(group: str, n: int) -> HasseDiagram:
    group = group.lower()
    if group == "gl":
        return hasse(n)
    if group == "pgl":
        return pgl_transport(hasse(n))
    raise ValueError(f"unknown group {group!r}; expected gl or pgl")


# --- induction of arbitrary orbits ---------------------------------------------


def induce_orbit(labeled_blocks: Sequence[tuple[Hashable, Partition]]) -> list[tuple[Hashable, Partition]]:
    """Induce the orbit ``blockdiag(t_i I + J_{e_i})`` from its block Levi.

    Blocks sharing an eigenvalue tag merge by nilpotent induction inside the
    centraliser of the semisimple part; distinct tags stay apart.  Output is
    sorted by tag.
    """
    grouped: dict[Hashable, list[Partition]] = defaultdict(list)
    for tag, lam in labeled_blocks:
        lam = as_partition(lam)
        if lam.size < 1:
            raise ValueError("block partitions must have positive size")
        grouped[tag].append(lam)
    return [(tag, induce(grouped[tag])) for tag in sorted(grouped, key=_tag_key)]


def _tag_key(tag):
    return (type(tag).__name__, tag)

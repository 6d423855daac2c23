"""Matrix oracle: exact matrices, Jordan types and orbit-closure tests.

Nothing here uses the partition formulas from :mod:`decompclasses.engine`
for its answers.  Jordan types come from rank sequences of ``(A - t)^k``,
orbit closure from the rank criterion, and induced orbits from sampling
random points of ``O + u_p`` until the dominance-maximal Jordan type repeats.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence

import sympy

from .engine import GLDecompDatum
from .fields import FFElement, FiniteField
from .linalg import charpoly, matmul, rank, shift
from .partitions import Partition, as_partition, dominance_leq, transpose


class SpectrumNotInField(ValueError):
    """The characteristic polynomial has an irreducible factor of degree > 1."""


class InconclusiveSampling(RuntimeError):
    """Random sampling did not settle on a dense orbit within the trial budget."""


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple[tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        for x in itertools.chain.from_iterable(rows):
            if isinstance(x, float) or not isinstance(x, (int, Fraction, FFElement)):
                raise TypeError(f"inexact or unsupported entry {x!r}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def field(self) -> FiniteField | None:
        return next((x.field for r in self.rows for x in r if isinstance(x, FFElement)), None)

    def as_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(matmul(self.as_lists(), other.as_lists()))


@dataclass(frozen=True)
class JordanType:
    spectrum: tuple[tuple[Hashable, Partition], ...]

    @classmethod
    def from_dict(cls, spectrum: dict) -> "JordanType":
        items = [(t, as_partition(lam)) for t, lam in spectrum.items()]
        return cls(tuple(sorted(items, key=lambda kv: _scalar_key(kv[0]))))

    def as_dict(self) -> dict:
        return dict(self.spectrum)

    @property
    def n(self) -> int:
        return sum(lam.size for _, lam in self.spectrum)

    def __getitem__(self, t) -> Partition:
        return self.as_dict()[t]

    def dominated_by(self, other: "JordanType") -> bool:
        """Eigenvalue-wise dominance; False when the eigenvalue sizes differ."""
        a, b = self.as_dict(), other.as_dict()
        if {t: lam.size for t, lam in a.items()} != {t: lam.size for t, lam in b.items()}:
            return False
        return all(dominance_leq(a[t], b[t]) for t in a)


def _scalar_key(x):
    return (1, x.code) if isinstance(x, FFElement) else (0, Fraction(x))


def _zero_one(sample) -> tuple:
    if isinstance(sample, FFElement):
        return sample.field.zero(), sample.field.one()
    return 0, 1


# --- constructions ----------------------------------------------------------


def jordan_block_matrix(lam, t=0) -> list[list]:
    lam = as_partition(lam)
    zero, one = _zero_one(t)
    n = lam.size
    m = [[t if i == j else zero for j in range(n)] for i in range(n)]
    start = 0
    for part in lam.parts:
        for i in range(start, start + part - 1):
            m[i][i + 1] = one
        start += part
    return m


def block_diag(mats: Sequence[list[list]], zero=0) -> list[list]:
    n = sum(len(m) for m in mats)
    out = [[zero] * n for _ in range(n)]
    off = 0
    for m in mats:
        for i, row in enumerate(m):
            out[off + i][off : off + len(row)] = row
        off += len(m)
    return out


def representative(d: GLDecompDatum, eigenvalues: Sequence) -> ExactMatrix:
    """``blockdiag(z_i I + J_{e_i})``, a point of the class when the z_i are distinct."""
    if len(eigenvalues) != len(d.blocks):
        raise ValueError(f"need {len(d.blocks)} eigenvalues, got {len(eigenvalues)}")
    if len(set(eigenvalues)) != len(eigenvalues):
        raise ValueError("eigenvalues must be pairwise distinct")
    zero, _ = _zero_one(eigenvalues[0])
    mats = [jordan_block_matrix(lam, z) for (_, lam), z in zip(d.blocks, eigenvalues)]
    return ExactMatrix(block_diag(mats, zero))


def first_primes(k: int) -> list[int]:
    out, c = [], 2
    while len(out) < k:
        if all(c % q for q in out):
            out.append(c)
        c += 1
    return out


def generic_eigenvalues(k: int, seed: int = 0) -> list[int]:
    scale = seed % 97 + 1
    return [q * scale for q in first_primes(k)]


# --- spectra and Jordan types ------------------------------------------------


def eigenvalues_in_field(A: ExactMatrix) -> list:
    """Distinct eigenvalues of ``A`` (raises if some lie outside the base field)."""
    rows = A.as_lists()
    coeffs = charpoly(rows)
    f = A.field
    if f is None:
        x = sympy.Symbol("x")
        poly = sympy.Poly([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in coeffs], x, domain="QQ")
        roots = []
        for factor, _ in poly.factor_list()[1]:
            if factor.degree() > 1:
                raise SpectrumNotInField(f"irreducible factor {factor.as_expr()} of degree {factor.degree()}")
            a, b = factor.all_coeffs()
            r = -sympy.Rational(b) / sympy.Rational(a)
            roots.append(Fraction(int(r.p), int(r.q)))
        return sorted(roots)
    roots = []
    for t in f.elements():
        val = f.zero()
        for c in coeffs:
            val = val * t + c
        if val == 0:
            roots.append(t)
    if not roots and A.n:
        raise SpectrumNotInField(f"no eigenvalues of this matrix lie in {f}")
    return roots


def rank_sequence(rows, t, upto: int) -> list[int]:
    """``[rank((A - t)^k) for k in 0..upto]``."""
    n = len(rows)
    b = shift(rows, t)
    ranks = [n]
    power = b
    for k in range(1, upto + 1):
        ranks.append(rank(power))
        if k < upto:
            power = matmul(power, b)
    return ranks


def jordan_type(A: ExactMatrix, eigenvalues: Sequence | None = None) -> JordanType:
    rows = A.as_lists()
    n = A.n
    if eigenvalues is None:
        eigenvalues = eigenvalues_in_field(A)
    spectrum = {}
    total = 0
    for t in dict.fromkeys(eigenvalues):
        ranks = rank_sequence(rows, t, n + 1)
        assert all(a >= b for a, b in zip(ranks, ranks[1:])), "rank sequence must be non-increasing"
        assert ranks[n] == ranks[n + 1], "rank sequence must stabilise by k = n"
        mult = n - ranks[n]
        if mult == 0:
            raise ValueError(f"{t} is not an eigenvalue")
        # number of Jordan blocks of size >= k is r_{k-1} - r_k
        conj = [ranks[k - 1] - ranks[k] for k in range(1, n + 1) if ranks[k - 1] > ranks[k]]
        spectrum[t] = transpose(Partition(tuple(conj)))
        total += mult
    if total != n:
        raise SpectrumNotInField(f"only {total} of {n} eigenvalues lie in the field")
    return JordanType.from_dict(spectrum)


def orbit_closure_leq(A: ExactMatrix, B: ExactMatrix, eigenvalues: Sequence | None = None) -> bool:
    """True iff ``A`` lies in the Zariski closure of the conjugacy class of ``B``."""
    if A.n != B.n:
        raise ValueError("matrices of different sizes")
    if A.field != B.field:
        raise ValueError("matrices over different fields")
    ra, rb = A.as_lists(), B.as_lists()
    if charpoly(ra) != charpoly(rb):
        return False
    if eigenvalues is None:
        eigenvalues = eigenvalues_in_field(B)
    for t in dict.fromkeys(eigenvalues):
        sa = rank_sequence(ra, t, A.n)
        sb = rank_sequence(rb, t, B.n)
        if any(x > y for x, y in zip(sa, sb)):
            return False
    return True


# --- induced orbits by sampling ----------------------------------------------


def _induced_sample(blocks, trials: int, seed: int, field: FiniteField | None, bound: int):
    if trials < 2:
        raise ValueError("trials must be at least 2")
    if not blocks:
        raise ValueError("need at least one block")
    blocks = [(t if field is None else field(t), as_partition(lam)) for t, lam in blocks]
    zero = 0 if field is None else field.zero()
    base = block_diag([jordan_block_matrix(lam, t) for t, lam in blocks], zero)
    owner = [k for k, (_, lam) in enumerate(blocks) for _ in range(lam.size)]
    n = len(owner)
    region = [(r, c) for r in range(n) for c in range(n) if owner[r] < owner[c]]
    eig = list(dict.fromkeys(t for t, _ in blocks))
    rng = random.Random(seed)
    best = prev = None
    for _ in range(trials):
        m = [row[:] for row in base]
        for r, c in region:
            m[r][c] = m[r][c] + (rng.randint(-bound, bound) if field is None else field.random_element(rng))
        sample = ExactMatrix(m)
        jt = jordan_type(sample, eig)
        if best is None or best.dominated_by(jt):
            best, best_matrix = jt, sample
        if prev is not None and prev == jt == best:
            return best, best_matrix
        prev = jt
    raise InconclusiveSampling(f"no stable dense orbit after {trials} samples for blocks {blocks}")


def generic_induced_type(blocks: Sequence[tuple], trials: int = 8, seed: int = 0,
                         field: FiniteField | None = None, bound: int = 10**6) -> JordanType:
    """Jordan type of the dense orbit in ``G . (O + u_p)``.

    ``blocks`` lists ``(eigenvalue, partition)`` along the diagonal; the
    parabolic is block upper triangular in that order.  Off-diagonal blocks
    above the diagonal are filled with uniform integers in ``[-bound, bound]``
    (or uniform field elements when ``field`` is given).  A type is accepted
    once two consecutive samples agree with the running dominance maximum.
    """
    return _induced_sample(blocks, trials, seed, field, bound)[0]


def class_closure_member_oracle(d1: GLDecompDatum, d2: GLDecompDatum, seed: int = 0, trials: int = 8,
                                field: FiniteField | None = None) -> bool:
    """Is a representative of class ``d1`` in the closure of class ``d2``?

    Searches every assignment of ``d2``'s blocks to ``d1``'s eigenvalues
    whose characteristic polynomial matches, samples the induced orbit of
    that assignment and tests orbit-closure membership by ranks.  With
    ``field`` the whole computation runs over that finite field instead of Q.
    """
    if d1.n != d2.n:
        raise ValueError("classes of different rank")
    w = generic_eigenvalues(len(d1.blocks), seed)
    if field is not None:
        w = [field(x) for x in w]
        if len(set(w)) != len(w):
            raise ValueError(f"{field} is too small for {len(w)} distinct eigenvalues")
    A = representative(d1, w)
    seen = set()
    for phi in itertools.product(range(len(d1.blocks)), repeat=len(d2.blocks)):
        sizes = Counter()
        for (size, _), j in zip(d2.blocks, phi):
            sizes[j] += size
        if any(sizes[j] != size for j, (size, _) in enumerate(d1.blocks)):
            continue
        key = tuple(sorted(zip(d2.blocks, phi)))
        if key in seen:
            continue
        seen.add(key)
        blocks = [(w[j], lam) for (_, lam), j in zip(d2.blocks, phi)]
        _, M = _induced_sample(blocks, trials, seed, field, 10**6)
        if orbit_closure_leq(A, M, eigenvalues=w):
            return True
    return False


# --- Lie algebras by structure constants ---------------------------------------


@dataclass(frozen=True)
class StructureConstantAlgebra:
    """``[b_i, b_j] = sum_k table[i][j][k] b_k`` over an exact field."""

    dim: int
    table: tuple
    label: str = ""

    def __post_init__(self):
        table = tuple(tuple(tuple(row) for row in block) for block in self.table)
        object.__setattr__(self, "table", table)
        d = self.dim
        if len(table) != d or any(len(b) != d or any(len(v) != d for v in b) for b in table):
            raise ValueError("structure constant table must be dim x dim x dim")
        for i in range(d):
            for j in range(d):
                if any(a + b != 0 for a, b in zip(table[i][j], table[j][i])) or any(x != 0 for x in table[i][i]):
                    raise ValueError(f"bracket is not alternating at ({i}, {j})")
        basis = [self._unit(i) for i in range(d)]
        for i, j, k in itertools.combinations(range(d), 3):
            x, y, z = basis[i], basis[j], basis[k]
            jac = [a + b + c for a, b, c in zip(self.bracket(x, self.bracket(y, z)),
                                                self.bracket(y, self.bracket(z, x)),
                                                self.bracket(z, self.bracket(x, y)))]
            if any(v != 0 for v in jac):
                raise ValueError(f"Jacobi identity fails on basis triple {(i, j, k)}")

    def _zero(self):
        sample = next((x for b in self.table for v in b for x in v if isinstance(x, FFElement)), None)
        return sample.field.zero() if sample is not None else Fraction(0)

    def _unit(self, i: int) -> list:
        zero = self._zero()
        one = zero + 1
        return [one if k == i else zero for k in range(self.dim)]

    def bracket(self, x, y) -> list:
        out = [self._zero()] * self.dim
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                c = a * b
                out = [o + c * t for o, t in zip(out, self.table[i][j])]
        return out

    def ad(self, x) -> list[list]:
        """Matrix of ``ad x`` (column j is ``[x, b_j]``)."""
        cols = [self.bracket(x, self._unit(j)) for j in range(self.dim)]
        return [list(r) for r in zip(*cols)]


def centralizer_dim_lie(alg: StructureConstantAlgebra, x) -> int:
    if len(x) != alg.dim:
        raise ValueError("vector length does not match the algebra")
    return alg.dim - rank(alg.ad(list(x)))


def gl_algebra(n: int, field: FiniteField | None = None) -> StructureConstantAlgebra:
    """gl_n on the basis ``E_ij`` (index ``i*n + j``)."""
    conv = (lambda v: field(v)) if field is not None else Fraction
    d = n * n
    table = []
    for a in range(d):
        i, j = divmod(a, n)
        block = []
        for b in range(d):
            k, l = divmod(b, n)
            v = [0] * d
            # [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
            if j == k:
                v[i * n + l] += 1
            if l == i:
                v[k * n + j] -= 1
            block.append([conv(x) for x in v])
        table.append(block)
    return StructureConstantAlgebra(d, table, f"gl{n}")


def matrix_to_gl_vector(A: ExactMatrix) -> list:
    return [x for row in A.rows for x in row]

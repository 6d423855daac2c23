"""The pgl_2 micro-model, where stabiliser and centraliser dimensions part ways.

``pgl_2 = gl_2 / scalars`` with basis ``(E11, E12, E21)`` (``E22 = -E11``
modulo scalars).  In characteristic 2 the bracket ``[E12, E21] = E11 + E22``
is a scalar, so the image of ``E12`` has a 2-dimensional centraliser although
its stabiliser in PGL_2 is 1-dimensional.

Stabiliser dimensions are computed by a shift sweep: ``g`` fixes the image of
``X`` iff ``g X = (X + s I) g`` for some scalar ``s``.  For each ``s`` in
F_{p^k} this is a linear system in the four entries of ``g``; when its
solution space contains an invertible matrix it contributes a coset of the
stabiliser of dimension (solution dimension - 1).  Only finitely many shifts
are admissible (``X + sI`` must be conjugate to ``X``), and for these 2 x 2
representatives they already lie in the prime field, so the sweep is exact;
``k`` can be raised to watch the answer stay put.
"""
from __future__ import annotations

from .fields import FiniteField
from .linalg import nullspace
from .oracle import StructureConstantAlgebra, centralizer_dim_lie


def _to_pgl2(m) -> list:
    (a, b), (c, d) = m
    return [a - d, b, c]


def _from_pgl2(v, zero) -> list[list]:
    return [[v[0], v[1]], [v[2], zero]]


def _mat_bracket(x, y):
    def mul(a, b):
        return [[sum((a[i][k] * b[k][j] for k in range(2)), start=a[0][0] * 0) for j in range(2)] for i in range(2)]

    xy, yx = mul(x, y), mul(y, x)
    return [[xy[i][j] - yx[i][j] for j in range(2)] for i in range(2)]


def pgl2_algebra(field: FiniteField) -> StructureConstantAlgebra:
    zero = field.zero()
    basis = []
    for i in range(3):
        v = [zero] * 3
        v[i] = field.one()
        basis.append(_from_pgl2(v, zero))
    table = [[_to_pgl2(_mat_bracket(x, y)) for y in basis] for x in basis]
    return StructureConstantAlgebra(3, table, f"pgl2/F{field.order}")


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _adj2(m):
    return [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]


def _contains_invertible(basis) -> bool:
    # det on span(B_i) is the quadratic form sum det(B_i) t_i^2 + sum_{i<j} tr(adj(B_i) B_j) t_i t_j
    mats = [[[v[0], v[1]], [v[2], v[3]]] for v in basis]
    for i, a in enumerate(mats):
        if _det2(a) != 0:
            return True
        adj = _adj2(a)
        for b in mats[i + 1:]:
            tr = sum((adj[r][k] * b[k][r] for r in range(2) for k in range(2)), start=adj[0][0] * 0)
            if tr != 0:
                return True
    return False


def stabiliser_dim_pgl2(x, field: FiniteField) -> int:
    """Dimension of the PGL_2-stabiliser of the image of the 2x2 matrix ``x``."""
    zero, one = field.zero(), field.one()
    best = -1
    for s in field.elements():
        shifted = [[x[0][0] + s, x[0][1]], [x[1][0], x[1][1] + s]]
        cols = []
        for k in range(4):
            g = [[zero, zero], [zero, zero]]
            g[k // 2][k % 2] = one
            gx = [[sum((g[i][t] * x[t][j] for t in range(2)), start=zero) for j in range(2)] for i in range(2)]
            yg = [[sum((shifted[i][t] * g[t][j] for t in range(2)), start=zero) for j in range(2)] for i in range(2)]
            cols.append([gx[i][j] - yg[i][j] for i in range(2) for j in range(2)])
        system = [list(r) for r in zip(*cols)]
        sol = nullspace(system, 4, one=one)
        if sol and _contains_invertible(sol):
            best = max(best, len(sol) - 1)
    assert best >= 0, "the shift s = 0 always admits the identity"
    return best


def _is_nilpotent_image(x) -> bool:
    # image in pgl_2 is nilpotent iff x has a single eigenvalue: (trace)^2 = 4 det
    tr = x[0][0] + x[1][1]
    return tr * tr - 4 * _det2(x) == 0


def pgl2_micro(p: int = 2, k: int = 2) -> dict:
    """Table of centraliser and stabiliser dimensions in pgl_2 over F_{p^k}."""
    field = FiniteField(p, k)
    zero, one = field.zero(), field.one()
    alg = pgl2_algebra(field)
    reps = [
        ("0", [[zero, zero], [zero, zero]]),
        ("pi(E11)", [[one, zero], [zero, zero]]),
        ("pi(E12)", [[zero, one], [zero, zero]]),
    ]
    reps += [(f"pi(diag(1,{lam!r}))", [[one, zero], [zero, lam]]) for lam in field.elements()]
    rows = []
    for name, x in reps:
        rows.append({
            "element": name,
            "centraliser_dim": centralizer_dim_lie(alg, _to_pgl2(x)),
            "stabiliser_dim": stabiliser_dim_pgl2(x, field),
            "nilpotent": _is_nilpotent_image(x),
        })
    by_name = {r["element"]: r for r in rows}
    zero_row, e11, e12 = by_name["0"], by_name["pi(E11)"], by_name["pi(E12)"]
    if p == 2:
        checks = {
            "centraliser_dims": (zero_row["centraliser_dim"], e11["centraliser_dim"], e12["centraliser_dim"]) == (3, 1, 2),
            "stabiliser_dims": e11["stabiliser_dim"] == 1 and e12["stabiliser_dim"] == 1,
            "centraliser_level_2_strictly_inside_stabiliser_level_1": (
                e12["centraliser_dim"] == 2 and e12["stabiliser_dim"] == 1
                and e11["stabiliser_dim"] == 1 and e11["centraliser_dim"] != 2
            ),
            "no_nilpotent_in_centraliser_level_1": not any(
                r["nilpotent"] for r in rows if r["centraliser_dim"] == 1
            ) and any(r["centraliser_dim"] == 1 for r in rows),
        }
    else:
        checks = {"dimensions_agree": all(r["centraliser_dim"] == r["stabiliser_dim"] for r in rows)}
    return {
        "p": p,
        "k": k,
        "modulus": list(field.modulus),
        "control": p != 2,
        "rows": rows,
        "checks": checks,
        "ok": all(checks.values()),
    }

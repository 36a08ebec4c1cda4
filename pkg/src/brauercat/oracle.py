"""Brute-force invariants of SO_m and O_m in tensor powers of Q^m.

The SO_m-invariants are the common kernel of the so_m generators acting as
derivations; the reflection ``diag(-1, 1, ..., 1)`` then splits them into
O_m-invariants (+1) and determinant-twisted invariants (-1).  Nothing here
uses diagrams, so it serves as ground truth for the diagrammatic side.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .linalg import echelon, nullspace
from .tensors import Tensor

DEFAULT_ORACLE_GUARD = 3 ** 8


class OracleGuardError(MemoryError):
    pass


def _check_guard(m: int, r: int, guard: int | None):
    guard = DEFAULT_ORACLE_GUARD if guard is None else guard
    if m ** r > guard:
        raise OracleGuardError(f"{m}^{r} = {m ** r} basis tensors exceeds the oracle guard of {guard}")


def multi_indices(m: int, r: int):
    return itertools.product(range(m), repeat=r)


def flat_index(idx, m: int) -> int:
    out = 0
    for i in idx:
        out = out * m + i
    return out


def so_generators(m: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(m) for b in range(a + 1, m)]


def so_action_matrices(m: int, r: int, guard: int | None = None) -> list[dict[int, dict[int, int]]]:
    """For each ``E_ba - E_ab`` (``a < b``) the derivation action on
    ``(Q^m)^{(x) r}`` as sparse rows ``{row: {col: value}}``."""
    _check_guard(m, r, guard)
    out = []
    for a, b in so_generators(m):
        rows: dict[int, dict[int, int]] = {}
        for idx in multi_indices(m, r):
            col = flat_index(idx, m)
            for k, i in enumerate(idx):
                if i == a:
                    img, val = b, 1
                elif i == b:
                    img, val = a, -1
                else:
                    continue
                new = idx[:k] + (img,) + idx[k + 1:]
                row = rows.setdefault(flat_index(new, m), {})
                row[col] = row.get(col, 0) + val
        out.append({k: {c: v for c, v in row.items() if v} for k, row in rows.items()})
    return out


def dense_action(mat: dict[int, dict[int, int]], n: int) -> list[list[int]]:
    dense = [[0] * n for _ in range(n)]
    for row, cols in mat.items():
        for c, v in cols.items():
            dense[row][c] = v
    return dense


def reflection_parity(m: int, r: int) -> list[int]:
    """+1 or -1 per basis tensor: ``diag(-1, 1, ..., 1)^{(x) r}`` is diagonal."""
    return [(-1) ** idx.count(0) for idx in multi_indices(m, r)]


def _tensor_from_vector(v, m: int, r: int) -> Tensor:
    arr = np.array(list(v), dtype=object).reshape((m,) * r) if r else np.array(v[0], dtype=object)
    return Tensor(m, 0, r, arr)


@dataclass
class InvariantSpace:
    m: int
    r: int
    basis: list[Tensor]
    plus: list[Tensor] = field(default_factory=list)
    minus: list[Tensor] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def dim_plus(self) -> int:
        return len(self.plus)

    @property
    def dim_minus(self) -> int:
        return len(self.minus)


def _rref_tensors(vectors, m: int, r: int) -> list[Tensor]:
    n = m ** r
    rows = echelon(vectors).rref()
    return [_tensor_from_vector([row.get(c, Fraction(0)) for c in range(n)], m, r) for row in rows]


def invariant_space(m: int, r: int, guard: int | None = None) -> InvariantSpace:
    n = m ** r
    if r == 0:
        one = Tensor(m, 0, 0, np.array(Fraction(1), dtype=object))
        return InvariantSpace(m, 0, [one], [one], [])
    mats = so_action_matrices(m, r, guard)
    equations = [row for mat in mats for _, row in sorted(mat.items())]
    kernel = nullspace(equations, n)
    parity = reflection_parity(m, r)
    plus_parts = [[x if p > 0 else 0 for x, p in zip(v, parity)] for v in kernel]
    minus_parts = [[x if p < 0 else 0 for x, p in zip(v, parity)] for v in kernel]
    return InvariantSpace(
        m, r,
        basis=_rref_tensors(kernel, m, r),
        plus=_rref_tensors(plus_parts, m, r),
        minus=_rref_tensors(minus_parts, m, r),
    )


_D_CACHE: dict[tuple[int, int], int] = {}


def d_value(m: int, r: int, guard: int | None = None) -> int:
    """``dim Hom_O(m)(Q, V^{(x) r})``, from the oracle; 0 for ``r < 0``."""
    if r < 0:
        return 0
    if r == 0:
        return 1
    key = (m, r)
    if key not in _D_CACHE:
        _D_CACHE[key] = invariant_space(m, r, guard).dim_plus
    return _D_CACHE[key]


def d_table(m: int, r_max: int, guard: int | None = None) -> dict[int, int]:
    return {r: d_value(m, r, guard) for r in range(r_max + 1)}


def d_table_csv(table: dict[int, int]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["r", "d"])
    for r in sorted(table):
        w.writerow([r, table[r]])
    return buf.getvalue()


def so_dimension_formula(m: int, r: int, guard: int | None = None) -> int:
    """``C(r, m) d(r - m) + d(r)``."""
    return comb(r, m) * d_value(m, r - m, guard) + d_value(m, r, guard)


def verify_thm_so_inv(m: int, r: int, guard: int | None = None) -> dict:
    """Compare the oracle's determinant-twisted invariants with the span of
    ``Sym_r (Lambda (x) C^{(x)(r-m)/2})``, and the Lambda-projection identity
    ``Lambda (x) V_det = pi_Lambda(V^{(x)(m+r)})^O`` by dimension."""
    from . import tensors as T
    from .linalg import rank

    space = invariant_space(m, r, guard)
    report = {"m": m, "r": r, "dim_plus": space.dim_plus, "dim_minus": space.dim_minus}
    if r < m or (r - m) % 2:
        report["expected_zero"] = True
        report["span_equal"] = space.dim_minus == 0
    else:
        report["expected_zero"] = False
        seed = T.tensor(T.lambda_tensor(m), T.tensor_power(T.cup_tensor(m), (r - m) // 2))
        orbit = [T.as_vector(x) for x in T.sym_span(seed)]
        minus = [T.as_vector(x) for x in space.minus]
        e_orbit = echelon(orbit)
        e_minus = echelon(minus)
        report["orbit_rank"] = e_orbit.rank
        report["span_equal"] = e_orbit.rref() == e_minus.rref()
    # Lambda (x) (V^r)^{O,det} against pi_Lambda of the O-invariants in m + r slots
    total = m + r
    if total % 2 == 0 and m ** total <= (DEFAULT_ORACLE_GUARD if guard is None else guard):
        from .homspace import pair_partition_tensors

        projected = [T.as_vector(T.project_lambda_coefficients(x)) for x in pair_partition_tensors(m, total)]
        report["projection_rank"] = rank(projected)
        report["projection_matches"] = report["projection_rank"] == space.dim_minus
    elif total % 2:
        report["projection_rank"] = 0
        report["projection_matches"] = space.dim_minus == 0
    return report


def verify_fft(m: int, r: int, guard: int | None = None) -> dict:
    """O_m-invariants equal the span of pair-partition contraction tensors."""
    from .homspace import pair_partition_tensors
    from . import tensors as T

    space = invariant_space(m, r, guard)
    if r % 2:
        return {"m": m, "r": r, "dim_plus": space.dim_plus, "span_equal": space.dim_plus == 0}
    spans = [T.as_vector(x) for x in pair_partition_tensors(m, r)]
    plus = [T.as_vector(x) for x in space.plus]
    return {"m": m, "r": r, "dim_plus": space.dim_plus,
            "span_equal": echelon(spans).rref() == echelon(plus).rref()}


def verify_decomposition(m: int, r: int, guard: int | None = None) -> dict:
    """Every SO_m-invariant splits uniquely into O_m and det-twisted parts,
    both of which are again invariant."""
    from . import tensors as T

    space = invariant_space(m, r, guard)
    mats = so_action_matrices(m, r, guard) if r else []
    parity = reflection_parity(m, r) if r else [1]
    plus_e = echelon(T.as_vector(x) for x in space.plus)
    minus_e = echelon(T.as_vector(x) for x in space.minus)
    ok = True
    for b in space.basis:
        v = T.as_vector(b)
        vp = [x if p > 0 else 0 for x, p in zip(v, parity)]
        vm = [x if p < 0 else 0 for x, p in zip(v, parity)]
        ok &= plus_e.contains(vp) and minus_e.contains(vm)
        for mat in mats:
            for row, cols in mat.items():
                if sum(cols[c] * vp[c] for c in cols if vp[c]) or sum(cols[c] * vm[c] for c in cols if vm[c]):
                    ok = False
    # the plus and minus spaces meet only in zero
    both = echelon([T.as_vector(x) for x in space.plus] + [T.as_vector(x) for x in space.minus])
    ok &= both.rank == space.dim
    return {"m": m, "r": r, "dim": space.dim, "ok": bool(ok)}

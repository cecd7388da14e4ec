"""Extending a one-flavor weight module to the full operator algebra.

A module carrying X and exactly one of Y, Y1 extends to the full algebra
exactly when a linear system in the missing operator's entries is
solvable: the upward product relation (through X), the downward product
relation, and the mixed relation Y1(tau-1) = Y(sigma-1) pin every entry
of the missing graded map against the known data.  The R-twisting laws
hold automatically for any graded map, so they add no constraints.

The solution set is empty, a point, or an affine space, reported as
IMPOSSIBLE (with the first violated constraint in offset-major order),
UNIQUE, or FAMILY (with a representative, free coordinates set to zero,
and a basis of the homogeneous solution space).  Representatives are
re-verified against the full relation set before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .fields import Fel, FieldCtx
from .linalg import Mat
from .verify import check_relations
from .wmod import WeightModule

IMPOSSIBLE = "IMPOSSIBLE"
UNIQUE = "UNIQUE"
FAMILY = "FAMILY"


@dataclass
class ExtensionResult:
    """Outcome of an extension solve.

    kind is IMPOSSIBLE, UNIQUE, or FAMILY.  UNIQUE and FAMILY carry a
    representative module that passes the full relation check; FAMILY
    adds the affine dimension k and a basis of the homogeneous solution
    space (per-offset matrices for the missing operator).  IMPOSSIBLE
    carries the first violated constraint instead.
    """

    kind: str
    missing: str
    k: int = 0
    representative: Optional[WeightModule] = None
    homogeneous_basis: List[Dict[int, Mat]] = field(default_factory=list)
    conflict: Optional[dict] = None
    unconstrained_by_window: List[dict] = field(default_factory=list)

    def member(self, coefs: Sequence[Fel]) -> WeightModule:
        """The family member at representative + sum of coefs * basis."""
        if self.representative is None:
            raise ValueError("an IMPOSSIBLE result has no members")
        if len(coefs) != len(self.homogeneous_basis):
            raise ValueError(f"expected {len(self.homogeneous_basis)} coefficients")
        table = dict(self.representative.ops[self.missing])
        for c, maps in zip(coefs, self.homogeneous_basis):
            for k, m in maps.items():
                table[k] = table[k] + m.scale(c)
        ops = dict(self.representative.ops)
        ops[self.missing] = table
        return self.representative.with_ops(ops)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "missing": self.missing}
        if self.kind == FAMILY:
            out["k"] = self.k
        if self.representative is not None:
            out["representative"] = self.representative.to_json()
        if self.homogeneous_basis:
            out["homogeneous_basis"] = [
                [{"offset": k, "matrix": maps[k].to_json()} for k in sorted(maps)]
                for maps in self.homogeneous_basis
            ]
        if self.conflict is not None:
            out["conflict"] = self.conflict
        if self.unconstrained_by_window:
            out["unconstrained_by_window"] = self.unconstrained_by_window
        return out


def _missing_operator(V: WeightModule) -> str:
    if not V.has_op("X"):
        raise ValueError("extension needs the X operator")
    have_y, have_y1 = V.has_op("Y"), V.has_op("Y1")
    if have_y and have_y1:
        raise ValueError("both Y and Y1 are already present; nothing to extend")
    if not (have_y or have_y1):
        raise ValueError("extension needs exactly one of Y, Y1 present")
    return "Y" if not have_y else "Y1"


def extend_to_D(V: WeightModule) -> ExtensionResult:
    """Solve for the missing one of Y, Y1 so the full relation set holds.

    The present flavor's relations must already pass.  Every entry of the
    missing operator (graded maps one step down, wrapping on circular
    orbits, omitted at window edges) becomes an unknown of one exact
    linear system; the solution set classifies the extension.
    """
    missing = _missing_operator(V)
    known = "Y1" if missing == "Y" else "Y"
    flavor = "AQ" if missing == "Y" else "A1"
    rep = check_relations(V, flavor)
    if not rep.passed:
        first = rep.violations[0]
        raise ValueError(
            f"the {flavor} relations must pass before extending; "
            f"{first['relation']} fails at offset {first['offset']}"
        )

    ctx = V.ctx
    one, q = ctx.one, ctx.q

    def tau(k: int) -> Fel:
        return V.tau_scalar(k)

    def sigma(k: int) -> Fel:
        return V.sigma_scalar(k)

    if missing == "Y":
        up_id, up_scalar = "YX=tau", tau
        down_id, down_scalar = "XY=alpha(tau)", lambda k: tau(k) - one
        mix_unknown, mix_known = (lambda k: sigma(k) - one), (lambda k: tau(k) - one)
    else:
        up_id, up_scalar = "Y1X=qsigma-1", lambda k: q * sigma(k) - one
        down_id, down_scalar = "XY1=alpha(qsigma-1)", lambda k: sigma(k) - one
        mix_unknown, mix_known = (lambda k: tau(k) - one), (lambda k: sigma(k) - one)
    mix_id = "Y1(tau-1)=Y(sigma-1)"

    # unknown layout: entries of the missing operator, offset-major
    sources = V.op_sources(missing)
    index: Dict[Tuple[int, int, int], int] = {}
    for k in sources:
        t = V.op_target(missing, k)
        for i in range(V.dim(t)):
            for j in range(V.dim(k)):
                index[(k, i, j)] = len(index)
    n = len(index)

    lo, hi = (None, None) if V.circular else V.window
    instances: List[Tuple[str, int, List[List[Fel]], List[Fel]]] = []

    def zero_row() -> List[Fel]:
        return [ctx.zero] * n

    for k in V.offsets():
        dk = V.dim(k)
        # upward product: T'_{k+1} X_k = c(k) I on V_k
        if V.circular or k != hi:
            u = V.op_target("X", k)
            if dk:
                x = V.op("X", k)
                c = up_scalar(k)
                rows, rhs = [], []
                for i in range(dk):
                    for j in range(dk):
                        row = zero_row()
                        for l in range(V.dim(u)):
                            row[index[(u, i, l)]] += x.data[l][j]
                        rows.append(row)
                        rhs.append(c if i == j else ctx.zero)
                instances.append((up_id, k, rows, rhs))
        # downward product: X_{k-1} T'_k = c(k) I on V_k
        if V.circular or k != lo:
            d = V.op_target(missing, k)
            if dk:
                x = V.op("X", d)
                c = down_scalar(k)
                rows, rhs = [], []
                for i in range(dk):
                    for j in range(dk):
                        row = zero_row()
                        for l in range(V.dim(d)):
                            row[index[(k, l, j)]] += x.data[i][l]
                        rows.append(row)
                        rhs.append(c if i == j else ctx.zero)
                instances.append((down_id, k, rows, rhs))
            # mixed relation, with the known operator substituted
            if dk and V.dim(d):
                g = V.op(known, k)
                s, u_ = mix_unknown(k), mix_known(k)
                rows, rhs = [], []
                for i in range(V.dim(d)):
                    for j in range(dk):
                        row = zero_row()
                        row[index[(k, i, j)]] += s
                        rows.append(row)
                        rhs.append(u_ * g.data[i][j])
                instances.append((mix_id, k, rows, rhs))

    all_rows = [row for _, _, rows, _ in instances for row in rows]
    all_rhs = [b for _, _, _, rhs in instances for b in rhs]

    if all_rows and n:
        system = Mat(ctx, all_rows, cols=n)
        target = Mat.column(ctx, all_rhs)
        particular = system.solve(target)
        if particular is None:
            return ExtensionResult(IMPOSSIBLE, missing, conflict=_first_conflict(ctx, instances, n))
        kernel = system.nullspace()
    elif all_rows:
        # constraints but no unknowns: pure consistency conditions
        if any(all_rhs):
            return ExtensionResult(IMPOSSIBLE, missing, conflict=_first_conflict(ctx, instances, n))
        particular, kernel = Mat.zeros(ctx, 0, 1), []
    else:
        particular = Mat.zeros(ctx, n, 1)
        kernel = [Mat.column(ctx, [one if i == j else ctx.zero for i in range(n)]) for j in range(n)]

    def as_maps(vec: Mat) -> Dict[int, Mat]:
        maps = {}
        for k in sources:
            t = V.op_target(missing, k)
            dt, dk = V.dim(t), V.dim(k)
            if dt and dk:
                maps[k] = Mat(ctx, [[vec.data[index[(k, i, j)]][0] for j in range(dk)] for i in range(dt)])
        return maps

    ops = dict(V.ops)
    ops[missing] = as_maps(particular)
    module = V.with_ops(ops)
    full = check_relations(module, "D")
    if not full.passed:
        raise RuntimeError("extension produced a module that fails re-verification")

    basis = [as_maps(vec) for vec in kernel]
    if not basis:
        return ExtensionResult(UNIQUE, missing, representative=module)
    return ExtensionResult(
        FAMILY,
        missing,
        k=len(basis),
        representative=module,
        homogeneous_basis=basis,
        unconstrained_by_window=_window_orphans(V, missing, index, all_rows),
    )


def _first_conflict(ctx: FieldCtx, instances, n: int) -> dict:
    """The first instance, in assembly order, that makes the system unsolvable."""

    def solvable(count: int) -> bool:
        rows = [row for _, _, rs, _ in instances[:count] for row in rs]
        rhs = [b for _, _, _, bs in instances[:count] for b in bs]
        if not rows:
            return True
        if n == 0:
            return not any(rhs)
        return Mat(ctx, rows, cols=n).solve(Mat.column(ctx, rhs)) is not None

    low, high = 1, len(instances)
    while low < high:
        mid = (low + high) // 2
        if solvable(mid):
            low = mid + 1
        else:
            high = mid
    rel_id, offset, rows, rhs = instances[low - 1]
    conflict = {"relation": rel_id, "offset": offset}
    for row, b in zip(rows, rhs):
        if b and not any(row):
            # the instance is inconsistent on its own: 0 = b
            conflict["equation"] = {"lhs": ctx.show(ctx.zero), "rhs": ctx.show(b)}
            break
    return conflict


def _window_orphans(V: WeightModule, missing: str, index, all_rows) -> List[dict]:
    """Unknowns free only because the window suppressed their constraints.

    With the missing operator omitted at window edges, every stored
    unknown keeps its downward and mixed instances, so this list stays
    empty for any valid input; it exists to keep the bookkeeping honest.
    """
    if V.circular:
        return []
    lo, hi = V.window
    orphans = []
    for (k, i, j), col in index.items():
        if any(row[col] for row in all_rows):
            continue
        up_cut = (k - 1) == hi
        down_cut = k == lo
        if up_cut or down_cut:
            orphans.append({"offset": k, "row": i, "col": j})
    return orphans

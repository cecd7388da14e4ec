"""Mechanical relation checking, and the polynomial-operator realization.

check_relations computes both sides of every defining relation as exact
matrices, offset by offset.  On windowed modules a relation instance is
skipped exactly when one of its operator applications would leave the
window; everything else, including zero-dimensional spaces inside the
window, is checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .fields import Fel, FieldCtx
from .linalg import Mat
from .orbits import Subalgebra
from .wmod import WeightModule, as_subalgebra, op_names_for

# relation instances that step upward use X first (need offset k+1);
# downward ones use Y or Y1 first (need offset k-1)
UP, DOWN = "up", "down"


@dataclass
class RelationReport:
    subject: str
    checked: int = 0
    violations: List[dict] = field(default_factory=list)
    skipped: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checked": self.checked,
            "violations": self.violations,
            "skipped": self.skipped,
        }


def _column(m: Mat, j: int) -> List[str]:
    show = m.ctx.show
    return [show(m.data[i][j]) for i in range(m.rows)]


def check_relations(V: WeightModule, algebra) -> RelationReport:
    """Verify the defining relations of D, A_q, or A_1 on the module."""
    algebra = as_subalgebra(algebra)
    for name in op_names_for(algebra):
        if not V.has_op(name):
            raise ValueError(f"module lacks operator {name} required by {algebra.value}")
    ctx = V.ctx
    one, q = ctx.one, ctx.q

    def up(k: int) -> int:
        return V.op_target("X", k)

    def dn(k: int) -> int:
        return V.op_target("Y", k)

    def scaled_id(k: int, c: Fel) -> Mat:
        return Mat.identity(ctx, V.dim(k)).scale(c)

    def tau(k: int) -> Fel:
        return V.tau_scalar(k)

    def sigma(k: int) -> Fel:
        return V.sigma_scalar(k)

    # each relation: (id, direction, k -> (computed, expected))
    rels: List[Tuple[str, str, Callable[[int], Tuple[Mat, Mat]]]] = []

    def product_rel(T: str, direction: str):
        if direction == UP:
            return lambda k: V.op(T, up(k)) * V.op("X", k)
        return lambda k: V.op("X", dn(k)) * V.op(T, k)

    if algebra in (Subalgebra.A1, Subalgebra.D):
        rels.append(("YX=tau", UP, lambda k: (product_rel("Y", UP)(k), scaled_id(k, tau(k)))))
        rels.append(("XY=alpha(tau)", DOWN, lambda k: (product_rel("Y", DOWN)(k), scaled_id(k, tau(k) - one))))
        rels.append(("Ytau=alphainv(tau)Y", DOWN, lambda k: (V.op("Y", k).scale(tau(k)), V.op("Y", k).scale(tau(dn(k)) + one))))
        rels.append(("Ysigma=alphainv(sigma)Y", DOWN, lambda k: (V.op("Y", k).scale(sigma(k)), V.op("Y", k).scale(q * sigma(dn(k))))))
    if algebra in (Subalgebra.AQ, Subalgebra.D):
        rels.append(("Y1X=qsigma-1", UP, lambda k: (product_rel("Y1", UP)(k), scaled_id(k, q * sigma(k) - one))))
        rels.append(("XY1=alpha(qsigma-1)", DOWN, lambda k: (product_rel("Y1", DOWN)(k), scaled_id(k, sigma(k) - one))))
        rels.append(("Y1tau=alphainv(tau)Y1", DOWN, lambda k: (V.op("Y1", k).scale(tau(k)), V.op("Y1", k).scale(tau(dn(k)) + one))))
        rels.append(("Y1sigma=alphainv(sigma)Y1", DOWN, lambda k: (V.op("Y1", k).scale(sigma(k)), V.op("Y1", k).scale(q * sigma(dn(k))))))
    if algebra is Subalgebra.D:
        rels.append(("Y1(tau-1)=Y(sigma-1)", DOWN, lambda k: (V.op("Y1", k).scale(tau(k) - one), V.op("Y", k).scale(sigma(k) - one))))
    # X-twisting laws close the list for every algebra
    rels.append(("Xtau=alpha(tau)X", UP, lambda k: (V.op("X", k).scale(tau(k)), V.op("X", k).scale(tau(up(k)) - one))))
    rels.append(("Xsigma=alpha(sigma)X", UP, lambda k: (V.op("X", k).scale(sigma(k)), V.op("X", k).scale(sigma(up(k)) / q))))

    report = RelationReport(subject=algebra.value)
    offsets = V.offsets()
    lo, hi = (None, None) if V.circular else V.window
    rels.sort(key=lambda r: r[0])
    for k in offsets:
        for rel_id, direction, build in rels:
            if not V.circular:
                if direction == UP and k == hi:
                    report.skipped.append({"relation": rel_id, "offset": k, "reason": "window-edge"})
                    continue
                if direction == DOWN and k == lo:
                    report.skipped.append({"relation": rel_id, "offset": k, "reason": "window-edge"})
                    continue
            computed, expected = build(k)
            report.checked += 1
            if computed != expected:
                labels = V.label_list(k)
                for j in range(computed.cols):
                    if computed.col(j) != expected.col(j):
                        report.violations.append(
                            {
                                "relation": rel_id,
                                "offset": k,
                                "label": labels[j],
                                "computed": _column(computed, j),
                                "expected": _column(expected, j),
                            }
                        )
    return report


def polynomial_realization(ctx: FieldCtx, N: int) -> Tuple[Dict[str, Mat], RelationReport]:
    """Matrices of x, the two q-derivatives, the plain derivative, and sigma
    on polynomials of degree at most N, plus a relation report on degrees
    at most N-1 where truncation cannot interfere."""
    if not isinstance(N, int) or N < 2:
        raise ValueError("the degree bound N must be an integer >= 2")
    q = ctx.q
    if q == ctx.one:
        raise ValueError("q = 1 makes the q-derivative denominators vanish")
    n_dim = N + 1

    def bracket(n: int, a: int) -> Fel:
        # (q^(a n) - 1) / (q^a - 1)
        return (q ** (a * n) - ctx.one) / (q ** a - ctx.one)

    x = Mat.zeros(ctx, n_dim, n_dim)
    for n in range(N):
        x.data[n + 1][n] = ctx.one
    d = Mat.zeros(ctx, n_dim, n_dim)
    for n in range(1, n_dim):
        d.data[n - 1][n] = ctx.from_int(n)
    d1 = Mat.zeros(ctx, n_dim, n_dim)
    dm1 = Mat.zeros(ctx, n_dim, n_dim)
    for n in range(1, n_dim):
        d1.data[n - 1][n] = bracket(n, 1)
        dm1.data[n - 1][n] = bracket(n, -1)
    sigma = Mat.zeros(ctx, n_dim, n_dim)
    sigma_inv = Mat.zeros(ctx, n_dim, n_dim)
    for n in range(n_dim):
        sigma.data[n][n] = q ** n
        sigma_inv.data[n][n] = q ** (-n)

    mats = {"x": x, "d1": d1, "d-1": dm1, "d": d, "sigma": sigma}
    ident = Mat.identity(ctx, n_dim)
    ds = {1: d1, -1: dm1, 0: d}

    checks: List[Tuple[str, Mat, Mat]] = []
    for a in (1, -1, 0):
        checks.append(
            (f"d[{a}]x-q^{a}xd[{a}]=1", ds[a] * x - (x * ds[a]).scale(q ** a), ident)
        )
    for a, b in ((1, -1), (1, 0), (-1, 0)):
        checks.append((f"d[{a}]xd[{b}]=d[{b}]xd[{a}]", ds[a] * x * ds[b], ds[b] * x * ds[a]))
    checks.append(("d[-1]d[1]=qd[1]d[-1]", dm1 * d1, (d1 * dm1).scale(q)))
    checks.append(("d[1]x-xd[1]=sigma", d1 * x - x * d1, sigma))
    checks.append(("sigma=(q-1)xd[1]+1", sigma, (x * d1).scale(q - ctx.one) + ident))
    checks.append(("d[-1]x-xd[-1]=sigmainv", dm1 * x - x * dm1, sigma_inv))
    checks.append(
        ("sigmainv=(1/q-1)xd[-1]+1", sigma_inv, (x * dm1).scale(q.inverse() - ctx.one) + ident)
    )
    checks.append(("d[-1]=sigmainv*d[1]", dm1, sigma_inv * d1))

    report = RelationReport(subject=f"realization(N={N})")
    for rel_id, lhs, rhs in checks:
        for n in range(N):
            report.checked += 1
            if lhs.col(n) != rhs.col(n):
                report.violations.append(
                    {
                        "relation": rel_id,
                        "degree": n,
                        "computed": _column(lhs, n),
                        "expected": _column(rhs, n),
                    }
                )
        report.skipped.append({"relation": rel_id, "degree": N, "reason": "truncation-edge"})
    return mats, report

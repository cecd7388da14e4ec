"""Structural analysis of weight modules.

Weight dimensions, equidimensionality, irreducibility, graded endomorphism
rings, direct-sum decomposition, and isomorphism testing.  Everything is
exact.  Structure verdicts (irreducible, indecomposable, decompose,
equidimension) are decided only for circular, finite-dimensional modules;
a windowed truncation cannot answer for the infinite module it cuts from,
so those inputs come back NOT_APPLICABLE.

Decomposition works through the graded endomorphism ring: any endomorphism
whose Fitting power has rank strictly between 0 and the total dimension
splits the module into kernel and image, both graded submodules.  Searches
over the endomorphism ring are exhaustive (up to scalars) when the
coefficient space is small, otherwise seeded and bounded; a bounded search
that finds nothing reports UNKNOWN rather than guessing.

Every NO verdict carries a witness that can be re-verified directly:
a proper generated submodule, a nontrivial idempotent, or a dimension
mismatch.  YES verdicts for isomorphism carry the intertwiner.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .fields import Fel, FieldCtx
from .linalg import Mat, fitting_power
from .orbits import Subalgebra
from .wmod import WeightModule, as_subalgebra, op_names_for

YES = "YES"
NO = "NO"
UNKNOWN = "UNKNOWN"
NOT_APPLICABLE = "NOT_APPLICABLE"

WINDOWED_REASON = "only decided for circular modules; a windowed truncation cannot answer for the infinite module"

# exhaustive search caps: coefficient lines for endomorphism/intertwiner
# sweeps, weight-vector lines for irreducibility, random trials otherwise
EXHAUSTIVE_LINES = 2048
DEFAULT_LINE_BUDGET = 20000
DEFAULT_TRIALS = 200


class NotApplicable(ValueError):
    """The structural question is not defined for this input."""


@dataclass
class Verdict:
    """Outcome of a structural check.

    kind is YES, NO, UNKNOWN, or NOT_APPLICABLE.  NO always carries a
    machine-checkable witness; UNKNOWN and NOT_APPLICABLE carry a reason.
    """

    kind: str
    witness: Optional[dict] = None
    reason: Optional[str] = None

    @staticmethod
    def yes(witness: Optional[dict] = None) -> "Verdict":
        return Verdict(YES, witness=witness)

    @staticmethod
    def no(witness: dict) -> "Verdict":
        return Verdict(NO, witness=witness)

    @staticmethod
    def unknown(reason: str) -> "Verdict":
        return Verdict(UNKNOWN, reason=reason)

    @staticmethod
    def not_applicable(reason: str) -> "Verdict":
        return Verdict(NOT_APPLICABLE, reason=reason)

    @property
    def is_yes(self) -> bool:
        return self.kind == YES

    @property
    def is_no(self) -> bool:
        return self.kind == NO

    def to_json(self) -> dict:
        out = {"verdict": self.kind}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        return out


@dataclass
class EndBasis:
    """Basis of the graded endomorphisms commuting with an algebra's action.

    Each basis element is a per-offset family of square blocks; the family
    commutes with every stored operator matrix of the chosen algebra.
    """

    algebra: Subalgebra
    maps: List[Dict[int, Mat]]

    @property
    def dim(self) -> int:
        return len(self.maps)

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.value,
            "dim": self.dim,
            "basis": [_maps_to_json(m) for m in self.maps],
        }


@dataclass
class Decomposition:
    """Direct-sum decomposition into (believed) indecomposable summands.

    complete is False when a bounded random search ran out of budget, in
    which case some summand may still split further.
    """

    summands: List[WeightModule]
    complete: bool
    reason: Optional[str] = None

    @property
    def count(self) -> int:
        return len(self.summands)

    def to_json(self) -> dict:
        out = {
            "count": self.count,
            "complete": self.complete,
            "summands": [v.to_json() for v in self.summands],
        }
        if self.reason is not None:
            out["reason"] = self.reason
        return out


# span bookkeeping


class _Span:
    """Subspace of a fixed coordinate space, kept in reduced echelon form."""

    def __init__(self, ctx: FieldCtx, dim: int):
        self.ctx = ctx
        self.dim = dim
        self.rows: List[Tuple[int, List[Fel]]] = []

    def _reduce(self, vec: Sequence[Fel]) -> List[Fel]:
        v = list(vec)
        for piv, row in self.rows:
            c = v[piv]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def insert(self, vec: Sequence[Fel]) -> Optional[List[Fel]]:
        """Add a vector; return its normalized new direction, or None."""
        v = self._reduce(vec)
        lead = next((i for i, c in enumerate(v) if c), None)
        if lead is None:
            return None
        inv = v[lead].inverse()
        v = [a * inv for a in v]
        for i, (piv, row) in enumerate(self.rows):
            c = row[lead]
            if c:
                self.rows[i] = (piv, [a - c * b for a, b in zip(row, v)])
        self.rows.append((lead, v))
        self.rows.sort(key=lambda pr: pr[0])
        return v

    def contains(self, vec: Sequence[Fel]) -> bool:
        return all(not c for c in self._reduce(vec))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis_rows(self) -> List[List[Fel]]:
        return [list(row) for _, row in self.rows]


def _apply(m: Mat, vec: Sequence[Fel]) -> List[Fel]:
    return [sum((m.data[i][j] * vec[j] for j in range(m.cols)), m.ctx.zero) for i in range(m.rows)]


def _closure(V: WeightModule, names: Sequence[str], seeds: Sequence[Tuple[int, Sequence[Fel]]]) -> Dict[int, _Span]:
    """Smallest graded subspace containing the seeds and closed under ops."""
    spans = {k: _Span(V.ctx, V.dim(k)) for k in V.offsets()}
    queue: List[Tuple[int, List[Fel]]] = []
    for k, vec in seeds:
        got = spans[k].insert(vec)
        if got is not None:
            queue.append((k, got))
    while queue:
        k, vec = queue.pop()
        for name in names:
            tgt = V.op_target(name, k)
            if tgt is None or V.dim(tgt) == 0:
                continue
            img = _apply(V.op(name, k), vec)
            got = spans[tgt].insert(img)
            if got is not None:
                queue.append((tgt, got))
    return spans


def _spans_to_json(V: WeightModule, spans: Dict[int, _Span]) -> List[dict]:
    show = V.ctx.show
    out = []
    for k in V.offsets():
        s = spans.get(k)
        if s is not None and s.rank:
            out.append({"offset": k, "basis": [[show(c) for c in row] for row in s.basis_rows()]})
    return out


def _maps_to_json(maps: Dict[int, Mat]) -> List[dict]:
    return [{"offset": k, "matrix": maps[k].to_json()} for k in sorted(maps)]


def _require_ops(V: WeightModule, names: Sequence[str]) -> None:
    missing = [n for n in names if not V.has_op(n)]
    if missing:
        raise ValueError(f"module has no operator(s) {', '.join(missing)}")


# dimensions


def weight_dims(V: WeightModule) -> List[Tuple[int, int]]:
    """Dimensions of the nonzero weight spaces, in offset order."""
    return [(k, V.dim(k)) for k in V.offsets() if V.dim(k)]


def equidimension_check(V: WeightModule) -> Verdict:
    """Are all weight spaces of a circular module the same dimension?"""
    if not V.circular:
        return Verdict.not_applicable(WINDOWED_REASON)
    offsets = V.offsets()
    dims = [V.dim(k) for k in offsets]
    for k, d in zip(offsets, dims):
        if d != dims[0]:
            return Verdict.no(
                {
                    "kind": "dimension_mismatch",
                    "offsets": [offsets[0], k],
                    "dims": [dims[0], d],
                }
            )
    return Verdict.yes()


# irreducibility


def _unit_lines(ctx: FieldCtx, dim: int) -> Iterator[List[Fel]]:
    """Canonical representatives of the lines in ctx^dim.

    First nonzero coordinate normalized to 1; (q^dim - 1)/(q - 1) vectors.
    """
    elements = list(ctx.all_elements())
    for lead in range(dim):
        for tail in itertools.product(elements, repeat=dim - lead - 1):
            yield [ctx.zero] * lead + [ctx.one] + list(tail)


def is_irreducible(V: WeightModule, algebra, budget: int = DEFAULT_LINE_BUDGET) -> Verdict:
    """Does every nonzero weight vector generate the whole module?

    A graded module is irreducible iff it has no proper nonzero graded
    submodule, and any submodule of a weight module is graded, so it is
    enough that the submodule generated by each weight line is everything.
    Over a finite field the lines are enumerated exhaustively.
    """
    algebra = as_subalgebra(algebra)
    names = op_names_for(algebra)
    _require_ops(V, names)
    if not V.circular:
        return Verdict.not_applicable(WINDOWED_REASON)
    total = V.total_dim()
    if total == 0:
        return Verdict.no({"kind": "zero_module", "spaces": []})

    lines: List[Tuple[int, List[Fel]]] = []
    exhaustive = True
    for k in V.offsets():
        d = V.dim(k)
        if d == 0:
            continue
        if d == 1:
            lines.append((k, [V.ctx.one]))
        elif V.ctx.is_finite:
            lines.extend((k, v) for v in _unit_lines(V.ctx, d))
        else:
            # cannot enumerate lines over an infinite field; sample the
            # basis directions and their pairwise sums (sound for NO only)
            exhaustive = False
            basis = [[V.ctx.one if i == j else V.ctx.zero for i in range(d)] for j in range(d)]
            lines.extend((k, v) for v in basis)
            for i in range(d):
                for j in range(i + 1, d):
                    lines.append((k, [a + b for a, b in zip(basis[i], basis[j])]))
    if len(lines) > budget:
        return Verdict.unknown(f"irreducibility needs {len(lines)} line checks, over the budget of {budget}")

    for k, vec in lines:
        spans = _closure(V, names, [(k, vec)])
        got = sum(s.rank for s in spans.values())
        if got < total:
            return Verdict.no(
                {
                    "kind": "submodule",
                    "generator": {"offset": k, "vector": [V.ctx.show(c) for c in vec]},
                    "spaces": _spans_to_json(V, spans),
                    "dim": got,
                }
            )
    if exhaustive:
        return Verdict.yes()
    return Verdict.unknown("all sampled weight lines generate, but lines over an infinite field cannot be enumerated")


# graded homomorphisms


def _graded_hom_basis(V: WeightModule, W: WeightModule, names: Sequence[str]) -> List[Dict[int, Mat]]:
    """Basis of the graded maps V -> W commuting with the named operators."""
    ctx = V.ctx
    offsets = V.offsets()
    index: Dict[Tuple[int, int, int], int] = {}
    for k in offsets:
        for i in range(W.dim(k)):
            for j in range(V.dim(k)):
                index[(k, i, j)] = len(index)
    n = len(index)
    if n == 0:
        return []

    rows: List[List[Fel]] = []
    for name in names:
        for k in V.op_sources(name):
            t = V.op_target(name, k)
            if t is None:
                continue
            A = V.op(name, k)
            B = W.op(name, k)
            # phi_t A = B phi_k, entry by entry
            for i in range(W.dim(t)):
                for j in range(V.dim(k)):
                    row = [ctx.zero] * n
                    for l in range(V.dim(t)):
                        row[index[(t, i, l)]] += A.data[l][j]
                    for l in range(W.dim(k)):
                        row[index[(k, l, j)]] -= B.data[i][l]
                    if any(row):
                        rows.append(row)
    if not rows:
        rows = [[ctx.zero] * n]

    basis = []
    for sol in Mat(ctx, rows, cols=n).nullspace():
        maps = {}
        for k in offsets:
            dw, dv = W.dim(k), V.dim(k)
            if dw and dv:
                maps[k] = Mat(ctx, [[sol.data[index[(k, i, j)]][0] for j in range(dv)] for i in range(dw)])
        basis.append(maps)
    return basis


def endomorphisms(V: WeightModule, algebra) -> EndBasis:
    """Basis of the graded endomorphisms commuting with the algebra's ops."""
    algebra = as_subalgebra(algebra)
    names = op_names_for(algebra)
    _require_ops(V, names)
    if not V.circular:
        raise NotApplicable(WINDOWED_REASON)
    return EndBasis(algebra=algebra, maps=_graded_hom_basis(V, V, names))


def _combine(V: WeightModule, basis: List[Dict[int, Mat]], coefs: Sequence[Fel]) -> Dict[int, Mat]:
    """Linear combination of hom-basis elements, as per-offset blocks."""
    out: Dict[int, Mat] = {}
    for maps, c in zip(basis, coefs):
        if not c:
            continue
        for k, m in maps.items():
            scaled = m.scale(c)
            out[k] = (out[k] + scaled) if k in out else scaled
    return out


def verify_endomorphism(V: WeightModule, names: Sequence[str], maps: Dict[int, Mat]) -> bool:
    """Check that a per-offset family commutes with the named operators."""
    for name in names:
        for k in V.op_sources(name):
            t = V.op_target(name, k)
            if t is None:
                continue
            A = V.op(name, k)
            left = maps[t] * A if t in maps else Mat.zeros(V.ctx, V.dim(t), V.dim(k))
            right = A * maps[k] if k in maps else Mat.zeros(V.ctx, V.dim(t), V.dim(k))
            if left != right:
                return False
    return True


# decomposition


def _fitting_projector(V: WeightModule, phi: Dict[int, Mat]) -> Optional[Tuple[Dict[int, Mat], int]]:
    """Idempotent projecting onto the stable image of phi, if it splits.

    phi^N for N at least the total dimension has the same kernel and image
    as all later powers, and the module is their direct sum; both sides
    are submodules because phi commutes with the operators.  Returns the
    projector onto the image along the kernel and its rank, or None when
    the split is trivial (phi nilpotent or invertible).
    """
    ctx = V.ctx
    total = V.total_dim()
    rank = 0
    pieces: Dict[int, Tuple[Mat, List[Mat]]] = {}
    for k in V.offsets():
        d = V.dim(k)
        if d == 0:
            continue
        block = phi.get(k, Mat.zeros(ctx, d, d))
        power = fitting_power(block)
        image = power.column_space()
        kernel = power.nullspace()
        pieces[k] = (image, kernel)
        rank += image.cols
    if rank == 0 or rank == total:
        return None

    proj: Dict[int, Mat] = {}
    for k, (image, kernel) in pieces.items():
        d = V.dim(k)
        basis = image
        for col in kernel:
            basis = basis.hstack(col)
        if basis.cols != d or not basis.is_invertible():
            raise ValueError("stable image and kernel do not split the space")
        diag = Mat.zeros(ctx, d, d)
        for i in range(image.cols):
            diag.data[i][i] = ctx.one
        proj[k] = basis * diag * basis.inverse()
    return proj, rank


def _coefficient_sweep(
    ctx: FieldCtx, dim: int, seed: int, trials: int
) -> Tuple[Iterator[List[Fel]], bool]:
    """Coefficient vectors to try, and whether the sweep is exhaustive.

    Starts with the basis directions and pairwise sums either way; over a
    small finite coefficient space continues through all lines, otherwise
    through seeded random draws.
    """

    def quick() -> Iterator[List[Fel]]:
        basis = [[ctx.one if i == j else ctx.zero for i in range(dim)] for j in range(dim)]
        for v in basis:
            yield v
        for i in range(dim):
            for j in range(i + 1, dim):
                yield [a + b for a, b in zip(basis[i], basis[j])]
                yield [a - b for a, b in zip(basis[i], basis[j])]

    line_count = None
    if ctx.is_finite:
        line_count = (ctx.order**dim - 1) // (ctx.order - 1) if ctx.order > 1 else 1
    if line_count is not None and line_count <= EXHAUSTIVE_LINES:
        return itertools.chain(quick(), _unit_lines(ctx, dim)), True

    def sampled() -> Iterator[List[Fel]]:
        rng = random.Random(seed)
        for _ in range(trials):
            yield [ctx.random_element(rng) for _ in range(dim)]

    return itertools.chain(quick(), sampled()), False


def _find_split(
    V: WeightModule, end: EndBasis, seed: int, trials: int
) -> Tuple[Optional[Tuple[Dict[int, Mat], int]], bool]:
    """Search End(V) for a splitting idempotent.

    Returns (projector-and-rank or None, decided).  decided is True when
    the sweep was exhaustive up to scalars, so None means indecomposable.
    """
    if end.dim <= 1:
        return None, True
    sweep, exhaustive = _coefficient_sweep(V.ctx, end.dim, seed, trials)
    for coefs in sweep:
        phi = _combine(V, end.maps, coefs)
        got = _fitting_projector(V, phi)
        if got is not None:
            return got, True
    return None, exhaustive


def _subspace_module(V: WeightModule, names: Sequence[str], bases: Dict[int, Mat]) -> WeightModule:
    """Restriction of V to op-stable subspaces given by basis columns."""
    labels = {}
    for k in V.offsets():
        s = bases[k].cols if k in bases else 0
        if s == 1:
            labels[k] = (f"v{k}",)
        elif s > 1:
            labels[k] = tuple(f"v{k}_{i + 1}" for i in range(s))
    ops: Dict[str, Dict[int, Mat]] = {}
    for name in names:
        table = {}
        for k in V.op_sources(name):
            t = V.op_target(name, k)
            if t is None:
                continue
            sk = bases[k].cols if k in bases else 0
            st = bases[t].cols if t in bases else 0
            if sk and st:
                sol = bases[t].solve(V.op(name, k) * bases[k])
                if sol is None:
                    raise ValueError("subspaces are not closed under the operators")
                table[k] = sol
        ops[name] = table
    return WeightModule(V.ctx, V.orbit, V.window, labels, ops)


def _split_module(V: WeightModule, names: Sequence[str], proj: Dict[int, Mat]) -> Tuple[WeightModule, WeightModule]:
    """Split V along an idempotent into image and complement summands."""
    ctx = V.ctx
    image = {}
    complement = {}
    for k in V.offsets():
        d = V.dim(k)
        if d == 0:
            continue
        e = proj.get(k, Mat.zeros(ctx, d, d))
        image[k] = e.column_space()
        complement[k] = (Mat.identity(ctx, d) - e).column_space()
    return (
        _subspace_module(V, names, image),
        _subspace_module(V, names, complement),
    )


def is_indecomposable(
    V: WeightModule, algebra, seed: int = 0, trials: int = DEFAULT_TRIALS
) -> Verdict:
    """Does the module admit no splitting into two nonzero summands?"""
    algebra = as_subalgebra(algebra)
    names = op_names_for(algebra)
    _require_ops(V, names)
    if not V.circular:
        return Verdict.not_applicable(WINDOWED_REASON)
    if V.total_dim() == 0:
        return Verdict.no({"kind": "zero_module"})
    end = endomorphisms(V, algebra)
    found, decided = _find_split(V, end, seed, trials)
    if found is not None:
        proj, rank = found
        return Verdict.no({"kind": "idempotent", "maps": _maps_to_json(proj), "rank": rank})
    if decided:
        return Verdict.yes()
    return Verdict.unknown("no splitting endomorphism found within the trial budget")


def decompose(
    V: WeightModule, algebra, seed: int = 0, trials: int = DEFAULT_TRIALS
) -> Decomposition:
    """Split a circular module into indecomposable summands.

    Recursively splits along idempotents found in the graded endomorphism
    ring of the chosen algebra's action.  When the endomorphism sweep is
    not exhaustive and finds nothing, the current piece is kept whole and
    the result is flagged incomplete.
    """
    algebra = as_subalgebra(algebra)
    names = op_names_for(algebra)
    _require_ops(V, names)
    if not V.circular:
        raise NotApplicable(WINDOWED_REASON)
    if V.total_dim() == 0:
        return Decomposition([], True)
    if V.ops.keys() - set(names):
        # summands are only stable under the chosen algebra, so drop the rest
        V = V.with_ops({n: V.ops[n] for n in names})
    end = endomorphisms(V, algebra)
    found, decided = _find_split(V, end, seed, trials)
    if found is None:
        if decided:
            return Decomposition([V], True)
        return Decomposition([V], False, reason="no splitting endomorphism found within the trial budget")
    proj, _ = found
    left, right = _split_module(V, names, proj)
    parts = [decompose(piece, algebra, seed, trials) for piece in (left, right)]
    return Decomposition(
        [s for p in parts for s in p.summands],
        all(p.complete for p in parts),
        reason=next((p.reason for p in parts if p.reason), None),
    )


# isomorphism


def _invertible_maps(V: WeightModule, maps: Dict[int, Mat]) -> bool:
    for k in V.offsets():
        if V.dim(k) == 0:
            continue
        m = maps.get(k)
        if m is None or not m.is_invertible():
            return False
    return True


def are_isomorphic(
    V: WeightModule,
    W: WeightModule,
    algebra,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
) -> Verdict:
    """Is there a graded invertible intertwiner V -> W for the algebra?

    Both modules must live over the same field, on the same orbit, and be
    both circular or identically windowed; anything else is a usage error,
    not a NO.  The intertwining space is solved exactly; the search for an
    invertible element is exhaustive up to scalars over a small finite
    coefficient space, otherwise seeded and bounded.
    """
    algebra = as_subalgebra(algebra)
    names = op_names_for(algebra)
    _require_ops(V, names)
    _require_ops(W, names)
    if V.ctx != W.ctx:
        raise ValueError("modules live over different fields")
    if V.orbit.base != W.orbit.base:
        raise ValueError("modules live on different weight orbits")
    if V.window != W.window:
        raise ValueError("modules must be both circular or share the same window")

    for k in V.offsets():
        if V.dim(k) != W.dim(k):
            return Verdict.no(
                {"kind": "support_mismatch", "offset": k, "dims": [V.dim(k), W.dim(k)]}
            )
    if V.total_dim() == 0:
        return Verdict.yes({"kind": "intertwiner", "maps": []})

    homs = _graded_hom_basis(V, W, names)
    if not homs:
        return Verdict.no({"kind": "no_invertible_intertwiner", "hom_dim": 0, "exhaustive": True})

    sweep, exhaustive = _coefficient_sweep(V.ctx, len(homs), seed, trials)
    for coefs in sweep:
        phi = _combine(V, homs, coefs)
        if _invertible_maps(V, phi):
            return Verdict.yes({"kind": "intertwiner", "maps": _maps_to_json(phi)})
    if exhaustive:
        return Verdict.no(
            {"kind": "no_invertible_intertwiner", "hom_dim": len(homs), "exhaustive": True}
        )
    return Verdict.unknown("no invertible intertwiner found within the trial budget")


# direct sums (mainly for building test cases and witnesses)


def direct_sum(V: WeightModule, W: WeightModule) -> WeightModule:
    """External direct sum of two modules on the same orbit and window."""
    if V.ctx != W.ctx:
        raise ValueError("modules live over different fields")
    if V.orbit.base != W.orbit.base:
        raise ValueError("modules live on different weight orbits")
    if V.window != W.window:
        raise ValueError("modules must be both circular or share the same window")
    if set(V.ops) != set(W.ops):
        raise ValueError("modules carry different operator sets")
    ctx = V.ctx

    labels = {}
    for k in V.offsets():
        merged = list(V.label_list(k))
        for lab in W.label_list(k):
            while lab in merged:
                lab = lab + "'"
            merged.append(lab)
        if merged:
            labels[k] = tuple(merged)

    ops: Dict[str, Dict[int, Mat]] = {}
    for name in V.ops:
        table = {}
        for k in V.op_sources(name):
            t = V.op_target(name, k)
            if t is None:
                continue
            dv_k, dw_k = V.dim(k), W.dim(k)
            dv_t, dw_t = V.dim(t), W.dim(t)
            if (dv_k + dw_k) == 0 or (dv_t + dw_t) == 0:
                continue
            block = Mat.zeros(ctx, dv_t + dw_t, dv_k + dw_k)
            if dv_k and dv_t:
                a = V.op(name, k)
                for i in range(dv_t):
                    for j in range(dv_k):
                        block.data[i][j] = a.data[i][j]
            if dw_k and dw_t:
                b = W.op(name, k)
                for i in range(dw_t):
                    for j in range(dw_k):
                        block.data[dv_t + i][dv_k + j] = b.data[i][j]
            table[k] = block
        ops[name] = table
    return WeightModule(ctx, V.orbit, V.window, labels, ops)

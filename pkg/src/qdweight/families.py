"""Catalog of named weight-module families over D.

Each family is a closed-form construction: a name, a parameter schema, and
per-offset operator coefficients.  Constructors validate their side
conditions up front and evaluate coefficient formulas lazily, so a bad
denominator reports the offending offset.  They do not re-check the
defining relations; that is check_relations' job, and some entries fail it
on purpose: the half-infinite ray families carry a junction parameter whose
general position breaks one relation instance (the catalog notes the safe
locus), and REMARK_136 is a frozen fixture that violates Y1X = q*sigma - 1
at its top step by construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .basering import WeightPoint
from .fields import Fel, FieldCtx
from .linalg import Mat
from .orbits import Orbit, Subalgebra, breaks, compute_orbit
from .wmod import OP_STEP, WeightModule

FAMILY_NAMES = (
    "VQ_B_A",
    "VQ_JJ_1",
    "VQ_JJ_CD",
    "VQ_JJ_3",
    "VQ_JJ_4",
    "VQ_F_B_A",
    "V1_A_B",
    "V1_JJ_1",
    "V1_JJ_CD",
    "V1_JJ_3",
    "V1_JJ_4",
    "V1_F_A_B",
    "CHAIN_CYCLE",
    "CHAIN_ALT",
    "VCD_TWOROW",
    "REMARK_136",
)


def _norm_param(value):
    if isinstance(value, bool):
        raise ValueError("family parameters must be numbers, strings, or lists")
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, (Fel, Fraction)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return tuple(_norm_param(v) for v in value)
    raise ValueError(f"unsupported family parameter {value!r}")


class FamilyId:
    """A family name plus its parameter values.

    Field-element parameters are stored as strings in the field's text
    encoding (ints pass through), so an id is field-independent data that
    serializes cleanly.
    """

    __slots__ = ("name", "params")

    def __init__(self, name: str, params: Optional[dict] = None):
        name = str(name).upper()
        if name not in FAMILY_NAMES:
            raise ValueError(f"unknown family {name!r}")
        self.name = name
        self.params = {str(k): _norm_param(v) for k, v in (params or {}).items()}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FamilyId)
            and self.name == other.name
            and self.params == other.params
        )

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}={v!r}" for k, v in sorted(self.params.items()))
        return f"FamilyId({self.name}{', ' + inner if inner else ''})"

    def to_json(self) -> dict:
        def plain(v):
            return list(v) if isinstance(v, tuple) else v

        return {"name": self.name, "params": {k: plain(v) for k, v in self.params.items()}}

    @staticmethod
    def from_json(raw: dict) -> "FamilyId":
        return FamilyId(raw["name"], raw.get("params") or {})


# ---------------------------------------------------------------------------
# shared machinery


def _take(params: dict, *keys: str) -> list:
    missing = [k for k in keys if k not in params]
    if missing:
        raise ValueError(f"missing family parameter(s): {', '.join(missing)}")
    extra = sorted(set(params) - set(keys))
    if extra:
        raise ValueError(f"unexpected family parameter(s): {', '.join(extra)}")
    return [params[k] for k in keys]


def _fel(ctx: FieldCtx, raw) -> Fel:
    if isinstance(raw, Fel):
        if raw.field != ctx:
            raise ValueError("parameter element belongs to a different field")
        return raw
    if isinstance(raw, int):
        return ctx.from_int(raw)
    return ctx.parse(str(raw))


def _is_fraction_power(q: Fraction, b: Fraction) -> bool:
    # q is rational with |q| not 0 or 1, so |q^i| is strictly monotone in i.
    if not b:
        return False
    if b == 1:
        return True
    big = q if abs(q) > 1 else 1 / q
    x = big
    while abs(x) <= abs(b):
        if x == b:
            return True
        x *= big
    x = 1 / big
    while abs(x) >= abs(b):
        if x == b:
            return True
        x /= big
    return False


def _is_q_power(ctx: FieldCtx, b: Fel) -> bool:
    """Whether b = q^i for some integer i.  Exact and decidable per field kind."""
    n = ctx.q_order()
    if n is not None:
        x = ctx.one
        for _ in range(n):
            if b == x:
                return True
            x = x * ctx.q
        return False
    if ctx.spec.kind == "RATIONAL":
        return _is_fraction_power(ctx.q.val, b.val)
    # FUNCTION_FIELD with q = t: the degree pins the only possible exponent.
    num, den = b.val
    if not num:
        return False
    i = (len(num) - 1) - (len(den) - 1)
    return b == ctx.q ** i


def _is_int_scalar(ctx: FieldCtx, a: Fel) -> bool:
    """Whether a lies in the image of the integers in the field."""
    if ctx.characteristic:
        # the image of Z is the prime subfield
        if ctx.spec.kind == "PRIME_FIELD":
            return True
        return len(a.val) <= 1
    kind = ctx.spec.kind
    if kind == "RATIONAL":
        return a.val.denominator == 1
    if kind == "CYCLOTOMIC":
        vec = a.val
        return all(c == 0 for c in vec[1:]) and (not vec or vec[0].denominator == 1)
    num, den = a.val
    return len(num) <= 1 and len(den) == 1 and (not num or (num[0] / den[0]).denominator == 1)


def _need_infinite_q(ctx: FieldCtx, name: str) -> None:
    if ctx.q_order() is not None:
        raise ValueError(f"{name} needs q of infinite multiplicative order")


def _need_char0(ctx: FieldCtx, name: str) -> None:
    if ctx.characteristic:
        raise ValueError(f"{name} needs a field of characteristic 0")


def _take_window(orbit: Orbit, window, name: str) -> Tuple[int, int]:
    if orbit.circular:
        raise ValueError(f"{name} needs an infinite weight orbit, but this one is circular")
    if window is None:
        raise ValueError(f"{name} lives on an infinite orbit and needs a window")
    lo, hi = int(window[0]), int(window[1])
    if lo > hi:
        raise ValueError("empty window")
    return lo, hi


def _no_window(orbit: Orbit, window, name: str) -> None:
    if not orbit.circular:
        raise ValueError(
            f"{name} needs a circular weight orbit (positive characteristic, q of finite order)"
        )
    if window is not None:
        raise ValueError(f"{name} is circular and takes no window")


def _line_module(
    ctx: FieldCtx,
    orbit: Orbit,
    window: Optional[Tuple[int, int]],
    support: Callable[[int], bool],
    coefs: Dict[str, Callable[[int], Fel]],
) -> WeightModule:
    """A module with one-dimensional weight spaces v_k on the supported offsets.

    Coefficient functions are evaluated lazily and only where both endpoint
    spaces are supported, so a formula's division by zero names its offset.
    """
    if orbit.circular:
        offsets = list(range(orbit.length))
    else:
        offsets = list(range(window[0], window[1] + 1))
    labels = {k: (f"v{k}",) for k in offsets if support(k)}
    ops: Dict[str, Dict[int, Mat]] = {}
    for name, fun in coefs.items():
        step = OP_STEP[name]
        table: Dict[int, Mat] = {}
        for k in offsets:
            tgt = k + step
            if orbit.circular:
                tgt %= orbit.length
            elif not offsets[0] <= tgt <= offsets[-1]:
                continue
            if not (support(k) and support(tgt)):
                continue
            try:
                val = fun(k)
            except ZeroDivisionError:
                raise ValueError(f"{name} coefficient divides by zero at offset {k}") from None
            table[k] = Mat(ctx, [[val]])
        ops[name] = table
    return WeightModule(ctx, orbit, window, labels, ops)


# ---------------------------------------------------------------------------
# the sixteen constructors


def _vq_b_a(ctx: FieldCtx, params: dict, window) -> WeightModule:
    b_raw, a_raw = _take(params, "b", "a")
    b, a = _fel(ctx, b_raw), _fel(ctx, a_raw)
    if _is_q_power(ctx, b):
        raise ValueError("VQ_B_A needs b outside the q-power chain {q^i}")
    orbit = compute_orbit(WeightPoint(a, b), ctx)
    lo, hi = _take_window(orbit, window, "VQ_B_A")
    return _line_module(
        ctx,
        orbit,
        (lo, hi),
        lambda k: True,
        {
            "X": lambda k: ctx.q * orbit.point(k).b - 1,
            "Y": lambda k: (orbit.point(k).a - 1) / (orbit.point(k).b - 1),
            "Y1": lambda k: ctx.one,
        },
    )


def _vq_jj_1(ctx: FieldCtx, params: dict, window) -> WeightModule:
    (a_raw,) = _take(params, "a")
    a = _fel(ctx, a_raw)
    _need_infinite_q(ctx, "VQ_JJ_1")
    orbit = compute_orbit(WeightPoint(a, 1 / ctx.q), ctx)
    lo, hi = _take_window(orbit, window, "VQ_JJ_1")
    return _line_module(
        ctx,
        orbit,
        (lo, hi),
        lambda k: True,
        {
            "X": lambda k: ctx.one if k == 0 else ctx.q * orbit.point(k).b - 1,
            "Y": lambda k: a if k == 1 else (orbit.point(k).a - 1) / (orbit.point(k).b - 1),
            "Y1": lambda k: ctx.zero if k == 1 else ctx.one,
        },
    )


def _vq_jj_cd(ctx: FieldCtx, params: dict, window) -> WeightModule:
    c_raw, d_raw = _take(params, "c", "d")
    c, d = _fel(ctx, c_raw), _fel(ctx, d_raw)
    _need_infinite_q(ctx, "VQ_JJ_CD")
    orbit = compute_orbit(WeightPoint(ctx.zero, 1 / ctx.q), ctx)
    lo, hi = _take_window(orbit, window, "VQ_JJ_CD")
    return _line_module(
        ctx,
        orbit,
        (lo, hi),
        lambda k: True,
        {
            "X": lambda k: ctx.q * orbit.point(k).b - 1,
            "Y": lambda k: d if k == 1 else (orbit.point(k).a - 1) / (orbit.point(k).b - 1),
            "Y1": lambda k: c if k == 1 else ctx.one,
        },
    )


def _vq_jj_3(ctx: FieldCtx, params: dict, window) -> WeightModule:
    (a_raw,) = _take(params, "a")
    a = _fel(ctx, a_raw)
    _need_infinite_q(ctx, "VQ_JJ_3")
    orbit = compute_orbit(WeightPoint(a, 1 / ctx.q), ctx)
    lo, hi = _take_window(orbit, window, "VQ_JJ_3")
    return _line_module(
        ctx,
        orbit,
        (lo, hi),
        lambda k: k <= 0,
        {
            "X": lambda k: ctx.q * orbit.point(k).b - 1,
            "Y": lambda k: (orbit.point(k).a - 1) / (orbit.point(k).b - 1),
            "Y1": lambda k: ctx.one,
        },
    )


def _vq_jj_4(ctx: FieldCtx, params: dict, window) -> WeightModule:
    (a_raw,) = _take(params, "a")
    a = _fel(ctx, a_raw)
    _need_infinite_q(ctx, "VQ_JJ_4")
    orbit = compute_orbit(WeightPoint(a, 1 / ctx.q), ctx)
    lo, hi = _take_window(orbit, window, "VQ_JJ_4")
    return _line_module(
        ctx,
        orbit,
        (lo, hi),
        lambda k: k >= 1,
        {
            "X": lambda k: ctx.q * orbit.point(k).b - 1,
            "Y": lambda k: (orbit.point(k).a - 1) / (orbit.point(k).b - 1),
            "Y1": lambda k: ctx.one,
        },
    )


def _vq_f_b_a(ctx: FieldCtx, params: dict, window) -> WeightModule:
    f_raw, b_raw, a_raw = _take(params, "f", "b", "a")
    f, b, a = _fel(ctx, f_raw), _fel(ctx, b_raw), _fel(ctx, a_raw)
    if not f:
        raise ValueError("VQ_F_B_A needs f nonzero")
    orbit = compute_orbit(WeightPoint(a, b), ctx)
    _no_window(orbit, window, "VQ_F_B_A")
    if breaks(orbit, Subalgebra.AQ):
        raise ValueError("VQ_F_B_A needs an orbit with no sigma-side breaks")
    r = orbit.length

    def xc(k: int) -> Fel:
        val = ctx.q * orbit.point(k).b - 1
        return f * val if k == r - 1 else val

    return _line_module(
        ctx,
        orbit,
        None,
        lambda k: True,
        {
            "X": xc,
            "Y": lambda k: orbit.point((k - 1) % r).a / xc((k - 1) % r),
            "Y1": lambda k: 1 / f if k == 0 else ctx.one,
        },
    )


def _v1_a_b(ctx: FieldCtx, params: dict, window) -> WeightModule:
    a_raw, b_raw = _take(params, "a", "b")
    a, b = _fel(ctx, a_raw), _fel(ctx, b_raw)
    if _is_int_scalar(ctx, a):
        raise ValueError("V1_A_B needs a outside the integer chain Z*1")
    orbit = compute_orbit(WeightPoint(a, b), ctx)
    lo, hi = _take_window(orbit, window, "V1_A_B")
    return _line_module(
        ctx,
        orbit,
        (lo, hi),
        lambda k: True,
        {
            "X": lambda k: orbit.point(k).a,
            "Y": lambda k: ctx.one,
            "Y1": lambda k: (orbit.point(k).b - 1) / (orbit.point(k).a - 1),
        },
    )


def _v1_jj_1(ctx: FieldCtx, params: dict, window) -> WeightModule:
    (b_raw,) = _take(params, "b")
    b = _fel(ctx, b_raw)
    _need_char0(ctx, "V1_JJ_1")
    orbit = compute_orbit(WeightPoint(ctx.zero, b), ctx)
    lo, hi = _take_window(orbit, window, "V1_JJ_1")
    return _line_module(
        ctx,
        orbit,
        (lo, hi),
        lambda k: True,
        {
            "X": lambda k: ctx.one if k == 0 else orbit.point(k).a,
            "Y": lambda k: ctx.zero if k == 1 else ctx.one,
            "Y1": lambda k: (
                ctx.q * b - 1 if k == 1 else (orbit.point(k).b - 1) / (orbit.point(k).a - 1)
            ),
        },
    )


def _v1_jj_cd(ctx: FieldCtx, params: dict, window) -> WeightModule:
    c_raw, d_raw = _take(params, "c", "d")
    c, d = _fel(ctx, c_raw), _fel(ctx, d_raw)
    _need_char0(ctx, "V1_JJ_CD")
    orbit = compute_orbit(WeightPoint(ctx.zero, 1 / ctx.q), ctx)
    lo, hi = _take_window(orbit, window, "V1_JJ_CD")
    return _line_module(
        ctx,
        orbit,
        (lo, hi),
        lambda k: True,
        {
            "X": lambda k: orbit.point(k).a,
            "Y": lambda k: c if k == 1 else ctx.one,
            "Y1": lambda k: d if k == 1 else (orbit.point(k).b - 1) / (orbit.point(k).a - 1),
        },
    )


def _v1_jj_3(ctx: FieldCtx, params: dict, window) -> WeightModule:
    (b_raw,) = _take(params, "b")
    b = _fel(ctx, b_raw)
    _need_char0(ctx, "V1_JJ_3")
    orbit = compute_orbit(WeightPoint(ctx.zero, b), ctx)
    lo, hi = _take_window(orbit, window, "V1_JJ_3")
    return _line_module(
        ctx,
        orbit,
        (lo, hi),
        lambda k: k <= 0,
        {
            "X": lambda k: orbit.point(k).a,
            "Y": lambda k: ctx.one,
            "Y1": lambda k: (orbit.point(k).b - 1) / (orbit.point(k).a - 1),
        },
    )


def _v1_jj_4(ctx: FieldCtx, params: dict, window) -> WeightModule:
    (b_raw,) = _take(params, "b")
    b = _fel(ctx, b_raw)
    _need_char0(ctx, "V1_JJ_4")
    # parameter b is the sigma value at the first supported offset 1
    orbit = compute_orbit(WeightPoint(ctx.zero, b / ctx.q), ctx)
    lo, hi = _take_window(orbit, window, "V1_JJ_4")
    return _line_module(
        ctx,
        orbit,
        (lo, hi),
        lambda k: k >= 1,
        {
            "X": lambda k: orbit.point(k).a,
            "Y": lambda k: ctx.one,
            "Y1": lambda k: (orbit.point(k).b - 1) / (orbit.point(k).a - 1),
        },
    )


def _v1_f_a_b(ctx: FieldCtx, params: dict, window) -> WeightModule:
    f_raw, a_raw, b_raw = _take(params, "f", "a", "b")
    f, a, b = _fel(ctx, f_raw), _fel(ctx, a_raw), _fel(ctx, b_raw)
    if not f:
        raise ValueError("V1_F_A_B needs f nonzero")
    orbit = compute_orbit(WeightPoint(a, b), ctx)
    _no_window(orbit, window, "V1_F_A_B")
    if breaks(orbit, Subalgebra.A1):
        raise ValueError("V1_F_A_B needs an orbit with no tau-side breaks")
    r = orbit.length

    def xc(k: int) -> Fel:
        val = orbit.point(k).a
        return f * val if k == r - 1 else val

    return _line_module(
        ctx,
        orbit,
        None,
        lambda k: True,
        {
            "X": xc,
            "Y": lambda k: 1 / f if k == 0 else ctx.one,
            "Y1": lambda k: (ctx.q * orbit.point((k - 1) % r).b - 1) / xc((k - 1) % r),
        },
    )


def _parse_word(raw) -> Tuple[str, ...]:
    if isinstance(raw, str):
        text = raw.strip()
        if "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split() if p]
        else:
            # compact form like "YY1Y": a Y followed by 1 is Y1
            parts = []
            i = 0
            while i < len(text):
                if text[i : i + 2] == "Y1":
                    parts.append("Y1")
                    i += 2
                else:
                    parts.append(text[i])
                    i += 1
    else:
        parts = [str(p) for p in raw]
    word = tuple(p.upper() for p in parts)
    for letter in word:
        if letter not in ("Y", "Y1"):
            raise ValueError(f"word letters must be Y or Y1, got {letter!r}")
    return word


def _chain_cycle(ctx: FieldCtx, params: dict, window) -> WeightModule:
    m_raw, word_raw, a_raw = _take(params, "m", "word", "a")
    m = int(m_raw)
    if m < 1:
        raise ValueError("CHAIN_CYCLE needs m >= 1")
    word = _parse_word(word_raw)
    if len(word) != m:
        raise ValueError(f"word length {len(word)} does not match m = {m}")
    avals = a_raw if isinstance(a_raw, (list, tuple)) else (a_raw,)
    if len(avals) != m:
        raise ValueError(f"{len(avals)} junction parameters for m = {m}")
    a = [_fel(ctx, v) for v in avals]
    if not all(a):
        raise ValueError("CHAIN_CYCLE needs every a_i nonzero")
    orbit = compute_orbit(WeightPoint(ctx.one, ctx.one), ctx)
    _no_window(orbit, window, "CHAIN_CYCLE")
    r = orbit.length
    # junction matrices at offset 0 (wrapping down to offset r-1): component
    # j closes through its own letter with eigenvalue a_j and feeds the other
    # lowering operator into component j+1
    y0 = [[ctx.zero] * m for _ in range(m)]
    y10 = [[ctx.zero] * m for _ in range(m)]
    for j, letter in enumerate(word):
        nxt = (j + 1) % m
        if letter == "Y":
            y0[j][j] = a[j]
            if m > 1:
                y10[nxt][j] = ctx.one
        else:
            y10[j][j] = a[j]
            if m > 1:
                y0[nxt][j] = ctx.one
    ident = Mat.identity(ctx, m)
    ops: Dict[str, Dict[int, Mat]] = {
        "X": {k: ident for k in range(r - 1)},
        "Y": {0: Mat(ctx, y0)},
        "Y1": {0: Mat(ctx, y10)},
    }
    ops["X"][r - 1] = Mat.zeros(ctx, m, m)
    for k in range(1, r):
        ops["Y"][k] = ident.scale(ctx.from_int(k))
        ops["Y1"][k] = ident.scale(ctx.q ** k - 1)
    if m == 1:
        labels = {k: (f"v{k}",) for k in range(r)}
    else:
        names = tuple(f"e{i + 1}" for i in range(m))
        labels = {k: names for k in range(r)}
    return WeightModule(ctx, orbit, None, labels, ops)


def _chain_alt(ctx: FieldCtx, params: dict, window) -> WeightModule:
    m_raw, a_raw = _take(params, "m", "a")
    m = int(m_raw)
    if m < 2 or m % 2:
        raise ValueError("CHAIN_ALT needs an even m >= 2")
    word = tuple("Y" if i % 2 == 0 else "Y1" for i in range(m))
    return _chain_cycle(ctx, {"m": m, "word": word, "a": a_raw}, window)


def _vcd_tworow(ctx: FieldCtx, params: dict, window) -> WeightModule:
    c_raw, d_raw = _take(params, "c", "d")
    c, d = _fel(ctx, c_raw), _fel(ctx, d_raw)
    _need_char0(ctx, "VCD_TWOROW")
    orbit = compute_orbit(WeightPoint(ctx.zero, 1 / ctx.q), ctx)
    lo, hi = _take_window(orbit, window, "VCD_TWOROW")
    labels = {
        k: ((f"u{k}", f"w{k}") if k <= 0 else (f"v{k}",)) for k in range(lo, hi + 1)
    }
    ops: Dict[str, Dict[int, Mat]] = {"X": {}, "Y": {}, "Y1": {}}
    for k in range(lo, hi):
        if k <= -1:
            ops["X"][k] = Mat.identity(ctx, 2)
        elif k == 0:
            ops["X"][0] = Mat.zeros(ctx, 1, 2)
        else:
            ops["X"][k] = Mat(ctx, [[ctx.one]])
    for k in range(lo + 1, hi + 1):
        down = ctx.from_int(k - 1)
        down1 = ctx.q ** (k - 1) - 1
        if k <= 0:
            ops["Y"][k] = Mat.identity(ctx, 2).scale(down)
            ops["Y1"][k] = Mat.identity(ctx, 2).scale(down1)
        elif k == 1:
            ops["Y"][1] = Mat(ctx, [[c], [ctx.zero]])
            ops["Y1"][1] = Mat(ctx, [[ctx.zero], [d]])
        else:
            ops["Y"][k] = Mat(ctx, [[down]])
            ops["Y1"][k] = Mat(ctx, [[down1]])
    return WeightModule(ctx, orbit, (lo, hi), labels, ops)


def _remark_136(ctx: FieldCtx, params: dict, window) -> WeightModule:
    _take(params)
    if ctx.characteristic != 3 or ctx.q_order() != 2:
        raise ValueError("REMARK_136 needs characteristic 3 with q of multiplicative order 2")
    if window is not None:
        raise ValueError("REMARK_136 is circular and takes no window")
    orbit = compute_orbit(WeightPoint(ctx.one, ctx.one), ctx)
    labels = {0: ("v1",), 1: ("v2",), 2: ("v3",)}
    ops = {
        "X": {0: Mat(ctx, [[ctx.one]]), 1: Mat(ctx, [[ctx.one]])},
        "Y": {1: Mat(ctx, [[ctx.one]]), 2: Mat(ctx, [[ctx.from_int(2)]])},
        "Y1": {1: Mat(ctx, [[ctx.q - 1]]), 2: Mat(ctx, [[ctx.zero]])},
    }
    return WeightModule(ctx, orbit, None, labels, ops)


_BUILDERS = {
    "VQ_B_A": _vq_b_a,
    "VQ_JJ_1": _vq_jj_1,
    "VQ_JJ_CD": _vq_jj_cd,
    "VQ_JJ_3": _vq_jj_3,
    "VQ_JJ_4": _vq_jj_4,
    "VQ_F_B_A": _vq_f_b_a,
    "V1_A_B": _v1_a_b,
    "V1_JJ_1": _v1_jj_1,
    "V1_JJ_CD": _v1_jj_cd,
    "V1_JJ_3": _v1_jj_3,
    "V1_JJ_4": _v1_jj_4,
    "V1_F_A_B": _v1_f_a_b,
    "CHAIN_CYCLE": _chain_cycle,
    "CHAIN_ALT": _chain_alt,
    "VCD_TWOROW": _vcd_tworow,
    "REMARK_136": _remark_136,
}


def construct_family(fid, ctx: FieldCtx, window=None) -> WeightModule:
    """Build the named family over ctx; the window applies to infinite orbits."""
    if isinstance(fid, str):
        fid = FamilyId(fid)
    elif isinstance(fid, dict):
        fid = FamilyId.from_json(fid)
    elif not isinstance(fid, FamilyId):
        raise ValueError(f"not a family id: {fid!r}")
    return _BUILDERS[fid.name](ctx, dict(fid.params), window)


_CATALOG = (
    {
        "name": "VQ_B_A",
        "params": ["b", "a"],
        "summary": "One-dimensional weight spaces along the full orbit of (a, b); "
        "X acts by q^{k+1}b - 1, Y1 by 1, Y by (a+k-1)/(q^k b - 1).",
        "side_conditions": ["b outside the q-power chain {q^i} (no sigma-side breaks)"],
        "support": "every offset of the window",
        "kind": "windowed",
    },
    {
        "name": "VQ_JJ_1",
        "params": ["a"],
        "summary": "Junction family on the orbit of (a, 1/q): the sigma-side break at "
        "offset 0 is crossed by setting X v0 = v1, with Y v1 = a v0 and Y1 v1 = 0.",
        "side_conditions": ["q of infinite multiplicative order"],
        "support": "every offset of the window",
        "kind": "windowed",
    },
    {
        "name": "VQ_JJ_CD",
        "params": ["c", "d"],
        "summary": "Two-parameter junction family on the double break orbit of (0, 1/q): "
        "X v0 = 0 while Y v1 = d v0 and Y1 v1 = c v0.",
        "side_conditions": ["q of infinite multiplicative order"],
        "support": "every offset of the window",
        "kind": "windowed",
    },
    {
        "name": "VQ_JJ_3",
        "params": ["a"],
        "summary": "Downward ray ending at the sigma-side break of (a, 1/q): "
        "support on offsets <= 0 with the generic coefficients.",
        "side_conditions": [
            "q of infinite multiplicative order",
            "passes the relation check at the ray end only when a = 0",
        ],
        "support": "offsets <= 0",
        "kind": "windowed",
    },
    {
        "name": "VQ_JJ_4",
        "params": ["a"],
        "summary": "Upward ray starting just above the sigma-side break of (a, 1/q): "
        "support on offsets >= 1 with the generic coefficients.",
        "side_conditions": [
            "q of infinite multiplicative order",
            "passes the relation check at the ray start only when a = 0",
        ],
        "support": "offsets >= 1",
        "kind": "windowed",
    },
    {
        "name": "VQ_F_B_A",
        "params": ["f", "b", "a"],
        "summary": "Circular family twisted by f: X carries the wrap step with an extra "
        "factor f, Y1 v0 = (1/f) v_{r-1}, Y determined by YX = tau.",
        "side_conditions": [
            "circular orbit (positive characteristic, q of finite order)",
            "no sigma-side breaks on the orbit",
            "f nonzero",
        ],
        "support": "every offset of the length-r orbit",
        "kind": "circular",
    },
    {
        "name": "V1_A_B",
        "params": ["a", "b"],
        "summary": "One-dimensional weight spaces along the full orbit of (a, b); "
        "X acts by a+k, Y by 1, Y1 by (q^k b - 1)/(a+k-1).",
        "side_conditions": ["a outside the integer chain Z*1 (no tau-side breaks)"],
        "support": "every offset of the window",
        "kind": "windowed",
    },
    {
        "name": "V1_JJ_1",
        "params": ["b"],
        "summary": "Junction family on the orbit of (0, b): the tau-side break at "
        "offset 0 is crossed by X v0 = v1, with Y1 v1 = (qb-1) v0 and Y v1 = 0.",
        "side_conditions": ["characteristic 0"],
        "support": "every offset of the window",
        "kind": "windowed",
    },
    {
        "name": "V1_JJ_CD",
        "params": ["c", "d"],
        "summary": "Two-parameter junction family on the double break orbit of (0, 1/q): "
        "X v0 = 0 while Y v1 = c v0 and Y1 v1 = d v0.",
        "side_conditions": ["characteristic 0"],
        "support": "every offset of the window",
        "kind": "windowed",
    },
    {
        "name": "V1_JJ_3",
        "params": ["b"],
        "summary": "Downward ray ending at the tau-side break of (0, b): "
        "support on offsets <= 0 with the generic coefficients.",
        "side_conditions": [
            "characteristic 0",
            "passes the relation check at the ray end only when b = 1/q",
        ],
        "support": "offsets <= 0",
        "kind": "windowed",
    },
    {
        "name": "V1_JJ_4",
        "params": ["b"],
        "summary": "Upward ray starting just above the tau-side break of (0, b/q): "
        "support on offsets >= 1, with sigma value b at the first supported offset.",
        "side_conditions": [
            "characteristic 0",
            "passes the relation check at the ray start only when b = 1",
        ],
        "support": "offsets >= 1",
        "kind": "windowed",
    },
    {
        "name": "V1_F_A_B",
        "params": ["f", "a", "b"],
        "summary": "Circular family twisted by f: X carries the wrap step with an extra "
        "factor f, Y v0 = (1/f) v_{r-1}, Y1 determined by Y1 X = q sigma - 1.",
        "side_conditions": [
            "circular orbit (positive characteristic, q of finite order)",
            "no tau-side breaks on the orbit",
            "f nonzero",
        ],
        "support": "every offset of the length-r orbit",
        "kind": "circular",
    },
    {
        "name": "CHAIN_CYCLE",
        "params": ["m", "word", "a"],
        "summary": "m chained copies of the circular module on the orbit of (1, 1): at "
        "the wrap step component j closes through its word letter with eigenvalue a_j "
        "and feeds the other lowering operator into component j+1.",
        "side_conditions": [
            "circular orbit (positive characteristic, q of finite order)",
            "word over {Y, Y1} of length m",
            "every a_i nonzero",
        ],
        "support": "every offset, dimension m (total dimension r*m)",
        "kind": "circular",
    },
    {
        "name": "CHAIN_ALT",
        "params": ["m", "a"],
        "summary": "CHAIN_CYCLE with the alternating word Y, Y1, Y, Y1, ...",
        "side_conditions": [
            "m even and >= 2",
            "circular orbit (positive characteristic, q of finite order)",
            "every a_i nonzero",
        ],
        "support": "every offset, dimension m (total dimension r*m)",
        "kind": "circular",
    },
    {
        "name": "VCD_TWOROW",
        "params": ["c", "d"],
        "summary": "Two parallel downward rays meeting one upward ray at the double "
        "break of (0, 1/q): Y v1 = c u0 and Y1 v1 = d w0 tie the rays together.",
        "side_conditions": ["characteristic 0"],
        "support": "dimension 2 at offsets <= 0, dimension 1 at offsets >= 1",
        "kind": "windowed",
    },
    {
        "name": "REMARK_136",
        "params": [],
        "summary": "Frozen three-step fixture on the length-6 orbit of (1, 1): fails "
        "Y1 X = q sigma - 1 at its top step by construction and exists to exercise "
        "the relation checker.",
        "side_conditions": ["characteristic 3", "q of multiplicative order 2"],
        "support": "offsets 0, 1, 2 of the length-6 orbit",
        "kind": "circular",
    },
)


def list_families() -> List[dict]:
    """The stable catalog: name, parameter names, summary, and side conditions."""
    return [
        {
            "name": e["name"],
            "params": list(e["params"]),
            "summary": e["summary"],
            "side_conditions": list(e["side_conditions"]),
            "support": e["support"],
            "kind": e["kind"],
        }
        for e in _CATALOG
    ]

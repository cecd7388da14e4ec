"""Exact coefficient fields with a distinguished unit q.

Five field kinds cover everything the library needs:

  RATIONAL        plain rationals, q given as a nonzero rational
  CYCLOTOMIC(n)   rationals extended by a primitive n-th root of unity; q is
                  the root itself, so q has multiplicative order exactly n
  FUNCTION_FIELD  rational functions in one indeterminate t over the
                  rationals; q = t is transcendental
  PRIME_FIELD     integers mod p, q a nonzero residue
  EXT_FIELD       GF(p^k) as residues mod an irreducible monic polynomial f,
                  q a nonzero residue

Every element has a unique canonical form and a canonical text encoding that
round-trips through ``parse``/``show``.  Elements are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple, Union

# ---------------------------------------------------------------------------
# polynomial helpers (coefficient tuples, lowest degree first, no trailing
# zeros; the empty tuple is the zero polynomial)

IntPoly = Tuple[int, ...]
FracPoly = Tuple[Fraction, ...]


def _trim(coeffs: Sequence) -> tuple:
    n = len(coeffs)
    while n > 0 and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _padd(a: Sequence, b: Sequence) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _trim(out)


def _pneg(a: Sequence) -> tuple:
    return tuple(-c for c in a)


def _pmul(a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    out = [a[0] * b[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return _trim(out)


def _pdivmod_frac(a: FracPoly, b: FracPoly) -> Tuple[FracPoly, FracPoly]:
    """Division with remainder over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(rem) >= len(b):
        while rem and not rem[-1]:
            rem.pop()
        if len(rem) < len(b):
            break
        c = rem[-1] / lead
        d = len(rem) - len(b)
        quot[d] = c
        for i, y in enumerate(b):
            rem[d + i] -= c * y
        rem.pop()
    return _trim(quot), _trim(rem)


def _pgcd_frac(a: FracPoly, b: FracPoly) -> FracPoly:
    while b:
        a, b = b, _pdivmod_frac(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)  # monic normal form
    return a


def _cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, integer coefficients."""
    # (t^n - 1) divided by the product of all lower-order cyclotomics.
    num = tuple(Fraction(c) for c in [-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            phi_d = tuple(Fraction(c) for c in _cyclotomic(d))
            num, rem = _pdivmod_frac(num, phi_d)
            assert not rem
    poly = tuple(int(c) for c in num)
    return poly


# ---------------------------------------------------------------------------
# field specification


@dataclass(frozen=True)
class FieldSpec:
    """Variant tag plus the data needed to build the field.

    kind is one of RATIONAL, CYCLOTOMIC, FUNCTION_FIELD, PRIME_FIELD,
    EXT_FIELD.  n is the cyclotomic order, p the characteristic, f the monic
    defining polynomial (int coefficients, lowest degree first, trailing 1),
    and q the canonical encoding of the distinguished unit where the kind
    requires one.
    """

    kind: str
    n: Optional[int] = None
    p: Optional[int] = None
    f: Optional[Tuple[int, ...]] = None
    q: Optional[str] = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.n is not None:
            out["n"] = self.n
        if self.p is not None:
            out["p"] = self.p
        if self.f is not None:
            out["f"] = list(self.f)
        if self.q is not None:
            out["q"] = self.q
        return out

    @staticmethod
    def from_json(obj: dict) -> "FieldSpec":
        f = obj.get("f")
        return FieldSpec(
            kind=obj["kind"],
            n=obj.get("n"),
            p=obj.get("p"),
            f=tuple(f) if f is not None else None,
            q=str(obj["q"]) if obj.get("q") is not None else None,
        )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# elements


class Fel:
    """A field element: a context plus a canonical value.

    Arithmetic delegates to the context.  Plain ints coerce automatically so
    code can write ``x + 1`` or ``3 * x``.
    """

    __slots__ = ("field", "val")

    def __init__(self, field: "FieldCtx", val):
        self.field = field
        self.val = val

    def _coerce(self, other) -> "Fel":
        if isinstance(other, Fel):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field.add(self, self.field.neg(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field.add(other, self.field.neg(self))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field.mul(self, self.field.inv(other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field.mul(other, self.field.inv(self))

    def __neg__(self):
        return self.field.neg(self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.field.inv(self)
        k = abs(k)
        acc = self.field.one
        while k:
            if k & 1:
                acc = self.field.mul(acc, base)
            base = self.field.mul(base, base)
            k >>= 1
        return acc

    def inverse(self) -> "Fel":
        return self.field.inv(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, Fel):
            return NotImplemented
        return self.field == other.field and self.val == other.val

    def __bool__(self) -> bool:
        return not self.field.is_zero(self)

    def __hash__(self) -> int:
        return hash((id(self.field), self.val))

    def __str__(self) -> str:
        return self.field.show(self)

    def __repr__(self) -> str:
        return f"Fel({self.field.spec.kind}:{self.field.show(self)})"


# ---------------------------------------------------------------------------
# contexts


class FieldCtx:
    """Common interface of all five field kinds."""

    spec: FieldSpec
    characteristic: int
    is_finite: bool

    # subclasses set these in __init__
    zero: Fel
    one: Fel
    q: Fel

    def el(self, val) -> Fel:
        return Fel(self, val)

    # arithmetic on canonical values -- subclasses override _add etc.
    def add(self, a: Fel, b: Fel) -> Fel:
        return self.el(self._add(a.val, b.val))

    def neg(self, a: Fel) -> Fel:
        return self.el(self._neg(a.val))

    def mul(self, a: Fel, b: Fel) -> Fel:
        return self.el(self._mul(a.val, b.val))

    def inv(self, a: Fel) -> Fel:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return self.el(self._inv(a.val))

    def is_zero(self, a: Fel) -> bool:
        return a.val == self.zero.val

    def from_int(self, n: int) -> Fel:
        raise NotImplementedError

    def parse(self, text: str) -> Fel:
        raise NotImplementedError

    def show(self, a: Fel) -> str:
        raise NotImplementedError

    def q_order(self) -> Optional[int]:
        raise NotImplementedError

    def random_element(self, rng) -> Fel:
        raise NotImplementedError

    def all_elements(self) -> Iterator[Fel]:
        raise ValueError(f"{self.spec.kind} is not finite")

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None when infinite."""
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"FieldCtx({self.spec})"

    # shared encoding helpers
    @staticmethod
    def _show_fraction(x: Fraction) -> str:
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    @staticmethod
    def _parse_fraction(text: str) -> Fraction:
        return Fraction(text.strip())

    @staticmethod
    def _parse_bracket_list(text: str) -> list:
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"expected a bracket list, got {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return []
        return [part.strip() for part in inner.split(",")]


class RationalField(FieldCtx):
    characteristic = 0
    is_finite = False

    def __init__(self, q: Fraction):
        if q == 0:
            raise ValueError("q must be nonzero")
        self.spec = FieldSpec(kind="RATIONAL", q=self._show_fraction(q))
        self.zero = self.el(Fraction(0))
        self.one = self.el(Fraction(1))
        self.q = self.el(q)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def from_int(self, n: int) -> Fel:
        return self.el(Fraction(n))

    def parse(self, text: str) -> Fel:
        return self.el(self._parse_fraction(text))

    def show(self, a: Fel) -> str:
        return self._show_fraction(a.val)

    def q_order(self) -> Optional[int]:
        if self.q.val == 1:
            return 1
        if self.q.val == -1:
            return 2
        return None  # no other rational lies on the unit circle

    def random_element(self, rng) -> Fel:
        return self.el(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))


class CyclotomicField(FieldCtx):
    """Q(zeta_n) as rational-coefficient residues mod the n-th cyclotomic
    polynomial; q is the residue class of the generator."""

    characteristic = 0
    is_finite = False

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("cyclotomic order must be >= 1")
        self.n = n
        self.modulus: FracPoly = tuple(Fraction(c) for c in _cyclotomic(n))
        self.degree = len(self.modulus) - 1
        self.spec = FieldSpec(kind="CYCLOTOMIC", n=n)
        self.zero = self.el(())
        self.one = self.el((Fraction(1),))
        qval = self._reduce((Fraction(0), Fraction(1)))
        self.q = self.el(qval)

    def _reduce(self, poly: FracPoly) -> FracPoly:
        return _pdivmod_frac(_trim(poly), self.modulus)[1]

    def _add(self, a, b):
        return _padd(a, b)

    def _neg(self, a):
        return _pneg(a)

    def _mul(self, a, b):
        return self._reduce(_pmul(a, b))

    def _inv(self, a):
        # extended Euclid in Q[t] against the modulus
        r0, r1 = self.modulus, a
        s0, s1 = (), (Fraction(1),)
        while r1:
            quot, rem = _pdivmod_frac(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _padd(s0, _pneg(_pmul(quot, s1)))
        assert len(r0) == 1  # gcd is a unit: the modulus is irreducible
        scale = (Fraction(1) / r0[0],)
        return self._reduce(_pmul(s0, scale))

    def from_int(self, n: int) -> Fel:
        return self.el(_trim((Fraction(n),)))

    def parse(self, text: str) -> Fel:
        text = text.strip()
        if not text.startswith("["):
            return self.el(self._reduce((self._parse_fraction(text),)))
        parts = self._parse_bracket_list(text)
        return self.el(self._reduce(tuple(self._parse_fraction(s) for s in parts)))

    def show(self, a: Fel) -> str:
        if not a.val:
            return "[0]"
        return "[" + ",".join(self._show_fraction(c) for c in a.val) + "]"

    def q_order(self) -> Optional[int]:
        return self.n  # primitive n-th root by construction

    def random_element(self, rng) -> Fel:
        coeffs = tuple(Fraction(rng.randint(-4, 4)) for _ in range(self.degree))
        return self.el(_trim(coeffs))


class FunctionField(FieldCtx):
    """Q(t), elements as reduced num/den pairs with monic denominator; q = t."""

    characteristic = 0
    is_finite = False

    def __init__(self):
        self.spec = FieldSpec(kind="FUNCTION_FIELD")
        self.zero = self.el(((), (Fraction(1),)))
        self.one = self.el(((Fraction(1),), (Fraction(1),)))
        self.q = self.el(((Fraction(0), Fraction(1)), (Fraction(1),)))

    @staticmethod
    def _normalize(num: FracPoly, den: FracPoly):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), (Fraction(1),))
        g = _pgcd_frac(num, den)
        if len(g) > 1:
            num = _pdivmod_frac(num, g)[0]
            den = _pdivmod_frac(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        return (num, den)

    def _add(self, a, b):
        (n1, d1), (n2, d2) = a, b
        return self._normalize(_padd(_pmul(n1, d2), _pmul(n2, d1)), _pmul(d1, d2))

    def _neg(self, a):
        return (_pneg(a[0]), a[1])

    def _mul(self, a, b):
        (n1, d1), (n2, d2) = a, b
        return self._normalize(_pmul(n1, n2), _pmul(d1, d2))

    def _inv(self, a):
        return self._normalize(a[1], a[0])

    def from_int(self, n: int) -> Fel:
        return self.el((_trim((Fraction(n),)), (Fraction(1),)))

    def parse(self, text: str) -> Fel:
        text = text.strip()
        if "|" in text:
            num_s, den_s = text.split("|", 1)
        else:
            num_s, den_s = text, "[1]"
        def side(s: str) -> FracPoly:
            s = s.strip()
            if not s.startswith("["):
                return _trim((self._parse_fraction(s),))
            return _trim(tuple(self._parse_fraction(x) for x in self._parse_bracket_list(s)))
        return self.el(self._normalize(side(num_s), side(den_s)))

    def show(self, a: Fel) -> str:
        num, den = a.val
        def side(poly: FracPoly) -> str:
            if not poly:
                return "[0]"
            return "[" + ",".join(self._show_fraction(c) for c in poly) + "]"
        return side(num) + "|" + side(den)

    def q_order(self) -> Optional[int]:
        return None  # t is transcendental

    def random_element(self, rng) -> Fel:
        num = _trim(tuple(Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 3))))
        den: FracPoly = ()
        while not den:
            den = _trim(tuple(Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 2))))
        return self.el(self._normalize(num, den))


class PrimeField(FieldCtx):
    is_finite = True

    def __init__(self, p: int, q: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        q %= p
        if q == 0:
            raise ValueError("q must be nonzero")
        self.characteristic = p
        self.spec = FieldSpec(kind="PRIME_FIELD", p=p, q=str(q))
        self.zero = self.el(0)
        self.one = self.el(1 % p)
        self.q = self.el(q)

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        return pow(a, self.p - 2, self.p)

    def from_int(self, n: int) -> Fel:
        return self.el(n % self.p)

    def parse(self, text: str) -> Fel:
        return self.el(int(text.strip()) % self.p)

    def show(self, a: Fel) -> str:
        return str(a.val)

    def q_order(self) -> Optional[int]:
        return _mult_order(self.q, self.one)

    def random_element(self, rng) -> Fel:
        return self.el(rng.randrange(self.p))

    def all_elements(self) -> Iterator[Fel]:
        for v in range(self.p):
            yield self.el(v)

    @property
    def order(self) -> int:
        return self.p


class ExtField(FieldCtx):
    """GF(p^k) as residues of GF(p)[t] mod an irreducible monic f."""

    is_finite = True

    def __init__(self, p: int, f: Sequence[int], q_text: str):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        f = _trim(tuple(c % p for c in f))
        if len(f) < 3:
            raise ValueError("defining polynomial must have degree >= 2")
        if len(f) - 1 > 8:
            raise ValueError("defining polynomial degree > 8 not supported")
        if f[-1] != 1:
            raise ValueError("defining polynomial must be monic")
        self.p = p
        self.modulus: IntPoly = f
        self.degree = len(f) - 1
        if not self._irreducible(f, p):
            raise ValueError(f"defining polynomial {list(f)} is reducible mod {p}")
        self.characteristic = p
        self.zero = self.el(())
        self.one = self.el((1,))
        qval = self.parse(q_text).val
        if qval == ():
            raise ValueError("q must be nonzero")
        self.q = self.el(qval)
        self.spec = FieldSpec(kind="EXT_FIELD", p=p, f=f, q=self.show(self.q))

    @staticmethod
    def _irreducible(f: IntPoly, p: int) -> bool:
        # exhaustive trial division; any factorization has a factor of
        # degree at most deg(f)/2
        deg = len(f) - 1
        for d in range(1, deg // 2 + 1):
            for idx in range(p ** d):
                coeffs = []
                k = idx
                for _ in range(d):
                    coeffs.append(k % p)
                    k //= p
                trial = tuple(coeffs) + (1,)  # monic of degree d
                if not _pdivmod_modp(f, trial, p)[1]:
                    return False
        return True

    def _reduce(self, poly: IntPoly) -> IntPoly:
        return _pdivmod_modp(_trim(tuple(c % self.p for c in poly)), self.modulus, self.p)[1]

    def _add(self, a, b):
        return _trim(tuple(c % self.p for c in _padd(a, b)))

    def _neg(self, a):
        return tuple((-c) % self.p for c in a)

    def _mul(self, a, b):
        return self._reduce(_pmul(a, b))

    def _inv(self, a):
        p = self.p
        r0, r1 = self.modulus, a
        s0, s1 = (), (1,)
        while r1:
            quot, rem = _pdivmod_modp(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _trim(tuple(c % p for c in _padd(s0, _pneg(_pmul(quot, s1)))))
        assert len(r0) == 1
        scale = pow(r0[0], p - 2, p)
        return self._reduce(_pmul(s0, (scale,)))

    def from_int(self, n: int) -> Fel:
        return self.el(_trim((n % self.p,)))

    def parse(self, text: str) -> Fel:
        text = text.strip()
        if not text.startswith("["):
            return self.el(_trim((int(text) % self.p,)))
        parts = self._parse_bracket_list(text)
        return self.el(self._reduce(tuple(int(s) for s in parts)))

    def show(self, a: Fel) -> str:
        if not a.val:
            return "[0]"
        return "[" + ",".join(str(c) for c in a.val) + "]"

    def q_order(self) -> Optional[int]:
        return _mult_order(self.q, self.one)

    def random_element(self, rng) -> Fel:
        coeffs = tuple(rng.randrange(self.p) for _ in range(self.degree))
        return self.el(_trim(coeffs))

    def all_elements(self) -> Iterator[Fel]:
        for idx in range(self.p ** self.degree):
            coeffs = []
            k = idx
            for _ in range(self.degree):
                coeffs.append(k % self.p)
                k //= self.p
            yield self.el(_trim(tuple(coeffs)))

    @property
    def order(self) -> int:
        return self.p ** self.degree


def _pdivmod_modp(a: IntPoly, b: IntPoly, p: int) -> Tuple[IntPoly, IntPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [c % p for c in a]
    quot = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = pow(b[-1] % p, p - 2, p)
    while len(rem) >= len(b):
        while rem and rem[-1] % p == 0:
            rem.pop()
        if len(rem) < len(b):
            break
        c = (rem[-1] * inv_lead) % p
        d = len(rem) - len(b)
        quot[d] = c
        for i, y in enumerate(b):
            rem[d + i] = (rem[d + i] - c * y) % p
        rem.pop()
    return _trim(tuple(quot)), _trim(tuple(c % p for c in rem))


def _mult_order(x: Fel, one: Fel) -> int:
    acc = x
    n = 1
    while acc != one:
        acc = acc * x
        n += 1
    return n


# ---------------------------------------------------------------------------
# entry point


def make_field(spec: FieldSpec) -> FieldCtx:
    """Build a field context from a spec; validates all invariants."""
    kind = spec.kind
    if kind == "RATIONAL":
        q = Fraction(spec.q) if spec.q is not None else Fraction(2)
        return RationalField(q)
    if kind == "CYCLOTOMIC":
        if spec.n is None:
            raise ValueError("CYCLOTOMIC requires n")
        return CyclotomicField(spec.n)
    if kind == "FUNCTION_FIELD":
        return FunctionField()
    if kind == "PRIME_FIELD":
        if spec.p is None or spec.q is None:
            raise ValueError("PRIME_FIELD requires p and q")
        return PrimeField(spec.p, int(spec.q))
    if kind == "EXT_FIELD":
        if spec.p is None or spec.f is None or spec.q is None:
            raise ValueError("EXT_FIELD requires p, f and q")
        return ExtField(spec.p, spec.f, spec.q)
    raise ValueError(f"unknown field kind {kind!r}")


def q_order(ctx: FieldCtx) -> Optional[int]:
    """Least n >= 1 with q^n = 1, or None when q has infinite order."""
    return ctx.q_order()


def characteristic(ctx: FieldCtx) -> int:
    return ctx.characteristic

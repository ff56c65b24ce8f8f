"""Kummer-type curves prod_i (y - alpha_i) = x^m, their rational places, and
divisor arithmetic (degree, partial order, gcd, lmd).

Places are rational only: the r totally ramified places P_i over y = alpha_i,
the unique place Pinf over y = infinity, and the affine points P_(a,b) with
a != 0. Ramified indexing follows the order of the alphas sequence; affine
points are ordered by the field enumeration order of a, then b, and
generator-matrix columns inherit that order.
"""

from __future__ import annotations

import json
import math
import re
from typing import Dict, Iterable, Mapping, Optional, Sequence, Union

from .gf import (FieldElement, FieldSpec, GF, ParseError, format_element,
                 parse_element, solve_additive)

__all__ = [
    "Divisor",
    "KummerCurve",
    "Place",
    "builtin_curve",
    "curve_from_spec",
    "format_divisor",
    "gcd_divisor",
    "hermitian_curve",
    "hermitian_quotient_curve",
    "lifted_hermitian_curve",
    "lmd_divisor",
    "load_curve_spec",
    "norm_trace_curve",
    "parse_divisor",
    "parse_place",
]

RAMIFIED = "ramified"
INFINITY = "infinity"
AFFINE = "affine"

_KIND_RANK = {RAMIFIED: 0, AFFINE: 1, INFINITY: 2}


class Place:
    """A rational place: Ramified(i), Infinity, or Affine(a, b) with a != 0."""

    __slots__ = ("kind", "index", "a", "b")

    def __init__(self, kind: str, index: int = 0, a: Optional[FieldElement] = None,
                 b: Optional[FieldElement] = None):
        self.kind = kind
        self.index = index
        self.a = a
        self.b = b

    @staticmethod
    def ramified(index: int) -> "Place":
        if index < 1:
            raise ValueError("ramified places are indexed from 1")
        return Place(RAMIFIED, index=index)

    @staticmethod
    def infinity() -> "Place":
        return Place(INFINITY)

    @staticmethod
    def affine(a: FieldElement, b: FieldElement) -> "Place":
        if a.is_zero():
            raise ValueError("affine places require a != 0")
        return Place(AFFINE, a=a, b=b)

    def is_affine(self) -> bool:
        return self.kind == AFFINE

    def label(self) -> str:
        if self.kind == RAMIFIED:
            return f"P{self.index}"
        if self.kind == INFINITY:
            return "Pinf"
        return f"P({format_element(self.a)},{format_element(self.b)})"

    def sort_key(self):
        if self.kind == RAMIFIED:
            return (0, self.index, 0)
        if self.kind == AFFINE:
            spec = self.a.spec
            return (1, spec.enum_index(self.a), spec.enum_index(self.b))
        return (2, 0, 0)

    def _key(self):
        if self.kind == AFFINE:
            return (self.kind, self.a, self.b)
        return (self.kind, self.index)

    def __eq__(self, other):
        return isinstance(other, Place) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return self.label()


class Divisor:
    """A sparse integer combination of places."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Union[Mapping, Iterable, None] = None):
        data: Dict[Place, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for place, c in items:
                c = int(c)
                if c:
                    data[place] = data.get(place, 0) + c
                    if not data[place]:
                        del data[place]
        self._coeffs = data

    @staticmethod
    def zero() -> "Divisor":
        return Divisor()

    @staticmethod
    def of(place: Place, coefficient: int = 1) -> "Divisor":
        return Divisor({place: coefficient})

    def __getitem__(self, place: Place) -> int:
        return self._coeffs.get(place, 0)

    def items(self):
        return tuple(sorted(self._coeffs.items(), key=lambda pc: pc[0].sort_key()))

    @property
    def support(self) -> tuple:
        return tuple(sorted(self._coeffs, key=lambda p: p.sort_key()))

    @property
    def degree(self) -> int:
        return sum(self._coeffs.values())

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def __add__(self, other: "Divisor") -> "Divisor":
        data = dict(self._coeffs)
        for place, c in other._coeffs.items():
            data[place] = data.get(place, 0) + c
        return Divisor(data)

    def __neg__(self) -> "Divisor":
        return Divisor({p: -c for p, c in self._coeffs.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, n: int) -> "Divisor":
        return Divisor({p: n * c for p, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __le__(self, other: "Divisor") -> bool:
        places = set(self._coeffs) | set(other._coeffs)
        return all(self[p] <= other[p] for p in places)

    def __ge__(self, other: "Divisor") -> bool:
        return other.__le__(self)

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        return format_divisor(self)


def gcd_divisor(a: Divisor, b: Divisor) -> Divisor:
    """Placewise minimum; absent places count as coefficient 0."""
    places = set(a._coeffs) | set(b._coeffs)
    return Divisor({p: min(a[p], b[p]) for p in places})


def lmd_divisor(a: Divisor, b: Divisor) -> Divisor:
    """Placewise maximum, so gcd + lmd = a + b."""
    places = set(a._coeffs) | set(b._coeffs)
    return Divisor({p: max(a[p], b[p]) for p in places})


class KummerCurve:
    """The function field of prod_{i=1..r} (y - alpha_i) = x^m with (r, m) = 1.

    The constant field is the full field of evaluation (so all listed places
    are rational). Standard valuations: v_{P_i}(x) = 1, v_{P_i}(y - alpha_i) = m,
    v_inf(x) = -r, v_inf(y) = -m; genus (m-1)(r-1)/2.
    """

    def __init__(self, field: FieldSpec, alphas: Sequence, m: int, label: str = ""):
        self.field = field
        coerced = tuple(field.element(a) for a in alphas)
        if len(set(coerced)) != len(coerced):
            raise ValueError("duplicate roots in the defining product")
        if not coerced:
            raise ValueError("at least one root is required")
        self.alphas = coerced
        self.r = len(coerced)
        self.m = int(m)
        if self.m < 1:
            raise ValueError("exponent m must be positive")
        if math.gcd(self.r, self.m) != 1:
            raise ValueError(f"gcd(r, m) = gcd({self.r}, {self.m}) != 1")
        if self.m % field.p == 0:
            raise ValueError(
                "the exponent m must be coprime to the characteristic; "
                "ramification would be wild and the genus formula fails")
        self.label = label or f"kummer-r{self.r}-m{self.m}-gf{field.order}"
        self._points = None
        self._gap_set = None
        self._semigroup_boxes: dict = {}

    @property
    def genus(self) -> int:
        return (self.m - 1) * (self.r - 1) // 2

    def ramified_place(self, i: int) -> Place:
        if not 1 <= i <= self.r:
            raise ValueError(f"ramified index {i} out of range 1..{self.r}")
        return Place.ramified(i)

    def ramified_places(self) -> tuple:
        return tuple(Place.ramified(i) for i in range(1, self.r + 1))

    def infinity(self) -> Place:
        return Place.infinity()

    def defining_poly(self) -> tuple:
        """Coefficients of prod (y - alpha_i), little-endian."""
        coeffs = [self.field.one]
        for alpha in self.alphas:
            nxt = [self.field.zero] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] = nxt[i + 1] + c
                nxt[i] = nxt[i] - c * alpha
            coeffs = nxt
        return tuple(coeffs)

    def lhs_at(self, b: FieldElement) -> FieldElement:
        out = self.field.one
        for alpha in self.alphas:
            out = out * (b - alpha)
        return out

    def is_on_curve(self, a: FieldElement, b: FieldElement) -> bool:
        return not a.is_zero() and self.lhs_at(b) == a ** self.m

    def rational_points(self) -> tuple:
        """All rational places: Pinf, P_1..P_r, then affine by (a, b) order."""
        if self._points is None:
            points = [Place.infinity()]
            points.extend(self.ramified_places())
            lhs = {b: self.lhs_at(b) for b in self.field.elements()}
            for a in self.field.elements()[1:]:
                target = a ** self.m
                for b in self.field.elements():
                    if lhs[b] == target:
                        points.append(Place.affine(a, b))
            self._points = tuple(points)
        return self._points

    def affine_places(self) -> tuple:
        return tuple(p for p in self.rational_points() if p.kind == AFFINE)

    def divisor_of_x(self) -> Divisor:
        """(x) = sum_i P_i - r * Pinf."""
        data = {Place.ramified(i): 1 for i in range(1, self.r + 1)}
        data[Place.infinity()] = -self.r
        return Divisor(data)

    def divisor_of_y_minus_alpha(self, i: int) -> Divisor:
        """(y - alpha_i) = m * P_i - m * Pinf."""
        self.ramified_place(i)
        return Divisor({Place.ramified(i): self.m, Place.infinity(): -self.m})

    def standard_D(self) -> Divisor:
        """The sum of every affine place, the evaluation divisor throughout."""
        return Divisor({p: 1 for p in self.affine_places()})

    def _key(self):
        return (self.field, self.alphas, self.m)

    def __eq__(self, other):
        return isinstance(other, KummerCurve) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"KummerCurve({self.label!r}, r={self.r}, m={self.m}, genus={self.genus})"


# ---------------------------------------------------------------------------
# curve families used by the bundled constructions

def _additive_kernel_curve(field: FieldSpec, poly_coeffs: Sequence, m: int,
                           expected_roots: int, label: str) -> KummerCurve:
    roots = solve_additive(field, poly_coeffs)
    if len(roots) != expected_roots:
        raise ValueError(
            f"additive polynomial for {label} has {len(roots)} roots in "
            f"{field!r}, expected {expected_roots}")
    alphas = sorted(roots, key=field.enum_index)
    return KummerCurve(field, alphas, m, label=label)


def hermitian_curve(q: int) -> KummerCurve:
    """y^q + y = x^(q+1) over GF(q^2)."""
    field = GF(q * q)
    poly = [0] * (q + 1)
    poly[1] = 1
    poly[q] = 1
    return _additive_kernel_curve(field, poly, q + 1, q, f"hermitian-q{q}")


def hermitian_quotient_curve(q: int) -> KummerCurve:
    """y^(q/2) + y^(q/4) + ... + y = x^(q+1) over GF(q^2), for 4 | q."""
    if q % 4 != 0 or q & (q - 1):
        raise ValueError("this family needs q a power of 2 with 4 | q")
    poly = [0] * (q // 2 + 1)
    e = 1
    while e <= q // 2:
        poly[e] = 1
        e *= 2
    field = GF(q * q)
    return _additive_kernel_curve(field, poly, q + 1, q // 2, f"curve1-q{q}")


def lifted_hermitian_curve(q: int, r: int) -> KummerCurve:
    """y^q + y = x^(q^r + 1) over GF(q^(2r)), r odd."""
    if r % 2 == 0:
        raise ValueError("this family needs r odd")
    field = GF(q ** (2 * r))
    poly = [0] * (q + 1)
    poly[1] = 1
    poly[q] = 1
    return _additive_kernel_curve(field, poly, q ** r + 1, q, f"curve2-q{q}-r{r}")


def norm_trace_curve(q: int, r: int) -> KummerCurve:
    """y^(q^(r-1)) + ... + y^q + y = x^((q^r - 1)/(q - 1)) over GF(q^r)."""
    field = GF(q ** r)
    poly = [0] * (q ** (r - 1) + 1)
    for i in range(r):
        poly[q ** i] = 1
    m = (q ** r - 1) // (q - 1)
    return _additive_kernel_curve(field, poly, m, q ** (r - 1),
                                  f"norm-trace-q{q}-r{r}")


_BUILTIN_PATTERNS = (
    (re.compile(r"^hermitian-q(\d+)$"), lambda m: hermitian_curve(int(m.group(1)))),
    (re.compile(r"^curve1-q(\d+)$"), lambda m: hermitian_quotient_curve(int(m.group(1)))),
    (re.compile(r"^curve2-q(\d+)-r(\d+)$"),
     lambda m: lifted_hermitian_curve(int(m.group(1)), int(m.group(2)))),
    (re.compile(r"^norm-trace-q(\d+)-r(\d+)$"),
     lambda m: norm_trace_curve(int(m.group(1)), int(m.group(2)))),
)


def builtin_curve(name: str) -> KummerCurve:
    """Construct a bundled curve from names like hermitian-q2, curve2-q2-r3."""
    for pattern, build in _BUILTIN_PATTERNS:
        match = pattern.match(name)
        if match:
            return build(match)
    raise ValueError(f"unknown builtin curve {name!r}")


# ---------------------------------------------------------------------------
# curve-spec files

def curve_from_spec(spec: Mapping) -> KummerCurve:
    """Build a curve from the JSON curve-spec schema.

    Schema: {"p": int, "k": int, "modulus": [c0..ck] (optional), "m": int,
             "alphas": [[c0..], ...], "label": str (optional)}.
    """
    try:
        p = int(spec["p"])
        k = int(spec["k"])
        m = int(spec["m"])
        alphas = spec["alphas"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed curve spec: {exc}") from exc
    modulus = spec.get("modulus")
    field = FieldSpec(p, k, modulus)
    return KummerCurve(field, alphas, m, label=str(spec.get("label", "")))


def load_curve_spec(path: str) -> KummerCurve:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from exc
    return curve_from_spec(data)


# ---------------------------------------------------------------------------
# text forms

def format_divisor(d: Divisor) -> str:
    """Canonical text: ramified, affine, then Pinf, e.g. 1*P1+2*P2-1*Pinf."""
    if d.is_zero():
        return "0"
    parts = []
    for place, c in d.items():
        term = f"{abs(c)}*{place.label()}"
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("-" if c < 0 else "+") + term)
    return "".join(parts)


def _split_signed_terms(s: str):
    terms = []
    depth = 0
    current = ""
    sign = 1
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in "+-" and current.strip():
            terms.append((sign, current.strip()))
            sign = 1 if ch == "+" else -1
            current = ""
        elif depth == 0 and ch in "+-" and not current.strip():
            sign *= 1 if ch == "+" else -1
        else:
            current += ch
    if current.strip():
        terms.append((sign, current.strip()))
    return terms


def parse_place(curve: KummerCurve, text: str) -> Place:
    s = text.strip()
    if s in ("Pinf", "P_inf", "Pinfinity"):
        return Place.infinity()
    match = re.match(r"^P(\d+)$", s)
    if match:
        return curve.ramified_place(int(match.group(1)))
    match = re.match(r"^P\((.+)\)$", s)
    if match:
        body = match.group(1)
        depth = 0
        for i, ch in enumerate(body):
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            elif ch == "," and depth == 0:
                a = parse_element(curve.field, body[:i])
                b = parse_element(curve.field, body[i + 1:])
                if not curve.is_on_curve(a, b):
                    raise ValueError(f"point {text} does not lie on {curve.label}")
                return Place.affine(a, b)
        raise ParseError(f"bad affine place {text!r}")
    raise ParseError(f"bad place {text!r}")


def parse_divisor(curve: KummerCurve, text: str) -> Divisor:
    """Parse forms like 3*Pinf+1*P1-2*P2 or P1+P([0,1],[1,1])."""
    s = text.strip()
    if s == "0":
        return Divisor.zero()
    total = Divisor.zero()
    for sign, term in _split_signed_terms(s):
        if "*" in term:
            coeff_text, _, place_text = term.partition("*")
            try:
                coeff = int(coeff_text.strip())
            except ValueError as exc:
                raise ParseError(f"bad divisor coefficient in {term!r}") from exc
        else:
            coeff, place_text = 1, term
        place = parse_place(curve, place_text)
        total = total + Divisor.of(place, sign * coeff)
    return total

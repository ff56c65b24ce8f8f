"""Riemann-Roch spaces on Kummer-type curves, exactly and at desk scale.

A function is stored in the canonical shape

    f = sum_{t=0}^{m-1} x^t * N_t(y) / prod_i (y - alpha_i)^{d_{t,i}}

with each y-part in lowest terms. This shape is closed under the curve
relation x^m = prod (y - alpha_i), which rewrites any power of x into the
window 0 <= t < m at the cost of shifting the (y - alpha_i) exponents.

The key structural fact used everywhere: at each ramified place the term
x^t * h(y) has valuation congruent to t mod m, and at the infinite place
congruent to -r*t mod m. Since gcd(r, m) = 1 these are pairwise distinct for
t = 0..m-1, so a sum lies in L(G) exactly when every term does. That turns
L(G) for G supported on ramified places and Pinf into a direct sum of spaces
of bounded-degree polynomials in y over fixed denominators, computed below by
floor formulas. Simple zeros at affine points (coefficient -1 in G) are then
imposed by one linear constraint each.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .curves import AFFINE, INFINITY, RAMIFIED, Divisor, KummerCurve, Place
from .gf import FieldElement, ParseError, format_element, parse_element

__all__ = [
    "FunctionElement",
    "RRBasis",
    "ell",
    "format_function",
    "index_of_specialty",
    "is_nonspecial",
    "parse_function",
    "principal_divisor",
    "riemann_roch_basis",
    "valuation_ok",
]


# ---------------------------------------------------------------------------
# polynomial helpers over a FieldSpec (little-endian FieldElement lists)

def _ptrim(c: list) -> list:
    while c and c[-1].is_zero():
        c.pop()
    return c


def _padd(a: Sequence[FieldElement], b: Sequence[FieldElement], spec) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else spec.zero
        y = b[i] if i < len(b) else spec.zero
        out.append(x + y)
    return _ptrim(out)


def _pmul(a: Sequence[FieldElement], b: Sequence[FieldElement], spec) -> list:
    if not a or not b:
        return []
    out = [spec.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x.is_zero():
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return _ptrim(out)


def _pscale(a: Sequence[FieldElement], c: FieldElement) -> list:
    if c.is_zero():
        return []
    return _ptrim([x * c for x in a])


def _peval(a: Sequence[FieldElement], y: FieldElement, spec) -> FieldElement:
    acc = spec.zero
    for coeff in reversed(a):
        acc = acc * y + coeff
    return acc


def _pdiv_linear(a: Sequence[FieldElement], root: FieldElement, spec):
    """Divide by (y - root); returns (quotient, remainder constant)."""
    quo = [spec.zero] * (len(a) - 1) if len(a) > 1 else []
    carry = spec.zero
    for i in range(len(a) - 1, -1, -1):
        cur = a[i] + carry * root
        if i > 0:
            quo[i - 1] = cur
            carry = cur
        else:
            rem = cur
    if not a:
        return [], spec.zero
    return _ptrim(quo), rem


def _root_multiplicity(a: Sequence[FieldElement], root: FieldElement, spec) -> int:
    mult = 0
    poly = list(a)
    while poly:
        quo, rem = _pdiv_linear(poly, root, spec)
        if not rem.is_zero():
            break
        mult += 1
        poly = quo
    return mult


def _linear_power(root: FieldElement, e: int, spec) -> list:
    out = [spec.one]
    factor = [-root, spec.one]
    for _ in range(e):
        out = _pmul(out, factor, spec)
    return out


class FunctionElement:
    """A function in canonical x-power shape, tied to its curve."""

    __slots__ = ("curve", "terms")

    def __init__(self, curve: KummerCurve, terms: Dict[int, Tuple[tuple, tuple]]):
        # terms: t -> (num coeffs tuple, denominator exponents tuple)
        self.curve = curve
        normalized: Dict[int, Tuple[tuple, tuple]] = {}
        for t, (num, dens) in terms.items():
            if not 0 <= t < curve.m:
                raise ValueError("x-exponent out of the canonical window")
            num = _ptrim(list(num))
            if not num:
                continue
            dens = list(dens)
            spec = curve.field
            for i, alpha in enumerate(curve.alphas):
                while dens[i] > 0:
                    quo, rem = _pdiv_linear(num, alpha, spec)
                    if rem.is_zero():
                        num = quo
                        dens[i] -= 1
                    else:
                        break
            normalized[t] = (tuple(num), tuple(dens))
        self.terms = normalized

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(curve: KummerCurve) -> "FunctionElement":
        return FunctionElement(curve, {})

    @staticmethod
    def one(curve: KummerCurve) -> "FunctionElement":
        return FunctionElement.monomial(curve, 0)

    @staticmethod
    def monomial(curve: KummerCurve, x_exp: int,
                 alpha_exps: Optional[Sequence[int]] = None,
                 y_poly: Optional[Sequence] = None) -> "FunctionElement":
        """x^x_exp * prod (y - alpha_i)^alpha_exps[i] * y_poly(y).

        Any integer x_exp is reduced into [0, m) through x^m = prod(y - alpha_i).
        """
        spec = curve.field
        exps = list(alpha_exps) if alpha_exps is not None else [0] * curve.r
        if len(exps) != curve.r:
            raise ValueError("alpha_exps must list one exponent per root")
        t = x_exp % curve.m
        shift = (x_exp - t) // curve.m
        exps = [e + shift for e in exps]
        num = [spec.one]
        if y_poly is not None:
            num = _ptrim([spec.element(c) if not isinstance(c, FieldElement) else c
                          for c in y_poly])
        dens = []
        for alpha, e in zip(curve.alphas, exps):
            if e > 0:
                num = _pmul(num, _linear_power(alpha, e, spec), spec)
                dens.append(0)
            else:
                dens.append(-e)
        return FunctionElement(curve, {t: (tuple(num), tuple(dens))})

    # -- predicates and linear structure ---------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FunctionElement") -> "FunctionElement":
        if self.curve != other.curve:
            raise ValueError("functions live on different curves")
        spec = self.curve.field
        terms: Dict[int, Tuple[tuple, tuple]] = dict(self.terms)
        for t, (num2, dens2) in other.terms.items():
            if t not in terms:
                terms[t] = (num2, dens2)
                continue
            num1, dens1 = terms[t]
            dens = tuple(max(d1, d2) for d1, d2 in zip(dens1, dens2))
            lift1, lift2 = list(num1), list(num2)
            for alpha, d1, d2, d in zip(self.curve.alphas, dens1, dens2, dens):
                if d > d1:
                    lift1 = _pmul(lift1, _linear_power(alpha, d - d1, spec), spec)
                if d > d2:
                    lift2 = _pmul(lift2, _linear_power(alpha, d - d2, spec), spec)
            num = _padd(lift1, lift2, spec)
            if num:
                terms[t] = (tuple(num), dens)
            else:
                del terms[t]
        return FunctionElement(self.curve, terms)

    def __neg__(self) -> "FunctionElement":
        return self * (-self.curve.field.one)

    def __sub__(self, other: "FunctionElement") -> "FunctionElement":
        return self + (-other)

    def __mul__(self, scalar) -> "FunctionElement":
        scalar = self.curve.field.element(scalar) if not isinstance(scalar, FieldElement) else scalar
        if scalar.is_zero():
            return FunctionElement.zero(self.curve)
        terms = {t: (tuple(_pscale(num, scalar)), dens)
                 for t, (num, dens) in self.terms.items()}
        return FunctionElement(self.curve, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, FunctionElement)
                and self.curve == other.curve and self.terms == other.terms)

    def __repr__(self):
        return format_function(self)

    # -- evaluation and valuations ---------------------------------------------

    def evaluate(self, place: Place) -> FieldElement:
        """Value at an affine place; denominators cannot vanish there."""
        if place.kind != AFFINE:
            raise ValueError("evaluation is defined at affine places only")
        spec = self.curve.field
        a, b = place.a, place.b
        total = spec.zero
        for t, (num, dens) in self.terms.items():
            value = _peval(num, b, spec)
            for alpha, d in zip(self.curve.alphas, dens):
                if d:
                    factor = b - alpha
                    if factor.is_zero():
                        raise ZeroDivisionError(
                            "denominator vanishes; the place is not on the curve")
                    value = value * (factor ** d).inverse()
            total = total + (a ** t) * value
        return total

    def __call__(self, place: Place) -> FieldElement:
        return self.evaluate(place)

    def valuation(self, place: Place) -> int:
        """Exact valuation at ramified places and Pinf.

        At an affine place the result is 0 (no zero) or 1 meaning "at least
        one"; exact vanishing orders at unramified points are not computed.
        """
        if self.is_zero():
            raise ValueError("the zero function has no valuation")
        curve = self.curve
        spec = curve.field
        m, r = curve.m, curve.r
        if place.kind == RAMIFIED:
            alpha = curve.alphas[place.index - 1]
            best = None
            for t, (num, dens) in self.terms.items():
                ord_alpha = _root_multiplicity(num, alpha, spec) - dens[place.index - 1]
                v = t + m * ord_alpha
                best = v if best is None else min(best, v)
            return best
        if place.kind == INFINITY:
            best = None
            for t, (num, dens) in self.terms.items():
                ord_inf = sum(dens) - (len(num) - 1)
                v = -r * t + m * ord_inf
                best = v if best is None else min(best, v)
            return best
        return 0 if not self.evaluate(place).is_zero() else 1


def principal_divisor(f: FunctionElement) -> Divisor:
    """Divisor of a monomial-shaped function x^e * prod (y - alpha_i)^(c_i).

    Such functions never vanish at affine places, so the divisor is exact and
    supported on the ramified places and Pinf. Anything else is rejected.
    """
    if f.is_zero():
        raise ValueError("the zero function has no divisor")
    if len(f.terms) != 1:
        raise ValueError("only single-term functions have exact divisors here")
    curve = f.curve
    spec = curve.field
    (t, (num, dens)), = f.terms.items()
    poly = list(num)
    net = []
    for alpha, d in zip(curve.alphas, dens):
        mult = 0
        while poly:
            quo, rem = _pdiv_linear(poly, alpha, spec)
            if rem.is_zero():
                poly = quo
                mult += 1
            else:
                break
        net.append(mult - d)
    if len(poly) != 1:
        raise ValueError("numerator is not a product of the (y - alpha_i)")
    coeffs = {}
    for i, c in enumerate(net, start=1):
        v = t + curve.m * c
        if v:
            coeffs[Place.ramified(i)] = v
    v_inf = -curve.r * t - curve.m * sum(net)
    if v_inf:
        coeffs[Place.infinity()] = v_inf
    return Divisor(coeffs)


# ---------------------------------------------------------------------------
# Riemann-Roch spaces

@dataclass(frozen=True)
class RRBasis:
    divisor: Divisor
    functions: tuple
    dimension: int


def _split_divisor(curve: KummerCurve, G: Divisor):
    """Coefficients of G at ramified places / Pinf, plus affine -1 places."""
    ram = [0] * curve.r
    inf = 0
    simple_zeros = []
    for place, c in G.items():
        if place.kind == RAMIFIED:
            if place.index > curve.r:
                raise ValueError(f"{place} is not a place of {curve.label}")
            ram[place.index - 1] = c
        elif place.kind == INFINITY:
            inf = c
        else:
            if c != -1:
                raise ValueError(
                    "affine coefficients other than -1 are not supported "
                    f"(got {c} at {place})")
            if not curve.is_on_curve(place.a, place.b):
                raise ValueError(f"{place} does not lie on {curve.label}")
            simple_zeros.append(place)
    simple_zeros.sort(key=lambda p: p.sort_key())
    return ram, inf, simple_zeros


def _term_bounds(curve: KummerCurve, ram: Sequence[int], inf: int):
    """Per-t denominator exponents and top y-degree of the t-component."""
    m, r = curve.m, curve.r
    for t in range(m):
        n_it = [ (g + t) // m for g in ram ]
        e_t = (inf - r * t) // m
        yield t, n_it, sum(n_it) + e_t


def riemann_roch_basis(curve: KummerCurve, G: Divisor) -> RRBasis:
    """An explicit basis of L(G) = { f : (f) >= -G }.

    G may carry arbitrary integers at ramified places and Pinf, and -1 at
    affine places (a required simple zero, imposed as a linear constraint).
    The construction is validated on the spot against the exact dimension
    count deg G + 1 - genus whenever deg G > 2g - 2.
    """
    ram, inf, simple_zeros = _split_divisor(curve, G)
    functions: List[FunctionElement] = []
    for t, n_it, top in _term_bounds(curve, ram, inf):
        for k in range(top + 1):
            exps = [-n for n in n_it]
            functions.append(FunctionElement.monomial(
                curve, t, alpha_exps=exps,
                y_poly=[0] * k + [1]))
    for point in simple_zeros:
        values = [f.evaluate(point) for f in functions]
        pivot = next((i for i, v in enumerate(values) if not v.is_zero()), None)
        if pivot is None:
            continue
        inv = values[pivot].inverse()
        reduced = []
        for i, f in enumerate(functions):
            if i == pivot:
                continue
            if values[i].is_zero():
                reduced.append(f)
            else:
                reduced.append(f - (values[i] * inv) * functions[pivot])
        functions = reduced
    dim = len(functions)
    g = curve.genus
    if G.degree > 2 * g - 2 and dim != G.degree + 1 - g:
        raise RuntimeError(
            f"L-space dimension self-test failed on {curve.label}: "
            f"deg G = {G.degree}, genus {g}, got {dim}")
    return RRBasis(divisor=G, functions=tuple(functions), dimension=dim)


def _ell_fast(curve: KummerCurve, ram: Sequence[int], inf: int) -> int:
    total = 0
    for _, _, top in _term_bounds(curve, ram, inf):
        if top >= 0:
            total += top + 1
    return total


def ell(curve: KummerCurve, G: Divisor) -> int:
    """dim L(G); closed form unless G constrains affine points."""
    ram, inf, simple_zeros = _split_divisor(curve, G)
    if not simple_zeros:
        return _ell_fast(curve, ram, inf)
    return riemann_roch_basis(curve, G).dimension


def index_of_specialty(curve: KummerCurve, G: Divisor) -> int:
    return ell(curve, G) - (G.degree + 1 - curve.genus)


def valuation_ok(curve: KummerCurve, f: FunctionElement, G: Divisor) -> bool:
    """Membership test f in L(G) at the ramified places and Pinf.

    Sufficient for exactness when f never vanishes at constrained affine
    points, which holds for every monomial-shaped function.
    """
    if f.is_zero():
        return True
    for i in range(1, curve.r + 1):
        place = Place.ramified(i)
        if f.valuation(place) < -G[place]:
            return False
    return f.valuation(Place.infinity()) >= -G[Place.infinity()]


def is_nonspecial(curve: KummerCurve, G: Divisor) -> bool:
    return index_of_specialty(curve, G) == 0


# ---------------------------------------------------------------------------
# text form: "x^t*(poly)/(den)" terms joined by " + "

def format_function(f: FunctionElement) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for t in sorted(f.terms):
        num, dens = f.terms[t]
        monos = [f"{format_element(c)}*y^{k}"
                 for k, c in enumerate(num) if not c.is_zero()]
        text = f"x^{t}*(" + " + ".join(monos) + ")"
        den_parts = [f"(y-{format_element(alpha)})^{d}"
                     for alpha, d in zip(f.curve.alphas, dens) if d > 0]
        if den_parts:
            text += "/(" + "*".join(den_parts) + ")"
        parts.append(text)
    return " + ".join(parts)


def _match_paren(s: str, start: int) -> int:
    """Index just past the parenthesized group opening at s[start] == '('."""
    depth = 0
    for i in range(start, len(s)):
        if s[i] == "(":
            depth += 1
        elif s[i] == ")":
            depth -= 1
            if depth == 0:
                return i + 1
    raise ParseError(f"unbalanced parentheses in {s!r}")


def _split_top_plus(s: str):
    parts = []
    depth = 0
    cur = ""
    i = 0
    while i < len(s):
        if s[i] in "([":
            depth += 1
        elif s[i] in ")]":
            depth -= 1
        if depth == 0 and s[i:i + 3] == " + ":
            parts.append(cur)
            cur = ""
            i += 3
            continue
        cur += s[i]
        i += 1
    parts.append(cur)
    return parts


def parse_function(curve: KummerCurve, text: str) -> FunctionElement:
    """Parse the canonical text form produced by format_function."""
    s = text.strip()
    if s == "0":
        return FunctionElement.zero(curve)
    spec = curve.field
    total = FunctionElement.zero(curve)
    for part in _split_top_plus(s):
        part = part.strip()
        if not part.startswith("x^"):
            raise ParseError(f"bad function term {part!r}")
        i = 2
        while i < len(part) and part[i].isdigit():
            i += 1
        t = int(part[2:i])
        rest = part[i:]
        num = [spec.one]
        dens = (0,) * curve.r
        if rest.startswith("*("):
            end = _match_paren(rest, 1)
            poly_text = rest[2:end - 1]
            rest = rest[end:]
            coeffs: Dict[int, FieldElement] = {}
            for mono in _split_top_plus(poly_text):
                mono = mono.strip()
                coeff_text, _, power_text = mono.rpartition("*y^")
                if not coeff_text:
                    raise ParseError(f"bad polynomial term {mono!r}")
                coeffs[int(power_text)] = parse_element(spec, coeff_text)
            top = max(coeffs)
            num = [coeffs.get(k, spec.zero) for k in range(top + 1)]
        if rest.startswith("/("):
            end = _match_paren(rest, 1)
            den_text = rest[2:end - 1]
            rest = rest[end:]
            exps = [0] * curve.r
            for factor in den_text.split("*"):
                factor = factor.strip()
                match_end = _match_paren(factor, 0)
                inner = factor[1:match_end - 1]
                if not inner.startswith("y-"):
                    raise ParseError(f"bad denominator factor {factor!r}")
                alpha = parse_element(spec, inner[2:])
                if factor[match_end:match_end + 1] != "^":
                    raise ParseError(f"bad denominator factor {factor!r}")
                exp = int(factor[match_end + 1:])
                try:
                    idx = curve.alphas.index(alpha)
                except ValueError as exc:
                    raise ParseError(f"{alpha} is not a root of the curve") from exc
                exps[idx] += exp
            dens = tuple(exps)
        if rest.strip():
            raise ParseError(f"trailing junk in function term {part!r}")
        total = total + FunctionElement(curve, {t: (tuple(num), dens)})
    return total

"""Weierstrass semigroups at the totally ramified places, their minimal
generating sets, and the explicit non-special divisors of degrees g and g-1.

For tuples of ramified places the minimal generating set has a closed form
driven by floor counts in r and m. Membership in the semigroup can be decided
two independent ways: through least upper bounds of generators, and through
the dimension-jump criterion ell(A) = ell(A - P_j) + 1 for every j. The test
suite checks the two agree box-exhaustively.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .curves import Divisor, KummerCurve, Place
from .functions import _ell_fast

__all__ = [
    "NonspecialRecipe",
    "enumerate_nonspecial_degree_g",
    "floor_identity_checks",
    "gamma_plus_multi",
    "gap_set_single",
    "is_nonspecial_gns",
    "lub_closure_membership",
    "nonspecial_degree_g",
    "nonspecial_degree_g_minus_1",
    "nonspecial_recipe",
    "semigroup_membership_oracle",
    "semigroup_multiplicity",
]


def gap_set_single(curve: KummerCurve) -> frozenset:
    """Gap set of any single ramified place; its size equals the genus."""
    if curve._gap_set is None:
        m, r = curve.m, curve.r
        gaps = set()
        for j in range(1, m - m // r):
            for k in range(0, r - 1 - (r * j) // m):
                gaps.add(m * k + j)
        curve._gap_set = frozenset(gaps)
    return curve._gap_set


def semigroup_multiplicity(curve: KummerCurve) -> int:
    """Least nonzero pole number at a ramified place."""
    gaps = gap_set_single(curve)
    v = 1
    while v in gaps:
        v += 1
    return v


def _max_tuple_size(curve: KummerCurve) -> int:
    return curve.r - curve.r // curve.m


def gamma_plus_multi(curve: KummerCurve, l: int) -> set:
    """Minimal-generating vectors for a tuple of l distinct ramified places.

    Valid for 2 <= l <= r - floor(r/m); outside that window the closed form
    is not established and the call is refused.
    """
    m, r = curve.m, curve.r
    if not 2 <= l <= _max_tuple_size(curve):
        raise ValueError(
            f"tuple size {l} outside the supported range 2..{_max_tuple_size(curve)}")
    out = set()
    for j in range(1, m - m // r):
        total = r - l - (r * j) // m
        if total < 0:
            continue
        for comp in _compositions(total, l):
            out.add(tuple(m * s + j for s in comp))
    return out


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _check_places(curve: KummerCurve, places: Sequence[int]):
    if len(set(places)) != len(places):
        raise ValueError("places must be distinct")
    for i in places:
        curve.ramified_place(i)


def semigroup_membership_oracle(curve: KummerCurve, places: Sequence[int],
                                alpha: Sequence[int]) -> bool:
    """Dimension-jump membership test for alpha in H(P_i1, ..., P_il).

    alpha belongs to the semigroup iff imposing the divisor's full pole order
    at each chosen place is achieved by some function, i.e. dropping any one
    place lowers the dimension by exactly one.
    """
    _check_places(curve, places)
    if len(alpha) != len(places):
        raise ValueError("alpha and places must have the same length")
    if any(a < 0 for a in alpha):
        raise ValueError("alpha entries must be nonnegative")
    ram = [0] * curve.r
    for i, a in zip(places, alpha):
        ram[i - 1] = a
    base = _ell_fast(curve, ram, 0)
    for i in places:
        ram[i - 1] -= 1
        dropped = _ell_fast(curve, ram, 0)
        ram[i - 1] += 1
        if base != dropped + 1:
            return False
    return True


def _gamma_in_box(curve: KummerCurve, l: int, bound: int) -> list:
    """Nonzero minimal generators (all sub-tuples embedded) within a box.

    Entries come from single-place semigroups on every coordinate subset of
    size one, and from the closed-form vectors for larger subsets; vectors
    with any entry beyond `bound` cannot sit below a queried box element.
    """
    gaps = gap_set_single(curve)
    singles = [v for v in range(1, bound + 1) if v not in gaps]
    gens = []
    for i in range(l):
        for v in singles:
            vec = [0] * l
            vec[i] = v
            gens.append(tuple(vec))
    for size in range(2, l + 1):
        pieces = [vec for vec in gamma_plus_multi(curve, size)
                  if max(vec) <= bound]
        for positions in itertools.combinations(range(l), size):
            for vec in pieces:
                out = [0] * l
                for pos, value in zip(positions, vec):
                    out[pos] = value
                gens.append(tuple(out))
    return gens


def _semigroup_box(curve: KummerCurve, l: int, bound: int) -> frozenset:
    """H(P_1..P_l) intersected with [0, bound]^l, as lub-closure of generators."""
    key = (l, bound)
    cached = curve._semigroup_boxes.get(key)
    if cached is not None:
        return cached
    gens = _gamma_in_box(curve, l, bound)
    zero = (0,) * l
    members = {zero}
    members.update(gens)
    frontier = list(members)
    while frontier:
        current = frontier.pop()
        for gen in gens:
            lub = tuple(max(a, b) for a, b in zip(current, gen))
            if lub not in members:
                members.add(lub)
                frontier.append(lub)
    result = frozenset(members)
    curve._semigroup_boxes[key] = result
    return result


def lub_closure_membership(curve: KummerCurve, places: Sequence[int],
                           alpha: Sequence[int]) -> bool:
    """Membership via least upper bounds of minimal generators."""
    _check_places(curve, places)
    l = len(places)
    if len(alpha) != l:
        raise ValueError("alpha and places must have the same length")
    if any(a < 0 for a in alpha):
        raise ValueError("alpha entries must be nonnegative")
    if not 1 <= l < curve.field.order:
        raise ValueError("tuple size must be positive and below the field size")
    if l > _max_tuple_size(curve):
        raise ValueError(
            f"tuple size {l} outside the supported range 1..{_max_tuple_size(curve)}")
    bound = max(alpha) if alpha else 0
    return tuple(alpha) in _semigroup_box(curve, l, bound)


def is_nonspecial_gns(curve: KummerCurve, A: Divisor) -> bool:
    """Generating-set test: an effective degree-g divisor on ramified places
    is non-special when no nonzero minimal generator sits below it."""
    if not A.is_effective():
        raise ValueError("A must be effective")
    if A.degree != curve.genus:
        raise ValueError(f"A must have degree g = {curve.genus}")
    support = A.support
    if any(p.kind != "ramified" for p in support):
        raise ValueError("A must be supported on ramified places")
    if len(support) > _max_tuple_size(curve):
        raise ValueError("support too large for the closed-form generators")
    alpha = tuple(A[p] for p in support)
    l = len(alpha)
    if l == 0:
        return curve.genus == 0
    bound = max(alpha)
    for gen in _gamma_in_box(curve, l, bound):
        if all(gv <= av for gv, av in zip(gen, alpha)):
            return False
    return True


# ---------------------------------------------------------------------------
# explicit non-special divisors of degree g and g - 1

@dataclass(frozen=True)
class NonspecialRecipe:
    """Multiplicity pattern: s[j] places receive coefficient j."""
    l: Dict[int, int]
    s: Dict[int, int]
    assignment: Tuple[Tuple[int, int], ...]  # (multiplicity, place index)


def _recipe_counts(curve: KummerCurve):
    m, r = curve.m, curve.r
    top = m - 1 - m // r
    l = {j: r - (r * j) // m for j in range(1, top + 2)}
    s = {}
    for j in range(1, top):
        s[j] = l[j] - l[j + 1]
    if top >= 1:
        s[top] = l[top] - 1
    l = {j: l[j] for j in range(1, top + 1)}
    return l, s, top


def nonspecial_recipe(curve: KummerCurve,
                      assignment: Optional[Sequence[int]] = None) -> NonspecialRecipe:
    """Resolve the multiplicity pattern and its assignment to places.

    The default assignment gives ascending multiplicities to ascending place
    indices. A custom assignment lists the place indices consumed in that
    order and must be injective.
    """
    l, s, top = _recipe_counts(curve)
    slots = [j for j in range(1, top + 1) for _ in range(s.get(j, 0))]
    if assignment is None:
        assignment = list(range(1, len(slots) + 1))
    assignment = list(assignment)
    if len(assignment) != len(slots):
        raise ValueError(f"assignment must list {len(slots)} distinct places")
    if len(set(assignment)) != len(assignment):
        raise ValueError("assignment repeats a place")
    for i in assignment:
        curve.ramified_place(i)
    pairs = tuple(zip(slots, assignment))
    total = sum(j for j, _ in pairs)
    if total != curve.genus:
        raise AssertionError("multiplicity pattern does not sum to the genus")
    return NonspecialRecipe(l=l, s=s, assignment=pairs)


def nonspecial_degree_g(curve: KummerCurve,
                        assignment: Optional[Sequence[int]] = None) -> Divisor:
    """The effective non-special divisor of degree g on ramified places."""
    recipe = nonspecial_recipe(curve, assignment)
    return Divisor({Place.ramified(i): j for j, i in recipe.assignment})


def enumerate_nonspecial_degree_g(curve: KummerCurve) -> set:
    """Every divisor the recipe can produce, over all injective assignments."""
    _, s, top = _recipe_counts(curve)
    groups = [(j, s[j]) for j in range(1, top + 1) if s.get(j, 0)]
    out = set()

    def assign(idx: int, remaining: tuple, acc: dict):
        if idx == len(groups):
            out.add(Divisor({Place.ramified(i): j for i, j in acc.items()}))
            return
        j, count = groups[idx]
        for chosen in itertools.combinations(remaining, count):
            nxt = dict(acc)
            for i in chosen:
                nxt[i] = j
            rest = tuple(i for i in remaining if i not in chosen)
            assign(idx + 1, rest, nxt)

    assign(0, tuple(range(1, curve.r + 1)), {})
    return out


def nonspecial_degree_g_minus_1(curve: KummerCurve, P: Place,
                                assignment: Optional[Sequence[int]] = None) -> Divisor:
    """A - P for the degree-g divisor A and any rational P outside supp A."""
    A = nonspecial_degree_g(curve, assignment)
    if A[P] != 0:
        raise ValueError(f"{P} lies in the support of the degree-g divisor")
    if P.kind == "ramified":
        curve.ramified_place(P.index)
    elif P.kind == "affine" and not curve.is_on_curve(P.a, P.b):
        raise ValueError(f"{P} does not lie on {curve.label}")
    return A - Divisor.of(P)


def floor_identity_checks(r: int, m: int) -> bool:
    """Floor-jump and floor-sum identities behind the degree count.

    (1) For 1 <= j <= m - 2 the difference floor(r(j+1)/m) - floor(rj/m)
        exceeds floor(r/m) by one exactly at j in {floor(km/t) : 1 <= k < t},
        t = r mod m. (At j = m - 1 the difference always jumps, which the
        degree count never uses.)
    (2) sum_{k=1}^{t-1} floor(km/t) = (m-1)(t-1)/2.
    """
    if math.gcd(r, m) != 1:
        raise ValueError("r and m must be coprime")
    t = r % m
    jump_set = {(k * m) // t for k in range(1, t)} if t else set()
    for j in range(1, m - 1):
        diff = (r * (j + 1)) // m - (r * j) // m
        expected = r // m + (1 if j in jump_set else 0)
        if diff != expected:
            return False
    if t and sum((k * m) // t for k in range(1, t)) != (m - 1) * (t - 1) // 2:
        return False
    return True

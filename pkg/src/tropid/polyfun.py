"""Max-plus polynomials of symbolic word evaluations and their comparison.

A :class:`MaxPlusPoly` is a finite set of integer exponent vectors over an
ordered coordinate basis; it denotes the pointwise maximum of the linear
forms.  Two such functions are compared over a cone (all of R^d, or the
nonnegative orthant) by mutual convex domination, decided with the exact
simplex in :mod:`tropid.simplex`.

Domination criteria used throughout:

* full space: ``<e,x> <= max_s <s,x>`` for all ``x`` iff ``e`` lies in the
  convex hull of the monomials;
* nonnegative orthant: the same holds for all ``x >= 0`` iff some convex
  combination of the monomials is componentwise ``>= e``.

Both functions are positively homogeneous with integer coefficients, so
agreement on Z^d, Q^d and R^d (or their nonnegative parts) coincide.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .simplex import INFEASIBLE, linprog
from .tropical import NEG_INF, t_sum


class Cone(enum.Enum):
    FULL = "full-space"
    ORTHANT = "nonnegative-orthant"


class BasisMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Coordinate:
    var: str
    slot: str

    def __str__(self):
        return f"{self.slot}_{self.var}"


@dataclass(frozen=True)
class MaxPlusPoly:
    coords: tuple
    monomials: frozenset

    def __post_init__(self):
        d = len(self.coords)
        if any(len(m) != d for m in self.monomials):
            raise BasisMismatch("monomial length does not match the basis")

    @classmethod
    def from_vectors(cls, coords: Sequence[Coordinate], vectors: Iterable[Sequence[int]]):
        return cls(tuple(coords), frozenset(tuple(int(v) for v in m) for m in vectors))

    @property
    def is_bottom(self) -> bool:
        return not self.monomials

    def __len__(self):
        return len(self.monomials)

    def sorted_monomials(self) -> list:
        return sorted(self.monomials, reverse=True)

    def evaluate(self, point):
        """Value at ``point`` (a sequence aligned with ``coords`` or a mapping
        keyed by :class:`Coordinate`).  Bottom coordinates are allowed only
        under positive exponents."""
        if isinstance(point, Mapping):
            point = [point[c] for c in self.coords]
        values = []
        for m in self.monomials:
            total = 0
            for k, v in zip(m, point):
                if not k:
                    continue
                if v is NEG_INF:
                    if k < 0:
                        raise ValueError("negative exponent on a bottom coordinate")
                    total = NEG_INF
                    break
                total += k * v
            values.append(total)
        return t_sum(values)

    def shifted(self, vector: Sequence[int]) -> "MaxPlusPoly":
        return MaxPlusPoly(
            self.coords, frozenset(tuple(a + b for a, b in zip(m, vector)) for m in self.monomials)
        )

    def project(self, keep: Sequence[int]) -> "MaxPlusPoly":
        return MaxPlusPoly(
            tuple(self.coords[i] for i in keep),
            frozenset(tuple(m[i] for i in keep) for m in self.monomials),
        )

    def dump(self) -> str:
        lines = ["basis: " + " ".join(str(c) for c in self.coords)]
        if not self.monomials:
            lines.append("-inf")
        for m in self.sorted_monomials():
            terms = [f"{c}^{k}" for c, k in zip(self.coords, m) if k]
            lines.append("+".join(terms) if terms else "0")
        return "\n".join(lines)


def _check_basis(p: MaxPlusPoly, q: MaxPlusPoly):
    if p.coords != q.coords:
        raise BasisMismatch("polynomials use different coordinate bases")


# -- domination -----------------------------------------------------------

@dataclass(frozen=True)
class Domination:
    dominated: bool
    weights: Optional[tuple] = None  # convex weights over the sorted monomials
    point: Optional[tuple] = None  # x in the cone with <e,x> > max_s <s,x>

    def __bool__(self):
        return self.dominated


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def dominated(e: Sequence[int], S: Iterable[Sequence[int]], cone: Cone,
              certificate: bool = True) -> Domination:
    """Decide whether the linear form ``e`` never exceeds ``max S`` on ``cone``.

    With ``certificate=False`` a negative answer skips computing the
    separating point.
    """
    e = tuple(e)
    S = sorted({tuple(s) for s in S}, reverse=True)
    d = len(e)
    if any(len(s) != d for s in S):
        raise BasisMismatch("exponent vectors of different lengths")
    if not S:
        return Domination(False, point=(0,) * d)
    if e in S:
        return Domination(True, weights=tuple(Fraction(int(s == e)) for s in S))
    if cone is Cone.ORTHANT:
        for t in S:
            if all(a >= b for a, b in zip(t, e)):
                return Domination(True, weights=tuple(Fraction(int(s == t)) for s in S))
    for k in range(d):
        col = [s[k] for s in S]
        if e[k] > max(col):
            unit = tuple(int(i == k) for i in range(d))
            return Domination(False, point=unit)
        if cone is Cone.FULL and e[k] < min(col):
            unit = tuple(-int(i == k) for i in range(d))
            return Domination(False, point=unit)

    m = len(S)
    # primal: lambda >= 0, sum lambda = 1, sum lambda s (= or >=) e
    if cone is Cone.FULL:
        A_eq = [[1] * m] + [[s[k] for s in S] for k in range(d)]
        res = linprog([0] * m, A_eq=A_eq, b_eq=[1] + list(e), phase_one_only=True)
    else:
        A_eq = [[1] * m + [0] * d] + [
            [s[k] for s in S] + [-int(j == k) for j in range(d)] for k in range(d)
        ]
        res = linprog([0] * (m + d), A_eq=A_eq, b_eq=[1] + list(e), phase_one_only=True)
    if res.status != INFEASIBLE:
        weights = tuple(res.x[:m])
        combo = [sum(w * s[k] for w, s in zip(weights, S)) for k in range(d)]
        if cone is Cone.FULL:
            assert combo == list(e)
        else:
            assert all(c >= v for c, v in zip(combo, e))
        return Domination(True, weights=weights)
    if not certificate:
        return Domination(False)
    return Domination(False, point=_separate(e, S, cone))


def _separate(e, S, cone):
    """Point of the cone where ``<e,x>`` strictly exceeds every ``<s,x>``."""
    d = len(e)
    if cone is Cone.FULL:
        # x = xp - xn in [-1,1]^d; t = tp - tn; minimize -(e.x - t)
        c = [-v for v in e] + list(e) + [1, -1]
        A_ub = [list(s) + [-v for v in s] + [-1, 1] for s in S]
        b_ub = [0] * len(S)
        for k in range(2 * d):
            A_ub.append([int(j == k) for j in range(2 * d)] + [0, 0])
            b_ub.append(1)
        res = linprog(c, A_ub=A_ub, b_ub=b_ub)
        x = tuple(res.x[k] - res.x[d + k] for k in range(d))
    else:
        c = [-v for v in e] + [1, -1]
        A_ub = [list(s) + [-1, 1] for s in S] + [[1] * d + [0, 0]]
        b_ub = [0] * len(S) + [1]
        res = linprog(c, A_ub=A_ub, b_ub=b_ub)
        x = tuple(res.x[:d])
    assert res.objective < 0, "primal infeasible but no separating point found"
    x = _normalize_point(x)
    assert _dot(e, x) > max(_dot(s, x) for s in S)
    return x


def _normalize_point(x):
    return tuple(v.numerator if isinstance(v, Fraction) and v.denominator == 1 else v for v in x)


def integer_point(x: Sequence) -> tuple:
    """Scale a rational point to the smallest positive integer multiple."""
    den = 1
    for v in x:
        den = math.lcm(den, Fraction(v).denominator)
    return tuple(int(Fraction(v) * den) for v in x)


# -- canonical form and equivalence ----------------------------------------

def canonicalize(p: MaxPlusPoly, cone: Cone) -> MaxPlusPoly:
    """Drop every monomial dominated by the remaining ones over ``cone``.

    The result is the vertex set of the (down-closed, for the orthant) convex
    hull, hence independent of the removal order.
    """
    current = set(p.monomials)
    for m in sorted(p.monomials, reverse=True):
        rest = current - {m}
        if rest and dominated(m, rest, cone, certificate=False):
            current = rest
    return MaxPlusPoly(p.coords, frozenset(current))


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    point: Optional[tuple] = None
    values: Optional[tuple] = None  # (p(point), q(point)) when inequivalent

    def __bool__(self):
        return self.equivalent


def equivalent(p: MaxPlusPoly, q: MaxPlusPoly, cone: Cone) -> Equivalence:
    """Decide whether ``p`` and ``q`` agree everywhere on ``cone``.

    On failure the returned point separates the two functions.
    """
    _check_basis(p, q)
    if p.monomials == q.monomials:
        return Equivalence(True)
    if p.is_bottom or q.is_bottom:
        point = (0,) * len(p.coords)
        return Equivalence(False, point, (p.evaluate(point), q.evaluate(point)))
    for a, b in ((p, q), (q, p)):
        for e in sorted(a.monomials - b.monomials, reverse=True):
            dom = dominated(e, b.monomials, cone)
            if not dom:
                point = dom.point
                vals = (p.evaluate(point), q.evaluate(point))
                assert vals[0] != vals[1]
                return Equivalence(False, point, vals)
    return Equivalence(True)


# -- symbolic word evaluations --------------------------------------------

def bicyclic_basis(variables: Sequence[str]) -> tuple:
    return tuple(Coordinate(v, s) for v in variables for s in ("a", "b"))


def bicyclic_value_polys(w: Sequence[str], coords: Optional[Sequence[Coordinate]] = None,
                         canonical: bool = True) -> tuple:
    """Normal-form exponents ``(B-exponent, A-exponent)`` of ``w`` as polynomials.

    Letter ``x`` is sent to ``B^{a_x} A^{b_x}``.  Folding in a letter maps
    the pair ``(P, P + D)`` to ``(max(P, a_x - D), new P + D + b_x - a_x)``,
    where ``D`` is the running sum of ``b - a``.
    """
    if not w:
        raise ValueError("empty word")
    if coords is None:
        seen = dict.fromkeys(w)
        coords = bicyclic_basis(list(seen))
    coords = tuple(coords)
    index = {c: i for i, c in enumerate(coords)}
    d = len(coords)
    try:
        slots = {x: (index[Coordinate(x, "a")], index[Coordinate(x, "b")]) for x in set(w)}
    except KeyError as exc:
        raise BasisMismatch(f"basis lacks coordinate {exc.args[0]}") from None
    P = {(0,) * d}
    D = [0] * d
    for x in w:
        ia, ib = slots[x]
        form = [-v for v in D]
        form[ia] += 1
        P.add(tuple(form))
        D[ib] += 1
        D[ia] -= 1
    pB = MaxPlusPoly(coords, frozenset(P))
    if canonical:
        pB = canonicalize(pB, Cone.ORTHANT)
    pA = pB.shifted(D)
    return pB, pA


def u2_basis(variables: Sequence[str], diag_classes: Optional[Sequence[Sequence[str]]] = None):
    """Coordinates for symbolic 2x2 upper-triangular matrices.

    Returns ``(coords, symbols)`` where ``symbols[x]`` gives the indices of
    the a (1,1), b (1,2) and c (2,2) entries of ``x``.  Variables sharing a
    diagonal class share their a and c coordinates.
    """
    rep = {v: v for v in variables}
    for cls in diag_classes or ():
        cls = list(cls)
        for v in cls:
            rep[v] = cls[0]
    coords: list = []
    index: dict = {}

    def idx(c):
        if c not in index:
            index[c] = len(coords)
            coords.append(c)
        return index[c]

    symbols = {}
    for v in variables:
        r = rep[v]
        symbols[v] = (idx(Coordinate(r, "a")), idx(Coordinate(v, "b")), idx(Coordinate(r, "c")))
    return tuple(coords), symbols


def u2_entry_polys(w: Sequence[str], coords: Optional[tuple] = None, symbols: Optional[dict] = None,
                   diag_classes=None) -> tuple:
    """Polynomials of the (1,1), (1,2), (2,2) entries of the product along ``w``."""
    if not w:
        raise ValueError("empty word")
    if coords is None or symbols is None:
        coords, symbols = u2_basis(list(dict.fromkeys(w)), diag_classes)
    d = len(coords)
    a_tot = [0] * d
    c_tot = [0] * d
    for x in w:
        ia, _, ic = symbols[x]
        a_tot[ia] += 1
        c_tot[ic] += 1
    p12 = set()
    prefix = [0] * d
    suffix = list(c_tot)
    for x in w:
        ia, ib, ic = symbols[x]
        suffix[ic] -= 1
        m = [p + s for p, s in zip(prefix, suffix)]
        m[ib] += 1
        p12.add(tuple(m))
        prefix[ia] += 1
    return (
        MaxPlusPoly(coords, frozenset([tuple(a_tot)])),
        MaxPlusPoly(coords, frozenset(p12)),
        MaxPlusPoly(coords, frozenset([tuple(c_tot)])),
    )

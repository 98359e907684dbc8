"""The bicyclic monoid <A, B | AB = 1>.

Elements are kept in the normal form ``B^a A^b`` and stored as the pair
``(a, b)``.
"""

from __future__ import annotations

import random
import re
from collections import Counter
from functools import reduce
from typing import Mapping, NamedTuple, Optional, Sequence

import numpy as np

from .words import Identity, ordered_content


class BicyclicElement(NamedTuple):
    a: int  # exponent of B
    b: int  # exponent of A

    def __mul__(self, other):
        if not isinstance(other, BicyclicElement):
            return NotImplemented
        return b_mul(self, other)

    def __str__(self):
        return format_element(self)

    def as_string(self) -> str:
        return "B" * self.a + "A" * self.b


ONE = BicyclicElement(0, 0)
GEN_A = BicyclicElement(0, 1)
GEN_B = BicyclicElement(1, 0)


def b_mul(p: BicyclicElement, q: BicyclicElement) -> BicyclicElement:
    a, b = p
    c, d = q
    return BicyclicElement(a + max(c - b, 0), d + max(b - c, 0))


def b_eval(w: Sequence[str], assignment: Mapping[str, BicyclicElement]) -> BicyclicElement:
    try:
        images = [assignment[x] for x in w]
    except KeyError as exc:
        raise KeyError(f"variable {exc.args[0]!r} has no image") from None
    return reduce(b_mul, images, ONE)


def rewrite_oracle(s: str) -> BicyclicElement:
    """Normal form of a string over {A, B}: delete ``AB`` factors until none remain."""
    if set(s) - {"A", "B"}:
        raise ValueError(f"not a string over A, B: {s!r}")
    while "AB" in s:
        s = s.replace("AB", "", 1)
    a = len(s) - len(s.lstrip("B"))
    return BicyclicElement(a, len(s) - a)


_ELEM_RE = re.compile(r"^\s*(?:B\^(\d+))?\s*(?:A\^(\d+))?\s*$")


def parse_element(text: str) -> BicyclicElement:
    if text.strip() == "1":
        return ONE
    m = _ELEM_RE.match(text)
    if not m or (m.group(1) is None and m.group(2) is None):
        raise ValueError(f"bad bicyclic element {text!r}; expected 'B^a A^b' or '1'")
    return BicyclicElement(int(m.group(1) or 0), int(m.group(2) or 0))


def format_element(e: BicyclicElement) -> str:
    if e == ONE:
        return "1"
    return f"B^{e.a} A^{e.b}"


def separates(identity: Identity, assignment: Mapping[str, BicyclicElement]) -> bool:
    return b_eval(identity.lhs, assignment) != b_eval(identity.rhs, assignment)


def imbalance_witness(identity: Identity) -> Optional[dict]:
    """``x -> A`` for a variable occurring unequally often, others ``-> 1``."""
    cl, cr = Counter(identity.lhs), Counter(identity.rhs)
    for x in ordered_content(identity.lhs, identity.rhs):
        if cl[x] != cr[x]:
            return {y: (GEN_A if y == x else ONE) for y in ordered_content(identity.lhs, identity.rhs)}
    return None


def random_falsify(identity: Identity, exponent_bound: int = 5, trials: int = 1000,
                   seed: int = 0) -> Optional[dict]:
    """Search for a separating assignment with exponents in ``[0, exponent_bound]``.

    Trial ``i`` draws from ``random.Random(f"{seed}:{i}")`` (Mersenne Twister),
    so trials can be sharded without changing the outcome.
    """
    variables = ordered_content(identity.lhs, identity.rhs)
    for i in range(trials):
        rng = random.Random(f"{seed}:{i}")
        phi = {
            x: BicyclicElement(rng.randint(0, exponent_bound), rng.randint(0, exponent_bound))
            for x in variables
        }
        if separates(identity, phi):
            return phi
    return None


# -- batch evaluation ------------------------------------------------------

def batch_b_exponents(words: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """B-exponents of many words at many integer points.

    ``words`` is an (W, L) array of variable indices; ``a`` and ``b`` are
    (P, k) arrays holding each variable's image ``B^a A^b`` per point.
    Returns a (W, P) int64 array.
    """
    W = words.shape[0]
    out = np.empty((W, a.shape[0]), dtype=np.int64)
    for p in range(a.shape[0]):
        av = a[p][words]
        delta = b[p][words] - av
        before = np.cumsum(delta, axis=1) - delta
        out[:, p] = np.maximum((av - before).max(axis=1), 0)
    return out


def fingerprint_points(k: int, length: int, count: int = 40, seed: int = 20170) -> tuple:
    rng = np.random.default_rng(seed)
    hi = 3 * max(length, 1)
    return (rng.integers(0, hi + 1, size=(count, k), dtype=np.int64),
            rng.integers(0, hi + 1, size=(count, k), dtype=np.int64))

"""Identity checking for the bicyclic monoid and for U_2 over the tropical semiring.

Every ``fails`` verdict carries an assignment that has been re-evaluated
and separates the two sides.  ``holds`` verdicts from the exact procedures
rest on the convex-domination tests of :mod:`tropid.polyfun`.
"""

from __future__ import annotations

import math
import random
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from . import words as W
from .bicyclic import (
    BicyclicElement,
    batch_b_exponents,
    b_eval,
    fingerprint_points,
    format_element,
    imbalance_witness,
    random_falsify,
    separates,
)
from .polyfun import (
    Cone,
    bicyclic_basis,
    bicyclic_value_polys,
    equivalent,
    integer_point,
    u2_basis,
    u2_entry_polys,
)
from .tropical import NEG_INF, TropMatrix, eval_word_matrix, format_matrix, parse_matrix
from .words import Identity

HOLDS = "holds"
FAILS = "fails"
EXACT = "exact"
FALSIFIER = "falsifier"

DEFAULT_PARTNER_CAP = 12
DEFAULT_REPLAY_CAP = 8
U2_EXACT_MAX_COORDS = 15

VERDICT_SCHEMA = {
    "type": "object",
    "properties": {
        "status": {"enum": [HOLDS, FAILS]},
        "method": {"enum": [EXACT, FALSIFIER]},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {"type": "object", "additionalProperties": {"type": "string"}},
            ]
        },
    },
    "required": ["status", "method", "witness"],
    "additionalProperties": False,
}


class CapExceeded(RuntimeError):
    """An enumeration was refused because it exceeds its configured cap."""


@dataclass
class Verdict:
    status: str
    method: str = EXACT
    witness: Optional[dict] = None
    monoid: str = "bicyclic"

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def __bool__(self):
        return self.holds

    def witness_text(self) -> Optional[dict]:
        if self.witness is None:
            return None
        fmt = format_element if self.monoid == "bicyclic" else format_matrix
        return {x: fmt(v) for x, v in self.witness.items()}

    def to_json(self) -> dict:
        return {"status": self.status, "method": self.method, "witness": self.witness_text()}


def verdict_from_json(data: dict, monoid: str = "bicyclic") -> Verdict:
    from .bicyclic import parse_element

    witness = data.get("witness")
    if witness is not None:
        parse = parse_element if monoid == "bicyclic" else parse_matrix
        witness = {x: parse(v) for x, v in witness.items()}
    return Verdict(data["status"], data["method"], witness, monoid)


# -- bicyclic monoid --------------------------------------------------------

@lru_cache(maxsize=200_000)
def _bicyclic_polys(w: tuple, coords: tuple):
    return bicyclic_value_polys(w, coords)


def _point_assignment(variables, point) -> dict:
    pt = integer_point(point)
    return {x: BicyclicElement(pt[2 * i], pt[2 * i + 1]) for i, x in enumerate(variables)}


def holds_bicyclic(identity: Identity) -> Verdict:
    """Exact decision of whether the bicyclic monoid satisfies ``identity``."""
    lhs, rhs = identity
    if not lhs or not rhs:
        raise ValueError("identity sides must be nonempty")
    if lhs == rhs:
        return Verdict(HOLDS)
    phi = imbalance_witness(identity)
    if phi is not None:
        assert separates(identity, phi)
        return Verdict(FAILS, EXACT, phi)
    variables = W.ordered_content(lhs, rhs)
    coords = bicyclic_basis(variables)
    L = _bicyclic_polys(tuple(lhs), coords)
    R = _bicyclic_polys(tuple(rhs), coords)
    for p, q in zip(L, R):
        eq = equivalent(p, q, Cone.ORTHANT)
        if not eq:
            phi = _point_assignment(variables, eq.point)
            if not separates(identity, phi):
                phi = _search_near(identity, variables, eq.point)
            return Verdict(FAILS, EXACT, phi)
    return Verdict(HOLDS)


def _search_near(identity, variables, point):
    # separating points are strict, so this is a safety net only
    base = integer_point(point)
    rng = random.Random(repr(base))
    for scale in range(1, 50):
        jitter = [max(0, v * scale + rng.randint(-1, 1)) for v in base]
        phi = {x: BicyclicElement(jitter[2 * i], jitter[2 * i + 1]) for i, x in enumerate(variables)}
        if separates(identity, phi):
            return phi
    phi = random_falsify(identity, exponent_bound=4 * len(identity.lhs), trials=100_000)
    if phi is None:
        raise AssertionError(f"no separating assignment found for {identity}")
    return phi


# -- U_2 over the tropical semiring -------------------------------------------

def _u2_matrices(variables, symbols, values) -> dict:
    return {
        x: TropMatrix([[values[symbols[x][0]], values[symbols[x][1]]],
                       [NEG_INF, values[symbols[x][2]]]])
        for x in variables
    }


def _u2_separates(identity, phi) -> bool:
    return eval_word_matrix(identity.lhs, phi) != eval_word_matrix(identity.rhs, phi)


def random_falsify_u2(identity: Identity, diag_classes=None, trials: int = 1000, seed: int = 0,
                      bound: int = 6, bottom_rate: float = 0.2) -> Optional[dict]:
    """Random integer matrix assignments into U_2, some entries set to -inf."""
    variables = W.ordered_content(*identity)
    coords, symbols = u2_basis(variables, diag_classes)
    for i in range(trials):
        rng = random.Random(f"{seed}:{i}")
        values = [NEG_INF if rng.random() < bottom_rate else rng.randint(-bound, bound)
                  for _ in coords]
        phi = _u2_matrices(variables, symbols, values)
        if _u2_separates(identity, phi):
            return phi
    return None


def _support_mask(m) -> int:
    return sum(1 << i for i, k in enumerate(m) if k)


def holds_u2t(identity: Identity, diag_classes: Optional[Sequence[Sequence[str]]] = None,
              integer: bool = False, trials: int = 10_000, seed: int = 0) -> Verdict:
    """Decide whether U_2(T) (or U_2(Z-bar) with ``integer``) satisfies ``identity``.

    With ``diag_classes`` the check ranges only over assignments where the
    variables of each class share their diagonal entries.  Every -inf
    support pattern of the symbolic coordinates is examined; within a
    pattern the surviving monomials of each entry must have equal convex
    hulls.  Above ``U2_EXACT_MAX_COORDS`` coordinates the randomized
    falsifier is used instead and the verdict says so.
    """
    lhs, rhs = identity
    if not lhs or not rhs:
        raise ValueError("identity sides must be nonempty")
    monoid = "u2z" if integer else "u2t"
    variables = W.ordered_content(lhs, rhs)
    coords, symbols = u2_basis(variables, diag_classes)
    d = len(coords)
    if lhs == rhs:
        return Verdict(HOLDS, EXACT, None, monoid)
    if d > U2_EXACT_MAX_COORDS:
        phi = random_falsify_u2(identity, diag_classes, trials=trials, seed=seed)
        if phi is not None:
            return Verdict(FAILS, FALSIFIER, phi, monoid)
        return Verdict(HOLDS, FALSIFIER, None, monoid)

    L = u2_entry_polys(lhs, coords, symbols)
    R = u2_entry_polys(rhs, coords, symbols)
    entries = []
    for p, q in zip(L, R):
        entries.append((
            [(m, _support_mask(m)) for m in p.monomials],
            [(m, _support_mask(m)) for m in q.monomials],
            p,
        ))
    seen = set()
    for dead in sorted(range(1 << d), key=lambda v: (bin(v).count("1"), v)):
        for k, (lm, rm, proto) in enumerate(entries):
            ls = frozenset(m for m, mask in lm if not mask & dead)
            rs = frozenset(m for m, mask in rm if not mask & dead)
            if ls == rs or (k, ls, rs) in seen:
                continue
            seen.add((k, ls, rs))
            live = sorted({i for m in ls | rs for i, v in enumerate(m) if v})
            p = type(proto)(coords, ls).project(live)
            q = type(proto)(coords, rs).project(live)
            eq = equivalent(p, q, Cone.FULL)
            if eq:
                continue
            values = [NEG_INF if dead >> i & 1 else 0 for i in range(d)]
            for i, v in zip(live, integer_point(eq.point)):
                values[i] = v
            phi = _u2_matrices(variables, symbols, values)
            assert _u2_separates(identity, phi), "separating point failed re-verification"
            return Verdict(FAILS, EXACT, phi, monoid)
    return Verdict(HOLDS, EXACT, None, monoid)


def holds(identity: Identity, monoid: str = "bicyclic", diag_classes=None) -> Verdict:
    if monoid == "bicyclic":
        if diag_classes:
            raise ValueError("diagonal classes only apply to matrix monoids")
        return holds_bicyclic(identity)
    if monoid in ("u2t", "u2z"):
        return holds_u2t(identity, diag_classes, integer=(monoid == "u2z"))
    raise ValueError(f"unknown monoid {monoid!r}")


# -- partners and isoterms ----------------------------------------------------

@dataclass
class PartnerSearch:
    word: tuple
    partners: list
    candidates: int
    exact_checks: int
    strategy: str
    space: int  # number of balanced rearrangements of the word

    @property
    def is_isoterm(self) -> bool:
        return self.partners == [self.word]


def multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    out = math.factorial(sum(counts))
    for c in counts:
        out //= math.factorial(c)
    return out


def _encode(words_: Sequence[Sequence[str]], variables: Sequence[str]) -> np.ndarray:
    idx = {x: i for i, x in enumerate(variables)}
    return np.array([[idx[x] for x in w] for w in words_], dtype=np.int64).reshape(len(words_), -1)


def fingerprints(words_: Sequence[Sequence[str]], variables: Sequence[str]) -> np.ndarray:
    """Values of each word's B-exponent at fixed pseudo-random points.

    Unequal rows are exact refutations: the differing point is a separating
    assignment.  Equal rows are only candidates for the exact procedure.
    """
    length = max(len(w) for w in words_)
    a, b = fingerprint_points(len(variables), length)
    return batch_b_exponents(_encode(words_, variables), a, b)


def _check_cap(u, max_len):
    if len(u) > max_len:
        raise CapExceeded(f"word length {len(u)} exceeds the partner cap {max_len}")


def partner_search(u: Sequence[str], max_len: int = DEFAULT_PARTNER_CAP,
                   strategy: str = "auto") -> PartnerSearch:
    """All words ``v`` with the bicyclic monoid satisfying ``u = v``.

    ``exhaustive`` runs every balanced rearrangement of ``u`` through the
    fingerprint filter and then the exact check.  ``pruned`` (for three or
    more variables) only builds rearrangements whose two-variable deletions
    are partners of the corresponding deletions of ``u``; this is necessary
    because a monoid identity survives deleting variables.
    """
    u = tuple(u)
    if not u:
        raise ValueError("empty word")
    _check_cap(u, max_len)
    counts = Counter(u)
    space = multinomial(counts.values())
    variables = W.ordered_content(u)
    if strategy == "auto":
        strategy = "pruned" if len(variables) >= 3 else "exhaustive"
    if len(variables) == 1:
        return PartnerSearch(u, [u], 1, 0, strategy, 1)
    if strategy == "exhaustive":
        cands = list(W.multiset_permutations(u))
        fp = fingerprints(cands + [u], variables)
        target = fp[-1]
        hits = [cands[i] for i in np.nonzero((fp[:-1] == target).all(axis=1))[0]]
    elif strategy == "pruned":
        cands = _pair_consistent(u, variables, max_len)
        hits = cands
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    partners = sorted(v for v in hits if holds_bicyclic(Identity(u, v)).holds)
    return PartnerSearch(u, partners, len(cands), len(hits), strategy, space)


def _pair_consistent(u, variables, max_len) -> list:
    prefixes = {}
    for x, y in combinations(variables, 2):
        sub = W.delete(u, (x, y))
        allowed = _pair_partners(sub, max_len)
        prefixes[frozenset((x, y))] = {v[:i] for v in allowed for i in range(len(v) + 1)}
    remaining = Counter(u)
    current = {key: () for key in prefixes}
    out, v = [], []
    by_var = {x: [k for k in prefixes if x in k] for x in variables}
    n = len(u)

    def rec():
        if len(v) == n:
            out.append(tuple(v))
            return
        for x in variables:
            if not remaining[x]:
                continue
            saved = []
            ok = True
            for key in by_var[x]:
                nxt = current[key] + (x,)
                if nxt not in prefixes[key]:
                    ok = False
                    break
                saved.append((key, current[key]))
                current[key] = nxt
            if ok:
                remaining[x] -= 1
                v.append(x)
                rec()
                v.pop()
                remaining[x] += 1
            for key, old in saved:
                current[key] = old

    rec()
    return sorted(out)


def _pair_partners(sub: tuple, max_len: int) -> list:
    canon = W.rename_canonical(sub)
    back = dict(zip(canon, sub))
    return [tuple(back[x] for x in v) for v in _canonical_partners(canon, max_len)]


@lru_cache(maxsize=None)
def _canonical_partners(canon: tuple, max_len: int) -> tuple:
    return tuple(partner_search(canon, max_len, "exhaustive").partners)


def partners_bicyclic(u: Sequence[str], max_len: int = DEFAULT_PARTNER_CAP) -> list:
    return partner_search(u, max_len).partners


def is_isoterm_bicyclic(u: Sequence[str], max_len: int = DEFAULT_PARTNER_CAP) -> bool:
    return partners_bicyclic(u, max_len) == [tuple(u)]


# -- scans ------------------------------------------------------------------

@dataclass
class ShleiferResult:
    words: int
    pairs_checked: int
    exact_checks: int
    holding: list
    representatives: list


def _swap_letters(w):
    return tuple({"x": "y", "y": "x"}[c] for c in w)


def _orbit_rep(u, v):
    options = [tuple(sorted((u, v))), tuple(sorted((_swap_letters(u), _swap_letters(v))))]
    return min(options)


def shleifer_scan() -> ShleiferResult:
    """All identities between balanced length-10 words over {x, y} that hold."""
    space = list(W.multiset_permutations(tuple("xxxxxyyyyy")))
    fp = fingerprints(space, ("x", "y"))
    keys = [row.tobytes() for row in fp]
    holding, exact, pairs = [], 0, 0
    for i, j in combinations(range(len(space)), 2):
        pairs += 1
        if keys[i] != keys[j]:
            continue
        exact += 1
        if holds_bicyclic(Identity(space[i], space[j])).holds:
            holding.append(Identity(space[i], space[j]))
    reps = sorted({_orbit_rep(*ident) for ident in holding})
    return ShleiferResult(len(space), pairs, exact, holding, [Identity(*r) for r in reps])


def integer_partitions(n: int, largest: Optional[int] = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - k, k):
            yield (k,) + rest


def _class_scan(counts: tuple) -> dict:
    variables = W.canonical_names(len(counts))
    base = tuple(x for x, c in zip(variables, counts) for _ in range(c))
    space = list(W.multiset_permutations(base))
    groups = defaultdict(list)
    if len(space) > 1:
        fp = fingerprints(space, variables)
        for w, row in zip(space, fp):
            groups[row.tobytes()].append(w)
    found, exact = [], 0
    for members in groups.values():
        for u, v in combinations(members, 2):
            exact += 1
            if holds_bicyclic(Identity(u, v)).holds:
                found.append(Identity(u, v))
    n = len(space)
    return {"counts": counts, "words": n, "pairs": n * (n - 1) // 2,
            "exact_checks": exact, "identities": found}


@dataclass
class IsotermScan:
    max_len: int
    classes: int
    words: int
    pairs: int
    exact_checks: int
    identities: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.identities


def _pmap(fn, items, jobs):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(i) for i in items]


def short_isoterm_scan(max_len: int = 8, jobs: int = 1) -> IsotermScan:
    """Look for nontrivial identities of the bicyclic monoid with sides of length <= ``max_len``.

    Unbalanced identities fail outright, so each occurrence-count class
    (up to renaming of variables) is scanned on its own.
    """
    classes = [c for n in range(1, max_len + 1) for c in integer_partitions(n)]
    results = _pmap(_class_scan, classes, jobs)
    return IsotermScan(
        max_len, len(classes), sum(r["words"] for r in results), sum(r["pairs"] for r in results),
        sum(r["exact_checks"] for r in results), [i for r in results for i in r["identities"]],
    )


# -- sufficient-condition checks -----------------------------------------------

@dataclass
class ConditionReport:
    tag: str
    bounds: dict
    cases: int
    failures: list
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "tag": self.tag, "bounds": self.bounds, "cases": self.cases,
            "failures": [str(f) for f in self.failures], "details": self.details,
            "passed": self.passed,
        }


def _isoterm_failure(u, max_len):
    s = partner_search(u, max_len)
    if s.is_isoterm:
        return None
    return f"{W.format_word(u)} has partners {[W.format_word(v) for v in s.partners]}"


def check_condition(tag: str, max_len: int = DEFAULT_PARTNER_CAP, jobs: int = 1) -> ConditionReport:
    if tag == "i":
        cases = list(W.restricted_growth_words(5, min_vars=2))
        bounds = {"length": 5, "min_vars": 2}
        details = {}
    elif tag == "ii":
        target = W.ADJAN.lhs
        seen = {}
        factorizations = 0
        for u, theta in W.preimages(target, max_vars=len(target)):
            factorizations += 1
            if len(set(u)) >= 3:
                seen.setdefault(u, theta)
        cases = sorted(seen)
        bounds = {"target": W.format_word(target), "min_vars": 3}
        details = {"preimages": factorizations, "distinct_words": len(cases)}
    elif tag == "iii":
        cases = W.condition_iii_words()
        bounds = {"exponents": [list(e) for e in W.CONDITION_III_EXPONENTS], "z_equal": [True, False]}
        details = {}
    else:
        raise ValueError(f"unknown condition tag {tag!r}")
    for u in cases:
        _check_cap(u, max_len)
    results = _pmap(partial(_isoterm_failure, max_len=max_len), cases, jobs)
    failures = [r for r in results if r]
    return ConditionReport(tag, bounds, len(cases), failures, details)


# -- replaying the proof for concrete n -------------------------------------

SHORT_FORMS = {tuple("xy"), tuple("xyx"), tuple("xyxxy")}
_CASE_EXPONENTS = {1: (1, 0, 0), 2: (0, 0, 1), 3: (0, 1, 0)}


def _letter_offsets(u, theta):
    offs, pos = [], 0
    for x in u:
        offs.append(pos)
        pos += len(theta[x])
    return offs


def _covering_letter(u, theta, offs, k):
    """Letter of ``u`` whose image covers positions k and k+1, if any."""
    for x, o in zip(u, offs):
        if o <= k and k + 1 < o + len(theta[x]):
            return x
    return None


def _match_condition_iii(w):
    canon = W.rename_canonical(w)
    for e in W.CONDITION_III_EXPONENTS:
        for same in (True, False):
            if W.rename_canonical(W.condition_iii_word(*e, same_z=same)) == canon:
                return e, same
    return None


def classify_preimage(u: Sequence[str], theta: dict, n: int, max_len: int = DEFAULT_PARTNER_CAP):
    """Check one applicable word against the case analysis for ``U_n``.

    Returns ``(labels, problems)``: the proof steps used for the adjacent
    pairs of ``U_n``, and anything that fit no step.
    """
    u = tuple(u)
    U = W.adjan_family(n).lhs
    if W.substitute(u, theta) != U:
        return set(), [f"theta({W.format_word(u)}) is not U_{n}"]
    theta = {x: tuple(theta[x]) for x in set(u)}
    labels, problems = set(), []
    if len(set(u)) == 1:
        # x^k has no other balanced rearrangement, so it is an isoterm
        labels.add("single-variable")
        return labels, problems
    pairs, selfs = W.adjacent_pairs(U)
    index = {f"x{i}": i for i in range(1, n + 1)}
    adjan = W.rename_canonical(W.ADJAN.lhs)

    for p in sorted(selfs):
        X = W.preimage_vars(theta, {p})
        if len(X) < 2:
            continue
        w = W.delete(u, X)
        if len(w) <= 5 and is_isoterm_bicyclic(w, max_len):
            labels.add("cond-i")
        else:
            problems.append(f"self-adjacent {p}: {W.format_word(w)} not a short isoterm")

    for pair in sorted(pairs, key=lambda s: sorted(index[v] for v in s)):
        p, q = sorted(pair, key=index.get)
        X = W.preimage_vars(theta, pair)
        if len(X) < 2:
            continue
        w = W.delete(u, X)
        if len(X) > 2:
            image = W.substitute(w, {x: W.delete(theta[x], pair) for x in X})
            if (image == W.delete(U, pair) and W.rename_canonical(image) == adjan
                    and is_isoterm_bicyclic(w, max_len)):
                labels.add("cond-ii")
            else:
                problems.append(f"pair {p},{q}: {W.format_word(w)} fails the condition (ii) step")
            continue
        if len(w) < 10:
            if W.rename_canonical(w) in SHORT_FORMS and is_isoterm_bicyclic(w, max_len):
                labels.add("short")
            else:
                problems.append(f"pair {p},{q}: short deletion {W.format_word(w)} not in xy, xyx, xyxxy")
            continue
        if len(w) > 10:
            problems.append(f"pair {p},{q}: deletion longer than 10")
            continue
        label = _classify_long(u, theta, n, X, p, q, index, U)
        if label.startswith("case"):
            labels.add(label)
        else:
            problems.append(f"pair {p},{q}: {label}")
    return labels, problems


def _classify_long(u, theta, n, X, p, q, index, U):
    if sorted(len(theta[x]) for x in X) != [1, 1]:
        return "length-10 deletion but images are not single letters"
    i, i2 = index[p], index[q]
    if i2 == i + 1 and i <= n / 2:
        case, js = 1, [j for j in range(1, n) if j > n / 2]
    elif i2 == i + 1 and n / 2 < i < n:
        case, js = 2, [j for j in range(1, n) if j <= n / 2]
    elif (i, i2) == (1, n):
        case, js = 3, list(range(2, n - 1))
    else:
        return "pair is not adjacent in U_n"
    offs = _letter_offsets(u, theta)
    for j in js:
        factor = (f"x{j + 1}", f"x{j}")
        hits = [k for k in range(len(U) - 1) if U[k : k + 2] == factor]
        letters = [_covering_letter(u, theta, offs, k) for k in hits]
        if len(hits) != 2 or None in letters:
            continue
        w = W.delete(u, set(X) | set(letters))
        match = _match_condition_iii(w)
        if match is not None:
            e, same = match
            tag = "" if e == _CASE_EXPONENTS[case] else f"-as{e}"
            return f"case-{case}{tag}"
    return f"case {case}: no letter z yields a condition (iii) deletion"


def theorem_replay(n: int, max_vars: Optional[int] = None, cap: int = DEFAULT_REPLAY_CAP) -> ConditionReport:
    """Enumerate words with few variables applicable to ``U_n`` and classify each."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the replay cap {cap}")
    if max_vars is None:
        max_vars = max(2, math.ceil(n / 2) - 1)
    U = W.adjan_family(n).lhs
    counts = Counter()
    failures, total = [], 0
    for u, theta in W.preimages(U, max_vars):
        total += 1
        labels, problems = classify_preimage(u, theta, n)
        if problems:
            failures.append((W.format_word(u), {x: W.format_word(v, True) for x, v in theta.items()}, problems))
        for lab in labels:
            counts[lab] += 1
        counts[f"vars={len(set(u))}"] += 1
    return ConditionReport("replay", {"n": n, "max_vars": max_vars}, total, failures,
                           {"labels": dict(sorted(counts.items()))})


# -- the embedding of the bicyclic monoid -----------------------------------------

EMBED_A = TropMatrix([[-1, 1], [NEG_INF, 1]])
EMBED_B = TropMatrix([[1, 1], [NEG_INF, -1]])


@dataclass
class EmbeddingReport:
    bound: int
    unit: TropMatrix
    checks: dict
    distinct: int

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"bound": self.bound, "unit": format_matrix(self.unit), "checks": self.checks,
                "distinct": self.distinct, "passed": self.passed}


def verify_embedding(bound: int = 20) -> EmbeddingReport:
    """Check that B^a A^b over the two fixed matrices realises the bicyclic monoid."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    A, B = EMBED_A, EMBED_B
    E = A @ B
    top = 2 * bound
    Apow, Bpow = [E], [E]
    for _ in range(top):
        Apow.append(Apow[-1] @ A)
        Bpow.append(Bpow[-1] @ B)

    def image(e):
        return Bpow[e.a] @ Apow[e.b]

    rng = range(bound + 1)
    elems = [BicyclicElement(a, b) for a in rng for b in rng]
    images = {e: image(e) for e in elems}
    checks = {
        "unit_is_AB": E == TropMatrix([[0, 0], [NEG_INF, 0]]),
        "unit_on_generators": all(E @ M == M and M @ E == M for M in (A, B)),
        "unit_on_products": all(E @ M == M and M @ E == M for M in images.values()),
        "map_one_is_unit": images[BicyclicElement(0, 0)] == E,
        "upper_triangular": all(M.is_upper_triangular() for M in images.values()),
        "integer_entries": all(v is NEG_INF or isinstance(v, int)
                               for M in images.values() for v in M.entries()),
    }
    distinct = len(set(images.values()))
    checks["injective"] = distinct == len(elems)
    products = {}
    mult = True
    for p in elems:
        Mp = images[p]
        for q in elems:
            r = p * q
            if r not in products:
                products[r] = image(r)
            if Mp @ images[q] != products[r]:
                mult = False
    checks["multiplicative"] = mult
    return EmbeddingReport(bound, E, checks, distinct)

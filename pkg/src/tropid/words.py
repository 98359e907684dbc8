"""Words over variable identifiers, identities, deletion and substitution.

A word is a plain ``tuple`` of identifier strings.  Two text syntaxes are
accepted: compact (``xyyx``, one variable per character) and extended
(``"x1 x2 x2 x1"``, quoted and whitespace separated).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence

Word = tuple  # tuple[str, ...]

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_COMPACT_RE = re.compile(r"[A-Za-z]+\Z")

# Letters used when words are renamed into first-occurrence order.
_CANON = "xyztsrqponmlkjihgfedcbawvu"


class WordSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        marker = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {marker}")


class Identity(NamedTuple):
    lhs: Word
    rhs: Word

    @property
    def is_trivial(self) -> bool:
        return self.lhs == self.rhs

    def swapped(self) -> "Identity":
        return Identity(self.rhs, self.lhs)

    def __str__(self):
        return format_identity(self)


@dataclass(frozen=True)
class WordStats:
    content: frozenset
    occ: dict
    length: int


def word(letters: Iterable[str] | str) -> Word:
    """Build a word; a bare string is read in compact form."""
    if isinstance(letters, str):
        return parse_word(letters)
    return tuple(letters)


def _parse_word_at(text: str, offset: int, full: str) -> Word:
    stripped = text.strip()
    lead = offset + (len(text) - len(text.lstrip()))
    if not stripped:
        raise WordSyntaxError("empty word", full, lead)
    quoted = stripped[0] in "\"'"
    if quoted:
        q = stripped[0]
        if len(stripped) < 2 or stripped[-1] != q:
            raise WordSyntaxError("unterminated quoted word", full, lead)
        body, base = stripped[1:-1], lead + 1
    elif any(ch.isspace() for ch in stripped) or not _COMPACT_RE.match(stripped):
        body, base = stripped, lead
        if not any(ch.isspace() for ch in stripped):
            bad = next(i for i, ch in enumerate(stripped) if not ch.isalpha())
            raise WordSyntaxError(
                f"unexpected character {stripped[bad]!r} in compact word", full, lead + bad
            )
    else:
        return tuple(stripped)
    letters = []
    for m in re.finditer(r"\S+", body):
        tok = m.group(0)
        if not _IDENT_RE.match(tok):
            raise WordSyntaxError(f"bad identifier {tok!r}", full, base + m.start())
        letters.append(tok)
    if not letters:
        raise WordSyntaxError("empty word", full, lead)
    return tuple(letters)


def parse_word(text: str) -> Word:
    return _parse_word_at(text, 0, text)


def parse_identity(text: str) -> Identity:
    """Parse ``<word> == <word>``."""
    idx = text.find("==")
    if idx < 0:
        raise WordSyntaxError("expected '=='", text, len(text))
    if text.find("==", idx + 2) >= 0:
        raise WordSyntaxError("more than one '=='", text, text.find("==", idx + 2))
    lhs = _parse_word_at(text[:idx], 0, text)
    rhs = _parse_word_at(text[idx + 2 :], idx + 2, text)
    return Identity(lhs, rhs)


def format_word(w: Sequence[str], extended: Optional[bool] = None) -> str:
    if extended is None:
        extended = any(len(x) != 1 for x in w)
    if extended:
        return '"' + " ".join(w) + '"'
    return "".join(w)


def format_identity(identity: Identity) -> str:
    ext = any(len(x) != 1 for x in identity.lhs + identity.rhs)
    return f"{format_word(identity.lhs, ext)} == {format_word(identity.rhs, ext)}"


# -- basic statistics ------------------------------------------------------

def content(w: Sequence[str]) -> frozenset:
    return frozenset(w)


def occ(x: str, w: Sequence[str]) -> int:
    return sum(1 for a in w if a == x)


def analyze(w: Sequence[str]) -> WordStats:
    counts = Counter(w)
    return WordStats(frozenset(counts), dict(counts), len(w))


def ordered_content(*words: Sequence[str]) -> tuple:
    """Variables in order of first occurrence across ``words``."""
    seen = {}
    for w in words:
        for x in w:
            seen.setdefault(x, None)
    return tuple(seen)


def is_balanced(identity: Identity) -> bool:
    return Counter(identity.lhs) == Counter(identity.rhs)


# -- deletion, substitution -----------------------------------------------

def delete(w: Sequence[str], keep: Iterable[str]) -> Word:
    """Keep only the letters in ``keep``; may return the empty word."""
    keep = set(keep)
    return tuple(x for x in w if x in keep)


def substitute(w: Sequence[str], theta: Mapping[str, Sequence[str]]) -> Word:
    out = []
    for x in w:
        try:
            image = theta[x]
        except KeyError:
            raise KeyError(f"variable {x!r} is not mapped by the substitution") from None
        out.extend(image)
    return tuple(out)


def preimage_vars(theta: Mapping[str, Sequence[str]], targets: Iterable[str]) -> frozenset:
    """Variables whose image meets ``targets``."""
    targets = set(targets)
    return frozenset(x for x, img in theta.items() if targets.intersection(img))


def rename_canonical(w: Sequence[str]) -> Word:
    """Rename variables to x, y, z, ... in order of first occurrence."""
    names = {}
    for x in w:
        if x not in names:
            names[x] = _canon_name(len(names))
    return tuple(names[x] for x in w)


def _canon_name(i: int) -> str:
    return _CANON[i] if i < len(_CANON) else f"v{i}"


def canonical_names(k: int) -> tuple:
    return tuple(_canon_name(i) for i in range(k))


def equal_up_to_renaming(u: Sequence[str], v: Sequence[str]) -> bool:
    return rename_canonical(u) == rename_canonical(v)


# -- adjacency and stability ----------------------------------------------

def adjacent_pairs(w: Sequence[str]) -> tuple[set, set]:
    """Unordered adjacent pairs of distinct variables, and self-adjacent variables."""
    pairs, selfs = set(), set()
    for a, b in zip(w, w[1:]):
        if a == b:
            selfs.add(a)
        else:
            pairs.add(frozenset((a, b)))
    return pairs, selfs


def is_stable(identity: Identity, subset: Iterable[str]) -> bool:
    subset = set(subset)
    return delete(identity.lhs, subset) == delete(identity.rhs, subset)


# -- morphisms ------------------------------------------------------------

def find_morphisms(pattern: Sequence[str], target: Sequence[str], limit: Optional[int] = None) -> list:
    """All nonerasing substitutions mapping ``pattern`` onto ``target``.

    Results come in lexicographic order of the split positions.
    """
    pattern, target = tuple(pattern), tuple(target)
    if not pattern or not target:
        raise ValueError("pattern and target must be nonempty")
    results: list = []
    bindings: dict = {}
    N, P = len(target), len(pattern)

    def need(i):
        return sum(len(bindings[x]) if x in bindings else 1 for x in pattern[i:])

    def rec(i, pos):
        if limit is not None and len(results) >= limit:
            return
        if i == P:
            if pos == N:
                results.append(dict(bindings))
            return
        x = pattern[i]
        if x in bindings:
            img = bindings[x]
            if target[pos : pos + len(img)] == img:
                rec(i + 1, pos + len(img))
            return
        for L in range(1, N - pos + 1):
            bindings[x] = target[pos : pos + L]
            if need(i) <= N - pos:
                rec(i + 1, pos + L)
            del bindings[x]

    rec(0, 0)
    for theta in results:
        assert substitute(pattern, theta) == target
    return results


def preimages(target: Sequence[str], max_vars: int) -> Iterator[tuple]:
    """Enumerate pairs ``(u, theta)`` with ``theta(u) == target``.

    ``u`` uses at most ``max_vars`` variables, named x, y, z, ... in order of
    first occurrence; distinct variables may share an image.
    """
    target = tuple(target)
    N = len(target)
    names = canonical_names(max_vars)
    images: list = []
    u: list = []

    def rec(pos):
        if pos == N:
            yield tuple(u), {names[i]: img for i, img in enumerate(images)}
            return
        for i, img in enumerate(images):
            if target[pos : pos + len(img)] == img:
                u.append(names[i])
                yield from rec(pos + len(img))
                u.pop()
        if len(images) < max_vars:
            for L in range(1, N - pos + 1):
                images.append(target[pos : pos + L])
                u.append(names[len(images) - 1])
                yield from rec(pos + L)
                u.pop()
                images.pop()

    yield from rec(0)


# -- word families ----------------------------------------------------------

ADJAN = Identity(tuple("xyyxxyxyyx"), tuple("xyyxyxxyyx"))
SHLEIFER = Identity(tuple("xyyxxyyxxy"), tuple("xyyxyxyxxy"))


def adjan_family(n: int) -> Identity:
    """The identity obtained from Adjan's by (xy) -> x1..xn, (yx) -> xn..x1."""
    if n < 1:
        raise ValueError("n must be positive")
    up = tuple(f"x{i}" for i in range(1, n + 1))
    down = up[::-1]
    return Identity(up + down + up + up + down, up + down + down + up + down)


def condition_iii_word(i1: int, i2: int, i3: int, same_z: bool = True) -> Word:
    """The 12-letter word x y z^i1 y z^i2 x z^i3 x y x y z1^i1 y z1^i2 x z1^i3."""
    if sorted((i1, i2, i3)) != [0, 0, 1]:
        raise ValueError(f"exponents must be bits summing to 1, got {(i1, i2, i3)}")
    z1 = "z" if same_z else "t"

    def block(z):
        return ("x", "y") + (z,) * i1 + ("y",) + (z,) * i2 + ("x",) + (z,) * i3

    return block("z") + ("x", "y") + block(z1)


CONDITION_III_EXPONENTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def condition_iii_words() -> list:
    return [
        condition_iii_word(*e, same_z=s) for e in CONDITION_III_EXPONENTS for s in (True, False)
    ]


def condition_iii_partner(w: Sequence[str]) -> Word:
    """Swap the ``xy`` after the first half into ``yx`` (the prohibited partner)."""
    w = tuple(w)
    if len(w) != 12:
        raise ValueError("expected a 12-letter condition word")
    return w[:5] + ("y", "x") + w[7:]


# -- enumeration helpers --------------------------------------------------

def multiset_permutations(items: Sequence) -> Iterator[tuple]:
    """Distinct permutations of ``items`` in lexicographic order."""
    a = sorted(items)
    n = len(a)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1 :] = reversed(a[i + 1 :])


def restricted_growth_words(length: int, min_vars: int = 1) -> Iterator[Word]:
    """Words of ``length`` up to renaming (first-occurrence canonical form)."""

    def rec(prefix, k):
        if len(prefix) == length:
            if k >= min_vars:
                yield tuple(_canon_name(i) for i in prefix)
            return
        for i in range(k + 1):
            yield from rec(prefix + [i], max(k, i + 1))

    yield from rec([], 0)

"""Reduced words in free groups and endomorphisms between them.

A letter is a pair ``(symbol, sign)`` with ``sign`` in ``{1, -1}``. Symbols are
opaque hashables: integers ``k`` stand for the free generators ``x_k`` of F_n,
pairs ``(i, j)`` for the pure braid generators ``a_ij``. The same engine serves
both alphabets and every projected quotient.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from .errors import AlphabetError, GraphParseError, WordLengthError

DEFAULT_WORD_LIMIT = 10**6

Letter = tuple  # (symbol, sign)


def _push(stack: list, letter) -> None:
    if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
        stack.pop()
    else:
        stack.append(letter)


class FreeWord:
    """A freely reduced word. Construction always reduces."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable = ()):
        stack: list = []
        for symbol, sign in letters:
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
            _push(stack, (symbol, sign))
        self.letters = tuple(stack)
        self._hash = None

    @classmethod
    def _trusted(cls, letters) -> FreeWord:
        w = cls.__new__(cls)
        w.letters = tuple(letters)
        w._hash = None
        return w

    @classmethod
    def generator(cls, symbol, sign: int = 1) -> FreeWord:
        return cls._trusted(((symbol, sign),))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def __mul__(self, other: FreeWord) -> FreeWord:
        return multiply(self, other)

    def __invert__(self) -> FreeWord:
        return invert(self)

    def __pow__(self, k: int) -> FreeWord:
        base = self if k >= 0 else invert(self)
        out = FreeWord()
        for _ in range(abs(k)):
            out = multiply(out, base)
        return out

    def symbols(self) -> set:
        return {s for s, _ in self.letters}

    def __repr__(self):
        return f"FreeWord({format_word(self)!r})"

    def __str__(self):
        return format_word(self)


EMPTY = FreeWord()


def reduce(raw: Iterable) -> FreeWord:
    """Freely reduce a raw letter sequence."""
    return FreeWord(raw)


def multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    stack = list(u.letters)
    for letter in v.letters:
        _push(stack, letter)
    return FreeWord._trusted(stack)


def invert(u: FreeWord) -> FreeWord:
    return FreeWord._trusted((s, -e) for s, e in reversed(u.letters))


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """``[u, v] = u^-1 v^-1 u v``."""
    return multiply(multiply(invert(u), invert(v)), multiply(u, v))


def conjugate(u: FreeWord, by: FreeWord) -> FreeWord:
    """``by u by^-1``."""
    return multiply(multiply(by, u), invert(by))


def gen(symbol, sign: int = 1) -> FreeWord:
    return FreeWord.generator(symbol, sign)


def product(*words: FreeWord) -> FreeWord:
    stack: list = []
    for w in words:
        for letter in w.letters:
            _push(stack, letter)
    return FreeWord._trusted(stack)


def project(w: FreeWord, keep) -> FreeWord:
    """Delete every letter whose symbol is not in ``keep``, then reduce."""
    keep = set(keep)
    return FreeWord(l for l in w.letters if l[0] in keep)


def exponent_sum(w: FreeWord, symbol) -> int:
    return sum(e for s, e in w.letters if s == symbol)


def exponent_vector(w: FreeWord) -> dict:
    """Nonzero exponent sums, keyed by symbol."""
    sums: dict = {}
    for s, e in w.letters:
        sums[s] = sums.get(s, 0) + e
    return {s: v for s, v in sums.items() if v}


def cyclic_reduce(w: FreeWord) -> FreeWord:
    letters = w.letters
    lo, hi = 0, len(letters) - 1
    while lo < hi and letters[lo][0] == letters[hi][0] and letters[lo][1] == -letters[hi][1]:
        lo += 1
        hi -= 1
    return FreeWord._trusted(letters[lo:hi + 1])


def cyclic_class(w: FreeWord) -> frozenset:
    """All rotations of the cyclic reduction of ``w`` and of ``w^-1``.

    Two words are conjugate up to inversion iff their classes intersect.
    """
    out = set()
    for base in (cyclic_reduce(w), cyclic_reduce(invert(w))):
        t = base.letters
        for k in range(max(len(t), 1)):
            out.add(t[k:] + t[:k])
    return frozenset(out)


# -- endomorphisms ---------------------------------------------------------


@dataclass(frozen=True)
class Endomorphism:
    """A map of a free group given by the images of its generators."""

    domain: tuple
    images: Mapping

    def __post_init__(self):
        missing = [s for s in self.domain if s not in self.images]
        if missing:
            raise AlphabetError(f"no image given for {missing}")
        alphabet = set(self.domain)
        for s, img in self.images.items():
            if s not in alphabet:
                raise AlphabetError(f"image given for unknown symbol {s!r}")
            stray = img.symbols() - alphabet
            if stray:
                raise AlphabetError(f"image of {s!r} uses symbols {sorted(stray)} outside the domain")

    def __call__(self, w: FreeWord, limit: int | None = None) -> FreeWord:
        return apply(self, w, limit)

    def max_image_length(self) -> int:
        return max((len(v) for v in self.images.values()), default=0)

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return endo_equal(self, other)

    def __hash__(self):
        return hash((tuple(self.domain), tuple(self.images[s] for s in self.domain)))


def identity_endo(domain: Iterable[Hashable]) -> Endomorphism:
    domain = tuple(domain)
    return Endomorphism(domain, {s: FreeWord.generator(s) for s in domain})


def apply(f: Endomorphism, w: FreeWord, limit: int | None = None) -> FreeWord:
    """Substitute generator images into ``w`` and reduce."""
    if limit is None:
        limit = DEFAULT_WORD_LIMIT
    images = f.images
    stack: list = []
    for s, e in w.letters:
        try:
            img = images[s]
        except KeyError:
            raise AlphabetError(f"symbol {s!r} is not in the endomorphism's domain") from None
        seq = img.letters if e == 1 else reversed(img.letters)
        for t, sign in seq:
            _push(stack, (t, sign * e))
        if len(stack) > limit:
            raise WordLengthError(len(stack), limit)
    return FreeWord._trusted(stack)


def compose(f: Endomorphism, g: Endomorphism, limit: int | None = None) -> Endomorphism:
    """``f o g``: apply ``g`` first, then ``f``."""
    if set(f.domain) != set(g.domain):
        raise AlphabetError("cannot compose endomorphisms over different alphabets")
    return Endomorphism(g.domain, {s: apply(f, g.images[s], limit) for s in g.domain})


def endo_equal(f: Endomorphism, g: Endomorphism) -> bool:
    if set(f.domain) != set(g.domain):
        raise AlphabetError("cannot compare endomorphisms over different alphabets")
    return all(f.images[s] == g.images[s] for s in f.domain)


def is_identity(f: Endomorphism) -> bool:
    return all(img.letters == ((s, 1),) for s, img in f.images.items())


# -- text syntax -----------------------------------------------------------

_TOKEN = re.compile(r"^(?:a_(\d+)_(\d+)|x_(\d+))(?:\^(-?\d+))?$")


def parse_word(text: str) -> FreeWord:
    """Parse whitespace-separated ``a_i_j``, ``x_k`` tokens, optionally ``^-1``.

    Any integer exponent is accepted; ``e`` is the empty word.
    """
    raw = []
    for tok in text.split():
        if tok in ("e", "1"):
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise GraphParseError(f"bad word token {tok!r}")
        i, j, k, power = m.groups()
        if k is not None:
            symbol = int(k)
        else:
            i, j = int(i), int(j)
            if not 1 <= i < j:
                raise GraphParseError(f"pure braid generator {tok!r} needs 1 <= i < j")
            symbol = (i, j)
        power = 1 if power is None else int(power)
        sign = 1 if power > 0 else -1
        raw.extend([(symbol, sign)] * abs(power))
    return FreeWord(raw)


def format_symbol(symbol) -> str:
    if isinstance(symbol, tuple) and len(symbol) == 2:
        return f"a_{symbol[0]}_{symbol[1]}"
    if isinstance(symbol, int):
        return f"x_{symbol}"
    return str(symbol)


def format_word(w: FreeWord) -> str:
    if not w.letters:
        return "e"
    return " ".join(
        format_symbol(s) + ("" if e == 1 else "^-1") for s, e in w.letters
    )

"""Braid and pure braid groups acting on free groups.

B_n acts on F_n = <x_1, ..., x_n> through the Artin representation. Braid
words map to endomorphisms as a homomorphism with functions composing
right to left: ``braid_to_endo(u v) == compose(braid_to_endo(u),
braid_to_endo(v))``. Since the representation is faithful, a pure braid word
is trivial exactly when its endomorphism is the identity.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import GraphParseError
from .freegroup import (
    Endomorphism,
    FreeWord,
    apply,
    commutator,
    exponent_vector,
    gen,
    identity_endo,
    invert,
    is_identity,
    product,
)
from .graphs import Permutation


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators sigma_1 .. sigma_{n-1}; letters are ``(k, sign)``."""

    n: int
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for k, e in self.letters:
            if not 1 <= k <= self.n - 1:
                raise ValueError(f"sigma_{k} is out of range for {self.n} strands")
            if e not in (1, -1):
                raise ValueError(f"bad sign {e!r}")

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple((k, -e) for k, e in reversed(self.letters)))

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join(f"s{k}" + ("" if e == 1 else "^-1") for k, e in self.letters)


@dataclass(frozen=True)
class PureBraidWord:
    """Word in the generators a_ij of P_n, stored freely reduced."""

    n: int
    word: FreeWord = FreeWord()

    def __post_init__(self):
        for s in self.word.symbols():
            if not (isinstance(s, tuple) and len(s) == 2 and 1 <= s[0] < s[1] <= self.n):
                raise ValueError(f"{s!r} is not a generator of P_{self.n}")

    def __mul__(self, other: PureBraidWord) -> PureBraidWord:
        return PureBraidWord(max(self.n, other.n), self.word * other.word)

    def inverse(self) -> PureBraidWord:
        return PureBraidWord(self.n, invert(self.word))

    def __str__(self):
        return str(self.word)


def a(i: int, j: int, sign: int = 1) -> FreeWord:
    """The one-letter word ``a_ij`` (or its inverse)."""
    return gen((i, j), sign)


# -- Artin representation --------------------------------------------------


@lru_cache(maxsize=None)
def sigma_endo(k: int, n: int, sign: int = 1) -> Endomorphism:
    """Automorphism of F_n for sigma_k (``sign=1``) or its inverse (``sign=-1``).

    The inverse is written out explicitly rather than computed.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"sigma_{k} is out of range for {n} strands")
    images = {s: gen(s) for s in range(1, n + 1)}
    if sign == 1:
        images[k] = product(gen(k), gen(k + 1), gen(k, -1))
        images[k + 1] = gen(k)
    elif sign == -1:
        images[k] = gen(k + 1)
        images[k + 1] = product(gen(k + 1, -1), gen(k), gen(k + 1))
    else:
        raise ValueError(f"bad sign {sign!r}")
    return Endomorphism(tuple(range(1, n + 1)), images)


def _fold(endos, n: int, limit: int | None) -> Endomorphism:
    # E <- E o phi keeps every substitution short: phi's images are small.
    domain = tuple(range(1, n + 1))
    images = {s: gen(s) for s in domain}
    for phi in endos:
        current = Endomorphism(domain, images)
        images = {s: apply(current, phi.images[s], limit) for s in domain}
    return Endomorphism(domain, images)


def braid_to_endo(b: BraidWord, limit: int | None = None) -> Endomorphism:
    return _fold((sigma_endo(k, b.n, e) for k, e in b.letters), b.n, limit)


def pure_generator(i: int, j: int, n: int) -> BraidWord:
    """``a_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1``."""
    if not 1 <= i < j <= n:
        raise ValueError(f"a_{i}_{j} needs 1 <= i < j <= n (n={n})")
    down = [(k, 1) for k in range(j - 1, i, -1)]
    up = [(k, -1) for k in range(i + 1, j)]
    return BraidWord(n, down + [(i, 1), (i, 1)] + up)


def pure_to_braid(w: PureBraidWord) -> BraidWord:
    out = BraidWord(w.n)
    for (i, j), e in w.word:
        g = pure_generator(i, j, w.n)
        out = out * (g if e == 1 else g.inverse())
    return out


@lru_cache(maxsize=None)
def _pure_endo(i: int, j: int, n: int, sign: int) -> Endomorphism:
    g = pure_generator(i, j, n)
    return braid_to_endo(g if sign == 1 else g.inverse())


def pure_to_endo(w: PureBraidWord, limit: int | None = None) -> Endomorphism:
    """Artin action of a pure braid word; same result as expanding to sigmas."""
    return _fold((_pure_endo(i, j, w.n, e) for (i, j), e in w.word), w.n, limit)


def is_trivial_pure(w: PureBraidWord, limit: int | None = None) -> bool:
    """Exact triviality test in P_n.

    The exponent sums of the a_ij are homomorphisms P_n -> Z, which rejects
    most nontrivial words before any substitution happens. May raise
    ``WordLengthError``; never answers wrongly.
    """
    if not w.word:
        return True
    if exponent_vector(w.word):
        return False
    return is_identity(pure_to_endo(w, limit))


# -- conjugation action and the full twist ---------------------------------


def conjugate_by_sigma(k: int, pair: tuple, n: int, sign: int = 1) -> PureBraidWord:
    """``s_k a_ij s_k^-1`` for ``sign=1``, ``s_k^-1 a_ij s_k`` for ``sign=-1``."""
    i, j = pair
    if not 1 <= k <= n - 1:
        raise ValueError(f"sigma_{k} is out of range for {n} strands")
    if not 1 <= i < j <= n:
        raise ValueError(f"a_{i}_{j} is not a generator of P_{n}")
    if sign == 1:
        if k == i - 1:
            w = product(a(k, i), a(k, j), a(k, i, -1))
        elif k == i < j - 1:
            w = a(i + 1, j)
        elif k == j - 1 > i:
            w = product(a(k, j), a(i, k), a(k, j, -1))
        elif k == j:
            w = a(i, j + 1)
        else:
            w = a(i, j)
    elif sign == -1:
        if k == i - 1:
            w = a(k, j)
        elif k == i < j - 1:
            w = product(a(i, i + 1, -1), a(i + 1, j), a(i, i + 1))
        elif k == j - 1 > i:
            w = a(i, k)
        elif k == j:
            w = product(a(j, j + 1, -1), a(i, j + 1), a(j, j + 1))
        else:
            w = a(i, j)
    else:
        raise ValueError(f"bad sign {sign!r}")
    return PureBraidWord(n, w)


def full_twist(n: int) -> PureBraidWord:
    """``a_12 a_13 a_23 a_14 a_24 a_34 ... a_{n-1,n}``: increasing j, then i."""
    if n < 2:
        raise ValueError("the full twist needs n >= 2")
    return PureBraidWord(n, product(*(a(i, j) for j in range(2, n + 1) for i in range(1, j))))


def braid_permutation(b: BraidWord) -> Permutation:
    """Image in S_n; ``p(uv) = p(u) o p(v)``, matching ``braid_to_endo``."""
    images = list(range(1, b.n + 1))
    # right-to-left: the last letter acts first on a point.
    for k, _ in reversed(b.letters):
        images = [k + 1 if v == k else k if v == k + 1 else v for v in images]
    return Permutation(tuple(images))


# -- relator families --------------------------------------------------------


def triple_relators(i: int, j: int, r: int) -> list[FreeWord]:
    """``[a_ij a_ir, a_jr]`` and ``[a_ij, a_ir a_jr]`` for i<j<r."""
    return [commutator(a(i, j) * a(i, r), a(j, r)), commutator(a(i, j), a(i, r) * a(j, r))]


def quadruple_relators(p: int, q: int, s: int, t: int) -> list[FreeWord]:
    """Relators on strands p<q<s<t: the two non-crossing commutators
    ``[a_pt, a_qs]``, ``[a_st, a_pq]`` and the crossing one
    ``[a_qt, a_st a_ps a_st^-1]``."""
    return [
        commutator(a(p, t), a(q, s)),
        commutator(a(s, t), a(p, q)),
        commutator(a(q, t), product(a(s, t), a(p, s), a(s, t, -1))),
    ]


def artin_relators(vertices) -> list[FreeWord]:
    """The compact Artin relators of the pure braid group on ``vertices``."""
    vs = sorted(vertices)
    out = []
    for sub in itertools.combinations(vs, 3):
        out.extend(triple_relators(*sub))
    for sub in itertools.combinations(vs, 4):
        out.extend(quadruple_relators(*sub))
    return out


def five_case_relators(n: int) -> list[FreeWord]:
    """``a_rs^-1 a_ij a_rs (rhs)^-1`` for every r<s<j, i<j of the semidirect form."""
    out = []
    pairs = [(i, j) for j in range(2, n + 1) for i in range(1, j)]
    for (r, s), (i, j) in itertools.product(pairs, pairs):
        if not s < j:
            continue
        if s < i:
            rhs = a(i, j)
        elif s == i:
            rhs = product(a(r, j), a(i, j), a(r, j, -1))
        elif r < i:
            rhs = product(a(r, j), a(s, j), a(r, j, -1), a(s, j, -1), a(i, j),
                          a(s, j), a(r, j), a(s, j, -1), a(r, j, -1))
        elif r == i:
            rhs = product(a(r, j), a(s, j), a(i, j), a(s, j, -1), a(r, j, -1))
        else:
            rhs = a(i, j)
        out.append(product(a(r, s, -1), a(i, j), a(r, s), invert(rhs)))
    return out


def conjugation_identities(n: int) -> list[FreeWord]:
    """Consequences of the triple relations and the rewritten crossing relator.

    For r<s<j: ``a_sj a_rs a_sj^-1 = a_rj^-1 a_rs a_rj``. For r<i<s<j the
    crossing relator in its three alternative commutator forms.
    """
    out = []
    for r, s, j in itertools.combinations(range(1, n + 1), 3):
        lhs = product(a(s, j), a(r, s), a(s, j, -1))
        rhs = product(a(r, j, -1), a(r, s), a(r, j))
        out.append(lhs * invert(rhs))
    for r, i, s, j in itertools.combinations(range(1, n + 1), 4):
        out.append(commutator(a(i, j), product(a(r, i), a(r, s), a(r, i, -1))))
        out.append(commutator(a(r, s), product(a(i, s), a(i, j), a(i, s, -1))))
        out.append(commutator(a(r, s), product(a(r, j), a(i, j), a(r, j, -1))))
    return out


def braid_relation_pairs(n: int) -> list[tuple[BraidWord, BraidWord]]:
    """Both sides of every braid relation of B_n."""
    out = []
    for i in range(1, n - 1):
        out.append((BraidWord(n, [(i, 1), (i + 1, 1), (i, 1)]),
                    BraidWord(n, [(i + 1, 1), (i, 1), (i + 1, 1)])))
    for i, j in itertools.combinations(range(1, n), 2):
        if j - i >= 2:
            out.append((BraidWord(n, [(i, 1), (j, 1)]), BraidWord(n, [(j, 1), (i, 1)])))
    return out


_SIGMA = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse ``s1 s2^-1 ...``; ``e`` is the empty braid."""
    letters = []
    for tok in text.split():
        if tok == "e":
            continue
        m = _SIGMA.match(tok)
        if not m:
            raise GraphParseError(f"bad braid token {tok!r}")
        k = int(m.group(1))
        power = 1 if m.group(2) is None else int(m.group(2))
        letters.extend([(k, 1 if power > 0 else -1)] * abs(power))
    try:
        return BraidWord(n, letters)
    except ValueError as exc:
        raise GraphParseError(str(exc)) from None


def identity(n: int) -> Endomorphism:
    return identity_endo(range(1, n + 1))

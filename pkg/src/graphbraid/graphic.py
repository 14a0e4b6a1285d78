"""Graphic pure braid groups P_G.

P_G is P_n with the generators a_ij of non-edges killed. Deleting the strands
outside a vertex set X gives a homomorphism ``rho_X: P_G -> P_{G_X}``, realized
on words by dropping every letter not inside X. For a clique X the target is
a pure braid group, where triviality is decidable exactly, so any nontrivial
projection proves a word nontrivial. The converse direction needs the product
map over the maximal cliques to be injective; ``injectivity_status`` returns
a certificate only for graphs covered by a known theorem.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

from .braid import (
    PureBraidWord,
    a,
    artin_relators,
    is_trivial_pure,
    quadruple_relators,
    triple_relators,
)
from .errors import AlphabetError, ResourceError
from .freegroup import (
    FreeWord,
    commutator,
    cyclic_class,
    cyclic_reduce,
    format_symbol,
    format_word,
    project,
)
from .graphs import (
    CliqueFamily,
    Graph,
    Permutation,
    are_isomorphic,
    clique_sum_split,
    four_cliques_almost_disjoint,
    induced_subgraph,
    is_chordal,
    is_k4_free,
    maximal_cliques,
)


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        gens = set(self.generators)
        for r in self.relators:
            stray = r.symbols() - gens
            if stray:
                raise AlphabetError(f"relator {r} uses undeclared generators {sorted(stray)}")

    def to_text(self) -> str:
        lines = [f"gen {format_symbol(s)}" for s in self.generators]
        lines += [f"rel {format_word(r)}" for r in self.relators]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "generators": [format_symbol(s) for s in self.generators],
            "relators": [format_word(r) for r in self.relators],
        }


def presentation(g: Graph) -> Presentation:
    """Artin relators of P_n over 3- and 4-subsets meeting an edge, with
    non-edge letters deleted; empty and repeated relators dropped."""
    gens = tuple(g.sorted_edges())
    keep = set(gens)
    seen, rels = set(), []
    for k in (3, 4):
        for sub in itertools.combinations(g.vertices, k):
            if not any(p in keep for p in itertools.combinations(sub, 2)):
                continue
            for r in _relators_on(sub):
                img = project(r, keep)
                if img and img not in seen:
                    seen.add(img)
                    rels.append(img)
    return Presentation(gens, tuple(rels))


def _relators_on(sub: tuple) -> list:
    # relators whose strand set is exactly ``sub``
    return triple_relators(*sub) if len(sub) == 3 else quadruple_relators(*sub)


def vertex_generators(vertices, g: Graph | None = None) -> set:
    """Generators ``a_ij`` with both endpoints in ``vertices`` (and an edge of ``g``)."""
    vs = sorted(set(vertices))
    pairs = set(itertools.combinations(vs, 2))
    return pairs if g is None else pairs & g.edges


def rho(w: FreeWord, vertices) -> FreeWord:
    """Forget the strands outside ``vertices``."""
    return project(w, vertex_generators(vertices))


@dataclass(frozen=True)
class ProjectionImage:
    """Images of one word under rho_X for each member X of a family."""

    images: dict  # member tuple -> FreeWord over pairs inside the member

    def relabelled(self, member: tuple) -> PureBraidWord:
        """The image as a word of P_|X|, vertices renumbered 1..|X| in order."""
        index = {v: k for k, v in enumerate(member, start=1)}
        w = FreeWord(((index[i], index[j]), e) for (i, j), e in self.images[member])
        return PureBraidWord(len(member), w)

    def relabel_map(self, member: tuple) -> dict:
        return {v: k for k, v in enumerate(member, start=1)}

    def to_json(self) -> dict:
        return {
            "images": [
                {"member": list(m), "word": format_word(w),
                 "relabelled": format_word(self.relabelled(m).word)}
                for m, w in self.images.items()
            ]
        }


def rho_family(w: FreeWord, fam) -> ProjectionImage:
    return ProjectionImage({tuple(m): rho(w, m) for m in fam})


def is_retractive(p: Presentation, subset) -> bool:
    """Sufficient test: every relator's image under deleting the generators
    outside ``subset`` is empty or a relator up to cyclic permutation and
    inversion. ``False`` means the test is inconclusive."""
    subset = set(subset)
    stray = subset - set(p.generators)
    if stray:
        raise AlphabetError(f"{sorted(stray)} are not generators of the presentation")
    known = set()
    for r in p.relators:
        known |= cyclic_class(r)
    for r in p.relators:
        img = cyclic_reduce(project(r, subset))
        if img and img.letters not in known:
            return False
    return True


def transverse(pair, fam, g: Graph | None = None) -> bool:
    """True iff no member of ``fam`` contains all endpoints of both generators."""
    if g is not None:
        for s in pair:
            if tuple(s) not in g.edges:
                raise AlphabetError(f"{format_symbol(tuple(s))} is not a generator of P_G")
    ends = set().union(*(set(s) for s in pair))
    return not any(ends <= set(m) for m in fam)


# -- injectivity knowledge base ------------------------------------------------


class Rule(str, Enum):
    COMPLETE_GRAPH = "CompleteGraph"
    K4_FREE = "K4Free"
    ALMOST_DISJOINT = "AlmostDisjoint4Cliques"
    FEWER_THAN_7 = "FewerThan7Vertices"
    CHORDAL = "Chordal"
    CLIQUE_SUM = "CliqueSumRecursion"
    WORKED_EXAMPLE_6 = "WorkedExample6"
    DISJOINT_UNION = "DisjointUnion"


CITATIONS = {
    Rule.COMPLETE_GRAPH: "rho over the single maximal clique V is the identity of P_n",
    Rule.K4_FREE: "Thm (K4-free graphs): rho_X(G) is injective",
    Rule.ALMOST_DISJOINT: "Thm (almost disjoint 4-cliques): rho_X(G) is injective",
    Rule.FEWER_THAN_7: "Remark: rho_X(G) is injective for any graph on fewer than 7 vertices",
    Rule.CHORDAL: (
        "Cor (clique-neighbor embedding) iterated along a perfect elimination "
        "ordering; each clique used lies in a maximal clique and rho factors "
        "through it, so rho_X(G) is injective"
    ),
    Rule.CLIQUE_SUM: (
        "Prop (generalized parallel connection): P_G embeds in P_G1 x P_G2; "
        "both parts certified"
    ),
    Rule.WORKED_EXAMPLE_6: "Example: K6 minus two disjoint edges, rho_X(G) is injective",
    Rule.DISJOINT_UNION: "P of a disjoint union is the direct product of the components' groups",
}


@dataclass(frozen=True)
class InjectivityCertificate:
    proven: bool
    rule: Rule | None = None
    note: str = ""
    parts: tuple = ()
    vertices: tuple = ()  # vertices of the original graph this certificate covers

    @property
    def status(self) -> str:
        return "Proven" if self.proven else "Unknown"

    def to_json(self) -> dict:
        out = {
            "status": self.status,
            "rule": self.rule.value if self.rule else None,
            "citation": CITATIONS[self.rule] if self.rule else None,
            "note": self.note,
            "vertices": list(self.vertices),
        }
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out


def example6_graph() -> Graph:
    """K6 without the edges {4,5} and {1,6}."""
    k6 = Graph.complete(6)
    return Graph(6, k6.edges - {(4, 5), (1, 6)})


def injectivity_status(g: Graph) -> InjectivityCertificate:
    """Certificate that rho over the maximal cliques of ``g`` is injective.

    Complete graphs are recognized first; then the theorem-backed rules in
    fixed order. Disconnected graphs are certified componentwise; isolated
    vertices contribute trivial factors and are ignored.
    """
    comps = [c for c in g.components() if len(c) > 1]
    original = tuple(g.label(v) for v in g.vertices)
    if not comps:
        return InjectivityCertificate(True, Rule.COMPLETE_GRAPH, "no edges: P_G is trivial", (), original)
    if len(comps) > 1:
        parts = tuple(injectivity_status(induced_subgraph(g, c)) for c in comps)
        return InjectivityCertificate(all(p.proven for p in parts), Rule.DISJOINT_UNION,
                                      "", parts, original)
    h = induced_subgraph(g, comps[0]) if len(comps[0]) < g.n else g
    return _connected_status(h)


def _connected_status(g: Graph) -> InjectivityCertificate:
    vs = tuple(g.label(v) for v in g.vertices)
    if len(g.edges) == g.n * (g.n - 1) // 2:
        return InjectivityCertificate(True, Rule.COMPLETE_GRAPH, "", (), vs)
    if is_k4_free(g):
        return InjectivityCertificate(True, Rule.K4_FREE, "", (), vs)
    if four_cliques_almost_disjoint(g):
        return InjectivityCertificate(True, Rule.ALMOST_DISJOINT, "", (), vs)
    if g.n < 7:
        return InjectivityCertificate(True, Rule.FEWER_THAN_7, "", (), vs)
    chordal, order = is_chordal(g)
    if chordal:
        note = "perfect elimination ordering " + " ".join(str(g.label(v)) for v in order)
        return InjectivityCertificate(True, Rule.CHORDAL, note, (), vs)
    split = clique_sum_split(g)
    if split is not None:
        parts = (_connected_status(split.part1), _connected_status(split.part2))
        sep = " ".join(str(g.label(v)) for v in split.separator)
        if all(p.proven for p in parts):
            return InjectivityCertificate(True, Rule.CLIQUE_SUM, f"separator {{{sep}}}", parts, vs)
    if g.n == 6 and are_isomorphic(g, example6_graph()):
        return InjectivityCertificate(True, Rule.WORKED_EXAMPLE_6, "", (), vs)
    return InjectivityCertificate(False, None, "no rule in the knowledge base applies", (), vs)


# -- word problem ------------------------------------------------------------------


class Verdict(str, Enum):
    TRIVIAL = "Trivial"
    NONTRIVIAL = "Nontrivial"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class WordVerdict:
    value: Verdict
    witness: tuple | None = None
    note: str = ""
    certificate: InjectivityCertificate | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "verdict": self.value.value,
            "witness": list(self.witness) if self.witness else None,
            "note": self.note,
            "certificate": self.certificate.to_json() if self.certificate else None,
        }


def check_word(g: Graph, w: FreeWord) -> None:
    stray = {s for s in w.symbols() if s not in g.edges}
    if stray:
        names = ", ".join(format_symbol(s) for s in sorted(stray, key=str))
        raise AlphabetError(f"word uses generators that are not edges of the graph: {names}")


def word_problem(g: Graph, w: FreeWord, family=None, limit: int | None = None) -> WordVerdict:
    """Decide whether ``w`` is trivial in P_G, where the knowledge base allows.

    Each clique projection is checked exactly in its pure braid group; a
    nontrivial one settles the question. All-trivial projections imply
    triviality only under a proven certificate for the maximal-clique family.
    A caller-supplied ``family`` other than the maximal cliques never yields
    ``Trivial``. Guard breaches give ``Unknown``, never a wrong verdict.
    """
    check_word(g, w)
    if not w:
        return WordVerdict(Verdict.TRIVIAL, None, "empty word")
    own = maximal_cliques(g)
    fam = own if family is None else CliqueFamily(tuple(family))
    for m in fam:
        if not g.is_clique(m):
            raise ValueError(f"{m} is not a clique of the graph")
    images = rho_family(w, fam)
    breached = []
    for m in fam:
        try:
            if not is_trivial_pure(images.relabelled(m), limit):
                return WordVerdict(Verdict.NONTRIVIAL, m, "projection to this clique is nontrivial")
        except ResourceError as exc:
            breached.append((m, str(exc)))
    if breached:
        m, msg = breached[0]
        return WordVerdict(Verdict.UNKNOWN, None, f"resource guard on clique {list(m)}: {msg}")
    if fam != own:
        return WordVerdict(Verdict.UNKNOWN, None,
                           "all projections trivial, but no injectivity certificate for this family")
    cert = injectivity_status(g)
    if cert.proven:
        return WordVerdict(Verdict.TRIVIAL, None, "all projections trivial", cert)
    return WordVerdict(Verdict.UNKNOWN, None,
                       "all projections trivial; injectivity of rho is not known for this graph", cert)


def words_equal(g: Graph, u: FreeWord, v: FreeWord, limit: int | None = None) -> WordVerdict:
    return word_problem(g, u * ~v, limit=limit)


# -- the six-vertex worked example -------------------------------------------------


def example6_commutator() -> FreeWord:
    """``[[a_35, a_25], a_15]`` in the free group on a_15, a_25, a_35."""
    return commutator(commutator(a(3, 5), a(2, 5)), a(1, 5))


def example6_commutator_check() -> bool:
    """Certify that ``[[a_35, a_25], a_15]`` is nontrivial in the kernel group.

    The word lives on S_1 = {a_15, a_25, a_35}. S_1 is retractive, and every
    relator dies when projected to S_1, so G_{S_1} is free on S_1 and embeds;
    a nonempty reduced word over S_1 is therefore nontrivial.
    """
    pres = example6_kernel_presentation()
    s1 = set(EXAMPLE6_RETRACTIVE_SETS[0])
    w = example6_commutator()
    if not w.symbols() <= s1 or not is_retractive(pres, s1):
        return False
    if any(project(r, s1) for r in pres.relators):
        return False
    return bool(w)


def example6_commutator_identity() -> FreeWord:
    """``[[a_36 a_35, a_36 a_25], a_15] [[a_35, a_25], a_15]^-1``; trivial in P_G."""
    lhs = commutator(commutator(a(3, 6) * a(3, 5), a(3, 6) * a(2, 5)), a(1, 5))
    return lhs * ~example6_commutator()


def example6_kernel_presentation() -> Presentation:
    """The discriminantal kernel of example6_graph over the clique {1,2,3,4}.

    Generators a_ij with j in {5, 6} other than a_45 and a_16. Relators: the
    Artin relators of P_{2356} that avoid a_23, plus the commutators
    [a_15, a_i6] (2 <= i <= 5), [a_i5, a_46] (1 <= i <= 3) and [a_46, a_56].
    """
    gens = ((1, 5), (2, 5), (3, 5), (2, 6), (3, 6), (4, 6), (5, 6))
    rels = []
    for r in artin_relators((2, 3, 5, 6)):
        if (2, 3) not in r.symbols() and r not in rels:
            rels.append(r)
    rels += [commutator(a(1, 5), a(i, 6)) for i in range(2, 6)]
    rels += [commutator(a(i, 5), a(4, 6)) for i in range(1, 4)]
    rels.append(commutator(a(4, 6), a(5, 6)))
    return Presentation(gens, tuple(rels))


EXAMPLE6_RETRACTIVE_SETS = (
    ((1, 5), (2, 5), (3, 5)),
    ((2, 6), (3, 6), (4, 6)),
    ((2, 5), (3, 5), (2, 6), (3, 6), (5, 6)),
)


def relabel_word(w: FreeWord, perm: Permutation) -> FreeWord:
    """Apply a vertex relabelling to a word over pair symbols."""
    out = []
    for (i, j), e in w:
        p, q = perm(i), perm(j)
        out.append(((min(p, q), max(p, q)), e))
    return FreeWord(out)


def transverse_pairs(g: Graph, fam=None) -> list[tuple]:
    fam = maximal_cliques(g) if fam is None else fam
    return [
        (p, q) for p, q in itertools.combinations(g.sorted_edges(), 2)
        if transverse((p, q), fam)
    ]


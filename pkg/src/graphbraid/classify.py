"""Theorem-driven verdicts about P_G and the graphic braid group B_G.

Every Yes/No carries a citation naming the result it rests on; anything the
results do not cover is reported as Unknown or Indeterminate together with
the hypothesis that failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import graphs
from .graphic import InjectivityCertificate, injectivity_status
from .graphs import (
    CliqueFamily,
    Graph,
    Permutation,
    betti1,
    cliques_of_size,
    four_cliques_almost_disjoint,
    has_isthmus,
    incidence_graph,
    is_chordal,
    is_k4_free,
    maximal_cliques,
)

SCHEMA_VERSION = 1

CITE_K4FREE_COR = "Cor (K4-free): residually free, torsion-free, residually torsion-free nilpotent, linear, residually finite; acts freely and properly on a CAT(0) cube complex"
CITE_4CLIQUE_COR = "Cor (almost disjoint 4-cliques): torsion-free, residually torsion-free nilpotent, linear, residually finite; acts freely and properly on a CAT(0) complex"
CITE_NOT_RF = "P_4 is not residually free, so P_G is not residually free if G is not K4-free"
CITE_ATMENABLE = "a-T-menable: proper action on a CAT(0) cube complex (K4-free case)"
CITE_ATMENABLE_UNKNOWN = "It is not known whether P_4 is a-T-menable"
CITE_FINITENESS = "Thm/Cor (every maximal clique a 3-clique): b1(Lambda)=0 gives (F_2)^m x Z^m; b1>0 without isthmuses gives FP_{m-1} but not FP_m"
CITE_KPI1 = "Cor: for K4-free G, a cycle in Lambda_G means A_G is not K(pi,1)"
CITE_BGAMMA = "Thm: 1 -> P_G -> B_G -> Aut(G) -> 1"
CITE_SWAP = "an automorphism interchanging two non-adjacent vertices gives 2-torsion in B_G"
CITE_WHEEL = "if G is the k-wheel then B_G has elements of order k"
CITE_FINITE_INDEX = "P_G has finite index |Aut(G)| in B_G, so FP_m types agree"


# -- hyperplanes -------------------------------------------------------------------


@dataclass(frozen=True)
class Hyperplane:
    """``x_i = x_j`` (kind ``difference``) or ``x_j = c`` (kind ``affine``).

    For affine hyperplanes ``i`` holds the coordinate index j and ``j`` the
    constant c.
    """

    ambient: int
    kind: str
    i: int
    j: int

    def __post_init__(self):
        if self.kind == "difference" and not self.i < self.j:
            raise ValueError("difference hyperplane needs i < j")
        if self.kind not in ("difference", "affine"):
            raise ValueError(f"unknown hyperplane kind {self.kind!r}")

    @classmethod
    def difference(cls, ambient: int, i: int, j: int) -> Hyperplane:
        return cls(ambient, "difference", i, j)

    @classmethod
    def affine(cls, ambient: int, coord: int, const: int) -> Hyperplane:
        return cls(ambient, "affine", coord, const)

    def __str__(self):
        if self.kind == "difference":
            return f"x_{self.i} - x_{self.j} = 0"
        return f"x_{self.i} = {self.j}"

    def to_json(self) -> dict:
        if self.kind == "difference":
            rec = {"kind": "difference", "i": self.i, "j": self.j}
        else:
            rec = {"kind": "affine", "coordinate": self.i, "constant": self.j}
        return {"equation": str(self), "ambient": self.ambient, **rec}


def graphic_arrangement(g: Graph) -> list[Hyperplane]:
    return [Hyperplane.difference(g.n, i, j) for i, j in g.sorted_edges()]


def graphic_discriminantal(g: Graph, m: int, relabel: Permutation | None = None) -> list[Hyperplane]:
    """Fiber arrangement over an m-clique sent to {1..m} by ``relabel``.

    In the coordinates x_{m+1}..x_n: ``x_j = i`` for 1<=i<=m<j with {i,j} an
    edge, and ``x_i = x_j`` for m<i<j with {i,j} an edge, after relabelling.
    """
    relabel = relabel or Permutation.identity(g.n)
    if relabel.n != g.n:
        raise ValueError("relabelling has the wrong size")
    inv = relabel.inverse()
    chosen = [inv(k) for k in range(1, m + 1)]
    if not 1 <= m <= g.n or not g.is_clique(chosen):
        raise ValueError(f"vertices {sorted(chosen)} do not form a clique")
    h = g.relabel(relabel)
    ambient = g.n - m
    out = [Hyperplane.affine(ambient, j, i)
           for j in range(m + 1, g.n + 1) for i in range(1, m + 1) if h.has_edge(i, j)]
    out += [Hyperplane.difference(ambient, i, j)
            for i in range(m + 1, g.n + 1) for j in range(i + 1, g.n + 1) if h.has_edge(i, j)]
    return out


def clique_relabelling(g: Graph, clique) -> Permutation:
    """Send ``clique`` (in order) to 1..m and the other vertices, in order, to m+1..n."""
    xs = sorted(clique)
    rest = [v for v in g.vertices if v not in set(xs)]
    images = [0] * g.n
    for new, old in enumerate(xs + rest, start=1):
        images[old - 1] = new
    return Permutation(tuple(images))


@dataclass(frozen=True)
class SemidirectSplit:
    clique: tuple
    relabel: Permutation
    quotient: str
    kernel: str
    kernel_hyperplanes: tuple
    kernel_generators: tuple  # pairs in the relabelled graph
    section: tuple  # (pair, pair): a_ij -> a_ij for the clique's generators

    def to_json(self) -> dict:
        return {
            "clique": list(self.clique),
            "relabel": list(self.relabel.images),
            "quotient": self.quotient,
            "kernel": self.kernel,
            "kernel_hyperplanes": [h.to_json() for h in self.kernel_hyperplanes],
            "kernel_generators": [f"a_{i}_{j}" for i, j in self.kernel_generators],
            "section": {f"a_{i}_{j}": f"a_{p}_{q}" for (i, j), (p, q) in self.section},
        }


def semidirect_split(g: Graph, clique) -> SemidirectSplit:
    """Split extension of P_m by the graphic discriminantal group over a clique."""
    xs = tuple(sorted(clique))
    if not xs or not g.is_clique(xs):
        raise ValueError(f"{list(xs)} is not a clique of the graph")
    m = len(xs)
    perm = clique_relabelling(g, xs)
    hyps = tuple(graphic_discriminantal(g, m, perm))
    quotient = f"P_{m}" + {1: " (trivial)", 2: " = Z"}.get(m, "")
    if g.n == m:
        kernel = "trivial"
    elif g.n - m == 1:
        kernel = f"F_{len(hyps)} (complement of {len(hyps)} points in C)"
    else:
        kernel = f"P^G_{{{g.n},{m}}}: group of the graphic discriminantal arrangement ({len(hyps)} hyperplanes)"
    h = g.relabel(perm)
    kgens = tuple(e for e in h.sorted_edges() if e[1] > m)
    section = tuple(((i, j), (i, j)) for i, j in h.sorted_edges() if j <= m)
    return SemidirectSplit(xs, perm, quotient, kernel, hyps, kgens, section)


# -- finiteness and asphericity ------------------------------------------------------


@dataclass(frozen=True)
class FinitenessVerdict:
    kind: str  # "exact" | "fp_range" | "virtual" | "indeterminate"
    m: int | None = None
    description: str = ""
    b1: int | None = None
    isthmus: bool | None = None
    reason: str = ""
    citation: str = ""

    @property
    def fp_yes(self) -> int | None:
        return self.m - 1 if self.kind == "fp_range" else None

    @property
    def fp_no(self) -> int | None:
        return self.m if self.kind == "fp_range" else None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "m": self.m,
            "description": self.description,
            "b1": self.b1,
            "has_isthmus": self.isthmus,
            "fp_yes": self.fp_yes,
            "fp_no": self.fp_no,
            "reason": self.reason,
            "citation": self.citation,
        }


def finiteness_type(g: Graph) -> FinitenessVerdict:
    """Homological finiteness of P_G for graphs whose maximal cliques are all triangles."""
    if not g.is_connected():
        return FinitenessVerdict("indeterminate", reason="graph is not connected")
    fam = maximal_cliques(g)
    sizes = {len(m) for m in fam}
    if not fam or sizes != {3}:
        if any(s >= 4 for s in sizes):
            reason = ("G contains a 4-clique: no conclusion, the higher BNSR invariants "
                      "of P_4 are not known")
        else:
            reason = "not every maximal clique has cardinality 3"
        return FinitenessVerdict("indeterminate", reason=reason)
    m = len(fam)
    lam = incidence_graph(g, fam)
    b = betti1(lam)
    bridge = has_isthmus(lam)
    if b == 0:
        return FinitenessVerdict("exact", m, f"(F_2)^{m} x Z^{m}", b, bridge, citation=CITE_FINITENESS)
    if not bridge and lam.n_components == 1:
        return FinitenessVerdict("fp_range", m, f"FP_{m - 1} but not FP_{m}", b, bridge,
                                 citation=CITE_FINITENESS)
    return FinitenessVerdict("indeterminate", m, "", b, bridge,
                             reason="incidence graph Lambda has an isthmus: hypotheses not met")


@dataclass(frozen=True)
class KPi1Verdict:
    value: str  # "NotKPi1" | "Unknown"
    reason: str = ""
    citation: str = ""

    def to_json(self) -> dict:
        return {"value": self.value, "reason": self.reason, "citation": self.citation}


def kpi1_verdict(g: Graph) -> KPi1Verdict:
    """Only ever disproves asphericity."""
    if not is_k4_free(g):
        return KPi1Verdict("Unknown", "G is not K4-free; the criterion does not apply")
    b = betti1(graphs.triangle_incidence_graph(g))
    if b > 0:
        return KPi1Verdict("NotKPi1", f"Lambda_G contains a cycle (b1 = {b})", CITE_KPI1)
    return KPi1Verdict("Unknown", "Lambda_G is a forest; the criterion is silent")


# -- property flags ----------------------------------------------------------------------


@dataclass(frozen=True)
class Flag:
    status: str  # "Yes" | "No" | "Unknown"
    citation: str = ""

    def to_json(self) -> dict:
        return {"status": self.status, "citation": self.citation}


FLAG_NAMES = (
    "residually_free",
    "torsion_free",
    "residually_torsion_free_nilpotent",
    "residually_finite",
    "linear",
    "cat0_cube_action",
    "a_t_menable",
)


def property_flags(g: Graph) -> dict[str, Flag]:
    unknown = Flag("Unknown")
    if is_k4_free(g):
        flags = {name: Flag("Yes", CITE_K4FREE_COR) for name in FLAG_NAMES}
        flags["a_t_menable"] = Flag("Yes", CITE_ATMENABLE)
        return flags
    flags = {name: unknown for name in FLAG_NAMES}
    flags["residually_free"] = Flag("No", CITE_NOT_RF)
    if four_cliques_almost_disjoint(g):
        for name in ("torsion_free", "residually_torsion_free_nilpotent",
                     "residually_finite", "linear", "cat0_cube_action"):
            flags[name] = Flag("Yes", CITE_4CLIQUE_COR)
        flags["a_t_menable"] = Flag("Unknown", CITE_ATMENABLE_UNKNOWN)
    return flags


# -- graphic braid group ---------------------------------------------------------------------


@dataclass(frozen=True)
class TorsionWitness:
    order: int
    permutation: Permutation
    reason: str

    def to_json(self) -> dict:
        return {"order": self.order, "permutation": str(self.permutation),
                "images": list(self.permutation.images), "reason": self.reason}


@dataclass(frozen=True)
class BGammaReport:
    aut_order: int
    aut_generators: tuple
    torsion_witnesses: tuple
    torsion_free: Flag
    index: int
    finiteness: FinitenessVerdict
    notes: tuple = ()

    def to_json(self) -> dict:
        return {
            "aut_order": self.aut_order,
            "aut_generators": [str(p) for p in self.aut_generators],
            "index_of_P_in_B": self.index,
            "torsion_witnesses": [w.to_json() for w in self.torsion_witnesses],
            "torsion_free": self.torsion_free.to_json(),
            "finiteness": self.finiteness.to_json(),
            "notes": list(self.notes),
            "citation": CITE_BGAMMA,
        }


def _closure(gens, n) -> set:
    ident = Permutation.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = s * p
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def generating_set(group: list[Permutation], n: int) -> list[Permutation]:
    """Greedy generators: scan in order, keep anything outside the span so far."""
    gens: list = []
    span = {Permutation.identity(n)}
    for p in group:
        if p not in span:
            gens.append(p)
            span = _closure(gens, n)
            if len(span) == len(group):
                break
    return gens


def wheel_rotation(g: Graph) -> Permutation | None:
    """Rim rotation if ``g`` is a wheel: a hub joined to every vertex of an
    induced cycle of length >= 4 on the others."""
    if g.n < 5:
        return None
    nb = g.neighbors()
    for hub in g.vertices:
        rim = [v for v in g.vertices if v != hub]
        if set(rim) != nb[hub]:
            continue
        if any(len(nb[v] - {hub}) != 2 for v in rim):
            continue
        cycle = [rim[0]]
        prev = None
        while True:
            cur = cycle[-1]
            nxt = min(w for w in nb[cur] - {hub} if w != prev) if prev is not None else min(nb[cur] - {hub})
            if nxt == cycle[0]:
                break
            prev = cur
            cycle.append(nxt)
            if len(cycle) > len(rim):
                break
        if len(cycle) != len(rim):
            continue
        return Permutation.from_cycles(g.n, tuple(cycle))
    return None


def bgamma_report(g: Graph, bound: int = graphs.DEFAULT_AUT_BOUND) -> BGammaReport:
    auts = graphs.automorphisms(g, bound)
    witnesses = []
    for s in auts:
        for i, j in g.non_edges():
            if s(i) == j and s(j) == i:
                witnesses.append(TorsionWitness(2, s, f"swaps non-adjacent vertices {i} and {j}; " + CITE_SWAP))
                break
    rot = wheel_rotation(g)
    if rot is not None:
        k = g.n - 1
        witnesses.append(TorsionWitness(k, rot, f"G is the {k}-wheel; " + CITE_WHEEL))
    if len(auts) == 1:
        tf = Flag("Yes", "Aut(G) is trivial, so B_G = P_G")
    elif witnesses:
        tf = Flag("No", witnesses[0].reason)
    else:
        tf = Flag("Unknown")
    pf = finiteness_type(g)
    if pf.kind == "exact":
        bf = FinitenessVerdict("virtual", pf.m, f"contains (F_2)^{pf.m} x Z^{pf.m} with index {len(auts)}",
                               pf.b1, pf.isthmus, citation=CITE_FINITE_INDEX)
    elif pf.kind == "fp_range":
        bf = FinitenessVerdict("fp_range", pf.m, pf.description, pf.b1, pf.isthmus,
                               citation=CITE_FINITE_INDEX)
    else:
        bf = pf
    notes = [f"B_G is an extension of P_G by Aut(G), of order {len(auts)}"]
    if not cliques_of_size(g, 3):
        notes.append(f"G is triangle-free, so P_G = Z^{len(g.edges)}")
        path3 = Graph(3, frozenset({(1, 2), (1, 3)}))
        if graphs.are_isomorphic(g, path3):
            notes.append("B_G = Z^2 x| Z_2 (path on three vertices)")
    return BGammaReport(len(auts), tuple(generating_set(auts, g.n)), tuple(witnesses),
                        tf, len(auts), bf, tuple(notes))


# -- full report ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AnalysisReport:
    graph: Graph
    cliques: CliqueFamily
    summary: dict
    injectivity: InjectivityCertificate
    flags: dict
    finiteness: FinitenessVerdict
    kpi1: KPi1Verdict
    bgamma: BGammaReport | None
    bgamma_note: str = ""
    splitting: SemidirectSplit | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "graph": {"n": self.graph.n, "edges": [list(e) for e in self.graph.sorted_edges()]},
            "summary": self.summary,
            "maximal_cliques": [list(m) for m in self.cliques],
            "injectivity": self.injectivity.to_json(),
            "properties": {k: v.to_json() for k, v in self.flags.items()},
            "finiteness_P": self.finiteness.to_json(),
            "kpi1": self.kpi1.to_json(),
            "bgamma": self.bgamma.to_json() if self.bgamma else {"error": self.bgamma_note},
            "splitting": self.splitting.to_json() if self.splitting else None,
        }


def analyze(g: Graph, aut_bound: int = graphs.DEFAULT_AUT_BOUND, clique=None) -> AnalysisReport:
    fam = maximal_cliques(g)
    chordal, _ = is_chordal(g)
    lam = graphs.triangle_incidence_graph(g)
    summary = {
        "n": g.n,
        "edge_count": len(g.edges),
        "components": len(g.components()),
        "triangles": len(cliques_of_size(g, 3)),
        "k4_free": is_k4_free(g),
        "four_cliques_almost_disjoint": four_cliques_almost_disjoint(g),
        "chordal": chordal,
        "lambda_b1": betti1(lam),
        "lambda_has_isthmus": has_isthmus(lam),
    }
    try:
        bg, note = bgamma_report(g, aut_bound), ""
    except graphs.CapabilityError as exc:
        bg, note = None, str(exc)
    split = semidirect_split(g, clique) if clique else None
    return AnalysisReport(g, fam, summary, injectivity_status(g), property_flags(g),
                          finiteness_type(g), kpi1_verdict(g), bg, note, split)


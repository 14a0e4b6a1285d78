"""``graphbraid`` command line.

Exit status: 0 success or Trivial, 1 Nontrivial, 2 Unknown, 64 bad usage or
unparsable input, 69 a resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, graphic, graphs
from .errors import AlphabetError, CapabilityError, GraphParseError, ResourceError
from .freegroup import DEFAULT_WORD_LIMIT, format_symbol, format_word, parse_word
from .graphic import Verdict

EXIT_OK = 0
EXIT_NONTRIVIAL = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_RESOURCE = 69

VERDICT_EXIT = {Verdict.TRIVIAL: EXIT_OK, Verdict.NONTRIVIAL: EXIT_NONTRIVIAL, Verdict.UNKNOWN: EXIT_UNKNOWN}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vertex_list(text: str) -> tuple:
    try:
        vs = tuple(sorted({int(t) for t in text.replace(" ", "").split(",") if t}))
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}; expected v1,v2,...") from None
    if not vs:
        raise UsageError("empty vertex list")
    return vs


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("path", nargs="?", help="graph file (edge-list or dot)")
    common.add_argument("--graph", help='inline graph, e.g. "n=3;1-2;1-3"')
    common.add_argument("--format", choices=("edge-list", "dot"), default=None)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="mode", action="store_const", const="json")
    out.add_argument("--text", dest="mode", action="store_const", const="text")
    common.add_argument("--aut-bound", type=int, default=graphs.DEFAULT_AUT_BOUND)
    common.add_argument("--word-limit", type=int, default=DEFAULT_WORD_LIMIT)
    common.add_argument("--clique", type=_vertex_list, default=None)
    common.set_defaults(mode="json")

    p = _Parser(prog="graphbraid", description="Compute with graphic pure braid groups.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb, helptext in (
        ("analyze", "full report on P_G and B_G"),
        ("cliques", "maximal clique family"),
        ("present", "presentation of P_G"),
        ("arrangement", "hyperplanes of the graphic arrangement"),
        ("discriminantal", "fiber arrangement over --clique"),
        ("incidence", "incidence graph Lambda and its Betti number"),
        ("bgamma", "graphic full braid group data"),
        ("example6", "the six-vertex commutator certificate"),
    ):
        sub.add_parser(verb, parents=[common], help=helptext)
    r = sub.add_parser("rho", parents=[common], help="images of a word under deletion maps")
    r.add_argument("--word", required=True)
    r.add_argument("--subset", type=_vertex_list, default=None,
                   help="vertex set X (default: every maximal clique)")
    e = sub.add_parser("word-eq", parents=[common], help="decide w1 = w2 in P_G")
    e.add_argument("word1")
    e.add_argument("word2")
    t = sub.add_parser("word-triv", parents=[common], help="decide w = 1 in P_G")
    t.add_argument("word")
    sub.choices["incidence"].add_argument("--family", choices=("maximal", "triangles"), default="maximal")
    return p


def _load_graph(args, required: bool = True):
    if args.graph is not None and args.path is not None:
        raise UsageError("give either a graph file or --graph, not both")
    if args.graph is not None:
        return graphs.parse_graph(args.graph, "inline")
    if args.path is None:
        if required:
            raise UsageError("no graph given (path or --graph)")
        return None
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from None
    fmt = args.format or ("dot" if args.path.endswith((".dot", ".gv")) else "auto")
    return graphs.parse_graph(text, fmt)


# -- verbs ------------------------------------------------------------------------------


def _cliques(g, args):
    fam = graphs.maximal_cliques(g)
    data = {"maximal_cliques": [list(m) for m in fam]}
    text = "\n".join(" ".join(map(str, m)) for m in fam)
    return data, text, EXIT_OK


def _present(g, args):
    p = graphic.presentation(g)
    return p.to_json(), p.to_text().rstrip("\n"), EXIT_OK


def _rho(g, args):
    w = parse_word(args.word)
    graphic.check_word(g, w)
    if args.subset is not None:
        if any(v > g.n for v in args.subset):
            raise UsageError(f"subset {list(args.subset)} has vertices outside 1..{g.n}")
        fam = [args.subset]
    else:
        fam = list(graphs.maximal_cliques(g))
    img = graphic.rho_family(w, fam)
    data = img.to_json()
    text = "\n".join(f"{{{' '.join(map(str, m))}}}: {format_word(v)}" for m, v in img.images.items())
    return data, text, EXIT_OK


def _verdict_output(v: graphic.WordVerdict):
    text = v.value.value
    if v.witness:
        text += f" (witness clique {' '.join(map(str, v.witness))})"
    if v.note:
        text += f"\n{v.note}"
    return v.to_json(), text, VERDICT_EXIT[v.value]


def _word_eq(g, args):
    u, v = parse_word(args.word1), parse_word(args.word2)
    return _verdict_output(graphic.words_equal(g, u, v, limit=args.word_limit))


def _word_triv(g, args):
    w = parse_word(args.word)
    return _verdict_output(graphic.word_problem(g, w, limit=args.word_limit))


def _hyperplanes(hs):
    return {"hyperplanes": [h.to_json() for h in hs]}, "\n".join(str(h) for h in hs)


def _arrangement(g, args):
    data, text = _hyperplanes(classify.graphic_arrangement(g))
    data["ambient"] = g.n
    return data, text, EXIT_OK


def _discriminantal(g, args):
    if args.clique is None:
        raise UsageError("discriminantal needs --clique v1,v2,...")
    if any(v > g.n for v in args.clique) or not g.is_clique(args.clique):
        raise UsageError(f"{list(args.clique)} is not a clique of the graph")
    split = classify.semidirect_split(g, args.clique)
    data, text = _hyperplanes(split.kernel_hyperplanes)
    data["ambient"] = g.n - len(args.clique)
    data["splitting"] = split.to_json()
    return data, text, EXIT_OK


def _incidence(g, args):
    if args.family == "triangles":
        lam = graphs.triangle_incidence_graph(g)
    else:
        lam = graphs.incidence_graph(g, graphs.maximal_cliques(g))
    bridges = [[format_symbol(lam.left[i]), list(lam.right[j])] for i, j in lam.bridges()]
    data = {
        "family": args.family,
        "generators": [format_symbol(e) for e in lam.left],
        "members": [list(m) for m in lam.right],
        "edges": len(lam.adjacency),
        "components": lam.n_components,
        "b1": graphs.betti1(lam),
        "has_isthmus": bool(bridges),
        "isthmuses": bridges,
    }
    text = (f"generators {len(lam.left)}, members {len(lam.right)}, edges {len(lam.adjacency)}\n"
            f"b1 {data['b1']}, isthmus {'yes' if bridges else 'no'}")
    return data, text, EXIT_OK


def _bgamma(g, args):
    rep = classify.bgamma_report(g, args.aut_bound)
    data = rep.to_json()
    lines = [f"|Aut| = {rep.aut_order}",
             "generators: " + (", ".join(str(p) for p in rep.aut_generators) or "none"),
             f"torsion-free: {rep.torsion_free.status}"]
    lines += [f"order {w.order}: {w.permutation}" for w in rep.torsion_witnesses]
    lines += list(rep.notes)
    return data, "\n".join(lines), EXIT_OK


def _analyze(g, args):
    if args.clique is not None and (any(v > g.n for v in args.clique) or not g.is_clique(args.clique)):
        raise UsageError(f"{list(args.clique)} is not a clique of the graph")
    rep = classify.analyze(g, args.aut_bound, args.clique)
    data = rep.to_json()
    lines = [f"{k}: {v}" for k, v in rep.summary.items()]
    lines.append("maximal cliques: " + "; ".join(" ".join(map(str, m)) for m in rep.cliques))
    lines.append(f"injectivity: {rep.injectivity.status}"
                 + (f" ({rep.injectivity.rule.value})" if rep.injectivity.rule else ""))
    lines += [f"{k}: {f.status}" for k, f in rep.flags.items()]
    fin = rep.finiteness
    lines.append(f"finiteness: {fin.kind} {fin.description or fin.reason}".rstrip())
    lines.append(f"K(pi,1): {rep.kpi1.value}")
    lines.append(f"|Aut|: {rep.bgamma.aut_order}" if rep.bgamma else f"B_G: {rep.bgamma_note}")
    return data, "\n".join(lines), EXIT_OK


def _example6(g, args):
    w = graphic.example6_commutator()
    pres = graphic.example6_kernel_presentation()
    ok = graphic.example6_commutator_check()
    data = {
        "graph": {"n": 6, "edges": [list(e) for e in graphic.example6_graph().sorted_edges()]},
        "word": format_word(w),
        "nontrivial": ok,
        "retractive_sets": [
            {"set": [format_symbol(s) for s in S], "retractive": graphic.is_retractive(pres, S)}
            for S in graphic.EXAMPLE6_RETRACTIVE_SETS
        ],
        "kernel_presentation": pres.to_json(),
    }
    text = f"{format_word(w)}: {'nontrivial' if ok else 'not certified'}"
    return data, text, EXIT_OK if ok else EXIT_UNKNOWN


VERBS = {
    "analyze": _analyze,
    "cliques": _cliques,
    "present": _present,
    "rho": _rho,
    "word-eq": _word_eq,
    "word-triv": _word_triv,
    "arrangement": _arrangement,
    "discriminantal": _discriminantal,
    "incidence": _incidence,
    "bgamma": _bgamma,
    "example6": _example6,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        g = _load_graph(args, required=args.verb != "example6")
        data, text, code = VERBS[args.verb](g, args)
    except (UsageError, GraphParseError, AlphabetError, ValueError) as exc:
        print(f"graphbraid: error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ResourceError, CapabilityError) as exc:
        print(f"graphbraid: resource limit: {exc}", file=stderr)
        return EXIT_RESOURCE
    if args.mode == "json":
        stdout.write(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        stdout.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

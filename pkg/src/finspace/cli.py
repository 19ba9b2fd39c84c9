"""Command line front end.

Every verb reads JSON documents (a path, or - for stdin) and prints a JSON
report with sorted keys.  Exit codes: 0 success, 1 domain error, 2 parse
error.
"""
import argparse
import sys

from . import io as docs
from .asphericity import aspherical_2complex, aspherical_presentation
from .boards import KINDS, board, count_classes, format_coloring, moves_equivalent, parse_coloring
from .cellular import cellular_homology, pi2, poset_homology, simplicial_homology
from .colorings import are_equivalent, is_admissible, is_connected_coloring
from .corpus import run_corpus
from .coverings import build_cover, deck_transformations, milnor_poset, verify_covering
from .edgepath import pi1_presentation
from .errors import FinspaceError, NotCovering, ParseError, UnknownGenerator, UnknownLabel
from .groups import FiniteGroup, GroupPresentation, abelianization, parse_group, simplify


def _poset_or_complex(doc):
    if "elements" in doc:
        return docs.poset_from_doc(doc), None
    if "vertices" in doc:
        return None, docs.complex_from_doc(doc)
    raise ParseError("expected a poset or simplicial complex document")


def _relabel(X):
    return X.relabel({x: docs.label(x) for x in X.elements})


def cmd_pi1(args):
    X = docs.poset_from_doc(docs.read_document(args.input))
    pres = pi1_presentation(X, args.base)
    simp = simplify(pres.presentation, args.budget)
    ab = abelianization(pres.presentation).group
    return {
        "summary": f"{len(X)} elements, {len(X.covers)} edges",
        "elements": len(X),
        "presentation": str(pres.presentation),
        "generators": {g: [docs.label(v) for v in e] for g, e in pres.edge_of.items()},
        "simplify": simp.verdict,
        "simplified": str(simp.presentation),
        "abelianization": ab.describe(),
    }


def cmd_homology(args):
    X, K = _poset_or_complex(docs.read_document(args.input))
    if K is not None:
        return {"simplicial": simplicial_homology(K).as_record()}
    out = {"simplicial": poset_homology(X).as_record()}
    try:
        out["cellular"] = cellular_homology(X).as_record()
    except FinspaceError as err:
        out["cellular"] = {"error": err.name, "message": str(err)}
    return out


def cmd_pi2(args):
    X = docs.poset_from_doc(docs.read_document(args.input))
    return {"pi2": pi2(X, args.base, args.budget).as_record()}


def cmd_cover(args):
    c = docs.coloring_from_doc(docs.read_document(args.input))
    cov = build_cover(c)
    E = _relabel(cov.total)
    doc = docs.poset_to_doc(E)
    doc["projection"] = [[docs.label(e), docs.label(cov(e))] for e in cov.total.elements]
    doc["summary"] = f"{len(cov.total)} elements over {len(cov.base)}"
    return doc


def cmd_deck(args):
    c = docs.coloring_from_doc(docs.read_document(args.input))
    cov = build_cover(c)
    E = cov.total
    perms = [[E.idx(h[e]) for e in E.elements] for h in deck_transformations(cov)]
    return {"elements": [docs.label(e) for e in E.elements], "order": len(perms),
            "permutations": perms}


def cmd_coloring_check(args):
    c = docs.coloring_from_doc(docs.read_document(args.input))
    adm = is_admissible(c)
    out = {"admissible": str(adm.verdict)}
    if adm.counterexample is not None:
        lo, hi, ch1, ch2 = adm.counterexample
        out["counterexample"] = {"bottom": docs.label(lo), "top": docs.label(hi),
                                 "chains": [[docs.label(v) for v in ch1],
                                            [docs.label(v) for v in ch2]]}
    if c.poset.is_connected():
        out["connected"] = str(is_connected_coloring(c))
    return out


def cmd_equiv(args):
    c1 = docs.coloring_from_doc(docs.read_document(args.first))
    c2 = docs.coloring_from_doc(docs.read_document(args.second))
    res = are_equivalent(c1, c2)
    out = {"equivalent": str(res.verdict)}
    if res.witness is not None:
        G = c1.group
        out["automorphism"] = [G.label(res.witness.phi[g]) for g in range(G.order)]
        out["gauge"] = {docs.label(x): G.label(g) for x, g in res.witness.gauge.items()}
    return out


def cmd_aspherical(args):
    if args.cw2:
        X = docs.poset_from_doc(docs.read_document(args.input))
        return aspherical_2complex(X, certified_regular=True).as_record()
    text = args.input
    if not text.lstrip().startswith("<"):
        try:
            with open(text, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as err:
            raise ParseError(f"cannot read {text}: {err}") from None
    P = GroupPresentation.parse(text)
    return aspherical_presentation(P).as_record()


def cmd_board(args):
    b = board(args.kind, args.n, args.m)
    out = {"kind": b.kind, "n": b.n, "m": b.m, "edges": b.num_edges,
           "squares": len(b.squares), "vertices": len(b.vertices)}
    if args.action == "classes":
        out["classes"] = count_classes(b)
    elif args.action == "edges":
        out["edge_order"] = [[docs.label(a), docs.label(c)] for a, c in b.edges]
    elif args.action == "equiv":
        if len(args.files) != 2:
            raise ParseError("equiv needs two coloring files")
        cols = []
        for path in args.files:
            try:
                with open(path, encoding="utf-8") as fh:
                    cols.append(parse_coloring(b, fh.read()))
            except OSError as err:
                raise ParseError(f"cannot read {path}: {err}") from None
        from .boards import is_valid
        bad = [p for p, c in zip(args.files, cols) if not is_valid(b, c)]
        if bad:
            raise FinspaceError(f"invalid coloring in {bad}")
        res = moves_equivalent(b, *cols)
        out["equivalent"] = res.equivalent
        if res.equivalent:
            out["moves"] = [docs.label(v) for v in res.vertices]
    return out


def cmd_core(args):
    X = docs.poset_from_doc(docs.read_document(args.input))
    C = X.core()
    doc = docs.poset_to_doc(C)
    doc["summary"] = f"core has {len(C)} of {len(X)} elements"
    return doc


def cmd_milnor(args):
    G = parse_group(args.group)
    if not isinstance(G, FiniteGroup):
        if getattr(G, "is_finite", False):
            G = G.to_finite()[0]
        else:
            raise FinspaceError(f"{args.group} is not a finite group")
    m = milnor_poset(G)
    which = m.poset if args.total else m.quotient
    doc = docs.poset_to_doc(_relabel(which))
    doc["summary"] = (f"{len(m.quotient)} elements in the quotient, "
                      f"{len(m.poset)} in the total space")
    return doc


def cmd_verify(args):
    f = docs.map_from_doc(docs.read_document(args.input))
    res = verify_covering(f)
    if not res:
        raise NotCovering(res.reason, docs.label(res.counterexample))
    return {"covering": True, "degree": len(f.fiber(f.target.elements[0]))}


def cmd_corpus(args):
    results = run_corpus(seed=args.seed, fault=args.fault)
    return {"results": [{"check": r.name, "ok": r.ok, "detail": r.detail} for r in results],
            "passed": sum(r.ok for r in results), "total": len(results)}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--budget", type=int, default=2000, help="simplification effort")
    parser = argparse.ArgumentParser(prog="finspace", parents=[common],
                                     description="Invariants of finite posets.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_text, base=False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(fn=fn)
        if base:
            p.add_argument("--base", default=None, help="base point label")
        return p

    p = verb("pi1", cmd_pi1, "fundamental group presentation", base=True)
    p.add_argument("input", nargs="?", default="-")
    p = verb("homology", cmd_homology, "reduced integral homology")
    p.add_argument("input", nargs="?", default="-")
    p = verb("pi2", cmd_pi2, "second homotopy group", base=True)
    p.add_argument("input", nargs="?", default="-")
    p = verb("cover", cmd_cover, "covering poset of a coloring")
    p.add_argument("input", nargs="?", default="-")
    p = verb("deck", cmd_deck, "deck transformations of a coloring's cover")
    p.add_argument("input", nargs="?", default="-")
    p = verb("coloring-check", cmd_coloring_check, "admissibility and connectedness")
    p.add_argument("input", nargs="?", default="-")
    p = verb("equiv", cmd_equiv, "equivalence of two colorings")
    p.add_argument("first")
    p.add_argument("second")
    p = verb("aspherical", cmd_aspherical, "asphericity certificate")
    p.add_argument("input", help="presentation literal or file; poset file with --cw2")
    p.add_argument("--cw2", action="store_true", help="input is a regular 2-complex face poset")
    p = verb("board", cmd_board, "board colorings")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("action", choices=["classes", "equiv", "edges", "info"], nargs="?",
                   default="info")
    p.add_argument("files", nargs="*")
    p = verb("core", cmd_core, "remove beat points")
    p.add_argument("input", nargs="?", default="-")
    p = verb("milnor", cmd_milnor, "Milnor's free G-poset and its quotient")
    p.add_argument("--group", required=True)
    p.add_argument("--total", action="store_true", help="emit the total space instead")
    p = verb("verify", cmd_verify, "check that a map document is a covering")
    p.add_argument("input", nargs="?", default="-")
    p = verb("corpus", cmd_corpus, "run the acceptance corpus")
    p.add_argument("--fault", choices=["epsilon"], default=None,
                   help="inject a known fault to see the harness fail")
    return parser


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        report = args.fn(args)
    except (ParseError, UnknownGenerator, UnknownLabel) as err:
        # bad names in a document or literal are input errors too
        out.write(docs.dumps({"error": err.name, "message": str(err)}))
        return 2
    except FinspaceError as err:
        rec = {"error": err.name, "message": str(err)}
        cx = getattr(err, "counterexample", None)
        if cx is not None:
            rec["counterexample"] = cx if isinstance(cx, str) else docs.label(cx)
        out.write(docs.dumps(rec))
        return 1
    out.write(docs.dumps(report))
    if args.verb == "corpus" and report["passed"] != report["total"]:
        return 1
    return 0


def main():
    sys.exit(run())

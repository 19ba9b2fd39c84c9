"""JSON documents for posets, complexes, colorings, maps and reports."""
import json

from .colorings import Coloring
from .errors import ParseError
from .groups import (FgAbelianGroup, FiniteGroup, PresentedGroup, format_word, group_literal,
                     parse_group)
from .poset import MonotoneMap, Poset, SimplicialComplex, from_covers


def label(x):
    """String form of a label; tuples print as (a,b,...)."""
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        return "(" + ",".join(label(v) for v in x) + ")"
    return str(x)


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err}") from None


def read_document(path):
    if path == "-":
        import sys
        return loads(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as err:
        raise ParseError(f"cannot read {path}: {err}") from None


# --------------------------------------------------------------- posets ---

def poset_to_doc(X):
    return {"elements": [label(x) for x in X.elements],
            "covers": [[label(a), label(b)] for a, b in X.covers]}


def poset_from_doc(doc):
    if not isinstance(doc, dict) or "elements" not in doc or "covers" not in doc:
        raise ParseError("poset document needs 'elements' and 'covers'")
    elems = doc["elements"]
    if not all(isinstance(x, str) for x in elems):
        raise ParseError("elements must be strings")
    if len(set(elems)) != len(elems):
        raise ParseError("duplicate element labels")
    pairs = doc["covers"]
    if not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise ParseError("covers must be [lower, upper] pairs")
    return from_covers(elems, [tuple(p) for p in pairs])


def complex_to_doc(K):
    return {"vertices": [label(v) for v in K.vertices],
            "facets": [[label(v) for v in f] for f in K.facets()]}


def complex_from_doc(doc):
    if "vertices" not in doc or "facets" not in doc:
        raise ParseError("complex document needs 'vertices' and 'facets'")
    return SimplicialComplex(doc["vertices"], doc["facets"])


# ------------------------------------------------------------- groups -----

def group_to_doc(G):
    if isinstance(G, FiniteGroup):
        try:
            if parse_group(G.name) == G:
                return G.name
        except ParseError:
            pass
        return {"table": G.table, "labels": list(G.labels)}
    return group_literal(G)


def group_from_doc(doc):
    if isinstance(doc, dict):
        if "table" not in doc:
            raise ParseError("table group needs a 'table'")
        return FiniteGroup(doc["table"], doc.get("labels"))
    return parse_group(doc)


def element_to_doc(G, g):
    if isinstance(G, FgAbelianGroup):
        return g[0] if len(g) == 1 else list(g)
    if isinstance(G, PresentedGroup):
        return format_word(g)
    return g


def element_from_doc(G, lit):
    if isinstance(G, FiniteGroup):
        if isinstance(lit, int):
            if not 0 <= lit < G.order:
                raise ParseError(f"element index {lit} out of range")
            return lit
        return G.parse(lit)
    return G.parse(lit)


# ---------------------------------------------------------- colorings -----

def coloring_to_doc(c):
    doc = poset_to_doc(c.poset)
    doc["group"] = group_to_doc(c.group)
    doc["colors"] = [[label(a), label(b), element_to_doc(c.group, col)]
                     for (a, b), col in c.colors.items()]
    return doc


def coloring_from_doc(doc):
    X = poset_from_doc(doc)
    if "group" not in doc or "colors" not in doc:
        raise ParseError("coloring document needs 'group' and 'colors'")
    G = group_from_doc(doc["group"])
    colors = {}
    for item in doc["colors"]:
        if not isinstance(item, list) or len(item) != 3:
            raise ParseError("colors must be [lower, upper, element] triples")
        a, b, lit = item
        colors[(a, b)] = element_from_doc(G, lit)
    try:
        return Coloring(X, G, colors)
    except ValueError as err:
        raise ParseError(str(err)) from None


# --------------------------------------------------------------- maps -----

def map_to_doc(f):
    return {"source": poset_to_doc(f.source), "target": poset_to_doc(f.target),
            "map": [[label(x), label(f(x))] for x in f.source.elements]}


def map_from_doc(doc):
    if not all(k in doc for k in ("source", "target", "map")):
        raise ParseError("map document needs 'source', 'target' and 'map'")
    S = poset_from_doc(doc["source"])
    T = poset_from_doc(doc["target"])
    pairs = doc["map"]
    assignment = dict(pairs.items()) if isinstance(pairs, dict) else {a: b for a, b in pairs}
    return MonotoneMap(S, T, assignment)

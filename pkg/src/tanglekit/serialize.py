"""JSON-ready documents and plain-text renderings of the library's results."""

from __future__ import annotations

import json
from importlib import resources

from .bits import items_of
from .branchwidth import BranchDecomposition, DualityReport, InequalityReport
from .connectivity import ConnectivitySystem
from .errors import ParseError
from .graph import Graph, parse_graph
from .kappa import KappaTangle
from .separations import BlockSet, Separation, Torso
from .tangles import GraphTangle

SCHEMAS = ("graph", "components", "blocks", "torsos", "tangles", "kappa-tangles",
           "branchwidth", "treewidth", "duality", "inequalities")


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_schema(name: str) -> dict:
    text = resources.files("tanglekit").joinpath("schemas", f"{name}.json").read_text()
    return json.loads(text)


# ----------------------------------------------------------------------------
# graphs


def graph_doc(g: Graph) -> dict:
    return {"kind": "graph", "n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}


def graph_from_doc(doc: dict) -> Graph:
    try:
        n = doc["n"]
        edges = doc["edges"]
    except (KeyError, TypeError):
        raise ParseError("graph document needs 'n' and 'edges'") from None
    if not isinstance(n, int) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise ParseError("malformed graph document")
    if "m" in doc and doc["m"] != len(edges):
        raise ParseError("edge count does not match the edge list")
    return Graph(n, [tuple(e) for e in edges])


def read_graph(text: str) -> Graph:
    """Graph text format, or a graph JSON document."""
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return graph_from_doc(doc)
    return parse_graph(text)


# ----------------------------------------------------------------------------
# blocks and torsos


def blocks_doc(bs: BlockSet) -> dict:
    return {
        "kind": "blocks",
        "k": bs.k,
        "blocks": [sorted(b) for b in bs.members],
        "proper": [len(b) > bs.k + 1 for b in bs.members],
    }


def torso_doc(t: Torso) -> dict:
    return {
        "vertices": sorted(t.base_vertices),
        "real_edges": [list(e) for e in t.real_edges],
        "virtual_edges": [list(e) for e in t.virtual_edges],
        "witness_paths": [t.witness_paths[e] for e in t.virtual_edges],
        "order": t.order,
        "proper": t.proper,
    }


def torsos_doc(ts: list[Torso]) -> dict:
    return {"kind": "torsos", "components": [torso_doc(t) for t in ts]}


# ----------------------------------------------------------------------------
# tangles


def member_doc(s: Separation) -> dict:
    return {
        "separator": items_of(s.separator),
        "big_side": items_of(s.verts_b),
        "big_edges": items_of(s.edges_b),
    }


def _member_key(m: dict):
    return (len(m["separator"]), m["separator"], m["big_side"], m["big_edges"])


def tangle_doc(t: GraphTangle, core=None) -> dict:
    doc = {"order": t.order, "members": sorted((member_doc(s) for s in t.members), key=_member_key)}
    if core is not None:
        doc["core"] = sorted(core)
    return doc


def tangles_doc(items: list[tuple[GraphTangle, frozenset[int]]]) -> dict:
    return {"kind": "tangles", "count": len(items), "tangles": [tangle_doc(t, c) for t, c in items]}


def kappa_tangle_doc(t: KappaTangle) -> dict:
    return {"order": t.order, "members": [items_of(x) for x in t.sorted_members()]}


def kappa_tangles_doc(sys: ConnectivitySystem, tangles: list[KappaTangle]) -> dict:
    return {
        "kind": "kappa-tangles",
        "system": sys.kind,
        "universe": list(sys.names) if sys.names else [str(i) for i in range(1, sys.size + 1)],
        "count": len(tangles),
        "tangles": [kappa_tangle_doc(t) for t in tangles],
    }


# ----------------------------------------------------------------------------
# decompositions and reports


def decomposition_doc(sys: ConnectivitySystem, d: BranchDecomposition) -> dict:
    return {
        "nodes": list(range(d.tree.nodes)),
        "edges": [list(e) for e in d.tree.edges],
        "leaves": [[node, d.leaf_map[node]] for node in sorted(d.leaf_map)],
        "edge_widths": [[a, b, sys.kappa(x)] for a, b, x in d.oriented_sides()],
    }


def branchwidth_doc(sys: ConnectivitySystem, bw: int, d: BranchDecomposition) -> dict:
    return {"kind": "branchwidth", "system": sys.kind, "value": bw,
            "decomposition": decomposition_doc(sys, d)}


def duality_doc(sys: ConnectivitySystem, r: DualityReport) -> dict:
    return {"kind": "duality", "system": sys.kind, "branch_width": r.branch_width,
            "max_tangle_order": r.max_tangle_order, "holds": r.holds}


def inequalities_doc(r: InequalityReport) -> dict:
    return {"kind": "inequalities", "branch_width": r.branch_width, "treewidth": r.treewidth,
            "left": r.left, "right": r.right, "left_tight": r.left_tight,
            "right_tight": r.right_tight, "holds": r.holds}


# ----------------------------------------------------------------------------
# text rendering


def _vs(xs) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


def render_text(doc: dict) -> str:
    kind = doc["kind"]
    out = []
    if kind == "graph":
        out.append(f"{doc['n']} {doc['m']}")
        out += [f"{u} {v}" for u, v in doc["edges"]]
    elif kind == "components":
        out.append(f"connected {doc['connected']}")
        out += ["component " + _vs(c) for c in doc["components"]]
        out += ["biconnected " + _vs(c) for c in doc["biconnected"]]
        out.append(f"cut_vertices {_vs(doc['cut_vertices'])}")
    elif kind == "blocks":
        out.append(f"k {doc['k']} blocks {len(doc['blocks'])}")
        out += [f"{_vs(b)}{' proper' if p else ''}" for b, p in zip(doc["blocks"], doc["proper"])]
    elif kind == "torsos":
        out.append(f"components {len(doc['components'])}")
        for c in doc["components"]:
            out.append(f"torso {_vs(c['vertices'])} order {c['order']}"
                       f"{' proper' if c['proper'] else ''}")
            out += [f"  real {u}-{v}" for u, v in c["real_edges"]]
            out += [f"  virtual {u}-{v} via {'-'.join(map(str, p))}"
                    for (u, v), p in zip(c["virtual_edges"], c["witness_paths"])]
    elif kind == "tangles":
        out.append(f"tangles {doc['count']}")
        for t in doc["tangles"]:
            out.append(f"tangle order {t['order']} core {_vs(t['core'])} members {len(t['members'])}")
            out += [f"  sep {_vs(m['separator'])} big {_vs(m['big_side'])} edges {_vs(m['big_edges'])}"
                    for m in t["members"]]
    elif kind == "kappa-tangles":
        out.append(f"system {doc['system']} tangles {doc['count']}")
        for t in doc["tangles"]:
            out.append(f"tangle order {t['order']} members {len(t['members'])}")
            out += ["  " + _vs(m) for m in t["members"]]
    elif kind == "branchwidth":
        d = doc["decomposition"]
        out.append(f"branchwidth {doc['value']}")
        out += [f"edge {a} {b}" for a, b in d["edges"]]
        out += [f"leaf {n} {e}" for n, e in d["leaves"]]
    elif kind == "treewidth":
        out.append(f"treewidth {doc['value']}")
    elif kind == "duality":
        out.append(f"branch_width {doc['branch_width']} max_tangle_order {doc['max_tangle_order']} "
                   f"{'holds' if doc['holds'] else 'FAILS'}")
    elif kind == "inequalities":
        out.append(f"{doc['branch_width']} <= {doc['treewidth'] + 1} <= "
                   f"max(3/2*{doc['branch_width']}, 2) {'holds' if doc['holds'] else 'FAILS'}")
        out.append(f"left_tight {doc['left_tight']} right_tight {doc['right_tight']}")
    else:
        raise ValueError(f"no text form for {kind}")
    return "\n".join(out) + "\n"


"""Named graph families: the formula-defined XF families, figure-only
sporadic graphs, and the forbidden lists built from them.

Figure graphs use vertex names like ``"1"`` or ``"v1"``.  They are relabeled so
that numeric names come first (ascending), then ``v1, v2, v3``.  The map is
available through :func:`figure_labels`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graphs import Graph, GraphInputError, build_graph, complement


class FamilyError(GraphInputError):
    pass


# edge lists transcribed from the figure declarations
_FIGURES: dict[str, list[tuple[str, str]]] = {
    "T2": [("v1", "1"), ("1", "2"), ("2", "3"), ("3", "v2"), ("2", "5"), ("5", "v3")],
    "X2": [("v1", "1"), ("1", "2"), ("1", "5"), ("2", "3"), ("3", "v2"), ("3", "5"), ("5", "v3")],
    "X3": [("v1", "1"), ("v1", "3"), ("1", "4"), ("1", "v2"), ("v2", "5"), ("3", "4"), ("4", "5"),
           ("4", "v3")],
    "X30": [("v1", "1"), ("1", "2"), ("1", "3"), ("2", "v2"), ("2", "4"), ("3", "4"), ("3", "v3"),
            ("4", "v3")],
    "X31": [("v1", "1"), ("v1", "2"), ("1", "3"), ("1", "v2"), ("v2", "4"), ("2", "3"), ("3", "4"),
            ("3", "v3"), ("1", "2"), ("1", "4")],
    "X32": [("v1", "1"), ("v1", "2"), ("1", "3"), ("1", "v2"), ("v2", "4"), ("2", "3"), ("3", "4"),
            ("3", "v3"), ("1", "2")],
    "X33": [("v1", "1"), ("v1", "2"), ("1", "3"), ("1", "v2"), ("v2", "4"), ("2", "3"), ("3", "4"),
            ("3", "v3"), ("2", "v3")],
    "X34": [("v1", "1"), ("v1", "3"), ("1", "3"), ("1", "2"), ("v2", "4"), ("2", "3"), ("3", "4"),
            ("3", "v3"), ("4", "v3"), ("2", "v2"), ("1", "4")],
    "X35": [("v1", "1"), ("v1", "2"), ("1", "3"), ("1", "v2"), ("v2", "4"), ("2", "3"), ("3", "4"),
            ("3", "v3"), ("2", "v3"), ("1", "2")],
    "X36": [("v1", "1"), ("v1", "3"), ("1", "2"), ("v2", "4"), ("3", "4"), ("3", "v3"), ("4", "v3"),
            ("2", "v2"), ("2", "3"), ("1", "4")],
    "X37": [("v1", "1"), ("v1", "3"), ("v2", "4"), ("3", "4"), ("3", "v3"), ("4", "v3"), ("1", "v2")],
    "X38": [("v1", "1"), ("v1", "3"), ("v2", "4"), ("3", "4"), ("v3", "3"), ("v3", "5"), ("4", "5"),
            ("1", "v2")],
    "X39": [("v1", "1"), ("v1", "3"), ("1", "2"), ("v2", "4"), ("3", "v3"), ("4", "v3"), ("2", "v2"),
            ("2", "3"), ("1", "4")],
    "X40": [("v1", "1"), ("v1", "3"), ("1", "2"), ("v2", "4"), ("3", "v3"), ("4", "v3"), ("2", "v2"),
            ("2", "3"), ("1", "4"), ("2", "4")],
    "X41": [("v1", "1"), ("1", "2"), ("1", "3"), ("2", "v2"), ("2", "4"), ("3", "v3"), ("4", "v3")],
}

SPORADIC_NAMES = tuple(_FIGURES)


def _figure_order(name: str) -> list[str]:
    names = {a for e in _FIGURES[name] for a in e}
    nums = sorted((s for s in names if s.isdigit()), key=int)
    return nums + sorted(s for s in names if not s.isdigit())


def figure_labels(name: str) -> dict[str, int]:
    """Map from figure vertex names to graph labels for a sporadic graph."""
    name = name.upper()
    if name not in _FIGURES:
        raise FamilyError(f"unknown figure graph {name!r}")
    return {s: i + 1 for i, s in enumerate(_figure_order(name))}


def sporadic(name: str) -> Graph:
    lab = figure_labels(name)
    return build_graph(len(lab), [(lab[a], lab[b]) for a, b in _FIGURES[name.upper()]])


# formula families ------------------------------------------------------------

def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete bipartite needs a, b >= 1")
    return build_graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def xf1(n: int) -> Graph:
    """XF1^{2n+3}: 2n+7 vertices."""
    _need(n >= 0, "XF1 needs n >= 0")
    N = 2 * n + 7
    es = [(1, i) for i in range(2, 2 * n + 6)]
    es += [(i, i + 1) for i in range(2, 2 * n + 5)]
    es += [(2 * n + 5, 2 * n + 6), (2, 2 * n + 7)]
    return build_graph(N, es)


def xf5(n: int) -> Graph:
    """XF5^{2n+3}: 2n+8 vertices."""
    _need(n >= 0, "XF5 needs n >= 0")
    N = 2 * n + 8
    es = [(1, i) for i in range(3, 2 * n + 7)] + [(2, i) for i in range(3, 2 * n + 7)]
    es += [(i, i + 1) for i in range(2, 2 * n + 6)]
    es += [(2, 2 * n + 7), (2 * n + 6, 2 * n + 7), (1, 2 * n + 8), (3, 2 * n + 8)]
    return build_graph(N, es)


def xf6(n: int) -> Graph:
    """XF6^{2n+2}: 2n+7 vertices."""
    _need(n >= 0, "XF6 needs n >= 0")
    N = 2 * n + 7
    es = [(1, i) for i in range(2, 2 * n + 6)] + [(2, i) for i in range(3, 2 * n + 6)]
    es += [(i, i + 1) for i in range(2, 2 * n + 5)]
    es += [(2, 2 * n + 6), (2 * n + 5, 2 * n + 6), (1, 2 * n + 7), (3, 2 * n + 7)]
    return build_graph(N, es)


def xf2(n: int) -> Graph:
    """XF2^n: path v1,1..n+1,v2, apex c on 1..n+1, pendant v3 at c.

    Labels: path vertices 1..n+1, c = n+2, v1, v2, v3 = n+3, n+4, n+5.
    """
    _need(n >= 1, "XF2 needs n >= 1")
    c, v1, v2, v3 = n + 2, n + 3, n + 4, n + 5
    es = [(i, i + 1) for i in range(1, n + 1)] + [(i, c) for i in range(1, n + 2)]
    es += [(v1, 1), (n + 1, v2), (c, v3)]
    return build_graph(n + 5, es)


def _xf34(n: int, apex_edge: bool) -> Graph:
    _need(n >= 0, "XF3/XF4 need n >= 0")
    a, b, v1, v2, v3 = n + 2, n + 3, n + 4, n + 5, n + 6
    es = [(i, i + 1) for i in range(1, n + 1)]
    es += [(i, a) for i in range(1, n + 2)] + [(i, b) for i in range(1, n + 2)]
    es += [(v1, a), (b, v2), (a, v3), (b, v3), (1, v1), (n + 1, v2)]
    if apex_edge:
        es.append((a, b))
    return build_graph(n + 6, es)


def xf3(n: int) -> Graph:
    """XF3^n: path 1..n+1 with two adjacent apexes; n+6 vertices."""
    return _xf34(n, True)


def xf4(n: int) -> Graph:
    """XF4^n: as XF3^n without the apex-apex edge."""
    return _xf34(n, False)


def antihole(n: int) -> Graph:
    return complement(cycle(n))


def _need(ok: bool, msg: str) -> None:
    if not ok:
        raise FamilyError(msg)


# AT labels used by the certificate double check
def at_triple(name: str, n: int | None = None) -> tuple[int, int, int]:
    """The asteroidal triple the figures mark, in graph labels."""
    key = name.upper()
    if key in _FIGURES:
        lab = figure_labels(key)
        return lab["v1"], lab["v2"], lab["v3"]
    if key == "CYCLE":
        return (1, 3, 5)
    if key == "XF2":
        return (n + 3, n + 4, n + 5)
    if key in ("XF3", "XF4"):
        return (n + 4, n + 5, n + 6)
    raise FamilyError(f"no marked triple for {name}")


@dataclass(frozen=True)
class Member:
    """One instantiated member of a forbidden list."""

    name: str
    graph: Graph


def at_forbidden_list(max_vertices: int | None = None, smallest_only: bool = False) -> list[Member]:
    """Members of the AT forbidden list, up to ``max_vertices`` vertices.

    With ``smallest_only`` each of the 19 entries appears once at its least
    parameter: C6, T2, X2, X3, X30..X41, XF2^1 (the net), XF3^0, XF4^0.
    """
    cap = 10**9 if max_vertices is None else max_vertices
    out: list[Member] = []

    def grow(label, make, start, size):
        k = start
        while size(k) <= cap:
            out.append(Member(label(k), make(k)))
            if smallest_only:
                break
            k += 1

    if max_vertices is None and not smallest_only:
        raise FamilyError("infinite list needs a vertex cap")
    grow(lambda k: f"C{k}", cycle, 6, lambda k: k)
    for s in SPORADIC_NAMES:
        g = sporadic(s)
        if g.n <= cap:
            out.append(Member(s, g))
    grow(lambda k: f"XF2^{k}", xf2, 1, lambda k: k + 5)
    grow(lambda k: f"XF3^{k}", xf3, 0, lambda k: k + 6)
    grow(lambda k: f"XF4^{k}", xf4, 0, lambda k: k + 6)
    return out


GALLAI_SPORADIC = ("T2", "X31", "X2", "X30", "X3", "X32", "X33", "X35", "X34", "X36")


def gallai_list(max_vertices: int) -> list[Member]:
    """Forbidden induced subgraphs for co-comparability, up to a vertex cap.

    Sporadic members, the regular families C_n (n >= 6), XF2^{n+1},
    XF3^n, XF4^n, and the co-regular families (odd anti-holes,
    co-XF1^{2n+3}, co-XF5^{2n+3}, co-XF6^{2n+2}).  The parameter ranges of
    the regular XF families start one step lower than the printed list; the
    printed ranges leave the net, XF3^0 and XF4^0 uncovered although none of
    them is co-comparability.
    """
    out: list[Member] = []
    cap = max_vertices
    for s in GALLAI_SPORADIC:
        g = sporadic(s)
        if g.n <= cap:
            out.append(Member(s, g))
    for k in range(6, cap + 1):
        out.append(Member(f"C{k}", cycle(k)))
    for k in range(1, cap - 4):
        out.append(Member(f"XF2^{k}", xf2(k)))
    for k in range(0, cap - 5):
        out.append(Member(f"XF3^{k}", xf3(k)))
        out.append(Member(f"XF4^{k}", xf4(k)))
    for k in range(5, cap + 1, 2):
        out.append(Member(f"co-C{k}", antihole(k)))
    k = 0
    while 2 * k + 7 <= cap:
        out.append(Member(f"co-XF1^{2 * k + 3}", complement(xf1(k))))
        out.append(Member(f"co-XF6^{2 * k + 2}", complement(xf6(k))))
        if 2 * k + 8 <= cap:
            out.append(Member(f"co-XF5^{2 * k + 3}", complement(xf5(k))))
        k += 1
    return out


# family spec strings ---------------------------------------------------------

_ALIASES = {"net": "XF2:n=1", "claw": "bipartite:1,3", "bigclaw": "T2"}


def _ints(arg: str | None, count: int, name: str) -> list[int]:
    if arg is None:
        raise FamilyError(f"{name} needs a parameter")
    parts = [p.strip() for p in arg.split(",")]
    vals = []
    for p in parts:
        p = p.split("=", 1)[1] if "=" in p else p
        if not re.fullmatch(r"-?\d+", p):
            raise FamilyError(f"bad parameter {arg!r} for {name}")
        vals.append(int(p))
    if len(vals) != count:
        raise FamilyError(f"{name} takes {count} parameter(s)")
    return vals


def parse_family(spec: str) -> Graph:
    """Build a graph from strings like ``cycle:7``, ``coXF1:n=0``,
    ``complement:cycle:7``, ``X31`` or ``net``."""
    s = spec.strip()
    if not s:
        raise FamilyError("empty family spec")
    if s.lower() in _ALIASES:
        return parse_family(_ALIASES[s.lower()])
    head, _, arg = s.partition(":")
    arg = arg or None
    key = head.lower()
    if key in ("complement", "co"):
        if arg is None:
            raise FamilyError("complement needs an inner family")
        return complement(parse_family(arg))
    if key.startswith("co") and key != "complete" and len(key) > 2:
        return complement(parse_family(head[2:] + (":" + arg if arg else "")))
    simple = {"path": path, "cycle": cycle, "complete": complete, "antihole": antihole,
              "star": star, "xf1": xf1, "xf2": xf2, "xf3": xf3, "xf4": xf4, "xf5": xf5, "xf6": xf6}
    if key in simple:
        return simple[key](*_ints(arg, 1, head))
    if key == "bipartite":
        return complete_bipartite(*_ints(arg, 2, head))
    if head.upper() in _FIGURES:
        if arg is not None:
            raise FamilyError(f"{head} takes no parameter")
        return sporadic(head)
    raise FamilyError(f"unknown family {head!r}")

"""F-purity of the small co-regular graphs across characteristics, next to the
published Y/N/? grid."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .families import antihole, complement, xf1, xf5, xf6
from .fedder import FPURE, NOT_FPURE, TIMEOUT, fedder
from .graphs import Graph
from .poly import Effort

PRIMES = (2, 3, 5, 7, 11)

ROWS = ("coC5", "coC7", "co-XF1^3", "co-XF5^3", "co-XF6^2")

PUBLISHED = {
    "coC5": "NYYYY",
    "coC7": "NY???",
    "co-XF1^3": "NN???",
    "co-XF5^3": "NN???",
    "co-XF6^2": "NN???",
}


def row_graph(name: str) -> Graph:
    return {
        "coC5": lambda: antihole(5),
        "coC7": lambda: antihole(7),
        "co-XF1^3": lambda: complement(xf1(0)),
        "co-XF5^3": lambda: complement(xf5(0)),
        "co-XF6^2": lambda: complement(xf6(0)),
    }[name]()


def published(name: str, p: int) -> str:
    return PUBLISHED[name][PRIMES.index(p)]


_SYMBOL = {FPURE: "Y", NOT_FPURE: "N", TIMEOUT: "timeout"}


@dataclass
class Cell:
    graph: str
    p: int
    verdict: str
    paper: str
    elapsed_ms: float
    effort: dict

    @property
    def symbol(self) -> str:
        return _SYMBOL[self.verdict]

    @property
    def contradicts(self) -> bool:
        return self.paper in "YN" and self.symbol != self.paper

    def to_dict(self) -> dict:
        return {"graph": self.graph, "p": self.p, "verdict": self.verdict, "cell": self.symbol,
                "paper": self.paper, "elapsed_ms": self.elapsed_ms, "effort": self.effort}


def run_cell(name: str, p: int, budget: int | None = None, seconds: float | None = None) -> Cell:
    effort = Effort(max_reductions=budget, max_seconds=seconds)
    r = fedder(row_graph(name), p, budget=effort, name=name)
    return Cell(name, p, r.verdict, published(name, p), r.elapsed_ms, r.effort)


def _run(args) -> Cell:
    return run_cell(*args)


def run_table(rows=ROWS, primes=PRIMES, budget: int | None = 10_000_000, seconds: float | None = None,
              jobs: int = 1) -> list[Cell]:
    tasks = [(r, p, budget, seconds) for r in rows for p in primes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_run, tasks))
    return [_run(t) for t in tasks]


def render(cells: list[Cell]) -> str:
    primes = sorted({c.p for c in cells})
    rows = list(dict.fromkeys(c.graph for c in cells))
    by = {(c.graph, c.p): c for c in cells}
    w = max(len(r) for r in rows) + 2
    head = "graph".ljust(w) + "".join(f"{p:>12}" for p in primes)
    lines = [head, "-" * len(head)]
    for r in rows:
        parts = []
        for p in primes:
            c = by.get((r, p))
            parts.append(f"{(c.symbol + ' (' + c.paper + ')') if c else '':>12}")
        lines.append(r.ljust(w) + "".join(parts))
    lines.append("cells: computed (published)")
    return "\n".join(lines)

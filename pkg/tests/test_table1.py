import pytest

from fpure_lab.families import antihole, complement, xf1
from fpure_lab.table1 import PRIMES, PUBLISHED, ROWS, Cell, published, render, row_graph, run_cell, run_table


def test_published_grid_shape():
    assert list(PUBLISHED) == list(ROWS)
    assert all(len(v) == len(PRIMES) for v in PUBLISHED.values())
    assert published("coC5", 2) == "N" and published("coC7", 5) == "?"


def test_row_graphs():
    assert row_graph("coC5") == antihole(5)
    assert row_graph("co-XF1^3") == complement(xf1(0))
    assert [row_graph(r).n for r in ROWS] == [5, 7, 7, 8, 7]


@pytest.mark.parametrize("row,p", [("coC5", 2), ("coC5", 3), ("co-XF6^2", 3), ("co-XF1^3", 2)])
def test_cells_match(row, p):
    c = run_cell(row, p)
    assert c.symbol == published(row, p) and not c.contradicts


def test_question_cell_may_time_out():
    c = run_cell("coC7", 5, budget=100)
    assert c.symbol == "timeout" and not c.contradicts


def test_contradiction_flag():
    bad = Cell("coC5", 2, "fpure", "N", 0.0, {})
    assert bad.contradicts
    assert not Cell("coC7", 5, "fpure", "?", 0.0, {}).contradicts


def test_jobs_do_not_change_results():
    a = run_table(("coC5",), (2, 3), jobs=1)
    b = run_table(("coC5",), (2, 3), jobs=2)
    assert [c.verdict for c in a] == [c.verdict for c in b]
    text = render(a)
    assert "coC5" in text and "N (N)" in text and "Y (Y)" in text

import pytest

from utdiagram import RegularIdeal, Symbol, build_diagram, enumerate_regular_ideals
from utdiagram.checks import (
    check_live_subalgebra,
    check_minus_closed_below,
    check_minus_subalgebra,
)
from utdiagram.roots import positive_roots

EXAMPLE_ROWS = ["", "+", "++", "x--", "*++x", "*x-+-", "**xx--"]
EXAMPLE_ASCII = "\n".join(row.ljust(7) for row in EXAMPLE_ROWS)


def test_example_cells(example_diagram):
    d = example_diagram
    assert set(d.cells(Symbol.CROSS)) == {(4, 1), (6, 2), (7, 3), (7, 4), (5, 4)}
    assert set(d.cells(Symbol.PLUS)) == {(2, 1), (3, 1), (3, 2), (5, 2), (5, 3), (6, 4)}
    assert set(d.cells(Symbol.MINUS)) == {(4, 2), (4, 3), (6, 3), (6, 5), (7, 5), (7, 6)}
    assert set(d.cells(Symbol.BULLET)) == {(5, 1), (6, 1), (7, 1), (7, 2)}
    assert d.cells(Symbol.EMPTY) == []


def test_example_steps(example_diagram):
    d = example_diagram
    assert d.crosses == [(4, 1), (6, 2), (7, 3), (7, 4), (5, 4)]
    minus = [set(st.minus_set) for st in d.steps]
    assert minus == [{(4, 2), (4, 3)}, {(6, 3), (6, 5)}, {(7, 5)}, {(7, 6)}, set()]
    assert d.steps[-1].remaining == frozenset()


def test_example_d_minus(example_diagram):
    d = example_diagram
    assert d.d_minus_set(1) == {(4, 2), (4, 3)}
    assert d.d_minus_set(2) == {(4, 2), (4, 3), (6, 3), (6, 5)}
    assert d.d_minus_set(3) == {(4, 3), (6, 3), (6, 5), (7, 5)}
    assert d.d_minus_set(4) == {(6, 5), (7, 5), (7, 6)}
    assert d.d_minus_set(5) == d.d_minus_set(4)
    with pytest.raises(IndexError):
        d.d_minus_set(6)
    with pytest.raises(IndexError):
        d.d_minus_set(0)


def test_d_plus_same_column(example_diagram):
    d = example_diagram
    for i in range(1, d.index + 1):
        assert all(r.col == d.step(i).cross.col for r in d.d_plus_set(i))


def test_example_render(example_diagram):
    assert example_diagram.render(ascii=True) == EXAMPLE_ASCII
    uni = example_diagram.render()
    assert "⊗" in uni and "•" in uni and "." not in uni
    assert all(len(line) == 7 for line in uni.split("\n"))


def test_example_stats(example_diagram):
    assert example_diagram.stats() == {"index": 5, "dim": 17, "max_orbit_dim": 12}


def test_small_diagrams():
    d3 = build_diagram(RegularIdeal.empty(3))
    assert d3.cells(Symbol.CROSS) == [(3, 1)]
    assert d3.cells(Symbol.PLUS) == [(2, 1)]
    assert d3.cells(Symbol.MINUS) == [(3, 2)]
    assert len(d3.steps) == 1

    d2 = build_diagram(RegularIdeal.empty(2))
    assert d2.cells(Symbol.CROSS) == [(2, 1)]
    assert d2.stats() == {"index": 1, "dim": 1, "max_orbit_dim": 0}

    d4 = build_diagram(RegularIdeal.empty(4))
    assert set(d4.cells(Symbol.CROSS)) == {(4, 1), (3, 2)}
    assert d4.stats() == {"index": 2, "dim": 6, "max_orbit_dim": 4}

    d1 = build_diagram(RegularIdeal.empty(1))
    assert d1.stats() == {"index": 0, "dim": 0, "max_orbit_dim": 0}


@pytest.mark.parametrize("n", range(2, 9))
def test_full_ut_index_is_half_n(n):
    assert build_diagram(RegularIdeal.empty(n)).index == n // 2


def test_deterministic():
    for ideal in enumerate_regular_ideals(6):
        a = build_diagram.__wrapped__(ideal)
        b = build_diagram.__wrapped__(ideal)
        assert a.steps == b.steps and dict(a.grid) == dict(b.grid)


@pytest.mark.parametrize("n", range(1, 8))
def test_partition_and_pairing(n):
    for ideal in enumerate_regular_ideals(n):
        d = build_diagram(ideal)
        counts = {s: len(d.cells(s)) for s in Symbol}
        assert counts[Symbol.EMPTY] == 0
        assert counts[Symbol.PLUS] == counts[Symbol.MINUS]
        assert counts[Symbol.CROSS] + counts[Symbol.PLUS] + counts[Symbol.MINUS] == ideal.dim
        assert sum(counts.values()) == len(positive_roots(n))
        for st in d.steps:
            k, t = st.cross
            assert [(k, p.row) for p in st.plus_set] == list(st.minus_set)
            assert all(p.col == t for p in st.plus_set)


@pytest.mark.parametrize("n", range(1, 8))
def test_live_part_is_subalgebra(n):
    for ideal in enumerate_regular_ideals(n):
        assert check_live_subalgebra(build_diagram(ideal)) == []


def test_minus_part_literal_closure_counterexample():
    """The literal closure of D_i^- fails here: (7,5)+(5,4)=(7,4) sits above xi_4=(6,4)."""
    ideal = RegularIdeal.from_roots(7, [(4, 1), (5, 1), (6, 1), (7, 1), (6, 2), (7, 2)])
    d = build_diagram(ideal)
    assert d.crosses == [(3, 1), (5, 2), (7, 3), (6, 4), (6, 5)]
    assert d.d_minus_set(4) == {(5, 4), (7, 5), (7, 6)}
    assert (7, 4) in d.steps[2].minus_set
    assert check_minus_subalgebra(d) == ["step 4: (7,5)+(5,4)=(7,4) leaves D_i^-"]
    assert check_minus_closed_below(d) == []


@pytest.mark.parametrize("n", range(1, 7))
def test_minus_part_is_subalgebra_up_to_6(n):
    for ideal in enumerate_regular_ideals(n):
        assert check_minus_subalgebra(build_diagram(ideal)) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_minus_part_closed_below_cross(n):
    for ideal in enumerate_regular_ideals(n):
        assert check_minus_closed_below(build_diagram(ideal)) == []

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import flood_components, qualifying_components
from tilepump.lattice import (
    Point,
    Vector,
    connected_components,
    diameter,
    find_nonconflicting_component,
    fixed_polyominoes,
    is_connected,
    make_shape,
    shape_walk,
    translate_shape,
)

import pytest

U_SHAPE = {(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)}

cells = st.sets(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), max_size=25)
vectors = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(lambda v: v != (0, 0))


@st.composite
def shapes(draw, max_cells=9):
    """Random connected shapes grown cell by cell."""
    shape = {(0, 0)}
    for _ in range(draw(st.integers(0, max_cells - 1))):
        x, y = draw(st.sampled_from(sorted(shape)))
        dx, dy = draw(st.sampled_from([(1, 0), (-1, 0), (0, 1), (0, -1)]))
        shape.add((x + dx, y + dy))
    return frozenset(shape)


def test_components_small_cases():
    assert connected_components(set()) == []
    assert connected_components({(0, 0), (1, 0)}) == [{(0, 0), (1, 0)}]
    assert connected_components({(0, 0), (2, 0)}) == [{(0, 0)}, {(2, 0)}]
    assert len(connected_components({(0, 0), (1, 1)})) == 2


def test_components_ordered_by_lowest_point():
    comps = connected_components({(5, 0), (0, 3), (0, 4), (9, -1)})
    assert comps == [{(9, -1)}, {(5, 0)}, {(0, 3), (0, 4)}]


@given(cells)
def test_components_partition_the_input(points):
    comps = connected_components(points)
    assert set().union(*comps) == points if comps else not points
    assert sum(len(c) for c in comps) == len(points)
    for c in comps:
        assert is_connected(c)
    assert sorted(map(sorted, comps)) == sorted(map(sorted, flood_components(points)))


def test_translate_examples():
    assert translate_shape({(0, 0)}, (1, 0)) == {(1, 0)}
    assert translate_shape({(0, 0), (1, 0)}, (0, 0)) == {(0, 0), (1, 0)}
    assert translate_shape({(0, 0), (0, 1)}, (2, -2)) == {(2, -2), (2, -1)}


@given(cells, vectors)
def test_translate_round_trip(points, v):
    back = translate_shape(translate_shape(points, v), Vector(*v) * -1)
    assert back == points


def test_make_shape_rejects_bad_input():
    with pytest.raises(ValueError):
        make_shape([])
    with pytest.raises(ValueError):
        make_shape([(0, 0), (1, 1)])


def test_nonconflicting_component_examples():
    assert find_nonconflicting_component({(0, 0)}, (1, 0)) == {(2, 0)}
    assert find_nonconflicting_component(U_SHAPE, (1, 0)) == {(4, 0), (4, 1)}


def test_large_vector_whole_difference_qualifies():
    s0 = make_shape({(0, 0), (1, 0), (1, 1)})
    v = (diameter(s0) + 5, 0)
    comp = find_nonconflicting_component(s0, v)
    assert comp == translate_shape(s0, (2 * v[0], 0))


def test_nonzero_vector_required():
    with pytest.raises(ValueError):
        find_nonconflicting_component({(0, 0)}, (0, 0))


def test_walk_examples():
    trace = shape_walk({(0, 0)}, (1, 0))
    assert trace.steps == () and trace.final_component == {(2, 0)}
    trace = shape_walk(U_SHAPE, (1, 0))
    assert [(s.component, tuple(s.anchor), s.exit_multiplier) for s in trace.steps] == [
        ({(2, 1)}, (2, 1), 2)
    ]
    assert trace.final_component == {(4, 0), (4, 1)}


@settings(max_examples=300)
@given(shapes(), vectors)
def test_component_matches_filter_oracle(s0, v):
    comp = find_nonconflicting_component(s0, v)
    qualifying = qualifying_components(s0, v)
    assert comp in qualifying
    assert min(comp, key=lambda p: (p[1], p[0])) == min(
        (min(c, key=lambda p: (p[1], p[0])) for c in qualifying), key=lambda p: (p[1], p[0]))


@settings(max_examples=300)
@given(shapes(), vectors)
def test_walk_visits_distinct_components_and_lands_well(s0, v):
    trace = shape_walk(s0, v)
    seen = [step.component for step in trace.steps]
    assert len(set(seen)) == len(seen)
    for a in seen:
        for b in seen:
            assert a == b or a.isdisjoint(b)
    assert len(seen) <= len(flood_components(translate_shape(s0, (2 * v[0], 2 * v[1]))
                                             - translate_shape(s0, v)))
    assert trace.final_component in qualifying_components(s0, v)


def test_polyomino_counts():
    # fixed polyomino counts 1, 2, 6, 19, 63, 216, 760
    polys = fixed_polyominoes(7)
    by_size = [sum(1 for p in polys if len(p) == n) for n in range(1, 8)]
    assert by_size == [1, 2, 6, 19, 63, 216, 760]
    assert len(set(polys)) == 1067


def test_point_and_vector_arithmetic():
    assert Point(1, 2) + Vector(3, -1) == (4, 1)
    assert Point(1, 2) - Vector(1, 1) == (0, 1)
    assert Vector(2, -3) * 2 == (4, -6)
    assert -Vector(1, 0) == (-1, 0)

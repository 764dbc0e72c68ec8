"""Cyclic strip geometry and lattice-description parsing."""

import pytest

from pottstrip.lattice import (
    HORIZONTAL,
    VERTICAL,
    CyclicStrip,
    FixedBoundaryLattice,
    fixed_boundary_lattice,
    horizontal,
    parse_lattice,
    square_strip,
    vertical,
)


def test_square_strip_counts():
    strip = square_strip(3, 4)
    assert strip.vertex_count == 12
    assert strip.edge_count == 20
    assert strip.face_count == 10  # Euler: F = E - V + 2
    assert str(strip) == "square:3x4"


def test_width_one_strip_has_no_verticals():
    strip = square_strip(1, 3)
    assert strip.edge_count == 3
    assert all(op.kind == HORIZONTAL for op in strip.column_program)


def test_column_program_order():
    strip = square_strip(3, 1)
    kinds = [(op.kind, op.site) for op in strip.column_program]
    assert kinds == [
        (VERTICAL, 0),
        (VERTICAL, 1),
        (HORIZONTAL, 0),
        (HORIZONTAL, 1),
        (HORIZONTAL, 2),
    ]


def test_edges_wrap_the_periodic_direction():
    strip = square_strip(2, 2)
    edges = list(strip.edges())
    assert len(edges) == strip.edge_count
    horizontals = [(u, w, d) for (u, w, d) in edges if d == 1]
    assert ((0, 2, 1)) in horizontals  # column 0 -> column 1
    assert ((2, 0, 1)) in horizontals  # column 1 wraps to column 0
    verticals = [(u, w, d) for (u, w, d) in edges if d == 0]
    assert (0, 1, 0) in verticals


def test_length_one_strip_has_self_loops():
    strip = square_strip(2, 1)
    loops = [(u, w, d) for (u, w, d) in strip.edges() if u == w]
    assert len(loops) == 2  # each horizontal bond closes on itself
    assert all(d == 1 for (_, _, d) in loops)


def test_vertex_indexing_wraps():
    strip = square_strip(3, 4)
    assert strip.vertex(1, 0) == 1
    assert strip.vertex(0, 1) == 3
    assert strip.vertex(0, 4) == strip.vertex(0, 0)


def test_invalid_dimensions():
    with pytest.raises(ValueError):
        square_strip(0, 2)
    with pytest.raises(ValueError):
        square_strip(2, 0)


def test_edge_op_constructors():
    assert vertical(1).kind == VERTICAL
    assert vertical(1).site == 1
    assert horizontal(0).kind == HORIZONTAL
    with pytest.raises(ValueError):
        vertical(-1)


def test_parse_lattice():
    strip = parse_lattice("square:2x3")
    assert strip == square_strip(2, 3)
    for bad in ("square:2", "square:2x", "hex:2x3", "square:2x3x4", "2x3",
                "square:ax3", "square:2x-1"):
        with pytest.raises(ValueError):
            parse_lattice(bad)


def test_fixed_boundary_lattice():
    lat = fixed_boundary_lattice(3, 4)
    assert isinstance(lat, FixedBoundaryLattice)
    assert lat.free_site_count == 4
    assert lat.boundary_site_count == 8
    assert lat.strip() == square_strip(3, 4)  # same bond geometry
    with pytest.raises(ValueError):
        fixed_boundary_lattice(2, 4)


def test_strip_is_hashable_and_frozen():
    strip = square_strip(2, 2)
    assert hash(strip) == hash(square_strip(2, 2))
    with pytest.raises(AttributeError):
        strip.width = 3

"""Strip lattices: cyclic square-lattice strips and their fixed-boundary kin.

A cyclic strip of width L and length N lives on an annulus: N columns of L
sites, consecutive columns joined by horizontal bonds, column N joined back
to column 1.  One column's worth of bonds is described by a *column
program*, a sequence of edge operations applied in order:

* ``vertical(i)``   -- bond between sites i and i+1 inside the column;
* ``horizontal(i)`` -- bond from site i to site i of the next column.

The square strip uses the program [vertical(0..L-2), horizontal(0..L-1)],
repeated for each of the N columns.  For N = 1 the horizontal bonds close
onto their own column (self-loops in the quotient graph); they are kept as
distinct edges, which the cluster expansion handles without special cases.

Vertex/edge/face counts satisfy Euler's formula on the sphere (the annulus
plus its two caps): F = E - V + 2.
"""

from __future__ import annotations

from dataclasses import dataclass

VERTICAL = "vertical"
HORIZONTAL = "horizontal"


@dataclass(frozen=True)
class EdgeOp:
    """One bond of a column program."""

    kind: str
    site: int

    def __post_init__(self):
        if self.kind not in (VERTICAL, HORIZONTAL):
            raise ValueError(f"unknown edge kind {self.kind!r}")
        if self.site < 0:
            raise ValueError("site must be >= 0")

    def __str__(self) -> str:
        return f"{self.kind}({self.site})"


def vertical(site: int) -> EdgeOp:
    return EdgeOp(VERTICAL, site)


def horizontal(site: int) -> EdgeOp:
    return EdgeOp(HORIZONTAL, site)


#: An edge of the quotient graph: (vertex u, vertex v, column displacement).
#: Horizontal edges carry displacement +1; a cluster whose internal
#: displacements are inconsistent winds around the annulus.
Edge = tuple[int, int, int]


@dataclass(frozen=True)
class CyclicStrip:
    """A width-L, length-N strip with periodic length direction.

    Vertices are indexed ``row + width * column``.  The same column program
    is applied for every column, so the transfer matrix is a fixed product
    of elementary operators and the bond list below enumerates exactly the
    bonds that product encodes -- the cluster expansion and the transfer
    route therefore weigh identical edge sets.
    """

    width: int
    length: int
    column_program: tuple[EdgeOp, ...]

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("width must be >= 1")
        if self.length < 1:
            raise ValueError("length must be >= 1")
        for op in self.column_program:
            limit = self.width - 1 if op.kind == VERTICAL else self.width
            if op.site >= limit:
                raise ValueError(f"{op} does not fit a width-{self.width} strip")

    @property
    def vertex_count(self) -> int:
        return self.width * self.length

    @property
    def edge_count(self) -> int:
        return self.length * len(self.column_program)

    @property
    def face_count(self) -> int:
        return self.edge_count - self.vertex_count + 2

    def vertex(self, row: int, column: int) -> int:
        if not 0 <= row < self.width:
            raise ValueError(f"row {row} outside range(0, {self.width})")
        return row + self.width * (column % self.length)

    def edges(self) -> tuple[Edge, ...]:
        """All bonds, column by column in program order."""
        out: list[Edge] = []
        for t in range(self.length):
            for op in self.column_program:
                if op.kind == VERTICAL:
                    out.append((self.vertex(op.site, t), self.vertex(op.site + 1, t), 0))
                else:
                    out.append((self.vertex(op.site, t), self.vertex(op.site, t + 1), 1))
        return tuple(out)

    def __str__(self) -> str:
        return f"square:{self.width}x{self.length}"


def square_strip(width: int, length: int) -> CyclicStrip:
    """The standard cyclic square strip.

    >>> s = square_strip(3, 4)
    >>> s.vertex_count, s.edge_count, s.face_count
    (12, 20, 10)
    """
    program = tuple(vertical(i) for i in range(width - 1)) + tuple(
        horizontal(i) for i in range(width)
    )
    return CyclicStrip(width, length, program)


@dataclass(frozen=True)
class FixedBoundaryLattice:
    """A width-L strip whose first and last rows are frozen to one spin value.

    The geometry is that of the cyclic strip (same bonds, including the
    bonds inside each boundary row, each worth a factor 1+v when the
    boundary spins agree); only rows 1..L-2 carry free spins.  Width 2 has
    no free rows at all and is excluded as degenerate.
    """

    width: int
    length: int

    def __post_init__(self):
        if self.width < 3:
            raise ValueError("fixed-boundary strips need width >= 3")
        if self.length < 1:
            raise ValueError("length must be >= 1")

    @property
    def free_site_count(self) -> int:
        return (self.width - 2) * self.length

    @property
    def boundary_site_count(self) -> int:
        return 2 * self.length

    def strip(self) -> CyclicStrip:
        """The underlying cyclic strip whose bonds this lattice uses."""
        return square_strip(self.width, self.length)


def fixed_boundary_lattice(width: int, length: int) -> FixedBoundaryLattice:
    return FixedBoundaryLattice(width, length)


_BUILDERS = {"square": square_strip}


def parse_lattice(text: str) -> CyclicStrip:
    """Parse a lattice description like ``square:3x4``.

    >>> parse_lattice("square:2x3").edge_count
    9
    """
    kind, sep, size = text.partition(":")
    if not sep or kind not in _BUILDERS:
        raise ValueError(
            f"unknown lattice description {text!r}; expected e.g. square:LxN"
        )
    w, sep, n = size.partition("x")
    if not sep:
        raise ValueError(f"lattice size must look like LxN, got {size!r}")
    try:
        width, length = int(w), int(n)
    except ValueError:
        raise ValueError(f"lattice size must be integers, got {size!r}") from None
    return _BUILDERS[kind](width, length)

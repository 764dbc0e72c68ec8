"""Cluster transfer matrices on connectivity states, and their characters.

One column of a strip acts on a slice by its column program.  On a
connectivity state the two bond types act as

    vertical(i)   =  1 + v * J(i, i+1)     J: join the two blocks
    horizontal(i) =  v * 1 + D(i)          D: detach the point

where D pays a factor Q when it vacates an unmarked block (a finished
cluster), a factor 1 when the block keeps other points, and *drops* the
transition when it vacates a marked block -- that move lowers the mark
count and belongs to a different sector.  Likewise the join branch of a
vertical bond is dropped when it would fuse two marked blocks.  With those
rules the matrix T_l on the states with l marks is the diagonal sub-block
of the full transfer matrix in the l-bridge sector, and the character

    K(l) = trace(T_l ** N)

is an exact polynomial in Q and v.  Powers are computed by repeated exact
matrix multiplication; no eigenvalues, no floats.

``verify_block_structure`` rebuilds the *full* transfer matrix on two-slice
states and checks the claimed structure directly: bridge count never
increases, states of fixed bridge count split by left profile into
n(L, l) groups of size n(L, l) with no transitions between groups, and
every group's sub-matrix equals T_l on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .connectivity import (
    ConnectivityState,
    DetachTag,
    TwoSliceState,
    count_states,
    enumerate_states,
    enumerate_two_slice,
)
from .lattice import HORIZONTAL, VERTICAL, CyclicStrip, EdgeOp
from .polynomial import MultiPoly, Q, v

Row = tuple[MultiPoly, ...]


@dataclass(frozen=True)
class TransferBlock:
    """An exact matrix over the canonical basis of connectivity states.

    ``rows[a][b]`` is the amplitude from basis state b to basis state a.
    """

    width: int
    marks: int
    basis: tuple[ConnectivityState, ...]
    rows: tuple[Row, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def entry(self, a: int, b: int) -> MultiPoly:
        return self.rows[a][b]

    def __matmul__(self, other: "TransferBlock") -> "TransferBlock":
        if self.basis != other.basis:
            raise ValueError("transfer blocks act on different bases")
        n = self.dimension
        rows = []
        for a in range(n):
            row = []
            for b in range(n):
                acc = MultiPoly.zero()
                for k in range(n):
                    left = self.rows[a][k]
                    if left.is_zero:
                        continue
                    right = other.rows[k][b]
                    if right.is_zero:
                        continue
                    acc = acc + left * right
                row.append(acc)
            rows.append(tuple(row))
        return TransferBlock(self.width, self.marks, self.basis, tuple(rows))

    def power(self, n: int) -> "TransferBlock":
        if n < 1:
            raise ValueError("power must be >= 1")
        result = self
        for _ in range(n - 1):
            result = result @ self
        return result

    def trace(self) -> MultiPoly:
        out = MultiPoly.zero()
        for a in range(self.dimension):
            out = out + self.rows[a][a]
        return out


@lru_cache(maxsize=None)
def _basis(width: int, marks: int) -> tuple[ConnectivityState, ...]:
    return tuple(enumerate_states(width, marks))


def _action(op: EdgeOp, state: ConnectivityState) -> list[tuple[ConnectivityState, MultiPoly]]:
    """Sparse action of one bond on one state (dropped transitions omitted)."""
    if op.kind == VERTICAL:
        i = op.site
        bi = state.block_index_of(i)
        bj = state.block_index_of(i + 1)
        if bi == bj:
            return [(state, MultiPoly.one() + v)]
        out = [(state, MultiPoly.one())]
        if not (state.is_marked(bi) and state.is_marked(bj)):
            out.append((state.join(i, i + 1), v))
        return out
    outcome = state.detach(op.site)
    out = [(state, v)]
    if outcome.tag is DetachTag.TERMINATED_MARKED:
        return out
    weight = Q if outcome.tag is DetachTag.COMPLETED_UNMARKED else MultiPoly.one()
    out.append((outcome.state, weight))
    return out


def edge_operator(width: int, marks: int, op: EdgeOp) -> TransferBlock:
    """The matrix of a single bond on the states with ``marks`` marks.

    >>> from .lattice import horizontal
    >>> blk = edge_operator(1, 0, horizontal(0))
    >>> print(blk.rows[0][0])
    Q + v
    """
    basis = _basis(width, marks)
    index = {s: k for k, s in enumerate(basis)}
    cols: list[dict[int, MultiPoly]] = []
    for state in basis:
        col: dict[int, MultiPoly] = {}
        for target, weight in _action(op, state):
            a = index[target]
            col[a] = col.get(a, MultiPoly.zero()) + weight
        cols.append(col)
    n = len(basis)
    rows = tuple(
        tuple(cols[b].get(a, MultiPoly.zero()) for b in range(n)) for a in range(n)
    )
    return TransferBlock(width, marks, basis, rows)


@lru_cache(maxsize=None)
def column_transfer(strip: CyclicStrip, marks: int) -> TransferBlock:
    """The ordered product of the column program's bond operators (first
    bond applied first) on the fixed-mark basis.

    For the square strip of width 3, the one-mark block is 9 x 9:

    >>> from .lattice import square_strip
    >>> column_transfer(square_strip(3, 2), 1).dimension
    9
    """
    if marks > strip.width:
        raise ValueError(f"cannot mark {marks} blocks on width {strip.width}")
    basis = _basis(strip.width, marks)
    index = {s: k for k, s in enumerate(basis)}
    # start as identity, then push each bond through
    cols: list[dict[int, MultiPoly]] = [{k: MultiPoly.one()} for k in range(len(basis))]
    for op in strip.column_program:
        new_cols: list[dict[int, MultiPoly]] = []
        for col in cols:
            out: dict[int, MultiPoly] = {}
            for k, coeff in col.items():
                for target, weight in _action(op, basis[k]):
                    a = index[target]
                    value = out.get(a, MultiPoly.zero()) + coeff * weight
                    out[a] = value
            new_cols.append(out)
        cols = new_cols
    n = len(basis)
    rows = tuple(
        tuple(cols[b].get(a, MultiPoly.zero()) for b in range(n)) for a in range(n)
    )
    return TransferBlock(strip.width, marks, basis, rows)


def character_K(strip: CyclicStrip, marks: int) -> MultiPoly:
    """The character K(1, 2l+1) = trace(T_l ** N), an exact polynomial.

    Zero for l > L: a width-L slice cannot seed more than L wrapping
    clusters.

    >>> from .lattice import square_strip
    >>> print(character_K(square_strip(1, 3), 0))
    Q^3 + 3*Q^2*v + 3*Q*v^2 + v^3
    >>> print(character_K(square_strip(1, 3), 1))
    v^3
    """
    if marks < 0:
        raise ValueError("marks must be >= 0")
    if marks > strip.width:
        return MultiPoly.zero()
    return column_transfer(strip, marks).power(strip.length).trace()


# ----------------------------------------------------------------------
# full-matrix verification


def _two_slice_action(op: EdgeOp, state: TwoSliceState) -> list[tuple[TwoSliceState, MultiPoly]]:
    if op.kind == VERTICAL:
        i = op.site
        joined = state.join_right(i, i + 1)
        if joined == state:
            return [(state, MultiPoly.one() + v)]
        return [(state, MultiPoly.one()), (joined, v)]
    detached, completed = state.detach_right(op.site)
    weight = Q if completed else MultiPoly.one()
    if detached == state:
        return [(state, v + weight)]
    return [(state, v), (detached, weight)]


@dataclass(frozen=True)
class SectorReport:
    """Findings for one bridge sector of the full transfer matrix."""

    bridges: int
    group_count: int
    expected_groups: int
    group_sizes: tuple[int, ...]
    expected_size: int
    cross_group_zero: bool
    matches_reference: bool


@dataclass(frozen=True)
class BlockStructureReport:
    """Outcome of checking the full transfer matrix against its claimed
    decomposition into reference blocks."""

    width: int
    dimension: int
    triangular_ok: bool
    sectors: tuple[SectorReport, ...]
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.triangular_ok and not self.failures and all(
            s.group_count == s.expected_groups
            and all(n == s.expected_size for n in s.group_sizes)
            and s.cross_group_zero
            and s.matches_reference
            for s in self.sectors
        )


def verify_block_structure(strip: CyclicStrip) -> BlockStructureReport:
    """Build the column transfer on the full two-slice basis and verify:

    * bridge count never increases across a non-zero entry;
    * for each l, the l-bridge states split by left profile into
      count_states(L, l) groups of count_states(L, l) states each;
    * entries between different groups of the same bridge count vanish;
    * each group's sub-matrix, rows and columns ordered by the canonical
      order of the reduced states, equals column_transfer(strip, l).

    Kept to widths <= 4; the basis has Catalan(2L) states.
    """
    if strip.width > 4:
        raise ValueError("block-structure verification is capped at width 4")
    basis = enumerate_two_slice(strip.width)
    index = {s: k for k, s in enumerate(basis)}
    n = len(basis)

    cols: list[dict[int, MultiPoly]] = [{k: MultiPoly.one()} for k in range(n)]
    for op in strip.column_program:
        new_cols = []
        for col in cols:
            out: dict[int, MultiPoly] = {}
            for k, coeff in col.items():
                for target, weight in _two_slice_action(op, basis[k]):
                    a = index[target]
                    out[a] = out.get(a, MultiPoly.zero()) + coeff * weight
            new_cols.append(out)
        cols = new_cols

    bridges = [s.bridge_count() for s in basis]
    failures: list[str] = []

    triangular_ok = True
    for b, col in enumerate(cols):
        for a, value in col.items():
            if value.is_zero:
                continue
            if bridges[a] > bridges[b]:
                triangular_ok = False
                failures.append(
                    f"bridge count grows {bridges[b]} -> {bridges[a]} on "
                    f"{basis[b].render()} -> {basis[a].render()}"
                )

    # group the l-bridge states by left profile
    groups: dict[tuple, list[int]] = {}
    for k, s in enumerate(basis):
        groups.setdefault((bridges[k], s.left_profile()), []).append(k)

    sector_reports = []
    for l in range(strip.width + 1):
        expected = count_states(strip.width, l)
        sector_groups = sorted(
            (key, members) for key, members in groups.items() if key[0] == l
        )
        group_sizes = tuple(len(m) for _, m in sector_groups)
        cross_zero = True
        matches = True
        reference = column_transfer(strip, l)
        ref_index = {s: i for i, s in enumerate(reference.basis)}
        members_by_group = [m for _, m in sector_groups]
        member_set_by_group = [set(m) for m in members_by_group]
        for gi, members in enumerate(members_by_group):
            others = {
                k
                for gj, s in enumerate(member_set_by_group)
                if gj != gi
                for k in s
            }
            for b in members:
                for a, value in cols[b].items():
                    if not value.is_zero and a in others:
                        cross_zero = False
                        failures.append(
                            f"leakage between sub-blocks at l={l}: "
                            f"{basis[b].render()} -> {basis[a].render()}"
                        )
            # order group members by their reduced state and compare
            reduced = {k: basis[k].reduced() for k in members}
            if sorted(ref_index[reduced[k]] for k in members) != list(
                range(reference.dimension)
            ):
                matches = False
                failures.append(
                    f"group at l={l} does not reduce onto the reference basis"
                )
                continue
            ordered = sorted(members, key=lambda k: ref_index[reduced[k]])
            for bb, b in enumerate(ordered):
                for aa, a in enumerate(ordered):
                    got = cols[b].get(a, MultiPoly.zero())
                    want = reference.rows[aa][bb]
                    if got != want:
                        matches = False
                        failures.append(
                            f"entry mismatch at l={l}, "
                            f"{basis[b].render()} -> {basis[a].render()}: "
                            f"{got} != {want}"
                        )
        sector_reports.append(
            SectorReport(
                bridges=l,
                group_count=len(sector_groups),
                expected_groups=expected,
                group_sizes=group_sizes,
                expected_size=expected,
                cross_group_zero=cross_zero,
                matches_reference=matches,
            )
        )
        if len(sector_groups) != expected:
            failures.append(
                f"sector l={l} has {len(sector_groups)} sub-blocks, expected {expected}"
            )
        if any(size != expected for size in group_sizes):
            failures.append(
                f"sector l={l} has sub-block sizes {group_sizes}, expected all {expected}"
            )

    return BlockStructureReport(
        width=strip.width,
        dimension=n,
        triangular_ok=triangular_ok,
        sectors=tuple(sector_reports),
        failures=tuple(failures),
    )

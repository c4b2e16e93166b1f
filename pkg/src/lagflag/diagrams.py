"""Shifted Young diagrams in the staircase frame, seen as boundary lattice paths.

A shifted Young diagram in the frame ``(n, n-1, ..., 1)`` is encoded by the
walk of its boundary, read from the origin at the top-right corner of the
frame towards the staircase diagonal: one character per unit step, ``V`` for
a step down and ``H`` for a step left.  The walk always has exactly ``n``
steps, and the set of rows it encloses is the strict partition

    parts = { n + 1 - i : step i goes down },  i = 1..n  (1-based).

This gives the subset bijection between diagrams and subsets of ``{1..n}``,
hence ``2**n`` diagrams in frame ``n``.

The boundary decomposes into maximal runs of equal-direction steps, the
*segments*.  Odd-indexed segments are vertical, even-indexed horizontal; a
leading vertical segment of length zero is inserted when the walk starts
with a horizontal step, so that the alternation always starts vertically.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

from .errors import DomainError

DOWN = "V"
LEFT = "H"

#: Largest frame size `enumerate_diagrams` accepts by default (2**n growth).
DEFAULT_MAX_FRAME = 16


@dataclass(frozen=True)
class ShiftedDiagram:
    """A shifted Young diagram, stored as its boundary step string."""

    n: int
    steps: str

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"frame size must be non-negative, got {self.n}")
        if len(self.steps) != self.n:
            raise DomainError(
                f"expected {self.n} boundary steps, got {len(self.steps)}"
            )
        bad = set(self.steps) - {DOWN, LEFT}
        if bad:
            raise DomainError(f"boundary steps must be 'V' or 'H', got {sorted(bad)}")

    @classmethod
    def from_parts(cls, n: int, parts) -> "ShiftedDiagram":
        """Build the diagram in frame ``n`` whose row lengths are ``parts``.

        ``parts`` must be distinct integers in ``1..n``; order is irrelevant.
        """
        part_set = set(parts)
        if len(part_set) != len(tuple(parts)):
            raise DomainError(f"parts must be distinct, got {tuple(parts)}")
        if any(p < 1 or p > n for p in part_set):
            raise DomainError(f"parts must lie in 1..{n}, got {tuple(parts)}")
        steps = "".join(
            DOWN if (n + 1 - i) in part_set else LEFT for i in range(1, n + 1)
        )
        return cls(n, steps)

    @property
    def parts(self) -> tuple[int, ...]:
        """Row lengths in decreasing order."""
        return tuple(
            self.n + 1 - i for i in range(1, self.n + 1) if self.steps[i - 1] == DOWN
        )

    @property
    def weight(self) -> int:
        """Number of boxes of the diagram."""
        return sum(self.parts)

    def as_tuple(self) -> tuple[int, ...]:
        """The diagram as an ``n``-tuple of row lengths, padded with zeros."""
        parts = self.parts
        return parts + (0,) * (self.n - len(parts))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "steps": self.steps,
            "parts": list(self.parts),
            "weight": self.weight,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "ShiftedDiagram":
        diagram = cls(payload["n"], payload["steps"])
        if "parts" in payload and tuple(payload["parts"]) != diagram.parts:
            raise DomainError(
                f"parts {payload['parts']} do not match steps {payload['steps']!r}"
            )
        if "weight" in payload and payload["weight"] != diagram.weight:
            raise DomainError(f"weight {payload['weight']} does not match steps")
        return diagram

    def __str__(self) -> str:
        return self.steps


def enumerate_diagrams(n: int, *, max_n: int = DEFAULT_MAX_FRAME) -> list[ShiftedDiagram]:
    """All ``2**n`` diagrams in frame ``n``, lexicographic with ``V`` before ``H``."""
    if n < 0:
        raise DomainError(f"frame size must be non-negative, got {n}")
    if n > max_n:
        raise DomainError(
            f"frame size {n} exceeds the enumeration limit {max_n} (2**n diagrams)"
        )
    return [ShiftedDiagram(n, "".join(c)) for c in product((DOWN, LEFT), repeat=n)]


def weight(diagram: ShiftedDiagram) -> int:
    """Number of boxes; equals the sum of the row lengths."""
    return diagram.weight


class Orientation(str, Enum):
    VERTICAL = "V"
    HORIZONTAL = "H"


@dataclass(frozen=True)
class Boundary:
    """Run-length decomposition of a boundary walk into alternating segments.

    ``segments[i]`` is the pair (orientation, length) of the ``i+1``-st
    segment.  The first segment is vertical and is the only one whose length
    may be zero; the lengths sum to the frame size.
    """

    segments: tuple[tuple[Orientation, int], ...]

    @property
    def segment_count(self) -> int:
        return len(self.segments)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(length for _, length in self.segments)

    def length(self, t: int) -> int:
        """Length of segment ``t`` (1-based)."""
        if not 1 <= t <= self.segment_count:
            raise DomainError(f"segment index {t} out of range 1..{self.segment_count}")
        return self.segments[t - 1][1]

    def cumulative(self, t: int) -> int:
        """Boundary distance from the origin to the end of segment ``t``.

        ``cumulative(0)`` is 0 (the origin itself).
        """
        if not 0 <= t <= self.segment_count:
            raise DomainError(f"segment index {t} out of range 0..{self.segment_count}")
        return sum(length for _, length in self.segments[:t])

    def horizontal_indices(self) -> tuple[int, ...]:
        """1-based indices of the horizontal segments (the even indices)."""
        return tuple(range(2, self.segment_count + 1, 2))

    def to_json(self) -> list:
        return [[orient.value, length] for orient, length in self.segments]


def boundary(diagram: ShiftedDiagram) -> Boundary:
    """Segment decomposition of the diagram's boundary walk."""
    segments: list[tuple[Orientation, int]] = []
    steps = diagram.steps
    if steps and steps[0] == LEFT:
        segments.append((Orientation.VERTICAL, 0))
    i = 0
    while i < len(steps):
        j = i
        while j < len(steps) and steps[j] == steps[i]:
            j += 1
        orient = Orientation.VERTICAL if steps[i] == DOWN else Orientation.HORIZONTAL
        segments.append((orient, j - i))
        i = j
    return Boundary(tuple(segments))


class RowType(str, Enum):
    FULL_TOP_ROW = "FullTopRow"
    EMPTY_RIGHT_COLUMN = "EmptyRightColumn"


@dataclass(frozen=True)
class DiagramClass:
    """Classification data of a diagram.

    ``index_w`` is the least segment count ``t`` whose cumulative boundary
    length is nonzero and congruent to the frame size mod 2.  A diagram is
    almost even when the index equals the number of segments, and K-even
    when the index is even.
    """

    index_w: int
    is_almost_even: bool
    is_k_even: bool
    row_type: RowType

    def to_json(self) -> dict:
        return {
            "index": self.index_w,
            "almost_even": self.is_almost_even,
            "k_even": self.is_k_even,
            "row_type": self.row_type.value,
        }


def classify(diagram: ShiftedDiagram) -> DiagramClass:
    """Compute the index and the derived class flags of a diagram (frame >= 1)."""
    if diagram.n < 1:
        raise DomainError("classification needs a frame of size at least 1")
    b = boundary(diagram)
    l = b.segment_count
    index = None
    for t in range(1, l + 1):
        c = b.cumulative(t)
        if c != 0 and c % 2 == diagram.n % 2:
            index = t
            break
    assert index is not None  # cumulative(l) == n always matches
    row = RowType.FULL_TOP_ROW if diagram.steps[0] == DOWN else RowType.EMPTY_RIGHT_COLUMN
    return DiagramClass(
        index_w=index,
        is_almost_even=(index == l),
        is_k_even=(index % 2 == 0),
        row_type=row,
    )


def delete_top_row(diagram: ShiftedDiagram) -> ShiftedDiagram:
    """Remove the full top row; defined only for row type FullTopRow."""
    if diagram.n == 0 or diagram.steps[0] != DOWN:
        raise DomainError("delete_top_row requires row type FullTopRow (first step V)")
    return ShiftedDiagram(diagram.n - 1, diagram.steps[1:])


def delete_right_column(diagram: ShiftedDiagram) -> ShiftedDiagram:
    """Remove the empty rightmost column; defined only for EmptyRightColumn."""
    if diagram.n == 0 or diagram.steps[0] != LEFT:
        raise DomainError(
            "delete_right_column requires row type EmptyRightColumn (first step H)"
        )
    return ShiftedDiagram(diagram.n - 1, diagram.steps[1:])


_LETTER_STEP = {"r": DOWN, "c": LEFT}


@dataclass(frozen=True)
class ClassSets:
    """The named diagram families of one frame.

    ``all_diagrams`` is the full family (U), ``almost_even`` the almost even
    diagrams (A), ``k_even`` the K-even ones (E), each in enumeration order.
    """

    n: int
    all_diagrams: tuple[ShiftedDiagram, ...]
    almost_even: tuple[ShiftedDiagram, ...]
    k_even: tuple[ShiftedDiagram, ...]

    def family(self, name: str) -> tuple[ShiftedDiagram, ...]:
        try:
            return {
                "U": self.all_diagrams,
                "A": self.almost_even,
                "E": self.k_even,
            }[name]
        except KeyError:
            raise DomainError(f"unknown family {name!r}; expected U, A or E") from None

    def refine(self, name: str, letters: str = "") -> tuple[ShiftedDiagram, ...]:
        """Refinement of a family by its first boundary steps.

        Letter ``r`` asks for a down step (full row deleted first), ``c``
        for a left step.  Two letters constrain the first two steps; the
        frame must be at least as large as the number of letters.
        """
        if any(ch not in _LETTER_STEP for ch in letters):
            raise DomainError(f"refinement letters must be 'r' or 'c', got {letters!r}")
        if len(letters) > 2:
            raise DomainError("at most two refinement letters are supported")
        if self.n < len(letters):
            raise DomainError(
                f"{len(letters)}-letter refinements need frame size >= {len(letters)}"
            )
        prefix = "".join(_LETTER_STEP[ch] for ch in letters)
        return tuple(d for d in self.family(name) if d.steps.startswith(prefix))


def class_sets(n: int, *, max_n: int = DEFAULT_MAX_FRAME) -> ClassSets:
    """Enumerate frame ``n`` and split it into the U/A/E families."""
    diagrams = tuple(enumerate_diagrams(n, max_n=max_n))
    if n == 0:
        # Degenerate base: the empty frame has one diagram, taken to lie in
        # every family so the recursion bases are bookkept uniformly.
        return ClassSets(0, diagrams, diagrams, diagrams)
    classes = [classify(d) for d in diagrams]
    return ClassSets(
        n=n,
        all_diagrams=diagrams,
        almost_even=tuple(d for d, c in zip(diagrams, classes) if c.is_almost_even),
        k_even=tuple(d for d, c in zip(diagrams, classes) if c.is_k_even),
    )

"""Direction-labeled paths, embeddings, and the symmetry operators.

A path on k vertices is described by its k-1 edge labels, each one of
U, D, L, R (up, down, left, right). An embedding assigns vertex i (0-based
here, 1-based in user-facing text) to an index into a canonical point set.

The three symmetry operators act jointly on paths, point sets and
embeddings: reversal walks the path backwards, rotation turns the plane a
quarter turn counterclockwise, mirroring flips it across the vertical axis.
Applying an operator to all three components preserves the defining
properties of an embedding, which the test suite checks exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionViolated
from .geometry import ConvexPointSet, Point, validate

LABELS = "UDLR"

_REVERSE_FLIP = {"U": "D", "D": "U", "L": "R", "R": "L"}
_ROTATE_LABEL = {"U": "L", "L": "D", "D": "R", "R": "U"}
_MIRROR_LABEL = {"U": "U", "D": "D", "L": "R", "R": "L"}


@dataclass(frozen=True)
class DirPath:
    """Edge labels of a directed path; the empty string is a single vertex."""

    labels: str

    def __post_init__(self) -> None:
        for ch in self.labels:
            if ch not in LABELS:
                raise PreconditionViolated(
                    f"path labels must be drawn from {LABELS}, got {ch!r}"
                )

    @property
    def n_vertices(self) -> int:
        return len(self.labels) + 1

    def subpath(self, i: int, j: int) -> "DirPath":
        """Vertices i through j, 1-based and inclusive on both ends."""
        if not 1 <= i <= j <= self.n_vertices:
            raise PreconditionViolated(f"bad subpath range [{i}, {j}]")
        return DirPath(self.labels[i - 1 : j - 1])

    def directions_used(self) -> frozenset:
        return frozenset(self.labels)

    def __str__(self) -> str:
        return self.labels or "(single vertex)"


@dataclass(frozen=True)
class Embedding:
    """assignment[i] is the point index hosting vertex i+1."""

    assignment: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, i: int) -> int:
        return self.assignment[i]


def reverse_path(p: DirPath) -> DirPath:
    return DirPath("".join(_REVERSE_FLIP[c] for c in reversed(p.labels)))


def rotate_path(p: DirPath) -> DirPath:
    return DirPath("".join(_ROTATE_LABEL[c] for c in p.labels))


def mirror_path(p: DirPath) -> DirPath:
    return DirPath("".join(_MIRROR_LABEL[c] for c in p.labels))


def rotate_point(p: Point) -> Point:
    return Point(-p.y, p.x)


def mirror_point(p: Point) -> Point:
    return Point(-p.x, p.y)


def rotate_set(s: ConvexPointSet) -> ConvexPointSet:
    # Re-validate to recover the canonical order of the rotated points.
    return validate([rotate_point(p) for p in s.points])


def mirror_set(s: ConvexPointSet) -> ConvexPointSet:
    return validate([mirror_point(p) for p in s.points])


def reverse_embedding(e: Embedding) -> Embedding:
    return Embedding(tuple(reversed(e.assignment)))


def rotate_embedding(e: Embedding, s: ConvexPointSet) -> Embedding:
    """Carry an embedding on s over to rotate_set(s)."""
    target = rotate_set(s)
    return Embedding(
        tuple(target.index_of(rotate_point(s.points[i])) for i in e.assignment)
    )


def mirror_embedding(e: Embedding, s: ConvexPointSet) -> Embedding:
    """Carry an embedding on s over to mirror_set(s)."""
    target = mirror_set(s)
    return Embedding(
        tuple(target.index_of(mirror_point(s.points[i])) for i in e.assignment)
    )

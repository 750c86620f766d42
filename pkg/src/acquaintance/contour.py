"""Contour walks of rooted trees and the choice of one marked position per vertex.

The contour is the closed depth-first walk around a tree, crossing every
tree edge once in each direction.  Dropping the final step back to the root
leaves a walk with ``2n - 2`` positions that starts at the root.  Marking the
first visit of even-level vertices and the last visit of odd-level vertices
selects exactly one position per vertex, with consecutive marks at most three
steps apart; the walk can then stand in for a path on which agents move.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .exceptions import ContourGapError
from .graph import SpanningTree

MAX_GAP = 3


@dataclass(frozen=True)
class Contour:
    """Linearised contour of ``tree``.

    ``positions[k]`` is the tree vertex visited at step ``k`` of the walk.
    ``marks`` holds one position index per vertex, in ascending order, or is
    ``None`` until :func:`mark_positions` has run.
    """

    tree: SpanningTree
    positions: tuple
    marks: tuple | None = None

    def __len__(self):
        return len(self.positions)

    @cached_property
    def steps(self) -> tuple:
        """Tree edge crossed by step ``k -> k + 1`` of the walk, as ``(low, high)``."""
        pos = self.positions
        return tuple(
            (u, v) if u < v else (v, u) for u, v in zip(pos, pos[1:])
        )

    def marked_vertices(self) -> list[int]:
        """Vertices in the order their marks appear along the walk."""
        return [self.positions[k] for k in self.marks]


def build_contour(tree: SpanningTree) -> Contour:
    n = tree.n
    if n == 0:
        return Contour(tree, ())
    children = tree.children
    walk = [tree.root]
    path = [tree.root]
    stack = [iter(children[tree.root])]
    while stack:
        for c in stack[-1]:
            walk.append(c)
            path.append(c)
            stack.append(iter(children[c]))
            break
        else:
            stack.pop()
            path.pop()
            if path:
                walk.append(path[-1])
    if n > 1:
        walk.pop()  # the closing step into the root
    return Contour(tree, tuple(walk))


def mark_positions(c: Contour) -> Contour:
    """Mark first visits at even depth and last visits at odd depth.

    Raises :class:`ContourGapError` if two consecutive marks end up more than
    three steps apart.
    """
    level = c.tree.level
    chosen = {}
    for k, v in enumerate(c.positions):
        if level[v] % 2 == 0:
            chosen.setdefault(v, k)
        else:
            chosen[v] = k
    marks = tuple(sorted(chosen.values()))
    if len(marks) != c.tree.n:
        raise ContourGapError(f"{len(marks)} marks for {c.tree.n} vertices")
    for a, b in zip(marks, marks[1:]):
        if b - a > MAX_GAP:
            raise ContourGapError(f"marks {a} and {b} are {b - a} steps apart")
    return Contour(c.tree, c.positions, marks)


def contour(tree: SpanningTree) -> Contour:
    """Build the contour of ``tree`` and mark it."""
    return mark_positions(build_contour(tree))


def visit_counts(c: Contour) -> list[int]:
    counts = Counter(c.positions)
    return [counts[v] for v in range(c.tree.n)]


def to_dot(c: Contour) -> str:
    """Graphviz rendering of the tree with contour steps and marks.

    Each edge is labelled with the walk steps that cross it; marked vertices
    are filled and show their marked position.
    """
    steps = {}
    for k in range(len(c.positions) - 1):
        u, v = c.positions[k], c.positions[k + 1]
        steps.setdefault((min(u, v), max(u, v)), []).append(k)
    marked = {}
    if c.marks is not None:
        marked = {c.positions[k]: k for k in c.marks}
    lines = ["graph contour {", "  node [shape=circle];"]
    for v in range(c.tree.n):
        if v in marked:
            lines.append(f'  {v} [label="{v}\\n@{marked[v]}", style=filled, fillcolor=gold];')
        else:
            lines.append(f"  {v};")
    for (u, v) in sorted(c.tree.tree_edges):
        label = ",".join(str(k) for k in steps.get((u, v), []))
        lines.append(f'  {u} -- {v} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

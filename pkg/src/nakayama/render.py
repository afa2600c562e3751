"""Text rendering of the Auslander-Reiten quiver in triangular layout.

M(t,l) is drawn at x = 2(t-1) - (l-1), y = l-1, so simples sit on the
bottom row two columns apart and projectives of length l rise above them.
"""

from dataclasses import dataclass

from .algebra import Module, all_indecomposables, is_module
from .homology import pd_table


@dataclass(frozen=True)
class Vertex:
    x: int
    y: int
    module: Module
    label: str


@dataclass(frozen=True)
class QuiverLayout:
    vertices: tuple
    edges: tuple
    labelled: bool


def position(M):
    return 2 * (M.top - 1) - (M.length - 1), M.length - 1


def layout(A, label_mode="pd", mark=(), marker="*"):
    """Vertices and irreducible maps of A.

    ``mark`` is a collection of modules whose labels get ``marker`` appended.
    """
    if label_mode not in ("pd", "none"):
        raise ValueError(f"unknown label mode {label_mode!r}")
    tab = pd_table(A)
    mark = set(mark)
    verts = []
    edges = []
    for M in all_indecomposables(A):
        x, y = position(M)
        label = str(tab[M.top, M.length]) if label_mode == "pd" else ""
        if M in mark:
            label += marker
        verts.append(Vertex(x, y, M, label))
        # socle quotient and inclusion as radical
        if M.length > 1:
            edges.append((M, Module(M.top, M.length - 1)))
        up = Module(M.top + 1, M.length + 1)
        if M.top < A.n and is_module(A, up):
            edges.append((M, up))
    return QuiverLayout(tuple(sorted(verts, key=lambda v: v.module)), tuple(sorted(edges)), label_mode == "pd")


def to_text(lay):
    if not lay.vertices:
        return ""
    width = max(1, max(len(v.label) for v in lay.vertices))
    xmax = max(v.x for v in lay.vertices)
    ymax = max(v.y for v in lay.vertices)
    rows = [[" " * width for _ in range(xmax + 1)] for _ in range(ymax + 1)]
    for v in lay.vertices:
        rows[v.y][v.x] = (v.label or "o").rjust(width)
    return "".join("".join(r).rstrip() + "\n" for r in reversed(rows))


def to_graph_desc(lay):
    lines = []
    for v in lay.vertices:
        lines.append(f"vertex {v.module} [{v.label}]" if v.label else f"vertex {v.module}")
    for a, b in lay.edges:
        lines.append(f"edge {a} -> {b}")
    return "\n".join(lines) + "\n"

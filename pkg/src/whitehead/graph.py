"""Whitehead graphs on the 2r letters of F_r.

Vertex ``2(i-1)`` is x_i and ``2(i-1)+1`` is x_i^-1, matching the display
order a, A, b, B, ...  Each adjacent pair ``pq`` of a word adds an edge
between p and q^-1; the optional external edge joins the last letter to
the inverse of the first.

Multiplicities are kept, but the structural predicates only look at the
underlying simple graph.
"""

from __future__ import annotations

from typing import Iterable

from .words import Word, WordError, check_rank, letter_char


def vertex(c: int) -> int:
    return 2 * (abs(c) - 1) + (c < 0)


def vertex_label(v: int) -> str:
    i = v // 2 + 1
    return letter_char(-i if v % 2 else i)


class WhGraph:
    """Multigraph on 2r vertices given by a symmetric multiplicity matrix."""

    def __init__(self, rank: int):
        self.rank = check_rank(rank)
        n = 2 * self.rank
        self.adjacency = [[0] * n for _ in range(n)]
        self.external: tuple[int, int] | None = None
        self.total = 0

    @property
    def includes_external(self) -> bool:
        return self.external is not None

    @property
    def num_vertices(self) -> int:
        return 2 * self.rank

    def add_edge(self, u: int, v: int) -> None:
        self.adjacency[u][v] += 1
        if u != v:
            self.adjacency[v][u] += 1
        self.total += 1

    def neighbours(self, u: int, skip: int = -1) -> Iterable[int]:
        return (v for v, m in enumerate(self.adjacency[u]) if m and v != u and v != skip)

    def edges(self) -> list[tuple[int, int, int]]:
        """(u, v, multiplicity) for u < v with multiplicity > 0."""
        n = self.num_vertices
        return [(u, v, self.adjacency[u][v])
                for u in range(n) for v in range(u + 1, n) if self.adjacency[u][v]]

    def copy(self) -> WhGraph:
        g = WhGraph(self.rank)
        g.adjacency = [row[:] for row in self.adjacency]
        g.external = self.external
        g.total = self.total
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, WhGraph):
            return NotImplemented
        return (self.rank == other.rank and self.adjacency == other.adjacency
                and self.external == other.external)

    def __repr__(self) -> str:
        es = ", ".join(f"{vertex_label(u)}{vertex_label(v)}" + (f"x{m}" if m > 1 else "")
                       for u, v, m in self.edges())
        return f"WhGraph(rank={self.rank}, edges=[{es}])"


def build_graph(w: Word, include_external: bool = False) -> WhGraph:
    g = WhGraph(w.rank)
    letters = w.letters
    for p, q in zip(letters, letters[1:]):
        g.add_edge(vertex(p), vertex(-q))
    if include_external:
        if not letters:
            raise WordError("the external edge needs a nonempty word")
        ext = (vertex(letters[-1]), vertex(-letters[0]))
        g.add_edge(*ext)
        g.external = ext
    return g


def is_complete(g: WhGraph) -> bool:
    adj = g.adjacency
    n = g.num_vertices
    return all(adj[u][v] for u in range(n) for v in range(u + 1, n))


def components(g: WhGraph, removed: int = -1) -> list[list[int]]:
    """Connected components of the simple graph, optionally without one vertex."""
    seen = [False] * g.num_vertices
    if removed >= 0:
        seen[removed] = True
    comps = []
    for s in range(g.num_vertices):
        if seen[s]:
            continue
        seen[s] = True
        comp, todo = [s], [s]
        while todo:
            u = todo.pop()
            for v in g.neighbours(u, skip=removed):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    todo.append(v)
        comps.append(comp)
    return comps


def cut_vertices(g: WhGraph) -> list[int]:
    """Vertices whose removal increases the number of components.

    Isolated vertices count as components, so removing one never qualifies.
    """
    base = len(components(g))
    return [v for v in range(g.num_vertices) if len(components(g, removed=v)) > base]


def has_cut_vertex(g: WhGraph) -> bool:
    return bool(cut_vertices(g))


def has_isolated_edge(g: WhGraph) -> bool:
    return any(len(c) == 2 for c in components(g))


class ScanState:
    """Incremental Whitehead graph of a growing prefix (no external edge).

    ``missing_pairs`` counts unordered vertex pairs still without an edge,
    so completeness is known after every letter in constant time.
    """

    def __init__(self, rank: int):
        self.graph = WhGraph(rank)
        n = 2 * self.graph.rank
        self.last_letter: int | None = None
        self.missing_pairs = n * (n - 1) // 2
        self.letters_read = 0

    @property
    def complete(self) -> bool:
        return self.missing_pairs == 0

    def push(self, c: int) -> ScanState:
        if c == 0 or abs(c) > self.graph.rank:
            raise WordError(f"letter code {c} out of range for rank {self.graph.rank}")
        last = self.last_letter
        if last is not None:
            if last == -c:
                raise WordError("pushed letter cancels the previous one")
            u, v = vertex(last), vertex(-c)
            if not self.graph.adjacency[u][v]:
                self.missing_pairs -= 1
            self.graph.add_edge(u, v)
        self.last_letter = c
        self.letters_read += 1
        return self

    def copy(self) -> ScanState:
        s = ScanState.__new__(ScanState)
        s.graph = self.graph.copy()
        s.last_letter = self.last_letter
        s.missing_pairs = self.missing_pairs
        s.letters_read = self.letters_read
        return s


def scan_push(state: ScanState, letter: int) -> ScanState:
    return state.push(letter)


def scan(w: Word) -> ScanState:
    state = ScanState(w.rank)
    for c in w.letters:
        state.push(c)
    return state


def first_complete_prefix(letters, rank: int) -> int | None:
    """Length of the shortest prefix with a complete graph, or None."""
    state = ScanState(rank)
    for c in letters:
        state.push(c)
        if state.missing_pairs == 0:
            return state.letters_read
    return None


def to_dot(g: WhGraph, name: str = "Wh") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.num_vertices):
        lines.append(f'  "{vertex_label(v)}";')
    ext = tuple(sorted(g.external)) if g.external else None
    for u, v, m in g.edges():
        for k in range(m):
            attr = " [style=dashed]" if ext == (u, v) and k == m - 1 else ""
            lines.append(f'  "{vertex_label(u)}" -- "{vertex_label(v)}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"

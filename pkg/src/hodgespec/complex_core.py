"""Finite abstract simplicial complexes and their open/closed subsets.

A simplex is stored as a strictly ascending tuple of non-negative integer
labels.  A :class:`Complex` is an ordered collection of simplices in the
canonical order (ascending dimension, lexicographic within a dimension),
tagged as a whole complex or as an open/closed subset of a parent complex
in the topology generated by the stars ``U(x) = {y : x ⊆ y}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import networkx as nx
import numpy as np

Simplex = tuple[int, ...]

WHOLE, OPEN, CLOSED = "whole", "open", "closed"
_KINDS = (WHOLE, OPEN, CLOSED)


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Validate ``vertices`` and return them as an ascending tuple.

    Unordered input is sorted; duplicate or negative labels and the empty
    set are rejected.
    """
    vs = tuple(sorted(int(v) for v in vertices))
    if not vs:
        raise ValueError("a simplex must be non-empty")
    if vs[0] < 0:
        raise ValueError(f"negative vertex label in {vs}")
    if any(a == b for a, b in zip(vs, vs[1:])):
        raise ValueError(f"duplicate vertex in simplex {vs}")
    return vs


def canonical_key(x: Simplex) -> tuple[int, Simplex]:
    return (len(x), x)


def dimension(x: Sequence[int]) -> int:
    return len(x) - 1


def faces(x: Simplex) -> Iterator[Simplex]:
    """Codimension-one faces of ``x`` (nothing for a vertex)."""
    if len(x) > 1:
        for i in range(len(x)):
            yield x[:i] + x[i + 1:]


class Complex:
    """An ordered set of simplices with a topological tag.

    ``kind`` is ``"whole"`` for a simplicial complex, or ``"open"`` /
    ``"closed"`` for a subset of ``parent``.  Elements are always stored in
    canonical order, so the same set of simplices yields the same matrices.
    Instances are immutable.
    """

    __slots__ = ("_elements", "_index", "_kind", "_parent", "_f")

    def __init__(self, elements: Iterable[Iterable[int]] = (), kind: str = WHOLE,
                 parent: Complex | None = None, validate: bool = True):
        if kind not in _KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        simplices = {as_simplex(x) for x in elements}
        ordered = tuple(sorted(simplices, key=canonical_key))
        self._elements = ordered
        self._index = {x: i for i, x in enumerate(ordered)}
        self._kind = kind
        self._parent = parent
        # subsets keep the parent's degree range so vectors line up componentwise
        top = len(ordered[-1]) if ordered else 0
        if parent is not None:
            top = max(top, len(parent.f_vector))
        f = [0] * top
        for x in ordered:
            f[len(x) - 1] += 1
        self._f = tuple(f)
        if validate:
            self._check()

    def _check(self) -> None:
        if self._kind == WHOLE:
            if self._parent is not None:
                raise ValueError("a whole complex has no parent")
            bad = _first_missing_face(self._elements, self._index)
            if bad is not None:
                raise ValueError(f"not closed under subsets: face {bad[1]} of {bad[0]} missing")
            return
        if self._parent is None:
            raise ValueError(f"an {self._kind} set needs a parent complex")
        stray = [x for x in self._elements if x not in self._parent]
        if stray:
            raise ValueError(f"element {stray[0]} is not in the parent complex")
        if self._kind == CLOSED and not is_closed(self._parent, self):
            bad = _first_missing_face(self._elements, self._index)
            raise ValueError(f"not closed: face {bad[1]} of {bad[0]} missing")
        if self._kind == OPEN and not is_open(self._parent, self):
            raise ValueError(f"not open: {_first_open_violation(self._parent, self)}")

    @property
    def elements(self) -> tuple[Simplex, ...]:
        return self._elements

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def parent(self) -> Complex | None:
        return self._parent

    @property
    def f_vector(self) -> tuple[int, ...]:
        return self._f

    @property
    def offsets(self) -> tuple[int, ...]:
        """Block boundaries ``b_0=0 <= b_1 <= ...``, one block per degree."""
        return tuple(np.concatenate([[0], np.cumsum(self._f)]).astype(int).tolist()) if self._f else (0,)

    @property
    def dim(self) -> int:
        return len(self._f) - 1

    def dims(self) -> np.ndarray:
        return np.array([len(x) - 1 for x in self._elements], dtype=int)

    def index(self, x: Iterable[int]) -> int:
        x = as_simplex(x)
        try:
            return self._index[x]
        except KeyError:
            raise KeyError(f"{x} is not an element") from None

    def facets(self) -> list[Simplex]:
        """Elements not strictly contained in another element."""
        return [x for x in self._elements if is_locally_maximal(self, x)]

    def with_kind(self, kind: str, parent: Complex | None = None) -> Complex:
        return Complex(self._elements, kind=kind, parent=parent)

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self._elements)

    def __getitem__(self, i: int) -> Simplex:
        return self._elements[i]

    def __contains__(self, x) -> bool:
        try:
            return as_simplex(x) in self._index
        except (ValueError, TypeError):
            return False

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._elements == other._elements and self._kind == other._kind

    def __hash__(self) -> int:
        return hash((self._elements, self._kind))

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, x)) + "}" for x in self._elements[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"Complex({self._kind}, n={len(self)}, f={self._f}, [{body}{more}])"


def _first_missing_face(elements, index):
    for x in elements:
        for y in faces(x):
            if y not in index:
                return x, y
    return None


def _first_open_violation(parent: Complex, S) -> str:
    members = set(S)
    for y in parent:
        if y in members:
            continue
        for x in faces(y):
            if x in members:
                return f"{x} is in the set but its coface {y} is not"
    return "unknown"


def _members(S) -> set[Simplex]:
    if isinstance(S, Complex):
        return set(S.elements)
    return {as_simplex(x) for x in S}


def closure(sets: Iterable[Iterable[int]]) -> Complex:
    """Smallest simplicial complex containing every set in ``sets``."""
    out: set[Simplex] = set()
    for s in sets:
        x = as_simplex(s)
        if x in out:
            continue
        for r in range(1, len(x) + 1):
            out.update(combinations(x, r))
    return Complex(out, validate=False)


def whitney_complex(graph) -> Complex:
    """Clique (Whitney) complex of a simple undirected graph.

    ``graph`` is a :class:`networkx.Graph` or a pair ``(vertices, edges)``.
    """
    if isinstance(graph, nx.Graph):
        if graph.is_multigraph() or graph.is_directed():
            raise ValueError("expected a simple undirected graph")
        g = graph
    else:
        vertices, edges = graph
        g = nx.Graph()
        g.add_nodes_from(int(v) for v in vertices)
        seen = set()
        for e in edges:
            u, v = (int(a) for a in e)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"multi-edge {key}")
            seen.add(key)
            g.add_edge(u, v)
    loops = list(nx.selfloop_edges(g))
    if loops:
        raise ValueError(f"self-loop at vertex {loops[0][0]}")
    return Complex((tuple(c) for c in nx.enumerate_all_cliques(g)), validate=False)


def f_vector(S) -> tuple[int, ...]:
    if isinstance(S, Complex):
        return S.f_vector
    return Complex(S, validate=False).f_vector


def euler_characteristic(S) -> int:
    return sum((-1) ** k * fk for k, fk in enumerate(f_vector(S)))


def is_closed(G: Complex | None, S) -> bool:
    """True iff ``S`` contains every face of each of its elements.

    ``G`` is accepted for symmetry with :func:`is_open`; closedness does not
    depend on the parent because complexes are subset-closed.
    """
    members = _members(S)
    return all(y in members for x in members for y in faces(x))


def is_open(G: Complex, S) -> bool:
    """True iff every superset in ``G`` of an element of ``S`` lies in ``S``."""
    members = _members(S)
    for y in G:
        if y not in members and any(x in members for x in faces(y)):
            return False
    return True


def _check_subset(G: Complex, members: set[Simplex]) -> None:
    for x in members:
        if x not in G:
            raise ValueError(f"{x} is not an element of the parent complex")


def subset(G: Complex, elements: Iterable[Iterable[int]], kind: str | None = None) -> Complex:
    """Wrap ``elements`` as an open or closed subset of ``G``.

    With ``kind=None`` the tag is inferred; a clopen set is tagged closed.
    """
    members = {as_simplex(x) for x in elements}
    _check_subset(G, members)
    if kind is None:
        if is_closed(G, members):
            kind = CLOSED
        elif is_open(G, members):
            kind = OPEN
        else:
            raise ValueError("subset is neither open nor closed: "
                             + _first_open_violation(G, members))
    if kind == WHOLE:
        raise ValueError("use Complex(...) for whole complexes")
    return Complex(members, kind=kind, parent=G)


def open_in_closure(elements: Iterable[Iterable[int]]) -> Complex:
    """``elements`` as an open subset of their own closure."""
    elements = [as_simplex(x) for x in elements]
    return subset(closure(elements), elements, kind=OPEN)


def star(G: Complex, x: Iterable[int]) -> Complex:
    """The open star of ``x``: all elements of ``G`` containing ``x``."""
    x = as_simplex(x)
    if x not in G:
        raise KeyError(f"{x} is not an element")
    sx = set(x)
    return Complex((y for y in G if sx.issubset(y)), kind=OPEN, parent=G, validate=False)


def stars(G: Complex) -> list[Complex]:
    """The star basis of the topology, indexed like ``G``."""
    return [star(G, x) for x in G]


def random_open_set(G: Complex, k: int, seed=None) -> Complex:
    """Union of ``k`` stars drawn uniformly with replacement from the star basis."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if len(G) == 0:
        raise ValueError("G must be non-empty")
    rng = np.random.default_rng(seed)
    chosen: set[Simplex] = set()
    for i in rng.integers(0, len(G), size=k):
        chosen.update(star(G, G[int(i)]))
    return Complex(chosen, kind=OPEN, parent=G, validate=False)


def complement(G: Complex, S) -> Complex:
    """``G \\ S``.  The complement of an open set is closed and vice versa."""
    members = _members(S)
    _check_subset(G, members)
    rest = [x for x in G if x not in members]
    if isinstance(S, Complex) and S.kind == OPEN:
        kind = CLOSED
    elif isinstance(S, Complex) and S.kind in (CLOSED, WHOLE):
        kind = OPEN
    else:
        kind = None
    if kind is None:
        return subset(G, rest)
    return Complex(rest, kind=kind, parent=G)


def is_locally_maximal(G: Complex, x: Iterable[int]) -> bool:
    x = as_simplex(x)
    if x not in G:
        raise KeyError(f"{x} is not an element")
    sx = set(x)
    return not any(len(y) > len(x) and sx.issubset(y) for y in G)


@dataclass(frozen=True)
class Filtration:
    """A Morse filtration ``G_1 ⊂ G_2 ⊂ ... ⊂ G_n`` of a whole complex."""

    complex: Complex
    order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)

    def prefix(self, k: int) -> Complex:
        """``G_k``, the complex of the first ``k`` elements."""
        return Complex((self.complex[i] for i in self.order[:k]))

    def prefixes(self) -> Iterator[Complex]:
        for k in range(1, len(self.order) + 1):
            yield self.prefix(k)


def canonical_filtration(G: Complex) -> Filtration:
    if G.kind != WHOLE:
        raise ValueError("filtrations are defined for whole complexes")
    # canonical order is already dimension-major, so it is the identity
    return Filtration(G, tuple(range(len(G))))


def remove_locally_maximal(G: Complex, x: Iterable[int]) -> Complex:
    """``G \\ {x}`` as a closed subset, for a locally maximal ``x``."""
    x = as_simplex(x)
    if not is_locally_maximal(G, x):
        raise ValueError(f"{x} is not locally maximal")
    return Complex((y for y in G if y != x), kind=CLOSED, parent=G, validate=False)


def random_subcomplex(G: Complex, steps: int, seed=None) -> Complex:
    """Delete ``steps`` uniformly chosen locally maximal elements in turn.

    Each deletion reverses one step of a Morse filtration, so the result is
    a closed subset of ``G``.
    """
    rng = np.random.default_rng(seed)
    cofaces = {x: 0 for x in G}
    for y in G:
        for x in faces(y):
            cofaces[x] += 1
    current = set(G.elements)
    for _ in range(min(steps, len(G))):
        tops = sorted((x for x in current if cofaces[x] == 0), key=canonical_key)
        x = tops[int(rng.integers(len(tops)))]
        current.discard(x)
        for y in faces(x):
            cofaces[y] -= 1
    return Complex(current, kind=CLOSED, parent=G, validate=False)

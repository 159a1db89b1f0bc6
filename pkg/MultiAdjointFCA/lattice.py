"""
# Finite bounded lattices

`BoundedLattice` stores a finite lattice by element index. The order, meet and join are
computed once at construction into numpy tables, so every later query is a table lookup:

```py
from MultiAdjointFCA.lattice import buildLattice

L = buildLattice(["bot", "p", "q", "top"], [["bot", "p"], ["bot", "q"], ["p", "top"], ["q", "top"]])
L.orderOps("p", "q")   # {'leq': False, 'meet': 0, 'join': 3}
L.meetIrreducibles()   # frozenset({1, 2})
```

Construction is eager: a cyclic cover relation, a missing bound or a pair without a unique
meet or join is reported immediately, with the offending labels as the error `witness`.
Elements may be passed either by label or by index to every query method.
"""

__copyright__ = """
    This file is part of the MultiAdjointFCA project.
    Copyright (c) MultiAdjointFCA Developers/Contributors
    All rights reserved.

    This program is free software: you can redistribute it and/or modify
    it under the terms of the GNU General Public License as published by
    the Free Software Foundation, either version 3 of the License, or
    (at your option) any later version.

    This program is distributed in the hope that it will be useful,
    but WITHOUT ANY WARRANTY; without even the implied warranty of
    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
    GNU General Public License for more details.

    You should have received a copy of the GNU General Public License
    along with this program.  If not, see <https://www.gnu.org/licenses/>.
"""

from functools import cached_property, reduce
from typing import Hashable, Iterable, List, Sequence, Union

import networkx as nx
import numpy as np

from .errors import CyclicCovers, LatticeError, NotALattice, NotBounded, TooSmall, UnknownElement
from .io_spec import MIN_LATTICE_SIZE
from .logger import getModuleLogger

__all__ = ['BoundedLattice', 'buildLattice', 'latticeFromOrder', 'Element']

Element = Union[int, str]
""" An element given by index or by label. """

log = getModuleLogger("lattice")


def _readOnly(a:np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class BoundedLattice:
    """
    A finite bounded lattice with precomputed order, cover, meet and join tables.

    Attributes:
        `elements`: Tuple of element labels; an element's index is its position here.
        `leqTable`: Boolean matrix, `leqTable[x, y]` is `x ≤ y`.
        `coverTable`: Boolean matrix of the Hasse cover relation (`x` covered by `y`).
        `meetTable`, `joinTable`: Index matrices.
        `bottom`, `top`: Indices of the bounds.

    Instances are immutable and can be shared between threads.
    """

    def __init__(self, elements:Sequence[str], covers:Iterable[Sequence[str]], minSize:int=MIN_LATTICE_SIZE):
        """
        Args:
            `elements`: Distinct element labels.
            `covers`: `(lower, upper)` label pairs. Pairs implied by transitivity are allowed
                and dropped from the stored Hasse relation.
            `minSize`: Smallest accepted number of elements.

        Raises:
            `UnknownElement`, `CyclicCovers`, `TooSmall`, `NotBounded`, `NotALattice`
        """
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            dups = sorted({e for e in self.elements if self.elements.count(e) > 1})
            raise LatticeError(f"Element labels must be distinct, repeated: {dups}", witness=dups)
        self._index = {label: i for i, label in enumerate(self.elements)}
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.elements)))
        for pair in covers:
            if len(pair) != 2:
                raise LatticeError(f"A cover must be a (lower, upper) pair, got {pair!r}", witness=pair)
            graph.add_edge(self.index(pair[0]), self.index(pair[1]))
        self._build(graph, minSize)

    def _build(self, graph:nx.DiGraph, minSize:int):
        n = len(self.elements)
        if not nx.is_directed_acyclic_graph(graph):
            cycle = [(self.elements[u], self.elements[v]) for u, v in nx.find_cycle(graph)]
            raise CyclicCovers(f"The cover relation contains a cycle: {cycle}", witness=cycle)
        if n < minSize:
            raise TooSmall(f"A lattice needs at least {minSize} elements, got {n}", witness=n)

        # reflexive-transitive closure of an acyclic relation is a partial order
        leq = np.eye(n, dtype=bool)
        for u, v in nx.transitive_closure_dag(graph).edges:
            leq[u, v] = True
        strict = leq & ~np.eye(n, dtype=bool)
        si = strict.astype(np.int64)
        covers = strict & ((si @ si) == 0)

        bottoms = np.flatnonzero(leq.all(axis=1))
        tops = np.flatnonzero(leq.all(axis=0))
        if len(bottoms) != 1:
            minima = [self.elements[i] for i in np.flatnonzero(~strict.any(axis=0))]
            raise NotBounded(f"No unique minimum element, minimal elements are {minima}", witness=minima)
        if len(tops) != 1:
            maxima = [self.elements[i] for i in np.flatnonzero(~strict.any(axis=1))]
            raise NotBounded(f"No unique maximum element, maximal elements are {maxima}", witness=maxima)

        rank = np.empty(n, dtype=np.int64)
        for pos, v in enumerate(nx.topological_sort(graph)):
            rank[v] = pos

        self.leqTable = _readOnly(leq)
        self.coverTable = _readOnly(covers)
        self.meetTable = _readOnly(self._boundTable(leq, rank, "meet"))
        self.joinTable = _readOnly(self._boundTable(leq.T, -rank, "join"))
        self.bottom = int(bottoms[0])
        self.top = int(tops[0])
        log.debug(f"Built lattice with {n} elements and {int(covers.sum())} covers")

    def _boundTable(self, order:np.ndarray, rank:np.ndarray, what:str) -> np.ndarray:
        """ Greatest common lower bound (in `order`) of every pair, picked as the highest ranked common bound and then verified. """
        n = len(rank)
        table = np.empty((n, n), dtype=np.intp)
        floor = np.iinfo(np.int64).min
        for i in range(n):
            common = order[:, i][:, None] & order
            best = np.where(common, rank[:, None], floor).argmax(axis=0)
            bad = np.flatnonzero((common & ~order[:, best]).any(axis=0))
            if len(bad):
                pair = (self.elements[i], self.elements[int(bad[0])])
                raise NotALattice(f"Elements {pair[0]!r} and {pair[1]!r} have no unique {what}", witness=pair)
            table[i] = best
        return table

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"BoundedLattice({len(self)} elements, bottom={self.elements[self.bottom]!r}, top={self.elements[self.top]!r})"

    def index(self, x:Element) -> int:
        """ Returns the index of an element given by label or index. Raises `UnknownElement`. """
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            if 0 <= x < len(self.elements):
                return int(x)
        elif isinstance(x, Hashable) and x in self._index:
            return self._index[x]
        raise UnknownElement(f"Unknown lattice element {x!r}", witness=x)

    def label(self, x:Element) -> str:
        return self.elements[self.index(x)]

    def labelsOf(self, xs:Iterable[Element]) -> List[str]:
        """ Labels of the given elements in index order. """
        return [self.elements[i] for i in sorted({self.index(x) for x in xs})]

    def indicesOf(self, xs:Iterable[Element]) -> frozenset:
        return frozenset(self.index(x) for x in xs)

    @property
    def bounds(self) -> frozenset:
        return frozenset((self.bottom, self.top))

    def isBound(self, x:Element) -> bool:
        return self.index(x) in (self.bottom, self.top)

    def leq(self, x:Element, y:Element) -> bool:
        return bool(self.leqTable[self.index(x), self.index(y)])

    def meet(self, x:Element, y:Element) -> int:
        return int(self.meetTable[self.index(x), self.index(y)])

    def join(self, x:Element, y:Element) -> int:
        return int(self.joinTable[self.index(x), self.index(y)])

    def orderOps(self, x:Element, y:Element) -> dict:
        """ Returns `{'leq': x ≤ y, 'meet': x ∧ y, 'join': x ∨ y}` with element indices. """
        i, j = self.index(x), self.index(y)
        return {
            'leq': bool(self.leqTable[i, j]),
            'meet': int(self.meetTable[i, j]),
            'join': int(self.joinTable[i, j]),
        }

    def meetOf(self, xs:Iterable[Element]) -> int:
        """ Meet of a set of elements; the empty meet is the top. """
        return reduce(lambda a, b: int(self.meetTable[a, b]), (self.index(x) for x in xs), self.top)

    def joinOf(self, xs:Iterable[Element]) -> int:
        """ Join of a set of elements; the empty join is the bottom. """
        return reduce(lambda a, b: int(self.joinTable[a, b]), (self.index(x) for x in xs), self.bottom)

    def upset(self, x:Element) -> frozenset:
        """ `↑x`, all elements above or equal to `x`. """
        return frozenset(int(i) for i in np.flatnonzero(self.leqTable[self.index(x)]))

    def downset(self, x:Element) -> frozenset:
        """ `↓x`, all elements below or equal to `x`. """
        return frozenset(int(i) for i in np.flatnonzero(self.leqTable[:, self.index(x)]))

    def upperCovers(self, x:Element) -> frozenset:
        return frozenset(int(i) for i in np.flatnonzero(self.coverTable[self.index(x)]))

    def lowerCovers(self, x:Element) -> frozenset:
        return frozenset(int(i) for i in np.flatnonzero(self.coverTable[:, self.index(x)]))

    @property
    def covers(self) -> List[tuple]:
        """ Hasse cover pairs `(lower, upper)` as indices, sorted. """
        return [(int(i), int(j)) for i, j in np.argwhere(self.coverTable)]

    @cached_property
    def _meetIrreducibles(self) -> frozenset:
        return frozenset(int(i) for i in np.flatnonzero(self.coverTable.sum(axis=1) == 1))

    def meetIrreducibles(self) -> frozenset:
        """ Elements with exactly one upper cover, which in a finite lattice are the meet-irreducible elements. """
        return self._meetIrreducibles

    def irreducibleDecomposition(self, x:Element) -> frozenset:
        """
        Returns the meet-irreducible elements above `x`. Their meet is `x`.

        Raises:
            `UnknownElement`
        """
        i = self.index(x)
        found = frozenset(m for m in self._meetIrreducibles if self.leqTable[i, m])
        if self.meetOf(found) != i:
            raise NotALattice(f"Element {self.elements[i]!r} is not the meet of the irreducibles above it", witness=self.elements[i])
        return found

    def toDict(self) -> dict:
        """ The JSON lattice document: element labels and Hasse cover label pairs. """
        return {
            'elements': list(self.elements),
            'covers': [[self.elements[i], self.elements[j]] for i, j in self.covers],
        }


def buildLattice(elements:Sequence[str], covers:Iterable[Sequence[str]]) -> BoundedLattice:
    """
    Builds and validates a lattice with at least three elements from labels and cover pairs.
    See `BoundedLattice` for the raised errors.
    """
    return BoundedLattice(elements, covers)


def latticeFromOrder(labels:Sequence[str], leq:np.ndarray, minSize:int=1) -> BoundedLattice:
    """
    Builds a lattice from an explicit order matrix (`leq[i, j]` is `i ≤ j`).
    Used for concept lattices, which can be smaller than three elements.
    """
    leq = np.asarray(leq, dtype=bool)
    n = len(labels)
    if leq.shape != (n, n):
        raise LatticeError(f"Order matrix shape {leq.shape} does not match {n} labels", witness=leq.shape)
    strict = leq & ~np.eye(n, dtype=bool)
    si = strict.astype(np.int64)
    hasse = strict & ((si @ si) == 0)
    pairs = [(labels[i], labels[j]) for i, j in np.argwhere(hasse)]
    return BoundedLattice(labels, pairs, minSize=minSize)

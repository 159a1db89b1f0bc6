"""
# Multi-adjoint contexts

A `MultiAdjointContext` is a set of attributes `A`, a set of objects `B`, a graded relation
`R: A×B → L` and an assignment `σ` of one frame conjunctor to every attribute/object pair.

This module checks normalization, finds separable subcontexts and enumerates every
decomposition of a normalized context into independent subcontexts:

1. the connected components of the bipartite graph of non-zero relation entries are found,
2. components joined by a pair whose conjunctor has zero-divisors are merged into one unit,
3. every partition of the units into at least two groups is one decomposition.

Each decomposition is re-checked against the definition (`checkDecomposition()`) before it is returned.

Attributes and objects may be given by label or index wherever a method takes one.
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

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from .errors import (CertificationFailure, ContextError, FrameError, GridError, NotNormalized,
                     UnknownAttribute, UnknownConjunctor, UnknownObject)
from .logger import getModuleLogger
from .residuation import AdjointTriple, MultiAdjointFrame
from .tools import Check, Tools

__all__ = [
    'MultiAdjointContext', 'SubcontextDecomposition', 'Part',
    'isNormalized', 'requireNormalized', 'isSeparableSubcontext', 'components',
    'enumerateSeparableSubcontexts', 'decompositionUnits', 'enumerateDecompositions',
    'checkDecomposition', 'subcontext',
]

log = getModuleLogger("context")

Part = Tuple[frozenset, frozenset]
""" An `(attribute indices, object indices)` pair. """


def _readOnly(a) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.flags.writeable = False
    return a


class MultiAdjointContext:
    """
    A context `(A, B, R, σ)` over a `MultiAdjointFrame`.

    Attributes:
        `frame`: The frame (chain and conjunctors).
        `attributes`, `objects`: Label tuples; positions are the indices.
        `relation`: Read-only `|A|×|B|` matrix of grade indices.
        `sigma`: Read-only `|A|×|B|` matrix of conjunctor positions in `frame.triples`.
    """

    def __init__(self, frame:MultiAdjointFrame, attributes:Sequence[str], objects:Sequence[str], relation, sigma):
        """
        Args:
            `frame`: The frame whose conjunctors `sigma` refers to.
            `attributes`, `objects`: Distinct, non-empty label lists.
            `relation`: Matrix of grade indices.
            `sigma`: Matrix of conjunctor names (or positions in the frame).

        Raises:
            `ContextError` for bad shapes or labels, `GridError` for grades off the chain,
            `UnknownConjunctor` for unknown names, `FrameError` when a frame conjunctor
            violates the boundary condition.
        """
        self.frame = frame
        self.chain = frame.chain
        self.attributes = tuple(attributes)
        self.objects = tuple(objects)
        for kind, labels in (("attribute", self.attributes), ("object", self.objects)):
            if not labels:
                raise ContextError(f"A context needs at least one {kind}")
            if len(set(labels)) != len(labels):
                raise ContextError(f"{kind.capitalize()} labels must be distinct", witness=list(labels))
        self._attrIndex = {a: i for i, a in enumerate(self.attributes)}
        self._objIndex = {b: j for j, b in enumerate(self.objects)}
        shape = (len(self.attributes), len(self.objects))

        rel = np.array(relation, dtype=object)
        if rel.shape != shape:
            raise ContextError(f"Relation must be a {shape[0]}×{shape[1]} matrix, got shape {rel.shape}", witness=rel.shape)
        for (i, j), v in np.ndenumerate(rel):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer, float, np.floating)) or not float(v).is_integer():
                raise ContextError(f"Relation value {v!r} at ({self.attributes[i]!r}, {self.objects[j]!r}) is not a grade index",
                                   witness=(self.attributes[i], self.objects[j]))
        rel = rel.astype(np.int64)
        if (off := np.argwhere((rel < 0) | (rel > self.chain.n))).size:
            i, j = off[0]
            raise GridError(f"Relation value at ({self.attributes[i]!r}, {self.objects[j]!r}) is off the grade chain",
                            witness=(self.attributes[i], self.objects[j]))
        self.relation = _readOnly(rel)

        sig = np.array(sigma, dtype=object)
        if sig.shape != shape:
            raise ContextError(f"Sigma must be a {shape[0]}×{shape[1]} matrix, got shape {sig.shape}", witness=sig.shape)
        self.sigma = _readOnly([[self._tripleIndex(v) for v in row] for row in sig.tolist()])

        for t in frame.triples:
            if not t.boundaryBothArgs:
                raise FrameError(f"Conjunctor {t.name!r} does not satisfy the boundary condition x & 1 = 1 & x = x", witness=t.name)

        self._conj = _readOnly(np.stack([t.conj for t in frame.triples]))
        self._resLeft = _readOnly(np.stack([t.resLeft for t in frame.triples]))
        self._resRight = _readOnly(np.stack([t.resRight for t in frame.triples]))
        zd = np.array([t.hasZeroDivisors for t in frame.triples])
        self.zeroDivisorMask = zd[self.sigma]
        self.zeroDivisorMask.flags.writeable = False

    def _tripleIndex(self, v) -> int:
        if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
            if 0 <= v < len(self.frame.triples):
                return int(v)
            raise UnknownConjunctor(f"Frame has no conjunctor at position {v}", witness=v)
        return self.frame.tripleIndex(v)

    @classmethod
    def fromDict(cls, d:dict) -> "MultiAdjointContext":
        """ Builds a context from an already schema-validated context document. """
        frame = MultiAdjointFrame.fromDict(d['frame'])
        relation = []
        for i, row in enumerate(d['relation']):
            if not isinstance(row, list):
                raise ContextError(f"Relation row {i} must be a list", witness=i)
            relation.append([frame.chain.parse(v) for v in row])
        return cls(frame, d['attributes'], d['objects'], relation, d['sigma'])

    def toDict(self) -> dict:
        return {
            'frame': self.frame.toDict(),
            'attributes': list(self.attributes),
            'objects': list(self.objects),
            'relation': [[self.chain.render(v) for v in row] for row in self.relation],
            'sigma': [[self.frame.triples[t].name for t in row] for row in self.sigma],
        }

    def __repr__(self):
        return f"MultiAdjointContext({len(self.attributes)} attributes, {len(self.objects)} objects, n={self.chain.n})"

    @property
    def shape(self) -> Tuple[int, int]:
        return self.relation.shape

    def attributeIndex(self, a:Union[int, str]) -> int:
        if isinstance(a, (int, np.integer)) and not isinstance(a, bool):
            if 0 <= a < len(self.attributes):
                return int(a)
        elif a in self._attrIndex:
            return self._attrIndex[a]
        raise UnknownAttribute(f"Unknown attribute {a!r}", witness=a)

    def objectIndex(self, b:Union[int, str]) -> int:
        if isinstance(b, (int, np.integer)) and not isinstance(b, bool):
            if 0 <= b < len(self.objects):
                return int(b)
        elif b in self._objIndex:
            return self._objIndex[b]
        raise UnknownObject(f"Unknown object {b!r}", witness=b)

    def attributeSet(self, attrs:Iterable) -> frozenset:
        return frozenset(self.attributeIndex(a) for a in attrs)

    def objectSet(self, objs:Iterable) -> frozenset:
        return frozenset(self.objectIndex(b) for b in objs)

    def triple(self, a, b) -> AdjointTriple:
        """ The conjunctor `σ(a, b)`. """
        return self.frame.triples[self.sigma[self.attributeIndex(a), self.objectIndex(b)]]

    def grade(self, a, b) -> int:
        """ `R(a, b)` as a grade index. """
        return int(self.relation[self.attributeIndex(a), self.objectIndex(b)])

    def upArray(self, g) -> np.ndarray:
        """ `g↑(a) = min_b R(a,b) ↙σ(a,b) g(b)` for an object grade vector `g`. """
        g = np.asarray(g, dtype=np.int64)
        return self._resLeft[self.sigma, self.relation, g[None, :]].min(axis=1)

    def downArray(self, f) -> np.ndarray:
        """ `f↓(b) = min_a R(a,b) ↖σ(a,b) f(a)` for an attribute grade vector `f`. """
        f = np.asarray(f, dtype=np.int64)
        return self._resRight[self.sigma, self.relation, f[:, None]].min(axis=0)

    def attributeExtent(self, a, x:int) -> np.ndarray:
        """ `φ_{a,x}↓(b) = R(a,b) ↖σ(a,b) x`, the extent generated by a single fuzzy attribute. """
        i = self.attributeIndex(a)
        return self._resRight[self.sigma[i], self.relation[i], x]

    def objectIntent(self, b, y:int) -> np.ndarray:
        """ `φ_{b,y}↑(a) = R(a,b) ↙σ(a,b) y`. """
        j = self.objectIndex(b)
        return self._resLeft[self.sigma[:, j], self.relation[:, j], y]

    def conjunctionAt(self, a, b, x:int, y:int) -> int:
        """ `x &σ(a,b) y` """
        i, j = self.attributeIndex(a), self.objectIndex(b)
        return int(self._conj[self.sigma[i, j], x, y])


@dataclass(frozen=True)
class SubcontextDecomposition:
    """
    A family of `(attributes, objects)` parts of a context, stored in canonical order
    (parts sorted by their smallest attribute index). Equality ignores the parent context.
    """
    parts: Tuple[Part, ...]
    parent: MultiAdjointContext = field(compare=False, repr=False, default=None)

    def __post_init__(self):
        parts = tuple(sorted(((frozenset(a), frozenset(b)) for a, b in self.parts),
                             key=lambda p: (sorted(p[0]), sorted(p[1]))))
        object.__setattr__(self, 'parts', parts)

    def __len__(self):
        return len(self.parts)

    @property
    def key(self) -> tuple:
        """ Hashable canonical form: sorted index tuples per part. """
        return tuple((tuple(sorted(a)), tuple(sorted(b))) for a, b in self.parts)

    @property
    def attributePartition(self) -> Tuple[frozenset, ...]:
        return tuple(a for a, _ in self.parts)

    @property
    def objectPartition(self) -> Tuple[frozenset, ...]:
        return tuple(b for _, b in self.parts)

    def partOfAttribute(self, a) -> int:
        i = self.parent.attributeIndex(a) if self.parent else a
        for k, (attrs, _) in enumerate(self.parts):
            if i in attrs:
                return k
        raise UnknownAttribute(f"Attribute {a!r} is in no part", witness=a)

    def toDict(self) -> list:
        if self.parent is None:
            return [{'attributes': sorted(a), 'objects': sorted(b)} for a, b in self.parts]
        ctx = self.parent
        return [{'attributes': [ctx.attributes[i] for i in sorted(a)], 'objects': [ctx.objects[j] for j in sorted(b)]}
                for a, b in self.parts]


def _sortKey(dec:SubcontextDecomposition):
    return (len(dec), dec.key)


def isNormalized(ctx:MultiAdjointContext) -> Check:
    """
    Checks that every attribute row and every object column has both a zero and a non-zero entry.
    On failure the check names the first offending attribute or object.
    """
    nz = ctx.relation != 0
    for i, a in enumerate(ctx.attributes):
        if not nz[i].any():
            return Check.failed(f"attribute {a!r} has no non-zero entry", a)
        if nz[i].all():
            return Check.failed(f"attribute {a!r} has no zero entry", a)
    for j, b in enumerate(ctx.objects):
        if not nz[:, j].any():
            return Check.failed(f"object {b!r} has no non-zero entry", b)
        if nz[:, j].all():
            return Check.failed(f"object {b!r} has no zero entry", b)
    return Check.passed()


def requireNormalized(ctx:MultiAdjointContext):
    """ Raises `NotNormalized` (with the failed check as witness) unless the context is normalized. """
    if not (check := isNormalized(ctx)):
        raise NotNormalized(f"Context is not normalized: {check.condition}", witness=check)


def isSeparableSubcontext(ctx:MultiAdjointContext, Y:Iterable, X:Iterable) -> Check:
    """
    Checks that `(Y, X)` is a separable subcontext: non-empty proper subsets with a non-zero
    entry inside `Y×X` and only zero entries on `Y×Xᶜ` and `Yᶜ×X`.
    """
    Y, X = ctx.attributeSet(Y), ctx.objectSet(X)
    nA, nB = ctx.shape
    if not Y or len(Y) == nA:
        return Check.failed("attribute set must be a non-empty proper subset", sorted(Y))
    if not X or len(X) == nB:
        return Check.failed("object set must be a non-empty proper subset", sorted(X))
    inY = np.zeros(nA, dtype=bool)
    inY[list(Y)] = True
    inX = np.zeros(nB, dtype=bool)
    inX[list(X)] = True
    nz = ctx.relation != 0
    if not nz[np.ix_(inY, inX)].any():
        return Check.failed("no non-zero entry inside the subcontext")
    for condition, rows, cols in (("non-zero entry on Y×Xᶜ", inY, ~inX), ("non-zero entry on Yᶜ×X", ~inY, inX)):
        hit = np.argwhere(nz & rows[:, None] & cols[None, :])
        if len(hit):
            i, j = hit[0]
            return Check.failed(condition, (ctx.attributes[i], ctx.objects[j]))
    return Check.passed()


def _bipartiteGraph(ctx:MultiAdjointContext, edgeMask:np.ndarray) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(('a', i) for i in range(len(ctx.attributes)))
    graph.add_nodes_from(('b', j) for j in range(len(ctx.objects)))
    graph.add_edges_from((('a', int(i)), ('b', int(j))) for i, j in np.argwhere(edgeMask))
    return graph


def _partsOf(graph:nx.Graph) -> List[Part]:
    parts = []
    for nodes in nx.connected_components(graph):
        parts.append((frozenset(i for side, i in nodes if side == 'a'),
                      frozenset(j for side, j in nodes if side == 'b')))
    return sorted(parts, key=lambda p: (sorted(p[0]) or [len(graph)], sorted(p[1])))


def components(ctx:MultiAdjointContext) -> List[Part]:
    """ Connected components of the bipartite graph with an edge wherever `R(a, b) ≠ 0`. """
    return _partsOf(_bipartiteGraph(ctx, ctx.relation != 0))


def enumerateSeparableSubcontexts(ctx:MultiAdjointContext) -> List[Part]:
    """
    Returns every separable subcontext of a normalized context: the unions of a non-empty
    proper subfamily of the components. Sorted by size, then by index tuples.

    Raises:
        `NotNormalized`
    """
    requireNormalized(ctx)
    comps = components(ctx)
    found = []
    for group in Tools.subsets(comps, proper=True, nonEmpty=True):
        found.append((frozenset().union(*(a for a, _ in group)), frozenset().union(*(b for _, b in group))))
    return sorted(found, key=lambda p: (len(p[0]) + len(p[1]), sorted(p[0]), sorted(p[1])))


def decompositionUnits(ctx:MultiAdjointContext) -> List[Part]:
    """
    Components of the graph whose edges are the non-zero entries together with every pair
    assigned a conjunctor with zero-divisors. These units can never be split further.
    """
    return _partsOf(_bipartiteGraph(ctx, (ctx.relation != 0) | ctx.zeroDivisorMask))


def checkDecomposition(ctx:MultiAdjointContext, parts:Iterable[Part]) -> Check:
    """
    Checks the definition of a decomposition into independent subcontexts:
    at least two parts, attribute and object partitions, separable parts, and no conjunctor
    with zero-divisors on `A_λᶜ×B_λ` or `A_λ×B_λᶜ`.
    """
    parts = [(ctx.attributeSet(a), ctx.objectSet(b)) for a, b in parts]
    if len(parts) < 2:
        return Check.failed("a decomposition needs at least two parts", len(parts))
    for side, universe, sets in (("attributes", len(ctx.attributes), [a for a, _ in parts]),
                                 ("objects", len(ctx.objects), [b for _, b in parts])):
        if sum(len(s) for s in sets) != universe or len(frozenset().union(*sets)) != universe:
            return Check.failed(f"parts do not partition the {side}")
    for a, b in parts:
        if not (check := isSeparableSubcontext(ctx, a, b)):
            return Check.failed(f"part is not separable: {check.condition}", check.witness)
    for a, b in parts:
        rows = np.zeros(len(ctx.attributes), dtype=bool)
        rows[list(a)] = True
        cols = np.zeros(len(ctx.objects), dtype=bool)
        cols[list(b)] = True
        cross = (rows[:, None] & ~cols[None, :]) | (~rows[:, None] & cols[None, :])
        hit = np.argwhere(cross & ctx.zeroDivisorMask)
        if len(hit):
            i, j = hit[0]
            return Check.failed("conjunctor with zero-divisors between parts", (ctx.attributes[i], ctx.objects[j]))
    return Check.passed()


def enumerateDecompositions(ctx:MultiAdjointContext) -> List[SubcontextDecomposition]:
    """
    Returns every decomposition of a normalized context into independent subcontexts, in
    canonical order (fewest parts first). An empty list means the context is indecomposable.

    Raises:
        `NotNormalized`, `CertificationFailure` (a constructed decomposition failed its re-check)
    """
    requireNormalized(ctx)
    units = decompositionUnits(ctx)
    found = []
    for groups in Tools.setPartitions(units, minParts=2):
        parts = [(frozenset().union(*(a for a, _ in g)), frozenset().union(*(b for _, b in g))) for g in groups]
        if not (check := checkDecomposition(ctx, parts)):
            log.error(f"Constructed decomposition failed its check: {check.condition}")
            raise CertificationFailure(f"Constructed decomposition failed its check: {check.condition}", witness=check)
        found.append(SubcontextDecomposition(tuple(parts), ctx))
    log.debug(f"{len(units)} units, {len(found)} decompositions")
    return sorted(found, key=_sortKey)


def subcontext(ctx:MultiAdjointContext, Y:Iterable, X:Iterable) -> MultiAdjointContext:
    """ The context restricted to attributes `Y` and objects `X`, keeping their original order. """
    rows = sorted(ctx.attributeSet(Y))
    cols = sorted(ctx.objectSet(X))
    return MultiAdjointContext(
        ctx.frame,
        [ctx.attributes[i] for i in rows],
        [ctx.objects[j] for j in cols],
        ctx.relation[np.ix_(rows, cols)],
        ctx.sigma[np.ix_(rows, cols)],
    )

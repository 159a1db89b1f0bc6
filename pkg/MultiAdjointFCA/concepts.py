"""
# Multi-adjoint concept lattices

The derivation operators of a context `(A, B, R, σ)` are

- `g↑(a) = min_b R(a,b) ↙σ(a,b) g(b)` for a fuzzy set of objects `g`,
- `f↓(b) = min_a R(a,b) ↖σ(a,b) f(a)` for a fuzzy set of attributes `f`,

and a concept is a pair `⟨g, f⟩` with `g↑ = f` and `f↓ = g`.

`enumerateConcepts()` collects the extents of all fuzzy attributes `φ_{a,x}` (`x > 0`) plus the
full extent and closes them under pointwise minimum. Every meet-irreducible concept is generated
by some fuzzy attribute, so this yields the whole lattice. Concepts are identified by their
extent and numbered `C0, C1, ...` in lexicographic order of the extent grade vectors.

The returned `ConceptLattice` wraps a plain `BoundedLattice` over the labels `C0...Ck`, so every
lattice and block operation applies to it unchanged.
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

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from .context import MultiAdjointContext
from .errors import CertificationFailure, ContextError, UnknownConcept
from .lattice import BoundedLattice, latticeFromOrder
from .logger import getModuleLogger

__all__ = [
    'FuzzySet', 'FormalConcept', 'ConceptLattice',
    'deriveUp', 'deriveDown', 'fuzzyAttributeConcept', 'fuzzyObjectConcept', 'enumerateConcepts',
    'meetIrreducibleConcepts', 'irreducibleIndexSets', 'representationSides', 'checkRepresentation',
]

log = getModuleLogger("concepts")

ATTRIBUTES = "attributes"
OBJECTS = "objects"


@dataclass(frozen=True)
class FuzzySet:
    """ Grade indices over the attributes or the objects of a context, compared pointwise. """
    domain: str
    values: Tuple[int, ...]

    def __post_init__(self):
        if self.domain not in (ATTRIBUTES, OBJECTS):
            raise ContextError(f"Fuzzy set domain must be {ATTRIBUTES!r} or {OBJECTS!r}", witness=self.domain)
        object.__setattr__(self, 'values', tuple(int(v) for v in self.values))

    def __le__(self, other:"FuzzySet") -> bool:
        return self.domain == other.domain and all(x <= y for x, y in zip(self.values, other.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def asArray(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)

    def toDict(self, ctx:MultiAdjointContext) -> dict:
        """ Non-zero entries as `{label: "k/n"}`. """
        labels = ctx.attributes if self.domain == ATTRIBUTES else ctx.objects
        return {labels[i]: ctx.chain.render(v) for i, v in enumerate(self.values) if v}


@dataclass(frozen=True)
class FormalConcept:
    """ A closed pair: `extent` over the objects, `intent` over the attributes. """
    extent: FuzzySet
    intent: FuzzySet

    def __le__(self, other:"FormalConcept") -> bool:
        return self.extent <= other.extent

    def toDict(self, ctx:MultiAdjointContext) -> dict:
        return {'extent': self.extent.toDict(ctx), 'intent': self.intent.toDict(ctx)}


def _values(ctx:MultiAdjointContext, s, size:int, domain:str) -> np.ndarray:
    if isinstance(s, FuzzySet):
        if s.domain != domain:
            raise ContextError(f"Expected a fuzzy set over the {domain}, got one over the {s.domain}", witness=s.domain)
        s = s.values
    values = np.asarray(s, dtype=np.int64)
    if values.shape != (size,) or values.min(initial=0) < 0 or values.max(initial=0) > ctx.chain.n:
        raise ContextError(f"A fuzzy set over the {domain} needs {size} grades on the chain", witness=tuple(values.ravel()))
    return values


def deriveUp(ctx:MultiAdjointContext, g:Union[FuzzySet, Sequence[int]]) -> FuzzySet:
    """ `g↑`, a fuzzy set of attributes, from a fuzzy set of objects `g`. """
    return FuzzySet(ATTRIBUTES, ctx.upArray(_values(ctx, g, len(ctx.objects), OBJECTS)))


def deriveDown(ctx:MultiAdjointContext, f:Union[FuzzySet, Sequence[int]]) -> FuzzySet:
    """ `f↓`, a fuzzy set of objects, from a fuzzy set of attributes `f`. """
    return FuzzySet(OBJECTS, ctx.downArray(_values(ctx, f, len(ctx.attributes), ATTRIBUTES)))


def _grade(ctx:MultiAdjointContext, x) -> int:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        if 0 <= x <= ctx.chain.n:
            return int(x)
    return ctx.chain.parse(x)


def fuzzyAttributeConcept(ctx:MultiAdjointContext, a, x) -> FormalConcept:
    """
    `⟨φ_{a,x}↓, φ_{a,x}↓↑⟩`. The grade `x` is an index, or a decimal / `"k/n"` string.

    Raises:
        `UnknownAttribute`, `GridError`
    """
    extent = ctx.attributeExtent(a, _grade(ctx, x))
    return FormalConcept(FuzzySet(OBJECTS, extent), FuzzySet(ATTRIBUTES, ctx.upArray(extent)))


def fuzzyObjectConcept(ctx:MultiAdjointContext, b, y) -> FormalConcept:
    """
    `⟨φ_{b,y}↑↓, φ_{b,y}↑⟩`.

    Raises:
        `UnknownObject`, `GridError`
    """
    intent = ctx.objectIntent(b, _grade(ctx, y))
    return FormalConcept(FuzzySet(OBJECTS, ctx.downArray(intent)), FuzzySet(ATTRIBUTES, intent))


class ConceptLattice:
    """
    The concepts of a context in canonical order together with their lattice.

    Attributes:
        `context`: The context the lattice was built from.
        `concepts`: Tuple of `FormalConcept`, position `i` is concept `Ci`.
        `lattice`: `BoundedLattice` over the labels `C0...Ck` (`leqTable`, `meetTable`, `coverTable`...).
    """

    def __init__(self, context:MultiAdjointContext, extents:Iterable[Tuple[int, ...]]):
        self.context = context
        extents = sorted(set(tuple(int(v) for v in e) for e in extents))
        self.concepts = tuple(FormalConcept(FuzzySet(OBJECTS, e), FuzzySet(ATTRIBUTES, context.upArray(e)))
                              for e in extents)
        self._byExtent = {e: i for i, e in enumerate(extents)}
        E = np.array(extents, dtype=np.int64).reshape(len(extents), len(context.objects))
        leq = (E[:, None, :] <= E[None, :, :]).all(axis=2)
        self.lattice:BoundedLattice = latticeFromOrder([f"C{i}" for i in range(len(extents))], leq, minSize=1)

    def __len__(self):
        return len(self.concepts)

    def __getitem__(self, i) -> FormalConcept:
        return self.concepts[self.conceptIndex(i)]

    def __repr__(self):
        return f"ConceptLattice({len(self)} concepts)"

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def bounds(self) -> frozenset:
        return self.lattice.bounds

    def label(self, i:int) -> str:
        return self.lattice.elements[i]

    def conceptIndex(self, c) -> int:
        """
        Index of a concept given as index, label ("C3"), `FormalConcept`, extent `FuzzySet` or extent tuple.

        Raises:
            `UnknownConcept`
        """
        if isinstance(c, FormalConcept):
            c = c.extent
        if isinstance(c, FuzzySet):
            c = c.values if c.domain == OBJECTS else None
        if isinstance(c, (int, np.integer)) and not isinstance(c, bool):
            if 0 <= c < len(self.concepts):
                return int(c)
        elif isinstance(c, str):
            if c in self.lattice.elements:
                return self.lattice.index(c)
        elif isinstance(c, (tuple, list, np.ndarray)):
            key = tuple(int(v) for v in c)
            if key in self._byExtent:
                return self._byExtent[key]
        raise UnknownConcept(f"{c!r} is not a concept of this lattice", witness=c)

    def extentArray(self, i:int) -> np.ndarray:
        return self.concepts[i].extent.asArray()

    @cached_property
    def irreducibles(self) -> Dict[int, List[Tuple[int, int]]]:
        return meetIrreducibleConcepts(self.context, self)

    def toDict(self) -> dict:
        """ Concept report: concepts with labels and irreducible markers, Hasse covers, bounds. """
        irreducible = self.irreducibles
        concepts = []
        for i, c in enumerate(self.concepts):
            entry = {'label': self.label(i), **c.toDict(self.context), 'irreducible': i in irreducible}
            if i in irreducible:
                entry['generators'] = [[self.context.attributes[a], self.context.chain.render(x)] for a, x in irreducible[i]]
            concepts.append(entry)
        return {
            'concepts': concepts,
            'covers': [[self.label(i), self.label(j)] for i, j in self.lattice.covers],
            'bottom': self.label(self.bottom),
            'top': self.label(self.top),
        }


def enumerateConcepts(ctx:MultiAdjointContext) -> ConceptLattice:
    """ Returns the concept lattice of `ctx` (see the module description for the method). """
    n = ctx.chain.n
    closed = {tuple([n] * len(ctx.objects))}
    for a in range(len(ctx.attributes)):
        for x in range(1, n + 1):
            closed.add(tuple(int(v) for v in ctx.attributeExtent(a, x)))
    frontier = list(closed)
    while frontier:
        fresh = []
        for e in frontier:
            for s in list(closed):
                m = tuple(map(min, e, s))
                if m not in closed:
                    closed.add(m)
                    fresh.append(m)
        frontier = fresh
    log.debug(f"{len(closed)} concepts")
    return ConceptLattice(ctx, closed)


def meetIrreducibleConcepts(ctx:MultiAdjointContext, lat:ConceptLattice) -> Dict[int, List[Tuple[int, int]]]:
    """
    Returns the meet-irreducible concepts, each with every `(attribute index, grade index)`
    fuzzy attribute generating it.

    A concept generated by a fuzzy attribute is meet-irreducible when it is not the top and is not
    the meet of the generated concepts strictly above it. The result is checked against the
    structural one-upper-cover test of the lattice.

    Raises:
        `CertificationFailure`: the two characterizations disagree.
    """
    gens = defaultdict(list)
    for a in range(len(ctx.attributes)):
        for x in range(1, ctx.chain.n + 1):
            gens[lat.conceptIndex(ctx.attributeExtent(a, x))].append((a, x))
    leq = lat.lattice.leqTable
    candidates = [c for c in gens if c != lat.top]
    found = {}
    for c in candidates:
        above = [d for d in candidates if d != c and leq[c, d]]
        if lat.lattice.meetOf(above) != c:
            found[c] = sorted(gens[c])
    structural = lat.lattice.meetIrreducibles()
    if set(found) != structural:
        diff = sorted(set(found) ^ structural)
        log.error(f"Meet-irreducible concepts disagree on {[lat.label(i) for i in diff]}")
        raise CertificationFailure("Generated and structural meet-irreducible concepts differ", witness=diff)
    return dict(sorted(found.items()))


def irreducibleIndexSets(ctx:MultiAdjointContext, lat:ConceptLattice, attrs:Iterable, c) -> Tuple[frozenset, frozenset]:
    """
    Returns `(M_F, M_c)` for an attribute subset: the meet-irreducible concepts generated by a
    fuzzy attribute of `attrs`, and those among them above the concept `c`.

    Raises:
        `UnknownConcept`, `UnknownAttribute`
    """
    i = lat.conceptIndex(c)
    attrs = ctx.attributeSet(attrs)
    generated = frozenset(m for m, gens in lat.irreducibles.items() if any(a in attrs for a, _ in gens))
    above = frozenset(m for m in generated if lat.lattice.leqTable[i, m])
    return generated, above


def representationSides(ctx:MultiAdjointContext, a, x, b, y) -> Tuple[bool, bool]:
    """
    Both sides of `⟨φ_{b,y}↑↓, φ_{b,y}↑⟩ ≤ ⟨φ_{a,x}↓, φ_{a,x}↓↑⟩  ⇔  x &σ(a,b) y ≤ R(a,b)`.
    """
    x, y = _grade(ctx, x), _grade(ctx, y)
    lhs = fuzzyObjectConcept(ctx, b, y) <= fuzzyAttributeConcept(ctx, a, x)
    rhs = ctx.conjunctionAt(a, b, x, y) <= ctx.grade(a, b)
    return bool(lhs), bool(rhs)


def checkRepresentation(ctx:MultiAdjointContext, a, x, b, y) -> bool:
    """ Whether the two sides of `representationSides()` agree. """
    lhs, rhs = representationSides(ctx, a, x, b, y)
    return lhs == rhs

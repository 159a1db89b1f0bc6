"""
# Grade chains and adjoint triples

Grades are the points `0, 1/n, ..., 1` of a `GradeChain`, stored as integer indices `0..n`.
Decimal or `"k/n"` text is converted only when reading and writing documents
(`GradeChain.parse()` and `GradeChain.render()`), so all arithmetic is exact.

An `AdjointTriple` holds a conjunctor `&` and its two residua as `(n+1)×(n+1)` index tables:

- `conj[x, y]` is `x & y`
- `resLeft[z, y]` is `z ↙ y = max{x : x & y ≤ z}`
- `resRight[z, x]` is `z ↖ x = max{y : x & y ≤ z}`

Built-in conjunctors are the ceiling discretizations of the Gödel, Łukasiewicz and product
t-norms (`builtinTriple()`); any other monotone table can be used through `tableTriple()`.
Every triple returned by this module has passed `verifyAdjoint()`.

A `MultiAdjointFrame` is a chain plus its named triples, as read from the `"frame"` object of a
context document.
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

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from .errors import FrameError, GridError, NoMaximum, NotMonotone, ResiduationError, UnknownConjunctor
from .io_spec import CONJUNCTOR_KINDS
from .logger import getModuleLogger
from .tools import Check

__all__ = [
    'GradeChain', 'AdjointTriple', 'MultiAdjointFrame',
    'builtinTriple', 'tableTriple', 'residuumFromConjunctor', 'verifyAdjoint',
    'hasZeroDivisors', 'satisfiesBoundary', 'checkTripleProperties',
]

log = getModuleLogger("residuation")


@dataclass(frozen=True)
class GradeChain:
    """ The chain `0 < 1/n < ... < 1`. Grades are the indices `0..n`. """
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise GridError(f"A grade chain needs a positive integer granularity, got {self.n!r}", witness=self.n)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.n

    @property
    def grades(self) -> range:
        return range(self.n + 1)

    def __len__(self):
        return self.n + 1

    def parse(self, value) -> int:
        """
        Returns the index of a grade given as a number, a decimal string or a `"k/n"` string.

        Raises:
            `GridError`: The value is not a number or does not lie exactly on the chain.
        """
        if isinstance(value, bool):
            raise GridError(f"Grade must be a number, got {value!r}", witness=value)
        try:
            if isinstance(value, (int, Fraction)):
                q = Fraction(value)
            elif isinstance(value, float):
                # repr() gives the shortest decimal, so 0.6 reads as 3/5
                q = Fraction(repr(value))
            else:
                q = Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            raise GridError(f"Grade {value!r} is not a number", witness=value) from None
        k = q * self.n
        if k.denominator != 1 or not 0 <= k <= self.n:
            raise GridError(f"Grade {value!r} is not on the chain 0, 1/{self.n}, ..., 1", witness=value)
        return int(k)

    def fraction(self, i:int) -> Fraction:
        return Fraction(int(i), self.n)

    def render(self, i:int) -> str:
        """ Text form of a grade index: "0", "3/5", "1". """
        return str(self.fraction(i))

    def toDict(self) -> dict:
        return {'grades': self.n}


def _readOnly(a) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class AdjointTriple:
    """
    A conjunctor with its two residua over one grade chain.

    Use `builtinTriple()` or `tableTriple()` to create instances; they verify the adjoint property.
    """
    name: str
    chain: GradeChain
    conj: np.ndarray
    resLeft: np.ndarray
    resRight: np.ndarray
    kind: str = "table"

    def __post_init__(self):
        size = (self.chain.n + 1, self.chain.n + 1)
        for field in ('conj', 'resLeft', 'resRight'):
            table = _readOnly(getattr(self, field))
            if table.shape != size:
                raise ResiduationError(f"Table {field!r} of {self.name!r} must have shape {size}, got {table.shape}", witness=table.shape)
            object.__setattr__(self, field, table)

    def __repr__(self):
        return f"AdjointTriple({self.name!r}, kind={self.kind!r}, n={self.chain.n})"

    def conjunction(self, x:int, y:int) -> int:
        return int(self.conj[x, y])

    def residueLeft(self, z:int, y:int) -> int:
        """ `z ↙ y` """
        return int(self.resLeft[z, y])

    def residueRight(self, z:int, x:int) -> int:
        """ `z ↖ x` """
        return int(self.resRight[z, x])

    @cached_property
    def zeroDivisor(self) -> Optional[Tuple[int, int]]:
        """ First pair of non-zero grades `(x, y)` with `x & y = 0`, or `None`. """
        found = np.argwhere(self.conj[1:, 1:] == 0)
        return (int(found[0][0]) + 1, int(found[0][1]) + 1) if len(found) else None

    @property
    def hasZeroDivisors(self) -> bool:
        return self.zeroDivisor is not None

    @cached_property
    def boundaryBothArgs(self) -> bool:
        """ `x & 1 = 1 & x = x` for every grade. """
        return bool(satisfiesBoundary(self))

    @cached_property
    def isCommutative(self) -> bool:
        return bool((self.conj == self.conj.T).all())

    def toDict(self) -> dict:
        d = {'name': self.name, 'kind': self.kind}
        if self.kind == "table":
            d['table'] = [[self.chain.render(v) for v in row] for row in self.conj]
        return d


def _monotoneWitness(conj:np.ndarray) -> Optional[tuple]:
    down = np.argwhere(np.diff(conj, axis=0) < 0)
    if len(down):
        x, y = down[0]
        return (int(x), int(y)), (int(x) + 1, int(y))
    down = np.argwhere(np.diff(conj, axis=1) < 0)
    if len(down):
        x, y = down[0]
        return (int(x), int(y)), (int(x), int(y) + 1)
    return None


def residuumFromConjunctor(chain:GradeChain, conj) -> Tuple[np.ndarray, np.ndarray]:
    """
    Computes both residua of a conjunctor table by scanning for the maximum.

    Args:
        `chain`: The grade chain.
        `conj`: `(n+1)×(n+1)` index table, `conj[x, y] = x & y`.

    Returns:
        `(resLeft, resRight)` with `resLeft[z, y] = z ↙ y` and `resRight[z, x] = z ↖ x`.

    Raises:
        `NotMonotone`: with the two grid points where the order is broken as witness.
        `NoMaximum`: when some `{x : x & y ≤ z}` is empty, ie. `0 & y > 0`.
    """
    conj = np.asarray(conj, dtype=np.int64)
    if (witness := _monotoneWitness(conj)) is not None:
        raise NotMonotone(f"Conjunctor is not order-preserving between {witness[0]} and {witness[1]}", witness=witness)
    g = np.arange(chain.n + 1)
    # below[z, x, y] is x & y ≤ z
    below = conj[None, :, :] <= g[:, None, None]
    resLeft = np.where(below, g[None, :, None], -1).max(axis=1)
    resRight = np.where(below, g[None, None, :], -1).max(axis=2)
    empty = np.argwhere(resLeft < 0)
    if len(empty) == 0:
        empty = np.argwhere(resRight < 0)
    if len(empty):
        z, v = (int(i) for i in empty[0])
        raise NoMaximum(f"No grade satisfies the residuum condition at z={z}, argument={v}", witness=(z, v))
    return resLeft, resRight


def verifyAdjoint(t:AdjointTriple) -> Optional[Tuple[int, int, int]]:
    """
    Checks `x ≤ z↙y  ⇔  x&y ≤ z  ⇔  y ≤ z↖x` on every grid triple.
    Returns `None` when it holds, otherwise the first counterexample `(x, y, z)`.
    """
    g = np.arange(t.chain.n + 1)
    byLeft = g[:, None, None] <= t.resLeft.T[None, :, :]
    byConj = t.conj[:, :, None] <= g[None, None, :]
    byRight = g[None, :, None] <= t.resRight.T[:, None, :]
    bad = np.argwhere((byLeft != byConj) | (byConj != byRight))
    if len(bad):
        return tuple(int(v) for v in bad[0])
    return None


def _certified(t:AdjointTriple) -> AdjointTriple:
    if (bad := verifyAdjoint(t)) is not None:
        raise ResiduationError(f"{t.name!r} is not an adjoint triple, the adjoint property fails at (x, y, z) = {bad}", witness=bad)
    return t


def builtinTriple(chain:GradeChain, kind:str, name:str=None) -> AdjointTriple:
    """
    Returns one of the built-in discretized triples.

    Args:
        `chain`: The grade chain.
        `kind`: "godel", "lukasiewicz" or "product".
        `name`: Name of the triple, defaults to `kind`.

    The conjunctors are `⌈n·min(x, y)⌉/n`, `⌈n·max(0, x+y-1)⌉/n` and `⌈n·xy⌉/n`.
    Gödel and Łukasiewicz residua use their closed forms; product residua come from `residuumFromConjunctor()`.
    """
    n = chain.n
    i = np.arange(n + 1)[:, None]
    j = np.arange(n + 1)[None, :]
    if kind == "godel":
        conj = np.minimum(i, j)
        res = np.where(j <= i, n, np.broadcast_to(i, (n + 1, n + 1)))
        resLeft = resRight = res
    elif kind == "lukasiewicz":
        conj = np.maximum(0, i + j - n)
        resLeft = resRight = np.minimum(n, n - j + i)
    elif kind == "product":
        conj = -((-(i * j)) // n)
        resLeft, resRight = residuumFromConjunctor(chain, conj)
    else:
        raise UnknownConjunctor(f"Unknown conjunctor kind {kind!r}, expected one of {CONJUNCTOR_KINDS[:-1]}", witness=kind)
    return _certified(AdjointTriple(name or kind, chain, conj, resLeft, resRight, kind))


def tableTriple(chain:GradeChain, name:str, table) -> AdjointTriple:
    """
    Returns the triple of a custom conjunctor given as an `(n+1)×(n+1)` table of grade indices.

    Raises:
        `ResiduationError` for a table of the wrong shape or with values off the chain,
        `NotMonotone`, `NoMaximum` (see `residuumFromConjunctor()`).
    """
    conj = np.asarray(table, dtype=np.int64)
    if conj.shape != (chain.n + 1, chain.n + 1):
        raise ResiduationError(f"Conjunctor table {name!r} must be {chain.n + 1}×{chain.n + 1}, got {conj.shape}", witness=conj.shape)
    if conj.min() < 0 or conj.max() > chain.n:
        raise ResiduationError(f"Conjunctor table {name!r} has values off the grade chain", witness=name)
    resLeft, resRight = residuumFromConjunctor(chain, conj)
    return _certified(AdjointTriple(name, chain, conj, resLeft, resRight, "table"))


def hasZeroDivisors(t:AdjointTriple) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """ Returns `(True, (x, y))` for the first non-zero pair with `x & y = 0`, else `(False, None)`. """
    return t.hasZeroDivisors, t.zeroDivisor


def satisfiesBoundary(t:AdjointTriple) -> Check:
    """ Checks the boundary condition `x & 1 = 1 & x = x` in both arguments. """
    g = np.arange(t.chain.n + 1)
    for side, values in (("x & 1", t.conj[:, -1]), ("1 & x", t.conj[-1, :])):
        bad = np.flatnonzero(values != g)
        if len(bad):
            return Check.failed(f"boundary condition {side} = x fails", int(bad[0]))
    return Check.passed()


def checkTripleProperties(t:AdjointTriple) -> Dict[str, Check]:
    """
    Checks the general properties every adjoint triple over a bounded chain has, clause by clause.
    Keys are short clause names; each value is a `Check` with a grid witness on failure.
    """
    n = t.chain.n
    g = np.arange(n + 1)

    def firstBad(mask):
        bad = np.argwhere(mask)
        return Check.passed() if not len(bad) else Check.failed("violated", tuple(int(v) for v in bad[0]))

    below = t.conj[None, :, :] <= g[:, None, None]
    return {
        'conj monotone': firstBad(np.diff(t.conj, axis=0) < 0) and firstBad(np.diff(t.conj, axis=1) < 0),
        'residua monotone': (firstBad(np.diff(t.resLeft, axis=0) < 0) and firstBad(np.diff(t.resLeft, axis=1) > 0)
                             and firstBad(np.diff(t.resRight, axis=0) < 0) and firstBad(np.diff(t.resRight, axis=1) > 0)),
        'bottom & y, top ↙ y': firstBad(t.conj[0, :] != 0) and firstBad(t.resLeft[n, :] != n),
        'x & bottom, top ↖ x': firstBad(t.conj[:, 0] != 0) and firstBad(t.resRight[n, :] != n),
        'z ↖ bottom, z ↙ bottom': firstBad(t.resRight[:, 0] != n) and firstBad(t.resLeft[:, 0] != n),
        'left residuum is max': firstBad(t.resLeft != np.where(below, g[None, :, None], -1).max(axis=1)),
        'right residuum is max': firstBad(t.resRight != np.where(below, g[None, None, :], -1).max(axis=2)),
    }


@dataclass(frozen=True)
class MultiAdjointFrame:
    """ A grade chain together with the named adjoint triples a context may assign to its pairs. """
    chain: GradeChain
    triples: Tuple[AdjointTriple, ...]

    def __post_init__(self):
        names = [t.name for t in self.triples]
        if len(set(names)) != len(names):
            raise FrameError(f"Conjunctor names must be unique, got {names}", witness=names)
        if not names:
            raise FrameError("A frame needs at least one conjunctor")
        for t in self.triples:
            if t.chain != self.chain:
                raise FrameError(f"Conjunctor {t.name!r} is defined over a different chain", witness=t.name)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(t.name for t in self.triples)

    def triple(self, name:str) -> AdjointTriple:
        for t in self.triples:
            if t.name == name:
                return t
        raise UnknownConjunctor(f"Frame has no conjunctor named {name!r}", witness=name)

    def tripleIndex(self, name:str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownConjunctor(f"Frame has no conjunctor named {name!r}", witness=name) from None

    @classmethod
    def fromDict(cls, d:dict) -> "MultiAdjointFrame":
        """ Builds a frame from an already schema-validated `"frame"` object. """
        chain = GradeChain(d['grades'])
        triples = []
        for spec in d['conjunctors']:
            kind = spec.get('kind', "godel")
            if kind == "table":
                if not isinstance(table := spec.get('table'), list):
                    raise FrameError(f"Conjunctor {spec['name']!r} of kind 'table' needs a 'table'", witness=spec['name'])
                rows = [[chain.parse(v) for v in row] for row in table]
                if any(len(row) != len(rows) for row in rows):
                    raise FrameError(f"Conjunctor table {spec['name']!r} must be square", witness=spec['name'])
                triples.append(tableTriple(chain, spec['name'], rows))
            else:
                triples.append(builtinTriple(chain, kind, spec['name']))
        log.debug(f"Frame over n={chain.n} with conjunctors {[t.name for t in triples]}")
        return cls(chain, tuple(triples))

    def toDict(self) -> dict:
        return {'grades': self.chain.n, 'conjunctors': [t.toDict() for t in self.triples]}

"""
Brute-force ground truth for the fast enumerations.

Every function here rechecks a definition directly, by exhaustive search and with plain loops.
Nothing is shared with the fast code paths beyond the domain types (lattice tables, context
matrices, conjunctor tables). They are slow and refuse inputs beyond the limits in
`MultiAdjointFCA.io_spec` by raising `TooLarge`.
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

from itertools import permutations, product
from typing import List, Tuple

from .concepts import FormalConcept, FuzzySet
from .context import MultiAdjointContext, SubcontextDecomposition
from .errors import TooLarge
from .io_spec import MAX_ORACLE_LATTICE, MAX_ORACLE_SIDE, MAX_ORACLE_STATES
from .lattice import BoundedLattice
from .logger import getModuleLogger
from .residuation import AdjointTriple

__all__ = ['bruteBlocks', 'bruteConcepts', 'bruteDecompositions', 'bruteResidua', 'bruteMeetIrreducibles']

log = getModuleLogger("oracle")


def bruteResidua(t:AdjointTriple) -> Tuple[List[List[int]], List[List[int]]]:
    """ Residua of `t` by scanning the conjunctor table: `(left[z][y], right[z][x])`. """
    grades = range(t.chain.n + 1)
    conj = t.conj.tolist()
    left = [[max(x for x in grades if conj[x][y] <= z) for y in grades] for z in grades]
    right = [[max(y for y in grades if conj[x][y] <= z) for x in grades] for z in grades]
    return left, right


def bruteMeetIrreducibles(L:BoundedLattice) -> frozenset:
    """ Elements `x ≠ ⊤` such that `x = y ∧ z` forces `x = y` or `x = z`. """
    n = len(L)
    meet = L.meetTable.tolist()
    found = set()
    for x in range(n):
        if x == L.top:
            continue
        if all(y == x or z == x for y in range(n) for z in range(n) if meet[y][z] == x):
            found.add(x)
    return frozenset(found)


def bruteBlocks(L:BoundedLattice, limit:int = MAX_ORACLE_LATTICE) -> List[frozenset]:
    """
    Every subset of `L` satisfying the block definition, sorted by size then members.

    Raises:
        `TooLarge`: `L` has more than `limit` elements.
    """
    n = len(L)
    if n > limit:
        raise TooLarge(f"Block oracle is limited to {limit} elements, lattice has {n}", witness=n)
    leq, meet, join = L.leqTable.tolist(), L.meetTable.tolist(), L.joinTable.tolist()
    bounds = (L.bottom, L.top)
    found = []
    for mask in range(1 << n):
        S = [i for i in range(n) if mask >> i & 1]
        if len(S) == n or all(k in bounds for k in S):
            continue
        inS = set(S)
        closed = all(z in inS or z in bounds
                     for k in S if k not in bounds
                     for z in range(n) if leq[k][z] or leq[z][k])
        if not closed:
            continue
        if all(meet[x][y] in inS and join[x][y] in inS for x in S for y in S):
            found.append(frozenset(S))
    log.debug(f"Block oracle found {len(found)} blocks")
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def bruteConcepts(ctx:MultiAdjointContext, limit:int = MAX_ORACLE_STATES) -> List[FormalConcept]:
    """
    All concepts, found by testing `g↑↓ = g` for every fuzzy set of objects. Sorted by extent.

    Raises:
        `TooLarge`: there are more than `limit` fuzzy sets of objects.
    """
    n = ctx.chain.n
    nA, nB = len(ctx.attributes), len(ctx.objects)
    if (n + 1) ** nB > limit:
        raise TooLarge(f"Concept oracle is limited to {limit} fuzzy sets, context has {(n + 1) ** nB}", witness=(n + 1) ** nB)
    residua = [bruteResidua(t) for t in ctx.frame.triples]
    R, sigma = ctx.relation.tolist(), ctx.sigma.tolist()

    def up(g):
        return tuple(min(residua[sigma[a][b]][0][R[a][b]][g[b]] for b in range(nB)) for a in range(nA))

    def down(f):
        return tuple(min(residua[sigma[a][b]][1][R[a][b]][f[a]] for a in range(nA)) for b in range(nB))

    found = []
    for g in product(range(n + 1), repeat=nB):
        f = up(g)
        if down(f) == g:
            found.append(FormalConcept(FuzzySet("objects", g), FuzzySet("attributes", f)))
    return sorted(found, key=lambda c: c.extent.values)


def _partitions(items):
    """ Set partitions via restricted growth strings. """
    items = list(items)
    if not items:
        yield []
        return

    def grow(prefix, top):
        if len(prefix) == len(items):
            blocks = [[] for _ in range(top + 1)]
            for item, label in zip(items, prefix):
                blocks[label].append(item)
            yield blocks
            return
        for label in range(top + 2):
            yield from grow(prefix + [label], max(top, label))

    yield from grow([0], 0)


def bruteDecompositions(ctx:MultiAdjointContext, limit:int = MAX_ORACLE_SIDE) -> List[SubcontextDecomposition]:
    """
    All decompositions into independent subcontexts, by testing every pairing of an attribute
    partition with an object partition of the same size.

    Raises:
        `TooLarge`: more than `limit` attributes or objects.
    """
    nA, nB = len(ctx.attributes), len(ctx.objects)
    if nA > limit or nB > limit:
        raise TooLarge(f"Decomposition oracle is limited to {limit} attributes and objects", witness=(nA, nB))
    R, sigma = ctx.relation.tolist(), ctx.sigma.tolist()
    grades = range(1, ctx.chain.n + 1)
    zeroDivisor = [any(t.conj[x, y] == 0 for x in grades for y in grades) for t in ctx.frame.triples]

    def independent(Y, X):
        if not any(R[a][b] for a in Y for b in X):
            return False
        for a in range(nA):
            for b in range(nB):
                if (a in Y) != (b in X):
                    if R[a][b] or zeroDivisor[sigma[a][b]]:
                        return False
        return True

    found = set()
    attrPartitions = [p for p in _partitions(range(nA)) if len(p) >= 2]
    objPartitions = [p for p in _partitions(range(nB)) if len(p) >= 2]
    for P in attrPartitions:
        for Q in objPartitions:
            if len(P) != len(Q):
                continue
            for order in permutations(Q):
                parts = [(set(Y), set(X)) for Y, X in zip(P, order)]
                if all(independent(Y, X) for Y, X in parts):
                    found.add(tuple(sorted((tuple(sorted(Y)), tuple(sorted(X))) for Y, X in parts)))
    result = [SubcontextDecomposition(tuple((frozenset(Y), frozenset(X)) for Y, X in key), ctx) for key in found]
    return sorted(result, key=lambda d: (len(d), d.key))

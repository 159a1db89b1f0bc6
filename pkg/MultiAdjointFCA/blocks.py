"""
# Blocks of a bounded lattice

A *block* of a lattice `L` is a proper sublattice `K` with at least one element besides the
bounds, such that `(↑k ∪ ↓k) minus {⊥, ⊤}` is contained in `K` for every non-bound member `k`.
A block is *minimal* if it contains no smaller block and *complete* if it holds both bounds.
Two blocks are *independent* when they share nothing but bounds.

The smallest block around an element is a closure (`minimalBlockOf()`): keep adding the
non-bound elements comparable to a member, plus every meet and join of members, until nothing
changes. Bounds therefore only enter a minimal block as a meet or join of members.

Every block is a union of minimal blocks plus possibly some bounds, so `enumerateBlocks()` and
`enumerateBlockDecompositions()` work on the (few) minimal blocks instead of the powerset.
Decompositions always attach both bounds to each of their blocks.

```py
from MultiAdjointFCA.blocks import enumerateMinimalBlocks, isBlock

[b.labels() for b in enumerateMinimalBlocks(L)]
check = isBlock(L, ["a", "b", "c"])
if not check:
    print(check.condition, check.witness)   # not a sublattice top
```
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
from functools import cached_property
from itertools import combinations
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .errors import (BoundElement, CertificationFailure, ComplementTrivial, DifferentCarrier, NoBlocks,
                     NoCompleteBlock, NotABlock, UnionIsWholeLattice, WholeLattice)
from .lattice import BoundedLattice, Element
from .logger import getModuleLogger
from .tools import Check, Tools

__all__ = [
    'Block', 'BlockDecomposition', 'PairClass',
    'isBlock', 'certifyBlock', 'minimalBlockOf', 'enumerateMinimalBlocks', 'enumerateBlocks',
    'classifyPair', 'unionBlocks', 'complementBlock', 'enumerateBlockDecompositions',
]

log = getModuleLogger("blocks")


@dataclass(frozen=True)
class Block:
    """ A certified block: a set of element indices of `carrier`. Create with `certifyBlock()` or the enumeration functions. """
    members: frozenset
    carrier: BoundedLattice = field(compare=False, hash=False, repr=False)

    @property
    def complete(self) -> bool:
        return self.carrier.bottom in self.members and self.carrier.top in self.members

    @cached_property
    def minimal(self) -> bool:
        inner = self.members - self.carrier.bounds
        return all(_closure(self.carrier, [k]) == self.members for k in inner)

    @property
    def flags(self) -> dict:
        return {'minimal': self.minimal, 'complete': self.complete}

    @property
    def key(self) -> tuple:
        return tuple(sorted(self.members))

    def labels(self) -> List[str]:
        return self.carrier.labelsOf(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return self.carrier.index(x) in self.members

    def toDict(self) -> list:
        return self.labels()


@dataclass(frozen=True)
class PairClass:
    """ Result of `classifyPair()`: either independent blocks or their (block) intersection. """
    independent: bool
    intersection: Optional[Block] = None


@dataclass(frozen=True)
class BlockDecomposition:
    """ A family of at least two independent blocks covering the lattice, in canonical order. """
    blocks: tuple
    carrier: BoundedLattice = field(compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'blocks', tuple(sorted(self.blocks, key=lambda b: b.key)))

    def __len__(self):
        return len(self.blocks)

    @property
    def key(self) -> tuple:
        return tuple(b.key for b in self.blocks)

    def check(self) -> Check:
        """ Re-checks the decomposition: at least two blocks, each a block, pairwise independent, covering the lattice. """
        L = self.carrier
        if len(self.blocks) < 2:
            return Check.failed("a decomposition needs at least two blocks", len(self.blocks))
        for b in self.blocks:
            if b.carrier is not L:
                return Check.failed("blocks belong to different lattices")
            if not (check := isBlock(L, b.members)):
                return Check.failed(f"member is not a block: {check.condition}", check.witness)
        for b1, b2 in combinations(self.blocks, 2):
            if shared := (b1.members & b2.members) - L.bounds:
                return Check.failed("blocks are not independent", L.labelsOf(shared))
        if missing := frozenset(range(len(L))) - frozenset().union(*(b.members for b in self.blocks)):
            return Check.failed("blocks do not cover the lattice", L.labelsOf(missing))
        return Check.passed()

    def toDict(self) -> list:
        return [b.labels() for b in self.blocks]


def _mask(L:BoundedLattice, xs) -> np.ndarray:
    m = np.zeros(len(L), dtype=bool)
    m[list(xs)] = True
    return m


def _closure(L:BoundedLattice, seed:Iterable[int]) -> frozenset:
    """ Smallest set holding `seed` which is closed under meets, joins and non-bound comparable elements. """
    inner = ~_mask(L, L.bounds)
    s = _mask(L, seed)
    while True:
        nb = s & inner
        grown = s | ((L.leqTable[nb].any(axis=0) | L.leqTable[:, nb].any(axis=1)) & inner)
        idx = np.flatnonzero(s)
        grown[L.meetTable[np.ix_(idx, idx)].ravel()] = True
        grown[L.joinTable[np.ix_(idx, idx)].ravel()] = True
        if (grown == s).all():
            return frozenset(int(i) for i in np.flatnonzero(s))
        s = grown


def isBlock(L:BoundedLattice, S:Iterable[Element]) -> Check:
    """
    Checks the block conditions in a fixed order and reports the first one that fails:

    1. "block must be a proper subset"
    2. "block must contain an element other than the bounds"
    3. "not a sublattice", witness: the missing meet or join
    4. "not closed under comparable elements", witness: the missing element

    Raises:
        `UnknownElement`
    """
    members = L.indicesOf(S)
    if len(members) == len(L):
        return Check.failed("block must be a proper subset")
    inner = members - L.bounds
    if not inner:
        return Check.failed("block must contain an element other than the bounds")
    ordered = sorted(members)
    for i, x in enumerate(ordered):
        for y in ordered[i:]:
            for z in (int(L.meetTable[x, y]), int(L.joinTable[x, y])):
                if z not in members:
                    return Check.failed("not a sublattice", L.elements[z])
    for k in sorted(inner):
        if missing := (L.upset(k) | L.downset(k)) - L.bounds - members:
            return Check.failed("not closed under comparable elements", L.elements[min(missing)])
    return Check.passed()


def certifyBlock(L:BoundedLattice, S:Iterable[Element]) -> Block:
    """ Returns `S` as a `Block`, or raises `NotABlock` with the failed `Check` as witness. """
    members = L.indicesOf(S)
    if not (check := isBlock(L, members)):
        raise NotABlock(f"{L.labelsOf(members)} is not a block: {check.condition}", witness=check)
    return Block(members, L)


def _ownMinimalBlock(L:BoundedLattice, k:int) -> Optional[frozenset]:
    members = _closure(L, [k])
    return None if len(members) == len(L) else members


def minimalBlockOf(L:BoundedLattice, k:Element) -> Block:
    """
    Returns the smallest block containing the non-bound element `k`.

    Raises:
        `BoundElement`, `WholeLattice` (no block contains `k`), `UnknownElement`
    """
    i = L.index(k)
    if i in L.bounds:
        raise BoundElement(f"{L.elements[i]!r} is a bound of the lattice", witness=L.elements[i])
    if (members := _ownMinimalBlock(L, i)) is None:
        raise WholeLattice(f"The block closure of {L.elements[i]!r} is the whole lattice", witness=L.elements[i])
    return certifyBlock(L, members)


def _minimalBlocks(L:BoundedLattice):
    """ Returns (distinct minimal blocks as member sets, non-bound elements without any block). """
    found, homeless = set(), []
    for k in range(len(L)):
        if k in L.bounds:
            continue
        members = _ownMinimalBlock(L, k)
        if members is None:
            homeless.append(k)
        else:
            found.add(members)
    return Tools.canonicalSets(found), homeless


def enumerateMinimalBlocks(L:BoundedLattice) -> List[Block]:
    """
    Returns the distinct minimal blocks of `L` in canonical order. They are pairwise independent.
    Elements whose closure is the whole lattice belong to no block and are logged.

    Raises:
        `NoBlocks`: `L` has no block at all; `witness` lists the elements that were tried.
    """
    found, homeless = _minimalBlocks(L)
    if homeless:
        log.debug(f"No block contains {L.labelsOf(homeless)}")
    if not found:
        raise NoBlocks("The lattice has no blocks", witness=L.labelsOf(homeless))
    return [Block(m, L) for m in found]


def enumerateBlocks(L:BoundedLattice) -> List[Block]:
    """ Returns every block of `L`: unions of minimal blocks with any subset of the bounds that pass `isBlock()`. """
    found, _ = _minimalBlocks(L)
    candidates = set()
    for family in Tools.subsets(found, nonEmpty=True):
        union = frozenset().union(*family)
        for extra in Tools.subsets(L.bounds):
            candidates.add(union | frozenset(extra))
    return [Block(m, L) for m in Tools.canonicalSets(candidates) if isBlock(L, m)]


def classifyPair(K1:Block, K2:Block) -> PairClass:
    """
    Either the blocks are independent, or their intersection is again a block.

    Raises:
        `DifferentCarrier`
    """
    if K1.carrier is not K2.carrier:
        raise DifferentCarrier("Blocks belong to different lattices")
    shared = K1.members & K2.members
    if shared <= K1.carrier.bounds:
        return PairClass(True)
    return PairClass(False, certifyBlock(K1.carrier, shared))


def unionBlocks(blocks:Sequence[Block]) -> Block:
    """
    Returns the union of blocks, one of which must be complete, as a complete block.

    Raises:
        `DifferentCarrier`, `NoCompleteBlock`, `UnionIsWholeLattice`
    """
    if not blocks:
        raise NoCompleteBlock("No blocks to unite")
    L = blocks[0].carrier
    if any(b.carrier is not L for b in blocks):
        raise DifferentCarrier("Blocks belong to different lattices")
    if not any(b.complete for b in blocks):
        raise NoCompleteBlock("At least one block of the union must be complete")
    union = frozenset().union(*(b.members for b in blocks))
    if len(union) == len(L):
        raise UnionIsWholeLattice("The union of the blocks is the whole lattice")
    return certifyBlock(L, union)


def complementBlock(L:BoundedLattice, K:Block) -> Block:
    """
    Returns the complete block `(L minus K) ∪ {⊥, ⊤}`, which together with `K` decomposes `L`.

    Raises:
        `DifferentCarrier`, `ComplementTrivial`, `CertificationFailure`
    """
    if K.carrier is not L:
        raise DifferentCarrier("Block belongs to a different lattice")
    rest = frozenset(range(len(L))) - K.members
    if rest <= L.bounds:
        raise ComplementTrivial("Only bounds lie outside the block", witness=L.labelsOf(rest))
    P = certifyBlock(L, rest | L.bounds)
    if not (check := BlockDecomposition((K, P), L).check()):
        raise CertificationFailure(f"Block and complement do not decompose the lattice: {check.condition}", witness=check)
    return P


def enumerateBlockDecompositions(L:BoundedLattice) -> List[BlockDecomposition]:
    """
    Returns every decomposition of `L` into at least two independent complete blocks, built by
    grouping the minimal blocks and adding both bounds to each group. Empty when `L` has no
    blocks or some non-bound element belongs to no block.

    Raises:
        `CertificationFailure`: a constructed family failed its re-check.
    """
    found, homeless = _minimalBlocks(L)
    if homeless or len(found) < 2:
        return []
    result = []
    for groups in Tools.setPartitions(found, minParts=2):
        members = [frozenset().union(*g) | L.bounds for g in groups]
        if not all(isBlock(L, m) for m in members):
            continue
        dec = BlockDecomposition(tuple(Block(m, L) for m in members), L)
        if not (check := dec.check()):
            raise CertificationFailure(f"Constructed block decomposition failed its check: {check.condition}", witness=check)
        result.append(dec)
    log.debug(f"{len(found)} minimal blocks, {len(result)} block decompositions")
    return sorted(result, key=lambda d: (len(d), d.key))

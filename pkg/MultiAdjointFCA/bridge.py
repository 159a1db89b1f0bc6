"""
# Subcontext decompositions and block decompositions

A normalized context decomposes into independent subcontexts exactly when its concept lattice
decomposes into independent blocks. This module translates in both directions and verifies
the correspondence:

- `blocksFromDecomposition()`: for a part `(A_λ, B_λ)`, the concepts which are the meet of the
  meet-irreducible concepts above them generated by attributes of `A_λ`, plus top and bottom,
  form a complete block `K_λ`.
- `partitionFromBlocks()`: for a block `K_μ`, the attributes (objects) whose fuzzy attribute
  (object) concepts fall inside `K_μ` without its bounds form `A_μ` (`B_μ`).
- `subcontextsFromBlocks()`: the recovered partition as a certified `SubcontextDecomposition`.

`EquivalenceVerifier` runs both enumerations concurrently and emits one event per check,
see `TYPES`. `verifyEquivalence()` is the blocking shortcut:

```py
from MultiAdjointFCA.bridge import verifyEquivalence

report = verifyEquivalence(ctx)
report.passed, report.counts     # True, {'context': 4, 'lattice': 4}
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

from concurrent.futures import Executor, ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, List, Optional, Sequence, Tuple, Union

from pyee.executor import ExecutorEventEmitter

from .blocks import Block, BlockDecomposition, enumerateBlockDecompositions, isBlock
from .concepts import ConceptLattice, enumerateConcepts, fuzzyObjectConcept, irreducibleIndexSets
from .context import (MultiAdjointContext, SubcontextDecomposition, checkDecomposition,
                      enumerateDecompositions, requireNormalized)
from .errors import (BridgeError, CertificationFailure, InvalidDecomposition, MultiAdjointError,
                     NotADecomposition, PartitionFailure)
from .logger import getModuleLogger

__all__ = [
    'TYPES', 'CheckResult', 'BridgeReport', 'EquivalenceVerifier',
    'blocksFromDecomposition', 'partitionFromBlocks', 'subcontextsFromBlocks', 'singleHome',
    'correspondence', 'verifyEquivalence',
]

log = getModuleLogger("bridge")


class TYPES:
    """
    Event names emitted by `EquivalenceVerifier`.

    ```py
    verifier = EquivalenceVerifier()

    @verifier.on(TYPES.onCheck)
    def onCheck(result):
        print(result.name, result.passed)
    ```
    """
    onSide = 'side'
    """ One enumeration finished. Handler receives the side name ("context" or "lattice") and the decomposition count. """
    onCheck = 'check'
    """ One invariant was evaluated. Handler receives a `CheckResult`. """
    onReport = 'report'
    """ Verification finished. Handler receives the `BridgeReport`. """
    onError = 'error'
    """ An event handler raised. Handler receives the exception, see `pyee.ExecutorEventEmitter`. """


@dataclass(frozen=True)
class CheckResult:
    """ Outcome of one verified invariant, with a witness when it failed. """
    name: str
    passed: bool
    witness: Any = None

    def toDict(self) -> dict:
        return {'name': self.name, 'passed': self.passed, 'witness': self.witness}


@dataclass
class BridgeReport:
    """
    Result of a correspondence run.

    `direction` is "roundtrip" for `verifyEquivalence()`. `matched` holds `(context index,
    lattice index)` pairs into the two canonical decomposition lists.
    """
    direction: str
    context: MultiAdjointContext = field(repr=False)
    lattice: ConceptLattice = field(repr=False)
    contextSide: List[SubcontextDecomposition] = field(default_factory=list)
    latticeSide: List[BlockDecomposition] = field(default_factory=list)
    matched: List[Tuple[int, int]] = field(default_factory=list)
    checks: List[CheckResult] = field(default_factory=list)
    bijective: bool = False

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def counts(self) -> dict:
        return {'context': len(self.contextSide), 'lattice': len(self.latticeSide)}

    def toDict(self) -> dict:
        return {
            'direction': self.direction,
            'passed': self.passed,
            'counts': self.counts,
            'matched': [list(p) for p in self.matched],
            'bijective': self.bijective,
            'checks': [c.toDict() for c in self.checks],
            'contextDecompositions': [d.toDict() for d in self.contextSide],
            'blockDecompositions': [d.toDict() for d in self.latticeSide],
        }


def _meetsOfGenerated(lat:ConceptLattice, generated:frozenset) -> frozenset:
    """ Concepts equal to the meet of the concepts of `generated` above them. """
    leq = lat.lattice.leqTable
    return frozenset(c for c in range(len(lat))
                     if lat.lattice.meetOf(m for m in generated if leq[c, m]) == c)


def blocksFromDecomposition(ctx:MultiAdjointContext, lat:ConceptLattice, dec:SubcontextDecomposition) -> List[Block]:
    """
    Returns one complete block of `lat` per part of `dec`, in part order.

    Raises:
        `InvalidDecomposition`: `dec` is not a decomposition of `ctx`.
        `CertificationFailure`: a constructed block or the family failed its re-check.
    """
    if not (check := checkDecomposition(ctx, dec.parts)):
        raise InvalidDecomposition(f"Not a decomposition into independent subcontexts: {check.condition}", witness=check)
    L = lat.lattice
    blocks = []
    for attrs, _ in dec.parts:
        generated, _ = irreducibleIndexSets(ctx, lat, attrs, lat.top)
        members = _meetsOfGenerated(lat, generated) | L.bounds
        if not (check := isBlock(L, members)):
            log.error(f"Block for attributes {sorted(attrs)} failed: {check.condition}")
            raise CertificationFailure(f"Constructed set {L.labelsOf(members)} is not a block: {check.condition}", witness=check)
        blocks.append(Block(members, L))
    if not (check := BlockDecomposition(tuple(blocks), L).check()):
        raise CertificationFailure(f"Constructed blocks are not a decomposition: {check.condition}", witness=check)
    return blocks


def _asDecomposition(lat:ConceptLattice, blocks) -> BlockDecomposition:
    L = lat.lattice
    if isinstance(blocks, BlockDecomposition):
        family = blocks.blocks
    else:
        family = tuple(b if isinstance(b, Block) else Block(L.indicesOf(b), L) for b in blocks)
    if any(b.carrier is not L for b in family):
        raise NotADecomposition("Blocks do not belong to this concept lattice")
    dec = BlockDecomposition(tuple(family), L)
    if not (check := dec.check()):
        raise NotADecomposition(f"Not a decomposition into independent blocks: {check.condition}", witness=check)
    return dec


def partitionFromBlocks(ctx:MultiAdjointContext, lat:ConceptLattice,
                        blocks:Union[BlockDecomposition, Sequence]) -> Tuple[Tuple[frozenset, ...], Tuple[frozenset, ...]]:
    """
    Returns the attribute parts `(A_μ)` and object parts `(B_μ)`, aligned with the blocks in
    canonical order. `blocks` may be a `BlockDecomposition` or a sequence of `Block`s or element sets.

    Raises:
        `NotADecomposition`, `PartitionFailure`
    """
    dec = _asDecomposition(lat, blocks)
    n = ctx.chain.n
    inner = [b.members - lat.bounds for b in dec.blocks]
    attrHome = [[mu for mu, K in enumerate(inner)
                 if any(lat.conceptIndex(ctx.attributeExtent(a, x)) in K for x in range(n + 1))]
                for a in range(len(ctx.attributes))]
    objHome = [[mu for mu, K in enumerate(inner)
                if any(lat.conceptIndex(fuzzyObjectConcept(ctx, b, y)) in K for y in range(n + 1))]
               for b in range(len(ctx.objects))]
    for kind, labels, homes in (("attribute", ctx.attributes, attrHome), ("object", ctx.objects, objHome)):
        for i, home in enumerate(homes):
            if len(home) != 1:
                raise PartitionFailure(f"{kind.capitalize()} {labels[i]!r} lies in {len(home)} blocks", witness=labels[i])
    attrParts = tuple(frozenset(a for a, h in enumerate(attrHome) if h[0] == mu) for mu in range(len(inner)))
    objParts = tuple(frozenset(b for b, h in enumerate(objHome) if h[0] == mu) for mu in range(len(inner)))
    for mu, (A, B) in enumerate(zip(attrParts, objParts)):
        if not A or not B:
            raise PartitionFailure(f"Block {dec.blocks[mu].labels()} yields an empty part", witness=dec.blocks[mu].labels())
    return attrParts, objParts


def subcontextsFromBlocks(ctx:MultiAdjointContext, lat:ConceptLattice,
                          blocks:Union[BlockDecomposition, Sequence]) -> SubcontextDecomposition:
    """
    Returns the subcontext decomposition recovered from a block decomposition.

    Raises:
        `NotADecomposition`, `PartitionFailure`, `CertificationFailure` (names the violated clause)
    """
    attrParts, objParts = partitionFromBlocks(ctx, lat, blocks)
    parts = tuple(zip(attrParts, objParts))
    if not (check := checkDecomposition(ctx, parts)):
        log.error(f"Recovered subcontexts failed: {check.condition}")
        raise CertificationFailure(f"Recovered subcontexts are not a decomposition: {check.condition}", witness=check)
    return SubcontextDecomposition(parts, ctx)


def singleHome(ctx:MultiAdjointContext, lat:ConceptLattice, dec:SubcontextDecomposition, c) -> int:
    """
    Returns the index of the only part whose attributes generate irreducibles above the
    non-bound concept `c`; `c` is their meet.

    Raises:
        `UnknownConcept`, `CertificationFailure`
    """
    i = lat.conceptIndex(c)
    homes = []
    for lam, (attrs, _) in enumerate(dec.parts):
        _, above = irreducibleIndexSets(ctx, lat, attrs, i)
        if above:
            homes.append((lam, above))
    if len(homes) != 1 or lat.lattice.meetOf(homes[0][1]) != i:
        raise CertificationFailure(f"Concept {lat.label(i)} has {len(homes)} homes", witness=[h for h, _ in homes])
    return homes[0][0]


def correspondence(ctx:MultiAdjointContext, lat:ConceptLattice, dec:SubcontextDecomposition) -> dict:
    """ Both translations for one decomposition, as a JSON-ready dict. """
    blocks = blocksFromDecomposition(ctx, lat, dec)
    recovered = subcontextsFromBlocks(ctx, lat, blocks)
    return {
        'direction': "subcontexts->blocks",
        'decomposition': dec.toDict(),
        'blocks': [b.labels() for b in blocks],
        'recovered': recovered.toDict(),
        'roundtrip': recovered == dec,
    }


def _latticeSide(ctx:MultiAdjointContext):
    lat = enumerateConcepts(ctx)
    return lat, enumerateBlockDecompositions(lat.lattice)


class EquivalenceVerifier(ExecutorEventEmitter):
    """
    Verifies that the decompositions of a context and of its concept lattice correspond.
    Implements a [pyee.ExecutorEventEmitter](https://pyee.readthedocs.io/en/latest/);
    the two enumerations and all event handlers run on the same executor.

    Checks, in order:
    1. both sides are empty or both are non-empty,
    2. every context decomposition maps to a listed block decomposition,
    3. every block decomposition maps to a listed context decomposition,
    4. the maps are mutually inverse on the finest decompositions,
    5. every non-bound concept has a single home in the finest decomposition.
    """

    def __init__(self, maxWorkers:int = 2, executor:Executor = None):
        """
        Args:
            `maxWorkers`: Threads for the default `ThreadPoolExecutor`.
            `executor`: Use this executor instead of creating one.
        """
        self.ownsExecutor = not executor
        if not executor:
            executor = ThreadPoolExecutor(max_workers=maxWorkers)
        super().__init__(executor=executor)
        self.pool = executor

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        if self.ownsExecutor:
            self.shutdown(wait=True)

    def _check(self, report:BridgeReport, name:str, passed:bool, witness=None):
        result = CheckResult(name, bool(passed), witness)
        report.checks.append(result)
        if not result.passed:
            log.warning(f"Check failed: {name} {witness!r}")
        self.emit(TYPES.onCheck, result)

    def verify(self, ctx:MultiAdjointContext) -> BridgeReport:
        """
        Runs all checks and returns the report. Translation errors become failed checks.

        Raises:
            `NotNormalized`
        """
        requireNormalized(ctx)
        ctxFuture = self.pool.submit(enumerateDecompositions, ctx)
        latFuture = self.pool.submit(_latticeSide, ctx)
        contextSide = ctxFuture.result()
        self.emit(TYPES.onSide, "context", len(contextSide))
        lat, latticeSide = latFuture.result()
        self.emit(TYPES.onSide, "lattice", len(latticeSide))

        report = BridgeReport("roundtrip", ctx, lat, contextSide, latticeSide)
        self._check(report, "both sides empty or both non-empty", bool(contextSide) == bool(latticeSide), report.counts)

        latKeys = {d.key: j for j, d in enumerate(latticeSide)}
        ctxKeys = {d.key: i for i, d in enumerate(contextSide)}
        forward, failure = {}, None
        for i, dec in enumerate(contextSide):
            try:
                key = BlockDecomposition(tuple(blocksFromDecomposition(ctx, lat, dec)), lat.lattice).key
            except MultiAdjointError as e:
                failure = failure or (i, str(e))
                continue
            if key in latKeys:
                forward[i] = latKeys[key]
            else:
                failure = failure or (i, "no matching block decomposition")
        self._check(report, "context decompositions map to block decompositions", failure is None, failure)

        backward, failure = {}, None
        for j, bdec in enumerate(latticeSide):
            try:
                key = subcontextsFromBlocks(ctx, lat, bdec).key
            except MultiAdjointError as e:
                failure = failure or (j, str(e))
                continue
            if key in ctxKeys:
                backward[j] = ctxKeys[key]
            else:
                failure = failure or (j, "no matching context decomposition")
        self._check(report, "block decompositions map to context decompositions", failure is None, failure)

        failure = None
        if contextSide:
            most = max(len(d) for d in contextSide)
            for i, dec in enumerate(contextSide):
                if len(dec) == most and (i not in forward or backward.get(forward[i]) != i):
                    failure = failure or ("context", i)
        if latticeSide:
            most = max(len(d) for d in latticeSide)
            for j, bdec in enumerate(latticeSide):
                if len(bdec) == most and (j not in backward or forward.get(backward[j]) != j):
                    failure = failure or ("lattice", j)
        self._check(report, "maps are mutually inverse on finest decompositions", failure is None, failure)

        failure = None
        if contextSide:
            finest = max(contextSide, key=len)
            for c in range(len(lat)):
                if c in lat.bounds:
                    continue
                try:
                    singleHome(ctx, lat, finest, c)
                except BridgeError as e:
                    failure = (lat.label(c), str(e))
                    break
        self._check(report, "every non-bound concept has a single home", failure is None, failure)

        report.matched = sorted(forward.items())
        report.bijective = (len(set(forward.values())) == len(forward) == len(contextSide) == len(latticeSide)
                            and all(backward.get(j) == i for i, j in forward.items()))
        log.info(f"Equivalence: {len(contextSide)} context and {len(latticeSide)} block decompositions, "
                 f"{'passed' if report.passed else 'FAILED'}")
        self.emit(TYPES.onReport, report)
        return report


def verifyEquivalence(ctx:MultiAdjointContext, executor:Optional[Executor] = None) -> BridgeReport:
    """
    Runs an `EquivalenceVerifier` on `ctx` and returns its `BridgeReport`.

    Raises:
        `NotNormalized`
    """
    with EquivalenceVerifier(executor=executor) as verifier:
        return verifier.verify(ctx)

"""
## Multi-adjoint concept lattices, lattice blocks and context decompositions for Python.

Computes the concept lattice of a *multi-adjoint* fuzzy formal context, finds the blocks of a
bounded lattice, splits a context into independent subcontexts, and checks that the two kinds of
decomposition correspond one-to-one.

All grades live on a finite chain `0, 1/n, ..., 1` and are stored as integer indices `0..n`,
so every computation is exact.


## Features

### Lattices and blocks

`MultiAdjointFCA.lattice.BoundedLattice` holds a finite bounded lattice with precomputed
order, meet and join tables (built with `numpy` and `networkx`). `MultiAdjointFCA.blocks`
finds the minimal blocks of a lattice, enumerates all blocks and all decompositions of the
lattice into independent blocks, and combines blocks (intersection, union, complement).

### Conjunctors and contexts

`MultiAdjointFCA.residuation` provides the discretized Gödel, Łukasiewicz and product
conjunctors and custom conjunctor tables, each with its two residua and a certificate of the
adjoint property. A `MultiAdjointFCA.context.MultiAdjointContext` assigns one of these
conjunctors to every attribute/object pair; `MultiAdjointFCA.context` also enumerates the
decompositions of a context into independent subcontexts.

### Concept lattices and the correspondence

`MultiAdjointFCA.concepts` enumerates all concepts of a context and their lattice.
`MultiAdjointFCA.bridge` translates subcontext decompositions into block decompositions of
the concept lattice and back, and `MultiAdjointFCA.bridge.EquivalenceVerifier` runs the whole
check, emitting events as results come in.

### Oracles and tools

`MultiAdjointFCA.oracle` recomputes everything by brute force for small inputs. The `mafca`
command line tool (`MultiAdjointFCA.cli`) reads JSON documents (see `MultiAdjointFCA.io_tools`)
and writes JSON reports and DOT Hasse diagrams.


## Basic API Usage

```python
from MultiAdjointFCA import loadDocument, enumerateConcepts, enumerateDecompositions, verifyEquivalence

ctx = loadDocument("running_context_sigma.json")

lattice = enumerateConcepts(ctx)
print(len(lattice), "concepts")

for dec in enumerateDecompositions(ctx):
    print(dec.toDict())

report = verifyEquivalence(ctx)
print(report.passed, report.counts)
```

From the command line:

```
mafca concepts running_context_sigma.json --dot sigma.dot
mafca verify running_context_sigma.json --oracle
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

__version__ = "1.0.0"

from .lattice import BoundedLattice, buildLattice, latticeFromOrder
from .blocks import (Block, BlockDecomposition, isBlock, certifyBlock, minimalBlockOf, enumerateMinimalBlocks,
                     enumerateBlocks, classifyPair, unionBlocks, complementBlock, enumerateBlockDecompositions)
from .residuation import (GradeChain, AdjointTriple, MultiAdjointFrame, builtinTriple, tableTriple,
                          residuumFromConjunctor, verifyAdjoint, hasZeroDivisors, satisfiesBoundary,
                          checkTripleProperties)
from .context import (MultiAdjointContext, SubcontextDecomposition, isNormalized, isSeparableSubcontext,
                      enumerateSeparableSubcontexts, enumerateDecompositions, checkDecomposition, subcontext)
from .concepts import (FuzzySet, FormalConcept, ConceptLattice, deriveUp, deriveDown, fuzzyAttributeConcept,
                       fuzzyObjectConcept, enumerateConcepts, meetIrreducibleConcepts, irreducibleIndexSets,
                       checkRepresentation)
from .bridge import (TYPES, BridgeReport, EquivalenceVerifier, blocksFromDecomposition, partitionFromBlocks,
                     subcontextsFromBlocks, singleHome, correspondence, verifyEquivalence)
from .io_tools import loadDocument, loadContext, loadLattice
from .logger import Logger
from .tools import Check, Tools
from .errors import MultiAdjointError

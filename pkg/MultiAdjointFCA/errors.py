"""
Exception classes raised by the MultiAdjointFCA library.

Every error derives from `MultiAdjointError` and also from the closest built-in exception type,
so code which only knows about `ValueError`, `KeyError` or `RuntimeError` keeps working.
Most errors carry an optional `witness` (an element, a pair, a label...) which points at the
offending piece of input.

The command line tool maps exceptions to exit status codes with `exitCodeFor()`.
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

__all__ = [
    'EXIT_OK', 'EXIT_VERIFY_FAILED', 'EXIT_INPUT_ERROR', 'EXIT_SIZE_LIMIT', 'exitCodeFor',
    'MultiAdjointError',
    'LatticeError', 'NotALattice', 'NotBounded', 'TooSmall', 'CyclicCovers', 'UnknownElement',
    'BlockError', 'BoundElement', 'WholeLattice', 'NoBlocks', 'NotABlock', 'DifferentCarrier',
    'NoCompleteBlock', 'UnionIsWholeLattice', 'ComplementTrivial',
    'ResiduationError', 'NotMonotone', 'NoMaximum', 'UnknownConjunctor', 'FrameError',
    'ContextError', 'GridError', 'NotNormalized', 'UnknownAttribute', 'UnknownObject',
    'InputError', 'ParseError', 'SchemaError',
    'ConceptError', 'UnknownConcept',
    'BridgeError', 'InvalidDecomposition', 'NotADecomposition', 'PartitionFailure', 'CertificationFailure',
    'TooLarge',
]

EXIT_OK = 0
""" All commands succeeded and every verification passed. """
EXIT_VERIFY_FAILED = 1
""" A verification or certification check failed. """
EXIT_INPUT_ERROR = 2
""" The input could not be read, parsed or validated. """
EXIT_SIZE_LIMIT = 3
""" An oracle refused to run because the input exceeds its size limit. """


class MultiAdjointError(Exception):
    """ Base class of all library errors. `witness` optionally names the offending value. """
    def __init__(self, message:str, witness=None):
        super().__init__(message)
        self.message = message
        self.witness = witness


## lattice-core

class LatticeError(MultiAdjointError, ValueError):
    """ A set of elements and covers does not describe a valid bounded lattice. """

class NotALattice(LatticeError):
    """ Some pair of elements lacks a unique meet or join. `witness` is the pair. """

class NotBounded(LatticeError):
    """ There is no unique minimum or maximum element. """

class TooSmall(LatticeError):
    """ The lattice has fewer elements than required. """

class CyclicCovers(LatticeError):
    """ The cover relation contains a cycle. `witness` is the list of cycle edges. """

class UnknownElement(LatticeError, KeyError):
    """ An element label or index does not belong to the lattice. """
    def __str__(self):
        return self.message


## blocks

class BlockError(MultiAdjointError, ValueError):
    """ Base class of block computation errors. """

class BoundElement(BlockError):
    """ A bound (bottom or top) was given where a non-bound element is required. """

class WholeLattice(BlockError):
    """ The block closure of an element reached the whole lattice. """

class NoBlocks(BlockError):
    """ The lattice has no blocks at all. """

class NotABlock(BlockError):
    """ An element set failed block certification. `witness` holds the failed `Check`. """

class DifferentCarrier(BlockError):
    """ Blocks from different lattices were combined. """

class NoCompleteBlock(BlockError):
    """ A union of blocks needs at least one complete block. """

class UnionIsWholeLattice(BlockError):
    """ The union of blocks is the whole lattice and therefore not a block. """

class ComplementTrivial(BlockError):
    """ Nothing but the bounds lies outside the block. """


## residuation

class ResiduationError(MultiAdjointError, ValueError):
    """ Base class of conjunctor and residuum errors. """

class NotMonotone(ResiduationError):
    """ A conjunctor table is not order-preserving. `witness` is the offending (x, y) pair. """

class NoMaximum(ResiduationError, RuntimeError):
    """ A residuum value has no maximum. Cannot happen for a monotone conjunctor on a chain. """

class UnknownConjunctor(ResiduationError, KeyError):
    """ A conjunctor name or kind is not known to the frame. """
    def __str__(self):
        return self.message

class FrameError(ResiduationError):
    """ A frame conjunctor violates a standing frame condition (such as the boundary condition). """


## context

class ContextError(MultiAdjointError, ValueError):
    """ Base class of context errors. """

class GridError(ContextError):
    """ A grade value does not lie on the grade chain. """

class NotNormalized(ContextError):
    """ The context is not normalized. `witness` holds the violation `Check`. """

class UnknownAttribute(ContextError, KeyError):
    """ An attribute label or index does not belong to the context. """
    def __str__(self):
        return self.message

class UnknownObject(ContextError, KeyError):
    """ An object label or index does not belong to the context. """
    def __str__(self):
        return self.message


## input

class InputError(MultiAdjointError, ValueError):
    """ Base class of input reading errors. """

class ParseError(InputError):
    """ The input is not valid JSON. `line` and `column` locate the problem. """
    def __init__(self, message:str, line:int=None, column:int=None):
        super().__init__(message, witness=(line, column))
        self.line = line
        self.column = column

class SchemaError(InputError):
    """ The input JSON does not match the expected document structure. `witness` lists all messages. """


## concept-lattice

class ConceptError(MultiAdjointError, ValueError):
    """ Base class of concept lattice errors. """

class UnknownConcept(ConceptError, KeyError):
    """ A concept does not belong to the concept lattice. """
    def __str__(self):
        return self.message


## bridge

class BridgeError(MultiAdjointError, RuntimeError):
    """ Base class of errors raised while translating decompositions. """

class InvalidDecomposition(BridgeError):
    """ A subcontext decomposition failed its definition check. """

class NotADecomposition(BridgeError):
    """ A block family is not a decomposition into independent blocks. """

class PartitionFailure(BridgeError):
    """ Attributes or objects recovered from blocks do not form a partition. """

class CertificationFailure(BridgeError):
    """ A constructed result failed its re-check. This always signals an implementation bug. """


## oracle

class TooLarge(MultiAdjointError, ValueError):
    """ The input exceeds a brute-force size limit. """


def exitCodeFor(exc:BaseException) -> int:
    """
    Returns the command line exit status matching an exception.

    Args:
        `exc`: The exception caught by the command line front end.
    """
    if isinstance(exc, TooLarge):
        return EXIT_SIZE_LIMIT
    if isinstance(exc, (InputError, LatticeError, ResiduationError, ContextError, OSError)):
        return EXIT_INPUT_ERROR
    return EXIT_VERIFY_FAILED

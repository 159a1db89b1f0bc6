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
from itertools import chain, combinations
from typing import Any, Iterable, Iterator, List, Optional

__all__ = ['Tools', 'Check']


@dataclass(frozen=True)
class Check:
    """
    Result of a validation which may fail without it being an error.
    Evaluates as `True` when the check passed. On failure `condition` describes the failed
    condition and `witness` (if any) points at the offending value.
    """
    ok: bool
    condition: Optional[str] = None
    witness: Any = None

    def __bool__(self):
        return self.ok

    @classmethod
    def passed(cls):
        return cls(True)

    @classmethod
    def failed(cls, condition:str, witness=None):
        return cls(False, condition, witness)

    def toDict(self):
        return {'ok': self.ok, 'condition': self.condition, 'witness': self.witness}


class Tools():
    """
    Combinatorial helpers shared by the enumeration code.
    """

    @staticmethod
    def setPartitions(items:Iterable, minParts:int=1) -> Iterator[List[list]]:
        """
        Yields every partition of `items` into non-empty groups, each partition as a list of lists.
        Groups keep the order of `items`, and partitions come in a fixed order.

        Args:
            `items`: The elements to partition. An empty input yields one empty partition when `minParts` is 0.
            `minParts`: Skip partitions with fewer groups than this.
        """
        items = list(items)

        def grow(i, groups):
            if i == len(items):
                yield [list(g) for g in groups]
                return
            for g in groups:
                g.append(items[i])
                yield from grow(i + 1, groups)
                g.pop()
            groups.append([items[i]])
            yield from grow(i + 1, groups)
            groups.pop()

        for partition in grow(0, []):
            if len(partition) >= minParts:
                yield partition

    @staticmethod
    def subsets(items:Iterable, proper:bool=False, nonEmpty:bool=False) -> Iterator[tuple]:
        """
        Yields the subsets of `items` as tuples, smallest first.

        Args:
            `proper`: Leave out the full set.
            `nonEmpty`: Leave out the empty set.
        """
        items = list(items)
        lo = 1 if nonEmpty else 0
        hi = len(items) - 1 if proper else len(items)
        return chain.from_iterable(combinations(items, r) for r in range(lo, hi + 1))

    @staticmethod
    def canonicalSets(sets:Iterable[Iterable[int]]) -> List[frozenset]:
        """ Returns the given index sets deduplicated and sorted by their sorted member tuples. """
        unique = {frozenset(s) for s in sets}
        return sorted(unique, key=lambda s: (len(s), tuple(sorted(s))))

#!/usr/bin/env python3
"""
# MultiAdjointFCA command line tool

## Features

Reads a context or lattice JSON document, runs one command on it, and writes a JSON report
(and optionally a DOT Hasse diagram). Reports are canonical: the same input always produces
byte-identical output.

Commands:
- `concepts`: the concept lattice of a context, with irreducible markers and cover pairs.
- `blocks`: minimal blocks, all blocks and block decompositions of a lattice, or of the concept lattice of a context.
- `decompose`: separable subcontexts and all decompositions of a normalized context.
- `bridge`: both translations for one chosen decomposition of a context.
- `verify`: the adjoint property of every frame conjunctor, the full equivalence check and,
  with `--oracle`, comparisons against the brute-force enumerations.

The script command is `mafca` when the package is installed (via pip or setup), or `python -m MultiAdjointFCA.cli`
when run directly from this source.

```
mafca [-h] [-o <file>] [--dot <file>] [--oracle] [--max-lattice <n>] [--max-states <n>] [--max-side <n>]
      [--no-sort] [-i <n>] [-d <n>] [-l <level>] [--log-file <file>]
      {concepts,blocks,decompose,bridge,verify} input
```

Exit status: 0 when everything passed, 1 when a verification failed, 2 for unreadable or invalid
input, 3 when an oracle refused an input beyond its size limit.
All progress and warning messages are printed to the stderr stream.
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

import sys
from argparse import ArgumentParser
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .blocks import enumerateBlockDecompositions, enumerateBlocks, enumerateMinimalBlocks
from .bridge import TYPES, EquivalenceVerifier, correspondence
from .concepts import ConceptLattice, enumerateConcepts
from .context import (MultiAdjointContext, components, enumerateDecompositions, enumerateSeparableSubcontexts,
                      requireNormalized)
from .errors import EXIT_OK, EXIT_VERIFY_FAILED, InputError, MultiAdjointError, NoBlocks, exitCodeFor
from .io_spec import DEFAULT_INDENT, MAX_ORACLE_LATTICE, MAX_ORACLE_SIDE, MAX_ORACLE_STATES
from .io_tools import conceptsDot, hasseDot, loadDocument, writeOutput
from .lattice import BoundedLattice
from .logger import Logger
from .oracle import bruteBlocks, bruteConcepts, bruteDecompositions, bruteMeetIrreducibles
from .residuation import checkTripleProperties, verifyAdjoint

__all__ = ['RunConfig', 'run', 'main', 'COMMANDS']

COMMANDS = ("concepts", "blocks", "decompose", "bridge", "verify")
""" Accepted values of `RunConfig.command`. """


@dataclass
class RunConfig:
    """
    Runtime configuration of one command. Filled from the command line by `main()`, or constructed
    directly to call `run()` from Python.
    """
    command: str
    input: str
    output: Optional[str] = "-"
    """ JSON report destination, `"-"` for the output stream. """
    dot: Optional[str] = None
    """ DOT Hasse diagram destination, if any. """
    oracle: bool = False
    maxLattice: int = MAX_ORACLE_LATTICE
    maxStates: int = MAX_ORACLE_STATES
    maxSide: int = MAX_ORACLE_SIDE
    canonicalSort: bool = True
    """ Sort JSON object keys in the report. """
    indent: int = DEFAULT_INDENT
    decomposition: int = 0
    """ Index (in canonical order) of the decomposition used by `bridge`. """
    logLevel: Optional[str] = "WARNING"
    logFile: Optional[str] = None


Document = Union[BoundedLattice, MultiAdjointContext]


def _requireContext(config:RunConfig, doc:Document) -> MultiAdjointContext:
    if not isinstance(doc, MultiAdjointContext):
        raise InputError(f"The '{config.command}' command needs a context document", witness=config.command)
    return doc


def _oracleCheck(name:str, passed:bool, witness=None) -> dict:
    return {'name': name, 'passed': bool(passed), 'witness': None if passed else witness}


def _conceptOracle(config:RunConfig, lat:ConceptLattice) -> dict:
    brute = [c.extent.values for c in bruteConcepts(lat.context, config.maxStates)]
    fast = [c.extent.values for c in lat.concepts]
    return _oracleCheck("concepts equal brute-force concepts", brute == fast,
                        {'missing': sorted(set(brute) - set(fast)), 'extra': sorted(set(fast) - set(brute))})


def _blockOracle(config:RunConfig, L:BoundedLattice) -> list:
    brute = [L.labelsOf(s) for s in bruteBlocks(L, config.maxLattice)]
    fast = [b.labels() for b in enumerateBlocks(L)]
    irreducibles = bruteMeetIrreducibles(L)
    return [
        _oracleCheck("blocks equal brute-force blocks", brute == fast, {'brute': brute, 'fast': fast}),
        _oracleCheck("meet-irreducibles equal brute-force scan", irreducibles == L.meetIrreducibles(),
                     L.labelsOf(irreducibles ^ L.meetIrreducibles())),
    ]


def _blockReport(L:BoundedLattice) -> dict:
    try:
        minimal = enumerateMinimalBlocks(L)
    except NoBlocks:
        minimal = []
    return {
        'elements': list(L.elements),
        'meetIrreducibles': L.labelsOf(L.meetIrreducibles()),
        'minimalBlocks': [b.toDict() for b in minimal],
        'blocks': [{'members': b.toDict(), **b.flags} for b in enumerateBlocks(L)],
        'decompositions': [d.toDict() for d in enumerateBlockDecompositions(L)],
    }


def _runConcepts(config:RunConfig, doc:Document, log:Logger) -> Tuple[dict, Optional[str], bool]:
    lat = enumerateConcepts(_requireContext(config, doc))
    log.info(f"{len(lat)} concepts")
    report = lat.toDict()
    passed = True
    if config.oracle:
        check = _conceptOracle(config, lat)
        report['oracle'] = [check]
        passed = check['passed']
    return report, conceptsDot(lat), passed


def _runBlocks(config:RunConfig, doc:Document, log:Logger):
    if isinstance(doc, MultiAdjointContext):
        lat = enumerateConcepts(doc)
        L, dot = lat.lattice, conceptsDot(lat)
    else:
        L, dot = doc, hasseDot(doc)
    report = _blockReport(L)
    log.info(f"{len(report['minimalBlocks'])} minimal blocks, {len(report['decompositions'])} decompositions")
    passed = True
    if config.oracle:
        report['oracle'] = _blockOracle(config, L)
        passed = all(c['passed'] for c in report['oracle'])
    return report, dot, passed


def _runDecompose(config:RunConfig, doc:Document, log:Logger):
    ctx = _requireContext(config, doc)
    requireNormalized(ctx)
    decs = enumerateDecompositions(ctx)
    log.info(f"{len(decs)} decompositions")
    report = {
        'components': [{'attributes': [ctx.attributes[i] for i in sorted(a)], 'objects': [ctx.objects[j] for j in sorted(b)]}
                       for a, b in components(ctx)],
        'separable': [{'attributes': [ctx.attributes[i] for i in sorted(a)], 'objects': [ctx.objects[j] for j in sorted(b)]}
                      for a, b in enumerateSeparableSubcontexts(ctx)],
        'decompositions': [d.toDict() for d in decs],
    }
    passed = True
    if config.oracle:
        brute = bruteDecompositions(ctx, config.maxSide)
        check = _oracleCheck("decompositions equal brute-force decompositions",
                             [d.key for d in brute] == [d.key for d in decs],
                             {'brute': [d.toDict() for d in brute]})
        report['oracle'] = [check]
        passed = check['passed']
    return report, None, passed


def _runBridge(config:RunConfig, doc:Document, log:Logger):
    ctx = _requireContext(config, doc)
    requireNormalized(ctx)
    decs = enumerateDecompositions(ctx)
    if not 0 <= config.decomposition < len(decs):
        raise InputError(f"Decomposition index {config.decomposition} is out of range, the context has {len(decs)}",
                         witness=config.decomposition)
    lat = enumerateConcepts(ctx)
    report = correspondence(ctx, lat, decs[config.decomposition])
    report['index'] = config.decomposition
    return report, conceptsDot(lat), bool(report['roundtrip'])


def _runVerify(config:RunConfig, doc:Document, log:Logger):
    checks = []
    if isinstance(doc, BoundedLattice):
        for dec in enumerateBlockDecompositions(doc):
            check = dec.check()
            checks.append(_oracleCheck(f"block decomposition {dec.toDict()}", check, check.condition))
        if config.oracle:
            checks.extend(_blockOracle(config, doc))
        return {'checks': checks, 'passed': all(c['passed'] for c in checks)}, hasseDot(doc), all(c['passed'] for c in checks)

    ctx = doc
    for t in ctx.frame.triples:
        bad = verifyAdjoint(t)
        checks.append(_oracleCheck(f"adjoint property of {t.name!r}", bad is None, bad))
        for clause, check in checkTripleProperties(t).items():
            checks.append(_oracleCheck(f"{t.name!r}: {clause}", check, check.witness))

    with EquivalenceVerifier() as verifier:
        @verifier.on(TYPES.onSide)
        def onSide(side, count):
            log.info(f"{side} side: {count} decompositions")

        @verifier.on(TYPES.onCheck)
        def onCheck(result):
            log.debug(f"{'PASS' if result.passed else 'FAIL'} {result.name}")

        @verifier.on(TYPES.onError)
        def onError(exc):
            log.error(f"Event handler error: {exc!r}")

        bridge = verifier.verify(ctx)

    if config.oracle:
        checks.append(_conceptOracle(config, bridge.lattice))
        brute = bruteDecompositions(ctx, config.maxSide)
        checks.append(_oracleCheck("decompositions equal brute-force decompositions",
                                   [d.key for d in brute] == [d.key for d in bridge.contextSide],
                                   {'brute': len(brute), 'fast': len(bridge.contextSide)}))
        if len(bridge.lattice) > config.maxLattice:
            log.info(f"Skipping block oracle: concept lattice has {len(bridge.lattice)} elements, limit is {config.maxLattice}")
        elif len(bridge.lattice) >= 3:
            checks.extend(_blockOracle(config, bridge.lattice.lattice))
    passed = bridge.passed and all(c['passed'] for c in checks)
    report = {'passed': passed, 'checks': checks, 'equivalence': bridge.toDict()}
    return report, conceptsDot(bridge.lattice), passed


_RUNNERS = {
    "concepts": _runConcepts,
    "blocks": _runBlocks,
    "decompose": _runDecompose,
    "bridge": _runBridge,
    "verify": _runVerify,
}


def run(config:RunConfig) -> int:
    """
    Runs one command and writes its artifacts. Returns the exit status (see `MultiAdjointFCA.errors`).
    Errors are logged, never raised.
    """
    log = Logger(level=config.logLevel, stream=sys.stderr, filename=config.logFile)
    try:
        if config.command not in _RUNNERS:
            raise InputError(f"Unknown command {config.command!r}, expected one of {COMMANDS}", witness=config.command)
        doc = loadDocument(config.input)
        log.debug(f"Loaded {doc!r}")
        report, dot, passed = _RUNNERS[config.command](config, doc, log)
        writeOutput(Logger.format_json(report, indent=config.indent, sortKeys=config.canonicalSort), config.output)
        if config.dot and dot:
            writeOutput(dot, config.dot)
        if not passed:
            log.warning(f"'{config.command}' found failed checks")
        return EXIT_OK if passed else EXIT_VERIFY_FAILED
    except (MultiAdjointError, OSError) as e:
        log.error(str(e))
        return exitCodeFor(e)
    finally:
        log.close()


def main(cliArgs=None):
    parser = ArgumentParser(prog="mafca",
                            description="Concept lattices of multi-adjoint contexts, lattice blocks and context decompositions.",
                            epilog="Exit status is 0 if all checks passed, 1 if a verification failed, 2 for input errors "
                                   "and 3 if an oracle input exceeds its size limit. "
                                   "All progress and warning messages are printed to stderr stream.")
    parser.add_argument("command", choices=COMMANDS,
                        help="What to compute. `blocks` and `verify` accept lattice or context input, the others need a context.")
    parser.add_argument("input", metavar="input",
                        help="Context or lattice JSON document. Use 'stdin' (or '-') to read from input stream instead.")
    out_grp = parser.add_argument_group("Output arguments")
    out_grp.add_argument("-o", "--output", metavar="<file>", default="-",
                         help="JSON report file. Use 'stdout' (or '-') to print it to the console/stream, which is the default.")
    out_grp.add_argument("--dot", metavar="<file>", default=None,
                         help="Also write the Hasse diagram in DOT format to this file.")
    out_grp.add_argument("-i", "--indent", metavar="<n>", type=int, default=DEFAULT_INDENT,
                         help="Indent level (spaces) for the JSON report. Use -1 for the most compact representation. Default is %(default)s spaces.")
    out_grp.add_argument("--no-sort", action='store_false', dest="canonicalSort", default=True,
                         help="Do not sort JSON object keys.")
    out_grp.add_argument("-d", "--decomposition", metavar="<n>", type=int, default=0,
                         help="Index of the decomposition used by `bridge`, in canonical order. Default is %(default)s.")
    ora_grp = parser.add_argument_group("Oracle arguments")
    ora_grp.add_argument("--oracle", action='store_true', default=False,
                         help="Compare results against the brute-force enumerations.")
    ora_grp.add_argument("--max-lattice", metavar="<n>", type=int, default=MAX_ORACLE_LATTICE, dest="maxLattice",
                         help="Largest lattice the block oracle will scan. Default is %(default)s.")
    ora_grp.add_argument("--max-states", metavar="<n>", type=int, default=MAX_ORACLE_STATES, dest="maxStates",
                         help="Largest number of fuzzy object sets the concept oracle will scan. Default is %(default)s.")
    ora_grp.add_argument("--max-side", metavar="<n>", type=int, default=MAX_ORACLE_SIDE, dest="maxSide",
                         help="Largest number of attributes or objects the decomposition oracle will scan. Default is %(default)s.")
    log_grp = parser.add_argument_group("Logging arguments")
    log_grp.add_argument("-l", "--log-level", metavar="<level>", default="WARNING", dest="logLevel",
                         choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL", "NONE"], type=str.upper,
                         help="Minimum log level, or NONE to disable logging. Default is %(default)s.")
    log_grp.add_argument("--log-file", metavar="<file>", default=None, dest="logFile",
                         help="Also log to this (daily rotated) file.")
    opts = parser.parse_args(cliArgs)
    del parser

    return run(RunConfig(**vars(opts)))


if __name__ == "__main__":
    sys.exit(main())

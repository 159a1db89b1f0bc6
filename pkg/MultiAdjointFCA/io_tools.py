"""
# Reading inputs and writing reports

## Features

**Loading** turns JSON documents into library objects. Two document kinds are recognized:

- a *lattice* document, `{"elements": [...], "covers": [[lower, upper], ...]}`, read with `loadLattice()`;
- a *context* document, `{"frame": {...}, "attributes": [...], "objects": [...], "relation": [[...]], "sigma": [[...]]}`,
  read with `loadContext()`.

`loadDocument()` reads either kind and tells them apart by their keys.

**Validation** runs before any object is built. Documents are checked against the lookup tables
in `MultiAdjointFCA.io_spec`:
- All required attributes are present.
- All attribute values are of the supported data type(s).
- No unknown attributes are present.
- Attribute values fall within the allowed list of values (eg. a conjunctor `kind`).

Every problem is recorded as a message (see `getMessages()`); if there are any, loading raises a
`SchemaError` listing all of them. JSON syntax errors raise `ParseError` with line and column.

**Output** is written with `writeOutput()`. `hasseDot()` renders any lattice as a DOT digraph
with one edge per cover pair, drawn from the lower to the upper element, and `conceptsDot()` does
the same for a concept lattice with extents and intents in the node tooltips.

```py
from MultiAdjointFCA.io_tools import loadDocument
ctx = loadDocument("running_context_sigma.json")
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

import json
import sys
from typing import Dict, Optional, TextIO, Union

from .concepts import ConceptLattice
from .context import MultiAdjointContext
from .errors import ParseError, SchemaError
from .io_spec import CONTEXT_ATTRIBS, LATTICE_ATTRIBS
from .lattice import BoundedLattice, buildLattice
from .logger import getModuleLogger

__all__ = [
    'getMessages', 'clearMessages', 'validateAttribValue', 'validateDocument',
    'loadJson', 'loadLattice', 'loadContext', 'loadDocument',
    'hasseDot', 'conceptsDot', 'writeOutput',
]

log = getModuleLogger("io")

## globals
g_messages = []  # validation reporting


## Utils

def getMessages():
    """ Gets a list of messages which may have been produced during validation. """
    return g_messages

def clearMessages():
    """
    Clears the list of validation messages.
    Do this before invoking `validateAttribValue()` directly (outside of the other functions provided here).
    """
    g_messages.clear()

def _addMessage(msg):
    g_messages.append(msg)

def _keyPath(path, key):
    return ":".join(filter(None, [path, str(key)]))

def _isStdStream(path):
    return path in (None, "-", "stdin", "stdout")


## Validation functions

def validateAttribValue(key:str, value, attrib_data:dict, path:str=""):
    """
    Validates one attribute's value based on the provided lookup table data.
    Returns `False` if any validation fails or `value` is `None`, `True` otherwise.
    Error description message(s) can be retrieved with `getMessages()` and cleared with `clearMessages()`.

    Args:
        `key` is the attribute name;
        `value` is what to validate;
        `attrib_data` is the lookup table data for the given key (eg. `CONTEXT_ATTRIBS[key]` );
        `path` is extra information to print before the key name in messages (to show where the attribute is in the tree).
    """
    keypath = _keyPath(path, key)
    if value is None:
        if attrib_data.get('r'):
            _addMessage(f"Missing required attribute '{keypath}'.")
        return False
    exp_typ = attrib_data.get('t', str)
    # bool is an int subclass but never a valid grade count
    if not isinstance(value, exp_typ) or (isinstance(value, bool) and exp_typ is not bool):
        _addMessage(f"Wrong data type for attribute '{keypath}'. Expected {exp_typ.__name__} but got {type(value).__name__}")
        return False
    if (choices := attrib_data.get('c')) and value not in choices:
        _addMessage(f"Value error for attribute '{keypath}'. Got '{value}' but expected one of {choices}")
        return False
    return True

def _validateDict(d:dict, table:dict, path:str=""):
    # iterate over existing attributes to validate them
    for k, v in d.items():
        adata = table.get(k)
        keypath = _keyPath(path, k)
        if not adata:
            _addMessage(f"Attribute '{keypath}' is unknown.")
            continue
        if not validateAttribValue(k, v, adata, path):
            continue
        if isinstance(v, list) and (ltable := adata.get('l')):
            _validateArray(v, ltable, keypath)
        elif isinstance(v, dict) and (mtable := adata.get('m')):
            _validateDict(v, mtable, keypath)
    # iterate over table entries to check if all required attribs are present
    for k, data in table.items():
        if data.get('r') and k not in d.keys():
            _addMessage(f"Missing required attribute '{_keyPath(path, k)}'.")

def _validateArray(a:list, table:dict, path:str=""):
    for i, item in enumerate(a):
        if isinstance(item, dict):
            _validateDict(item, table, f"{path}[{i}]")
        else:
            _addMessage(f"Item '{path}[{i}]' must be an object, got {type(item).__name__}")

def _validateMatrix(m:list, rows:int, cols:int, path:str):
    if len(m) != rows:
        _addMessage(f"'{path}' must have {rows} rows, got {len(m)}")
    for i, row in enumerate(m):
        if not isinstance(row, list) or len(row) != cols:
            _addMessage(f"'{path}[{i}]' must be a list of {cols} values")

def _validateLabels(labels:list, path:str):
    if not all(isinstance(v, str) for v in labels):
        _addMessage(f"'{path}' must be a list of strings")
    elif len(set(labels)) != len(labels):
        _addMessage(f"'{path}' labels must be distinct")

def validateDocument(d, table:dict, path:str="") -> bool:
    """
    Validates a whole document (a `dict` decoded from JSON) against a lookup table from
    `MultiAdjointFCA.io_spec`. Clears previous messages first.
    Returns `True` if no messages were produced. Use `getMessages()` to check the results.
    """
    clearMessages()
    if not isinstance(d, dict):
        _addMessage(f"Document must be a JSON object, got {type(d).__name__}")
        return False
    _validateDict(d, table, path)
    if table is CONTEXT_ATTRIBS and not g_messages:
        attrs, objs = d['attributes'], d['objects']
        _validateLabels(attrs, "attributes")
        _validateLabels(objs, "objects")
        _validateMatrix(d['relation'], len(attrs), len(objs), "relation")
        _validateMatrix(d['sigma'], len(attrs), len(objs), "sigma")
        for i, conj in enumerate(d['frame']['conjunctors']):
            if conj.get('kind') == "table" and 'table' not in conj:
                _addMessage(f"Missing required attribute 'frame:conjunctors[{i}]:table' for kind 'table'.")
    elif table is LATTICE_ATTRIBS and not g_messages:
        _validateLabels(d['elements'], "elements")
        for i, pair in enumerate(d['covers']):
            if not isinstance(pair, list) or len(pair) != 2:
                _addMessage(f"'covers[{i}]' must be a [lower, upper] pair")
            elif not all(isinstance(v, str) for v in pair):
                _addMessage(f"'covers[{i}]' must name two element labels")
    return not g_messages


## Loading functions

def _raiseSchema(what:str):
    messages = list(getMessages())
    for msg in messages:
        log.warning(msg)
    raise SchemaError(f"Invalid {what} document:\n  " + "\n  ".join(messages), witness=messages)

def loadJson(source:Union[str, TextIO]):
    """
    Returns the decoded JSON from a file path, an open file handle, or `"-"`/`"stdin"` for the input stream.

    Raises:
        `ParseError` with the line and column of a syntax error, `OSError` if the file cannot be read.
    """
    if hasattr(source, "read"):
        name, text = getattr(source, "name", "input stream"), source.read()
    elif _isStdStream(source):
        name, text = "input stream", sys.stdin.read()
    else:
        name = source
        with open(source, 'r', encoding="utf-8") as f:
            text = f.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Could not parse JSON from '{name}' at line {e.lineno}, column {e.colno}: {e.msg}",
                         e.lineno, e.colno) from None

def loadLattice(d:dict) -> BoundedLattice:
    """
    Builds a lattice from a decoded lattice document.

    Raises:
        `SchemaError`, or any `LatticeError` from `buildLattice()`.
    """
    if not validateDocument(d, LATTICE_ATTRIBS):
        _raiseSchema("lattice")
    return buildLattice(d['elements'], [tuple(c) for c in d['covers']])

def loadContext(d:dict) -> MultiAdjointContext:
    """
    Builds a context from a decoded context document.

    Raises:
        `SchemaError`, or any `ResiduationError`/`ContextError` raised while building the frame and context.
    """
    if not validateDocument(d, CONTEXT_ATTRIBS):
        _raiseSchema("context")
    return MultiAdjointContext.fromDict(d)

def loadDocument(source:Union[str, TextIO, dict]) -> Union[BoundedLattice, MultiAdjointContext]:
    """
    Loads either a lattice or a context document. `source` is anything `loadJson()` accepts, or an already decoded `dict`.
    """
    d = source if isinstance(source, dict) else loadJson(source)
    if isinstance(d, dict) and 'elements' in d:
        log.debug("Loading a lattice document")
        return loadLattice(d)
    log.debug("Loading a context document")
    return loadContext(d)


## Output functions

def _dotString(s:str) -> str:
    return '"' + str(s).replace('\\', '\\\\').replace('"', '\\"') + '"'

def hasseDot(lattice:BoundedLattice, tooltips:Optional[Dict[int, str]] = None, name:str = "G") -> str:
    """
    Returns the Hasse diagram of `lattice` in DOT format: nodes in index order, one edge per
    cover pair from the lower to the upper element. `tooltips` maps element indices to tooltip text.
    """
    tooltips = tooltips or {}
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, label in enumerate(lattice.elements):
        attrs = f" [tooltip={_dotString(tooltips[i])}]" if i in tooltips else ""
        lines.append(f"  {_dotString(label)}{attrs};")
    for lower, upper in lattice.covers:
        lines.append(f"  {_dotString(lattice.elements[lower])} -> {_dotString(lattice.elements[upper])};")
    lines.append("}")
    return "\n".join(lines) + "\n"

def _fuzzyText(ctx:MultiAdjointContext, labels, values) -> str:
    return "{" + ", ".join(f"{labels[i]}/{ctx.chain.render(v)}" for i, v in enumerate(values) if v) + "}"

def conceptsDot(lat:ConceptLattice) -> str:
    """ `hasseDot()` for a concept lattice, with each concept's extent and intent as its tooltip. """
    ctx = lat.context
    tooltips = {i: f"<{_fuzzyText(ctx, ctx.objects, c.extent.values)}, {_fuzzyText(ctx, ctx.attributes, c.intent.values)}>"
                for i, c in enumerate(lat.concepts)}
    return hasseDot(lat.lattice, tooltips)

def writeOutput(text:str, path:Optional[str] = "-"):
    """ Writes `text` to a file, or to the output stream when `path` is `"-"`, `"stdout"` or `None`. """
    if _isStdStream(path):
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        sys.stdout.flush()
        return
    with open(path, 'w', encoding="utf-8") as f:
        f.write(text)
        if not text.endswith("\n"):
            f.write("\n")
    log.info(f"Wrote {path}")

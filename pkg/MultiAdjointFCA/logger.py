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

import os
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from json import JSONEncoder, dumps
from logging import Formatter, getLogger, getLevelName, StreamHandler, NullHandler
from logging.handlers import TimedRotatingFileHandler

import numpy as np

__all__ = ['Logger', 'getModuleLogger', 'ROOT_LOGGER_NAME']

ROOT_LOGGER_NAME = "MultiAdjointFCA"
""" Name of the package logger; module loggers are its children. """


def getModuleLogger(module:str):
    """ Returns the `logging.Logger` for a library module, eg. `getModuleLogger("blocks")`. """
    return getLogger(f"{ROOT_LOGGER_NAME}.{module}")


class Logger:
    """
    Logging helper used by the command line tool and the equivalence verifier.

    Wraps one `logging.Logger` (by default the package logger, `"MultiAdjointFCA"`, which all
    module loggers propagate to) and manages at most one stream handler and one rotating file
    handler for it. Level names are accepted as strings, and `setLogLevel(None)` silences the
    logger completely until a real level is set again.

    Short aliases for the usual writers are available: `dbg()`, `inf()`, `wrn()`, `err()` and `crt()`.

    `Logger.format_json()` is also the serializer used for every JSON report written by the
    package, see `Logger.JsonEncoder`.
    """

    DEFAULT_FILE_HANDLER_OPTS:dict = {'when': 'D', 'backupCount': 7, 'delay': True}
    """ The default options to use for `TimedRotatingFileHandler`. """
    DEFAULT_LOG_FORMATTER = Formatter(
        fmt="{asctime:s}.{msecs:03.0f} [{levelname:.1s}] [{name:s}] {message:s}",
        datefmt="%H:%M:%S", style="{"
    )
    """ The default log formatter for stream and file handlers. """

    def __init__(self, name=ROOT_LOGGER_NAME, level=None, stream=None, filename=None,
                 formatter=DEFAULT_LOG_FORMATTER, fileHandlerOpts=DEFAULT_FILE_HANDLER_OPTS):
        """
        Args:
            `name`: Name of the wrapped logger. Defaults to the package logger.
            `level`: Minimum level name or number; `None` keeps the current level.
            `stream`: Attach a `StreamHandler` writing to this stream (eg. `sys.stderr`).
            `filename`: Attach a daily rotating file handler writing to this file.
            `formatter`: Formatter for the attached handlers.
            `fileHandlerOpts`: Extra keyword arguments for `TimedRotatingFileHandler`.
        """
        self.logger = getLogger(name)
        self.formatter = formatter or self.DEFAULT_LOG_FORMATTER
        self.fileHandler = None
        self.streamHandler = None
        self.nullHandler = None
        self.log                              = self.logger.log
        self.dbg = self.debug                 = self.logger.debug
        self.inf = self.info                  = self.logger.info
        self.wrn = self.warn  = self.warning  = self.logger.warning
        self.err = self.error                 = self.logger.error
        self.crt = self.fatal = self.critical = self.logger.critical
        self.exception                        = self.logger.exception
        if level:
            self.setLogLevel(level)
        if filename:
            self.setFileDestination(filename, fileHandlerOpts)
        if stream:
            self.setStreamDestination(stream)

    def setLogLevel(self, level):
        """
        Sets the minimum level: a name ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
        a `logging` level constant, or `None`/"NONE" to turn logging off.
        """
        if isinstance(level, str):
            level = None if level.upper() == "NONE" else getLevelName(level.upper())
        if level:
            self.logger.setLevel(level)
            self.logger.propagate = True
            if self.nullHandler:
                self.logger.removeHandler(self.nullHandler)
                self.nullHandler = None
                for handler in (self.fileHandler, self.streamHandler):
                    if handler:
                        self.logger.addHandler(handler)
            return
        if self.nullHandler:
            return
        for handler in (self.fileHandler, self.streamHandler):
            if handler:
                self.logger.removeHandler(handler)
        self.nullHandler = NullHandler()
        self.logger.addHandler(self.nullHandler)
        self.logger.setLevel("CRITICAL")
        # keep silenced records away from the root logger too
        self.logger.propagate = False

    def setStreamDestination(self, stream):
        """ Sends log output to `stream`, replacing any previous stream handler. `None` removes it. """
        if self.streamHandler:
            self.logger.removeHandler(self.streamHandler)
            self.streamHandler = None
        if stream:
            self.streamHandler = StreamHandler(stream)
            self.streamHandler.setFormatter(self.formatter)
            if not self.nullHandler:
                self.logger.addHandler(self.streamHandler)

    def setFileDestination(self, filename, handlerOpts=DEFAULT_FILE_HANDLER_OPTS):
        """ Sends log output to a rotating log file, replacing any previous one. `None` removes it. """
        if self.fileHandler:
            self.logger.removeHandler(self.fileHandler)
            self.fileHandler.close()
            self.fileHandler = None
        if filename:
            filename = str(filename)
            if not os.path.splitext(filename)[1]:
                filename += ".log"
            self.fileHandler = TimedRotatingFileHandler(filename, **handlerOpts)
            self.fileHandler.setFormatter(self.formatter)
            if not self.nullHandler:
                self.logger.addHandler(self.fileHandler)

    def close(self):
        """ Detaches and closes the handlers added by this helper. """
        self.setStreamDestination(None)
        self.setFileDestination(None)

    class JsonEncoder(JSONEncoder):
        """
        JSON encoder for report data: dataclasses become dicts, sets become sorted lists,
        numpy scalars and arrays become plain numbers and lists, and `Fraction` grades become "k/n" strings.
        """
        def default(self, obj):
            if hasattr(obj, "toDict"):
                return obj.toDict()
            if is_dataclass(obj):
                return asdict(obj)
            if isinstance(obj, (set, frozenset)):
                return sorted(obj)
            if isinstance(obj, np.integer):
                return int(obj)
            if isinstance(obj, np.bool_):
                return bool(obj)
            if isinstance(obj, np.ndarray):
                return obj.tolist()
            if isinstance(obj, Fraction):
                return str(obj)
            return super().default(obj)

    @staticmethod
    def format_json(data, indent=2, sortKeys=True):
        """
        Returns `data` serialized to JSON. With `sortKeys` (the default) the output is canonical:
        equal data always produce identical text.
        """
        if indent is not None and indent < 0:
            return dumps(data, cls=Logger.JsonEncoder, separators=(",", ":"), sort_keys=sortKeys)
        return dumps(data, cls=Logger.JsonEncoder, indent=indent, sort_keys=sortKeys, ensure_ascii=False)

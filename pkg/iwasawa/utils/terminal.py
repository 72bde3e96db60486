# SPDX-License-Identifier: BSD-3-Clause
# SPDX-License-Identifier: LicenseRef-MIT-Pytest
# Copyright (c) 2023, Stephane Capponi and Others
# Copyright (c) 2026, iwasawa contributors

"""
Plain text output of the commands: separators, PASS/FAIL check lines and
result tables. Reports themselves are written as JSON or CSV elsewhere.
"""
import os
import shutil
import sys

from typing import Iterable, Optional, Sequence, TextIO

SGR = {
    "bold": 1,
    "red": 31,
    "green": 32,
    "yellow": 33,
    "cyan": 36,
}


def colorize(msg: Optional[str], fg: Optional[str] = None, bold: bool = False) -> str:
    """Wrap ``msg`` in ANSI select graphic rendition codes"""
    codes = [str(SGR[name]) for name in (fg, "bold" if bold else None) if name in SGR]
    if not msg or not codes:
        return msg or ""
    return "\x1b[{}m{}\x1b[0m".format(";".join(codes), msg)


def get_terminal_width() -> int:
    width = shutil.get_terminal_size(fallback=(80, 24)).columns
    # Some consoles report nonsense
    return width if width >= 40 else 80


def _supports_color(stream: TextIO) -> bool:
    if "NO_COLOR" in os.environ:
        return False
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


class TerminalWriter:
    """
    Human-readable side channel of the commands, usually bound to stderr.
    Colors are used when ``markup`` is true; by default only on a tty with
    NO_COLOR unset.
    """

    def __init__(
        self, stream: Optional[TextIO] = None, markup: Optional[bool] = None
    ) -> None:
        self._stream = sys.stdout if stream is None else stream
        self._width: Optional[int] = None
        self.hasmarkup = _supports_color(self._stream) if markup is None else markup

    @property
    def fullwidth(self) -> int:
        return self._width if self._width is not None else get_terminal_width()

    @fullwidth.setter
    def fullwidth(self, value: int) -> None:
        self._width = value

    def write(
        self, msg: str, *, flush: bool = False, fg: Optional[str] = None, bold=False
    ) -> None:
        if not msg:
            return
        if self.hasmarkup:
            msg = colorize(msg, fg, bold)
        try:
            self._stream.write(msg)
        except UnicodeEncodeError:
            # θ, ω and friends on a cp1252 console
            self._stream.write(msg.encode("unicode-escape").decode("ascii"))
        if flush:
            self.flush()

    def line(self, msg: str = "", **markup) -> None:
        self.write(msg, **markup)
        self.write("\n")

    def flush(self) -> None:
        self._stream.flush()

    def sep(
        self,
        sepchar: str,
        title: Optional[str] = None,
        newline_before: bool = False,
        **markup,
    ) -> None:
        """A full width separator, with ``title`` centered when given"""
        width = self.fullwidth
        if title is None:
            text = sepchar * width
        else:
            text = " {} ".format(title).center(width, sepchar)
        if newline_before:
            self.write("\n")
        self.line(text, **markup)

    def check(self, name: str, passed: bool, detail: str = "") -> None:
        """One line per check: ``PASS  associativity  max=3.1e-16``"""
        self.write("PASS " if passed else "FAIL ", fg="green" if passed else "red")
        self.line(" {}  {}".format(name, detail) if detail else " " + name)

    def table(self, headers: Sequence[str], rows: Iterable[Sequence[object]]) -> None:
        """Left-aligned table with columns fitted to their content"""
        cells = [list(map(str, headers))]
        cells += [[_format_cell(value) for value in row] for row in rows]
        widths = [max(map(len, column)) for column in zip(*cells)]
        cells.insert(1, ["-" * width for width in widths])
        for row in cells:
            self.line("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))


def _format_cell(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return "{:.6g}".format(value)
    return str(value)


terminal = TerminalWriter()

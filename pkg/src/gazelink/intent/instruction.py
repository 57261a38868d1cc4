"""The `$Device (args)` control-instruction protocol: parser and renderer.

Grammar, by example:

    $Robot arm (10, 20, 30)
    $Lamp (living room, 1)
    $Curtain (bedroom, open)

A `$` sigil, a device name of one or more words, and a parenthesized
comma-separated argument list. Numeric arguments parse as int/float; all
other tokens are unquoted word strings which may contain single internal
spaces. Rendering is canonical (single spaces, `, ` separators, one space
before the parenthesis) and parse(render(x)) == x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

Arg = int | float | str

_INT_RE = re.compile(r"[+-]?\d+$")
_WORD_RE = re.compile(r"[^\s,()$]+$")


class InstructionParseError(ValueError):
    """Syntax error with the byte offset of the offending position."""

    def __init__(self, message: str, text: str, char_offset: int):
        self.char_offset = char_offset
        self.byte_offset = len(text[:char_offset].encode("utf-8"))
        super().__init__(f"{message} at offset {self.byte_offset}")


@dataclass(frozen=True)
class ControlInstruction:
    device: str
    args: tuple[Arg, ...] = ()

    def __post_init__(self):
        if not self.device or not self.device.strip():
            raise ValueError("device name must be non-empty")
        if re.search(r"[,()$]", self.device):
            raise ValueError(f"device name contains reserved characters: {self.device!r}")
        if "  " in self.device or self.device != self.device.strip():
            raise ValueError(f"device name must use single internal spaces: {self.device!r}")
        for a in self.args:
            if isinstance(a, str):
                if not a or a != a.strip() or "  " in a:
                    raise ValueError(f"string argument malformed: {a!r}")
                if re.search(r"[,()$]", a):
                    raise ValueError(f"string argument contains reserved characters: {a!r}")
            elif isinstance(a, bool) or not isinstance(a, (int, float)):
                raise ValueError(f"unsupported argument type: {a!r}")


def _render_arg(a: Arg) -> str:
    if isinstance(a, str):
        return a
    if isinstance(a, int):
        return str(a)
    return repr(a)


def render_instruction(instr: ControlInstruction) -> str:
    """Canonical text form: `$Device (a1, a2, ...)`."""
    return f"${instr.device} ({', '.join(_render_arg(a) for a in instr.args)})"


def _parse_arg(token: str) -> Arg:
    if _INT_RE.match(token):
        return int(token)
    try:
        return float(token)
    except ValueError:
        return token


def _normalize_words(raw: str) -> str:
    return " ".join(raw.split())


def parse_instruction(text: str) -> ControlInstruction:
    """Parse instruction text; raises InstructionParseError with a byte offset."""
    i = 0
    n = len(text)
    while i < n and text[i].isspace():
        i += 1
    if i >= n or text[i] != "$":
        raise InstructionParseError("expected '$'", text, i if i < n else n)
    i += 1

    open_paren = text.find("(", i)
    if open_paren == -1:
        raise InstructionParseError("expected '('", text, n)
    device = _normalize_words(text[i:open_paren])
    if not device:
        raise InstructionParseError("empty device name", text, i)

    close_paren = text.find(")", open_paren + 1)
    if close_paren == -1:
        raise InstructionParseError("unbalanced parentheses: missing ')'", text, n)
    inner = text[open_paren + 1 : close_paren]
    if "(" in inner:
        raise InstructionParseError(
            "unbalanced parentheses: nested '('", text, open_paren + 1 + inner.index("(")
        )

    tail = text[close_paren + 1 :]
    if tail.strip():
        raise InstructionParseError(
            "unexpected trailing content", text, close_paren + 1 + len(tail) - len(tail.lstrip())
        )

    args: list[Arg] = []
    if inner.strip():
        pos = open_paren + 1
        for piece in inner.split(","):
            token = _normalize_words(piece)
            if not token:
                raise InstructionParseError("empty argument", text, pos)
            args.append(_parse_arg(token))
            pos += len(piece) + 1

    try:
        return ControlInstruction(device=device, args=tuple(args))
    except ValueError as exc:
        raise InstructionParseError(str(exc), text, i) from exc

"""Text syntax for weights and gradings.

Weight grammar (fundamental-weight coordinates, Bourbaki numbering)::

    weight    := factor ("*" factor)*     one factor per simple component
               | "[" int ("," int)* "]"   raw coordinate vector
    factor    := "0" | sign? term (sign term)*
    term      := int? "l" index           e.g. l1, 2l3, -l2
    sign      := "+" | "-"

With one factor per component the indices are local to that component, so
``"l1*l1"`` on ``A1+A2`` is lambda^1_1 + lambda^2_1.  A single factor on a
datum with several components uses global indices (``"l1+l3"`` on ``A2+A2``).
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .rootdata import RootDatum, Weight


def caret_message(text: str, pos: int, message: str) -> str:
    return f"{message} (column {pos + 1})\n  {text}\n  {' ' * pos}^"


class NotationError(ValueError):
    """Parse failure; the message carries a caret pointing at the column."""

    def __init__(self, text: str, pos: int, message: str):
        self.text = text
        self.pos = pos
        self.reason = message
        super().__init__(caret_message(text, pos, message))


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*[lL]\s*(\d+)\s*")
_ZERO = re.compile(r"\s*0\s*$")


def _parse_factor(text: str, start: int, end: int, size: int) -> list[int]:
    out = [0] * size
    chunk = text[start:end]
    if _ZERO.match(chunk):
        return out
    pos = 0
    first = True
    while pos < len(chunk):
        if not chunk[pos:].strip():
            break
        m = _TERM.match(chunk, pos)
        if not m:
            raise NotationError(text, start + pos + _skip_ws(chunk, pos), "expected a term like 2l1")
        if not first and not m.group(1):
            raise NotationError(text, start + m.start(2), "expected '+' or '-' between terms")
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            coef = -coef
        idx = int(m.group(3))
        if not 1 <= idx <= size:
            raise NotationError(text, start + m.start(3), f"index l{idx} out of range 1..{size}")
        out[idx - 1] += coef
        pos = m.end()
        first = False
    if first:
        raise NotationError(text, start, "empty weight factor")
    return out


def _skip_ws(s: str, pos: int) -> int:
    return len(s[pos:]) - len(s[pos:].lstrip())


def parse_weight(text: str, datum: RootDatum) -> Weight:
    stripped = text.strip()
    if stripped.startswith("["):
        if not stripped.endswith("]"):
            raise NotationError(text, len(text), "missing closing ']'")
        body = stripped[1:-1]
        parts = [p.strip() for p in body.split(",")] if body.strip() else []
        if len(parts) != datum.rank:
            raise NotationError(text, 0, f"expected {datum.rank} coordinates, got {len(parts)}")
        out = []
        base = text.index("[") + 1
        for p in parts:
            if not re.fullmatch(r"[+-]?\d+", p):
                raise NotationError(text, base + text[base:].find(p), f"not an integer: {p!r}")
            out.append(int(p))
        return tuple(out)
    cuts = [i for i, ch in enumerate(text) if ch == "*"]
    bounds = list(zip([0] + [c + 1 for c in cuts], cuts + [len(text)]))
    ncomp = len(datum.components)
    if len(bounds) == 1:
        return tuple(_parse_factor(text, 0, len(text), datum.rank))
    if len(bounds) != ncomp:
        pos = cuts[min(len(cuts), ncomp) - 1] if len(bounds) > ncomp else len(text)
        raise NotationError(
            text, pos, f"{len(bounds)} factors given but {datum} has {ncomp} components"
        )
    out: list[int] = []
    for (s, e), comp in zip(bounds, datum.components):
        out.extend(_parse_factor(text, s, e, comp.rank))
    return tuple(out)


def _format_terms(coords: Sequence) -> str:
    parts = []
    for i, c in enumerate(coords):
        c = Fraction(c)
        if not c:
            continue
        mag = abs(c)
        coef = "" if mag == 1 else str(mag)
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign}{coef}l{i + 1}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def format_weight(w: Sequence, datum: RootDatum) -> str:
    """Inverse of :func:`parse_weight` (component-separated form)."""
    if len(datum.components) == 1:
        return _format_terms(w)
    factors = []
    for k in range(len(datum.components)):
        rng = datum.component_slice(k)
        factors.append(_format_terms(w[rng.start:rng.stop]))
    return "*".join(factors)


def format_root(root: Sequence[int]) -> str:
    parts = []
    for i, c in enumerate(root):
        if c:
            parts.append(("" if c == 1 else str(c)) + f"a{i + 1}")
    return "+".join(parts) or "0"

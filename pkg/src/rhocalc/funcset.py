"""Finite-support functions Z -> Z and the reversing operation on them."""
from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import NotInEm, ParseError


class FunctionSeq:
    """A function f: Z -> Z with finite support, stored as its non-zero entries."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping[int, int] | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean = {}
        for i, v in items:
            if v:
                clean[int(i)] = int(v)
        object.__setattr__(self, "_entries", tuple(sorted(clean.items())))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("FunctionSeq is immutable")

    @property
    def entries(self) -> tuple:
        """Sorted ``(index, value)`` pairs, values non-zero."""
        return self._entries

    def as_dict(self) -> dict:
        return dict(self._entries)

    def __call__(self, i: int) -> int:
        for j, v in self._entries:
            if j == i:
                return v
        return 0

    def support(self) -> tuple:
        return tuple(i for i, _ in self._entries)

    def __eq__(self, other):
        if not isinstance(other, FunctionSeq):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self._entries))
        return self._hash

    def __lt__(self, other: FunctionSeq) -> bool:
        return self._entries < other._entries

    def __bool__(self):
        return bool(self._entries)

    def __str__(self):
        return format_function(self)

    def __repr__(self):
        return f"FunctionSeq({format_function(self)})"


ZERO = FunctionSeq()


def from_sequence(values: Iterable[int]) -> FunctionSeq:
    return FunctionSeq(enumerate(values))


def bump(f: FunctionSeq, j: int, sign: int) -> FunctionSeq:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    d = f.as_dict()
    d[j] = d.get(j, 0) + sign
    return FunctionSeq(d)


def seq_plus(f: FunctionSeq, m: int) -> FunctionSeq:
    if m < 1:
        raise ValueError("m must be positive")
    if any(i < 0 or i >= m for i in f.support()):
        raise NotInEm(f"{f} is not in E_{m}")
    return bump(f, m - 1, 1)


def reverse(f: FunctionSeq) -> FunctionSeq:
    return FunctionSeq((-i, v) for i, v in f.entries)


class FunctionSet:
    """A finite, duplicate-free set of functions kept in canonical order."""

    __slots__ = ("members",)

    def __init__(self, members: Iterable[FunctionSeq] = ()):
        object.__setattr__(self, "members", tuple(sorted(set(members))))

    def __setattr__(self, name, value):
        raise AttributeError("FunctionSet is immutable")

    def __eq__(self, other):
        if not isinstance(other, FunctionSet):
            return NotImplemented
        return self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, f):
        return f in self.members

    def __str__(self):
        return format_set(self)

    def __repr__(self):
        return f"FunctionSet({format_set(self)})"


def rho_set(xs: FunctionSet) -> FunctionSet:
    return FunctionSet(reverse(f) for f in xs)


def format_function(f: FunctionSeq) -> str:
    return "{" + ", ".join(f"{i}:{v}" for i, v in f.entries) + "}"


def format_set(xs: FunctionSet) -> str:
    return "[" + "; ".join(format_function(f) for f in xs) + "]"


_INT = r"[+-]?\d+"
_MAP_RE = re.compile(r"\{\s*(.*?)\s*\}\Z", re.S)
_SEQ_RE = re.compile(r"\(\s*(.*?)\s*\)\Z", re.S)
_PAIR_RE = re.compile(rf"({_INT})\s*:\s*({_INT})\Z")


def parse_function(text: str) -> FunctionSeq:
    """Parse ``{i:v, ...}``, ``(j0, j1, ...)``, or a bare ``j0,j1,...`` list."""
    text = text.strip()
    m = _MAP_RE.match(text)
    if m:
        body = m.group(1)
        entries = {}
        for part in filter(None, (p.strip() for p in body.split(","))):
            pm = _PAIR_RE.match(part)
            if not pm:
                raise ParseError(f"bad function entry {part!r}")
            i = int(pm.group(1))
            if i in entries:
                raise ParseError(f"index {i} given twice")
            entries[i] = int(pm.group(2))
        return FunctionSeq(entries)
    m = _SEQ_RE.match(text)
    body = m.group(1) if m else text
    parts = [p.strip() for p in body.split(",")] if body else []
    try:
        return from_sequence(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad function {text!r}") from None


def parse_set(text: str) -> FunctionSet:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"bad function set {text!r}")
    body = text[1:-1].strip()
    return FunctionSet(parse_function(p) for p in body.split(";") if p.strip())

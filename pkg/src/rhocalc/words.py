"""Free-group words over decorated generator symbols.

Words are stored as tuples of ``(GenSym, exponent)`` syllables and are always
freely reduced, so equality of words is equality of their syllable tuples.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping

from . import _kernels
from .errors import ParseError, UnknownGenerator

_BASE_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:#[0-9]+)?\Z")
_TOKEN_RE = re.compile(r"(~?)([A-Za-z_][A-Za-z0-9_]*(?:#[0-9]+)?)('*)(?:\^(-?[0-9]+))?\Z")


class GenSym:
    """A generator symbol: base name, number of primes, bar flag.

    Instances are interned: constructing the same triple twice returns the
    same object, which lets the kernels compare symbols by identity.
    The ``#n`` suffix is reserved for names produced by renaming.
    """

    __slots__ = ("base", "primes", "barred", "__weakref__")
    _cache: dict = {}

    def __new__(cls, base: str, primes: int = 0, barred: bool = False):
        key = (base, primes, bool(barred))
        self = cls._cache.get(key)
        if self is not None:
            return self
        if not isinstance(base, str) or not _BASE_RE.match(base):
            raise ValueError(f"invalid generator base {base!r}")
        if not isinstance(primes, int) or primes < 0:
            raise ValueError(f"invalid prime count {primes!r}")
        self = object.__new__(cls)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "primes", primes)
        object.__setattr__(self, "barred", bool(barred))
        cls._cache[key] = self
        return self

    def __setattr__(self, name, value):
        raise AttributeError("GenSym is immutable")

    def __reduce__(self):
        return (GenSym, (self.base, self.primes, self.barred))

    @property
    def key(self):
        return (self.base, self.primes, self.barred)

    def __lt__(self, other: GenSym) -> bool:
        return self.key < other.key

    def bar(self) -> GenSym:
        return GenSym(self.base, self.primes, True)

    def unbar(self) -> GenSym:
        return GenSym(self.base, self.primes, False)

    def __str__(self):
        return ("~" if self.barred else "") + self.base + "'" * self.primes

    def __repr__(self):
        return f"GenSym({str(self)!r})"


def sym(text: str) -> GenSym:
    """Parse a single symbol such as ``t1'`` or ``~d``."""
    m = _TOKEN_RE.match(text.strip())
    if not m or m.group(4) is not None:
        raise ParseError(f"bad generator name {text!r}")
    return GenSym(m.group(2), len(m.group(3)), bool(m.group(1)))


class Word:
    __slots__ = ("syllables", "_hash")

    def __init__(self, raw: Iterable = ()):
        object.__setattr__(self, "syllables", _kernels.reduce_pairs(raw))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _reduced(cls, syllables: tuple) -> Word:
        w = object.__new__(cls)
        object.__setattr__(w, "syllables", syllables)
        object.__setattr__(w, "_hash", None)
        return w

    @classmethod
    def letter(cls, s: GenSym | str, exp: int = 1) -> Word:
        if isinstance(s, str):
            s = sym(s)
        return cls._reduced(((s, exp),) if exp else ())

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __reduce__(self):
        return (Word, (self.syllables,))

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.syllables == other.syllables

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.syllables)
            object.__setattr__(self, "_hash", h)
        return h

    def __len__(self):
        return len(self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return Word._reduced(_kernels.join_reduced(self.syllables, other.syllables))

    def __invert__(self) -> Word:
        return Word._reduced(_kernels.invert_pairs(self.syllables))

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return (~self) ** -k
        if k == 0 or not self.syllables:
            return IDENTITY
        if len(self.syllables) == 1:
            s, e = self.syllables[0]
            return Word._reduced(((s, e * k),))
        result, base = IDENTITY, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __xor__(self, g: Word) -> Word:
        """``x ^ g`` is the conjugate g⁻¹xg, matching the written x^g."""
        return conjugate(self, g)

    def length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def symbols(self) -> set:
        return {s for s, _ in self.syllables}

    def sort_key(self) -> tuple:
        return tuple((s.key, e) for s, e in self.syllables)

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


IDENTITY = Word._reduced(())


def reduce(raw: Iterable) -> Word:
    return Word(raw)


def multiply(x: Word, y: Word) -> Word:
    return x * y


def invert(x: Word) -> Word:
    return ~x


def conjugate(x: Word, g: Word) -> Word:
    ginv = ~g
    return Word._reduced(
        _kernels.join_reduced(
            _kernels.join_reduced(ginv.syllables, x.syllables), g.syllables
        )
    )


def product(words: Iterable[Word]) -> Word:
    acc = ()
    for w in words:
        acc = _kernels.join_reduced(acc, w.syllables)
    return Word._reduced(acc)


def apply_endo(mapping: Mapping[GenSym, Word], x: Word) -> Word:
    """Image of ``x`` under the homomorphism fixed by ``mapping`` on generators."""
    acc = ()
    for s, e in x.syllables:
        try:
            image = mapping[s]
        except KeyError:
            raise UnknownGenerator(s) from None
        acc = _kernels.join_reduced(acc, (image**e).syllables)
    return Word._reduced(acc)


def rename(x: Word, mapping: Mapping[GenSym, GenSym]) -> Word:
    """Symbol-for-symbol substitution; symbols absent from ``mapping`` are kept."""
    return Word((mapping.get(s, s), e) for s, e in x.syllables)


def format_word(w: Word) -> str:
    if not w.syllables:
        return "1"
    return " ".join(f"{s}^{e}" if e != 1 else str(s) for s, e in w.syllables)


def parse_word(text: str, line: int | None = None) -> Word:
    """Parse whitespace-separated tokens ``name`` / ``name^k``; ``1`` is the identity."""
    raw = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN_RE.match(tok)
        if not m:
            raise ParseError(f"malformed word token {tok!r}", line)
        exp = int(m.group(4)) if m.group(4) is not None else 1
        if exp == 0:
            raise ParseError(f"zero exponent in token {tok!r}", line)
        raw.append((GenSym(m.group(2), len(m.group(3)), bool(m.group(1))), exp))
    return Word(raw)


def gens(names: str) -> tuple:
    """``gens("a b c")`` returns the three one-letter words."""
    return tuple(Word.letter(sym(n)) for n in names.split())

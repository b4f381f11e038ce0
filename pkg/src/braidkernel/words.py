"""Free-group word arithmetic over named generator alphabets.

Words are stored as normalized syllable lists: sequences of
(generator index, exponent) pairs with nonzero exponents and no two
adjacent syllables on the same generator.  The empty sequence is the
identity.  Exponents are plain Python ints, so large powers cost one
syllable.

Letter-level views (one entry per generator or inverse-generator
occurrence) are provided for the enumeration and rewriting engines.
Letter numbering: generator i is letter 2*i, its inverse is 2*i+1, so
``x ^ 1`` inverts a letter and generators precede their inverses in
alphabet order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_INT_RE = re.compile(r"[+-]?[0-9]+")


class WordError(ValueError):
    """Malformed word text, bad symbol, or alphabet mismatch."""


@dataclass(frozen=True)
class GeneratorSymbol:
    """A named generator at a fixed position in its alphabet."""

    name: str
    index: int

    def __post_init__(self):
        if not _NAME_RE.fullmatch(self.name):
            raise WordError(f"invalid generator name {self.name!r}")
        if self.index < 0:
            raise WordError(f"negative generator index {self.index}")

    def __str__(self):
        return self.name


Alphabet = tuple[GeneratorSymbol, ...]


def make_alphabet(names: Iterable[str]) -> Alphabet:
    """Build an alphabet from generator names; names must be unique."""
    symbols = tuple(GeneratorSymbol(name, i) for i, name in enumerate(names))
    seen = set()
    for sym in symbols:
        if sym.name in seen:
            raise WordError(f"duplicate generator name {sym.name!r}")
        seen.add(sym.name)
    return symbols


def _normalize_syllables(raw: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    # Stack-based merge; popping a canceled syllable can expose a new
    # adjacency with the next input syllable, which the loop handles.
    out: list[tuple[int, int]] = []
    for gen, exp in raw:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged != 0:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word over a fixed alphabet."""

    alphabet: Alphabet
    syllables: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = len(self.alphabet)
        prev = -1
        for gen, exp in self.syllables:
            if not 0 <= gen < n:
                raise WordError(f"generator index {gen} out of range")
            if exp == 0:
                raise WordError("zero exponent in syllable")
            if gen == prev:
                raise WordError("adjacent syllables share a generator")
            prev = gen

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Word":
        return cls(alphabet, ())

    @classmethod
    def from_syllables(cls, alphabet: Alphabet, raw: Iterable[tuple[int, int]]) -> "Word":
        return cls(alphabet, _normalize_syllables(raw))

    @classmethod
    def generator(cls, alphabet: Alphabet, index: int, exponent: int = 1) -> "Word":
        return cls.from_syllables(alphabet, [(index, exponent)])

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    @property
    def letter_length(self) -> int:
        return sum(abs(exp) for _, exp in self.syllables)

    def inverse(self) -> "Word":
        return Word(self.alphabet, tuple((g, -e) for g, e in reversed(self.syllables)))

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word.identity(self.alphabet)
        base = self if n > 0 else self.inverse()
        result = base
        for _ in range(abs(n) - 1):
            result = multiply(result, base)
        return result

    def __str__(self):
        return format_word(self)


def _require_same_alphabet(u: Word, v: Word):
    if u.alphabet != v.alphabet:
        raise WordError("words belong to different alphabets")


def multiply(u: Word, v: Word) -> Word:
    """Freely reduced concatenation u*v."""
    _require_same_alphabet(u, v)
    return Word.from_syllables(u.alphabet, u.syllables + v.syllables)


def invert(w: Word) -> Word:
    return w.inverse()


def conjugate(u: Word, w: Word) -> Word:
    """Conjugation u * w * u^-1 (the conjugator comes first)."""
    _require_same_alphabet(u, w)
    return multiply(multiply(u, w), u.inverse())


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split w as conjugator * core * conjugator^-1 with core cyclically reduced."""
    letters = list(word_to_letters(w))
    prefix: list[int] = []
    while len(letters) >= 2 and letters[0] == letters[-1] ^ 1:
        prefix.append(letters[0])
        letters = letters[1:-1]
    core = letters_to_word(w.alphabet, letters)
    conjugator = letters_to_word(w.alphabet, prefix)
    return core, conjugator


# letter-level view -------------------------------------------------------

def letter_inverse(x: int) -> int:
    return x ^ 1


def word_to_letters(w: Word) -> tuple[int, ...]:
    out: list[int] = []
    for gen, exp in w.syllables:
        letter = 2 * gen if exp > 0 else 2 * gen + 1
        out.extend([letter] * abs(exp))
    return tuple(out)


def letters_to_word(alphabet: Alphabet, letters: Sequence[int]) -> Word:
    sylls = [(x >> 1, 1 if x % 2 == 0 else -1) for x in letters]
    return Word.from_syllables(alphabet, sylls)


def free_reduce_letters(letters: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == x ^ 1:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def letter_name(alphabet: Alphabet, x: int) -> str:
    sym = alphabet[x >> 1].name
    return sym if x % 2 == 0 else sym + "^-1"


# ordering ----------------------------------------------------------------

def shortlex_compare(u: Word, v: Word, letter_order: Sequence[int] | None = None) -> int:
    """Shortlex comparison on letter expansions: -1, 0 or 1.

    The default letter order is g0 < g0^-1 < g1 < g1^-1 < ...; pass a
    permutation of the 2n letter ids to override it.
    """
    _require_same_alphabet(u, v)
    lu, lv = word_to_letters(u), word_to_letters(v)
    if letter_order is not None:
        rank = {x: i for i, x in enumerate(letter_order)}
        lu = tuple(rank[x] for x in lu)
        lv = tuple(rank[x] for x in lv)
    ku, kv = (len(lu), lu), (len(lv), lv)
    if ku < kv:
        return -1
    if ku > kv:
        return 1
    return 0


# text form ---------------------------------------------------------------

def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse the word grammar: ``"1"`` or ``name(^int)?`` terms joined by
    ``*`` or whitespace.  Errors report the offending position."""
    lookup = {sym.name: sym.index for sym in alphabet}
    if text.strip() == "1":
        return Word.identity(alphabet)

    sylls: list[tuple[int, int]] = []
    i = 0
    n = len(text)
    have_term = False     # at least one term parsed
    separated = True      # a separator (or the start) precedes position i
    star_pending = False  # a '*' was seen and now requires a term
    while i < n:
        if text[i].isspace():
            separated = True
            i += 1
            continue
        if text[i] == "*":
            if not have_term or star_pending:
                raise WordError(f"unexpected '*' at position {i}")
            separated = True
            star_pending = True
            i += 1
            continue
        m = _NAME_RE.match(text, i)
        if not m:
            raise WordError(f"expected generator name at position {i}")
        if have_term and not separated:
            raise WordError(f"missing separator before position {i}")
        name = m.group()
        if name not in lookup:
            raise WordError(f"unknown generator {name!r} at position {i}")
        i = m.end()
        exp = 1
        if i < n and text[i] == "^":
            i += 1
            em = _INT_RE.match(text, i)
            if not em:
                raise WordError(f"malformed exponent at position {i}")
            exp = int(em.group())
            i = em.end()
        sylls.append((lookup[name], exp))
        have_term = True
        separated = False
        star_pending = False
    if not have_term:
        raise WordError("empty word text (use \"1\" for the identity)")
    if star_pending:
        raise WordError("trailing '*' without a term")
    return Word.from_syllables(alphabet, sylls)


def format_word(w: Word) -> str:
    """Printer inverse to parse_word; identity prints as ``1``."""
    if w.is_identity:
        return "1"
    terms = []
    for gen, exp in w.syllables:
        name = w.alphabet[gen].name
        terms.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(terms)

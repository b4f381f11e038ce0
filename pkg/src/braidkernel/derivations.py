"""Derivation chains: checkable certificates that two words are equal
modulo the relators of a presentation.

A step inserts one relator -- cyclically rotated, possibly inverted --
at a letter position of the current word and freely reduces.  Any true
equality in the group has such a chain, so a bounded breadth-first
search is a semi-decision procedure: found chains are certificates,
not-found is inconclusive and never a disproof.

Chains serialize to a line-oriented text format (one ``step`` line per
insertion) so fixed proof chains can live in a test corpus as data.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .presentations import Presentation
from .words import (
    Word,
    format_word,
    free_reduce_letters,
    letter_inverse,
    letters_to_word,
    parse_word,
    word_to_letters,
)

DEFAULT_MAX_WORD_LEN = 30
DEFAULT_MAX_NODES = 200000


class ChainError(ValueError):
    pass


@dataclass(frozen=True)
class DerivationStep:
    relator: int
    rotation: int
    direction: int  # +1 inserts the rotated relator, -1 its inverse
    position: int   # letter position in the current word, 0..len


@dataclass(frozen=True)
class DerivationChain:
    presentation: Presentation
    words: tuple[Word, ...]
    steps: tuple[DerivationStep, ...]

    @property
    def start(self) -> Word:
        return self.words[0]

    @property
    def end(self) -> Word:
        return self.words[-1]


@dataclass(frozen=True)
class DerivationReport:
    valid: bool
    failing_step: Optional[int]
    message: str


def _relator_letters(p: Presentation, index: int) -> tuple[int, ...]:
    if not 0 <= index < len(p.relators):
        raise ChainError(f"relator index {index} out of range")
    return word_to_letters(p.relators[index])


def _step_insertion(p: Presentation, step: DerivationStep) -> tuple[int, ...]:
    rel = _relator_letters(p, step.relator)
    if not 0 <= step.rotation < len(rel):
        raise ChainError(f"rotation {step.rotation} out of range for relator {step.relator}")
    if step.direction not in (1, -1):
        raise ChainError(f"direction must be +1 or -1, got {step.direction}")
    rotated = rel[step.rotation:] + rel[:step.rotation]
    if step.direction == -1:
        rotated = tuple(letter_inverse(x) for x in reversed(rotated))
    return rotated


def apply_step(p: Presentation, w: Word, step: DerivationStep) -> Word:
    """One insertion move: splice the (rotated, oriented) relator into w."""
    if w.alphabet != p.alphabet:
        raise ChainError("word is not over the presentation's alphabet")
    insertion = _step_insertion(p, step)
    letters = word_to_letters(w)
    if not 0 <= step.position <= len(letters):
        raise ChainError(f"position {step.position} out of range (word length {len(letters)})")
    new = free_reduce_letters(
        letters[:step.position] + insertion + letters[step.position:])
    return letters_to_word(p.alphabet, new)


def build_chain(p: Presentation, start: Word, steps) -> DerivationChain:
    """Replay steps from ``start``, recording every intermediate word."""
    words = [start]
    steps = tuple(steps)
    for step in steps:
        words.append(apply_step(p, words[-1], step))
    return DerivationChain(p, tuple(words), steps)


def check_derivation(chain: DerivationChain) -> DerivationReport:
    """Accept iff every step replays exactly; report the first failure."""
    if not chain.words:
        raise ChainError("chain has no words")
    if len(chain.words) != len(chain.steps) + 1:
        raise ChainError(
            f"chain has {len(chain.words)} words but {len(chain.steps)} steps")
    for w in chain.words:
        if w.alphabet != chain.presentation.alphabet:
            raise ChainError("chain word over the wrong alphabet")
    for t, step in enumerate(chain.steps):
        computed = apply_step(chain.presentation, chain.words[t], step)
        if computed != chain.words[t + 1]:
            return DerivationReport(
                False, t,
                f"step {t} produced {format_word(computed)}, "
                f"chain claims {format_word(chain.words[t + 1])}")
    return DerivationReport(True, None, f"{len(chain.steps)} steps replayed")


def search_equality(p: Presentation, u: Word, v: Word,
                    max_word_len: int = DEFAULT_MAX_WORD_LEN,
                    max_nodes: int = DEFAULT_MAX_NODES) -> Optional[DerivationChain]:
    """Breadth-first search for a derivation chain from u to v.

    Explores every relator insertion (all rotations, both directions,
    every position), pruning words longer than ``max_word_len`` and
    stopping after ``max_nodes`` distinct words.  Returns a chain that
    check_derivation accepts, or None (inconclusive, not a disproof).
    """
    if max_word_len < 1 or max_nodes < 1:
        raise ValueError("budgets must be >= 1")
    if u.alphabet != p.alphabet or v.alphabet != p.alphabet:
        raise ChainError("words are not over the presentation's alphabet")

    start = word_to_letters(u)
    goal = word_to_letters(v)
    if start == goal:
        return DerivationChain(p, (u,), ())

    # precompute the distinct insertion strings with a representative step
    variants: list[tuple[tuple[int, ...], int, int, int]] = []
    seen_insertions = set()
    for ri in range(len(p.relators)):
        rel = _relator_letters(p, ri)
        for rot in range(len(rel)):
            for direction in (1, -1):
                ins = rel[rot:] + rel[:rot]
                if direction == -1:
                    ins = tuple(letter_inverse(x) for x in reversed(ins))
                if ins in seen_insertions:
                    continue
                seen_insertions.add(ins)
                variants.append((ins, ri, rot, direction))

    came_from: dict[tuple[int, ...], tuple[tuple[int, ...], DerivationStep]] = {start: None}
    frontier = deque([start])
    budget_hit = False
    found = None
    while frontier and found is None:
        word = frontier.popleft()
        for ins, ri, rot, direction in variants:
            if found is not None:
                break
            for pos in range(len(word) + 1):
                new = free_reduce_letters(word[:pos] + ins + word[pos:])
                if len(new) > max_word_len or new in came_from:
                    continue
                came_from[new] = (word, DerivationStep(ri, rot, direction, pos))
                if new == goal:
                    found = new
                    break
                if len(came_from) >= max_nodes:
                    budget_hit = True
                    break
                frontier.append(new)
            if budget_hit:
                break
        if budget_hit and found is None:
            return None
    if found is None:
        return None

    steps = []
    cur = found
    while came_from[cur] is not None:
        prev, step = came_from[cur]
        steps.append(step)
        cur = prev
    steps.reverse()
    return build_chain(p, u, steps)


# text format ----------------------------------------------------------------

class ChainFormatError(ChainError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def format_chain(chain: DerivationChain) -> str:
    lines = [f"presentation {chain.presentation.name}",
             f"start {format_word(chain.start)}"]
    for s in chain.steps:
        lines.append(f"step {s.relator} {s.rotation} {s.direction} {s.position}")
    lines.append(f"end {format_word(chain.end)}")
    return "\n".join(lines) + "\n"


def parse_chain_file(text: str, p: Presentation) -> tuple[DerivationChain, Word]:
    """Parse a chain file and replay it over p.

    Returns the replayed chain and the file's declared end word; the
    caller compares ``chain.end`` against the declaration.
    """
    start = None
    declared_end = None
    steps: list[DerivationStep] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "presentation":
            if rest != p.name:
                raise ChainFormatError(
                    lineno, f"chain is over {rest!r}, not {p.name!r}")
        elif key == "start":
            start = parse_word(rest, p.alphabet)
        elif key == "step":
            fields = rest.split()
            if len(fields) != 4:
                raise ChainFormatError(lineno, "step needs 4 integers")
            try:
                ints = [int(f) for f in fields]
            except ValueError as exc:
                raise ChainFormatError(lineno, str(exc)) from exc
            steps.append(DerivationStep(*ints))
        elif key == "end":
            declared_end = parse_word(rest, p.alphabet)
        else:
            raise ChainFormatError(lineno, f"unknown directive {key!r}")
    if start is None:
        raise ChainFormatError(0, "missing start line")
    if declared_end is None:
        raise ChainFormatError(0, "missing end line")
    chain = build_chain(p, start, steps)
    return chain, declared_end

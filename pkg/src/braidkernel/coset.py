"""Todd-Coxeter coset enumeration (HLT strategy).

Enumerates cosets of a finitely generated subgroup in a finitely
presented group by scanning every relator at every live coset, filling
undefined table entries as it goes, and merging cosets through a
union-find when two names turn out to denote the same coset
(coincidence).  Coincidence processing replays both columns of the
dead coset's row so the two table invariants survive every merge:

* permutation consistency: entry(c, x) == d  iff  entry(d, x^-1) == c;
* relator closure: scanning any relator from any coset returns to it.

The strategy is sealed (relator scanning in presentation order,
define-on-first-gap, FIFO coincidence queue) so results are
deterministic for a fixed input.  Budget exhaustion is a status on the
returned table, not an exception.

Internally cosets are 0-based; the compacted table is published with
1-based indices and coset 1 is the subgroup coset.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .presentations import Presentation
from .words import Word, format_word, letter_inverse, letters_to_word, word_to_letters

DEFAULT_MAX_COSETS = 100000
CENTER_ENUM_CAP = 10000


class EnumerationError(ValueError):
    pass


class IncompleteTableError(EnumerationError):
    """Raised when a query needs a complete table."""


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class CosetTable:
    """Result of an enumeration.

    ``rows[c - 1][x]`` is the coset reached from coset ``c`` by letter
    ``x`` (generator i = letter 2i, its inverse = letter 2i+1).  When
    status is "budget-exceeded" entries may be None.
    """

    presentation: Presentation
    subgroup_gens: tuple[Word, ...]
    rows: tuple[tuple[Optional[int], ...], ...]
    status: str  # "complete" | "budget-exceeded"

    @property
    def n_cosets(self) -> int:
        return len(self.rows)

    @property
    def is_complete(self) -> bool:
        return self.status == "complete"

    def entry(self, coset: int, letter: int) -> Optional[int]:
        return self.rows[coset - 1][letter]

    def trace(self, coset: int, letters: Sequence[int]) -> Optional[int]:
        for x in letters:
            coset = self.rows[coset - 1][x]
            if coset is None:
                return None
        return coset

    def trace_word(self, coset: int, w: Word) -> Optional[int]:
        if w.alphabet != self.presentation.alphabet:
            raise EnumerationError("word is not over the table's alphabet")
        return self.trace(coset, word_to_letters(w))


def todd_coxeter(p: Presentation, subgroup_gens: Sequence[Word] = (),
                 max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Enumerate cosets of <subgroup_gens> in the group presented by p."""
    if p.ngens == 0:
        raise EnumerationError("cannot enumerate over an empty alphabet")
    if max_cosets < 1:
        raise EnumerationError("max_cosets must be >= 1")
    for w in subgroup_gens:
        if w.alphabet != p.alphabet:
            raise EnumerationError(
                f"subgroup generator {format_word(w)} is over a different alphabet")

    ncols = 2 * p.ngens
    relator_paths = [word_to_letters(r) for r in p.relators]
    subgroup_paths = [word_to_letters(w) for w in subgroup_gens if not w.is_identity]

    table: list[list[Optional[int]]] = [[None] * ncols]
    parent = [0]
    live_count = 1

    def find(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c: int, x: int) -> int:
        nonlocal live_count
        d = len(table)
        table.append([None] * ncols)
        parent.append(d)
        table[c][x] = d
        table[d][letter_inverse(x)] = c
        live_count += 1
        if live_count > max_cosets:
            raise _BudgetExceeded
        return d

    def merge(a: int, b: int, queue: deque):
        nonlocal live_count
        a, b = find(a), find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        parent[b] = a
        live_count -= 1
        queue.append(b)

    def coincidence(a: int, b: int):
        queue: deque[int] = deque()
        merge(a, b, queue)
        while queue:
            dead = queue.popleft()
            for x in range(ncols):
                d = table[dead][x]
                if d is None:
                    continue
                # drop the stale back-pointer, then replant the edge on
                # the class representatives (or queue a further merge)
                table[d][letter_inverse(x)] = None
                mu, nu = find(dead), find(d)
                if table[mu][x] is not None:
                    merge(nu, table[mu][x], queue)
                elif table[nu][letter_inverse(x)] is not None:
                    merge(mu, table[nu][letter_inverse(x)], queue)
                else:
                    table[mu][x] = nu
                    table[nu][letter_inverse(x)] = mu

    def scan_and_fill(alpha: int, word: Sequence[int]):
        if not word:
            return
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = find(table[f][word[i]])
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][letter_inverse(word[j])] is not None:
                b = find(table[b][letter_inverse(word[j])])
                j -= 1
            if j < i:
                if f != b:
                    coincidence(f, b)
                return
            if j == i:
                # the two scans meet across a single undefined letter
                table[f][word[i]] = b
                table[b][letter_inverse(word[i])] = f
                return
            define(f, word[i])

    status = "complete"
    try:
        for path in subgroup_paths:
            scan_and_fill(0, path)
        idx = 0
        while idx < len(table):
            if find(idx) == idx:
                for path in relator_paths:
                    scan_and_fill(idx, path)
                    if find(idx) != idx:
                        break
                if find(idx) == idx:
                    for x in range(ncols):
                        if table[idx][x] is None:
                            define(idx, x)
            idx += 1
    except _BudgetExceeded:
        status = "budget-exceeded"

    live = [c for c in range(len(table)) if find(c) == c]
    renumber = {c: k + 1 for k, c in enumerate(live)}
    rows = tuple(
        tuple(renumber[find(e)] if e is not None else None for e in table[c])
        for c in live
    )
    return CosetTable(p, tuple(subgroup_gens), rows, status)


# queries -------------------------------------------------------------------

def _require_complete(t: CosetTable):
    if not t.is_complete:
        raise IncompleteTableError("coset table is incomplete (budget exceeded)")


def _require_regular(t: CosetTable):
    _require_complete(t)
    if t.subgroup_gens:
        raise EnumerationError("query requires enumeration over the trivial subgroup")


def group_order(t: CosetTable) -> int:
    """Order of the group: live cosets of the trivial subgroup."""
    _require_regular(t)
    return t.n_cosets


def perm_rep(t: CosetTable) -> list[tuple[int, ...]]:
    """One permutation per generator, acting on 0-based coset numbers."""
    _require_complete(t)
    n = t.n_cosets
    perms = []
    for i in range(t.presentation.ngens):
        perm = tuple(t.rows[c][2 * i] - 1 for c in range(n))
        if sorted(perm) != list(range(n)):
            raise EnumerationError(
                f"generator column {i} is not a permutation")
        perms.append(perm)
    return perms


def word_equal_finite(t: CosetTable, u: Word, v: Word) -> bool:
    """Word-problem oracle: u = v iff u*v^-1 fixes the subgroup coset."""
    _require_regular(t)
    return t.trace_word(1, u) == t.trace_word(1, v)


def is_central_finite(t: CosetTable, w: Word) -> bool:
    """True iff w commutes with every generator in the finite group."""
    _require_regular(t)
    for i in range(t.presentation.ngens):
        g = Word.generator(t.presentation.alphabet, i)
        if not word_equal_finite(t, w * g, g * w):
            return False
    return True


def coset_representatives(t: CosetTable) -> list[Word]:
    """One representative word per coset, breadth-first over the table
    columns in alphabet order (deterministic)."""
    _require_complete(t)
    alphabet = t.presentation.alphabet
    reps: dict[int, tuple[int, ...]] = {1: ()}
    order = [1]
    frontier = deque([1])
    while frontier:
        c = frontier.popleft()
        for x in range(2 * len(alphabet)):
            d = t.entry(c, x)
            if d not in reps:
                reps[d] = reps[c] + (x,)
                order.append(d)
                frontier.append(d)
    return [letters_to_word(alphabet, reps[c]) for c in sorted(order)]


def center_order_finite(t: CosetTable, cap: int = CENTER_ENUM_CAP) -> int:
    """Order of the center, by exhausting one representative per element."""
    _require_regular(t)
    if t.n_cosets > cap:
        raise EnumerationError(
            f"group order {t.n_cosets} exceeds the element-enumeration cap {cap}")
    return sum(1 for w in coset_representatives(t) if is_central_finite(t, w))


def table_equality_oracle(t: CosetTable):
    """Equality oracle (for hom_check) backed by a complete table."""
    _require_regular(t)

    def oracle(u: Word, v: Word) -> bool:
        return word_equal_finite(t, u, v)

    return oracle

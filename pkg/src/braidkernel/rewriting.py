"""Knuth-Bendix completion to a confluent string-rewriting system.

Works on the letter-expanded alphabet with formal inverses; the free
reduction rules x x^-1 -> empty are always present.  Rules are ordered
by shortlex (letter order: generator i = 2i before its inverse 2i+1),
so every rule strictly shrinks and rewriting terminates.  Critical
pairs are processed FIFO by rule-pair age and the rule set is
inter-reduced after every addition, which keeps runs deterministic and
systems small.

Budget exhaustion (too many rules, or a rule side over the length cap)
is reported by ``confluent=False``; the partial system remains sound
for rewriting, it just cannot certify inequality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .presentations import Presentation
from .words import Alphabet, Word, letter_inverse, letters_to_word, word_to_letters

DEFAULT_MAX_RULES = 500
DEFAULT_MAX_LEN = 30

Letters = tuple[int, ...]


@dataclass(frozen=True)
class RewriteSystem:
    alphabet: Alphabet
    rules: tuple[tuple[Letters, Letters], ...]
    confluent: bool


def _shortlex_less(u: Letters, v: Letters) -> bool:
    return (len(u), u) < (len(v), v)


def _rewrite(word: Letters, rules: Sequence[tuple[Letters, Letters]]) -> Letters:
    """Leftmost rewriting to a fixpoint (rule order breaks position ties)."""
    if not rules:
        return tuple(word)
    out = list(word)
    max_lhs = max(len(l) for l, _ in rules)
    pos = 0
    while pos < len(out):
        applied = False
        for lhs, rhs in rules:
            end = pos + len(lhs)
            if end <= len(out) and tuple(out[pos:end]) == lhs:
                out[pos:end] = rhs
                pos = max(0, pos - max_lhs + 1)
                applied = True
                break
        if not applied:
            pos += 1
    return tuple(out)


def knuth_bendix(p: Presentation, max_rules: int = DEFAULT_MAX_RULES,
                 max_len: int = DEFAULT_MAX_LEN) -> RewriteSystem:
    """Complete the relators of p into a rewriting system.

    If completion finishes within budget the returned system is
    confluent and its congruence is the group's word problem.
    """
    if max_rules < 1 or max_len < 1:
        raise ValueError("budgets must be >= 1")

    nletters = 2 * p.ngens
    rules: list[list] = []   # [lhs, rhs, active]
    pair_queue: deque[tuple[int, int]] = deque()
    eq_queue: deque[tuple[Letters, Letters]] = deque()
    discarded = False

    def active_rules():
        return [(lhs, rhs) for lhs, rhs, act in rules if act]

    def nf(word: Letters) -> Letters:
        return _rewrite(word, active_rules())

    def add_rule(u: Letters, v: Letters):
        nonlocal discarded
        u, v = nf(u), nf(v)
        if u == v:
            return
        lhs, rhs = (u, v) if _shortlex_less(v, u) else (v, u)
        if len(lhs) > max_len:
            discarded = True
            return
        rid = len(rules)
        rules.append([lhs, rhs, True])
        # inter-reduce: retire rules whose lhs the new rule rewrites,
        # and renormalize right-hand sides
        for j in range(rid):
            ljh, rjh, act = rules[j]
            if not act:
                continue
            if _contains(ljh, lhs):
                rules[j][2] = False
                eq_queue.append((ljh, rjh))
            elif _contains(rjh, lhs):
                rules[j][1] = nf(rjh)
        for j in range(len(rules)):
            if rules[j][2]:
                pair_queue.append((rid, j))
                if j != rid:
                    pair_queue.append((j, rid))

    # seed: free reduction, then the relators as equations
    for x in range(nletters):
        rules.append([(x, letter_inverse(x)), (), True])
    n_free = len(rules)
    for i in range(n_free):
        for j in range(n_free):
            pair_queue.append((i, j))
    for rel in p.relators:
        eq_queue.append((word_to_letters(rel), ()))

    aborted = False
    while eq_queue or pair_queue:
        if sum(1 for r in rules if r[2]) > max_rules:
            aborted = True
            break
        if eq_queue:
            u, v = eq_queue.popleft()
            add_rule(u, v)
            continue
        i, j = pair_queue.popleft()
        if not (rules[i][2] and rules[j][2]):
            continue
        l1, r1 = rules[i][0], rules[i][1]
        l2, r2 = rules[j][0], rules[j][1]
        for k in range(1, min(len(l1), len(l2))):
            if l1[-k:] == l2[:k]:
                # l1 and l2 overlap in a word A|O|B with l1 = A+O, l2 = O+B
                crit1 = r1 + l2[k:]
                crit2 = l1[:-k] + r2
                eq_queue.append((crit1, crit2))

    confluent = not (aborted or discarded or eq_queue or pair_queue)
    final = tuple((tuple(lhs), tuple(rhs)) for lhs, rhs, act in rules if act)
    return RewriteSystem(p.alphabet, final, confluent)


def _contains(haystack: Letters, needle: Letters) -> bool:
    n = len(needle)
    return any(haystack[i:i + n] == needle for i in range(len(haystack) - n + 1))


def normal_form(rs: RewriteSystem, w: Word) -> Word:
    """Rewrite w to a fixpoint; canonical when rs is confluent."""
    if w.alphabet != rs.alphabet:
        raise ValueError("word is not over the rewriting system's alphabet")
    return letters_to_word(rs.alphabet, _rewrite(word_to_letters(w), rs.rules))


def is_irreducible(rs: RewriteSystem, letters: Letters) -> bool:
    return all(not _contains(letters, lhs) for lhs, _ in rs.rules)


def enumerate_normal_forms(rs: RewriteSystem, max_letters: Optional[int] = None,
                           limit: Optional[int] = None) -> list[Word]:
    """All irreducible words, breadth-first by length.

    Terminates when the language is finite; otherwise one of
    ``max_letters`` / ``limit`` must bound the enumeration.  Raises if
    ``limit`` is hit (the count is then not the full language).
    """
    if max_letters is None and limit is None:
        raise ValueError("need max_letters or limit to bound the enumeration")
    nletters = 2 * len(rs.alphabet)
    lhs_set = {lhs for lhs, _ in rs.rules}
    max_lhs = max((len(l) for l in lhs_set), default=0)
    found: list[Letters] = [()]
    level: list[Letters] = [()]
    while level:
        if max_letters is not None and len(level[0]) >= max_letters:
            break
        nxt = []
        for word in level:
            for x in range(nletters):
                cand = word + (x,)
                # word itself is irreducible, so only suffixes of the
                # extension can match a left-hand side
                tail = cand[-max_lhs:] if max_lhs else ()
                if any(tail[len(tail) - k:] in lhs_set for k in range(1, len(tail) + 1)):
                    continue
                nxt.append(cand)
                found.append(cand)
                if limit is not None and len(found) > limit:
                    raise ValueError(f"more than {limit} normal forms")
        level = nxt
    return [letters_to_word(rs.alphabet, w) for w in found]


def rewrite_equality_oracle(rs: RewriteSystem):
    """Equality oracle for hom_check: decisive iff rs is confluent."""

    def oracle(u: Word, v: Word) -> Optional[bool]:
        if normal_form(rs, u) == normal_form(rs, v):
            return True
        return False if rs.confluent else None

    return oracle

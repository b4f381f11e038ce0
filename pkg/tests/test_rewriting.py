import random

import pytest

from braidkernel import (
    enumerate_normal_forms, group_order, knuth_bendix, normal_form,
    presentation, quotient, rewrite_equality_oracle, todd_coxeter,
    torus_presentation,
)
from braidkernel.rewriting import _rewrite, is_irreducible
from braidkernel.words import word_to_letters


def test_free_group_completes_to_free_reduction():
    free = presentation("F2", ["a", "b"], [])
    rs = knuth_bendix(free)
    assert rs.confluent
    # exactly the x x^-1 -> empty rules
    assert sorted(rs.rules) == sorted(
        ((x, x ^ 1), ()) for x in range(4))
    w = free.word("a b b^-1 a")
    assert normal_form(rs, w) == free.word("a^2")


def test_commuting_pair_normal_forms():
    t2 = torus_presentation()
    rs = knuth_bendix(t2)
    assert rs.confluent
    assert normal_form(rs, t2.word("b a")) == t2.word("a b")
    # lattice points |m| + |n| <= 2 in bijection with short normal forms
    forms = enumerate_normal_forms(rs, max_letters=2)
    assert len(forms) == 13


def test_q8_normal_forms(q8, q8_table):
    rs = knuth_bendix(q8)
    assert rs.confluent
    assert normal_form(rs, q8.word("rho2^2")) == q8.word("rho1^2")
    forms = enumerate_normal_forms(rs, limit=100)
    assert len(forms) == 8 == group_order(q8_table)


def test_normal_form_idempotent(q8):
    rs = knuth_bendix(q8)
    rng = random.Random(5)
    gens = ["rho1", "rho2", "rho1^-1", "rho2^-1"]
    for _ in range(50):
        text = " ".join(rng.choice(gens) for _ in range(rng.randint(0, 8))) or "1"
        w = q8.word(text)
        nf = normal_form(rs, w)
        assert normal_form(rs, nf) == nf
        assert is_irreducible(rs, word_to_letters(nf))


def test_confluent_normal_forms_unique_by_random_multipath(q8):
    # rewrite with randomly chosen redexes; a confluent system must
    # reach the same fixpoint by every route
    rs = knuth_bendix(q8)
    assert rs.confluent
    rng = random.Random(11)

    def random_rewrite(letters):
        word = list(letters)
        while True:
            matches = []
            for lhs, rhs in rs.rules:
                for pos in range(len(word) - len(lhs) + 1):
                    if tuple(word[pos:pos + len(lhs)]) == lhs:
                        matches.append((pos, lhs, rhs))
            if not matches:
                return tuple(word)
            pos, lhs, rhs = rng.choice(matches)
            word[pos:pos + len(lhs)] = rhs

    gens = list(range(4))
    for _ in range(60):
        letters = tuple(rng.choice(gens) for _ in range(rng.randint(0, 10)))
        assert random_rewrite(letters) == _rewrite(letters, rs.rules)


def test_rules_strictly_decrease_shortlex(q8):
    rs = knuth_bendix(q8)
    for lhs, rhs in rs.rules:
        assert (len(rhs), rhs) < (len(lhs), lhs)


def test_budget_exhaustion_is_not_confluent_but_sound(rp2_n2, rp2_n2_table):
    rs = knuth_bendix(rp2_n2, max_rules=3)
    assert not rs.confluent
    # partial system still rewrites soundly: whatever it equates is
    # equal in the group
    from braidkernel import word_equal_finite
    w = rp2_n2.word("rho1 rho1^-1 B12")
    nf = normal_form(rs, w)
    assert word_equal_finite(rp2_n2_table, w, nf)


def test_normal_form_counts_match_coset_orders(s3_presentation, z5_presentation):
    t2 = torus_presentation()
    targets = [
        z5_presentation,
        s3_presentation,
        quotient(t2, [t2.word("a^2"), t2.word("b^3")]),
    ]
    for p in targets:
        rs = knuth_bendix(p)
        assert rs.confluent, p.name
        order = group_order(todd_coxeter(p))
        forms = enumerate_normal_forms(rs, limit=order + 10)
        assert len(forms) == order, p.name


def test_rp2_n2_completion_matches_coset_order(rp2_n2, rp2_n2_table):
    rs = knuth_bendix(rp2_n2)
    assert rs.confluent
    forms = enumerate_normal_forms(rs, limit=20)
    assert len(forms) == group_order(rp2_n2_table) == 8


def test_rewrite_oracle_decisiveness(q8, rp2_n2):
    confluent = knuth_bendix(q8)
    oracle = rewrite_equality_oracle(confluent)
    assert oracle(q8.word("rho1^2"), q8.word("rho2^2")) is True
    assert oracle(q8.word("rho1"), q8.word("rho2")) is False
    partial = knuth_bendix(rp2_n2, max_rules=3)
    oracle = rewrite_equality_oracle(partial)
    assert oracle(rp2_n2.word("rho1"), rp2_n2.word("rho2")) is None


def test_enumeration_needs_a_bound():
    rs = knuth_bendix(torus_presentation())
    with pytest.raises(ValueError):
        enumerate_normal_forms(rs)
    with pytest.raises(ValueError):
        enumerate_normal_forms(rs, limit=5)


def test_budget_validation(q8):
    with pytest.raises(ValueError):
        knuth_bendix(q8, max_rules=0)


def test_completion_deterministic(q8):
    assert knuth_bendix(q8).rules == knuth_bendix(q8).rules

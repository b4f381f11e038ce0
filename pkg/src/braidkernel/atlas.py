"""Atlas of surface (pure) braid group data.

Generates the presentations, distinguished central elements, center
descriptions, and strand-forgetting homomorphisms for the surfaces the
toolkit knows about, parameterized by strand count.

The pure braid group of the projective plane has generators
B_ij (1 <= i < j <= n) and rho_k (1 <= k <= n) with four relation
families; exactly the listed index patterns are emitted, in a fixed
order (family, then indices), because derivation certificates address
relators by position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .presentations import GroupHom, Presentation, presentation
from .surfaces import RP2, TORUS, SurfaceKind
from .words import Word, make_alphabet

_RP2_NAME_RE = re.compile(r"P(\d+)\(RP2\)")


class AtlasError(ValueError):
    pass


def _b_name(i: int, j: int) -> str:
    # single-digit pairs stay compact; an underscore keeps larger
    # indices unambiguous
    if i <= 9 and j <= 9:
        return f"B{i}{j}"
    return f"B{i}_{j}"


def _b_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def pure_braid_rp2(n: int) -> Presentation:
    """The n-strand pure braid group of the projective plane."""
    if n < 1:
        raise AtlasError("strand count must be >= 1")
    pairs = _b_pairs(n)
    names = [_b_name(i, j) for i, j in pairs] + [f"rho{k}" for k in range(1, n + 1)]
    alphabet = make_alphabet(names)
    index = {name: k for k, name in enumerate(names)}

    def gen(name: str, exp: int = 1) -> Word:
        return Word.generator(alphabet, index[name], exp)

    def B(i: int, j: int, exp: int = 1) -> Word:
        return gen(_b_name(i, j), exp)

    def rho(k: int, exp: int = 1) -> Word:
        return gen(f"rho{k}", exp)

    def prod(*ws: Word) -> Word:
        out = Word.identity(alphabet)
        for w in ws:
            out = out * w
        return out

    relators: list[Word] = []

    def relation(lhs: Word, rhs: Word):
        relators.append(lhs * rhs.inverse())

    # family (a): conjugation of B_ij by B_rs, four index patterns
    for r, s in pairs:
        for i, j in pairs:
            lhs = prod(B(r, s), B(i, j), B(r, s, -1))
            if i < r < s < j:
                relation(lhs, B(i, j))
            elif r < i == s < j:
                relation(lhs, prod(B(i, j, -1), B(r, j, -1), B(i, j), B(r, j), B(i, j)))
            elif i == r < s < j:
                relation(lhs, prod(B(s, j, -1), B(i, j), B(s, j)))
            elif r < i < s < j:
                relation(lhs, prod(B(s, j, -1), B(r, j, -1), B(s, j), B(r, j),
                                   B(i, j), B(r, j, -1), B(s, j, -1), B(r, j), B(s, j)))

    # family (b): rho_i rho_j rho_i^-1 = rho_j^-1 B_ij^-1 rho_j^2
    for i, j in pairs:
        relation(prod(rho(i), rho(j), rho(i, -1)),
                 prod(rho(j, -1), B(i, j, -1), rho(j, 2)))

    # family (c): rho_i^2 = B_1i ... B_(i-1)i B_i(i+1) ... B_in
    for i in range(1, n + 1):
        right = prod(*[B(a, i) for a in range(1, i)],
                     *[B(i, b) for b in range(i + 1, n + 1)])
        relation(rho(i, 2), right)

    # family (d): conjugation of B_ij by rho_k, k != j
    for i, j in pairs:
        for k in range(1, n + 1):
            if k == j:
                continue
            lhs = prod(rho(k), B(i, j), rho(k, -1))
            if k < i or j < k:
                relation(lhs, B(i, j))
            elif k == i:
                relation(lhs, prod(rho(j, -1), B(i, j, -1), rho(j)))
            else:  # i < k < j
                relation(lhs, prod(rho(j, -1), B(k, j, -1), rho(j), B(k, j, -1),
                                   B(i, j), B(k, j), rho(j, -1), B(k, j), rho(j)))

    return Presentation(f"P{n}(RP2)", alphabet, tuple(relators))


def rp2_strand_count(p: Presentation) -> Optional[int]:
    """Strand count when p carries an atlas P_n(RP2) name, else None."""
    m = _RP2_NAME_RE.fullmatch(p.name)
    return int(m.group(1)) if m else None


def _rp2_word_helpers(n: int):
    p = pure_braid_rp2(n)
    index = {sym.name: sym.index for sym in p.alphabet}

    def B(i: int, j: int, exp: int = 1) -> Word:
        return Word.generator(p.alphabet, index[_b_name(i, j)], exp)

    def rho(k: int, exp: int = 1) -> Word:
        return Word.generator(p.alphabet, index[f"rho{k}"], exp)

    return p, B, rho


def b_ij_as_rho(n: int, i: int, j: int) -> Word:
    """The rho-word rho_j rho_i^-1 rho_j^-1 rho_i equal to B_ij."""
    if not 1 <= i < j <= n:
        raise AtlasError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    _, _, rho = _rp2_word_helpers(n)
    return rho(j) * rho(i, -1) * rho(j, -1) * rho(i)


def tau_component(n: int, i: int, form: str = "B") -> Word:
    """The i-th factor of the central element, in either displayed form.

    B-form: B_i(i+1) ... B_in (empty product when i = n).
    rho-form: B_(i-1)i^-1 ... B_1i^-1 rho_i^2.
    The two forms are equal in the group, not as free words.
    """
    if not 1 <= i <= n:
        raise AtlasError(f"need 1 <= i <= n, got i={i}, n={n}")
    p, B, rho = _rp2_word_helpers(n)
    if form == "B":
        out = Word.identity(p.alphabet)
        for j in range(i + 1, n + 1):
            out = out * B(i, j)
        return out
    if form == "rho":
        out = Word.identity(p.alphabet)
        for a in range(i - 1, 0, -1):
            out = out * B(a, i, -1)
        return out * rho(i, 2)
    raise AtlasError(f"form must be 'B' or 'rho', got {form!r}")


def tau_n(n: int, form: str = "B") -> Word:
    """The generator of the center of P_n(RP2): tau_n1 * ... * tau_nn."""
    if n < 1:
        raise AtlasError("strand count must be >= 1")
    p, _, _ = _rp2_word_helpers(n)
    out = Word.identity(p.alphabet)
    for i in range(1, n + 1):
        out = out * tau_component(n, i, form)
    return out


# small fixed presentations -------------------------------------------------

def pi1_nonorientable(k: int) -> Presentation:
    """Fundamental group of the nonorientable surface with k crosscaps."""
    if k < 1:
        raise AtlasError("crosscap count must be >= 1")
    gens = [f"rho{j}" for j in range(1, k + 1)]
    rel = " ".join(f"rho{j}^2" for j in range(1, k + 1))
    return presentation(f"pi1(N{k})", gens, [rel])


def klein_presentation() -> Presentation:
    return presentation("pi1(Klein)", ["x", "y"], ["x^2 = y^2"])


def torus_presentation() -> Presentation:
    return presentation("pi1(T2)", ["a", "b"], ["a b a^-1 b^-1"])


def quaternion_presentation() -> Presentation:
    return presentation("Q8", ["rho1", "rho2"],
                        ["rho1^2 = rho2^2", "rho1^4",
                         "rho1 rho2 rho1^-1 = rho2^-1"])


# centers --------------------------------------------------------------------

@dataclass(frozen=True)
class CenterDescription:
    """Stated center of P_n(surface).

    ``generator_words`` are present only when the atlas has the matching
    presentation; otherwise the generators stay symbolic.
    """

    kind: str  # "trivial" | "free-abelian-rank-2" | "cyclic-generated" | "finite-as-stated"
    generator_words: tuple[Word, ...]
    symbolic_generators: tuple[str, ...]
    label: str


def center_table(surface: SurfaceKind, n: int) -> CenterDescription:
    if n < 1:
        raise AtlasError("strand count must be >= 1")
    if surface.orientable:
        if surface.genus >= 2:
            return CenterDescription("trivial", (), (), "trivial")
        if surface == TORUS:
            return CenterDescription(
                "free-abelian-rank-2", (), ("a~", "b~"),
                "free abelian of rank 2 on the central loops a~, b~")
        # sphere
        if n >= 3:
            return CenterDescription(
                "finite-as-stated", (), (), "Z_2^2 (as stated)")
        return CenterDescription("trivial", (), (), "trivial")
    if surface == RP2:
        if n == 1:
            p = pure_braid_rp2(1)
            return CenterDescription(
                "cyclic-generated", (p.gen("rho1"),), (),
                "the whole group Z/2 (abelian)")
        return CenterDescription(
            "cyclic-generated", (tau_n(n),), (),
            f"cyclic, generated by tau_{n}")
    return CenterDescription("trivial", (), (), "trivial")


# strand forgetting -----------------------------------------------------------

def forget_strands_hom(n: int, m: int) -> GroupHom:
    """The strand-forgetting map P_n(RP2) -> P_m(RP2), m < n.

    Generators with all indices <= m map to their namesakes, the rest
    die.  Returned unverified; run hom_check with a target oracle.
    """
    if not 1 <= m < n:
        raise AtlasError(f"need 1 <= m < n, got m={m}, n={n}")
    source = pure_braid_rp2(n)
    target = pure_braid_rp2(m)
    images = []
    for i, j in _b_pairs(n):
        if j <= m:
            images.append(target.gen(_b_name(i, j)))
        else:
            images.append(Word.identity(target.alphabet))
    for k in range(1, n + 1):
        if k <= m:
            images.append(target.gen(f"rho{k}"))
        else:
            images.append(Word.identity(target.alphabet))
    return GroupHom(source, target, tuple(images))


__all__ = [
    "AtlasError", "CenterDescription", "b_ij_as_rho", "center_table",
    "forget_strands_hom", "klein_presentation", "pi1_nonorientable",
    "pure_braid_rp2", "quaternion_presentation", "rp2_strand_count",
    "tau_component", "tau_n", "torus_presentation",
]

"""Finite and affine Weyl group actions on the coweight space.

Weyl group elements are words in the simple reflections (1-based letters).
Words compose right to left: ``apply_word(rs, (a, b), lam) == s_a(s_b(lam))``.
An :class:`AffineElement` ``t_mu w`` acts by ``lam -> w(lam) + mu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rootsys import Coweight, Root, RootSystem, RootSystemError, pairing

WeylWord = tuple  # tuple[int, ...]


def _check_letter(rs: RootSystem, i: int):
    if not isinstance(i, int) or not 1 <= i <= rs.rank:
        raise RootSystemError(f"reflection index {i!r} out of range 1..{rs.rank}")


def apply_reflection(rs: RootSystem, i: int, lam: Coweight) -> Coweight:
    """``s_i(lam) = lam - <lam, alpha_i> alpha_i^vee``."""
    _check_letter(rs, i)
    c = lam[i - 1]
    if not c:
        return tuple(lam)
    row = rs.cartan[i - 1]
    return tuple(x - c * a for x, a in zip(lam, row))


def _reflect_inplace(cartan, i0: int, v: list):
    c = v[i0]
    if c:
        row = cartan[i0]
        for k in range(len(v)):
            if row[k]:
                v[k] -= c * row[k]


def apply_word(rs: RootSystem, w: Sequence[int], lam: Coweight) -> Coweight:
    v = list(lam)
    for i in reversed(w):
        _check_letter(rs, i)
        _reflect_inplace(rs.cartan, i - 1, v)
    return tuple(v)


def apply_reflection_root(rs: RootSystem, i: int, beta: Root) -> Root:
    """``s_i(beta) = beta - <beta, alpha_i^vee> alpha_i`` in simple-root coordinates."""
    _check_letter(rs, i)
    row = rs.cartan[i - 1]
    c = sum(b * a for b, a in zip(beta, row))
    out = list(beta)
    out[i - 1] -= c
    return tuple(out)


def apply_word_root(rs: RootSystem, w: Sequence[int], beta: Root) -> Root:
    for i in reversed(w):
        beta = apply_reflection_root(rs, i, beta)
    return tuple(beta)


def inverse_word(w: Sequence[int]) -> WeylWord:
    return tuple(reversed(w))


def fold_to_chamber(rs: RootSystem, lam: Coweight, subset=None) -> tuple[Coweight, WeylWord]:
    """Fold ``lam`` into the dominant chamber.

    Returns ``(dominant, w)`` with ``apply_word(rs, w, lam) == dominant``.
    The lowest-index negative coordinate is reflected first, which makes ``w``
    reduced and deterministic.  With ``subset`` only those reflections are
    used and only those coordinates are made nonnegative.
    """
    v = list(lam)
    nodes = range(rs.rank) if subset is None else sorted(i - 1 for i in subset)
    letters = []
    cartan = rs.cartan
    while True:
        for i0 in nodes:
            if v[i0] < 0:
                _reflect_inplace(cartan, i0, v)
                letters.append(i0 + 1)
                break
        else:
            break
    return tuple(v), tuple(reversed(letters))


def _rho(rs: RootSystem) -> tuple:
    return (1,) * rs.rank


def word_from_rho_image(rs: RootSystem, image: Sequence) -> WeylWord:
    """The canonical reduced word of the unique ``w`` with ``w(rho^vee) == image``."""
    _, v = fold_to_chamber(rs, image)
    return inverse_word(v)


def reduce(rs: RootSystem, w: Sequence[int]) -> WeylWord:
    """Canonical reduced word: the lexicographically least reduced expression."""
    return word_from_rho_image(rs, apply_word(rs, w, _rho(rs)))


def weyl_equal(rs: RootSystem, u: Sequence[int], v: Sequence[int]) -> bool:
    return apply_word(rs, u, _rho(rs)) == apply_word(rs, v, _rho(rs))


def length(rs: RootSystem, w: Sequence[int]) -> int:
    """Inversion count ``|{beta > 0 : w(beta) < 0}|``."""
    n = 0
    for beta in rs.positive_roots:
        img = apply_word_root(rs, w, beta)
        if any(x < 0 for x in img):
            n += 1
    return n


def longest_element(rs: RootSystem, subset=None) -> WeylWord:
    """Reduced word of the longest element of the parabolic subgroup ``W_subset``."""
    if subset is None:
        subset = range(1, rs.rank + 1)
    subset = frozenset(subset)
    for i in subset:
        _check_letter(rs, i)
    if not subset:
        return ()
    start = tuple(-1 if (k + 1) in subset else 0 for k in range(rs.rank))
    _, v = fold_to_chamber(rs, start, subset)
    return reduce(rs, v)


def reflection_word(rs: RootSystem, beta: Root) -> WeylWord:
    """A word for the reflection ``s_beta`` of a positive root ``beta``."""
    beta = tuple(beta)
    if beta not in rs.root_set or any(x < 0 for x in beta):
        raise RootSystemError(f"{beta} is not a positive root")
    path = []
    while sum(beta) > 1:
        for i in range(1, rs.rank + 1):
            row = rs.cartan[i - 1]
            if sum(b * a for b, a in zip(beta, row)) > 0:
                beta = apply_reflection_root(rs, i, beta)
                path.append(i)
                break
    j = beta.index(1) + 1
    # s_beta = u s_j u^{-1} with beta = u(alpha_j), u = s_{p1} ... s_{pk}
    return reduce(rs, tuple(path) + (j,) + tuple(reversed(path)))


# --------------------------------------------------------------------------
# affine elements


@dataclass(frozen=True)
class AffineElement:
    """``t_translation o w``: acts as ``lam -> w(lam) + translation``."""

    translation: tuple
    weyl: WeylWord = ()

    def __str__(self):
        from .exact import fmt_vec

        parts = []
        if any(self.translation):
            parts.append(f"t({fmt_vec(self.translation)})")
        if self.weyl:
            parts.append(" ".join(f"s{i}" for i in self.weyl))
        return " · ".join(parts) if parts else "1"


def identity(rs: RootSystem) -> AffineElement:
    return AffineElement(rs.origin(), ())


def translation(rs: RootSystem, mu: Coweight) -> AffineElement:
    return AffineElement(tuple(Fraction(x) for x in mu), ())


def weyl_element(rs: RootSystem, w: Sequence[int]) -> AffineElement:
    return AffineElement(rs.origin(), reduce(rs, w))


def affine_apply(rs: RootSystem, a: AffineElement, lam: Coweight) -> Coweight:
    img = apply_word(rs, a.weyl, lam)
    return tuple(Fraction(x) + y for x, y in zip(img, a.translation))


def compose(rs: RootSystem, a: AffineElement, b: AffineElement) -> AffineElement:
    """``a o b``: ``(t_mu w)(t_nu v) = t_{mu + w(nu)} (w v)``."""
    shift = apply_word(rs, a.weyl, b.translation)
    return AffineElement(
        tuple(Fraction(x) + y for x, y in zip(a.translation, shift)),
        reduce(rs, tuple(a.weyl) + tuple(b.weyl)),
    )


def inverse(rs: RootSystem, a: AffineElement) -> AffineElement:
    winv = inverse_word(a.weyl)
    back = apply_word(rs, winv, a.translation)
    return AffineElement(tuple(-Fraction(x) for x in back), reduce(rs, winv))


def affine_equal(rs: RootSystem, a: AffineElement, b: AffineElement) -> bool:
    """Equality as affine maps (checked on the origin and the coweight basis)."""
    if tuple(a.translation) != tuple(b.translation):
        return False
    return weyl_equal(rs, a.weyl, b.weyl)


def affine_reflection(rs: RootSystem, beta: Root, k: int) -> AffineElement:
    """``s_{beta,k}: lam -> lam - (<lam, beta> - k) beta^vee``."""
    cor = rs.coroot_of(beta)
    return AffineElement(tuple(k * c for c in cor), reflection_word(rs, beta))


def s0(rs: RootSystem) -> AffineElement:
    return affine_reflection(rs, rs.highest_root, 1)


def in_alcove(rs: RootSystem, lam: Coweight) -> bool:
    return all(x >= 0 for x in lam) and pairing(lam, rs.highest_root) <= 1


def fold_to_alcove(rs: RootSystem, lam: Coweight) -> tuple[Coweight, AffineElement]:
    """Fold ``lam`` into the closed fundamental alcove.

    Alternates chamber folding with the affine reflection ``s_{alpha_0,1}``
    while ``<lam, alpha_0> > 1``.  Returns ``(pt, a)`` with ``a`` in the affine
    Weyl group (translation in ``Q^vee``) and ``affine_apply(rs, a, lam) == pt``.
    """
    top = rs.highest_root
    cor0 = rs.highest_coroot()
    cartan = rs.cartan
    r = rs.rank
    v = [Fraction(x) for x in lam]
    # track the linear part through its image of rho^vee
    rho_img = [1] * r
    while True:
        while True:
            for i0 in range(r):
                if v[i0] < 0:
                    _reflect_inplace(cartan, i0, v)
                    _reflect_inplace(cartan, i0, rho_img)
                    break
            else:
                break
        h = sum(n * x for n, x in zip(top, v))
        if h <= 1:
            break
        # s_{alpha_0,1}; its linear part is s_{alpha_0}
        v = [x - (h - 1) * c for x, c in zip(v, cor0)]
        hr = sum(n * x for n, x in zip(top, rho_img))
        rho_img = [x - hr * c for x, c in zip(rho_img, cor0)]
    w = word_from_rho_image(rs, rho_img)
    moved = apply_word(rs, w, lam)
    shift = tuple(p - Fraction(m) for p, m in zip(v, moved))
    return tuple(v), AffineElement(shift, w)

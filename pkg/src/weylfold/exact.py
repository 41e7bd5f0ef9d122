"""Exact rational and integer linear algebra used across the package.

Everything here works on plain Python ``int`` and ``fractions.Fraction``;
no floating point is ever involved.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple  # tuple of Fraction (or int)


def frac(x) -> Fraction:
    """Parse ``x`` (int, Fraction, or a ``"p/q"`` string) as an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {x!r}") from exc
    raise TypeError(f"cannot interpret {x!r} as a rational")


def fmt(x: Fraction) -> str:
    """Render a rational as ``"p/q"`` (or ``"p"`` when integral)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def fmt_vec(v: Iterable) -> str:
    return ",".join(fmt(x) for x in v)


def parse_vec(s: str) -> tuple[Fraction, ...]:
    parts = [p for p in s.split(",")]
    return tuple(frac(p) for p in parts)


def dot(a: Sequence, b: Sequence):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


# --------------------------------------------------------------------------
# rational systems


def solve(rows: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Solve the square system ``rows @ x = rhs``; ``None`` if singular."""
    n = len(rows)
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        if p != 1:
            m[col] = [v / p for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return tuple(m[r][n] for r in range(n))


def inverse(mat: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(mat)
    cols = []
    for k in range(n):
        e = [Fraction(int(i == k)) for i in range(n)]
        x = solve(mat, e)
        if x is None:
            raise ZeroDivisionError("singular matrix")
        cols.append(x)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def determinant(mat: Sequence[Sequence]) -> Fraction:
    n = len(mat)
    m = [[Fraction(v) for v in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / p
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


# --------------------------------------------------------------------------
# integer lattices


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix.

    The result is upper triangular with positive pivots, entries above each
    pivot reduced into ``[0, pivot)``, and zero rows dropped.  Two generating
    sets span the same lattice iff their HNFs are equal.
    """
    a = [[int(v) for v in row] for row in rows]
    if not a:
        return []
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        # gcd-eliminate column c among rows r..end
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[piv] = a[piv], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < len(a) and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == len(a):
                break
    out = [row for row in a[:r] if any(row)]
    return out


def hnf_solve(basis: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...] | None:
    """Integer coefficients ``x`` with ``x @ basis == v`` for a full-rank HNF basis.

    Returns ``None`` when ``v`` is not in the row lattice.
    """
    n = len(basis)
    rest = [int(x) for x in v]
    coeffs = []
    for i in range(n):
        row = basis[i]
        piv_col = next(c for c, x in enumerate(row) if x)
        # earlier pivots have already cleared their columns
        if any(rest[c] for c in range(piv_col)):
            return None
        q, rem = divmod(rest[piv_col], row[piv_col])
        if rem:
            return None
        coeffs.append(q)
        rest = [a - q * b for a, b in zip(rest, row)]
    if any(rest):
        return None
    return tuple(coeffs)


# --------------------------------------------------------------------------
# Fourier-Motzkin feasibility


def _normalize(coeffs, bound):
    """Scale ``coeffs.x <= bound`` so the coefficients are coprime integers."""
    fr = [Fraction(v) for v in coeffs]
    den = 1
    for v in fr:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in fr]
    b = Fraction(bound) * den
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        return tuple(ints), b
    return tuple(v // g for v in ints), b / g


def fm_feasible(constraints: Iterable[tuple[Sequence, object]]) -> bool:
    """Decide whether ``{x : a.x <= b for (a, b) in constraints}`` is nonempty.

    Exact Fourier-Motzkin elimination with duplicate removal.  Equalities
    must be passed as two opposite inequalities.
    """
    rows = {}
    for a, b in constraints:
        key, bound = _normalize(a, b)
        if key in rows:
            rows[key] = min(rows[key], bound)
        else:
            rows[key] = bound
    if not rows:
        return True
    dim = len(next(iter(rows)))
    system = [(list(k), v) for k, v in rows.items()]
    for col in range(dim):
        pos, neg, zero = [], [], []
        for a, b in system:
            if a[col] > 0:
                pos.append((a, b))
            elif a[col] < 0:
                neg.append((a, b))
            else:
                zero.append((a, b))
        new = {}
        for a, b in zero:
            key = tuple(a)
            new[key] = min(new.get(key, b), b)
        for ap, bp in pos:
            for an, bn in neg:
                cp, cn = ap[col], -an[col]
                a = [cn * x + cp * y for x, y in zip(ap, an)]
                b = cn * bp + cp * bn
                key, bound = _normalize(a, b)
                new[key] = min(new.get(key, bound), bound)
        system = [(list(k), v) for k, v in new.items()]
        for a, b in system:
            if not any(a) and b < 0:
                return False
    return all(b >= 0 for a, b in system if not any(a))


def rank(mat: Sequence[Sequence]) -> int:
    m = [[Fraction(v) for v in row] for row in mat]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r

"""Independent brute-force oracles for cross-checking the engine.

Everything here works on raw exponent tuples and plain integers, with no
Groebner machinery: monomial-ideal arithmetic has closed forms (sums for
products, componentwise max for intersections, saturation by gcd for
colons), and low-degree colon membership can be decided by linear algebra
over F_p.  These stay deliberately separate from the library code paths
they validate.
"""
from __future__ import annotations

import random
from itertools import product as iter_product


# -- monomial-ideal arithmetic on exponent tuples ---------------------------

def m_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(monos) -> tuple:
    """Minimal generating set of a monomial ideal, sorted for comparison."""
    monos = sorted(set(monos))
    keep = []
    for m in monos:
        if not any(o != m and m_divides(o, m) for o in monos):
            keep.append(m)
    return tuple(sorted(keep))


def mono_product(A, B) -> tuple:
    return minimalize(tuple(x + y for x, y in zip(a, b)) for a in A for b in B)


def mono_power(A, n: int) -> tuple:
    if n == 0:
        return (tuple([0] * len(A[0])),)
    result = A
    for _ in range(n - 1):
        result = mono_product(result, A)
    return minimalize(result)


def mono_intersection(A, B) -> tuple:
    return minimalize(tuple(max(x, y) for x, y in zip(a, b)) for a in A for b in B)


def mono_colon_single(A, u: tuple) -> tuple:
    # (m_i) : u is generated by m_i / gcd(m_i, u).
    return minimalize(tuple(max(x - y, 0) for x, y in zip(a, u)) for a in A)


def mono_colon(A, B) -> tuple:
    result = None
    for b in B:
        c = mono_colon_single(A, b)
        result = c if result is None else mono_intersection(result, c)
    return result


def random_monomial(rng: random.Random, nvars: int, max_deg: int) -> tuple:
    deg = rng.randint(1, max_deg)
    exps = [0] * nvars
    for _ in range(deg):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def random_monomial_ideal(rng: random.Random, nvars: int, max_deg: int, max_gens: int) -> tuple:
    gens = {random_monomial(rng, nvars, max_deg) for _ in range(rng.randint(1, max_gens))}
    return minimalize(gens)


# -- linear-algebra colon membership over F_p -------------------------------

def monomials_up_to(nvars: int, max_deg: int) -> list[tuple]:
    out = []
    for exps in iter_product(range(max_deg + 1), repeat=nvars):
        if sum(exps) <= max_deg:
            out.append(tuple(exps))
    out.sort()
    return out


def _rref_mod_p(rows: list[list[int]], p: int) -> list[list[int]]:
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [row for row in rows[:r] if any(v % p for v in row)]


def linear_colon_kernel(
    ideal_gens: tuple, ell: dict, nvars: int, max_deg: int, p: int
) -> list[dict]:
    """Basis of { f : deg f <= max_deg, ell * f in (ideal_gens) } over F_p.

    `ell` maps exponent tuples to coefficients (any polynomial works).
    Membership of a polynomial in a monomial ideal is monomial-wise, so the
    constraint is that every product monomial outside the ideal cancels.
    """
    unknowns = monomials_up_to(nvars, max_deg)
    col_of = {m: i for i, m in enumerate(unknowns)}
    constraint_rows: dict[tuple, list[int]] = {}
    for u in unknowns:
        for lm, lc in ell.items():
            target = tuple(a + b for a, b in zip(u, lm))
            if any(m_divides(g, target) for g in ideal_gens):
                continue
            row = constraint_rows.setdefault(target, [0] * len(unknowns))
            row[col_of[u]] = (row[col_of[u]] + lc) % p
    matrix = _rref_mod_p(list(constraint_rows.values()), p)
    # Kernel extraction: free columns parameterize solutions.
    pivot_cols = {}
    for row in matrix:
        lead = next(i for i, v in enumerate(row) if v % p)
        pivot_cols[lead] = row
    basis = []
    for free in range(len(unknowns)):
        if free in pivot_cols:
            continue
        vec = [0] * len(unknowns)
        vec[free] = 1
        for lead, row in pivot_cols.items():
            vec[lead] = (-row[free]) % p
        basis.append({unknowns[i]: v for i, v in enumerate(vec) if v % p})
    return basis


def poly_in_monomial_ideal(poly: dict, ideal_gens: tuple) -> bool:
    return all(any(m_divides(g, m) for g in ideal_gens) for m in poly)

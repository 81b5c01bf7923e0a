"""Multivariate division, Buchberger's algorithm, and variable elimination.

The completion loop uses the normal selection strategy (smallest lcm degree
first) together with the product and chain criteria.  Output bases are
reduced and monic, hence unique per ideal and order, which is what the
ideal-equality machinery upstream relies on.
"""
from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .polyring import (
    MonomialOrder,
    PolyRing,
    Polynomial,
    PolyringError,
    RingMismatchError,
)

DEFAULT_DEGREE_CAP = 60
_active_degree_cap = DEFAULT_DEGREE_CAP


def set_degree_cap(cap: int) -> int:
    """Set the process-wide degree cap used when callers pass none;
    returns the previous value so it can be restored."""
    global _active_degree_cap
    previous = _active_degree_cap
    _active_degree_cap = cap
    return previous


class DegreeCapExceeded(PolyringError):
    """A basis element exceeded the configured total-degree cap."""

    def __init__(self, degree: int, cap: int):
        super().__init__(f"basis element of degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


class GroebnerBasis:
    __slots__ = ("ring", "order", "basis", "reduced")

    def __init__(self, ring: PolyRing, basis: Sequence[Polynomial], reduced: bool = True):
        self.ring = ring
        self.order = ring.order
        self.basis = tuple(basis)
        self.reduced = reduced

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and other.ring == self.ring
            and other.basis == self.basis
        )

    def __hash__(self):
        return hash((self.ring, self.basis))

    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_monomial() and \
            self.basis[0].lead_monomial.total_degree == 0

    def __repr__(self):
        return f"GroebnerBasis({len(self.basis)} elements, {self.order.kind})"


def _reduce_dict(work: dict, reducers: list, ring: PolyRing) -> dict:
    """Fully reduce `work` (a term dict) modulo `reducers`; returns remainder.

    reducers: list of (lead monomial, lead coeff, term tuple).
    """
    field = ring.field
    key = ring.order.key
    remainder: dict = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if c == field.zero:
            continue
        hit = None
        for lm, lc, terms in reducers:
            if lm.divides(m):
                hit = (lm, lc, terms)
                break
        if hit is None:
            remainder[m] = c
            continue
        lm, lc, terms = hit
        q = field.div(c, lc)
        shift = m.div(lm)
        for mm, cc in terms:
            if mm == lm:
                continue
            target = mm.mul(shift)
            s = field.sub(work.get(target, field.zero), field.mul(cc, q))
            if s == field.zero:
                work.pop(target, None)
            else:
                work[target] = s
    return remainder


def _as_reducers(basis: Sequence[Polynomial], ring: PolyRing) -> list:
    # Small lead monomials first: cheap reducers are tried before big ones.
    reducers = [(g.lead_monomial, g.lead_coeff, g.terms) for g in basis if g]
    reducers.sort(key=lambda r: ring.order.key(r[0]))
    return reducers


def normal_form(f: Polynomial, G: "GroebnerBasis | Sequence[Polynomial]") -> Polynomial:
    """Remainder of f on division by G; zero iff f lies in the ideal when G
    is a Groebner basis."""
    if isinstance(G, GroebnerBasis):
        if G.ring != f.ring:
            raise RingMismatchError("normal_form: ring or order mismatch")
        basis = G.basis
    else:
        basis = tuple(G)
        for g in basis:
            if g.ring != f.ring:
                raise RingMismatchError("normal_form: ring or order mismatch")
    if f.is_zero():
        return f
    remainder = _reduce_dict(dict(f.terms), _as_reducers(basis, f.ring), f.ring)
    return f.ring.from_dict(remainder)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    field = f.ring.field
    lf, lg = f.lead_monomial, g.lead_monomial
    lcm = lf.lcm(lg)
    mf = f.mul_term(lcm.div(lf), field.inv(f.lead_coeff))
    mg = g.mul_term(lcm.div(lg), field.inv(g.lead_coeff))
    return mf - mg


def _interreduce(basis: list[Polynomial], ring: PolyRing) -> list[Polynomial]:
    # Minimalize: drop elements whose lead is divisible by another lead.
    basis = [g for g in basis if g]
    basis.sort(key=lambda g: ring.order.key(g.lead_monomial))
    minimal: list[Polynomial] = []
    for g in basis:
        if not any(h.lead_monomial.divides(g.lead_monomial) for h in minimal):
            minimal.append(g)
    # Tail-reduce each element against the others.
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = normal_form(g, others) if others else g
        if r:
            reduced.append(r.monic())
    reduced.sort(key=lambda g: ring.order.key(g.lead_monomial))
    return reduced


def buchberger(
    generators: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    degree_cap: int | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by `generators`.

    If `order` differs from the generators' ring order, computation happens
    in a re-ordered copy of the ring.
    """
    if degree_cap is None:
        degree_cap = _active_degree_cap
    gens = [g for g in generators]
    if not gens:
        raise PolyringError("buchberger: empty generator list")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("buchberger: generators from different rings")
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        gens = [ring.from_dict(g.as_dict()) for g in gens]

    # Seed the working basis by sequential reduction; unlike lead-term
    # minimalization this never changes the generated ideal.
    basis: list[Polynomial] = []
    for g in sorted((g for g in gens if g), key=lambda g: ring.order.key(g.lead_monomial)):
        r = normal_form(g, basis) if basis else g
        if r:
            basis.append(r.monic())
    if not basis:
        return GroebnerBasis(ring, (), reduced=True)

    key = ring.order.key
    heap: list = []
    done: set[tuple[int, int]] = set()

    def add_pairs(k: int):
        lk = basis[k].lead_monomial
        for i in range(k):
            lcm = basis[i].lead_monomial.lcm(lk)
            heapq.heappush(heap, (lcm.total_degree, key(lcm), i, k))

    for k in range(len(basis)):
        add_pairs(k)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        done.add((i, j))
        fi, fj = basis[i], basis[j]
        li, lj = fi.lead_monomial, fj.lead_monomial
        if fi.is_monomial() and fj.is_monomial():
            continue  # S-polynomial of two monomials is 0
        if li.is_coprime(lj):
            continue  # product criterion
        lcm = li.lcm(lj)
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if basis[k].lead_monomial.divides(lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True  # chain criterion
                    break
        if skip:
            continue
        r = normal_form(s_polynomial(fi, fj), basis)
        if r.is_zero():
            continue
        if r.total_degree > degree_cap:
            raise DegreeCapExceeded(r.total_degree, degree_cap)
        basis.append(r.monic())
        add_pairs(len(basis) - 1)

    return GroebnerBasis(ring, _interreduce(basis, ring), reduced=True)


def eliminate(
    generators: Sequence[Polynomial],
    drop: Iterable[str],
    degree_cap: int | None = None,
) -> list[Polynomial]:
    """Generators of <generators> intersected with the subring on the
    variables outside `drop`, via a block elimination order.

    The result is returned in the original ring (dropped variables simply do
    not occur).
    """
    gens = list(generators)
    if not gens:
        return []
    ring = gens[0].ring
    drop = list(dict.fromkeys(drop))
    for v in drop:
        if v not in ring.variables:
            raise PolyringError(f"cannot eliminate {v!r}: not a ring variable")
    if len(drop) == len(ring.variables):
        raise PolyringError("cannot eliminate every variable")
    if not drop:
        return list(buchberger(gens, degree_cap=degree_cap).basis)

    keep = [v for v in ring.variables if v not in drop]
    block_ring = PolyRing(
        tuple(drop) + tuple(keep), ring.field, MonomialOrder.elimination(len(drop))
    )
    moved = [block_ring.convert(g) for g in gens]
    gb = buchberger(moved, degree_cap=degree_cap)
    ndrop = len(drop)
    survivors = [g for g in gb.basis if all(m[:ndrop] == (0,) * ndrop for m, _ in g.terms)]
    return [ring.convert(g) for g in survivors]

"""Ideal arithmetic in R = (P/J) localized at the ideal of variables.

Ideals of R are handled through lifted generators in the ambient polynomial
ring P; every handle caches the reduced Groebner basis of (generators + J),
so handle comparison is exact.  Equality and membership are decided in the
LOCAL sense: a ∈ B_m iff the colon (B : a) is not contained in m, i.e. it
contains a unit.  Since m is the ideal of the variables, "contains a unit"
is simply "some reduced-basis element has a nonzero constant term".
"""
from __future__ import annotations

from typing import Sequence

from .groebner import GroebnerBasis, buchberger, eliminate, normal_form
from .polyring import (
    PolyRing,
    Polynomial,
    PolyringError,
    RingMismatchError,
    monomials_of_degree,
)


class IdealcalcError(PolyringError):
    pass


_AUX = "w"


def _aux_name(ring: PolyRing) -> str:
    name = _AUX
    while name in ring.variables:
        name += "w"
    return name


class QuotientRing:
    """Presentation of the local ring (P/J) localized at m = (variables)."""

    def __init__(self, ambient: PolyRing, relations: Sequence[Polynomial] = ()):
        self.ambient = ambient
        rels = []
        for f in relations:
            if f.ring != ambient:
                raise RingMismatchError("relation from a different ring")
            if f.is_zero():
                continue
            if f.constant_term != ambient.field.zero:
                raise IdealcalcError(
                    f"relation {f} has a nonzero constant term; "
                    "the ideal of variables would not survive the quotient"
                )
            rels.append(f)
        self.relations = tuple(rels)
        self._gbJ: GroebnerBasis | None = None
        self._m_powers: dict[int, IdealHandle] = {}
        # Write-once memo for ideal operations; results depend only on the
        # lifted ideals, so reduced bases are sound cache keys.
        self._op_cache: dict = {}
        if self.relations:
            gb = self.gbJ
            if gb.is_unit_ideal():
                raise IdealcalcError("relations generate the unit ideal")

    @property
    def gbJ(self) -> GroebnerBasis:
        if self._gbJ is None:
            if self.relations:
                self._gbJ = buchberger(self.relations)
            else:
                self._gbJ = GroebnerBasis(self.ambient, (), reduced=True)
        return self._gbJ

    @property
    def is_ambient_regular(self) -> bool:
        return not self.relations

    def ideal(self, gens: Sequence[Polynomial]) -> "IdealHandle":
        return IdealHandle(self, gens)

    def parse_ideal(self, gens: Sequence[str]) -> "IdealHandle":
        return IdealHandle(self, [self.ambient.parse(s) for s in gens])

    def zero_ideal(self) -> "IdealHandle":
        return IdealHandle(self, ())

    def maximal_ideal(self) -> "IdealHandle":
        return self.m_power(1)

    def m_power(self, k: int) -> "IdealHandle":
        """The k-th power of the maximal ideal, generated by the degree-k
        monomials (k = 0 gives the unit ideal, for internal bootstrapping)."""
        if k < 0:
            raise IdealcalcError("negative power of the maximal ideal")
        if k not in self._m_powers:
            if k == 0:
                handle = IdealHandle(self, (self.ambient.one(),))
            else:
                gens = [self.ambient.monomial(m) for m in monomials_of_degree(self.ambient.nvars, k)]
                handle = IdealHandle(self, gens)
            self._m_powers[k] = handle
        return self._m_powers[k]

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of a lift modulo the relations."""
        return normal_form(f, self.gbJ) if self.relations else f

    def __eq__(self, other):
        return (
            isinstance(other, QuotientRing)
            and other.ambient == self.ambient
            and other.relations == self.relations
        )

    def __hash__(self):
        return hash((self.ambient, self.relations))

    def __repr__(self):
        rel = ", ".join(str(f) for f in self.relations) or "0"
        return f"QuotientRing({self.ambient!r} / ({rel}))"


class IdealHandle:
    """Ideal of R given by lifted generators, with cached reduced GB of
    (generators + relations)."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: QuotientRing, gens: Sequence[Polynomial]):
        self.ring = ring
        checked = []
        for g in gens:
            if g.ring != ring.ambient:
                raise RingMismatchError("generator from a different ring")
            if g:
                checked.append(g)
        self.gens = tuple(checked)
        self._gb: GroebnerBasis | None = None

    @property
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            gens = list(self.gens) + list(self.ring.relations)
            if gens:
                self._gb = buchberger(gens)
            else:
                self._gb = GroebnerBasis(self.ring.ambient, (), reduced=True)
        return self._gb

    def effective_gens(self) -> list[Polynomial]:
        """Basis elements that survive modulo the relations (nonzero in R)."""
        return [g for g in self.gb.basis if self.ring.reduce(g)]

    def is_zero_local(self) -> bool:
        return self.gb.basis == self.ring.gbJ.basis

    def contains_unit_local(self) -> bool:
        # C is the unit ideal locally iff C is not inside m, iff some reduced
        # basis element has a nonzero constant term.
        zero = self.ring.ambient.field.zero
        return any(g.constant_term != zero for g in self.gb.basis)

    def is_proper_local(self) -> bool:
        return not self.contains_unit_local()

    def same_lift(self, other: "IdealHandle") -> bool:
        return self.ring == other.ring and self.gb.basis == other.gb.basis

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.gens) or "0"
        return f"IdealHandle({gens})"


def _check_same_ring(A: IdealHandle, B: IdealHandle):
    if A.ring != B.ring:
        raise RingMismatchError("ideals live in different rings")


def ideal_sum(A: IdealHandle, B: IdealHandle) -> IdealHandle:
    _check_same_ring(A, B)
    return IdealHandle(A.ring, A.gens + B.gens)


def ideal_product(A: IdealHandle, B: IdealHandle) -> IdealHandle:
    """Product ideal, generated by pairwise products of effective generators."""
    _check_same_ring(A, B)
    key = ("product", frozenset((A.gb.basis, B.gb.basis)))
    cached = A.ring._op_cache.get(key)
    if cached is not None:
        return cached
    gens_a = A.effective_gens() or list(A.gens)
    gens_b = B.effective_gens() or list(B.gens)
    result = IdealHandle(A.ring, [a * b for a in gens_a for b in gens_b])
    A.ring._op_cache[key] = result
    return result


def ideal_power(A: IdealHandle, n: int) -> IdealHandle:
    """n-fold ideal product; n = 0 yields the unit ideal (internal use)."""
    if n < 0:
        raise IdealcalcError("negative ideal power")
    if n == 0:
        return A.ring.m_power(0)
    result = A
    for _ in range(n - 1):
        result = ideal_product(result, A)
    return result


def times_m_power(A: IdealHandle, n: int) -> IdealHandle:
    """A * m^n, the ideals whose fullness the asymptotic indices track."""
    if n == 0:
        return A
    return ideal_product(A, A.ring.m_power(n))


def ideal_intersection(A: IdealHandle, B: IdealHandle) -> IdealHandle:
    """Intersection of the lifted ideals via the one-tag-variable trick:
    (A+J) ∩ (B+J) = ( w·(A+J) + (1-w)·(B+J) ) ∩ P."""
    _check_same_ring(A, B)
    ring = A.ring
    gens_a = list(A.gb.basis)
    gens_b = list(B.gb.basis)
    if not gens_a or not gens_b:
        return ring.zero_ideal() if not ring.relations else IdealHandle(ring, ())
    key = ("intersection", frozenset((A.gb.basis, B.gb.basis)))
    cached = ring._op_cache.get(key)
    if cached is not None:
        return cached
    aux = _aux_name(ring.ambient)
    ext = ring.ambient.extend_front([aux])
    w = ext.gen(aux)
    one = ext.one()
    mixed = [w * ext.convert(g) for g in gens_a]
    mixed += [(one - w) * ext.convert(g) for g in gens_b]
    inter = eliminate(mixed, [aux])
    back = [ring.ambient.convert(g) for g in inter]
    result = IdealHandle(ring, back)
    ring._op_cache[key] = result
    return result


def _colon_single(numerator_basis: Sequence[Polynomial], b: Polynomial) -> list[Polynomial]:
    """Generators of (N : b) in P for a single nonzero b, via
    (N ∩ (b)) · b^{-1}."""
    ring = b.ring
    if not numerator_basis:
        return []
    aux = _aux_name(ring)
    ext = ring.extend_front([aux])
    w = ext.gen(aux)
    one = ext.one()
    mixed = [w * ext.convert(g) for g in numerator_basis]
    mixed.append((one - w) * ext.convert(b))
    inter = eliminate(mixed, [aux])
    out = []
    for g in inter:
        g0 = ring.convert(g)
        q = _exact_divide(g0, b)
        out.append(q)
    return out


def _exact_divide(f: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient f/b when b divides f exactly (f is in (b))."""
    ring = f.ring
    field = ring.field
    q_terms: dict = {}
    rest = f
    lb, cb = b.lead_monomial, b.lead_coeff
    while rest:
        lm, lc = rest.lead_monomial, rest.lead_coeff
        if not lb.divides(lm):
            raise IdealcalcError("exact division failed; intersection was not a multiple")
        m = lm.div(lb)
        c = field.div(lc, cb)
        q_terms[m] = field.add(q_terms.get(m, field.zero), c)
        rest = rest - b.mul_term(m, c)
    return ring.from_dict(q_terms)


def ideal_colon(A: IdealHandle, B: IdealHandle) -> IdealHandle:
    """(A :_R B) = ∩_{b in gens(B)} ((A+J) :_P b), mapped back to R."""
    _check_same_ring(A, B)
    ring = A.ring
    gens_b = [g for g in B.gens if ring.reduce(g)]
    if not gens_b:
        raise IdealcalcError("colon by the zero ideal")
    key = ("colon", A.gb.basis, B.gb.basis)
    cached = ring._op_cache.get(key)
    if cached is not None:
        return cached
    numerator = list(A.gb.basis)
    if not numerator:
        numerator = list(ring.relations)
    result: IdealHandle | None = None
    for b in gens_b:
        cb = IdealHandle(ring, _colon_single(numerator, b))
        result = cb if result is None else ideal_intersection(result, cb)
    assert result is not None
    ring._op_cache[key] = result
    return result


def ideal_contains_local(B: IdealHandle, f: Polynomial) -> bool:
    """Does f belong to B after localization at m?

    Global membership (zero normal form) is checked first; otherwise
    f ∈ B_m iff (B : f) + m = R, i.e. the colon contains a local unit.
    """
    if f.ring != B.ring.ambient:
        raise RingMismatchError("element from a different ring")
    if normal_form(f, B.gb).is_zero():
        return True
    fbar = B.ring.reduce(f)
    if fbar.is_zero():
        return True
    key = ("contains", B.gb.basis, f)
    cached = B.ring._op_cache.get(key)
    if cached is None:
        numerator = list(B.gb.basis) or list(B.ring.relations)
        colon = IdealHandle(B.ring, _colon_single(numerator, f))
        cached = colon.contains_unit_local()
        B.ring._op_cache[key] = cached
    return cached


def ideal_contains_local_ideal(B: IdealHandle, A: IdealHandle) -> bool:
    """A ⊆ B after localization at m."""
    _check_same_ring(A, B)
    return all(ideal_contains_local(B, g) for g in A.gb.basis)


def ideal_equal_local(A: IdealHandle, B: IdealHandle) -> bool:
    """Do A and B generate the same ideal of the localization at m?"""
    _check_same_ring(A, B)
    if A.gb.basis == B.gb.basis:
        return True
    return ideal_contains_local_ideal(B, A) and ideal_contains_local_ideal(A, B)


def is_nonzerodivisor(f: Polynomial, ring: QuotientRing) -> bool:
    """Is f a regular element of the local ring?

    Tested as (J :_P f) ⊆ J after localization; elements that become zero in
    R are rejected.  Units are trivially regular.
    """
    if f.ring != ring.ambient:
        raise RingMismatchError("element from a different ring")
    fbar = ring.reduce(f)
    if fbar.is_zero():
        raise IdealcalcError("zero element: regularity is undefined for 0")
    if not ring.relations:
        return True
    annihilator = IdealHandle(ring, _colon_single(list(ring.gbJ.basis), f))
    zero = IdealHandle(ring, ())
    return ideal_equal_local(annihilator, zero)

"""The three colon-theoretic fullness predicates for proper ideals.

An ideal I of the local ring (R, m) is

* m-full          if  Im : x = I        for some x in m \\ m^2,
* full            if  I : x = I : m     for some x in m \\ m^2,
* weakly m-full   if  Im : m = I.

The first two are existential over a *general* element; the infinite
residue field of the source setting is modeled over F_p by sampling random
linear forms.  Positive answers are exact (the witness is re-verified by the
colon computation itself); negative answers after a finite number of trials
are probabilistic and reported with ``certified=False``.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from .groebner import normal_form
from .idealcalc import (
    IdealHandle,
    QuotientRing,
    ideal_colon,
    ideal_equal_local,
    ideal_product,
)
from .polyring import Polynomial, PolyringError

DEFAULT_TRIALS = 5
DEFAULT_SEED = 20260808
# Range for coefficients of sampled linear forms in characteristic zero.
_CHAR0_COEFF_RANGE = 1000


class FullnessError(PolyringError):
    pass


@dataclass(frozen=True)
class GenericElementPolicy:
    """How to model "a general element of m \\ m^2"."""

    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED

    def rng(self, label: str) -> random.Random:
        digest = hashlib.sha256(f"{self.seed}:{label}".encode()).digest()
        return random.Random(int.from_bytes(digest[:8], "big"))

    def derive(self, label: str) -> "GenericElementPolicy":
        digest = hashlib.sha256(f"{self.seed}:{label}".encode()).digest()
        return GenericElementPolicy(self.trials, int.from_bytes(digest[8:16], "big"))


@dataclass(frozen=True)
class PredicateResult:
    value: bool
    witness: Polynomial | None
    certified: bool
    trials_used: int

    def __bool__(self):
        return self.value


def sample_linear_form(ring: QuotientRing, rng: random.Random) -> Polynomial:
    """A random linear form with coefficients uniform in the field, nonzero
    modulo m^2 (degenerate presentations may absorb linear forms into m^2)."""
    amb = ring.ambient
    p = amb.characteristic
    m2 = ring.m_power(2)
    for _ in range(64):
        if p:
            coeffs = [rng.randrange(p) for _ in amb.variables]
        else:
            coeffs = [
                Fraction(rng.randint(-_CHAR0_COEFF_RANGE, _CHAR0_COEFF_RANGE))
                for _ in amb.variables
            ]
        if all(c == 0 for c in coeffs):
            continue
        ell = amb.zero()
        for c, v in zip(coeffs, amb.variables):
            ell = ell + amb.gen(v).scale(c)
        # m^2 + J is m-primary, so plain normal-form membership is already
        # the local test.
        if not normal_form(ell, m2.gb).is_zero():
            return ell
    raise FullnessError("could not sample an element of m outside m^2")


def _validate_proper(I: IdealHandle):
    if not any(I.ring.reduce(g) for g in I.gens):
        raise FullnessError("fullness predicates are undefined for the zero ideal")
    if I.contains_unit_local():
        raise FullnessError("fullness predicates are undefined for the unit ideal")


def is_weakly_m_full(I: IdealHandle) -> PredicateResult:
    """Deterministic predicate: Im : m = I."""
    _validate_proper(I)
    m = I.ring.maximal_ideal()
    value = ideal_equal_local(ideal_colon(ideal_product(I, m), m), I)
    return PredicateResult(value, None, certified=True, trials_used=0)


def is_m_full(I: IdealHandle, policy: GenericElementPolicy | None = None) -> PredicateResult:
    """Existential predicate: Im : x = I for a sampled x in m \\ m^2."""
    _validate_proper(I)
    policy = policy or GenericElementPolicy()
    ring = I.ring
    Im = ideal_product(I, ring.maximal_ideal())
    rng = policy.rng("m-full")
    for trial in range(1, policy.trials + 1):
        x = sample_linear_form(ring, rng)
        if ideal_equal_local(ideal_colon(Im, ring.ideal([x])), I):
            return PredicateResult(True, x, certified=True, trials_used=trial)
    return PredicateResult(False, None, certified=False, trials_used=policy.trials)


def is_full(I: IdealHandle, policy: GenericElementPolicy | None = None) -> PredicateResult:
    """Existential predicate: I : x = I : m for a sampled x in m \\ m^2."""
    _validate_proper(I)
    policy = policy or GenericElementPolicy()
    ring = I.ring
    colon_m = ideal_colon(I, ring.maximal_ideal())
    rng = policy.rng("full")
    for trial in range(1, policy.trials + 1):
        x = sample_linear_form(ring, rng)
        if ideal_equal_local(ideal_colon(I, ring.ideal([x])), colon_m):
            return PredicateResult(True, x, certified=True, trials_used=trial)
    return PredicateResult(False, None, certified=False, trials_used=policy.trials)


def replay_witness(I: IdealHandle, predicate: str, witness: Polynomial) -> bool:
    """Re-verify a recorded witness exactly (no sampling)."""
    _validate_proper(I)
    ring = I.ring
    if predicate == "m-full":
        Im = ideal_product(I, ring.maximal_ideal())
        return ideal_equal_local(ideal_colon(Im, ring.ideal([witness])), I)
    if predicate == "full":
        colon_m = ideal_colon(I, ring.maximal_ideal())
        return ideal_equal_local(ideal_colon(I, ring.ideal([witness])), colon_m)
    raise FullnessError(f"unknown predicate {predicate!r}")

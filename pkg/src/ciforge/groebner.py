"""Monomial orders, division with quotient tracking, and Buchberger's algorithm.

The basis computation keeps a transcript: every basis element carries a
representation over the original generators, so ideal membership can hand back
explicit cofactors without solving anything afresh.  Representations are valid
but not canonical; only the reduced basis itself is a canonical object.
"""

from __future__ import annotations

import heapq
import time
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    BuchbergerTimeout,
    ImproperIdealError,
    NotHomogeneousError,
    RingMismatchError,
)
from .fields import Scalar
from .poly import (
    Exponents,
    NOT_HOMOGENEOUS,
    Polynomial,
    PolynomialRing,
    grevlex_key,
    homogeneous_degree,
    is_homogeneous,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order with variable precedence T_0 > T_1 > ... > T_N."""

    kind: str  # "grevlex" or "lex"

    def __post_init__(self) -> None:
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, exponents: Exponents) -> tuple:
        if self.kind == "grevlex":
            return grevlex_key(exponents)
        return exponents

    @property
    def is_graded(self) -> bool:
        return self.kind == "grevlex"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def leading_monomial(p: Polynomial, order: MonomialOrder = GREVLEX) -> Exponents:
    if p.is_zero():
        raise ValueError("zero polynomial has no leading monomial")
    return max(p.terms, key=order.key)


def leading_coefficient(p: Polynomial, order: MonomialOrder = GREVLEX) -> Scalar:
    return p.terms[leading_monomial(p, order)]


# ---------------------------------------------------------------------------
# Cooperative time limit for basis computations.

_deadline: ContextVar[float | None] = ContextVar("basis_deadline", default=None)


@contextmanager
def basis_time_limit(seconds: float) -> Iterator[None]:
    """Bound the wall-clock time of basis computations started in this context."""
    token = _deadline.set(time.monotonic() + seconds)
    try:
        yield
    finally:
        _deadline.reset(token)


def _check_deadline() -> None:
    deadline = _deadline.get()
    if deadline is not None and time.monotonic() > deadline:
        raise BuchbergerTimeout("basis computation exceeded its time limit")


# ---------------------------------------------------------------------------
# Division.


@dataclass(frozen=True)
class QuotientRecord:
    """Result of multivariate division: dividend = sum(q_i * divisor_i) + remainder."""

    quotients: tuple[Polynomial, ...]
    remainder: Polynomial

    def expand(self, divisors: Sequence[Polynomial]) -> Polynomial:
        """Reassemble the dividend from quotients and remainder."""
        total = self.remainder
        for q, d in zip(self.quotients, divisors):
            total = total + q * d
        return total


def _divide_terms(
    dividend: dict[Exponents, Scalar],
    divisors: Sequence[tuple[Exponents, Scalar, dict[Exponents, Scalar]]],
    order: MonomialOrder,
) -> tuple[list[dict[Exponents, Scalar]], dict[Exponents, Scalar]]:
    """Core division loop on raw term maps.

    Each divisor is given as (leading monomial, leading coefficient, terms).
    At every step the current leading monomial of the work polynomial is
    either cancelled by the first divisor whose leading monomial divides it
    or moved to the remainder, so the loop strictly descends in the order.
    """
    work = dict(dividend)
    remainder: dict[Exponents, Scalar] = {}
    quotients: list[dict[Exponents, Scalar]] = [{} for _ in divisors]
    key = order.key
    while work:
        lm = max(work, key=key)
        lc = work[lm]
        for i, (glm, glc, gterms) in enumerate(divisors):
            if monomial_divides(glm, lm):
                shift = monomial_div(lm, glm)
                factor = lc / glc
                q = quotients[i]
                previous = q.get(shift)
                q[shift] = factor if previous is None else previous + factor
                for ge, gc in gterms.items():
                    e = monomial_mul(shift, ge)
                    value = work.get(e)
                    value = -factor * gc if value is None else value - factor * gc
                    if value:
                        work[e] = value
                    else:
                        work.pop(e, None)
                break
        else:
            remainder[lm] = lc
            del work[lm]
    return quotients, remainder


def normal_form(
    f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX
) -> QuotientRecord:
    """Divide ``f`` by ``basis`` in the given order.

    Deterministic: the leading reducible monomial is always cancelled by the
    first basis element whose leading monomial divides it.  The remainder has
    no monomial divisible by any basis leading monomial.
    """
    ring = f.ring
    prepared = []
    for g in basis:
        if g.ring != ring:
            raise RingMismatchError("divisor in a different ring")
        if g.is_zero():
            raise ValueError("zero divisor in basis")
        lm = leading_monomial(g, order)
        prepared.append((lm, g.terms[lm], dict(g.terms)))
    quotients, remainder = _divide_terms(dict(f.terms), prepared, order)
    return QuotientRecord(
        tuple(Polynomial(ring, q) for q in quotients), Polynomial(ring, remainder)
    )


# ---------------------------------------------------------------------------
# Buchberger.


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, interreduced, sorted by leading monomial.

    ``representations[k]`` expresses ``elements[k]`` as a combination of
    ``source_gens`` (cofactors aligned index by index).
    """

    ring: PolynomialRing
    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    source_gens: tuple[Polynomial, ...]
    representations: tuple[tuple[Polynomial, ...], ...]

    def leading_monomials(self) -> list[Exponents]:
        return [leading_monomial(g, self.order) for g in self.elements]


def _normalize_generators(
    gens: Sequence[Polynomial], ring: PolynomialRing
) -> list[tuple[Polynomial, int]]:
    """Drop zero generators and exact duplicates; remember original positions."""
    seen: set[frozenset] = set()
    out: list[tuple[Polynomial, int]] = []
    for i, g in enumerate(gens):
        if g.ring != ring:
            raise RingMismatchError("generators belong to different rings")
        if g.is_zero():
            continue
        if not is_homogeneous(g):
            raise NotHomogeneousError("generators must be homogeneous")
        fingerprint = frozenset(g.terms.items())
        if fingerprint in seen:
            continue
        seen.add(fingerprint)
        out.append((g, i))
    return out


def reduced_groebner(
    gens: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    *,
    ring: PolynomialRing | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Buchberger's algorithm with the coprime and chain criteria and normal pair
    selection (lowest lcm degree first, ties by pair creation order).  Zero
    generators are dropped and duplicates merged before computation.  The
    result is the unique reduced basis for (ideal, order), independent of
    generator order.
    """
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    source = tuple(gens)
    normalized = _normalize_generators(source, ring)

    basis: list[Polynomial] = []
    reps: list[list[Polynomial]] = []  # over `source`, aligned with `basis`
    zero_rep = [ring.zero()] * len(source)

    for g, position in normalized:
        rep = list(zero_rep)
        rep[position] = ring.one()
        basis.append(g)
        reps.append(rep)

    lms = [leading_monomial(g, order) for g in basis]
    lcs = [g.terms[lm] for g, lm in zip(basis, lms)]

    pending: set[frozenset[int]] = set()
    queue: list[tuple[int, int, int, int]] = []  # (lcm degree, creation idx, i, j)
    counter = 0
    for j in range(len(basis)):
        for i in range(j):
            lcm = monomial_lcm(lms[i], lms[j])
            queue.append((monomial_degree(lcm), counter, i, j))
            counter += 1
            pending.add(frozenset((i, j)))

    heapq.heapify(queue)

    while queue:
        _check_deadline()
        _, _, i, j = heapq.heappop(queue)
        pending.discard(frozenset((i, j)))
        lcm = monomial_lcm(lms[i], lms[j])
        # Coprime criterion: disjoint leading supports never yield new elements.
        if lcm == monomial_mul(lms[i], lms[j]):
            continue
        # Chain criterion: a third element dividing the lcm whose pairs with
        # both ends are already settled makes this pair redundant.
        redundant = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if (
                monomial_divides(lms[k], lcm)
                and frozenset((i, k)) not in pending
                and frozenset((j, k)) not in pending
            ):
                redundant = True
                break
        if redundant:
            continue

        shift_i = monomial_div(lcm, lms[i])
        shift_j = monomial_div(lcm, lms[j])
        mono_i = ring.monomial(shift_i, ring.field.one / lcs[i])
        mono_j = ring.monomial(shift_j, ring.field.one / lcs[j])
        s_poly = basis[i] * mono_i - basis[j] * mono_j
        record = normal_form(s_poly, basis, order)
        if record.remainder.is_zero():
            continue
        rep = [
            mono_i * a - mono_j * b for a, b in zip(reps[i], reps[j])
        ]
        for q, other in zip(record.quotients, reps):
            if not q.is_zero():
                rep = [r - q * o for r, o in zip(rep, other)]
        new_index = len(basis)
        basis.append(record.remainder)
        reps.append(rep)
        new_lm = leading_monomial(record.remainder, order)
        lms.append(new_lm)
        lcs.append(record.remainder.terms[new_lm])
        for k in range(new_index):
            lcm_k = monomial_lcm(lms[k], new_lm)
            heapq.heappush(queue, (monomial_degree(lcm_k), counter, k, new_index))
            counter += 1
            pending.add(frozenset((k, new_index)))

    # Minimalize: drop elements whose leading monomial another one divides.
    keep: list[int] = []
    for i in range(len(basis)):
        if any(
            k != i
            and monomial_divides(lms[k], lms[i])
            and (lms[k] != lms[i] or k < i)
            for k in range(len(basis))
        ):
            continue
        keep.append(i)

    # Monic + tail-reduce each survivor against the others.  Leading monomials
    # are pairwise non-divisible at this point, so reduction only rewrites
    # tails; one pass over ascending leading monomials yields the reduced form.
    keep.sort(key=lambda i: order.key(lms[i]))
    final: list[Polynomial] = []
    final_reps: list[list[Polynomial]] = []
    for i in keep:
        inv = ring.field.one / lcs[i]
        final.append(basis[i] * inv)
        final_reps.append([r * inv for r in reps[i]])
    for pos in range(len(final)):
        others = final[:pos] + final[pos + 1 :]
        other_reps = final_reps[:pos] + final_reps[pos + 1 :]
        record = normal_form(final[pos], others, order)
        reduced = record.remainder
        rep = final_reps[pos]
        for q, other in zip(record.quotients, other_reps):
            if not q.is_zero():
                rep = [r - q * o for r, o in zip(rep, other)]
        final[pos] = reduced
        final_reps[pos] = rep

    return GroebnerBasis(
        ring,
        order,
        tuple(final),
        source,
        tuple(tuple(rep) for rep in final_reps),
    )


def ideal_member(
    f: Polynomial,
    gens: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    *,
    basis: GroebnerBasis | None = None,
) -> tuple[bool, QuotientRecord]:
    """Membership of ``f`` in the ideal generated by ``gens``, with cofactors.

    Returns (member, record) where the record expresses f over the ORIGINAL
    generators: f = sum(cofactor_i * gens_i) + remainder, remainder zero
    exactly when f is a member.  Cofactors come from composing the division
    quotients with the Buchberger transcript.
    """
    if not is_homogeneous(f):
        raise NotHomogeneousError("membership test requires a homogeneous polynomial")
    if basis is None:
        basis = reduced_groebner(gens, order, ring=f.ring)
    gens = basis.source_gens
    record = normal_form(f, basis.elements, order)
    cofactors = [f.ring.zero()] * len(gens)
    for q, rep in zip(record.quotients, basis.representations):
        if q.is_zero():
            continue
        for i, r in enumerate(rep):
            if not r.is_zero():
                cofactors[i] = cofactors[i] + q * r
    composed = QuotientRecord(tuple(cofactors), record.remainder)
    return record.remainder.is_zero(), composed


def ideal_equal(
    a: Sequence[Polynomial],
    b: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    *,
    ring: PolynomialRing | None = None,
) -> bool:
    """True iff the two generator lists generate the same ideal."""
    if ring is None:
        candidates = [g.ring for g in (*a, *b)]
        if not candidates:
            return True
        ring = candidates[0]
    basis_a = reduced_groebner(a, order, ring=ring)
    basis_b = reduced_groebner(b, order, ring=ring)
    return basis_a.elements == basis_b.elements


def truncated_generators(gens: Sequence[Polynomial], m: int) -> list[Polynomial]:
    """Generators of the ideal spanned by all members of degree below ``m``.

    These are the reduced grevlex basis elements of degree < m.  Why this is
    enough: grevlex refines total degree, so dividing a homogeneous member of
    degree d by the reduced basis only ever invokes basis elements whose
    degrees are at most d.  Hence every member of degree < m is a combination
    of basis elements of degree < m, and conversely each such element is
    itself a member of degree < m.
    """
    if m < 1:
        raise ValueError("degree cut must be at least 1")
    if not gens:
        return []
    basis = reduced_groebner(gens, GREVLEX)
    out = []
    for g in basis.elements:
        d = homogeneous_degree(g)
        if isinstance(d, int) and d < m:
            out.append(g)
    return out


def projective_dimension(gens: Sequence[Polynomial]) -> int:
    """Dimension of the projective vanishing locus defined by ``gens``.

    Computed as (Krull dimension of the affine cone) − 1, the cone dimension
    being the maximum size of a variable subset S such that no leading
    monomial of the reduced grevlex basis is supported entirely inside S.
    Returns −1 for the empty projective locus.
    """
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    basis = reduced_groebner(gens, GREVLEX, ring=ring)
    for g in basis.elements:
        if homogeneous_degree(g) == 0:
            raise ImproperIdealError("ideal contains a nonzero constant")
    n = ring.num_vars
    lm_masks = []
    for lm in basis.leading_monomials():
        mask = 0
        for i, e in enumerate(lm):
            if e:
                mask |= 1 << i
        lm_masks.append(mask)
    best = 0
    for subset in range(1 << n):
        size = subset.bit_count()
        if size <= best:
            continue
        if all(mask & ~subset for mask in lm_masks):
            best = size
    return best - 1

"""The complete-intersection decision procedure.

Given homogeneous generators and a smooth point of their common zero locus,
the reduction loop repeatedly exploits a linear relation among the
differentials at the point: either a generator is redundant outright, or it
can be traded for a combination whose differential vanishes at the point.
Such a combination must be expressible over ideal members of strictly lower
degree; when it is, the system shrinks in the well-founded degree-sequence
order, and when it is not, the combination itself certifies that no
codimension-sized generating set exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .certificates import (
    Certificate,
    CICertificate,
    NonCICertificate,
    input_fingerprint,
)
from .degrees import DegreeSequence, seq_succ
from .errors import (
    CertificateMismatchError,
    NotHomogeneousError,
    NotInIdealError,
    NotSmoothError,
    PointNotOnVarietyError,
)
from .fields import Scalar
from .groebner import (
    QuotientRecord,
    ideal_equal,
    ideal_member,
    projective_dimension,
    reduced_groebner,
    truncated_generators,
)
from .linalg import ExactMatrix, kernel_basis, linear_relation_polys, rank
from .poly import (
    Polynomial,
    PolynomialRing,
    ProjectivePoint,
    differential_at,
    evaluate,
    homogeneous_degree,
    is_homogeneous,
)


@dataclass(frozen=True)
class GeneratorSystem:
    """A nonempty list of nonzero homogeneous generators, no exact duplicates."""

    ring: PolynomialRing
    gens: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gens", tuple(self.gens))
        if not self.gens:
            raise ValueError("generator system must be nonempty")
        seen: set[frozenset] = set()
        for g in self.gens:
            if g.ring != self.ring:
                raise ValueError("generator outside the declared ring")
            if g.is_zero():
                raise ValueError("zero generator")
            if not is_homogeneous(g):
                raise NotHomogeneousError("generators must be homogeneous")
            fingerprint = frozenset(g.terms.items())
            if fingerprint in seen:
                raise ValueError("duplicate generator")
            seen.add(fingerprint)

    @classmethod
    def from_polynomials(
        cls, polys: Sequence[Polynomial], ring: PolynomialRing | None = None
    ) -> "GeneratorSystem":
        """Build a system, silently dropping zeros and exact duplicates."""
        if ring is None:
            if not polys:
                raise ValueError("cannot infer the ring of an empty list")
            ring = polys[0].ring
        seen: set[frozenset] = set()
        kept: list[Polynomial] = []
        for p in polys:
            if p.is_zero():
                continue
            fingerprint = frozenset(p.terms.items())
            if fingerprint in seen:
                continue
            seen.add(fingerprint)
            kept.append(p)
        return cls(ring, tuple(kept))

    @property
    def degrees(self) -> tuple[int, ...]:
        out = []
        for g in self.gens:
            d = homogeneous_degree(g)
            assert isinstance(d, int)
            out.append(d)
        return tuple(out)

    def __len__(self) -> int:
        return len(self.gens)


def degree_sequence(system: GeneratorSystem) -> DegreeSequence:
    """Per-degree generator counts of the system."""
    return DegreeSequence.from_degrees(system.degrees)


def _require_on_variety(system: GeneratorSystem, x: ProjectivePoint) -> None:
    for i, g in enumerate(system.gens):
        if evaluate(g, x):
            raise PointNotOnVarietyError(
                f"generator {i} does not vanish at {x}: {g}"
            )


@dataclass(frozen=True)
class SmoothnessReport:
    codim: int
    smooth: bool
    dimension: int
    jacobian_rank: int


def smoothness_check(system: GeneratorSystem, x: ProjectivePoint) -> SmoothnessReport:
    """Codimension of the zero locus and the Jacobian-rank smoothness verdict at ``x``.

    Smooth means: the differentials of the generators at ``x`` span a space of
    dimension exactly the codimension.  The span over the generators equals
    the span over the whole ideal because d_x(G*F) = G(x) * d_x(F) whenever F
    vanishes at x.
    """
    _require_on_variety(system, x)
    dimension = projective_dimension(system.gens)
    codim = (system.ring.num_vars - 1) - dimension
    jacobian = ExactMatrix.from_rows(
        system.ring.field, [differential_at(g, x) for g in system.gens]
    )
    jac_rank = rank(jacobian)
    return SmoothnessReport(codim, jac_rank == codim, dimension, jac_rank)


@dataclass(frozen=True)
class TrivialContainment:
    """Outcome of testing F = sum(G_i * Psi_i) with every deg Psi_i < deg F.

    ``members``/``cofactors`` carry the successful representation (aligned,
    nonzero cofactors only).  ``truncated_basis`` generates the below-degree
    part of the ideal; on failure ``remainder`` is the nonzero normal form of
    F against it.
    """

    trivial: bool
    members: tuple[Polynomial, ...]
    cofactors: tuple[Polynomial, ...]
    truncated_basis: tuple[Polynomial, ...]
    remainder: Polynomial


def trivially_contains(system: GeneratorSystem, f: Polynomial) -> TrivialContainment:
    """Whether ``f`` is a combination of ideal members of strictly lower degree.

    ``f`` must be a nonzero homogeneous member of the ideal (checked).
    """
    if f.is_zero():
        raise ValueError("containment test needs a nonzero polynomial")
    d = homogeneous_degree(f)
    if not isinstance(d, int):
        raise NotHomogeneousError("containment test needs a homogeneous polynomial")
    member, _ = ideal_member(f, system.gens)
    if not member:
        raise NotInIdealError(f"{f} is not in the ideal")
    truncated = tuple(truncated_generators(system.gens, d))
    if not truncated:
        return TrivialContainment(False, (), (), truncated, f)
    member, record = ideal_member(f, truncated)
    if not member:
        return TrivialContainment(False, (), (), truncated, record.remainder)
    members = []
    cofactors = []
    for psi, cof in zip(truncated, record.quotients):
        if not cof.is_zero():
            members.append(psi)
            cofactors.append(cof)
    return TrivialContainment(True, tuple(members), tuple(cofactors), truncated, record.remainder)


@dataclass(frozen=True)
class Removed:
    """One generator is a combination of the others (kept order, minus it)."""

    index: int
    representation: QuotientRecord


@dataclass(frozen=True)
class Replaced:
    """Generator ``index`` traded for ``new_poly``, whose differential at the
    point vanishes.  ``relation`` holds the kernel coefficients and
    ``cofactors`` the degree-raising multipliers, both aligned with the full
    generator list (zero off the support)."""

    index: int
    new_poly: Polynomial
    relation: tuple[Scalar, ...]
    cofactors: tuple[Polynomial, ...]


@dataclass(frozen=True)
class Independent:
    """The differentials at the point are linearly independent."""


RewriteOutcome = Removed | Replaced | Independent


def _removed_record(
    system: GeneratorSystem, index: int, combination: dict[int, Polynomial]
) -> QuotientRecord:
    """Representation of gens[index] over the remaining generators.

    ``combination`` maps full-list indices (excluding ``index``) to cofactors.
    """
    quotients = []
    for i in range(len(system.gens)):
        if i == index:
            continue
        quotients.append(combination.get(i, system.ring.zero()))
    return QuotientRecord(tuple(quotients), system.ring.zero())


def subst_step(system: GeneratorSystem, x: ProjectivePoint) -> RewriteOutcome:
    """One rewrite step from a linear relation among differentials at ``x``.

    Takes the first canonical kernel vector of the differential matrix.  On
    its support, if the top-degree generators are linearly dependent as
    polynomials, one of them is redundant (Removed).  Otherwise the relation
    lifts to a polynomial combination with vanishing differential: lower
    degrees are raised to the top degree by powers of the pivot coordinate,
    scaled so the multiplier still takes the kernel value at ``x``.  A zero
    combination again removes a generator; a nonzero one replaces the
    highest-index top-degree generator (Replaced).
    """
    _require_on_variety(system, x)
    ring = system.ring
    columns = [differential_at(g, x) for g in system.gens]
    kernel = kernel_basis(ExactMatrix.from_columns(ring.field, columns))
    if not kernel:
        return Independent()
    relation = kernel[0]
    support = [i for i, c in enumerate(relation) if c]
    degrees = system.degrees
    top_degree = max(degrees[i] for i in support)
    top = [i for i in support if degrees[i] == top_degree]

    block_relation = linear_relation_polys([system.gens[i] for i in top])
    if block_relation is not None:
        # The top-degree block is linearly dependent as polynomials; solve for
        # the last generator the relation touches.
        last = max(i for i, c in zip(top, block_relation) if c)
        pivot_coeff = block_relation[top.index(last)]
        combination = {
            i: ring.constant(-c / pivot_coeff)
            for i, c in zip(top, block_relation)
            if c and i != last
        }
        return Removed(last, _removed_record(system, last, combination))

    k = x.pivot
    inv_xk = ring.field.one / x.coords[k]
    cofactors: dict[int, Polynomial] = {}
    for i in support:
        lift = top_degree - degrees[i]
        scale = relation[i] * inv_xk**lift
        cofactors[i] = ring.monomial(
            tuple(lift if j == k else 0 for j in range(ring.num_vars)), scale
        )
    combined = ring.zero()
    for i in support:
        combined = combined + cofactors[i] * system.gens[i]

    differential = differential_at(combined, x)
    assert not any(differential), "replacement differential failed to vanish"

    j = max(top)
    if combined.is_zero():
        # The lifted combination collapses; the relation already expresses
        # generator j (top block, constant multiplier) over the others.
        lam = relation[j]
        others = {
            i: cofactors[i] * (ring.field.one / -lam) for i in support if i != j
        }
        return Removed(j, _removed_record(system, j, others))

    full_relation = tuple(
        relation[i] if i in support else ring.field.zero for i in range(len(system.gens))
    )
    full_cofactors = tuple(
        cofactors.get(i, ring.zero()) for i in range(len(system.gens))
    )
    return Replaced(j, combined, full_relation, full_cofactors)


IterationObserver = Callable[[GeneratorSystem, RewriteOutcome, GeneratorSystem], None]


def reduce_to_ci(
    system: GeneratorSystem,
    x: ProjectivePoint,
    *,
    check_invariants: bool = False,
    on_iteration: IterationObserver | None = None,
) -> Certificate:
    """Decide whether the ideal is generated by codimension-many elements.

    Requires ``x`` to be a smooth point of the zero locus (enforced).  Runs
    the rewrite loop until the system has codimension size (CI certificate)
    or a replacement resists trivial containment (NonCI certificate with that
    witness).  The degree sequence strictly decreases at every shrinking
    step, which bounds the loop.

    ``check_invariants`` re-verifies ideal equality with the input after each
    iteration; ``on_iteration`` observes (before, outcome, after) triples.
    """
    report = smoothness_check(system, x)
    if not report.smooth:
        raise NotSmoothError(
            f"point {x} is not a smooth point: Jacobian rank "
            f"{report.jacobian_rank}, codimension {report.codim}"
        )
    codim = report.codim
    ring = system.ring
    fingerprint = input_fingerprint(ring, system.gens, x)
    original = system.gens

    trace: list[DegreeSequence] = []
    current = system
    if len(current) > codim:
        trace.append(degree_sequence(current))

    while len(current) > codim:
        outcome = subst_step(current, x)
        if isinstance(outcome, Independent):
            raise AssertionError(
                "differentials independent although the system exceeds the codimension"
            )
        if isinstance(outcome, Removed):
            gens = list(current.gens)
            del gens[outcome.index]
            new_system = GeneratorSystem(ring, tuple(gens))
        else:
            gens = list(current.gens)
            gens[outcome.index] = outcome.new_poly
            swapped = GeneratorSystem.from_polynomials(gens, ring)
            containment = trivially_contains(swapped, outcome.new_poly)
            if not containment.trivial:
                return NonCICertificate(
                    input_hash=fingerprint,
                    field_tag=ring.field.tag,
                    var_names=ring.var_names,
                    codim=codim,
                    witness=outcome.new_poly,
                    point=x,
                    truncated_basis=containment.truncated_basis,
                    remainder=containment.remainder,
                    trace=tuple(trace),
                )
            spliced = (
                gens[: outcome.index]
                + list(containment.members)
                + gens[outcome.index + 1 :]
            )
            new_system = GeneratorSystem.from_polynomials(spliced, ring)

        previous = trace[-1]
        now = degree_sequence(new_system)
        if not seq_succ(previous, now):
            raise AssertionError(
                f"degree sequence failed to decrease: {previous} to {now}"
            )
        trace.append(now)
        if check_invariants and not ideal_equal(new_system.gens, original, ring=ring):
            raise AssertionError("rewrite changed the ideal")
        if on_iteration is not None:
            on_iteration(current, outcome, new_system)
        current = new_system

    assert len(current) == codim, "system shrank below the codimension"
    return CICertificate(
        input_hash=fingerprint,
        field_tag=ring.field.tag,
        var_names=ring.var_names,
        codim=codim,
        final_gens=current.gens,
        trace=tuple(trace),
    )


def check_condition_iv(
    f: Polynomial,
    family: Sequence[Polynomial],
    x: ProjectivePoint,
    system: GeneratorSystem,
) -> bool:
    """Whether the tangent space of Z(f) at ``x`` contains the intersection
    of the tangent spaces of the Z(family member)s.

    Computed linearly: d_x(f) must lie in the span of the family's
    differentials; an empty family spans nothing, so then the answer is
    "d_x(f) = 0".  All polynomials must be ideal members, each family member
    of degree strictly below deg f.  A ``True`` answer on a non-trivially
    contained ``f`` at a smooth point refutes the tangent-space criterion.
    """
    if f.is_zero():
        raise ValueError("need a nonzero polynomial")
    deg_f = homogeneous_degree(f)
    if not isinstance(deg_f, int):
        raise NotHomogeneousError("need a homogeneous polynomial")
    basis = reduced_groebner(system.gens, ring=system.ring)
    member, _ = ideal_member(f, system.gens, basis=basis)
    if not member:
        raise NotInIdealError("polynomial is not in the ideal")
    for b in family:
        if b.is_zero():
            raise ValueError("zero polynomial in the family")
        deg_b = homogeneous_degree(b)
        if not isinstance(deg_b, int):
            raise NotHomogeneousError("family members must be homogeneous")
        if deg_b >= deg_f:
            raise ValueError(
                f"family member degree {deg_b} not below the polynomial degree {deg_f}"
            )
        b_member, _ = ideal_member(b, system.gens, basis=basis)
        if not b_member:
            raise NotInIdealError("family member is not in the ideal")
    target = differential_at(f, x)
    rows = [differential_at(b, x) for b in family]
    if not rows:
        return not any(target)
    field = system.ring.field
    without = ExactMatrix.from_rows(field, rows)
    with_target = ExactMatrix.from_rows(field, rows + [list(target)])
    return rank(with_target) == rank(without)


def _trace_decreasing(trace: Sequence[DegreeSequence]) -> bool:
    return all(seq_succ(a, b) for a, b in zip(trace, trace[1:]))


def verify_certificate(
    cert: Certificate, system: GeneratorSystem, x: ProjectivePoint
) -> bool:
    """Re-check a certificate from scratch against the claimed input.

    The input hash must match (error if not); every other property is
    recomputed without trusting the producer, and the verdict is returned.
    """
    fingerprint = input_fingerprint(system.ring, system.gens, x)
    if fingerprint != cert.input_hash:
        raise CertificateMismatchError(
            "certificate was produced for a different input"
        )
    if not _trace_decreasing(cert.trace):
        return False
    report = smoothness_check(system, x)
    if cert.codim != report.codim:
        return False
    if isinstance(cert, CICertificate):
        if len(cert.final_gens) != cert.codim:
            return False
        return ideal_equal(cert.final_gens, system.gens, ring=system.ring)
    witness = cert.witness
    if witness.is_zero():
        return False
    member, _ = ideal_member(witness, system.gens)
    if not member:
        return False
    if any(differential_at(witness, x)):
        return False
    return not trivially_contains(system, witness).trivial

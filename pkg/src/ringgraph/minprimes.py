"""Minimal primes with certificates, equidimensionality, and the
largest small-dimensional ideal of a reduced presentation.

Two computing strategies are provided.  Monomial ideals branch on the
variables of the first uncovered generator and prune to the minimal
covers.  The split strategy factors generators within the certified
reach of :mod:`ringgraph.factor` and branches: for a generator g1*g2
the components split as V(I + g1) together with V((I + g2) : g1^inf);
the one-sided saturation keeps the second branch away from components
already inside V(g1) while never losing a prime (a two-sided saturation
would).  Every leaf must be certified prime or the computation refuses
with the leaf attached.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import PreconditionError, StructuralError, UndecidedComponentError
from .factor import certify_irreducible, factor_once
from .groebner import normal_form
from .ideals import (
    Ideal,
    PresentedRing,
    RingMap,
    dimension,
    ideal_intersection,
    ideal_sum,
    radical_membership,
    ring_map_kernel,
    saturation,
)
from .polynomials import GREVLEX, mono_support

CERTIFICATE_KINDS = (
    "monomial-variable-prime",
    "linear-prime",
    "principal-irreducible",
    "kernel-of-map-into-domain",
    "asserted",
)


@dataclass(frozen=True)
class PrimeCertificate:
    """Why an ideal is prime; ``asserted`` carries no proof obligation."""

    kind: str
    witness: object = None

    def __post_init__(self):
        if self.kind not in CERTIFICATE_KINDS:
            raise StructuralError(f"unknown certificate kind {self.kind!r}")

    def check(self, prime: Ideal) -> bool:
        """Discharge the proof obligation against the claimed prime."""
        gens = prime.groebner().generators
        if self.kind == "monomial-variable-prime":
            seen = set()
            for g in gens:
                if not g.is_monomial():
                    return False
                m = next(iter(g.terms))
                if sum(m) != 1:
                    return False
                seen.add(mono_support(m)[0])
            return len(seen) == len(gens)
        if self.kind == "linear-prime":
            if prime.is_unit():
                return False
            return all(g.total_degree() <= 1 for g in gens)
        if self.kind == "principal-irreducible":
            return len(gens) == 1 and certify_irreducible(gens[0])
        if self.kind == "kernel-of-map-into-domain":
            phi = self.witness
            if not isinstance(phi, RingMap) or isinstance(phi.target, PresentedRing):
                return False
            return ring_map_kernel(phi).equals(prime)
        return True  # asserted


@dataclass
class MinimalPrimeSet:
    """The minimal primes over an ideal, each with a certificate.

    ``provenance`` is one of ``computed-monomial``, ``computed-split``,
    ``computed-kernel`` or ``asserted``; asserted sets taint everything
    downstream.
    """

    for_ideal: Ideal
    primes: tuple  # of (Ideal, PrimeCertificate)
    provenance: str
    _verified: bool = dc_field(default=False, repr=False, compare=False)

    def ideals(self) -> tuple:
        return tuple(p for p, _ in self.primes)

    def is_asserted(self) -> bool:
        return self.provenance == "asserted" or any(
            c.kind == "asserted" for _, c in self.primes
        )

    def verify(self):
        """Check the full decomposition contract; raise on any failure.

        (i) every prime is proper, certified, and contains the ideal;
        (ii) the intersection of the primes and the ideal have equal
        radicals; (iii) the primes are pairwise incomparable.
        Verification is cached; a set that passed once is not rechecked.
        """
        if self._verified:
            return
        report = verify_decomposition(self.for_ideal, self.ideals())
        if not report.ok:
            raise PreconditionError(
                "minimal prime verification failed: " + "; ".join(report.failures)
            )
        for p, cert in self.primes:
            if not cert.check(p):
                raise PreconditionError(
                    f"certificate {cert.kind!r} failed for {p!r}"
                )
        self._verified = True


@dataclass
class DecompositionReport:
    ok: bool
    failures: list = dc_field(default_factory=list)


def verify_decomposition(a: Ideal, primes) -> DecompositionReport:
    """Structured containment/radical/incomparability check."""
    primes = list(primes)
    failures = []
    if not primes:
        if not a.is_unit():
            failures.append("no primes supplied for a proper ideal")
        return DecompositionReport(not failures, failures)
    for idx, p in enumerate(primes):
        if p.is_unit():
            failures.append(f"prime #{idx} is the unit ideal")
        elif not p.contains_ideal(a):
            failures.append(f"prime #{idx} does not contain the ideal")
    inter = primes[0]
    for p in primes[1:]:
        inter = ideal_intersection(inter, p)
    for g in inter.canonical_gens():
        if not radical_membership(g, a):
            failures.append(f"intersection generator {g} escapes the radical")
            break
    for i in range(len(primes)):
        for j in range(len(primes)):
            if i != j and primes[i].contains_ideal(primes[j]):
                failures.append(f"prime #{i} contains prime #{j}; not minimal")
    return DecompositionReport(not failures, failures)


# ---------------------------------------------------------------------------
# monomial strategy


def monomial_minimal_primes(a: Ideal) -> MinimalPrimeSet:
    """Minimal primes of a monomial ideal: minimal covers of the
    generator supports, found by branching on the first uncovered
    generator and pruning non-minimal covers."""
    supports = []
    for g in a.gens:
        if g.is_zero():
            continue
        if not g.is_monomial():
            raise StructuralError("monomial strategy requires monomial generators")
        supports.append(frozenset(mono_support(next(iter(g.terms)))))
    ring = a.ring

    covers: set = set()

    def branch(chosen: frozenset):
        for supp in supports:
            if not (supp & chosen):
                if not supp:  # a unit generator: no cover exists
                    return
                for v in sorted(supp):
                    branch(chosen | {v})
                return
        covers.add(chosen)

    branch(frozenset())
    minimal = [c for c in covers if not any(o < c for o in covers)]
    minimal.sort(key=lambda c: (len(c), tuple(sorted(c))))
    primes = tuple(
        (
            Ideal(ring, tuple(ring.var(i) for i in sorted(c))),
            PrimeCertificate("monomial-variable-prime"),
        )
        for c in minimal
    )
    return MinimalPrimeSet(a, primes, "computed-monomial")


# ---------------------------------------------------------------------------
# split strategy


_SPLIT_BUDGET = 400


def _certify_leaf(leaf: Ideal):
    """Certificates for a leaf with no factorable generator, or None."""
    gens = leaf.groebner().generators
    if all(g.is_monomial() for g in gens):
        return [(p, c) for p, c in monomial_minimal_primes(Ideal(leaf.ring, gens)).primes]
    if all(g.total_degree() <= 1 for g in gens):
        return [(leaf, PrimeCertificate("linear-prime"))]
    if len(gens) == 1 and certify_irreducible(gens[0]):
        return [(leaf, PrimeCertificate("principal-irreducible"))]
    return None


def split_minimal_primes(a: Ideal) -> MinimalPrimeSet:
    """Minimal primes by certified generator splitting; refuses on any
    leaf outside the certification reach."""
    ring = a.ring
    found = []
    seen = set()
    stack = [a]
    steps = 0
    while stack:
        steps += 1
        if steps > _SPLIT_BUDGET:
            raise UndecidedComponentError(
                "splitting budget exhausted; supply an asserted decomposition",
                leaf=stack[-1],
            )
        current = stack.pop()
        gb = current.groebner()
        key = gb.key()
        if key in seen:
            continue
        seen.add(key)
        if gb.is_unit():
            continue
        work = Ideal(ring, gb.generators)
        split = None
        for g in gb.generators:
            verdict, payload = factor_once(g)
            if verdict == "factored":
                split = payload
                break
        if split is not None:
            g1, g2 = split
            stack.append(ideal_sum(work, Ideal(ring, (g1,))))
            stack.append(saturation(ideal_sum(work, Ideal(ring, (g2,))), Ideal(ring, (g1,))))
            continue
        certified = _certify_leaf(work)
        if certified is None:
            raise UndecidedComponentError(
                "leaf ideal could not be certified prime; "
                "supply an asserted decomposition",
                leaf=work,
            )
        found.extend(certified)

    minimal = _prune_to_minimal(found)
    result = MinimalPrimeSet(a, tuple(minimal), "computed-split")
    result.verify()
    return result


def _prune_to_minimal(pairs) -> list:
    by_key = {}
    for p, cert in pairs:
        by_key.setdefault(p.canonical_key(), (p, cert))
    items = list(by_key.values())
    keep = []
    for i, (p, cert) in enumerate(items):
        redundant = False
        for j, (q, _) in enumerate(items):
            if i != j and p.contains_ideal(q):
                if q.contains_ideal(p) and i < j:
                    continue  # equal ideals: keep the first
                redundant = True
                break
        if not redundant:
            keep.append((p, cert))
    keep.sort(key=lambda pc: pc[0].canonical_key())
    return keep


def minimal_primes(a: Ideal, strategy: str = "auto", asserted=None) -> MinimalPrimeSet:
    """Minimal primes of a by the requested strategy.

    ``asserted`` takes a list of (Ideal, PrimeCertificate) pairs or bare
    Ideals; the set is verified before being accepted.
    """
    if strategy == "asserted" or asserted is not None:
        if asserted is None:
            raise PreconditionError("asserted strategy needs the claimed primes")
        pairs = []
        for entry in asserted:
            if isinstance(entry, tuple):
                pairs.append(entry)
            else:
                pairs.append((entry, PrimeCertificate("asserted")))
        mps = MinimalPrimeSet(a, tuple(pairs), "asserted")
        mps.verify()
        return mps
    if strategy == "monomial":
        return monomial_minimal_primes(a)
    if strategy == "split":
        return split_minimal_primes(a)
    if strategy != "auto":
        raise StructuralError(f"unknown strategy {strategy!r}")
    if all(g.is_monomial() for g in a.groebner().generators):
        return monomial_minimal_primes(Ideal(a.ring, a.groebner().generators))
    return split_minimal_primes(a)


def ensure_min_primes(ring: PresentedRing, strategy: str = "auto") -> MinimalPrimeSet:
    """Attach (or reuse) minimal primes on a presented ring."""
    if ring.min_primes is not None:
        return ring.min_primes
    try:
        mps = minimal_primes(ring.defining, strategy)
    except UndecidedComponentError as e:
        raise PreconditionError(
            "minimal primes unavailable: " + str(e)
            + "; attach an asserted decomposition to proceed"
        ) from e
    ring.attach_min_primes(mps)
    return mps


# ---------------------------------------------------------------------------
# equidimensionality and the small-dimension ideal


def is_equidimensional(ring: PresentedRing, strategy: str = "auto") -> bool:
    """All minimal primes cut out components of the full dimension."""
    mps = ensure_min_primes(ring, strategy)
    d = ring.dim()
    value = all(dimension(p) == d for p in mps.ideals())
    ring.certify_equidimensional(value)
    return value


def certify_reduced_from_decomposition(ring: PresentedRing, strategy: str = "auto") -> bool:
    """Decide reducedness by computation: the defining ideal is radical
    exactly when it equals the intersection of its minimal primes.
    Certifies the flag either way and returns the verdict."""
    flag = ring.reduced
    if flag is not None and flag.provenance == "certified":
        return flag.value
    mps = ensure_min_primes(ring, strategy)
    primes = mps.ideals()
    inter = primes[0]
    for p in primes[1:]:
        inter = ideal_intersection(inter, p)
    value = inter.equals(ring.defining)
    ring.certify_reduced(value)
    return value


def certify_equidimensional(ring: PresentedRing, strategy: str = "auto") -> bool:
    return is_equidimensional(ring, strategy)


def top_dimensional_primes(ring: PresentedRing, strategy: str = "auto") -> tuple:
    mps = ensure_min_primes(ring, strategy)
    d = ring.dim()
    return tuple((p, c) for p, c in mps.primes if dimension(p) == d)


def j_ideal(ring: PresentedRing, strategy: str = "auto") -> Ideal:
    """The largest ideal of the quotient of dimension below the ring's,
    for reduced presentations: the intersection of the top-dimensional
    minimal primes, returned as its lift to the ambient ring.

    Its image is zero exactly when the presentation is equidimensional.
    Non-reduced presentations are refused.
    """
    flag = ring.reduced
    if flag is None:
        raise PreconditionError(
            "reducedness unknown: certify or assert it before the small-dimension ideal"
        )
    if not flag.value:
        raise PreconditionError(
            "the small-dimension ideal is only supported for reduced presentations"
        )
    tops = top_dimensional_primes(ring, strategy)
    if not tops:
        raise StructuralError("no top-dimensional primes; broken decomposition")
    inter = tops[0][0]
    for p, _ in tops[1:]:
        inter = ideal_intersection(inter, p)
    return Ideal(ring.ambient, inter.canonical_gens())


def j_ideal_is_zero(ring: PresentedRing, j: Ideal) -> bool:
    """Whether the lifted small-dimension ideal has zero image."""
    gb = ring.defining.groebner()
    return all(normal_form(g, gb).is_zero() for g in j.gens)


def image_domain_presentation(phi: RingMap) -> PresentedRing:
    """The image of a map into a polynomial ring, presented as the
    quotient of the source by the map's kernel.

    The kernel of a map into a domain is prime, so the quotient is a
    domain: its one minimal prime is the defining ideal itself, carried
    by a kernel certificate that recomputes the elimination, and the
    reduced and equidimensional flags are certified.
    """
    if isinstance(phi.target, PresentedRing):
        raise PreconditionError(
            "the domain presentation needs a polynomial-ring target;"
            " quotient targets are not certified domains"
        )
    kernel = ring_map_kernel(phi)
    pres = PresentedRing(phi.source, kernel)
    cert = PrimeCertificate("kernel-of-map-into-domain", witness=phi)
    pres.attach_min_primes(MinimalPrimeSet(kernel, ((kernel, cert),), "computed-kernel"))
    pres.certify_reduced(True)
    is_equidimensional(pres)
    return pres

"""Ideals, quotient-ring presentations, ring maps, and their algebra.

Everything here reduces to Groebner computations in the ambient
polynomial ring: intersections by eliminating an auxiliary variable,
colons through intersections with principal ideals, kernels and
contractions through graph ideals under elimination orders, dimension
through independent variable sets modulo the leading-term ideal.
Monomial data takes certified combinatorial shortcuts with identical
contracts; the test suite pins those against the general routes.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple

from .errors import PreconditionError, StructuralError
from .fields import Field
from .groebner import (
    GroebnerBasis,
    buchberger,
    normal_form,
    normal_form_with_quotients,
)
from .polynomials import (
    GREVLEX,
    MonomialOrder,
    PolyRing,
    Polynomial,
    elimination_order,
    embed,
    fresh_names,
    mono_lcm,
    mono_support,
    strip_first,
)

DIMENSION_VARIABLE_CAP = 16
HEIGHT_INFINITY = math.inf


class Ideal:
    """A finitely generated ideal of a polynomial ring.

    Equality of objects is structural; use :meth:`equals` for equality
    of the ideals themselves (via reduced bases).  Groebner bases are
    cached per order on the instance.
    """

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial]):
        gens = tuple(gens)
        for g in gens:
            if not isinstance(g, Polynomial) or g.ring != ring:
                raise StructuralError("generator outside the ambient ring")
        self.ring = ring
        self.gens = gens
        self._gb = {}

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.gens) if self.gens else "0"
        return f"({inner})"

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        key = (order.kind, order.block)
        gb = self._gb.get(key)
        if gb is None:
            gb = buchberger(self.gens, order, ring=self.ring)
            self._gb[key] = gb
        return gb

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        gb = self.groebner()
        return all(gb.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise StructuralError("comparing ideals in different rings")
        return self.groebner().key() == other.groebner().key()

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_zero_ideal(self) -> bool:
        return not self.groebner().generators

    def is_monomial(self) -> bool:
        """True when the reduced basis consists of single terms."""
        return all(g.is_monomial() for g in self.groebner().generators)

    def canonical_gens(self) -> tuple:
        return self.groebner().generators

    def canonical_key(self) -> tuple:
        return self.groebner().key()

    def min_gen_strings(self) -> list:
        return [str(g) for g in self.canonical_gens()]


def ideal(ring: PolyRing, *gens) -> Ideal:
    return Ideal(ring, gens)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise StructuralError("sum of ideals in different rings")
    return Ideal(a.ring, a.gens + b.gens)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise StructuralError("product of ideals in different rings")
    if not a.gens or not b.gens:
        return Ideal(a.ring, ())
    return Ideal(a.ring, tuple(f * g for f in a.gens for g in b.gens))


def _monomial_intersection(a: Ideal, b: Ideal) -> Ideal:
    ga = a.groebner().generators
    gb = b.groebner().generators
    if not ga or not gb:
        return Ideal(a.ring, ())
    monos = []
    for f in ga:
        mf = next(iter(f.terms))
        for g in gb:
            mg = next(iter(g.terms))
            monos.append(mono_lcm(mf, mg))
    return Ideal(a.ring, tuple(a.ring.monomial(m) for m in monos))


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    """a ∩ b, by eliminating an auxiliary variable t from t*a + (1-t)*b.

    Purely monomial inputs short-circuit to pairwise lcms; the shortcut
    agrees with the elimination route (tested).
    """
    if a.ring != b.ring:
        raise StructuralError("intersection of ideals in different rings")
    if a.is_monomial() and b.is_monomial():
        return _monomial_intersection(a, b)
    ring = a.ring
    (tname,) = fresh_names(ring, "~t", 1)
    ext = ring.extended((tname,), front=True)
    shift = tuple(i + 1 for i in range(ring.nvars))
    t = ext.var(0)
    gens = [t * embed(f, ext, shift) for f in a.gens]
    one_minus_t = ext.one() - t
    gens += [one_minus_t * embed(g, ext, shift) for g in b.gens]
    elim = eliminate(Ideal(ext, gens), 1)
    return Ideal(ring, tuple(strip_first(p, 1, ring) for p in elim.gens))


def ideal_colon(a: Ideal, b: Ideal) -> Ideal:
    """Colon ideal (a : b).  For b = (0) this is the unit ideal."""
    if a.ring != b.ring:
        raise StructuralError("colon of ideals in different rings")
    ring = a.ring
    nonzero = [g for g in b.gens if not g.is_zero()]
    if not nonzero:
        return Ideal(ring, (ring.one(),))
    result = None
    order = GREVLEX
    for g in nonzero:
        cap = ideal_intersection(a, Ideal(ring, (g,)))
        quots = []
        for h in cap.groebner().generators:
            r, q = normal_form_with_quotients(h, [g], order)
            if not r.is_zero():
                raise StructuralError("intersection element not divisible by colon generator")
            quots.append(q[0])
        part = Ideal(ring, tuple(quots))
        result = part if result is None else ideal_intersection(result, part)
    return result


def saturation(a: Ideal, b: Ideal) -> Ideal:
    """(a : b^infinity): iterate colons until the chain stabilizes."""
    current = a
    while True:
        nxt = ideal_colon(current, b)
        if nxt.groebner().key() == current.groebner().key():
            return current
        current = nxt


def eliminate(a: Ideal, k: int) -> Ideal:
    """Generators of a ∩ K[x_{k+1}, ...], kept in the ambient ring."""
    if k < 0 or k > a.ring.nvars:
        raise StructuralError("elimination block out of range")
    if k == 0:
        return Ideal(a.ring, a.groebner().generators)
    gb = a.groebner(elimination_order(k))
    kept = tuple(g for g in gb.generators if all(not any(m[:k]) for m in g.terms))
    return Ideal(a.ring, kept)


def radical_membership(f: Polynomial, a: Ideal) -> bool:
    """f in Rad(a), by the trick of inverting f with a fresh variable."""
    if f.ring != a.ring:
        raise StructuralError("element outside the ambient ring")
    if f.is_zero():
        return True
    if f.is_monomial() and a.is_monomial():
        # m in Rad(monomial ideal) iff some basis support is covered.
        supp = set(mono_support(next(iter(f.terms))))
        for g in a.groebner().generators:
            if set(mono_support(next(iter(g.terms)))) <= supp:
                return True
        return False
    ring = a.ring
    (tname,) = fresh_names(ring, "~t", 1)
    ext = ring.extended((tname,), front=False)
    keep = tuple(range(ring.nvars))
    gens = [embed(g, ext, keep) for g in a.gens]
    gens.append(ext.one() - ext.var(ring.nvars) * embed(f, ext, keep))
    return buchberger(gens, GREVLEX, ring=ext).is_unit()


# ---------------------------------------------------------------------------
# dimension


_dim_cache: dict = {}


def dimension(a: Ideal) -> int:
    """Krull dimension of ring/a; -1 for the unit ideal.

    Computed as the largest set of variables meeting no leading-term
    support, a correct combinatorial reading of the leading-term ideal.
    Capped at 16 variables; beyond that the subset search refuses.
    """
    n = a.ring.nvars
    if n > DIMENSION_VARIABLE_CAP:
        raise PreconditionError(
            f"dimension search supports at most {DIMENSION_VARIABLE_CAP} variables, got {n}"
        )
    gb = a.groebner()
    if gb.is_unit():
        return -1
    supports = []
    for g in gb.generators:
        mask = 0
        for i in mono_support(g.leading_monomial(GREVLEX)):
            mask |= 1 << i
        supports.append(mask)
    supports = tuple(sorted(set(supports)))
    key = (n, supports)
    hit = _dim_cache.get(key)
    if hit is not None:
        return hit
    best = _max_independent(n, supports)
    _dim_cache[key] = best
    return best


def _max_independent(n: int, supports: tuple) -> int:
    if not supports:
        return n
    if any(s == 0 for s in supports):  # a constant leading term
        return -1
    from itertools import combinations

    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if all(s & ~mask for s in supports):
                return size
    return 0


# ---------------------------------------------------------------------------
# presented rings


class Flag(NamedTuple):
    value: bool
    provenance: str  # "certified" | "asserted"


class PresentedRing:
    """A quotient of a polynomial ring by a proper defining ideal.

    Carries optional certification state: reducedness, equidimensional
    flag, and an attached minimal-prime set.  Flags record whether they
    were certified by computation or asserted by the caller, and the
    provenance taints every downstream report.
    """

    __slots__ = ("ambient", "defining", "_dim", "_reduced", "_equidim", "_min_primes")

    def __init__(self, ambient: PolyRing, defining: Ideal):
        if defining.ring != ambient:
            raise StructuralError("defining ideal lives in a different ring")
        if defining.is_unit():
            raise StructuralError("defining ideal is the unit ideal; not a ring presentation")
        self.ambient = ambient
        self.defining = defining
        self._dim = None
        self._reduced = None
        self._equidim = None
        self._min_primes = None
        self._auto_certify_reduced()

    def _auto_certify_reduced(self):
        gens = self.defining.groebner().generators
        if not gens:
            self._reduced = Flag(True, "certified")
        elif all(g.is_monomial() for g in gens):
            squarefree = all(
                all(e <= 1 for e in next(iter(g.terms))) for g in gens
            )
            self._reduced = Flag(squarefree, "certified")

    def dim(self) -> int:
        if self._dim is None:
            self._dim = dimension(self.defining)
        return self._dim

    @property
    def reduced(self) -> Flag | None:
        return self._reduced

    @property
    def equidimensional(self) -> Flag | None:
        return self._equidim

    @property
    def min_primes(self):
        return self._min_primes

    def assert_reduced(self, value: bool = True):
        if self._reduced is not None and self._reduced.provenance == "certified":
            if self._reduced.value != value:
                raise PreconditionError("assertion contradicts a certified reducedness flag")
            return
        self._reduced = Flag(value, "asserted")

    def certify_reduced(self, value: bool):
        self._reduced = Flag(value, "certified")

    def assert_equidimensional(self, value: bool = True):
        if self._equidim is not None and self._equidim.provenance == "certified":
            if self._equidim.value != value:
                raise PreconditionError("assertion contradicts a certified equidimensionality flag")
            return
        self._equidim = Flag(value, "asserted")

    def certify_equidimensional(self, value: bool):
        self._equidim = Flag(value, "certified")

    def attach_min_primes(self, prime_set, verify: bool = True):
        """Attach a minimal-prime set; verified against the defining ideal."""
        if prime_set.for_ideal.ring != self.ambient:
            raise StructuralError("minimal primes computed in a different ring")
        if verify:
            prime_set.verify()
        if not prime_set.for_ideal.equals(self.defining):
            raise StructuralError("minimal primes attached to the wrong ideal")
        self._min_primes = prime_set

    def image_gens(self, a: Ideal) -> list:
        """Canonical representatives of a's generators in the quotient."""
        gb = self.defining.groebner()
        out = []
        for g in a.gens:
            r = normal_form(g, gb)
            if not r.is_zero():
                out.append(r)
        return out

    def __repr__(self):
        return f"{self.ambient}/{self.defining!r}"


def polynomial_quotient(ambient: PolyRing) -> PresentedRing:
    """The ring itself, presented with the zero ideal."""
    return PresentedRing(ambient, Ideal(ambient, ()))


def m_primary_status(a: Ideal, ring: PresentedRing) -> str:
    """One of 'm-primary', 'not-m-primary', 'unit-ideal' for a in ring."""
    if a.ring != ring.ambient:
        raise StructuralError("ideal lives outside the ring's ambient")
    d = dimension(ideal_sum(ring.defining, a))
    if d == -1:
        return "unit-ideal"
    return "m-primary" if d == 0 else "not-m-primary"


def is_m_primary(a: Ideal, ring: PresentedRing) -> bool:
    """True when a is primary to the irrelevant maximal ideal of ring."""
    return m_primary_status(a, ring) == "m-primary"


def height_in_quotient(ring: PresentedRing, a: Ideal) -> int | float:
    """Height of (a + defining)/defining in the quotient ring.

    Valid for equidimensional presentations only, via the difference of
    dimensions; refuses when equidimensionality is neither certified
    nor asserted.  The unit image gets the +infinity sentinel.
    """
    flag = ring.equidimensional
    if flag is None:
        raise PreconditionError(
            "equidimensionality unknown: certify via minimal primes or assert it first"
        )
    if not flag.value:
        raise PreconditionError(
            "height via dimension difference requires an equidimensional presentation"
        )
    d = dimension(ideal_sum(ring.defining, a))
    if d == -1:
        return HEIGHT_INFINITY
    return ring.dim() - d


# ---------------------------------------------------------------------------
# ring maps


class RingMap:
    """A field-fixing map from a polynomial ring into a (quotient) ring,
    given by one image polynomial per source variable."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: PolyRing, target, images: Iterable[Polynomial]):
        images = tuple(images)
        target_ambient = target.ambient if isinstance(target, PresentedRing) else target
        if not isinstance(target_ambient, PolyRing):
            raise StructuralError("target must be a polynomial ring or a presented quotient")
        if len(images) != source.nvars:
            raise StructuralError("need exactly one image per source variable")
        for g in images:
            if g.ring != target_ambient:
                raise StructuralError("image outside the target ambient ring")
        if source.field != target_ambient.field:
            raise StructuralError("source and target have different coefficient fields")
        self.source = source
        self.target = target
        self.images = images

    @property
    def target_ambient(self) -> PolyRing:
        return self.target.ambient if isinstance(self.target, PresentedRing) else self.target

    @property
    def target_defining(self) -> tuple:
        if isinstance(self.target, PresentedRing):
            return self.target.defining.gens
        return ()

    def apply(self, f: Polynomial) -> Polynomial:
        """Image of f, as a representative in the target ambient ring."""
        if f.ring != self.source:
            raise StructuralError("argument outside the source ring")
        if not self.images:
            return self.target_ambient.const(next(iter(f.terms.values()))) if f.terms else self.target_ambient.zero()
        return f.compose(list(self.images))

    def _combined(self):
        tgt = self.target_ambient
        src = self.source
        names = list(tgt.names)
        used = set(names)
        for nm in src.names:
            cand = nm
            while cand in used:
                cand = cand + "'"
            names.append(cand)
            used.add(cand)
        comb = PolyRing(src.field, names)
        tgt_map = tuple(range(tgt.nvars))
        src_map = tuple(tgt.nvars + i for i in range(src.nvars))
        return comb, tgt_map, src_map


def ring_map_kernel(phi: RingMap) -> Ideal:
    """Kernel of phi as an ideal of the source ring (graph elimination)."""
    comb, tgt_map, src_map = phi._combined()
    tgt = phi.target_ambient
    src = phi.source
    gens = []
    for i, img in enumerate(phi.images):
        gens.append(comb.var(src_map[i]) - embed(img, comb, tgt_map))
    for g in phi.target_defining:
        gens.append(embed(g, comb, tgt_map))
    elim = eliminate(Ideal(comb, tuple(gens)), tgt.nvars)
    return Ideal(src, tuple(strip_first(p, tgt.nvars, src) for p in elim.gens))


def contract(q: Ideal, phi: RingMap) -> Ideal:
    """phi^{-1}(q) in the source ring, for q in the target ambient."""
    if q.ring != phi.target_ambient:
        raise StructuralError("contracting an ideal outside the target ambient")
    comb, tgt_map, src_map = phi._combined()
    tgt = phi.target_ambient
    src = phi.source
    gens = []
    for i, img in enumerate(phi.images):
        gens.append(comb.var(src_map[i]) - embed(img, comb, tgt_map))
    for g in phi.target_defining:
        gens.append(embed(g, comb, tgt_map))
    for g in q.gens:
        gens.append(embed(g, comb, tgt_map))
    elim = eliminate(Ideal(comb, tuple(gens)), tgt.nvars)
    return Ideal(src, tuple(strip_first(p, tgt.nvars, src) for p in elim.gens))

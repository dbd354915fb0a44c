"""Squarefree monomial rings from simplicial complexes, and the
randomized connectedness harness built on them.

A complex is stored by its facets (pairwise incomparable, vertices
numbered from 1).  The face ring lives in one variable per vertex; its
defining ideal is generated by the minimal non-faces, its minimal
primes are the variable complements of the facets, and for pure
complexes the minimal-prime graph has an edge exactly when two facets
share a codimension-one face.  The harness samples pure complexes with
a connected graph, adjoins few enough monomial elements, and checks the
punctured spectrum modulo them stays connected.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

from .errors import PreconditionError, StructuralError
from .fields import QQ, Field
from .gamma import (
    ConnectivityReport,
    PrimeGraph,
    build_gamma,
    is_connected,
    punctured_spectrum_connected,
)
from .ideals import Ideal, PresentedRing
from .minprimes import MinimalPrimeSet, PrimeCertificate, is_equidimensional
from .polynomials import PolyRing

COMPLEX_VERTEX_CAP = 16


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet description of a finite simplicial complex.

    Facets must be pairwise incomparable and use vertices 1..n; the
    void complex (no facets) needs the explicit flag.
    """

    n_vertices: int
    facets: tuple  # of frozensets
    allow_void: bool = False

    def __post_init__(self):
        if self.n_vertices < 0 or self.n_vertices > COMPLEX_VERTEX_CAP:
            raise StructuralError(
                f"vertex count must lie in 0..{COMPLEX_VERTEX_CAP}"
            )
        if not self.facets and not self.allow_void:
            raise StructuralError("no facets; pass allow_void for the void complex")
        seen = []
        for f in self.facets:
            if not isinstance(f, frozenset):
                raise StructuralError("facets must be frozensets")
            if not f:
                raise StructuralError("empty facet; use the void flag instead")
            if any(v < 1 or v > self.n_vertices for v in f):
                raise StructuralError("facet vertex out of range")
            seen.append(f)
        for i, f in enumerate(seen):
            for j, g in enumerate(seen):
                if i != j and f <= g:
                    raise StructuralError("facets must be pairwise incomparable")

    def is_face(self, s: frozenset) -> bool:
        return any(s <= f for f in self.facets)

    def facet_sizes(self) -> tuple:
        return tuple(sorted(len(f) for f in self.facets))

    def canonical_facets(self) -> tuple:
        return tuple(sorted((tuple(sorted(f)) for f in self.facets)))


def complex_from_lists(n: int, facets) -> SimplicialComplex:
    return SimplicialComplex(n, tuple(frozenset(f) for f in facets))


def is_pure(cplx: SimplicialComplex) -> bool:
    sizes = {len(f) for f in cplx.facets}
    return len(sizes) <= 1


def face_ring_ambient(cplx: SimplicialComplex, field: Field = QQ) -> PolyRing:
    return PolyRing(field, tuple(f"x{i}" for i in range(1, cplx.n_vertices + 1)))


def sr_ideal(cplx: SimplicialComplex, ring: PolyRing | None = None) -> Ideal:
    """The defining ideal of the face ring: one squarefree monomial per
    minimal non-face."""
    if ring is None:
        ring = face_ring_ambient(cplx)
    if ring.nvars != cplx.n_vertices:
        raise StructuralError("ambient ring has the wrong number of variables")
    n = cplx.n_vertices
    gens = []
    for size in range(1, n + 1):
        for combo in combinations(range(1, n + 1), size):
            s = frozenset(combo)
            if cplx.is_face(s):
                continue
            if all(cplx.is_face(s - {v}) for v in s):
                mono = tuple(1 if i + 1 in s else 0 for i in range(n))
                gens.append(ring.monomial(mono))
    return Ideal(ring, tuple(gens))


def facet_min_primes(cplx: SimplicialComplex, ring: PolyRing | None = None) -> MinimalPrimeSet:
    """Minimal primes of the face ring, one per facet: the variables of
    the complementary vertex set.  The full simplex gives the zero
    ideal as its single prime."""
    if ring is None:
        ring = face_ring_ambient(cplx)
    ideal_j = sr_ideal(cplx, ring)
    n = cplx.n_vertices
    primes = []
    for f in sorted(cplx.facets, key=lambda f: tuple(sorted(f))):
        complement = [i for i in range(1, n + 1) if i not in f]
        p = Ideal(ring, tuple(ring.var(i - 1) for i in complement))
        primes.append((p, PrimeCertificate("monomial-variable-prime")))
    primes.sort(key=lambda pc: pc[0].canonical_key())
    return MinimalPrimeSet(ideal_j, tuple(primes), "computed-monomial")


def face_ring(cplx: SimplicialComplex, field: Field = QQ) -> PresentedRing:
    """The presented face ring with reducedness, purity, and minimal
    primes attached (facet route, verified on attach)."""
    ring = face_ring_ambient(cplx, field)
    pres = PresentedRing(ring, sr_ideal(cplx, ring))
    pres.attach_min_primes(facet_min_primes(cplx, ring))
    if is_pure(cplx):
        is_equidimensional(pres)
    return pres


def facet_adjacency_graph(cplx: SimplicialComplex) -> PrimeGraph:
    """Combinatorial shortcut for pure complexes: facets adjacent when
    they share all but one vertex.  Must agree with the computed
    minimal-prime graph; the tests pin that equivalence."""
    if not is_pure(cplx):
        raise PreconditionError("facet adjacency shortcut needs a pure complex")
    facets = sorted(cplx.facets, key=lambda f: tuple(sorted(f)))
    ring = face_ring_ambient(cplx)
    n = cplx.n_vertices
    order = []
    for f in facets:
        complement = [i for i in range(1, n + 1) if i not in f]
        p = Ideal(ring, tuple(ring.var(i - 1) for i in complement))
        order.append((p.canonical_key(), f))
    order.sort(key=lambda t: t[0])
    facets = [f for _, f in order]
    labels = tuple(tuple(sorted(f)) for f in facets)
    edges = set()
    size = len(facets[0]) if facets else 0
    for i in range(len(facets)):
        for j in range(i + 1, len(facets)):
            if len(facets[i] & facets[j]) == size - 1:
                edges.add((i, j))
    return PrimeGraph(labels, frozenset(edges))


def join(c1: SimplicialComplex, c2: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join: every facet of one unioned with every facet of
    the other, on the disjoint union of the vertex sets."""
    n = c1.n_vertices + c2.n_vertices
    facets = []
    for f in c1.facets:
        for g in c2.facets:
            facets.append(frozenset(f | {v + c1.n_vertices for v in g}))
    return SimplicialComplex(n, tuple(facets))


# ---------------------------------------------------------------------------
# random generation


def random_pure_complex(rng: random.Random, n: int, size: int, count: int) -> SimplicialComplex:
    pool = list(combinations(range(1, n + 1), size))
    if count > len(pool):
        raise PreconditionError("more facets requested than exist at that size")
    chosen = rng.sample(pool, count)
    return SimplicialComplex(n, tuple(frozenset(f) for f in chosen))


def random_pure_connected_complex(
    n: int, size: int, count: int, seed: int, budget: int = 1000
) -> SimplicialComplex:
    """Rejection-sample a pure complex whose minimal-prime graph is
    connected; refuses after ``budget`` failed draws."""
    if size < 1 or size > n:
        raise PreconditionError("facet size out of range")
    rng = random.Random(seed)
    for _ in range(budget):
        cand = random_pure_complex(rng, n, size, count)
        graph = build_gamma(face_ring(cand))
        if is_connected(graph).connected:
            return cand
    raise PreconditionError(
        f"no connected pure complex found in {budget} draws for (n={n}, size={size}, count={count})"
    )


# ---------------------------------------------------------------------------
# the randomized connectedness harness


@dataclass
class HarnessTrial:
    index: int
    n_vertices: int
    facet_size: int
    facets: list
    adjoined: list
    status: str
    connected: bool | None

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "n_vertices": self.n_vertices,
            "facet_size": self.facet_size,
            "facets": self.facets,
            "adjoined": self.adjoined,
            "status": self.status,
            "connected": self.connected,
        }


@dataclass
class HarnessReport:
    trials: int
    seed: int
    passed: int
    failed: int
    records: list = dc_field(default_factory=list)
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "failed": self.failed,
            "ok": self.ok,
            "records": [r.to_json_dict() for r in self.records],
            "failures": self.failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def default_generator_count(dim: int) -> int:
    """The widest count the connectedness statement allows: dim - 2."""
    return max(0, dim - 2)


def faltings_harness(
    trials: int,
    seed: int,
    max_vertices: int = 8,
    max_facet_size: int = 5,
    generator_count_rule=default_generator_count,
    field: Field = QQ,
) -> HarnessReport:
    """Randomized check of the connectedness statement at desk scale.

    Each trial: draw a pure complex with a connected minimal-prime
    graph on at most ``max_vertices`` vertices, adjoin at most
    ``dim - 2`` random monomials, and test that the punctured spectrum
    of the quotient stays connected.  Any disconnected trial is a
    failure and its reproduction data is recorded.
    """
    if max_vertices < 2 or max_vertices > 12:
        raise PreconditionError("vertex bound must lie in 2..12")
    rng = random.Random(seed)
    report = HarnessReport(trials=trials, seed=seed, passed=0, failed=0)
    for idx in range(trials):
        n = rng.randint(3, max_vertices)
        size = rng.randint(2, min(max_facet_size, n))
        pool_size = comb(n, size)
        count = rng.randint(1, min(pool_size, 8))
        sub_seed = rng.randrange(2**31)
        try:
            cplx = random_pure_connected_complex(n, size, count, sub_seed)
        except PreconditionError:
            cplx = SimplicialComplex(n, (frozenset(range(1, size + 1)),))
        pres = face_ring(cplx, field)
        dim = pres.dim()
        wanted = generator_count_rule(dim)
        if wanted > max(0, dim - 2):
            raise PreconditionError(
                "generator count rule exceeds the dim - 2 bound of the statement"
            )
        gens = _random_monomials(rng, pres.ambient, wanted)
        a = Ideal(pres.ambient, tuple(gens))
        result = punctured_spectrum_connected(pres, a)
        ok = result.status in ("connected", "empty")
        trial = HarnessTrial(
            index=idx,
            n_vertices=n,
            facet_size=size,
            facets=[list(f) for f in cplx.canonical_facets()],
            adjoined=[str(g) for g in gens],
            status=result.status,
            connected=result.connected,
        )
        report.records.append(trial)
        if ok:
            report.passed += 1
        else:
            report.failed += 1
            report.failures.append(
                {
                    "trial": trial.to_json_dict(),
                    "witness": result.witness,
                    "reproduce": {
                        "seed": seed,
                        "index": idx,
                        "complex_seed": sub_seed,
                    },
                }
            )
    return report


def _random_monomials(rng: random.Random, ring: PolyRing, count: int) -> list:
    out = []
    for _ in range(count):
        nsupp = rng.randint(1, min(3, ring.nvars))
        supp = rng.sample(range(ring.nvars), nsupp)
        mono = [0] * ring.nvars
        for i in supp:
            mono[i] = rng.randint(1, 2)
        out.append(ring.monomial(tuple(mono)))
    return out

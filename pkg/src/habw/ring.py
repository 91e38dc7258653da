"""Presented graded rings k[x1..xn]/I and their basic invariants.

The ring is connected graded with all variables of positive degree, so the
irrelevant ideal m = (x1..xn) is the unique graded maximal ideal and doubles
as the Jacobson radical of the model.  The reduced Groebner basis of the
defining ideal is computed once at construction and cached; the zero ring
(1 in I) is detected there and every later operation refuses it.
"""

from __future__ import annotations

import threading

from .errors import MalformedInputError, ZeroRingError
from .fields import PrimeField, RationalField
from .groebner import GBasis, GBElement, groebner_module
from .orders import ModuleOrder, MonomialOrder, mono_divides, monomials_of_degree
from .poly import Poly, PolyRing


def _poly_to_vec(p: Poly) -> dict:
    return {(0, m): c for m, c in p.terms.items()}


def _vec_to_poly(ring: PolyRing, vec: dict) -> Poly:
    return Poly(ring, {m: c for (_, m), c in vec.items()})


class RingPresentation:
    """A quotient k[x1..xn]/I with cached reduced Groebner basis of I."""

    def __init__(self, ambient: PolyRing, ideal_gens=(), *, allow_zero=False):
        self.ambient = ambient
        gens = []
        for g in ideal_gens:
            if not isinstance(g, Poly) or g.ring != ambient:
                raise MalformedInputError("ideal generator from a different ring")
            if not g.is_homogeneous():
                raise MalformedInputError(f"inhomogeneous ideal generator: {g}")
            if not g.is_zero():
                gens.append(g)
        self.ideal_gens = tuple(gens)
        self._rank1_order = ModuleOrder(ambient.mono_key, ambient.weights, (0,))
        vecs = [_poly_to_vec(g) for g in gens]
        basis = groebner_module(vecs, self._rank1_order, ambient.field, product_rule=True)
        self.gb = tuple(_vec_to_poly(ambient, v) for v in basis)
        self.gb_lead_monos = tuple(p.lead_mono() for p in self.gb)
        self._gb_index = GBasis(self._rank1_order, ambient.field)
        for v in basis:
            lead = max(v, key=self._rank1_order.key)
            self._gb_index.add(GBElement(v, lead, {}))
        self.is_zero_ring = any(all(e == 0 for e in m) for m in self.gb_lead_monos)
        if self.is_zero_ring and not allow_zero:
            raise ZeroRingError("1 lies in the defining ideal; the ring is zero")
        self._cache: dict = {}
        self._cache_lock = threading.Lock()

    # -- basic accessors -------------------------------------------------

    @property
    def field(self):
        return self.ambient.field

    @property
    def nvars(self) -> int:
        return self.ambient.n

    @property
    def weights(self):
        return self.ambient.weights

    def variables(self):
        return self.ambient.gens()

    def require_nonzero(self):
        if self.is_zero_ring:
            raise ZeroRingError("operation undefined over the zero ring")

    def cached(self, key, build):
        # Builds may recurse into other cached entries, so the lock guards
        # only the store; builds are pure, so racing duplicates are identical.
        if key in self._cache:
            return self._cache[key]
        value = build()
        with self._cache_lock:
            self._cache.setdefault(key, value)
        return self._cache[key]

    # -- normal forms ----------------------------------------------------

    def nf(self, p: Poly) -> Poly:
        """Unique fully reduced remainder of p modulo the defining ideal."""
        if p.ring != self.ambient:
            raise MalformedInputError("polynomial from a different ambient ring")
        if not self.gb:
            return p
        red, _ = self._gb_index.reduce(_poly_to_vec(p))
        return _vec_to_poly(self.ambient, red)

    def contains(self, p: Poly) -> bool:
        return self.nf(p).is_zero()

    def module_order(self, gen_degs) -> ModuleOrder:
        return ModuleOrder(self.ambient.mono_key, self.ambient.weights, tuple(gen_degs))

    def ideal_vectors(self, gen_degs) -> list[dict]:
        """The vectors g*e_j for g in the ideal basis; they carry the quotient."""
        out = []
        for comp in range(len(gen_degs)):
            for g in self.gb:
                out.append({(comp, m): c for m, c in g.terms.items()})
        return out

    # -- Hilbert data ------------------------------------------------------

    def standard_monomials(self, d: int):
        """Monomials of weighted degree d surviving modulo the lead ideal."""
        out = []
        for m in monomials_of_degree(self.ambient.n, self.ambient.weights, d):
            if not any(mono_divides(lm, m) for lm in self.gb_lead_monos):
                out.append(m)
        return out

    def hilbert(self, d: int) -> int:
        if self.is_zero_ring:
            return 0
        if d < 0:
            return 0
        return len(self.standard_monomials(d))

    def krull_dim(self) -> int:
        """Dimension from the initial ideal's standard-monomial combinatorics.

        dim R equals the largest size of a variable subset S such that no
        lead monomial of the ideal is supported inside S; the zero ring gets
        dimension -1 by convention.
        """
        if self.is_zero_ring:
            return -1
        n = self.ambient.n
        supports = [tuple(i for i, e in enumerate(m) if e > 0) for m in self.gb_lead_monos]
        best = 0
        for mask in range(1 << n):
            size = bin(mask).count("1")
            if size <= best:
                continue
            ok = True
            for sup in supports:
                if all(mask >> i & 1 for i in sup):
                    ok = False
                    break
            if ok:
                best = size
        return best

    def is_artinian(self) -> bool:
        return self.krull_dim() == 0

    def top_degree(self) -> int:
        """Largest degree with a nonzero component (artinian rings only)."""
        if not self.is_artinian():
            raise MalformedInputError("top degree is only defined for artinian rings")
        maxw = max(self.weights, default=1)
        d, top, misses = 0, -1, 0
        while misses <= maxw:
            if self.hilbert(d) > 0:
                top = d
                misses = 0
            else:
                misses += 1
            d += 1
        return top

    # -- plumbing ----------------------------------------------------------

    def quotient_by(self, extra_gens, *, allow_zero=False) -> "RingPresentation":
        return RingPresentation(
            self.ambient, list(self.ideal_gens) + list(extra_gens), allow_zero=allow_zero
        )

    def describe_field(self) -> str:
        f = self.field
        return f"GF({f.p})" if isinstance(f, PrimeField) else "QQ"

    def __eq__(self, other):
        return (
            isinstance(other, RingPresentation)
            and other.ambient == self.ambient
            and other.gb == self.gb
        )

    def __hash__(self):
        return hash((self.ambient, self.gb))

    def __repr__(self):
        amb = repr(self.ambient)
        if not self.ideal_gens:
            return amb
        return f"{amb}/({', '.join(str(g) for g in self.ideal_gens)})"


def make_ring(field, names, ideal=None, order=None, weights=None) -> RingPresentation:
    """Convenience constructor used across tests and the harness.

    ``ideal`` may contain Poly values or strings of the tiny expression
    grammar from the DSL module (resolved lazily to avoid an import cycle).
    """
    ambient = PolyRing(field, names, weights=weights, order=order)
    gens = []
    for g in ideal or ():
        if isinstance(g, str):
            from .dsl import parse_poly_str

            g = parse_poly_str(ambient, g)
        gens.append(g)
    return RingPresentation(ambient, gens)


def groebner_basis(gens, order: MonomialOrder | None = None):
    """Reduced Groebner basis of an ideal, deterministic for fixed input.

    All generators must be homogeneous and share one ambient ring; passing an
    order recomputes in that order.
    """
    gens = list(gens)
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens:
        if not isinstance(g, Poly) or g.ring != ring:
            raise MalformedInputError("generators from different rings")
        if not g.is_homogeneous():
            raise MalformedInputError(f"inhomogeneous generator: {g}")
    if order is not None and order != ring.order:
        ring = PolyRing(ring.field, ring.names, weights=ring.weights, order=order)
        gens = [Poly(ring, dict(g.terms)) for g in gens]
    modorder = ModuleOrder(ring.mono_key, ring.weights, (0,))
    basis = groebner_module(
        [_poly_to_vec(g) for g in gens], modorder, ring.field, product_rule=True
    )
    return [_vec_to_poly(ring, v) for v in basis]


def normal_form(f: Poly, gb) -> Poly:
    """Fully reduced remainder of f against a reduced basis."""
    gb = list(gb)
    if not gb:
        return f
    ring = gb[0].ring
    if f.ring != ring:
        raise MalformedInputError("polynomial and basis from different rings")
    modorder = ModuleOrder(ring.mono_key, ring.weights, (0,))
    index = GBasis(modorder, ring.field)
    for g in gb:
        lc = g.lead_coeff()
        if lc is None:
            continue
        monic = g.map_coeffs(lambda c: ring.field.div(c, lc))
        vec = _poly_to_vec(monic)
        index.add(GBElement(vec, max(vec, key=modorder.key), {}))
    red, _ = index.reduce(_poly_to_vec(f))
    return _vec_to_poly(ring, red)

"""Finitely presented graded modules over a presented ring.

A module is the cokernel of a graded matrix between free modules: we store
the generator degrees of the cover and the relation columns as vectors
(dicts mapping (component, monomial) to coefficients).  All computations
over the quotient ring R = P/I lift to the ambient polynomial ring P by
adjoining the vectors g*e_j for g in the Groebner basis of I.

Presentations are minimalized on construction: relation entries are reduced
to normal form, unit entries are eliminated by graded Nakayama, and the
relation columns are cut down to a minimal generating set, so cover ranks
are Betti numbers.
"""

from __future__ import annotations

from .errors import InternalCheckError, MalformedInputError
from .groebner import (
    GBasis,
    TaggedSpan,
    groebner_module,
    syzygy_generators,
    vec_degree,
)
from .linalg import RowReducer
from .orders import mono_divides, mono_mul, monomials_of_degree
from .poly import Poly
from .ring import RingPresentation


# --------------------------------------------------------------------------
# vector helpers


def vec_shift(vec: dict, mono: tuple) -> dict:
    return {(c, mono_mul(m, mono)): k for (c, m), k in vec.items()}


def vec_add(a: dict, b: dict, field) -> dict:
    out = dict(a)
    for t, k in b.items():
        s = field.add(out.get(t, field.zero), k)
        if field.is_zero(s):
            out.pop(t, None)
        else:
            out[t] = s
    return out


def vec_poly_mul(vec: dict, p: Poly, field) -> dict:
    out: dict = {}
    for (c, m), k in vec.items():
        for pm, pc in p.terms.items():
            t = (c, mono_mul(m, pm))
            s = field.add(out.get(t, field.zero), field.mul(k, pc))
            if field.is_zero(s):
                out.pop(t, None)
            else:
                out[t] = s
    return out


def vec_component(ring: RingPresentation, vec: dict, comp: int) -> Poly:
    return Poly(ring.ambient, {m: c for (j, m), c in vec.items() if j == comp})


def vec_from_polys(polys) -> dict:
    out = {}
    for comp, p in enumerate(polys):
        for m, c in p.terms.items():
            out[(comp, m)] = c
    return out


def vec_nf(ring: RingPresentation, vec: dict) -> dict:
    """Reduce every component modulo the ring's defining ideal."""
    if not ring.gb:
        return dict(vec)
    comps = sorted({c for (c, _) in vec})
    out: dict = {}
    for comp in comps:
        p = ring.nf(vec_component(ring, vec, comp))
        for m, c in p.terms.items():
            out[(comp, m)] = c
    return out


def vec_canonical_key(order, vec: dict):
    return tuple(sorted(((order.key(t), repr(c)) for t, c in vec.items()), reverse=True))


# --------------------------------------------------------------------------
# minimal generators and kernel coefficients


def minimal_generators(cands, modrel, ring: RingPresentation, gen_degs) -> list[dict]:
    """Graded-Nakayama minimal generating set of <cands> + <modrel> mod <modrel>.

    Candidates are processed degree by degree; in each degree the span of
    lower-degree picks, the ambient relations and the ideal multiples is a
    finite dimensional k-space handled by sparse row reduction.
    """
    order = ring.module_order(gen_degs)
    field = ring.field
    cands = [v for v in (vec_nf(ring, c) for c in cands) if v]
    for v in cands:
        if not _vec_homogeneous(order, v):
            raise MalformedInputError("inhomogeneous candidate generator")
    cands.sort(key=lambda v: (vec_degree(v, order), vec_canonical_key(order, v)))
    if not cands:
        return []
    span_src = [v for v in (vec_nf(ring, w) for w in modrel) if v]
    span_src += ring.ideal_vectors(gen_degs)
    selected: list[dict] = []
    n, weights = ring.nvars, ring.weights
    for d in sorted({vec_degree(v, order) for v in cands}):
        rr = RowReducer(field, order.key)
        for u in selected + span_src:
            du = vec_degree(u, order)
            if du is None or du > d:
                continue
            for m in monomials_of_degree(n, weights, d - du):
                rr.add_row(vec_shift(u, m))
        for v in cands:
            if vec_degree(v, order) != d:
                continue
            if rr.add_row(v):
                selected.append(v)
    return selected


def coefficients_in_kernel(vectors, modrel, ring: RingPresentation, ambient_gen_degs) -> list[dict]:
    """Generators of { c in R^s : sum c_i vectors_i lies in <modrel> over R }.

    The returned vectors live in the free module whose component i has
    generator degree deg(vectors[i]).
    """
    order = ring.module_order(ambient_gen_degs)
    tracked = [vec_nf(ring, v) for v in vectors]
    untracked = [v for v in (vec_nf(ring, w) for w in modrel) if v]
    untracked += ring.ideal_vectors(ambient_gen_degs)
    syz = syzygy_generators(tracked, untracked, order, ring.field)
    out = []
    for s in syz:
        s = vec_nf(ring, s)
        if s:
            out.append(s)
    return out


def _vec_homogeneous(order, vec: dict) -> bool:
    return len({order.term_deg(t) for t in vec}) <= 1


# --------------------------------------------------------------------------
# presentations


class ModulePresentation:
    """coker of a graded matrix, kept in minimal Groebner-reduced form."""

    def __init__(self, ring: RingPresentation, gen_degs, relations=(), *, _minimal=False):
        ring.require_nonzero()
        self.ring = ring
        gen_degs = tuple(int(a) for a in gen_degs)
        rels = []
        order = ring.module_order(gen_degs)
        for r in relations:
            v = vec_nf(ring, r)
            if not v:
                continue
            for (c, _m) in v:
                if not 0 <= c < len(gen_degs):
                    raise MalformedInputError("relation component out of range")
            if not _vec_homogeneous(order, v):
                raise MalformedInputError("inhomogeneous relation column")
            rels.append(v)
        if _minimal:
            self.gen_degs = gen_degs
            self.relations = tuple(rels)
            if _has_unit_entry(ring, self.gen_degs, rels):
                raise InternalCheckError("expected a minimal presentation")
        else:
            gd, rels = _eliminate_units(ring, list(gen_degs), rels)
            rels = minimal_generators(rels, [], ring, gd)
            self.gen_degs = tuple(gd)
            self.relations = tuple(rels)
        self._cache: dict = {}

    # -- plumbing --------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.gen_degs)

    def order(self):
        return self.ring.module_order(self.gen_degs)

    def rel_gb(self):
        """Reduced module GB of relations + I*F; canonical membership data."""
        if "relgb" not in self._cache:
            vecs = list(self.relations) + self.ring.ideal_vectors(self.gen_degs)
            basis = groebner_module(vecs, self.order(), self.ring.field)
            index = GBasis(self.order(), self.ring.field)
            from .groebner import GBElement

            for v in basis:
                index.add(GBElement(v, max(v, key=self.order().key), {}))
            self._cache["relgb"] = (basis, index)
        return self._cache["relgb"]

    def reduce_element(self, vec: dict) -> dict:
        _, index = self.rel_gb()
        red, _ = index.reduce(vec_nf(self.ring, vec))
        return red

    def element_is_zero(self, vec: dict) -> bool:
        return not self.reduce_element(vec)

    def is_zero(self) -> bool:
        if self.rank == 0:
            return True
        return all(
            self.element_is_zero({(j, (0,) * self.ring.nvars): self.ring.field.one})
            for j in range(self.rank)
        )

    def is_free_presentation(self) -> bool:
        return not self.relations

    def hilbert(self, d: int) -> int:
        """k-dimension of the degree-d component, via standard monomials."""
        basis, _ = self.rel_gb()
        leads = {}
        order = self.order()
        for v in basis:
            comp, mono = max(v, key=order.key)
            leads.setdefault(comp, []).append(mono)
        count = 0
        for j, a in enumerate(self.gen_degs):
            if d - a < 0:
                continue
            lj = leads.get(j, ())
            for m in monomials_of_degree(self.ring.nvars, self.ring.weights, d - a):
                if not any(mono_divides(lm, m) for lm in lj):
                    count += 1
        return count

    def twist(self, shift: int) -> "ModulePresentation":
        """M(-shift): generator degrees move up by shift."""
        return ModulePresentation(
            self.ring,
            tuple(a + shift for a in self.gen_degs),
            self.relations,
            _minimal=True,
        )

    def identity_columns(self) -> list[dict]:
        unit = (0,) * self.ring.nvars
        one = self.ring.field.one
        return [{(j, unit): one} for j in range(self.rank)]

    def __repr__(self):
        return f"ModulePresentation(rank={self.rank}, rels={len(self.relations)}, degs={self.gen_degs})"


def _has_unit_entry(ring, gen_degs, rels) -> bool:
    unitmono = (0,) * ring.nvars
    return any(m == unitmono for r in rels for (_c, m) in r)


def _eliminate_units(ring: RingPresentation, gen_degs: list, rels: list):
    """Prune cover generators hit by degree-zero relation entries (Nakayama)."""
    field = ring.field
    unitmono = (0,) * ring.nvars
    changed = True
    while changed:
        changed = False
        for ci, r in enumerate(rels):
            pivot = None
            for (c, m), k in r.items():
                if m == unitmono:
                    pivot = (c, k)
                    break
            if pivot is None:
                continue
            j, u = pivot
            inv = field.inv(u)
            new_rels = []
            for si, s in enumerate(rels):
                if si == ci:
                    continue
                pj = vec_component(ring, s, j)
                if pj.is_zero():
                    new_rels.append(s)
                    continue
                scaled = vec_poly_mul(r, pj.map_coeffs(lambda c0: field.mul(c0, inv)), field)
                s2 = vec_add(s, {t: field.neg(k) for t, k in scaled.items()}, field)
                new_rels.append(s2)
            # drop row j and reindex
            out = []
            for s in new_rels:
                v = {}
                for (c, m), k in s.items():
                    if c == j:
                        raise InternalCheckError("unit elimination left a pivot entry")
                    v[(c - 1 if c > j else c, m)] = k
                v = vec_nf(ring, v)
                if v:
                    out.append(v)
            del gen_degs[j]
            rels = out
            changed = True
            break
    return gen_degs, rels


# --------------------------------------------------------------------------
# constructors


def free_module(ring: RingPresentation, gen_degs=(0,)) -> ModulePresentation:
    return ModulePresentation(ring, gen_degs, (), _minimal=True)


def zero_module(ring: RingPresentation) -> ModulePresentation:
    return ModulePresentation(ring, (), (), _minimal=True)


def cyclic_module(ring: RingPresentation, ideal_polys=()) -> ModulePresentation:
    """R/(f1..fk) with its generator in degree 0."""
    rels = []
    for p in ideal_polys:
        if p.ring != ring.ambient:
            raise MalformedInputError("relation from a different ring")
        rels.append({(0, m): c for m, c in p.terms.items()})
    return ModulePresentation(ring, (0,), rels)


def residue_field(ring: RingPresentation) -> ModulePresentation:
    """k = R/m as an R-module; cached on the ring."""
    return ring.cached("residue_field", lambda: cyclic_module(ring, ring.variables()))


def from_matrix(ring: RingPresentation, rows, gen_degs=None) -> ModulePresentation:
    """coker of a matrix given as rows of Poly entries.

    Row j of the matrix is the coordinate of cover generator j, so columns
    are relations.  Generator degrees default to 0, which forces every entry
    in a column to share one total degree.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return zero_module(ring)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise MalformedInputError("ragged presentation matrix")
    if gen_degs is None:
        gen_degs = (0,) * len(rows)
    if len(gen_degs) != len(rows):
        raise MalformedInputError("one generator degree per matrix row is required")
    cols = []
    for c in range(width):
        vec = {}
        for j, row in enumerate(rows):
            p = row[c]
            if p.ring != ring.ambient:
                raise MalformedInputError("matrix entry from a different ring")
            for m, k in p.terms.items():
                vec[(j, m)] = k
        cols.append(vec)
    return ModulePresentation(ring, gen_degs, cols)


def direct_sum(m1: ModulePresentation, m2: ModulePresentation) -> ModulePresentation:
    if m1.ring != m2.ring:
        raise MalformedInputError("direct sum over different rings")
    off = m1.rank
    rels = list(m1.relations) + [
        {(c + off, m): k for (c, m), k in r.items()} for r in m2.relations
    ]
    return ModulePresentation(
        m1.ring, m1.gen_degs + m2.gen_degs, rels, _minimal=True
    )


def twisted_sum(mod: ModulePresentation, shifts) -> ModulePresentation:
    """Direct sum of copies M(-s) for s in shifts (empty sum is the zero module)."""
    ring = mod.ring
    gen_degs = []
    rels = []
    for ci, s in enumerate(shifts):
        off = ci * mod.rank
        gen_degs.extend(a + s for a in mod.gen_degs)
        rels.extend({(c + off, m): k for (c, m), k in r.items()} for r in mod.relations)
    return ModulePresentation(ring, gen_degs, rels, _minimal=True)


# --------------------------------------------------------------------------
# maps


class ModuleMap:
    """Degree-zero map between presented modules, as columns on the covers."""

    def __init__(self, source: ModulePresentation, target: ModulePresentation, cols, *, check=True):
        if source.ring != target.ring:
            raise MalformedInputError("map between modules over different rings")
        self.source = source
        self.target = target
        self.ring = source.ring
        cols = [vec_nf(self.ring, c) for c in cols]
        if len(cols) != source.rank:
            raise MalformedInputError("one column per source generator is required")
        self.cols = tuple(cols)
        if check:
            order = target.order()
            for j, col in enumerate(self.cols):
                if not col:
                    continue
                if not _vec_homogeneous(order, col):
                    raise MalformedInputError("map column is inhomogeneous")
                if vec_degree(col, order) != source.gen_degs[j]:
                    raise MalformedInputError("map does not have degree zero")
            for r in source.relations:
                if not target.element_is_zero(self.apply(r)):
                    raise MalformedInputError("map does not respect relations")

    def apply(self, vec: dict) -> dict:
        field = self.ring.field
        out: dict = {}
        for (j, m), k in vec.items():
            for (c, mm), kk in self.cols[j].items():
                t = (c, mono_mul(m, mm))
                s = field.add(out.get(t, field.zero), field.mul(k, kk))
                if field.is_zero(s):
                    out.pop(t, None)
                else:
                    out[t] = s
        return out

    def compose(self, inner: "ModuleMap") -> "ModuleMap":
        """self o inner."""
        if inner.target is not self.source and inner.target.gen_degs != self.source.gen_degs:
            raise MalformedInputError("maps are not composable")
        return ModuleMap(
            inner.source, self.target, [self.apply(c) for c in inner.cols], check=False
        )

    def is_zero_map(self) -> bool:
        return all(self.target.element_is_zero(c) for c in self.cols)

    def __repr__(self):
        return f"ModuleMap({self.source.rank} -> {self.target.rank})"


def identity_map(mod: ModulePresentation) -> ModuleMap:
    return ModuleMap(mod, mod, mod.identity_columns(), check=False)


def multiplication_map(mod: ModulePresentation, p: Poly) -> ModuleMap:
    """Multiplication by a homogeneous p, as a map M(-deg p) -> M."""
    if not p.is_homogeneous() or p.is_zero():
        raise MalformedInputError("multiplier must be nonzero homogeneous")
    d = p.degree()
    src = mod.twist(d)
    cols = [vec_poly_mul(e, p, mod.ring.field) for e in mod.identity_columns()]
    return ModuleMap(src, mod, cols, check=False)


# --------------------------------------------------------------------------
# kernels, cokernels, subquotients


def submodule_presentation(gens, ambient_gen_degs, ambient_rel, ring: RingPresentation):
    """Present (<gens> + <ambient_rel>)/<ambient_rel>; returns (module, chosen gens)."""
    sel = minimal_generators(gens, ambient_rel, ring, ambient_gen_degs)
    if not sel:
        return zero_module(ring), []
    order = ring.module_order(ambient_gen_degs)
    rels = coefficients_in_kernel(sel, ambient_rel, ring, ambient_gen_degs)
    gen_degs = [vec_degree(v, order) for v in sel]
    rels = minimal_generators(rels, [], ring, gen_degs)
    pres = ModulePresentation(ring, gen_degs, rels, _minimal=True)
    return pres, sel


def kernel(f: ModuleMap):
    """(ker f, inclusion ker f -> source)."""
    src, tgt, ring = f.source, f.target, f.ring
    if src.rank == 0:
        z = zero_module(ring)
        return z, ModuleMap(z, src, [], check=False)
    kgens = coefficients_in_kernel(list(f.cols), list(tgt.relations), ring, tgt.gen_degs)
    pres, sel = submodule_presentation(kgens, src.gen_degs, list(src.relations), ring)
    return pres, ModuleMap(pres, src, sel, check=False)


def cokernel(f: ModuleMap) -> ModulePresentation:
    tgt = f.target
    return ModulePresentation(
        tgt.ring, tgt.gen_degs, list(tgt.relations) + list(f.cols)
    )


def image_in_target(f: ModuleMap):
    """(im f presented abstractly, generators of im f inside the target cover)."""
    return submodule_presentation(
        list(f.cols), f.target.gen_degs, list(f.target.relations), f.ring
    )


def homology_at(f: ModuleMap, g: ModuleMap) -> ModulePresentation:
    """ker(g)/im(f) for composable maps with g o f = 0."""
    mid, ring = g.source, g.ring
    if mid.rank == 0:
        return zero_module(ring)
    kgens = coefficients_in_kernel(
        list(g.cols), list(g.target.relations), ring, g.target.gen_degs
    )
    den = list(mid.relations) + list(f.cols)
    pres, _ = submodule_presentation(kgens, mid.gen_degs, den, ring)
    return pres


# --------------------------------------------------------------------------
# duals and biduality


def _dual_kernel_gens(mod: ModulePresentation):
    """Generators of ker(A^T) inside the dual cover of M = coker A."""
    ring = mod.ring
    m = mod.rank
    rel_degs = [vec_degree(r, mod.order()) for r in mod.relations]
    cols_t = []
    for j in range(m):
        vec = {}
        for c, r in enumerate(mod.relations):
            p = vec_component(ring, r, j)
            for mm, k in p.terms.items():
                vec[(c, mm)] = k
        cols_t.append(vec)
    dual_target_degs = tuple(-d for d in rel_degs)
    return coefficients_in_kernel(cols_t, [], ring, dual_target_degs)


def hom_to_ring_with_gens(mod: ModulePresentation):
    """(M^* , its generators as vectors in the dual cover R^rank with degrees -gen_degs)."""
    ring = mod.ring
    if mod.rank == 0:
        return zero_module(ring), []
    kgens = _dual_kernel_gens(mod)
    dual_degs = tuple(-a for a in mod.gen_degs)
    return submodule_presentation(kgens, dual_degs, [], ring)


def hom_to_ring(mod: ModulePresentation) -> ModulePresentation:
    """M^* = Hom(M, R)."""
    return hom_to_ring_with_gens(mod)[0]


def biduality(mod: ModulePresentation):
    """The canonical map rho: M -> M^** plus (injective, surjective, iso) flags."""
    ring = mod.ring
    star, star_gens = hom_to_ring_with_gens(mod)
    dd, dd_gens = hom_to_ring_with_gens(star)
    if mod.rank == 0:
        rho = ModuleMap(mod, dd, [], check=False)
        return rho, True, True, True
    if dd.rank == 0:
        rho = ModuleMap(mod, dd, [{} for _ in range(mod.rank)], check=False)
        inj = mod.is_zero()
        return rho, inj, True, inj
    ddual_degs = tuple(-a for a in star.gen_degs)
    span = TaggedSpan(
        dd_gens, ring.ideal_vectors(ddual_degs), ring.module_order(ddual_degs), ring.field
    )
    cols = []
    for j in range(mod.rank):
        psi: dict = {}
        for l, gvec in enumerate(star_gens):
            p = vec_component(ring, gvec, j)
            for m, c in p.terms.items():
                psi[(l, m)] = c
        expr = span.express(vec_nf(ring, psi))
        if expr is None:
            raise InternalCheckError("evaluation functional escaped ker of the dualized matrix")
        cols.append(expr)
    rho = ModuleMap(mod, dd, cols)
    ker_mod, _ = kernel(rho)
    inj = ker_mod.is_zero()
    surj = cokernel(rho).is_zero()
    return rho, inj, surj, inj and surj


# --------------------------------------------------------------------------
# quotients by an element, cover sequence

def quotient_by_element(mod: ModulePresentation, x: Poly):
    """(M/xM over R/(x), x-regular-on-R flag, x-regular-on-M flag)."""
    ring = mod.ring
    if x.ring != ring.ambient:
        raise MalformedInputError("element from a different ring")
    if not x.is_homogeneous() or x.is_zero() or x.degree() == 0:
        raise MalformedInputError("need a homogeneous element of positive degree")
    if ring.contains(x):
        raise MalformedInputError("element is zero in the ring")
    rmod = free_module(ring, (0,))
    kr, _ = kernel(multiplication_map(rmod, x))
    nzd_r = kr.is_zero()
    km, _ = kernel(multiplication_map(mod, x))
    nzd_m = km.is_zero()
    newring = ring.quotient_by([x])
    quotient = ModulePresentation(newring, mod.gen_degs, mod.relations)
    return quotient, nzd_r, nzd_m


def mod_element(mod: ModulePresentation, x: Poly) -> ModulePresentation:
    """M/xM presented over the same ring."""
    if not x.is_homogeneous() or x.is_zero() or x.degree() == 0:
        raise MalformedInputError("need a homogeneous element of positive degree")
    extra = [vec_poly_mul(e, x, mod.ring.field) for e in mod.identity_columns()]
    return ModulePresentation(mod.ring, mod.gen_degs, list(mod.relations) + extra)


def ses_from_cover(mod: ModulePresentation):
    """0 -> K -> F -> M -> 0 with F the minimal free cover.

    Returns (K, F, M, incl, proj); K is presented from the minimal generators
    of the relation submodule, so the sequence is exact by construction.
    """
    ring = mod.ring
    free = free_module(ring, mod.gen_degs)
    proj = ModuleMap(free, mod, mod.identity_columns(), check=False)
    kmod, sel = submodule_presentation(
        list(mod.relations), mod.gen_degs, [], ring
    )
    incl = ModuleMap(kmod, free, sel, check=False)
    return kmod, free, mod, incl, proj


# --------------------------------------------------------------------------
# public matrix-level surface


def syzygy_matrix(ring: RingPresentation, rows, gen_degs=None):
    """Columns generating the kernel of the matrix map, over the quotient ring.

    The matrix is given as rows of Poly entries (rows = target components);
    the result is again rows of Poly entries, with one row per input column.
    Column degrees come from the input polynomials, so a column may die in
    the quotient but must not be identically zero.
    """
    ring.require_nonzero()
    rows = [list(r) for r in rows]
    if not rows:
        return []
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise MalformedInputError("ragged matrix")
    if gen_degs is None:
        gen_degs = (0,) * len(rows)
    gen_degs = tuple(gen_degs)
    order = ring.module_order(gen_degs)
    cols, col_degs = [], []
    for c in range(width):
        vec = {}
        for j, row in enumerate(rows):
            p = row[c]
            if p.ring != ring.ambient:
                raise MalformedInputError("matrix entry from a different ring")
            for m, k in p.terms.items():
                vec[(j, m)] = k
        if not vec:
            raise MalformedInputError(f"column {c} is identically zero")
        if not _vec_homogeneous(order, vec):
            raise MalformedInputError(f"column {c} is inhomogeneous")
        cols.append(vec)
        col_degs.append(vec_degree(vec, order))
    cands = coefficients_in_kernel(cols, [], ring, gen_degs)
    syz = minimal_generators(cands, [], ring, tuple(col_degs))
    return [[vec_component(ring, s, c) for s in syz] for c in range(width)]


def hilbert_function(obj, d: int) -> int:
    """Degree-d k-dimension of a presented ring or module."""
    if isinstance(obj, RingPresentation):
        return obj.hilbert(d)
    if isinstance(obj, ModulePresentation):
        return obj.hilbert(d)
    raise MalformedInputError(f"no Hilbert function for {type(obj)!r}")

"""Minimal graded free resolutions, syzygies and Ext into the ring.

Resolutions are computed lazily one syzygy step at a time and cached on the
module; extension is serialized by a per-module lock while completed
prefixes can be read concurrently.  Every step is self-checked: differentials
compose to zero and minimality (all entries in the irrelevant ideal) holds by
construction of the minimal generator selection.
"""

from __future__ import annotations

import threading

from .errors import InternalCheckError, MalformedInputError
from .groebner import vec_degree
from .modules import (
    ModulePresentation,
    coefficients_in_kernel,
    minimal_generators,
    vec_component,
    vec_nf,
    zero_module,
)

FINITE = "FINITE"
TRUNCATED = "TRUNCATED"


class FreeResolution:
    """Chain of minimal differentials d_1, d_2, ... for one module.

    ``steps[i]`` holds (columns of d_{i+1}, generator degrees of F_{i+1}).
    F_0 is the module's cover.  ``finite_length`` is set once some syzygy
    module is zero; until then the resolution is truncated at the computed
    length.
    """

    def __init__(self, module: ModulePresentation):
        self.module = module
        self.ring = module.ring
        self.steps: list[tuple[list[dict], tuple[int, ...]]] = []
        self.finite_length: int | None = 0 if module.rank == 0 else None
        self._lock = threading.Lock()
        if module.rank > 0 and module.relations:
            degs = tuple(
                vec_degree(r, module.order()) for r in module.relations
            )
            self.steps.append((list(module.relations), degs))
            self._selfcheck(0)
        elif module.rank > 0:
            self.finite_length = 0

    # -- geometry ---------------------------------------------------------

    def computed_length(self) -> int:
        return len(self.steps)

    def gen_degs(self, i: int):
        """Generator degrees of F_i."""
        if i == 0:
            return self.module.gen_degs
        return self.steps[i - 1][1]

    def columns(self, i: int):
        """Columns of d_i (empty list beyond a finite resolution)."""
        if i < 1:
            raise MalformedInputError("differentials are indexed from 1")
        if i > len(self.steps):
            return []
        return self.steps[i - 1][0]

    def betti(self, i: int) -> int:
        if i == 0:
            return self.module.rank
        if i <= len(self.steps):
            return len(self.steps[i - 1][0])
        return 0

    def graded_betti(self, i: int):
        return tuple(sorted(self.gen_degs(i))) if i <= len(self.steps) or i == 0 else ()

    # -- extension ----------------------------------------------------------

    def extend_to(self, length: int):
        """Ensure differentials up to d_length are known or finiteness is."""
        with self._lock:
            while self.finite_length is None and len(self.steps) < length:
                cols, degs = self.steps[-1]
                prev_degs = self.gen_degs(len(self.steps) - 1)
                cands = coefficients_in_kernel(cols, [], self.ring, prev_degs)
                sel = minimal_generators(cands, [], self.ring, degs)
                if not sel:
                    self.finite_length = len(self.steps)
                    return self
                order = self.ring.module_order(degs)
                new_degs = tuple(vec_degree(v, order) for v in sel)
                self.steps.append((sel, new_degs))
                self._selfcheck(len(self.steps) - 1)
        return self

    def _selfcheck(self, idx: int):
        """d_i . d_{i+1} = 0 exactly, and minimality of the new differential."""
        ring = self.ring
        cols, _ = self.steps[idx]
        unit = (0,) * ring.nvars
        for col in cols:
            if any(m == unit for (_c, m) in col):
                raise InternalCheckError("non-minimal differential entry")
        if idx == 0:
            return
        prev_cols, _ = self.steps[idx - 1]
        field = ring.field
        for col in cols:
            acc: dict = {}
            for (j, m), k in col.items():
                for (c, mm), kk in prev_cols[j].items():
                    t = (c, tuple(a + b for a, b in zip(mm, m)))
                    s = field.add(acc.get(t, field.zero), field.mul(k, kk))
                    if field.is_zero(s):
                        acc.pop(t, None)
                    else:
                        acc[t] = s
            if vec_nf(ring, acc):
                raise InternalCheckError("differentials do not compose to zero")

    # -- periodicity --------------------------------------------------------

    def _step_signature(self, i: int):
        """Shift- and scaling-invariant canonical form of (F_i, d_{i+1})."""
        degs = self.gen_degs(i)
        if not degs:
            return ("zero",)
        base = min(degs)
        order = self.ring.module_order(degs)
        field = self.ring.field
        canon_cols = []
        for col in self.columns(i + 1):
            pivot = max(col)  # plain tuple order on (comp, mono): shift-invariant
            inv = field.inv(col[pivot])
            body = tuple(
                sorted((c, m, repr(field.mul(k, inv))) for (c, m), k in col.items())
            )
            canon_cols.append((vec_degree(col, order) - base, body))
        return (tuple(d - base for d in degs), tuple(sorted(canon_cols)))

    def detect_periodicity(self, limit: int | None = None):
        """(start, period) when computed syzygy steps repeat, else None.

        A heuristic certificate for infinite projective dimension (flagged
        EVENTUALLY-PERIODIC): two steps match when their generator degrees
        agree up to a uniform shift and the differentials agree up to column
        permutation and unit scaling.  Periods 1 and 2 are checked.  The
        optional limit caps the steps consulted, so bound-limited callers
        see the same answer whatever the cache already holds.
        """
        L = len(self.steps)
        if limit is not None:
            L = min(L, limit)
        for period in (1, 2):
            for start in range(0, L - period):
                if self._step_signature(start) == self._step_signature(start + period):
                    return (start, period)
        return None


def resolution(module: ModulePresentation) -> FreeResolution:
    if "resolution" not in module._cache:
        module._cache["resolution"] = FreeResolution(module)
    return module._cache["resolution"]


def free_resolution(module: ModulePresentation, max_len: int) -> FreeResolution:
    """Minimal free resolution computed out to length max_len (spec surface)."""
    if max_len < 0:
        raise MalformedInputError("max_len must be nonnegative")
    return resolution(module).extend_to(max_len)


def syzygy(module: ModulePresentation, n: int) -> ModulePresentation:
    """K_n of the minimal resolution: K_0 = M, K_n = coker-free presentation
    (F_n, d_{n+1})."""
    if n < 0:
        raise MalformedInputError("syzygy index must be nonnegative")
    if n == 0:
        return module
    res = resolution(module).extend_to(n + 1)
    if res.finite_length is not None and n > res.finite_length:
        return zero_module(module.ring)
    degs = res.gen_degs(n)
    cols = res.columns(n + 1)
    return ModulePresentation(module.ring, degs, cols, _minimal=True)


def _transpose_cols(ring, cols, source_rank: int, col_degs):
    """Columns of the dualized map d^T given columns of d.

    d maps F (rank = len(cols)) to G (rank = source_rank); the transpose maps
    G^dual to F^dual.  Output column j collects the j-th component of every
    input column.
    """
    out = []
    for j in range(source_rank):
        vec = {}
        for c, col in enumerate(cols):
            p = vec_component(ring, col, j)
            for m, k in p.terms.items():
                vec[(c, m)] = k
        out.append(vec)
    return out


def ext_to_ring(module: ModulePresentation, i: int) -> ModulePresentation:
    """Ext^i(M, R) as cohomology of the dualized minimal resolution."""
    if i < 0:
        raise MalformedInputError("Ext index must be nonnegative")
    ring = module.ring
    if module.rank == 0:
        return zero_module(ring)
    res = resolution(module).extend_to(i + 1)
    if res.finite_length is not None and i > res.finite_length:
        return zero_module(ring)
    from .modules import submodule_presentation

    rank_i = res.betti(i)
    dual_degs = tuple(-a for a in res.gen_degs(i))
    cols_next = res.columns(i + 1)
    if cols_next:
        next_dual_degs = tuple(-a for a in res.gen_degs(i + 1))
        cols_t = _transpose_cols(ring, cols_next, rank_i, next_dual_degs)
        kgens = coefficients_in_kernel(cols_t, [], ring, next_dual_degs)
    else:
        unit = (0,) * ring.nvars
        kgens = [{(j, unit): ring.field.one} for j in range(rank_i)]
    if i == 0:
        image = []
    else:
        cols_i = res.columns(i)
        image = _transpose_cols(ring, cols_i, res.betti(i - 1), dual_degs)
        image = [v for v in (vec_nf(ring, w) for w in image) if v]
    pres, _ = submodule_presentation(kgens, dual_degs, image, ring)
    return pres


def ext_into(front: ModulePresentation, coeffs: ModulePresentation, i: int) -> ModulePresentation:
    """Ext^i(N, M) as cohomology of Hom(F_., M) for the minimal resolution of N.

    Hom(F_t, M) is a direct sum of twisted copies of M; the induced maps act
    by the transposed differential entries.  Used for the Ext route to depth
    (front = R/m) where coefficients are a general module.
    """
    if i < 0:
        raise MalformedInputError("Ext index must be nonnegative")
    ring = front.ring
    if ring != coeffs.ring:
        raise MalformedInputError("modules over different rings")
    from .modules import ModuleMap, homology_at, twisted_sum, vec_poly_mul, zero_module

    if front.rank == 0 or coeffs.rank == 0:
        return zero_module(ring)
    res = resolution(front).extend_to(i + 1)
    if res.finite_length is not None and i > res.finite_length:
        return zero_module(ring)

    def hom_level(t: int) -> ModulePresentation:
        return twisted_sum(coeffs, [-a for a in res.gen_degs(t)])

    def hom_map(t: int) -> ModuleMap:
        """Hom(d_t, M): Hom(F_{t-1}, M) -> Hom(F_t, M)."""
        cols_t = res.columns(t)
        src, tgt = hom_level(t - 1), hom_level(t)
        rank_m = coeffs.rank
        field = ring.field
        cols = []
        for j in range(res.betti(t - 1)):
            for g in range(rank_m):
                col: dict = {}
                for c, dcol in enumerate(cols_t):
                    entry = vec_component(ring, dcol, j)
                    if entry.is_zero():
                        continue
                    moved = vec_poly_mul(
                        {(c * rank_m + g, (0,) * ring.nvars): field.one}, entry, field
                    )
                    for tt, cc in moved.items():
                        s = field.add(col.get(tt, field.zero), cc)
                        if field.is_zero(s):
                            col.pop(tt, None)
                        else:
                            col[tt] = s
                cols.append(col)
        return ModuleMap(src, tgt, cols, check=False)

    mid = hom_level(i)
    if mid.rank == 0:
        return zero_module(ring)
    if i == 0:
        f = ModuleMap(zero_module(ring), mid, [], check=False)
    else:
        f = hom_map(i)
    if res.finite_length is not None and i + 1 > res.finite_length:
        g = ModuleMap(mid, zero_module(ring), [{} for _ in range(mid.rank)], check=False)
    else:
        g = hom_map(i + 1)
    return homology_at(f, g)


def euler_characteristic_check(module: ModulePresentation, dmax: int | None = None) -> bool:
    """Alternating Hilbert sum of the computed resolution matches the module.

    With differentials known up to d_L, exactness of F_L -> ... -> F_0 -> M
    gives hf(M) = sum (-1)^i hf(F_i) + (-1)^(L+1) hf(ker d_L); the correction
    term is computed from coker(d_L), so the identity is exact even for a
    truncated resolution.
    """
    ring = module.ring
    res = resolution(module)
    L = res.computed_length()
    if dmax is None:
        degs = [d for i in range(L + 1) for d in res.gen_degs(i)]
        dmax = (max(degs) if degs else 0) + 2

    def free_hilbert(i, d):
        return sum(ring.hilbert(d - a) for a in res.gen_degs(i))

    finite = res.finite_length is not None and res.finite_length <= L
    coker_last = None
    if not finite:
        # steps are nonempty here: a module with no relations is finite at 0
        coker_last = ModulePresentation(
            ring, res.gen_degs(L - 1), res.columns(L), _minimal=True
        )
    for d in range(0, dmax + 1):
        total = module.hilbert(d)
        for i in range(L + 1):
            total -= (-1 if i % 2 else 1) * free_hilbert(i, d)
        if finite:
            if total != 0:
                return False
            continue
        image_h = free_hilbert(L - 1, d) - coker_last.hilbert(d)
        ker_h = free_hilbert(L, d) - image_h
        sign = -1 if (L + 1) % 2 else 1
        if total != sign * ker_h:
            return False
    return True

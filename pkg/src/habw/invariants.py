"""Depth, projective dimension, G-class, G-dimension, FP-injectivity bounds,
and the Gorenstein / Cohen-Macaulay / irreducibility verdicts.

Conventions of the graded-local model: m is the irrelevant ideal generated
by the variables, depth means depth with respect to m, and every finitely
presented module is automatically of type (FP)-infinity.

Certification levels:

* depth is exact (two independent routes, compared on every call),
* finite pd is exact; infinite pd carries either a periodicity certificate
  or the depth obstruction (a finite pd would have to equal
  depth R - depth M, so a live resolution past that step settles it),
* G-class uses an Ext window [1, bound] unless an exactness certificate
  applies: finite pd truncates the dual complex, and over an artinian ring
  with one-dimensional socle the ring is self-injective, so all positive Ext
  against it vanish identically,
* infinite G-dimension is grounded in the syzygy criterion plus the
  Auslander-Bridger identity: a finite value would force the
  (depth R - depth M)-th syzygy into the G-class, so an exact witness
  against that syzygy settles infiniteness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalCheckError, MalformedInputError, ZeroModuleError
from .koszul import koszul_homology
from .modules import (
    ModuleMap,
    ModulePresentation,
    biduality,
    cyclic_module,
    free_module,
    hom_to_ring,
    kernel,
    residue_field,
    vec_poly_mul,
)
from .orders import mono_divides, monomials_of_degree
from .poly import Poly
from .resolution import ext_into, ext_to_ring, resolution, syzygy
from .ring import RingPresentation

TRUE = "TRUE"
FALSE = "FALSE"
UNDETERMINED = "UNDETERMINED"
INFINITE = "infinite"

EXACT_PD = "EXACT-PD"
EXACT_SYZYGY = "EXACT-SYZYGY"
BOUNDED = "BOUNDED"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: str | None = None
    bound: int | None = None
    exact: bool = False

    def __post_init__(self):
        if self.status == FALSE and not self.witness:
            raise InternalCheckError("FALSE verdicts must carry a witness")
        if self.status == UNDETERMINED and self.bound is None:
            raise InternalCheckError("UNDETERMINED verdicts must carry their bound")

    def as_dict(self):
        return {
            "status": self.status,
            "witness": self.witness,
            "bound": self.bound,
            "exact": self.exact,
        }


@dataclass(frozen=True)
class GdimResult:
    value: int | str  # nonnegative int, INFINITE or UNDETERMINED
    certification: str  # EXACT_PD, EXACT_SYZYGY or BOUNDED
    witness: str | None = None
    bound: int | None = None

    @property
    def is_finite(self) -> bool:
        return isinstance(self.value, int)

    @property
    def is_exact(self) -> bool:
        return self.certification in (EXACT_PD, EXACT_SYZYGY)

    def as_dict(self):
        return {
            "value": self.value,
            "certification": self.certification,
            "witness": self.witness,
            "bound": self.bound,
        }


def default_bound(ring: RingPresentation) -> int:
    """Ext-vanishing window: 2 * (number of variables) + 4."""
    return 2 * ring.nvars + 4


def pd_window(ring: RingPresentation) -> int:
    """Resolution length for pd searches: dim of the ambient ring + 4."""
    return ring.nvars + 4


def _mechanical_window(ring: RingPresentation, bound: int) -> int:
    """How far the Ext window is verified mechanically when an exactness
    certificate already covers all indices; resolutions over 4+ variable
    artinian rings grow too fast for the full window at desk scale."""
    n = ring.nvars
    if n <= 2:
        return bound
    if n == 3:
        return min(bound, 6)
    return min(bound, 3)


def ring_module(ring: RingPresentation) -> ModulePresentation:
    return ring.cached("ring_module", lambda: free_module(ring, (0,)))


# ---------------------------------------------------------------------------
# socle


def _socle_data(ring: RingPresentation):
    def build():
        ring.require_nonzero()
        rmod = ring_module(ring)
        n = ring.nvars
        field = ring.field
        if n == 0:
            one = ring.ambient.one()
            return rmod, [one]
        target = free_module(ring, tuple(-w for w in ring.weights))
        col: dict = {}
        for i, v in enumerate(ring.variables()):
            part = vec_poly_mul({(i, (0,) * n): field.one}, v, field)
            col.update(part)
        f = ModuleMap(rmod, target, [col], check=False)
        ker, incl = kernel(f)
        from .modules import vec_component

        elems = [vec_component(ring, c, 0) for c in incl.cols]
        return ker, elems

    return ring.cached("socle", build)


def socle_module(ring: RingPresentation) -> ModulePresentation:
    """(0 : m) as a submodule of R, via the kernel of R -> (+) R(w_i)."""
    return _socle_data(ring)[0]


def socle_elements(ring: RingPresentation):
    """Ring elements generating the socle (empty when the socle is zero)."""
    return list(_socle_data(ring)[1])


def socle_dimension(ring: RingPresentation) -> int:
    def build():
        if not ring.is_artinian():
            raise MalformedInputError("socle dimension computed for artinian rings only")
        soc = socle_module(ring)
        top = ring.top_degree()
        return sum(soc.hilbert(d) for d in range(0, top + 1))

    return ring.cached("socle_dim", build)


# ---------------------------------------------------------------------------
# depth


def _depth_koszul(module: ModulePresentation) -> int:
    ring = module.ring
    n = ring.nvars
    xs = ring.variables()
    if n == 0:
        return 0
    for j in range(n, -1, -1):
        if not koszul_homology(xs, module, j).is_zero():
            return n - j
    raise InternalCheckError("Koszul complex has no homology at all")


def _depth_ext(module: ModulePresentation) -> int:
    ring = module.ring
    k = residue_field(ring)
    for i in range(0, ring.nvars + 1):
        if not ext_into(k, module, i).is_zero():
            return i
    raise InternalCheckError("Ext(k, M) vanished through the whole possible range")


def depth(module: ModulePresentation) -> int:
    """depth_m via Koszul homology, cross-checked against the Ext route.

    The two characterizations (top nonvanishing Koszul homology versus first
    nonvanishing Ext from R/m) are computed independently; disagreement is an
    internal error, never a user error.
    """
    if module.is_zero():
        raise ZeroModuleError("depth of the zero module is undefined (m M = M)")
    if "depth" not in module._cache:
        kz = _depth_koszul(module)
        ex = _depth_ext(module)
        if kz != ex:
            raise InternalCheckError(
                f"depth mismatch: Koszul route {kz}, Ext route {ex}"
            )
        module._cache["depth"] = kz
    return module._cache["depth"]


def depth_of_ring(ring: RingPresentation) -> int:
    return ring.cached("depth", lambda: depth(ring_module(ring)))


def is_cohen_macaulay(ring: RingPresentation) -> bool:
    """Graded Noetherian criterion: depth R equals Krull dimension."""
    ring.require_nonzero()
    return depth_of_ring(ring) == ring.krull_dim()


# ---------------------------------------------------------------------------
# projective dimension


def projective_dimension(module: ModulePresentation, bound: int | None = None):
    """(value, certificate-string); value is an int, INFINITE or UNDETERMINED.

    Finite values are lengths of the minimal resolution.  INFINITE carries
    either a periodicity certificate or the depth obstruction: a finite pd
    would equal depth R - depth M, so betti_{v+1} != 0 rules it out.
    """
    ring = module.ring
    if bound is None:
        bound = pd_window(ring)
    if bound < 1:
        raise MalformedInputError("pd bound must be at least 1")
    if module.is_zero():
        return 0, "zero module"
    # Decisions below consult only the window the bound allows, so answers
    # do not depend on how far other calls already extended the cache.
    res = resolution(module).extend_to(bound + 1)
    if res.finite_length is not None and res.finite_length <= bound:
        return res.finite_length, "minimal resolution terminated"
    per = res.detect_periodicity(limit=bound + 1)
    if per is not None:
        return INFINITE, f"EVENTUALLY-PERIODIC(start={per[0]}, period={per[1]})"
    v = depth_of_ring(ring) - depth(module)
    if v < 0:
        return INFINITE, "depth M exceeds depth R"
    if v <= bound:
        if res.betti(v + 1) != 0:
            return INFINITE, f"nonzero syzygy at depth difference {v} + 1"
        raise InternalCheckError("resolution neither terminated nor alive")
    return UNDETERMINED, f"no certificate within bound {bound}"


# ---------------------------------------------------------------------------
# G-class membership


def _ext_vanishing_scan(module: ModulePresentation, bound: int):
    """(first index in [1, bound] with Ext^i(M, R) != 0 or None, exact flag).

    exact means the vanishing claim covers all i > 0: true when the minimal
    resolution is finite and shorter than the scanned range.
    """
    res = resolution(module)
    for i in range(1, bound + 1):
        if not ext_to_ring(module, i).is_zero():
            return i, True
        if res.finite_length is not None and i >= res.finite_length:
            return None, True
    return None, False


def _artinian_self_injective(ring: RingPresentation) -> bool:
    """Exactness certificate: artinian with one-dimensional socle means the
    ring is graded self-injective, so Ext^{>0}(-, R) vanishes identically."""
    return ring.cached(
        "self_injective",
        lambda: ring.is_artinian() and socle_dimension(ring) == 1,
    )


def gclass_membership(module: ModulePresentation, bound: int | None = None) -> Verdict:
    """Totally-reflexive test: Ext^{>0}(M, R) = 0, Ext^{>0}(M*, R) = 0, and
    the canonical map to the double dual is an isomorphism.

    The Ext conditions are checked on the window [1, bound]; the verdict is
    exact when a finiteness certificate covers the tail.  FALSE always
    carries the failing axiom and index.
    """
    ring = module.ring
    if bound is None:
        bound = default_bound(ring)
    key = ("gclass", bound)
    if key not in module._cache:
        module._cache[key] = _gclass_uncached(module, bound)
    return module._cache[key]


def _gclass_uncached(module: ModulePresentation, bound: int) -> Verdict:
    ring = module.ring
    if module.is_zero():
        return Verdict(TRUE, witness="zero module", bound=bound, exact=True)
    certified = _artinian_self_injective(ring)
    window = _mechanical_window(ring, bound) if certified else bound

    i, exact1 = _ext_vanishing_scan(module, window)
    if i is not None:
        return Verdict(FALSE, witness=f"Ext^{i}(M, R) != 0", bound=bound, exact=True)
    star = hom_to_ring(module)
    j, exact2 = _ext_vanishing_scan(star, window)
    if j is not None:
        return Verdict(FALSE, witness=f"Ext^{j}(M*, R) != 0", bound=bound, exact=True)
    _rho, inj, surj, iso = biduality(module)
    if not iso:
        what = "injective" if not inj else "surjective"
        return Verdict(
            FALSE, witness=f"M -> M** is not {what}", bound=bound, exact=True
        )
    exact = certified or (exact1 and exact2)
    return Verdict(TRUE, bound=bound, exact=exact)


# ---------------------------------------------------------------------------
# G-dimension


def gdim(module: ModulePresentation, bound: int | None = None) -> GdimResult:
    """G-dimension with certification.

    Finite pd settles it (pd equals Gdim for modules of finite projective
    dimension).  Otherwise the Auslander-Bridger candidate v = depth R -
    depth M is tested by the syzygy criterion: membership of the v-th syzygy
    in the G-class decides between the exact value v and infinity.
    """
    ring = module.ring
    if bound is None:
        bound = default_bound(ring)
    key = ("gdim", bound)
    if key not in module._cache:
        module._cache[key] = _gdim_uncached(module, bound)
    return module._cache[key]


def _gdim_uncached(module: ModulePresentation, bound: int) -> GdimResult:
    ring = module.ring
    if module.is_zero():
        return GdimResult(0, EXACT_PD, witness="zero module (flagged convention)", bound=bound)
    pd, pd_cert = projective_dimension(module, min(bound, pd_window(ring)) if bound >= 1 else 1)
    if isinstance(pd, int):
        _verify_top_ext(module, pd)
        return GdimResult(pd, EXACT_PD, witness=pd_cert, bound=bound)
    dr = depth_of_ring(ring)
    dm = depth(module)
    v = dr - dm
    if v < 0:
        return GdimResult(
            INFINITE,
            BOUNDED,
            witness="depth M exceeds depth R, impossible for finite G-dimension",
            bound=bound,
        )
    if v > bound:
        return GdimResult(UNDETERMINED, BOUNDED, witness=f"candidate {v} above bound", bound=bound)
    sv = syzygy(module, v)
    verdict = gclass_membership(sv, bound)
    if verdict.status == TRUE:
        value = 0
        for i in range(v, 0, -1):
            if not ext_to_ring(module, i).is_zero():
                value = i
                break
        if value != v:
            return GdimResult(
                value,
                BOUNDED,
                witness=f"syzygy {v} totally reflexive but top Ext at {value}",
                bound=bound,
            )
        return GdimResult(v, EXACT_SYZYGY, witness=None, bound=bound)
    if verdict.status == FALSE:
        persisted = _witness_persistence(module, bound)
        return GdimResult(
            INFINITE,
            BOUNDED,
            witness=f"syzygy {v} fails G-class ({verdict.witness}); "
            f"witness persists through syzygies 0..{persisted}",
            bound=bound,
        )
    return GdimResult(UNDETERMINED, BOUNDED, witness=verdict.witness, bound=bound)


def _verify_top_ext(module: ModulePresentation, pd: int):
    """Finite pd must come with Ext^pd(M, R) != 0 (graded Nakayama)."""
    if pd == 0:
        return
    if ext_to_ring(module, pd).is_zero():
        raise InternalCheckError(f"finite pd {pd} but Ext^{pd}(M, R) = 0")


_PERSISTENCE_SIZE_GUARD = 600


def _witness_persistence(module: ModulePresentation, bound: int) -> int:
    """Largest j such that every syzygy 0..j is seen to fail the G-class,
    using nonvanishing Ext^i(M, R) with i > j as the recurring witness.

    The scan stops at a size guard on the total Betti mass of the resolution
    computed so far; the guard is a function of the module alone (never of
    cache state left by other calls), so reports stay deterministic.
    """
    res = resolution(module)
    top = 0
    for i in range(1, bound + 2):
        res.extend_to(i)
        mass = sum(res.betti(t) for t in range(i + 1))
        if mass > _PERSISTENCE_SIZE_GUARD:
            break
        if not ext_to_ring(module, i).is_zero():
            top = i
    return max(0, top - 1)


# ---------------------------------------------------------------------------
# FP-injective dimension window


class _LCG:
    """Deterministic 64-bit linear congruential generator (documented in the
    README: s -> 6364136223846793005 s + 1442695040888963407 mod 2^64)."""

    def __init__(self, seed: int):
        self.state = seed & 0xFFFFFFFFFFFFFFFF

    def next(self) -> int:
        self.state = (
            6364136223846793005 * self.state + 1442695040888963407
        ) & 0xFFFFFFFFFFFFFFFF
        return self.state >> 33

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.next() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.next() % len(seq)]


def _antichains(monos, max_size):
    """Divisibility antichains among the monomials, sizes 1..max_size."""
    out = []

    def rec(start, current):
        if current:
            out.append(tuple(current))
        if len(current) >= max_size:
            return
        for idx in range(start, len(monos)):
            m = monos[idx]
            if any(
                mono_divides(c, m) or mono_divides(m, c) for c in current
            ):
                continue
            current.append(m)
            rec(idx + 1, current)
            current.pop()

    rec(0, [])
    return out


def fp_injective_sample(ring: RingPresentation, seed: int = 0, random_count: int = 32):
    """The documented finite proxy for 'all finitely generated ideals'.

    Monomial antichains in degrees <= 3 (all sizes when few variables, pairs
    otherwise), every variable-subset ideal including m, the zero ideal, and
    seeded random homogeneous ideals with 1-3 generators of degree <= 3.
    Returns a list of (label, tuple-of-Poly) pairs, deduplicated by the
    reduced basis of the ideal they generate in R.
    """
    amb = ring.ambient
    n = amb.n
    monos = []
    for d in (1, 2, 3):
        monos.extend(ring.standard_monomials(d))
    max_size = 3 if n <= 2 else 2
    ideals: list[tuple[str, tuple]] = [("(0)", ())]
    for chain in _antichains(monos, max_size):
        polys = tuple(amb.monomial(m) for m in chain)
        ideals.append(("(" + ", ".join(str(p) for p in polys) + ")", polys))
    for mask in range(1, 1 << n):
        polys = tuple(amb.var(i) for i in range(n) if mask >> i & 1)
        ideals.append(("(" + ", ".join(str(p) for p in polys) + ")", polys))
    rng = _LCG(seed * 2654435761 + 97)
    degrees_avail = [d for d in (1, 2, 3) if ring.standard_monomials(d)]
    for _ in range(random_count):
        if not degrees_avail:
            break
        gens = []
        for _g in range(rng.randint(1, 3)):
            d = rng.choice(degrees_avail)
            terms = {}
            for m in monomials_of_degree(n, amb.weights, d):
                c = rng.randint(0, 4)
                if c:
                    terms[m] = ring.field.of_int(c)
            if terms:
                gens.append(Poly(amb, terms))
        if gens:
            ideals.append(("(" + ", ".join(str(g) for g in gens) + ")", tuple(gens)))
    seen = set()
    out = []
    for label, polys in ideals:
        try:
            quot = ring.quotient_by(polys, allow_zero=True)
        except MalformedInputError:
            continue
        sig = tuple(str(g) for g in quot.gb)
        if sig in seen:
            continue
        seen.add(sig)
        out.append((label, polys))
    return out


def fp_injective_dim_at_most(
    ring: RingPresentation, n: int, *, seed: int = 0, sample=None
) -> Verdict:
    """Does Ext^{n+1}(R/I, R) vanish for every sampled finitely generated I?

    FALSE carries a witness ideal.  A clean sweep is only a sampled claim,
    reported UNDETERMINED here, except over one-variable rings where the
    monomial sample is the full ideal lattice; the harness upgrades sampled
    sweeps through the Gorenstein equivalence.
    """
    ring.require_nonzero()
    if n < 0:
        raise MalformedInputError("FP-injective bound must be nonnegative")
    if sample is None:
        sample = fp_injective_sample(ring, seed=seed)
    for label, polys in sample:
        mod = cyclic_module(ring, polys)
        if mod.is_zero():
            continue
        if not ext_to_ring(mod, n + 1).is_zero():
            return Verdict(FALSE, witness=f"Ext^{n + 1}(R/{label}, R) != 0", bound=n)
    exhaustive = ring.nvars <= 1
    if exhaustive:
        return Verdict(TRUE, witness=f"full ideal lattice ({len(sample)} ideals)", bound=n, exact=True)
    return Verdict(
        UNDETERMINED,
        witness=f"all {len(sample)} sampled ideals pass",
        bound=n,
    )


# ---------------------------------------------------------------------------
# Gorenstein and irreducibility


def is_gorenstein(ring: RingPresentation, bound: int | None = None) -> Verdict:
    """Finite G-dimension of the residue field decides Gorenstein here.

    In the artinian case the verdict is cross-checked against the socle
    criterion (dimension one); disagreement raises, it never misreports.
    """
    ring.require_nonzero()
    if bound is None:
        bound = default_bound(ring)
    g = gdim(residue_field(ring), bound)
    artinian = ring.is_artinian()
    socle = socle_dimension(ring) if artinian else None
    if g.is_finite and g.is_exact:
        if artinian and socle != 1:
            raise InternalCheckError(
                f"gdim k = {g.value} finite but socle dimension {socle}"
            )
        return Verdict(TRUE, witness=f"gdim(k) = {g.value} ({g.certification})", bound=bound, exact=True)
    if g.value == INFINITE:
        witness = f"gdim(k) infinite: {g.witness}"
        if artinian:
            if socle == 1:
                raise InternalCheckError("socle dimension 1 but gdim k judged infinite")
            witness = f"socle dimension {socle} (and {witness})"
        return Verdict(FALSE, witness=witness, bound=bound, exact=True)
    return Verdict(UNDETERMINED, witness=g.witness, bound=bound)


def zero_ideal_irreducible(ring: RingPresentation) -> Verdict:
    """Graded-artinian criterion: (0) is irreducible iff the socle is a line."""
    ring.require_nonzero()
    if not ring.is_artinian():
        raise MalformedInputError("irreducibility test requires an artinian ring")
    s = socle_dimension(ring)
    if s == 1:
        return Verdict(TRUE, witness="socle dimension 1", exact=True)
    return Verdict(FALSE, witness=f"socle dimension {s}", exact=True)

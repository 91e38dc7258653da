"""Buchberger engine for submodules of graded free modules.

Everything here works on "vectors": dicts mapping (component, exponent tuple)
to a nonzero field coefficient.  An ideal is the rank-one case.  The engine
serves three jobs:

* reduced Groebner bases (normal forms, membership, Hilbert data),
* syzygy generators via Schreyer-style tag tracking: every basis element
  carries the coefficient vector expressing it in terms of the tracked
  inputs, and each reduction of an S-vector to zero emits one syzygy,
* expressing a vector as an explicit combination of given generators.

Pair pruning uses the Gebauer-Moeller chain rules restricted to pairs with a
common lead component (the only pairs that exist for modules).  The coprime
("product") shortcut is only sound for rank-one untracked runs: for modules
the classical proof needs a product of two basis elements, and in tracked
runs dropping a pair would silently drop its Koszul syzygy.

Selection is the normal strategy: lowest lcm degree first, ties broken by the
monomial order and then input position, so runs are deterministic.
"""

from __future__ import annotations

import heapq

from .orders import (
    ModuleOrder,
    mono_div,
    mono_divides,
    mono_gcd_is_one,
    mono_lcm,
    mono_mul,
)


def vec_sub_scaled(target: dict, vec: dict, coeff, shift, field):
    """target -= coeff * x^shift * vec, in place."""
    for (c, m), k in vec.items():
        key = (c, mono_mul(m, shift))
        s = field.sub(target.get(key, field.zero), field.mul(k, coeff))
        if field.is_zero(s):
            target.pop(key, None)
        else:
            target[key] = s


def vec_scale(vec: dict, coeff, field) -> dict:
    return {t: field.mul(k, coeff) for t, k in vec.items()}


def vec_degree(vec: dict, order: ModuleOrder):
    """Twisted degree of a homogeneous vector; None when zero."""
    if not vec:
        return None
    return order.term_deg(next(iter(vec)))


def vec_is_homogeneous(vec: dict, order: ModuleOrder) -> bool:
    degs = {order.term_deg(t) for t in vec}
    return len(degs) <= 1


class GBElement:
    __slots__ = ("vec", "lead", "tag")

    def __init__(self, vec, lead, tag):
        self.vec = vec
        self.lead = lead
        self.tag = tag


class GBasis:
    """A list of monic basis vectors indexed by lead component."""

    def __init__(self, order: ModuleOrder, field):
        self.order = order
        self.field = field
        self.elements: list[GBElement] = []
        self._by_comp: dict[int, list[GBElement]] = {}

    def add(self, el: GBElement):
        self.elements.append(el)
        self._by_comp.setdefault(el.lead[0], []).append(el)

    def find_reducer(self, term):
        comp, mono = term
        for el in self._by_comp.get(comp, ()):
            if mono_divides(el.lead[1], mono):
                return el
        return None

    def reduce(self, vec: dict, tag: dict | None = None):
        """Full normal form of vec; the tag (if given) is updated in lockstep.

        Basis elements are monic, so no coefficient inversions are needed
        beyond the stored vectors.
        """
        field = self.field
        key = self.order.key
        work = dict(vec)
        rem: dict = {}
        while work:
            t = max(work, key=key)
            c = work[t]
            red = self.find_reducer(t)
            if red is None:
                rem[t] = c
                del work[t]
            else:
                shift = mono_div(t[1], red.lead[1])
                vec_sub_scaled(work, red.vec, c, shift, field)
                if tag is not None and red.tag:
                    vec_sub_scaled(tag, red.tag, c, shift, field)
        return rem, tag


def _spair_key(order: ModuleOrder, comp, lcm, i, j):
    deg = order.term_deg((comp, lcm))
    return (deg, order.ring_key(lcm), i, j)


def buchberger(
    vectors: list[dict],
    order: ModuleOrder,
    field,
    *,
    track: int = 0,
    product_rule: bool = False,
):
    """Run Buchberger on the given homogeneous vectors.

    The first ``track`` inputs carry unit tags; the run then emits one tag
    vector per zero reduction, and together these generate the syzygy module
    of the tracked inputs modulo the span of the untracked ones.

    Returns (GBasis, syzygies) where syzygies is a list of tag vectors
    (dicts over tag components 0..track-1).
    """
    if product_rule and track:
        raise ValueError("the coprime shortcut is not sound in tracked runs")
    gb = GBasis(order, field)
    syzygies: list[dict] = []
    pairs: list = []  # heap of (key, i, j)
    alive: set[tuple[int, int]] = set()

    def push_pair(i: int, j: int):
        ei, ej = gb.elements[i], gb.elements[j]
        comp = ei.lead[0]
        lcm = mono_lcm(ei.lead[1], ej.lead[1])
        heapq.heappush(pairs, (_spair_key(order, comp, lcm, i, j), i, j))
        alive.add((i, j))

    def pair_lcm(i: int, j: int):
        return mono_lcm(gb.elements[i].lead[1], gb.elements[j].lead[1])

    def add_element(vec: dict, tag: dict):
        lc = vec[max(vec, key=order.key)]
        if not field.is_zero(field.sub(lc, field.one)):
            inv = field.inv(lc)
            vec = vec_scale(vec, inv, field)
            tag = vec_scale(tag, inv, field)
        lead = max(vec, key=order.key)
        el = GBElement(vec, lead, tag)
        t = len(gb.elements)
        gb.add(el)

        # Gebauer-Moeller update, same-component pairs only.
        cand = [
            i
            for i in range(t)
            if gb.elements[i].lead[0] == lead[0]
        ]
        lcms = {i: mono_lcm(gb.elements[i].lead[1], lead[1]) for i in cand}
        kept = []
        for i in cand:
            li = lcms[i]
            drop = False
            for j in cand:
                if j == i:
                    continue
                lj = lcms[j]
                if lj != li and mono_divides(lj, li):
                    drop = True  # M-rule: a strictly smaller new lcm exists
                    break
            if not drop:
                kept.append(i)
        # F-rule: one pair per lcm value (kept is in index order, so first wins).
        seen: dict = {}
        for i in kept:
            if lcms[i] not in seen:
                seen[lcms[i]] = i
        kept = sorted(seen.values())
        # B-rule on old pairs.
        for (i, j) in list(alive):
            ei, ej = gb.elements[i], gb.elements[j]
            if ei.lead[0] != lead[0]:
                continue
            lij = pair_lcm(i, j)
            if (
                mono_divides(lead[1], lij)
                and lcms.get(i) != lij
                and lcms.get(j) != lij
            ):
                alive.discard((i, j))
        for i in kept:
            if product_rule and mono_gcd_is_one(gb.elements[i].lead[1], lead[1]):
                continue
            push_pair(i, t)

    # Feed the inputs.  A zero reduction with a nonzero tag is a syzygy no
    # matter which input produced it: untracked inputs pick up tag mass from
    # tracked reducers.
    for idx, v in enumerate(vectors):
        tag = {(idx, (0,) * len(order.weights)): field.one} if idx < track else {}
        red, tag = gb.reduce(dict(v), tag)
        if not red:
            if track and tag:
                syzygies.append(tag)
            continue
        add_element(red, tag)

    # Main loop.
    while pairs:
        key, i, j = heapq.heappop(pairs)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        ei, ej = gb.elements[i], gb.elements[j]
        lcm = mono_lcm(ei.lead[1], ej.lead[1])
        si = mono_div(lcm, ei.lead[1])
        sj = mono_div(lcm, ej.lead[1])
        s: dict = {}
        vec_sub_scaled(s, ei.vec, field.neg(field.one), si, field)
        vec_sub_scaled(s, ej.vec, field.one, sj, field)
        tag: dict = {}
        if ei.tag:
            vec_sub_scaled(tag, ei.tag, field.neg(field.one), si, field)
        if ej.tag:
            vec_sub_scaled(tag, ej.tag, field.one, sj, field)
        red, tag = gb.reduce(s, tag)
        if not red:
            if track and tag:
                syzygies.append(tag)
            continue
        add_element(red, tag)

    return gb, syzygies


def reduced_basis(gb: GBasis) -> list[dict]:
    """Minimal, fully interreduced, monic, deterministically sorted basis."""
    order, field = gb.order, gb.field
    els = sorted(gb.elements, key=lambda e: order.key(e.lead))
    minimal: list[GBElement] = []
    for el in els:
        comp, mono = el.lead
        if any(
            m.lead[0] == comp and mono_divides(m.lead[1], mono) for m in minimal
        ):
            continue
        minimal.append(el)
    out = GBasis(order, field)
    vecs: list[dict] = []
    for i, el in enumerate(minimal):
        others = GBasis(order, field)
        for j, other in enumerate(minimal):
            if j != i:
                others.add(other)
        red, _ = others.reduce(dict(el.vec))
        if not red:
            continue
        lc = red[max(red, key=order.key)]
        if not field.is_zero(field.sub(lc, field.one)):
            red = vec_scale(red, field.inv(lc), field)
        vecs.append(red)
    vecs.sort(key=lambda v: order.key(max(v, key=order.key)))
    return vecs


def groebner_module(
    vectors: list[dict], order: ModuleOrder, field, *, product_rule=False
) -> list[dict]:
    """Reduced Groebner basis of the submodule generated by the vectors."""
    gb, _ = buchberger(
        [v for v in vectors if v], order, field, product_rule=product_rule
    )
    return reduced_basis(gb)


def syzygy_generators(
    tracked: list[dict], untracked: list[dict], order: ModuleOrder, field
) -> list[dict]:
    """Generators of { c : sum c_i tracked_i in <untracked> }.

    Emitted tags live in the free module with one component per tracked
    input; the generator degrees of that module are the tracked vectors'
    degrees, which the caller reconstructs.
    """
    inputs = list(tracked) + [v for v in untracked if v]
    _, syz = buchberger(inputs, order, field, track=len(tracked))
    return syz


class TaggedSpan:
    """Membership-with-witness against a fixed generating set.

    Built once, then ``express`` rewrites vectors as explicit combinations of
    the tracked generators (modulo the untracked ones).
    """

    def __init__(self, tracked, untracked, order: ModuleOrder, field):
        inputs = list(tracked) + [v for v in untracked if v]
        self.gb, _ = buchberger(inputs, order, field, track=len(tracked))
        self.field = field

    def express(self, vec: dict) -> dict | None:
        """Coefficients c with vec = sum c_i tracked_i (mod untracked), or None."""
        red, tag = self.gb.reduce(dict(vec), {})
        if red:
            return None
        return {t: self.field.neg(c) for t, c in tag.items()}

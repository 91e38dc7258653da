"""Monomial orders on exponent tuples and their extension to free modules.

A monomial is a tuple of nonnegative integer exponents.  An order provides a
sort key; bigger key means bigger monomial.  All three classical orders are
total, multiplicative and (in the graded cases trivially) well-founded.

Module terms are pairs (component, monomial).  The module order compares the
twisted degree first, then the ring key, then the component, which keeps the
comparison compatible with multiplication by ring monomials.
"""

from __future__ import annotations

ORDER_KINDS = ("degrevlex", "deglex", "lex")


class MonomialOrder:
    """One of degrevlex / deglex / lex, with an optional variable permutation.

    ``perm[i]`` gives the position that variable i is read from before
    comparison, so distinct permutations give genuinely different orders.
    """

    def __init__(self, kind: str = "degrevlex", perm: tuple[int, ...] | None = None):
        if kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.perm = tuple(perm) if perm is not None else None

    def key_fn(self, weights: tuple[int, ...]):
        """Return mono -> sort key for exponent tuples under these weights."""
        perm = self.perm
        kind = self.kind

        def wdeg(m):
            return sum(e * w for e, w in zip(m, weights))

        if kind == "lex":
            if perm is None:
                return lambda m: m
            return lambda m: tuple(m[i] for i in perm)
        if kind == "deglex":
            if perm is None:
                return lambda m: (wdeg(m), m)
            return lambda m: (wdeg(m), tuple(m[i] for i in perm))
        # degrevlex: higher degree wins; ties broken by the *smallest* trailing
        # exponent, encoded by negating the reversed tuple.
        if perm is None:
            return lambda m: (wdeg(m), tuple(-e for e in reversed(m)))
        return lambda m: (wdeg(m), tuple(-m[i] for i in reversed(perm)))

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.perm == self.perm
        )

    def __hash__(self):
        return hash((self.kind, self.perm))

    def __repr__(self):
        if self.perm is None:
            return f"MonomialOrder({self.kind!r})"
        return f"MonomialOrder({self.kind!r}, perm={self.perm})"


class ModuleOrder:
    """Order on free-module terms (component, monomial) with generator degrees."""

    def __init__(self, ring_key, weights: tuple[int, ...], gen_degs: tuple[int, ...]):
        self.ring_key = ring_key
        self.weights = weights
        self.gen_degs = gen_degs

    def term_deg(self, term) -> int:
        comp, mono = term
        return sum(e * w for e, w in zip(mono, self.weights)) + self.gen_degs[comp]

    def key(self, term):
        comp, mono = term
        return (self.term_deg(term), self.ring_key(mono), comp)


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))

def mono_divides(a: tuple, b: tuple) -> bool:
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))

def mono_div(a: tuple, b: tuple) -> tuple:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))

def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))

def mono_gcd_is_one(a: tuple, b: tuple) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def monomials_of_degree(nvars: int, weights: tuple[int, ...], d: int):
    """All exponent tuples of weighted degree exactly d (deterministic order)."""
    if d < 0:
        return
    if nvars == 0:
        if d == 0:
            yield ()
        return
    w = weights[0]
    top = d // w if w > 0 else 0
    for e in range(top, -1, -1):
        for rest in monomials_of_degree(nvars - 1, weights[1:], d - e * w):
            yield (e,) + rest

"""Multivariate polynomials over an exact field, in a fixed ambient ring.

A PolyRing is the free polynomial ring k[x1..xn] with a monomial order and
variable weights; quotients live in ring.py.  Poly stores a dict mapping
exponent tuples to nonzero coefficients.
"""

from __future__ import annotations

from .errors import MalformedInputError
from .fields import PrimeField, RationalField
from .orders import MonomialOrder, mono_mul


class PolyRing:
    """Ambient polynomial ring: field, named variables, weights, order."""

    def __init__(self, field, names, weights=None, order=None):
        self.field = field
        self.names = tuple(names)
        self.n = len(self.names)
        if len(set(self.names)) != self.n:
            raise MalformedInputError("duplicate variable names")
        self.weights = tuple(weights) if weights is not None else (1,) * self.n
        if len(self.weights) != self.n or any(w < 1 for w in self.weights):
            raise MalformedInputError("weights must be positive, one per variable")
        self.order = order if order is not None else MonomialOrder("degrevlex")
        self.mono_key = self.order.key_fn(self.weights)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {(0,) * self.n: self.field.one})

    def const(self, c) -> "Poly":
        c = self.field.of_int(c) if isinstance(c, int) else c
        if self.field.is_zero(c):
            return self.zero()
        return Poly(self, {(0,) * self.n: c})

    def var(self, i: int) -> "Poly":
        mono = tuple(1 if j == i else 0 for j in range(self.n))
        return Poly(self, {mono: self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.n)]

    def monomial(self, mono, coeff=None) -> "Poly":
        if len(mono) != self.n:
            raise MalformedInputError("exponent arity mismatch")
        c = self.field.one if coeff is None else coeff
        if self.field.is_zero(c):
            return self.zero()
        return Poly(self, {tuple(mono): c})

    def wdeg(self, mono) -> int:
        return sum(e * w for e, w in zip(mono, self.weights))

    def mono_str(self, mono) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
            and other.weights == self.weights
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.weights, self.order))

    def __repr__(self):
        return f"{self.field}[{','.join(self.names)}]"


class Poly:
    """Polynomial as {exponent tuple: coefficient}; zero coefficients dropped."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    @staticmethod
    def from_terms(ring: PolyRing, items) -> "Poly":
        f = ring.field
        acc: dict = {}
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != ring.n:
                raise MalformedInputError("exponent arity mismatch")
            s = f.add(acc.get(mono, f.zero), c)
            if f.is_zero(s):
                acc.pop(mono, None)
            else:
                acc[mono] = s
        return Poly(ring, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def lead_mono(self):
        if not self.terms:
            return None
        return max(self.terms, key=self.ring.mono_key)

    def lead_coeff(self):
        m = self.lead_mono()
        return None if m is None else self.terms[m]

    def degree(self):
        """Weighted total degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.ring.wdeg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {self.ring.wdeg(m) for m in self.terms}
        return len(degs) == 1

    def map_coeffs(self, fn) -> "Poly":
        f = self.ring.field
        out = {}
        for m, c in self.terms.items():
            v = fn(c)
            if not f.is_zero(v):
                out[m] = v
        return Poly(self.ring, out)

    def __add__(self, other):
        other = self._coerce(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = f.add(out.get(m, f.zero), c)
            if f.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
        return Poly(self.ring, out)

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __neg__(self):
        f = self.ring.field
        return Poly(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.map_coeffs(lambda c: self.ring.field.mul(c, self.ring.field.of_int(other)))
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        f = self.ring.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = f.add(out.get(m, f.zero), f.mul(c1, c2))
                if f.is_zero(s):
                    out.pop(m, None)
                else:
                    out[m] = s
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise MalformedInputError("negative exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == self.ring.const(other).terms
        return isinstance(other, Poly) and other.ring == self.ring and other.terms == self.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def _coerce(self, other) -> "Poly":
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other)!r}")
        self._check_ring(other)
        return other

    def _check_ring(self, other: "Poly"):
        if other.ring != self.ring:
            raise MalformedInputError("polynomials from different rings")

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        f = ring.field
        monos = sorted(self.terms, key=ring.mono_key, reverse=True)
        parts = []
        for m in monos:
            c = self.terms[m]
            cs = f.coeff_str(c)
            ms = ring.mono_str(m)
            if ms == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(ms)
            else:
                parts.append(f"{cs}*{ms}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self})"

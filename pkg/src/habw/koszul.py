"""Koszul complexes on a sequence of ring elements, with module coefficients.

The level-j term is a direct sum of copies of M indexed by j-subsets of the
sequence, and the differential uses the standard sign convention
d(e_S (x) m) = sum over s in S of (-1)^pos(s,S) x_s e_{S-s} (x) m,
with pos counting smaller members of S.  Fixing the signs makes every
homology module reproducible.
"""

from __future__ import annotations

from itertools import combinations

from .errors import MalformedInputError
from .modules import (
    ModuleMap,
    ModulePresentation,
    homology_at,
    twisted_sum,
    vec_poly_mul,
    zero_module,
)
from .poly import Poly


class KoszulComplex:
    def __init__(self, elements, module: ModulePresentation):
        self.module = module
        self.ring = module.ring
        elements = list(elements)
        for p in elements:
            if not isinstance(p, Poly) or p.ring != self.ring.ambient:
                raise MalformedInputError("Koszul element from a different ring")
            if not p.is_homogeneous() or p.is_zero() or p.degree() == 0:
                raise MalformedInputError("Koszul elements must be homogeneous of positive degree")
        self.elements = elements
        self.n = len(elements)
        self._subsets = {
            j: list(combinations(range(self.n), j)) for j in range(self.n + 1)
        }
        self._levels: dict[int, ModulePresentation] = {}
        self._diffs: dict[int, ModuleMap] = {}

    def subset_degree(self, subset) -> int:
        return sum(self.elements[i].degree() for i in subset)

    def level(self, j: int) -> ModulePresentation:
        """K_j = direct sum of M(-deg S) over j-subsets S."""
        if j < 0 or j > self.n:
            return zero_module(self.ring)
        if j not in self._levels:
            shifts = [self.subset_degree(s) for s in self._subsets[j]]
            self._levels[j] = twisted_sum(self.module, shifts)
        return self._levels[j]

    def differential(self, j: int) -> ModuleMap:
        """d_j : K_j -> K_{j-1} for 1 <= j <= n."""
        if not 1 <= j <= self.n:
            raise MalformedInputError("differential index out of range")
        if j in self._diffs:
            return self._diffs[j]
        src, tgt = self.level(j), self.level(j - 1)
        rank_m = self.module.rank
        field = self.ring.field
        tgt_pos = {s: i for i, s in enumerate(self._subsets[j - 1])}
        cols = []
        for si, subset in enumerate(self._subsets[j]):
            for g in range(rank_m):
                col: dict = {}
                for pos, s in enumerate(subset):
                    rest = tuple(v for v in subset if v != s)
                    off = tgt_pos[rest] * rank_m
                    term = vec_poly_mul(
                        {(off + g, (0,) * self.ring.nvars): field.one},
                        self.elements[s],
                        field,
                    )
                    if pos % 2:
                        term = {t: field.neg(c) for t, c in term.items()}
                    for t, c in term.items():
                        v = field.add(col.get(t, field.zero), c)
                        if field.is_zero(v):
                            col.pop(t, None)
                        else:
                            col[t] = v
                cols.append(col)
        self._diffs[j] = ModuleMap(src, tgt, cols, check=False)
        return self._diffs[j]

    def homology(self, j: int) -> ModulePresentation:
        if j < 0 or j > self.n:
            raise MalformedInputError("homology index out of range")
        mid = self.level(j)
        if mid.rank == 0:
            return zero_module(self.ring)
        if j + 1 <= self.n:
            f = self.differential(j + 1)
        else:
            f = ModuleMap(zero_module(self.ring), mid, [], check=False)
        if j >= 1:
            g = self.differential(j)
        else:
            g = ModuleMap(mid, zero_module(self.ring), [{} for _ in range(mid.rank)], check=False)
        return homology_at(f, g)


def koszul_complex(elements, module: ModulePresentation) -> KoszulComplex:
    return KoszulComplex(elements, module)


def koszul_homology(elements, module: ModulePresentation, j: int) -> ModulePresentation:
    """H_j of the Koszul complex of the sequence on the module."""
    return KoszulComplex(elements, module).homology(j)

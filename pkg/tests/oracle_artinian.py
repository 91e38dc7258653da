"""Independent oracle for artinian monomial quotients, used only by tests.

Works over GF(p) with dense linear algebra on the standard-monomial basis;
the only structure taken from the ideal is monomial divisibility, so nothing
here touches the Groebner engine under test.  Provides the socle dimension,
Betti numbers of the residue field, and dim_k Ext^i(k, R).
"""

from __future__ import annotations

from itertools import product


def _rref(rows, p):
    rows = [list(r) for r in rows if any(v % p for v in r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots, rows[:r]


def _rank(rows, p):
    return len(_rref(rows, p)[0])


def _kernel_basis(rows, p, ncols):
    """Right kernel of the matrix given as rows of length ncols."""
    pivots, red = _rref(rows, p)
    pivset = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivset:
            continue
        vec = [0] * ncols
        vec[fc] = 1
        for ri, pc in enumerate(pivots):
            vec[pc] = (-red[ri][fc]) % p
        basis.append(vec)
    return basis


class MonomialArtinianOracle:
    """k[x1..xn]/(monomial ideal) with a power of every variable."""

    def __init__(self, nvars: int, ideal_gens, p: int):
        self.n = nvars
        self.p = p
        self.gens = [tuple(g) for g in ideal_gens]
        caps = []
        for i in range(nvars):
            pure = [g[i] for g in self.gens if all(e == 0 for j, e in enumerate(g) if j != i)]
            if not pure:
                raise ValueError("ideal must contain a power of every variable")
            caps.append(min(pure))
        basis = []
        for mono in product(*[range(c) for c in caps]):
            if not any(all(mono[i] >= g[i] for i in range(nvars)) for g in self.gens):
                basis.append(mono)
        basis.sort(key=lambda m: (sum(m), m))
        self.basis = basis
        self.index = {m: i for i, m in enumerate(basis)}
        self.dim = len(basis)

    def mult(self, m1, m2):
        m = tuple(a + b for a, b in zip(m1, m2))
        return self.index.get(m)  # None when the product dies

    def socle_dimension(self) -> int:
        rows = []
        for b in self.basis:
            row = [0] * (self.dim * self.n)
            for v in range(self.n):
                xv = tuple(1 if i == v else 0 for i in range(self.n))
                t = self.mult(b, xv)
                if t is not None:
                    row[v * self.dim + t] = 1
            rows.append(row)
        return self.dim - _rank(rows, self.p)

    # -- resolution of k ----------------------------------------------------
    #
    # A free module is a list of column degrees; its k-basis is the list of
    # pairs (column, ring basis monomial).  A differential column is a vector
    # over the previous module's k-basis.

    def _free_basis(self, col_degs):
        return [(c, b, cd + sum(b)) for c, cd in enumerate(col_degs) for b in self.basis]

    def _image_vector(self, free_basis, pos, colvec, mono):
        """mono * (vector over free_basis), again over free_basis."""
        out = [0] * len(free_basis)
        for i, coeff in enumerate(colvec):
            if coeff % self.p == 0:
                continue
            c, b, _d = free_basis[i]
            t = self.mult(mono, b)
            if t is not None:
                j = pos[(c, self.basis[t])]
                out[j] = (out[j] + coeff) % self.p
        return out

    def resolution_of_k(self, length: int):
        """(betti 0..length, steps); steps[i] = (columns of d_{i+1}, degrees
        of F_i) in the coordinates described above."""
        p = self.p
        unit = (0,) * self.n
        betti = [1]
        f_degs = [0]
        cols = []
        for v in range(self.n):
            vec = [0] * self.dim
            xv = tuple(1 if i == v else 0 for i in range(self.n))
            vec[self.index[xv]] = 1
            cols.append((vec, 1))
        steps = []
        for _i in range(1, length + 1):
            betti.append(len(cols))
            steps.append((cols, list(f_degs)))
            if not cols:
                f_degs = []
                continue
            new_degs = [d for _v, d in cols]
            prev_basis = self._free_basis(f_degs)
            prev_pos = {(c, b): i for i, (c, b, _d) in enumerate(prev_basis)}
            new_basis = self._free_basis(new_degs)
            new_pos = {(c, b): i for i, (c, b, _d) in enumerate(new_basis)}
            # homogeneous kernels, degree by degree
            degrees = sorted({d for (_c, _b, d) in new_basis})
            chosen: list[tuple[list, int]] = []
            for d in degrees:
                src = [i for i, (_c, _b, dd) in enumerate(new_basis) if dd == d]
                if not src:
                    continue
                tgt = [i for i, (_c, _b, dd) in enumerate(prev_basis) if dd == d]
                tpos = {t: i for i, t in enumerate(tgt)}
                mat = []
                for i in src:
                    c, b, _d = new_basis[i]
                    img = self._image_vector(prev_basis, prev_pos, cols[c][0], b)
                    mat.append([img[t] for t in tgt])
                matrix = list(map(list, zip(*mat))) if mat else []
                kern = _kernel_basis(matrix, p, len(src)) if matrix else [
                    [1 if j == a else 0 for j in range(len(src))] for a in range(len(src))
                ]
                if not kern:
                    continue
                # span of lower-degree choices inside degree d
                span = []
                for cvec, cd in chosen:
                    if cd >= d:
                        continue
                    for m in self.basis:
                        if sum(m) != d - cd:
                            continue
                        shifted = self._image_vector(new_basis, new_pos, cvec, m)
                        span.append([shifted[i] for i in src])
                base_rank = _rank(span, p)
                for kv in kern:
                    full = [0] * len(new_basis)
                    for a, i in enumerate(src):
                        full[i] = kv[a]
                    trial = span + [kv]
                    if _rank(trial, p) > base_rank:
                        span.append(kv)
                        base_rank += 1
                        chosen.append((full, d))
            cols = [(vec, d) for vec, d in chosen]
            f_degs = new_degs
        return betti, steps

    def ext_k_dimensions(self, top: int):
        """dim_k Ext^i(k, R) for i = 0..top, from the dualized resolution."""
        p = self.p
        _betti, steps = self.resolution_of_k(top + 1)

        def hom_matrix(i):
            """Matrix of Hom(d_i, R): rows = target basis (c, bt), columns =
            source basis (j, b0); the source functional b0 at slot j sends a
            differential entry b*e_j to the product b*b0."""
            if i < 1 or i > len(steps) or not steps[i - 1][0]:
                return []
            cols_i, fdegs_prev = steps[i - 1]
            prev_basis = self._free_basis(fdegs_prev)
            src_dim = len(fdegs_prev) * self.dim
            rows = [[0] * src_dim for _ in range(len(cols_i) * self.dim)]
            for c, (colvec, _cd) in enumerate(cols_i):
                for idx, coeff in enumerate(colvec):
                    if coeff % p == 0:
                        continue
                    j, b, _d = prev_basis[idx]
                    for b0i, b0 in enumerate(self.basis):
                        t = self.mult(b, b0)
                        if t is not None:
                            slot = rows[c * self.dim + t]
                            slot[j * self.dim + b0i] = (slot[j * self.dim + b0i] + coeff) % p
            return rows

        dims = []
        for i in range(0, top + 1):
            hom_dim = (len(steps[i - 1][0]) if i >= 1 else 1) * self.dim
            nxt = hom_matrix(i + 1)
            ker_dim = hom_dim - _rank(nxt, p)
            cur = hom_matrix(i)
            im_dim = _rank(cur, p)
            dims.append(ker_dim - im_dim)
        return dims

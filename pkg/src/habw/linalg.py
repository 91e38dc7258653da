"""Sparse exact row reduction over a coefficient field.

Rows are dicts column->coefficient; columns are ordered by a caller-supplied
key (largest key is the pivot position).  Used for graded-Nakayama minimal
generator selection, where each degree component is a finite dimensional
vector space over k.
"""

from __future__ import annotations


class RowReducer:
    def __init__(self, field, key):
        self.field = field
        self.key = key
        self.pivots: dict = {}  # pivot column -> monic row

    def _reduce(self, row: dict) -> dict:
        field = self.field
        row = dict(row)
        while row:
            col = max(row, key=self.key)
            piv = self.pivots.get(col)
            if piv is None:
                return row
            c = row[col]
            for pc, pv in piv.items():
                s = field.sub(row.get(pc, field.zero), field.mul(c, pv))
                if field.is_zero(s):
                    row.pop(pc, None)
                else:
                    row[pc] = s
        return row

    def add_row(self, row: dict) -> bool:
        """Insert a row; True when it enlarged the span."""
        red = self._reduce(row)
        if not red:
            return False
        col = max(red, key=self.key)
        inv = self.field.inv(red[col])
        self.pivots[col] = {c: self.field.mul(v, inv) for c, v in red.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self._reduce(row)

    def rank(self) -> int:
        return len(self.pivots)

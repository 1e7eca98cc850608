"""Graded Betti tables for an ideal I (homological degree 0 = generators)."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class BettiTable:
    entries: dict = field(default_factory=dict)  # (i, j) -> beta_{i,j}, j = internal degree

    def add(self, i, j, k=1):
        if k:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + k
            if self.entries[(i, j)] == 0:
                del self.entries[(i, j)]

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def total(self, i) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def totals(self) -> list:
        if not self.entries:
            return []
        return [self.total(i) for i in range(self.projdim + 1)]

    @property
    def projdim(self) -> int:
        """projdim of I (not S/I)."""
        return max((i for (i, _), v in self.entries.items() if v), default=-1)

    @property
    def reg(self) -> int:
        return max((j - i for (i, j), v in self.entries.items() if v), default=0)

    def is_linear(self, d=None) -> bool:
        """All nonzero entries sit on the strand j = i + d."""
        if not self.entries:
            return True
        if d is None:
            d = min(j for (i, j) in self.entries if i == 0)
        return all(j == i + d for (i, j), v in self.entries.items() if v)

    def clean(self) -> "BettiTable":
        return BettiTable({k: v for k, v in self.entries.items() if v})

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.clean().entries == other.clean().entries

    def to_json(self) -> dict:
        return {
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items()) if v],
            "totals": self.totals(),
            "projdim": self.projdim,
            "reg": self.reg,
        }

    def grid(self) -> str:
        """Macaulay-style: columns are i, rows are j - i."""
        if not self.entries:
            return "(zero)"
        cols = range(self.projdim + 1)
        rows = sorted({j - i for (i, j) in self.entries})
        w = max(len(str(v)) for v in self.entries.values()) + 1
        w = max(w, max(len(str(i)) for i in cols) + 1)
        out = ["      " + "".join(f"{i:>{w}}" for i in cols)]
        out.append("total:" + "".join(f"{self.total(i):>{w}}" for i in cols))
        for r in rows:
            cells = []
            for i in cols:
                v = self.get(i, i + r)
                cells.append(f"{v if v else '.':>{w}}")
            out.append(f"{r:>5}:" + "".join(cells))
        return "\n".join(out)

    def __str__(self):
        return self.grid()

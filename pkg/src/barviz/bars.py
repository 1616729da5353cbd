"""Bars and bar layouts."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable


class LayoutError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Bar:
    owner: str
    y: int
    xl: int
    xr: int

    def __post_init__(self):
        for name in ("y", "xl", "xr"):
            if not isinstance(getattr(self, name), int):
                raise LayoutError(f"bar coordinate {name} must be an integer")
        if self.xr - self.xl < 1:
            raise LayoutError(f"bar of {self.owner!r} has non-positive width")

    def shifted(self, dx: int = 0, dy: int = 0) -> Bar:
        return Bar(self.owner, self.y + dy, self.xl + dx, self.xr + dx)

    def renamed(self, owner: str) -> Bar:
        return Bar(owner, self.y, self.xl, self.xr)


class BarLayout:
    """An ordered collection of bars, validated on construction."""

    __slots__ = ("bars",)

    def __init__(self, bars: Iterable[Bar]):
        self.bars = tuple(bars)
        by_level: dict[int, list[Bar]] = defaultdict(list)
        for b in self.bars:
            by_level[b.y].append(b)
        for y, row in by_level.items():
            row.sort(key=lambda b: b.xl)
            for a, b in zip(row, row[1:]):
                if b.xl < a.xr:
                    raise LayoutError(f"bars of {a.owner!r} and {b.owner!r} overlap at y={y}")

    def __len__(self) -> int:
        return len(self.bars)

    def __iter__(self):
        return iter(self.bars)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BarLayout) and self.bars == other.bars

    def __repr__(self) -> str:
        return f"BarLayout({len(self.bars)} bars)"

    @property
    def vertices(self) -> list[str]:
        return sorted({b.owner for b in self.bars})

    def per_vertex(self) -> dict[str, list[Bar]]:
        out: dict[str, list[Bar]] = defaultdict(list)
        for b in self.bars:
            out[b.owner].append(b)
        return dict(out)

    def bar_counts(self) -> Counter:
        return Counter(b.owner for b in self.bars)

    def max_bars_per_vertex(self) -> int:
        return max(self.bar_counts().values(), default=0)

    def histogram(self) -> dict[int, int]:
        """Number of vertices owning k bars, keyed by k."""
        return dict(sorted(Counter(self.bar_counts().values()).items()))

    def extent(self) -> tuple[int, int, int, int]:
        """(xmin, xmax, ymin, ymax); all zero for an empty layout."""
        if not self.bars:
            return 0, 0, 0, 0
        return (
            min(b.xl for b in self.bars),
            max(b.xr for b in self.bars),
            min(b.y for b in self.bars),
            max(b.y for b in self.bars),
        )

    def width(self) -> int:
        xmin, xmax, _, _ = self.extent()
        return xmax - xmin

    def shifted(self, dx: int = 0, dy: int = 0) -> BarLayout:
        return BarLayout(b.shifted(dx, dy) for b in self.bars)

    def relabeled(self, mapping: dict[str, str]) -> BarLayout:
        return BarLayout(b.renamed(mapping[b.owner]) for b in self.bars)

"""
Amida (ladder) diagrams.

A diagram has n vertical lines and horizontal rungs between adjacent lines.
Runners start at the bottom and climb; a rung at column c swaps lines c and
c+1. Larger levels are higher, so they are traversed later.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Hashable, List, Tuple

from perm import Permutation
from words import GeneratorWord, is_coxeter_word


logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Rung:
    """A horizontal segment between lines column and column+1."""
    column: int
    level: int


@dataclass(frozen=True, eq=False)
class AmidaDiagram:
    """
    Ordered rung list, bottom to top.

    Only the relative order of levels between rungs that touch a common
    vertical line matters; equality and hashing compare isotopy classes.
    """
    n: int
    rungs: Tuple[Rung, ...] = ()

    def __post_init__(self):
        rungs = tuple(sorted(self.rungs, key=lambda r: (r.level, r.column)))
        object.__setattr__(self, "rungs", rungs)
        if self.n < 1:
            raise ValueError(f"An Amida diagram needs at least one line, got {self.n}")
        occupied = set()
        for rung in rungs:
            if not 1 <= rung.column <= self.n - 1:
                raise ValueError(f"Rung column {rung.column} outside 1..{self.n - 1}")
            if (rung.column, rung.level) in occupied:
                raise ValueError(f"Duplicate rung at column {rung.column}, level {rung.level}")
            for neighbour in (rung.column - 1, rung.column + 1):
                if (neighbour, rung.level) in occupied:
                    raise ValueError(
                        f"Rungs at columns {neighbour} and {rung.column} share level "
                        f"{rung.level}; their end points would meet"
                    )
            occupied.add((rung.column, rung.level))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AmidaDiagram):
            return NotImplemented
        return isotopy_key(self) == isotopy_key(other)

    def __hash__(self) -> int:
        return hash(isotopy_key(self))

    def levels(self) -> Dict[int, int]:
        """Column -> level; only meaningful for one rung per column."""
        return {r.column: r.level for r in self.rungs}


def from_word(w: GeneratorWord) -> AmidaDiagram:
    """One rung per letter; the rightmost letter is the lowest rung."""
    last = len(w) - 1
    return AmidaDiagram(w.n, tuple(Rung(k, last - idx) for idx, k in enumerate(w.letters)))


def evaluate(d: AmidaDiagram) -> Permutation:
    """Trace every runner from the bottom of its line to the top."""
    images = []
    for start in range(1, d.n + 1):
        x = start
        for rung in d.rungs:
            if rung.column == x:
                x += 1
            elif rung.column == x - 1:
                x -= 1
        images.append(x)
    return Permutation(tuple(images))


def stack(top: AmidaDiagram, bottom: AmidaDiagram) -> AmidaDiagram:
    """Put top on bottom; evaluates to evaluate(top)∘evaluate(bottom)."""
    if top.n != bottom.n:
        raise ValueError(f"Degree mismatch: {top.n} vs {bottom.n}")
    if not top.rungs or not bottom.rungs:
        return AmidaDiagram(top.n, top.rungs + bottom.rungs)
    offset = bottom.rungs[-1].level - top.rungs[0].level + 1
    raised = tuple(Rung(r.column, r.level + offset) for r in top.rungs)
    return AmidaDiagram(top.n, bottom.rungs + raised)


def to_word(d: AmidaDiagram) -> GeneratorWord:
    """Read rungs top level first, columns ascending within a level."""
    ordered = sorted(d.rungs, key=lambda r: (-r.level, r.column))
    return GeneratorWord(d.n, tuple(r.column for r in ordered))


def compressed_levels(d: AmidaDiagram) -> Dict[Rung, int]:
    """
    Lowest row for each rung that keeps it above every lower rung on its
    own column or an adjacent one.
    """
    top: Dict[int, int] = {}
    rows: Dict[Rung, int] = {}
    for rung in d.rungs:
        c = rung.column
        row = max(top.get(c - 1, -1), top.get(c, -1), top.get(c + 1, -1)) + 1
        rows[rung] = row
        top[c] = row
    return rows


def isotopy_key(d: AmidaDiagram) -> Hashable:
    rows = compressed_levels(d)
    return d.n, tuple(sorted((row, rung.column) for rung, row in rows.items()))


def standard_from_coxeter_word(w: GeneratorWord) -> AmidaDiagram:
    """
    The standard diagram of a Coxeter word: one rung per column, and of two
    adjacent rungs the one whose letter comes first in w sits higher.

    Levels are the longest-path layering of the "is lower than" relation.
    """
    if not is_coxeter_word(w):
        raise ValueError(f"Not a Coxeter word of S_{w.n}: [{w}]")
    position = {k: idx for idx, k in enumerate(w.letters)}
    level: Dict[int, int] = {}
    # a later letter is lower, so its level is known before its earlier neighbours'
    for k in reversed(w.letters):
        below = [
            level[j] for j in (k - 1, k + 1)
            if j in position and position[j] > position[k]
        ]
        level[k] = max(below) + 1 if below else 0
    return AmidaDiagram(w.n, tuple(Rung(k, level[k]) for k in w.letters))


def is_standard(d: AmidaDiagram) -> bool:
    return sorted(r.column for r in d.rungs) == list(range(1, d.n))


def is_mirror_symmetric(d: AmidaDiagram) -> bool:
    """
    Whether reflecting column c to n - c keeps the relative height of every
    adjacent pair of rungs.
    """
    if d.n % 2:
        raise ValueError(f"Mirror symmetry is tested for even degree only, got {d.n}")
    if not is_standard(d):
        raise ValueError("Mirror symmetry is tested on standard diagrams only")
    level = d.levels()
    n = d.n
    for c in range(2, n):
        rises = level[c] > level[c - 1]
        mirrored_rises = level[n - c] > level[n - c + 1]
        if rises != mirrored_rises:
            return False
    return True


def mirror(d: AmidaDiagram) -> AmidaDiagram:
    """Reflect about the vertical axis; evaluates to w0∘evaluate(d)∘w0."""
    return AmidaDiagram(d.n, tuple(Rung(d.n - r.column, r.level) for r in d.rungs))


def render_ascii(d: AmidaDiagram) -> str:
    """
    Text picture, top row first. Line j sits at character column 4(j-1); a
    rung is drawn as "---" between its two lines; rung rows are separated by
    one spacer row.
    """
    spacer = _render_row(d.n, set())
    if not d.rungs:
        return spacer
    by_row: Dict[int, set] = {}
    for rung, row in compressed_levels(d).items():
        by_row.setdefault(row, set()).add(rung.column)
    lines: List[str] = []
    for row in range(max(by_row), -1, -1):
        if lines:
            lines.append(spacer)
        lines.append(_render_row(d.n, by_row.get(row, set())))
    return "\n".join(lines)


def _render_row(n: int, columns: set) -> str:
    line = "|"
    for c in range(1, n):
        line += ("---" if c in columns else "   ") + "|"
    return line

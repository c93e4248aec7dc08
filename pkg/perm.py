"""
Permutations of {1..n} in one-line notation.

Composition is function composition with the right factor applied first,
which is the same as stacking the left factor's Amida diagram on top of the
right factor's.
"""
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n}; images[i-1] is the image of i."""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise ValueError("Permutation degree must be at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"Not a permutation of 1..{n}: {list(images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"Point {i} outside 1..{self.n}")
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.images)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse one-line text such as "4,1,3,2"."""
        try:
            images = [int(part) for part in text.replace(" ", "").split(",") if part]
        except ValueError:
            raise ValueError(f"Malformed permutation text: {text!r}")
        if not images:
            raise ValueError("Empty permutation text")
        return cls(tuple(images))


@dataclass(frozen=True)
class CycleType:
    """Cycle lengths, weakly decreasing."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError(f"Degree must be at least 1, got {n}")
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    """w0(i) = n + 1 - i."""
    if n < 1:
        raise ValueError(f"Degree must be at least 1, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return a∘b, i.e. i ↦ a(b(i))."""
    if a.n != b.n:
        raise ValueError(f"Degree mismatch: {a.n} vs {b.n}")
    return Permutation(tuple(a.images[j - 1] for j in b.images))


def inverse(a: Permutation) -> Permutation:
    images = [0] * a.n
    for i, j in enumerate(a.images, start=1):
        images[j - 1] = i
    return Permutation(tuple(images))


def power(a: Permutation, k: int) -> Permutation:
    """k-fold product of a with itself; negative k powers the inverse."""
    if k < 0:
        return power(inverse(a), -k)
    result = identity(a.n)
    base = a
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def inversion_number(a: Permutation) -> int:
    """Number of pairs i < j with a(i) > a(j); equals the Coxeter length."""
    images = a.images
    return sum(
        1
        for i, j in itertools.combinations(range(a.n), 2)
        if images[i] > images[j]
    )


def cycles(a: Permutation) -> List[Tuple[int, ...]]:
    """Disjoint cycles, each starting at its smallest point, ordered by that point."""
    seen = set()
    result = []
    for start in range(1, a.n + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = a(start)
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = a(nxt)
        result.append(tuple(cycle))
    return result


def cycle_type(a: Permutation) -> CycleType:
    return CycleType(tuple(len(c) for c in cycles(a)))


def order(a: Permutation) -> int:
    return math.lcm(*(len(c) for c in cycles(a)))


def from_cycle(n: int, cycle: Sequence[int]) -> Permutation:
    """The permutation cycle[0] -> cycle[1] -> ... -> cycle[0], fixing all other points."""
    if len(set(cycle)) != len(cycle):
        raise ValueError(f"Repeated point in cycle {list(cycle)}")
    images = list(range(1, n + 1))
    for idx, point in enumerate(cycle):
        if not 1 <= point <= n:
            raise ValueError(f"Cycle point {point} outside 1..{n}")
        images[point - 1] = cycle[(idx + 1) % len(cycle)]
    return Permutation(tuple(images))


def longest_complement(a: Permutation) -> Permutation:
    """The unique x with x∘a = w0."""
    return compose(longest_element(a.n), inverse(a))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations, lexicographic in one-line notation."""
    if n < 1:
        raise ValueError(f"Degree must be at least 1, got {n}")
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


"""
Coxeter elements of S_n named by their Coxeter paths.

The Coxeter path of a Coxeter element is the sign sequence e_2..e_(n-1):
e_i = +1 when the rung of s_i sits higher than the rung of s_(i-1) in the
standard Amida diagram, -1 when it sits lower. It is a complete invariant,
so it serves as the canonical name of the element.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Set, Tuple

from perm import Permutation, cycle_type, from_cycle, inversion_number
from words import GeneratorWord, is_coxeter_word


logger = logging.getLogger(__name__)

PLUS = 1
MINUS = -1


@dataclass(frozen=True, order=True)
class CoxeterPath:
    """Signs e_2..e_(n-1) of a Coxeter element of S_n."""
    n: int
    signs: Tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        object.__setattr__(self, "signs", signs)
        if self.n < 3:
            raise ValueError(f"Coxeter paths need n >= 3, got {self.n}")
        if len(signs) != self.n - 2:
            raise ValueError(f"A Coxeter path of S_{self.n} has {self.n - 2} signs, got {len(signs)}")
        if any(s not in (PLUS, MINUS) for s in signs):
            raise ValueError(f"Signs must be +1 or -1, got {list(signs)}")

    def sign(self, i: int) -> int:
        """e_i for 2 <= i <= n-1."""
        if not 2 <= i <= self.n - 1:
            raise ValueError(f"Sign index {i} outside 2..{self.n - 1}")
        return self.signs[i - 2]

    def __str__(self) -> str:
        return ",".join("+" if s == PLUS else "-" for s in self.signs)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "CoxeterPath":
        """Parse "-,+,-"; only the ASCII characters "+" and "-" are accepted."""
        parts = [part for part in text.replace(" ", "").split(",") if part]
        signs = []
        for part in parts:
            if part == "+":
                signs.append(PLUS)
            elif part == "-":
                signs.append(MINUS)
            else:
                raise ValueError(f"Malformed path sign {part!r} in {text!r}")
        degree = len(signs) + 2
        if n is not None and n != degree:
            raise ValueError(f"Path {text!r} has {len(signs)} signs but S_{n} needs {n - 2}")
        return cls(degree, tuple(signs))


@dataclass(frozen=True)
class CyclicPresentation:
    """Stanza starts p_1 < ... < p_s and co-stanza starts q_1 > ... > q_t."""
    stanza_starts: Tuple[int, ...]
    costanza_starts: Tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.stanza_starts)

    @property
    def t(self) -> int:
        return len(self.costanza_starts)

    @property
    def cycle(self) -> Tuple[int, ...]:
        """(p_1, ..., p_s, q_1, ..., q_t)"""
        return self.stanza_starts + self.costanza_starts


def path_from_word(w: GeneratorWord) -> CoxeterPath:
    """e_i = + exactly when s_i comes before s_(i-1) in w."""
    if not is_coxeter_word(w):
        raise ValueError(f"Not a Coxeter word of S_{w.n}: [{w}]")
    position = {k: idx for idx, k in enumerate(w.letters)}
    signs = tuple(
        PLUS if position[i] < position[i - 1] else MINUS
        for i in range(2, w.n)
    )
    return CoxeterPath(w.n, signs)


def word_from_path(p: CoxeterPath) -> GeneratorWord:
    """Start from s_1; multiply by s_i on the left when e_i = +, on the right when e_i = -."""
    letters = [1]
    for i in range(2, p.n):
        if p.sign(i) == PLUS:
            letters.insert(0, i)
        else:
            letters.append(i)
    return GeneratorWord(p.n, tuple(letters))


def enumerate_paths(n: int) -> List[CoxeterPath]:
    """
    All 2^(n-2) paths in binary counting order (- = 0, + = 1, e_2 least
    significant).
    """
    if n < 3:
        raise ValueError(f"Coxeter paths need n >= 3, got {n}")
    width = n - 2
    return [
        CoxeterPath(n, tuple(PLUS if (code >> j) & 1 else MINUS for j in range(width)))
        for code in range(2 ** width)
    ]


def height(p: CoxeterPath) -> int:
    return sum(p.signs)


def stanza_decomposition(p: CoxeterPath) -> CyclicPresentation:
    minus = [i for i in range(2, p.n) if p.sign(i) == MINUS]
    plus = [i for i in range(2, p.n) if p.sign(i) == PLUS]
    return CyclicPresentation(
        stanza_starts=tuple([1] + minus),
        costanza_starts=tuple([p.n] + sorted(plus, reverse=True)),
    )


def cyclic_permutation(p: CoxeterPath) -> Permutation:
    """The n-cycle (p_1, ..., p_s, q_1, ..., q_t)."""
    return from_cycle(p.n, stanza_decomposition(p).cycle)


def is_coxeter(a: Permutation) -> bool:
    """Length n-1 and a single n-cycle."""
    return inversion_number(a) == a.n - 1 and cycle_type(a).parts == (a.n,)


def path_from_permutation(a: Permutation) -> CoxeterPath:
    """Recover the path of a Coxeter element from its cycle through 1."""
    if a.n < 3 or not is_coxeter(a):
        raise ValueError(f"Not a Coxeter element: [{a}]")
    stanza = set()
    x = 1
    while x != a.n:
        stanza.add(x)
        x = a(x)
    return CoxeterPath(a.n, tuple(MINUS if i in stanza else PLUS for i in range(2, a.n)))


def mirror_path(p: CoxeterPath) -> CoxeterPath:
    """Path of w0 C w0: the standard diagram reflected about the vertical axis."""
    n = p.n
    return CoxeterPath(n, tuple(-p.sign(n + 1 - i) for i in range(2, n)))


def precedence(p: CoxeterPath) -> Dict[int, Set[int]]:
    """For each letter, the adjacent letters whose rungs are higher and so come first."""
    before: Dict[int, Set[int]] = {k: set() for k in range(1, p.n)}
    for i in range(2, p.n):
        if p.sign(i) == PLUS:
            before[i - 1].add(i)
        else:
            before[i].add(i - 1)
    return before


def linear_extensions(before: Dict[int, Set[int]]) -> Iterator[Tuple[int, ...]]:
    """
    Every ordering of the keys of `before` that puts each key after all of
    its required predecessors, in lexicographic order.
    """
    prefix: List[int] = []
    placed: Set[int] = set()
    remaining = sorted(before)

    def extend():
        if len(prefix) == len(remaining):
            yield tuple(prefix)
            return
        for k in remaining:
            if k in placed or not before[k] <= placed:
                continue
            prefix.append(k)
            placed.add(k)
            yield from extend()
            placed.discard(k)
            prefix.pop()

    yield from extend()


def iter_reduced_words(p: CoxeterPath) -> Iterator[GeneratorWord]:
    for letters in linear_extensions(precedence(p)):
        yield GeneratorWord(p.n, letters)


def reduced_words(p: CoxeterPath) -> List[GeneratorWord]:
    """All distinct-letter reduced words of the element, lexicographically ordered."""
    words = list(iter_reduced_words(p))
    logger.debug("Path %s has %d reduced words", p, len(words))
    return words

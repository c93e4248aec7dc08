"""
Words in the adjacent transpositions s1..s(n-1) of S_n.

A word carries its ambient degree: the letters [1, 2] in S_3 and in S_5 are
different values.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, Set, Tuple

from perm import Permutation, identity, inversion_number


logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class GeneratorWord:
    """s_{i1} s_{i2} ... s_{ir}; letters are 1-indexed generator numbers."""
    n: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(k) for k in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.n < 1:
            raise ValueError(f"Degree must be at least 1, got {self.n}")
        for k in letters:
            if not 1 <= k <= self.n - 1:
                raise ValueError(f"Letter {k} out of range 1..{self.n - 1} for S_{self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.letters)

    @classmethod
    def parse(cls, text: str, n: int) -> "GeneratorWord":
        """Parse "1,3,2,4"; an empty string is the empty word."""
        try:
            letters = tuple(int(part) for part in text.replace(" ", "").split(",") if part)
        except ValueError:
            raise ValueError(f"Malformed word text: {text!r}")
        return cls(n, letters)


def evaluate(w: GeneratorWord) -> Permutation:
    """Product of the letters, rightmost letter applied first."""
    # right-multiplying by s_k swaps positions k and k+1 of the one-line images
    images = list(range(1, w.n + 1))
    for k in w.letters:
        images[k - 1], images[k] = images[k], images[k - 1]
    return Permutation(tuple(images))


def is_reduced(w: GeneratorWord) -> bool:
    return len(w) == inversion_number(evaluate(w))


def generator_support(w: GeneratorWord) -> Set[int]:
    return set(w.letters)


def has_distinct_letters(w: GeneratorWord) -> bool:
    return len(set(w.letters)) == len(w.letters)


def is_coxeter_word(w: GeneratorWord) -> bool:
    """Each of s1..s(n-1) exactly once."""
    return sorted(w.letters) == list(range(1, w.n))


def concat(*words: GeneratorWord) -> GeneratorWord:
    if not words:
        raise ValueError("concat needs at least one word")
    n = words[0].n
    letters = []
    for w in words:
        if w.n != n:
            raise ValueError(f"Degree mismatch: {w.n} vs {n}")
        letters.extend(w.letters)
    return GeneratorWord(n, tuple(letters))


def shift(w: GeneratorWord, offset: int, n_new: int) -> GeneratorWord:
    """Relabel s_k as s_(k+offset) inside S_(n_new)."""
    return GeneratorWord(n_new, tuple(k + offset for k in w.letters))


def shortest_word_lengths(n: int) -> Dict[Permutation, int]:
    """
    Minimal word length of every element of S_n by breadth-first search.

    Args:
        n: Degree; the search visits all n! elements

    Returns:
        Mapping from permutation to its Coxeter length
    """
    start = identity(n)
    lengths = {start: 0}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for k in range(1, n):
            images = list(current.images)
            images[k - 1], images[k] = images[k], images[k - 1]
            nxt = Permutation(tuple(images))
            if nxt not in lengths:
                lengths[nxt] = lengths[current] + 1
                queue.append(nxt)
    logger.debug("Breadth-first search over S_%d visited %d elements", n, len(lengths))
    return lengths

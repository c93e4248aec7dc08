"""
Which Coxeter elements afford the longest element w0.

Even degree n = 2m: C^m = w0 exactly for the paths whose standard diagram is
mirror-symmetric.

Odd degree n = 2m-1: C is split as w1 w2 with both halves of length m-1, and
the half power w2 C^(m-1) is compared with w0. A split exists exactly for the
admissible elements, those grown from S_3 by extensions that keep the height
at +1 or -1.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Set, Tuple

from amida import is_mirror_symmetric, standard_from_coxeter_word
from coxeter import (
    MINUS, PLUS, CoxeterPath, cyclic_permutation, enumerate_paths, height,
    iter_reduced_words, linear_extensions, mirror_path, precedence, word_from_path,
)
from perm import (
    Permutation, compose, inversion_number, longest_complement, longest_element, power,
)
from words import GeneratorWord, concat, evaluate, has_distinct_letters, shift


logger = logging.getLogger(__name__)


class ExtensionKind(Enum):
    """
    The four ways to adjoin the outer generators s_1 and s_(n+1) of S_(n+2)
    to a Coxeter element of S_n (whose letters move up by one).

    Each member carries its text tag and the (first, last) signs it adds to
    the Coxeter path.
    """
    OUTER_TOP = ("outer-top", MINUS, PLUS)
    OUTER_BOTTOM = ("outer-bottom", PLUS, MINUS)
    LEFT_TOP_RIGHT_BOTTOM = ("left-top", MINUS, MINUS)
    LEFT_BOTTOM_RIGHT_TOP = ("left-bottom", PLUS, PLUS)

    def __init__(self, tag: str, first: int, last: int):
        self.tag = tag
        self.first = first
        self.last = last

    @classmethod
    def from_tag(cls, tag: str) -> "ExtensionKind":
        for kind in cls:
            if kind.tag == tag:
                return kind
        raise ValueError(f"Unknown extension kind: {tag}")

    @classmethod
    def from_signs(cls, first: int, last: int) -> "ExtensionKind":
        for kind in cls:
            if (kind.first, kind.last) == (first, last):
                return kind
        raise ValueError(f"No extension kind adds signs ({first}, {last})")


@dataclass(frozen=True)
class HalfPowerSplit:
    """C = w1 w2 with w2 C^(m-1) = w0."""
    w1: GeneratorWord
    w2: GeneratorWord

    def to_dict(self) -> Dict[str, str]:
        return {"w1": str(self.w1), "w2": str(self.w2)}


def _require_even(n: int):
    if n % 2:
        raise ValueError(f"Expected even degree, got {n}")


def _require_odd(n: int):
    if n % 2 == 0:
        raise ValueError(f"Expected odd degree, got {n}")


def is_mirror_path(p: CoxeterPath) -> bool:
    """e_j = -e_(n+1-j) for every j."""
    return mirror_path(p) == p


def even_affords_longest(p: CoxeterPath, paranoid: bool = False) -> bool:
    """
    Whether C^(n/2) = w0, by direct powering.

    With paranoid set the mirror-symmetry test on the standard diagram runs
    as well and the conjunction is returned; a disagreement is logged.
    """
    _require_even(p.n)
    c = cyclic_permutation(p)
    by_power = power(c, p.n // 2) == longest_element(p.n)
    if not paranoid:
        return by_power
    by_symmetry = is_mirror_symmetric(standard_from_coxeter_word(word_from_path(p)))
    if by_power != by_symmetry:
        logger.error("Power test (%s) and symmetry test (%s) disagree on %s",
                     by_power, by_symmetry, p)
    return by_power and by_symmetry


def extend(p: CoxeterPath, kind: ExtensionKind) -> CoxeterPath:
    """The path of the extension in S_(n+2)."""
    return CoxeterPath(p.n + 2, (kind.first,) + p.signs + (kind.last,))


def extend_word(w: GeneratorWord, kind: ExtensionKind) -> GeneratorWord:
    """
    Explicit expression of the extension: s_1 s_(n+1) C, C s_1 s_(n+1),
    s_1 C s_(n+1) or s_(n+1) C s_1, with C shifted into S_(n+2).
    """
    n_new = w.n + 2
    inner = shift(w, 1, n_new)
    left = GeneratorWord(n_new, (1,))
    right = GeneratorWord(n_new, (n_new - 1,))
    if kind is ExtensionKind.OUTER_TOP:
        return concat(left, right, inner)
    if kind is ExtensionKind.OUTER_BOTTOM:
        return concat(inner, left, right)
    if kind is ExtensionKind.LEFT_TOP_RIGHT_BOTTOM:
        return concat(left, inner, right)
    return concat(right, inner, left)


def peel(p: CoxeterPath) -> Tuple[CoxeterPath, ExtensionKind]:
    """Undo extend: the inner path and the kind that produced p."""
    if p.n < 5:
        raise ValueError(f"Peeling needs n >= 5, got {p.n}")
    kind = ExtensionKind.from_signs(p.signs[0], p.signs[-1])
    return CoxeterPath(p.n - 2, p.signs[1:-1]), kind


def is_admissible(p: CoxeterPath) -> bool:
    _require_odd(p.n)
    while p.n > 3:
        if abs(height(p)) > 1:
            return False
        p, _ = peel(p)
    return True


def admissible_kinds(p: CoxeterPath) -> List[ExtensionKind]:
    """Kinds whose extension keeps the height within [-1, 1]."""
    return [kind for kind in ExtensionKind if abs(height(extend(p, kind))) <= 1]


def enumerate_admissible(n: int) -> List[CoxeterPath]:
    _require_odd(n)
    if n < 3:
        raise ValueError(f"Admissibility starts at S_3, got n = {n}")
    return [p for p in enumerate_paths(n) if is_admissible(p)]


def generate_admissible(n: int) -> List[CoxeterPath]:
    """Grow both S_3 paths by admissible extensions up to S_n."""
    _require_odd(n)
    if n < 3:
        raise ValueError(f"Admissibility starts at S_3, got n = {n}")
    layer = enumerate_paths(3)
    for _ in range((n - 3) // 2):
        layer = [extend(p, kind) for p in layer for kind in admissible_kinds(p)]
    return sorted(layer)


def power_length(p: CoxeterPath, k: int) -> int:
    return inversion_number(power(cyclic_permutation(p), k))


def half_power(p: CoxeterPath, w2: GeneratorWord) -> Permutation:
    """w2 C^(m-1) for n = 2m-1."""
    _require_odd(p.n)
    m = (p.n + 1) // 2
    if w2.n != p.n:
        raise ValueError(f"Degree mismatch: word in S_{w2.n}, path in S_{p.n}")
    if len(w2) != m - 1 or not has_distinct_letters(w2):
        raise ValueError(f"w2 must have {m - 1} distinct letters, got [{w2}]")
    return compose(evaluate(w2), power(cyclic_permutation(p), m - 1))


def _element_support(a: Permutation) -> Set[int]:
    """Letters k with a({1..k}) != {1..k}; for a distinct-letter product these are its letters."""
    support = set()
    highest = 0
    for k in range(1, a.n):
        highest = max(highest, a(k))
        if highest > k:
            support.add(k)
    return support


def find_half_power_split(p: CoxeterPath) -> Optional[HalfPowerSplit]:
    """
    The first reduced word of C (lexicographic) whose midpoint split gives
    w2 C^(m-1) = w0, or None.

    w2 is forced to be w0 C^-(m-1); it qualifies when its letters form a set
    of m-1 letters closed under "comes later" in C, read in an order C allows.
    """
    _require_odd(p.n)
    n = p.n
    m = (n + 1) // 2
    candidate = longest_complement(power(cyclic_permutation(p), m - 1))
    if inversion_number(candidate) != m - 1:
        logger.debug("Path %s rejected by the length filter", p)
        return None
    letters = _element_support(candidate)
    if len(letters) != m - 1:
        return None
    before = precedence(p)
    if any(before[j] & letters for j in before if j not in letters):
        logger.debug("Path %s: letters %s are not a suffix of any reduced word", p, sorted(letters))
        return None
    w2 = GeneratorWord(n, next(linear_extensions({k: before[k] & letters for k in letters})))
    if evaluate(w2) != candidate:
        return None
    rest = set(before) - letters
    w1 = GeneratorWord(n, next(linear_extensions({k: before[k] for k in rest})))
    return HalfPowerSplit(w1, w2)


def all_half_power_splits(p: CoxeterPath) -> List[HalfPowerSplit]:
    """
    One successful split per distinct set of w2 letters, found by walking
    every reduced word of C.
    """
    _require_odd(p.n)
    n = p.n
    m = (n + 1) // 2
    w0 = longest_element(n)
    c_power = power(cyclic_permutation(p), m - 1)
    candidate = longest_complement(c_power)
    if inversion_number(candidate) != m - 1:
        return []
    found = []
    tried = set()
    for word in iter_reduced_words(p):
        suffix = word.letters[m - 1:]
        if frozenset(suffix) in tried:
            continue
        tried.add(frozenset(suffix))
        w2 = GeneratorWord(n, suffix)
        if evaluate(w2) != candidate:
            continue
        if compose(evaluate(w2), c_power) != w0:
            continue
        found.append(HalfPowerSplit(GeneratorWord(n, word.letters[:m - 1]), w2))
    return found


def length_gap_bound(p: CoxeterPath) -> bool:
    """
    l(C^(m-1)) = 2(m-1)^2 exactly when p is admissible, and is strictly
    smaller otherwise.
    """
    _require_odd(p.n)
    m = (p.n + 1) // 2
    length = power_length(p, m - 1)
    bound = 2 * (m - 1) ** 2
    if is_admissible(p):
        return length == bound
    return length < bound


def prescribed_extension_w2(inner: CoxeterPath, inner_w2: GeneratorWord,
                            kind: ExtensionKind) -> GeneratorWord:
    """
    The w2 of an admissible extension built from the w2 of the inner
    element: one outer generator is added on the left or the right of the
    shifted inner w2, depending on the inner height and the kind.
    """
    eta = height(inner)
    if kind not in admissible_kinds(inner) or abs(eta) != 1:
        raise ValueError(f"{kind.tag} is not an admissible extension of {inner}")
    n_new = inner.n + 2
    body = shift(inner_w2, 1, n_new)
    s_left = GeneratorWord(n_new, (1,))
    s_right = GeneratorWord(n_new, (n_new - 1,))
    if eta == 1:
        cases = {
            ExtensionKind.OUTER_TOP: (s_left, body),
            ExtensionKind.OUTER_BOTTOM: (body, s_left),
            ExtensionKind.LEFT_TOP_RIGHT_BOTTOM: (body, s_right),
        }
    else:
        cases = {
            ExtensionKind.OUTER_TOP: (s_right, body),
            ExtensionKind.OUTER_BOTTOM: (body, s_right),
            ExtensionKind.LEFT_BOTTOM_RIGHT_TOP: (body, s_left),
        }
    return concat(*cases[kind])

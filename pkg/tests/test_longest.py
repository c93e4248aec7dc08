"""
Unit tests for the longest-element classifications.
"""
import unittest

from coxeter import CoxeterPath, cyclic_permutation, enumerate_paths, height, path_from_word, word_from_path
from longest import (
    ExtensionKind, HalfPowerSplit, admissible_kinds, all_half_power_splits, enumerate_admissible,
    even_affords_longest, extend, extend_word, find_half_power_split, generate_admissible,
    half_power, is_admissible, is_mirror_path, length_gap_bound, peel, power_length,
    prescribed_extension_w2,
)
from perm import compose, inverse, longest_element, power
from words import GeneratorWord, concat, evaluate


def W(n, *letters):
    return GeneratorWord(n, tuple(letters))


def path(text):
    return CoxeterPath.parse(text)


class TestExtensionKind(unittest.TestCase):
    def test_tags(self):
        self.assertEqual([k.tag for k in ExtensionKind],
                         ["outer-top", "outer-bottom", "left-top", "left-bottom"])
        self.assertIs(ExtensionKind.from_tag("left-top"), ExtensionKind.LEFT_TOP_RIGHT_BOTTOM)
        with self.assertRaises(ValueError):
            ExtensionKind.from_tag("inner")


class TestEvenCase(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(even_affords_longest(path("-,+")))
        self.assertFalse(even_affords_longest(path("-,-")))

    def test_counts(self):
        for n, expected in [(4, 2), (6, 4), (8, 8), (10, 16), (12, 32)]:
            hits = [p for p in enumerate_paths(n) if even_affords_longest(p)]
            self.assertEqual(len(hits), expected)

    def test_power_agrees_with_symmetry(self):
        for n in (4, 6, 8, 10):
            for p in enumerate_paths(n):
                self.assertEqual(even_affords_longest(p), is_mirror_path(p))
                self.assertEqual(even_affords_longest(p, paranoid=True), is_mirror_path(p))

    def test_rejects_odd_degree(self):
        with self.assertRaises(ValueError):
            even_affords_longest(path("-,+,-"))


class TestExtensions(unittest.TestCase):
    def test_height_deltas(self):
        deltas = {
            ExtensionKind.OUTER_TOP: 0,
            ExtensionKind.OUTER_BOTTOM: 0,
            ExtensionKind.LEFT_TOP_RIGHT_BOTTOM: -2,
            ExtensionKind.LEFT_BOTTOM_RIGHT_TOP: 2,
        }
        for n in range(3, 11):
            for p in enumerate_paths(n):
                for kind, delta in deltas.items():
                    self.assertEqual(height(extend(p, kind)), height(p) + delta)

    def test_extend_examples(self):
        extended = extend(path("+"), ExtensionKind.LEFT_BOTTOM_RIGHT_TOP)
        self.assertEqual(extended, path("+,+,+"))
        self.assertEqual(height(extended), 3)
        non_admissible = extend(path("+,+,+"), ExtensionKind.LEFT_TOP_RIGHT_BOTTOM)
        self.assertEqual(non_admissible, path_from_word(W(7, 1, 5, 4, 3, 2, 6)))
        self.assertEqual(height(non_admissible), 1)

    def test_extend_word_matches_extend(self):
        for n in range(3, 9):
            for p in enumerate_paths(n):
                for kind in ExtensionKind:
                    self.assertEqual(path_from_word(extend_word(word_from_path(p), kind)),
                                     extend(p, kind))

    def test_extend_word(self):
        self.assertEqual(extend_word(W(5, 4, 3, 2, 1), ExtensionKind.LEFT_TOP_RIGHT_BOTTOM),
                         W(7, 1, 5, 4, 3, 2, 6))
        self.assertEqual(extend_word(W(3, 1, 2), ExtensionKind.OUTER_TOP), W(5, 1, 4, 2, 3))
        self.assertEqual(extend_word(W(3, 1, 2), ExtensionKind.OUTER_BOTTOM), W(5, 2, 3, 1, 4))

    def test_peel(self):
        inner, kind = peel(path("-,+,+,+,-"))
        self.assertEqual(inner, path("+,+,+"))
        self.assertIs(kind, ExtensionKind.LEFT_TOP_RIGHT_BOTTOM)
        for p in enumerate_paths(7):
            inner, kind = peel(p)
            self.assertEqual(extend(inner, kind), p)
        with self.assertRaises(ValueError):
            peel(path("-,+"))


class TestAdmissibility(unittest.TestCase):
    def test_examples(self):
        for p in enumerate_paths(3):
            self.assertTrue(is_admissible(p))
        self.assertFalse(is_admissible(path("+,+,+")))
        self.assertFalse(is_admissible(path("-,+,+,+,-")))

    def test_counts(self):
        for n, expected in [(3, 2), (5, 6), (7, 18), (9, 54), (11, 162)]:
            self.assertEqual(len(enumerate_admissible(n)), expected)

    def test_s5_admissible_set(self):
        excluded = {path("+,+,+"), path("-,-,-")}
        self.assertEqual(set(enumerate_admissible(5)), set(enumerate_paths(5)) - excluded)

    def test_generation_matches_filter(self):
        for n in (3, 5, 7, 9, 11):
            self.assertEqual(generate_admissible(n), sorted(enumerate_admissible(n)))

    def test_admissible_kinds(self):
        self.assertEqual(admissible_kinds(path("+")), [
            ExtensionKind.OUTER_TOP, ExtensionKind.OUTER_BOTTOM,
            ExtensionKind.LEFT_TOP_RIGHT_BOTTOM,
        ])
        self.assertEqual(admissible_kinds(path("-")), [
            ExtensionKind.OUTER_TOP, ExtensionKind.OUTER_BOTTOM,
            ExtensionKind.LEFT_BOTTOM_RIGHT_TOP,
        ])

    def test_parity(self):
        with self.assertRaises(ValueError):
            is_admissible(path("-,+"))
        with self.assertRaises(ValueError):
            enumerate_admissible(6)


class TestHalfPower(unittest.TestCase):
    def test_affording_example(self):
        p = path_from_word(W(5, 1, 3, 2, 4))
        self.assertEqual(half_power(p, W(5, 2, 4)), longest_element(5))

    def test_non_affording_example(self):
        p = path_from_word(W(5, 1, 2, 3, 4))
        self.assertNotEqual(half_power(p, W(5, 3, 4)), longest_element(5))

    def test_validation(self):
        p = path("-,+,-")
        with self.assertRaises(ValueError):
            half_power(p, W(5, 2))
        with self.assertRaises(ValueError):
            half_power(p, W(5, 2, 2))
        with self.assertRaises(ValueError):
            half_power(p, W(7, 2, 4))
        with self.assertRaises(ValueError):
            half_power(path("-,+"), W(4, 2))

    def test_find_split(self):
        split = find_half_power_split(path("-,+,-"))
        self.assertIsInstance(split, HalfPowerSplit)
        self.assertEqual(evaluate(split.w1), evaluate(W(5, 1, 3)))
        self.assertEqual(evaluate(split.w2), evaluate(W(5, 2, 4)))
        self.assertEqual(split.to_dict(), {"w1": "1,3", "w2": "2,4"})
        self.assertIsNone(find_half_power_split(path("-,-,-")))

    def test_non_admissible_height_one(self):
        self.assertIsNone(find_half_power_split(path_from_word(W(7, 1, 5, 4, 3, 2, 6))))

    def test_split_exists_exactly_for_admissible(self):
        for n in (3, 5, 7, 9):
            admissible = set(enumerate_admissible(n))
            for p in enumerate_paths(n):
                self.assertEqual(find_half_power_split(p) is not None, p in admissible, str(p))

    def test_split_invariants(self):
        for n in (5, 7):
            m = (n + 1) // 2
            for p in enumerate_admissible(n):
                c = cyclic_permutation(p)
                split = find_half_power_split(p)
                self.assertEqual(len(split.w1), m - 1)
                self.assertEqual(len(split.w2), m - 1)
                self.assertFalse(set(split.w1.letters) & set(split.w2.letters))
                self.assertEqual(evaluate(concat(split.w1, split.w2)), c)
                self.assertEqual(half_power(p, split.w2), longest_element(n))

    def test_w2_is_unique(self):
        for n in (5, 7, 9):
            m = (n + 1) // 2
            w0 = longest_element(n)
            for p in enumerate_admissible(n):
                forced = compose(w0, inverse(power(cyclic_permutation(p), m - 1)))
                splits = all_half_power_splits(p)
                self.assertTrue(splits)
                for split in splits:
                    self.assertEqual(evaluate(split.w2), forced)

    def test_direct_split_matches_exhaustive_walk(self):
        for n in (3, 5, 7, 9):
            for p in enumerate_paths(n):
                splits = all_half_power_splits(p)
                split = find_half_power_split(p)
                if not splits:
                    self.assertIsNone(split, str(p))
                    continue
                self.assertEqual(len(splits), 1, str(p))
                self.assertEqual(split, splits[0], str(p))

    def test_large_degree_split(self):
        p = path("+,+,+,-,+,+,-,+,-,+,-,-,-")
        self.assertEqual(find_half_power_split(p) is not None, is_admissible(p))
        for q in generate_admissible(19)[:50]:
            split = find_half_power_split(q)
            self.assertIsNotNone(split, str(q))
            self.assertEqual(half_power(q, split.w2), longest_element(19))
            self.assertEqual(evaluate(concat(split.w1, split.w2)), cyclic_permutation(q))

    def test_height_three_obstruction(self):
        for n in (5, 7, 9):
            for p in enumerate_paths(n):
                if abs(height(p)) == 3:
                    self.assertIsNone(find_half_power_split(p))


class TestLengthBound(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(power_length(path("-,+,-"), 2), 8)
        self.assertLess(power_length(path("+,+,+"), 2), 8)

    def test_bound_holds(self):
        for n in (3, 5, 7, 9, 11):
            for p in enumerate_paths(n):
                self.assertTrue(length_gap_bound(p), str(p))


class TestPrescribedExtension(unittest.TestCase):
    def test_prescribed_word_affords_longest(self):
        for n in (3, 5, 7):
            for inner in generate_admissible(n):
                inner_w2 = find_half_power_split(inner).w2
                for kind in admissible_kinds(inner):
                    outer = extend(inner, kind)
                    w2 = prescribed_extension_w2(inner, inner_w2, kind)
                    self.assertEqual(half_power(outer, w2), longest_element(n + 2))
                    self.assertEqual(evaluate(w2), evaluate(find_half_power_split(outer).w2))

    def test_case_words(self):
        # height +1 inner element s2 s1 with w2 = s1
        inner = path("+")
        self.assertEqual(prescribed_extension_w2(inner, W(3, 1), ExtensionKind.OUTER_TOP),
                         W(5, 1, 2))
        self.assertEqual(prescribed_extension_w2(inner, W(3, 1), ExtensionKind.OUTER_BOTTOM),
                         W(5, 2, 1))
        self.assertEqual(
            prescribed_extension_w2(inner, W(3, 1), ExtensionKind.LEFT_TOP_RIGHT_BOTTOM),
            W(5, 2, 4),
        )

    def test_rejects_inadmissible_kind(self):
        with self.assertRaises(ValueError):
            prescribed_extension_w2(path("+"), W(3, 1), ExtensionKind.LEFT_BOTTOM_RIGHT_TOP)


if __name__ == '__main__':
    unittest.main()

"""Shared test data and the randomized disk-pair generator."""

import random

from disksurgery import DiskPairSystem, Word, parse_word

# Boundary word of disk E in the built-in genus-3 pair: two parallel
# copies traversed oppositely, then the band letter. Reduces to x2.
DISK_E_FACTORS = (
    "x1 x2^-1 x1 x2^-1 x1 x2 x1^-1 x2 x2 x1^-1",
    "x1 x2^-1 x2^-1 x1 x2^-1 x1^-1 x2 x1^-1 x2 x1^-1",
    "x2",
)
DISK_E_WORD = " ".join(DISK_E_FACTORS)

# The two classes every fig1 surgery lands on (short and long outcome).
OUTCOME_SHORT = "x1 x2^-1 x1 x2 x1^-1 x2"
OUTCOME_LONG = "x1 x2^-1 x1 x2^-1 x1 x2 x1^-1 x2 x2 x1^-1 x2"


def word(text, rank=3):
    return parse_word(text, rank)


def random_word(rng: random.Random, rank: int, max_len: int, min_len: int = 0) -> Word:
    n = rng.randint(min_len, max_len)
    letters = []
    for _ in range(n):
        index = rng.randint(1, rank)
        letters.append(index if rng.random() < 0.5 else -index)
    return Word(tuple(letters))


_CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]


def random_noncrossing_matching(rng: random.Random, k: int):
    """Uniform non-crossing perfect matching on slots 0..2k-1."""

    def rec(lo, hi):
        pairs_here = (hi - lo) // 2
        if pairs_here == 0:
            return []
        weights = [_CATALAN[j] * _CATALAN[pairs_here - 1 - j] for j in range(pairs_here)]
        pick = rng.randrange(sum(weights))
        j = 0
        while pick >= weights[j]:
            pick -= weights[j]
            j += 1
        mate = lo + 2 * j + 1
        return [(lo, mate)] + rec(lo + 1, mate) + rec(mate + 1, hi)

    return rec(0, 2 * k)


def random_system(rng: random.Random, min_chords: int = 1, max_chords: int = 6) -> DiskPairSystem:
    """Random valid system: independent non-crossing arrangements on the
    two circles, a random chord bijection between them, random labels of
    length <= 4 per segment."""
    k = rng.randint(min_chords, max_chords)
    rank = rng.choice([2, 3])
    matching_d = random_noncrossing_matching(rng, k)
    matching_e = random_noncrossing_matching(rng, k)
    rng.shuffle(matching_e)

    order_d = [None] * (2 * k)
    order_e = [None] * (2 * k)
    chords = []
    for i, (d_pair, e_pair) in enumerate(zip(matching_d, matching_e)):
        first, second = f"q{2 * i + 1}", f"q{2 * i + 2}"
        order_d[d_pair[0]] = first
        order_d[d_pair[1]] = second
        if rng.random() < 0.5:
            e_pair = (e_pair[1], e_pair[0])
        order_e[e_pair[0]] = first
        order_e[e_pair[1]] = second
        chords.append((first, second))

    def labels(count):
        return tuple(random_word(rng, rank, 4) for _ in range(count))

    return DiskPairSystem(
        rank=rank,
        points=tuple(order_d),
        order_d=tuple(order_d),
        order_e=tuple(order_e),
        chords=tuple(chords),
        labels_d=labels(2 * k),
        labels_e=labels(2 * k),
    )


def disjoint_system(label_d="x1", label_e="x2", rank=2) -> DiskPairSystem:
    return DiskPairSystem(
        rank=rank, points=(), order_d=(), order_e=(), chords=(),
        labels_d=(parse_word(label_d, rank),), labels_e=(parse_word(label_e, rank),),
    )


def single_chord_system(labels_d, labels_e, rank=2) -> DiskPairSystem:
    return DiskPairSystem(
        rank=rank, points=("a", "b"), order_d=("a", "b"), order_e=("a", "b"),
        chords=(("a", "b"),),
        labels_d=tuple(parse_word(t, rank) for t in labels_d),
        labels_e=tuple(parse_word(t, rank) for t in labels_e),
    )

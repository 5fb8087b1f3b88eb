"""Primitivity testing in free groups via Whitehead length descent.

An element of a free group is primitive when it belongs to some free
basis, i.e. when its conjugacy class lies in the automorphism orbit of a
single generator. By Whitehead's peak reduction theorem, a cyclic word
that is not of minimal length in its orbit admits a length-reducing
Whitehead automorphism, so greedy descent over the (finite) set of
Whitehead automorphisms terminates at the orbit minimum; the input is
primitive exactly when that minimum has cyclic length one.

Two independent routes are provided and cross-checked by the test suite:

* :func:`is_primitive` — the descent, plus a rank-2 fast path
  (:func:`oz_rank2_nonprimitive`): a cyclically reduced word over
  ``x1, x2`` containing some generator with both signs is never
  primitive.
* :func:`oracle_primitives` — breadth-first closure of the orbit of
  ``x1`` under all enumerated automorphisms, restricted to a length
  bound. Peak reduction guarantees the closure is complete within the
  bound, so membership is ground truth for short words.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass, field
from functools import lru_cache

from ._kernels import apply_images, apply_images_canonical, cyclic_reduce, letter_key
from .words import CyclicWord, Word, check_rank, format_letter

__all__ = [
    "WhiteheadAuto",
    "PrimitivityVerdict",
    "OracleCapExceeded",
    "DEFAULT_ORACLE_CAP",
    "enumerate_whitehead_autos",
    "apply_auto",
    "apply_auto_cyclic",
    "whitehead_minimize",
    "is_primitive",
    "oz_rank2_nonprimitive",
    "oracle_primitives",
    "replay_certificate",
]

DEFAULT_ORACLE_CAP = 10**6
_ORACLE_CAP_ENV = "DISKSURGERY_ORACLE_CAP"


class OracleCapExceeded(RuntimeError):
    """The oracle's breadth-first closure hit its node cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


def _letters_in_order(rank: int) -> list[int]:
    out = []
    for i in range(1, rank + 1):
        out.append(i)
        out.append(-i)
    return out


class WhiteheadAuto:
    """A Whitehead generator of Aut(F_rank).

    First kind: a signed permutation of the generators,
    ``x_i -> x_{perm[i-1]} ** signs[i-1]``.

    Second kind: a multiplier letter ``a`` and a letter set ``members``
    with ``a`` in the set and ``a^-1`` outside it. A letter ``x`` (other
    than ``a``, ``a^-1``) maps to ``x a`` if only ``x`` is a member, to
    ``a^-1 x`` if only ``x^-1`` is, to ``a^-1 x a`` if both are, and is
    fixed if neither is; ``a`` is fixed.
    """

    __slots__ = ("kind", "rank", "multiplier", "members", "perm", "signs",
                 "images", "_flat", "_offsets")

    def __init__(self, kind, rank, multiplier=None, members=None, perm=None, signs=None):
        check_rank(rank)
        self.kind = kind
        self.rank = rank
        self.multiplier = multiplier
        self.members = members
        self.perm = perm
        self.signs = signs
        if kind == "second":
            if not isinstance(members, frozenset):
                raise ValueError("second kind needs a frozenset of letters")
            if multiplier not in members or -multiplier in members:
                raise ValueError("need multiplier in members and its inverse outside")
            for a in members:
                if abs(a) > rank or a == 0:
                    raise ValueError(f"letter {a} out of range for rank {rank}")
            self.images = self._second_images()
        elif kind == "first":
            if sorted(perm) != list(range(1, rank + 1)):
                raise ValueError("perm must be a bijection of 1..rank")
            if len(signs) != rank or any(s not in (1, -1) for s in signs):
                raise ValueError("signs must be +1/-1 per generator")
            self.images = self._first_images()
        else:
            raise ValueError(f"unknown kind {kind!r}")
        flat: list[int] = []
        offsets = [0]
        for img in self.images:
            flat.extend(img)
            offsets.append(len(flat))
        self._flat = array("l", flat)
        self._offsets = array("l", offsets)

    def _second_images(self):
        a, members = self.multiplier, self.members
        images = []
        for x in _letters_in_order(self.rank):
            if x == a or x == -a:
                images.append((x,))
                continue
            member, inv_member = x in members, -x in members
            if member and not inv_member:
                images.append((x, a))
            elif inv_member and not member:
                images.append((-a, x))
            elif member and inv_member:
                images.append((-a, x, a))
            else:
                images.append((x,))
        return tuple(images)

    def _first_images(self):
        images = []
        for x in _letters_in_order(self.rank):
            i = abs(x) - 1
            target = self.perm[i] * self.signs[i]
            images.append((target,) if x > 0 else (-target,))
        return tuple(images)

    @classmethod
    def second(cls, rank, multiplier, members):
        return cls("second", rank, multiplier=multiplier, members=frozenset(members))

    @classmethod
    def first(cls, rank, perm, signs):
        return cls("first", rank, perm=tuple(perm), signs=tuple(signs))

    def _ident(self):
        return (self.kind, self.rank, self.multiplier, self.members, self.perm, self.signs)

    def __eq__(self, other):
        return isinstance(other, WhiteheadAuto) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def inverse(self) -> "WhiteheadAuto":
        """The inverse automorphism; for the second kind it is again enumerated."""
        if self.kind == "second":
            a = self.multiplier
            return WhiteheadAuto.second(
                self.rank, -a, (self.members - {a}) | {-a}
            )
        inv_perm = [0] * self.rank
        inv_signs = [1] * self.rank
        for i in range(self.rank):
            j = self.perm[i] - 1
            inv_perm[j] = i + 1
            inv_signs[j] = self.signs[i]
        return WhiteheadAuto.first(self.rank, inv_perm, inv_signs)

    def describe(self) -> str:
        if self.kind == "second":
            shown = sorted(self.members, key=letter_key)
            inner = ", ".join(format_letter(a) for a in shown)
            return f"second(a={format_letter(self.multiplier)}, A={{{inner}}})"
        moves = ", ".join(
            f"x{i + 1}->{format_letter(self.perm[i] * self.signs[i])}"
            for i in range(self.rank)
        )
        return f"first({moves})"

    def __repr__(self):
        return f"WhiteheadAuto[{self.describe()}]"


@lru_cache(maxsize=None)
def enumerate_whitehead_autos(rank: int) -> tuple[WhiteheadAuto, ...]:
    """Deterministic enumeration of Whitehead automorphisms.

    All ``2*rank * 2**(2*rank - 2)`` second-kind automorphisms (every
    valid multiplier/letter-set pair, including the identity-like ones
    with a singleton set) followed by a first-kind generating set:
    adjacent transpositions and single-generator sign flips.
    """
    check_rank(rank)
    autos = []
    letters = _letters_in_order(rank)
    for a in letters:
        others = [x for x in letters if abs(x) != abs(a)]
        for mask in range(1 << len(others)):
            members = {a}
            for j, x in enumerate(others):
                if mask >> j & 1:
                    members.add(x)
            autos.append(WhiteheadAuto.second(rank, a, members))
    identity_perm = tuple(range(1, rank + 1))
    plus = (1,) * rank
    for i in range(1, rank):
        perm = list(identity_perm)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        autos.append(WhiteheadAuto.first(rank, perm, plus))
    for i in range(1, rank + 1):
        signs = [1] * rank
        signs[i - 1] = -1
        autos.append(WhiteheadAuto.first(rank, identity_perm, signs))
    return tuple(autos)


def _check_support(letters, rank: int):
    for a in letters:
        if abs(a) > rank:
            raise ValueError(f"generator index {abs(a)} exceeds rank {rank}")


def apply_auto(auto: WhiteheadAuto, word: Word) -> Word:
    """Apply the automorphism letterwise and freely reduce."""
    _check_support(word.letters, auto.rank)
    return Word(apply_images(word.letters, auto._flat, auto._offsets))


def apply_auto_cyclic(auto: WhiteheadAuto, cyclic: CyclicWord) -> CyclicWord:
    """Induced action on conjugacy classes (canonical cyclic output)."""
    _check_support(cyclic.letters, auto.rank)
    return CyclicWord(apply_images_canonical(cyclic.letters, auto._flat, auto._offsets))


@dataclass(frozen=True, slots=True)
class PrimitivityVerdict:
    """Outcome of a primitivity test.

    ``certificate`` replays from the input's cyclic reduction to
    ``minimal`` with strictly decreasing cyclic length at every step; it
    is empty when the fast path fired (``minimal`` is then just the
    cyclic reduction, not necessarily the orbit minimum).
    """

    primitive: bool
    certificate: tuple[WhiteheadAuto, ...]
    minimal: CyclicWord
    oz_fired: bool = False


def whitehead_minimize(word: Word | CyclicWord, rank: int) -> PrimitivityVerdict:
    """Greedy first-improvement descent to an orbit-minimal cyclic word.

    Repeatedly applies the first enumerated automorphism that strictly
    shortens the cyclic word until none does. Peak reduction makes any
    local minimum global, so the verdict is ``primitive`` exactly when
    the minimum has length one.
    """
    check_rank(rank)
    _check_support(word.letters, rank)
    current = CyclicWord(word.letters)
    autos = enumerate_whitehead_autos(rank)
    certificate = []
    while len(current) > 1:
        best = None
        n = len(current)
        for auto in autos:
            image = cyclic_reduce(apply_images(current.letters, auto._flat, auto._offsets))
            if len(image) < n:
                best = (auto, image)
                break
        if best is None:
            break
        certificate.append(best[0])
        current = CyclicWord(best[1])
    return PrimitivityVerdict(
        primitive=len(current) == 1,
        certificate=tuple(certificate),
        minimal=current,
    )


def oz_rank2_nonprimitive(word: CyclicWord | Word) -> bool:
    """Rank-2 sign test: True certifies NON-primitivity, False is silent.

    A cyclically reduced word over ``x1, x2`` that contains some
    generator together with its inverse cannot lie in any free basis of
    the rank-2 free group. Only applicable in rank-2 context.
    """
    cyclic = CyclicWord(tuple(word.letters))
    seen = set(cyclic.letters)
    if any(abs(a) > 2 for a in seen):
        raise ValueError("rank-2 test applied to a word with higher generators")
    return (1 in seen and -1 in seen) or (2 in seen and -2 in seen)


def is_primitive(word: Word | CyclicWord, rank: int, *, use_oz: bool = True) -> PrimitivityVerdict:
    """Decide whether ``word`` is primitive in the rank-``rank`` free group.

    Invariant under conjugation and inversion. When the word's support
    lies in ``x1, x2`` the rank-2 sign test runs first (primitivity is
    stable under extending the ambient basis, so the restriction is
    sound); ``use_oz=False`` forces the descent, with identical verdicts.
    """
    check_rank(rank)
    _check_support(word.letters, rank)
    cyclic = CyclicWord(tuple(word.letters))
    if use_oz and cyclic.letters and all(abs(a) <= 2 for a in cyclic.letters):
        if oz_rank2_nonprimitive(cyclic):
            return PrimitivityVerdict(
                primitive=False, certificate=(), minimal=cyclic, oz_fired=True
            )
    return whitehead_minimize(cyclic, rank)


def _resolve_cap(node_cap: int | None) -> int:
    if node_cap is not None:
        return node_cap
    raw = os.environ.get(_ORACLE_CAP_ENV)
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{_ORACLE_CAP_ENV}={raw!r} is not an integer") from None


def oracle_primitives(rank: int, max_len: int, *, node_cap: int | None = None) -> frozenset[CyclicWord]:
    """All primitive cyclic words of length at most ``max_len``.

    Breadth-first closure of the canonical class of ``x1`` under every
    enumerated Whitehead automorphism, discarding words longer than
    ``max_len``. Completeness within the bound follows from peak
    reduction: any two orbit members are joined by a chain whose
    intermediate lengths never exceed the endpoints' maximum.

    Intended as an independent ground truth for :func:`is_primitive` at
    small sizes (practical up to rank 3, length 8). Raises
    :class:`OracleCapExceeded` if more than ``node_cap`` canonical words
    are retained (default ``DEFAULT_ORACLE_CAP``, overridable via the
    ``DISKSURGERY_ORACLE_CAP`` environment variable).
    """
    check_rank(rank)
    if max_len < 1:
        raise ValueError(f"max_len must be >= 1, got {max_len}")
    cap = _resolve_cap(node_cap)
    autos = enumerate_whitehead_autos(rank)
    start = CyclicWord((1,))
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for cyclic in frontier:
            for auto in autos:
                image = CyclicWord(
                    apply_images_canonical(cyclic.letters, auto._flat, auto._offsets)
                )
                if len(image) <= max_len and image not in seen:
                    seen.add(image)
                    if len(seen) > cap:
                        raise OracleCapExceeded(
                            f"oracle closure exceeded {cap} canonical words "
                            f"(rank {rank}, max_len {max_len})",
                            cap,
                        )
                    next_frontier.append(image)
        frontier = next_frontier
    return frozenset(seen)


def replay_certificate(word: Word | CyclicWord, certificate) -> tuple[CyclicWord, ...]:
    """Trail of cyclic words visited by a certificate, start included."""
    current = CyclicWord(tuple(word.letters))
    trail = [current]
    for auto in certificate:
        current = apply_auto_cyclic(auto, current)
        trail.append(current)
    return tuple(trail)

"""Permutations of {1..n}: algebra, cycle structure, involution classes.

Conventions used throughout the package:

- Points are 1-based.  A permutation of degree n stores the tuple of images
  ``(p(1), ..., p(n))``.
- Composition applies the right factor first: ``(p * q)(k) == p(q(k))``.
- Cycle notation reads ``"(1,2)(3,4)"``; fixed points are omitted and the
  identity prints as ``"()"``.
- Conjugation is ``p.conjugate(g) == g * p * g.inverse()``.
- Cycle types are partitions written as tuples sorted in descending order,
  so the class of an involution with j 2-cycles in degree n has cycle type
  ``(2,) * j + (1,) * (n - 2*j)``.

Involutions with exactly j 2-cycles form a single conjugacy class; the
module exposes that class both by direct construction (support choice plus
perfect matching) and through its counting formula n! / (i! * j! * 2**j)
with i = n - 2*j fixed points.
"""

from __future__ import annotations

import itertools
import math
import re
from typing import Iterable, Iterator

from .errors import IntegrityError

# Full enumeration of Sym_n is refused above this degree; 10! is the largest
# sweep anything here is expected to perform.
MAX_ENUMERATION_DEGREE = 10

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """An element of the symmetric group on {1..n}, stored by its images.

    >>> p = Permutation((2, 1, 3))
    >>> p
    (1,2)
    >>> p(1), p(2), p(3)
    (2, 1, 3)
    >>> q = Permutation.from_cycles(3, [(1, 3)])
    >>> p * q            # q acts first: 1 -> 3 -> 3, 3 -> 1 -> 2, 2 -> 2 -> 1
    (1,3,2)
    >>> (p * q).order()
    3
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images!r}")
        self.images = images

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> "Permutation":
        # Trusted constructor for images already known to be a bijection.
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 1:
            raise ValueError("degree must be at least 1")
        return cls._raw(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        """The 2-cycle (a,b) as an element of degree n."""
        return cls.from_cycles(n, [(a, b)])

    @classmethod
    def full_cycle(cls, n: int) -> "Permutation":
        """The n-cycle (1,2,...,n)."""
        return cls.from_cycles(n, [tuple(range(1, n + 1))])

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = tuple(cycle)
            if len(cycle) < 2:
                raise ValueError(f"cycle too short: {cycle!r}")
            for point in cycle:
                if not 1 <= point <= n:
                    raise ValueError(f"point {point} outside 1..{n}")
                if point in seen:
                    raise ValueError(f"point {point} repeated across cycles")
                seen.add(point)
            for src, dst in zip(cycle, cycle[1:] + cycle[:1]):
                images[src - 1] = dst
        return cls._raw(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition; the right factor is applied first."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation._raw(tuple(self.images[v - 1] for v in other.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for k, v in enumerate(self.images, start=1):
            images[v - 1] = k
        return Permutation._raw(tuple(images))

    def __pow__(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(exponent)):
            result = base * result
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """g * self * g**-1, the relabeling of self along g."""
        return g * self * g.inverse()

    def commutes_with(self, other: "Permutation") -> bool:
        return self * other == other * self

    def cycles(self, include_fixed: bool = False) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each rotated to start at its least point and
        sorted by that point."""
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, sorted descending.

        >>> Permutation.from_cycles(6, [(1, 2), (3, 4)]).cycle_type()
        (2, 2, 1, 1)
        """
        lengths = [len(c) for c in self.cycles(include_fixed=True)]
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def is_involution(self) -> bool:
        return not self.is_identity() and (self * self).is_identity()

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return self.cycle_string()


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(1,2)(3,4)"`` into a degree-n element.

    ``"()"`` denotes the identity.  Whitespace around numbers is tolerated;
    anything else is rejected.

    >>> parse_cycles("(1,3,2)", 4)
    (1,3,2)
    >>> parse_cycles("()", 3).is_identity()
    True
    """
    stripped = re.sub(r"\s+", "", text)
    if stripped == "()":
        return Permutation.identity(n)
    body = _CYCLE_RE.findall(stripped)
    if "".join(f"({part})" for part in body) != stripped or not body:
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for part in body:
        if not part:
            raise ValueError(f"empty cycle in {text!r}")
        try:
            cycles.append(tuple(int(tok) for tok in part.split(",")))
        except ValueError as exc:
            raise ValueError(f"malformed cycle notation: {text!r}") from exc
    return Permutation.from_cycles(n, cycles)


def enumerate_sym(n: int) -> Iterator[Permutation]:
    """Yield all n! elements of Sym_n in lexicographic order of image tuples."""
    if not 1 <= n <= MAX_ENUMERATION_DEGREE:
        raise ValueError(
            f"full enumeration supported for 1 <= n <= {MAX_ENUMERATION_DEGREE}, got {n}"
        )
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation._raw(images)


def pair_partitions(points: Iterable[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield every partition of the given points into unordered pairs.

    Pairs come out as (small, large) and each partition lists its pairs in
    increasing order of first coordinate, so the overall stream is
    deterministic.  The number of points must be even.
    """
    points = sorted(points)
    if len(points) % 2:
        raise ValueError("odd number of points cannot be paired")

    def rec(remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not remaining:
            yield ()
            return
        first, rest = remaining[0], remaining[1:]
        for k, partner in enumerate(rest):
            head = (first, partner)
            for tail in rec(rest[:k] + rest[k + 1 :]):
                yield (head,) + tail

    return rec(tuple(points))


def involution_class_size(n: int, j: int) -> int:
    """Size of the class of involutions with j 2-cycles in degree n."""
    _check_class_id(n, j)
    i = n - 2 * j
    return math.factorial(n) // (math.factorial(i) * math.factorial(j) * 2**j)


def involution_class(n: int, j: int) -> tuple[Permutation, ...]:
    """All involutions of degree n with exactly j 2-cycles, sorted.

    Built directly: choose the 2j moved points, then pair them up.  The
    result is cross-checked against the counting formula.
    """
    _check_class_id(n, j)
    members = []
    for support in itertools.combinations(range(1, n + 1), 2 * j):
        for matching in pair_partitions(support):
            members.append(Permutation.from_cycles(n, matching))
    members.sort()
    if len(members) != involution_class_size(n, j):
        raise IntegrityError(
            f"involution class (n={n}, j={j}) has {len(members)} members, "
            f"formula says {involution_class_size(n, j)}"
        )
    return tuple(members)


def _check_class_id(n: int, j: int) -> None:
    if n < 2:
        raise ValueError(f"degree must be at least 2, got {n}")
    if j < 1:
        raise ValueError(f"class index j must be at least 1, got {j}")
    if 2 * j > n:
        raise ValueError(f"class (n={n}, j={j}) is empty: need 2j <= n")

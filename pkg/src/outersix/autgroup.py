"""Exhaustive enumeration of Aut(Sym_n) for 3 <= n <= 6.

Sym_n is generated by x = (1,2) and y = (1,2,...,n), so an automorphism is
pinned down by the images of x and y.  Candidate image pairs (an involution
for x, an order-n element for y) are validated by walking a breadth-first
spanning tree of the Cayley graph on {x, y}: the walk fills the full image
table and checks every edge (g, g*s) along the way, so a conflict-free pass
certifies the homomorphism property exactly, by induction on word length.
No sampling, no reliance on pruning heuristics: the one shortcut applied
before the walk, requiring order(x'*y') == order(x*y), is a necessary
condition for any automorphism, so nothing valid is skipped.

Automorphisms are stored as full image tables over the lexicographically
ordered element list, which makes composition, comparison and coset
bookkeeping plain tuple arithmetic.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import IntegrityError
from .perms import Permutation, enumerate_sym, involution_class

MIN_SEARCH_DEGREE = 3
MAX_SEARCH_DEGREE = 6


@lru_cache(maxsize=None)
def group_elements(n: int) -> tuple[Permutation, ...]:
    """All of Sym_n in lexicographic order of image tuples."""
    if not 1 <= n <= MAX_SEARCH_DEGREE + 1:
        raise ValueError(f"group tables supported for n <= {MAX_SEARCH_DEGREE + 1}")
    return tuple(enumerate_sym(n))


@lru_cache(maxsize=None)
def _context(n: int):
    """Element list, index map, Cayley table, inverses and orders."""
    elements = group_elements(n)
    index = {p.images: k for k, p in enumerate(elements)}
    cayley = [
        [index[tuple(p.images[v - 1] for v in q.images)] for q in elements]
        for p in elements
    ]
    inverse = [index[p.inverse().images] for p in elements]
    orders = [p.order() for p in elements]
    return elements, index, cayley, inverse, orders


def element_index(n: int, p: Permutation) -> int:
    _, index, _, _, _ = _context(n)
    return index[p.images]


class AutomorphismTable:
    """An automorphism of Sym_n as a full table of element-index images."""

    __slots__ = ("n", "images")

    def __init__(self, n: int, images):
        images = tuple(images)
        size = len(group_elements(n))
        if len(images) != size or len(set(images)) != size:
            raise ValueError("table is not a bijection of the element list")
        self.n = n
        self.images = images

    @classmethod
    def from_mapping(cls, n: int, mapping) -> "AutomorphismTable":
        """Build a table from a Permutation -> Permutation callable."""
        elements, index, _, _, _ = _context(n)
        return cls(n, tuple(index[mapping(p).images] for p in elements))

    @classmethod
    def identity(cls, n: int) -> "AutomorphismTable":
        return cls(n, range(len(group_elements(n))))

    def apply(self, p: Permutation) -> Permutation:
        elements, index, _, _, _ = _context(self.n)
        return elements[self.images[index[p.images]]]

    def compose(self, other: "AutomorphismTable") -> "AutomorphismTable":
        """self after other."""
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return AutomorphismTable(
            self.n, tuple(self.images[k] for k in other.images)
        )

    def inverse(self) -> "AutomorphismTable":
        images = [0] * len(self.images)
        for k, v in enumerate(self.images):
            images[v] = k
        return AutomorphismTable(self.n, images)

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images))

    def is_involution(self) -> bool:
        """True for order exactly 2; the identity does not count."""
        images = self.images
        return not self.is_identity() and all(
            images[images[k]] == k for k in range(len(images))
        )

    def is_homomorphism(self) -> bool:
        """Exact check on every pair (g, s) with s a generator."""
        _, index, cayley, _, _ = _context(self.n)
        images = self.images
        for s in _generator_indices(self.n):
            s_image = images[s]
            for g in range(len(images)):
                if images[cayley[g][s]] != cayley[images[g]][s_image]:
                    return False
        return True

    def generator_images(self) -> tuple[Permutation, Permutation]:
        x = Permutation.transposition(self.n, 1, 2)
        y = Permutation.full_cycle(self.n)
        return (self.apply(x), self.apply(y))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AutomorphismTable)
            and self.n == other.n
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((self.n, self.images))

    def __lt__(self, other: "AutomorphismTable") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        x_img, y_img = self.generator_images()
        return f"<Aut(Sym_{self.n}) (1,2)->{x_img} (1,..,{self.n})->{y_img}>"


def _generator_indices(n: int) -> tuple[int, int]:
    _, index, _, _, _ = _context(n)
    return (
        index[Permutation.transposition(n, 1, 2).images],
        index[Permutation.full_cycle(n).images],
    )


@lru_cache(maxsize=None)
def _spanning_order(n: int) -> tuple[int, ...]:
    """Element indices in breadth-first order from the identity along the
    generator edges g -> g*x, g -> g*y."""
    elements, index, cayley, _, _ = _context(n)
    xi, yi = _generator_indices(n)
    start = index[Permutation.identity(n).images]
    order = [start]
    seen = {start}
    head = 0
    while head < len(order):
        g = order[head]
        head += 1
        for s in (xi, yi):
            h = cayley[g][s]
            if h not in seen:
                seen.add(h)
                order.append(h)
    if len(order) != len(elements):
        raise IntegrityError("generators fail to generate the group")
    return tuple(order)


@lru_cache(maxsize=None)
def enumerate_automorphisms(n: int) -> tuple[AutomorphismTable, ...]:
    """Every automorphism of Sym_n, by exhausting generator image pairs."""
    if not MIN_SEARCH_DEGREE <= n <= MAX_SEARCH_DEGREE:
        raise ValueError(
            f"search supported for {MIN_SEARCH_DEGREE} <= n <= "
            f"{MAX_SEARCH_DEGREE}, got {n}"
        )
    elements, index, cayley, _, orders = _context(n)
    size = len(elements)
    xi, yi = _generator_indices(n)
    walk = _spanning_order(n)
    start = index[Permutation.identity(n).images]
    target_order = orders[cayley[xi][yi]]

    x_candidates = [k for k in range(size) if orders[k] == 2]
    y_candidates = [k for k in range(size) if orders[k] == n]

    tables = []
    for xc in x_candidates:
        for yc in y_candidates:
            if orders[cayley[xc][yc]] != target_order:
                continue
            images = [-1] * size
            images[start] = start
            ok = True
            for g in walk:
                g_image = images[g]
                for s, s_image in ((xi, xc), (yi, yc)):
                    h = cayley[g][s]
                    expected = cayley[g_image][s_image]
                    if images[h] < 0:
                        images[h] = expected
                    elif images[h] != expected:
                        ok = False
                        break
                if not ok:
                    break
            if ok and len(set(images)) == size:
                tables.append(AutomorphismTable(n, images))
    tables.sort()
    if len(set(tables)) != len(tables):
        raise IntegrityError("duplicate automorphisms from distinct candidates")
    return tuple(tables)


def conjugation_table(n: int, g: Permutation) -> AutomorphismTable:
    """The inner automorphism p -> g * p * g**-1."""
    _, index, cayley, inverse, _ = _context(n)
    gi = index[g.images]
    g_inv = inverse[gi]
    images = [cayley[cayley[gi][p]][g_inv] for p in range(len(cayley))]
    return AutomorphismTable(n, images)


def inner_witness(table: AutomorphismTable) -> Permutation | None:
    """Some g whose conjugation equals the table, or None when outer.

    Scans all n! candidates; a candidate matching on both generator images
    is verified against the full table before it is returned.
    """
    n = table.n
    elements, index, cayley, inverse, _ = _context(n)
    xi, yi = _generator_indices(n)
    x_image, y_image = table.images[xi], table.images[yi]
    for gi in range(len(elements)):
        row = cayley[gi]
        g_inv = inverse[gi]
        if cayley[row[xi]][g_inv] != x_image:
            continue
        if cayley[row[yi]][g_inv] != y_image:
            continue
        g = elements[gi]
        if conjugation_table(n, g) != table:
            raise IntegrityError(
                "generator images match a conjugation but the tables differ"
            )
        return g
    return None


@lru_cache(maxsize=None)
def inner_and_outer(n: int) -> tuple[tuple[AutomorphismTable, ...], tuple[AutomorphismTable, ...]]:
    """The enumerated automorphisms split by inner witness existence."""
    inner, outer = [], []
    for table in enumerate_automorphisms(n):
        if inner_witness(table) is None:
            outer.append(table)
        else:
            inner.append(table)
    return tuple(inner), tuple(outer)


def inner_order(n: int) -> int:
    """Number of distinct conjugation maps (counted as tables)."""
    distinct = {conjugation_table(n, g) for g in group_elements(n)}
    return len(distinct)


def out_order(n: int) -> int:
    """|Aut| / |Inn|, the size of the outer quotient."""
    aut = len(enumerate_automorphisms(n))
    inn = inner_order(n)
    if aut % inn:
        raise IntegrityError(f"|Inn| = {inn} does not divide |Aut| = {aut}")
    return aut // inn


def class_image(table: AutomorphismTable, j: int) -> int:
    """The index j' with table(C_j) = C_j'.

    Applies the table to every member of C_j and demands that all images
    are involutions of one single shape.
    """
    n = table.n
    shapes = set()
    for p in involution_class(n, j):
        image = table.apply(p)
        cycle_type = image.cycle_type()
        if any(length > 2 for length in cycle_type):
            raise IntegrityError(
                f"image {image} of an involution is not an involution"
            )
        shapes.add(cycle_type.count(2))
    if len(shapes) != 1:
        raise IntegrityError(
            f"class C_{j} maps onto several classes: {sorted(shapes)}"
        )
    return shapes.pop()


def involutive_outer_count() -> int:
    """Outer automorphisms of Sym_6 that square to the identity."""
    _, outer = inner_and_outer(6)
    return sum(1 for table in outer if table.is_involution())

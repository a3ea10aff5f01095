"""Edge and factor geometry of the complete graph on six vertices.

The 15 edges of K6 correspond to the 15 transpositions of Sym_6 and the 15
one-factors (perfect matchings) to the 15 triple involutions.  Each edge
lies in exactly 3 factors, each factor extends to exactly 2 of the 6
one-factorizations, and the point-line structure with edges as points and
factors as lines is a generalized quadrangle of order (2,2): three points
per line, three lines per point, and for a point off a line a unique line
through the point meeting it.  The bipartite incidence graph of that
structure is cubic on 30 vertices with girth 8.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache

from .errors import IntegrityError
from .graphs import Graph
from .perms import Permutation, pair_partitions

POINTS = (1, 2, 3, 4, 5, 6)

Edge = tuple[int, int]
Factor = tuple[Edge, Edge, Edge]
Factorization = tuple[Factor, ...]


@lru_cache(maxsize=None)
def edges() -> tuple[Edge, ...]:
    """The 15 edges of K6 as sorted pairs, lexicographically ordered."""
    return tuple(itertools.combinations(POINTS, 2))

@lru_cache(maxsize=None)
def factors() -> tuple[Factor, ...]:
    """The 15 perfect matchings, each a sorted triple of edges."""
    found = tuple(sorted(pair_partitions(POINTS)))
    if len(found) != 15:
        raise IntegrityError(f"expected 15 one-factors, found {len(found)}")
    return found


def edge_to_transposition(edge: Edge) -> Permutation:
    return Permutation.transposition(6, *edge)


def transposition_to_edge(p: Permutation) -> Edge:
    cycles = p.cycles()
    if p.degree != 6 or len(cycles) != 1 or len(cycles[0]) != 2:
        raise ValueError(f"{p} is not a transposition of degree 6")
    return tuple(sorted(cycles[0]))  # type: ignore[return-value]


def factor_to_involution(factor: Factor) -> Permutation:
    return Permutation.from_cycles(6, factor)


def involution_to_factor(p: Permutation) -> Factor:
    if p.degree != 6 or p.cycle_type() != (2, 2, 2):
        raise ValueError(f"{p} is not a triple involution of degree 6")
    return tuple(sorted(tuple(sorted(c)) for c in p.cycles()))  # type: ignore


def stars() -> dict[int, frozenset[Edge]]:
    """The 6 stars: for each point, the 5 edges through it."""
    return {
        i: frozenset(e for e in edges() if i in e) for i in POINTS
    }


@lru_cache(maxsize=None)
def factors_through() -> dict[Edge, tuple[Factor, ...]]:
    """Each edge with the factors containing it (exactly 3 apiece)."""
    table = {
        e: tuple(f for f in factors() if e in f) for e in edges()
    }
    bad = {e: len(fs) for e, fs in table.items() if len(fs) != 3}
    if bad:
        raise IntegrityError(f"edges without exactly 3 factors: {bad}")
    return table


@lru_cache(maxsize=None)
def factorizations() -> tuple[Factorization, ...]:
    """The 6 ways to split the 15 edges into 5 disjoint factors.

    Found by exact cover over the factor list; each comes out as a sorted
    5-tuple of factors and the factorizations are sorted overall.
    """
    all_factors = factors()

    def cover(remaining_edges, start):
        if not remaining_edges:
            yield ()
            return
        lead = min(remaining_edges)
        for k in range(start, len(all_factors)):
            factor = all_factors[k]
            if lead in factor and all(e in remaining_edges for e in factor):
                for rest in cover(remaining_edges - set(factor), k + 1):
                    yield (factor,) + rest

    found = sorted(
        tuple(sorted(fz)) for fz in cover(set(edges()), 0)
    )
    if len(found) != 6:
        raise IntegrityError(f"expected 6 one-factorizations, found {len(found)}")
    return tuple(found)


def factorizations_through(factor: Factor) -> tuple[Factorization, ...]:
    return tuple(fz for fz in factorizations() if factor in fz)


def permute_edge(g: Permutation, edge: Edge) -> Edge:
    return tuple(sorted((g(edge[0]), g(edge[1]))))  # type: ignore[return-value]


def permute_factor(g: Permutation, factor: Factor) -> Factor:
    return tuple(sorted(permute_edge(g, e) for e in factor))  # type: ignore


def permute_factorization(g: Permutation, fz: Factorization) -> Factorization:
    return tuple(sorted(permute_factor(g, f) for f in fz))  # type: ignore


class IncidenceStructure:
    """Points, lines, and the membership relation between them."""

    __slots__ = ("points", "lines")

    def __init__(self, points, lines):
        self.points = tuple(points)
        self.lines = tuple(frozenset(line) for line in lines)
        point_set = set(self.points)
        if len(point_set) != len(self.points):
            raise ValueError("duplicate points")
        if len(set(self.lines)) != len(self.lines):
            raise ValueError("duplicate lines")
        for line in self.lines:
            if not line <= point_set:
                raise ValueError("line contains an unknown point")

    def lines_through(self, point) -> tuple[frozenset, ...]:
        return tuple(line for line in self.lines if point in line)

    def dual(self) -> "IncidenceStructure":
        """Swap the roles: old lines become points, old points lines."""
        return IncidenceStructure(
            self.lines,
            (
                frozenset(line for line in self.lines if point in line)
                for point in self.points
            ),
        )


@lru_cache(maxsize=None)
def doily() -> IncidenceStructure:
    """The generalized quadrangle GQ(2,2): K6 edges against one-factors."""
    return IncidenceStructure(edges(), (frozenset(f) for f in factors()))


def check_gq_axioms(structure: IncidenceStructure, s: int = 2, t: int = 2) -> None:
    """Raise IntegrityError naming the first GQ(s,t) axiom that fails."""
    for line in structure.lines:
        if len(line) != s + 1:
            raise IntegrityError(
                f"line size axiom: {sorted(line)} has {len(line)} points, "
                f"wanted {s + 1}"
            )
    for point in structure.points:
        through = structure.lines_through(point)
        if len(through) != t + 1:
            raise IntegrityError(
                f"point degree axiom: {point} lies on {len(through)} lines, "
                f"wanted {t + 1}"
            )
    for a, b in itertools.combinations(structure.lines, 2):
        if len(a & b) > 1:
            raise IntegrityError(
                f"two lines share {len(a & b)} points: {sorted(a)}, {sorted(b)}"
            )
    for point in structure.points:
        for line in structure.lines:
            if point in line:
                continue
            meeting = [
                other
                for other in structure.lines_through(point)
                if other & line
            ]
            if len(meeting) != 1:
                raise IntegrityError(
                    f"unique transversal axiom: point {point} off line "
                    f"{sorted(line)} sees it through {len(meeting)} lines"
                )


@lru_cache(maxsize=None)
def tutte_graph() -> Graph:
    """The bipartite incidence graph of the doily: 15 edge vertices tagged
    ('e', edge) and 15 factor vertices tagged ('f', factor)."""
    vertices = [("e", e) for e in edges()] + [("f", f) for f in factors()]
    incidence = [
        (("e", e), ("f", f)) for f in factors() for e in f
    ]
    return Graph(vertices, incidence)


def tutte_parts(graph: Graph | None = None) -> dict:
    """Vertex coloring separating edge vertices from factor vertices."""
    graph = graph or tutte_graph()
    return {v: 0 if v[0] == "e" else 1 for v in graph.vertices}


def _edge_name(edge: Edge) -> str:
    return f"{edge[0]}{edge[1]}"


def _factor_name(factor: Factor) -> str:
    return ".".join(_edge_name(e) for e in factor)


def doily_json() -> str:
    document = {
        "points": [_edge_name(e) for e in edges()],
        "lines": [[_edge_name(e) for e in f] for f in factors()],
        "incidence": [
            [_edge_name(e), _factor_name(f)] for f in factors() for e in f
        ],
    }
    return json.dumps(document, indent=2)


def _dot_document(name, white, black, incidence) -> str:
    lines = [f"graph {name} {{"]
    lines.append("  node [shape=circle, style=filled];")
    for node, label in white:
        lines.append(f'  {node} [fillcolor=white, label="{label}"];')
    for node, label in black:
        lines.append(
            f'  {node} [fillcolor=black, fontcolor=white, label="{label}"];'
        )
    for a, b in incidence:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def doily_dot() -> str:
    """DOT rendering of the doily incidence: point vertices in white, line
    vertices in black."""
    white = [(f"p_{_edge_name(e)}", _edge_name(e)) for e in edges()]
    black = [
        (f"l_{_factor_name(f).replace('.', '_')}", _factor_name(f))
        for f in factors()
    ]
    incidence = [
        (f"p_{_edge_name(e)}", f"l_{_factor_name(f).replace('.', '_')}")
        for f in factors()
        for e in f
    ]
    return _dot_document("doily", white, black, incidence)


def tutte_dot() -> str:
    """DOT rendering of the 30-vertex incidence graph."""
    white = [(f"e_{_edge_name(e)}", _edge_name(e)) for e in edges()]
    black = [
        (f"f_{_factor_name(f).replace('.', '_')}", _factor_name(f))
        for f in factors()
    ]
    incidence = [
        (f"e_{_edge_name(e)}", f"f_{_factor_name(f).replace('.', '_')}")
        for f in factors()
        for e in f
    ]
    return _dot_document("tutte_eight_cage", white, black, incidence)

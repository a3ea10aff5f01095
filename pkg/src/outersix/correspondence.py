"""Transport between cage graph automorphisms and Sym_6 automorphisms.

A vertex bijection of the 30-vertex edge/factor incidence graph either
keeps the two parts or exchanges them.  Reading off what it does to the 15
edge vertices gives a map on transpositions (to transpositions when parts
are kept, to triple involutions when they are swapped), and multiplying
out transposition decompositions extends that map to all 720 elements.
The extension is checked to be a bijective homomorphism, and the factor
side of the graph map is checked to agree with it, so each of the 1440
graph automorphisms yields one well-defined automorphism of Sym_6.

The extension folds element indices through the cached Cayley table; the
decomposition of each group element into transpositions is fixed once,
with each cycle (c1,...,ck) spelled (c1,c2)*(c2,c3)*...*(c_{k-1},c_k)
under right-factor-first composition.
"""

from __future__ import annotations

from functools import lru_cache

from .autgroup import AutomorphismTable, _context, element_index
from .errors import IntegrityError
from .graphs import Graph, automorphism_group, preserves_classes
from .k6 import (
    edge_to_transposition,
    factor_to_involution,
    involution_to_factor,
    transposition_to_edge,
    tutte_graph,
    tutte_parts,
)
from .perms import Permutation


@lru_cache(maxsize=None)
def cage_automorphisms() -> tuple[Permutation, ...]:
    """All 1440 automorphisms of the incidence graph, parts free to swap."""
    graph = tutte_graph()
    found = automorphism_group(graph, tutte_parts(graph), mode="allow-swap")
    if len(found) != 1440:
        raise IntegrityError(f"expected 1440 cage automorphisms, found {len(found)}")
    return found


def swaps_parts(automorphism: Permutation) -> bool:
    graph = tutte_graph()
    return not preserves_classes(graph, automorphism, tutte_parts(graph))


def involutive_swaps_count() -> int:
    """Cage automorphisms of order 2 that exchange the two parts."""
    return sum(
        1 for a in cage_automorphisms() if a.order() == 2 and swaps_parts(a)
    )


def transposition_factors(p: Permutation) -> list[Permutation]:
    """A decomposition of p into transpositions, rightmost applied first."""
    factors = []
    for cycle in p.cycles():
        for a, b in zip(cycle, cycle[1:]):
            factors.append(Permutation.transposition(p.degree, a, b))
    return factors


@lru_cache(maxsize=None)
def _decompositions() -> tuple[tuple[int, ...], ...]:
    """Element-index transposition words for every element of Sym_6."""
    elements, _, cayley, _, _ = _context(6)
    identity_index = element_index(6, Permutation.identity(6))
    words = []
    for k, p in enumerate(elements):
        word = tuple(element_index(6, t) for t in transposition_factors(p))
        folded = identity_index
        for t in word:
            folded = cayley[folded][t]
        if folded != k:
            raise IntegrityError(f"decomposition of {p} multiplies out wrong")
        words.append(word)
    return tuple(words)


def graph_aut_to_group_aut(
    graph: Graph, automorphism: Permutation
) -> AutomorphismTable:
    """The Sym_6 automorphism induced by a cage graph automorphism."""
    vertex_map = graph.vertex_map(automorphism)
    _, _, cayley, _, _ = _context(6)

    edge_images = {
        payload: image
        for (kind, payload), image in vertex_map.items()
        if kind == "e"
    }
    image_kinds = {image[0] for image in edge_images.values()}
    if len(image_kinds) != 1:
        raise IntegrityError("edge vertices map to a mix of both parts")
    swapping = image_kinds.pop() == "f"

    transposition_image_index = {}
    for edge, (_, payload) in edge_images.items():
        source = element_index(6, edge_to_transposition(edge))
        if swapping:
            image = factor_to_involution(payload)
        else:
            image = edge_to_transposition(payload)
        transposition_image_index[source] = element_index(6, image)

    identity_index = element_index(6, Permutation.identity(6))
    images = []
    for word in _decompositions():
        folded = identity_index
        for t in word:
            folded = cayley[folded][transposition_image_index[t]]
        images.append(folded)

    table = AutomorphismTable(6, images)
    if not table.is_homomorphism():
        raise IntegrityError("transposition map fails to extend to the group")
    # The factor side of the graph map must tell the same story.
    for (kind, payload), (image_kind, image_payload) in vertex_map.items():
        if kind != "f":
            continue
        image = table.apply(factor_to_involution(payload))
        if swapping:
            if image_kind != "e" or image != edge_to_transposition(image_payload):
                raise IntegrityError("factor vertices disagree with the extension")
        else:
            if image_kind != "f" or involution_to_factor(image) != image_payload:
                raise IntegrityError("factor vertices disagree with the extension")
    return table


@lru_cache(maxsize=None)
def correspondence() -> tuple[tuple[Permutation, AutomorphismTable], ...]:
    """Each cage automorphism with its induced Sym_6 automorphism."""
    graph = tutte_graph()
    return tuple(
        (a, graph_aut_to_group_aut(graph, a)) for a in cage_automorphisms()
    )

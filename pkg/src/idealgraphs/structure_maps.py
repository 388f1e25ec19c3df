"""Transfer between the identity component's ideal graph and the graded graph.

When the grading is faithful at the identity degree, every nontrivial proper
graded left ideal leaves a nonzero trace on the identity component.  Grouping
the graded ideals by that trace yields classes that are cliques, adjacency
between classes is independent of the chosen representatives, and collapsing
each class to a point reproduces the intersection graph of the identity
component's own nontrivial proper left ideals.  When the grading is first
strong the collapse is the identity: extension of ideals from the identity
component is itself a graph isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    IsoViolation,
    NotEFaithful,
    WellDefinednessViolation,
    WrongConstruction,
)
from .grading import Grading, is_e_faithful, is_first_strong, validate_grading
from .graph_engine import (
    Graph,
    build_intersection_graph,
    clique_number,
    domination_number,
    maximal_cliques,
)
from .ideal_lattice import (
    IdealSet,
    enumerate_left_ideals,
    generated_left_ideal,
    ideal_label,
    is_graded,
    is_left_ideal,
    nontrivial_proper,
)
from .ring_core import FiniteRing, mask_members, subring_on, unital_ring_on


def identity_component_ring(grading: Grading) -> tuple[FiniteRing, tuple[int, ...]]:
    """The identity-degree component as a ring of its own, with the embedding
    back into the parent (new index -> parent index)."""
    comp = grading.component(grading.grades.identity)
    return subring_on(grading.ring, mask_members(comp))


def _trace_mask(parent_mask: int, embedding: Sequence[int]) -> int:
    """Re-index the part of a parent-ring subset lying in the subring."""
    out = 0
    for child, parent in enumerate(embedding):
        if parent_mask >> parent & 1:
            out |= 1 << child
    return out


def _embed_mask(child_mask: int, embedding: Sequence[int]) -> int:
    out = 0
    for child, parent in enumerate(embedding):
        if child_mask >> child & 1:
            out |= 1 << parent
    return out


@dataclass(eq=False)
class SimPartition:
    """Nontrivial proper graded left ideals, grouped by identity trace.

    keys are trace masks over the identity-component ring, sorted by
    (popcount, value); classes[key] lists the graded ideals sharing that
    trace; class_key_of maps a graded ideal's mask to its key.
    """

    grading: Grading
    re_ring: FiniteRing
    embedding: tuple[int, ...]
    keys: tuple[int, ...]
    classes: dict
    class_key_of: dict


def sim_partition(grading: Grading, graded_family: Sequence[IdealSet]) -> SimPartition:
    """Group the nontrivial proper graded ideals by identity trace.

    Raises NotEFaithful when the grading is not faithful at the identity
    degree (the trace of some ideal could then be zero and the grouping would
    load nothing).  Verifies that every trace is a nontrivial proper left
    ideal of the identity component and that every class is a clique.
    """
    if not is_e_faithful(grading):
        raise NotEFaithful("grading is not faithful at the identity degree")
    re_ring, embedding = identity_component_ring(grading)
    vertices = sorted(nontrivial_proper(graded_family), key=lambda i: i.sort_key())
    classes: dict = {}
    class_key_of: dict = {}
    for ideal in vertices:
        key = _trace_mask(ideal.mask, embedding)
        if key == re_ring.zero_mask:
            raise WellDefinednessViolation(
                f"graded ideal {ideal.label()} has zero identity trace"
            )
        if key == re_ring.full_mask:
            raise WellDefinednessViolation(
                f"graded ideal {ideal.label()} traces onto the whole identity component"
            )
        if not is_left_ideal(re_ring, key):
            raise WellDefinednessViolation(
                f"trace of {ideal.label()} is not a left ideal of the identity component"
            )
        classes.setdefault(key, []).append(ideal)
        class_key_of[ideal.mask] = key
    zero_mask = grading.ring.zero_mask
    for key, members in classes.items():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if members[a].mask & members[b].mask == zero_mask:
                    raise WellDefinednessViolation(
                        f"class {ideal_label(re_ring, key)} is not a clique: "
                        f"{members[a].label()} meets {members[b].label()} only in 0"
                    )
    keys = tuple(sorted(classes, key=lambda m: (m.bit_count(), m)))
    return SimPartition(
        grading=grading,
        re_ring=re_ring,
        embedding=embedding,
        keys=keys,
        classes={k: tuple(classes[k]) for k in keys},
        class_key_of=class_key_of,
    )


def quotient_graph(partition: SimPartition) -> Graph:
    """Collapse each trace class to one vertex.

    Adjacency between two classes must not depend on which representatives
    are compared; every cross pair is checked and a disagreement raises
    WellDefinednessViolation.
    """
    keys = partition.keys
    zero_mask = partition.grading.ring.zero_mask
    n = len(keys)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            verdicts = {
                (a.mask & b.mask) != zero_mask
                for a in partition.classes[keys[i]]
                for b in partition.classes[keys[j]]
            }
            if len(verdicts) > 1:
                raise WellDefinednessViolation(
                    "adjacency between classes "
                    f"{ideal_label(partition.re_ring, keys[i])} and "
                    f"{ideal_label(partition.re_ring, keys[j])} depends on representatives"
                )
            if verdicts.pop():
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    labels = tuple(ideal_label(partition.re_ring, k) for k in keys)
    return Graph(n=n, adj=tuple(adj), labels=labels)


def _extension_map(
    grading: Grading,
    re_ring: FiniteRing,
    embedding: tuple[int, ...],
    re_vertices: Sequence[IdealSet],
) -> dict:
    """mask over the identity component -> mask of the generated graded ideal
    of the full ring; raises IsoViolation when an extension fails to be a
    nontrivial proper graded left ideal."""
    ring = grading.ring
    out = {}
    for ie in re_vertices:
        gens = [embedding[x] for x in ie.members]
        ext = generated_left_ideal(ring, gens)
        if ext == ring.zero_mask or ext == ring.full_mask:
            raise IsoViolation(
                f"extension of {ie.label()} is trivial or the whole ring"
            )
        if not is_graded(grading, ext):
            raise IsoViolation(f"extension of {ie.label()} is not graded")
        out[ie.mask] = ext
    return out


def phi_iso_check(
    grading: Grading,
    graded_family: Sequence[IdealSet],
    variant: str = "quotient",
) -> dict:
    """Verify that ideal extension from the identity component induces a
    graph isomorphism, and return a small report.

    variant "quotient": target is the trace-class quotient of the graded
    graph; needs a grading faithful at the identity degree.  variant
    "first_strong": target is the graded graph itself; needs a first-strong
    grading.  Any failed isomorphism condition raises IsoViolation naming a
    witness.
    """
    ring = grading.ring
    if variant == "quotient":
        partition = sim_partition(grading, graded_family)
        re_ring, embedding = partition.re_ring, partition.embedding
    elif variant == "first_strong":
        if not is_first_strong(grading):
            raise WrongConstruction(
                "first-strong comparison needs a first-strong grading"
            )
        re_ring, embedding = identity_component_ring(grading)
        partition = None
    else:
        raise ValueError(f"unknown variant: {variant!r}")

    re_vertices = sorted(
        nontrivial_proper(enumerate_left_ideals(re_ring)), key=lambda i: i.sort_key()
    )
    extension = _extension_map(grading, re_ring, embedding, re_vertices)
    zero_re = re_ring.zero_mask

    if variant == "quotient":
        image_key = {
            ie.mask: partition.class_key_of.get(extension[ie.mask])
            for ie in re_vertices
        }
        for ie in re_vertices:
            if image_key[ie.mask] is None:
                raise IsoViolation(
                    f"extension of {ie.label()} lies in no trace class"
                )
        hit = set(image_key.values())
        if len(hit) != len(re_vertices):
            raise IsoViolation("two identity-component ideals map to one class")
        missing = [k for k in partition.keys if k not in hit]
        if missing:
            raise IsoViolation(
                f"class {ideal_label(re_ring, missing[0])} is not in the image"
            )
        key_index = {k: i for i, k in enumerate(partition.keys)}
        quotient = quotient_graph(partition)
        for a in range(len(re_vertices)):
            for b in range(a + 1, len(re_vertices)):
                ia, ib = re_vertices[a], re_vertices[b]
                left = (ia.mask & ib.mask) != zero_re
                right = quotient.has_edge(
                    key_index[image_key[ia.mask]], key_index[image_key[ib.mask]]
                )
                if left != right:
                    raise IsoViolation(
                        f"adjacency of {ia.label()} and {ib.label()} is not preserved"
                    )
        return {
            "variant": variant,
            "identity_vertices": len(re_vertices),
            "classes": len(partition.keys),
            "class_sizes": [len(partition.classes[k]) for k in partition.keys],
        }

    vertex_masks = {i.mask for i in nontrivial_proper(graded_family)}
    images = [extension[ie.mask] for ie in re_vertices]
    if len(set(images)) != len(images):
        raise IsoViolation("two identity-component ideals extend to one graded ideal")
    missing = vertex_masks - set(images)
    if missing:
        mask = sorted(missing, key=lambda m: (m.bit_count(), m))[0]
        raise IsoViolation(
            f"graded ideal {ideal_label(ring, mask)} is not an extension"
        )
    zero_full = ring.zero_mask
    for a in range(len(re_vertices)):
        for b in range(a + 1, len(re_vertices)):
            ia, ib = re_vertices[a], re_vertices[b]
            left = (ia.mask & ib.mask) != zero_re
            right = (extension[ia.mask] & extension[ib.mask]) != zero_full
            if left != right:
                raise IsoViolation(
                    f"adjacency of {ia.label()} and {ib.label()} is not preserved"
                )
    return {
        "variant": variant,
        "identity_vertices": len(re_vertices),
        "graded_vertices": len(vertex_masks),
    }


def gamma_omega_transfer(grading: Grading, graded_family: Sequence[IdealSet]) -> dict:
    """Compare domination and clique numbers across the transfer.

    Reports both domination numbers, both clique numbers, and the clique
    number predicted for the graded graph by summing class sizes over the
    cliques of the identity component's graph.
    """
    partition = sim_partition(grading, graded_family)
    re_ring, embedding = partition.re_ring, partition.embedding
    re_vertices = sorted(
        nontrivial_proper(enumerate_left_ideals(re_ring)), key=lambda i: i.sort_key()
    )
    re_graph = build_intersection_graph(re_vertices)
    graded_graph = build_intersection_graph(nontrivial_proper(graded_family))
    extension = _extension_map(grading, re_ring, embedding, re_vertices)
    size_of = {
        ie.mask: len(partition.classes[partition.class_key_of[extension[ie.mask]]])
        for ie in re_vertices
    }
    best = 0
    for clique in maximal_cliques(re_graph):
        total = sum(size_of[re_vertices[v].mask] for v in clique)
        best = max(best, total)
    return {
        "gamma_identity": domination_number(re_graph),
        "gamma_graded": domination_number(graded_graph),
        "omega_identity": clique_number(re_graph),
        "omega_graded": clique_number(graded_graph),
        "omega_from_classes": best,
        "class_sizes": [len(partition.classes[k]) for k in partition.keys],
    }


def induced_factor_grading(grading: Grading, factor_mask: int) -> Grading:
    """Grading of a direct-sum factor: the factor carries its own identity,
    and each component is the intersection of the parent component with the
    factor.  The full grading contract is re-validated on the factor."""
    child, embedding = unital_ring_on(grading.ring, mask_members(factor_mask))
    raw = {
        deg: _trace_mask(comp & factor_mask, embedding)
        for deg, comp in grading.components.items()
    }
    return validate_grading(child, grading.grades, raw)

"""Group gradings on finite rings: validation, canonical builders, and the
faithful / strong classifier family.

A grading assigns to each degree an additive subgroup (its component) such
that the components sum directly to the whole ring and products respect
degrees.  Degrees live either in a finite group (indices into a FiniteGroup)
or in the integers (plain ints); the GradeGroup wrapper gives both the same
interface.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    NotDirectSum,
    NotSubgroup,
    ProductEscapes,
    UnityNotInIdentityComponent,
    WrongConstruction,
)
from .ring_core import (
    FiniteGroup,
    FiniteRing,
    additive_span,
    cyclic_group,
    is_additive_subgroup,
    is_subgroup,
    mask_members,
)


@dataclass(eq=False)
class GradeGroup:
    kind: str  # "finite" or "integers"
    group: FiniteGroup | None = None

    @property
    def identity(self) -> int:
        return 0 if self.kind == "integers" else self.group.identity

    def op(self, a: int, b: int) -> int:
        if self.kind == "integers":
            return a + b
        return self.group.op[a][b]

    def inv(self, a: int) -> int:
        if self.kind == "integers":
            return -a
        return self.group.inv[a]

    def name(self, deg: int) -> str:
        if self.kind == "integers":
            return str(deg)
        return self.group.names[deg]


INTEGERS = GradeGroup(kind="integers")


def finite_grades(group: FiniteGroup) -> GradeGroup:
    return GradeGroup(kind="finite", group=group)


@dataclass(eq=False)
class Grading:
    ring: FiniteRing
    grades: GradeGroup
    components: dict  # deg -> mask, nonzero components only; every mask holds 0
    support: tuple  # sorted degrees of the nonzero components
    # decomposition[x] = ((deg, part), ...) listing the nonzero homogeneous
    # parts of element x, sorted by degree
    decomposition: tuple

    def component(self, deg: int) -> int:
        return self.components.get(deg, self.ring.zero_mask)

    def homogeneous_mask(self) -> int:
        m = self.ring.zero_mask
        for cm in self.components.values():
            m |= cm
        return m

    def degree_of(self, x: int) -> int | None:
        """Degree of a nonzero homogeneous element, else None."""
        parts = self.decomposition[x]
        if len(parts) == 1:
            return parts[0][0]
        return None


def decompose(grading: Grading, x: int) -> dict:
    """Map degree -> homogeneous part of x, nonzero parts only."""
    return {deg: part for deg, part in grading.decomposition[x]}


def validate_grading(ring: FiniteRing, grades: GradeGroup, raw_components: dict) -> Grading:
    """Check the full grading contract and assemble the decomposition.

    raw_components maps degree -> mask.  Zero components are dropped; the
    remaining ones must be additive subgroups meeting pairwise in 0, summing
    directly to the ring, multiplying into the right degrees, and placing the
    unity in the identity-degree component.
    """
    comps: dict = {}
    for deg, mask in raw_components.items():
        if not is_additive_subgroup(ring, mask):
            raise NotSubgroup(f"component at degree {grades.name(deg)} is not a subgroup")
        if mask != ring.zero_mask:
            comps[deg] = mask
    degs = sorted(comps)
    sizes = [comps[d].bit_count() for d in degs]
    total = 1
    for s in sizes:
        total *= s
    if total != ring.size:
        raise NotDirectSum(
            f"component sizes multiply to {total}, ring has {ring.size} elements"
        )
    member_lists = [mask_members(comps[d]) for d in degs]
    seen: dict = {}
    add = ring.add
    for combo in itertools.product(*member_lists):
        s = ring.zero
        for x in combo:
            s = add[s][x]
        if s in seen:
            raise NotDirectSum(
                f"element {ring.names[s]} decomposes two ways; components overlap"
            )
        seen[s] = combo
    # injective + size match means every element was hit exactly once
    decomposition = []
    for x in range(ring.size):
        combo = seen[x]
        decomposition.append(
            tuple((degs[i], p) for i, p in enumerate(combo) if p != ring.zero)
        )
    mul = ring.mul
    zero_mask = ring.zero_mask
    for ds, dt in itertools.product(degs, repeat=2):
        target = comps.get(grades.op(ds, dt), zero_mask)
        for a in mask_members(comps[ds]):
            if a == ring.zero:
                continue
            row = mul[a]
            for b in mask_members(comps[dt]):
                if b == ring.zero:
                    continue
                if not target & (1 << row[b]):
                    raise ProductEscapes(
                        f"product {ring.names[a]} * {ring.names[b]} leaves the degree "
                        f"{grades.name(grades.op(ds, dt))} component"
                    )
    e = grades.identity
    if not comps.get(e, zero_mask) & (1 << ring.one):
        raise UnityNotInIdentityComponent(
            "unity is not homogeneous of the identity degree"
        )
    return Grading(
        ring=ring,
        grades=grades,
        components=comps,
        support=tuple(degs),
        decomposition=tuple(decomposition),
    )


# ---------------------------------------------------------------------------
# canonical builders


def trivial_grading(ring: FiniteRing, grades: GradeGroup | None = None) -> Grading:
    """Everything in the identity degree."""
    if grades is None:
        grades = finite_grades(cyclic_group(1))
    return validate_grading(ring, grades, {grades.identity: ring.full_mask})


def group_ring_grading(ring: FiniteRing) -> Grading:
    """Degree k component = base-multiples of group element k."""
    if ring.construction.get("kind") != "group_ring":
        raise WrongConstruction("canonical group-ring grading needs a group-ring carrier")
    base: FiniteRing = ring.parts["base"]
    group: FiniteGroup = ring.parts["group"]
    radix = base.size
    comps = {}
    for k in range(group.size):
        mask = 0
        for c in range(radix):
            mask |= 1 << c * radix**k
        comps[k] = mask
    return validate_grading(ring, finite_grades(group), comps)


def idealization_grading(ring: FiniteRing) -> Grading:
    """Two-step grading of a square-zero extension: base in degree 0, module
    in degree 1 of a two-element grade group."""
    if ring.construction.get("kind") != "idealization":
        raise WrongConstruction("canonical idealization grading needs an idealization carrier")
    base: FiniteRing = ring.parts["base"]
    module = ring.parts["module"]
    n2 = module.size
    comp0 = 0
    for r in range(base.size):
        comp0 |= 1 << (r * n2 + module.zero)
    comp1 = 0
    for m in range(n2):
        comp1 |= 1 << (base.zero * n2 + m)
    return validate_grading(ring, finite_grades(cyclic_group(2)), {0: comp0, 1: comp1})


def poly_quotient_integer_grading(ring: FiniteRing) -> Grading:
    """Integer grading of base[x]/(x^d) with x in degree 1; requires the
    modulus to be a pure power of x."""
    if ring.construction.get("kind") != "poly_quotient":
        raise WrongConstruction("integer grading needs a polynomial-quotient carrier")
    modulus = ring.construction["modulus"]
    base: FiniteRing = ring.parts["base"]
    d = len(modulus) - 1
    if any(c != base.zero for c in modulus[:d]):
        raise WrongConstruction(
            "integer grading needs a pure-power modulus so degrees are preserved"
        )
    radix = base.size
    comps = {}
    for k in range(d):
        mask = 0
        for c in range(radix):
            mask |= 1 << c * radix**k
        comps[k] = mask
    return validate_grading(ring, INTEGERS, comps)


def explicit_grading(
    ring: FiniteRing, grades: GradeGroup, generators: dict
) -> Grading:
    """Components given by generating sets: each degree maps to a list of
    element indices whose additive span is the component."""
    comps = {}
    for deg, gens in generators.items():
        mask = 0
        for x in gens:
            if not 0 <= x < ring.size:
                raise NotSubgroup(f"generator index {x} out of range")
            mask |= 1 << x
        comps[deg] = additive_span(ring, mask)
    return validate_grading(ring, grades, comps)


def same_grading(a: Grading, b: Grading) -> bool:
    """Same degrees with the same components over the same kind of grade
    group (finite grade groups must share their operation table)."""
    if a.ring is not b.ring or a.grades.kind != b.grades.kind:
        return False
    if a.grades.kind == "finite" and a.grades.group.op != b.grades.group.op:
        return False
    return a.components == b.components


# ---------------------------------------------------------------------------
# classifiers


def _span_of_products(grading: Grading, ds: int, dt: int) -> int:
    ring = grading.ring
    prod_mask = 0
    for a in mask_members(grading.component(ds)):
        row = ring.mul[a]
        for b in mask_members(grading.component(dt)):
            prod_mask |= 1 << row[b]
    return additive_span(ring, prod_mask)


def is_sigma_faithful(grading: Grading, sigma: int) -> bool:
    """No nonzero homogeneous x of degree tau is killed by the whole
    component of degree sigma*tau^-1."""
    ring = grading.ring
    g = grading.grades
    for tau in grading.support:
        left = mask_members(grading.component(g.op(sigma, g.inv(tau))))
        for x in mask_members(grading.component(tau)):
            if x == ring.zero:
                continue
            if all(ring.mul[a][x] == ring.zero for a in left):
                return False
    return True


def is_e_faithful(grading: Grading) -> bool:
    return is_sigma_faithful(grading, grading.grades.identity)


def is_faithful(grading: Grading) -> bool:
    """sigma-faithful for every degree.

    Over the integers this fails whenever the ring is nonzero: the support is
    finite, so degrees far beyond it have zero components that kill every
    nonzero homogeneous element.
    """
    if grading.grades.kind == "integers":
        return not grading.support
    return all(is_sigma_faithful(grading, s) for s in range(grading.grades.group.size))


def is_strong(grading: Grading) -> bool:
    """Products of opposite-degree components span the unity at every degree.

    That single condition is equivalent to every R_sigma R_tau filling
    R_{sigma tau}: R_{st} = R_s R_{s^-1} R_{st} lands inside R_s R_t.
    """
    ring = grading.ring
    g = grading.grades
    if g.kind == "integers":
        # any degree outside the finite support already fails unless the
        # support is trivial
        if any(s != 0 for s in grading.support):
            return False
        return bool(_span_of_products(grading, 0, 0) & (1 << ring.one))
    for s in range(g.group.size):
        if not _span_of_products(grading, s, g.inv(s)) & (1 << ring.one):
            return False
    return True


def support_is_subgroup(grading: Grading) -> bool:
    if grading.grades.kind == "integers":
        return grading.support == (0,)
    return bool(grading.support) and is_subgroup(grading.grades.group, grading.support)


def is_first_strong(grading: Grading) -> bool:
    """Support forms a subgroup and the strong condition holds across it."""
    if not support_is_subgroup(grading):
        return False
    ring = grading.ring
    g = grading.grades
    return all(
        _span_of_products(grading, s, g.inv(s)) & (1 << ring.one) for s in grading.support
    )


def classify(grading: Grading) -> dict:
    """All classifier flags at once, for reports and the command line."""
    return {
        "support": [grading.grades.name(s) for s in grading.support],
        "e_faithful": is_e_faithful(grading),
        "faithful": is_faithful(grading),
        "strong": is_strong(grading),
        "first_strong": is_first_strong(grading),
        "support_is_subgroup": support_is_subgroup(grading),
    }

"""Finite rings, groups, and modules as explicit operation tables.

Every carrier is the index range 0..size-1; operations are dense tables
(tuples of tuples), so all algebra below is table lookups.  Constructors
validate the complete axiom set exhaustively before returning, which means
downstream code never has to re-check algebra laws.  Subsets of a carrier
travel as int bitmasks (bit i set = element i present), which keeps the
lattice and graph code allocation-free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidConstruction, NotASubring, SizeLimit

MAX_RING_SIZE = 1024


# ---------------------------------------------------------------------------
# bitmask helpers


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def mask_members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_size(mask: int) -> int:
    return mask.bit_count()


# ---------------------------------------------------------------------------
# table validation


def _as_table(table, n: int, what: str) -> np.ndarray:
    arr = np.asarray(table, dtype=np.int64)
    if arr.shape != (n, n):
        raise InvalidConstruction(f"{what} table must be {n}x{n}, got {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise InvalidConstruction(f"{what} table has entries outside 0..{n - 1}")
    return arr


def _validate_abelian_group(add, zero: int, neg, n: int, what: str) -> np.ndarray:
    A = _as_table(add, n, f"{what} addition")
    if not np.array_equal(A, A.T):
        raise InvalidConstruction(f"{what} addition is not commutative")
    if not np.array_equal(A[zero], np.arange(n)):
        raise InvalidConstruction(f"{what} zero element {zero} is not neutral")
    ng = np.asarray(neg, dtype=np.int64)
    if ng.shape != (n,) or (n and (ng.min() < 0 or ng.max() >= n)):
        raise InvalidConstruction(f"{what} negation table malformed")
    if not np.array_equal(A[np.arange(n), ng], np.full(n, zero)):
        raise InvalidConstruction(f"{what} negation is not an additive inverse")
    for a in range(n):
        # (a+b)+c vs a+(b+c) as two n x n arrays
        if not np.array_equal(A[A[a]], A[a][A]):
            raise InvalidConstruction(f"{what} addition not associative (witness row {a})")
    return A


def _validate_ring_tables(add, mul, zero: int, one: int, neg, n: int) -> bool:
    """Full ring axiom check; returns the commutativity flag."""
    if one == zero:
        raise InvalidConstruction("unity must differ from zero")
    A = _validate_abelian_group(add, zero, neg, n, "ring")
    M = _as_table(mul, n, "ring multiplication")
    if not np.array_equal(M[one], np.arange(n)):
        raise InvalidConstruction(f"unity {one} is not left-neutral")
    if not np.array_equal(M[:, one], np.arange(n)):
        raise InvalidConstruction(f"unity {one} is not right-neutral")
    for a in range(n):
        if not np.array_equal(M[M[a]], M[a][M]):
            raise InvalidConstruction(f"multiplication not associative (witness row {a})")
        # a*(b+c) == a*b + a*c
        if not np.array_equal(M[a][A], A[np.ix_(M[a], M[a])]):
            raise InvalidConstruction(f"left distributivity fails (witness {a})")
        # (b+c)*a == b*a + c*a
        col = M[:, a]
        if not np.array_equal(col[A], A[np.ix_(col, col)]):
            raise InvalidConstruction(f"right distributivity fails (witness {a})")
    return bool(np.array_equal(M, M.T))


def _freeze(table) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in table)


# ---------------------------------------------------------------------------
# groups


@dataclass(eq=False)
class FiniteGroup:
    size: int
    op: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    names: tuple[str, ...]


def cyclic_group(k: int) -> FiniteGroup:
    if k < 1:
        raise InvalidConstruction("cyclic group order must be positive")
    op = tuple(tuple((a + b) % k for b in range(k)) for a in range(k))
    inv = tuple((-a) % k for a in range(k))
    names = tuple("e" if a == 0 else ("g" if a == 1 else f"g^{a}") for a in range(k))
    return FiniteGroup(size=k, op=op, identity=0, inv=inv, names=names)


def group_from_table(op, names: Sequence[str] | None = None) -> FiniteGroup:
    n = len(op)
    T = _as_table(op, n, "group")
    identity = None
    for e in range(n):
        if np.array_equal(T[e], np.arange(n)) and np.array_equal(T[:, e], np.arange(n)):
            identity = e
            break
    if identity is None:
        raise InvalidConstruction("group table has no two-sided identity")
    inv = []
    for a in range(n):
        hits = [b for b in range(n) if T[a][b] == identity and T[b][a] == identity]
        if not hits:
            raise InvalidConstruction(f"group element {a} has no inverse")
        inv.append(hits[0])
    for a in range(n):
        if not np.array_equal(T[T[a]], T[a][T]):
            raise InvalidConstruction(f"group operation not associative (witness row {a})")
    if names is None:
        names = tuple(str(a) for a in range(n))
    else:
        names = tuple(names)
        if len(names) != n:
            raise InvalidConstruction("group names length mismatch")
    return FiniteGroup(size=n, op=_freeze(T), identity=identity, inv=tuple(inv), names=names)


def is_subgroup(group: FiniteGroup, members: Iterable[int]) -> bool:
    """Closure test; in a finite group, op-closure of a set containing the
    identity already implies inverses."""
    s = set(members)
    if group.identity not in s:
        return False
    return all(group.op[a][b] in s for a in s for b in s)


# ---------------------------------------------------------------------------
# rings


@dataclass(eq=False)
class FiniteRing:
    size: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    neg: tuple[int, ...]
    commutative: bool
    construction: dict
    names: tuple[str, ...]
    # live sub-objects for composite constructors (base ring, group, module,
    # factors, parent + embedding); never serialized, never compared
    parts: dict = field(default_factory=dict, repr=False)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def zero_mask(self) -> int:
        return 1 << self.zero

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    @cached_property
    def left_multiple_masks(self) -> tuple[int, ...]:
        """mask of R*x for every x; the building block of left ideals."""
        out = []
        for x in range(self.size):
            m = 0
            for r in range(self.size):
                m |= 1 << self.mul[r][x]
            out.append(m)
        return tuple(out)


def additive_span(ring: FiniteRing, seed_mask: int) -> int:
    """Smallest additive subgroup containing the seed set.

    Worklist closure under pairwise sums; in a finite abelian group that
    already yields inverses, so no negation pass is needed.
    """
    mask = seed_mask | (1 << ring.zero)
    members = mask_members(mask)
    add = ring.add
    i = 0
    while i < len(members):
        x = members[i]
        row = add[x]
        for j in range(len(members)):
            s = row[members[j]]
            if not mask & (1 << s):
                mask |= 1 << s
                members.append(s)
        i += 1
    return mask


def is_additive_subgroup(ring: FiniteRing, mask: int) -> bool:
    """Nonempty + closed under addition suffices in a finite abelian group."""
    if not mask & (1 << ring.zero):
        return False
    members = mask_members(mask)
    add = ring.add
    for a in members:
        row = add[a]
        for b in members:
            if not mask & (1 << row[b]):
                return False
    return True


def _finish_ring(
    size: int,
    add,
    mul,
    zero: int,
    one: int,
    neg,
    construction: dict,
    names: Sequence[str],
    parts: dict | None = None,
) -> FiniteRing:
    commutative = _validate_ring_tables(add, mul, zero, one, neg, size)
    return FiniteRing(
        size=size,
        add=_freeze(add),
        mul=_freeze(mul),
        zero=zero,
        one=one,
        neg=tuple(int(x) for x in neg),
        commutative=commutative,
        construction=construction,
        names=tuple(names),
        parts=dict(parts or {}),
    )


def _check_size(size: int, max_size: int) -> None:
    if size > max_size:
        raise SizeLimit(f"carrier size {size} exceeds the cap {max_size}")
    if size < 1:
        raise InvalidConstruction("carrier must be nonempty")


def make_cyclic_ring(n: int, max_size: int = MAX_RING_SIZE) -> FiniteRing:
    """Integers mod n."""
    if n < 2:
        raise InvalidConstruction("modulus must be at least 2 so unity differs from zero")
    _check_size(n, max_size)
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    neg = [(-a) % n for a in range(n)]
    names = [str(a) for a in range(n)]
    return _finish_ring(n, add, mul, 0, 1 % n, neg, {"kind": "zn", "n": n}, names)


def ring_from_tables(
    add,
    mul,
    zero: int,
    one: int,
    names: Sequence[str] | None = None,
    max_size: int = MAX_RING_SIZE,
) -> FiniteRing:
    """Raw tables; negation is recovered by search."""
    n = len(add)
    _check_size(n, max_size)
    neg = []
    for a in range(n):
        hits = [b for b in range(n) if add[a][b] == zero]
        if not hits:
            raise InvalidConstruction(f"element {a} has no additive inverse")
        neg.append(hits[0])
    if names is None:
        names = [str(a) for a in range(n)]
    return _finish_ring(n, add, mul, zero, one, neg, {"kind": "table"}, names)


def direct_product(
    left: FiniteRing, right: FiniteRing, max_size: int = MAX_RING_SIZE
) -> FiniteRing:
    """Componentwise product; element (r, s) sits at index r*|S| + s."""
    n1, n2 = left.size, right.size
    n = n1 * n2
    _check_size(n, max_size)
    A1 = np.asarray(left.add)
    A2 = np.asarray(right.add)
    M1 = np.asarray(left.mul)
    M2 = np.asarray(right.mul)
    r = np.repeat(np.arange(n1), n2)
    s = np.tile(np.arange(n2), n1)
    add = A1[np.ix_(r, r)] * n2 + A2[np.ix_(s, s)]
    mul = M1[np.ix_(r, r)] * n2 + M2[np.ix_(s, s)]
    neg = np.asarray(left.neg)[r] * n2 + np.asarray(right.neg)[s]
    zero = left.zero * n2 + right.zero
    one = left.one * n2 + right.one
    names = [f"({left.names[a]},{right.names[b]})" for a in range(n1) for b in range(n2)]
    return _finish_ring(
        n,
        add,
        mul,
        zero,
        one,
        neg,
        {"kind": "product", "left": left.construction, "right": right.construction},
        names,
        parts={"left": left, "right": right},
    )


def _index_to_digits(idx: int, radix: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(idx % radix)
        idx //= radix
    return tuple(out)


def _digits_to_index(digits: Sequence[int], radix: int) -> int:
    idx = 0
    for d in reversed(digits):
        idx = idx * radix + d
    return idx


def _poly_term(coeff_name: str, k: int) -> str:
    xpow = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
    if k == 0:
        return coeff_name
    if coeff_name == "1":
        return xpow
    return f"{coeff_name}{xpow}"


def polynomial_quotient(
    base: FiniteRing, modulus: Sequence[int], max_size: int = MAX_RING_SIZE
) -> FiniteRing:
    """base[x] modulo a monic polynomial.

    `modulus` lists base-element indices for coefficients in increasing
    degree order; the last entry must be the unity (monic) and the degree at
    least 1.  Elements are coefficient tuples of length deg(modulus), again
    low degree first, packed as base-|base| digits.
    """
    if not base.commutative:
        raise InvalidConstruction("polynomial quotients need a commutative base")
    d = len(modulus) - 1
    if d < 1:
        raise InvalidConstruction("modulus degree must be at least 1")
    if modulus[-1] != base.one:
        raise InvalidConstruction("modulus must be monic")
    for c in modulus:
        if not 0 <= c < base.size:
            raise InvalidConstruction("modulus coefficient out of range")
    n = base.size**d
    _check_size(n, max_size)
    radix = base.size
    elems = [_index_to_digits(i, radix, d) for i in range(n)]
    badd, bmul, bneg, bzero = base.add, base.mul, base.neg, base.zero
    low = tuple(modulus[:d])

    def pmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        prod = [bzero] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai == bzero:
                continue
            row = bmul[ai]
            for j, bj in enumerate(b):
                prod[i + j] = badd[prod[i + j]][row[bj]]
        # x^k = -(low part of modulus) * x^(k-d), repeatedly
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c == bzero:
                continue
            prod[k] = bzero
            row = bmul[c]
            for i in range(d):
                prod[k - d + i] = badd[prod[k - d + i]][bneg[row[low[i]]]]
        return tuple(prod[:d])

    add = [
        [_digits_to_index([badd[x][y] for x, y in zip(ea, eb)], radix) for eb in elems]
        for ea in elems
    ]
    mul = [[_digits_to_index(pmul(ea, eb), radix) for eb in elems] for ea in elems]
    neg = [_digits_to_index([bneg[x] for x in ea], radix) for ea in elems]
    zero = _digits_to_index([bzero] * d, radix)
    one = _digits_to_index([base.one] + [bzero] * (d - 1), radix)

    def pname(e: tuple[int, ...]) -> str:
        terms = [
            _poly_term(base.names[c], k) for k, c in reversed(list(enumerate(e))) if c != bzero
        ]
        return "+".join(terms) if terms else "0"

    names = [pname(e) for e in elems]
    return _finish_ring(
        n,
        add,
        mul,
        zero,
        one,
        neg,
        {"kind": "poly_quotient", "modulus": [int(c) for c in modulus]},
        names,
        parts={"base": base},
    )


def algebra_over_zn(
    n: int,
    dim: int,
    table: Sequence[Sequence[Sequence[int]]],
    basis_names: Sequence[str] | None = None,
    max_size: int = MAX_RING_SIZE,
) -> FiniteRing:
    """Free Z_n-module on `dim` basis elements with bilinear multiplication.

    table[i][j] is the coefficient vector (length dim, entries mod n) of the
    product of basis elements i and j.  Basis element 0 must act as unity;
    that is enforced by the table validation.  Element index packs the
    coefficient vector as base-n digits, low coordinate first.
    """
    if n < 2 or dim < 1:
        raise InvalidConstruction("need modulus >= 2 and at least one basis element")
    size = n**dim
    _check_size(size, max_size)
    if len(table) != dim or any(len(row) != dim for row in table):
        raise InvalidConstruction(f"structure table must be {dim}x{dim}")
    tab = []
    for row in table:
        tab.append([tuple(int(c) % n for c in cell) for cell in row])
        for cell in tab[-1]:
            if len(cell) != dim:
                raise InvalidConstruction("structure table cell has wrong length")
    elems = [_index_to_digits(i, n, dim) for i in range(size)]

    def vmul(a: tuple[int, ...], b: tuple[int, ...]) -> int:
        acc = [0] * dim
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                c = (ai * bj) % n
                if c == 0:
                    continue
                cell = tab[i][j]
                for k in range(dim):
                    acc[k] = (acc[k] + c * cell[k]) % n
        return _digits_to_index(acc, n)

    add = [
        [_digits_to_index([(x + y) % n for x, y in zip(ea, eb)], n) for eb in elems]
        for ea in elems
    ]
    mul = [[vmul(ea, eb) for eb in elems] for ea in elems]
    neg = [_digits_to_index([(-x) % n for x in ea], n) for ea in elems]
    if basis_names is None:
        basis_names = [f"b{i}" for i in range(dim)]
    basis_names = list(basis_names)
    if len(basis_names) != dim:
        raise InvalidConstruction("basis names length mismatch")

    def vname(e: tuple[int, ...]) -> str:
        terms = []
        for i, c in enumerate(e):
            if c == 0:
                continue
            terms.append(basis_names[i] if c == 1 else f"{c}{basis_names[i]}")
        return "+".join(terms) if terms else "0"

    names = [vname(e) for e in elems]
    return _finish_ring(
        size,
        add,
        mul,
        0,
        1,
        neg,
        {
            "kind": "algebra",
            "n": n,
            "dim": dim,
            "table": [[list(cell) for cell in row] for row in tab],
            "basis": basis_names,
        },
        names,
    )


def group_ring(
    base: FiniteRing, group: FiniteGroup, max_size: int = MAX_RING_SIZE
) -> FiniteRing:
    """Formal base-linear combinations of group elements.

    An element is the coefficient tuple indexed by group position, packed as
    base-|base| digits (coefficient of group element k is digit k).
    """
    n = base.size**group.size
    _check_size(n, max_size)
    radix = base.size
    g = group.size
    elems = [_index_to_digits(i, radix, g) for i in range(n)]
    badd, bmul, bzero = base.add, base.mul, base.zero

    def gmul(a: tuple[int, ...], b: tuple[int, ...]) -> int:
        out = [bzero] * g
        for i, ci in enumerate(a):
            if ci == bzero:
                continue
            row = bmul[ci]
            oprow = group.op[i]
            for j, cj in enumerate(b):
                if cj == bzero:
                    continue
                k = oprow[j]
                out[k] = badd[out[k]][row[cj]]
        return _digits_to_index(out, radix)

    add = [
        [_digits_to_index([badd[x][y] for x, y in zip(ea, eb)], radix) for eb in elems]
        for ea in elems
    ]
    mul = [[gmul(ea, eb) for eb in elems] for ea in elems]
    neg = [_digits_to_index([base.neg[x] for x in ea], radix) for ea in elems]
    zero = 0 if base.zero == 0 else _digits_to_index([base.zero] * g, radix)
    one_digits = [bzero] * g
    one_digits[group.identity] = base.one
    one = _digits_to_index(one_digits, radix)

    def gname(e: tuple[int, ...]) -> str:
        terms = []
        for k, c in enumerate(e):
            if c == bzero:
                continue
            cname = base.names[c]
            if k == group.identity:
                terms.append(cname)
            elif cname == "1":
                terms.append(group.names[k])
            else:
                terms.append(f"{cname}{group.names[k]}")
        return "+".join(terms) if terms else "0"

    names = [gname(e) for e in elems]
    return _finish_ring(
        n,
        add,
        mul,
        zero,
        one,
        neg,
        {"kind": "group_ring", "base": base.construction},
        names,
        parts={"base": base, "group": group},
    )


# ---------------------------------------------------------------------------
# modules and idealization


@dataclass(eq=False)
class FiniteModule:
    ring: FiniteRing
    size: int
    add: tuple[tuple[int, ...], ...]
    zero: int
    neg: tuple[int, ...]
    act: tuple[tuple[int, ...], ...]  # act[r][m] = r.m
    names: tuple[str, ...]
    construction: dict


def _validate_module(mod: FiniteModule) -> None:
    n, m = mod.ring.size, mod.size
    MA = _validate_abelian_group(mod.add, mod.zero, mod.neg, m, "module")
    ACT = np.asarray(mod.act, dtype=np.int64)
    if ACT.shape != (n, m) or (ACT.size and (ACT.min() < 0 or ACT.max() >= m)):
        raise InvalidConstruction("module action table malformed")
    if not np.array_equal(ACT[mod.ring.one], np.arange(m)):
        raise InvalidConstruction("unity does not act as identity on the module")
    RA = np.asarray(mod.ring.add)
    RM = np.asarray(mod.ring.mul)
    for r in range(n):
        if not np.array_equal(ACT[r][ACT], ACT[RM[r]]):
            raise InvalidConstruction(f"module action not associative (witness {r})")
        if not np.array_equal(ACT[RA[r]], MA[ACT[r][None, :], ACT]):
            raise InvalidConstruction(f"module action not additive in the ring (witness {r})")
        if not np.array_equal(ACT[r][MA], MA[np.ix_(ACT[r], ACT[r])]):
            raise InvalidConstruction(f"module action not additive in the module (witness {r})")


def module_self(ring: FiniteRing) -> FiniteModule:
    """The ring acting on itself by left multiplication."""
    mod = FiniteModule(
        ring=ring,
        size=ring.size,
        add=ring.add,
        zero=ring.zero,
        neg=ring.neg,
        act=ring.mul,
        names=ring.names,
        construction={"kind": "self"},
    )
    _validate_module(mod)
    return mod


def module_zn_quotient(ring: FiniteRing, m: int) -> FiniteModule:
    """Z_m as a module over Z_n, for m dividing n."""
    if ring.construction.get("kind") != "zn":
        raise InvalidConstruction("quotient modules are only defined over integers mod n")
    n = ring.construction["n"]
    if m < 1 or n % m != 0:
        raise InvalidConstruction(f"modulus {m} must divide {n}")
    mod = FiniteModule(
        ring=ring,
        size=m,
        add=tuple(tuple((a + b) % m for b in range(m)) for a in range(m)),
        zero=0,
        neg=tuple((-a) % m for a in range(m)),
        act=tuple(tuple((r * x) % m for x in range(m)) for r in range(ring.size)),
        names=tuple(str(a) for a in range(m)),
        construction={"kind": "zn_quotient", "m": m},
    )
    _validate_module(mod)
    return mod


def idealization(
    base: FiniteRing, module: FiniteModule, max_size: int = MAX_RING_SIZE
) -> FiniteRing:
    """Square-zero extension of a commutative base by a module.

    Carrier is pairs (r, m) at index r*|M| + m, with multiplication
    (r, m)(r', m') = (rr', r.m' + r'.m); the module part multiplies to zero.
    """
    if module.ring is not base:
        raise InvalidConstruction("module is not over the given base ring")
    if not base.commutative:
        raise InvalidConstruction("idealization needs a commutative base")
    n1, n2 = base.size, module.size
    n = n1 * n2
    _check_size(n, max_size)
    add = [
        [
            base.add[r][rp] * n2 + module.add[m][mp]
            for rp in range(n1)
            for mp in range(n2)
        ]
        for r in range(n1)
        for m in range(n2)
    ]
    mul = [
        [
            base.mul[r][rp] * n2 + module.add[module.act[r][mp]][module.act[rp][m]]
            for rp in range(n1)
            for mp in range(n2)
        ]
        for r in range(n1)
        for m in range(n2)
    ]
    neg = [base.neg[r] * n2 + module.neg[m] for r in range(n1) for m in range(n2)]
    zero = base.zero * n2 + module.zero
    one = base.one * n2 + module.zero
    names = [
        f"({base.names[r]}|{module.names[m]})" for r in range(n1) for m in range(n2)
    ]
    return _finish_ring(
        n,
        add,
        mul,
        zero,
        one,
        neg,
        {
            "kind": "idealization",
            "base": base.construction,
            "module": module.construction,
        },
        names,
        parts={"base": base, "module": module},
    )


# ---------------------------------------------------------------------------
# subrings


def _induced_ring(
    parent: FiniteRing, members: list[int], one_parent: int, kind: str
) -> tuple[FiniteRing, tuple[int, ...]]:
    index_of = {p: i for i, p in enumerate(members)}
    k = len(members)
    for a in members:
        arow, mrow = parent.add[a], parent.mul[a]
        for b in members:
            if arow[b] not in index_of or mrow[b] not in index_of:
                raise NotASubring(
                    f"subset not closed under operations (witness {a}, {b})"
                )
    add = [[index_of[parent.add[a][b]] for b in members] for a in members]
    mul = [[index_of[parent.mul[a][b]] for b in members] for a in members]
    neg = []
    for a in members:
        if parent.neg[a] not in index_of:
            raise NotASubring(f"subset not closed under negation (witness {a})")
        neg.append(index_of[parent.neg[a]])
    embedding = tuple(members)
    ring = _finish_ring(
        k,
        add,
        mul,
        index_of[parent.zero],
        index_of[one_parent],
        neg,
        {"kind": kind, "members": list(members)},
        [parent.names[p] for p in members],
        parts={"parent": parent, "embedding": embedding},
    )
    return ring, embedding


def subring_on(
    parent: FiniteRing, members: Iterable[int]
) -> tuple[FiniteRing, tuple[int, ...]]:
    """Unital subring on a subset containing 0 and 1; returns the induced
    ring plus the embedding (new index -> parent index)."""
    ms = sorted(set(members))
    if parent.zero not in ms:
        raise NotASubring("subset misses the zero element")
    if parent.one not in ms:
        raise NotASubring("subset misses the unity")
    return _induced_ring(parent, ms, parent.one, "subring")


def unital_ring_on(
    parent: FiniteRing, members: Iterable[int]
) -> tuple[FiniteRing, tuple[int, ...]]:
    """Closed subset that is a ring with its own identity (found by search);
    the identity need not be the parent's unity.  This is how a direct-sum
    factor of a ring becomes a ring in its own right."""
    ms = sorted(set(members))
    if parent.zero not in ms:
        raise NotASubring("subset misses the zero element")
    sset = set(ms)
    one = None
    for e in ms:
        if all(parent.mul[e][a] == a and parent.mul[a][e] == a for a in ms):
            one = e
            break
    if one is None:
        raise InvalidConstruction("subset has no internal identity element")
    for a in ms:
        if any(parent.add[a][b] not in sset for b in ms):
            raise NotASubring(f"subset not additively closed (witness {a})")
    return _induced_ring(parent, ms, one, "unital_subring")

"""Constructors for the named finite-group families, twisted products,
automorphism groups, the order-<16 catalog, and abelian-group counting.

Families are realized as faithful permutation groups: cyclic and
dihedral groups act on the polygon vertices, symmetric and alternating
groups naturally, and the families without a coded small action
(dicyclic, Clifford) fall back to their left-regular representation.
Every constructor certifies the expected order and raises
InternalDefectError on mismatch, so a returned group is a verified one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cayley import CayleyStructure
from .errors import InternalDefectError, ValidationError
from .fields import is_prime, prime_factors
from .perms import PermGroup, Permutation, center_order, group_from_generators


def _certify(G, expected_order, what):
    if G.order() != expected_order:
        raise InternalDefectError(
            f"{what}: built order {G.order()}, expected {expected_order}")
    return G


def _regular_from_table(elements, mult, gens, expected_order, what):
    """Left-regular permutation realization of an abstract group given by a
    multiplication rule on hashable element labels."""
    index = {e: i for i, e in enumerate(elements)}
    perms = [Permutation(index[mult(g, x)] for x in elements) for g in gens]
    G = group_from_generators(len(elements), perms)
    return _certify(G, expected_order, what)


# --------------------------------------------------------------------- named


def cyclic(n):
    if n < 1:
        raise ValidationError("cyclic groups need n >= 1")
    if n == 1:
        return group_from_generators(1, [])
    return _certify(group_from_generators(
        n, [Permutation.from_cycles(n, [tuple(range(n))])]), n, f"cyclic({n})")


def dihedral(n):
    if n < 3:
        raise ValidationError(
            "dihedral groups start at n = 3: the n = 2 candidate degenerates "
            "to the direct product Z2 x Z2 (use vierergruppe) because Z2 has "
            "no nontrivial automorphism to twist with, and n = 1 gives "
            "cyclic(2)")
    rot = Permutation.from_cycles(n, [tuple(range(n))])
    flip = Permutation([(n - i) % n for i in range(n)])
    return _certify(group_from_generators(n, [rot, flip]), 2 * n, f"dihedral({n})")


def dicyclic(n):
    """Q_n of order 4n (n >= 2): a^{2n} = e, b^2 = a^n, b a b^-1 = a^-1.

    The n = 1 member degenerates to the Klein four-group and is not part
    of the family here; Q_2 is the quaternion group.
    """
    if n < 2:
        raise ValidationError(
            "dicyclic groups start at n = 2 (Q_1 degenerates to the "
            "vierergruppe); Q_2 is the quaternion group")
    elements = [(i, j) for j in (0, 1) for i in range(2 * n)]

    def mult(x, y):
        i, j = x
        k, l = y
        if j == 0:
            return ((i + k) % (2 * n), l)
        if l == 0:
            return ((i - k) % (2 * n), 1)
        return ((i - k + n) % (2 * n), 0)

    return _regular_from_table(elements, mult, [(1, 0), (0, 1)],
                               4 * n, f"dicyclic({n})")


def quaternion():
    return dicyclic(2)


def vierergruppe():
    gens = [Permutation.from_cycles(4, [(0, 1), (2, 3)]),
            Permutation.from_cycles(4, [(0, 2), (1, 3)])]
    return _certify(group_from_generators(4, gens), 4, "vierergruppe")


def symmetric(n):
    if n < 1:
        raise ValidationError("symmetric groups need n >= 1")
    if n == 1:
        return group_from_generators(1, [])
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    order = 1
    for k in range(2, n + 1):
        order *= k
    return _certify(group_from_generators(n, gens), order, f"symmetric({n})")


def alternating(n):
    if n < 1:
        raise ValidationError("alternating groups need n >= 1")
    if n <= 2:
        return group_from_generators(max(n, 1), [])
    if n == 3:
        gens = [Permutation.from_cycles(3, [(0, 1, 2)])]
    elif n % 2:
        gens = [Permutation.from_cycles(n, [(0, 1, 2)]),
                Permutation.from_cycles(n, [tuple(range(n))])]
    else:
        gens = [Permutation.from_cycles(n, [(0, 1, 2)]),
                Permutation.from_cycles(n, [tuple(range(1, n))])]
    order = 1
    for k in range(2, n + 1):
        order *= k
    return _certify(group_from_generators(n, gens), order // 2, f"alternating({n})")


def clifford(n, even_only=False):
    """The finite Clifford group on n anticommuting square-root-of-minus-one
    generators: order 2^(n+1), or 2^n for the even (restricted) subgroup."""
    if n < 1:
        raise ValidationError("clifford groups need n >= 1")
    subsets = []
    for mask in range(1 << n):
        s = tuple(i + 1 for i in range(n) if mask >> i & 1)
        if not even_only or len(s) % 2 == 0:
            subsets.append(s)
    elements = [(sign, s) for s in subsets for sign in (1, -1)]

    def mult(x, y):
        s1, a = x
        s2, b = y
        inv = sum(1 for p in a for q in b if p > q)
        common = len(set(a) & set(b))
        sign = s1 * s2 * (-1) ** (inv + common)
        merged = tuple(sorted(set(a) ^ set(b)))
        return (sign, merged)

    if even_only:
        gens = [(1, (i, i + 1)) for i in range(1, n)]
        expected = 2 ** n
        what = f"clifford_even({n})"
    else:
        gens = [(1, (i,)) for i in range(1, n + 1)]
        expected = 2 ** (n + 1)
        what = f"clifford({n})"
    if not gens:       # even subgroup of clifford(1) is {+1, -1}
        gens = [(-1, ())]
    return _regular_from_table(elements, mult, gens, expected, what)


def frobenius21():
    """The nonabelian group of order 21 = Z_7 x| Z_3, acting on 7 points."""
    a = Permutation.from_cycles(7, [tuple(range(7))])
    b = Permutation([(2 * i) % 7 for i in range(7)])
    return _certify(group_from_generators(7, [a, b]), 21, "frobenius21")


def elementary_abelian(p, m):
    if not is_prime(p) or m < 1:
        raise ValidationError("elementary abelian groups need prime p and m >= 1")
    gens = [Permutation.from_cycles(p * m, [tuple(range(k * p, (k + 1) * p))])
            for k in range(m)]
    return _certify(group_from_generators(p * m, gens), p ** m,
                    f"elementary_abelian({p},{m})")


_FAMILIES = {
    "cyclic": (cyclic, True),
    "dihedral": (dihedral, True),
    "dicyclic": (dicyclic, True),
    "clifford": (clifford, True),
    "clifford_even": (lambda n: clifford(n, even_only=True), True),
    "symmetric": (symmetric, True),
    "alternating": (alternating, True),
    "vierergruppe": (vierergruppe, False),
    "quaternion": (quaternion, False),
    "frobenius21": (frobenius21, False),
    "elementary_abelian": (elementary_abelian, 2),
}


def construct_named(name, parameter=None):
    """Build a named family member; see _FAMILIES for the accepted tags."""
    if name not in _FAMILIES:
        raise ValidationError(
            f"unknown group family {name!r}; choose from {sorted(_FAMILIES)}")
    fn, arity = _FAMILIES[name]
    if arity is False:
        return fn()
    if arity == 2:
        if not (isinstance(parameter, (tuple, list)) and len(parameter) == 2):
            raise ValidationError(f"{name} needs a (p, m) parameter pair")
        return fn(*parameter)
    if parameter is None:
        raise ValidationError(f"{name} needs an integer parameter")
    return fn(int(parameter))


# ----------------------------------------------------------------- products


@dataclass(frozen=True)
class ActionMap:
    """An action of B on A by automorphisms, one map per B-generator.

    assignment[k] maps A-element indices (into target_elements) to
    A-element indices and must be an automorphism of A; this is checked
    exhaustively against A's multiplication table at construction time.
    """

    target: PermGroup
    acting: PermGroup
    assignment: tuple

    def __post_init__(self):
        A = CayleyStructure(self.target)
        if len(self.assignment) != len(self.acting.generators):
            raise ValidationError(
                "need exactly one automorphism per generator of the acting group")
        for phi in self.assignment:
            if sorted(phi) != list(range(A.n)):
                raise ValidationError("assigned map is not a bijection on the target")
            for x in range(A.n):
                for y in range(A.n):
                    if phi[A.table[x][y]] != A.table[phi[x]][phi[y]]:
                        raise ValidationError(
                            "assigned map is not an automorphism: it breaks the "
                            f"product of elements {x} and {y}")


def trivial_action(A, B):
    n = A.order()
    return ActionMap(A, B, tuple(tuple(range(n)) for _ in B.generators))


def inversion_action(A, B):
    """Each B-generator acts by x -> x^{-1}; an automorphism iff A is abelian."""
    cs = CayleyStructure(A)
    inv = tuple(cs.inverse)
    return ActionMap(A, B, tuple(inv for _ in B.generators))


def power_action(A, B, k):
    """Each B-generator acts by x -> x^k."""
    cs = CayleyStructure(A)

    def pw(i):
        out = cs.identity_index
        for _ in range(k):
            out = cs.table[out][i]
        return out

    phi = tuple(pw(i) for i in range(cs.n))
    return ActionMap(A, B, tuple(phi for _ in B.generators))


def semidirect_product(A, B, action: ActionMap) -> PermGroup:
    """A x| B on |A|*|B| points (pairs of element indices, left translation).

    The trivial action gives the direct product.  Consistency of the
    generator assignment with B's relations is certified by the order
    check |A x| B| = |A|*|B|.
    """
    if action.target is not A or action.acting is not B:
        raise ValidationError("action was built for different groups")
    ca, cb = CayleyStructure(A), CayleyStructure(B)
    na, nb = ca.n, cb.n
    perms = []
    for ga in ca.generator_indices():
        images = [0] * (na * nb)
        for x in range(na):
            gx = ca.table[ga][x]
            for y in range(nb):
                images[x * nb + y] = gx * nb + y
        perms.append(Permutation(images))
    for gb_pos, gb in enumerate(cb.generator_indices()):
        phi = action.assignment[gb_pos]
        images = [0] * (na * nb)
        for x in range(na):
            px = phi[x]
            for y in range(nb):
                images[x * nb + y] = px * nb + cb.table[gb][y]
        perms.append(Permutation(images))
    G = group_from_generators(na * nb, perms)
    if G.order() != na * nb:
        raise ValidationError(
            "generator assignment is inconsistent with the acting group's "
            f"relations: product closed into order {G.order()}, "
            f"expected {na * nb}")
    return G


def direct_product(A, B):
    return semidirect_product(A, B, trivial_action(A, B))


# ------------------------------------------------------------- automorphisms

AUTOMORPHISM_BOUND = 64


def automorphism_perms(G, bound=AUTOMORPHISM_BOUND):
    """All automorphisms of G as permutations of its element list.

    Backtracking over generator images, pruned by element order; every
    surviving candidate is verified against the full multiplication
    table, so pruning bugs cannot produce false positives.
    """
    from .errors import ResourceLimitError
    n = G.order()
    if n > bound:
        raise ResourceLimitError(
            f"automorphism search bound is {bound}, group has order {n}")
    cs = CayleyStructure(G)
    gens = cs.minimal_generating_indices()
    by_order = {}
    for i in range(cs.n):
        by_order.setdefault(cs.orders[i], []).append(i)
    candidates = [by_order[cs.orders[g]] for g in gens]

    found = []

    def build_map(images):
        """Extend gen -> image to a candidate map by BFS, or None."""
        mapping = {cs.identity_index: cs.identity_index}
        queue = [cs.identity_index]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for g, img in zip(gens, images):
                y = cs.table[x][g]
                fy = cs.table[mapping[x]][img]
                if y in mapping:
                    if mapping[y] != fy:
                        return None
                else:
                    mapping[y] = fy
                    queue.append(y)
        if len(mapping) != cs.n:
            return None
        phi = [mapping[i] for i in range(cs.n)]
        if sorted(phi) != list(range(cs.n)):
            return None
        for x in range(cs.n):
            row = cs.table[x]
            fx = phi[x]
            frow = cs.table[fx]
            for y in range(cs.n):
                if phi[row[y]] != frow[phi[y]]:
                    return None
        return tuple(phi)

    def backtrack(k, images):
        if k == len(gens):
            phi = build_map(images)
            if phi is not None:
                found.append(phi)
            return
        for c in candidates[k]:
            backtrack(k + 1, images + [c])

    backtrack(0, [])
    return cs, found


def automorphism_group(G, bound=AUTOMORPHISM_BOUND):
    """(Aut(G) acting on G's elements, aut_order, inn_order, out_order)."""
    cs, autos = automorphism_perms(G, bound)
    n = G.order()
    aut = group_from_generators(n, [Permutation(phi) for phi in autos])
    aut_order = aut.order()
    if aut_order != len(autos):
        raise InternalDefectError("automorphism set is not closed")
    inn_order = n // center_order(G)
    if aut_order % inn_order:
        raise InternalDefectError("inner automorphisms do not divide Aut")
    return aut, aut_order, inn_order, aut_order // inn_order


def holomorph(A, bound=AUTOMORPHISM_BOUND):
    """A x| Aut(A) for abelian A, acting faithfully on A's elements."""
    if not A.is_abelian():
        raise ValidationError(
            "holomorph is provided for abelian groups only; build the "
            "semidirect product with an explicit action instead")
    cs, autos = automorphism_perms(A, bound)
    translations = [Permutation(cs.table[g]) for g in cs.generator_indices()]
    maps = [Permutation(phi) for phi in autos]
    H = group_from_generators(cs.n, translations + maps)
    return _certify(H, A.order() * len(autos), "holomorph")


def nonabelian_pq_group(p, q):
    """The nonabelian group of order p*q (p < q primes), when it exists.

    Exists exactly when p divides q-1; realized as Z_q x| Z_p with the
    deterministic smallest power action of multiplicative order p.
    """
    if not (is_prime(p) and is_prime(q) and p < q):
        raise ValidationError("need primes p < q")
    if (q - 1) % p:
        raise ValidationError(
            f"no nonabelian group of order {p * q}: {p} does not divide {q - 1}")
    k = next(k for k in range(2, q)
             if pow(k, p, q) == 1 and all(pow(k, d, q) != 1 for d in range(1, p)))
    A, B = cyclic(q), cyclic(p)
    return semidirect_product(A, B, power_action(A, B, k))


# ------------------------------------------------------------------ counting


@lru_cache(maxsize=None)
def partition_count(n):
    """Part(n) by the pentagonal-number recurrence (exact)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def factorize(n):
    """Prime factorization as an ordered dict prime -> exponent."""
    out = {}
    for p in prime_factors(n):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out[p] = e
    return out


def count_abelian_groups(n):
    """Number of abelian groups of order n: the product of Part(e_i) over
    the prime-power exponents of n."""
    if n < 1:
        raise ValidationError("order must be positive")
    total = 1
    for e in factorize(n).values():
        total *= partition_count(e)
    return total


@dataclass(frozen=True)
class AbelianType:
    """An abelian group of given order as a product of prime-power cyclics."""

    factors: tuple

    def order(self):
        out = 1
        for f in self.factors:
            out *= f
        return out


def _partitions(n):
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def abelian_types(n):
    """Every abelian group of order n, one AbelianType per isomorphism class."""
    types = [()]
    for p, e in factorize(n).items():
        new = []
        for part in _partitions(e):
            block = tuple(p ** k for k in part)
            new.extend(t + block for t in types)
        types = new
    return [AbelianType(tuple(sorted(t, reverse=True))) for t in types]


# ------------------------------------------------------------------- catalog


@dataclass(frozen=True)
class CatalogEntry:
    order: int
    name: str
    is_abelian: bool
    class_sizes: tuple
    class_rep_orders: tuple
    irrep_degrees: tuple
    aut_order: int
    notes: str = ""

    def as_dict(self):
        return {
            "order": self.order,
            "name": self.name,
            "is_abelian": self.is_abelian,
            "class_sizes": list(self.class_sizes),
            "class_rep_orders": list(self.class_rep_orders),
            "irrep_degrees": list(self.irrep_degrees),
            "aut_order": self.aut_order,
            "notes": self.notes,
        }


def _catalog_builders():
    """(name, constructor, abelian?, notes) for every group of order < 16."""
    z = cyclic
    return [
        ("I", lambda: z(1), True, "trivial group"),
        ("Z2", lambda: z(2), True, ""),
        ("Z3", lambda: z(3), True, ""),
        ("Z4", lambda: z(4), True, ""),
        ("V", vierergruppe, True, "Klein four-group, Z2 x Z2"),
        ("Z5", lambda: z(5), True, ""),
        ("Z6", lambda: z(6), True, "Z2 x Z3"),
        ("S3", lambda: symmetric(3), False, "smallest nonabelian; = D3 = Hol(Z3)"),
        ("Z7", lambda: z(7), True, ""),
        ("Z8", lambda: z(8), True, ""),
        ("Z2xZ4", lambda: direct_product(z(2), z(4)), True, ""),
        ("Z2^3", lambda: elementary_abelian(2, 3), True, ""),
        ("D4", lambda: dihedral(4), False, "octic group"),
        ("Q", quaternion, False, "quaternion group, dicyclic Q_2"),
        ("Z9", lambda: z(9), True, ""),
        ("Z3^2", lambda: elementary_abelian(3, 2), True, ""),
        ("Z10", lambda: z(10), True, "Z2 x Z5"),
        ("D5", lambda: dihedral(5), False, ""),
        ("Z11", lambda: z(11), True, ""),
        ("Z12", lambda: z(12), True, "Z4 x Z3"),
        ("Z2xZ6", lambda: direct_product(z(2), z(6)), True, "V x Z3"),
        ("D6", lambda: dihedral(6), False, "Z2 x S3"),
        ("A4", lambda: alternating(4), False, "V x| Z3"),
        ("Q3", lambda: dicyclic(3), False, "dicyclic of order 12, Z3 x| Z4"),
        ("Z13", lambda: z(13), True, ""),
        ("Z14", lambda: z(14), True, "Z2 x Z7"),
        ("D7", lambda: dihedral(7), False, ""),
        ("Z15", lambda: z(15), True, "cyclic: 3 and 5 are incompatible primes"),
    ]


def small_group_catalog():
    """All 28 groups of order < 16 (20 abelian, 8 nonabelian), each entry
    verified by building the group and recomputing its invariants."""
    from .characters import character_table
    from .perms import conjugacy_classes

    entries = []
    for name, build, abelian, notes in _catalog_builders():
        G = build()
        n = G.order()
        if G.is_abelian() != abelian:
            raise InternalDefectError(f"{name}: abelianness mismatch")
        data = conjugacy_classes(G)
        table = character_table(G)
        degrees = tuple(sorted(table.degrees))
        if sum(d * d for d in degrees) != n:
            raise InternalDefectError(f"{name}: Burnside relation fails")
        if len(degrees) != data.num_classes:
            raise InternalDefectError(f"{name}: irrep count != class count")
        _, aut_order, _, _ = automorphism_group(G)
        entries.append(CatalogEntry(
            order=n,
            name=name,
            is_abelian=abelian,
            class_sizes=data.class_sizes,
            class_rep_orders=data.class_rep_orders,
            irrep_degrees=degrees,
            aut_order=aut_order,
            notes=notes,
        ))
    entries.sort(key=lambda e: (e.order, e.name))
    return entries

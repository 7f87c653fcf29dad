"""Permutations and permutation groups with a deterministic stabilizer chain.

A group is entered by generators; a base and strong generating set are
built at construction with a deterministic Schreier-Sims procedure
(explicit transversals, no randomization), so order, membership and the
structural queries below are reproducible run to run.

Orders are exact big integers: the order is the product of the
fundamental orbit lengths along the chain.  Structural queries that
need the element list (conjugacy classes, center, element-order
histograms) are guarded by explicit enumeration bounds and raise
ResourceLimitError beyond them.

Groups are immutable once built; every query is read-only, so distinct
threads may share a group freely.
"""

from __future__ import annotations

import os
import random
from collections import Counter
from dataclasses import dataclass
from math import gcd

from .errors import DomainMismatchError, ResourceLimitError, ValidationError

ENUMERATION_BOUND = 10 ** 6
EXHAUSTIVE_CLASS_BOUND = 10 ** 5


def enumeration_bound():
    """Element-enumeration cap; overridable with FSG_ENUMERATION_BOUND."""
    return int(os.environ.get("FSG_ENUMERATION_BOUND", ENUMERATION_BOUND))


class Permutation:
    """A permutation of {0, ..., n-1}, stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        seen = [False] * len(images)
        for x in images:
            if not (0 <= x < len(images)) or seen[x]:
                raise ValidationError(
                    f"images do not form a bijection: value {x} repeats or is out of range")
            seen[x] = True
        object.__setattr__(self, "images", images)

    # construction helpers -------------------------------------------------

    @staticmethod
    def identity(degree):
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(degree, cycles):
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return Permutation(images)

    @staticmethod
    def parse(text, degree=0):
        """Parse cycle notation like "(0 1 2)(3 4)" or a JSON-ish image list."""
        text = text.strip()
        if text.startswith("["):
            images = [int(t) for t in text.strip("[]").replace(",", " ").split()]
            return Permutation(images)
        cycles, i = [], 0
        while i < len(text):
            if text[i] == "(":
                j = text.index(")", i)
                body = text[i + 1:j].replace(",", " ").split()
                cycles.append([int(t) for t in body])
                i = j + 1
            elif text[i].isspace():
                i += 1
            else:
                raise ValidationError(f"cannot parse permutation {text!r}")
        n = max([degree] + [c + 1 for cyc in cycles for c in cyc])
        return Permutation.from_cycles(n, cycles)

    # basic operations ------------------------------------------------------

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        """Composition: (p * q)(x) = p(q(x))."""
        a, b = self.images, other.images
        if len(a) != len(b):
            raise DomainMismatchError("degree mismatch in permutation product")
        return Permutation(a[x] for x in b)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate_by(self, g):
        """g * self * g^{-1}."""
        return g * self * g.inverse()

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.images))

    def moved_points(self):
        return [i for i, x in enumerate(self.images) if i != x]

    def cycles(self):
        """Nontrivial cycles, each starting at its smallest point."""
        seen, out = set(), []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc, j = [i], self.images[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self):
        """Smallest m with p^m = identity: the lcm of the cycle lengths."""
        m = 1
        for cyc in self.cycles():
            m = m * len(cyc) // gcd(m, len(cyc))
        return m

    def cycle_string(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.cycle_string()}"


class _Level:
    """One stabilizer-chain level: base point, transversal, own strong gens."""

    __slots__ = ("base", "gens", "orbit", "transversal", "transversal_inv", "checked")

    def __init__(self, base, degree):
        self.base = base
        self.gens = []            # strong generators registered at this level
        self.orbit = [base]       # discovery order
        ident = Permutation.identity(degree)
        self.transversal = {base: ident}
        self.transversal_inv = {base: ident}
        self.checked = set()      # Schreier pairs already sifted to identity


class PermGroup:
    """A permutation group with a deterministic base and strong generating set.

    base_hint, when given, fixes the leading base points in order, which
    makes iterated point stabilizers readable straight off the chain.
    """

    def __init__(self, degree, generators, base_hint=()):
        self.degree = int(degree)
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != self.degree:
                raise DomainMismatchError(
                    f"generator degree {g.degree} != group degree {self.degree}")
            if not g.is_identity():
                gens.append(g)
        self.generators = tuple(gens)
        self._base_hint = tuple(base_hint)
        self.levels = []
        self._element_list = None
        self._build_chain()
        self._order = 1
        for lev in self.levels:
            self._order *= len(lev.orbit)

    # ------------------------------------------------------------------ chain

    def _gens_at(self, i):
        out = []
        for lev in self.levels[i:]:
            out.extend(lev.gens)
        return out

    def _new_level(self, mover):
        """Append chain levels, honoring base hints, until mover has a base."""
        while True:
            k = len(self.levels)
            if k < len(self._base_hint):
                base = self._base_hint[k]
                self.levels.append(_Level(base, self.degree))
                if mover(base) != base:
                    return self.levels[-1]
                # hint point fixed by the incoming element: keep the singleton
                # level for alignment and continue searching
            else:
                base = min(mover.moved_points())
                self.levels.append(_Level(base, self.degree))
                return self.levels[-1]

    def _register(self, h):
        """Place a non-identity strong generator at its level; extend orbits."""
        for i, lev in enumerate(self.levels):
            if h(lev.base) != lev.base:
                lev.gens.append(h)
                j = i
                break
        else:
            lev = self._new_level(h)
            lev.gens.append(h)
            j = self.levels.index(lev)
        for l in range(j + 1):
            self._extend_orbit(l)
        return j

    def _extend_orbit(self, i):
        """Grow level i's orbit in place; existing transversal entries persist."""
        lev = self.levels[i]
        gens = self._gens_at(i)
        queue = list(lev.orbit)
        qi = 0
        while qi < len(queue):
            p = queue[qi]
            qi += 1
            up = lev.transversal[p]
            for s in gens:
                y = s(p)
                if y not in lev.transversal:
                    u = s * up
                    lev.transversal[y] = u
                    lev.transversal_inv[y] = u.inverse()
                    lev.orbit.append(y)
                    queue.append(y)

    def _sift(self, g, start=0):
        """Sift g through levels >= start; returns (residue, stop_level)."""
        for i in range(start, len(self.levels)):
            lev = self.levels[i]
            x = g(lev.base)
            if x == lev.base:
                continue
            if x not in lev.transversal:
                return g, i
            g = lev.transversal_inv[x] * g
        return g, len(self.levels)

    def _build_chain(self):
        for g in self.generators:
            self._register(g)
        i = len(self.levels) - 1
        while i >= 0:
            lev = self.levels[i]
            restart = False
            for p in list(lev.orbit):
                up = lev.transversal[p]
                for s in self._gens_at(i):
                    key = (p, s.images)
                    if key in lev.checked:
                        continue
                    u_sp_inv = lev.transversal_inv[s(p)]
                    schreier = u_sp_inv * (s * up)
                    residue, _ = self._sift(schreier, i + 1)
                    if residue.is_identity():
                        lev.checked.add(key)
                    else:
                        j = self._register(residue)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    # ---------------------------------------------------------------- queries

    def order(self):
        return self._order

    def base(self):
        return [lev.base for lev in self.levels]

    def basic_orbit_sizes(self):
        return [len(lev.orbit) for lev in self.levels]

    def sift(self, g):
        if g.degree != self.degree:
            raise DomainMismatchError(
                f"permutation degree {g.degree} != group degree {self.degree}")
        residue, _ = self._sift(g)
        return residue

    def __contains__(self, g):
        return self.sift(g).is_identity()

    def orbit(self, point):
        """Orbit of a point under the whole group, discovery order."""
        seen = {point}
        queue = [point]
        qi = 0
        while qi < len(queue):
            p = queue[qi]
            qi += 1
            for s in self.generators:
                y = s(p)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return queue

    def orbits(self):
        """Disjoint orbits covering all points, each sorted, in point order."""
        left = set(range(self.degree))
        out = []
        while left:
            p = min(left)
            orb = sorted(self.orbit(p))
            out.append(orb)
            left -= set(orb)
        return out

    def support(self):
        moved = set()
        for g in self.generators:
            moved.update(g.moved_points())
        return sorted(moved)

    def iter_elements(self):
        """All elements, as products down the chain (deterministic order)."""
        def rec(i, prefix):
            if i == len(self.levels):
                yield prefix
                return
            lev = self.levels[i]
            for p in lev.orbit:
                yield from rec(i + 1, prefix * lev.transversal[p])
        yield from rec(0, Permutation.identity(self.degree))

    def element_list(self, bound=None):
        """Sorted element list (cached); refuses above the enumeration bound."""
        if bound is None:
            bound = enumeration_bound()
        if self._element_list is None:
            if self._order > bound:
                raise ResourceLimitError(
                    f"group order {self._order} exceeds enumeration bound {bound}")
            self._element_list = sorted(self.iter_elements(), key=lambda g: g.images)
        return self._element_list

    def random_element(self, rng: random.Random):
        """Uniformly random element via uniform transversal choices."""
        g = Permutation.identity(self.degree)
        for lev in self.levels:
            g = g * lev.transversal[rng.choice(lev.orbit)]
        return g

    def is_abelian(self):
        return all((a * b).images == (b * a).images
                   for i, a in enumerate(self.generators)
                   for b in self.generators[i + 1:])


# ---------------------------------------------------------------------------
# Module-level operations


def group_from_generators(degree, gens, base_hint=()):
    """Group from generator permutations; empty input gives the trivial group."""
    return PermGroup(degree, gens, base_hint=base_hint)


def contains(G: PermGroup, pi: Permutation) -> bool:
    return pi in G


def orbit_partition(G: PermGroup):
    """Orbits of G on its points, with the orbit-stabilizer count law checked."""
    parts = G.orbits()
    for orb in parts:
        # |G| = |stabilizer| * |orbit|: recompute the stabilizer order from a
        # chain whose first base point is the orbit representative.
        H = PermGroup(G.degree, G.generators, base_hint=(orb[0],))
        stab_order = H.order() // len(H.levels[0].orbit) if H.levels else 1
        if stab_order * len(orb) != G.order():
            raise AssertionError("orbit-stabilizer law failed")  # pragma: no cover
    return parts


def transitivity_degree(G: PermGroup):
    """Largest k with G transitive on ordered k-tuples of support points.

    Returns (k, sharp); (0, False) when G is not transitive on its support.
    """
    supp = G.support()
    if not supp:
        return 0, False
    chain = PermGroup(G.degree, G.generators, base_hint=tuple(supp))
    orbit_sizes = []
    li = 0
    for p in supp:
        if li < len(chain.levels) and chain.levels[li].base == p:
            size = len(chain.levels[li].orbit)
            li += 1
        else:
            size = 1
        orbit_sizes.append(size)
    remaining = len(supp)
    k = 0
    stab_order = chain.order()
    for size in orbit_sizes:
        if size != remaining:
            break
        k += 1
        stab_order //= size
        remaining -= 1
    if k == 0:
        return 0, False
    return k, stab_order == 1


@dataclass(frozen=True)
class ClassData:
    """Conjugacy-class partition of a finite group.

    Classes are sorted by (element order, moved-point count, size,
    smallest member), so equal-order classes of small support come
    first; class_sizes always sums to the group order.
    """

    class_sizes: tuple
    class_rep_orders: tuple
    center_size: int
    num_classes: int
    reps: tuple

    def as_dict(self):
        return {
            "class_sizes": list(self.class_sizes),
            "class_rep_orders": list(self.class_rep_orders),
            "center_size": self.center_size,
            "num_classes": self.num_classes,
        }


def _classes_exhaustive(G):
    els = G.element_list(EXHAUSTIVE_CLASS_BOUND)
    index = {g.images: k for k, g in enumerate(els)}
    gen_pairs = [(g, g.inverse()) for g in G.generators]
    seen = [False] * len(els)
    classes = []
    for start, g in enumerate(els):
        if seen[start]:
            continue
        block = [g]
        seen[start] = True
        qi = 0
        while qi < len(block):
            x = block[qi]
            qi += 1
            for s, s_inv in gen_pairs:
                y = s * x * s_inv
                k = index[y.images]
                if not seen[k]:
                    seen[k] = True
                    block.append(y)
        classes.append(block)
    return classes


def _classes_random_fusion(G, seed=0):
    """Class census for large groups: conjugation orbits of random seeds,
    complete exactly when the class sizes sum to |G|."""
    rng = random.Random(seed)
    known = {}          # element images -> class id
    classes = []
    total = 0
    order = G.order()
    gen_pairs = [(g, g.inverse()) for g in G.generators]
    while total < order:
        g = G.random_element(rng)
        if g.images in known:
            continue
        block = [g]
        known[g.images] = len(classes)
        qi = 0
        while qi < len(block):
            x = block[qi]
            qi += 1
            for s, s_inv in gen_pairs:
                y = s * x * s_inv
                if y.images not in known:
                    known[y.images] = len(classes)
                    block.append(y)
        classes.append(block)
        total += len(block)
    return classes


def full_conjugacy_classes(G: PermGroup, bound=None):
    """All classes as element lists, canonically sorted (see ClassData)."""
    if bound is None:
        bound = enumeration_bound()
    n = G.order()
    if n > bound:
        raise ResourceLimitError(
            f"group order {n} exceeds the class-enumeration bound {bound}; "
            "use the order-formula census for groups of this size")
    if n <= EXHAUSTIVE_CLASS_BOUND:
        classes = _classes_exhaustive(G)
    else:
        classes = _classes_random_fusion(G)
    if sum(len(c) for c in classes) != n:
        raise AssertionError("class sizes do not sum to the group order")
    def key(block):
        rep = min(block, key=lambda g: g.images)
        return (rep.order(), len(rep.moved_points()), len(block), rep.images)
    return sorted(classes, key=key)


def conjugacy_classes(G: PermGroup, bound=None) -> ClassData:
    classes = full_conjugacy_classes(G, bound)
    reps = tuple(min(block, key=lambda g: g.images) for block in classes)
    sizes = tuple(len(block) for block in classes)
    orders = tuple(rep.order() for rep in reps)
    return ClassData(
        class_sizes=sizes,
        class_rep_orders=orders,
        center_size=sum(1 for s in sizes if s == 1),
        num_classes=len(sizes),
        reps=reps,
    )


def center_order(G: PermGroup, bound=None) -> int:
    els = G.element_list(bound)
    return sum(1 for z in els
               if all((z * g).images == (g * z).images for g in G.generators))


def normal_closure(G: PermGroup, seeds) -> PermGroup:
    """Smallest normal subgroup of G containing the seed permutations."""
    gens = [s for s in seeds if not s.is_identity()]
    K = PermGroup(G.degree, gens)
    while True:
        new = []
        for k in gens:
            for g in G.generators:
                c = g * k * g.inverse()
                if c not in K:
                    new.append(c)
        if not new:
            return K
        gens.extend(new)
        K = PermGroup(G.degree, gens)


def structure_report(G: PermGroup, bound=None):
    """(center_order, derived_order, abelianization_order, is_perfect)."""
    if bound is None:
        bound = enumeration_bound()
    n = G.order()
    if n > bound:
        raise ResourceLimitError(
            f"group order {n} exceeds the enumeration bound {bound}")
    commutators = []
    for i, a in enumerate(G.generators):
        for b in G.generators[i + 1:]:
            commutators.append(a * b * a.inverse() * b.inverse())
    derived = normal_closure(G, commutators).order() if commutators else 1
    ab = n // derived
    return center_order(G, bound), derived, ab, ab == 1


def is_simple(G: PermGroup, bound=None) -> bool:
    """True iff G has no proper normal subgroup (trivial group excluded)."""
    if bound is None:
        bound = enumeration_bound()
    n = G.order()
    if n == 1:
        return False
    if n > bound:
        raise ResourceLimitError(
            f"group order {n} exceeds the enumeration bound {bound}")
    if G.is_abelian():
        from .fields import is_prime
        return is_prime(n)
    data = conjugacy_classes(G, bound)
    for rep in data.reps:
        if rep.is_identity():
            continue
        if normal_closure(G, [rep]).order() != n:
            return False
    return True


def element_order_histogram(G: PermGroup, bound=None):
    """Map element order -> count over all of G; counts sum to |G|."""
    if bound is None:
        bound = enumeration_bound()
    n = G.order()
    if n > bound:
        raise ResourceLimitError(
            f"group order {n} exceeds the enumeration bound {bound}")
    hist = Counter()
    for g in G.iter_elements():
        hist[g.order()] += 1
    return dict(hist)


def closure_order(degree, gens) -> int:
    """Order by plain breadth-first closure; the stabilizer-chain oracle.

    Deliberately ignores the chain machinery so the two order computations
    stay independent.
    """
    gens = [g if isinstance(g, Permutation) else Permutation(g) for g in gens]
    ident = Permutation.identity(degree)
    seen = {ident.images}
    queue = [ident]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for s in gens:
            y = s * x
            if y.images not in seen:
                seen.add(y.images)
                queue.append(y)
    return len(seen)

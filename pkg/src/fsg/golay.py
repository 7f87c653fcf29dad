"""The binary [24,12,8] Golay code, its Steiner octad system, and the
Mathieu group M24 as the code's automorphism group.

Construction: coordinates 0..22 are the residues mod 23 and coordinate
23 is the projective point at infinity.  The code is the parity
extension of the length-23 cyclic code spanned by the shifts of the
quadratic-residue indicator vector; the build verifies dimension 12,
the weight distribution {0:1, 8:759, 12:2576, 16:759, 24:1} and
self-duality rather than trusting any tabulated matrix.  With this
labeling the projective maps x -> x+1 and x -> -1/x act as code
automorphisms (verified exhaustively), giving a PSL_2(23) subgroup of
the automorphism group; one more automorphism, found by a deterministic
backtracking search constrained by the octad Steiner system, generates
all of M24 together with it.

Codewords are 24-bit integers throughout (bit i = coordinate i).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import InternalDefectError
from .perms import PermGroup, Permutation, transitivity_degree

LENGTH = 24
INFINITY = 23

_cached_code = None
_cached_m24 = None


@dataclass(frozen=True)
class BinaryCode:
    """A binary linear code given by generator bit-rows."""

    length: int
    dimension: int
    generators: tuple

    def codewords(self):
        words = [0]
        for g in self.generators:
            words += [w ^ g for w in words]
        return words

    def codeword_set(self):
        return frozenset(self.codewords())

    def weight_distribution(self):
        dist = {}
        for w in self.codewords():
            k = w.bit_count()
            dist[k] = dist.get(k, 0) + 1
        return dist

    def octads(self):
        return sorted(w for w in self.codewords() if w.bit_count() == 8)

    def contains(self, word):
        return word in self.codeword_set()

    def is_self_dual(self):
        if 2 * self.dimension != self.length:
            return False
        return all((a & b).bit_count() % 2 == 0
                   for a in self.generators for b in self.generators)


GOLAY_WEIGHT_DISTRIBUTION = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def _quadratic_residues(p):
    return sorted({x * x % p for x in range(1, p)})


def _gf2_row_reduce(rows):
    basis = []
    for r in rows:
        cur = r
        for b in basis:
            cur = min(cur, cur ^ b)
        if cur:
            basis.append(cur)
    basis.sort(reverse=True)
    return basis


def build_golay() -> BinaryCode:
    """Deterministic construction, fully verified before returning."""
    global _cached_code
    if _cached_code is not None:
        return _cached_code
    qr = _quadratic_residues(23)
    chi = sum(1 << r for r in qr)
    shifts = []
    for s in range(23):
        m = 0
        for i in range(23):
            if chi >> i & 1:
                m |= 1 << ((i + s) % 23)
        shifts.append(m)
    extended = [m | (m.bit_count() % 2) << INFINITY for m in shifts]
    basis = _gf2_row_reduce(extended)
    if len(basis) != 12:
        raise InternalDefectError(f"Golay basis has rank {len(basis)}, not 12")
    code = BinaryCode(LENGTH, 12, tuple(basis))
    if code.weight_distribution() != GOLAY_WEIGHT_DISTRIBUTION:
        raise InternalDefectError("Golay weight distribution is wrong")
    if not code.is_self_dual():
        raise InternalDefectError("Golay code failed the self-duality check")
    _cached_code = code
    return code


# ------------------------------------------------------------------- octads


def octad_steiner_check(code: BinaryCode, exhaustive=True):
    """Verify that the 759 octads form a Steiner system S(5, 8, 24).

    The counting identity 759 * C(8,5) = C(24,5) plus distinctness of all
    covered 5-subsets gives exact-coverage; with exhaustive=True every
    5-subset is actually enumerated and checked to appear exactly once.
    """
    octads = code.octads()
    report = {
        "octad_count": len(octads),
        "counting_identity": len(octads) * comb(8, 5) == comb(24, 5),
        "octads_through_point": None,
        "octads_through_pair": None,
        "every_5_subset_once": None,
    }
    through0 = sum(1 for o in octads if o & 1)
    through01 = sum(1 for o in octads if (o & 3) == 3)
    report["octads_through_point"] = through0
    report["octads_through_pair"] = through01
    if exhaustive:
        seen = set()
        for o in octads:
            support = [i for i in range(LENGTH) if o >> i & 1]
            for five in combinations(support, 5):
                if five in seen:
                    report["every_5_subset_once"] = False
                    return report
                seen.add(five)
        report["every_5_subset_once"] = len(seen) == comb(24, 5)
    return report


def octad_completion_table(code: BinaryCode):
    """Map each 5-subset (sorted tuple) to the support set of its octad."""
    table = {}
    for o in code.octads():
        support = tuple(i for i in range(LENGTH) if o >> i & 1)
        sset = frozenset(support)
        for five in combinations(support, 5):
            table[five] = sset
    if len(table) != comb(24, 5):
        raise InternalDefectError("octads do not cover the 5-subsets exactly once")
    return table


# ---------------------------------------------------------------- mathieu


def apply_permutation_to_word(perm: Permutation, word: int) -> int:
    out = 0
    for i in range(LENGTH):
        if word >> i & 1:
            out |= 1 << perm(i)
    return out


def is_code_automorphism(code: BinaryCode, perm: Permutation) -> bool:
    """Exhaustive check: the permuted 4096-codeword set equals itself.

    Linear-algebra shortcut intentionally avoided; this is the verifier.
    """
    words = code.codeword_set()
    return all(apply_permutation_to_word(perm, w) in words for w in words)


def psl2_23_generators():
    """x -> x+1 and x -> -1/x on the projective line over F_23."""
    shift = Permutation([(i + 1) % 23 for i in range(23)] + [INFINITY])
    images = [0] * LENGTH
    images[INFINITY] = 0
    images[0] = INFINITY
    for x in range(1, 23):
        images[x] = (-pow(x, 21, 23)) % 23
    return [shift, Permutation(images)]


def _find_extra_automorphism(code: BinaryCode, psl_group: PermGroup):
    """Deterministic octad-constrained backtracking for one automorphism
    outside the projective subgroup.

    Fixes 0,1,2,3 pointwise and sends 4 to the smallest workable point
    other than 4: the only projective element fixing 0,1,2 is the
    identity (sharp action), so whatever the search returns is new.
    """
    completion = octad_completion_table(code)
    generators = code.generators
    words = code.codeword_set()

    def search(prefix_target):
        image = dict(prefix_target)
        used = set(image.values())
        domains = {p: set(range(LENGTH)) - used
                   for p in range(LENGTH) if p not in image}

        def propagate(p, assigned_order):
            """Octad constraints from the 5-subsets completed by assigning p."""
            prior = [x for x in assigned_order if x != p]
            for four in combinations(sorted(prior), 4):
                five = tuple(sorted(four + (p,)))
                octad = completion[five]
                target_five = tuple(sorted(image[x] for x in five))
                octad_target = completion[target_five]
                for x in octad:
                    if x in image:
                        if image[x] not in octad_target:
                            return False
                    else:
                        domains[x] &= octad_target
                        if not domains[x]:
                            return False
                for x in domains:
                    if x not in octad:
                        domains[x] -= octad_target
                        if not domains[x]:
                            return False
            return True

        assigned_order = list(image)
        for p in list(image):
            if not propagate(p, assigned_order):
                return None

        def backtrack():
            if not domains:
                perm = Permutation([image[i] for i in range(LENGTH)])
                if all(apply_permutation_to_word(perm, g) in words
                       for g in generators):
                    return perm
                return None
            p = min(domains, key=lambda x: (len(domains[x]), x))
            candidates = sorted(domains[p] - set(image.values()))
            saved_domains = {x: set(d) for x, d in domains.items()}
            del domains[p]
            for v in candidates:
                image[p] = v
                assigned_order.append(p)
                for x in domains:
                    domains[x] = set(saved_domains[x]) - {v}
                if all(domains.values()) and propagate(p, assigned_order):
                    result = backtrack()
                    if result is not None:
                        return result
                assigned_order.pop()
                del image[p]
            domains[p] = saved_domains[p]
            for x in domains:
                domains[x] = saved_domains[x]
            return None

        return backtrack()

    for target4 in range(LENGTH):
        if target4 in (0, 1, 2, 3, 4):
            continue
        found = search({0: 0, 1: 1, 2: 2, 3: 3, 4: target4})
        if found is not None:
            if found in psl_group:
                raise InternalDefectError(
                    "search returned an element of the projective subgroup")
            return found
    raise InternalDefectError(
        "no code automorphism outside the projective subgroup was found; "
        "partial search state: prefixes 4 -> 5.. exhausted")


@dataclass(frozen=True)
class MathieuChain:
    group: PermGroup
    order: int
    point_stabilizer_order: int
    two_point_stabilizer_order: int
    transitivity: tuple

    def as_dict(self):
        return {
            "order": str(self.order),
            "point_stabilizer_order": str(self.point_stabilizer_order),
            "two_point_stabilizer_order": str(self.two_point_stabilizer_order),
            "transitivity": {"k": self.transitivity[0],
                             "sharp": self.transitivity[1]},
        }


def mathieu_m24(code: BinaryCode = None) -> MathieuChain:
    """M24 as verified Golay-code automorphisms, with the stabilizer orders
    |M23| and |M22| read off a chain whose base starts 0, 1."""
    global _cached_m24
    if code is None:
        code = build_golay()
        if _cached_m24 is not None:
            return _cached_m24
    psl_gens = psl2_23_generators()
    for g in psl_gens:
        if not is_code_automorphism(code, g):
            raise InternalDefectError("projective generator is not a code automorphism")
    psl = PermGroup(LENGTH, psl_gens)
    extra = _find_extra_automorphism(code, psl)
    if not is_code_automorphism(code, extra):
        raise InternalDefectError("extra generator is not a code automorphism")
    group = PermGroup(LENGTH, psl_gens + [extra], base_hint=(0, 1))
    order = group.order()
    sizes = group.basic_orbit_sizes()
    stab1 = order // sizes[0]
    stab2 = stab1 // sizes[1]
    chain = MathieuChain(
        group=group,
        order=order,
        point_stabilizer_order=stab1,
        two_point_stabilizer_order=stab2,
        transitivity=transitivity_degree(group),
    )
    if code is _cached_code:
        _cached_m24 = chain
    return chain

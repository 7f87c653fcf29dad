"""Leech-lattice minimal vectors counted from the Golay code.

Normalization: lattice vectors are integer coordinate vectors x
satisfying the code congruences below, and the minimal ("norm 4")
vectors are those with raw squared length x.x = 32 (so the normalized
squared length is x.x/8).  Membership conditions, with C the Golay code
on coordinates 0..23:

  * all coordinates share a parity m (0 or 1);
  * the set of coordinates with x_i = m + 2 (mod 4) supports a codeword;
  * sum(x_i) = 4m (mod 8).

Each minimal-vector shape is counted twice: by closed-form
combinatorics and by constrained enumeration over its support/sign
choices with the membership conditions checked literally; the two
counts must agree.  The total is the kissing number, which must also
match the q^2 coefficient of the theta series (J + 24) * Delta from the
moonshine module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InternalDefectError
from .golay import LENGTH, BinaryCode, build_golay
from .moonshine import leech_theta_prefix

KISSING_NUMBER = 196560


@dataclass(frozen=True)
class LatticeShapeCount:
    shape: str          # four_four | two_octad | three_ones
    count: int
    norm: int = 4

    def as_dict(self):
        return {"shape": self.shape, "count": self.count, "norm": self.norm}


def _is_leech_vector(x, codewords):
    """Literal check of the three congruence conditions."""
    m = x[0] % 2
    marked = (m + 2) % 4
    mask = 0
    total = 0
    for i, v in enumerate(x):
        if v % 2 != m:
            return False
        if v % 4 == marked:
            mask |= 1 << i
        total += v
    return mask in codewords and total % 8 == 4 * m % 8


def _enumerate_four_four(code):
    """Vectors (+-4, +-4, 0^22): all sign choices on all coordinate pairs."""
    codewords = code.codeword_set()
    count = 0
    for i in range(LENGTH):
        for j in range(i + 1, LENGTH):
            for si in (4, -4):
                for sj in (4, -4):
                    x = [0] * LENGTH
                    x[i], x[j] = si, sj
                    if _is_leech_vector(x, codewords):
                        count += 1
    return count


def _enumerate_two_octad(code):
    """Vectors (+-2^8, 0^16) on octad supports with even minus count."""
    codewords = code.codeword_set()
    count = 0
    for octad in code.octads():
        support = [i for i in range(LENGTH) if octad >> i & 1]
        for signs in range(256):
            x = [0] * LENGTH
            for b, i in enumerate(support):
                x[i] = -2 if signs >> b & 1 else 2
            if _is_leech_vector(x, codewords):
                count += 1
    return count


def _enumerate_three_ones(code):
    """Vectors (-+3, +-1^23): sign pattern from a codeword, one coordinate
    shifted by +-4; squared length 32 forces the shift direction."""
    codewords = code.codeword_set()
    count = 0
    for c in code.codewords():
        base = [-1 if c >> i & 1 else 1 for i in range(LENGTH)]
        for j in range(LENGTH):
            for shift in (4, -4):
                nj = base[j] + shift
                if nj * nj != 9:
                    continue      # 23 unit coordinates + nj^2 must equal 32
                x = base[:]
                x[j] = nj
                if _is_leech_vector(x, codewords):
                    count += 1
    return count


def leech_minimal_vectors(code: BinaryCode = None):
    """Census of the norm-4 vectors by coordinate shape.

    Closed forms: 4*C(24,2) for (+-4^2), 759*2^7 for (+-2^8 on octads),
    2^12*24 for (-+3, +-1^23); each verified against its enumeration.
    """
    if code is None:
        code = build_golay()
    closed = {
        "four_four": 4 * comb(LENGTH, 2),
        "two_octad": len(code.octads()) * 2 ** 7,
        "three_ones": 2 ** code.dimension * LENGTH,
    }
    enumerated = {
        "four_four": _enumerate_four_four(code),
        "two_octad": _enumerate_two_octad(code),
        "three_ones": _enumerate_three_ones(code),
    }
    if closed != enumerated:
        raise InternalDefectError(
            f"shape counts disagree: closed {closed} vs enumerated {enumerated}")
    counts = [LatticeShapeCount(shape, closed[shape])
              for shape in ("four_four", "two_octad", "three_ones")]
    if sum(c.count for c in counts) != KISSING_NUMBER:
        raise InternalDefectError("shape census does not total the kissing number")
    return counts


def kissing_number_consistency(code: BinaryCode = None):
    """The shape-census total against the theta-series q^2 coefficient."""
    counts = leech_minimal_vectors(code)
    total = sum(c.count for c in counts)
    theta = leech_theta_prefix(3)
    return {
        "census_total": total,
        "theta_norm4_coefficient": theta.coeff(2),
        "match": total == theta.coeff(2),
    }


def norm6_dodecad_lower_bound(code: BinaryCode = None):
    """Norm-6 sanity term: vectors (+-2^12, 0^12) on dodecad supports.

    The allowed sign patterns per dodecad are counted by enumerating one
    dodecad exhaustively (4096 sign choices) and multiplying by the
    dodecad count; the result must not exceed the theta N(6) coefficient.
    """
    if code is None:
        code = build_golay()
    codewords = code.codeword_set()
    dodecads = [w for w in code.codewords() if w.bit_count() == 12]
    first = dodecads[0]
    support = [i for i in range(LENGTH) if first >> i & 1]
    per_dodecad = 0
    for signs in range(4096):
        x = [0] * LENGTH
        for b, i in enumerate(support):
            x[i] = -2 if signs >> b & 1 else 2
        if _is_leech_vector(x, codewords):
            per_dodecad += 1
    theta = leech_theta_prefix(4)
    n6 = theta.coeff(3)
    bound = len(dodecads) * per_dodecad
    return {
        "dodecad_count": len(dodecads),
        "sign_patterns_per_dodecad": per_dodecad,
        "dodecad_vectors": bound,
        "theta_norm6_coefficient": n6,
        "lower_bound_holds": 0 < bound <= n6,
    }

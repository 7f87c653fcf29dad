"""Exact character tables of small finite groups.

Values are exact cyclotomic integers, stored as integer multiplicity
vectors over the roots of unity e^(2 pi i k/m), k = 0..m-1, where m is
the group exponent; equality and orthogonality reduce to integer
polynomial identities modulo the m-th cyclotomic polynomial, so no
floating point appears anywhere.

Nonabelian groups go through the class-sum matrix algebra: the class
multiplication coefficient matrices are simultaneously diagonalized
over a prime field F_l with l = 1 (mod m) and l > 2*sqrt(|G|) (the
standard sufficiency bound for unique lifting), and eigenvalues are
lifted back to root-of-unity multiplicities.  Abelian groups skip the
modular detour: a direct cyclic decomposition gives the dual group.

Table layout: columns (classes) are sorted by (element order, class
size, smallest member); rows by (degree, then value vectors in
descending lexicographic order), which puts the identical character
first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .cayley import CayleyStructure
from .errors import InternalDefectError, ResourceLimitError, ValidationError
from .perms import PermGroup, full_conjugacy_classes

CHARACTER_BOUND = 200
LIFTING_PRIME_CAP = 10 ** 6


# ---------------------------------------------------------------- cyclotomic


def cyclotomic_polynomial(m):
    """Coefficients of Phi_m, low degree first, by recursive exact division."""
    if m == 1:
        return (-1, 1)
    num = [-1] + [0] * (m - 1) + [1]          # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num = _poly_div_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_div_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1]:
            raise InternalDefectError("inexact cyclotomic division")
        q = c // den[-1]
        out[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    if any(num):
        raise InternalDefectError("nonzero remainder in cyclotomic division")
    return out


def reduce_root_vector(vec, m, phi=None):
    """Canonical form of sum_k vec[k] * zeta_m^k: the remainder modulo
    Phi_m, a tuple of euler_phi(m) integers in the power basis."""
    if phi is None:
        phi = cyclotomic_polynomial(m)
    rem = list(vec)
    deg = len(phi) - 1
    for k in range(len(rem) - 1, deg - 1, -1):
        c = rem[k]
        if c:
            for i in range(len(phi)):
                rem[k - deg + i] -= c * phi[i]
    return tuple(rem[:deg])


def _conv_mod_m(a, b, m):
    out = [0] * m
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[(i + j) % m] += ai * bj
    return out


def _conj_vector(a, m):
    out = [0] * m
    for i, ai in enumerate(a):
        out[(-i) % m] += ai
    return out


# --------------------------------------------------------------------- table


@dataclass(frozen=True)
class CharacterTable:
    degrees: tuple
    values: tuple              # r x r of length-m root multiplicity vectors
    class_sizes: tuple
    class_rep_orders: tuple
    exponent: int
    group_order: int

    def reduced(self, i, j):
        return reduce_root_vector(self.values[i][j], self.exponent)

    def as_integer_matrix(self):
        """The table as plain integers; None where a value is irrational."""
        out = []
        for row in self.values:
            out_row = []
            for vec in row:
                red = reduce_root_vector(vec, self.exponent)
                out_row.append(red[0] if all(c == 0 for c in red[1:]) else None)
            out.append(out_row)
        return out

    def check_column_orthogonality(self):
        """Exact Eq-style column relations: conjugate-weighted inner product
        of columns i and j equals |G|/|C_i| when i = j and 0 otherwise."""
        m, r = self.exponent, len(self.degrees)
        phi = cyclotomic_polynomial(m)
        for i in range(r):
            for j in range(r):
                acc = [0] * m
                for row in self.values:
                    prod = _conv_mod_m(row[i], _conj_vector(row[j], m), m)
                    acc = [a + p for a, p in zip(acc, prod)]
                red = reduce_root_vector(acc, m, phi)
                want = self.group_order // self.class_sizes[i] if i == j else 0
                if red[0] != want or any(c != 0 for c in red[1:]):
                    return False
        return True

    def to_jsonable(self):
        return {
            "group_order": str(self.group_order),
            "exponent": self.exponent,
            "root_of_unity_basis": f"e^(2*pi*i*k/{self.exponent}), k = 0..{self.exponent - 1}",
            "class_sizes": list(self.class_sizes),
            "class_rep_orders": list(self.class_rep_orders),
            "degrees": list(self.degrees),
            "values": [[list(v) for v in row] for row in self.values],
        }


def _sorted_classes(G, bound):
    classes = full_conjugacy_classes(G, bound)
    def key(block):
        rep = min(block, key=lambda g: g.images)
        return (rep.order(), len(block), rep.images)
    return sorted(classes, key=key)


def _row_sort(degrees, rows, m):
    phi = cyclotomic_polynomial(m)
    def key(pair):
        d, row = pair
        canon = tuple(reduce_root_vector(v, m, phi) for v in row)
        return (d, tuple(tuple(-c for c in vec) for vec in canon))
    paired = sorted(zip(degrees, rows), key=key)
    return tuple(p[0] for p in paired), tuple(p[1] for p in paired)


def character_table(G: PermGroup, bound=CHARACTER_BOUND) -> CharacterTable:
    n = G.order()
    if n > bound:
        raise ResourceLimitError(
            f"character tables are limited to order {bound}; group has {n}")
    classes = _sorted_classes(G, bound)
    reps = [min(block, key=lambda g: g.images) for block in classes]
    sizes = tuple(len(b) for b in classes)
    rep_orders = tuple(r.order() for r in reps)
    m = 1
    for o in rep_orders:
        m = m * o // gcd(m, o)
    if all(s == 1 for s in sizes):
        degrees, rows = _abelian_characters(G, reps, m)
    else:
        degrees, rows = _dixon_characters(G, classes, reps, sizes, m)
    degrees, rows = _row_sort(degrees, rows, m)
    table = CharacterTable(
        degrees=degrees,
        values=rows,
        class_sizes=sizes,
        class_rep_orders=rep_orders,
        exponent=m,
        group_order=n,
    )
    _verify_table(table)
    return table


def _verify_table(t: CharacterTable):
    n = t.group_order
    if sum(d * d for d in t.degrees) != n:
        raise InternalDefectError("degree squares do not sum to the order")
    ints = t.as_integer_matrix()
    if any(v != 1 for v in ints[0]):
        raise InternalDefectError("first row is not the identical character")
    first_col = [row[0] for row in t.values]
    for d, vec in zip(t.degrees, first_col):
        red = reduce_root_vector(vec, t.exponent)
        if red[0] != d or any(red[1:]):
            raise InternalDefectError("first column does not equal the degrees")
    for d in t.degrees:
        if n % d:
            raise InternalDefectError("an irrep degree fails to divide the order")
    if not t.check_column_orthogonality():
        raise InternalDefectError("column orthogonality fails")


# ----------------------------------------------------------------- abelian


def _abelian_characters(G, reps, m):
    """Dual-group table via a direct cyclic decomposition of G.

    Peels generators of maximal order; each lift is adjusted inside the
    already-built subgroup so the decomposition is direct, and the
    resulting exponent-coordinate chart is verified to be a bijection.
    """
    cs = CayleyStructure(G)
    n = cs.n

    def closure(idxs):
        return cs.subgroup_closure(idxs)

    def power(i, k):
        out = cs.identity_index
        for _ in range(k):
            out = cs.table[out][i]
        return out

    factors = []          # (element index, order of its direct factor)
    H = {cs.identity_index}
    Hgens = []
    while len(H) < n:
        best, best_ord = None, 0
        for x in range(n):
            if x in H:
                continue
            k = 1
            y = x
            while y not in H:
                y = cs.table[y][x]
                k += 1
            if k > best_ord:
                best, best_ord = x, k
        lifted = None
        for h in sorted(H):
            cand = cs.table[best][h]
            if cs.orders[cand] == best_ord:
                lifted = cand
                break
        if lifted is None:
            raise InternalDefectError("cyclic factor lift failed")
        factors.append((lifted, best_ord))
        Hgens.append(lifted)
        H = closure(Hgens)

    # coordinate chart: exponent tuples -> element, must be bijective
    coords = {}
    def assign(i, elem, expo):
        if i == len(factors):
            if elem in coords.values():
                raise InternalDefectError("abelian decomposition is not direct")
            coords[expo] = elem
            return
        g, order = factors[i]
        cur = elem
        for a in range(order):
            assign(i + 1, cur, expo + (a,))
            cur = cs.table[cur][g]
    assign(0, cs.identity_index, ())
    if len(coords) != n:
        raise InternalDefectError("abelian coordinate chart incomplete")
    elem_coord = {e: c for c, e in coords.items()}

    rep_idx = [cs.index[r.images] for r in reps]
    rows, degrees = [], []
    def dual(i, tup):
        if i == len(factors):
            row = []
            for e in rep_idx:
                expo = elem_coord[e]
                root = sum(t * a * (m // order)
                           for t, a, (_, order) in zip(tup, expo, factors)) % m
                vec = [0] * m
                vec[root] = 1
                row.append(tuple(vec))
            rows.append(tuple(row))
            degrees.append(1)
            return
        _, order = factors[i]
        for t in range(order):
            dual(i + 1, tup + (t,))
    dual(0, ())
    return tuple(degrees), tuple(rows)


# ------------------------------------------------------------------- dixon


def _dixon_characters(G, classes, reps, sizes, m):
    n = G.order()
    r = len(classes)
    ell = _lifting_prime(m, n)
    class_of = {}
    for ci, block in enumerate(classes):
        for g in block:
            class_of[g.images] = ci

    inv_class = [class_of[rep.inverse().images] for rep in reps]
    power_class = [[class_of[(rep ** t).images] for t in range(m)] for rep in reps]

    # class multiplication coefficients: a[i][j][k] with fixed target rep z_k
    mats = []
    for i in range(r):
        mat = [[0] * r for _ in range(r)]
        for k in range(r):
            zk = reps[k]
            for x in classes[i]:
                j = class_of[(x.inverse() * zk).images]
                mat[j][k] += 1
        mats.append(mat)

    spaces = [[_unit_vector(r, j) for j in range(r)]]
    for i in range(1, r):
        if all(len(s) == 1 for s in spaces):
            break
        mat = [[v % ell for v in row] for row in mats[i]]
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            new_spaces.extend(_split_space(basis, mat, ell))
        spaces = new_spaces
    if any(len(s) != 1 for s in spaces):
        raise InternalDefectError("class matrices failed to split the algebra")

    phi_m = None
    degrees, rows = [], []
    zeta = _root_of_unity(ell, m)
    zeta_pows = [pow(zeta, k, ell) for k in range(m)]
    inv_m = pow(m % ell, ell - 2, ell)
    size_inv = [pow(s % ell, ell - 2, ell) for s in sizes]
    for basis in spaces:
        v = basis[0]
        pivot = next(j for j in range(r) if v[j] % ell)
        piv_inv = pow(v[pivot], ell - 2, ell)
        omega = []
        for i in range(r):
            out = sum(mats[i][pivot][k] * v[k] for k in range(r)) % ell
            omega.append(out * piv_inv % ell)
        s = sum(omega[i] * omega[inv_class[i]] % ell * size_inv[i]
                for i in range(r)) % ell
        d2 = n % ell * pow(s, ell - 2, ell) % ell
        d = next((x for x in range(1, isqrt(n) + 1) if x * x % ell == d2), None)
        if d is None:
            raise InternalDefectError("degree recovery failed")
        chi = [d * omega[i] % ell * size_inv[i] % ell for i in range(r)]
        row = []
        for i in range(r):
            vec = [0] * m
            for k in range(m):
                c = sum(chi[power_class[i][t]] * zeta_pows[(-k * t) % m]
                        for t in range(m)) % ell
                c = c * inv_m % ell
                if c > d:
                    raise InternalDefectError("root multiplicity exceeds degree")
                vec[k] = c
            row.append(tuple(vec))
        degrees.append(d)
        rows.append(tuple(row))
    return tuple(degrees), tuple(rows)


def _unit_vector(r, j):
    v = [0] * r
    v[j] = 1
    return v


def _lifting_prime(m, n):
    """Smallest prime = 1 (mod m) exceeding 2*sqrt(n)."""
    floor = 2 * isqrt(n) + 1
    ell = m + 1
    while True:
        if ell >= floor and _is_prime_small(ell):
            return ell
        ell += m
        if ell > LIFTING_PRIME_CAP:
            raise ValidationError(
                f"no lifting prime = 1 mod {m} below {LIFTING_PRIME_CAP}")


def _is_prime_small(x):
    if x < 2:
        return False
    for d in range(2, isqrt(x) + 1):
        if x % d == 0:
            return False
    return True


def _root_of_unity(ell, m):
    if (ell - 1) % m:
        raise InternalDefectError("prime does not support the required root")
    for g in range(2, ell):
        if all(pow(g, (ell - 1) // p, ell) != 1
               for p in _prime_factors_small(ell - 1)):
            return pow(g, (ell - 1) // m, ell)
    raise InternalDefectError("no primitive root found")


def _prime_factors_small(x):
    out, d = [], 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        out.append(x)
    return out


# --------------------------------------------------- linear algebra over F_l


def _mat_vec(mat, v, ell):
    r = len(v)
    return [sum(mat[j][k] * v[k] for k in range(r)) % ell for j in range(r)]


def _split_space(basis, mat, ell):
    """Split a subspace invariant under mat into eigenspace intersections."""
    d = len(basis)
    r = len(basis[0])
    images = [_mat_vec(mat, b, ell) for b in basis]
    coords = _express_in_basis(images, basis, ell)
    if coords is None:
        raise InternalDefectError("class matrix does not preserve the subspace")
    # restricted action: column vectors; restricted[j][k] = coefficient of
    # basis j in the image of basis k
    restricted = [[coords[k][j] for k in range(d)] for j in range(d)]
    poly = _charpoly(restricted, ell)
    out = []
    for lam in range(ell):
        if _poly_eval(poly, lam, ell):
            continue
        shifted = [[(restricted[j][k] - (lam if j == k else 0)) % ell
                    for k in range(d)] for j in range(d)]
        kernel = _nullspace(shifted, ell)
        if kernel:
            vectors = []
            for coeffs in kernel:
                vec = [0] * r
                for c, b in zip(coeffs, basis):
                    if c:
                        for t in range(r):
                            vec[t] = (vec[t] + c * b[t]) % ell
                vectors.append(vec)
            out.append(vectors)
    if sum(len(v) for v in out) != d:
        raise InternalDefectError("eigenspace dimensions do not add up")
    return out


def _express_in_basis(vectors, basis, ell):
    """Coordinates of each vector in the given independent basis, or None."""
    d, r = len(basis), len(basis[0])
    rows = [list(b) + _unit_vector(d, i) for i, b in enumerate(basis)]
    # row reduce [basis | I] to express later
    pivots = []
    for i in range(d):
        col = next((c for c in range(r) if rows[i][c] % ell), None)
        if col is None:
            return None
        inv = pow(rows[i][col], ell - 2, ell)
        rows[i] = [x * inv % ell for x in rows[i]]
        for i2 in range(d):
            if i2 != i and rows[i2][col] % ell:
                f = rows[i2][col]
                rows[i2] = [(a - f * b) % ell for a, b in zip(rows[i2], rows[i])]
        pivots.append(col)
    out = []
    for v in vectors:
        v = list(v)
        coords = [0] * d
        for i, col in enumerate(pivots):
            f = v[col] % ell
            if f:
                coords_part = rows[i]
                for t in range(r):
                    v[t] = (v[t] - f * coords_part[t]) % ell
                for t in range(d):
                    coords[t] = (coords[t] + f * coords_part[r + t]) % ell
        if any(x % ell for x in v):
            return None
        out.append(coords)
    return out


def _charpoly(mat, ell):
    """Characteristic polynomial over F_ell via Hessenberg reduction."""
    d = len(mat)
    h = [row[:] for row in mat]
    for col in range(d - 2):
        piv = next((rw for rw in range(col + 1, d) if h[rw][col] % ell), None)
        if piv is None:
            continue
        if piv != col + 1:
            h[piv], h[col + 1] = h[col + 1], h[piv]
            for rw in range(d):
                h[rw][piv], h[rw][col + 1] = h[rw][col + 1], h[rw][piv]
        inv = pow(h[col + 1][col], ell - 2, ell)
        for rw in range(col + 2, d):
            f = h[rw][col] * inv % ell
            if f:
                for c in range(d):
                    h[rw][c] = (h[rw][c] - f * h[col + 1][c]) % ell
                for r2 in range(d):
                    h[r2][col + 1] = (h[r2][col + 1] + f * h[r2][rw]) % ell
    # p_k = charpoly of leading k x k Hessenberg block (as coefficient lists)
    polys = [[1]]
    for k in range(1, d + 1):
        term = [(-h[k - 1][k - 1]) % ell * c % ell for c in polys[k - 1]]
        poly = [0] + polys[k - 1][:]             # x * p_{k-1}
        poly = [(a + b) % ell for a, b in
                zip(poly, term + [0] * (len(poly) - len(term)))]
        run = 1
        for i in range(k - 1, 0, -1):
            run = run * h[i][i - 1] % ell
            coef = (-1) % ell * run % ell * h[i - 1][k - 1] % ell
            contrib = [coef * c % ell for c in polys[i - 1]]
            poly = [(a + (contrib[t] if t < len(contrib) else 0)) % ell
                    for t, a in enumerate(poly)]
        polys.append(poly)
    return polys[d]


def _poly_eval(poly, x, ell):
    out = 0
    for c in reversed(poly):
        out = (out * x + c) % ell
    return out


def _nullspace(mat, ell):
    """Basis of the kernel of mat over F_ell."""
    d = len(mat)
    rows = [row[:] for row in mat]
    pivots = {}
    rank = 0
    for col in range(d):
        piv = next((rw for rw in range(rank, d) if rows[rw][col] % ell), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], ell - 2, ell)
        rows[rank] = [x * inv % ell for x in rows[rank]]
        for rw in range(d):
            if rw != rank and rows[rw][col] % ell:
                f = rows[rw][col]
                rows[rw] = [(a - f * b) % ell for a, b in zip(rows[rw], rows[rank])]
        pivots[col] = rank
        rank += 1
    free = [c for c in range(d) if c not in pivots]
    out = []
    for fc in free:
        v = [0] * d
        v[fc] = 1
        for col, rw in pivots.items():
            v[col] = (-rows[rw][fc]) % ell
        out.append(v)
    return out

"""Complete/elementary symmetric functions, their supersymmetric analogues,
Schur and composite-Schur determinants, and split-sum identities.

All functions are exact LaurentPoly computations on explicit finite
alphabets x_1..x_m, y_1..y_n.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .combinatorics import (CompositePartition, Partition, enumerate_splits,
                            split_pairing_sign)
from .laurent import LaurentPoly


def x_vandermonde_polys(m, n, slots):
    """Binomials x_a - x_b over ordered pairs of the given 1-based x-slots."""
    slots = list(slots)
    out = []
    for ai in range(len(slots)):
        for bi in range(ai + 1, len(slots)):
            a, b = slots[ai] - 1, slots[bi] - 1
            e1 = [0] * (m + n)
            e1[a] = 2
            e2 = [0] * (m + n)
            e2[b] = 2
            out.append(LaurentPoly(m, n, {tuple(e1): 1, tuple(e2): -1}))
    return out


@lru_cache(maxsize=None)
def _h_x(m, n, r):
    """Complete symmetric function of degree r in the x-alphabet."""
    if r < 0:
        return LaurentPoly.zero(m, n)
    terms = {}
    for combo in combinations_with_replacement(range(m), r):
        e = [0] * (m + n)
        for i in combo:
            e[i] += 2
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return LaurentPoly(m, n, terms)


@lru_cache(maxsize=None)
def _e_y(m, n, r):
    """Elementary symmetric function of degree r in the y-alphabet."""
    if r < 0 or r > n:
        return LaurentPoly.zero(m, n)
    terms = {}
    for combo in combinations(range(n), r):
        e = [0] * (m + n)
        for j in combo:
            e[m + j] = 2
        terms[tuple(e)] = 1
    return LaurentPoly(m, n, terms)


@lru_cache(maxsize=None)
def _super_h(m, n, r):
    if r < 0:
        return LaurentPoly.zero(m, n)
    out = LaurentPoly.zero(m, n)
    for k in range(r + 1):
        if r - k > n:
            continue
        out = out + _h_x(m, n, k) * _e_y(m, n, r - k)
    return out


@lru_cache(maxsize=None)
def _dual_super_h(m, n, r):
    return _super_h(m, n, r).invert_variables()


@lru_cache(maxsize=None)
def _dual_h_x(m, n, r):
    return _h_x(m, n, r).invert_variables()


def poly_det(mat, m, n):
    """Determinant of a square LaurentPoly matrix by memoized cofactors.

    Entries are converted once to packed-integer exponent keys (one
    biased fixed-width field per variable) so that every monomial
    product inside the expansion is a single integer addition; a minor
    spanning d rows carries a uniform d-fold bias that is removed when
    the result is unpacked.
    """
    size = len(mat)
    if size == 0:
        return LaurentPoly.one(m, n)
    width = m + n
    bound = 0
    for row in mat:
        for entry in row:
            for e in entry.terms:
                for v in e:
                    if v > bound:
                        bound = v
                    elif -v > bound:
                        bound = -v
    from .laurent import _pack, _unpack, pack_layout, perm_sign
    shift, bias = pack_layout(bound, size)

    # expand the sparsest rows first: row i is multiplied into minors
    # spanning all later rows, so big rows are cheapest at the bottom
    order = sorted(range(size),
                   key=lambda i: sum(len(e.terms) for e in mat[i]))
    row_sign = perm_sign(tuple(order))
    pmat = [[{_pack(e, shift, bias): c for e, c in entry.terms.items()}
             for entry in mat[i]] for i in order]
    memo = {}

    def minor(row, cols):
        if row == size:
            return {0: 1}
        cached = memo.get(cols)
        if cached is not None:
            return cached
        acc = {}
        for idx, c in enumerate(cols):
            entry = pmat[row][c]
            if not entry:
                continue
            sub = minor(row + 1, cols[:idx] + cols[idx + 1:])
            sign = 1 if idx % 2 == 0 else -1
            get = acc.get
            for ka, ca in entry.items():
                cs = ca if sign == 1 else -ca
                for kb, cb in sub.items():
                    k = ka + kb
                    s = get(k, 0) + cs * cb
                    if s:
                        acc[k] = s
                    else:
                        del acc[k]
        memo[cols] = acc
        return acc

    det = minor(0, tuple(range(size)))
    terms = {}
    for k, c in det.items():
        e = _unpack(k, width, shift, size * bias)
        terms[e] = c if row_sign == 1 else -c
    if any(c.__class__ is not int for c in terms.values()):
        from .laurent import _normalize_coeff
        terms = {e: _normalize_coeff(c) for e, c in terms.items()}
        terms = {e: c for e, c in terms.items() if c}
    out = LaurentPoly(m, n)
    out.terms = terms
    return out


def composite_block_matrix(nu, mu, h_fn, dual_h_fn):
    """The block Jacobi-Trudi matrix of a composite partition.

    Size l(nu) + l(mu).  The dual block occupies the first l(nu) rows
    and columns with its row index running bottom-to-top and its column
    index right-to-left; the direct block fills the rest top-to-bottom,
    left-to-right.
    """
    q, p = nu.length, mu.length
    size = q + p
    mat = [[None] * size for _ in range(size)]
    for u in range(1, q + 1):
        s = q - u + 1
        for v in range(1, q + 1):
            t = q - v + 1
            mat[u - 1][v - 1] = dual_h_fn(nu.part(t) + s - t)
        for j in range(1, p + 1):
            mat[u - 1][q + j - 1] = h_fn(mu.part(j) - s - j + 1)
    for i in range(1, p + 1):
        for v in range(1, q + 1):
            t = q - v + 1
            mat[q + i - 1][v - 1] = dual_h_fn(nu.part(t) - i - t + 1)
        for j in range(1, p + 1):
            mat[q + i - 1][q + j - 1] = h_fn(mu.part(j) + i - j)
    return mat


class SymFuncContext:
    """Symmetric functions on fixed alphabets x_1..x_m, y_1..y_n."""

    def __init__(self, m, n):
        self.m = m
        self.n = n

    def h_classical(self, r):
        return _h_x(self.m, self.n, r)

    def e_classical(self, r):
        return _e_y(self.m, self.n, r)

    def super_h(self, r):
        return _super_h(self.m, self.n, r)

    def dual_super_h(self, r):
        return _dual_super_h(self.m, self.n, r)

    # -- classical Schur functions (x-alphabet) ------------------------

    def schur(self, lam):
        """Schur polynomial via the h-determinant."""
        size = lam.length
        mat = [[self.h_classical(lam.part(i) - i + j)
                for j in range(1, size + 1)] for i in range(1, size + 1)]
        return poly_det(mat, self.m, self.n)

    def schur_bialternant(self, lam):
        """Schur polynomial as a ratio of alternants; needs l(lam) <= m."""
        m, n = self.m, self.n
        if lam.length > m:
            raise ValueError("partition longer than the alphabet")
        parts = lam.padded(m)
        e = [0] * (m + n)
        for i in range(m):
            e[i] = 2 * (parts[i] + m - 1 - i)
        numer = LaurentPoly.monomial(m, n, tuple(e)).alternating_sum(
            [("x", tuple(range(1, m + 1)))])
        return numer.exact_divide(self._x_vandermonde_factors(range(1, m + 1)))

    def _x_vandermonde_factors(self, slots):
        return x_vandermonde_polys(self.m, self.n, slots)

    def composite_schur(self, c):
        """Composite Schur polynomial in x, by shift and by block determinant.

        The shift route multiplies a plain Schur polynomial by
        (prod x_i)^{-nu_1}; the block-determinant route uses h_r(x) and
        h_r with inverted variables.  Both are computed and must agree.
        """
        m, n = self.m, self.n
        if not c.is_standard(m):
            raise ValueError(f"{c} is not standard for m={m}")
        nu, mu = c.nu, c.mu
        if nu.length == 0:
            shift_route = self.schur(mu)
        else:
            nu1 = nu.parts[0]
            p, q = mu.length, nu.length
            lam = (tuple(mu.parts[i] + nu1 for i in range(p))
                   + (nu1,) * (m - p - q)
                   + tuple(nu1 - nu.parts[q - s] for s in range(1, q)))
            shifter = LaurentPoly.monomial(
                m, n, tuple([-2 * nu1] * m + [0] * n))
            shift_route = shifter * self.schur(Partition(lam))
        mat = composite_block_matrix(
            nu, mu,
            lambda r: _h_x(m, n, r),
            lambda r: _dual_h_x(m, n, r))
        det_route = poly_det(mat, m, n)
        assert shift_route == det_route, \
            f"composite Schur routes disagree for {c} on m={m}"
        return shift_route

    # -- supersymmetric S-functions -------------------------------------

    def super_schur(self, lam):
        size = lam.length
        mat = [[self.super_h(lam.part(i) - i + j)
                for j in range(1, size + 1)] for i in range(1, size + 1)]
        return poly_det(mat, self.m, self.n)

    def composite_super_schur(self, c):
        mat = composite_block_matrix(
            c.nu, c.mu,
            lambda r: _super_h(self.m, self.n, r),
            lambda r: _dual_super_h(self.m, self.n, r))
        return poly_det(mat, self.m, self.n)

    # -- split-sum identities --------------------------------------------

    def split_sum_classical(self, mu, nu, p, q):
        """Sum of s_{mu+q^p}(x') s_nu(x'') over splits, denominators cleared.

        x' runs over p-subsets of the alphabet, x'' the complement; the
        rational sum is assembled over the common denominator
        prod_{i<j}(x_i - x_j) and divided exactly.  Equals the Schur
        polynomial of the concatenation (mu_1..mu_p, nu_1..nu_q).
        """
        m, n = self.m, self.n
        if p + q != m:
            raise ValueError("p + q must be m")
        if mu.length > p or nu.length > q:
            raise ValueError("partition longer than its block")
        concat = mu.padded(p) + nu.padded(q)
        if any(concat[i] < concat[i + 1] for i in range(m - 1)):
            raise ValueError("concatenation is not weakly decreasing")
        mu_shift = Partition(tuple(v + q for v in mu.padded(p)))
        total = LaurentPoly.zero(m, n)
        for r, s in enumerate_splits(m, p):
            sign, _ = split_pairing_sign(r, s)
            left = SymFuncContext(p, 0).schur(mu_shift).embed(
                m, n, x_slots=r, y_slots=())
            right = SymFuncContext(q, 0).schur(nu).embed(
                m, n, x_slots=s, y_slots=())
            piece = left * right
            for f in self._x_vandermonde_factors(r):
                piece = piece * f
            for f in self._x_vandermonde_factors(s):
                piece = piece * f
            total = total + sign * piece
        return total.exact_divide(
            self._x_vandermonde_factors(range(1, m + 1)))

    def split_sum_super(self, c, q):
        """Supersymmetric split sum over (m-q)-subsets, denominators cleared.

        kappa is the first q parts of nu and eta the rest; each split
        contributes (prod x')^q s_{eta-bar;mu}(x'/y) s_{kappa-bar}(x''/y).
        Equals composite_super_schur(c).
        """
        m, n = self.m, self.n
        nu, mu = c.nu, c.mu
        if not (0 < q < m + 1 - mu.length):
            raise ValueError("need 0 < q < m + 1 - l(mu)")
        p = m - q
        kappa = Partition(nu.parts[:q])
        eta = Partition(nu.parts[q:])
        head_ctx = SymFuncContext(p, n)
        tail_ctx = SymFuncContext(q, n)
        left_base = head_ctx.composite_super_schur(
            CompositePartition(eta, mu))
        right_base = tail_ctx.composite_super_schur(
            CompositePartition(kappa, Partition()))
        y_slots = tuple(range(1, n + 1))
        total = LaurentPoly.zero(m, n)
        for r, s in enumerate_splits(m, p):
            sign, _ = split_pairing_sign(r, s)
            prefac_exp = [0] * (m + n)
            for i in r:
                prefac_exp[i - 1] = 2 * q
            piece = (LaurentPoly.monomial(m, n, tuple(prefac_exp))
                     * left_base.embed(m, n, x_slots=r, y_slots=y_slots)
                     * right_base.embed(m, n, x_slots=s, y_slots=y_slots))
            for f in self._x_vandermonde_factors(r):
                piece = piece * f
            for f in self._x_vandermonde_factors(s):
                piece = piece * f
            total = total + sign * piece
        return total.exact_divide(
            self._x_vandermonde_factors(range(1, m + 1)))

    # -- last-y-variable isolation ------------------------------------------

    def isolate_last_y(self, c):
        """Vertical-strip expansion over the last y variable.

        Returns pairs (composite partition on (m, n-1), exponent of y_n)
        such that summing s_{beta-bar;alpha}(x/y^(n-1)) * y_n^exponent
        over the pairs reproduces s_{nu-bar;mu}(x/y).
        """
        if self.n < 1:
            raise ValueError("no y variable to isolate")
        out = []
        for alpha in _vertical_strip_subs(c.mu):
            for beta in _vertical_strip_subs(c.nu):
                a = c.mu.size - alpha.size
                b = c.nu.size - beta.size
                out.append((CompositePartition(beta, alpha), a - b))
        return out


def _vertical_strip_subs(lam):
    """All partitions obtained by removing a vertical strip (0/1 per part)."""
    out = []
    parts = lam.parts
    k = len(parts)

    def rec(i, acc):
        if i == k:
            out.append(Partition(tuple(acc)))
            return
        for d in (0, 1):
            v = parts[i] - d
            if v < 0:
                continue
            if acc and v > acc[-1]:
                continue
            acc.append(v)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    return out

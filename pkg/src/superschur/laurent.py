"""Exact multivariate Laurent polynomials on a doubled exponent lattice.

A polynomial lives in variables x_1..x_m, y_1..y_n.  Exponents may be
half-integers (they arise from square roots of monomials), so every
exponent vector is stored doubled: the tuple entry 2*e, always an int.
Coefficients are exact ints or Fractions; zero coefficients are never
stored, so equality is dict equality.
"""

from __future__ import annotations

import heapq
import json
from fractions import Fraction
from itertools import permutations


class ArityMismatchError(ValueError):
    """Raised when two polynomials on different variable sets are combined."""


class NonzeroRemainder(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def order_key(exp2):
    """Graded-lexicographic key for a doubled exponent vector.

    Total degree first, then lexicographic with x-block entries before
    y-block entries.  The maximal key is the leading term used by the
    division algorithm.
    """
    return (sum(exp2), exp2)


def perm_sign(perm):
    """Sign of a permutation given in one-line form (0-based images)."""
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def _normalize_coeff(c):
    if c.__class__ is Fraction and c.denominator == 1:
        return int(c)
    return c


# Packed-integer encoding of exponent vectors used by multiplication
# and determinants: each entry goes into a fixed-width field with a
# bias so fields stay nonnegative, making the product of two monomials
# a single integer addition.  A sum of f encodings carries an f-fold
# bias, which _unpack removes.  The field width is chosen per call
# from the actual exponent bound so keys usually fit one machine word.


def pack_layout(bound, factors):
    """Field (shift, bias) wide enough for sums of `factors` encodings
    of vectors whose entries have absolute value at most `bound`."""
    bias = bound + 1
    shift = (2 * factors * bias).bit_length()
    return shift, bias


def _pack(exp2, shift, bias):
    k = 0
    for v in exp2:
        k = (k << shift) | (v + bias)
    return k


def _unpack(k, width, shift, total_bias):
    mask = (1 << shift) - 1
    out = [0] * width
    for i in range(width - 1, -1, -1):
        out[i] = (k & mask) - total_bias
        k >>= shift
    return tuple(out)


class LaurentPoly:
    """Immutable-by-convention Laurent polynomial with exact coefficients."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m, n, terms=None):
        self.m = m
        self.n = n
        clean = {}
        if terms:
            width = m + n
            for exp2, c in terms.items():
                if len(exp2) != width:
                    raise ArityMismatchError(
                        f"exponent width {len(exp2)} != {width}")
                c = _normalize_coeff(c)
                if c:
                    clean[tuple(exp2)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, m, n):
        return cls(m, n)

    @classmethod
    def one(cls, m, n):
        return cls(m, n, {(0,) * (m + n): 1})

    @classmethod
    def monomial(cls, m, n, exp2, coeff=1):
        return cls(m, n, {tuple(exp2): coeff})

    @classmethod
    def x(cls, m, n, i):
        """The variable x_i (1-based)."""
        e = [0] * (m + n)
        e[i - 1] = 2
        return cls(m, n, {tuple(e): 1})

    @classmethod
    def y(cls, m, n, j):
        """The variable y_j (1-based)."""
        e = [0] * (m + n)
        e[m + j - 1] = 2
        return cls(m, n, {tuple(e): 1})

    @classmethod
    def constant(cls, m, n, c):
        return cls(m, n, {(0,) * (m + n): c})

    # -- basic structure ---------------------------------------------

    @property
    def arity(self):
        return (self.m, self.n)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def _check_arity(self, other):
        if (self.m, self.n) != (other.m, other.n):
            raise ArityMismatchError(
                f"arity {(self.m, self.n)} vs {(other.m, other.n)}")

    def coeff(self, exp2):
        return self.terms.get(tuple(exp2), 0)

    def leading(self):
        """(exp2, coeff) of the leading term under the division order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order_key)
        return e, self.terms[e]

    def trailing(self):
        if not self.terms:
            raise ValueError("zero polynomial has no trailing term")
        e = min(self.terms, key=order_key)
        return e, self.terms[e]

    def is_integral(self):
        return all(isinstance(c, int) for c in self.terms.values())

    def total_degrees(self):
        """Set of doubled total degrees appearing in the support."""
        return {sum(e) for e in self.terms}

    # -- arithmetic ----------------------------------------------------

    def __neg__(self):
        out = LaurentPoly(self.m, self.n)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.m, self.n, other)
        self._check_arity(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = _normalize_coeff(s)
            else:
                terms.pop(e, None)
        out = LaurentPoly(self.m, self.n)
        out.terms = terms
        return out

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.m, self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly.zero(self.m, self.n)
            out = LaurentPoly(self.m, self.n)
            out.terms = {e: _normalize_coeff(c * other)
                         for e, c in self.terms.items()}
            return out
        self._check_arity(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        if not a:
            return LaurentPoly.zero(self.m, self.n)
        width = self.m + self.n
        bound = max((max(map(abs, e), default=0) for e in a), default=0) \
            + max((max(map(abs, e), default=0) for e in b), default=0)
        out = LaurentPoly(self.m, self.n)
        # pack each exponent vector into one integer with biased
        # fixed-width fields so the inner loop is a single addition
        shift, bias = pack_layout(bound, 2)
        packed = {}
        enc_b = [(_pack(eb, shift, bias), cb) for eb, cb in b.items()]
        for ea, ca in a.items():
            ka = _pack(ea, shift, bias)
            for kb, cb in enc_b:
                k = ka + kb
                s = packed.get(k, 0) + ca * cb
                if s:
                    packed[k] = s
                else:
                    del packed[k]
        ints_only = (all(c.__class__ is int for c in a.values())
                     and all(c.__class__ is int for c in b.values()))
        if ints_only:
            out.terms = {_unpack(k, width, shift, 2 * bias): c
                         for k, c in packed.items()}
        else:
            out.terms = {_unpack(k, width, shift, 2 * bias): _normalize_coeff(c)
                         for k, c in packed.items()}
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            e, c = next(iter(self.terms.items()))
            if c != 1 and c != -1:
                if Fraction(1, 1) / c * c != 1:
                    raise ValueError("coefficient not invertible")
            inv = LaurentPoly(self.m, self.n,
                              {tuple(-v for v in e): Fraction(1, 1) / c})
            return inv ** (-k)
        out = LaurentPoly.one(self.m, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base_needed = k > 1
            if base_needed:
                base = base * base
            k >>= 1
        return out

    # -- exact division ------------------------------------------------

    def exact_divide(self, divisor, max_steps=None):
        """Divide exactly by a divisor or an iterable of divisor factors.

        Raises NonzeroRemainder if any factor does not divide exactly.
        Termination is guaranteed for binomial factors by a floor check:
        every remainder monomial must stay at or above the minimal
        monomial of the dividend in the term order.
        """
        if isinstance(divisor, LaurentPoly):
            factors = [divisor]
        else:
            factors = list(divisor)
        p = self
        for d in factors:
            p = p._divide_once(d, max_steps)
        return p

    def _divide_once(self, d, max_steps=None):
        self._check_arity(d)
        if not d.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return LaurentPoly.zero(self.m, self.n)
        lead_e, lead_c = d.leading()
        rest = [(e, c) for e, c in d.terms.items() if e != lead_e]
        floor = order_key(self.trailing()[0])
        if max_steps is None:
            max_steps = 100 * len(self.terms) * max(len(d.terms), 2) + 10000

        work = dict(self.terms)
        heap = [(-sum(e), tuple(-v for v in e), e) for e in work]
        heapq.heapify(heap)
        quotient = {}
        steps = 0
        while heap:
            _, _, e = heapq.heappop(heap)
            c = work.pop(e, 0)
            if not c:
                continue
            steps += 1
            if steps > max_steps:
                raise NonzeroRemainder("division did not terminate")
            if isinstance(c, int) and isinstance(lead_c, int) and c % lead_c == 0:
                qc = c // lead_c
            else:
                qc = _normalize_coeff(Fraction(c) / lead_c)
            qe = tuple(p - q for p, q in zip(e, lead_e))
            quotient[qe] = quotient.get(qe, 0) + qc
            for be, bc in rest:
                ne = tuple(p + q for p, q in zip(qe, be))
                s = work.get(ne, 0) - qc * bc
                if s:
                    if ne not in work:
                        if order_key(ne) < floor:
                            raise NonzeroRemainder(
                                "remainder fell below the dividend support")
                        heapq.heappush(
                            heap, (-sum(ne), tuple(-v for v in ne), ne))
                    work[ne] = s
                else:
                    work.pop(ne, None)
        return LaurentPoly(self.m, self.n, quotient)

    # -- symmetry actions ----------------------------------------------

    def act_permutation(self, wx=None, wy=None):
        """Permute variables: x_i -> x_{wx[i]} and y_j -> y_{wy[j]}.

        wx and wy are one-line permutations with 0-based images; None
        means identity on that block.
        """
        m, n = self.m, self.n
        if wx is None:
            wx = tuple(range(m))
        if wy is None:
            wy = tuple(range(n))
        pos = [0] * (m + n)
        for i in range(m):
            pos[i] = wx[i]
        for j in range(n):
            pos[m + j] = m + wy[j]
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * (m + n)
            for src in range(m + n):
                ne[pos[src]] = e[src]
            terms[tuple(ne)] = c
        out = LaurentPoly(m, n)
        out.terms = terms
        return out

    def alternating_sum(self, blocks):
        """Sum of sign(w) * w(self) over products of symmetric groups.

        blocks is a sequence of ("x", indices) / ("y", indices) with
        1-based indices; each block contributes one symmetric-group
        factor permuting those variable slots.
        """
        positions = []
        for kind, idx in blocks:
            if kind == "x":
                positions.append(tuple(i - 1 for i in idx))
            elif kind == "y":
                positions.append(tuple(self.m + j - 1 for j in idx))
            else:
                raise ValueError(f"unknown block kind {kind!r}")
        # Canonicalize each term: sort the block entries descending.
        # Terms with a repeated entry inside a block vanish.
        canon = {}
        for e, c in self.terms.items():
            sign = 1
            ce = list(e)
            dead = False
            for pos in positions:
                vals = [e[p] for p in pos]
                s, svals = _sort_desc_sign(vals)
                if s == 0:
                    dead = True
                    break
                sign *= s
                for p, v in zip(pos, svals):
                    ce[p] = v
            if dead:
                continue
            key = tuple(ce)
            s = canon.get(key, 0) + sign * c
            if s:
                canon[key] = s
            else:
                del canon[key]
        # Expand each canonical class over the full group.
        terms = {}
        for e, c in canon.items():
            for ne, sign in _expand_class(e, positions):
                s = terms.get(ne, 0) + sign * c
                if s:
                    terms[ne] = s
                else:
                    del terms[ne]
        out = LaurentPoly(self.m, self.n)
        out.terms = {e: _normalize_coeff(c) for e, c in terms.items()}
        return out

    def invert_variables(self):
        """Substitute every variable by its inverse."""
        out = LaurentPoly(self.m, self.n)
        out.terms = {tuple(-v for v in e): c for e, c in self.terms.items()}
        return out

    def embed(self, m, n, x_slots=None, y_slots=None):
        """Reinterpret in a larger alphabet.

        x_slots / y_slots give 1-based target positions for the current
        variables; defaults keep positions fixed.
        """
        if x_slots is None:
            x_slots = tuple(range(1, self.m + 1))
        if y_slots is None:
            y_slots = tuple(range(1, self.n + 1))
        if len(x_slots) != self.m or len(y_slots) != self.n:
            raise ArityMismatchError("slot count mismatch")
        if len(set(x_slots)) != self.m or len(set(y_slots)) != self.n:
            raise ValueError("target slots must be distinct")
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * (m + n)
            for i, slot in enumerate(x_slots):
                ne[slot - 1] = e[i]
            for j, slot in enumerate(y_slots):
                ne[m + slot - 1] = e[self.m + j]
            terms[tuple(ne)] = c
        out = LaurentPoly(m, n)
        out.terms = terms
        return out

    # -- evaluation ------------------------------------------------------

    def evaluate(self, xs, ys):
        """Evaluate at nonzero rationals.  Requires integer exponents."""
        if len(xs) != self.m or len(ys) != self.n:
            raise ArityMismatchError("wrong number of evaluation points")
        vals = [Fraction(v) for v in xs] + [Fraction(v) for v in ys]
        if any(v == 0 for v in vals):
            raise ZeroDivisionError("evaluation point must be nonzero")
        total = Fraction(0)
        for e, c in self.terms.items():
            prod = Fraction(c)
            for v, d in zip(vals, e):
                if d % 2:
                    raise ValueError("half-integer exponent cannot be evaluated")
                prod *= v ** (d // 2)
            total += prod
        return _normalize_coeff(total)

    def sum_of_coefficients(self):
        total = sum(self.terms.values())
        return _normalize_coeff(total) if total else 0

    # -- serialization and display ----------------------------------------

    def sorted_terms(self):
        """Terms sorted descending by the division term order."""
        return sorted(self.terms.items(), key=lambda t: order_key(t[0]),
                      reverse=True)

    def to_json_dict(self):
        return {
            "arity": [self.m, self.n],
            "terms": [{"exp2": list(e), "coeff": str(c)}
                      for e, c in self.sorted_terms()],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data):
        m, n = data["arity"]
        terms = {}
        for t in data["terms"]:
            terms[tuple(t["exp2"])] = Fraction(t["coeff"])
        return cls(m, n, terms)

    @classmethod
    def from_json(cls, s):
        return cls.from_json_dict(json.loads(s))

    def __str__(self):
        if not self.terms:
            return "0"
        names = [f"x{i+1}" for i in range(self.m)] + \
                [f"y{j+1}" for j in range(self.n)]
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, d in zip(names, e):
                if d == 0:
                    continue
                if d == 2:
                    factors.append(name)
                elif d % 2 == 0:
                    factors.append(f"{name}^{d // 2}")
                else:
                    factors.append(f"{name}^({d}/2)")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"LaurentPoly({self.m}, {self.n}, {self.terms!r})"


def _sort_desc_sign(vals):
    """Sort descending, tracking permutation sign; (0, None) on duplicates."""
    vals = list(vals)
    sign = 1
    for i in range(1, len(vals)):
        j = i
        while j > 0 and vals[j] > vals[j - 1]:
            vals[j], vals[j - 1] = vals[j - 1], vals[j]
            sign = -sign
            j -= 1
        if j > 0 and vals[j] == vals[j - 1]:
            return 0, None
    return sign, vals


def _expand_class(e, positions):
    """All signed rearrangements of e over per-block permutations."""
    results = [(list(e), 1)]
    for pos in positions:
        vals = [e[p] for p in pos]
        new_results = []
        for perm in permutations(range(len(pos))):
            s = perm_sign(perm)
            pvals = [vals[perm[i]] for i in range(len(pos))]
            for base, sign in results:
                ne = list(base)
                for p, v in zip(pos, pvals):
                    ne[p] = v
                new_results.append((ne, sign * s))
        results = new_results
    return [(tuple(ne), s) for ne, s in results]


def vandermonde_x_factors(m, n):
    """Binomial factors e^{(eps_i - eps_j)/2} - e^{-(eps_i - eps_j)/2}."""
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            e1 = [0] * (m + n)
            e1[i], e1[j] = 1, -1
            e2 = [0] * (m + n)
            e2[i], e2[j] = -1, 1
            out.append(LaurentPoly(m, n, {tuple(e1): 1, tuple(e2): -1}))
    return out


def vandermonde_y_factors(m, n):
    """Binomial factors e^{(del_i - del_j)/2} - e^{-(del_i - del_j)/2}."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            e1 = [0] * (m + n)
            e1[m + i], e1[m + j] = 1, -1
            e2 = [0] * (m + n)
            e2[m + i], e2[m + j] = -1, 1
            out.append(LaurentPoly(m, n, {tuple(e1): 1, tuple(e2): -1}))
    return out

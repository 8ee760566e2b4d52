"""Verification suites shared by the CLI and the test suite.

Each suite returns a report dict {"suite", "cases", "failures"} where
failures is a sorted list of case strings; a suite passes when the
list is empty.  Grids are walked deterministically and random suites
are driven by an explicit seed, so reports are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .characters import (lemma_rho_identities, lexical_raise_weight,
                         su_zhang_char)
from .combinatorics import CompositePartition, Partition
from .jacobi_trudi import general_char
from .laurent import LaurentPoly
from .symfunc import SymFuncContext
from .weights import (Weight, atypical_roots, normalize_general, phi,
                      phi_inverse, decompose, special_class)


@dataclass(frozen=True)
class GridSpec:
    m_max: int = 3
    n_max: int = 2
    entry_max: int = 3

    @classmethod
    def parse(cls, text):
        """Parse "m<=A,n<=B,entry<=C" (any subset, any order)."""
        spec = {}
        if text:
            for piece in text.replace(" ", "").split(","):
                if "<=" not in piece:
                    raise ValueError(f"bad grid clause {piece!r}")
                key, value = piece.split("<=", 1)
                if key not in ("m", "n", "entry"):
                    raise ValueError(f"unknown grid key {key!r}")
                spec[key] = int(value)
        return cls(spec.get("m", 3), spec.get("n", 2), spec.get("entry", 3))


def _report(suite, cases, failures):
    return {"suite": suite, "cases": cases, "failures": sorted(failures)}


def _dominant_tuples(length, bound):
    """All weakly decreasing tuples with entries in [-bound, bound]."""
    out = []
    for tup in product(range(bound, -bound - 1, -1), repeat=length):
        if all(tup[i] >= tup[i + 1] for i in range(length - 1)):
            out.append(tup)
    return out


def _partitions(max_len, max_part):
    out = [Partition()]
    def rec(prefix, cap):
        for p in range(min(cap, max_part), 0, -1):
            tup = prefix + (p,)
            out.append(Partition(tup))
            if len(tup) < max_len:
                rec(tup, p)
    rec((), max_part)
    return out


# -- suites -------------------------------------------------------------


def suite_rho(grid=None, seed=None):
    """Denominator/rho bookkeeping identities over small split shapes."""
    grid = grid or GridSpec(m_max=4, n_max=3)
    cases = 0
    failures = []
    for m in range(2, grid.m_max + 1):
        for p in range(1, m):
            q = m - p
            for n in range(1, grid.n_max + 1):
                cases += 1
                res = lemma_rho_identities(m, n, p, q)
                if not (res["a"] and res["b"]):
                    failures.append(f"m={m},n={n},p={p},q={q}")
    return _report("rho", cases, failures)


def suite_split_classical(grid=None, seed=None):
    """Split sums of Schur polynomials against the concatenated Schur."""
    grid = grid or GridSpec(m_max=4, n_max=0, entry_max=3)
    cases = 0
    failures = []
    for m in range(2, grid.m_max + 1):
        ctx = SymFuncContext(m, 0)
        for p in range(1, m):
            q = m - p
            for mu in _partitions(p, grid.entry_max):
                for nu in _partitions(q, grid.entry_max):
                    concat = mu.padded(p) + nu.padded(q)
                    if any(concat[i] < concat[i + 1] for i in range(m - 1)):
                        continue
                    cases += 1
                    lhs = ctx.split_sum_classical(mu, nu, p, q)
                    rhs = ctx.schur(Partition(concat))
                    if lhs != rhs:
                        failures.append(f"m={m},p={p},mu={mu},nu={nu}")
    return _report("split-classical", cases, failures)


def suite_split_super(grid=None, seed=None):
    """Supersymmetric split sums against the block determinant."""
    grid = grid or GridSpec(m_max=4, n_max=2, entry_max=3)
    cases = 0
    failures = []
    for m in range(2, grid.m_max + 1):
        for n in range(1, grid.n_max + 1):
            ctx = SymFuncContext(m, n)
            for mu in _partitions(m - 1, grid.entry_max):
                for nu in _partitions(m - mu.length, grid.entry_max):
                    c = CompositePartition(nu, mu)
                    if not c.is_standard(m) or not c.is_super_standard(m, n):
                        continue
                    # the cut keeps exactly the parts of size >= n in the
                    # tail factor, so the split point is determined
                    q = sum(1 for p in nu.parts if p >= n)
                    if not 1 <= q <= m - mu.length - 1:
                        continue
                    cases += 1
                    lhs = ctx.split_sum_super(c, q)
                    rhs = ctx.composite_super_schur(c)
                    if lhs != rhs:
                        failures.append(f"m={m},n={n},c={c},q={q}")
    return _report("split-super", cases, failures)


def suite_isolate_y(grid=None, seed=None):
    """Reconstruction of a composite S-function from its last-y expansion."""
    grid = grid or GridSpec(m_max=3, n_max=2, entry_max=3)
    cases = 0
    failures = []
    for m in range(1, grid.m_max + 1):
        for n in range(1, grid.n_max + 1):
            ctx = SymFuncContext(m, n)
            sub = SymFuncContext(m, n - 1)
            x_slots = tuple(range(1, m + 1))
            y_slots = tuple(range(1, n))
            for mu in _partitions(m, grid.entry_max):
                for nu in _partitions(m - mu.length, grid.entry_max):
                    c = CompositePartition(nu, mu)
                    if not c.is_standard(m) or not c.is_super_standard(m, n):
                        continue
                    cases += 1
                    total = LaurentPoly.zero(m, n)
                    for piece, y_exp in ctx.isolate_last_y(c):
                        term = sub.composite_super_schur(piece).embed(
                            m, n, x_slots=x_slots, y_slots=y_slots)
                        e = [0] * (m + n)
                        e[m + n - 1] = 2 * y_exp
                        total = total + term * LaurentPoly.monomial(
                            m, n, tuple(e))
                    if total != ctx.composite_super_schur(c):
                        failures.append(f"m={m},n={n},c={c}")
    return _report("isolate-y", cases, failures)


def suite_jt_vs_oracle(grid=None, seed=None):
    """Determinant route against the alternating-sum route, exhaustively."""
    grid = grid or GridSpec()
    cases = 0
    failures = []
    for m in range(1, grid.m_max + 1):
        for n in range(1, grid.n_max + 1):
            for alpha in _dominant_tuples(m, grid.entry_max):
                for beta in range(-grid.entry_max, grid.entry_max + 1):
                    w = Weight(m, n, alpha, (beta,) * n)
                    cases += 1
                    if general_char(w) != su_zhang_char(w):
                        failures.append(f"m={m},n={n},w={w}")
    return _report("jt-vs-oracle", cases, failures)


def brute_force_lexical_raise(v, data, slack=3):
    """All minimal lexical cone elements below v, by exhaustive search.

    Searches offset vectors relative to v up to the greedy answer plus
    slack in every slot and keeps the offset-wise minimal lexical ones.
    """
    r = data.degree
    greedy = lexical_raise_weight(v, data)
    greedy_offs = tuple(v.lam[ms - 1] - greedy.lam[ms - 1]
                        for ms, _ in data.roots)
    bound = max(greedy_offs, default=0) + slack
    found = []
    for offs in product(range(bound + 1), repeat=r):
        lam = list(v.lam)
        mu = list(v.mu)
        for i, (ms, ns) in zip(offs, data.roots):
            lam[ms - 1] -= i
            mu[ns - 1] += i
        cand = Weight(v.m, v.n, tuple(lam), tuple(mu))
        a = [cand.mu[ns - 1] - ns for _, ns in data.roots]
        if all(a[s] >= a[s + 1] for s in range(r - 1)):
            found.append(offs)
    minimal = [o for o in found
               if not any(all(p[i] <= o[i] for i in range(r)) and p != o
                          for p in found)]
    return greedy_offs, minimal


def suite_raise_oracle(grid=None, seed=None, count=500):
    """Greedy lexical raise against the brute-force cone maximum."""
    grid = grid or GridSpec(m_max=4, n_max=3, entry_max=4)
    rng = random.Random(7 if seed is None else seed)
    cases = 0
    failures = []
    while cases < count:
        m = rng.randint(1, grid.m_max)
        n = rng.randint(1, grid.n_max)
        lam = tuple(sorted((rng.randint(-grid.entry_max, grid.entry_max)
                            for _ in range(m)), reverse=True))
        mu = tuple(sorted((rng.randint(-grid.entry_max, grid.entry_max)
                           for _ in range(n)), reverse=True))
        w = Weight(m, n, lam, mu)
        data = atypical_roots(w)
        if data.degree == 0:
            continue
        # perturb into the cone so the raise has work to do
        offs = tuple(rng.randint(0, 2) for _ in range(data.degree))
        lam2 = list(lam)
        mu2 = list(mu)
        for i, (ms, ns) in zip(offs, data.roots):
            lam2[ms - 1] -= i
            mu2[ns - 1] += i
        v = Weight(m, n, tuple(lam2), tuple(mu2))
        cases += 1
        greedy_offs, minimal = brute_force_lexical_raise(v, data)
        if len(minimal) != 1 or minimal[0] != greedy_offs:
            failures.append(f"m={m},n={n},v={v}")
    return _report("raise-oracle", cases, failures)


def suite_phi_roundtrip(grid=None, seed=None):
    """Bijection roundtrip, shift uniqueness, and head/tail reassembly."""
    grid = grid or GridSpec()
    cases = 0
    failures = []
    for m in range(1, grid.m_max + 1):
        for n in range(1, grid.n_max + 1):
            for alpha in _dominant_tuples(m, grid.entry_max):
                for beta in range(-grid.entry_max, grid.entry_max + 1):
                    w = Weight(m, n, alpha, (beta,) * n)
                    cases += 1
                    tag = f"m={m},n={n},w={w}"
                    try:
                        j, sc = normalize_general(w)
                    except ValueError:
                        failures.append(tag)
                        continue
                    c = phi(sc)
                    if phi_inverse(c, m, n).weight != sc.weight:
                        failures.append(tag)
                        continue
                    head, tail = decompose(sc)
                    ws = sc.weight
                    re_lam = head.lam + tail.lam
                    re_mu = tuple(a + b for a, b in zip(head.mu, tail.mu))
                    if re_lam != ws.lam or re_mu != ws.mu:
                        failures.append(tag)
    return _report("phi-roundtrip", cases, failures)


SUITES = {
    "rho": suite_rho,
    "split-classical": suite_split_classical,
    "split-super": suite_split_super,
    "isolate-y": suite_isolate_y,
    "jt-vs-oracle": suite_jt_vs_oracle,
    "raise-oracle": suite_raise_oracle,
    "phi-roundtrip": suite_phi_roundtrip,
}


def run_suite(name, grid=None, seed=None):
    """Run one suite by name ("all" chains every suite); list of reports."""
    if name == "all":
        return [SUITES[key](grid, seed) for key in SUITES]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return [SUITES[name](grid, seed)]

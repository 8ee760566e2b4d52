"""The determinant route to gl(m|n) characters.

Special weights with constant delta-part -k get an m x m block
determinant in supersymmetric complete functions; arbitrary constant-
delta dominant weights are handled by normalizing with the sigma-shift
and multiplying the resulting character by the matching monomial.
"""

from __future__ import annotations

from .characters import su_zhang_char, typical_constant_delta_char
from .laurent import LaurentPoly
from .symfunc import SymFuncContext, poly_det
from .weights import (Weight, has_constant_mu, normalize_to_special,
                      special_class, special_violation)


def _require_jt_input(sc):
    w, k = sc.weight, sc.k
    if w.n and any(b != -k for b in w.mu):
        raise ValueError("delta-part must be constant -k")
    return w, k


def jt_entry_indices(sc):
    """The m x m matrix of ("h" | "hbar", degree) labels.

    The dual block occupies the first k rows and columns; its row index
    s runs bottom-to-top and its column index t right-to-left, so row u
    and column v hold (s, t) = (k-u+1, k-v+1).
    """
    w, k = _require_jt_input(sc)
    m, n = w.m, w.n
    alpha = w.lam
    size = m
    mat = [[None] * size for _ in range(size)]
    for u in range(1, k + 1):
        s = k - u + 1
        for v in range(1, k + 1):
            t = k - v + 1
            mat[u - 1][v - 1] = ("hbar", n - alpha[m - t] + s - t)
        for j in range(1, m - k + 1):
            mat[u - 1][k + j - 1] = ("h", alpha[j - 1] - s - j + 1)
    for i in range(1, m - k + 1):
        for v in range(1, k + 1):
            t = k - v + 1
            mat[k + i - 1][v - 1] = ("hbar", n - alpha[m - t] - i - t + 1)
        for j in range(1, m - k + 1):
            mat[k + i - 1][k + j - 1] = ("h", alpha[j - 1] + i - j)
    return mat


def jt_matrix(sc):
    """The determinant matrix with expanded LaurentPoly entries."""
    w, _ = _require_jt_input(sc)
    ctx = SymFuncContext(w.m, w.n)
    fns = {"h": ctx.super_h, "hbar": ctx.dual_super_h}
    return [[fns[kind](r) for kind, r in row] for row in jt_entry_indices(sc)]


def jt_matrix_labels(sc):
    """String labels like "h_2" / "hbar_3" for --emit-matrix output."""
    return [[f"{kind}_{r}" for kind, r in row] for row in jt_entry_indices(sc)]


def jt_char(sc):
    """Character of a special constant-delta weight as a determinant."""
    w, _ = _require_jt_input(sc)
    return poly_det(jt_matrix(sc), w.m, w.n)


_orientation_checked = False


def _certify_orientation():
    """One-time check that the sigma-shift prefactor sign is right."""
    global _orientation_checked
    if _orientation_checked:
        return
    _orientation_checked = True
    probe = Weight(1, 1, (-1,), (0,))
    assert general_char(probe) == su_zhang_char(probe), \
        "sigma-shift orientation disagrees with the alternating-sum route"


def general_char(w, cap=None):
    """Character of any constant-delta dominant weight.

    Normalizes by the sigma-shift (w + j*sigma is special), takes the
    determinant character there, and divides by (prod x / prod y)^j.
    """
    w.require_dominant()
    if not has_constant_mu(w):
        raise ValueError("delta-part is not constant")
    j, sc = normalize_to_special(w)
    base = jt_char(sc)
    if j:
        m, n = w.m, w.n
        shift = LaurentPoly.monomial(
            m, n, tuple([-2 * j] * m + [2 * j] * n))
        base = shift * base
    _certify_orientation()
    return base


def character(w, method="jt", cap=None):
    """Dispatch a character computation by route name."""
    if method == "jt":
        return general_char(w, cap)
    if method == "suzhang":
        return su_zhang_char(w, cap)
    if method == "typical":
        return typical_constant_delta_char(w, cap)
    if method == "reduction":
        from .characters import reduction_char
        sc = special_class(w)
        if sc is None:
            raise ValueError(special_violation(w))
        return reduction_char(sc, cap)
    raise ValueError(f"unknown method {method!r}")


def dimension(w, method="jt", cap=None):
    """All-ones evaluation of the character: the module dimension."""
    return character(w, method, cap).sum_of_coefficients()


def weyl_dimension(lam):
    """Classical gl(m) Weyl dimension of a weakly decreasing tuple."""
    m = len(lam)
    num = den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den

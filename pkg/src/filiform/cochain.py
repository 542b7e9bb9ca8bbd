"""Exterior forms on the dual and the Chevalley-Eilenberg differential.

A p-form is a sparse map from strictly increasing index tuples (1-based) to
exact scalars.  The differential follows the convention

    d e^k = sum_{i<j} c_ij^k  e^i ^ e^j,

the dual of the bracket extended as a derivation; d^2 = 0 is equivalent to
the Jacobi identity.  On a graded algebra every monomial carries the weight
w(i_1) + ... + w(i_p) and d preserves it, so cohomology splits into weight
blocks H^p_(w); block-wise computation is also much faster and is the
default on graded input.

Representatives returned by :func:`cohomology` are canonical: kernel vectors
are reduced modulo the coboundary space and re-echelonized over the
lexicographic monomial order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, Subspace, Vec, kernel_basis, rref, solve_in_span
from .lie import LieAlgebra
from .scalars import as_scalar, format_rat, rat, scalar_at


class WeightsMissing(ValueError):
    pass


class NotCocycle(ValueError):
    pass


def _merge_sign(seq) -> tuple[tuple, int] | None:
    """Sort an index sequence, returning (sorted tuple, permutation sign);
    None when an index repeats (the wedge vanishes)."""
    items = list(seq)
    sign = 1
    # insertion sort, counting transpositions; p is tiny
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and items[j - 1] == items[j]:
            return None
    return tuple(items), sign


class Form:
    """Exterior form of fixed degree with exact sparse coefficients."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict | None = None):
        self.degree = int(degree)
        clean = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != self.degree:
                raise ValueError(f"monomial {idx} has wrong degree (want {degree})")
            if any(idx[t] >= idx[t + 1] for t in range(len(idx) - 1)):
                raise ValueError(f"monomial {idx} is not strictly increasing")
            c = as_scalar(c)
            if c:
                clean[idx] = c
        self.coeffs = clean

    @staticmethod
    def zero(degree: int) -> "Form":
        return Form(degree, {})

    @staticmethod
    def monomial(idx, c=1) -> "Form":
        idx = tuple(idx)
        return Form(len(idx), {idx: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Form) and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def add(self, other: "Form") -> "Form":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            s = out.get(idx, 0) + c
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
        return Form(self.degree, out)

    def sub(self, other: "Form") -> "Form":
        return self.add(other.scale(-1))

    def scale(self, c) -> "Form":
        c = as_scalar(c)
        if not c:
            return Form.zero(self.degree)
        return Form(self.degree, {idx: c * v for idx, v in self.coeffs.items()})

    def wedge(self, other: "Form") -> "Form":
        out: dict[tuple, object] = {}
        for i1, c1 in self.coeffs.items():
            for i2, c2 in other.coeffs.items():
                merged = _merge_sign(i1 + i2)
                if merged is None:
                    continue
                idx, sign = merged
                s = out.get(idx, 0) + sign * c1 * c2
                if s:
                    out[idx] = s
                else:
                    out.pop(idx, None)
        return Form(self.degree + other.degree, out)

    def weight_components(self, weights) -> dict[int, "Form"]:
        """Split into weight-homogeneous pieces; weights is 1-based per index."""
        buckets: dict[int, dict] = {}
        for idx, c in self.coeffs.items():
            w = sum(weights[i - 1] for i in idx)
            buckets.setdefault(w, {})[idx] = c
        return {w: Form(self.degree, cs) for w, cs in sorted(buckets.items())}

    def at_parameter(self, t: Fraction) -> "Form":
        return Form(self.degree, {idx: scalar_at(c, t) for idx, c in self.coeffs.items()})

    def to_pairs(self) -> list:
        return [[list(idx), format_rat(c)] for idx, c in sorted(self.coeffs.items())]

    @staticmethod
    def from_pairs(degree: int, pairs) -> "Form":
        return Form(degree, {tuple(int(i) for i in idx): rat(c) for idx, c in pairs})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for idx, c in sorted(self.coeffs.items()):
            mono = "^".join(f"e{i}" for i in idx)
            bits.append(f"({c})*{mono}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# the differential
# ---------------------------------------------------------------------------

def dual_two_forms(a: LieAlgebra) -> list[Form]:
    """de^k for k = 1..n (index k-1), using d e^k = sum c_ij^k e^i ^ e^j."""
    cache = getattr(a, "_dual_two_forms", None)
    if cache is not None:
        return cache
    out = [dict() for _ in range(a.dim)]
    for i, j, k, c in a.structure_terms():
        out[k - 1][(i, j)] = c
    forms = [Form(2, d) for d in out]
    a._dual_two_forms = forms
    return forms


def differential(a: LieAlgebra, phi: Form) -> Form:
    """Chevalley-Eilenberg differential, degree raised by one."""
    de = dual_two_forms(a)
    out: dict[tuple, object] = {}
    for idx, c in phi.coeffs.items():
        for t, i_t in enumerate(idx):
            two = de[i_t - 1]
            if not two.coeffs:
                continue
            rest = idx[:t] + idx[t + 1:]
            sgn_t = -1 if t % 2 else 1
            for pair, b in two.coeffs.items():
                merged = _merge_sign(pair + rest)
                if merged is None:
                    continue
                new_idx, sign = merged
                s = out.get(new_idx, 0) + sign * sgn_t * c * b
                if s:
                    out[new_idx] = s
                else:
                    out.pop(new_idx, None)
    return Form(phi.degree + 1, out)


def d_squared_zero(a: LieAlgebra) -> bool:
    """d(d e^k) == 0 for every k; equivalent to the Jacobi identity."""
    for k in range(1, a.dim + 1):
        if differential(a, differential(a, Form.monomial((k,)))):
            return False
    return True


# ---------------------------------------------------------------------------
# bases of the exterior algebra
# ---------------------------------------------------------------------------

def lambda_basis(n: int, p: int, weights=None, weight: int | None = None) -> list[tuple]:
    """Strictly increasing p-tuples from 1..n, lexicographically ordered;
    optionally restricted to a fixed total weight."""
    if p < 0 or p > n:
        return []
    combos = itertools.combinations(range(1, n + 1), p)
    if weight is None:
        return list(combos)
    return [idx for idx in combos if sum(weights[i - 1] for i in idx) == weight]


def monomial_weight(idx: tuple, weights) -> int:
    return sum(weights[i - 1] for i in idx)


def form_vector(phi: Form) -> Vec:
    """Form as a sparse vector keyed by its monomials (lex-comparable keys)."""
    return dict(phi.coeffs)


def vector_form(degree: int, v: Vec) -> Form:
    return Form(degree, dict(v))


def d_matrix(a: LieAlgebra, source: list[tuple], target: list[tuple]) -> Matrix:
    """Matrix of d with rows indexed by target monomials, columns by source."""
    pos = {idx: r for r, idx in enumerate(target)}
    entries = {}
    for c, idx in enumerate(source):
        img = differential(a, Form.monomial(idx))
        for m, val in img.coeffs.items():
            r = pos.get(m)
            if r is None:
                continue
            entries[(r, c)] = val
    return Matrix(len(target), len(source), entries)


# ---------------------------------------------------------------------------
# cohomology
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CohomologyBlock:
    """Canonical cocycle representatives of H^p (optionally one weight block)."""

    degree: int
    weight: int | None
    representatives: tuple
    dim: int

    def forms(self) -> list[Form]:
        return list(self.representatives)


def _block(a: LieAlgebra, p: int, weight: int | None) -> list[Form]:
    n = a.dim
    w = a.weights
    src = lambda_basis(n, p, w, weight)
    if not src:
        return []
    if p == 0:
        # constants: d = 0, no coboundaries
        return [Form(0, {(): 1})] if weight in (None, 0) else []
    tgt = lambda_basis(n, p + 1, w, weight)
    kern = kernel_basis(d_matrix(a, src, tgt))
    cocycles = [{src[c]: v for c, v in vec.items()} for vec in kern]
    below = lambda_basis(n, p - 1, w, weight)
    images = []
    for idx in below:
        img = differential(a, Form.monomial(idx))
        if img:
            images.append(form_vector(img))
    bound = Subspace.span(images)
    reduced = [bound.reduce(v) for v in cocycles]
    _, rows = rref([r for r in reduced if r])
    return [vector_form(p, r) for r in rows]


def cohomology(a: LieAlgebra, p: int, weight: int | None = None,
               blocked: bool | None = None) -> CohomologyBlock:
    """H^p(a), or its weight-lambda block when ``weight`` is given.

    On graded algebras the full space is assembled from weight blocks unless
    ``blocked=False`` forces one global elimination (used to cross-check the
    splitting).  Requesting a weight on an unweighted algebra raises
    WeightsMissing.
    """
    if not 0 <= p <= a.dim:
        raise ValueError(f"degree {p} outside 0..{a.dim}")
    if weight is not None and a.weights is None:
        raise WeightsMissing("weight restriction requires a graded algebra")
    if weight is not None or a.weights is None or blocked is False:
        reps = _block(a, p, weight)
        return CohomologyBlock(p, weight, tuple(reps), len(reps))
    reps = []
    weights_seen = sorted({monomial_weight(idx, a.weights)
                           for idx in lambda_basis(a.dim, p)}) if p else [0]
    for w in weights_seen:
        reps.extend(_block(a, p, w))
    return CohomologyBlock(p, None, tuple(reps), len(reps))


def coboundary_space(a: LieAlgebra, p: int, weight: int | None = None) -> list[Form]:
    """Basis of the degree-p coboundaries d(Lambda^{p-1}), canonical RREF."""
    if weight is not None and a.weights is None:
        raise WeightsMissing("weight restriction requires a graded algebra")
    below = lambda_basis(a.dim, p - 1, a.weights, weight)
    images = [form_vector(differential(a, Form.monomial(idx))) for idx in below]
    _, rows = rref([v for v in images if v])
    return [vector_form(p, r) for r in rows]


def is_cohomologous(a: LieAlgebra, f: Form, g: Form) -> bool:
    """Whether f - g is a coboundary; both arguments must be cocycles."""
    if f.degree != g.degree:
        raise ValueError("degree mismatch")
    for phi in (f, g):
        if differential(a, phi):
            raise NotCocycle(f"{phi!r} is not closed")
    diff = f.sub(g)
    if diff.is_zero():
        return True
    gens = [form_vector(b) for b in coboundary_space(a, f.degree)]
    return solve_in_span(form_vector(diff), gens) is not None


def betti_numbers(a: LieAlgebra, blocked: bool | None = None) -> list[int]:
    return [cohomology(a, p, blocked=blocked).dim for p in range(a.dim + 1)]

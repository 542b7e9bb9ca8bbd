"""Lie algebras with exact structure constants.

A Lie algebra of dimension n is stored through its sparse bracket table
``{(i, j): {k: c}}`` with 1-based indices and i < j, meaning
[e_i, e_j] = sum_k c * e_k; antisymmetry is implicit.  An optional weight
assignment turns it into a graded algebra ([g_a, g_b] inside g_{a+b}).

The module provides the Jacobi test, the descending central series, filiform
detection, adapted bases (chain relations [e_1, e_i] = e_{i+1} plus the
triangular bracket shape), and the two associated graded algebras: gr_C from
the central series and gr_L from the filtration attached to an adapted basis.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from .linalg import SpanSolver, Subspace, Vec, vec_add, vec_axpy, vec_scale, vec_sub
from .scalars import RatFunc, as_scalar, format_rat, rat, scalar_at

log = logging.getLogger(__name__)


class NotNilpotent(ValueError):
    pass


class NotFiliform(ValueError):
    pass


class AlphaNonzero(ValueError):
    """Even-dimensional adapted basis with nonzero antidiagonal: the
    filtration L (hence gr_L) is undefined."""


class AdaptedBasisNotFound(RuntimeError):
    pass


class LieAlgebra:
    """Immutable-by-convention Lie algebra over an exact scalar field."""

    def __init__(self, dim, brackets, weights=None, labels=None):
        self.dim = int(dim)
        table = {}
        for (i, j), comps in brackets.items():
            if not (1 <= i <= self.dim and 1 <= j <= self.dim):
                raise ValueError(f"bracket ({i},{j}) outside dimension {dim}")
            if i == j:
                continue
            if i > j:
                i, j, comps = j, i, {k: -as_scalar(c) for k, c in comps.items()}
            clean = {}
            for k, c in comps.items():
                if not 1 <= k <= self.dim:
                    raise ValueError(f"component e_{k} outside dimension {dim}")
                c = as_scalar(c)
                if c:
                    clean[k] = clean[k] + c if k in clean else c
            clean = {k: c for k, c in clean.items() if c}
            if clean:
                merged = vec_add(table.pop((i, j), {}), clean)
                if merged:
                    table[(i, j)] = merged
        self.brackets = table
        self.weights = tuple(weights) if weights is not None else None
        self.labels = tuple(labels) if labels is not None else None

    # -- basic bracket machinery --------------------------------------------

    def bracket(self, i: int, j: int) -> Vec:
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return vec_scale(self.brackets.get((j, i), {}), -1)

    def bracket_vec(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                c = a * b
                if not c:
                    continue
                for k, s in self.bracket(i, j).items():
                    t = out.get(k, 0) + c * s
                    if t:
                        out[k] = t
                    else:
                        out.pop(k, None)
        return out

    def ad_chain_length(self, x: Vec) -> int:
        """Largest m with ad(x)^m != 0."""
        current = [self.bracket_vec(x, {i: as_scalar(1)}) for i in range(1, self.dim + 1)]
        current = [v for v in current if v]
        depth = 0
        while current:
            depth += 1
            current = [w for w in (self.bracket_vec(x, v) for v in current) if w]
            if depth > self.dim:
                raise NotNilpotent("ad(x) is not nilpotent")
        return depth

    def structure_terms(self):
        for (i, j), comps in sorted(self.brackets.items()):
            for k, c in sorted(comps.items()):
                yield i, j, k, c

    # -- parameters -----------------------------------------------------------

    def at_parameter(self, t: Fraction) -> "LieAlgebra":
        """Evaluate RatFunc structure constants at a rational parameter."""
        table = {(i, j): {k: scalar_at(c, t) for k, c in comps.items()}
                 for (i, j), comps in self.brackets.items()}
        return LieAlgebra(self.dim, table, weights=self.weights, labels=self.labels)

    def is_parametric(self) -> bool:
        return any(isinstance(c, RatFunc) for _, _, _, c in self.structure_terms())

    # -- interchange format ---------------------------------------------------

    def to_dict(self) -> dict:
        brackets = []
        for (i, j), comps in sorted(self.brackets.items()):
            brackets.append([i, j, [[k, format_rat(c)] for k, c in sorted(comps.items())]])
        doc = {"dim": self.dim, "brackets": brackets}
        if self.weights is not None:
            doc["weights"] = list(self.weights)
        return doc

    @staticmethod
    def from_dict(doc: dict, check: bool = True) -> "LieAlgebra":
        """Parse the interchange JSON document; untrusted input is Jacobi-checked."""
        table = {}
        for i, j, comps in doc["brackets"]:
            table[(int(i), int(j))] = {int(k): rat(c) for k, c in comps}
        a = LieAlgebra(int(doc["dim"]), table, weights=doc.get("weights"))
        if check:
            bad = jacobi_check(a)
            if bad:
                i, j, k, defect = bad[0]
                raise ValueError(f"Jacobi identity fails at ({i},{j},{k}): defect {defect}")
        return a

    def with_weights(self, weights) -> "LieAlgebra":
        return LieAlgebra(self.dim, self.brackets, weights=weights, labels=self.labels)

    def __repr__(self) -> str:
        terms = ", ".join(
            f"[e{i},e{j}]={'+'.join(f'({c})e{k}' for k, c in sorted(comps.items()))}"
            for (i, j), comps in sorted(self.brackets.items()))
        return f"LieAlgebra(dim={self.dim}: {terms or 'abelian'})"


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, weights=[1] * n)


# ---------------------------------------------------------------------------
# Jacobi and gradings
# ---------------------------------------------------------------------------

def jacobi_check(a: LieAlgebra) -> list[tuple[int, int, int, Vec]]:
    """All triples (i<j<k) where the Jacobi identity fails, with the defect."""
    out = []
    for i, j, k in itertools.combinations(range(1, a.dim + 1), 3):
        d = a.bracket_vec(a.bracket(i, j), {k: as_scalar(1)})
        d = vec_add(d, a.bracket_vec(a.bracket(j, k), {i: as_scalar(1)}))
        d = vec_add(d, a.bracket_vec(a.bracket(k, i), {j: as_scalar(1)}))
        if d:
            out.append((i, j, k, d))
    return out


def grading_violations(a: LieAlgebra) -> list[tuple[int, int, int]]:
    """Structure terms breaking weight(k) == weight(i) + weight(j)."""
    if a.weights is None:
        raise ValueError("algebra carries no weights")
    w = a.weights
    return [(i, j, k) for i, j, k, _ in a.structure_terms()
            if w[k - 1] != w[i - 1] + w[j - 1]]


# ---------------------------------------------------------------------------
# central series, filiform detection
# ---------------------------------------------------------------------------

def central_series(a: LieAlgebra) -> list[Subspace]:
    """Descending central series C^1 = g, C^k = [g, C^{k-1}], until stationary.

    The last entry is the first stationary term (zero iff the input is
    nilpotent).
    """
    full = Subspace.span([{i: as_scalar(1)} for i in range(1, a.dim + 1)])
    series = [full]
    current = full
    while True:
        gens = []
        for i in range(1, a.dim + 1):
            for v in current.basis():
                w = a.bracket_vec({i: as_scalar(1)}, v)
                if w:
                    gens.append(w)
        nxt = Subspace.span(gens)
        series.append(nxt)
        if nxt.dim in (0, current.dim):
            return series
        current = nxt


def is_nilpotent(a: LieAlgebra) -> bool:
    return central_series(a)[-1].dim == 0


def nil_index(a: LieAlgebra) -> int:
    """Largest s with C^s != 0 (requires nilpotent input)."""
    series = central_series(a)
    if series[-1].dim != 0:
        raise NotNilpotent("central series does not reach zero")
    return len(series) - 1


def is_filiform(a: LieAlgebra) -> bool:
    series = central_series(a)
    return series[-1].dim == 0 and len(series) - 1 == a.dim - 1


def center(a: LieAlgebra) -> Subspace:
    return centralizer(a, Subspace.span([{i: as_scalar(1)} for i in range(1, a.dim + 1)]))


def _kernel_from_constraints(rows: list[Vec], columns: list) -> list[Vec]:
    """Canonical kernel basis of a constraint row system over given columns."""
    space = Subspace.span(rows)
    pivot_set = set(space.pivots)
    basis = []
    for f in columns:
        if f in pivot_set:
            continue
        v: Vec = {f: as_scalar(1)}
        for p, row in zip(space.pivots, space.rows):
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def centralizer(a: LieAlgebra, s: Subspace) -> Subspace:
    """{x in g : [x, s] = 0}, computed as the kernel of a constraint system."""
    rows = []
    for v in s.basis():
        per_output: dict[int, Vec] = {}
        for i in range(1, a.dim + 1):
            w = a.bracket_vec({i: as_scalar(1)}, v)
            for k, c in w.items():
                per_output.setdefault(k, {})[i] = c
        rows.extend(per_output.values())
    return Subspace.span(_kernel_from_constraints(rows, list(range(1, a.dim + 1))))


# ---------------------------------------------------------------------------
# base change
# ---------------------------------------------------------------------------

def change_basis(a: LieAlgebra, new_vectors: list[Vec], weights=None) -> LieAlgebra:
    """Structure constants of a in the basis given by new_vectors (old coords)."""
    n = a.dim
    if len(new_vectors) != n:
        raise ValueError("need exactly dim basis vectors")
    solver = SpanSolver(new_vectors)
    table = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            w = a.bracket_vec(new_vectors[i - 1], new_vectors[j - 1])
            if not w:
                continue
            coords = solver.solve(w)
            if coords is None:
                raise ValueError("new basis is singular or bracket escapes span")
            comps = {k + 1: c for k, c in enumerate(coords) if c}
            if comps:
                table[(i, j)] = comps
    return LieAlgebra(n, table, weights=weights)


# ---------------------------------------------------------------------------
# adapted bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AdaptedBasis:
    """Result of the adapted-basis search.

    ``vectors[i]`` is the new e_{i+1} in old coordinates; ``algebra`` is the
    bracket table rewritten in adapted coordinates; ``alpha`` is the
    antidiagonal coefficient ([e_i, e_{n+1-i}] = (-1)^i alpha e_n), always
    zero in odd dimension.
    """

    vectors: tuple
    algebra: LieAlgebra
    alpha: object


def _adapted_defects(a: LieAlgebra) -> list[tuple[int, int, int]]:
    """Structure terms violating the adapted shape."""
    n = a.dim
    bad = []
    for i, j, k, _ in a.structure_terms():
        if i == 1:
            ok = 2 <= j <= n - 1 and k == j + 1
        elif i + j <= n:
            ok = k >= i + j
        elif i + j == n + 1:
            ok = k == n
        else:
            ok = False
        if not ok:
            bad.append((i, j, k))
    return bad


def _alpha_of(a: LieAlgebra):
    """Antidiagonal coefficient of an adapted table; None if not alternating."""
    n = a.dim
    alpha = as_scalar(0)
    seen = False
    for i in range(2, n):
        j = n + 1 - i
        if i >= j:
            break
        c = a.bracket(i, j).get(n, as_scalar(0))
        val = c if i % 2 == 0 else -c
        if not seen:
            alpha, seen = val, True
        elif alpha != val:
            return None
    return alpha


def _e1_candidates(a: LieAlgebra, c2: Subspace):
    """Deterministic sweep: basis vectors outside C^2, then +-pairwise sums,
    then height-2 combinations (escalation is logged)."""
    singles = [i for i in range(1, a.dim + 1) if not c2.contains({i: as_scalar(1)})]
    for i in singles:
        yield {i: as_scalar(1)}
    for i, j in itertools.combinations(singles, 2):
        yield {i: as_scalar(1), j: as_scalar(1)}
        yield {i: as_scalar(1), j: as_scalar(-1)}
    log.debug("adapted basis: escalating e_1 search to coefficient height 2")
    for i, j in itertools.combinations(singles, 2):
        for ci, cj in ((1, 2), (2, 1), (1, -2), (2, -1)):
            yield {i: as_scalar(ci), j: as_scalar(cj)}


def adapted_basis(a: LieAlgebra) -> AdaptedBasis:
    """Base change to an adapted basis: [e_1, e_i] = e_{i+1} for i = 2..n-1
    and a bracket table lower-triangular in the index sum, with the
    alternating antidiagonal in even dimension.

    e_1 is the first candidate of a deterministic sweep whose adjoint map has
    a length-(n-2) chain; e_2 is preferred inside the centralizer of C^{n-2},
    which produces the alpha = 0 normal form whenever the algebra admits one,
    with a bounded fallback sweep otherwise.
    """
    n = a.dim
    if not is_filiform(a):
        raise NotFiliform(f"nil-index != dim-1 for dim {n}")
    if n <= 2:
        vecs = [{i: as_scalar(1)} for i in range(1, n + 1)]
        return AdaptedBasis(tuple(vecs), a, as_scalar(0))
    series = central_series(a)
    c2 = series[1]

    t_space = centralizer(a, series[n - 3]) if n >= 4 else center(a)
    e2_pool: list[Vec] = [v for v in t_space.basis() if not c2.contains(v)]
    for v in list(e2_pool):
        for b in c2.basis():
            e2_pool.append(vec_add(v, b))
            e2_pool.append(vec_sub(v, b))
    for i in range(1, n + 1):
        v = {i: as_scalar(1)}
        if not c2.contains(v):
            e2_pool.append(v)

    seen_generator = False
    for e1 in _e1_candidates(a, c2):
        if a.ad_chain_length(e1) < n - 2:
            continue
        seen_generator = True
        for e2 in e2_pool:
            got = _try_chain(a, e1, e2)
            if got is not None:
                return got
    if not seen_generator:
        raise AdaptedBasisNotFound("no generator with a full adjoint chain found")
    raise AdaptedBasisNotFound("bounded search for (e_1, e_2) exhausted")


def _try_chain(a: LieAlgebra, e1: Vec, e2: Vec) -> AdaptedBasis | None:
    n = a.dim
    vecs = [e1, e2]
    for _ in range(n - 2):
        nxt = a.bracket_vec(e1, vecs[-1])
        if not nxt:
            return None
        vecs.append(nxt)
    if Subspace.span(vecs).dim != n:
        return None
    adapted = change_basis(a, vecs)
    if _adapted_defects(adapted):
        return None
    alpha = _alpha_of(adapted)
    if alpha is None or (n % 2 == 1 and alpha):
        return None
    return AdaptedBasis(tuple(vecs), adapted, alpha)


def vergne_class(a: LieAlgebra) -> str:
    """'m0' or 'm1': which graded algebra gr_C of this filiform algebra is.

    gr_C is of m1 type exactly when no adapted basis reaches alpha = 0; the
    adapted-basis search prefers alpha = 0, so its result decides.
    """
    return "m1" if adapted_basis(a).alpha else "m0"


# ---------------------------------------------------------------------------
# associated graded algebras
# ---------------------------------------------------------------------------

def gr_c(a: LieAlgebra) -> LieAlgebra:
    """Graded algebra on the central-series quotients C^k / C^{k+1}.

    Basis: canonical quotient representatives, level by level; a new basis
    vector coming from level k gets weight k.
    """
    series = central_series(a)
    if series[-1].dim != 0:
        raise NotNilpotent("gr_C needs a nilpotent algebra")
    reps: list[Vec] = []
    weights: list[int] = []
    slices: dict[int, tuple[int, int]] = {}
    for k in range(len(series) - 1):
        level_reps = series[k].quotient_representatives(series[k + 1])
        slices[k + 1] = (len(reps), len(reps) + len(level_reps))
        reps.extend(level_reps)
        weights.extend([k + 1] * len(level_reps))
    solvers: dict[int, SpanSolver] = {}
    for lvl, (lo, hi) in slices.items():
        tail = series[lvl].basis() if lvl < len(series) else []
        solvers[lvl] = SpanSolver([reps[t] for t in range(lo, hi)] + tail)
    table = {}
    n = len(reps)
    for i in range(n):
        for j in range(i + 1, n):
            wsum = weights[i] + weights[j]
            if wsum not in slices:
                continue
            w = a.bracket_vec(reps[i], reps[j])
            if not w:
                continue
            lo, hi = slices[wsum]
            coeffs = solvers[wsum].solve(w)
            if coeffs is None:
                raise AssertionError("bracket escaped its central-series level")
            comps = {lo + t + 1: coeffs[t] for t in range(hi - lo) if coeffs[t]}
            if comps:
                table[(i + 1, j + 1)] = comps
    return LieAlgebra(n, table, weights=weights)


def gr_l(a: LieAlgebra, adapted: AdaptedBasis | None = None) -> LieAlgebra:
    """Graded algebra of the filtration L: keep the leading terms c_ij^0.

    Only defined when the adapted table has alpha = 0; raises AlphaNonzero for
    even-dimensional input of m1 type.
    """
    if adapted is None:
        adapted = adapted_basis(a)
    if adapted.alpha:
        raise AlphaNonzero("antidiagonal alpha != 0: filtration L undefined")
    b = adapted.algebra
    table = {}
    for (i, j), comps in b.brackets.items():
        lead = comps.get(i + j)
        if lead:
            table[(i, j)] = {i + j: lead}
    return LieAlgebra(b.dim, table, weights=range(1, b.dim + 1))


def m0_certificate(g: LieAlgebra) -> list[Vec] | None:
    """For a graded algebra with level dims (2,1,...,1): an explicit base
    change onto the m0 chain table, or None when the algebra is of m1 type.

    Detector: m0 is the class containing a weight-1 vector that commutes with
    everything of weight >= 2.
    """
    if g.weights is None:
        raise ValueError("m0_certificate expects a gr_C-style weight assignment")
    ones = [i for i in range(1, g.dim + 1) if g.weights[i - 1] == 1]
    if len(ones) != 2:
        raise ValueError("expected a two-dimensional bottom level")
    higher = [i for i in range(1, g.dim + 1) if g.weights[i - 1] >= 2]
    rows = []
    for h in higher:
        per_output: dict[int, Vec] = {}
        for idx, one in enumerate(ones):
            w = g.bracket_vec({one: as_scalar(1)}, {h: as_scalar(1)})
            for k, c in w.items():
                per_output.setdefault(k, {})[idx] = c
        rows.extend(per_output.values())
    kernel = _kernel_from_constraints(rows, [0, 1])
    if not kernel:
        return None
    coeffs = kernel[0]
    v = {}
    for idx, c in coeffs.items():
        v = vec_axpy(v, c, {ones[idx]: as_scalar(1)})
    u = None
    for one in ones:
        cand = {one: as_scalar(1)}
        if Subspace.span([v, cand]).dim == 2:
            u = cand
            break
    if u is None:
        return None
    chain = [u, v]
    nxt = g.bracket_vec(u, v)
    for _ in range(g.dim - 2):
        if not nxt:
            return None
        chain.append(nxt)
        nxt = g.bracket_vec(u, nxt)
    if Subspace.span(chain).dim != g.dim:
        return None
    rewritten = change_basis(g, chain)
    expected = {(1, i): {i + 1: as_scalar(1)} for i in range(2, g.dim)}
    if rewritten.brackets != expected:
        return None
    return chain


# ---------------------------------------------------------------------------
# filtrations and direct sums
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Filtration:
    """Decreasing chain of subspaces F^1 >= F^2 >= ... of a Lie algebra."""

    algebra: LieAlgebra
    subspaces: tuple  # tuple[Subspace], F^1 first

    def is_compatible(self) -> bool:
        """Check [F^k, F^l] <= F^{k+l} on spanning vectors."""
        m = len(self.subspaces)

        def piece(k: int) -> Subspace:
            if k <= 0:
                return self.subspaces[0]
            if k > m:
                return Subspace.span([])
            return self.subspaces[k - 1]

        for k in range(1, m + 1):
            for l in range(k, m + 1):
                target = piece(k + l)
                for x in piece(k).basis():
                    for y in piece(l).basis():
                        if not target.contains(self.algebra.bracket_vec(x, y)):
                            return False
        return True


def central_filtration(a: LieAlgebra) -> Filtration:
    series = central_series(a)
    if series[-1].dim != 0:
        raise NotNilpotent("central filtration of a non-nilpotent algebra")
    return Filtration(a, tuple(series))


def adapted_filtration(a: LieAlgebra, adapted: AdaptedBasis | None = None) -> Filtration:
    """The filtration L^k = span(e_k, ..., e_n) of an adapted basis (alpha=0)."""
    if adapted is None:
        adapted = adapted_basis(a)
    if adapted.alpha:
        raise AlphaNonzero("antidiagonal alpha != 0: filtration L undefined")
    vs = list(adapted.vectors)
    subs = [Subspace.span(vs[k:]) for k in range(a.dim)]
    subs.append(Subspace.span([]))
    return Filtration(a, tuple(subs))


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Block-diagonal bracket table on the concatenated bases."""
    table = {}
    for (i, j), comps in a.brackets.items():
        table[(i, j)] = dict(comps)
    off = a.dim
    for (i, j), comps in b.brackets.items():
        table[(i + off, j + off)] = {k + off: c for k, c in comps.items()}
    weights = None
    if a.weights is not None and b.weights is not None:
        weights = list(a.weights) + list(b.weights)
    return LieAlgebra(a.dim + b.dim, table, weights=weights)

"""Spectral sequence of the weight filtration attached to an adapted basis.

In adapted coordinates the monomial weight w(e^{i_1}^...^e^{i_p}) = sum i_t
filters the cochain complex: F_w = span of monomials of weight <= w is
preserved by d (deformation terms only lower the weight).  The filtration
index is stored as this positive weight bound; the usual homological
indexing has p = -w and q = (cochain degree) + w, and reports translate.

Pages are computed as exact subquotients

    Z_r(w, p)  = {x in F_w L^p : dx in F_{w-r}},
    E_r(w, p)  = Z_r(w, p) / (Z_{r-1}(w-1, p) + d Z_{r-1}(w+r-1, p-1)),
    d_r:  E_r(w, p) -> E_r(w-r, p+1),

with canonical reduced representatives throughout.  E_1(w, p) is the
weight-w cohomology of the associated graded algebra and the block totals
per cochain degree decrease to the Betti numbers of the filtered algebra.

The survival question for the symplectic corner block (w = 2k+1, degree 2)
is decided exactly: a top-weight class survives to the last page iff it is
the leading term of a genuinely closed 2-form, and such a closed form with
symplectic leading term is itself symplectic (the top power only sees the
leading weight).
"""

from __future__ import annotations

from dataclasses import dataclass
from .cochain import Form, cohomology, differential, lambda_basis
from .lie import AdaptedBasis, LieAlgebra, adapted_basis
from .linalg import Matrix, SpanSolver, Subspace, kernel_basis


class FiltrationUndefined(ValueError):
    pass


@dataclass(frozen=True)
class SpectralPage:
    """One page: canonical block representatives and the induced d_r."""

    r: int
    blocks: dict  # {(w, degree): tuple[Form]}
    differentials: dict  # {(w, degree): Matrix to block (w - r, degree + 1)}

    def block_dims(self) -> dict:
        return {key: len(reps) for key, reps in self.blocks.items() if reps}

    def paper_block_dims(self) -> dict:
        """Dimensions in the homological indexing E^{p,q}, p = -w, q = deg + w."""
        return {(-w, deg + w): len(reps)
                for (w, deg), reps in self.blocks.items() if reps}

    def total_dims(self) -> dict:
        out: dict[int, int] = {}
        for (w, deg), reps in self.blocks.items():
            out[deg] = out.get(deg, 0) + len(reps)
        return {deg: d for deg, d in sorted(out.items()) if d}


class _PageComputer:
    """Caches bases, differentials and Z-spaces for one filtered complex."""

    def __init__(self, algebra: LieAlgebra):
        self.algebra = algebra
        n = algebra.dim
        self.n = n
        self.bases: dict[int, list[tuple]] = {}
        self.weights: dict[int, list[int]] = {}
        for p in range(n + 2):
            basis = sorted(lambda_basis(n, p), key=lambda idx: (sum(idx), idx))
            self.bases[p] = basis
            self.weights[p] = [sum(idx) for idx in basis]
        self._d_image: dict[tuple, Form] = {}
        self._z_cache: dict[tuple, list] = {}

    def d_of(self, idx: tuple) -> Form:
        out = self._d_image.get(idx)
        if out is None:
            out = differential(self.algebra, Form.monomial(idx))
            self._d_image[idx] = out
        return out

    def weight_levels(self, p: int) -> list[int]:
        return sorted(set(self.weights[p]))

    def z_vectors(self, r: int, w: int, p: int) -> list[dict]:
        """Basis of Z_r(w, p) as monomial-keyed vectors."""
        if p < 0 or p > self.n:
            return []
        # dx in F_{w-r} with w - r <= 0 already means dx = 0: cap r at w
        r_eff = min(r, max(0, w))
        key = (r_eff, w, p)
        got = self._z_cache.get(key)
        if got is not None:
            return got
        src = [idx for idx, wt in zip(self.bases[p], self.weights[p]) if wt <= w]
        if not src:
            self._z_cache[key] = []
            return []
        tgt = [idx for idx, wt in zip(self.bases[p + 1], self.weights[p + 1])
               if w - r_eff < wt <= w]
        pos = {idx: i for i, idx in enumerate(tgt)}
        entries = {}
        for c, idx in enumerate(src):
            for m, val in self.d_of(idx).coeffs.items():
                row = pos.get(m)
                if row is not None:
                    entries[(row, c)] = val
        kern = kernel_basis(Matrix(len(tgt), len(src), entries))
        out = [{src[c]: v for c, v in vec.items()} for vec in kern]
        self._z_cache[key] = out
        return out

    def boundary_space(self, r: int, w: int, p: int) -> Subspace:
        """Z_{r-1}(w-1, p) + d Z_{r-1}(w+r-1, p-1)."""
        gens = list(self.z_vectors(r - 1, w - 1, p))
        for vec in self.z_vectors(r - 1, w + r - 1, p - 1):
            img: dict = {}
            for idx, c in vec.items():
                for m, val in self.d_of(idx).coeffs.items():
                    s = img.get(m, 0) + c * val
                    if s:
                        img[m] = s
                    else:
                        img.pop(m, None)
            if img:
                gens.append(img)
        return Subspace.span(gens)

    def block(self, r: int, w: int, p: int) -> tuple[list[dict], Subspace]:
        z = Subspace.span(self.z_vectors(r, w, p))
        b = self.boundary_space(r, w, p)
        return z.quotient_representatives(b), b


def build_pages(a: LieAlgebra, adapted: AdaptedBasis | None = None,
                r_max: int | None = None) -> list[SpectralPage]:
    """Pages E_1, E_2, ... of the weight filtration, with differentials.

    Stops at r_max (default 2 dim + 1) or as soon as every block total has
    converged to the corresponding Betti number, whichever comes first.
    Raises FiltrationUndefined when the adapted antidiagonal is nonzero.
    """
    if adapted is None:
        adapted = adapted_basis(a)
    if adapted.alpha:
        raise FiltrationUndefined("alpha != 0: the weight filtration is undefined")
    b = adapted.algebra
    comp = _PageComputer(b)
    betti = [cohomology(b, p, blocked=False).dim for p in range(b.dim + 1)]
    if r_max is None:
        r_max = 2 * b.dim + 1
    pages = []
    for r in range(1, r_max + 1):
        blocks = {}
        reps_vec = {}
        denoms = {}
        for p in range(b.dim + 1):
            for w in comp.weight_levels(p):
                reps, denom = comp.block(r, w, p)
                if reps:
                    blocks[(w, p)] = tuple(Form(p, dict(v)) for v in reps)
                    reps_vec[(w, p)] = reps
                    denoms[(w, p)] = denom
        diffs = {}
        for (w, p), reps in reps_vec.items():
            target = (w - r, p + 1)
            t_reps = reps_vec.get(target)
            entries = {}
            if t_reps:
                solver = SpanSolver(t_reps + denoms[target].basis())
                for c, vec in enumerate(reps):
                    img: dict = {}
                    for idx, cv in vec.items():
                        for m, val in comp.d_of(idx).coeffs.items():
                            s = img.get(m, 0) + cv * val
                            if s:
                                img[m] = s
                            else:
                                img.pop(m, None)
                    if not img:
                        continue
                    coords = solver.solve(img)
                    if coords is None:
                        raise AssertionError("d_r image escaped its target block")
                    for row in range(len(t_reps)):
                        if coords[row]:
                            entries[(row, c)] = coords[row]
            else:
                # target block is zero; record the map as zero
                for c, vec in enumerate(reps):
                    img = {}
                    for idx, cv in vec.items():
                        for m, val in comp.d_of(idx).coeffs.items():
                            s = img.get(m, 0) + cv * val
                            if s:
                                img[m] = s
                            else:
                                img.pop(m, None)
                    if img and not comp.boundary_space(r, w - r, p + 1).contains(img):
                        raise AssertionError("nonzero d_r into an empty block")
            diffs[(w, p)] = Matrix(len(t_reps) if t_reps else 0, len(reps), entries)
        page = SpectralPage(r, blocks, diffs)
        pages.append(page)
        totals = page.total_dims()
        if all(totals.get(p, 0) == betti[p] for p in range(b.dim + 1)):
            break
    return pages


# ---------------------------------------------------------------------------
# survival of the symplectic corner
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SurvivalVerdict:
    survives: bool
    lift: Form | None = None  # closed symplectic form, adapted coordinates
    surviving_dim: int = 0
    obstruction_page: int | None = None
    obstruction_source: Form | None = None
    obstruction_image: Form | None = None


def symplectic_survival(a: LieAlgebra, adapted: AdaptedBasis | None = None) -> SurvivalVerdict:
    """Does a homogeneous symplectic class of weight 2k+1 survive to E_infty?

    Because no differential ever maps into the corner block (w = 2k+1,
    degree 2), a class survives iff it is the leading term of a genuinely
    closed 2-form on the filtered algebra; the surviving subspace is
    computed directly from the closed forms and searched for a symplectic
    element.  On failure the first nonzero page differential out of the
    corner block is reported as the obstruction witness.
    """
    if a.dim % 2:
        raise ValueError("survival question needs even dimension")
    if adapted is None:
        adapted = adapted_basis(a)
    if adapted.alpha:
        raise FiltrationUndefined("alpha != 0: the weight filtration is undefined")
    b = adapted.algebra
    n = b.dim
    k = n // 2
    comp = _PageComputer(b)
    top = 2 * k + 1
    closed = comp.z_vectors(10 * n, top, 2)  # dx in F_{w - huge} means dx = 0
    k_power = k

    def leading(vec: dict) -> Form:
        return Form(2, {idx: c for idx, c in vec.items() if sum(idx) == top})

    lifts = [v for v in closed if leading(v)]
    if lifts:
        from .structures import _witness_points, wedge_power
        for point in _witness_points(len(lifts)):
            combo: dict = {}
            for c, vec in zip(point, lifts):
                for idx, val in vec.items():
                    s = combo.get(idx, 0) + c * val
                    if s:
                        combo[idx] = s
                    else:
                        combo.pop(idx, None)
            lead = leading(combo)
            if lead and not wedge_power(b, lead, k_power).is_zero():
                lift = Form(2, combo)
                if differential(b, lift) or wedge_power(b, lift, k_power).is_zero():
                    raise AssertionError("survival lift failed to verify")
                return SurvivalVerdict(True, lift, surviving_dim=len(lifts))
        # deterministic exact sweep over the surviving subspace
        sym = _symplectic_point_in_leading_span(b, lifts, leading, k_power)
        if sym is not None:
            return SurvivalVerdict(True, sym, surviving_dim=len(lifts))

    # obstructed: locate the first nonzero differential out of the corner
    pages = build_pages(a, adapted)
    for page in pages:
        reps = page.blocks.get((top, 2))
        mat = page.differentials.get((top, 2))
        if not reps or mat is None:
            continue
        if mat.entries:
            (row, col) = sorted(mat.entries)[0]
            target = page.blocks[(top - page.r, 3)]
            image = Form.zero(3)
            for (rr, cc), v in mat.entries.items():
                if cc == col:
                    image = image.add(target[rr].scale(v))
            return SurvivalVerdict(
                False, surviving_dim=len(lifts),
                obstruction_page=page.r,
                obstruction_source=reps[col],
                obstruction_image=image)
    return SurvivalVerdict(False, surviving_dim=len(lifts))


def _symplectic_point_in_leading_span(b, lifts, leading, k_power):
    from .scalars import MPoly
    from .structures import _poly_wedge_power, wedge_power
    m = len(lifts)
    acc: dict[tuple, MPoly] = {}
    for i, vec in enumerate(lifts):
        ti = MPoly.var(m, i)
        for idx, c in leading(vec).coeffs.items():
            cur = acc.get(idx, MPoly.const(m, 0))
            acc[idx] = cur + ti * MPoly.const(m, c)
    if not acc:
        return None
    power = _poly_wedge_power(acc, k_power)
    point = None
    for poly in power.values():
        point = poly.any_nonvanishing_point()
        if point:
            break
    if point is None:
        return None
    combo: dict = {}
    for c, vec in zip(point, lifts):
        for idx, val in vec.items():
            s = combo.get(idx, 0) + c * val
            if s:
                combo[idx] = s
            else:
                combo.pop(idx, None)
    lift = Form(2, combo)
    if differential(b, lift) or wedge_power(b, lift, k_power).is_zero():
        raise AssertionError("survival lift failed to verify")
    return lift


def canonical_block_representative(a: LieAlgebra, r: int, w: int, p: int,
                                   form: Form,
                                   adapted: AdaptedBasis | None = None) -> Form:
    """Canonical representative of a cochain class in the block E_r(w, p).

    The input form must lie in Z_r(w, p); it is reduced modulo the page
    denominator, which matches the normalization of the stored block
    representatives (used to compare obstruction witnesses exactly).
    """
    if adapted is None:
        adapted = adapted_basis(a)
    comp = _PageComputer(adapted.algebra)
    vec = dict(form.coeffs)
    if not Subspace.span(comp.z_vectors(r, w, p)).contains(vec):
        raise ValueError("form does not represent a class on this page")
    return Form(p, comp.boundary_space(r, w, p).reduce(vec))


def h3_weight_profile(a: LieAlgebra) -> list[int]:
    """Weights (with multiplicity) of the homogeneous generators of H^3."""
    if a.weights is None:
        raise ValueError("weight profile needs a graded algebra")
    out = []
    for w in sorted({sum(a.weights[i - 1] for i in idx) for idx in lambda_basis(a.dim, 3)}):
        out.extend([w] * cohomology(a, 3, weight=w).dim)
    return out

"""Central extensions and the classification of N-graded filiform algebras.

A 2-cocycle c on g defines the one-dimensional central extension with
bracket [(l, x), (m, y)] = (c(x, y), [x, y]); cohomologous cocycles give
equivalent extensions.  The extension of a filiform algebra is filiform
exactly when c pairs nontrivially with the central line.

For N-graded filiform algebras (weights 1..n, one line each, with
[g_1, g_i] = g_{i+1}) the graded isomorphism problem is solved by chain
normalization: fixing generators v1, v2 up to scale and propagating
v_{i+1} = [v1, v_i] turns any graded isomorphism into the scaling
e_i -> a^{i-2} b e_i, which multiplies every non-chain structure constant by
the single factor t = b / a^2.  Tables are therefore compared projectively.

The classification itself is reproduced by the inductive procedure: extend
every dimension-m class by its weight-(m+1) cocycles with a nonzero
e^1 ^ e^m component, handling the one-parameter families symbolically over
Q(alpha) and isolating the exceptional parameter values exactly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from . import catalog
from .cochain import (Form, NotCocycle, cohomology, d_matrix, differential,
                      lambda_basis)
from .lie import LieAlgebra, center, change_basis, is_filiform
from .linalg import rank_drop_candidates
from .scalars import RatFunc, as_scalar, rational_roots

log = logging.getLogger(__name__)


class CenterNotOneDimensional(ValueError):
    pass


class NotGradedFiliform(ValueError):
    pass


# ---------------------------------------------------------------------------
# central extensions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionCocycle:
    """A closed 2-form on the base algebra, checked at construction."""

    base: LieAlgebra
    cocycle: Form

    def __post_init__(self):
        if self.cocycle.degree != 2:
            raise NotCocycle("extension cocycles have degree 2")
        if differential(self.base, self.cocycle):
            raise NotCocycle("d(cocycle) != 0")


def central_extension(x: ExtensionCocycle) -> LieAlgebra:
    """The algebra K + g with [e_i, e_j] += c(e_i, e_j) e_{n+1}, e_{n+1} central."""
    base, c = x.base, x.cocycle
    n = base.dim
    table = {key: dict(val) for key, val in base.brackets.items()}
    for (i, j), v in c.coeffs.items():
        table.setdefault((i, j), {})[n + 1] = v
    weights = None
    if base.weights is not None:
        ws = {sum(base.weights[i - 1] for i in idx) for idx in c.coeffs}
        if len(ws) <= 1:
            weights = list(base.weights) + [ws.pop() if ws else max(base.weights) + 1]
    return LieAlgebra(n + 1, table, weights=weights)


def quotient_by_extension(a: LieAlgebra) -> LieAlgebra:
    """Quotient by the central line spanned by the last basis vector."""
    n = a.dim
    for i in range(1, n):
        if a.bracket(i, n):
            raise ValueError("last basis vector is not central")
    table = {}
    for (i, j), comps in a.brackets.items():
        kept = {k: c for k, c in comps.items() if k != n}
        if kept:
            table[(i, j)] = kept
    weights = a.weights[:-1] if a.weights is not None else None
    return LieAlgebra(n - 1, table, weights=weights)


def extension_cocycle_of(a: LieAlgebra) -> Form:
    """The cocycle read off the last coordinate of an extended bracket table."""
    n = a.dim
    return Form(2, {(i, j): comps[n]
                    for (i, j), comps in a.brackets.items() if n in comps and j != n})


def is_filiform_extension(x: ExtensionCocycle) -> bool:
    """Whether the extension of a filiform base is filiform again.

    Criterion: c(. , xi) is a nonzero functional, where xi spans the (one
    dimensional) center of the base.
    """
    z = center(x.base)
    if z.dim != 1:
        raise CenterNotOneDimensional(f"center has dimension {z.dim}")
    if not is_filiform(x.base):
        raise ValueError("base must be filiform")
    xi = z.basis()[0]
    c = x.cocycle.coeffs
    for a_idx in range(1, x.base.dim + 1):
        val = as_scalar(0)
        for b_idx, w in xi.items():
            if a_idx < b_idx:
                val = val + w * c.get((a_idx, b_idx), 0)
            elif a_idx > b_idx:
                val = val - w * c.get((b_idx, a_idx), 0)
        if val:
            return True
    return False


# ---------------------------------------------------------------------------
# graded isomorphism via chain normalization
# ---------------------------------------------------------------------------

def chain_constants(a: LieAlgebra) -> dict:
    """Non-chain structure constants in the chain-normalized basis.

    Requires an N-graded filiform algebra: weights are a permutation of 1..n
    with one basis line each and [g_1, g_i] = g_{i+1} for i >= 2.  Returns
    {(i, j): c} for 2 <= i < j with [e_i, e_j] = c e_{i+j}; the chain entries
    are normalized away.
    """
    n = a.dim
    if a.weights is None or sorted(a.weights) != list(range(1, n + 1)):
        raise NotGradedFiliform("need weights forming 1..n, one line each")
    pos = {w: i + 1 for i, w in enumerate(a.weights)}
    chain = [{pos[1]: as_scalar(1)}, {pos[2]: as_scalar(1)}]
    for _ in range(n - 2):
        nxt = a.bracket_vec(chain[0], chain[-1])
        if not nxt:
            raise NotGradedFiliform("[g_1, g_i] = g_{i+1} fails")
        chain.append(nxt)
    b = change_basis(a, chain, weights=range(1, n + 1))
    out = {}
    for (i, j), comps in b.brackets.items():
        if i == 1:
            continue
        if set(comps) != {i + j}:
            raise NotGradedFiliform("bracket is not weight-homogeneous")
        out[(i, j)] = comps[i + j]
    return out


def _projective_normalize(constants: dict) -> dict:
    if not constants:
        return {}
    first = min(constants)
    t = constants[first]
    return {k: v / t for k, v in constants.items()}


def graded_isomorphic(a: LieAlgebra, b: LieAlgebra) -> bool:
    """Graded isomorphism test for N-graded filiform algebras.

    Any graded isomorphism acts as e_1 -> a e_1, e_2 -> b e_2,
    e_i -> a^{i-2} b e_i, scaling all non-chain constants by the single
    factor b/a^2, so the normalized tables decide.
    """
    if a.dim != b.dim:
        return False
    return _projective_normalize(chain_constants(a)) == _projective_normalize(chain_constants(b))


def family_parameter_match(a: LieAlgebra, family: str) -> Fraction | None:
    """The alpha with a isomorphic to the named g-family member, if any.

    The families keep [e_3, e_4] = e_{7} (and its images) nonzero, so the
    invariant ratio c_23 / c_34 = 2 + alpha identifies the parameter.
    """
    try:
        ca = chain_constants(a)
    except NotGradedFiliform:
        return None
    t = ca.get((3, 4))
    if not t:
        return None
    alpha = ca.get((2, 3), Fraction(0)) / t - 2
    if isinstance(alpha, RatFunc):
        return None
    try:
        member = catalog.build(family, alpha=alpha)
    except catalog.GuardViolated:
        return None
    return alpha if graded_isomorphic(a, member) else None


_NAMED_ORDER = ("m0", "m2", "m01", "m02", "m03", "V")


def classify_graded(a: LieAlgebra) -> tuple[str, Fraction | None]:
    """Canonical (name, parameter) of an N-graded filiform algebra.

    Named sequences take precedence over the one-parameter families, so the
    overlap members (the g_{n,-2} tables, which coincide with the m_{0,i}
    towers in dimensions 7..9) report their sequence name.  V_n is a
    classification name only from dimension 12 on; below that its instances
    fold into m0, m2 or the families.
    """
    n = a.dim
    for name in _NAMED_ORDER:
        if name == "V" and n < 12:
            continue
        try:
            cand = catalog.build(name, n=n)
        except (catalog.GuardViolated, KeyError):
            continue
        if graded_isomorphic(a, cand):
            return name, None
    if 7 <= n <= 11:
        alpha = family_parameter_match(a, f"g{n}")
        if alpha is not None:
            return f"g{n}", alpha
    raise NotGradedFiliform("matches no catalog class")


# ---------------------------------------------------------------------------
# the inductive enumeration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedIsoClass:
    """One isomorphism class (or one-parameter family) of the classification."""

    name: str
    dim: int
    algebra: LieAlgebra  # symbolic over Q(alpha) for families
    parameter: object = None  # None, or "alpha" for a symbolic family
    excluded: tuple = ()  # guard values of alpha (family undefined / no class)
    overlaps: tuple = ()  # (alpha, name): family member equal to a named class

    @property
    def is_family(self) -> bool:
        return self.parameter == "alpha"

    def label(self) -> str:
        if not self.is_family:
            return f"{self.name}({self.dim})"
        guards = ", ".join(f"alpha != {g}" for g in self.excluded)
        return f"{self.name}(alpha){'; ' + guards if guards else ''}"


def _top_weight_reps(a: LieAlgebra) -> list[Form]:
    return list(cohomology(a, 2, weight=a.dim + 1).representatives)


def _filiform_split(reps: list[Form], n: int) -> tuple[Form | None, list[Form]]:
    """Split canonical representatives into the e^1^e^n-pivot one and the rest."""
    lead = [r for r in reps if (1, n) in r.coeffs]
    rest = [r for r in reps if (1, n) not in r.coeffs]
    if len(lead) > 1:
        raise AssertionError("canonical RREF should expose a single (1,n) pivot")
    return (lead[0] if lead else None), rest


def _extend_concrete(cls: GradedIsoClass) -> list[GradedIsoClass]:
    """Extensions of one concrete class: the admissible cocycles form a line
    u + beta*w (or a point), and the resulting classes are read off the line.
    """
    a = cls.algebra
    n = a.dim
    u, rest = _filiform_split(_top_weight_reps(a), n)
    if u is None:
        return []
    if not rest:
        return [_concrete_class(central_extension(ExtensionCocycle(a, u)))]
    if len(rest) > 1:
        raise AssertionError("unexpected cocycle space of dimension > 2")
    w = rest[0]

    def member(beta) -> LieAlgebra:
        return central_extension(ExtensionCocycle(a, u.add(w.scale(beta))))

    samples = [member(beta) for beta in range(4)]
    groups: list[list[int]] = []
    for i, m in enumerate(samples):
        for grp in groups:
            if graded_isomorphic(m, samples[grp[0]]):
                grp.append(i)
                break
        else:
            groups.append([i])
    if len(groups) == 1:
        return [_concrete_class(samples[0])]
    if len(groups) == 2 and sorted(map(len, groups)) == [1, 3]:
        # the line carries exactly two classes (the m0(2k) extension picture)
        return [_concrete_class(samples[grp[0]]) for grp in groups]
    if len(groups) == 4:
        return _family_from_line(a, u, w, samples)
    raise AssertionError("unexpected class pattern on the extension line")


def _family_from_line(a, u, w, samples) -> list[GradedIsoClass]:
    """A genuine one-parameter family on the line u + beta*w.

    The finitely many members with [e_3, e_4] = 0 fall outside the g-family
    parametrization and are emitted as their own (named) classes; the rest is
    the family, anchored on the catalog parameter.
    """
    n = a.dim + 1
    sym = central_extension(ExtensionCocycle(a, u.add(w.scale(RatFunc.t()))))
    cc = chain_constants(sym)
    c34 = cc.get((3, 4), as_scalar(0))
    out: list[GradedIsoClass] = []
    exceptional: set[Fraction] = set()
    if isinstance(c34, RatFunc):
        if not c34.is_zero():
            exceptional = set(rational_roots(c34.num))
    elif not c34:
        raise AssertionError("line not matching a g-family shape")
    for beta in sorted(exceptional):
        out.append(_concrete_class(
            central_extension(ExtensionCocycle(a, u.add(w.scale(beta))))))
    anchor = None
    for beta, m in enumerate(samples):
        if Fraction(beta) in exceptional:
            continue
        anchor = family_parameter_match(m, f"g{n}")
        if anchor is None:
            raise AssertionError("family member does not match the catalog")
        break
    if anchor is None:
        raise AssertionError("no regular sample on the family line")
    out.append(GradedIsoClass(f"g{n}", n, catalog.family_symbolic(f"g{n}"), "alpha",
                              tuple(sorted(_builder_guards(f"g{n}")))))
    return out


def _concrete_class(a: LieAlgebra) -> GradedIsoClass:
    name, param = classify_graded(a)
    return GradedIsoClass(name, a.dim, a, param)


def _family_top_matrix(fam: LieAlgebra):
    n = fam.dim
    src = lambda_basis(n, 2, fam.weights, n + 1)
    tgt = lambda_basis(n, 3, fam.weights, n + 1)
    return d_matrix(fam, src, tgt), src


def _extend_family(cls: GradedIsoClass) -> list[GradedIsoClass]:
    """Extensions of a symbolic family: the generic lane plus exact
    treatment of the exceptional parameter values."""
    fam = cls.algebra
    n = fam.dim
    guards = set(cls.excluded) | set(_builder_guards(cls.name))
    matrix, _ = _family_top_matrix(fam)
    candidates = set(rank_drop_candidates(matrix)) - guards

    u, _rest = _filiform_split(_top_weight_reps(fam), n)
    out: list[GradedIsoClass] = []
    new_guards = set(_builder_guards_next(cls.name, n + 1))
    if u is not None:
        # poles of the canonical representative are candidate dead values
        for c in u.coeffs.values():
            if isinstance(c, RatFunc) and c.den.degree > 0:
                candidates.update(set(rational_roots(c.den)) - guards)
        dead = set()
        for alpha in sorted(candidates):
            inst = fam.at_parameter(alpha)
            iu, _ = _filiform_split(_top_weight_reps(inst), n)
            if iu is None:
                dead.add(alpha)
        ext = catalog.family_symbolic(f"g{n + 1}")
        # the generic extension must literally be the next catalog family
        check = central_extension(ExtensionCocycle(fam, u))
        if check.brackets != ext.brackets:
            raise AssertionError("family extension deviates from the catalog table")
        out.append(GradedIsoClass(f"g{n + 1}", n + 1, ext, "alpha",
                                  tuple(sorted(dead | new_guards))))
    else:
        # generically no filiform cocycle: only exceptional values extend
        for alpha in sorted(candidates):
            inst = fam.at_parameter(alpha)
            iu, irest = _filiform_split(_top_weight_reps(inst), n)
            if iu is None:
                continue
            if irest:
                raise AssertionError("unexpected exceptional cocycle space")
            out.append(_concrete_class(central_extension(ExtensionCocycle(inst, iu))))
    return out


def _builder_guards(name: str) -> set[Fraction]:
    return {"g9": {Fraction(-5, 2)}, "g10": {Fraction(-5, 2)},
            "g11": {Fraction(-5, 2), Fraction(-1), Fraction(-3)}}.get(name, set())


def _builder_guards_next(name: str, next_dim: int) -> set[Fraction]:
    return _builder_guards(f"g{next_dim}")


def _dedupe(classes: list[GradedIsoClass]) -> list[GradedIsoClass]:
    """Merge duplicates; absorb plain family members, record coincidences.

    A concrete extension that classifies into the g-family at an ordinary
    parameter is just a point of the family (the k=3 tower keeps extending
    inside it: g_{10,-2}, g_{11,-2}); only classes carrying one of the
    sequence names stay separate, with the overlap parameter recorded on the
    family.
    """
    named: list[GradedIsoClass] = []
    families: list[GradedIsoClass] = []
    for cls in classes:
        if cls.is_family:
            if any(f.name == cls.name for f in families):
                raise AssertionError("duplicate family")
            families.append(cls)
        elif not any(c.name == cls.name and (c.parameter == cls.parameter
                                             or graded_isomorphic(c.algebra, cls.algebra))
                     for c in named):
            named.append(cls)
    if families:
        fam_names = {f.name for f in families}
        kept = []
        for c in named:
            if c.name in fam_names and c.parameter is not None \
                    and all(c.parameter not in f.excluded for f in families
                            if f.name == c.name):
                continue  # ordinary family member
            kept.append(c)
        named = kept
    merged = []
    for fam in families:
        overlaps = []
        for c in named:
            alpha = family_parameter_match(c.algebra, fam.name)
            if alpha is not None and alpha not in fam.excluded:
                overlaps.append((alpha, c.name))
        merged.append(GradedIsoClass(fam.name, fam.dim, fam.algebra, "alpha",
                                     fam.excluded, tuple(sorted(overlaps))))
    order = {n: i for i, n in enumerate(_NAMED_ORDER)}
    named.sort(key=lambda c: (order.get(c.name, 99), c.name))
    return named + merged


def enumerate_graded_filiform(n: int) -> list[GradedIsoClass]:
    """The duplicate-free list of N-graded filiform classes of dimension n.

    Inductive over the dimension: every class of dimension m is extended by
    its admissible weight-(m+1) cocycle classes (the ones with a nonzero
    e^1 ^ e^m component), one-parameter families are carried symbolically,
    and results are identified against the catalog names.
    """
    if n < 3:
        raise ValueError("filiform algebras start in dimension 3")
    level = [_concrete_class(catalog.build("m0", n=3))]
    for m in range(3, n):
        nxt: list[GradedIsoClass] = []
        for cls in level:
            nxt.extend(_extend_family(cls) if cls.is_family else _extend_concrete(cls))
        level = _dedupe(nxt)
        log.debug("dimension %d: %s", m + 1, [c.label() for c in level])
    return level

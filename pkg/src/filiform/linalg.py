"""Exact rational linear algebra.

Vectors are sparse dicts ``{column: scalar}``; matrices store a sparse
``{(row, col): scalar}`` map.  Everything is computed by exact Gaussian
elimination over the scalar field (Fraction or RatFunc), with reduced row
echelon form as the canonical shape so that kernel bases, cohomology
representatives and spectral-sequence blocks are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import as_scalar, pivot_complexity

Vec = dict  # {col: scalar}, zero entries never stored


def vec_add(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        s = v if s is None else s + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(a: Vec, c) -> Vec:
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def vec_sub(a: Vec, b: Vec) -> Vec:
    return vec_add(a, vec_scale(b, -1))


def vec_axpy(a: Vec, c, b: Vec) -> Vec:
    """a + c*b, sparse."""
    if not c:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        s = c * v if s is None else s + c * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


@dataclass(frozen=True)
class Matrix:
    """Sparse exact matrix; treated as immutable after construction."""

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)  # {(r, c): scalar}

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r},{c}) outside {self.rows}x{self.cols}")
            v = as_scalar(v)
            if v:
                clean[(r, c)] = v
        object.__setattr__(self, "entries", clean)

    @staticmethod
    def from_rows(rows: list[Vec], cols: int) -> "Matrix":
        entries = {}
        for r, row in enumerate(rows):
            for c, v in row.items():
                if v:
                    entries[(r, c)] = v
        return Matrix(len(rows), cols, entries)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, {(i, i): 1 for i in range(n)})

    def row_list(self) -> list[Vec]:
        rows = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def apply(self, v: Vec) -> Vec:
        """Matrix-vector product with a sparse column vector."""
        out: Vec = {}
        for (r, c), a in self.entries.items():
            x = v.get(c)
            if x:
                s = out.get(r, 0) + a * x
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out


def rref(rows: list[Vec]) -> tuple[list[int], list[Vec]]:
    """Reduced row echelon form of a list of sparse row vectors.

    Returns (pivot columns ascending, nonzero rows, one per pivot).  Pivot rows
    are normalized to leading coefficient 1 and fully reduced both above and
    below, so the output is the canonical basis of the row space.  Among the
    candidate rows for a pivot column the entry of smallest bit-size wins,
    which keeps intermediate fractions short without affecting the result.
    """
    work = [dict(r) for r in rows if r]
    pivots: list[int] = []
    done: list[Vec] = []
    while work:
        col = min(min(r) for r in work)
        cand = [r for r in work if col in r]
        best = min(cand, key=lambda r: pivot_complexity(r[col]))
        work.remove(best)
        inv = 1 / best[col] if best[col] != 1 else None
        if inv is not None:
            best = vec_scale(best, inv)
        best[col] = as_scalar(1)
        work = [vec_axpy(r, -r[col], best) if col in r else r for r in work]
        work = [r for r in work if r]
        done = [vec_axpy(r, -r[col], best) if col in r else r for r in done]
        pivots.append(col)
        done.append(best)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [pivots[i] for i in order], [done[i] for i in order]


def rank(m: Matrix) -> int:
    """Rank over the rationals via exact elimination."""
    return len(rref(m.row_list())[0])


def kernel_basis(m: Matrix) -> list[Vec]:
    """Canonical basis of the null space of m.

    One vector per free column, in increasing column order; the vector for
    free column f has entry 1 at f and its pivot-column entries are read off
    the RREF, so the result is itself in reduced echelon shape.
    """
    pivots, rows = rref(m.row_list())
    pivot_of_row = {p: r for p, r in zip(pivots, rows)}
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v: Vec = {f: as_scalar(1)}
        for p in pivots:
            c = pivot_of_row[p].get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


class _Aux:
    """Bookkeeping column tag; never chosen as a pivot."""

    __slots__ = ("i",)

    def __init__(self, i: int):
        self.i = i

    def __hash__(self):
        return hash(("aux", self.i))

    def __eq__(self, other):
        return isinstance(other, _Aux) and other.i == self.i


class SpanSolver:
    """Repeated exact solves against a fixed generating set."""

    def __init__(self, generators: list[Vec]):
        self.n = len(generators)
        tagged = []
        for i, g in enumerate(generators):
            row = dict(g)
            row[_Aux(i)] = as_scalar(1)
            tagged.append(row)
        _, self._rows = rref_tagged(tagged)

    def solve(self, target: Vec) -> list | None:
        residue = dict(target)
        coeffs = [as_scalar(0)] * self.n
        for row in self._rows:
            lead = min(k for k in row if not isinstance(k, _Aux))
            c = residue.get(lead)
            if c:
                residue = vec_axpy(
                    residue, -c, {k: v for k, v in row.items() if not isinstance(k, _Aux)})
                for k, v in row.items():
                    if isinstance(k, _Aux):
                        coeffs[k.i] = coeffs[k.i] + c * v
        if residue:
            return None
        return coeffs


def solve_in_span(target: Vec, generators: list[Vec]) -> list | None:
    """Exact coefficients writing target in span(generators), else None.

    The returned list c satisfies sum(c[i] * generators[i]) == target.
    """
    return SpanSolver(generators).solve(target)


def rref_tagged(rows: list[Vec]) -> tuple[list, list[Vec]]:
    """RREF that eliminates only untagged columns, carrying _Aux columns along."""

    def live(r: Vec) -> bool:
        return any(not isinstance(k, _Aux) for k in r)

    work = [dict(r) for r in rows if live(r)]
    pivots: list = []
    done: list[Vec] = []
    while work:
        col = min(min(k for k in r if not isinstance(k, _Aux)) for r in work)
        cand = [r for r in work if col in r]
        best = min(cand, key=lambda r: pivot_complexity(r[col]))
        work.remove(best)
        if best[col] != 1:
            best = vec_scale(best, 1 / best[col])
        work = [vec_axpy(r, -r[col], best) if col in r else r for r in work]
        work = [r for r in work if live(r)]
        done = [vec_axpy(r, -r[col], best) if col in r else r for r in done]
        pivots.append(col)
        done.append(best)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [pivots[i] for i in order], [done[i] for i in order]


# ---------------------------------------------------------------------------
# subspaces as canonical RREF row sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """Span of sparse vectors, held in canonical RREF form."""

    pivots: tuple
    rows: tuple  # tuple of Vec, aligned with pivots

    @staticmethod
    def span(vectors: list[Vec]) -> "Subspace":
        pivots, rows = rref(vectors)
        return Subspace(tuple(pivots), tuple(rows))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Vec) -> Vec:
        """Canonical representative of v modulo this subspace."""
        out = dict(v)
        for p, row in zip(self.pivots, self.rows):
            c = out.get(p)
            if c:
                out = vec_axpy(out, -c, row)
        return out

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def union(self, other: "Subspace") -> "Subspace":
        return Subspace.span([dict(r) for r in self.rows + other.rows])

    def basis(self) -> list[Vec]:
        return [dict(r) for r in self.rows]

    def quotient_representatives(self, sub: "Subspace") -> list[Vec]:
        """Canonical representatives of a basis of self / sub.

        Each returned vector lies in self, reduces to itself modulo sub, and
        the set is in RREF; deterministic for golden tests.
        """
        reduced = [sub.reduce(r) for r in self.rows]
        _, rows = rref([r for r in reduced if r])
        return rows


# ---------------------------------------------------------------------------
# parametric rank analysis over Q(t)
# ---------------------------------------------------------------------------

def rank_drop_candidates(m: Matrix) -> list:
    """Rational parameter values where the rank of a RatFunc matrix may drop.

    The rank is below the generic value r exactly where every r x r minor
    vanishes, so the candidates are the rational roots of the gcd of the
    minor numerators (plus the poles of the entries, where the matrix itself
    is undefined).  Exhaustive over Q; each candidate still needs a direct
    check at the specialized value.
    """
    from itertools import combinations

    from .scalars import Poly, RatFunc, rational_roots

    r = rank(m)
    rows = m.row_list()
    poles: set = set()
    for v in m.entries.values():
        if isinstance(v, RatFunc) and v.den.degree > 0:
            poles.update(rational_roots(v.den))
    if r == 0:
        return sorted(poles)
    live_rows = [i for i in range(m.rows) if rows[i]]
    live_cols = sorted({c for row in rows for c in row})
    gcd = Poly([])
    for rsel in combinations(live_rows, r):
        for csel in combinations(live_cols, r):
            minor = _det([[rows[i].get(c, as_scalar(0)) for c in csel] for i in rsel])
            num = minor.num if isinstance(minor, RatFunc) else Poly([minor])
            if num.is_zero():
                continue
            gcd = num.monic() if gcd.is_zero() else gcd.gcd(num)
            if gcd.degree == 0:
                return sorted(poles)
    if gcd.is_zero():
        # all r-minors vanish identically; generic rank computation disagrees
        raise AssertionError("generic rank does not match minor ranks")
    return sorted(set(rational_roots(gcd)) | poles)


def _det(rows: list[list]):
    """Determinant by fraction-free-ish elimination over a field."""
    n = len(rows)
    rows = [list(r) for r in rows]
    det = as_scalar(1)
    for c in range(n):
        piv = None
        for r in range(c, n):
            if rows[r][c]:
                piv = r
                break
        if piv is None:
            return as_scalar(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det = det * rows[c][c]
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            if rows[r][c]:
                f = rows[r][c] * inv
                for cc in range(c, n):
                    rows[r][cc] = rows[r][cc] - f * rows[c][cc]
    return det

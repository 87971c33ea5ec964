"""Order-one local-global intersection homology of stratified complexes.

Chains are built from two kinds of small cells living inside single closed
simplices of the complex: cone cells, affine maps of shape (i,0) modelled on
the cone over an i-simplex, and prism cells of shape (i,1) modelled on an
interval crossed with that cone.  A cone cell records where the apex and the
i+1 base corners land; a prism cell records two such maps and sweeps between
them.  Chain groups are taken alternating: permuting the base positions of
a cone (the base columns of a prism) multiplies a cell by the sign of the
permutation, so each chain group has one basis element per sorted
representative.  Degenerate cells, a repeated base vertex for a cone and
equal end maps or a repeated base column for a prism, are then identified
with zero; a repeat is fixed by an odd transposition, making the cell its
own negative.  Without this quotient the boundary would not square to zero
once degenerate summands are dropped.

Allowability splits in two parts.  The perversity part constrains only the
slices away from the cone point.  A point of a closed simplex lies in X_d
exactly when every vertex of its barycentric support is labelled <= d, so
inside a slice the preimage of X_{m-c} is a face cut out by label
thresholds and its dimension is pure counting; the bound is
dim <= (slice dim) - c + p(c) with slice dimension i for cones and i+1 for
prisms.  The coning direction itself is exempt: the apex may sit in any
stratum.  What the apex does is recorded separately by w_1(f), the stratum
of the (dense part of the) apex image, and a w-sequence constraint
w_1 <= w_1(f) selects cells whose cone points sit at least that deep.

The rank of H_{(i,0);(w)} is dim Z - dim B, where Z collects the cycles
among allowed (i,0) cells and B the parts of boundaries landing on them.  A
boundary contributor is a formal sum of allowed (i+1,0) and (i,1) cells
whose stray terms, prism facets of shape (i-1,1) and non-allowed (i,0)
summands alike, are required to cancel; whatever remains is then
automatically a cycle supported on the allowed cells.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .complexes import StratifiedComplex
from .errors import ValidationError
from .exactla import ColumnReduction

__all__ = [
    "ConeCell",
    "PrismCell",
    "WSequence",
    "AllowReport",
    "LgReport",
    "enumerate_cells",
    "cell_boundary",
    "cell_allowed",
    "lg_ranks",
    "cells_dd_check",
]


@dataclass(frozen=True)
class ConeCell:
    """Affine cell of shape (i,0): an apex image and i+1 base corner images.

    The images must jointly span a simplex of the ambient complex; the apex
    is free to coincide with a base corner, only a repeat inside the base
    makes the cell degenerate.
    """

    apex: str
    base: tuple

    @property
    def i(self) -> int:
        return len(self.base) - 1

    @property
    def degenerate(self) -> bool:
        return len(set(self.base)) < len(self.base)

    def span(self) -> frozenset:
        return frozenset(self.base) | {self.apex}

    def __str__(self):
        return "({}; {})".format(self.apex, ",".join(self.base))


@dataclass(frozen=True)
class PrismCell:
    """Multi-affine cell of shape (i,1): two cone maps swept along an interval.

    Degeneracy has two sources: the sweep collapses (both end maps equal) or
    some base column (base0[p], base1[p]) repeats at two positions.  An end
    map alone may repeat base vertices without degenerating the prism.
    """

    apex0: str
    base0: tuple
    apex1: str
    base1: tuple

    def __post_init__(self):
        if len(self.base0) != len(self.base1):
            raise ValidationError("prism end maps must share one base length")

    @property
    def i(self) -> int:
        return len(self.base0) - 1

    def ends(self):
        return ConeCell(self.apex0, self.base0), ConeCell(self.apex1, self.base1)

    def columns(self) -> tuple:
        return tuple(zip(self.base0, self.base1))

    @property
    def degenerate(self) -> bool:
        if self.apex0 == self.apex1 and self.base0 == self.base1:
            return True
        cols = self.columns()
        return len(set(cols)) < len(cols)

    def span(self) -> frozenset:
        return frozenset(self.base0) | frozenset(self.base1) | {self.apex0, self.apex1}

    def __str__(self):
        return "({}; {} -> {}; {})".format(
            self.apex0, ",".join(self.base0), self.apex1, ",".join(self.base1)
        )


@dataclass(frozen=True)
class WSequence:
    """Required minimal strata for the cone points, one entry per order."""

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValidationError("a w-sequence needs at least one entry")
        for e in self.entries:
            if not isinstance(e, int) or e < 0:
                raise ValidationError(f"w-sequence entries must be integers >= 0, got {e!r}")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class AllowReport:
    """Admissibility verdict for one cell, with the computed apex stratum."""

    allowed: bool
    perversity_ok: bool
    w_ok: bool
    w1: int

    def __bool__(self):
        return self.allowed


@dataclass(frozen=True)
class LgReport:
    rank: int
    cells: dict
    w: tuple
    cycles: int
    boundaries: int


def _simplex_tuples(k: StratifiedComplex):
    return sorted((tuple(sorted(f)) for f in k.simplices), key=lambda t: (len(t), t))


def enumerate_cells(k: StratifiedComplex, i: int, kind: str = "cone") -> list:
    """All non-degenerate cells with base dimension i, each map listed once.

    Canonical form: the supporting simplex is the exact span of the images,
    so a map never appears again from a larger simplex containing it.  The
    order is deterministic, supporting simplices by size then
    lexicographically and candidate tuples in itertools order inside each.
    """
    if i < 0:
        raise ValidationError(f"base dimension must be >= 0, got {i}")
    if kind not in ("cone", "prism"):
        raise ValidationError(f"cell kind must be 'cone' or 'prism', got {kind!r}")
    out = []
    for simplex in _simplex_tuples(k):
        if kind == "cone":
            out.extend(_cone_cells_on(simplex, i))
        else:
            out.extend(_prism_cells_on(simplex, i))
    return out


def _cone_cells_on(simplex, i):
    # non-degenerate means injective base, so exact span needs |S| in
    # {i+1, i+2}; with |S| = i+2 the apex is forced to the one missed vertex
    if len(simplex) not in (i + 1, i + 2):
        return []
    cells = []
    for base in itertools.permutations(simplex, i + 1):
        missing = [v for v in simplex if v not in base]
        for apex in missing or simplex:
            cells.append(ConeCell(apex, base))
    return cells


def _prism_cells_on(simplex, i):
    # end bases may repeat vertices individually, so candidates range over
    # sequences of distinct columns rather than pairs of injective bases
    vset = set(simplex)
    columns = [(x, y) for x in simplex for y in simplex]
    cells = []
    for cols in itertools.permutations(columns, i + 1):
        base0 = tuple(c[0] for c in cols)
        base1 = tuple(c[1] for c in cols)
        covered = set(base0) | set(base1)
        for apex0 in simplex:
            for apex1 in simplex:
                if covered | {apex0, apex1} != vset:
                    continue
                if apex0 == apex1 and base0 == base1:
                    continue
                cells.append(PrismCell(apex0, base0, apex1, base1))
    return cells


def cell_boundary(cell) -> list:
    """Signed facet sum of a cell as (sign, facet) pairs.

    Cone cells lose one base corner at a time with the usual alternating
    sign; there is no facet in the coning direction.  Prism cells contribute
    their two end cone maps first (the sweep endpoints), then prisms over
    the base facets, shifted one slot in the sign ordering.  Degenerate
    summands are dropped and degenerate input gives the empty sum.
    """
    if cell.degenerate:
        return []
    out = []
    if isinstance(cell, ConeCell):
        if cell.i == 0:
            return []
        for l in range(cell.i + 1):
            child = ConeCell(cell.apex, cell.base[:l] + cell.base[l + 1 :])
            out.append((1 if l % 2 == 0 else -1, child))
        return out
    end0, end1 = cell.ends()
    if not end1.degenerate:
        out.append((1, end1))
    if not end0.degenerate:
        out.append((-1, end0))
    if cell.i >= 1:
        for p in range(cell.i + 1):
            child = PrismCell(
                cell.apex0,
                cell.base0[:p] + cell.base0[p + 1 :],
                cell.apex1,
                cell.base1[:p] + cell.base1[p + 1 :],
            )
            if not child.degenerate:
                out.append((-1 if p % 2 == 0 else 1, child))
    return out


def cell_allowed(k: StratifiedComplex, cell, w: WSequence | None = None) -> AllowReport:
    """Perversity and w-sequence admissibility of one cell.

    Only slices with the coning parameter away from zero are constrained,
    so apex labels never enter the perversity part.  Writing d = m - c and
    A for the set of base positions labelled <= d, the face of a slice
    living in X_d has dimension |A| - 1; for a prism the two ends are
    checked separately and interior interval positions add the sweep
    direction, giving |A ∩ B| on the shared columns.  Each count must stay
    within (slice dim) - c + p(c).  The apex stratum is reported as w_1:
    the label of the apex image for a cone, the deepest point of the apex
    path for a prism.
    """
    m = k.dim
    p = k.perversity
    ok = True
    if isinstance(cell, ConeCell):
        w1 = k.label(cell.apex)
        labels = tuple(k.label(v) for v in cell.base)
        for c in range(2, m + 1):
            d = m - c
            deep = sum(1 for lab in labels if lab <= d)
            if deep and deep - 1 > cell.i - c + p(c):
                ok = False
                break
    else:
        w1 = max(k.label(cell.apex0), k.label(cell.apex1))
        lab0 = tuple(k.label(v) for v in cell.base0)
        lab1 = tuple(k.label(v) for v in cell.base1)
        for c in range(2, m + 1):
            d = m - c
            limit = cell.i + 1 - c + p(c)
            side0 = {q for q, lab in enumerate(lab0) if lab <= d}
            side1 = {q for q, lab in enumerate(lab1) if lab <= d}
            both = side0 & side1
            if (
                (side0 and len(side0) - 1 > limit)
                or (side1 and len(side1) - 1 > limit)
                or (both and len(both) > limit)
            ):
                ok = False
                break
    w_ok = True
    if w is not None:
        if len(w) != 1:
            raise ValidationError("cells of order <= 1 carry a single w entry")
        w_ok = w.entries[0] <= w1
    return AllowReport(allowed=ok and w_ok, perversity_ok=ok, w_ok=w_ok, w1=w1)


def _parity(order):
    inversions = sum(
        1 for a in range(len(order)) for b in range(a + 1, len(order)) if order[a] > order[b]
    )
    return -1 if inversions % 2 else 1


def _canonical(cell):
    """Signed representative of a cell in the oriented basis.

    Chains are taken alternating: permuting base positions (columns, for a
    prism) multiplies a cell by the sign of the permutation.  A repeated
    entry is fixed by an odd transposition, which forces the cell to be its
    own negative, hence zero; that is why any repeat degenerates, not just
    adjacent ones.  Returns (sign, representative), sign 0 when degenerate.
    """
    if cell.degenerate:
        return 0, cell
    if isinstance(cell, ConeCell):
        keys = cell.base
    else:
        keys = cell.columns()
    order = sorted(range(len(keys)), key=keys.__getitem__)
    if order == sorted(order):
        return 1, cell
    if isinstance(cell, ConeCell):
        rep = ConeCell(cell.apex, tuple(cell.base[q] for q in order))
    else:
        rep = PrismCell(
            cell.apex0,
            tuple(cell.base0[q] for q in order),
            cell.apex1,
            tuple(cell.base1[q] for q in order),
        )
    return _parity(order), rep


def _basis_cells(k, i, kind):
    return [c for c in enumerate_cells(k, i, kind) if _canonical(c) == (1, c)]


def _accumulate(cell):
    col = Counter()
    for sign, child in cell_boundary(cell):
        sgn, rep = _canonical(child)
        if sgn:
            col[rep] += sign * sgn
    return {rep: coef for rep, coef in col.items() if coef}


def lg_ranks(k: StratifiedComplex, i: int, w) -> LgReport:
    """Rank of the order-one local-global group in degree (i,0) at w.

    Z is the kernel of the full boundary on allowed (i,0) cells.  B is
    assembled from allowed (i+1,0) cone cells and (i,1) prism cells: a
    combination qualifies when its boundary components on non-allowed (i,0)
    cells and on every (i-1,1) prism cancel, and B is what it leaves on the
    allowed (i,0) cells.  Row regions are ordered so that one column
    reduction yields both the full rank and the rank of the constraint
    block as a suffix rank; dim B is their difference.
    """
    if not isinstance(w, WSequence):
        w = WSequence(tuple(w))
    if len(w) != 1:
        raise ValidationError("only order-one w-sequences are supported")
    if i < 0:
        raise ValidationError(f"base dimension must be >= 0, got {i}")
    w1 = w.entries[0]
    m = k.dim
    keys = (f"({i},0)", f"({i + 1},0)", f"({i},1)")
    if m < 0:
        return LgReport(rank=0, cells=dict.fromkeys(keys, 0), w=w.entries, cycles=0, boundaries=0)
    if w1 > m:
        raise ValidationError(f"w_1 must lie in 0..{m} for this complex, got {w1}")

    cones_i = _basis_cells(k, i, "cone")
    allowed_i = [c for c in cones_i if cell_allowed(k, c, w)]

    rows = {}
    zred = ColumnReduction()
    for cell in allowed_i:
        zred.add_column(
            {rows.setdefault(child, len(rows)): coef for child, coef in _accumulate(cell).items()}
        )
    cycles = len(allowed_i) - zred.rank

    pos = {cell: j for j, cell in enumerate(allowed_i)}
    for cell in cones_i:
        pos.setdefault(cell, len(pos))
    n_all = len(pos)
    stray = {}

    cones_up = [c for c in _basis_cells(k, i + 1, "cone") if cell_allowed(k, c, w)]
    prisms = [c for c in _basis_cells(k, i, "prism") if cell_allowed(k, c, w)]
    bred = ColumnReduction()
    for cell in cones_up + prisms:
        col = {}
        for child, coef in _accumulate(cell).items():
            if isinstance(child, ConeCell):
                col[pos[child]] = coef
            else:
                col[n_all + stray.setdefault(child, len(stray))] = coef
        bred.add_column(col)
    boundaries = bred.rank - bred.rank_on_suffix(len(allowed_i))

    assert 0 <= boundaries <= cycles, "boundary space escaped the cycle space"
    counts = dict(zip(keys, (len(allowed_i), len(cones_up), len(prisms))))
    return LgReport(
        rank=cycles - boundaries, cells=counts, w=w.entries, cycles=cycles, boundaries=boundaries
    )


def cells_dd_check(k: StratifiedComplex, max_i: int = 2) -> bool:
    """True when the double boundary of every cell with base dim <= max_i
    vanishes in the degeneracy quotient.

    Boundary combinatorics depend only on the coincidence pattern of the
    vertex slots, so each pattern is checked once; the sweep over a complex
    then costs little more than the cell enumeration itself.
    """
    seen = {}
    for i in range(max_i + 1):
        for kind in ("cone", "prism"):
            for cell in _basis_cells(k, i, kind):
                key = _pattern(cell)
                if key in seen:
                    continue
                total = Counter()
                for coef, child in _signed_boundary(cell):
                    for coef2, grand in _signed_boundary(child):
                        total[grand] += coef * coef2
                ok = not any(total.values())
                seen[key] = ok
                if not ok:
                    return False
    return True


def _signed_boundary(cell):
    return [(coef, rep) for rep, coef in _accumulate(cell).items()]


def _pattern(cell):
    if isinstance(cell, ConeCell):
        slots = (cell.apex,) + cell.base
    else:
        slots = (cell.apex0,) + cell.base0 + (cell.apex1,) + cell.base1
    first = {}
    coded = tuple(first.setdefault(v, len(first)) for v in slots)
    return (type(cell).__name__, cell.i, coded)

"""Exact rational linear feasibility with re-checkable certificates.

No optimization objectives live here on purpose: every geometric question in
this package reduces to "is this linear system satisfiable", answered exactly.

A constraint is (coeffs, rel, rhs) with rel one of '<=', '>=', '=='. Systems
are normalized to a documented list of '>=' rows before solving:

    a.x >= b  ->  (a, b)
    a.x <= b  ->  (-a, -b)
    a.x == b  ->  (a, b) followed by (-a, -b)

in input order. An Infeasible outcome carries a nonnegative Farkas vector y
over the normalized rows, scaled so sum(y_i * b_i) = 1, with

    sum(y_i * a_i) == 0   componentwise            (free variables)
    sum(y_i * a_i) <= 0   componentwise            (nonneg=True: variables >= 0)

either of which makes the row combination 0.x >= 1 (resp. (<=0).x >= 1 over
x >= 0), an immediate contradiction checkable by one matrix-vector product.

The solver is phase-1 simplex over exact rationals with Bland's anti-cycling
rule (lowest eligible column enters; ties on the ratio test break toward the
lowest basis variable). Normalized rows are sorted lexicographically before
solving, so outcomes are invariant under permutation of the input constraints;
the Farkas vector is mapped back to input row order on return.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InternalInvariantError
from .rational import ONE, ZERO, Rat, rat

REL_GE = ">="
REL_LE = "<="
REL_EQ = "=="
_RELS = (REL_GE, REL_LE, REL_EQ)


def con(coeffs, rel, rhs):
    """Validate and coerce one constraint to exact-rational form."""
    if rel not in _RELS:
        raise InputError(f"unknown relation {rel!r}")
    return (tuple(rat(c) for c in coeffs), rel, rat(rhs))


@dataclass(frozen=True)
class LPOutcome:
    feasible: bool
    solution: tuple | None       # exact point, None when infeasible
    farkas: tuple | None         # over normalized rows, None when feasible
    nonneg: bool                 # variables implicitly >= 0

    def __bool__(self) -> bool:
        return self.feasible


def normalize_rows(constraints):
    """The documented '>=' row list; equality constraints expand to a +/- pair."""
    rows = []
    for coeffs, rel, rhs in constraints:
        a = tuple(Rat(c) for c in coeffs)
        b = Rat(rhs)
        if rel == REL_GE:
            rows.append((a, b))
        elif rel == REL_LE:
            rows.append((tuple(-c for c in a), -b))
        elif rel == REL_EQ:
            rows.append((a, b))
            rows.append((tuple(-c for c in a), -b))
        else:
            raise InputError(f"unknown relation {rel!r}")
    return rows


def check_farkas(constraints, farkas, nonneg: bool = False) -> bool:
    """Re-verify an infeasibility certificate with one exact product."""
    rows = normalize_rows(constraints)
    if len(farkas) != len(rows):
        return False
    y = [Rat(v) for v in farkas]
    if any(v < 0 for v in y):
        return False
    nvars = len(rows[0][0]) if rows else 0
    combo = [ZERO] * nvars
    for yi, (a, _) in zip(y, rows):
        if yi:
            for j, aj in enumerate(a):
                combo[j] += yi * aj
    if nonneg:
        if any(cj > 0 for cj in combo):
            return False
    else:
        if any(cj != 0 for cj in combo):
            return False
    value = sum((yi * b for yi, (_, b) in zip(y, rows)), ZERO)
    return value > 0


def lp_feasible(constraints, nvars: int | None = None, nonneg: bool = False) -> LPOutcome:
    """Decide satisfiability of a rational linear system, with certificate.

    nonneg=True treats every variable as implicitly >= 0 (smaller tableaux for
    convex-combination systems); the Farkas condition weakens to <= 0 per
    coordinate as documented above.
    """
    constraints = list(constraints)
    widths = {len(c[0]) for c in constraints}
    if len(widths) > 1:
        raise InputError(f"inconsistent constraint widths {sorted(widths)}")
    if nvars is None:
        if not widths:
            raise InputError("cannot infer variable count from an empty system")
        nvars = widths.pop()
    elif widths and widths.pop() != nvars:
        raise InputError("constraint width disagrees with nvars")

    rows = normalize_rows(constraints)
    if not rows:
        return LPOutcome(True, (ZERO,) * nvars, None, nonneg)

    order = sorted(range(len(rows)), key=lambda i: rows[i])
    sorted_rows = [rows[i] for i in order]

    ok, payload = _phase1(sorted_rows, nvars, nonneg)
    if ok:
        x = payload
        if not _satisfies(rows, x, nonneg):
            raise InternalInvariantError("simplex returned a non-solution")
        return LPOutcome(True, tuple(x), None, nonneg)

    farkas = [ZERO] * len(rows)
    for pos, yi in enumerate(payload):
        farkas[order[pos]] = yi
    value = sum((yi * b for yi, (_, b) in zip(farkas, rows)), ZERO)
    if value <= 0:
        raise InternalInvariantError("Farkas vector has nonpositive value")
    farkas = tuple(yi / value for yi in farkas)
    if not check_farkas(constraints, farkas, nonneg):
        raise InternalInvariantError("Farkas vector failed re-check")
    return LPOutcome(False, None, farkas, nonneg)


def _satisfies(rows, x, nonneg) -> bool:
    if nonneg and any(v < 0 for v in x):
        return False
    for a, b in rows:
        if sum((ai * xi for ai, xi in zip(a, x)), ZERO) < b:
            return False
    return True


def _phase1(rows, nvars, nonneg):
    """Feasibility of {a.x >= b for (a, b) in rows}.

    Returns (True, x) or (False, y) with y a raw Farkas vector over `rows`.
    Standard form: x split into u - v unless nonneg, one surplus per row,
    one artificial per row; minimize the artificial sum.
    """
    m = len(rows)
    nstruct = (nvars if nonneg else 2 * nvars) + m

    # rows scaled so the rhs is nonnegative; sigma remembers the flips
    sigma = [ONE if b >= 0 else -ONE for _, b in rows]

    tab = []
    for i, (a, b) in enumerate(rows):
        s = sigma[i]
        row = [ZERO] * (nstruct + m + 1)
        for j, aj in enumerate(a):
            if aj:
                row[j] = s * aj
                if not nonneg:
                    row[nvars + j] = -s * aj
        surplus = (nvars if nonneg else 2 * nvars) + i
        row[surplus] = -s
        row[nstruct + i] = ONE
        row[-1] = s * b
        tab.append(row)

    # reduced costs for the all-artificial starting basis
    obj = [ZERO] * (nstruct + m + 1)
    for j in range(nstruct + m + 1):
        acc = ZERO
        for i in range(m):
            acc += tab[i][j]
        obj[j] = (ONE if nstruct <= j < nstruct + m else ZERO) - acc

    basis = [nstruct + i for i in range(m)]
    ncols = nstruct + m

    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            coef = tab[i][enter]
            if coef > 0:
                ratio = tab[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise InternalInvariantError("phase-1 objective unbounded")
        _pivot(tab, obj, basis, leave, enter)

    objective = -obj[-1]
    if objective < 0:
        raise InternalInvariantError("negative phase-1 objective")

    if objective == 0:
        w = [ZERO] * nstruct
        for i, bi in enumerate(basis):
            if bi < nstruct:
                w[bi] = tab[i][-1]
        if nonneg:
            x = w[:nvars]
        else:
            x = [w[j] - w[nvars + j] for j in range(nvars)]
        return True, x

    # dual off the artificial reduced costs, unscaled back through sigma
    y = [sigma[i] * (ONE - obj[nstruct + i]) for i in range(m)]
    return False, y


def _pivot(tab, obj, basis, r, c):
    prow = tab[r]
    piv = prow[c]
    if piv != 1:
        inv = ONE / piv
        tab[r] = prow = [v * inv for v in prow]
    for i, row in enumerate(tab):
        if i != r and row[c]:
            f = row[c]
            tab[i] = [v - f * p for v, p in zip(row, prow)]
    if obj[c]:
        f = obj[c]
        obj[:] = [v - f * p for v, p in zip(obj, prow)]
    basis[r] = c

"""Exact rational simplex over arbitrary-precision integers.

Solves  max c.x  s.t.  A x <= b,  E x = f,  x >= 0  with no floating
point anywhere in the decision path.  The tableau is kept fraction-free:
each row is an integer vector plus one positive integer denominator,
gcd-normalized after every pivot, so all sign tests and ratio
comparisons are integer cross-multiplications.

Pivot rules are deterministic.  The default "hybrid" rule is Dantzig
(most negative reduced cost, lowest index on ties) with an automatic
switch to Bland's rule after a run of degenerate pivots, which keeps it
cycle-free; "bland" selects pure Bland's rule and is used as the
independent re-solve path by certificate rechecking.

Optimal solves return exact primal and dual certificates (strong
duality and complementary slackness hold with equality); infeasible
solves return an exact Farkas certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


DEGENERACY_STREAK = 40
MAX_PIVOTS = 500_000


@dataclass
class LPResult:
    status: str                      # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    x: list | None = None            # structural variables, exact
    duals: list | None = None        # one multiplier per added row
    farkas: list | None = None       # infeasibility certificate, per row
    pivots: int = 0


class LinearProgram:
    """A collection of <= and = rows over nonnegative variables."""

    def __init__(self, num_vars: int):
        if num_vars < 1:
            raise ValueError("need at least one variable")
        self.nv = num_vars
        self.rows = []               # (dense Fraction coeffs, Fraction rhs, kind)
        self._tab = None

    def _dense(self, coeffs):
        if isinstance(coeffs, dict):
            row = [Fraction(0)] * self.nv
            for j, v in coeffs.items():
                row[j] = Fraction(v)
            return row
        row = [Fraction(v) for v in coeffs]
        if len(row) != self.nv:
            raise ValueError(f"row length {len(row)} != {self.nv}")
        return row

    def add_le(self, coeffs, rhs):
        self.rows.append((self._dense(coeffs), Fraction(rhs), "<="))

    def add_eq(self, coeffs, rhs):
        self.rows.append((self._dense(coeffs), Fraction(rhs), "="))

    def solve(self, objective=None, pivot_rule: str = "hybrid") -> LPResult:
        """Maximize objective (default 0) over the current rows."""
        obj = self._dense(objective) if objective is not None else [Fraction(0)] * self.nv
        self._tab = _Tableau(self, pivot_rule)
        return self._tab.solve(obj)

    def resolve(self, objective) -> LPResult:
        """Re-optimize with a new objective from the last optimal basis.

        The feasible basis of the previous solve is reused, so only the
        reduced-cost row is rebuilt; typically a handful of pivots.
        """
        if self._tab is None or not self._tab.feasible_basis:
            raise RuntimeError("resolve() needs a previous feasible solve")
        return self._tab.reoptimize(self._dense(objective))

    def check_optimal(self, res: LPResult, objective) -> None:
        """Exact certificate check: feasibility, duality, slackness."""
        obj = self._dense(objective)
        assert res.status == "optimal"
        x = res.x
        assert all(v >= 0 for v in x)
        for (coeffs, rhs, kind), y in zip(self.rows, res.duals):
            lhs = sum(c * v for c, v in zip(coeffs, x))
            if kind == "<=":
                assert lhs <= rhs, "primal infeasible"
                assert y >= 0, "negative dual on <= row"
                assert y == 0 or lhs == rhs, "complementary slackness (row)"
            else:
                assert lhs == rhs, "equality violated"
        assert sum(c * v for c, v in zip(obj, x)) == res.value, "value mismatch"
        for j in range(self.nv):
            red = sum(y * self.rows[i][0][j] for i, y in enumerate(res.duals)) - obj[j]
            assert red >= 0, "dual infeasible"
            assert x[j] == 0 or red == 0, "complementary slackness (column)"
        assert sum(y * r[1] for y, r in zip(res.duals, self.rows)) == res.value, \
            "strong duality"

    def check_farkas(self, res: LPResult) -> None:
        """Exact check of an infeasibility certificate."""
        assert res.status == "infeasible" and res.farkas is not None
        y = res.farkas
        for (coeffs, rhs, kind), yi in zip(self.rows, y):
            if kind == "<=":
                assert yi >= 0
        for j in range(self.nv):
            assert sum(yi * self.rows[i][0][j] for i, yi in enumerate(y)) >= 0
        assert sum(yi * r[1] for yi, r in zip(y, self.rows)) < 0


def _intify(fracs):
    """Clear denominators: returns (integer vector, positive scale L)."""
    L = 1
    for f in fracs:
        d = f.denominator
        L = L // gcd(L, d) * d
    return [int(f * L) for f in fracs], L


class _Tableau:
    """Fraction-free tableau: integer rows with per-row positive divisors."""

    def __init__(self, lp: LinearProgram, pivot_rule: str):
        self.lp = lp
        self.rule = pivot_rule
        self.nv = lp.nv
        self.pivots = 0
        self.feasible_basis = False

        self.row_scale = []          # L_t per original row
        self.row_flip = []           # True when the stored row was negated
        self.slack_col = {}          # original row index -> slack column
        self.art_col = {}            # original row index -> artificial column
        ncols = self.nv
        stored = []
        for t, (coeffs, rhs, kind) in enumerate(lp.rows):
            ints, L = _intify(list(coeffs) + [rhs])
            self.row_scale.append(L)
            flip = ints[-1] < 0
            self.row_flip.append(flip)
            if flip:
                ints = [-v for v in ints]
            stored.append((t, ints[:-1], ints[-1], kind, flip))
            if kind == "<=":
                self.slack_col[t] = ncols
                ncols += 1
            if kind == "=" or flip:
                self.art_col[t] = None  # assigned after slacks
        for t in self.art_col:
            self.art_col[t] = ncols
            ncols += 1
        self.ncols = ncols
        self.banned = set()

        self.rows = []
        self.divs = []
        self.basis = []
        self.orig = []               # original row index per tableau row
        for t, body, rhs, kind, flip in stored:
            row = body + [0] * (ncols - self.nv) + [rhs]
            if kind == "<=":
                row[self.slack_col[t]] = -1 if flip else 1
            if t in self.art_col:
                row[self.art_col[t]] = 1
                self.basis.append(self.art_col[t])
            else:
                self.basis.append(self.slack_col[t])
            self.rows.append(row)
            self.divs.append(1)
            self.orig.append(t)
        self.obj = [0] * (ncols + 1)
        self.obj_div = 1
        self.obj_scale = 1

    # -- pivoting ----------------------------------------------------------

    def _reduce(self, i):
        row = self.rows[i]
        g = self.divs[i]
        for v in row:
            g = gcd(g, v)
            if g == 1:
                break
        if self.divs[i] < 0:
            g = -g
        if g != 1:
            self.rows[i] = [v // g for v in row]
            self.divs[i] //= g

    def _reduce_obj(self):
        g = self.obj_div
        for v in self.obj:
            g = gcd(g, v)
            if g == 1:
                break
        if self.obj_div < 0:
            g = -g
        if g != 1:
            self.obj = [v // g for v in self.obj]
            self.obj_div //= g

    def _pivot(self, r, s, allow_any_sign=False):
        rows = self.rows
        prow = rows[r]
        p = prow[s]
        assert p != 0 and (allow_any_sign or p > 0)
        for i in range(len(rows)):
            if i == r:
                continue
            e = rows[i][s]
            if e == 0:
                continue
            rows[i] = [a * p - e * b for a, b in zip(rows[i], prow)]
            self.divs[i] *= p
            self._reduce(i)
        e = self.obj[s]
        if e != 0:
            self.obj = [a * p - e * b for a, b in zip(self.obj, prow)]
            self.obj_div *= p
            self._reduce_obj()
        self.divs[r] = p
        self._reduce(r)
        self.basis[r] = s
        self.pivots += 1

    def _build_obj(self, cints: dict, scale: int):
        """Reduced-cost row r_j = c_B B^-1 A_j - c_j from the current basis."""
        self.obj_scale = scale
        contrib = [i for i in range(len(self.rows))
                   if cints.get(self.basis[i], 0) != 0]
        fr = []
        for j in range(self.ncols + 1):
            acc = Fraction(0)
            for i in contrib:
                acc += Fraction(cints[self.basis[i]] * self.rows[i][j], self.divs[i])
            if j < self.ncols:
                acc -= cints.get(j, 0)
            fr.append(acc)
        self.obj, self.obj_div = _intify(fr)

    def _entering(self, bland: bool):
        obj = self.obj
        best, best_val = -1, 0
        for j in range(self.ncols):
            if j in self.banned:
                continue
            v = obj[j]
            if v < 0:
                if bland:
                    return j
                if v < best_val:
                    best, best_val = j, v
        return best if best >= 0 else None

    def _leaving(self, s):
        best = None                   # (tableau row, rhs, pivot entry)
        for i, row in enumerate(self.rows):
            a = row[s]
            if a > 0:
                if best is None:
                    best = (i, row[-1], a)
                    continue
                lhs = row[-1] * best[2]
                rhs = best[1] * a
                if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best[0]]):
                    best = (i, row[-1], a)
        return best

    def _run(self):
        bland = self.rule == "bland"
        streak = 0
        while True:
            if self.pivots > MAX_PIVOTS:
                raise RuntimeError("pivot limit exceeded; simplex stalled")
            s = self._entering(bland)
            if s is None:
                return "optimal"
            hit = self._leaving(s)
            if hit is None:
                return "unbounded"
            r = hit[0]
            degenerate = self.rows[r][-1] == 0
            self._pivot(r, s)
            if self.rule == "hybrid":
                if degenerate:
                    streak += 1
                    if streak > DEGENERACY_STREAK:
                        bland = True
                else:
                    streak = 0
                    bland = False

    # -- phases ------------------------------------------------------------

    def solve(self, objective) -> LPResult:
        if self.art_col:
            status = self._phase1()
            if status is not None:
                return status
        self.banned = set(self.art_col.values())
        return self.reoptimize(objective)

    def _phase1(self):
        cints = {col: -1 for col in self.art_col.values()}
        self._build_obj(cints, 1)
        status = self._run()
        assert status == "optimal", "phase 1 cannot be unbounded"
        if self.obj[-1] != 0:
            # maximum of -sum(artificials) is negative: infeasible
            assert Fraction(self.obj[-1], self.obj_div) < 0
            farkas = self._extract_duals(obj_scale=1, art_cost=-1)
            return LPResult(status="infeasible", farkas=farkas, pivots=self.pivots)
        self._drive_out_artificials()
        return None

    def _drive_out_artificials(self):
        arts = set(self.art_col.values())
        drop = []
        for i in range(len(self.rows)):
            if self.basis[i] not in arts:
                continue
            assert self.rows[i][-1] == 0
            s = next((j for j in range(self.ncols)
                      if j not in arts and self.rows[i][j] != 0), None)
            if s is None:
                drop.append(i)      # redundant equality
            else:
                self._pivot(i, s, allow_any_sign=True)
        for i in reversed(drop):
            del self.rows[i], self.divs[i], self.basis[i], self.orig[i]

    def reoptimize(self, objective) -> LPResult:
        cfr, scale = _intify(objective)
        cints = {j: v for j, v in enumerate(cfr) if v != 0}
        self._build_obj(cints, scale)
        status = self._run()
        if status == "unbounded":
            self.feasible_basis = True
            return LPResult(status="unbounded", pivots=self.pivots)
        self.feasible_basis = True
        x = [Fraction(0)] * self.nv
        for i, b in enumerate(self.basis):
            if b < self.nv:
                x[b] = Fraction(self.rows[i][-1], self.divs[i])
        value = Fraction(self.obj[-1], self.obj_div) / scale
        duals = self._extract_duals(obj_scale=scale)
        return LPResult(status="optimal", value=value, x=x, duals=duals,
                        pivots=self.pivots)

    def _extract_duals(self, obj_scale, art_cost=0):
        """Duals w.r.t. the ORIGINAL rows, from marker-column reduced costs.

        For a <= row the slack column works whether or not the stored row
        was negated; for an = row the artificial column does, with the
        sign flipped back.  art_cost is the objective coefficient carried
        by artificial columns (-1 during phase 1), which shifts their
        reduced cost r_art = y_std - art_cost.
        """
        present = {t: i for i, t in enumerate(self.orig)}
        duals = []
        for t, (_, _, kind) in enumerate(self.lp.rows):
            if t not in present:
                duals.append(Fraction(0))
                continue
            if kind == "<=":
                col = self.slack_col[t]
                r = Fraction(self.obj[col], self.obj_div)
                y = r * self.row_scale[t] / obj_scale
            else:
                col = self.art_col[t]
                y_std = Fraction(self.obj[col], self.obj_div) + art_cost
                sign = -1 if self.row_flip[t] else 1
                y = sign * y_std * self.row_scale[t] / obj_scale
            duals.append(y)
        return duals

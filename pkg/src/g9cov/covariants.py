"""Modules of covariants: slices, generators, and their structure.

A rho-covariant is a vector F of homogeneous polynomials with
F(s x) = rho(s) F(x) for every group element s.  The two generator
constraints suffice: covariance multiplies along words, and the
homomorphism property of rho is certified exhaustively elsewhere.

The degree-d slice is computed as the nullspace of an exact linear
system on the coefficients of F.  Two reductions cut the system down
before any elimination happens, both exact consequences of the same
covariance condition:

  * the central element zI acts on degree-d polynomials by z^d and on
    the module by a scalar; unless these agree the slice is zero;
  * every rho(D) here is diagonal, so the D constraint just selects,
    per component j, the x^a y^(d-a) with i^(d-a) equal to the j-th
    diagonal entry.

What is left is the T constraint on the surviving coefficients, solved
in a canonical nullspace normal form.  Each slice dimension is cross
checked against the Molien coefficient, so the linear solver and the
character-theoretic pipeline certify each other degree by degree.

Generators of the module over the invariant ring C[theta, phi] are
extracted bottom up: at each degree the new generators are an RREF
complement of theta * M_(d-8) + phi * M_(d-24) inside the slice,
normalized to leading coefficient 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycNum, ONE, ZERO, rational
from .group import GroupTable
from .linalg import Mat, nullspace_from_rref, rref
from .molien import DEFAULT_CUTOFF, MolienResult, molien_series
from .poly import BiPoly, VecPoly, fundamental_invariants
from .reps import Representation, rep_matrices
from . import reference

EXTRACTION_SWEEP = 54       # largest generator degree (30) + 24


class CrossCheckError(RuntimeError):
    """Solver dimension and Molien coefficient disagree."""


class FreenessError(RuntimeError):
    """Generator count, independence, or span failed at some degree."""


class FactorizationError(RuntimeError):
    """A generator determinant is not a constant times delta^e gamma^k."""


class GeneratorMismatchError(RuntimeError):
    """An extracted generator differs from its expected closed form."""


@dataclass(frozen=True)
class CovariantSlice:
    rep_id: int
    degree: int
    coords: tuple[tuple[int, int], ...]   # (component, x-exponent) positions
    basis: tuple[VecPoly, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class GeneratorSet:
    rep_id: int
    gens: tuple[tuple[int, VecPoly], ...]   # (degree, generator), degree ascending

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.gens)


@dataclass(frozen=True)
class TauRecord:
    degree: int
    found: bool
    witness: VecPoly | None


class RowReducer:
    """Incremental row echelon form over Q(zeta_8) for rank questions."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, list[CycNum]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: list[CycNum]) -> list[CycNum]:
        vec = list(vec)
        for col in sorted(self.rows):
            c = vec[col]
            if not c.is_zero():
                row = self.rows[col]
                vec = [v - c * r for v, r in zip(vec, row)]
        return vec

    def add(self, vec: list[CycNum]) -> list[CycNum] | None:
        """Insert a vector; returns the normalized residual, None if dependent."""
        red = self.reduce(vec)
        pivot = next((i for i, v in enumerate(red) if not v.is_zero()), None)
        if pivot is None:
            return None
        inv = red[pivot].inverse()
        red = [inv * v for v in red]
        self.rows[pivot] = red
        return red


_INT_CYC: dict[int, CycNum] = {}


def _icyc(n: int) -> CycNum:
    v = _INT_CYC.get(n)
    if v is None:
        v = rational(n)
        _INT_CYC[n] = v
    return v


def _binomial_table(d: int) -> list[list[int]]:
    """table[a][b] = coefficient of x^b y^(d-b) in (x+y)^a (x-y)^(d-a)."""
    plus = [[1]]
    minus = [[1]]
    for _ in range(d):
        prev = plus[-1]
        plus.append([(prev[i - 1] if i else 0) + (prev[i] if i < len(prev) else 0)
                     for i in range(len(prev) + 1)])
        prev = minus[-1]
        minus.append([(prev[i - 1] if i else 0) - (prev[i] if i < len(prev) else 0)
                      for i in range(len(prev) + 1)])
    table = []
    for a in range(d + 1):
        pa, mb = plus[a], minus[d - a]
        row = [0] * (d + 1)
        for i, pi in enumerate(pa):
            if pi:
                for j, mj in enumerate(mb):
                    if mj:
                        row[i + j] += pi * mj
        table.append(row)
    # reindex as [a][b]
    return table


class CovariantEngine:
    """Shared caches for slices, generators and scalar-polynomial products."""

    def __init__(self, table: GroupTable, reps: list[Representation],
                 cutoff: int = DEFAULT_CUTOFF):
        self.table = table
        self.reps = {r.rid: r for r in reps}
        self.cutoff = cutoff
        self.gamma, self.theta, self.delta, self.phi = fundamental_invariants()
        self._mats: dict[int, list[Mat]] = {}
        self._molien: dict[int, MolienResult] = {}
        self._slices: dict[tuple[int, int], CovariantSlice] = {}
        self._gens: dict[int, GeneratorSet] = {}
        self._central: dict[int, CycNum] = {}
        self._subst: dict[int, list[list[int]]] = {}
        self._scalars: dict[tuple[int, int], BiPoly] = {}
        self._central_index = table.lookup(Mat.identity(2).scale(CycNum.zeta(1)))

    # -- cached building blocks ---------------------------------------------------

    def matrices(self, rid: int) -> list[Mat]:
        if rid not in self._mats:
            self._mats[rid] = rep_matrices(self.reps[rid], self.table)
        return self._mats[rid]

    def molien(self, rid: int) -> MolienResult:
        if rid not in self._molien:
            self._molien[rid] = molien_series(self.reps[rid], self.table,
                                              self.cutoff, self.matrices(rid))
        return self._molien[rid]

    def central_scalar(self, rid: int) -> CycNum:
        """The scalar by which the central element zI acts in rho."""
        if rid not in self._central:
            m = self.matrices(rid)[self._central_index]
            w = m.at(0, 0)
            if m != Mat.identity(m.rows).scale(w):
                raise CrossCheckError(f"rho_{rid}: central element is not scalar")
            self._central[rid] = w
        return self._central[rid]

    def scalar_poly(self, a: int, b: int) -> BiPoly:
        """theta^a * phi^b, cached."""
        key = (a, b)
        if key not in self._scalars:
            self._scalars[key] = (self.theta ** a) * (self.phi ** b)
        return self._scalars[key]

    def _subst_table(self, d: int) -> list[list[int]]:
        if d not in self._subst:
            self._subst[d] = _binomial_table(d)
        return self._subst[d]

    # -- the slice solver -----------------------------------------------------------

    def _kept_coords(self, rep: Representation, d: int) -> list[tuple[int, int]] | None:
        """Coordinates surviving the central and diagonal-D constraints.

        Returns None when the central scalar rules the whole degree out.
        """
        if CycNum.zeta(d) != self.central_scalar(rep.rid):
            return None
        img_d = rep.img_d
        if not img_d.is_diagonal():
            raise CrossCheckError(f"rho_{rep.rid}: D image is not diagonal")
        eigen = [img_d.at(j, j) for j in range(rep.dim)]
        powers = [CycNum.zeta(0), CycNum.zeta(2), CycNum.zeta(4), CycNum.zeta(6)]
        coords = []
        for j, lam in enumerate(eigen):
            for a in range(d, -1, -1):
                if powers[(d - a) % 4] == lam:
                    coords.append((j, a))
        return coords

    def _t_rows(self, rep: Representation, d: int,
                coords: list[tuple[int, int]]) -> list[list[CycNum]]:
        """Rows of the T constraint on the kept coefficients.

        The substitution side is scaled by sqrt(2)^d so its entries are the
        integer coefficients of (x+y)^a (x-y)^(d-a).
        """
        u = self._subst_table(d)
        m = rep.dim
        scaled_t = rep.img_t.scale(CycNum(0, 1, 0, -1) ** d)
        col_index = {c: i for i, c in enumerate(coords)}
        ncols = len(coords)
        rows = []
        for j in range(m):
            kept_a = [a for (jj, a) in coords if jj == j]
            for b in range(d, -1, -1):
                row = [ZERO] * ncols
                nonzero = False
                for a in kept_a:
                    v = u[a][b]
                    if v:
                        row[col_index[(j, a)]] = _icyc(v)
                        nonzero = True
                for l in range(m):
                    if (l, b) in col_index:
                        s = scaled_t.at(j, l)
                        if not s.is_zero():
                            idx = col_index[(l, b)]
                            row[idx] = row[idx] - s
                            nonzero = True
                if nonzero:
                    rows.append(row)
        return rows

    @staticmethod
    def _nullspace_of_rows(rows: list[list[CycNum]], ncols: int) -> list[list[CycNum]]:
        """Nullspace in normal form, touching as few rows as possible.

        A leading subset of rows is eliminated; the resulting basis is then
        checked against every remaining row, and any violated row joins the
        subset.  On success the subset has the full row space, so the normal
        form equals the one of the complete system.
        """
        if not rows:
            return [[ONE if i == f else ZERO for i in range(ncols)]
                    for f in range(ncols)]
        take = min(len(rows), ncols + 8)
        active = [list(r) for r in rows[:take]]
        pending = rows[take:]
        while True:
            reduced, pivots = rref([list(r) for r in active])
            basis = nullspace_from_rref(reduced, pivots, ncols)
            if not basis:
                return []
            violated = None
            for row in pending:
                for vec in basis:
                    acc = ZERO
                    for c, v in zip(row, vec):
                        if not c.is_zero() and not v.is_zero():
                            acc = acc + c * v
                    if not acc.is_zero():
                        violated = row
                        break
                if violated is not None:
                    break
            if violated is None:
                return basis
            active.append(list(violated))
            pending = [r for r in pending if r is not violated]

    def slice(self, rid: int, d: int) -> CovariantSlice:
        """The space of homogeneous degree-d covariants of rho_rid."""
        key = (rid, d)
        cached = self._slices.get(key)
        if cached is not None:
            return cached
        rep = self.reps[rid]
        coords = self._kept_coords(rep, d)
        if coords is None:
            result = CovariantSlice(rid, d, (), ())
        else:
            rows = self._t_rows(rep, d, coords)
            basis_vecs = self._nullspace_of_rows(rows, len(coords))
            basis = tuple(VecPoly.from_coeffs(coords, v, rep.dim, d)
                          for v in basis_vecs)
            result = CovariantSlice(rid, d, tuple(coords), basis)
        expected = self.molien(rid).coefficient(d) if d <= self.cutoff else None
        if expected is not None and expected != result.dim:
            raise CrossCheckError(
                f"rho_{rid} degree {d}: solver dimension {result.dim}, "
                f"Molien coefficient {expected}")
        self._slices[key] = result
        return result

    def slice_dense(self, rid: int, d: int) -> CovariantSlice:
        """Reference solver: the plain T and D constraint system, no pruning.

        Used in tests to certify that the reduced solver above computes the
        same normal-form basis.
        """
        rep = self.reps[rid]
        m = rep.dim
        coords = [(j, a) for j in range(m) for a in range(d, -1, -1)]
        col_index = {c: i for i, c in enumerate(coords)}
        ncols = len(coords)
        u = self._subst_table(d)
        rows = []
        scaled_t = rep.img_t.scale(CycNum(0, 1, 0, -1) ** d)
        for j in range(m):
            for b in range(d, -1, -1):
                row = [ZERO] * ncols
                for a in range(d + 1):
                    if u[a][b]:
                        row[col_index[(j, a)]] = _icyc(u[a][b])
                for l in range(m):
                    s = scaled_t.at(j, l)
                    if not s.is_zero():
                        idx = col_index[(l, b)]
                        row[idx] = row[idx] - s
                rows.append(row)
        img_d = rep.img_d
        i_pow = [CycNum.zeta(0), CycNum.zeta(2), CycNum.zeta(4), CycNum.zeta(6)]
        for j in range(m):
            for b in range(d, -1, -1):
                row = [ZERO] * ncols
                row[col_index[(j, b)]] = i_pow[(d - b) % 4]
                for l in range(m):
                    s = img_d.at(j, l)
                    if not s.is_zero():
                        idx = col_index[(l, b)]
                        row[idx] = row[idx] - s
                rows.append(row)
        reduced, pivots = rref(rows)
        basis = [VecPoly.from_coeffs(coords, v, m, d)
                 for v in nullspace_from_rref(reduced, pivots, ncols)]
        return CovariantSlice(rid, d, tuple(coords), tuple(basis))

    # -- generators -------------------------------------------------------------------

    def decomposables(self, rid: int, d: int) -> list[VecPoly]:
        """theta * M_(d-8) + phi * M_(d-24) spanning vectors, in a fixed order."""
        out = []
        for f, shift in ((self.theta, 8), (self.phi, 24)):
            if d - shift >= 0:
                lower = self.slice(rid, d - shift)
                out.extend(b.mul_poly(f) for b in lower.basis)
        return out

    def generators(self, rid: int, d_max: int = EXTRACTION_SWEEP) -> GeneratorSet:
        """Minimal free-module generators, extracted degree by degree."""
        cached = self._gens.get(rid)
        if cached is not None:
            return cached
        rep = self.reps[rid]
        residue = next(k for k in range(8)
                       if CycNum.zeta(k) == self.central_scalar(rid))
        gens: list[tuple[int, VecPoly]] = []
        for d in range(residue, d_max + 1, 8):
            sl = self.slice(rid, d)
            if not sl.basis:
                continue
            reducer = RowReducer(len(sl.coords))
            for vec in self.decomposables(rid, d):
                reducer.add(vec.coeff_vector(list(sl.coords)))
            for b in sl.basis:
                res = reducer.add(b.coeff_vector(list(sl.coords)))
                if res is None:
                    continue
                if len(gens) == rep.dim:
                    raise FreenessError(
                        f"rho_{rid}: generator beyond rank {rep.dim} at degree {d}")
                gens.append((d, VecPoly.from_coeffs(list(sl.coords), res, rep.dim, d)))
        if len(gens) != rep.dim:
            raise FreenessError(
                f"rho_{rid}: {len(gens)} generators by degree {d_max}, "
                f"expected {rep.dim}")
        result = GeneratorSet(rid, tuple(gens))
        self._gens[rid] = result
        return result

    def verify_free(self, rid: int, cutoff: int | None = None) -> dict:
        """Free-module check: scaled generators fill every slice exactly.

        For each degree d <= cutoff the products theta^a phi^b g_j of degree
        d must be linearly independent and as many as the Molien coefficient.
        """
        cutoff = self.cutoff if cutoff is None else cutoff
        genset = self.generators(rid)
        series = self.molien(rid).series
        rep = self.reps[rid]
        checked = 0
        for d in range(cutoff + 1):
            prods = []
            for gdeg, g in genset.gens:
                rest = d - gdeg
                if rest < 0 or rest % 8:
                    continue
                for b in range(rest // 24 + 1):
                    rem = rest - 24 * b
                    if rem % 8 == 0:
                        prods.append(g.mul_poly(self.scalar_poly(rem // 8, b)))
            expected = series[d]
            if len(prods) != expected:
                raise FreenessError(
                    f"rho_{rid} degree {d}: {len(prods)} products, "
                    f"Molien coefficient {expected}")
            if prods:
                coords = [(j, a) for j in range(rep.dim) for a in range(d, -1, -1)]
                reducer = RowReducer(len(coords))
                for p in prods:
                    if reducer.add(p.coeff_vector(coords)) is None:
                        raise FreenessError(
                            f"rho_{rid} degree {d}: dependent products")
            checked += 1
        return {"rep": rid, "degrees_checked": checked,
                "generator_degrees": genset.degrees}

    # -- determinant factorization -----------------------------------------------------

    def det_relation(self, rid: int) -> tuple[int, int, CycNum]:
        """Factor det[generators] as c * delta^e * gamma^k; returns (e, k, c)."""
        genset = self.generators(rid)
        m = self.reps[rid].dim
        cols = [g for _, g in genset.gens]
        det = _poly_det([[cols[j].components[i] for j in range(m)]
                         for i in range(m)])
        if det.is_zero():
            raise FactorizationError(f"rho_{rid}: generator determinant is zero")
        total = det.degree()
        if total != sum(genset.degrees):
            raise FactorizationError(f"rho_{rid}: determinant degree {total}")
        rest, e = _divide_out(det, self.delta * self.delta, 2)
        if e == 0:
            rest, e = _divide_out(det, self.delta, 1)
            if e == 0:
                raise FactorizationError(f"rho_{rid}: delta does not divide")
        k, r = divmod(total - 12 * e, 6)
        if r or k < 0:
            raise FactorizationError(
                f"rho_{rid}: degree {total} incompatible with e={e}")
        rest, ok = _divide_out(rest, self.gamma ** k, 1) if k else (rest, 1)
        if not ok:
            raise FactorizationError(f"rho_{rid}: gamma^{k} does not divide")
        terms = list(rest.terms.items())
        if len(terms) != 1 or terms[0][0] != (0, 0):
            raise FactorizationError(f"rho_{rid}: nonconstant quotient {rest!r}")
        return e, k, terms[0][1]

    # -- swap-symmetry structure ----------------------------------------------------------

    def tau_structure(self, rid: int) -> list[TauRecord]:
        """Search, per generator, for a swap-symmetric representative.

        For each generator degree the affine family generator + span of the
        decomposables of that degree is searched for a vector matching the
        component pattern (f, g, s*tau(f)) with tau(g) = s*g in rank 3, or
        (f, g, s*tau(g), s*tau(f)) in rank 4, with the sign s fixed per
        representation.  Absence is reported, never silently passed.
        """
        rep = self.reps[rid]
        if rep.dim < 3:
            return []
        s = reference.TAU_SIGNS[rid]
        genset = self.generators(rid)
        records = []
        for d, g in genset.gens:
            dec = self.decomposables(rid, d)
            witness = self._tau_solve(rep.dim, s, g, dec)
            records.append(TauRecord(d, witness is not None, witness))
        return records

    @staticmethod
    def _tau_constraints(dim: int, s: int, v: VecPoly) -> list[BiPoly]:
        c = v.components
        if dim == 3:
            return [c[2] - c[0].tau().scale(s), c[1].tau() - c[1].scale(s)]
        return [c[2] - c[1].tau().scale(s), c[3] - c[0].tau().scale(s)]

    def _tau_solve(self, dim: int, s: int, g: VecPoly,
                   dec: list[VecPoly]) -> VecPoly | None:
        d = g.degree
        base = self._tau_constraints(dim, s, g)
        cols = [self._tau_constraints(dim, s, w + g) for w in dec]
        # subtract the affine part so cols hold the linear action on each w
        cols = [[cw - cb for cw, cb in zip(col, base)] for col in cols]
        rows = []
        nslots = len(base)
        for slot in range(nslots):
            for a in range(d, -1, -1):
                row = [col[slot].coeff(a, d - a) for col in cols]
                row.append(-base[slot].coeff(a, d - a))
                rows.append(row)
        reduced, pivots = rref(rows)
        if any(p == len(dec) for p in pivots):
            return None
        lam = [ZERO] * len(dec)
        for r, p in enumerate(pivots):
            lam[p] = reduced[r][len(dec)]
        v = g
        for coeff, w in zip(lam, dec):
            if not coeff.is_zero():
                v = v + w.scale(coeff)
        if any(not c.is_zero() for c in self._tau_constraints(dim, s, v)):
            raise RuntimeError("tau witness failed its own constraints")
        return v

    # -- rank-1 closed forms -----------------------------------------------------------------

    def verify_linear_generators(self) -> dict[int, CycNum]:
        """The eight rank-1 modules are generated by gamma^a delta^b.

        Returns the proportionality constant per representation; raises
        GeneratorMismatchError when an extracted generator is not a scalar
        multiple of its octahedral closed form.
        """
        out = {}
        for rid, (a, b) in reference.LINEAR_GENERATOR_POWERS.items():
            genset = self.generators(rid)
            if len(genset.gens) != 1:
                raise GeneratorMismatchError(f"rho_{rid}: expected one generator")
            d, g = genset.gens[0]
            expected = (self.gamma ** a) * (self.delta ** b)
            if d != expected.degree():
                raise GeneratorMismatchError(
                    f"rho_{rid}: generator degree {d}, expected {expected.degree()}")
            poly = g.components[0]
            _, lead = expected.leading()
            if poly != expected.normalized():
                raise GeneratorMismatchError(
                    f"rho_{rid}: generator is not proportional to the closed form")
            out[rid] = lead
        return out


def _divide_out(poly: BiPoly, divisor: BiPoly, power: int) -> tuple[BiPoly, int]:
    """Try an exact division; returns (quotient, power) or (poly, 0)."""
    from .poly import NotDivisibleError
    try:
        return poly.divide_exact(divisor), power
    except NotDivisibleError:
        return poly, 0


def _poly_det(mat: list[list[BiPoly]]) -> BiPoly:
    """Determinant of a small polynomial matrix by column expansion."""
    n = len(mat)
    memo: dict[tuple[int, ...], BiPoly] = {}

    def minor(rows: tuple[int, ...], col: int) -> BiPoly:
        if len(rows) == 1:
            return mat[rows[0]][col]
        key = rows + (col,)
        got = memo.get(key)
        if got is not None:
            return got
        acc = BiPoly()
        for pos, r in enumerate(rows):
            entry = mat[r][col]
            if entry.is_zero():
                continue
            rest = rows[:pos] + rows[pos + 1:]
            term = entry * minor(rest, col + 1)
            acc = acc + (term if pos % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return minor(tuple(range(n)), 0)


def covariance_check(vec: VecPoly, image: Mat, natural: Mat) -> bool:
    """Exact check of F(s x) = rho(s) F(x) for one group element."""
    return vec.substitute(natural) == vec.mat_apply(image)

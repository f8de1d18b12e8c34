"""Radical, nilradical, Cartan subalgebras and the structural check battery.

Characteristic 0 only for the radicals.  The radical comes from the Killing
form of the Lie quotient A/(span of squares): the radical of a Lie algebra
over Q is the Killing-orthogonal of its derived subalgebra, and pulling back
along the quotient recovers the radical of A because the kernel ideal is
abelian, hence inside every maximal solvable ideal.  The result is
re-verified (ideal + solvable) before it is returned.

The nilradical algorithm is not textbook, so it is treated as untrusted:
start from K = AR + RA (inside the nilradical by the structure theory),
build the associative envelope W of all left/right multiplications by the
radical, cut out its trace-form radical, add the elements of R whose two
multiplication operators both land in that radical, and then (a) re-verify
the result is a nilpotent ideal containing K and (b) sweep the complement of
N in R checking no single vector extends N to a larger nilpotent ideal.
Verification failures raise; they are never swallowed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import AlgebraView, LeibnizAlgebra
from .errors import (
    CartanSearchExhausted,
    InvalidParams,
    MaximalityInconclusive,
    UnsupportedCharacteristic,
    VerificationFailed,
)
from .linalg import Matrix, Subspace, Vector, nullspace
from .series import (
    ideal_closure,
    is_nilpotent,
    is_solvable,
    lower_central_limit,
)


def _require_char_zero(a: LeibnizAlgebra, what: str) -> None:
    if a.field.characteristic != 0:
        raise UnsupportedCharacteristic(
            f"{what} is computed over Q only; use the enumeration oracle over F_p"
        )


def radical(a: LeibnizAlgebra) -> Subspace:
    """Largest solvable ideal, over Q."""
    _require_char_zero(a, "radical")
    leib = a.leibniz_kernel()
    if leib.is_full():
        return a.full_space()
    qmap = a.quotient(leib)
    g = qmap.algebra
    n = g.dim
    ad = [g.left_op(g.basis_vector(i)) for i in range(n)]
    derived = g.product(g.full_space(), g.full_space())
    rows = []
    for dv in derived.basis_vectors():
        ad_d = Matrix.zeros(g.field, n, n)
        for k, c in enumerate(dv.coords):
            if not g.field.is_zero(c):
                ad_d = ad_d + ad[k].scale(c)
        rows.append(tuple((ad[i] @ ad_d).trace() for i in range(n)))
    rad_g = nullspace(Matrix(g.field, len(rows), n, tuple(rows)))
    result = qmap.preimage(rad_g)
    if not a.is_ideal(result):
        raise VerificationFailed("computed radical is not an ideal")
    if not is_solvable(a, result):
        raise VerificationFailed("computed radical is not solvable")
    return result


class AssociativeEnvelope:
    """Span of a set of n x n matrices closed under matrix multiplication
    (no identity adjoined).  Basis matrices are canonical: rows of the RREF
    of the flattened span."""

    def __init__(self, field, n: int, generators):
        self.field = field
        self.n = n
        span = Subspace.span(field, n * n, [m.flatten() for m in generators])
        while True:
            mats = [Matrix.unflatten(field, v, n, n) for v in span.basis_vectors()]
            new_rows = []
            for x in mats:
                for y in mats:
                    fl = (x @ y).flatten()
                    if not span.contains(fl):
                        new_rows.append(fl)
            if not new_rows:
                break
            span = span + Subspace.span(field, n * n, new_rows)
        self.span = span
        self.basis = [Matrix.unflatten(field, v, n, n) for v in span.basis_vectors()]

    @property
    def dim(self) -> int:
        return self.span.dim

    def contains(self, m: Matrix) -> bool:
        return self.span.contains(m.flatten())

    def trace_radical_conditions(self, m: Matrix):
        """Row of traces tr(m * b) over the envelope basis; m is in the trace
        radical iff the whole row vanishes."""
        return tuple((m @ b).trace() for b in self.basis)


def nilradical(a: LeibnizAlgebra) -> Subspace:
    """Largest nilpotent ideal, over Q; post-verified, maximality swept."""
    _require_char_zero(a, "nilradical")
    r = radical(a)
    full = a.full_space()
    k = a.product(full, r) + a.product(r, full)
    rbasis = r.basis_vectors()
    gens = []
    for v in rbasis:
        gens.append(a.left_op(v))
        gens.append(a.right_op(v))
    env = AssociativeEnvelope(a.field, a.dim, gens)
    rows = []
    for b in env.basis:
        rows.append(tuple((a.left_op(v) @ b).trace() for v in rbasis))
        rows.append(tuple((a.right_op(v) @ b).trace() for v in rbasis))
    sol = nullspace(Matrix(a.field, len(rows), len(rbasis), tuple(rows)))
    extra = [
        Subspace.span(a.field, a.dim, [r.from_coords(c)]) for c in sol.basis_vectors()
    ]
    n = k
    for s in extra:
        n = n + s
    if not a.is_ideal(n):
        raise VerificationFailed("computed nilradical is not an ideal")
    if not is_nilpotent(a, n):
        raise VerificationFailed("computed nilradical is not nilpotent")
    if not k <= n:
        raise VerificationFailed("nilradical lost the mandatory products AR + RA")
    # diagnostic sweep: no single remaining radical direction may extend N
    comp = []
    seen = n
    for v in rbasis:
        if not seen.contains(v):
            comp.append(v)
            seen = seen + Subspace.span(a.field, a.dim, [v])
    for v in comp:
        bigger = ideal_closure(a, n + Subspace.span(a.field, a.dim, [v]))
        if is_nilpotent(a, bigger):
            raise MaximalityInconclusive(
                "a larger nilpotent ideal exists; nilradical computation is incomplete"
            )
    return n


def cartan_subalgebra(
    a: LeibnizAlgebra, seed: int = 0, max_attempts: int = 64
) -> Subspace:
    """Search for a nilpotent self-normalizing subalgebra as the generalized
    kernel (Fitting null component) of a left multiplication operator.  Trial
    elements: basis vectors first, then seeded small-integer combinations.
    Every candidate is verified before being returned."""
    if max_attempts < 1:
        raise InvalidParams("max_attempts must be >= 1")
    if a.dim == 0:
        return a.zero_space()
    rng = random.Random(seed)
    attempts = 0

    def trial_vectors():
        for i in range(a.dim):
            yield a.basis_vector(i)
        while True:
            if a.field.characteristic == 0:
                coords = [rng.randint(-3, 3) for _ in range(a.dim)]
            else:
                coords = [rng.randrange(a.field.p) for _ in range(a.dim)]
            yield Vector.make(a.field, coords)

    for x in trial_vectors():
        if attempts >= max_attempts:
            break
        if x.is_zero():
            continue
        attempts += 1
        h = nullspace(a.left_op(x).power(a.dim))
        if not a.is_subalgebra(h):
            continue
        if not is_nilpotent(a, h):
            continue
        if a.normalizer(h) != h:
            continue
        return h
    raise CartanSearchExhausted(attempts)


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""


@dataclass
class StructureReport:
    solvable: bool
    nilpotent: bool
    semisimple: bool | None  # None when the radical is unavailable (char p)
    limit: Subspace  # stable term of the lower central series of A
    radical: Subspace | None
    nilradical: Subspace | None
    cartan: Subspace | None
    checks: tuple

    def all_passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


def check_structure(a: LeibnizAlgebra, seed: int = 0, max_attempts: int = 64) -> StructureReport:
    """Run the structural identities that admit a direct decision on A itself
    and report each as pass/fail/skipped."""
    full = a.full_space()
    solvable = is_solvable(a, full)
    nilpotent = is_nilpotent(a, full)
    limit = lower_central_limit(a, full)
    checks = []

    try:
        h = cartan_subalgebra(a, seed=seed, max_attempts=max_attempts)
    except CartanSearchExhausted as exc:
        h = None
        checks.append(
            TheoremCheck(
                "limit_plus_cartan_spans",
                "skipped",
                f"no Cartan subalgebra found in {exc.attempts} attempts",
            )
        )
    if h is not None:
        ok = (limit + h) == full
        checks.append(
            TheoremCheck(
                "limit_plus_cartan_spans",
                "pass" if ok else "fail",
                "A equals the lower-central limit plus a Cartan subalgebra",
            )
        )

    rad = nil = None
    semisimple = None
    if a.field.characteristic == 0:
        rad = radical(a)
        nil = nilradical(a)
        semisimple = rad.is_zero()
        mixed = a.product(full, rad) + a.product(rad, full)
        checks.append(
            TheoremCheck(
                "radical_products_in_nilradical",
                "pass" if mixed <= nil else "fail",
                "AR + RA lies in the nilradical",
            )
        )
        if solvable:
            sq = a.product(full, full)
            checks.append(
                TheoremCheck(
                    "solvable_square_nilpotent",
                    "pass" if is_nilpotent(a, sq) else "fail",
                    "A solvable implies A^2 nilpotent",
                )
            )
        else:
            checks.append(
                TheoremCheck("solvable_square_nilpotent", "skipped", "A is not solvable")
            )
        sq_meet_r = a.product(full, full).intersect(rad)
        checks.append(
            TheoremCheck(
                "square_meet_radical_equals_radical_products",
                "pass" if sq_meet_r == mixed else "fail",
                "A^2 meet R equals AR + RA",
            )
        )
        if rad.is_zero():
            nil_of_rad_ok = nil.is_zero()
        else:
            rview = AlgebraView(a, rad)
            nil_of_rad = rview.to_parent_subspace(nilradical(rview.algebra))
            nil_of_rad_ok = nil_of_rad == nil
        checks.append(
            TheoremCheck(
                "nilradical_matches_radical_nilradical",
                "pass" if nil_of_rad_ok else "fail",
                "nilradical of A equals the nilradical of its radical",
            )
        )
    else:
        for name in (
            "radical_products_in_nilradical",
            "solvable_square_nilpotent",
            "square_meet_radical_equals_radical_products",
            "nilradical_matches_radical_nilradical",
        ):
            checks.append(TheoremCheck(name, "skipped", "radical unavailable over F_p"))

    return StructureReport(
        solvable=solvable,
        nilpotent=nilpotent,
        semisimple=semisimple,
        limit=limit,
        radical=rad,
        nilradical=nil,
        cartan=h,
        checks=tuple(checks),
    )

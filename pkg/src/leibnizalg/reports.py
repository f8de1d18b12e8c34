"""Assemble JSON-ready report payloads for the service and CLI.

Everything returned here is a plain dict of JSON types with deterministic
key order and canonical subspace rows, so serialized reports are
byte-reproducible across runs.
"""

from __future__ import annotations

from .algebra import AlgebraView, LeibnizAlgebra
from .errors import CartanSearchExhausted
from .linalg import Subspace
from .serialize import algebra_to_dict, field_to_dict, subspace_to_rows
from .series import (
    derived_series,
    ideal_closure,
    is_nilpotent,
    is_solvable,
    lower_central_limit,
    lower_central_series,
    subalgebra_closure,
    two_sided_power,
    two_sided_product,
)
from .structure import TheoremCheck, cartan_subalgebra, check_structure, nilradical, radical
from .subinvariance import is_subinvariant


def validate_report(a: LeibnizAlgebra) -> dict:
    return {
        "name": a.name,
        "field": field_to_dict(a.field),
        "dim": a.dim,
        "valid": True,
    }


def _series_block(sr) -> dict:
    return {
        "dims": [t.dim for t in sr.terms],
        "terms": [subspace_to_rows(t) for t in sr.terms],
        "stabilized_at": sr.stabilized_at,
    }


def series_report(a: LeibnizAlgebra, sub: Subspace | None = None) -> dict:
    b = sub if sub is not None else a.full_space()
    lc = lower_central_series(a, b)
    dv = derived_series(a, b)
    return {
        "subspace_dim": b.dim,
        "lower_central": _series_block(lc),
        "derived": _series_block(dv),
        "limit": subspace_to_rows(lc.stable),
        "nilpotent": lc.reaches_zero(),
        "solvable": dv.reaches_zero(),
    }


def subinvariant_report(a: LeibnizAlgebra, b: Subspace) -> dict:
    res = is_subinvariant(a, b)
    if res.subinvariant:
        return {
            "subinvariant": True,
            "chain_dims": [t.dim for t in res.chain.terms],
            "chain": [subspace_to_rows(t) for t in res.chain.terms],
            "obstruction": None,
        }
    return {
        "subinvariant": False,
        "chain_dims": None,
        "chain": None,
        "obstruction": subspace_to_rows(res.obstruction),
    }


def radical_report(a: LeibnizAlgebra) -> dict:
    r = radical(a)
    return {"radical": subspace_to_rows(r), "dim": r.dim}


def nilradical_report(a: LeibnizAlgebra) -> dict:
    n = nilradical(a)
    return {"nilradical": subspace_to_rows(n), "dim": n.dim}


def cartan_report(a: LeibnizAlgebra, seed: int = 0, max_attempts: int = 64) -> dict:
    try:
        h = cartan_subalgebra(a, seed=seed, max_attempts=max_attempts)
    except CartanSearchExhausted as exc:
        return {"status": "search_exhausted", "cartan": None, "dim": None, "attempts": exc.attempts}
    return {"status": "found", "cartan": subspace_to_rows(h), "dim": h.dim, "attempts": None}


def analyze_report(a: LeibnizAlgebra, seed: int = 0, max_attempts: int = 64) -> dict:
    full = a.full_space()
    lc = lower_central_series(a, full)
    dv = derived_series(a, full)
    notes = []
    out = {
        "name": a.name,
        "field": field_to_dict(a.field),
        "dim": a.dim,
        "valid": True,
        "leibniz_kernel": subspace_to_rows(a.leibniz_kernel()),
        "left_center": subspace_to_rows(a.left_center()),
        "right_center": subspace_to_rows(a.right_center()),
        "center": subspace_to_rows(a.center()),
        "lower_central_dims": [t.dim for t in lc.terms],
        "derived_dims": [t.dim for t in dv.terms],
        "limit": subspace_to_rows(lc.stable),
        "solvable": dv.reaches_zero(),
        "nilpotent": lc.reaches_zero(),
    }
    if a.field.characteristic == 0:
        r = radical(a)
        n = nilradical(a)
        out["semisimple"] = r.is_zero()
        out["radical"] = subspace_to_rows(r)
        out["nilradical"] = subspace_to_rows(n)
    else:
        out["semisimple"] = None
        out["radical"] = None
        out["nilradical"] = None
        notes.append("radical/nilradical unavailable over F_p; see oracle-check")
    cr = cartan_report(a, seed=seed, max_attempts=max_attempts)
    out["cartan_status"] = cr["status"]
    out["cartan"] = cr["cartan"]
    out["notes"] = notes
    return out


def tower_report(a: LeibnizAlgebra, max_stages: int = 16) -> dict:
    from .derivations import tower

    rep = tower(a, max_stages=max_stages)
    return {
        "stages": [
            {
                "dim": s.dim,
                "center_dim": s.center_dim,
                "inner_dim": s.inner_dim,
                "der_dim": s.der_dim,
                "complete": s.complete,
            }
            for s in rep.stages
        ],
        "terminated": rep.terminated,
        "limit_dim": rep.limit_dim,
        "bound_value": rep.bound_value,
        "bound_holds": rep.bound_holds,
    }


def candidate_subalgebras(a: LeibnizAlgebra, cap: int = 48) -> list:
    """Deterministic pool of subalgebras used by the theorem battery."""
    pool = []
    seen = set()

    def push(s: Subspace) -> None:
        if len(pool) >= cap or s in seen:
            return
        if a.is_subalgebra(s):
            seen.add(s)
            pool.append(s)

    full = a.full_space()
    push(full)
    push(a.zero_space())
    for t in lower_central_series(a, full).terms:
        push(t)
    for t in derived_series(a, full).terms:
        push(t)
    push(a.leibniz_kernel())
    push(a.left_center())
    push(a.right_center())
    push(a.center())
    for i in range(a.dim):
        line = Subspace.span(a.field, a.dim, [a.basis_vector(i)])
        push(subalgebra_closure(a, line))
        push(ideal_closure(a, subalgebra_closure(a, line)))
    if a.field.characteristic == 0:
        push(radical(a))
        push(nilradical(a))
    return pool


def theorem_battery(a: LeibnizAlgebra, seed: int = 0, max_attempts: int = 64) -> list:
    """Structure checks plus the subinvariance-driven statements, each as a
    TheoremCheck.  Statements that are theorems only over Q are evaluated
    over F_p too when the enumeration oracle is in scope; a falsified one is
    reported as an expected characteristic-p finding ('info'), not a failure."""
    checks = list(check_structure(a, seed=seed, max_attempts=max_attempts).checks)
    full = a.full_space()
    limit = lower_central_limit(a, full)
    char0 = a.field.characteristic == 0

    rad = nil = None
    rad_src = None
    if char0:
        rad, nil = radical(a), nilradical(a)
        rad_src = "exact"
    else:
        from .errors import ScopeExceeded, UnsupportedField, UnsupportedP
        from .oracle import oracle_rad_nilrad

        try:
            rad, nil = oracle_rad_nilrad(a)
            rad_src = "oracle"
        except (ScopeExceeded, UnsupportedField, UnsupportedP):
            rad = nil = None

    pool = candidate_subalgebras(a)
    subinv = [s for s in pool if is_subinvariant(a, s, refine=False).subinvariant]

    # limits of subinvariant subalgebras are ideals
    bad = [s for s in subinv if not a.is_ideal(lower_central_limit(a, s))]
    checks.append(
        TheoremCheck(
            "subinvariant_limit_is_ideal",
            "pass" if not bad else "fail",
            f"{len(subinv)} subinvariant subalgebras checked",
        )
    )
    # idempotent subinvariant subalgebras are ideals
    idem = [s for s in subinv if a.product(s, s) == s]
    bad = [s for s in idem if not a.is_ideal(s)]
    checks.append(
        TheoremCheck(
            "idempotent_subinvariant_is_ideal",
            "pass" if not bad else "fail",
            f"{len(idem)} idempotent instances",
        )
    )
    # two-sided product absorption: (B^n) wrapped once inside n-fold wraps
    pairs = [(b, c) for b in pool[:4] for c in pool[:4]][:8]
    absorb_bad = 0
    for b, c in pairs:
        power = b
        for n in range(1, 4):
            if n > 1:
                power = a.product(b, power)
            if not two_sided_product(a, power, c) <= two_sided_power(a, b, c, n):
                absorb_bad += 1
    checks.append(
        TheoremCheck(
            "two_sided_product_power_containment",
            "pass" if absorb_bad == 0 else "fail",
            f"{len(pairs)} subspace pairs, powers up to 3",
        )
    )
    # nilpotent ideal meets the center
    if is_nilpotent(a, full) and a.dim > 0:
        ideals = [s for s in pool if not s.is_zero() and a.is_ideal(s)]
        bad = [s for s in ideals if s.intersect(a.center()).is_zero()]
        checks.append(
            TheoremCheck(
                "nonzero_ideal_meets_center_when_nilpotent",
                "pass" if not bad else "fail",
                f"{len(ideals)} nonzero ideals checked",
            )
        )
    else:
        checks.append(
            TheoremCheck(
                "nonzero_ideal_meets_center_when_nilpotent", "skipped", "A is not nilpotent"
            )
        )
    # centralizer of the limit vs the center
    zl = a.centralizer(limit, "both")
    if not zl <= limit:
        checks.append(
            TheoremCheck(
                "limit_centralizer_escape_forces_center",
                "pass" if not a.center().is_zero() else "fail",
                "centralizer of the limit escapes the limit",
            )
        )
    else:
        checks.append(
            TheoremCheck(
                "limit_centralizer_escape_forces_center",
                "skipped",
                "centralizer of the limit stays inside it (vacuous)",
            )
        )
    # trivial centralizer confines the limit centralizer
    vacuous = 0
    bad = 0
    for s in subinv:
        if a.centralizer(s, "both").is_zero():
            s_limit = lower_central_limit(a, s)
            if not a.centralizer(s_limit, "both") <= s_limit:
                bad += 1
        else:
            vacuous += 1
    checks.append(
        TheoremCheck(
            "trivial_centralizer_confines_limit_centralizer",
            "pass" if bad == 0 else "fail",
            f"{len(subinv) - vacuous} live instances, {vacuous} vacuous",
        )
    )
    # solvable/nilpotent subinvariant subalgebras land in the radicals
    if rad is not None:
        solv_bad = [s for s in subinv if is_solvable(a, s) and not s <= rad]
        nilp_bad = [s for s in subinv if is_nilpotent(a, s) and not s <= nil]
        for name, offenders in (
            ("solvable_subinvariant_in_radical", solv_bad),
            ("nilpotent_subinvariant_in_nilradical", nilp_bad),
        ):
            if offenders:
                status = "fail" if char0 else "info"
                detail = (
                    f"{len(offenders)} offenders"
                    if char0
                    else f"{len(offenders)} offenders (expected characteristic-p finding)"
                )
            else:
                status = "pass"
                detail = f"radical source: {rad_src}"
            checks.append(TheoremCheck(name, status, detail))
    else:
        for name in ("solvable_subinvariant_in_radical", "nilpotent_subinvariant_in_nilradical"):
            checks.append(TheoremCheck(name, "skipped", "no radical available at this size"))
    # radicals of ideals are ideals of A, and restriction matches (char 0)
    if char0:
        ideals = [
            s for s in pool if 0 < s.dim < a.dim and a.is_ideal(s)
        ][:6]
        bad = 0
        for s in ideals:
            view = AlgebraView(a, s)
            rad_s = view.to_parent_subspace(radical(view.algebra))
            nil_s = view.to_parent_subspace(nilradical(view.algebra))
            if not a.is_ideal(rad_s) or not a.is_ideal(nil_s):
                bad += 1
            if rad_s != s.intersect(rad) or nil_s != s.intersect(nil):
                bad += 1
        checks.append(
            TheoremCheck(
                "ideal_radicals_restrict_globally",
                "pass" if bad == 0 else "fail",
                f"{len(ideals)} proper nonzero ideals checked",
            )
        )
        subs = [s for s in subinv if 0 < s.dim < a.dim][:6]
        bad = 0
        for s in subs:
            view = AlgebraView(a, s)
            if view.to_parent_subspace(radical(view.algebra)) != s.intersect(rad):
                bad += 1
            if view.to_parent_subspace(nilradical(view.algebra)) != s.intersect(nil):
                bad += 1
        checks.append(
            TheoremCheck(
                "subinvariant_radical_restriction",
                "pass" if bad == 0 else "fail",
                f"{len(subs)} proper subinvariant subalgebras checked",
            )
        )
    else:
        checks.append(
            TheoremCheck("ideal_radicals_restrict_globally", "skipped", "char 0 only")
        )
        checks.append(
            TheoremCheck("subinvariant_radical_restriction", "skipped", "char 0 only")
        )
    return checks


def theorems_report(a: LeibnizAlgebra, seed: int = 0) -> dict:
    checks = theorem_battery(a, seed=seed)
    counts = {"pass": 0, "fail": 0, "skipped": 0, "info": 0}
    for c in checks:
        counts[c.status] = counts.get(c.status, 0) + 1
    return {
        "algebra": {"name": a.name, "field": field_to_dict(a.field), "dim": a.dim},
        "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in checks],
        "counts": counts,
        "all_passed": counts["fail"] == 0,
    }


def oracle_check_report(a: LeibnizAlgebra) -> dict:
    """Certify the fast subinvariance path and closure minimality against the
    exhaustive oracle on one algebra (enumeration scope applies)."""
    from .oracle import (
        DEFAULT_SCOPE,
        enumerate_subalgebras,
        enumerate_subspaces,
        oracle_minimal_ideal_above,
        oracle_subinvariant,
    )

    DEFAULT_SCOPE.check(a.field, a.dim)
    memo: dict = {}
    sub_mismatches = []
    checked = 0
    for s in enumerate_subalgebras(a):
        checked += 1
        fast = is_subinvariant(a, s, refine=False).subinvariant
        slow = oracle_subinvariant(a, s, _memo=memo)
        if fast != slow:
            sub_mismatches.append(subspace_to_rows(s))
    closure_checked = 0
    closure_mismatches = []
    for s in enumerate_subspaces(a.field, a.dim):
        closure_checked += 1
        fast = ideal_closure(a, s)
        slow = oracle_minimal_ideal_above(a, s)
        if fast != slow:
            closure_mismatches.append(subspace_to_rows(s))
    return {
        "algebra": {"name": a.name, "field": field_to_dict(a.field), "dim": a.dim},
        "subalgebras_checked": checked,
        "subinvariance_mismatches": sub_mismatches,
        "closure_seeds_checked": closure_checked,
        "closure_mismatches": closure_mismatches,
        "status": "ok" if not sub_mismatches and not closure_mismatches else "mismatch",
    }

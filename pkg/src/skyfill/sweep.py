"""Exhaustive per-composition verification used by ``skyfill verify``."""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from .core import Composition, Filling, check_non_attacking, compositions, enumerate_ssf, weight
from .demazure import key_combinatorial, key_recursive
from .derivation import (
    VerificationReport,
    derived_fillings,
    first_ascent,
    generate_inductive,
    inverse_derived,
    verify_pi_identity,
)
from .involution import Kind, classify, classify_fast, lower, phi, phi_row, raise_


def _fixed_cells(F: Filling, t: int) -> set:
    # paired columns may swap t and t+1 vertically; the cells themselves stay put
    cls = classify(F, t)
    return {
        (c, k.kind)
        for c, k in cls.classes.items()
        if k.kind in (Kind.PAIRED, Kind.PSEUDO_FREE)
    }


def involution_failures(F: Filling) -> list[str]:
    """Every property of lower/raise/phi that fails on ``F`` (empty when all hold)."""
    out = []
    n = F.n
    for t in range(1, n):
        cls = classify(F, t)
        if cls != classify_fast(F, t):
            out.append(f"classification t={t}")
        for r in range(t, n + 1):
            n1, n2 = cls.free_counts(r)
            L = lower(F, r, t)
            if not L.is_ssf:
                out.append(f"lower closure r={r} t={t}")
            if r >= t + 1:
                R = raise_(F, r, t)
                if not R.is_ssf:
                    out.append(f"raise closure r={r} t={t}")
                if n1 and raise_(L, r, t) != F:
                    out.append(f"raise(lower) r={r} t={t}")
                if n2 and lower(R, r, t) != F:
                    out.append(f"lower(raise) r={r} t={t}")
                P = phi(F, r, t)
                if phi(P, r, t) != F:
                    out.append(f"phi involution r={r} t={t}")
                if classify(P, t).free_counts(r) != (n2, n1):
                    out.append(f"free-count exchange r={r} t={t}")
                w, wp = weight(F), weight(P)
                if (
                    w[t - 1] + w[t] != wp[t - 1] + wp[t]
                    or any(a != b for k, (a, b) in enumerate(zip(w, wp)) if k not in (t - 1, t))
                ):
                    out.append(f"weight exchange r={r} t={t}")
                if _fixed_cells(F, t) != _fixed_cells(P, t):
                    out.append(f"paired/pseudo-free cells moved r={r} t={t}")
        rows = range(t + 1, n + 1)
        for r in rows:
            for rp in rows:
                if r < rp and phi(phi(F, r, t), rp, t) != phi(phi(F, rp, t), r, t):
                    out.append(f"commutativity r={r} r'={rp} t={t}")
    for r in range(1, n):
        if phi_row(phi_row(F, r), r) != F:
            out.append(f"phi_row involution r={r}")
    return out


def verify_composition(alpha: Composition) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport(alpha)
    ssf = enumerate_ssf(alpha)

    bad = next((F for F in ssf if not (F.is_ssf and check_non_attacking(F))), None)
    report.add("ssf_valid_non_attacking", bad is None, bad and bad.to_json())

    kr, kc = key_recursive(alpha), key_combinatorial(alpha)
    report.add("key_identity", kr == kc, None if kr == kc else {"recursive": str(kr), "combinatorial": str(kc)})

    inv_fail = None
    for F in ssf:
        fails = involution_failures(F)
        if fails:
            inv_fail = {"filling": F.to_json(), "failed": fails}
            break
    report.add("involution_suite", inv_fail is None, inv_fail)

    r = first_ascent(alpha)
    if r is not None:
        for c in verify_pi_identity(alpha).checks:
            report.checks.append(c)

        alpha_p = alpha.swapped(r)
        seen: Counter = Counter()
        size_fail = None
        for Fp in enumerate_ssf(alpha_p):
            fam = derived_fillings(Fp, alpha)
            m = len(classify(Fp, r).free_columns(r, r))
            if len(fam.members) != m + 1 and size_fail is None:
                size_fail = Fp.to_json()
            seen.update(fam.members)
        disjoint = all(v == 1 for v in seen.values())
        covers = set(seen) == set(ssf)
        report.add("derived_families_partition", disjoint and covers and size_fail is None, size_fail)

        gen = generate_inductive(alpha)
        report.add("inductive_generation", Counter(gen) == Counter(ssf))

        inv_bad = None
        for F in ssf:
            Fp, k = inverse_derived(F, alpha)
            if derived_fillings(Fp, alpha).members[k] != F:
                inv_bad = F.to_json()
                break
        report.add("inverse_derived_round_trip", inv_bad is None, inv_bad)

    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def sweep(family: Iterable[Composition], jobs: int = 1) -> list[VerificationReport]:
    """Verify every composition; results come back in input order."""
    family = list(family)
    if jobs <= 1:
        return [verify_composition(a) for a in family]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_composition, family, chunksize=4))


def family(max_n: int, max_part: int) -> list[Composition]:
    return list(compositions(max_n, max_part))

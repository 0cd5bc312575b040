"""Finite sweeps over the open conjectures about W_{n,k}(t) and its symmetric parts.

A report only ever states what happened on the swept range.  Failing
instances carry every polynomial involved so they can be replayed.
"""
from __future__ import annotations

import time
from fractions import Fraction
from dataclasses import asdict, dataclass, field

from .counting import binomial, catalan
from .errors import DyckFactorsError
from .polynomials import (
    Poly,
    bar_narayana_poly,
    interlaces,
    is_real_rooted,
    narayana_poly,
    symmetric_decomposition,
    w_poly,
)


@dataclass
class ConjectureReport:
    id: int
    name: str
    range: dict
    verdicts: list = field(default_factory=list)
    counterexample: dict | None = None
    notes: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(v["pass"] for v in self.verdicts)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def _record(self, verdict: dict, witness: dict | None = None) -> None:
        self.verdicts.append(verdict)
        if not verdict["pass"] and self.counterexample is None:
            self.counterexample = {**verdict, **(witness or {})}


def _real_rooted_or_zero(p: Poly) -> bool:
    # a vanishing part imposes no condition on the roots
    return p.is_zero() or is_real_rooted(p)


def check_sturm_sequence(k: int, n_max: int) -> ConjectureReport:
    """``W_{k,k} -> W_{k+1,k} -> ... -> W_{n_max,k}``."""
    if k < 1 or n_max < k:
        raise DyckFactorsError("need k >= 1 and n_max >= k")
    start = time.perf_counter()
    rep = ConjectureReport(1, "W_{n,k} form a Sturm sequence in n", {"k": k, "n_max": n_max})
    for n in range(k, n_max):
        g, f = w_poly(n, k), w_poly(n + 1, k)
        ok = interlaces(g, f)
        rep._record({"n": n, "pass": ok}, {"g": g.to_list(), "f": f.to_list()})
    rep.wall_time = time.perf_counter() - start
    return rep


def unimodal_pivots(n: int) -> list[int]:
    """All ``j`` with ``W_{n,1} -> ... -> W_{n,j} <- ... <- W_{n,n}``."""
    polys = [w_poly(n, k) for k in range(1, n + 1)]
    fwd = [interlaces(polys[i], polys[i + 1]) for i in range(n - 1)]
    bwd = [interlaces(polys[i + 1], polys[i]) for i in range(n - 1)]
    return [j for j in range(1, n + 1) if all(fwd[: j - 1]) and all(bwd[j - 1:])]


def check_sturm_unimodal(n_max: int, n_min: int = 1) -> ConjectureReport:
    if n_min < 1 or n_max < n_min:
        raise DyckFactorsError("need 1 <= n_min <= n_max")
    start = time.perf_counter()
    rep = ConjectureReport(2, "W_{n,1}, ..., W_{n,n} is Sturm-unimodal", {"n_min": n_min, "n_max": n_max})
    for n in range(n_min, n_max + 1):
        pivots = unimodal_pivots(n)
        rep._record({"n": n, "pass": bool(pivots), "pivots": pivots},
                    {"polys": [w_poly(n, k).to_list() for k in range(1, n + 1)]})
    rep.wall_time = time.perf_counter() - start
    return rep


def predicted_real_rooted_ks(n: int) -> set[int]:
    """The k for which both symmetric parts are conjectured real-rooted."""
    h = n // 2
    if n in (1, 2):
        ks = {1}
    elif n % 4 == 1:
        ks = {1, 2, h - 1, h, h + 1}
    elif n % 4 == 3:
        ks = {1, 2, h - 1, h, h + 1, h + 2}
    elif n in (10, 12, 16):
        ks = {1, 2, h - 2, h - 1, h, h + 1}
    else:
        ks = {1, 2, h - 1, h, h + 1}
    return {k for k in ks if 1 <= k <= n}


def observed_real_rooted_ks(n: int) -> set[int]:
    out = set()
    for k in range(1, n + 1):
        dec = symmetric_decomposition(n, k)
        if _real_rooted_or_zero(dec.plus) and _real_rooted_or_zero(dec.minus):
            out.add(k)
    return out


def check_realroot_characterization(n_max: int = 30) -> ConjectureReport:
    if n_max < 1:
        raise DyckFactorsError("need n_max >= 1")
    start = time.perf_counter()
    rep = ConjectureReport(3, "characterization of real-rooted symmetric parts", {"n_max": n_max})
    rep.notes.append("a part that vanishes identically is counted as real-rooted")
    for n in range(1, n_max + 1):
        seen, want = observed_real_rooted_ks(n), predicted_real_rooted_ks(n)
        witness = {}
        if seen != want:
            witness = {"parts": {k: {"plus": symmetric_decomposition(n, k).plus.to_list(),
                                     "minus": symmetric_decomposition(n, k).minus.to_list()}
                                 for k in sorted(seen ^ want)}}
        rep._record({"n": n, "pass": seen == want, "observed": sorted(seen), "predicted": sorted(want)}, witness)
    rep.wall_time = time.perf_counter() - start
    return rep


def w2k_closed_forms(k: int) -> dict[str, Poly]:
    """The conjectured closed forms, keyed by the part they describe."""
    nar = narayana_poly(k - 1)
    return {
        "W+_{2k,k}": nar * ((k - 1) * catalan(k)),
        "W-_{2k,k}": Poly(catalan(k) * binomial(k - 1, i) ** 2 for i in range(k)),
        "W-_{2k,k+1}": nar * binomial(2 * k, k),
        "W+_{2k,k-1}": bar_narayana_poly(k - 2, 1).shift(1) * (Fraction(-1, 2) * binomial(2 * k, k - 2)),
    }


def check_w2k_formulas(k_max: int) -> ConjectureReport:
    """Compare decomposition output with the conjectured formulas for ``2 <= k <= k_max``.

    The formula for ``W+_{2k,k-1}`` is negative while ``W+`` is built from
    absolute values, so it is checked against both the signed partial sums
    and their absolute values, and the report says which one matched.
    """
    if k_max < 2:
        raise DyckFactorsError("need k_max >= 2")
    start = time.perf_counter()
    rep = ConjectureReport(4, "closed forms for W+-_{2k,k}, W-_{2k,k+1}, W+_{2k,k-1}", {"k_min": 2, "k_max": k_max})
    rep.notes.append("W+_{2k,k-1}: formula is compared with the signed sum of w+_i t^i and with the absolute-value part")
    for k in range(2, k_max + 1):
        forms = w2k_closed_forms(k)
        mid = symmetric_decomposition(2 * k, k)
        up = symmetric_decomposition(2 * k, k + 1)
        low = symmetric_decomposition(2 * k, k - 1)
        signed = Poly(low.raw_plus)
        checks = {
            "W+_{2k,k}": mid.plus == forms["W+_{2k,k}"],
            "W-_{2k,k}": mid.minus == forms["W-_{2k,k}"],
            "W-_{2k,k+1}": up.minus == forms["W-_{2k,k+1}"],
            "W+_{2k,k-1} signed": signed == forms["W+_{2k,k-1}"],
            "W+_{2k,k-1} absolute": low.plus == forms["W+_{2k,k-1}"],
        }
        # either reading of the sign counts as agreement; the notes say which held where
        ok = checks["W+_{2k,k}"] and checks["W-_{2k,k}"] and checks["W-_{2k,k+1}"] and (
            checks["W+_{2k,k-1} signed"] or checks["W+_{2k,k-1} absolute"])
        witness = {"forms": {key: p.to_list() for key, p in forms.items()},
                   "computed": {"W+_{2k,k}": mid.plus.to_list(), "W-_{2k,k}": mid.minus.to_list(),
                                "W-_{2k,k+1}": up.minus.to_list(), "w+_{2k,k-1} signed": list(low.raw_plus),
                                "W+_{2k,k-1}": low.plus.to_list()}}
        rep._record({"k": k, "pass": ok, "checks": checks}, witness)
    for reading in ("signed", "absolute"):
        hits = [v["k"] for v in rep.verdicts if v["checks"][f"W+_{{2k,k-1}} {reading}"]]
        rep.notes.append(f"W+_{{2k,k-1}} {reading} reading matches for k in {hits}")
    rep.wall_time = time.perf_counter() - start
    return rep

"""Search (A, B, S) configurations for the smallest restricted sumset.

Scans are vectorised over B: for fixed A and S, every candidate B is one entry
of a uint64 array and C is built with |A| masked rotations of that array.

Symmetry: (A, B, S) -> (uA+t, uB+s, uS+(t-s)) preserves |C| for every unit u
and all t, s. Reduced scans therefore take A from one representative per
affine orbit and B from one representative per translation class; every
orbit of triples meets that set, so the minimum is unchanged.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import CheckFailure, PreconditionError
from .residue import (BoundReport, PrimeModulus, ResidueSet, as_modulus, bound_table,
                      dilate_mask, negate_mask, pan_sun_applies, restricted_sumset_mask,
                      rotate)

MAX_WITNESSES = 10
DEFAULT_BUDGET = 10**8
SCAN_PRIME_CEILING = 61


# ---------------------------------------------------------------- bit tricks

def _rot_arr(arr: np.ndarray, t: int, p: int) -> np.ndarray:
    t %= p
    if t == 0:
        return arr
    full = np.uint64((1 << p) - 1)
    return ((arr << np.uint64(t)) | (arr >> np.uint64(p - t))) & full


def masks_of_size(p: int, n: int) -> np.ndarray:
    """All n-subsets of Z_p as bitmasks, ascending."""
    out = [sum(1 << x for x in c) for c in itertools.combinations(range(p), n)]
    return np.array(sorted(out), dtype=np.uint64)


def nonempty_masks(p: int) -> np.ndarray:
    return np.arange(1, 1 << p, dtype=np.uint64)


def _min_translate(arr: np.ndarray, p: int) -> np.ndarray:
    best = arr.copy()
    for t in range(1, p):
        np.minimum(best, _rot_arr(arr, t, p), out=best)
    return best


def translation_reps(p: int, n: int) -> np.ndarray:
    arr = masks_of_size(p, n)
    return arr[_min_translate(arr, p) == arr]


def affine_reps(p: int, n: int) -> list[int]:
    """Smallest mask in each orbit of n-subsets under x -> ux + t."""
    arr = masks_of_size(p, n)
    best = arr.copy()
    for u in range(1, p):
        dil = np.array([dilate_mask(int(x), u, p) for x in arr], dtype=np.uint64)
        np.minimum(best, _min_translate(dil, p), out=best)
    return [int(x) for x in arr[best == arr]]


def restricted_sumset_masks(a_mask: int, s_mask: int, b_arr: np.ndarray, p: int) -> np.ndarray:
    """C masks for fixed A, S and every B in ``b_arr``."""
    full = (1 << p) - 1
    neg_s = negate_mask(s_mask, p)
    out = np.zeros_like(b_arr)
    x = 0
    a = a_mask
    while a:
        if a & 1:
            allowed = np.uint64(full & ~rotate(neg_s, x, p))
            out |= _rot_arr(b_arr & allowed, x, p)
        a >>= 1
        x += 1
    return out


def popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).astype(np.int64)


# ------------------------------------------------------------- canonical form

def _image(A: int, B: int, S: int, u: int, t: int, s: int, p: int) -> tuple[int, int, int]:
    return (rotate(dilate_mask(A, u, p), t, p),
            rotate(dilate_mask(B, u, p), s, p),
            rotate(dilate_mask(S, u, p), t - s, p))


def canonicalize(A: ResidueSet, B: ResidueSet, S: ResidueSet) -> tuple[ResidueSet, ResidueSet, ResidueSet]:
    """Lexicographically least (A, B, S) mask triple in the orbit.

    The group is (u, t, s) acting by (uA+t, uB+s, uS+(t-s)) together with
    the swap (A, B, S) -> (B, A, -S).
    """
    m = A.modulus
    if B.modulus != m or S.modulus != m:
        raise PreconditionError("A, B and S must share the modulus")
    p = m.p
    starts = [(A.mask, B.mask, S.mask), (B.mask, A.mask, negate_mask(S.mask, p))]
    best = None
    for a, b, s_ in starts:
        for u in range(1, p):
            for t in range(p):
                for s in range(p):
                    img = _image(a, b, s_, u, t, s, p)
                    if best is None or img < best:
                        best = img
    return ResidueSet(m, best[0]), ResidueSet(m, best[1]), ResidueSet(m, best[2])


# ------------------------------------------------------------------- reports

@dataclass(frozen=True)
class SearchSpec:
    p: int
    nA: int
    nB: int
    nS: int
    mode: str = "exhaustive"
    count: int = 0
    seed: int = 0
    symmetry_reduction: bool = True
    workers: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        as_modulus(self.p).check_ceiling(SCAN_PRIME_CEILING)
        if not (1 <= self.nA <= self.p and 1 <= self.nB <= self.p and 0 <= self.nS <= self.p):
            raise PreconditionError(
                f"sizes must satisfy 1 <= nA, nB <= p and 0 <= nS <= p "
                f"(got nA={self.nA}, nB={self.nB}, nS={self.nS}, p={self.p})")
        if self.mode not in ("exhaustive", "sampled"):
            raise PreconditionError(f"unknown mode {self.mode!r}")
        if self.count < 0:
            raise PreconditionError("sample count must be >= 0")
        if self.workers < 1:
            raise PreconditionError("workers must be >= 1")

    def to_dict(self) -> dict:
        d = {"p": self.p, "nA": self.nA, "nB": self.nB, "nS": self.nS, "mode": self.mode}
        if self.mode == "sampled":
            d.update(count=self.count, seed=self.seed)
        else:
            d.update(symmetry_reduction=self.symmetry_reduction)
        return d


@dataclass
class SearchReport:
    spec: SearchSpec
    min_C: int
    extremal_witnesses: list
    bounds: BoundReport
    tight_thm2: bool
    tight_pan_sun: bool | None
    conjecture_value: int
    conjecture_tight: bool
    conjecture_violated: bool
    configs_scanned: int
    empty: bool = False
    upper_bound: bool = False
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "spec": self.spec.to_dict(),
            "min_C": self.min_C,
            "extremal_witnesses": [
                {"A": ResidueSet(as_modulus(self.spec.p), a).to_list(),
                 "B": ResidueSet(as_modulus(self.spec.p), b).to_list(),
                 "S": ResidueSet(as_modulus(self.spec.p), s).to_list()}
                for a, b, s in self.extremal_witnesses],
            "bounds": self.bounds.to_dict(),
            "tight_thm2": self.tight_thm2,
            "tight_pan_sun": self.tight_pan_sun,
            "conjecture": {"value": self.conjecture_value, "tight": self.conjecture_tight,
                           "violated": self.conjecture_violated},
            "configs_scanned": self.configs_scanned,
            "empty": self.empty,
            "upper_bound": self.upper_bound,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d


def conjecture_bound(p: int, nA: int, nB: int, nS: int) -> int:
    """min{p, nA+nB-nS-1}, clamped at 0."""
    return max(0, min(p, nA + nB - nS - 1))


def _finish(spec: SearchSpec, min_C: int, witnesses, scanned: int, empty=False,
            upper_bound=False, elapsed=0.0) -> SearchReport:
    p = spec.p
    bounds = bound_table(p, spec.nA, spec.nB, spec.nS)
    if not empty:
        if min_C < bounds.thm2:
            raise CheckFailure("thm2_bound", f"min |C| = {min_C} < {bounds.thm2} for {spec}: "
                                             f"witnesses {witnesses}")
        if pan_sun_applies(p, spec.nS) and min_C < bounds.pan_sun:
            raise CheckFailure("pan_sun_bound", f"min |C| = {min_C} < {bounds.pan_sun} for {spec}")
    cv = conjecture_bound(p, spec.nA, spec.nB, spec.nS)
    return SearchReport(
        spec=spec, min_C=min_C, extremal_witnesses=list(witnesses), bounds=bounds,
        tight_thm2=(not empty and min_C == bounds.thm2),
        tight_pan_sun=(not empty and min_C == bounds.pan_sun) if pan_sun_applies(p, spec.nS) else None,
        conjecture_value=cv, conjecture_tight=(not empty and min_C == cv),
        conjecture_violated=(not empty and min_C < cv),
        configs_scanned=scanned, empty=empty, upper_bound=upper_bound, elapsed=elapsed)


# ---------------------------------------------------------------- scan core

@dataclass
class _Partial:
    min_C: int
    witnesses: list
    count: int
    min_ne: int
    witnesses_ne: list


def _merge_witnesses(cur_min, cur, new_min, new):
    if new_min < cur_min:
        return new_min, sorted(set(new))[:MAX_WITNESSES]
    if new_min == cur_min:
        return cur_min, sorted(set(cur + new))[:MAX_WITNESSES]
    return cur_min, cur


def _scan_block(p: int, a_masks: list[int], b_arr: np.ndarray, s_masks: list[int],
                track_ne: bool = False) -> _Partial:
    # sentinel p+1 sits above any real |C|
    best, wit = p + 1, []
    best_ne, wit_ne = p + 1, []
    count = 0
    for a in a_masks:
        ne_mask = b_arr != np.uint64(a) if track_ne else None
        for s in s_masks:
            sizes = popcount(restricted_sumset_masks(a, s, b_arr, p))
            count += len(sizes)
            lo = int(sizes.min())
            if lo <= best:
                hits = np.flatnonzero(sizes == lo)[:MAX_WITNESSES]
                best, wit = _merge_witnesses(best, wit, lo, [(a, int(b_arr[i]), s) for i in hits])
            if track_ne:
                sub = sizes[ne_mask]
                if len(sub):
                    lo = int(sub.min())
                    if lo <= best_ne:
                        hits = np.flatnonzero((sizes == lo) & ne_mask)[:MAX_WITNESSES]
                        best_ne, wit_ne = _merge_witnesses(
                            best_ne, wit_ne, lo, [(a, int(b_arr[i]), s) for i in hits])
    return _Partial(best, wit, count, best_ne, wit_ne)


def _scan_block_args(args):
    return _scan_block(*args)


def _run_blocks(p, a_masks, b_arr, s_masks, workers, track_ne=False) -> _Partial:
    chunks = [a_masks[i::workers] for i in range(workers)] if workers > 1 else [a_masks]
    chunks = [c for c in chunks if c]
    jobs = [(p, c, b_arr, s_masks, track_ne) for c in chunks]
    if len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan_block_args, jobs))
    else:
        parts = [_scan_block(*j) for j in jobs]
    best, wit, best_ne, wit_ne, count = p + 1, [], p + 1, [], 0
    for part in parts:
        best, wit = _merge_witnesses(best, wit, part.min_C, part.witnesses)
        best_ne, wit_ne = _merge_witnesses(best_ne, wit_ne, part.min_ne, part.witnesses_ne)
        count += part.count
    return _Partial(best, wit, count, best_ne, wit_ne)


def _cell_sets(spec: SearchSpec):
    p = spec.p
    if spec.symmetry_reduction:
        a_masks = affine_reps(p, spec.nA)
        b_arr = translation_reps(p, spec.nB)
    else:
        a_masks = [int(x) for x in masks_of_size(p, spec.nA)]
        b_arr = masks_of_size(p, spec.nB)
    s_masks = [int(x) for x in masks_of_size(p, spec.nS)]
    return a_masks, b_arr, s_masks


def count_configs(spec: SearchSpec) -> int:
    p = spec.p
    if not spec.symmetry_reduction:
        return comb(p, spec.nA) * comb(p, spec.nB) * comb(p, spec.nS)
    return len(affine_reps(p, spec.nA)) * len(translation_reps(p, spec.nB)) * comb(p, spec.nS)


def exhaustive_min(spec: SearchSpec) -> SearchReport:
    """Minimum of |C| over every (A, B, S) with the given sizes."""
    if spec.mode != "exhaustive":
        raise PreconditionError("exhaustive_min needs mode='exhaustive'")
    if spec.p > SCAN_PRIME_CEILING:
        raise PreconditionError(f"p={spec.p} is beyond the scan ceiling")
    total = comb(spec.p, spec.nA) * comb(spec.p, spec.nB) * comb(spec.p, spec.nS)
    if total > spec.budget:
        total = count_configs(spec)
    if total > spec.budget:
        raise PreconditionError(
            f"{total} configurations exceed the budget {spec.budget}; use sampled mode")
    t0 = time.perf_counter()
    a_masks, b_arr, s_masks = _cell_sets(spec)
    part = _run_blocks(spec.p, a_masks, b_arr, s_masks, spec.workers)
    return _finish(spec, part.min_C, part.witnesses, part.count,
                   elapsed=time.perf_counter() - t0)


def _random_mask(rng: random.Random, p: int, n: int) -> int:
    mask = 0
    for x in rng.sample(range(p), n):
        mask |= 1 << x
    return mask


def sampled_min(spec: SearchSpec) -> SearchReport:
    """Minimum over ``spec.count`` seeded uniform draws; an upper bound on the true minimum.

    Draws come from one generator in a fixed order, so the result does not
    depend on ``spec.workers``.
    """
    if spec.mode != "sampled":
        raise PreconditionError("sampled_min needs mode='sampled'")
    t0 = time.perf_counter()
    p = spec.p
    rng = random.Random(spec.seed)
    best, wit = p + 1, []
    for _ in range(spec.count):
        a = _random_mask(rng, p, spec.nA)
        b = _random_mask(rng, p, spec.nB)
        s = _random_mask(rng, p, spec.nS)
        size = restricted_sumset_mask(a, b, s, p).bit_count()
        if size <= best:
            best, wit = _merge_witnesses(best, wit, size, [(a, b, s)])
    if spec.count == 0:
        return _finish(spec, p, [], 0, empty=True, upper_bound=True,
                       elapsed=time.perf_counter() - t0)
    return _finish(spec, best, wit, spec.count, upper_bound=True,
                   elapsed=time.perf_counter() - t0)


def search(spec: SearchSpec) -> SearchReport:
    return exhaustive_min(spec) if spec.mode == "exhaustive" else sampled_min(spec)


# ------------------------------------------------------------ conjecture scan

@dataclass
class ConjectureCell:
    report: SearchReport
    min_C_a_ne_b: int | None
    strengthened: int
    s_even: bool
    s_proper_nonempty: bool
    holds_all: bool
    holds_a_ne_b: bool | None

    def to_dict(self) -> dict:
        r = self.report
        return {
            "nA": r.spec.nA, "nB": r.spec.nB, "nS": r.spec.nS,
            "min_C": r.min_C, "min_C_a_ne_b": self.min_C_a_ne_b,
            "thm2": r.bounds.thm2, "pan_sun": r.bounds.pan_sun,
            "strengthened": self.strengthened,
            "s_even": self.s_even, "s_proper_nonempty": self.s_proper_nonempty,
            "holds_all": self.holds_all, "holds_a_ne_b": self.holds_a_ne_b,
            "tight_thm2": r.tight_thm2, "configs_scanned": r.configs_scanned,
        }


CONJECTURE_CSV_HEADER = ["p", "nA", "nB", "nS", "min_C", "min_C_a_ne_b", "thm2", "pan_sun",
                         "strengthened", "s_even", "s_proper_nonempty", "holds_all",
                         "holds_a_ne_b", "tight_thm2", "configs_scanned"]


def conjecture_scan(p, max_s: int | None = None, sizes=None, workers: int = 1,
                    budget: int = DEFAULT_BUDGET) -> list[ConjectureCell]:
    """Evidence table for replacing 2 by 1 in min{p, nA+nB-nS-2}.

    For each cell with nA <= nB (the swap (A,B,S) -> (B,A,-S) makes the other
    half redundant) the minimum of |C| is reported over all configurations
    and over those with A != B, next to the strengthened value
    min{p, nA+nB-nS-1}. Flags are observations, not claims; cells where S is
    empty or all of Z_p are marked so they can be separated from the regime
    in which the stronger bound is a theorem.
    """
    p = as_modulus(p).p
    if max_s is None:
        max_s = p
    if sizes is None:
        sizes = [(a, b, s) for a in range(1, p + 1) for b in range(a, p + 1)
                 for s in range(0, max_s + 1)]
    cells = []
    for nA, nB, nS in sizes:
        spec = SearchSpec(p, nA, nB, nS, symmetry_reduction=False, workers=workers, budget=budget)
        total = comb(p, nA) * comb(p, nB) * comb(p, nS)
        if total > budget:
            raise PreconditionError(f"cell {(nA, nB, nS)} has {total} configurations, over budget")
        t0 = time.perf_counter()
        a_masks, b_arr, s_masks = _cell_sets(spec)
        part = _run_blocks(p, a_masks, b_arr, s_masks, workers, track_ne=True)
        report = _finish(spec, part.min_C, part.witnesses, part.count,
                         elapsed=time.perf_counter() - t0)
        strengthened = conjecture_bound(p, nA, nB, nS)
        min_ne = part.min_ne if part.min_ne <= p else None
        cells.append(ConjectureCell(
            report=report, min_C_a_ne_b=min_ne, strengthened=strengthened,
            s_even=nS % 2 == 0, s_proper_nonempty=0 < nS < p,
            holds_all=report.min_C >= strengthened,
            holds_a_ne_b=None if min_ne is None else min_ne >= strengthened))
    return cells


# ------------------------------------------------------------- bound census

@dataclass
class BoundCensus:
    p: int
    triples: int
    thm2_violations: int
    pan_sun_triples: int
    pan_sun_violations: int
    min_slack_thm2: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def bound_census(p) -> BoundCensus:
    """Check |C| against both closed-form bounds for every nonempty A, B and every S."""
    p = as_modulus(p).check_ceiling(20).p
    b_arr = nonempty_masks(p)
    b_sizes = popcount(b_arr)
    triples = thm2_bad = ps_triples = ps_bad = 0
    min_slack = p + 1
    ps_ok = p != 2
    for a in range(1, 1 << p):
        na = a.bit_count()
        for s in range(0, 1 << p):
            ns = s.bit_count()
            sizes = popcount(restricted_sumset_masks(a, s, b_arr, p))
            thm2 = np.clip(np.minimum(p, na + b_sizes - 2 * ns - 1), 0, None)
            slack = sizes - thm2
            thm2_bad += int((slack < 0).sum())
            min_slack = min(min_slack, int(slack.min()))
            triples += len(b_arr)
            if ps_ok and 0 < ns < p:
                ps = np.clip(np.minimum(p, na + b_sizes - ns - 2), 0, None)
                ps_bad += int((sizes < ps).sum())
                ps_triples += len(b_arr)
    return BoundCensus(p, triples, thm2_bad, ps_triples, ps_bad, min_slack)

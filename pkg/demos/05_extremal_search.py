"""
Searching for small restricted sumsets
======================================

Exhaustive scans (optionally up to affine symmetry), seeded sampling for
larger p, and a table of evidence for the stronger bound min{p, nA+nB-nS-1}.
"""

from rsumset import SearchSpec, conjecture_scan, exhaustive_min, sampled_min

r = exhaustive_min(SearchSpec(7, 4, 4, 1))
print("p=7, sizes (4,4,1): min |C| =", r.min_C, "bound", r.bounds.thm2,
      "configs", r.configs_scanned)

full = exhaustive_min(SearchSpec(7, 4, 4, 1, symmetry_reduction=False))
print("without symmetry reduction:", full.min_C, "configs", full.configs_scanned)

s = sampled_min(SearchSpec(13, 5, 6, 2, mode="sampled", count=20_000, seed=1))
print("p=13 sampled upper bound on min |C|:", s.min_C, ">= bound", s.bounds.thm2)

# cells where S is nonempty and proper and the stronger value is not met
cells = conjecture_scan(7, max_s=2)
for c in cells:
    d = c.to_dict()
    if d["s_proper_nonempty"] and d["holds_a_ne_b"] is False:
        print(f"  (nA,nB,nS)=({d['nA']},{d['nB']},{d['nS']}): min over A!=B is "
              f"{d['min_C_a_ne_b']}, stronger value {d['strengthened']}")

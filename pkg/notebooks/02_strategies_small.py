"""
Parameter-selection strategies on a small grid
==============================================

A G=32 reference with a short optimizer budget keeps this under a minute.
Equ-distance, greedy and exhaustive selections are scored on the same pool.
"""
import numpy as np

from wheeldiv.domain import AnnulusMask, ReferenceSpec, generate_reference
from wheeldiv.env import DesignGridEnv, DesignPool
from wheeldiv.strategies import best_equdistance, describe, exhaustive_strategy, greedy_strategy
from wheeldiv.topopt import TopOptConfig, precompute_grid

mask = AnnulusMask(32)
ref = generate_reference(ReferenceSpec(spoke_count=6, spoke_width=3.0, twist=20.0), mask)
grid = precompute_grid(ref, TopOptConfig(max_iters=15), mask)
print("failed cells:", grid.failures)

pool = DesignPool.from_grid(ref, grid.designs, mask, grid.compliance)


class OnePool:
    def pool(self, ref_id):
        return pool


env = DesignGridEnv(OnePool())

# %%
picks = {
    "equdistance": best_equdistance(pool, "pixdiff")[:2],
    "greedy": (lambda s: (s.c1, s.c2))(greedy_strategy(env, 0)),
    "exhaustive": (lambda r: (r.c1, r.c2))(exhaustive_strategy(pool)),
}
for name, (c1, c2) in picks.items():
    o = describe(pool, 0, name, c1, c2)
    print(f"{name:12s} c1 {sorted(c1)} c2 {sorted(c2)}  pixdiff {o.pixdiff:.4f}  dsim {o.dsim:.4f}"
          f"  final designs {o.final_count}  mean compliance {o.mean_compliance:.2f}")

# %% how peaked is the exhaustive score map?
res = exhaustive_strategy(pool)
s = np.sort(res.score_map.ravel())[::-1]
print("top five scores:", np.round(s[:5], 4), " median:", round(float(np.median(s)), 4))

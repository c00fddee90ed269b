"""
One wheel, three similarity weights
===================================

Optimize a five-spoke reference at a weak, a medium and a strong similarity
weight and write the results as PGM images next to this script's output dir.
"""
from pathlib import Path

import numpy as np

from wheeldiv.domain import AnnulusMask, ReferenceSpec, generate_reference
from wheeldiv.io import write_pgm
from wheeldiv.topopt import c1_values, l1_distance, optimize

out = Path("runs/notebooks/01")
out.mkdir(parents=True, exist_ok=True)

mask = AnnulusMask(64)
ref = generate_reference(ReferenceSpec(spoke_count=5, spoke_width=5.0), mask)
write_pgm(out / "reference.pgm", 1 - ref)
print("designable pixels:", mask.n_designable, " reference volume:", ref[mask.designable].sum())

# %% low c1 lets the optimizer wander, high c1 pins it to the reference
for i in (0, 5, 10):
    c1 = c1_values()[i]
    res = optimize(ref, c1, 0.2, mask=mask)
    print(f"c1={c1:<8.4g} compliance {res.compliance:8.3f}  L1 to reference {l1_distance(res.design, ref, mask):7.2f}"
          f"  iterations {len(res.objective_history)}")
    write_pgm(out / f"design_c1_{i:02d}.pgm", 1 - res.design)

# %% the objective trace of the last run
h = np.array(res.objective_history)
print("objective, first and last five:", np.round(h[:5], 3), np.round(h[-5:], 3))

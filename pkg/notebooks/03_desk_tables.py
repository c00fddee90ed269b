"""
Desk-run tables
===============

Print the summary tables of a finished desk pipeline (see the README).
"""
import csv
import sys
from pathlib import Path

desk = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/desk")


def show(path, cols=None):
    if not path.exists():
        print(f"({path} not produced yet)")
        return
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    cols = cols or list(rows[0])
    print(path)
    print("  " + " | ".join(cols))
    for r in rows:
        print("  " + " | ".join(r[c] for c in cols))
    print()


show(desk / "surrogate_eval" / "surrogate_metrics.csv",
     ["model_id", "iou", "compliance_mape_median", "rotation_consistency"])
show(desk / "report" / "table3_ratios.csv")
show(desk / "report" / "table4_final_counts.csv")
show(desk / "report" / "table2_cross_metric.csv")
show(desk / "report" / "fig16_ablation.csv")

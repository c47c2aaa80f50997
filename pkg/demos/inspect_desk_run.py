"""
Reading a finished desk run
===========================

Print the ablation table, the scenario aggregates and the loss curves'
start/end from ``runs/desk`` (written by desk_experiment.py).
"""
import json
import os
import sys

import numpy as np

from sketchcolor.pipeline import read_loss_log

run = sys.argv[1] if len(sys.argv) > 1 else "runs/desk"
with open(os.path.join(run, "summary.json")) as fh:
    summary = json.load(fh)

print(open(os.path.join(run, "ablation.txt")).read())
print(f"untrained SA {summary['untrained']['sa']:.4f}  mid-gray PSNR {summary['gray_psnr']:.2f}")

for key, agg in sorted(summary["scenarios"].items()):
    print(f"{key:<32}" + " ".join(f"{k}={v:.4f}" for k, v in sorted(agg.items()) if isinstance(v, float)))

for k in (1, 2, 3, 4):
    path = os.path.join(run, f"stage{k}.loss.tsv")
    if os.path.exists(path):
        loss = np.array([v for _, v in read_loss_log(path)])
        print(f"stage {k}: {len(loss)} steps, first-100 mean {loss[:100].mean():.4f}, last-100 mean {loss[-100:].mean():.4f}")

"""Full desk-scale run: 512/64 clips, four stages, ablation and scenarios.

Usage: python3 demos/desk_experiment.py [out_dir] [config.yaml]

Re-running resumes from whatever the output directory already holds. The
acceptance suite reads ``runs/desk/summary.json`` written by this script.
"""
import sys
import time

from threadpoolctl import threadpool_limits

from sketchcolor.config import load_config
from sketchcolor.experiment import run_experiment

out = sys.argv[1] if len(sys.argv) > 1 else "runs/desk"
rc = load_config(sys.argv[2] if len(sys.argv) > 2 else None)
t0 = time.time()


def log(msg):
    print(f"[{time.time() - t0:7.0f}s] {msg}", flush=True)


with threadpool_limits(1):
    summary = run_experiment(rc, out, log=log)

for name, row in summary["ablation"].items():
    print(f"{name:>5}  psnr {row['psnr']:.3f}  ssim {row['ssim']:.4f}  sa {row['sa']:.4f}  color {row['color_acc']:.3f}")

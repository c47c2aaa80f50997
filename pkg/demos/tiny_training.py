"""
Four training stages at toy scale
=================================

Stage 1 learns sketch-to-video denoising, stages 2 and 3 add the two colour
pathways on a frozen denoiser, stage 4 finetunes the joint model. The five
ablation variants are then sampled with identical noise and scored. Runs in
a few seconds; numbers at this size only show the plumbing works.
"""
import numpy as np

from sketchcolor.diffusion import make_schedule
from sketchcolor.pipeline import default_plan, make_clipset, run_ablation, train_stages
from sketchcolor.selftest import tiny_config, tiny_gen
from sketchcolor.synthgen import mask_color_words

cfg = tiny_config(dim=32, frames=4)
gen = tiny_gen(cfg)
sched = make_schedule(200)
train = make_clipset(list(range(32)), gen, "train", cfg.patch)
test = make_clipset(list(range(1000, 1008)), gen, "test", cfg.patch)

plans = {k: default_plan(k, 60, seed=k, batch_size=4, lr=2e-3, warmup=10) for k in (1, 2, 3, 4)}
ckpts = train_stages(plans, train, cfg, sched, log=print)

report = run_ablation(ckpts, test, cfg, sched, 10, seed=5, caption_fn=mask_color_words, batch=4, gen_cfg=gen)
print(report.table())

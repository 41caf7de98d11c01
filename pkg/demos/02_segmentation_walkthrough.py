"""
From raw frame to plant mask
============================

Runs the segmentation chain one stage at a time on a single rendered
frame and prints what each stage keeps: sharpening, the gradient split,
blob filtering, and the vegetation-index test.
"""

from pathlib import Path

import numpy as np
from PIL import Image

from germtrack.calibration import build_profile, load_profile
from germtrack.config import PipelineConfig
from germtrack.imagecore import label_blobs
from germtrack.pipeline import load_frame
from germtrack.radiometry import normalize_colors, sample_gray
from germtrack.segmentation import (
    excess_green,
    gradient_blob_mask,
    green_gradient,
    segment_frame,
    unsharp_sharpen,
)
from germtrack.synth import SceneConfig, write_dataset

out_dir = Path(__file__).parent / "output" / "segmentation"
out_dir.mkdir(parents=True, exist_ok=True)

# One tray, fully germinating, pictured late enough that the seedlings
# have real leaf area.
config = SceneConfig(
    cameras=1, replicates_per_camera=1, seeds_per_replicate=25,
    germination_fraction=1.0, rng_seed=7,
)
times = [3.0, 96.0, 168.0]
write_dataset(config, out_dir / "scene", times)

layout = load_profile(out_dir / "scene" / "layouts" / "cam1.json", require_template=False)
profile = build_profile(
    load_frame(out_dir / "scene" / "calibration" / "cam1.png"),
    layout.distortion, layout.replicate_quads, layout.marker_quad, layout.gray_center,
    camera_id=layout.camera_id,
)

frame = load_frame(out_dir / "scene" / "frames" / "cam1_e002.png")
pipeline_config = PipelineConfig()

# Stage 1: gray-patch color normalization.
sample = sample_gray(frame, profile.gray_center)
frame = normalize_colors(frame, sample, pipeline_config.gray)
print(f"gray patch after normalization: {[round(v, 2) for v in sample_gray(frame, profile.gray_center).mean_rgb]}")

# Stage 2: unsharp masking, then the gradient of the green channel.
# Pixels at or below the Otsu split count as smooth region interior.
sharp = unsharp_sharpen(frame, pipeline_config.sharpen_radius, pipeline_config.sharpen_amount)
gradient = green_gradient(sharp)
low_gradient = gradient_blob_mask(gradient)
print(f"gradient split keeps {low_gradient.mean():.1%} of pixels as region interior")

# Stage 3: blobs of the candidate mask, small speckle dropped.
blobs = label_blobs(low_gradient & (excess_green(frame) > 0), pipeline_config.min_blob_px)
print(f"{len(blobs)} candidate blobs of at least {pipeline_config.min_blob_px} px")

# Stage 4: the full chain, per tray, with the blob-mean vegetation test.
for t in times:
    name = f"cam1_e{times.index(t):03d}.png"
    raw = load_frame(out_dir / "scene" / "frames" / name)
    greens = segment_frame(
        normalize_colors(raw, sample_gray(raw, profile.gray_center), pipeline_config.gray),
        profile, t, pipeline_config,
    )
    green = greens["1"]
    print(f"t = {t:5.1f} h: {green.area_px:6d} plant px = {green.area_px * profile.k_conv:7.1f} mm2")

# Save the final mask next to the frame it came from for a visual check.
mask_img = (greens["1"].mask * 255).astype(np.uint8)
Image.fromarray(mask_img).save(out_dir / "mask_e002.png")
print(f"wrote {out_dir / 'mask_e002.png'}")

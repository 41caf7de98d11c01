"""
Camera calibration walkthrough
==============================

Builds a camera profile from a synthetic calibration frame: the fiducial
marker fixes the mm-per-pixel scale, the layout quads become per-tray
masks, and the marker template is kept for drift tracking later.
"""

from pathlib import Path

import numpy as np

from germtrack.calibration import build_profile, load_profile, locate_center_marker, save_profile
from germtrack.pipeline import load_frame
from germtrack.synth import SceneConfig, write_dataset

out_dir = Path(__file__).parent / "output" / "calibration"
out_dir.mkdir(parents=True, exist_ok=True)

# A small bench: one camera, four trays of 49 seeds each.  write_dataset
# renders the plant-free calibration frame and the layout JSON alongside
# the time-lapse frames; here we only care about those two.
config = SceneConfig(cameras=1, replicates_per_camera=4, seeds_per_replicate=49, rng_seed=42)
write_dataset(config, out_dir / "scene", [0.0, 3.0])

layout = load_profile(out_dir / "scene" / "layouts" / "cam1.json", require_template=False)
calibration_frame = load_frame(out_dir / "scene" / "calibration" / "cam1.png")

profile = build_profile(
    calibration_frame,
    layout.distortion,
    layout.replicate_quads,
    layout.marker_quad,
    layout.gray_center,
    camera_id=layout.camera_id,
)

# The 30 x 30 mm marker gives the pixel-to-area conversion directly.
print(f"k_conv          = {profile.k_conv:.4f} mm2/px")
print(f"pixel side      = {profile.mm_per_px_side:.4f} mm")
print(f"replicate masks = {sorted(profile.replicate_masks)}")
for rep_id, mask in sorted(profile.replicate_masks.items()):
    area_mm2 = mask.sum() * profile.k_conv
    print(f"  tray {rep_id}: {mask.sum()} px = {area_mm2:.0f} mm2")

# The stored template re-finds the marker in later frames.  On the
# calibration frame itself the offset is of course zero.
found = locate_center_marker(calibration_frame, profile)
print(f"marker found at offset ({found.dx}, {found.dy}), correlation {found.correlation:.3f}")

save_profile(profile, out_dir / "cam1.json")
print(f"wrote {out_dir / 'cam1.json'}")

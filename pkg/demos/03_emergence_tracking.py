"""
Emergence events and germination curves
=======================================

Tracks a small trial through time: cluster polygons per epoch, first
appearances as emergence events, and the cumulative count compared with
the generator's ground truth.
"""

from pathlib import Path

from germtrack.calibration import build_profile, load_profile
from germtrack.pipeline import load_frame, read_manifest, run_pipeline
from germtrack.synth import SceneConfig, default_times, write_dataset

out_dir = Path(__file__).parent / "output" / "emergence"
out_dir.mkdir(parents=True, exist_ok=True)

# Two trays, staggered germination, six days at two frames per day.
config = SceneConfig(
    cameras=1, replicates_per_camera=2, seeds_per_replicate=25,
    germination_fraction=(0.9, 0.6), rng_seed=13,
)
manifest_path, truth = write_dataset(config, out_dir / "scene", default_times(days=6, per_day=2))

layout = load_profile(out_dir / "scene" / "layouts" / "cam1.json", require_template=False)
profile = build_profile(
    load_frame(out_dir / "scene" / "calibration" / "cam1.png"),
    layout.distortion, layout.replicate_quads, layout.marker_quad, layout.gray_center,
    camera_id=layout.camera_id,
)

report = run_pipeline(read_manifest(manifest_path), {"cam1": profile})

# Each event is one polygon that no earlier polygon overlaps: one new
# seedling (or a clump emerging as one).
for key in sorted(report.events):
    events = report.events[key]
    print(f"tray {key[1]}: {len(events)} emergence events")
    for event in events[:5]:
        x, y = event.polygon.polygon.mean(axis=0)
        print(f"  t = {event.t_hours:5.1f} h at ({x:6.1f}, {y:6.1f}) px")
    if len(events) > 5:
        print(f"  ... and {len(events) - 5} more")

true_counts = truth.final_counts()
print("\ncumulative counts vs truth:")
for key in sorted(report.germination):
    series = report.germination[key]
    final_true = true_counts["/".join(key)]
    curve = " ".join(f"{c:2d}" for c in series.counts[::2])
    print(f"tray {key[1]}: {curve}  (final {series.counts[-1]}, truth {final_true})")

"""Classical vs quantum Boolean edge detection on the test card.

The detector ORs the neighbours of each pixel and XORs the result with the
pixel. Run noise free, the quantum (PAO) version agrees pixel for pixel
and OOIE is 0. Flipping 1% of the qubits before the detector, to mimic an
imperfect physical implementation, drives OOIE to 1.

    python demos/04_edge_detection.py
"""

from pathlib import Path

from quboip import KernelSpec, bed_classical, compare, load_image, msb, save_image, slice_bitplanes
from quboip.pipeline import quantum_edges

DATA = Path(__file__).resolve().parent.parent / "data"
OUT = Path(__file__).resolve().parent / "out" / "edges"
OUT.mkdir(parents=True, exist_ok=True)

plane = msb(slice_bitplanes(load_image(DATA / "testcard.pgm")))
save_image(plane, OUT / "msb.pbm")

for mode in ("prose", "matlab"):
    k = KernelSpec(3, 1, mode)
    classical = bed_classical(plane, k)
    quantum = quantum_edges(plane, k)
    report = compare(classical, quantum)
    print(f"{mode:>6}: {classical.sum():5d} edge pixels, ooie={report.ooie}")
    save_image(classical, OUT / f"edge_classical_{mode}.pbm")

k = KernelSpec()
classical = bed_classical(plane, k)
for seed in range(3):
    noisy = quantum_edges(plane, k, noise_flip_prob=0.01, seed=seed)
    report = compare(classical, noisy)
    print(f"noise 0.01, seed {seed}: ooie={report.ooie} diff_count={report.diff_count}")
save_image(report.error_map, OUT / "error_map.pbm")

# Larger kernels and repeated passes thicken the response.
for w, p in ((5, 1), (3, 2)):
    print(f"w={w} passes={p}: {bed_classical(plane, KernelSpec(w, p)).sum()} edge pixels")
print("images written to", OUT)

"""Bitplanes of a gray image.

A B-bit gray image splits into B Boolean images, one per bit. The most
significant plane (MSB) keeps the coarse shapes; the low planes look like
noise. Everything downstream works on the MSB.

    python demos/01_bitplanes.py
"""

from pathlib import Path

import numpy as np

from quboip import load_image, msb, pixel_to_bits, recombine, save_image, slice_bitplanes, to_gray

DATA = Path(__file__).resolve().parent.parent / "data"
OUT = Path(__file__).resolve().parent / "out" / "bitplanes"
OUT.mkdir(parents=True, exist_ok=True)

# One pixel first: 130 = 128 + 2, so bits 1 and 7 are set (LSB first).
print("130 ->", pixel_to_bits(130, 8))

# Color input goes through the BT.601 luma weights first.
color = load_image(DATA / "blocks.ppm")
gray = to_gray(color)
print("pure red, green, blue, white ->", gray[0, 0], gray[0, 95], gray[95, 0], gray[95, 95])

card = load_image(DATA / "testcard.pgm")
stack = slice_bitplanes(card)
print(f"{stack.depth_bits} planes of {stack.rows}x{stack.cols}")

# Fraction of set pixels per plane: the MSB is structured, the LSB is ~0.5.
for b, plane in enumerate(stack):
    print(f"  plane {b}: {plane.mean():.3f} set")
    save_image(plane, OUT / f"plane{b}.pbm")

# The MSB is exactly the threshold at 128, and slicing loses nothing.
assert np.array_equal(msb(stack), card >= 128)
assert np.array_equal(recombine(stack), card)
print("lossless round trip: ok; planes written to", OUT)

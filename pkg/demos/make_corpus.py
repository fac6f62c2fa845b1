"""Regenerate the small synthetic image corpus in ../data.

    python demos/make_corpus.py
"""

from pathlib import Path

import numpy as np

from quboip.image_io import encode_netpbm, save_image

DATA = Path(__file__).resolve().parent.parent / "data"
DATA.mkdir(exist_ok=True)

# Gray test card: a radial gradient with a bright disk, a dark bar and
# a band of mild texture. Its MSB has a few clean blobs with long edges.
yy, xx = np.mgrid[0:128, 0:128]
r = np.hypot(yy - 64, xx - 64)
card = 220 - 1.4 * r
card[(yy - 40) ** 2 + (xx - 88) ** 2 < 18**2] = 250
card[96:108, 16:112] = 20
card += 30 * np.sin(xx / 3.0) * (yy > 110)
card = np.clip(np.round(card), 0, 255).astype(np.uint8)
save_image(card, DATA / "testcard.pgm")

# Color blocks, for the luma conversion path.
blocks = np.zeros((96, 96, 3), dtype=np.uint8)
blocks[:48, :48] = (255, 0, 0)
blocks[:48, 48:] = (0, 255, 0)
blocks[48:, :48] = (0, 0, 255)
blocks[48:, 48:] = (250, 250, 250)
blocks[30:66, 30:66] = (200, 160, 40)
(DATA / "blocks.ppm").write_bytes(b"P6\n96 96\n255\n" + blocks.tobytes())

# The 3x3 single-pixel case, as a plain PBM.
centre = np.zeros((3, 3), dtype=bool)
centre[1, 1] = True
(DATA / "centre3x3.pbm").write_bytes(encode_netpbm(centre, "P1"))

print("wrote", sorted(p.name for p in DATA.iterdir()))

#!/usr/bin/env python3
# Copyright 2026 The PCC Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the bundled 256x256 evaluation corpus under corpus/.

Photographic images come from scikit-image's bundled sample data; synthetic
images are generated from fixed seeds.
"""
import pathlib
import sys

import numpy as np
import skimage.data
from skimage.transform import resize

SIZE = 256


def write_ppm(path, rgb):
    h, w, _ = rgb.shape
    with open(path, "wb") as f:
        f.write(b"P6\n%d %d\n255\n" % (w, h))
        f.write(np.ascontiguousarray(rgb, dtype=np.uint8).tobytes())


def square(img):
    h, w = img.shape[:2]
    s = min(h, w)
    y0, x0 = (h - s) // 2, (w - s) // 2
    crop = img[y0:y0 + s, x0:x0 + s, :3]
    out = resize(crop, (SIZE, SIZE), anti_aliasing=True, preserve_range=True)
    return np.clip(np.rint(out), 0, 255).astype(np.uint8)


def synthetic():
    rng = np.random.default_rng(20201016)
    y, x = np.mgrid[0:SIZE, 0:SIZE] / (SIZE - 1.0)
    out = {}
    out["syn_gradient"] = np.stack([255 * x, 255 * y, 255 * (1 - x) * (1 - y) + 40 * x * y], -1)
    bars = np.array([[235, 235, 235], [235, 235, 16], [16, 235, 235], [16, 235, 16],
                     [235, 16, 235], [235, 16, 16], [16, 16, 235], [16, 16, 16]], float)
    out["syn_colorbars"] = bars[np.minimum((x * 8).astype(int), 7)]
    blobs = np.zeros((SIZE, SIZE, 3))
    for _ in range(12):
        cx, cy, r = rng.uniform(0, 1, 2).tolist() + [rng.uniform(0.05, 0.25)]
        col = rng.uniform(0, 255, 3)
        wgt = np.exp(-((x - cx) ** 2 + (y - cy) ** 2) / (2 * r * r))
        blobs = blobs * (1 - wgt[..., None]) + col * wgt[..., None]
    out["syn_blobs"] = blobs
    plasma = np.stack([128 + 100 * np.sin(2 * np.pi * (3 * x + 2 * y + p)) * np.cos(2 * np.pi * (x - 4 * y + p))
                       for p in (0.0, 0.33, 0.66)], -1)
    out["syn_plasma"] = plasma
    base = np.where(((x * 16).astype(int) + (y * 16).astype(int)) % 2 == 0, 170.0, 90.0)
    tex = np.stack([base, base * 0.8 + 20, base * 0.6 + 60], -1) + rng.normal(0, 6, (SIZE, SIZE, 3))
    out["syn_checker_noise"] = tex
    return {k: np.clip(np.rint(v), 0, 255).astype(np.uint8) for k, v in out.items()}


def main(dest):
    dest = pathlib.Path(dest)
    dest.mkdir(parents=True, exist_ok=True)
    photos = ["astronaut", "chelsea", "coffee", "rocket", "immunohistochemistry",
              "hubble_deep_field", "retina"]
    for name in photos:
        write_ppm(dest / f"photo_{name}.ppm", square(getattr(skimage.data, name)()))
    for name, img in synthetic().items():
        write_ppm(dest / f"{name}.ppm", img)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "corpus")

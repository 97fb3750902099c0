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

"""Writes the fixed SSIM/MS-SSIM fixture pairs and prints reference scores.

Reference scores come from TensorFlow (tf.image.ssim / ssim_multiscale) and
are cross-checked against scikit-image's structural_similarity.
"""
import pathlib

import numpy as np
from scipy.ndimage import gaussian_filter

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT = ROOT / "tests" / "data" / "metric_pairs"
SIDE = 192


def read_ppm(path):
    data = path.read_bytes()
    parts = data.split(maxsplit=4)
    w, h = int(parts[1]), int(parts[2])
    return np.frombuffer(parts[4], np.uint8).reshape(h, w, 3)


def write_ppm(path, rgb):
    h, w, _ = rgb.shape
    path.write_bytes(b"P6\n%d %d\n255\n" % (w, h) + np.ascontiguousarray(rgb, np.uint8).tobytes())


def q8(a):
    return np.clip(np.rint(a), 0, 255).astype(np.uint8)


def pairs():
    rng = np.random.default_rng(7)
    astro = read_ppm(ROOT / "corpus" / "photo_astronaut.ppm")[:SIDE, :SIDE].astype(float)
    coffee = read_ppm(ROOT / "corpus" / "photo_coffee.ppm")[32:32 + SIDE, 32:32 + SIDE].astype(float)
    grad = read_ppm(ROOT / "corpus" / "syn_gradient.ppm")[:SIDE, :SIDE].astype(float)
    blobs = read_ppm(ROOT / "corpus" / "syn_blobs.ppm")[64:64 + SIDE, 64:64 + SIDE].astype(float)
    yield "pair1", astro, astro + rng.normal(0, 12, astro.shape)
    yield "pair2", coffee, np.stack([gaussian_filter(coffee[..., c], 1.2) for c in range(3)], -1)
    yield "pair3", grad, np.floor(grad / 24) * 24 + 12
    yield "pair4", blobs, blobs * 0.85 + 20
    yield "pair5", astro, coffee


def main():
    import tensorflow as tf
    from skimage.metrics import structural_similarity

    OUT.mkdir(parents=True, exist_ok=True)
    for name, ref, test in pairs():
        ref, test = q8(ref), q8(test)
        write_ppm(OUT / f"{name}_ref.ppm", ref)
        write_ppm(OUT / f"{name}_test.ppm", test)
        a = tf.constant(ref[None].astype(np.float64))
        b = tf.constant(test[None].astype(np.float64))
        ssim_tf = float(tf.image.ssim(a, b, max_val=255.0)[0])
        msssim_tf = float(tf.image.ssim_multiscale(a, b, max_val=255.0)[0])
        ssim_sk = structural_similarity(ref, test, channel_axis=2, gaussian_weights=True, sigma=1.5,
                                        use_sample_covariance=False, data_range=255)
        print(f"{name}: ssim_tf={ssim_tf:.6f} ssim_skimage={ssim_sk:.6f} ms_ssim_tf={msssim_tf:.6f}")


if __name__ == "__main__":
    main()

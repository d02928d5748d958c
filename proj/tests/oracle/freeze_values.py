#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Independent numpy evaluation of the values frozen into the C++ tests.

Run with: python3 tests/oracle/freeze_values.py
Nothing here imports or calls the C++ library.
"""
import math
import numpy as np

RGB_TO_LMS = np.array([[17.8824, 43.5161, 4.11935],
                       [3.45565, 27.1554, 3.86714],
                       [0.0299566, 0.184309, 1.46709]])
LMS_TO_RGB = np.linalg.inv(RGB_TO_LMS)
PROJ = {
    "protan": np.array([[0, 2.0234, -2.5258], [0, 1, 0], [0, 0, 1]]),
    "deutan": np.array([[1, 0, 0], [0.4942, 0, 1.2483], [0, 0, 1]]),
    "tritan": np.array([[1, 0, 0], [0, 1, 0], [-0.395913, 0.801109, 0]]),
}
RGB_TO_XYZ = np.array([[0.4124564, 0.3575761, 0.1804375],
                       [0.2126729, 0.7151522, 0.0721750],
                       [0.0193339, 0.1191920, 0.9503041]])
WHITE = RGB_TO_XYZ @ np.ones(3)


def round_half_away(x):
    return int(math.floor(abs(x) + 0.5)) * (1 if x >= 0 else -1)


def decode(v):
    c = v / 255.0
    return c / 12.92 if c <= 0.04045 else ((c + 0.055) / 1.055) ** 2.4


def encode(x):
    x = min(max(x, 0.0), 1.0)
    y = x * 12.92 if x <= 0.0031308 else 1.055 * x ** (1 / 2.4) - 0.055
    return round_half_away(y * 255.0)


def simulate(c, kind):
    lin = np.array([decode(v) for v in c])
    out = LMS_TO_RGB @ (PROJ[kind] @ (RGB_TO_LMS @ lin))
    return tuple(encode(v) for v in out)


def lab(c):
    xyz = RGB_TO_XYZ @ np.array([decode(v) for v in c]) / WHITE
    f = [t ** (1 / 3) if t > (6 / 29) ** 3 else t / (3 * (6 / 29) ** 2) + 4 / 29 for t in xyz]
    return np.array([116 * f[1] - 16, 500 * (f[0] - f[1]), 200 * (f[1] - f[2])])


def de(a, b):
    return float(np.linalg.norm(lab(a) - lab(b)))


def hsl(r, g, b):
    mx, mn = max(r, g, b), min(r, g, b)
    light = (mx + mn) / 2
    if mx == mn:
        return 0.0, 0.0, light
    sat = (mx - mn) / (1 - abs(1 - (mx + mn)))
    if mx == r:
        h = 60 * (g - b) / (mx - mn) + (0 if g >= b else 360)
    elif mx == g:
        h = 60 * (b - r) / (mx - mn) + 120
    else:
        h = 60 * (r - g) / (mx - mn) + 240
    return h, sat, light


if __name__ == "__main__":
    print("decode(128) = %.17g" % decode(128))
    w = RGB_TO_LMS @ np.ones(3)
    print("white lms = %r" % (w,))
    print("protan white rel err = %.3e" % ((2.0234 * w[1] - 2.5258 * w[2]) / w[0] - 1))
    print("hsl(0.2,0.4,0.6) =", hsl(0.2, 0.4, 0.6))
    r = simulate((255, 0, 0), "protan")
    print("protan red =", r, "hsl =", hsl(*(v / 255 for v in r)))
    for k in PROJ:
        print(k, "red vs #007700 de_sim=%.4f" % de(simulate((255, 0, 0), k), simulate((0, 0x77, 0), k)))
    print("de_normal red/#007700 = %.4f" % de((255, 0, 0), (0, 0x77, 0)))
    print("black/white de=%.4f" % de((0, 0, 0), (255, 255, 255)))
    grid = [round_half_away(i * 255 / 31) for i in range(32)]
    red = (255, 0, 0)
    sred = simulate(red, "protan")
    best = None
    for rr in grid:
        for gg in grid:
            for bb in grid:
                c = (rr, gg, bb)
                if de(red, c) <= 40:
                    continue
                d = de(sred, simulate(c, "protan"))
                if best is None or d < best[0]:
                    best = (d, c)
    print("brute-force protan confusion partner of red:", best[1], "de_sim=%.4f" % best[0],
          "de_normal=%.4f" % de(red, best[1]))

#!/usr/bin/env python3
"""Derive the pivot-move catalog for rhombic dodecahedral modules.

Each restricted move is a 120 degree rotation of the unit cell about an edge it
shares with a pivot neighbour b, ending in the third cell t around that edge.
The free space of a move is the set of lattice cells whose Voronoi region the
rotating cell passes through. It is found numerically by sampling the cell
surface over the rotation and assigning each sample to its nearest lattice
point (samples near a Voronoi boundary are discarded).

Monkey moves are two consecutive restricted rotations about distinct pivots.

Output: a JSON list of canonical templates, one per symmetry orbit.
"""
import argparse
import itertools
import json
import sys

import numpy as np

NEIGHBORS = sorted({p for v in [(1, -1, 0), (1, 1, 0), (-1, -1, 0)]
                    for p in itertools.permutations(v)})
AXIS_VERTS = [np.array(v, float) for v in
              [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]]
CUBE_VERTS = [np.array(v) * 0.5 for v in itertools.product([1, -1], repeat=3)]
OPS = [(p, s) for p in itertools.permutations(range(3)) for s in (1, -1)]


def face_vertices(d):
    d = np.array(d, float)
    return [v for v in AXIS_VERTS + CUBE_VERTS if abs(np.dot(v, d) - 1) < 1e-9]


def surface_samples(n):
    u = np.linspace(0, 1, n)
    uu, vv = np.meshgrid(u, u)
    pts = []
    for d in NEIGHBORS:
        fv = face_vertices(d)
        a = [v for v in fv if abs(v).sum() == 1]
        c = [v for v in fv if abs(v).sum() != 1]
        pts.append(a[0] + uu.ravel()[:, None] * (c[0] - a[0])
                   + vv.ravel()[:, None] * (c[1] - a[0]))
    # shrink slightly so face-touching contact is not counted as overlap
    return np.concatenate(pts) * 0.9999


def rotation(axis, angle):
    a = axis / np.linalg.norm(axis)
    k = np.array([[0, -a[2], a[1]], [a[2], 0, -a[0]], [-a[1], a[0], 0]])
    return np.eye(3) + np.sin(angle) * k + (1 - np.cos(angle)) * k @ k


def nearest_cells(q, eps):
    base = np.floor(q).astype(int)
    best = np.full(len(q), 1e9)
    second = np.full(len(q), 1e9)
    cell = np.zeros((len(q), 3), int)
    for off in itertools.product([-1, 0, 1, 2], repeat=3):
        c = base + np.array(off)
        d = ((q - c) ** 2).sum(1)
        d[c.sum(1) % 2 != 0] = 1e9
        better = d < best
        second = np.where(better, best, np.minimum(second, d))
        cell = np.where(better[:, None], c, cell)
        best = np.minimum(best, d)
    keep = (second - best) > eps
    return set(map(tuple, cell[keep].tolist()))


def sweep(b, t, samples, steps, eps):
    shared = [v for v in face_vertices(b)
              if any(np.allclose(v, w) for w in face_vertices(t))]
    if len(shared) != 2:
        return None
    a, c = shared
    axis = c - a
    for sign in (1, -1):
        if np.allclose(rotation(axis, sign * 2 * np.pi / 3) @ (-a) + a, t):
            break
    cells = set()
    for k in range(steps + 1):
        r = rotation(axis, sign * 2 * np.pi / 3 * k / steps)
        cells |= nearest_cells((samples - a) @ r.T + a, eps)
    cells.discard((0, 0, 0))
    return frozenset(cells)


def act(op, v):
    p, s = op
    return tuple(s * v[p[i]] for i in range(3))


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def layer(v):
    return sum(v) // 2


def restricted_class(b, t):
    if layer(b) == 0:
        return "in_layer" if layer(t) == 0 else "climb"
    return "face" if layer(t) == 0 else "vault"


def transform(op, tpl):
    cls, base, empty, target = tpl
    return (cls, frozenset(act(op, x) for x in base),
            frozenset(act(op, x) for x in empty), act(op, target))


def orbit_representatives(templates):
    # Prefer the orientation whose pivots and target lie on or above the
    # source layer, so out-of-layer classes are stored in their Up form.
    seen, reps = set(), []
    below = lambda T: sum(layer(v) < 0 for v in list(T[1]) + [T[3]])
    key = lambda T: (T[0], below(T), sorted(T[1]), T[3], sorted(T[2]))
    for tpl in sorted(templates, key=key):
        if tpl in seen:
            continue
        orbit = {transform(op, tpl) for op in OPS}
        if not orbit <= templates:
            sys.exit("template set is not closed under the lattice symmetries")
        seen |= orbit
        reps.append(tpl)
    return reps


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=40, help="grid samples per face edge")
    ap.add_argument("--steps", type=int, default=120, help="rotation steps over 120 degrees")
    ap.add_argument("--eps", type=float, default=1e-3, help="Voronoi boundary tolerance")
    ap.add_argument("--all", action="store_true",
                    help="sweep all 48 pivot/target pairs instead of closing one per orbit")
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()

    samples = surface_samples(args.samples)
    pairs = [(b, t) for b in NEIGHBORS for t in NEIGHBORS if b != t]
    sweeps = {}
    for b, t in pairs:
        if (b, t) in sweeps:
            continue
        s = sweep(b, t, samples, args.steps, args.eps)
        if s is None:
            continue
        if args.all:
            sweeps[(b, t)] = s
            continue
        for op in OPS:
            key = (act(op, b), act(op, t))
            img = frozenset(act(op, c) for c in s)
            if key in sweeps and sweeps[key] != img:
                sys.exit(f"inconsistent sweep for {key}")
            sweeps[key] = img
    if len(sweeps) != 48:
        sys.exit(f"expected 48 restricted pivots, found {len(sweeps)}")

    restricted = {(restricted_class(b, t), frozenset([b]), s, t) for (b, t), s in sweeps.items()}

    monkey = set()
    for (b1, w), s1 in sweeps.items():
        for (b2r, tr), s2r in sweeps.items():
            b2, t = add(w, b2r), add(w, tr)
            s2 = {add(w, c) for c in s2r}
            if b2 in (b1, (0, 0, 0)) or t in ((0, 0, 0), b1):
                continue
            if b2 in s1 or b1 in s2:
                continue
            empty = (set(s1) | s2 | {w, t}) - {(0, 0, 0)}
            both_flat = (restricted_class(b1, w) == "in_layer"
                         and restricted_class(b2r, tr) == "in_layer")
            cls = "in_layer_monkey" if both_flat else "out_of_layer_monkey"
            monkey.add((cls, frozenset([b1, b2]), frozenset(empty), t))

    out = []
    for model, group in (("restricted", restricted), ("monkey", monkey)):
        for cls, base, empty, target in orbit_representatives(group):
            out.append({"class": cls, "model": model,
                        "base": sorted(base), "empty": sorted(empty), "target": list(target)})
    text = "[\n" + ",\n".join(" " + json.dumps(t) for t in out) + "\n]"
    if args.output == "-":
        print(text)
    else:
        with open(args.output, "w") as f:
            f.write(text + "\n")
    print(f"{len(restricted)} restricted, {len(monkey)} monkey templates, "
          f"{len(out)} orbit representatives", file=sys.stderr)


if __name__ == "__main__":
    main()

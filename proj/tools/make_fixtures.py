#!/usr/bin/env python3
"""Regenerates tests/fixtures/*.json.

Every file is one canonical JSON object (sorted keys, no whitespace):
  {"command": ..., "input": {...}, "note": ..., ["certificate_bound": k]}

Gordan fixtures are built so that, whenever U(E) is empty, a certificate
with multipliers <= certificate_bound (<= 3) exists by construction.
"""
import json
import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def write(name, obj):
    (OUT / f"{name}.json").write_text(dump(obj) + "\n")


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def gordan_fixtures(rng):
    count = 0
    for d in (2, 3, 4):
        for _ in range(8):
            # Empty: a planted relation sum m_i p_i + q = 0 with m_i <= 3.
            k = rng.randint(1, 4)
            pts = [[rng.randint(-4, 4) for _ in range(d)] for _ in range(k)]
            mult = [rng.randint(1, 3) for _ in range(k)]
            q = [-sum(m * p[c] for m, p in zip(mult, pts)) for c in range(d)]
            extra = [[rng.randint(-5, 5) for _ in range(d)]
                     for _ in range(rng.randint(0, 2))]
            points = pts + [q] + extra
            rng.shuffle(points)
            uniq = []
            for p in points:
                if p not in uniq:
                    uniq.append(p)
            write(f"gordan_empty_{count:02d}", {
                "command": "gordan",
                "input": {"points": uniq},
                "note": "planted positive relation",
                "certificate_bound": 3,
            })
            count += 1

            # Nonempty: every point strictly positive under a hidden form.
            phi = [rng.randint(-3, 3) for _ in range(d)]
            if not any(phi):
                phi[0] = 1
            want = rng.randint(1, 6)
            points = []
            while len(points) < want:
                p = [rng.randint(-5, 5) for _ in range(d)]
                if dot(phi, p) > 0 and p not in points:
                    points.append(p)
            write(f"gordan_open_{count:02d}", {
                "command": "gordan",
                "input": {"points": points},
                "note": "points in an open half-space",
            })
            count += 1

    named = {
        "gordan_opposite": [[1, 0], [-1, 0]],
        "gordan_cone": [[1, 0], [0, 1]],
        "gordan_triangle": [[2, -1], [-1, 2], [-1, -1]],
        "gordan_three_sum": [[1, 0], [-1, 1], [0, -1]],
        "gordan_zero": [[0, 0]],
        "gordan_weighted": [[3, 0, 0], [-1, 2, 0], [0, -3, 1], [0, 0, -1]],
    }
    for name, pts in named.items():
        write(name, {
            "command": "gordan",
            "input": {"points": pts},
            "note": "hand-checked",
            "certificate_bound": 3,
        })


ARRANGEMENTS = {
    "lines_m1": (2, [[1, 0]]),
    "lines_m2": (2, [[1, 0], [0, 1]]),
    "lines_m3": (2, [[1, 0], [0, 1], [1, 1]]),
    "lines_m4": (2, [[1, 0], [0, 1], [1, 1], [1, -1]]),
    "lines_m5": (2, [[1, 0], [0, 1], [1, 1], [1, -1], [1, 2]]),
    "point_rank1": (1, [[1]]),
    "planes_coordinate": (3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    "planes_braid": (3, [[1, -1, 0], [0, 1, -1], [1, 0, -1]]),
    "planes_generic4": (3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]),
    "planes_pencil": (3, [[1, 0, 0], [0, 1, 0], [1, 1, 0]]),
    "planes_b3": (3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, -1, 0]]),
}


def arrangement_fixtures():
    for name, (d, normals) in ARRANGEMENTS.items():
        write(f"arrangement_{name}", {
            "command": "facets",
            "input": {"normals": normals, "rank": d},
            "note": f"central arrangement in rank {d}",
        })


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for f in OUT.glob("*.json"):
        f.unlink()
    rng = random.Random(20240611)
    gordan_fixtures(rng)
    arrangement_fixtures()


if __name__ == "__main__":
    main()

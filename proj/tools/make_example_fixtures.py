#!/usr/bin/env python3
"""Writes fixtures/examples.json and fixtures/obs14.json from the closed-form
values printed with each construction.

Every claim carries "source": "stated" when the number is printed with the
construction, "derived" when it was worked out by hand from it.
"""

import json
import pathlib
import sys

S, D = "stated", "derived"


def claim(q, v, src):
    return {"quantity": q, "expected": v, "source": src}


def ident(lhs, coeffs, src):
    return {"class": lhs, "expected": coeffs, "source": src}


def ones_claims(l, start=1):
    return [claim(f"A.E{i}", 1, S) for i in range(start, l + 1)]


def plane():
    yield {}, [claim("K^2", 9, S), claim("-K.A", 3, S), claim("A^2", 1, D)], [ident("K+3A", [0], S)]


def hirzebruch():
    for e in range(0, 9):
        yield ({"e": e},
               [claim("K^2", 8, S), claim("-K.A", e + 4, S), claim("A^2", e + 2, D), claim("(K+2A).f", 0, D)],
               [ident("K+2A", [0, e], S)])


def del_pezzo():
    for i in range(2, 7):
        d = 9 - i
        yield ({"i": i}, [claim("K^2", d, S), claim("A^2", d, S), claim("-K.A", d, S)],
               [ident("K+A", [0] * (1 + i), S)])


def del_pezzo_2():
    # -K = 3H - E1 - ... - E7
    yield ({}, [claim("K^2", 2, S), claim("-K.A", 2, S), claim("A^2", 2, S), claim("(-2K)^2", 8, S),
                claim("chi(-2K)", 7, D), claim("g(-2K)", 3, D)],
           [ident("K+2A", [3] + [-1] * 7, D)])


def del_pezzo_1():
    yield ({}, [claim("K^2", 1, S), claim("-K.A", 1, S), claim("A^2", 1, S), claim("(-3K)^2", 9, S),
                claim("g(-3K)", 4, S), claim("chi(-3K)", 7, D)],
           [ident("K+3A", [6] + [-2] * 8, D)])


def elliptic_fibration():
    for n in range(2, 7):
        src = S if n == 2 else D
        c = 2 * n - 1
        # (2n-1)(3H - sum E) + 2 E9
        coeffs = [3 * c] + [-c] * 8 + [-c + 2]
        yield ({"n": n},
               [claim("K^2", 0, S), claim("A^2", 2 * n - 1, src), claim("-K.A", 1, S),
                claim("(K+2A).(-K)", 2, S), claim("A.E9", n - 1, src), claim("A.E1", n, D)],
               [ident("K+2A", coeffs, src)])


def conic_bundle():
    for e in range(0, 3):
        for n in range(-1, 9):
            l = 8 - n
            yield ({"e": e, "n": n},
                   [claim("K^2", n, S), claim("-K.A", n + 2, S), claim("A^2", n + 4, D),
                    claim("-K.(K+A)", 2, D)] + ones_claims(l),
                   [ident("K+A", [0, 1] + [0] * l, S)])


def f1_cubic_section():
    for l in range(0, 11):
        yield ({"l": l},
               [claim("K^2", 8 - l, D), claim("A^2", 15 - l, S), claim("-K.A", 11 - l, S),
                claim("-K.(K+A)", 3, S)] + ones_claims(l),
               [ident("K+A", [1, 1] + [0] * l, S)])


def f0_odd():
    for n in range(-19, 0, 2):
        l = 8 - n
        k = (l - 3) // 2
        yield ({"n": n}, [claim("K^2", n, S), claim("A^2", l - 6, S), claim("-K.A", 1, S)] + ones_claims(l),
               [ident("K+A", [0, k - 2] + [0] * l, S)])


def f0_even():
    for n in range(-20, -1, 2):
        l = 8 - n
        k = (l - 4) // 2
        yield ({"n": n},
               [claim("K^2", n, S), claim("A^2", 2 * l - 15, S), claim("-K.A", 1, S), claim("A.E1", 2, S),
                claim("(K+A).(f-E1)", 0, S)] + ones_claims(l, 2),
               [ident("K+A", [1, k - 2, -1] + [0] * (l - 1), S)])


def non_anticanonical():
    for n in range(4, 13):
        yield ({"n": n},
               [claim("K^2", -1, D), claim("-K.A", 2 * n - 5, S), claim("A^2", 4 * n - 9, D),
                claim("chi(-K-A)", 3 - n, S)],
               [ident("K+A", [0, n - 2] + [0] * 9, D)])


FAMILIES = [
    ("plane", plane),
    ("hirzebruch", hirzebruch),
    ("del-pezzo", del_pezzo),
    ("del-pezzo-2", del_pezzo_2),
    ("del-pezzo-1", del_pezzo_1),
    ("conic-bundle", conic_bundle),
    ("f1-cubic-section", f1_cubic_section),
    ("elliptic-fibration", elliptic_fibration),
    ("f0-odd", f0_odd),
    ("f0-even", f0_even),
    ("non-anticanonical", non_anticanonical),
]


def main():
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "fixtures")
    out_dir.mkdir(parents=True, exist_ok=True)
    doc = {"version": 1, "families": {}}
    for fid, gen in FAMILIES:
        doc["families"][fid] = [{"params": p, "claims": c, "identities": i} for p, c, i in gen()]
    (out_dir / "examples.json").write_text(json.dumps(doc, indent=1) + "\n")

    n = 6
    obs = {
        "divisor": {"kind": "BlowUpF", "e": 0, "l": 9, "config": {
            "on_smooth_anticanonical": False, "distinct_fibers": False, "away_from_min_section": False,
            "anticanonical_effective": False, "general_position": False,
            "complete_intersection_of_cubics": False},
            "coeffs": [2, n] + [-1] * 9},
        "flags": {"ample": True, "bpf": True, "anticanonical": False},
    }
    (out_dir / "obs14.json").write_text(json.dumps(obs, indent=1) + "\n")


if __name__ == "__main__":
    main()

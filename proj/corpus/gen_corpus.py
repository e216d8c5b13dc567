#!/usr/bin/env python3
"""Writes the bundled corpus next to this script. Output is deterministic."""
import json
import pathlib

HERE = pathlib.Path(__file__).resolve().parent


def poset(objects, relations):
    n = len(objects)
    at = {o: i for i, o in enumerate(objects)}
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in relations:
        leq[at[a]][at[b]] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if leq[i][k] and leq[k][j]:
                    leq[i][j] = True
    name = lambda i, j: f"{objects[i]}_{objects[j]}"
    morphisms = [{"id": name(i, j), "src": objects[i], "dst": objects[j]}
                 for i in range(n) for j in range(n) if i != j and leq[i][j]]
    compose = [{"g": name(j, k), "f": name(i, j), "gf": name(i, k)}
               for i in range(n) for j in range(n) for k in range(n)
               if i != j and j != k and leq[i][j] and leq[j][k]]
    return {"objects": list(objects), "morphisms": morphisms, "compose": compose}


def chain(n):
    objs = [str(i) for i in range(n)]
    return poset(objs, [(objs[i - 1], objs[i]) for i in range(1, n)])


def monoid(elements, table):
    return {
        "objects": ["*"],
        "morphisms": [{"id": e, "src": "*", "dst": "*"} for e in elements],
        "compose": [{"g": g, "f": f, "gf": "id_*" if table[i][j] == "1" else table[i][j]}
                    for i, g in enumerate(elements) for j, f in enumerate(elements)],
    }


CATEGORIES = {
    **{f"chain{n}": chain(n) for n in range(2, 7)},
    "diamond": poset(["b", "l", "r", "t"], [("b", "l"), ("b", "r"), ("l", "t"), ("r", "t")]),
    "pentagon": poset(["0", "a", "b", "c", "1"],
                      [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]),
    "monoid_z2": monoid(["g"], [["1"]]),
    "monoid_idem": monoid(["e"], [["e"]]),
    "parallel_pair": {"objects": ["X", "Y"],
                      "morphisms": [{"id": "a", "src": "X", "dst": "Y"},
                                    {"id": "b", "src": "X", "dst": "Y"}],
                      "compose": []},
    "iso_pair": {"objects": ["a", "b"],
                 "morphisms": [{"id": "f", "src": "a", "dst": "b"},
                               {"id": "g", "src": "b", "dst": "a"}],
                 "compose": [{"g": "g", "f": "f", "gf": "id_a"},
                             {"g": "f", "f": "g", "gf": "id_b"}]},
    "pointed_sets2": {"objects": ["0", "S"],
                      "morphisms": [{"id": "c", "src": "S", "dst": "S"},
                                    {"id": "i", "src": "0", "dst": "S"},
                                    {"id": "t", "src": "S", "dst": "0"}],
                      "compose": [{"g": "t", "f": "i", "gf": "id_0"},
                                  {"g": "i", "f": "t", "gf": "c"},
                                  {"g": "c", "f": "c", "gf": "c"},
                                  {"g": "c", "f": "i", "gf": "i"},
                                  {"g": "t", "f": "c", "gf": "t"}]},
}

Z2 = {"kind": "zn", "n": 2}
RINGS = {
    "z2": Z2,
    "z4": {"kind": "zn", "n": 4},
    "z6": {"kind": "zn", "n": 6},
    "z2xz2": {"kind": "product", "factors": [Z2, Z2]},
    "z2_dual": {"kind": "polyquo", "base": Z2, "poly": [0, 0, 1]},
}

# (ring, algebra, element map by label)
MAPS = {
    "z4_to_z2": ("z4", "z2", {"0": "0", "1": "1", "2": "0", "3": "1"}),
    "z6_to_z2": ("z6", "z2", {"0": "0", "1": "1", "2": "0", "3": "1", "4": "0", "5": "1"}),
    "z2_to_z2_dual": ("z2", "z2_dual", {"0": "0", "1": "1"}),
    "z2_to_z2xz2": ("z2", "z2xz2", {"0": "(0,0)", "1": "(1,1)"}),
    "z4_identity": ("z4", "z4", {"0": "0", "1": "1", "2": "2", "3": "3"}),
}

TRUNCATED = {f"p{p}_b{b}": {"p": p, "bound": b} for p, b in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]}

BAD_ASSOCIATIVITY = monoid(["a", "b"], [["b", "b"], ["a", "b"]])

# chain 0<1<2 localized at {1, 2}; the fibration 1_2 is dropped
DROPPED_FIBRATION = {
    "category": chain(3),
    "cof": ["0_1", "0_2", "1_2", "id_0", "id_1", "id_2"],
    "we": ["0_1", "id_0", "id_1", "id_2"],
    "fib": ["id_0", "id_1", "id_2"],
}


# natural μ on the monoid {1, g, z} (g² = 1, z absorbing) that is not associative
NON_ASSOCIATIVE_MU = {
    "category": monoid(["g", "z"], [["1", "z"], ["z", "z"]]),
    "monad": {
        "T_obj": {"*": "*"},
        "T_mor": {"g": "id_*", "id_*": "id_*", "z": "id_*"},
        "unit": {"*": "z"},
        "mult": {"*": "g"},
    },
}


def write(path, data):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n")


def main():
    for name, cat in CATEGORIES.items():
        write(HERE / f"{name}.json", cat)
    for name, ring in RINGS.items():
        write(HERE / "rings" / f"{name}.json", ring)
    for name, (r, s, m) in MAPS.items():
        write(HERE / "rings" / f"{name}.json", {"ring": r, "algebra": s, "map": m})
    for name, spec in TRUNCATED.items():
        write(HERE / "truncated" / f"{name}.json", spec)
    bad = HERE / "fixtures" / "bad"
    write(bad / "broken_associativity.json", BAD_ASSOCIATIVITY)
    write(bad / "dropped_fibration.json", DROPPED_FIBRATION)
    write(bad / "non_iso_mult" / "ring.json", RINGS["z2"])
    write(bad / "non_iso_mult" / "algebra.json", RINGS["z2_dual"])
    write(bad / "non_iso_mult" / "map.json", MAPS["z2_to_z2_dual"][2])
    write(bad / "non_associative_mu.json", NON_ASSOCIATIVE_MU)


if __name__ == "__main__":
    main()

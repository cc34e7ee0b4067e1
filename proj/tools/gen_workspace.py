"""Writes the bundled example workspace under workspace/.

Run from the repository root: python3 tools/gen_workspace.py
"""
import itertools
import json
import os

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "workspace")


def dump(rel, obj):
    path = os.path.join(ROOT, rel)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        json.dump(obj, f, indent=1)
        f.write("\n")
    return rel


def unit_matrix(n, r, c):
    return [[1 if (i, j) == (r, c) else 0 for j in range(n)] for i in range(n)]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def cyclic(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def s3():
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    compose = lambda p, q: tuple(p[q[x]] for x in range(3))
    table = [[index[compose(p, q)] for q in perms] for p in perms]
    sign = []
    for p in perms:
        inv = sum(1 for a in range(3) for b in range(a + 1, 3) if p[a] > p[b])
        sign.append(-1 if inv % 2 else 1)
    return table, sign


def regular_from_table(table):
    n = len(table)
    left = [[[0] * n for _ in range(n)] for _ in range(n)]
    right = [[[0] * n for _ in range(n)] for _ in range(n)]
    for g in range(n):
        for h in range(n):
            left[g][table[g][h]][h] = 1
            right[g][table[h][g]][h] = 1
    return left, right


def m2_mult():
    n = 4
    mult = [0] * n ** 3
    for i, j, k, l in itertools.product(range(2), repeat=4):
        if j == k:
            mult[((2 * i + j) * n + (2 * k + l)) * n + (2 * i + l)] = 1
    return mult


def regular_from_mult(mult, n):
    left = [[[0] * n for _ in range(n)] for _ in range(n)]
    right = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        c = mult[(i * n + j) * n + k]
        left[i][k][j] += c
        right[j][k][i] += c
    return left, right


def bimodule(name, left_alg, right_alg, left, right):
    return {"name": name, "left_alg": left_alg, "right_alg": right_alg, "dim": len(left[0]),
            "left_action": left, "right_action": right}


def main():
    manifest = {"algebras": [], "groups": [], "bimodules": [], "morphisms": [], "diagrams": []}
    manifest["algebras"].append(dump("algebras/k.json", {"name": "k", "dim": 1, "basis": ["1"], "mult": [1],
                                                           "unit": [1], "form": [1]}))
    mult = m2_mult()
    manifest["algebras"].append(dump("algebras/M2.json", {
        "name": "M2", "dim": 4, "basis": ["E11", "E12", "E21", "E22"], "mult": mult,
        "unit": [1, 0, 0, 1], "form": [2, 0, 0, 2]}))

    s3_table, s3_sign = s3()
    groups = {"Z2": cyclic(2), "Z3": cyclic(3), "S3": s3_table}
    for name, table in groups.items():
        manifest["groups"].append(dump(f"groups/{name}.json", {"name": name, "algebra": "q" + name,
                                                                "order": len(table), "table": table}))
        left, right = regular_from_table(table)
        manifest["bimodules"].append(dump(f"bimodules/reg_q{name}.json",
                                          bimodule(f"reg_q{name}", "q" + name, "q" + name, left, right)))
        n = len(table)
        manifest["bimodules"].append(dump(f"bimodules/triv_q{name}.json",
                                          bimodule(f"triv_q{name}", "q" + name, "k", [[[1]]] * n, [[[1]]])))

    manifest["bimodules"].append(dump("bimodules/sgn_qS3.json",
                                      bimodule("sgn_qS3", "qS3", "k", [[[s]] for s in s3_sign], [[[1]]])))
    manifest["bimodules"].append(dump("bimodules/sgn_qZ2.json",
                                      bimodule("sgn_qZ2", "qZ2", "k", [[[1]], [[-1]]], [[[1]]])))
    left, right = regular_from_mult(mult, 4)
    manifest["bimodules"].append(dump("bimodules/reg_M2.json", bimodule("reg_M2", "M2", "M2", left, right)))
    manifest["bimodules"].append(dump("bimodules/V2.json", bimodule(
        "V2", "M2", "k", [unit_matrix(2, i, j) for i in range(2) for j in range(2)], [identity(2)])))
    manifest["bimodules"].append(dump("bimodules/reg_k.json", bimodule("reg_k", "k", "k", [[[1]]], [[[1]]])))
    manifest["bimodules"].append(dump("bimodules/kn3.json", bimodule("kn3", "k", "k", [identity(3)], [identity(3)])))

    manifest["morphisms"].append(dump("morphisms/f_kn3.json", {
        "name": "f_kn3", "source": "kn3:+", "target": "kn3:+", "matrix": [[1, 2, 0], [0, 1, 0], [3, 0, 1]]}))
    manifest["morphisms"].append(dump("morphisms/half_V2.json", {
        "name": "half_V2", "source": "V2:+", "target": "V2:+", "matrix": [["1/2", 0], [0, "1/2"]]}))

    diagrams = {
        "loop_kn3.dia": "# left trace of f_kn3: closes the strand with the left cup and cap\n"
                        "@ambient k k\ncupR:kn3\nid:kn3:- box:f_kn3\ncapL:kn3\n",
        "zigzag_V2.dia": "# straightening the dual strand of V2 gives its identity\n"
                         "id:V2:- cupL:V2\ncapL:V2 id:V2:-\n",
        "dim_reg_qS3.dia": "# right quantum dimension of the regular bimodule\n"
                           "@ambient qS3 qS3\ncupL:reg_qS3\ncapR:reg_qS3\n",
    }
    for name, text in diagrams.items():
        path = os.path.join(ROOT, "diagrams", name)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w") as f:
            f.write(text)
        manifest["diagrams"].append("diagrams/" + name)

    dump("workspace.json", manifest)


if __name__ == "__main__":
    main()

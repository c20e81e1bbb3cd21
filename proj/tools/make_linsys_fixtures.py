#!/usr/bin/env python3
"""Writes fixtures/tetrahedron_sextics and fixtures/trihedra_septics."""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "fixtures")


def dump(path, header, doc):
    with open(path, "w") as f:
        for line in header:
            f.write("// " + line + "\n")
        f.write(json.dumps(doc, indent=2))
        f.write("\n")


def tetrahedron():
    planes = {f"f{i}": [1 if j == i else 0 for j in range(4)] for i in range(4)}
    conds = [{"label": f"l{i}{j}", "line": {"planes": [f"f{i}", f"f{j}"]}, "order": 2}
             for i in range(4) for j in range(i + 1, 4)]
    s = ["s0", "s1", "s2", "s3"]
    form = ["*".join(f"{s[k]}^2" for k in range(4) if k != i) for i in range(4)]
    form = form[::-1]
    for a in range(4):
        for b in range(a, 4):
            form.append(f"s0*s1*s2*s3*{s[a]}*{s[b]}")
    cones = []
    for i in range(4):
        others = [k for k in range(4) if k != i]
        cones.append({"label": f"v{i}", "at": {"planes": [f"f{k}" for k in others]},
                      "proportional_to": "*".join(f"f{k}" for k in others)})
    doc = {
        "schema": "enriques-lab/linsys/1",
        "name": "tetrahedron-sextics",
        "note": "sextics double along the six edges of the coordinate tetrahedron",
        "degree": 6,
        "planes": planes,
        "conditions": conds,
        "expected_dimension": 13,
        "contained_lines": [{"label": "l01", "planes": ["f0", "f1"]}],
        "not_contained_lines": [{"label": "generic", "points": [[1, 2, 3, 4], [2, -1, 5, 1]]}],
        "expected_form": form,
        "tangent_cones": cones,
    }
    dump(os.path.join(OUT, "tetrahedron_sextics"),
         ["Sextic surfaces of P^3 with double points along the edges of s0*s1*s2*s3 = 0.",
          "expected_form: the four s_j^2 s_k^2 s_h^2 and s0*s1*s2*s3 times every quadric monomial.",
          "At a vertex the tangent cone is the union of the three faces through it."],
         doc)


def trihedra():
    planes = {
        "f1": [1, 0, 0, 0], "f2": [0, 1, 0, 0], "f3": [0, 0, 1, 0],
        "fp1": [1, 2, 0, -3], "fp2": [3, -1, 1, -3], "fp3": [-5, 1, 2, 2],
    }
    conds = []
    for stem, f in (("l", "f"), ("lp", "fp")):
        for i in range(1, 4):
            for j in range(i + 1, 4):
                conds.append({"label": f"{stem}{i}{j}", "line": {"planes": [f"{f}{i}", f"{f}{j}"]}, "order": 2})
    rlines = [{"label": f"r{i}{k}", "planes": [f"f{i}", f"fp{k}"]} for i in range(1, 4) for k in range(1, 4)]
    form = [f"f1*f2*f3*fp1*fp2*fp3*s{i}" for i in range(4)]
    form += ["fp1*fp2*fp3*f3^2*f2^2", "fp1*fp2*fp3*f1^2*f3^2", "fp1*fp2*fp3*f1^2*f2^2",
             "f1*f2*f3*fp3^2*fp2^2", "f1*f2*f3*fp1^2*fp3^2", "f1*f2*f3*fp1^2*fp2^2"]
    cones = [{"label": "v", "at": {"planes": ["f1", "f2", "f3"]}, "proportional_to": "f1*f2*f3"},
             {"label": "vp", "at": {"planes": ["fp1", "fp2", "fp3"]}, "proportional_to": "fp1*fp2*fp3"}]
    for i in range(1, 4):
        for j in range(i + 1, 4):
            for k in range(1, 4):
                cones.append({"label": f"q{i}{j}{k}", "at": {"planes": [f"f{i}", f"f{j}", f"fp{k}"]},
                              "proportional_to": f"f{i}*f{j}"})
                cones.append({"label": f"qp{i}{j}{k}", "at": {"planes": [f"fp{i}", f"fp{j}", f"f{k}"]},
                              "proportional_to": f"fp{i}*fp{j}"})
    doc = {
        "schema": "enriques-lab/linsys/1",
        "name": "trihedra-septics",
        "note": "septics double along the six edges of two trihedra T and T'",
        "degree": 7,
        "planes": planes,
        "conditions": conds,
        "expected_dimension": 9,
        "contained_lines": rlines + [{"label": "l12", "planes": ["f1", "f2"]}],
        "not_contained_lines": [{"label": "generic", "points": [[1, 2, 3, 4], [2, -1, 5, 1]]}],
        "expected_form": form,
        "tangent_cones": cones,
        "face_flag": {
            "faces": ["f1", "f2", "f3", "fp1", "fp2", "fp3"],
            "expected_dimensions": [8, 7, 6, 5, 4, 3],
            "residual": [f"f1*f2*f3*fp1*fp2*fp3*s{i}" for i in range(4)],
        },
        "random_trihedra": {"seed": 20261015, "runs": 2},
    }
    dump(os.path.join(OUT, "trihedra_septics"),
         ["Septic surfaces of P^3 with double points along the edges of two trihedra.",
          "T: vertex [0:0:0:1], faces s0, s1, s2. T': vertex [1:1:1:1], faces fp1, fp2, fp3.",
          "r_ik = f_i n fp_k lie on every member; q_ijk = l_ij n fp_k, qp_ijk = lp_ij n f_k.",
          "face_flag: containing the faces one by one drops the dimension by one each time,",
          "leaving f1 f2 f3 fp1 fp2 fp3 times a plane.",
          "random_trihedra reruns the dimension count on seeded random configurations."],
         doc)


if __name__ == "__main__":
    tetrahedron()
    trihedra()

#!/usr/bin/env python3
"""Writes fixtures/genus13_model and fixtures/genus9_model.

Each incidence entry is emitted with a one-line comment saying where the
number comes from. Generators are total transforms; strict transforms are
spelled out as named classes.
"""

import itertools
import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def emit(path, header, name, note, centers, classes, checks):
    out = []
    for line in header:
        out.append("// " + line if line else "//")
    out.append("{")
    out.append('  "schema": "enriques-lab/blowup-model/1",')
    out.append(f'  "name": {json.dumps(name)},')
    out.append(f'  "note": {json.dumps(note)},')
    out.append('  "centers": [')
    for n, c in enumerate(centers):
        sep = "," if n + 1 < len(centers) else ""
        if c["kind"] == "point":
            out.append(f'    // {c["why"]}')
            out.append(f'    {{"name": "{c["name"]}", "kind": "point"}}{sep}')
            continue
        out.append(f'    // {c["why"]}')
        out.append(f'    {{"name": "{c["name"]}", "kind": "curve", "genus": 0, "incidence": {{')
        for g, (value, why) in c["incidence"].items():
            out.append(f'      "{g}": {value},  // {why}')
        out.append('      "others": 0')
        out.append(f'    }}}}{sep}')
    out.append("  ],")
    out.append('  "classes": {')
    items = list(classes.items())
    for n, (k, (expr, why)) in enumerate(items):
        sep = "," if n + 1 < len(items) else ""
        if why:
            out.append(f"    // {why}")
        out.append(f'    "{k}": {json.dumps(expr)}{sep}')
    out.append("  },")
    out.append('  "checks": [')
    for n, chk in enumerate(checks):
        sep = "," if n + 1 < len(checks) else ""
        out.append("    " + json.dumps(chk) + sep)
    out.append("  ]")
    out.append("}")
    path.write_text("\n".join(out) + "\n", encoding="utf-8")


def genus13():
    # Tetrahedron s0 s1 s2 s3 = 0; face f_i = {s_i = 0} is opposite vertex v_i;
    # edge l_ij = f_i n f_j contains the two vertices v_k, v_h, {k,h} = complement.
    V = range(4)
    centers = []
    for i in V:
        centers.append({"name": f"E{i}", "kind": "point", "why": f"vertex v{i}"})
    for i, j in itertools.combinations(V, 2):
        k, h = [x for x in V if x not in (i, j)]
        centers.append({
            "name": f"F{i}{j}", "kind": "curve",
            "why": f"edge l{i}{j} = f{i} n f{j}, a line through v{k} and v{h}",
            "incidence": {
                "H": (1, "a line"),
                f"E{k}": (1, f"passes once through v{k}"),
                f"E{h}": (1, f"passes once through v{h}"),
            },
        })
    for i in V:
        for j in V:
            if i == j:
                continue
            inc = {f"E{i}": (-1, f"a line in the exceptional plane over v{i}, where E{i} restricts to O(-1)")}
            for k in V:
                if k in (i, j):
                    continue
                a, b = sorted((j, k))
                inc[f"F{a}{b}"] = (1, f"edge l{a}{b} lies in f{j} and passes through v{i}; its direction point lies on the line")
            centers.append({
                "name": f"G{i}{j}", "kind": "curve",
                "why": f"line E{i} n (strict transform of f{j}) inside the plane over v{i}",
                "incidence": inc,
            })
    classes = {
        "Sigma": ("6H - 3*sum(E?) - 2*sum(F??) - sum(G??)",
                  "strict transform of a general member, 6H - 3 sum calE - 2 sum F - 4 sum G, rewritten in total transforms"),
    }
    for i in V:
        gs = " - ".join(f"G{i}{j}" for j in V if j != i)
        classes[f"calE{i}"] = (f"E{i} - {gs}", f"strict transform of the plane over v{i}" if i == 0 else "")
    classes["D"] = ("6H - 2*sum(F??) - 4*sum(G??)", "curve-section divisor on the strict transform")
    classes["SigmaStrict"] = ("6H - 3*(calE0 + calE1 + calE2 + calE3) - 2*sum(F??) - 4*sum(G??)",
                              "the same member written with strict transforms")
    trivial = [f"calE{i}" for i in V]
    checks = [
        {"id": "sigma-forms-agree", "kind": "triple", "args": ["Sigma - SigmaStrict", "H", "H"], "expected": 0,
         "anchor": "strict and total forms of the member class coincide"},
        {"id": "sigma-cube", "kind": "triple", "args": ["Sigma", "Sigma", "Sigma"], "expected": 24,
         "anchor": "deg W = 2p - 2 = 24 for p = 13"},
    ]
    for i in V:
        checks.append({"id": f"sigma-sq-calE{i}", "kind": "triple", "args": ["Sigma", "Sigma", f"calE{i}"],
                       "expected": 0, "anchor": f"Sigma^2 . calE{i} = 0"})
    for i in V:
        checks.append({"id": f"sigma-calE{i}-zero", "kind": "zero_restriction", "args": ["Sigma", f"calE{i}"],
                       "expected": True, "anchor": f"Sigma . calE{i} = 0"})
    checks += [
        {"id": "curve-section-even", "kind": "divisible", "args": ["D"], "trivial": trivial, "modulus": 2,
         "expected": True, "anchor": "curve section is 2-divisible"},
        {"id": "sigma-even-mod-trivial", "kind": "divisible", "args": ["Sigma"], "trivial": trivial, "modulus": 2,
         "expected": True, "anchor": "Sigma = D - 3 sum calE"},
        {"id": "control-odd", "kind": "divisible", "args": ["D + H"], "trivial": trivial, "modulus": 2,
         "expected": False, "anchor": "odd control class"},
    ]
    header = [
        "Blow-up tower for the sextics of P^3 double along the six edges of a tetrahedron.",
        "Stage 1: the four vertices. Stage 2: the six edges. Stage 3: the twelve lines",
        "cut on the vertex planes by the strict transforms of the faces.",
        "Generators are total transforms. Every incidence value is G.C for the",
        "total transform G at the stage where C is blown up; entries not listed are 0.",
        "Cross-check: Sigma^3 = 24.",
        "Generated by tools/make_blowup_fixtures.py.",
    ]
    emit(ROOT / "fixtures" / "genus13_model", header, "genus13",
         "sextics double along the edges of a tetrahedron", centers, classes, checks)


def genus9():
    # Trihedra T (vertex v, faces f1 f2 f3) and T' (vertex v', faces f'1 f'2 f'3).
    # l_ij = f_i n f_j, l'_ij = f'_i n f'_j (i < j); q_ijk = l_ij n f'_k,
    # q'_ijk = l'_ij n f_k; r_ik = f_i n f'_k. General position: every
    # incidence below is transverse.
    I = (1, 2, 3)
    pairs = list(itertools.combinations(I, 2))
    centers = [
        {"name": "Ev", "kind": "point", "why": "vertex v of T"},
        {"name": "Evp", "kind": "point", "why": "vertex v' of T'"},
    ]
    for (i, j) in pairs:
        for k in I:
            centers.append({"name": f"Eq{i}{j}{k}", "kind": "point", "why": f"q{i}{j}{k} = l{i}{j} n f'{k}"})
    for (i, j) in pairs:
        for k in I:
            centers.append({"name": f"Eqp{i}{j}{k}", "kind": "point", "why": f"q'{i}{j}{k} = l'{i}{j} n f{k}"})
    for (i, j) in pairs:
        inc = {"H": (1, "a line"), "Ev": (1, "passes through v")}
        for k in I:
            inc[f"Eq{i}{j}{k}"] = (1, f"contains q{i}{j}{k}")
        centers.append({"name": f"F{i}{j}", "kind": "curve", "why": f"edge l{i}{j} of T", "incidence": inc})
    for (i, j) in pairs:
        inc = {"H": (1, "a line"), "Evp": (1, "passes through v'")}
        for k in I:
            inc[f"Eqp{i}{j}{k}"] = (1, f"contains q'{i}{j}{k}")
        centers.append({"name": f"Fp{i}{j}", "kind": "curve", "why": f"edge l'{i}{j} of T'", "incidence": inc})
    for i in I:
        for k in I:
            inc = {"H": (1, "a line")}
            for (a, b) in pairs:
                if i in (a, b):
                    inc[f"Eq{a}{b}{k}"] = (1, f"q{a}{b}{k} lies on f{i} and f'{k}")
            for (a, b) in pairs:
                if k in (a, b):
                    inc[f"Eqp{a}{b}{i}"] = (1, f"q'{a}{b}{i} lies on f'{k} and f{i}")
            centers.append({"name": f"R{i}{k}", "kind": "curve", "why": f"r{i}{k} = f{i} n f'{k}", "incidence": inc})
    for i in I:
        inc = {"Ev": (-1, "a line in the plane over v")}
        for (a, b) in pairs:
            if i in (a, b):
                inc[f"F{a}{b}"] = (1, f"edge l{a}{b} lies in f{i}; its direction point is on the line")
        centers.append({"name": f"G{i}", "kind": "curve", "why": f"Ev n (strict transform of f{i})", "incidence": inc})
    for i in I:
        inc = {"Evp": (-1, "a line in the plane over v'")}
        for (a, b) in pairs:
            if i in (a, b):
                inc[f"Fp{a}{b}"] = (1, f"edge l'{a}{b} lies in f'{i}; its direction point is on the line")
        centers.append({"name": f"Gp{i}", "kind": "curve", "why": f"Evp n (strict transform of f'{i})", "incidence": inc})
    for (i, j) in pairs:
        for k in I:
            for h in (i, j):
                inc = {
                    f"Eq{i}{j}{k}": (-1, f"a line in the plane over q{i}{j}{k}"),
                    f"F{i}{j}": (1, f"l{i}{j} lies in f{h} and passes through q{i}{j}{k}"),
                    f"R{h}{k}": (1, f"r{h}{k} lies in f{h} and passes through q{i}{j}{k}"),
                }
                centers.append({"name": f"L{i}{j}{k}_{h}", "kind": "curve",
                                "why": f"Eq{i}{j}{k} n (strict transform of f{h})", "incidence": inc})
    for (i, j) in pairs:
        for k in I:
            for h in (i, j):
                inc = {
                    f"Eqp{i}{j}{k}": (-1, f"a line in the plane over q'{i}{j}{k}"),
                    f"Fp{i}{j}": (1, f"l'{i}{j} lies in f'{h} and passes through q'{i}{j}{k}"),
                    f"R{k}{h}": (1, f"r{k}{h} lies in f'{h} and passes through q'{i}{j}{k}"),
                }
                centers.append({"name": f"Lp{i}{j}{k}_{h}", "kind": "curve",
                                "why": f"Eqp{i}{j}{k} n (strict transform of f'{h})", "incidence": inc})

    classes = {
        "calE": ("Ev - sum(G?)", "strict transform of the plane over v"),
        "calEp": ("Evp - sum(Gp?)", "strict transform of the plane over v'"),
    }
    for (i, j) in pairs:
        for k in I:
            classes[f"calEq{i}{j}{k}"] = (f"Eq{i}{j}{k} - L{i}{j}{k}_{i} - L{i}{j}{k}_{j}", "")
            classes[f"calEqp{i}{j}{k}"] = (f"Eqp{i}{j}{k} - Lp{i}{j}{k}_{i} - Lp{i}{j}{k}_{j}", "")
    sum_cal_eq = " + ".join(f"calEq{i}{j}{k}" for (i, j) in pairs for k in I)
    sum_cal_eqp = " + ".join(f"calEqp{i}{j}{k}" for (i, j) in pairs for k in I)
    classes["SumCalEq"] = (sum_cal_eq, "")
    classes["SumCalEqp"] = (sum_cal_eqp, "")
    classes["K"] = ("7H - 3*calE - 3*calEp - 2*(SumCalEq + SumCalEqp) - 2*sum(F??, Fp??) - sum(R??)"
                    " - 4*sum(G?, Gp?) - 3*sum(L???_?, Lp???_?)",
                    "strict transform of a general septic, written with strict transforms of the point planes")
    classes["Ktotal"] = ("7H - 3*Ev - 3*Evp - 2*sum(Eq???, Eqp???) - 2*sum(F??, Fp??) - sum(R??)"
                         " - sum(G?, Gp?) - sum(L???_?, Lp???_?)", "the same class in total transforms")
    classes["Tp"] = ("3H - 3*calEp - SumCalEq - 2*SumCalEqp - 2*sum(Fp??) - sum(R??) - 4*sum(Gp?)"
                     " - sum(L???_?) - 3*sum(Lp???_?)", "strict transform of the trihedron T'")
    classes["D"] = ("7H - 2*sum(F??, Fp??) - sum(R??) - 4*sum(G?, Gp?) - 3*sum(L???_?, Lp???_?)",
                    "curve-section divisor on the strict transform")
    trivial = ["calE", "calEp"] + [f"calEq{i}{j}{k}" for (i, j) in pairs for k in I] + \
              [f"calEqp{i}{j}{k}" for (i, j) in pairs for k in I] + ["Tp"]
    checks = [
        {"id": "k-forms-agree", "kind": "triple", "args": ["K - Ktotal", "H", "H"], "expected": 0,
         "anchor": "strict and total forms of the member class coincide"},
        {"id": "k-cube", "kind": "triple", "args": ["K", "K", "K"], "expected": 16,
         "anchor": "deg W = 2p - 2 = 16 for p = 9"},
    ]
    for t in trivial[:-1]:
        checks.append({"id": f"k-{t}-zero", "kind": "zero_restriction", "args": ["K", t], "expected": True,
                       "anchor": f"K . {t} = 0"})
    checks += [
        {"id": "k-Tp-zero", "kind": "zero_restriction", "args": ["K", "Tp"], "expected": True,
         "anchor": "Tp restricts trivially to K"},
        {"id": "curve-section-even", "kind": "divisible", "args": ["D"], "trivial": trivial, "modulus": 2,
         "expected": True, "anchor": "curve section is 2-divisible modulo the trivial classes"},
        {"id": "control-odd", "kind": "divisible", "args": ["D + H"], "trivial": trivial, "modulus": 2,
         "expected": False, "anchor": "odd control class"},
    ]
    header = [
        "Blow-up tower for the septics of P^3 double along the six edges of two trihedra.",
        "Stage 1: the vertices v, v' and the 18 points where an edge of one trihedron meets",
        "a face of the other. Stage 2: the six edges and the nine lines r_ik = f_i n f'_k.",
        "Stage 3: the 42 lines cut on the point planes by the strict transforms of faces.",
        "ASSUMPTION: the trihedra are in general position, so every incidence is transverse",
        "(multiplicity 1) and no further coincidences occur.",
        "Generators are total transforms; entries not listed are 0. Cross-check: K^3 = 16.",
        "Generated by tools/make_blowup_fixtures.py.",
    ]
    emit(ROOT / "fixtures" / "genus9_model", header, "genus9",
         "septics double along the edges of two trihedra", centers, classes, checks)


if __name__ == "__main__":
    (ROOT / "fixtures").mkdir(exist_ok=True)
    genus13()
    genus9()
    sys.exit(0)

"""Smoke checks for the python bindings."""

import sys

import vdec


def check(cond, what):
    if not cond:
        print("FAIL:", what)
        sys.exit(1)


def main():
    p5 = vdec.as_tree(vdec.build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]))
    check(p5.p == 5 and p5.diameter == 4, "P5 statistics")
    check(p5.n1 == 2 and p5.n2 == 3, "P5 degree counts")

    value, regime = vdec.predict_chi_s(p5)
    check(value == 4 and regime == "PathP5", "P5 prediction")

    chi, witness, nodes = vdec.exact_chi_s(p5.graph)
    check(chi == 4 and nodes > 0, "P5 exact value")
    report = vdec.verify(p5.graph, witness)
    check(report["proper"] and report["distinguishing"], "P5 witness verifies")

    coloring = vdec.color_tree(p5)
    check(coloring.palette == 4, "P5 construction palette")
    check(vdec.verify(p5.graph, coloring)["distinguishing"], "P5 construction verifies")

    ds = vdec.color_double_star(2, 2)
    check(ds.palette == 5, "double star closed form")

    q030 = vdec.build_diam_four(0, 3, [])
    qc = vdec.color_diam4(0, 3, [])
    check(qc.palette == 3, "spider closed form")
    check(vdec.verify(q030.graph, qc)["distinguishing"], "spider coloring verifies")
    s33 = vdec.build_double_star(2, 2)
    check(vdec.exact_chi_es(s33.graph)[0] == 5, "S33 equitable value")

    counts = [len(vdec.enumerate_trees(n)) for n in range(1, 8)]
    check(counts == [1, 1, 1, 2, 3, 6, 11], "free tree counts")
    check(vdec.prufer_tree_count(7) == 11, "prufer oracle")

    c3 = vdec.build_graph(3, [(0, 1), (1, 2), (0, 2)])
    report = vdec.bound_report(c3)
    check(report["cor2_bound"] == 3, "C3 spanning bound")
    check(vdec.cor1_bound(c3) is None, "C3 splitting hypothesis fails")

    row = vdec.survey_tree(p5)
    check(row["chi_exact"] == 4 and row["k_lower"] == 3, "survey row")
    check("Conj1Holds" in row["flags"], "survey flags")

    try:
        vdec.color_tree(vdec.build_path(6))
    except vdec.VdecError as e:
        check("HypothesisViolated" in str(e), "P6 error carries its code")
    else:
        check(False, "P6 must be rejected")

    print("python smoke: all checks passed")


if __name__ == "__main__":
    main()

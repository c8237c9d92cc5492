"""Smoke test for the grafcl_py extension module."""

import json

import grafcl_py as g


def main():
    plane = g.Signature(2, 0)
    e12 = g.Form("e12", plane)
    assert g.graf(e12, e12).terms() == [("1", "-1")]
    assert e12.graf(e12) == g.eval_expr("0 - 1", plane)

    e1, e2 = g.Form("e1", plane), g.Form("e2", plane)
    assert g.wedge(e1, e2) == e12
    assert g.wedge(e2, e1) == -e12
    assert (e1 + e2 - e2) == e1

    for p, q in [(1, 0), (2, 1), (0, 4)]:
        s = g.Signature(p, q)
        assert g.hodge(g.Form("one", s)) == g.Form("vol", s)

    assert g.eval_expr("pplus <> pminus", g.Signature(5, 0)).is_zero()

    table = json.loads(g.emit_table(g.Signature(1, 0)))
    assert table["basis"] == ["1", "e1"]
    assert len(table["entries"]) == 4

    report = json.loads(g.run_checks(g.Signature(3, 0), "all", 10))
    assert report["passed"], report

    try:
        g.eval_expr("e12 /\\ e1", plane)
    except ArithmeticError:
        pass
    else:
        raise AssertionError("triangle grade order not rejected")

    try:
        g.Signature(0, 0)
    except ValueError:
        pass
    else:
        raise AssertionError("empty signature accepted")

    print("python smoke test ok")


if __name__ == "__main__":
    main()

"""Smoke test for the ffdensity_py extension.

Build and install first:  cd crates/python && maturin develop --release
"""
import json

import ffdensity_py as ff


def main():
    rep = json.loads(ff.one_level(5, 2, 5, 0.01))
    assert rep["schema_version"] == ff.SCHEMA_VERSION
    assert rep["config"]["mode"] == "one-level"
    assert rep["within_budget"], rep["residual_abs"]
    t0, t1, t2, total = ff.predict_one(5, 2, 5, 0.01)
    assert abs(t0 + t1 + t2 - total) < 1e-12
    assert abs(complex(*rep["prediction"]["total"]) - total) < 1e-12
    print("one-level  residual", rep["residual_abs"], "budget", rep["error_budget"])

    rep = json.loads(ff.two_level(5, 2, 6, 0.013, 0.029))
    assert rep["type_ii_caveat"] is False
    assert rep["within_budget"], rep["residual_abs"]
    print("two-level  residual", rep["residual_abs"], "budget", rep["error_budget"])

    paper = ff.predict_two(5, 2, 6, 0.013, 0.029, tail_variant="paper")
    geom = ff.predict_two(5, 2, 6, 0.013, 0.029)
    assert paper[0] == geom[0] and paper[1] != geom[1]

    rep = json.loads(ff.ratio_average(13, 1, 0.02, 0.03, 0.025, 0.035, precision="compensated"))
    assert rep["within_budget"], rep["residual_abs"]
    print("ratio      residual", rep["residual_abs"], "budget", rep["error_budget"])

    for bad in (lambda: ff.one_level(7, 1, 3, 0.01), lambda: ff.one_level(5, 1, 4, 0.01)):
        try:
            bad()
        except ValueError as e:
            print("rejected:", e)
        else:
            raise AssertionError("expected ValueError")

    print("smoke test passed")


if __name__ == "__main__":
    main()

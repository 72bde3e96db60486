import argparse
import json

import numpy as np
import pytest

from iwasawa.core.exceptions import ImproperlyConfigured
from iwasawa.groups import GroupElementP, SkewHermitian, TriangularS
from iwasawa.orbits import classify_orbit
from iwasawa.quadrature.spec import Estimate
from iwasawa.reports import (
    CSV_COLUMNS,
    decode_element,
    decode_matrix,
    encode_element,
    encode_matrix,
    load_runconfig,
    render_csv,
    render_json,
    validate_runconfig,
)
from iwasawa.reports.runconfig import (
    element_list,
    parse_random,
    resolve_matrices,
    resolve_n,
    resolve_p,
    resolve_principal,
    resolve_s,
)


class CodecTests:
    def test_encode_matrix(self):
        assert encode_matrix(np.array([[1j, 0], [2 + 0.5j, -1]])) == [
            [[0.0, 1.0], [0.0, 0.0]],
            [[2.0, 0.5], [-1.0, 0.0]],
        ]

    def test_decode_matrix(self):
        m = decode_matrix([[[0.0, 1.0]]])
        assert m.shape == (1, 1)
        assert m[0, 0] == 1j

    def test_decode_rejects_bare_numbers(self):
        with pytest.raises(ValueError, match="list of rows of"):
            decode_matrix([[1.0, 2.0]])

    def test_element(self, rng):
        g = GroupElementP(TriangularS.diag(2.0, 0.5), SkewHermitian.zero(2))
        data = encode_element(g)
        assert set(data) == {"s", "n"}
        back = decode_element(json.loads(json.dumps(data)))
        assert np.array_equal(back.s.mat, g.s.mat)
        assert np.array_equal(back.n.mat, g.n.mat)


class RenderTests:
    def test_json_is_sorted_and_stable(self):
        report = {"b": Estimate(1.5, 0.25, 10), "a": TriangularS.diag(2.0)}
        text = render_json(report, timestamp=False)
        assert text == render_json(report, timestamp=False)
        assert text.endswith("\n")
        data = json.loads(text)
        assert list(data) == ["a", "b"]
        assert data["a"] == [[[2.0, 0.0]]]
        assert data["b"]["samples_used"] == 10
        assert "generated_at" not in data

    def test_json_timestamp(self):
        assert "generated_at" in json.loads(render_json({"p": 1}))

    def test_non_finite_floats(self):
        data = json.loads(render_json({"max_residual": float("inf")}, timestamp=False))
        assert data["max_residual"] == "inf"

    def test_numpy_values(self):
        data = json.loads(
            render_json({"x": np.float64(0.5), "v": np.arange(3.0)}, timestamp=False)
        )
        assert data == {"x": 0.5, "v": [0.0, 1.0, 2.0]}

    def test_unknown_type(self):
        with pytest.raises(TypeError, match="not JSON serializable"):
            render_json({"x": object()})

    def test_csv(self):
        text = render_csv(
            [
                {
                    "p": 1,
                    "element_id": "n0",
                    "kind": "n",
                    "q": 0.5,
                    "norm_closed": 1.3862943611198906,
                    "agree": True,
                    "unitary": None,
                    "verdict": "SpecialCocycle",
                }
            ]
        )
        header, row = text.splitlines()
        assert header.split(",") == list(CSV_COLUMNS)
        assert row == "1,n0,n,0.5,1.3862943611198906,,,,true,,,SpecialCocycle"

    def test_csv_without_rows(self):
        assert render_csv([]) == ",".join(CSV_COLUMNS) + "\n"


class RunConfigTests:
    def test_minimal(self):
        assert validate_runconfig({"p": 2}) == {"p": 2}

    @pytest.mark.parametrize(
        "data, where",
        (
            ({}, "<root>"),
            ({"p": 0}, "p"),
            ({"p": 2, "q_grid": []}, "q_grid"),
            (
                {"p": 2, "quadrature": {"sphere_samples": 0}},
                "quadrature/sphere_samples",
            ),
            ({"p": 2, "n_elements": "random:two"}, "n_elements"),
            ({"p": 2, "unknown": 1}, "<root>"),
            ({"p": 2, "output": {"format": "xml"}}, "output/format"),
        ),
    )
    def test_schema_violations(self, data, where):
        with pytest.raises(ImproperlyConfigured, match="  {}: ".format(where)):
            validate_runconfig(data)

    def test_full(self):
        data = {
            "p": 2,
            "seed": 3,
            "quadrature": {"sphere_samples": 128, "radial_epsrel": 1e-8},
            "divergence_grid": {"k_min": 4, "k_max": 12},
            "n_elements": [[[[0, 1], [1, 0]], [[-1, 0], [0, 2]]]],
            "s_elements": "random:2:9",
            "p_elements": [{"s": [[[1, 0]]], "n": [[[0, 1]]]}],
            "q_grid": [1.0, 2.0],
            "output": {"path": "out.json", "format": "json"},
        }
        assert validate_runconfig(data) is data

    def test_load(self, test_dir):
        path = test_dir / "run.json"
        path.write_text('{"p": 1}')
        assert load_runconfig(path) == {"p": 1}
        path.write_text("{p: 1}")
        with pytest.raises(ImproperlyConfigured, match="is not JSON"):
            load_runconfig(path)
        with pytest.raises(ImproperlyConfigured, match="Cannot read"):
            load_runconfig(test_dir / "missing.json")


class ElementListTests:
    def test_parse_random(self):
        assert parse_random("random:4:17") == (4, 17)
        with pytest.raises(ImproperlyConfigured):
            parse_random("random:4")

    def test_random_is_reproducible(self):
        first = resolve_s("random:3:5", 2)
        second = resolve_s("random:3:5", 2)
        assert len(first) == 3
        assert all(np.array_equal(a.mat, b.mat) for a, b in zip(first, second))

    def test_explicit(self):
        (n,) = resolve_n([[[[0, 2]]]], 1)
        assert n.mat[0, 0] == 2j
        (s,) = resolve_s([[[1.5, 0]]], 1)
        assert s.mat[0, 0] == 1.5
        (g,) = resolve_p([{"s": [[[1, 0]]], "n": [[[0, 1]]]}], 1)
        assert g.dim == 1

    def test_invalid_elements(self):
        with pytest.raises(ImproperlyConfigured, match="n_elements"):
            resolve_n([[[[1, 0]]]], 1)
        with pytest.raises(ImproperlyConfigured, match="s_elements"):
            resolve_s([[[-1, 0]]], 1)

    def test_dimension_mismatch(self):
        with pytest.raises(ImproperlyConfigured, match="must be 2x2"):
            resolve_n([[[[0, 2]]]], 2)

    def test_random_matrices(self):
        for m in resolve_principal("random:5:1", 3):
            assert classify_orbit(m).is_principal
        assert len(resolve_matrices("random:5:1", 3)) == 5

    def test_argparse_type(self):
        assert element_list("random:2:0") == "random:2:0"
        assert element_list("[[[[0, 1]]]]") == [[[[0, 1]]]]
        with pytest.raises(argparse.ArgumentTypeError):
            element_list("random")

"""Tests for hsx.serde — the hypergraph JSON format and report codecs."""

import json

import numpy as np
import pytest

from hsx import serde
from hsx.complex import induce_complex
from hsx.constructions import cycle_link_hypergraph, verify_sunflower_claims
from hsx.errors import HypergraphError
from hsx.partition import hypergraph_sparse_cut
from hsx.spectra import eigenvalues, hdx_gamma
from hsx.splitting import splittability
from hsx.walks import two_step_graph, up_operator


class TestParseHypergraph:
    def test_minimal(self):
        h = serde.parse_hypergraph('{"k": 3, "vertices": 5, "edges": [[0,1,2],[0,3,4]]}')
        assert h.edges == ((0, 1, 2), (0, 3, 4))
        assert h.weights == (0.5, 0.5)

    def test_bytes_and_weights(self):
        raw = b'{"k": 3, "vertices": 5, "edges": [[0,1,2],[0,3,4]], "weights": [0.25, 0.75]}'
        assert serde.parse_hypergraph(raw).weights == (0.25, 0.75)

    def test_malformed_json(self):
        with pytest.raises(HypergraphError, match="Malformed"):
            serde.parse_hypergraph("{not json")

    @pytest.mark.parametrize("missing", ["k", "vertices", "edges"])
    def test_missing_field(self, missing):
        data = {"k": 3, "vertices": 5, "edges": [[0, 1, 2], [0, 3, 4]]}
        del data[missing]
        with pytest.raises(HypergraphError) as info:
            serde.parse_hypergraph(json.dumps(data))
        assert info.value.context["field"] == missing

    def test_not_an_object(self):
        with pytest.raises(HypergraphError, match="must be an object"):
            serde.parse_hypergraph("[1, 2]")

    def test_rule_violation_is_reported(self):
        with pytest.raises(HypergraphError, match="Edge 0 has 2 vertices"):
            serde.parse_hypergraph('{"k": 3, "vertices": 3, "edges": [[0, 1]]}')

    def test_weight_sum(self):
        raw = '{"k": 3, "vertices": 5, "edges": [[0,1,2],[0,3,4]], "weights": [0.6, 0.6]}'
        with pytest.raises(HypergraphError, match="Weights sum to 1.2"):
            serde.parse_hypergraph(raw)

    def test_weight_tolerance(self):
        raw = '{"k": 3, "vertices": 5, "edges": [[0,1,2],[0,3,4]], "weights": [0.5, 0.500000001]}'
        with pytest.raises(HypergraphError, match="Weights sum"):
            serde.parse_hypergraph(raw)
        h = serde.parse_hypergraph(raw, weight_tol=1e-6)
        assert h.weights == (0.5, 0.500000001)


class TestDumpHypergraph:
    def test_reads_back_identically(self, random_hypergraphs):
        for h in random_hypergraphs:
            assert serde.parse_hypergraph(serde.dump_hypergraph(h)) == h

    def test_one_edge_per_line(self):
        text = serde.dump_hypergraph(cycle_link_hypergraph(9, 3))
        assert text.count("\n    [") == 93
        assert text.endswith("}\n")


class TestReports:
    def test_dumps_handles_numpy(self):
        text = serde.dumps({"a": np.arange(3), "b": np.float64(0.5), "c": (1, 2)})
        assert json.loads(text) == {"a": [0, 1, 2], "b": 0.5, "c": [1, 2]}

    def test_non_finite_becomes_null(self):
        assert json.loads(serde.dumps({"x": float("inf")})) == {"x": None}

    def test_operator_export(self, two_petals_complex):
        data = json.loads(serde.dumps(serde.operator_to_dict(up_operator(two_petals_complex, 1))))
        assert data["name"] == "U_1"
        assert data["rows"][0] == [0, 1]
        assert data["data"][0][:2] == [0.5, 0.5]

    def test_graph_and_spectrum(self, two_petals_complex):
        g = two_step_graph(two_petals_complex, 1, 2)
        graph = json.loads(serde.dumps(serde.graph_to_dict(g)))
        assert graph["sides"] is None
        spectrum = serde.spectral_report_to_dict(eigenvalues(g))
        assert spectrum["kind"] == "eigen"

    def test_certificate(self, two_petals):
        data = json.loads(
            serde.dumps(serde.certificate_to_dict(hypergraph_sparse_cut(two_petals, oracle_cap=24)))
        )
        assert set(data["bounds"]) == {"epsilon_over_k", "updown_lower", "four_sqrt_epsilon"}
        assert data["oracle"]["subset"] == [1, 2]
        assert all(check["passed"] for check in data["checks"])

    def test_verdict(self, two_petals_complex):
        data = serde.verdict_to_dict(splittability(two_petals_complex, 0.5, 2))
        assert data["splittable"] is False
        assert data["witness"]["label"] == 3
        assert data["blocking"]["pair"] == (1, 2)

    def test_link_report(self, complete_four):
        data = serde.link_report_to_dict(hdx_gamma(induce_complex(complete_four)))
        assert len(data["links"]) == 5
        assert data["links"][0]["face"] == ()

    def test_claim_report(self):
        data = json.loads(serde.dumps(serde.claim_report_to_dict(verify_sunflower_claims(2, 3))))
        assert data["construction"] == "sunflower"
        assert data["passed"] is True
        assert {claim["relation"] for claim in data["claims"]} <= {"==", ">=", "<="}


class TestFloatText:
    def test_seventeen_significant_digits(self):
        text = serde.dumps({"x": 0.1})
        assert "0.10000000000000001" in text
        assert serde.format_float(1 / 3) == "0.33333333333333331"

    def test_whole_numbers_stay_floats(self):
        assert serde.format_float(1.0) == "1.0"
        assert serde.format_float(-2.0) == "-2.0"
        assert serde.format_float(1e20) == "1e+20"
        assert isinstance(json.loads(serde.dumps({"x": 1.0}))["x"], float)

    def test_reads_back_bit_for_bit(self, rng):
        values = np.concatenate(
            [rng.uniform(-1.0, 1.0, 200), 10.0 ** rng.uniform(-300, 300, 50)]
        ).tolist()
        assert json.loads(serde.dumps({"values": values}))["values"] == values

    def test_layout(self):
        text = serde.dumps({"a": [1, 2.5], "b": {}, "c": []})
        assert text == '{\n  "a": [\n    1,\n    2.5\n  ],\n  "b": {},\n  "c": []\n}\n'

    def test_hypergraph_weights(self):
        from hsx.types import Hypergraph

        h = Hypergraph.from_edges(3, 4, [[0, 1, 2], [1, 2, 3]], [0.1, 0.9])
        text = serde.dump_hypergraph(h)
        assert "0.10000000000000001" in text
        assert serde.parse_hypergraph(text) == h

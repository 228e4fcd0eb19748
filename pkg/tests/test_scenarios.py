import json
import os

import numpy as np
import pytest

from plie.errors import InvariantFailure, LogDomainError, ParseError
from plie.liecore import matrix_exp, matrix_log
from plie.scenarios import (SHIPPED, derealify, load_scenario, realify,
                            _factor_gu_sl2, _factor_ug_sl2, _mem_sb2,
                            _mem_sl2c, _mem_su2)


def test_realify_roundtrip_and_homomorphism(rng):
    for _ in range(5):
        a = rng.uniform(-1, 1, (2, 2)) + 1j * rng.uniform(-1, 1, (2, 2))
        b = rng.uniform(-1, 1, (2, 2)) + 1j * rng.uniform(-1, 1, (2, 2))
        assert np.max(np.abs(derealify(realify(a)) - a)) < 1e-15
        assert np.max(np.abs(realify(a) @ realify(b) - realify(a @ b))) < 1e-13


def test_iwasawa_factorizers_produce_members(su2, rng):
    for _ in range(5):
        d = su2.sample_D(rng)
        g, u = _factor_gu_sl2(d)
        assert _mem_su2(g) < 1e-12
        assert _mem_sb2(u) < 1e-12
        assert np.max(np.abs(g @ u - d)) < 1e-12
        u1, g1 = _factor_ug_sl2(d)
        assert _mem_sb2(u1) < 1e-12
        assert _mem_su2(g1) < 1e-12
        assert np.max(np.abs(u1 @ g1 - d)) < 1e-12


def test_memberships_reject_non_members():
    assert _mem_su2(2.0 * np.eye(4)) > 0.5
    assert _mem_sl2c(np.eye(4) * 1.5) > 0.1
    lower = realify(np.array([[1.0, 0.0], [0.7, 1.0]]))
    assert _mem_sb2(lower) > 0.5


def test_exp_log_hooks_match_generic_series(su2, rng):
    G = su2.dgm.G
    for _ in range(5):
        x = rng.uniform(-0.6, 0.6, 3)
        m = G.embed_algebra(x)
        assert np.max(np.abs(G.exp(x) - matrix_exp(m))) < 1e-12
        g = G.exp(x)
        assert np.max(np.abs(G.embed_algebra(G.log(g)) - matrix_log(g))) < 1e-11


def test_log_hook_rejects_antipode(su2):
    antipode = realify(-np.eye(2))
    with pytest.raises(LogDomainError):
        su2.dgm.G.log(antipode)


def test_loader_rejects_missing_file():
    with pytest.raises(ParseError):
        load_scenario("/nonexistent/path.json")


def test_loader_rejects_invalid_json(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        load_scenario(str(p))


def test_loader_rejects_missing_block(tmp_path):
    with open(SHIPPED["su2-torus"], "r", encoding="utf-8") as fh:
        data = json.load(fh)
    del data["bialgebra"]
    p = tmp_path / "incomplete.json"
    p.write_text(json.dumps(data))
    with pytest.raises(ParseError):
        load_scenario(str(p))


def test_loader_rejects_corrupted_structure_table(tmp_path):
    with open(SHIPPED["su2-torus"], "r", encoding="utf-8") as fh:
        data = json.load(fh)
    data["bialgebra"]["c"][0][1][2] = 2.0  # breaks antisymmetry
    p = tmp_path / "corrupt.json"
    p.write_text(json.dumps(data))
    with pytest.raises(InvariantFailure):
        load_scenario(str(p))


def test_loader_rejects_wrong_embedding(tmp_path):
    with open(SHIPPED["semidirect-zero"], "r", encoding="utf-8") as fh:
        data = json.load(fh)
    data["embeddings"]["G"][0][0][1] = 5.0
    p = tmp_path / "badembed.json"
    p.write_text(json.dumps(data))
    with pytest.raises(InvariantFailure):
        load_scenario(str(p))


def test_shipped_files_exist_and_load():
    for name, path in SHIPPED.items():
        assert os.path.exists(path)
        s = load_scenario(name)
        assert s.name == name
        assert s.n == 3
        assert s.dgm.D.dim == 6


def test_base_points_are_consistent(scenarios):
    for s in scenarios.values():
        # v must be the dual projection of the base dressing point w
        iv = np.asarray(s.sub.i_star(s.base["w"]), dtype=float)
        assert np.max(np.abs(iv - s.base["v"])) < 1e-12

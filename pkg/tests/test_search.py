import io
import json

import pytest

from orbitforge.errors import SchemaError
from orbitforge.search import SearchConfig, iter_search, run_search
from orbitforge.specfile import instance_from_spec
from orbitforge import action as A

ODD_ODD_TEMPLATES = [
    {"kind": "semilinear", "field": {"p": 3, "k": 1, "n": 4}},
    {"kind": "semilinear", "field": {"p": 5, "k": 1, "n": 2}},
    {"kind": "matrix", "field": {"p": 7}, "dim": 2},
    {"kind": "wreath", "field": {"p": 11}, "m": 3},
    {"kind": "wreath", "field": {"p": 7}, "m": 3},
]


def odd_odd_config(samples, seed):
    return SearchConfig.from_dict({
        "samples": samples, "seed": seed,
        "odd_order": True, "odd_characteristic": True,
        "templates": ODD_ODD_TEMPLATES,
    })


def test_config_validation():
    with pytest.raises(SchemaError):
        SearchConfig.from_dict({"samples": 1, "seed": 0, "templates": []})
    with pytest.raises(SchemaError):
        SearchConfig.from_dict({"samples": 1, "seed": 0,
                                "templates": [{"kind": "weird", "field": {"p": 3}}]})
    with pytest.raises(SchemaError):
        SearchConfig.from_dict({"samples": 1, "seed": 0, "odd_characteristic": True,
                                "templates": [{"kind": "semilinear", "field": {"p": 2, "n": 2}}]})
    with pytest.raises(SchemaError):
        SearchConfig.from_dict({"samples": 1, "seed": 0, "gen_count": [0, 2],
                                "templates": [{"kind": "semilinear", "field": {"p": 3, "n": 2}}]})


def test_config_rejects_nonprime_field():
    with pytest.raises(SchemaError):
        SearchConfig.from_dict({"samples": 1, "seed": 0,
                                "templates": [{"kind": "semilinear", "field": {"p": 6, "n": 2}}]})


def test_records_respect_filters():
    cfg = odd_odd_config(40, seed=13)
    records = list(iter_search(cfg, log=io.StringIO()))
    assert len(records) == 40
    for rec in records:
        assert rec["odd_order"] and rec["odd_characteristic"]
        assert rec["faithful"] and rec["irreducible"]
        assert rec["group_order"] % 2 == 1


def test_stream_determinism():
    cfg = odd_odd_config(25, seed=77)
    lines1 = [json.dumps(r) for r in iter_search(cfg, log=io.StringIO())]
    lines2 = [json.dumps(r) for r in iter_search(cfg, log=io.StringIO())]
    assert lines1 == lines2


def test_worker_pool_does_not_change_output():
    cfg = odd_odd_config(15, seed=3)
    one = [json.dumps(r) for r in iter_search(cfg, workers=1, log=io.StringIO())]
    many = [json.dumps(r) for r in iter_search(cfg, workers=8, log=io.StringIO())]
    assert one == many


def test_char2_includes_example1_counterexample():
    cfg = SearchConfig.from_dict({
        "samples": 6, "seed": 5, "odd_characteristic": False, "include_examples": True,
        "templates": [
            {"kind": "wreath", "field": {"p": 2, "k": 1, "n": 2}, "m": 5},
            {"kind": "semilinear", "field": {"p": 2, "k": 1, "n": 4}},
        ],
    })
    records = list(iter_search(cfg, log=io.StringIO()))
    assert records[0]["source"] == "example1"
    assert records[0]["is_counterexample"]
    assert all(not r["odd_characteristic"] for r in records)


def test_even_order_includes_example2_counterexample():
    cfg = SearchConfig.from_dict({
        "samples": 4, "seed": 5, "odd_order": False, "odd_characteristic": True,
        "include_examples": True,
        "templates": [{"kind": "matrix", "field": {"p": 7}, "dim": 2}],
    })
    records = list(iter_search(cfg, log=io.StringIO()))
    assert records[0]["source"] == "example2"
    assert records[0]["is_counterexample"]
    assert all(r["group_order"] % 2 == 0 for r in records)


def test_cross_process_hash_seed_independence(tmp_path):
    # outputs must not depend on interpreter hash randomization
    import os
    import subprocess
    import sys
    script = tmp_path / "emit.py"
    script.write_text(
        "import io, json, sys\n"
        "from orbitforge.search import SearchConfig, iter_search\n"
        "from orbitforge.action import enumerate_orbits\n"
        "from orbitforge.constructions import build_example1\n"
        "cfg = SearchConfig.from_dict({'samples': 8, 'seed': 3,\n"
        "    'odd_order': True, 'odd_characteristic': True,\n"
        "    'templates': [{'kind': 'wreath', 'field': {'p': 11}, 'm': 3},\n"
        "                  {'kind': 'semilinear', 'field': {'p': 5, 'k': 1, 'n': 2}}]})\n"
        "for rec in iter_search(cfg, log=io.StringIO()):\n"
        "    print(json.dumps(rec, separators=(',', ':')))\n"
        "print(json.dumps(enumerate_orbits(build_example1()).to_json_dict()))\n"
    )
    src = os.path.join(os.path.dirname(__file__), "..", "src")
    outputs = []
    for seed in ("0", "4242"):
        env = dict(os.environ, PYTHONPATH=src, PYTHONHASHSEED=seed)
        proc = subprocess.run([sys.executable, str(script)],
                              capture_output=True, text=True, env=env)
        assert proc.returncode == 0, proc.stderr
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]


def test_counterexample_replay(tmp_path):
    cfg = SearchConfig.from_dict({
        "samples": 3, "seed": 5, "odd_characteristic": False, "include_examples": True,
        "templates": [{"kind": "wreath", "field": {"p": 2, "k": 1, "n": 2}, "m": 5}],
    })
    out = tmp_path / "hits.jsonl"
    stream = io.StringIO()
    summary = run_search(cfg, out_path=str(out), stream=stream, log=io.StringIO())
    assert summary["counterexamples"] >= 1
    persisted = [json.loads(line) for line in out.read_text().splitlines()]
    assert persisted
    for wrapped in persisted:
        assert wrapped["run"]["seed"] == 5
        rec = wrapped["record"]
        inst = instance_from_spec(rec["spec"])
        replay = A.enumerate_orbits(inst)
        assert list(replay.orbit_lengths) == rec["orbit_lengths"]
        assert replay.group_order == rec["group_order"]
        assert replay.regular_exists == rec["regular"]

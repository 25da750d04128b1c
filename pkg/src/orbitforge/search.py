"""Seeded randomized search for actions where p-regularity for every prime
fails to force a regular orbit.

A search draws generating sets from configured ambient groups (semilinear,
matrix, or wreath templates), filters them by the configured parity of the
group order and field characteristic, keeps only faithful irreducible
instances, and reports one JSON record per kept instance.  Everything is
driven by one seeded generator, so a config reproduces its exact record
stream; counterexample records carry their full group spec for replay.
"""

import json
import random
import sys
from dataclasses import dataclass

from . import config as caps
from .action import (
    ActionInstance,
    MatrixAction,
    SemilinearAction,
    is_faithful,
    is_irreducible,
    mat_det,
    orbit_implication_report,
)
from .constructions import WreathSpec, build_example1, build_example2, build_wreath
from .errors import CapExceeded, IntransitiveTop, SchemaError
from .field import make_field
from .semilinear import IDENTITY, compose
from .specfile import instance_to_spec

VERSION = "0.1.0"


@dataclass(frozen=True)
class SearchConfig:
    templates: tuple[dict, ...]
    samples: int
    seed: int
    gen_count: tuple[int, int] = (1, 3)
    odd_order: bool | None = None
    odd_characteristic: bool | None = None
    include_examples: bool = False
    max_attempts: int = 400

    @classmethod
    def from_dict(cls, doc) -> "SearchConfig":
        if not isinstance(doc, dict):
            raise SchemaError("search config must be a JSON object")
        try:
            samples = int(doc["samples"])
            seed = int(doc["seed"])
            raw_templates = doc["templates"]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"search config needs samples, seed, templates: {exc}") from exc
        if samples < 0:
            raise SchemaError("samples must be nonnegative")
        if not isinstance(raw_templates, list) or not raw_templates:
            raise SchemaError("templates must be a nonempty list")
        templates = tuple(_validated_template(t) for t in raw_templates)
        gen_count = tuple(doc.get("gen_count", (1, 3)))
        if len(gen_count) != 2 or not 1 <= gen_count[0] <= gen_count[1]:
            raise SchemaError(f"gen_count must be [lo, hi] with 1 <= lo <= hi, got {gen_count}")
        odd_char = doc.get("odd_characteristic")
        if odd_char is not None:
            # drop templates a characteristic filter could never accept
            templates = tuple(t for t in templates
                              if (t["field"]["p"] % 2 == 1) == bool(odd_char))
            if not templates:
                raise SchemaError("no template matches the characteristic filter")
        return cls(
            templates=templates,
            samples=samples,
            seed=seed,
            gen_count=(int(gen_count[0]), int(gen_count[1])),
            odd_order=doc.get("odd_order"),
            odd_characteristic=odd_char,
            include_examples=bool(doc.get("include_examples", False)),
            max_attempts=int(doc.get("max_attempts", 400)),
        )

    def to_dict(self) -> dict:
        return {
            "templates": [dict(t) for t in self.templates],
            "samples": self.samples,
            "seed": self.seed,
            "gen_count": list(self.gen_count),
            "odd_order": self.odd_order,
            "odd_characteristic": self.odd_characteristic,
            "include_examples": self.include_examples,
            "max_attempts": self.max_attempts,
        }


def _validated_template(t) -> dict:
    if not isinstance(t, dict) or t.get("kind") not in ("semilinear", "matrix", "wreath"):
        raise SchemaError(f"template kind must be semilinear/matrix/wreath: {t}")
    fld = t.get("field")
    if not isinstance(fld, dict) or "p" not in fld:
        raise SchemaError(f"template needs a field object: {t}")
    out = {"kind": t["kind"],
           "field": {"p": int(fld["p"]), "k": int(fld.get("k", 1)), "n": int(fld.get("n", 1))}}
    try:
        make_field(out["field"]["p"], out["field"]["k"], out["field"]["n"])
    except Exception as exc:
        raise SchemaError(f"template field {out['field']} is invalid: {exc}") from exc
    if t["kind"] == "matrix":
        out["dim"] = int(t.get("dim", 2))
        if out["dim"] < 1:
            raise SchemaError(f"template dim must be positive: {t}")
    if t["kind"] == "wreath":
        out["m"] = int(t.get("m", 2))
        if out["m"] < 1:
            raise SchemaError(f"template m must be positive: {t}")
    return out


def _odd_part_power(mul, identity, g):
    """g raised to the 2-part of its order, leaving the odd part."""
    order = 1
    acc = g
    while acc != identity:
        acc = mul(acc, g)
        order += 1
    while order % 2 == 0:
        g = mul(g, g)
        order //= 2
    return g


def _draw_instance(rng, template, gen_count, force_odd: bool) -> ActionInstance:
    kind = template["kind"]
    fld = template["field"]
    count = rng.randint(*gen_count)
    if kind == "semilinear":
        ctx = make_field(fld["p"], fld["k"], fld["n"])
        backend = SemilinearAction(ctx)
        gens = [(rng.randrange(ctx.n), rng.randrange(max(ctx.order, 1)))
                for _ in range(count)]
        if force_odd:
            gens = [_odd_part_power(backend.mul, backend.identity, g) for g in gens]
        return ActionInstance(backend, gens)
    if kind == "matrix":
        p, dim = fld["p"], template["dim"]
        backend = MatrixAction(p, dim)
        gens = []
        for _ in range(count):
            while True:
                mat = tuple(rng.randrange(p) for _ in range(dim * dim))
                if mat_det(mat, dim, p) != 0:
                    break
            gens.append(mat)
        if force_odd:
            gens = [_odd_part_power(backend.mul, backend.identity, g) for g in gens]
        return ActionInstance(backend, gens)
    ctx = make_field(fld["p"], fld["k"], fld["n"])
    m = template["m"]
    inner = []
    for _ in range(count):
        g = (rng.randrange(ctx.n), rng.randrange(max(ctx.order, 1)))
        if force_odd:
            g = _odd_part_power(lambda a, b: compose(ctx, a, b), IDENTITY, g)
        inner.append(g)
    tops = []
    for _ in range(max(1, count - 1)):
        perm = tuple(rng.sample(range(m), m))
        if force_odd:
            perm = _odd_part_power(_perm_mul, tuple(range(m)), perm)
        tops.append(perm)
    return build_wreath(WreathSpec(ctx, tuple(inner), m, tuple(tops)))


def _perm_mul(a, b):
    return tuple(a[b[x]] for x in range(len(a)))


def _passes_filters(cfg: SearchConfig, instance: ActionInstance) -> bool:
    if cfg.odd_order is not None:
        if (instance.group_order % 2 == 1) != bool(cfg.odd_order):
            return False
    if cfg.odd_characteristic is not None:
        if (instance.backend.characteristic % 2 == 1) != bool(cfg.odd_characteristic):
            return False
    if not is_faithful(instance).faithful:
        return False
    return is_irreducible(instance)


def iter_search(cfg: SearchConfig, workers: int = 1, log=None):
    """Yield one record dict per kept instance, deterministically.

    Known example constructions come first when include_examples is set
    (only those matching the parity filters); then seeded random samples
    until cfg.samples records are produced or the attempt budget runs out.
    Cap violations are logged and skipped, never fatal.
    """
    log = log if log is not None else sys.stderr
    pending = []
    if cfg.include_examples:
        for name, builder in (("example1", build_example1), ("example2", build_example2)):
            instance = builder()
            if _passes_filters(cfg, instance):
                pending.append((name, instance))
    rng = random.Random(cfg.seed)
    accepted = 0
    budget = cfg.samples * cfg.max_attempts
    while accepted < cfg.samples and budget > 0:
        template = rng.choice(cfg.templates)
        budget -= 1
        try:
            instance = _draw_instance(rng, template, cfg.gen_count,
                                      force_odd=cfg.odd_order is True)
            if not _passes_filters(cfg, instance):
                continue
        except (CapExceeded, IntransitiveTop) as exc:
            print(f"search: skipped a sample ({exc})", file=log)
            continue
        pending.append((f"sample-{accepted}", instance))
        accepted += 1
    if accepted < cfg.samples:
        print(f"search: attempt budget exhausted after {accepted} accepted samples", file=log)

    if workers > 1 and len(pending) > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda pair: orbit_implication_report(pair[1]), pending))
    else:
        reports = [orbit_implication_report(inst) for _, inst in pending]
    for index, ((source, instance), report) in enumerate(zip(pending, reports)):
        record = {"index": index, "source": source,
                  "spec": instance_to_spec(instance)}
        record.update(report.to_json_dict())
        yield record


def run_search(cfg: SearchConfig, out_path: str | None = None, stream=None,
               workers: int = 1, log=None) -> dict:
    """Stream records as JSON lines; persist counterexamples for replay.

    Returns a summary dict.  Counterexample records are appended to
    out_path as JSON lines wrapped with the run metadata needed to replay
    them (seed, caps, version).
    """
    stream = stream if stream is not None else sys.stdout
    meta = {"seed": cfg.seed, "samples": cfg.samples,
            "element_cap": caps.element_cap(), "point_cap": caps.point_cap(),
            "version": VERSION}
    total = 0
    hits = 0
    sink = open(out_path, "a") if out_path else None
    try:
        for record in iter_search(cfg, workers=workers, log=log):
            total += 1
            print(json.dumps(record, separators=(",", ":")), file=stream)
            if record["is_counterexample"]:
                hits += 1
                if sink is not None:
                    wrapped = {"run": meta, "record": record}
                    print(json.dumps(wrapped, separators=(",", ":")), file=sink)
    finally:
        if sink is not None:
            sink.close()
    return {"records": total, "counterexamples": hits}


__all__ = ["SearchConfig", "iter_search", "run_search", "VERSION"]

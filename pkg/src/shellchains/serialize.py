"""JSON encodings for points, simplices, chains, walks and rewrite traces."""
from __future__ import annotations

import hashlib
import json
from typing import Iterable

from .chains import Chain
from .circle import ModelParams, fmt_point, parse_point
from .simplex import FunctorSimplex, make_simplex


def simplex_to_json(f: FunctorSimplex) -> dict:
    out = {
        "support": list(f.support),
        "levels": {",".join(map(str, k)): [fmt_point(p) for p in pts] for k, pts in f.levels},
    }
    if f.base:
        out["base"] = list(f.base)
    return out


def simplex_from_json(data: dict, params: ModelParams) -> FunctorSimplex:
    levels = {
        tuple(int(v) for v in key.split(",")): tuple(parse_point(p) for p in pts)
        for key, pts in data["levels"].items()
    }
    return make_simplex(data["support"], levels, params, data.get("base", ()))


def chain_to_json(c: Chain, params: ModelParams = None) -> dict:
    out = {"terms": [{"coeff": k, "simplex": simplex_to_json(f)} for f, k in c.sorted_items()]}
    if params is not None:
        out["n"] = params.n
    return out


def chain_from_json(data: dict, params: ModelParams = None) -> Chain:
    if params is None:
        params = ModelParams(int(data["n"]))
    return Chain((simplex_from_json(t["simplex"], params), int(t["coeff"])) for t in data["terms"])


def dumps_chain(c: Chain, params: ModelParams = None) -> str:
    return json.dumps(chain_to_json(c, params), sort_keys=True)


def chain_digest(c: Chain) -> str:
    """SHA-256 of the canonical JSON encoding."""
    text = json.dumps(chain_to_json(c), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def walk_sequence_json(seq: Iterable[int]) -> str:
    return json.dumps([int(k) for k in seq])


class RewriteTrace:
    """Collects one record per applied rewrite; written out as JSON lines."""

    def __init__(self):
        self.records: list = []

    def record(self, operation: str, site: dict, before: Chain, after: Chain):
        self.records.append(
            {
                "operation": operation,
                "site": site,
                "before": chain_digest(before),
                "after": chain_digest(after),
            }
        )

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records)

    def __len__(self):
        return len(self.records)

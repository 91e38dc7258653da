"""Invariant records, expectation evaluation, and the corpus runner.

Reports serialize with sorted keys and fixed integer formatting, so two runs
on the same inputs produce byte-identical JSON apart from the wall-time
field; parallel corpus evaluation assembles results in path order, which
keeps the `--jobs` setting out of the bytes.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .dsl import SourceFile, build_module, build_ring, parse
from .errors import MalformedInputError
from .harness import (
    FAIL,
    PASS,
    SKIPPED,
    TheoremCheck,
    verify_ab,
    verify_change_of_rings_mod,
    verify_change_of_rings_nzd,
    verify_depth_ses,
    verify_direct_limit_truncations,
    verify_fpinfty_ses,
    verify_gmodx_property,
    verify_gor_fpid,
    verify_gorenstein_quotient,
    verify_horseshoe,
    verify_irreducible,
    verify_rx_ses,
)
from .invariants import (
    INFINITE,
    UNDETERMINED,
    default_bound,
    depth,
    depth_of_ring,
    fp_injective_dim_at_most,
    gclass_membership,
    gdim,
    is_cohen_macaulay,
    is_gorenstein,
    projective_dimension,
    socle_dimension,
    zero_ideal_irreducible,
)
from .modules import ModulePresentation, ses_from_cover
from .resolution import ext_to_ring, free_resolution, resolution
from .ring import RingPresentation


def analyze_module(module: ModulePresentation, bound: int | None = None) -> dict:
    """Full invariant record for one module."""
    ring = module.ring
    if bound is None:
        bound = default_bound(ring)
    record: dict = {"bound": bound}
    if module.is_zero():
        record.update(
            {
                "zero": True,
                "depth": None,
                "pd": {"value": 0, "certificate": "zero module"},
                "gdim": gdim(module, bound).as_dict(),
                "gclass": gclass_membership(module, bound).as_dict(),
                "betti": [],
                "resolution_status": "FINITE",
                "ext_hilbert": {},
                "fp_infinity": True,
                "dual_fp_infinity": True,
            }
        )
        return record
    pd_value, pd_cert = projective_dimension(module, min(bound, len(ring.weights) + 4) or 1)
    res = resolution(module)
    betti = [list(res.gen_degs(i)) for i in range(res.computed_length() + 1)]
    ext_samples = {}
    for i in range(0, min(2, bound) + 1):
        e = ext_to_ring(module, i)
        lo = min(e.gen_degs) if e.gen_degs else 0
        ext_samples[str(i)] = {
            "rank": e.rank,
            "gen_degs": list(e.gen_degs),
            "hilbert": {str(d): e.hilbert(d) for d in range(lo, lo + 4)},
        }
    record.update(
        {
            "zero": False,
            "depth": depth(module),
            "pd": {"value": pd_value, "certificate": pd_cert},
            "gdim": gdim(module, bound).as_dict(),
            "gclass": gclass_membership(module, bound).as_dict(),
            "betti": betti,
            "resolution_status": "FINITE" if res.finite_length is not None else "TRUNCATED",
            "ext_hilbert": ext_samples,
            "fp_infinity": True,
            "dual_fp_infinity": True,
        }
    )
    return record


def analyze_ring(ring: RingPresentation, bound: int | None = None) -> dict:
    if bound is None:
        bound = default_bound(ring)
    artinian = ring.is_artinian()
    d = depth_of_ring(ring)
    record = {
        "presentation": repr(ring),
        "field": ring.describe_field(),
        "variables": list(ring.ambient.names),
        "order": ring.ambient.order.kind,
        "depth": d,
        "dim": ring.krull_dim(),
        "cohen_macaulay": is_cohen_macaulay(ring),
        "gorenstein": is_gorenstein(ring, bound).as_dict(),
        "socle_dimension": socle_dimension(ring) if artinian else None,
        "irreducible_zero_ideal": zero_ideal_irreducible(ring).as_dict() if artinian else None,
        "fp_injective": {
            "window": d,
            **fp_injective_dim_at_most(ring, d).as_dict(),
        },
        "bound": bound,
    }
    return record


_BOOL_KEYS = {"cm", "gorenstein", "irreducible", "gclass"}


def _normalize_actual(value) -> str:
    if value is None:
        return "undetermined"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return str(value).lower()


def _actual_for(expect, ring_record, ring_name, module_records):
    t, key = expect.target, expect.key
    if t == ring_name:
        if key == "depth":
            return ring_record["depth"]
        if key == "dim":
            return ring_record["dim"]
        if key == "cm":
            return ring_record["cohen_macaulay"]
        if key == "gorenstein":
            return ring_record["gorenstein"]["status"]
        if key == "socle":
            return ring_record["socle_dimension"]
        if key == "irreducible":
            rec = ring_record["irreducible_zero_ideal"]
            return rec["status"] if rec else None
    else:
        rec = module_records[t]
        if key == "depth":
            return rec["depth"]
        if key == "pd":
            return rec["pd"]["value"]
        if key == "gdim":
            return rec["gdim"]["value"]
        if key == "gclass":
            return rec["gclass"]["status"]
    raise MalformedInputError(f"no actual value for expectation {t}.{key}")


def run_source(source: SourceFile, bound: int | None = None, field_override=None) -> dict:
    """Evaluate one parsed file: invariants, expectations, theorem checks."""
    ring = build_ring(source.ring, field_override)
    if bound is None:
        bound = default_bound(ring)
    modules = {decl.name: build_module(ring, decl) for decl in source.modules}
    ring_record = analyze_ring(ring, bound)
    module_records = {name: analyze_module(mod, bound) for name, mod in modules.items()}

    expectations = []
    for e in source.expects:
        actual = _actual_for(e, ring_record, source.ring.name, module_records)
        ok = _normalize_actual(actual) == e.value
        expectations.append(
            {
                "target": e.target,
                "key": e.key,
                "expected": e.value,
                "actual": _normalize_actual(actual),
                "tag": e.tag,
                "ok": ok,
            }
        )

    checks: list[TheoremCheck] = []
    for c in source.checks:
        if c.kind == "ab":
            checks.append(verify_ab(modules[c.module], bound, label=c.module))
        elif c.kind == "cover_ses":
            mod = modules[c.module]
            if mod.is_zero():
                checks.append(
                    TheoremCheck("HORSESHOE", c.module, SKIPPED, "zero module")
                )
            else:
                K, F, M, _i, _p = ses_from_cover(mod)
                label = f"cover ses of {c.module}"
                checks.append(verify_horseshoe(K, F, M, bound, label, middle_in_gclass=True))
                checks.append(verify_depth_ses(K, F, M, label))
                checks.append(verify_fpinfty_ses(K, F, M, label))
        elif c.kind == "gmodx":
            checks.append(
                verify_gmodx_property(modules[c.module], c.poly, bound, label=f"{c.module} mod ({c.poly})")
            )
        elif c.kind == "chg1":
            checks.append(
                verify_change_of_rings_mod(modules[c.module], c.poly, bound, label=f"{c.module} mod ({c.poly})")
            )
        elif c.kind == "chg3":
            checks.append(
                verify_change_of_rings_nzd(modules[c.module], c.poly, bound, label=f"{c.module} nzd ({c.poly})")
            )
        elif c.kind == "gor_quotient":
            checks.append(verify_gorenstein_quotient(ring, c.poly, bound, label=f"mod ({c.poly})"))
        elif c.kind == "gor_fpid":
            checks.append(verify_gor_fpid(ring, bound, label=source.ring.name))
        elif c.kind == "irreducible":
            checks.append(verify_irreducible(ring, bound, label=source.ring.name))
        elif c.kind == "rx_ses":
            checks.append(verify_rx_ses(ring, list(c.ideal), c.poly))
        elif c.kind == "dirlim":
            checks.append(verify_direct_limit_truncations(ring.field, c.count))
        else:
            raise MalformedInputError(f"unknown check directive {c.kind!r}")

    ok = all(e["ok"] for e in expectations) and all(c.outcome != FAIL for c in checks)
    return {
        "ring": {"name": source.ring.name, **ring_record},
        "modules": module_records,
        "expectations": expectations,
        "checks": [c.as_dict() for c in checks],
        "ok": ok,
    }


def run_file(path, bound: int | None = None, field_override=None) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    record = run_source(parse(text, field_override), bound, field_override)
    record["path"] = str(path)
    return record


def _corpus_task(args):
    path, bound, field_spec = args
    from .cli import parse_field_spec

    override = parse_field_spec(field_spec) if field_spec else None
    return run_file(path, bound, override)


def run_corpus(directory, bound: int | None = None, jobs: int = 1, field_spec: str | None = None) -> dict:
    """Evaluate every .hab file under the directory; deterministic order."""
    root = Path(directory)
    paths = sorted(str(p) for p in root.glob("*.hab"))
    t0 = time.time()
    if jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            files = list(pool.map(_corpus_task, [(p, bound, field_spec) for p in paths]))
    else:
        from .cli import parse_field_spec

        override = parse_field_spec(field_spec) if field_spec else None
        files = [run_file(p, bound, override) for p in paths]
    outcome_counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
    expectation_failures = 0
    for f in files:
        for c in f["checks"]:
            outcome_counts[c["outcome"]] = outcome_counts.get(c["outcome"], 0) + 1
        expectation_failures += sum(0 if e["ok"] else 1 for e in f["expectations"])
    ok = all(f["ok"] for f in files)
    return {
        "tool": "habw",
        "version": __version__,
        "bound": bound,
        "files": files,
        "summary": {
            "files": len(files),
            "checks": outcome_counts,
            "expectation_failures": expectation_failures,
            "ok": ok,
        },
        "wall_time_s": round(time.time() - t0, 3),
    }


def to_stable_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def strip_wall_time(report_json: str) -> str:
    """Drop the wall-time line for byte-stability comparisons."""
    return "\n".join(
        line for line in report_json.splitlines() if '"wall_time_s"' not in line
    )


def render_text(report: dict) -> str:
    """Terse human-readable rendering of a file or corpus report."""
    lines = []
    files = report.get("files", [report])
    for f in files:
        if "path" in f:
            lines.append(f"== {f['path']}")
        r = f["ring"]
        gor = r["gorenstein"]
        lines.append(
            f"ring {r.get('name', '?')}: {r['presentation']}  depth={r['depth']} dim={r['dim']} "
            f"CM={r['cohen_macaulay']} Gorenstein={gor['status']}"
            + (f" socle={r['socle_dimension']}" if r["socle_dimension"] is not None else "")
        )
        if gor["witness"]:
            lines.append(f"  gorenstein witness: {gor['witness']}")
        for name in sorted(f["modules"]):
            m = f["modules"][name]
            if m["zero"]:
                lines.append(f"module {name}: zero module")
                continue
            g = m["gdim"]
            lines.append(
                f"module {name}: depth={m['depth']} pd={m['pd']['value']} "
                f"gdim={g['value']} ({g['certification']}) gclass={m['gclass']['status']} "
                f"betti={[len(b) for b in m['betti']]}"
            )
        for e in f["expectations"]:
            mark = "ok" if e["ok"] else "MISMATCH"
            lines.append(
                f"expect {e['target']}.{e['key']} = {e['expected']} @{e['tag']}: actual {e['actual']} [{mark}]"
            )
        for c in f["checks"]:
            lines.append(f"check {c['theorem']:12} {c['outcome']:7} {c['instance']}: {c['details']}")
        lines.append(f"file ok: {f['ok']}")
    if "summary" in report:
        s = report["summary"]
        lines.append(
            f"summary: files={s['files']} checks={s['checks']} "
            f"expectation_failures={s['expectation_failures']} ok={s['ok']}"
        )
    return "\n".join(lines) + "\n"

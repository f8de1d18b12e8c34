"""Command-line client for the analysis service.

Every subcommand builds a request from a JSON algebra file, sends it through
the HTTP service and renders the report.  By default the service runs
in-process (no server needed); ``--server URL`` targets a running instance
instead.  Exit codes: 0 on success (including expected characteristic-p
findings), 1 when a theorem check fails or an internal verification defect
is reported, 2 on input errors.
"""

from __future__ import annotations

import asyncio
import json
import sys
from pathlib import Path

import click
import httpx

EXIT_OK = 0
EXIT_THEOREM_FAILURE = 1
EXIT_INPUT_ERROR = 2


def _post(path: str, payload: dict, server: str | None) -> tuple[int, dict]:
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            r = client.post(path, json=payload)
            return r.status_code, r.json()

    async def go() -> tuple[int, dict]:
        from .service.app import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://leibnizalg.local", timeout=600.0
        ) as client:
            r = await client.post(path, json=payload)
            return r.status_code, r.json()

    return asyncio.run(go())


def _load_algebra(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    except json.JSONDecodeError as exc:
        click.echo(f"error: {path} is not valid JSON: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)


def _parse_subspace_arg(text: str) -> list[list[str]]:
    rows = []
    for part in text.split(";"):
        part = part.strip()
        if part:
            rows.append([c.strip() for c in part.split(",")])
    return rows


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        click.echo(json.dumps(payload, indent=2, sort_keys=False))
    else:
        for line in lines(payload):
            click.echo(line)


def _fail(status: int, payload: dict) -> None:
    detail = payload.get("detail", payload)
    if isinstance(detail, dict):
        code = detail.get("code", "error")
        message = detail.get("message", json.dumps(detail))
    else:
        code = "error"
        message = str(detail)
    click.echo(f"error [{code}]: {message}", err=True)
    sys.exit(EXIT_THEOREM_FAILURE if status >= 500 else EXIT_INPUT_ERROR)


input_opt = click.option("--input", "input_path", required=True, help="algebra JSON file")
server_opt = click.option("--server", default=None, help="service URL (default: in-process)")
json_opt = click.option("--json", "as_json", is_flag=True, help="print the raw JSON report")


@click.group()
def main() -> None:
    """Exact structure theory for finite-dimensional Leibniz algebras."""


@main.command()
@input_opt
@server_opt
@json_opt
def validate(input_path: str, server: str | None, as_json: bool) -> None:
    """Check that a file defines a left Leibniz algebra."""
    doc = _load_algebra(input_path)
    status, payload = _post("/validate", {"algebra": doc}, server)
    if status != 200:
        _fail(status, payload)
    _emit(
        payload,
        as_json,
        lambda p: [f"{p['name'] or input_path}: valid left Leibniz algebra of dim {p['dim']}"],
    )


def _dims(rows: list) -> str:
    return "{" + ", ".join(str(len(r)) for r in rows) + "}" if rows else "0"


@main.command()
@input_opt
@server_opt
@json_opt
@click.option("--seed", default=0, show_default=True)
@click.option("--max-attempts", default=64, show_default=True)
def analyze(input_path: str, server: str | None, as_json: bool, seed: int, max_attempts: int) -> None:
    """Full structural summary: centers, series, radicals, Cartan."""
    doc = _load_algebra(input_path)
    status, payload = _post(
        "/analyze", {"algebra": doc, "seed": seed, "max_attempts": max_attempts}, server
    )
    if status != 200:
        _fail(status, payload)

    def lines(p: dict):
        out = [
            f"{p['name']}: dim {p['dim']}, "
            + ("solvable" if p["solvable"] else "not solvable")
            + ", "
            + ("nilpotent" if p["nilpotent"] else "not nilpotent"),
            f"  leibniz kernel dim {len(p['leibniz_kernel'])}; "
            f"centers (left/right/both): {len(p['left_center'])}/{len(p['right_center'])}/{len(p['center'])}",
            f"  lower central dims {p['lower_central_dims']}, derived dims {p['derived_dims']}",
            f"  lower-central limit dim {len(p['limit'])}",
        ]
        if p["radical"] is not None:
            out.append(
                f"  radical dim {len(p['radical'])}, nilradical dim {len(p['nilradical'])}, "
                + ("semisimple" if p["semisimple"] else "not semisimple")
            )
        if p["cartan_status"] == "found":
            out.append(f"  cartan subalgebra dim {len(p['cartan'])}")
        else:
            out.append("  cartan search exhausted")
        out.extend(f"  note: {n}" for n in p["notes"])
        return out

    _emit(payload, as_json, lines)


@main.command()
@input_opt
@server_opt
@json_opt
@click.option("--subspace", default=None, help="vectors 'c1,..,cn;c1,..,cn' (default: whole algebra)")
def series(input_path: str, server: str | None, as_json: bool, subspace: str | None) -> None:
    """Lower central and derived series until stabilization."""
    doc = _load_algebra(input_path)
    payload_in: dict = {"algebra": doc}
    if subspace is not None:
        payload_in["subspace"] = _parse_subspace_arg(subspace)
    status, payload = _post("/series", payload_in, server)
    if status != 200:
        _fail(status, payload)
    _emit(
        payload,
        as_json,
        lambda p: [
            f"subspace dim {p['subspace_dim']}: "
            + ("nilpotent" if p["nilpotent"] else "not nilpotent")
            + ", "
            + ("solvable" if p["solvable"] else "not solvable"),
            f"  lower central dims {p['lower_central']['dims']} (stable at index {p['lower_central']['stabilized_at']})",
            f"  derived dims {p['derived']['dims']} (stable at index {p['derived']['stabilized_at']})",
        ],
    )


@main.command()
@input_opt
@server_opt
@json_opt
@click.option("--subspace", required=True, help="vectors 'c1,..,cn;c1,..,cn'")
def subinvariant(input_path: str, server: str | None, as_json: bool, subspace: str) -> None:
    """Decide subinvariance; print the witness chain or the obstruction."""
    doc = _load_algebra(input_path)
    status, payload = _post(
        "/subinvariant", {"algebra": doc, "subspace": _parse_subspace_arg(subspace)}, server
    )
    if status != 200:
        _fail(status, payload)

    def lines(p: dict):
        if p["subinvariant"]:
            out = [f"PASS: subinvariant, witness chain of length {len(p['chain'])}"]
            for rows in p["chain"]:
                out.append("  " + " | ".join(",".join(r) for r in rows) if rows else "  0")
            return out
        return [
            "not subinvariant",
            f"  ideal-closure chain stabilized at dim {len(p['obstruction'])} above the subspace",
        ]

    _emit(payload, as_json, lines)


@main.command()
@input_opt
@server_opt
@json_opt
def radical(input_path: str, server: str | None, as_json: bool) -> None:
    """Largest solvable ideal (rational field only)."""
    doc = _load_algebra(input_path)
    status, payload = _post("/radical", {"algebra": doc}, server)
    if status != 200:
        _fail(status, payload)
    _emit(payload, as_json, lambda p: [f"radical dim {p['dim']}"] + ["  " + ",".join(r) for r in p["radical"]])


@main.command()
@input_opt
@server_opt
@json_opt
def nilradical(input_path: str, server: str | None, as_json: bool) -> None:
    """Largest nilpotent ideal (rational field only)."""
    doc = _load_algebra(input_path)
    status, payload = _post("/nilradical", {"algebra": doc}, server)
    if status != 200:
        _fail(status, payload)
    _emit(
        payload,
        as_json,
        lambda p: [f"nilradical dim {p['dim']}"] + ["  " + ",".join(r) for r in p["nilradical"]],
    )


@main.command()
@input_opt
@server_opt
@json_opt
@click.option("--seed", default=0, show_default=True)
@click.option("--max-attempts", default=64, show_default=True)
def cartan(input_path: str, server: str | None, as_json: bool, seed: int, max_attempts: int) -> None:
    """Search for a Cartan subalgebra (verified before reporting)."""
    doc = _load_algebra(input_path)
    status, payload = _post(
        "/cartan", {"algebra": doc, "seed": seed, "max_attempts": max_attempts}, server
    )
    if status != 200:
        _fail(status, payload)

    def lines(p: dict):
        if p["status"] == "found":
            return [f"cartan subalgebra dim {p['dim']}"] + ["  " + ",".join(r) for r in p["cartan"]]
        return [f"search exhausted after {p['attempts']} attempts (existence undecided)"]

    _emit(payload, as_json, lines)


@main.command()
@input_opt
@server_opt
@json_opt
@click.option("--max-stages", default=16, show_default=True)
def tower(input_path: str, server: str | None, as_json: bool, max_stages: int) -> None:
    """Derivation tower of an algebra with zero left center."""
    doc = _load_algebra(input_path)
    status, payload = _post("/tower", {"algebra": doc, "max_stages": max_stages}, server)
    if status != 200:
        _fail(status, payload)

    def lines(p: dict):
        out = []
        for idx, s in enumerate(p["stages"]):
            out.append(
                f"stage {idx}: dim {s['dim']}, center {s['center_dim']}, "
                f"inner {s['inner_dim']}/{s['der_dim']}"
                + (" (complete)" if s["complete"] else "")
            )
        out.append(
            f"terminated at dim {p['limit_dim']}; bound {p['limit_dim']} <= {p['bound_value']}: "
            + ("holds" if p["bound_holds"] else "VIOLATED")
        )
        return out

    _emit(payload, as_json, lines)


@main.command(name="oracle-check")
@input_opt
@server_opt
@json_opt
def oracle_check(input_path: str, server: str | None, as_json: bool) -> None:
    """Certify fast subinvariance/closure against exhaustive enumeration."""
    doc = _load_algebra(input_path)
    status, payload = _post("/oracle-check", {"algebra": doc}, server)
    if status != 200:
        _fail(status, payload)

    def lines(p: dict):
        return [
            f"subalgebras checked: {p['subalgebras_checked']}, "
            f"subinvariance mismatches: {len(p['subinvariance_mismatches'])}",
            f"closure seeds checked: {p['closure_seeds_checked']}, "
            f"closure mismatches: {len(p['closure_mismatches'])}",
            f"status: {p['status']}",
        ]

    _emit(payload, as_json, lines)
    if payload["status"] != "ok":
        sys.exit(EXIT_THEOREM_FAILURE)


@main.command()
@click.option("--input", "input_path", required=True, help="algebra JSON file or directory")
@server_opt
@json_opt
@click.option("--seed", default=0, show_default=True)
def theorems(input_path: str, server: str | None, as_json: bool, seed: int) -> None:
    """Run the theorem battery; exit 1 if any check fails.

    With a directory, every *.json file is processed in filename order and
    the merged report is returned."""
    path = Path(input_path)
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.suffix == ".json")
        if not files:
            click.echo(f"error: no .json files in {input_path}", err=True)
            sys.exit(EXIT_INPUT_ERROR)
    else:
        files = [path]
    merged = {"files": [], "all_passed": True}
    for f in files:
        doc = _load_algebra(str(f))
        status, payload = _post("/theorems", {"algebra": doc, "seed": seed}, server)
        if status != 200:
            _fail(status, payload)
        merged["files"].append({"file": f.name, "report": payload})
        merged["all_passed"] = merged["all_passed"] and payload["all_passed"]

    def lines(m: dict):
        out = []
        for entry in m["files"]:
            rep = entry["report"]
            out.append(f"{entry['file']}: {rep['algebra']['name']} (dim {rep['algebra']['dim']})")
            for c in rep["checks"]:
                mark = {"pass": "PASS", "fail": "FAIL", "skipped": "skip", "info": "INFO"}[c["status"]]
                out.append(f"  [{mark}] {c['name']}" + (f" ({c['detail']})" if c["detail"] else ""))
            out.append(
                "  summary: "
                + ", ".join(f"{k}={v}" for k, v in rep["counts"].items())
            )
        out.append("ALL PASS" if m["all_passed"] else "FAILURES PRESENT")
        return out

    _emit(merged if len(files) > 1 else merged["files"][0]["report"], as_json, lambda _: lines(merged))
    if not merged["all_passed"]:
        sys.exit(EXIT_THEOREM_FAILURE)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("leibnizalg.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()

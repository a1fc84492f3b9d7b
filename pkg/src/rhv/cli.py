"""Command-line runner: evaluate identity checks, write JSON reports and CSVs.

Option precedence is total: built-in defaults < RHV_DIGITS environment
variable < config file < command-line flags.  The config file is flat
``key = value`` text with ``#`` comments; unknown keys are hard errors.

Exit status: 0 when every requested check satisfies |residual| <=
error_budget, 2 when any check exceeds its budget, 1 on configuration or
runtime errors.
"""

from __future__ import annotations

import concurrent.futures
import json
import os
import sys
import tempfile
import time
from pathlib import Path

import click
import mpmath as mp
from mpmath import mpf

from .criteria import (
    CaseId,
    EqualityParams,
    GammaArgReading,
    build_real_axis_integrand,
    build_vertical_integrand,
    check,
    default_params,
)
from .errors import RHVError
from .hpmath import PrecisionSpec, ZetaArgTracker, branch_config
from .quadrature import IntegrandKind, Weight, WeightKind

_CONFIG_KEYS = {
    "case", "suite", "digits", "a", "b", "t_max", "x_max", "n_max",
    "out", "emit_samples", "gamma_arg_reading", "jobs",
}

_GOLDEN_SUITE = ("EQ4", "EQ6A", "EQ7A", "EQ8", "T1A_LIMIT")


def _parse_config(path: Path) -> dict:
    cfg = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise click.ClickException(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise click.ClickException(f"{path}:{lineno}: unknown key {key!r}")
        cfg[key] = value
    return cfg


def _as_bool(v) -> bool:
    if isinstance(v, bool):
        return v
    return str(v).strip().lower() in ("1", "true", "yes", "on")


def _resolve(flag_value, cfg: dict, key: str, default=None):
    if flag_value is not None:
        return flag_value
    if key in cfg:
        return cfg[key]
    return default


def _case_weight_kind(case_id: CaseId):
    if case_id in (CaseId.EQ2, CaseId.EQ3, CaseId.EQ4):
        return WeightKind.SECH, IntegrandKind.LOG_ABS_ZETA_VERTICAL
    if case_id in (CaseId.T1A, CaseId.T1A_LIMIT):
        return WeightKind.SECH_SQ_TIMES_T, IntegrandKind.ARG_ZETA_VERTICAL
    if case_id in (CaseId.EQ6, CaseId.EQ6A, CaseId.EQ10, CaseId.EQ10_UNCONDITIONAL):
        return WeightKind.EXP_DECAY, IntegrandKind.LOG_ABS_ZETA_VERTICAL
    if case_id in (CaseId.EQ7, CaseId.EQ7A, CaseId.EQ8):
        return WeightKind.EXP_DECAY, IntegrandKind.ARG_ZETA_VERTICAL
    return WeightKind.EXP_DECAY, None  # EQ9 family: gamma-argument vertical


def emit_samples(params: EqualityParams, grid, prec: PrecisionSpec, path: Path) -> None:
    """Write (t_or_x, integrand value) rows for the case's vertical integrand."""
    wkind, ikind = _case_weight_kind(params.case_id)
    with prec.workdps():
        weight = Weight(wkind, mpf(params.a))
        if ikind is IntegrandKind.ARG_ZETA_VERTICAL:
            tracker = ZetaArgTracker(branch_config(params.b, prec), prec)
            spec = build_vertical_integrand(ikind, weight, params.b, prec, tracker=tracker,
                                            t_max=max(grid) if len(grid) else None)
        elif ikind is IntegrandKind.LOG_ABS_ZETA_VERTICAL:
            spec = build_vertical_integrand(ikind, weight, params.b, prec)
        else:
            from .criteria import _gamma_arg_integrand
            spec = _gamma_arg_integrand(params, prec)
        nd = prec.target_digits + 5
        lines = [f"# case={params.case_id.value} a={mp.nstr(mpf(params.a), nd)} "
                 f"b={mp.nstr(mpf(params.b), nd)} n_max={params.n_max} kind=vertical",
                 "t_or_x,integrand_value"]
        for t in grid:
            t = mpf(t)
            v = spec.value(t) if t > 0 else spec.value(mpf(10) ** (-prec.working_digits // 2))
            lines.append(f"{mp.nstr(t, nd)},{mp.nstr(v, nd)}")
    _atomic_write(path, "\n".join(lines) + "\n")


def emit_real_axis_samples(params: EqualityParams, grid, prec: PrecisionSpec, path: Path) -> None:
    """Same for the real-axis integrand of the two-integral cases."""
    cid = params.case_id
    with prec.workdps():
        if cid in (CaseId.EQ6, CaseId.EQ6A, CaseId.EQ10, CaseId.EQ10_UNCONDITIONAL):
            weight = Weight(WeightKind.SIN, mpf(params.a))
            reflected = False
        elif cid in (CaseId.EQ7, CaseId.EQ7A, CaseId.EQ8):
            weight = Weight(WeightKind.COS, mpf(params.a))
            reflected = False
        elif cid in (CaseId.EQ9, CaseId.EQ9A, CaseId.EQ9B, CaseId.EQ9C):
            weight = Weight(WeightKind.COS, mpf(params.a))
            reflected = True
        else:
            raise RHVError(f"{cid.value} has no real-axis integrand")
        spec = build_real_axis_integrand(weight, params.b, prec, include_reflected=reflected)
        nd = prec.target_digits + 5
        lines = [f"# case={cid.value} a={mp.nstr(mpf(params.a), nd)} "
                 f"b={mp.nstr(mpf(params.b), nd)} n_max={params.n_max} kind=real_axis",
                 "t_or_x,integrand_value"]
        eps = mpf(10) ** (-(prec.working_digits // 2))
        for x in grid:
            x = mpf(x)
            if any(abs(x - s) < eps for s in spec.singular_points):
                x = x + 16 * eps
            lines.append(f"{mp.nstr(x, nd)},{mp.nstr(spec.value(x), nd)}")
    _atomic_write(path, "\n".join(lines) + "\n")


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _run_one(case_name: str, digits: int, overrides: dict, reading: str,
             out_dir: str, want_samples: bool):
    """Worker body: evaluate one case and write its report (and CSVs)."""
    prec = PrecisionSpec(working_digits=digits)
    case_id = CaseId[case_name]
    params = default_params(
        case_id, prec,
        a=overrides.get("a"), b=overrides.get("b"),
        t_max=overrides.get("t_max"), x_max=overrides.get("x_max"),
        n_max=overrides.get("n_max"),
        gamma_arg_reading=GammaArgReading[reading],
    )
    params.validate(prec)
    t0 = time.perf_counter()
    result = check(params, prec)
    runtime = time.perf_counter() - t0
    out = Path(out_dir)
    record = result.to_json_dict(runtime_seconds=round(runtime, 3))
    _atomic_write(out / f"{case_name}.json",
                  json.dumps(record, indent=2, sort_keys=True) + "\n")
    if want_samples:
        with prec.workdps():
            grid = [mpf("1.9") * k / 199 for k in range(200)]
            emit_samples(params, grid, prec, out / f"{case_name}_vertical_samples.csv")
            try:
                xg = [min(mpf(5), mpf(params.x_max)) * k / 399 for k in range(400)]
                emit_real_axis_samples(params, xg, prec, out / f"{case_name}_real_axis_samples.csv")
            except RHVError:
                pass
    passed = abs(result.residual) <= result.error_budget
    return case_name, passed, mp.nstr(result.residual, 8), mp.nstr(result.error_budget, 8)


@click.command(name="rhv")
@click.option("--case", "cases", multiple=True,
              help="Case id (EQ2..EQ10_UNCONDITIONAL, T1A, T1A_LIMIT); repeatable.")
@click.option("--suite", type=click.Choice(["golden"]), default=None,
              help="Run a named regression suite instead of explicit cases.")
@click.option("--config", "config_path", type=click.Path(exists=True, path_type=Path),
              default=None, help="Flat key=value config file; flags override it.")
@click.option("--digits", type=int, default=None, help="Working precision in decimal digits (20..300).")
@click.option("--a", "a_", default=None, help="Weight parameter a.")
@click.option("--b", "b_", default=None, help="Line abscissa b.")
@click.option("--t-max", default=None, help="Vertical integral truncation.")
@click.option("--x-max", default=None, help="Real-axis integral truncation.")
@click.option("--n-max", type=int, default=None, help="Series truncation.")
@click.option("--out", "out_dir", default=None, help="Output directory for reports.")
@click.option("--emit-samples", is_flag=True, default=None,
              help="Also write integrand sample CSVs per case.")
@click.option("--gamma-arg-reading", type=click.Choice(["GAMMA", "PLAIN"]), default=None,
              help="Reading of the simplified Gamma-argument integrand (EQ9A/EQ9B).")
@click.option("--jobs", type=int, default=None, help="Parallel case workers (default 1).")
def main(cases, suite, config_path, digits, a_, b_, t_max, x_max, n_max,
         out_dir, emit_samples, gamma_arg_reading, jobs):
    """Evaluate zeta integral-identity checks and write JSON reports."""
    cfg = _parse_config(config_path) if config_path else {}

    suite = _resolve(suite, cfg, "suite")
    case_list = list(cases)
    if not case_list and "case" in cfg:
        case_list = [c.strip() for c in cfg["case"].split(",") if c.strip()]
    if suite == "golden":
        case_list = list(_GOLDEN_SUITE)
    if not case_list:
        raise click.ClickException("no cases selected: pass --case or --suite")
    case_list = [c.upper() for c in case_list]
    for c in case_list:
        if c not in CaseId.__members__:
            raise click.ClickException(f"unknown case {c!r}")

    env_digits = os.environ.get("RHV_DIGITS")
    digits = _resolve(digits, cfg, "digits", None)
    if digits is None:
        digits = int(env_digits) if env_digits else (35 if suite == "golden" else 30)
    digits = int(digits)
    if not 20 <= digits <= 300:
        raise click.ClickException("digits must lie in [20, 300]")

    overrides = {}
    for key, val in (("a", a_), ("b", b_), ("t_max", t_max), ("x_max", x_max), ("n_max", n_max)):
        val = _resolve(val, cfg, key)
        if val is not None:
            overrides[key] = int(val) if key == "n_max" else str(val)
    reading = _resolve(gamma_arg_reading, cfg, "gamma_arg_reading", "GAMMA")
    out_dir = _resolve(out_dir, cfg, "out", "rhv_out")
    want_samples = _as_bool(_resolve(emit_samples, cfg, "emit_samples", False))
    jobs = int(_resolve(jobs, cfg, "jobs", 1))

    work = [(c, digits, overrides, reading, str(out_dir), want_samples) for c in case_list]
    results = []
    try:
        if jobs > 1 and len(work) > 1:
            with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_run_one_star, work))
        else:
            results = [_run_one(*w) for w in work]
    except RHVError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)

    all_pass = True
    for name, passed, residual, budget in results:
        status = "PASS" if passed else "FAIL"
        click.echo(f"{name}: {status}  residual={residual}  budget={budget}")
        all_pass = all_pass and passed
    sys.exit(0 if all_pass else 2)


def _run_one_star(args):
    return _run_one(*args)


if __name__ == "__main__":
    main()

"""``taulab`` command line: seeded verification suites and single-object evaluation."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import mpmath

from . import __version__
from . import checks as ck

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
U64_MAX = (1 << 64) - 1
CONFIG_KEYS = {"suite", "seed", "trials", "out", "jobs", "tolerance", "report", "no-timing"}


class UsageError(Exception):
    pass


# ------------------------------------------------------------- formatting

def fmt(x, digits: int = 40) -> str:
    """Render any result value as text; rationals always as num/den."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return f"{x}/1"
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return mpmath.nstr(x, digits)
    if isinstance(x, dict):
        return "{" + ", ".join(f"{_key(k)}: {fmt(v, digits)}" for k, v in sorted(x.items(), key=lambda kv: _key(kv[0]))) + "}"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(fmt(v, digits) for v in x) + "]"
    coeffs = getattr(x, "coeffs", None)
    if isinstance(coeffs, dict):
        return "jet" + fmt(coeffs, digits)
    return str(x)


def _key(k) -> str:
    return str(k)


def _u64(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 0 <= v <= U64_MAX:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


# ---------------------------------------------------------------- config

def load_config(path: str) -> Dict[str, str]:
    """Flat ``key = value`` lines; ``#`` starts a comment; keys are long flag names."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}")
    out: Dict[str, str] = {}
    for no, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{no}: expected key=value")
        key, value = (p.strip() for p in line.split("=", 1))
        key = key.lstrip("-")
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{no}: unknown key {key!r}")
        out[key] = value
    return out


# ---------------------------------------------------------------- verify

def _run_one(args):
    name, seed, trials, tol = args
    return ck.run_check(name, seed, trials, tol)


def run_suite(suite: str, seed: int, trials: int, jobs: int = 1, tolerance=None) -> List[ck.CheckResult]:
    names = [c.name for c in ck.checks_for(suite)]
    work = [(n, seed, trials, tolerance) for n in names]
    if jobs <= 1:
        results = [_run_one(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, work, chunksize=1))
    return sorted(results, key=lambda r: r.name)


def report_dict(suite: str, seed: int, results: Sequence[ck.CheckResult], timing: bool = True) -> dict:
    rows = []
    for r in results:
        params = {k: v if isinstance(v, str) else str(v) if isinstance(v, int) else fmt(v)
                  for k, v in sorted(r.params.items())}
        if r.message:
            params["error"] = r.message
        rows.append({
            "name": r.name,
            "params": params,
            "status": r.status,
            "lhs": fmt(r.lhs),
            "rhs": fmt(r.rhs),
            "residual": fmt(r.residual, 6 if r.kind == "real" else 40),
            "elapsed": f"{r.elapsed:.3f}" if timing else "",
        })
    return {"version": __version__, "suite": suite, "seed": str(seed), "checks": rows}


def summary_counts(results: Sequence[ck.CheckResult]) -> Dict[str, int]:
    out = {"pass": 0, "fail": 0, "skipped": 0}
    for r in results:
        out[r.status] += 1
    return out


def render(report: dict, fmt_name: str, summary: Dict[str, int]) -> str:
    if fmt_name == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt_name == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "status", "lhs", "rhs", "residual", "elapsed", "params"])
        for c in report["checks"]:
            w.writerow([c["name"], c["status"], c["lhs"], c["rhs"], c["residual"], c["elapsed"],
                        json.dumps(c["params"], sort_keys=True)])
        return buf.getvalue()
    width = max((len(c["name"]) for c in report["checks"]), default=10)
    lines = [f"taulab {report['version']}  suite={report['suite']}  seed={report['seed']}", ""]
    for c in report["checks"]:
        res = c["residual"] if len(c["residual"]) <= 24 else c["residual"][:21] + "..."
        lines.append(f"{c['name']:<{width}}  {c['status'].upper():<7}  residual={res:<24}  {c['elapsed']}")
        if c["status"] != "pass":
            lines.append(f"    lhs = {c['lhs']}")
            lines.append(f"    rhs = {c['rhs']}")
            if "error" in c["params"]:
                lines.append(f"    error: {c['params']['error']}")
    lines.append("")
    lines.append(f"{summary['pass']} passed, {summary['fail']} failed, {summary['skipped']} skipped")
    return "\n".join(lines) + "\n"


def cmd_verify(ns) -> int:
    results = run_suite(ns.suite, ns.seed, ns.trials, ns.jobs, ns.tolerance)
    summary = summary_counts(results)
    text = render(report_dict(ns.suite, ns.seed, results, not ns.no_timing), ns.out, summary)
    _emit(text, ns.report)
    return EXIT_FAIL if summary["fail"] else EXIT_OK


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise ReportWriteError(f"cannot write report {path}: {exc.strerror}")
    else:
        sys.stdout.write(text)


class ReportWriteError(Exception):
    pass


# --------------------------------------------------------------- compute

def _parse_scalar(v):
    if isinstance(v, (int, float)):
        return Fraction(str(v))
    try:
        return Fraction(str(v))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {v!r}")


def _load_point(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read point file {path}: {exc}")
    if not isinstance(data, dict):
        raise UsageError("point file must hold a JSON object")
    return data


def _vec(data: dict, key: str, n: int) -> List[Fraction]:
    if key not in data:
        raise UsageError(f"point file lacks {key!r}")
    vals = [_parse_scalar(x) for x in data[key]]
    if len(vals) != n:
        raise UsageError(f"{key!r} must have {n} entries")
    return vals


def _compute_sampler(ns, tag: str) -> ck.Sampler:
    return ck.Sampler(ck.derive_seed(ns.seed, f"compute.{tag}"))


def _to_mp(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def _mp_point_from_file(data: dict, kind: str, n: int, dps: int):
    from . import height_models as hm
    with mpmath.workdps(dps + 10):
        u = tuple(_to_mp(x) for x in _vec(data, "u", n))
        v = tuple(_to_mp(x) for x in _vec(data, "v", n))

        def scalar(key):
            if key not in data:
                raise UsageError(f"point file lacks {key!r}")
            return _to_mp(_parse_scalar(data[key]))

        if kind == "ps_trig":
            return hm.ModelParams(u=u, v=v, eta=scalar("eta"), r=int(data.get("r", 0)), s=int(data.get("s", 0)), dps=dps)
        theta = hm.ThetaParams(scalar("nome"), dps=dps)
        if kind == "bsos":
            return hm.ModelParams(u=u, v=v, theta=theta, lam=scalar("lam"), zeta=scalar("zeta"), dps=dps)
        return hm.ModelParams(u=u, v=v, theta=theta, lam=scalar("lam"), a0=scalar("a0"), dps=dps)


def _height_point(ns, kind: str):
    if ns.point:
        return _mp_point_from_file(_load_point(ns.point), kind, ns.n, ns.dps)
    smp = _compute_sampler(ns, f"{kind}.{ns.n}")
    from . import height_models as hm
    return hm.sample_params(kind, ns.n, smp.rng, dps=ns.dps, r=ns.r, s=ns.s or 0)


def _mp_point_fields(p) -> Dict[str, object]:
    out = {"u": list(p.u), "v": list(p.v), "dps": str(p.dps)}
    for key in ("lam", "zeta", "a0", "eta"):
        if getattr(p, key) is not None:
            out[key] = getattr(p, key)
    if p.theta is not None:
        out["nome"] = p.theta.nome
    if p.eta is not None:
        out["r"], out["s"] = str(p.r), str(p.s)
    return out


def compute_dwpf(ns) -> Dict[str, object]:
    from . import felderhof as fh
    from . import height_models as hm
    from . import six_vertex as sv
    n = ns.n
    out: Dict[str, object] = {"object": "dwpf", "model": ns.model, "n": str(n), "method": ns.method}
    if ns.model == "sixvertex":
        if ns.method not in sv.METHODS:
            raise UsageError(f"six-vertex methods: {', '.join(sv.METHODS)}")
        if ns.point:
            d = _load_point(ns.point)
            pt = sv.SpectralPoint(_vec(d, "x", n), _vec(d, "y", n), _parse_scalar(d.get("p", "")))
            if not pt.is_generic():
                raise sv.DegenerateSpectralPoint("explicit point is not generic")
        else:
            pt = _compute_sampler(ns, f"sixvertex.{n}").generic(lambda s: ck._spectral_point(s, n))
        out.update(x=list(pt.x), y=list(pt.y), p=pt.p, value=sv.dwpf(n, pt, ns.method).value)
    elif ns.model == "felderhof":
        if ns.method not in ("bruteforce", "determinant", "product"):
            raise UsageError("felderhof methods: bruteforce, determinant, product")
        if ns.point:
            d = _load_point(ns.point)
            pt = fh.ColourPoint(_vec(d, "alpha", n), _vec(d, "beta", n))
            if not pt.is_generic():
                raise fh.DegenerateColourPoint("explicit point is not generic")
        else:
            pt = _compute_sampler(ns, f"felderhof.{n}").generic(lambda s: ck._colour_point(s, n))
        out.update(alpha=list(pt.alpha), beta=list(pt.beta), value=fh.dwpf_reduced(n, pt, ns.method))
        out["normalization"] = "reduced"
    elif ns.model in ("bsos", "ps-trig", "ps-elliptic"):
        kind = ns.model.replace("-", "_")
        methods = {"bsos": ("bruteforce", "permutation_sum"), "ps_trig": ("bruteforce", "product"),
                   "ps_elliptic": ("bruteforce", "product")}[kind]
        if ns.method not in methods:
            raise UsageError(f"{ns.model} methods: {', '.join(methods)}")
        p = _height_point(ns, kind)
        fn = {"bsos": hm.bsos_dwpf, "ps_trig": hm.ps_trig_dwpf, "ps_elliptic": hm.ps_elliptic_dwpf}[kind]
        out.update(_mp_point_fields(p))
        out["value"] = fn(n, p, ns.method)
    else:
        raise UsageError("dwpf needs --model sixvertex|felderhof|bsos|ps-trig|ps-elliptic")
    return out


def compute_scalar_product(ns) -> Dict[str, object]:
    from . import phase_model as pm
    from . import six_vertex as sv
    n, m = ns.n, ns.m
    if m is None:
        raise UsageError("scalar-product needs --m")
    out: Dict[str, object] = {"object": "scalar-product", "model": ns.model, "n": str(n), "m": str(m),
                              "method": ns.method}
    if ns.model == "phase":
        if ns.method not in ("bruteforce", "determinant", "schur"):
            raise UsageError("phase methods: bruteforce, determinant, schur")
        if ns.point:
            d = _load_point(ns.point)
            u, v = _vec(d, "u", n), _vec(d, "v", n)
        else:
            u, v = ck._phase_uv(_compute_sampler(ns, f"phase.{n}.{m}"), n, n)
        out.update(u=u, v=v, value=pm.scalar_product(n, m, u, v, ns.method))
    elif ns.model == "slavnov":
        if ns.method not in ("determinant", "symmetric", "schur"):
            raise UsageError("slavnov methods: determinant, symmetric, schur")
        if ns.point:
            d = _load_point(ns.point)
            pt = sv.SpectralPoint(_vec(d, "x", n), _vec(d, "y", n), _parse_scalar(d.get("p", "")), _vec(d, "w", m))
        else:
            pt = _compute_sampler(ns, f"slavnov.{n}.{m}").generic(lambda s: ck._spectral_point(s, n, m))
        out.update(x=list(pt.x), y=list(pt.y), p=pt.p, w=list(pt.w), value=sv.slavnov(n, m, pt, ns.method))
    else:
        raise UsageError("scalar-product needs --model phase|slavnov")
    return out


def compute_pp_census(ns) -> Dict[str, object]:
    from . import phase_model as pm
    if not ns.box:
        raise UsageError("pp-census needs --box R S T")
    r, s, t = ns.box
    census = pm.plane_partition_census(r, s, t)
    return {"object": "pp-census", "box": f"{r}x{s}x{t}",
            "polynomial": " + ".join(f"{c}*q^{k}" for k, c in sorted(census.items())),
            "count": str(sum(census.values())), "macmahon_count": str(pm.macmahon_count(r, s, t)),
            "matches_macmahon": census == pm.macmahon_polynomial(r, s, t)}


def compute_tau(ns) -> Dict[str, object]:
    from . import toda as td
    L = ns.n
    if ns.s is None or not 0 <= ns.s <= L:
        raise UsageError(f"tau needs --s between 0 and {L}")
    if ns.method not in ("family", "double-schur"):
        raise UsageError("tau methods: family, double-schur")
    fam = ck._toda_family(_compute_sampler(ns, f"tau.{L}"), L)
    value = td.tau_family(fam, ns.s) if ns.method == "family" else td.tau_polynomial(fam, ns.s)
    return {"object": "tau", "n": str(L), "s": str(ns.s), "method": ns.method, "A": fam.A.to_rows(),
            "x": list(fam.x), "y": list(fam.y), "value": value}


def compute_elliptic_identity(ns) -> Dict[str, object]:
    from . import height_models as hm
    if ns.n < 2:
        raise UsageError("elliptic-identity needs --n >= 2")
    p = _height_point(ns, "ps_elliptic")
    lhs, rhs = hm.elliptic_identity_sides(p)
    out: Dict[str, object] = {"object": "elliptic-identity", "n": str(ns.n)}
    out.update(_mp_point_fields(p))
    with mpmath.workdps(p.dps + 10):
        out.update(lhs=lhs, rhs=rhs, residual=hm.relative_residual(lhs, rhs))
    return out


COMPUTE = {
    "dwpf": compute_dwpf,
    "scalar-product": compute_scalar_product,
    "pp-census": compute_pp_census,
    "tau": compute_tau,
    "elliptic-identity": compute_elliptic_identity,
}


def cmd_compute(ns) -> int:
    from . import felderhof as fh
    from . import height_models as hm
    from . import phase_model as pm
    from . import six_vertex as sv
    try:
        result = COMPUTE[ns.object](ns)
    except (sv.DegenerateSpectralPoint, fh.DegenerateColourPoint, pm.DegeneratePoint,
            hm.DegenerateWeight, ZeroDivisionError) as exc:
        raise UsageError(f"degenerate point: {exc}")
    digits = getattr(ns, "dps", 50)
    flat = {k: fmt(v, digits) if not isinstance(v, str) else v for k, v in result.items()}
    if ns.out == "json":
        text = json.dumps(flat, indent=2) + "\n"
    elif ns.out == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(flat))
        w.writerow(list(flat.values()))
        text = buf.getvalue()
    else:
        width = max(len(k) for k in flat)
        text = "".join(f"{k:<{width}}  {v}\n" for k, v in flat.items())
    _emit(text, None)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taulab", description="Cross-route verification of tau-function and lattice-model identities.")
    parser.add_argument("--version", action="version", version=f"taulab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=list(ck.SUITES) + ["all"])
    v.add_argument("--seed", type=_u64, default=0)
    v.add_argument("--trials", type=_positive, default=10)
    v.add_argument("--out", choices=["table", "json", "csv"], default="table")
    v.add_argument("--config", metavar="FILE")
    v.add_argument("--jobs", type=_positive, default=min(4, os.cpu_count() or 1))
    v.add_argument("--tolerance", default=None, help="relative bound for real-valued checks (default 1e-30)")
    v.add_argument("--report", metavar="PATH", help="write the report here instead of stdout")
    v.add_argument("--no-timing", action="store_true", help="blank the elapsed column for byte-stable reports")

    c = sub.add_parser("compute", help="evaluate one object")
    c.add_argument("object", choices=list(COMPUTE))
    c.add_argument("--model")
    c.add_argument("--method")
    c.add_argument("--n", type=_positive, default=2)
    c.add_argument("--m", type=_positive)
    c.add_argument("--s", type=int)
    c.add_argument("--r", type=int, default=0)
    c.add_argument("--box", type=_positive, nargs=3, metavar=("R", "S", "T"))
    c.add_argument("--seed", type=_u64, default=0)
    c.add_argument("--point", metavar="FILE", help="JSON file with an explicit point instead of --seed")
    c.add_argument("--dps", type=int, default=50)
    c.add_argument("--out", choices=["table", "json", "csv"], default="table")
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: Sequence[str]) -> argparse.Namespace:
    ns = parser.parse_args(argv)
    if ns.command != "verify" or not ns.config:
        return ns
    cfg = load_config(ns.config)
    # re-parse with file values as defaults so explicit flags still win
    cli = []
    for key, value in cfg.items():
        if key == "no-timing":
            if value.lower() in ("1", "true", "yes", "on"):
                cli.append("--no-timing")
            elif value.lower() not in ("0", "false", "no", "off"):
                raise UsageError(f"no-timing expects a boolean, got {value!r}")
        else:
            cli += [f"--{key}", value]
    idx = list(argv).index("verify")
    merged = list(argv[:idx + 1]) + cli + list(argv[idx + 1:])
    return parser.parse_args(merged)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        ns = _apply_config(parser, argv)
        if ns.command == "verify":
            if ns.suite is None:
                raise UsageError("verify needs --suite")
            if ns.tolerance is not None:
                try:
                    if mpmath.mpf(ns.tolerance) < 0:
                        raise ValueError
                except (ValueError, TypeError):
                    raise UsageError(f"bad tolerance {ns.tolerance!r}")
            return cmd_verify(ns)
        return cmd_compute(ns)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    except UsageError as exc:
        print(f"taulab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ReportWriteError as exc:
        print(f"taulab: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

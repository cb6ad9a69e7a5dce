"""Command-line front end producing CSV curves and diagnostics.

Subcommands: conductivity, reflection, green, shift, integrand, verify.
Output is plain comma-separated text with one '#'-prefixed header line and
17-significant-digit floats, plus a sidecar '<out>.meta' file recording the
full parameter set; identical configurations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .closed_forms import ClosedForm, eval_closed_form
from .errors import ChernAtomError
from .fresnel import reflection_set
from .green import OscQuadConfig, green_reflected, integrand_profile
from .kubo import QuadratureConfig, conductivity, nondispersive_conductivity
from .qwz import ModelParams
from .shift import polarization, resonant_shift, total_shift

__all__ = ["main", "RunConfig"]


@dataclass(frozen=True)
class RunConfig:
    """Resolved parameters of one CLI invocation."""

    subcommand: str
    u_over_t: float
    omega10_over_t: tuple[float, ...]
    eta_min: float
    eta_max: float
    eta_step: float
    polarization: str
    nondispersive: bool
    chern: int | None
    out: str
    threads: int
    quad: QuadratureConfig
    osc: OscQuadConfig
    extra: dict = field(default_factory=dict)


_FMT = "%.17g"

# flag -> value parser, used both for command-line types and config files
_VALUE_TYPES = {
    "u_over_t": float,
    "omega10_over_t": str,
    "eta_min": float,
    "eta_max": float,
    "eta_step": float,
    "polarization": str,
    "nondispersive": lambda s: s in ("1", "true", "True", "yes"),
    "chern": int,
    "out": str,
    "threads": int,
    "bz_grid": int,
    "broadening": float,
    "rel_tol": float,
    "omega_min": float,
    "omega_max": float,
    "omega_step": float,
    "k_par_min": float,
    "k_par_max": float,
    "k_par_step": float,
    "eta": float,
    "nonresonant": lambda s: s in ("1", "true", "True", "yes"),
    "reference_nondispersive": lambda s: s in ("1", "true", "True", "yes"),
}


def _load_config_file(path: str) -> dict:
    """Plain key=value file; '#' starts a comment, keys may use '-' or '_'."""
    out = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"malformed config line: {raw.rstrip()}")
            key, val = (s.strip() for s in line.split("=", 1))
            dest = key.replace("-", "_")
            if dest not in _VALUE_TYPES:
                raise ValueError(f"unknown config key: {key}")
            out[dest] = _VALUE_TYPES[dest](val)
    return out


def _add_common(sp):
    sp.add_argument("--u-over-t", type=float, default=-1.0, help="gap parameter u/t")
    sp.add_argument(
        "--omega10-over-t",
        type=str,
        default="1.9",
        help="transition frequency (units of t); comma list allowed",
    )
    sp.add_argument("--eta-min", type=float, default=0.5)
    sp.add_argument("--eta-max", type=float, default=15.0)
    sp.add_argument("--eta-step", type=float, default=0.1)
    sp.add_argument(
        "--polarization", choices=("perp", "par", "circ+", "circ-"), default="circ+"
    )
    sp.add_argument(
        "--nondispersive",
        action="store_true",
        help="use the quantized static conductivity instead of the Kubo tensor",
    )
    sp.add_argument(
        "--chern",
        type=int,
        choices=(1, -1),
        default=None,
        help="Chern number for --nondispersive (default: sign of u)",
    )
    sp.add_argument("--out", type=str, default=None, help="output CSV path")
    sp.add_argument("--config", type=str, default=None, help="key=value defaults file")
    sp.add_argument("--threads", type=int, default=max(1, os.cpu_count() or 1))
    sp.add_argument("--bz-grid", type=int, default=None, help="BZ points per axis")
    sp.add_argument("--broadening", type=float, default=None, help="delta/PV width (units of t)")
    sp.add_argument("--rel-tol", type=float, default=None, help="quadrature relative tolerance")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="chernatom",
        description="Casimir-Polder shifts of an atom above an anomalous-Hall sheet",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("conductivity", help="sheet conductivity vs frequency")
    _add_common(sp)
    sp.add_argument("--omega-min", type=float, default=0.1)
    sp.add_argument("--omega-max", type=float, default=8.0)
    sp.add_argument("--omega-step", type=float, default=0.05)

    sp = sub.add_parser("reflection", help="reflection amplitudes vs parallel wavevector")
    _add_common(sp)
    sp.add_argument("--k-par-min", type=float, default=0.0)
    sp.add_argument("--k-par-max", type=float, default=3.0)
    sp.add_argument("--k-par-step", type=float, default=0.01)

    sp = sub.add_parser("green", help="reflected Green components vs distance")
    _add_common(sp)

    sp = sub.add_parser("shift", help="frequency shift vs distance")
    _add_common(sp)
    sp.add_argument(
        "--nonresonant",
        action="store_true",
        help="add the nonresonant and total columns (slower)",
    )
    sp.add_argument(
        "--reference-nondispersive",
        action="store_true",
        help="append the closed-form nondispersive reference column",
    )

    sp = sub.add_parser("integrand", help="shift integrand profile vs parallel wavevector")
    _add_common(sp)
    sp.add_argument("--eta", type=float, default=1.0)
    sp.add_argument("--k-par-min", type=float, default=0.0)
    sp.add_argument("--k-par-max", type=float, default=3.0)
    sp.add_argument("--k-par-step", type=float, default=0.01)

    sp = sub.add_parser("verify", help="run the acceptance suite")
    return parser


def _parse(argv):
    parser = _build_parser()
    # first pass only to learn --config, then re-parse with file defaults so
    # explicit command-line flags keep precedence
    ns, _ = parser.parse_known_args(argv)
    cfg_path = getattr(ns, "config", None)
    if cfg_path:
        defaults = _load_config_file(cfg_path)
        parser = _build_parser()
        for action in parser._subparsers._group_actions[0].choices.values():
            known = {a.dest for a in action._actions}
            action.set_defaults(**{k: v for k, v in defaults.items() if k in known})
    return parser, parser.parse_args(argv)


def _grid(parser, lo, hi, step, what):
    if step <= 0:
        parser.error(f"{what} step must be positive")
    if hi < lo:
        parser.error(f"empty {what} grid")
    n = int(np.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(n)


def _run_config(parser, ns) -> RunConfig:
    q = QuadratureConfig()
    if ns.bz_grid is not None:
        q = QuadratureConfig(
            bz_grid_n=ns.bz_grid,
            delta_broadening=q.delta_broadening,
            pv_broadening=q.pv_broadening,
        )
    if ns.broadening is not None:
        q = QuadratureConfig(
            bz_grid_n=q.bz_grid_n,
            delta_broadening=ns.broadening,
            pv_broadening=ns.broadening,
        )
    osc = OscQuadConfig() if ns.rel_tol is None else OscQuadConfig(rel_tol=ns.rel_tol)
    try:
        omegas = tuple(float(s) for s in ns.omega10_over_t.split(",") if s.strip())
    except ValueError:
        parser.error(f"bad --omega10-over-t list: {ns.omega10_over_t!r}")
    if not omegas:
        parser.error("empty --omega10-over-t list")
    chern = ns.chern
    if ns.nondispersive and chern is None:
        chern = 1 if ns.u_over_t > 0 else -1
    extra = {
        k: getattr(ns, k)
        for k in (
            "omega_min", "omega_max", "omega_step",
            "k_par_min", "k_par_max", "k_par_step",
            "eta", "nonresonant", "reference_nondispersive",
        )
        if hasattr(ns, k)
    }
    return RunConfig(
        subcommand=ns.subcommand,
        u_over_t=ns.u_over_t,
        omega10_over_t=omegas,
        eta_min=ns.eta_min,
        eta_max=ns.eta_max,
        eta_step=ns.eta_step,
        polarization=ns.polarization,
        nondispersive=ns.nondispersive,
        chern=chern,
        out=ns.out or f"{ns.subcommand}.csv",
        threads=max(1, ns.threads),
        quad=q,
        osc=osc,
        extra=extra,
    )


def _write_csv(path, header, rows):
    with open(path, "w") as fh:
        fh.write("# " + ", ".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_FMT % v for v in row) + "\n")


def _write_meta(path, cfg: RunConfig, **extra):
    items = {
        "version": __version__,
        "subcommand": cfg.subcommand,
        "u_over_t": cfg.u_over_t,
        "omega10_over_t": ",".join(repr(w) for w in cfg.omega10_over_t),
        "eta_min": cfg.eta_min,
        "eta_max": cfg.eta_max,
        "eta_step": cfg.eta_step,
        "polarization": cfg.polarization,
        "nondispersive": cfg.nondispersive,
        "chern": cfg.chern,
        "bz_grid_n": cfg.quad.bz_grid_n,
        "delta_broadening": cfg.quad.delta_broadening,
        "pv_broadening": cfg.quad.pv_broadening,
        "rel_tol": cfg.osc.rel_tol,
        **cfg.extra,
        **extra,
    }
    with open(str(path) + ".meta", "w") as fh:
        for k, v in items.items():
            fh.write(f"{k}={v}\n")


def _ordered_map(fn, values, threads):
    if threads <= 1 or len(values) <= 1:
        return [fn(v) for v in values]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, values))


def _model(cfg: RunConfig) -> ModelParams:
    return ModelParams(u=cfg.u_over_t)


def _sigma_at(cfg: RunConfig, omega: float):
    if cfg.nondispersive:
        return nondispersive_conductivity(cfg.chern)
    return conductivity(omega, _model(cfg), cfg.quad)


def cmd_conductivity(parser, cfg: RunConfig) -> int:
    omegas = _grid(
        parser, cfg.extra["omega_min"], cfg.extra["omega_max"], cfg.extra["omega_step"], "omega"
    )
    rows = _ordered_map(
        lambda w: (
            lambda s: (w, s.sxx.real, s.sxx.imag, s.sxy.real, s.sxy.imag)
        )(_sigma_at(cfg, float(w))),
        omegas,
        cfg.threads,
    )
    _write_csv(cfg.out, ("omega_over_t", "re_sxx", "im_sxx", "re_sxy", "im_sxy"), rows)
    _write_meta(cfg.out, cfg)
    return 0


def cmd_reflection(parser, cfg: RunConfig) -> int:
    ks = _grid(
        parser, cfg.extra["k_par_min"], cfg.extra["k_par_max"], cfg.extra["k_par_step"], "k_par"
    )
    sigma = _sigma_at(cfg, cfg.omega10_over_t[0])

    def row(k):
        r = reflection_set(float(k), 1.0, sigma)
        return (
            k,
            abs(r.r_ss), abs(r.r_sp), abs(r.r_pp),
            abs(r.t_ss), abs(r.t_sp), abs(r.t_pp),
        )

    rows = _ordered_map(row, ks, cfg.threads)
    _write_csv(
        cfg.out,
        ("k_par", "abs_r_ss", "abs_r_sp", "abs_r_pp", "abs_t_ss", "abs_t_sp", "abs_t_pp"),
        rows,
    )
    _write_meta(cfg.out, cfg)
    return 0


def cmd_green(parser, cfg: RunConfig) -> int:
    etas = _grid(parser, cfg.eta_min, cfg.eta_max, cfg.eta_step, "eta")
    sigma = _sigma_at(cfg, cfg.omega10_over_t[0])

    def row(eta):
        g = green_reflected(float(eta), sigma, cfg.osc)
        return (
            eta,
            g.gxx.real, g.gxx.imag,
            g.gxy.real, g.gxy.imag,
            g.gzz.real, g.gzz.imag,
        )

    rows = _ordered_map(row, etas, cfg.threads)
    _write_csv(
        cfg.out,
        ("eta", "re_gxx", "im_gxx", "re_gxy", "im_gxy", "re_gzz", "im_gzz"),
        rows,
    )
    _write_meta(cfg.out, cfg)
    return 0


def _shift_out_path(cfg: RunConfig, omega: float) -> str:
    if len(cfg.omega10_over_t) == 1:
        return cfg.out
    root, ext = os.path.splitext(cfg.out)
    return f"{root}_w{omega:g}{ext or '.csv'}"


def cmd_shift(parser, cfg: RunConfig) -> int:
    etas = _grid(parser, cfg.eta_min, cfg.eta_max, cfg.eta_step, "eta")
    pol = polarization(cfg.polarization)
    with_nres = cfg.extra["nonresonant"]
    with_ref = cfg.extra["reference_nondispersive"]
    p = None if cfg.nondispersive else _model(cfg)
    ref_cf = None
    if with_ref:
        ref_chern = cfg.chern if cfg.chern is not None else (1 if cfg.u_over_t > 0 else -1)
        ref_cf = ClosedForm(pol.kind, "nondispersive_full", chern=ref_chern)

    for omega in cfg.omega10_over_t:

        def row(eta):
            if with_nres:
                r = total_shift(
                    pol, omega, float(eta), p=p,
                    nondispersive_chern=cfg.chern if cfg.nondispersive else None,
                    q=cfg.quad, cfg=cfg.osc,
                )
                vals = [eta, r.resonant, r.nonresonant, r.total]
            else:
                r = resonant_shift(
                    pol, omega, float(eta), p=p,
                    nondispersive_chern=cfg.chern if cfg.nondispersive else None,
                    q=cfg.quad, cfg=cfg.osc,
                )
                vals = [eta, r.resonant]
            if ref_cf is not None:
                vals.append(eval_closed_form(ref_cf, float(eta)))
            return tuple(vals)

        header = ["eta", "shift_res"]
        if with_nres:
            header += ["shift_nres", "shift_total"]
        if ref_cf is not None:
            header.append("shift_res_nondispersive")
        out = _shift_out_path(cfg, omega)
        rows = _ordered_map(row, etas, cfg.threads)
        _write_csv(out, header, rows)
        _write_meta(out, cfg, this_omega10_over_t=omega)
    return 0


def cmd_integrand(parser, cfg: RunConfig) -> int:
    ks = _grid(
        parser, cfg.extra["k_par_min"], cfg.extra["k_par_max"], cfg.extra["k_par_step"], "k_par"
    )
    sigma = _sigma_at(cfg, cfg.omega10_over_t[0])
    vals = integrand_profile(cfg.extra["eta"], sigma, ks)
    _write_csv(cfg.out, ("k_par", "integrand"), list(zip(ks, vals)))
    _write_meta(cfg.out, cfg)
    return 0


def cmd_verify(parser, ns) -> int:
    from .acceptance import run_all

    results = run_all(stream=sys.stdout)
    n_fail = sum(not r.passed for r in results)
    print(f"{len(results) - n_fail}/{len(results)} criteria passed")
    return 0 if n_fail == 0 else 1


def main(argv=None) -> int:
    parser, ns = _parse(sys.argv[1:] if argv is None else argv)
    if ns.subcommand == "verify":
        return cmd_verify(parser, ns)
    cfg = _run_config(parser, ns)
    handler = {
        "conductivity": cmd_conductivity,
        "reflection": cmd_reflection,
        "green": cmd_green,
        "shift": cmd_shift,
        "integrand": cmd_integrand,
    }[cfg.subcommand]
    try:
        return handler(parser, cfg)
    except ChernAtomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

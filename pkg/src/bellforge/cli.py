"""Command-line front end.

Subcommands mirror the package layout (bell / generate / photonics /
thermal / witness); grid sweeps emit CSV, everything else prints
human-readable lines or JSON ({"schema": 1, ...}) with --format json.
Identical configuration and seed give byte-identical output.  Exit codes:
0 success, 2 domain error, 1 I/O error.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from bellforge.errors import BellforgeError, DomainError

SCHEMA = 1


@dataclass
class RunConfig:
    format: str = "text"
    out: str | None = None
    seed: int = 0
    restarts: int = 64
    threads: int = 1


def parse_grid(spec: str) -> np.ndarray:
    """start:stop:step, endpoints included when they land within 1e-12."""
    try:
        start, stop, step = (float(x) for x in spec.split(":"))
    except ValueError as exc:
        raise DomainError(f"bad grid {spec!r}; expected start:stop:step") from exc
    if step <= 0:
        raise DomainError("grid step must be positive")
    n = int(np.floor((stop - start) / step + 1e-12)) + 1
    return start + step * np.arange(n)


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return f"{x:.12g}"
    return str(x)


def _emit(cfg: RunConfig, payload: dict, text_lines):
    if cfg.format == "json":
        body = json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True)
    else:
        body = "\n".join(text_lines)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def _emit_csv(cfg: RunConfig, header, rows):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    body = "\n".join(lines)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def _map_rows(cfg: RunConfig, func, items):
    """Deterministic parallel map: results are collected and re-ordered."""
    workers = max(1, cfg.threads)
    if workers == 1:
        return [func(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def _parse_state(spec: str, visibility: float):
    from bellforge import qstate as qs

    spec = spec.lower()
    if spec == "singlet":
        base = qs.singlet()
    elif spec.startswith("ghz"):
        parts = spec.split(":")
        n = int(parts[0][3:] or parts[1])
        if spec.startswith("ghz:"):
            parts = spec.split(":")
            n = int(parts[1])
            if len(parts) > 2:
                return qs.noisy(qs.generalized_ghz(n, float(parts[2])), visibility)
        base = qs.ghz(n)
    elif spec.startswith("w"):
        n = int(spec.split(":")[1]) if ":" in spec else int(spec[1:])
        base = qs.w_state(n)
    else:
        raise DomainError(f"unknown state {spec!r}")
    return qs.noisy(base, visibility)


def _build_model(args):
    from bellforge import thermal as th

    name = args.model
    if name not in th.MODEL_FACTORIES:
        raise DomainError(f"unknown model {name!r}")
    if name in ("xxx_ring", "xxx_chain"):
        return th.MODEL_FACTORIES[name](
            args.n, args.j, args.l, getattr(args, "convention", "pauli")
        )
    if name == "xxz_ring":
        return th.xxz_ring(args.n, args.j, args.j3, args.b)
    if name == "ising_ring":
        return th.ising_ring(args.n, +1 if args.j >= 0 else -1, args.b)
    if name == "dimer_chain":
        return th.dimer_chain(args.n, args.j, args.j2)
    # single-parameter geometry models
    return th.MODEL_FACTORIES[name](args.a)


# ---------------------------------------------------------------------------
# bell


def cmd_bell(args, cfg: RunConfig):
    from bellforge import qstate as qs
    from bellforge.bell import avn, conditions, lhv, seesaw
    from bellforge.bell.functionals import named_functionals

    if args.bell_cmd == "chsh":
        rho = _parse_state(args.state, args.visibility)
        f = named_functionals()["chsh"]
        val, obs = seesaw.quantum_value(f, rho, restarts=cfg.restarts, seed=cfg.seed)
        lines = [f"chsh quantum value: {val:.10f}", f"lhv bound: {lhv.lhv_bound(f)}"]
        for k, a in enumerate(obs):
            lines.append(f"observer {k+1} vectors: {np.round(a, 6).tolist()}")
        _emit(cfg, {"value": val, "lhv_bound": f.lhv_bound,
                    "observables": [a.tolist() for a in obs]}, lines)
    elif args.bell_cmd == "value":
        rho = _parse_state(args.state, args.visibility)
        f = named_functionals()[args.name]
        val, obs = seesaw.quantum_value(f, rho, restarts=cfg.restarts, seed=cfg.seed)
        _emit(cfg, {"name": args.name, "value": val, "lhv_bound": f.lhv_bound},
              [f"{args.name} quantum value: {val:.10f} (lhv bound {f.lhv_bound})"])
    elif args.bell_cmd == "lhv":
        cat = named_functionals()
        names = [args.name] if args.name else sorted(cat)
        rows = [(n, lhv.lhv_bound(cat[n]), lhv.lhv_bound_via_vertices(cat[n]))
                for n in names]
        _emit(cfg, {"bounds": {n: b for n, b, _ in rows}},
              [f"{n}: lhv bound {b:g} (vertex path {v:g})" for n, b, v in rows])
    elif args.bell_cmd == "avn":
        rep = avn.ghz_avn_check(args.n)
        lines = [
            f"all-x mean: {rep.all_x_mean:+.10f}",
            f"pair means: all +1 within 1e-10: {rep.stabilizer_consistent}",
            f"LHV product prediction: {rep.lhv_prediction:+.10f}",
            f"contradiction: {rep.contradiction}",
        ]
        _emit(cfg, {"n": rep.n, "all_x": rep.all_x_mean,
                    "lhv_prediction": rep.lhv_prediction,
                    "contradiction": rep.contradiction}, lines)
    elif args.bell_cmd == "wwwzb-max":
        rho = _parse_state(args.state, args.visibility)
        factor, best = seesaw.wwwzb_family_max(rho, restarts=cfg.restarts,
                                               seed=cfg.seed)
        _emit(cfg, {"factor": factor},
              [f"max violation factor over the two-setting family: {factor:.6f}"])
    elif args.bell_cmd == "condition":
        rho = _parse_state(args.state, args.visibility)
        t = qs.correlation_tensor(rho)
        which = args.which
        if which == "wwwzb":
            val = conditions.condition_wwwzb(t, restarts=cfg.restarts, seed=cfg.seed)
            payload = {"value": val, "violation_possible_if_gt_1": val > 1}
        elif which in ("wzlpzb3", "wzlpzb4"):
            val = conditions.condition_wzlpzb(t, int(which[-1]),
                                              restarts=cfg.restarts, seed=cfg.seed)
            payload = {"value": val, "violated_iff_gt_1": val > 1}
        elif which in ("three1", "three2"):
            out = conditions.condition_three_setting(
                t, "ineq1" if which == "three1" else "ineq2",
                restarts=cfg.restarts, seed=cfg.seed)
            payload = dict(out)
            val = out["optimized"]
        elif which in ("rotinv-planar", "rotinv-full"):
            rep = conditions.rotinv_condition(
                t, which.split("-")[1], restarts=cfg.restarts, seed=cfg.seed)
            payload = {"sum_sq": rep.sum_sq, "t_max": rep.t_max,
                       "ratio": rep.ratio, "violated": rep.violated}
            val = rep.ratio
        else:
            raise DomainError(f"unknown condition {which!r}")
        _emit(cfg, payload, [f"{which}: " + ", ".join(
            f"{k}={_fmt(v)}" for k, v in payload.items())])
    elif args.bell_cmd == "rotinv-critical":
        v = conditions.rotinv_critical_visibility(args.n)
        ref = 2.0 * (2.0 / np.pi) ** args.n
        _emit(cfg, {"n": args.n, "critical_visibility": v, "closed_form": ref},
              [f"critical visibility N={args.n}: {v:.6f} (closed form {ref:.6f})"])
    else:
        raise DomainError(f"unknown bell subcommand {args.bell_cmd!r}")


def cmd_generate(args, cfg: RunConfig):
    from bellforge.bell.functionals import catalog_to_json
    from bellforge.bell.generate import generate_tight_functionals

    classes = generate_tight_functionals(args.parties)
    funcs = [c.functional for c in classes]
    text = catalog_to_json(funcs, cfg.out)
    if not cfg.out:
        print(text)
    else:
        print(f"wrote {len(funcs)} classes to {cfg.out}")
    for c in classes:
        print(
            f"{c.functional.name}: bound {c.functional.lhv_bound:g}, "
            f"multiplicity {c.multiplicity}, saturating rank {c.rank}"
        )


# ---------------------------------------------------------------------------
# photonics


def cmd_photonics(args, cfg: RunConfig):
    from bellforge import photonics as ph

    if args.ph_cmd == "twc":
        v = ph.twc_visibility(args.alpha, args.beta)
        _emit(cfg, {"visibility": v}, [f"visibility: {v:.10f}"])
    elif args.ph_cmd == "twc-threshold":
        thr = ph.twc_chsh_threshold()
        _emit(cfg, {"alpha_max": thr}, [f"CHSH violation for alpha < {thr:.10f}"])
    elif args.ph_cmd == "garg-mermin":
        out = ph.garg_mermin(ph.DetectionModel(args.eta, args.p_dark, args.visibility))
        _emit(cfg, out, [f"eta_crit: {out['eta_crit']:.10f}",
                         f"v_crit: {out['v_crit']:.10f}"])
    elif args.ph_cmd == "bjss-probs":
        p = ph.BJSSParams(args.alpha_sq, args.eta, args.l)
        out = ph.bjss_probs(p, args.phi_c, args.phi_d, args.method)
        _emit(cfg, out, [f"{k}: {v:.10f}" for k, v in out.items()])
    elif args.ph_cmd == "bjss-ch":
        p = ph.BJSSParams(args.alpha_sq, args.eta, args.l)
        val = ph.bjss_ch_value(p, args.variant)
        _emit(cfg, {"ch": val, "violated": val > 0},
              [f"CH ({args.variant}): {val:+.10f} ({'violated' if val > 0 else 'satisfied'})"])
    elif args.ph_cmd == "bjss-chsh":
        p = ph.BJSSParams(args.alpha_sq, args.eta, args.l)
        val = ph.bjss_chsh_value(p)
        _emit(cfg, {"chsh_margin": val, "violated": val > 0},
              [f"CHSH margin: {val:+.10f}"])
    elif args.ph_cmd == "bjss-curves":
        etas = parse_grid(args.eta_grid)
        rows = _map_rows(cfg, _bjss_curve_row, list(etas))
        rows.sort(key=lambda r: r[0])
        _emit_csv(cfg, ["eta", "l_ch_pp", "l_chsh", "l_ch_pm", "v_crit"], rows)
    elif args.ph_cmd == "bjss-roots":
        out = {c: ph.bjss_critical_eta(c) for c in ("pp", "chsh", "pm")}
        _emit(cfg, out, [f"l=1 root of {c} curve: eta = {v:.6f}" for c, v in out.items()])
    elif args.ph_cmd == "compensated":
        p = ph.BJSSParams(args.alpha_sq, args.eta, 1.0)
        out = ph.bjss_compensated(p)
        _emit(cfg, out, [f"{k}: {_fmt(v)}" for k, v in out.items()])
    elif args.ph_cmd == "hessmo":
        r = np.sqrt(args.r2)
        t = np.sqrt(1 - args.r2)
        out = ph.hessmo_probs(args.alpha, r, t, args.phase, args.eta)
        _emit(cfg, out, [f"{k}: {_fmt(v)}" for k, v in out.items()])
    else:
        raise DomainError(f"unknown photonics subcommand {args.ph_cmd!r}")


def _bjss_curve_row(eta):
    from bellforge import photonics as ph

    curves = ph.bjss_critical_curves(eta)
    vcrit = ph.garg_mermin(ph.DetectionModel(eta=eta))["v_crit"]
    return (eta, curves["l_ch_pp"], curves["l_chsh"], curves["l_ch_pm"], vcrit)


# ---------------------------------------------------------------------------
# thermal


def cmd_thermal(args, cfg: RunConfig):
    from bellforge import thermal as th

    if args.th_cmd == "thermo":
        lat = _build_model(args)
        spec = th.diagonalize(lat)
        out = th.thermo(spec, args.t)
        chi_t = (
            th.susceptibility_sum_times_t(spec, args.t)
            if lat.is_isotropic and lat.field_is_zero
            else None
        )
        payload = {"model": lat.name, "T": args.t, "U": out["U"], "C": out["C"],
                   "logZ": out["logZ"], "chiT": chi_t}
        _emit(cfg, payload,
              [f"{k}: {_fmt(v)}" for k, v in payload.items() if v is not None])
    elif args.th_cmd == "sweep":
        lat_for = lambda a: _build_model_with_a(args, a)
        avals = parse_grid(args.a_grid) if args.a_grid else [None]
        tvals = parse_grid(args.t_grid)

        def sweep_one(a):
            lat = lat_for(a)
            spec = th.diagonalize(lat)
            thr = float(sum(lat.sites))
            rows = []
            witness_ok = lat.is_isotropic and lat.field_is_zero and lat.convention == "spin"
            for t in tvals:
                out = th.thermo(spec, t)
                chi_t = (
                    th.susceptibility_sum_times_t(spec, t) if witness_ok else ""
                )
                flag = (chi_t < thr) if witness_ok else ""
                rows.append((lat.name, "" if a is None else a, t, out["U"],
                             out["C"], chi_t, thr if witness_ok else "", flag))
            return rows

        all_rows = [r for rows in _map_rows(cfg, sweep_one, list(avals)) for r in rows]
        all_rows.sort(key=lambda r: (str(r[1]), r[2]))
        _emit_csv(cfg, ["model", "a", "T", "U", "C", "chiT", "threshold", "flag"],
                  all_rows)
    elif args.th_cmd == "ising-variance":
        out = th.ising_min_variance(args.b, seed=cfg.seed)
        _emit(cfg, out, [f"{k}: {_fmt(v)}" for k, v in out.items()])
    elif args.th_cmd == "katsura-ising":
        tvals = parse_grid(args.t_grid)
        spec = th.diagonalize(th.ising_ring(args.compare_ed, +1, args.b)) if args.compare_ed else None
        rows = []
        for t in tvals:
            c_int = th.katsura_ising_c(args.b, t)
            c_ed = th.thermo(spec, t)["C"] / args.compare_ed if spec else ""
            rows.append((args.b, t, c_int, c_ed))
        _emit_csv(cfg, ["B", "T", "C_integral", "C_ed_per_site"], rows)
    elif args.th_cmd == "wz-concurrence":
        lat = th.xxx_ring(args.n, args.j, 0.5, "pauli")
        spec = th.diagonalize(lat)
        rows = []
        for t in parse_grid(args.t_grid):
            wz = th.wang_zanardi_concurrence(lat, t, spec)
            rows.append((args.n, t, wz["concurrence"], wz["tensor_formula"],
                         wz["energy_formula_afm"]))
        _emit_csv(cfg, ["n", "T", "concurrence", "tensor_formula", "energy_formula"],
                  rows)
    elif args.th_cmd == "lattice":
        with open(args.infile) as fh:
            lat = th.lattice_from_json(fh.read())
        spec = th.diagonalize(lat)
        out = th.thermo(spec, args.t)
        payload = {"dim": lat.dim, "T": args.t, "U": out["U"], "C": out["C"],
                   "ground_energy": float(spec.energies[0])}
        _emit(cfg, payload, [f"{k}: {_fmt(v)}" for k, v in payload.items()])
    else:
        raise DomainError(f"unknown thermal subcommand {args.th_cmd!r}")


def _build_model_with_a(args, a):
    ns = argparse.Namespace(**vars(args))
    if a is not None:
        ns.a = a
    return _build_model(ns)


# ---------------------------------------------------------------------------
# witness


def cmd_witness(args, cfg: RunConfig):
    from bellforge import thermal as th

    if args.w_cmd == "susceptibility":
        lat = _build_model(args)
        spec = th.diagonalize(lat)
        if args.boundary:
            lo, hi = 0.05, 50.0
            thr = float(sum(lat.sites))
            q = lambda t: th.susceptibility_sum_times_t(spec, t)
            if q(hi) < thr:
                raise DomainError("witness flags at all temperatures probed")
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                if q(mid) < thr:
                    lo = mid
                else:
                    hi = mid
            t_b = 0.5 * (lo + hi)
            _emit(cfg, {"model": lat.name, "boundary_T": t_b},
                  [f"flag boundary temperature: {t_b:.6f}"])
            return
        rep = th.witness_susceptibility(lat, args.t, spec)
        _emit(cfg, rep.__dict__, [
            f"quantity T*(chi1+chi2+chi3): {rep.quantity:.8f}",
            f"threshold sum l_i: {rep.threshold:g}",
            f"entangled: {rep.entangled}",
        ])
    elif args.w_cmd == "energy":
        lat = _build_model(args)
        rep = th.witness_energy(lat, args.t, args.level)
        _emit(cfg, rep.__dict__, [
            f"per-site neighbor correlation: {rep.quantity:.8f}",
            f"threshold: {rep.threshold:g} ({args.level})",
            f"entangled: {rep.entangled}",
        ])
    elif args.w_cmd == "heat-capacity":
        cls = th.HeatCapacityClass(
            kind=args.kind, e_bound=args.e_bound, u0=args.u0,
            gamma=args.gamma, delta_gap=args.delta,
        )
        rep = th.witness_heat_capacity(cls, args.c, args.t)
        _emit(cfg, rep.__dict__, [
            f"C: {rep.quantity:g}  threshold: {rep.threshold:.8f}",
            f"entangled: {rep.entangled}",
        ])
    elif args.w_cmd == "bvz-dimer":
        lat = th.dimer_chain(args.n, args.j, args.j2)
        spec = th.diagonalize(lat)
        chi = th.dimer_chi_per_spin(lat, args.t, spec)
        rep = th.witness_bvz_dimer(chi, args.t)
        _emit(cfg, rep.__dict__, [
            f"chi per spin (one direction): {rep.quantity:.8f}",
            f"threshold 1/(6T): {rep.threshold:.8f}",
            f"entangled: {rep.entangled}",
        ])
    else:
        raise DomainError(f"unknown witness subcommand {args.w_cmd!r}")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # global options are accepted both before and after the subcommand; the
    # leaf copies use SUPPRESS defaults so they never clobber earlier values
    common = argparse.ArgumentParser(add_help=False)
    for name, kw in (
        ("--format", {"choices": ("text", "json")}),
        ("--out", {}),
        ("--seed", {"type": int}),
        ("--restarts", {"type": int}),
    ):
        common.add_argument(name, default=argparse.SUPPRESS, **kw)

    ap = argparse.ArgumentParser(prog="bellforge")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--out", default=None)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--restarts", type=int, default=64)
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bell")
    bs = b.add_subparsers(dest="bell_cmd", required=True)
    p = bs.add_parser("chsh", parents=[common])
    p.add_argument("--state", default="singlet")
    p.add_argument("--visibility", type=float, default=1.0)
    p = bs.add_parser("value", parents=[common])
    p.add_argument("--name", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--visibility", type=float, default=1.0)
    p = bs.add_parser("lhv", parents=[common])
    p.add_argument("--name", default=None)
    p = bs.add_parser("avn", parents=[common])
    p.add_argument("--n", type=int, default=3)
    p = bs.add_parser("wwwzb-max", parents=[common])
    p.add_argument("--state", default="w3")
    p.add_argument("--visibility", type=float, default=1.0)
    p = bs.add_parser("condition", parents=[common])
    p.add_argument("--which", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--visibility", type=float, default=1.0)
    p = bs.add_parser("rotinv-critical", parents=[common])
    p.add_argument("--n", type=int, required=True)

    g = sub.add_parser("generate", parents=[common])
    g.add_argument("--parties", type=int, choices=(2, 3), required=True)

    f = sub.add_parser("photonics")
    fs = f.add_subparsers(dest="ph_cmd", required=True)
    p = fs.add_parser("twc", parents=[common])
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, default=None)
    fs.add_parser("twc-threshold", parents=[common])
    p = fs.add_parser("garg-mermin", parents=[common])
    p.add_argument("--eta", type=float, default=1.0)
    p.add_argument("--p-dark", dest="p_dark", type=float, default=0.0)
    p.add_argument("--visibility", type=float, default=1.0)
    for name in ("bjss-probs", "bjss-ch", "bjss-chsh", "compensated"):
        p = fs.add_parser(name, parents=[common])
        p.add_argument("--alpha-sq", dest="alpha_sq", type=float, default=400.0)
        p.add_argument("--eta", type=float, required=True)
        p.add_argument("--l", type=float, default=1.0)
        if name == "bjss-probs":
            p.add_argument("--phi-c", dest="phi_c", type=float, default=0.0)
            p.add_argument("--phi-d", dest="phi_d", type=float, default=0.0)
            p.add_argument("--method", choices=("exact", "approx"), default="exact")
        if name == "bjss-ch":
            p.add_argument("--variant", choices=("plus_only", "plus_minus"),
                           default="plus_only")
    p = fs.add_parser("bjss-curves", parents=[common])
    p.add_argument("--eta-grid", dest="eta_grid", required=True)
    fs.add_parser("bjss-roots", parents=[common])
    p = fs.add_parser("hessmo", parents=[common])
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--r2", type=float, required=True)
    p.add_argument("--phase", type=float, default=0.0)
    p.add_argument("--eta", type=float, default=1.0)

    t = sub.add_parser("thermal")
    ts = t.add_subparsers(dest="th_cmd", required=True)

    def add_model_opts(p):
        p.add_argument("--model", required=True)
        p.add_argument("--n", type=int, default=8)
        p.add_argument("--l", type=float, default=0.5)
        p.add_argument("--j", type=float, default=1.0)
        p.add_argument("--j2", type=float, default=0.0)
        p.add_argument("--j3", type=float, default=0.0)
        p.add_argument("--b", type=float, default=0.0)
        p.add_argument("--a", type=float, default=0.0)
        p.add_argument("--convention", choices=("spin", "pauli"), default="pauli")

    p = ts.add_parser("thermo", parents=[common])
    add_model_opts(p)
    p.add_argument("--t", type=float, required=True)
    p = ts.add_parser("sweep", parents=[common])
    add_model_opts(p)
    p.add_argument("--a-grid", dest="a_grid", default=None)
    p.add_argument("--t-grid", dest="t_grid", required=True)
    p = ts.add_parser("ising-variance", parents=[common])
    p.add_argument("--b", type=float, required=True)
    p = ts.add_parser("katsura-ising", parents=[common])
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--t-grid", dest="t_grid", required=True)
    p.add_argument("--compare-ed", dest="compare_ed", type=int, default=0)
    p = ts.add_parser("wz-concurrence", parents=[common])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--j", type=float, default=1.0)
    p.add_argument("--t-grid", dest="t_grid", required=True)
    p = ts.add_parser("lattice", parents=[common])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--t", type=float, required=True)

    w = sub.add_parser("witness")
    ws = w.add_subparsers(dest="w_cmd", required=True)
    p = ws.add_parser("susceptibility", parents=[common])
    add_model_opts(p)
    p.set_defaults(convention="spin")
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--boundary", action="store_true")
    p = ws.add_parser("energy", parents=[common])
    add_model_opts(p)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--level", choices=("bipartite", "tripartite", "bifactorisable"),
                   default="bipartite")
    p = ws.add_parser("heat-capacity", parents=[common])
    p.add_argument("--kind", choices=("gapless", "gapped"), required=True)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--e-bound", dest="e_bound", type=float, required=True)
    p.add_argument("--u0", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p = ws.add_parser("bvz-dimer", parents=[common])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--j", type=float, default=1.0)
    p.add_argument("--j2", type=float, default=0.0)
    p.add_argument("--t", type=float, required=True)
    return ap


COMMANDS = {
    "bell": cmd_bell,
    "generate": cmd_generate,
    "photonics": cmd_photonics,
    "thermal": cmd_thermal,
    "witness": cmd_witness,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    cfg = RunConfig(
        format=args.format,
        out=getattr(args, "out", None),
        seed=args.seed,
        restarts=args.restarts,
        threads=int(os.environ.get("BELLFORGE_THREADS", "1")),
    )
    try:
        COMMANDS[args.command](args, cfg)
    except (BellforgeError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: machine-readable tables for every quantity.

Subcommands mirror the library surface (potential, charge-density,
spectrum, wavefunction, sturmian, green, smatrix, reflection,
su11-check, validate).  Output is CSV with a '#'-prefixed metadata
header or a JSON mirror of the same schema, always with 15 significant
digits and no environment dependence, so identical configs produce
byte-identical files.  `validate` runs a small oracle cross-check
suite and exits non-zero on any failure.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import __version__
from .errors import GenCoulombError, ParseError
from .params import PotentialParams, h_of_r, r_of_h, validate as validate_params

_FMT = "{:.15g}"


@dataclass
class RunConfig:
    """Resolved run configuration; file values are overridden by flags."""

    command: str = "validate"
    C: float = 1.0
    theta: float = 1.0
    q: float = 1.0
    beta: float = 1.5
    D: int = 3
    l: int = 0
    rho: float | None = None
    kmin: float = 0.01
    kmax: float = 100.0
    rmin: float = 0.001
    rmax: float = 20.0
    points: int = 200
    spacing: str = "log"
    format: str = "csv"
    out: str | None = None
    n: int = 0
    count: int = 4
    size: int = 20
    epsilonre: float = -0.3
    epsilonim: float = 0.1
    prefactor: float = 1.0

    def params(self) -> PotentialParams:
        return validate_params(self.C, self.theta, self.q, self.beta, self.D, self.l)

    def rho_value(self) -> float:
        # default basis scale: C^{1/2} rho / 2 = 1
        return self.rho if self.rho is not None else 2.0 / math.sqrt(self.C)

    def to_dict(self) -> dict:
        return asdict(self)


_FIELD_TYPES = {f.name: f for f in fields(RunConfig)}
_FLOAT_KEYS = {"C", "theta", "q", "beta", "kmin", "kmax", "rmin", "rmax",
               "epsilonre", "epsilonim", "prefactor", "rho"}
_INT_KEYS = {"D", "l", "points", "n", "count", "size"}
_STR_KEYS = {"command", "spacing", "format", "out"}


def load_config(path: str) -> dict:
    """Parse a flat JSON config file (keys = flag names without dashes).

    Raises ParseError with a field-level diagnostic on any problem.
    """
    if not os.path.exists(path):
        raise ParseError(f"config file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise ParseError(f"{path}: top level must be a JSON object")
    out = {}
    for key, value in raw.items():
        if key not in _FIELD_TYPES:
            raise ParseError(f"{path}: unknown config key {key!r}")
        try:
            if key in _FLOAT_KEYS:
                out[key] = None if value is None else float(value)
            elif key in _INT_KEYS:
                out[key] = int(value)
            else:
                out[key] = None if value is None else str(value)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"{path}: field {key!r}: cannot coerce {value!r}") from exc
    return out


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("model parameters")
    g.add_argument("--C", type=float, default=None, help="scale parameter C > 0")
    g.add_argument("--theta", type=float, default=None, help="deformation theta >= 0")
    g.add_argument("--q", type=float, default=None, help="Coulomb strength q")
    g.add_argument("--beta", type=float, default=None, help="singularity parameter beta > 0")
    g.add_argument("--D", type=int, default=None, help="spatial dimension (>= 1)")
    g.add_argument("--l", type=int, default=None, help="angular momentum (>= 0)")
    g.add_argument("--rho", type=float, default=None, help="GCS basis scale (default 2/sqrt(C))")
    h = common.add_argument_group("grids and output")
    h.add_argument("--k-min", dest="kmin", type=float, default=None)
    h.add_argument("--k-max", dest="kmax", type=float, default=None)
    h.add_argument("--r-min", dest="rmin", type=float, default=None)
    h.add_argument("--r-max", dest="rmax", type=float, default=None)
    h.add_argument("--points", type=int, default=None)
    h.add_argument("--spacing", choices=("linear", "log"), default=None)
    h.add_argument("--format", choices=("csv", "json"), default=None)
    h.add_argument("--out", default=None, help="output path (stdout when omitted)")
    h.add_argument("--config", default=None, help="JSON config file; flags override it")
    h.add_argument("--emit-config", default=None, metavar="PATH",
                   help="write the resolved configuration to PATH as JSON")
    h.add_argument("--n", type=int, default=None, help="state/basis index")
    h.add_argument("--count", type=int, default=None, help="number of states")
    h.add_argument("--size", type=int, default=None, help="Green block size")
    h.add_argument("--epsilon-re", dest="epsilonre", type=float, default=None)
    h.add_argument("--epsilon-im", dest="epsilonim", type=float, default=None)
    h.add_argument("--prefactor", type=float, default=None)

    parser = argparse.ArgumentParser(
        prog="gencoulomb",
        description="Generalized Coulomb potential toolkit (tables out, no plots)",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, desc in [
        ("potential", "v(r), or v(x) for D = 1"),
        ("charge-density", "charge density generating v (D=3, l=0, beta in {1/2,3/2})"),
        ("spectrum", "bound-state scales and energies"),
        ("wavefunction", "normalized bound-state wavefunction"),
        ("sturmian", "GCS basis function on a radial grid"),
        ("green", "Green's operator block by continued fractions"),
        ("smatrix", "l = 0 S-matrix over a momentum grid"),
        ("reflection", "1D reflection coefficient over a momentum grid"),
        ("su11-check", "SU(1,1) ladder/commutator/Casimir defects"),
        ("validate", "oracle cross-check suite (pass/fail table)"),
    ]:
        sub.add_parser(name, parents=[common], help=desc)
    return parser


def _resolve(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if args.config:
        for key, value in load_config(args.config).items():
            if key == "command":
                continue
            setattr(cfg, key, value)
    for f in fields(RunConfig):
        if f.name == "command":
            continue
        flag_val = getattr(args, f.name, None)
        if flag_val is not None:
            setattr(cfg, f.name, flag_val)
    if cfg.spacing not in ("linear", "log"):
        raise ParseError(f"spacing must be linear or log, got {cfg.spacing!r}")
    if cfg.format not in ("csv", "json"):
        raise ParseError(f"format must be csv or json, got {cfg.format!r}")
    return cfg


def _radial_grid(cfg: RunConfig) -> np.ndarray:
    if cfg.points < 2:
        raise ParseError("points must be >= 2")
    if cfg.spacing == "log":
        if cfg.rmin <= 0:
            raise ParseError("log spacing requires r-min > 0")
        return np.geomspace(cfg.rmin, cfg.rmax, cfg.points)
    return np.linspace(cfg.rmin, cfg.rmax, cfg.points)


def _momentum_grid(cfg: RunConfig) -> np.ndarray:
    if cfg.spacing == "log":
        if cfg.kmin <= 0:
            raise ParseError("log spacing requires k-min > 0")
        return np.geomspace(cfg.kmin, cfg.kmax, cfg.points)
    return np.linspace(cfg.kmin, cfg.kmax, cfg.points)


def _meta(cfg: RunConfig) -> list[tuple[str, str]]:
    pairs = [("version", __version__)]
    for key, value in cfg.to_dict().items():
        if value is None:
            pairs.append((key, ""))
        elif isinstance(value, float):
            pairs.append((key, _FMT.format(value)))
        else:
            pairs.append((key, str(value)))
    return pairs


def _render(cfg: RunConfig, columns: list[str], rows: list[list], extra_meta=()) -> str:
    meta = _meta(cfg) + list(extra_meta)

    def cell(x):
        if isinstance(x, str):
            return x
        if isinstance(x, (int, np.integer)):
            return str(int(x))
        return _FMT.format(float(x))

    if cfg.format == "csv":
        buf = io.StringIO()
        for key, value in meta:
            buf.write(f"# {key}: {value}\r\n")
        buf.write(",".join(columns) + "\r\n")
        for row in rows:
            buf.write(",".join(cell(x) for x in row) + "\r\n")
        return buf.getvalue()
    payload = {
        "meta": {k: v for k, v in meta},
        "columns": columns,
        "rows": [[cell(x) for x in row] for row in rows],
    }
    return json.dumps(payload, indent=1, sort_keys=True) + "\n"


def _write(cfg: RunConfig, text: str) -> None:
    if cfg.out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(cfg.out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".gencoulomb-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, cfg.out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# subcommand implementations


def _cmd_potential(cfg: RunConfig) -> str:
    from .potential import make_profile

    params = cfg.params()
    if cfg.D == 1:
        if cfg.spacing == "linear":
            grid = np.linspace(-cfg.rmax, cfg.rmax, cfg.points)
        else:
            half = np.geomspace(cfg.rmin, cfg.rmax, max(cfg.points // 2, 2))
            grid = np.concatenate([-half[::-1], half])
        profile = make_profile(params, grid, variant="one_dimensional")
        return _render(cfg, ["x", "v"], [[x, val] for x, val in zip(profile.grid, profile.values)])
    profile = make_profile(params, _radial_grid(cfg), variant="radial")
    return _render(cfg, ["r", "v"], [[r, val] for r, val in zip(profile.grid, profile.values)])


def _cmd_charge_density(cfg: RunConfig) -> str:
    from .potential import charge_density

    params = cfg.params()
    grid = _radial_grid(cfg)
    rows = [[r, charge_density(r, params, cfg.prefactor)] for r in grid]
    return _render(cfg, ["r", "density"], rows)


def _cmd_spectrum(cfg: RunConfig) -> str:
    from .spectrum import energy, energy_tilde, rho_n

    params = cfg.params()
    shifted = params.theta > 0.0
    columns = ["n", "rho_n", "epsilon_n"] + (["epsilon_shifted"] if shifted else [])
    rows = []
    for n in range(cfg.count):
        row = [n, rho_n(n, params), energy(n, params)]
        if shifted:
            row.append(energy_tilde(n, params))
        rows.append(row)
    return _render(cfg, columns, rows)


def _cmd_wavefunction(cfg: RunConfig) -> str:
    from .spectrum import one_d_state, wavefunction

    params = cfg.params()
    if cfg.D == 1:
        state = one_d_state(cfg.n, params)
        if cfg.spacing == "linear":
            grid = np.linspace(-cfg.rmax, cfg.rmax, cfg.points)
        else:
            half = np.geomspace(cfg.rmin, cfg.rmax, max(cfg.points // 2, 2))
            grid = np.concatenate([-half[::-1], half])
        rows = [[x, val] for x, val in zip(grid, state(grid))]
        extra = [("parity", state.parity), ("rho_tilde", _FMT.format(state.rho_tilde)),
                 ("energy", _FMT.format(state.energy))]
        return _render(cfg, ["x", "psi"], rows, extra)
    state = wavefunction(cfg.n, params)
    grid = _radial_grid(cfg)
    rows = [[r, val] for r, val in zip(grid, state(grid))]
    extra = [("rho_n", _FMT.format(state.rho)), ("epsilon_n", _FMT.format(state.epsilon))]
    return _render(cfg, ["r", "psi"], rows, extra)


def _cmd_sturmian(cfg: RunConfig) -> str:
    from .sturmian import SturmianSpec, gcs, weight

    params = cfg.params()
    spec = SturmianSpec(rho=cfg.rho_value(), beta=cfg.beta, params=params)
    grid = _radial_grid(cfg)
    phi = gcs(cfg.n, spec, grid)
    w = weight(spec, grid)
    rows = [[r, p, wi] for r, p, wi in zip(grid, phi, w)]
    return _render(cfg, ["r", "phi", "weight"], rows)


def _cmd_green(cfg: RunConfig) -> str:
    from .jgreen import green_block
    from .sturmian import SturmianSpec

    params = cfg.params()
    spec = SturmianSpec(rho=cfg.rho_value(), beta=cfg.beta, params=params)
    eps = complex(cfg.epsilonre, cfg.epsilonim)
    block = green_block(eps, spec, params.q, cfg.size)
    rows = [
        [n, m, block.entries[n, m].real, block.entries[n, m].imag]
        for n in range(cfg.size)
        for m in range(cfg.size)
    ]
    extra = [("residual", _FMT.format(block.residual))]
    return _render(cfg, ["n", "m", "re_G", "im_G"], rows, extra)


def _cmd_smatrix(cfg: RunConfig) -> str:
    from .scattering import s_matrix

    params = cfg.params()
    rows = []
    for k in _momentum_grid(cfg):
        s = s_matrix(float(k), params)
        rows.append([k, s.real, s.imag, abs(s), math.atan2(s.imag, s.real)])
    return _render(cfg, ["k", "re_S", "im_S", "mod_S", "phase"], rows)


def _cmd_reflection(cfg: RunConfig) -> str:
    from .scattering import reflection

    params = validate_params(cfg.C, cfg.theta, cfg.q, cfg.beta, 1, 0)
    rows = []
    for k in _momentum_grid(cfg):
        r = reflection(float(k), params)
        rows.append([k, r.real, r.imag, abs(r) ** 2])
    return _render(cfg, ["k", "re_R", "im_R", "mod_R_squared"], rows)


def _cmd_su11(cfg: RunConfig) -> str:
    from .sturmian import SturmianSpec
    from .su11 import build_generators, casimir_check, commutator_check, ladder_check

    params = cfg.params()
    spec = SturmianSpec(rho=cfg.rho_value(), beta=cfg.beta, params=params)
    gen = build_generators(spec)
    rows = []
    for n in range(min(cfg.count, 6)):
        rows.append([f"ladder_n{n}", ladder_check(n, spec, gen)])
    d12, d23, d31 = commutator_check(spec, gen)
    rows += [["commutator_12_3", d12], ["commutator_23_1", d23], ["commutator_31_2", d31]]
    for n in range(min(cfg.count, 4)):
        rows.append([f"casimir_n{n}", casimir_check(n, spec, gen)])
    return _render(cfg, ["check", "defect"], rows)


def _validate_checks(cfg: RunConfig):
    """The oracle cross-check preset: (name, metric, bound, passed) rows."""
    from .jgreen import green00, green_block, truncated_inverse
    from .oracle import numerov_eigenvalues, quadrature
    from .potential import v
    from .scattering import reflection, s_matrix
    from .spectrum import energy
    from .sturmian import SturmianSpec, gcs, weight

    checks = []

    def add(name, metric, bound):
        checks.append((name, metric, bound, metric <= bound))

    params = validate_params(1.0, 1.0, 2.0, 1.5, 3, 0)

    radii = np.geomspace(1e-4, 1e4, 201)
    err = 0.0
    for r in radii:
        err = max(err, abs(r_of_h(h_of_r(float(r), params).h, params) - r) / r)
    add("coordinate-map-round-trip", err, 1e-12)

    err = 0.0
    for r in (0.1, 1.0, 7.0):
        pt = h_of_r(r, params)
        fd = (h_of_r(r + 1e-6 * r, params).h - h_of_r(r - 1e-6 * r, params).h) / (2e-6 * r)
        err = max(err, abs(pt.dh_dr - fd) / abs(fd))
    add("map-derivative-vs-fd", err, 1e-6)

    result = numerov_eigenvalues(lambda r: v(r, params), (1e-5, 80.0), 3, points=3000)
    err = max(
        abs(e_num - energy(n, params)) / abs(energy(n, params))
        for n, e_num in enumerate(result.energies)
    )
    add("spectrum-vs-numerov", err, 1e-6)

    spec = SturmianSpec(rho=1.0, beta=1.5, params=params)
    err = 0.0
    for n in range(6):
        for m in range(n, 6):
            val, _ = quadrature(
                lambda r: gcs(n, spec, r) * gcs(m, spec, r) * weight(spec, r), 0.0, np.inf,
                tol=1e-11,
            )
            err = max(err, abs(val - (1.0 if n == m else 0.0)))
    add("gcs-orthonormality", err, 1e-8)

    eps = complex(-0.3, 0.1)
    g_cf = green00(eps, spec, params.q)
    g_tr = truncated_inverse(eps, spec, params.q, 200)[0, 0]
    add("green00-cf-vs-truncated", abs(g_cf - g_tr), 1e-8)

    block = green_block(eps, spec, params.q, 12)
    add("green-block-residual", block.residual, 1e-8)

    err = max(abs(abs(s_matrix(float(k), params)) - 1.0) for k in np.geomspace(0.01, 100.0, 41))
    add("smatrix-unit-modulus", err, 1e-12)

    params1d = validate_params(1.0, 1.0, 2.5, 1.5, 1, 0)
    err = 0.0
    for k in (0.5, 2.0, 31.0):
        partner = params1d.q / (params1d.theta * k)
        err = max(err, abs(reflection(k, params1d) - reflection(partner, params1d)))
    add("reflection-nu-symmetry", err, 1e-12)

    return checks


def _cmd_validate(cfg: RunConfig) -> tuple[str, bool]:
    checks = _validate_checks(cfg)
    rows = [
        [name, _FMT.format(metric), _FMT.format(bound), "PASS" if ok else "FAIL"]
        for name, metric, bound, ok in checks
    ]
    text = _render(cfg, ["check", "metric", "bound", "status"], rows)
    return text, all(ok for _, _, _, ok in checks)


_COMMANDS = {
    "potential": _cmd_potential,
    "charge-density": _cmd_charge_density,
    "spectrum": _cmd_spectrum,
    "wavefunction": _cmd_wavefunction,
    "sturmian": _cmd_sturmian,
    "green": _cmd_green,
    "smatrix": _cmd_smatrix,
    "reflection": _cmd_reflection,
    "su11-check": _cmd_su11,
}


def run(cfg: RunConfig) -> int:
    """Execute a resolved configuration; returns the process exit status."""
    try:
        if cfg.command == "validate":
            text, ok = _cmd_validate(cfg)
            _write(cfg, text)
            return 0 if ok else 1
        text = _COMMANDS[cfg.command](cfg)
        _write(cfg, text)
        return 0
    except ParseError:
        raise
    except GenCoulombError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve(args)
        cfg.params()  # parameter constraints are config validation: exit 1
        if args.emit_config:
            with open(args.emit_config, "w", encoding="utf-8") as fh:
                json.dump(cfg.to_dict(), fh, indent=1, sort_keys=True)
                fh.write("\n")
        return run(cfg)
    except ParseError as exc:
        sys.stderr.write(f"error: ParseError: {exc}\n")
        return 1
    except GenCoulombError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

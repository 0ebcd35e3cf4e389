"""Command-line front end: ``ncbell verify | sweep | wigner``.

Exit codes: 0 success, 1 a verification check failed, 2 usage, config or
I/O error.  Relative output paths are resolved against ``NCBELL_OUTPUT_DIR``
when it is set.
"""

import argparse
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import math
import os
import sys
import tempfile

import numpy as np

from ncbell import _kernels
from ncbell.bell import evaluate
from ncbell.gaussian import GaussianState
from ncbell.oracle import DEFAULT_STEPS
from ncbell.phase_space import COORDS, NCParams
from ncbell.squeezing import R_MAX, SqueezeSpec, inv_cov_params, nc_covariance
from ncbell.verify import DEFAULT_PAIRS, run_checks

SWEEP_HEADER = ("r", "theta", "eta", "n", "m", "d", "c", "t1", "t2",
                "i_opt", "b_opt", "b_comm", "gap", "nonlocal")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    r_min: float = 0.05
    r_max: float = 2.0
    r_steps: int = 40
    theta_eta_pairs: tuple = DEFAULT_PAIRS
    ode_steps: int = DEFAULT_STEPS
    tolerance: float = 1e-6
    output_path: str = "sweep.csv"

    def validate(self):
        if not (math.isfinite(self.r_min) and math.isfinite(self.r_max)):
            raise ConfigError("r bounds must be finite")
        if self.r_min < 0 or self.r_max > R_MAX or self.r_min > self.r_max:
            raise ConfigError(f"need 0 <= r_min <= r_max <= {R_MAX:g}")
        if self.r_steps < 1:
            raise ConfigError("r_steps must be >= 1")
        if self.ode_steps < 1:
            raise ConfigError("ode_steps must be >= 1")
        if not self.tolerance > 0:
            raise ConfigError("tolerance must be > 0")
        if not self.theta_eta_pairs:
            raise ConfigError("at least one theta:eta pair is required")
        for th, et in self.theta_eta_pairs:
            try:
                NCParams(th, et)
            except ValueError as exc:
                raise ConfigError(f"pair {th}:{et}: {exc}") from None
        return self

    def r_grid(self):
        if self.r_steps == 1:
            return [self.r_min]
        return [float(v) for v in np.linspace(self.r_min, self.r_max, self.r_steps)]


def parse_pairs(text):
    pairs = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            th, et = item.split(":")
            pairs.append((float(th), float(et)))
        except ValueError:
            raise ConfigError(f"bad pair {item!r}; expected theta:eta") from None
    return tuple(pairs)


_CONFIG_KEYS = {
    "r_min": ("r_min", float),
    "r_max": ("r_max", float),
    "r_steps": ("r_steps", int),
    "pairs": ("theta_eta_pairs", parse_pairs),
    "ode_steps": ("ode_steps", int),
    "tol": ("tolerance", float),
    "tolerance": ("tolerance", float),
    "out": ("output_path", str),
}


def read_config_file(path):
    """Flat ``key = value`` file; ``#`` starts a comment."""
    values = {}
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = val
    return values


def build_config(args):
    raw = read_config_file(args.config) if args.config else {}
    for key in _CONFIG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            raw[key] = val
    kwargs = {}
    for key, val in raw.items():
        field, conv = _CONFIG_KEYS[key]
        try:
            kwargs[field] = conv(val) if isinstance(val, str) else val
        except ValueError:
            raise ConfigError(f"bad value for {key}: {val!r}") from None
    return SweepConfig(**kwargs).validate()


def resolve_output(path):
    base = os.environ.get("NCBELL_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    return format(float(v), ".17g")


def write_csv_atomic(path, header, rows):
    """Write rows to ``path`` via a temporary file and rename."""
    path = resolve_output(path)
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ncbell-", suffix=".csv")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from None
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(fmt(v) for v in row) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def sweep_row(r, theta, eta):
    p = NCParams(theta, eta)
    icp = inv_cov_params(r, p)
    res = evaluate(r, p)
    return (r, theta, eta, *icp.as_tuple(), res.i_opt, res.b_opt, res.b_commutative, res.gap, res.nonlocal_)


def sweep_rows(config, jobs=1):
    points = [(r, th, et) for r in config.r_grid() for th, et in config.theta_eta_pairs]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda a: sweep_row(*a), points))
    return [sweep_row(*a) for a in points]


def wigner_rows(spec, p, axes, extent, samples):
    if samples < 2:
        raise ConfigError("samples must be >= 2")
    if not extent > 0:
        raise ConfigError("extent must be > 0")
    if len(axes) != 2 or axes[0] == axes[1] or any(a not in COORDS for a in axes):
        raise ConfigError(f"axes must name two distinct coordinates from {', '.join(COORDS)}")
    state = GaussianState.centered(nc_covariance(spec, p))
    ticks = np.linspace(-extent, extent, samples)
    u, v = np.meshgrid(ticks, ticks, indexing="ij")
    pts = np.zeros((u.size, 4))
    pts[:, COORDS.index(axes[0])] = u.ravel()
    pts[:, COORDS.index(axes[1])] = v.ravel()
    w = state.wigner_many(pts)
    return list(zip(u.ravel(), v.ravel(), w))


def _add_config_flags(sp):
    sp.add_argument("--config", help="flat key = value config file")
    sp.add_argument("--r-min", dest="r_min", type=float)
    sp.add_argument("--r-max", dest="r_max", type=float)
    sp.add_argument("--r-steps", dest="r_steps", type=int)
    sp.add_argument("--pairs", help='theta:eta[,theta:eta...]')
    sp.add_argument("--ode-steps", dest="ode_steps", type=int)
    sp.add_argument("--tol", type=float)
    sp.add_argument("--out")
    sp.add_argument("--jobs", type=int, default=1)


def make_parser():
    parser = argparse.ArgumentParser(prog="ncbell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="run the invariant suite")
    _add_config_flags(sp)

    sp = sub.add_parser("sweep", help="write the Bell sweep CSV")
    _add_config_flags(sp)

    sp = sub.add_parser("wigner", help="write a 2D Wigner slice CSV")
    sp.add_argument("--r", type=float, required=True)
    sp.add_argument("--theta", type=float, default=0.0)
    sp.add_argument("--eta", type=float, default=0.0)
    sp.add_argument("--axes", default="x,y", help="two of x,px,y,py")
    sp.add_argument("--extent", type=float, default=3.0)
    sp.add_argument("--samples", type=int, default=101)
    sp.add_argument("--out", default="wigner.csv")
    return parser


def cmd_verify(config, out=None):
    out = out or sys.stdout
    r_grid = config.r_grid()
    checks = run_checks(r_grid, config.theta_eta_pairs, config.ode_steps, config.tolerance)
    width = max(len(c.name) for c in checks)
    print(f"backend: {_kernels.BACKEND}", file=out)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status}  {c.name:<{width}}  residual={c.residual:.3e}  bound={c.bound:.1e}", file=out)
    failed = [c.name for c in checks if not c.passed]
    if failed:
        print(f"failed: {', '.join(failed)}", file=out)
        return 1
    print("all checks passed", file=out)
    return 0


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "wigner":
            axes = tuple(a.strip() for a in args.axes.split(","))
            rows = wigner_rows(SqueezeSpec(args.r), NCParams(args.theta, args.eta), axes, args.extent, args.samples)
            path = write_csv_atomic(args.out, (*axes, "w"), rows)
            print(path)
            return 0
        if args.jobs < 1:
            raise ConfigError("jobs must be >= 1")
        config = build_config(args)
        if args.command == "verify":
            return cmd_verify(config)
        rows = sweep_rows(config, args.jobs)
        print(write_csv_atomic(config.output_path, SWEEP_HEADER, rows))
        return 0
    except (ValueError, OSError) as exc:
        print(f"ncbell: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

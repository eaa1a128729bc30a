"""Command line front end: config files, figure presets, CSV emission.

Scenario configs are flat ``key = value`` text with ``#`` comments.  The
``reproduce`` subcommand writes one CSV per gain/loss value of a named
preset plus a manifest whose sections are themselves valid configs, so any
emitted file can be regenerated with ``triodot sweep --config``.

Exit codes: 0 success, 1 usage or config-syntax error, 2 domain error
(energy window outside the lead band, invalid parameter values, I/O).
"""

from __future__ import annotations

import argparse
import math
import os
import sys as _sys
from dataclasses import dataclass, fields, replace

import numpy as np

from .leads import OutOfBand
from .model import LeadAttachment, build_chain, build_ring
from .spectra import detect_phase_jumps, find_zeros, sweep

__all__ = [
    "ConfigError",
    "ScenarioConfig",
    "Preset",
    "PRESETS",
    "CSV_HEADER",
    "main",
]

CSV_HEADER = "omega,T,re_tau,im_tau,phase,T11,T13,T31,T33,singular"


class ConfigError(ValueError):
    """Malformed scenario config text."""


class _UsageError(Exception):
    pass


@dataclass(frozen=True)
class ScenarioConfig:
    """One sweep scenario; defaults follow the t0 = 1, E0 = 0 convention."""

    geometry: str
    t0: float = 1.0
    E0: float = 0.0
    gamma: float = 0.0
    E2: float = 0.0
    tc: float = 0.5
    t3: float = 0.0
    v1: float = 0.0
    v2: float = 0.0
    omega_min: float = -2.0
    omega_max: float = 2.0
    n_points: int = 2001

    def __post_init__(self):
        if self.geometry not in ("chain", "ring"):
            raise ConfigError(
                f"geometry must be 'chain' or 'ring', got {self.geometry!r}"
            )
        if self.geometry == "chain" and self.t3 != 0.0:
            raise ConfigError(f"chain geometry requires t3 = 0, got t3 = {self.t3}")

    @classmethod
    def from_text(cls, text: str, source: str = "<config>") -> "ScenarioConfig":
        keys = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{source}:{lineno}: expected 'key = value': {raw!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key in keys:
                raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
            keys[key] = (lineno, value)

        if "geometry" not in keys:
            raise ConfigError(f"{source}: missing required key 'geometry'")

        converted = {}
        for f in fields(cls):
            if f.name not in keys:
                continue
            lineno, value = keys.pop(f.name)
            if f.name == "geometry":
                converted[f.name] = value
                continue
            try:
                parsed = int(value) if f.name == "n_points" else float(value)
            except ValueError:
                raise ConfigError(
                    f"{source}:{lineno}: invalid value for {f.name}: {value!r}"
                ) from None
            if f.name != "n_points" and not math.isfinite(parsed):
                raise ConfigError(f"{source}:{lineno}: {f.name} must be finite")
            converted[f.name] = parsed
        if keys:
            name, (lineno, _) = next(iter(keys.items()))
            raise ConfigError(f"{source}:{lineno}: unknown key {name!r}")
        return cls(**converted)

    @classmethod
    def from_file(cls, path: str) -> "ScenarioConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_text(fh.read(), source=path)

    def to_config_text(self) -> str:
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "geometry":
                lines.append(f"geometry = {value}")
            elif f.name == "n_points":
                lines.append(f"n_points = {value}")
            else:
                lines.append(f"{f.name} = {_fmt(value)}")
        return "\n".join(lines) + "\n"

    def build(self):
        if self.geometry == "chain":
            system = build_chain(self.E0, self.gamma, self.E2, self.tc)
        else:
            system = build_ring(self.E0, self.gamma, self.E2, self.tc, self.t3)
        return system, LeadAttachment.symmetric(self.t0, self.v1, self.v2)

    def run_sweep(self):
        system, leads = self.build()
        return sweep(system, leads, self.omega_min, self.omega_max, self.n_points)


@dataclass(frozen=True)
class Preset:
    """Figure scenario bundling the gain/loss values of one published panel."""

    config: ScenarioConfig
    gammas: tuple
    kind: str = "sweep"


def _chain(v1, v2, E2, gammas, kind="sweep"):
    return Preset(
        config=ScenarioConfig(geometry="chain", v1=v1, v2=v2, E2=E2),
        gammas=gammas,
        kind=kind,
    )


def _ring(v1, v2, E2, t3, gammas, kind="sweep"):
    return Preset(
        config=ScenarioConfig(geometry="ring", v1=v1, v2=v2, E2=E2, t3=t3),
        gammas=gammas,
        kind=kind,
    )


_G4 = (0.0, 0.1, 0.3, 0.5)
_G5 = (0.0, 0.1, 0.3, 0.5, 0.8)

PRESETS = {
    "fig2a": _chain(0.0, 0.5, 0.0, _G5),
    "fig2b": _chain(0.0, 0.5, 0.5, _G5),
    "fig2c": _chain(0.5, 0.0, 0.0, _G4),
    "fig2d": _chain(0.5, 0.0, 0.5, _G4),
    "fig3a": _chain(0.5, 0.5, 0.0, _G4),
    "fig3b": _chain(0.5, 0.5, 0.5, _G5),
    "fig4a": _ring(0.0, 0.5, 0.5, 0.3, _G4),
    "fig4b": _ring(0.0, 0.5, 0.5, 0.5, _G4),
    "fig4c": _ring(0.0, 0.5, 0.5, 0.8, _G4),
    "fig5a": _ring(0.5, 0.0, 0.5, 0.3, _G4 + (1.2,)),
    "fig5b": _ring(0.5, 0.0, 0.5, 0.5, _G4 + (1.2,)),
    "fig5c": _ring(0.5, 0.0, 0.5, 0.8, _G4 + (1.2,)),
    "fig6": _ring(0.5, 0.0, 0.5, 0.5, _G4),
    "fig7": _ring(0.5, 0.0, 0.5, 0.5, _G4, kind="phase"),
    "fig8a": _ring(0.0, 0.5, 0.5, 0.5, _G4),
    "fig8b": _chain(0.0, 0.5, 0.5, _G4),
    "fig8c": _ring(0.5, 0.5, 0.5, 0.5, _G4),
    "fig8d": _chain(0.5, 0.5, 0.5, _G4),
}


def _fmt(value) -> str:
    # +0.0 collapses negative zero so CSVs are bit-stable
    return format(float(value) + 0.0, ".12g")


def _sweep_csv(spectrum) -> str:
    p = spectrum.tau_paths
    corners = (
        np.abs(p[:, 0, 0]) ** 2,
        np.abs(p[:, 0, 2]) ** 2,
        np.abs(p[:, 2, 0]) ** 2,
        np.abs(p[:, 2, 2]) ** 2,
    )
    lines = [CSV_HEADER]
    for k in range(len(spectrum.omegas)):
        lines.append(
            ",".join(
                (
                    _fmt(spectrum.omegas[k]),
                    _fmt(spectrum.T[k]),
                    _fmt(spectrum.tau[k].real),
                    _fmt(spectrum.tau[k].imag),
                    _fmt(spectrum.phase_unwrapped[k]),
                    _fmt(corners[0][k]),
                    _fmt(corners[1][k]),
                    _fmt(corners[2][k]),
                    _fmt(corners[3][k]),
                    str(int(spectrum.singular[k])),
                )
            )
        )
    return "\n".join(lines) + "\n"


def _phase_paths_csv(spectrum) -> str:
    p = spectrum.tau_paths
    cols = [
        np.unwrap(np.angle(p[:, j, l]))
        for j, l in ((0, 0), (0, 2), (2, 0), (2, 2))
    ]
    lines = ["omega,phase11,phase13,phase31,phase33"]
    for k in range(len(spectrum.omegas)):
        lines.append(
            ",".join(
                [_fmt(spectrum.omegas[k])] + [_fmt(c[k]) for c in cols]
            )
        )
    return "\n".join(lines) + "\n"


def _phase_total_csv(spectrum) -> str:
    lines = ["omega,phase"]
    for k in range(len(spectrum.omegas)):
        lines.append(f"{_fmt(spectrum.omegas[k])},{_fmt(spectrum.phase_unwrapped[k])}")
    return "\n".join(lines) + "\n"


def _write_text(path, text):
    if path is None:
        _sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _resolve_config(args) -> ScenarioConfig:
    if (args.config is None) == (args.preset is None):
        raise _UsageError("exactly one of --config or --preset is required")
    if args.config is not None:
        cfg = ScenarioConfig.from_file(args.config)
    else:
        preset = PRESETS.get(args.preset)
        if preset is None:
            raise _UsageError(
                f"unknown preset {args.preset!r}; valid ids: "
                + ", ".join(sorted(PRESETS))
            )
        # a preset bundles several gamma values; single-shot commands take
        # the first unless overridden
        cfg = preset.config
        if args.gamma is None:
            cfg = replace(cfg, gamma=preset.gammas[0])
    if args.gamma is not None:
        cfg = replace(cfg, gamma=args.gamma)
    return cfg


def _cmd_sweep(args) -> int:
    cfg = _resolve_config(args)
    _write_text(args.out, _sweep_csv(cfg.run_sweep()))
    return 0


def _cmd_zeros(args) -> int:
    cfg = _resolve_config(args)
    system, leads = cfg.build()
    spectrum = sweep(system, leads, cfg.omega_min, cfg.omega_max, cfg.n_points)
    report = find_zeros(spectrum, system, leads)

    matched_numeric = {pair[0] for pair in report.matches}
    matched_analytic = {pair[1] for pair in report.matches}
    analytic_roots = (
        report.analytic.effective_roots() if report.analytic is not None else ()
    )

    entries = []
    for z in report.numeric:
        if z.omega in matched_numeric:
            root = next(r for n, r in report.matches if n == z.omega)
            entries.append((root, "both", z))
        else:
            entries.append((z.omega, "numeric", z))
    for root in analytic_roots:
        if root not in matched_analytic:
            entries.append((root, "analytic", None))
    entries.sort(key=lambda e: e[0])

    lines = []
    if not entries:
        lines.append("no real zeros")
    else:
        lines.append(f"{'omega':>16}  {'T_at_min':>12}  {'order':>7}  source")
        for omega, tag, z in entries:
            if z is None:
                lines.append(f"{_fmt(omega):>16}  {'-':>12}  {'-':>7}  {tag}")
            else:
                order = "simple" if z.simple else "double"
                lines.append(
                    f"{_fmt(omega):>16}  {z.T_at_min:>12.3e}  {order:>7}  {tag}"
                )
        for omega, tag, _ in entries:
            lines.append(f"zero {_fmt(omega)} {tag}")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_phase(args) -> int:
    cfg = _resolve_config(args)
    spectrum = cfg.run_sweep()
    jumps = detect_phase_jumps(spectrum)
    if not jumps:
        text = "no phase jumps\n"
    else:
        text = "".join(f"jump {_fmt(w)} {_fmt(size)}\n" for w, size in jumps)
    _write_text(args.out, text)
    return 0


def _cmd_reproduce(args) -> int:
    preset = PRESETS.get(args.figure_id)
    if preset is None:
        raise _UsageError(
            f"unknown figure id {args.figure_id!r}; valid ids: "
            + ", ".join(sorted(PRESETS))
        )
    out_dir = args.out if args.out is not None else "."
    os.makedirs(out_dir, exist_ok=True)

    manifest = [
        f"# reproduction manifest: {args.figure_id}",
        "# each section is a config; `triodot sweep --config <section>`"
        " regenerates a sweep CSV",
        "",
    ]
    written = []
    for gamma in preset.gammas:
        cfg = replace(preset.config, gamma=gamma)
        spectrum = cfg.run_sweep()
        tag = f"{args.figure_id}_gamma{_fmt(gamma)}"
        if preset.kind == "phase":
            outputs = (
                (f"{tag}_phase_paths.csv", _phase_paths_csv(spectrum),
                 "# unwrapped phase of the four corner path amplitudes"),
                (f"{tag}_phase_total.csv", _phase_total_csv(spectrum),
                 "# unwrapped phase of the total amplitude"),
            )
        else:
            outputs = ((f"{tag}.csv", _sweep_csv(spectrum), None),)
        for name, text, note in outputs:
            _write_text(os.path.join(out_dir, name), text)
            written.append(name)
            manifest.append(f"[{name}]")
            if note is not None:
                manifest.append(note)
            manifest.append(cfg.to_config_text())

    _write_text(os.path.join(out_dir, "manifest.txt"), "\n".join(manifest))
    print(f"wrote {len(written)} files + manifest.txt to {out_dir}")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="triodot",
        description="Transmission spectra of a gain/loss triple-dot chain or ring "
        "between tight-binding leads.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_scenario_flags(p):
        p.add_argument("--config", metavar="PATH", help="scenario config file")
        p.add_argument("--preset", metavar="ID", help="figure preset id, e.g. fig3a")
        p.add_argument(
            "--gamma", type=float, metavar="X", help="override the gain/loss strength"
        )
        p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")

    p_sweep = sub.add_parser("sweep", help="write a transmission sweep as CSV")
    add_scenario_flags(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_zeros = sub.add_parser("zeros", help="locate and classify antiresonances")
    add_scenario_flags(p_zeros)
    p_zeros.set_defaults(func=_cmd_zeros)

    p_phase = sub.add_parser("phase", help="detect pi jumps of the total phase")
    add_scenario_flags(p_phase)
    p_phase.set_defaults(func=_cmd_phase)

    p_rep = sub.add_parser(
        "reproduce", help="emit every curve of a figure preset plus a manifest"
    )
    p_rep.add_argument("figure_id", help="preset id, e.g. fig4b")
    p_rep.add_argument(
        "--out", metavar="DIR", help="output directory (default: current)"
    )
    p_rep.set_defaults(func=_cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=_sys.stderr)
        return 1
    except ConfigError as exc:
        print(f"config error: {exc}", file=_sys.stderr)
        return 1
    except BrokenPipeError:
        # reader (head, less, ...) closed the pipe; not an error
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, _sys.stdout.fileno())
        return 0
    except (OutOfBand, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

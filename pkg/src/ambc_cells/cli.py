"""``ambc-cells`` command line.

Windows are written ``[e1,...,en]`` with ``_`` for absent entries;
tabloids as ``((1,3),(2))`` or ``[[1,3],[2]]``.  Every command accepts
``--json``.  Exit codes: 0 success, 1 usage or parse error, 2 failed
verification.
"""

from __future__ import annotations

import json
import os
import sys
from functools import wraps
from typing import Any, Callable, Optional

import click

from .ambc import (
    AmbcTriple,
    canonical_channels,
    channel_numbering,
    find_channels,
    greene_kleitman,
    phi,
    psi,
    rivers,
)
from .core import AmbcError, Window, format_tabloid, format_window, parse_tabloid, parse_window
from .group import compose, inverse, left_star, omega_left, omega_right, right_star, rotate_R
from .rotations import diamond_complete, diamond_holds, ipr, is_proper_ipr, is_proper_pr, pr
from .sign import format_trace, sign_trace
from .tableaux import r_matrix, rsk, rsk_inverse, theta, upsilon_classes

EXIT_USAGE = 1
EXIT_FAILED = 2


def _window(text: str) -> Window:
    return parse_window(text)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}") from None


def _emit(as_json: bool, data: Any, text: Optional[str] = None) -> None:
    if as_json:
        click.echo(json.dumps(data, sort_keys=True))
    else:
        click.echo(text if text is not None else data)


def command(*args, **kwargs) -> Callable:
    """A subcommand with a ``--json`` switch and parse errors mapped to usage errors."""

    def deco(fn: Callable) -> Callable:
        @wraps(fn)
        def run(*a, **kw):
            try:
                return fn(*a, **kw)
            except (AmbcError, ValueError) as exc:
                raise click.UsageError(str(exc)) from None

        run = click.option("--json", "as_json", is_flag=True, help="Print JSON.")(run)
        return main_group.command(*args, **kwargs)(run)

    return deco


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main_group() -> None:
    """Cells of the extended affine symmetric group."""


# -- ambc ---------------------------------------------------------------------


@command("phi")
@click.argument("window")
def phi_cmd(window: str, as_json: bool) -> None:
    """Affine matrix-ball triple of WINDOW as JSON."""
    t = phi(_window(window))
    _emit(True, t.to_json())


@command("psi")
@click.argument("triple")
def psi_cmd(triple: str, as_json: bool) -> None:
    """Window of a triple given as JSON text or a JSON file."""
    text = open(triple).read() if os.path.exists(triple) else triple
    try:
        t = AmbcTriple.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise click.UsageError(f"bad triple: {exc}") from None
    w = psi(t)
    _emit(as_json, {"window": format_window(w)}, format_window(w))


@command("gk")
@click.argument("window")
def gk_cmd(window: str, as_json: bool) -> None:
    """Greene-Kleitman partition of the Shi poset."""
    lam = greene_kleitman(_window(window))
    _emit(as_json, {"shape": list(lam)}, ",".join(map(str, lam)))


@command("channels")
@click.argument("window")
def channels_cmd(window: str, as_json: bool) -> None:
    """All channels and the canonical disjoint sequence."""
    w = _window(window)
    allc = [format_window(c) for c in find_channels(w)]
    seq = canonical_channels(w)
    canon = [format_window(c) for c in seq.channels]
    data = {"channels": allc, "canonical": canon, "river_breaks": list(seq.river_breaks)}
    text = "\n".join(["channels:"] + allc + ["canonical:"] + canon)
    _emit(as_json, data, text)


@command("rivers")
@click.argument("window")
def rivers_cmd(window: str, as_json: bool) -> None:
    """Channels grouped into rivers."""
    groups = [[format_window(c) for c in r] for r in rivers(_window(window))]
    _emit(as_json, {"rivers": groups}, "\n".join(" ".join(g) for g in groups))


@command("numbering")
@click.argument("window")
@click.option("--channel", "k", type=int, default=1, show_default=True, help="1-based index into the canonical sequence.")
def numbering_cmd(window: str, k: int, as_json: bool) -> None:
    """Channel numbering seeded by the K-th canonical channel."""
    w = _window(window)
    seq = canonical_channels(w)
    if not 1 <= k <= len(seq):
        raise click.UsageError(f"channel index {k} out of range 1..{len(seq)}")
    d = channel_numbering(w, seq[k - 1])
    labels = {str(x): d.labels[x] for x in sorted(d.labels)}
    text = " ".join(f"{x}:{v}" for x, v in labels.items()) + f" (increment {d.increment})"
    _emit(as_json, {"channel": format_window(seq[k - 1]), "labels": labels, "increment": d.increment}, text)


# -- group --------------------------------------------------------------------


def _maybe(w: Optional[Window], as_json: bool) -> None:
    if w is None:
        _emit(as_json, {"window": None}, "undefined")
    else:
        _emit(as_json, {"window": format_window(w)}, format_window(w))


@command("star")
@click.argument("window")
@click.option("--right", "right", type=int, help="Right star at index i.")
@click.option("--left", "left", type=int, help="Left star at index i.")
def star_cmd(window: str, right: Optional[int], left: Optional[int], as_json: bool) -> None:
    """Right or left star operation; prints ``undefined`` when it does not apply."""
    if (right is None) == (left is None):
        raise click.UsageError("give exactly one of --right and --left")
    w = _window(window)
    _maybe(right_star(w, right) if right is not None else left_star(w, left), as_json)


@command("omega")
@click.argument("window")
@click.option("--left", "side", flag_value="left", default=True, help="Multiply on the left.")
@click.option("--right", "side", flag_value="right", help="Multiply on the right.")
@click.option("--inverse", "inv", is_flag=True, help="Use the inverse shift.")
def omega_cmd(window: str, side: str, inv: bool, as_json: bool) -> None:
    """Multiply by the shift element."""
    w = _window(window)
    power = -1 if inv else 1
    _maybe(omega_left(w, power) if side == "left" else omega_right(w, power), as_json)


@command("rotate-180")
@click.argument("window")
def rotate_180_cmd(window: str, as_json: bool) -> None:
    """Rotate the ball diagram by 180 degrees."""
    _maybe(rotate_R(_window(window)), as_json)


@command("inverse")
@click.argument("window")
def inverse_cmd(window: str, as_json: bool) -> None:
    """Group inverse."""
    _maybe(inverse(_window(window)), as_json)


@command("compose")
@click.argument("u")
@click.argument("v")
def compose_cmd(u: str, v: str, as_json: bool) -> None:
    """The product U V (apply V first)."""
    _maybe(compose(_window(u), _window(v)), as_json)


# -- rotations ----------------------------------------------------------------


@command("rotate")
@click.argument("window")
@click.option("--stream", required=True, help="Sub-stream as a window with absent entries.")
@click.option("--inverse", "inv", is_flag=True, help="Inverse partial rotation.")
@click.option("--check-proper", is_flag=True, help="Report whether the rotation is proper.")
def rotate_cmd(window: str, stream: str, inv: bool, check_proper: bool, as_json: bool) -> None:
    """Partial rotation of WINDOW along a sub-stream."""
    w, s = _window(window), _window(stream)
    out = ipr(w, s) if inv else pr(w, s)
    data: dict = {"window": format_window(out)}
    text = format_window(out)
    if check_proper:
        data["proper"] = is_proper_ipr(w, s) if inv else is_proper_pr(w, s)
        text += f"\nproper: {str(data['proper']).lower()}"
    _emit(as_json, data, text)


@command("diamond")
@click.argument("window")
@click.option("--p", "p", type=int, default=2, show_default=True, help="Star center.")
@click.option("--q", "q", type=int, default=1, show_default=True, help="1-based canonical channel index.")
@click.option("--inverse", "inv", is_flag=True, help="Use inverse rotations.")
@click.option("--omega", "use_omega", is_flag=True, help="Right shift instead of a star.")
def diamond_cmd(window: str, p: int, q: int, inv: bool, use_omega: bool, as_json: bool) -> None:
    """Complete the square of a star move and a proper rotation."""
    d = diamond_complete(_window(window), p, q, inverse=inv, omega=use_omega)
    data = {k: format_window(v) for k, v in d._asdict().items()}
    data["holds"] = diamond_holds(d, inverse=inv)
    _emit(as_json, data, "\n".join(f"{k}: {v}" for k, v in data.items()))
    if not data["holds"]:
        sys.exit(EXIT_FAILED)


# -- sign ---------------------------------------------------------------------


@command("sign")
@click.argument("window")
@click.option("--trace", is_flag=True, help="Print every insertion step.")
@click.option("--blasiak-convention", is_flag=True, help="Apply rotate-180 after inverting first.")
def sign_cmd(window: str, trace: bool, blasiak_convention: bool, as_json: bool) -> None:
    """Sign insertion words of a total window."""
    w = _window(window)
    if blasiak_convention:
        w = rotate_R(inverse(w))
    steps = sign_trace(w)
    last = steps[-1]
    data: dict = {"sgn_p": list(last.p), "sgn_q": list(last.q)}
    text = f"sgn_P = {list(last.p)}\nsgn_Q = {list(last.q)}"
    if trace:
        data["trace"] = [[s.step, list(s.p), list(s.q), list(s.pending)] for s in steps]
        text = format_trace(steps)
    _emit(as_json, data, text)


# -- tableaux -----------------------------------------------------------------


def _tab(text: str):
    return parse_tabloid(text)


@command("rsk")
@click.argument("tabloid")
def rsk_cmd(tabloid: str, as_json: bool) -> None:
    """RSK of a row-increasing tabloid via its two-row array."""
    p, q = rsk(_tab(tabloid))
    _emit(as_json, {"p": [list(r) for r in p], "q": [list(r) for r in q]}, f"P = {format_tabloid(p)}\nQ = {format_tabloid(q)}")


@command("rsk-inverse")
@click.argument("p")
@click.argument("q")
@click.option("--rows", type=int, default=None, help="Row count of the result.")
def rsk_inverse_cmd(p: str, q: str, rows: Optional[int], as_json: bool) -> None:
    """Tabloid with RSK image (P, Q)."""
    t = rsk_inverse(_tab(p), _tab(q), rows)
    _emit(as_json, {"tabloid": [list(r) for r in t]}, format_tabloid(t))


@command("rmatrix")
@click.argument("tabloid")
@click.option("--i", "i", type=int, required=True, help="Swap rows i and i+1.")
def rmatrix_cmd(tabloid: str, i: int, as_json: bool) -> None:
    """Combinatorial R-matrix on rows i and i+1."""
    t = r_matrix(_tab(tabloid), i)
    _emit(as_json, {"tabloid": [list(r) for r in t]}, format_tabloid(t))


@command("theta")
@click.argument("ssyt")
@click.option("--target", required=True, help="Target content b1,b2,...")
@click.option("--content", "alpha", default=None, help="Source content when it has trailing zeros.")
def theta_cmd(ssyt: str, target: str, alpha: Optional[str], as_json: bool) -> None:
    """Standardization map to another content."""
    u = theta(_tab(ssyt), _ints(target), alpha=_ints(alpha) if alpha else None)
    _emit(as_json, {"tableau": [list(r) for r in u]}, format_tabloid(u))


@command("upsilon")
@click.option("--n", "n", type=int, required=True)
@click.option("--bound", type=int, default=0, show_default=True, help="Weight bound for the witnesses.")
def upsilon_cmd(n: int, bound: int, as_json: bool) -> None:
    """Tableaux grouped by sign word."""
    classes = upsilon_classes(n, bound)
    data = [{"word": list(k), "tableaux": [format_tabloid(t) for t in v]} for k, v in classes.items()]
    text = "\n".join(f"{tuple(d['word'])} ; " + " | ".join(d["tableaux"]) for d in data)
    _emit(as_json, data, text)


# -- verification -------------------------------------------------------------


@command("verify")
@click.argument("suite")
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--bound", type=int, default=2, show_default=True, help="Bound on |rho_i|.")
@click.option("--lambda", "lam", default=None, help="Restrict to one shape, e.g. 3,1.")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--samples", type=int, default=0, show_default=True, help="Sample size for sampled suites.")
@click.option("--margin", type=int, default=1, show_default=True, help="Connectivity search beyond the bound.")
@click.option("--force", is_flag=True, help="Allow n above the size cap.")
@click.option("--timing", is_flag=True, help="Include wall time in JSON.")
def verify_cmd(suite, n, bound, lam, jobs, seed, samples, margin, force, timing, as_json) -> None:
    """Run a verification suite; exit 2 if it finds failures."""
    from .harness import EnumerationSpec, run_suite

    spec = EnumerationSpec(n, bound, _ints(lam) if lam else None, seed, jobs, samples, margin, force)
    report = run_suite(suite, spec)
    if as_json:
        click.echo(report.to_json(timing=timing))
    else:
        click.echo(report.summary())
        for f in report.failures:
            click.echo(json.dumps(f, sort_keys=True))
        for note in report.notes:
            click.echo(f"note: {note}")
    if not report.ok:
        sys.exit(EXIT_FAILED)


def main(argv: Optional[list[str]] = None) -> None:
    try:
        main_group.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.exceptions.Abort:
        sys.exit(EXIT_USAGE)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_USAGE)


if __name__ == "__main__":
    main()

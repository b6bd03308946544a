"""Command-line front end: generate transforms, shift matrices, extensions,
and model graphs; run verification suites; filter signals both ways; build
field covariances and their KLTs.

Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.
"""
from __future__ import annotations

import csv as _csv
import inspect
import io
import json
import sys

import click
import numpy as np

from . import checks as ck
from . import gmrf as gm
from . import model as md
from . import spectral as sp
from . import transforms as tf
from .poly import Polynomial


def _parse_spec(text: str) -> tf.TransformSpec:
    try:
        return tf.parse_spec(text)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _matrix_csv(name: str, variant: str, M: np.ndarray, r=None) -> str:
    buf = io.StringIO()
    w = _csv.writer(buf, lineterminator="\n")
    header = [name, str(M.shape[0]), variant]
    if r is not None:
        header.append(str(r))
    w.writerow(header)
    for row in np.asarray(M):
        cells = []
        for x in row:
            if np.iscomplexobj(M):
                cells += [tf._fmt(x.real), tf._fmt(x.imag)]
            else:
                cells.append(tf._fmt(x))
        w.writerow(cells)
    return buf.getvalue()


def _matrix_json(name: str, M: np.ndarray) -> str:
    return json.dumps({"spec": name, "entries": tf._jsonable(np.asarray(M)),
                       "alpha": None, "scaling": None}, indent=2)


def _emit_matrix(name: str, variant: str, M: np.ndarray, fmt: str, r=None):
    if fmt == "csv":
        click.echo(_matrix_csv(name, variant, M, r), nl=False)
    elif fmt == "json":
        click.echo(_matrix_json(name, M))
    else:
        with np.printoptions(precision=6, suppress=True, linewidth=200):
            click.echo(str(np.asarray(M)))


def _model_of(spec_text: str):
    spec = _parse_spec(spec_text)
    if spec.family == "tensor":
        models = [tf.model_for(f) for f in spec.factors]
        if any(m is None for m in models):
            raise click.UsageError(f"{spec_text} has no associated signal model")
        return models
    m = tf.model_for(spec)
    if m is None:
        raise click.UsageError(f"{spec_text} has no associated signal model")
    return m


@click.group()
def main():
    """Transform synthesis and verification for polynomial signal models."""


@main.command()
@click.argument("spec")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]),
              default="csv", show_default=True)
def transform(spec, fmt):
    """Generate the transform matrix for SPEC (e.g. dct2:8,
    dct4:5:r=1/3, dft1:8:variant=unitary, gnn-legendre:6,
    tensor(dct2:4,dct2:4))."""
    try:
        t = tf.generate(_parse_spec(spec))
    except (ValueError, tf.InvalidSizeError) as exc:
        raise click.UsageError(str(exc))
    if fmt == "csv":
        click.echo(tf.to_csv(t), nl=False)
    elif fmt == "json":
        click.echo(tf.to_json(t))
    else:
        _emit_matrix(str(t.spec), t.spec.variant, t.entries, "text")


@main.command("shift-matrix")
@click.argument("spec")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]),
              default="text", show_default=True)
def shift_matrix_cmd(spec, fmt):
    """Shift matrix of the signal model behind SPEC."""
    m = _model_of(spec)
    if isinstance(m, list):
        raise click.UsageError("shift-matrix needs a one-dimensional spec")
    A = md.shift_matrix(m)
    _emit_matrix(f"shift({spec})", "unscaled", A, fmt)


@main.command()
@click.argument("spec")
@click.argument("index", type=int)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="text", show_default=True)
def extension(spec, index, fmt):
    """Coordinates of the INDEX-th extended basis element of SPEC's model."""
    m = _model_of(spec)
    if isinstance(m, list):
        raise click.UsageError("extension needs a one-dimensional spec")
    try:
        coords = [complex(c) for c in md.extension(m, index)]
    except md.NoPastError as exc:
        raise click.UsageError(str(exc))
    vals = [c.real if c.imag == 0 else [c.real, c.imag] for c in coords]
    if fmt == "json":
        click.echo(json.dumps({"spec": spec, "index": index, "coords": vals}))
    else:
        click.echo(" ".join(tf._fmt(v) if not isinstance(v, list)
                            else f"{tf._fmt(v[0])}+{tf._fmt(v[1])}j" for v in vals))


@main.command()
@click.argument("spec")
@click.option("--format", "fmt", type=click.Choice(["dot", "text"]),
              default="dot", show_default=True)
def graph(spec, fmt):
    """Visualize SPEC's model as a weighted (di)graph in DOT form. Tensor
    specs give the direct-product graph."""
    m = _model_of(spec)
    g = md.visualize(m)
    if fmt == "dot":
        click.echo(g.to_dot())
    else:
        _emit_matrix(f"graph({spec})", "adjacency", g.adjacency, "text")


@main.command()
@click.argument("names", nargs=-1)
@click.option("--tolerance", type=float, default=None,
              help="Override the residual tolerance where a suite takes one.")
@click.option("--sizes", default=None,
              help="Override the size range (e.g. 2..12) where a suite takes one.")
@click.option("--list", "list_only", is_flag=True, help="List suite names.")
@click.option("--verbose", is_flag=True, help="Print per-identity detail lines.")
def check(names, tolerance, sizes, list_only, verbose):
    """Run verification suites (default: all). NAMES among:
    chebyshev pairing diagonalization convolution orthogonality extension
    relations rational-blocks real-kernels realization gmrf tensor."""
    if list_only:
        for n in ck.CHECKS:
            click.echo(n)
        return
    names = list(names) or ["all"]
    if names == ["all"]:
        names = list(ck.CHECKS)
    unknown = [n for n in names if n not in ck.CHECKS]
    if unknown:
        raise click.UsageError(
            f"unknown check(s) {', '.join(unknown)}; valid: {', '.join(ck.CHECKS)}")
    size_range = None
    if sizes is not None:
        try:
            lo, hi = (int(v) for v in sizes.split(".."))
            size_range = range(lo, hi + 1)
        except ValueError:
            raise click.UsageError(f"cannot parse size range {sizes!r}; "
                                   "expected LO..HI")
    failed = False
    for name in names:
        fn = ck.CHECKS[name]
        params = inspect.signature(fn).parameters
        kwargs = {}
        if tolerance is not None and "tol" in params:
            kwargs["tol"] = tolerance
        if size_range is not None and "sizes" in params:
            kwargs["sizes"] = size_range
        res = fn(**kwargs)
        click.echo(res.summary())
        if verbose or not res.passed:
            for line in res.lines:
                click.echo(f"    {line}")
        failed |= not res.passed
    sys.exit(1 if failed else 0)


def _parse_vector(text: str, n: int, what: str) -> np.ndarray:
    try:
        vals = [float(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise click.UsageError(f"cannot parse {what} {text!r}")
    if len(vals) != n:
        raise click.UsageError(f"{what} needs {n} values, got {len(vals)}")
    return np.array(vals)


@main.command()
@click.argument("spec")
@click.option("--filter", "filt", required=True,
              help="Filter coefficients, comma- or space-separated.")
@click.option("--signal", required=True,
              help="Signal values, comma- or space-separated.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="text", show_default=True)
def convolve(spec, filt, signal, fmt):
    """Filter SIGNAL by FILTER in SPEC's model, both directly and through the
    spectral domain; reports the two results and their disagreement."""
    m = _model_of(spec)
    if isinstance(m, list):
        raise click.UsageError("convolve needs a one-dimensional spec")
    t = tf.generate(_parse_spec(spec))
    h = Polynomial(list(_parse_vector(filt, m.n, "filter")))
    s = _parse_vector(signal, m.n, "signal")
    direct = sp.convolve_direct(m, h, s)
    spectral = sp.convolve_spectral(m, np.asarray(t.entries, dtype=complex), h, s)
    resid = float(np.abs(direct - spectral).max()
                  / max(np.abs(direct).max(), 1.0))
    if fmt == "json":
        click.echo(json.dumps({
            "spec": spec,
            "direct": [float(v) for v in np.real_if_close(direct)],
            "spectral": [float(v.real) for v in np.asarray(spectral)],
            "residual": resid}))
    else:
        click.echo("direct:   " + " ".join(tf._fmt(v) for v in np.real(direct)))
        click.echo("spectral: " + " ".join(tf._fmt(v.real) for v in spectral))
        click.echo(f"residual: {resid:.3e}")


@main.command("gmrf")
@click.argument("spec")
@click.option("--case", type=click.Choice(list(gm.CASES)), default="sym-posdef",
              show_default=True)
@click.option("--sigma2", type=float, default=1.0, show_default=True)
@click.option("--scale", type=float, default=0.5, show_default=True,
              help="Factor applied to the model's shift matrix to form the field matrix.")
@click.option("--output", type=click.Choice(["covariance", "klt"]),
              default="covariance", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]),
              default="csv", show_default=True)
def gmrf_cmd(spec, case, sigma2, scale, output, fmt):
    """Covariance or KLT of the field whose matrix is scale * shift(SPEC)."""
    m = _model_of(spec)
    if isinstance(m, list):
        raise click.UsageError("gmrf needs a one-dimensional spec")
    A = np.real(md.shift_matrix(m)) * scale
    if case.startswith("sym"):
        A = 0.5 * (A + A.T)
    try:
        field = gm.GmrfModel(A, sigma2, case)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    Sigma = gm.covariance(field)
    M = Sigma if output == "covariance" else gm.klt(Sigma)
    _emit_matrix(f"{output}({spec})", case, M, fmt)


if __name__ == "__main__":
    main()

"""Command-line front end.

Every subcommand reads expressions in the ``d[...]`` syntax of
:mod:`weylops.opparser` over a session ring configured by the top-level
flags, and writes either canonical text or versioned JSON.  Exit codes:
0 success, 1 usage, 2 parse error, 3 violated mathematical precondition.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass

import click

from . import artinian as art
from . import invariants as inv
from . import levelmatrix as lvm
from . import render
from .diffop import bracket as op_bracket
from .errors import DomainError, ParseError, WeylOpsError
from .field import FieldSpec
from .linalg import Matrix
from .opparser import parse_operator, parse_polynomial
from .poly import PolyRing
from .transpose import AntiAutomorphism


@dataclass
class SessionConfig:
    """Ring and output settings shared by the subcommands."""

    characteristic: int = 0
    nvars: int = 1
    var_names: tuple | None = None
    json_output: bool = False

    def ring(self) -> PolyRing:
        return PolyRing(
            FieldSpec(self.characteristic), self.nvars, self.var_names
        )


def _emit(cfg: SessionConfig, text: str, payload: dict):
    if cfg.json_output:
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(text)


def _scalar_payload(kind: str, value) -> dict:
    return {"schema": render.SCHEMA, "kind": kind, "value": value}


@click.group()
@click.option("--char", "characteristic", type=int, default=0,
              help="Field characteristic: 0 or a prime.")
@click.option("--nvars", type=int, default=1, help="Number of variables.")
@click.option("--vars", "var_names", default=None,
              help="Comma-separated variable names (default x1,x2,...).")
@click.option("--json", "json_output", is_flag=True,
              help="Emit versioned JSON instead of text.")
@click.pass_context
def cli(ctx, characteristic, nvars, var_names, json_output):
    """Exact differential operator calculator (divided-power form)."""
    names = None
    if var_names is not None:
        names = tuple(s.strip() for s in var_names.split(","))
        nvars = len(names)
    ctx.obj = SessionConfig(
        characteristic=characteristic,
        nvars=nvars,
        var_names=names,
        json_output=json_output,
    )


@cli.command()
@click.argument("expr")
@click.pass_obj
def normalize(cfg: SessionConfig, expr):
    """Parse an operator expression and print its normal form."""
    op = parse_operator(expr, cfg.ring())
    _emit(cfg, render.render_op(op), render.op_json(op))


@cli.command("apply")
@click.argument("expr")
@click.option("--to", "target", required=True,
              help="Polynomial the operator acts on.")
@click.pass_obj
def apply_cmd(cfg: SessionConfig, expr, target):
    """Apply an operator to a polynomial."""
    ring = cfg.ring()
    op = parse_operator(expr, ring)
    f = parse_polynomial(target, ring)
    result = op.apply(f)
    _emit(cfg, render.render_poly(result), render.poly_json(result))


@cli.command()
@click.argument("expr")
@click.option("--twist", default=None,
              help="Comma-separated twist polynomials, one per variable "
                   "(characteristic 0 only).")
@click.pass_obj
def transpose(cfg: SessionConfig, expr, twist):
    """Transpose an operator (standard, or twisted with --twist)."""
    ring = cfg.ring()
    op = parse_operator(expr, ring)
    if twist is None:
        phi = AntiAutomorphism.standard(ring)
    else:
        polys = [parse_polynomial(s, ring) for s in twist.split(",")]
        phi = AntiAutomorphism.twisted(ring, polys)
    result = phi(op)
    _emit(cfg, render.render_op(result), render.op_json(result))


@cli.command()
@click.argument("expr")
@click.pass_obj
def order(cfg: SessionConfig, expr):
    """Order of an operator (-1 for zero)."""
    op = parse_operator(expr, cfg.ring())
    value = op.order()
    _emit(cfg, str(value), _scalar_payload("order", value))


@cli.command()
@click.argument("expr")
@click.pass_obj
def level(cfg: SessionConfig, expr):
    """Level of an operator (characteristic p only)."""
    op = parse_operator(expr, cfg.ring())
    value = op.level()
    _emit(cfg, str(value), _scalar_payload("level", value))


@cli.command("bracket")
@click.argument("left")
@click.argument("right")
@click.pass_obj
def bracket_cmd(cfg: SessionConfig, left, right):
    """Commutator of two operators."""
    ring = cfg.ring()
    result = op_bracket(parse_operator(left, ring), parse_operator(right, ring))
    _emit(cfg, render.render_op(result), render.op_json(result))


@cli.command("matrix")
@click.argument("expr")
@click.option("--e", "level_e", type=int, required=True,
              help="Level of the matrix representation.")
@click.pass_obj
def matrix_cmd(cfg: SessionConfig, expr, level_e):
    """Level-e matrix of an operator over the p^e-th powers."""
    op = parse_operator(expr, cfg.ring())
    m = lvm.to_matrix(op, level_e)
    if cfg.json_output:
        click.echo(json.dumps(render.level_matrix_json(m), indent=2))
    else:
        click.echo(f"level {m.e} matrix, size {m.basis.size}, "
                   f"basis {list(m.basis.monomials)}")
        for lam, row in zip(m.basis.monomials, m.entries):
            cells = "  ".join(render.render_poly(v) for v in row)
            click.echo(f"{list(lam)}: {cells}")


@cli.command("artinian")
@click.option("--exponents", "exps", required=True,
              help="Comma-separated defining exponents, e.g. 2,3.")
@click.option("--n-max", type=int, default=None,
              help="Cap for the filtration chain (default 2*dim).")
@click.pass_obj
def artinian_cmd(cfg: SessionConfig, exps, n_max):
    """Order filtration and socle adjoint on a monomial quotient."""
    try:
        exponents = tuple(int(s) for s in exps.split(","))
    except ValueError:
        raise ParseError(f"bad exponent list {exps!r}") from None
    A = art.ArtinianAlgebra(exponents, FieldSpec(cfg.characteristic))
    filt = art.order_filtration(A, n_max=n_max)
    d = A.dim
    adjoint_cols = []
    for k in range(d * d):
        e_vec = [0] * (d * d)
        e_vec[k] = 1
        xi = art.unvectorize(A.field, [A.field.coerce(v) for v in e_vec], d)
        adjoint_cols.append(art.vectorize(art.socle_adjoint(A, xi)))
    adjoint = Matrix.from_columns(A.field, adjoint_cols)
    payload = {
        "schema": render.SCHEMA,
        "kind": "artinian",
        "characteristic": cfg.characteristic,
        "exponents": list(exponents),
        "dimension": d,
        "filtration_dims": filt.dims,
        "stabilized_at": filt.stabilized_at,
        "pairing": render.scalar_matrix_json(A.gram()),
        "adjoint": render.scalar_matrix_json(adjoint),
    }
    if cfg.json_output:
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(f"algebra dimension {d}, basis of {len(A.basis)} monomials")
        dims = " ".join(str(v) for v in filt.dims)
        stable = (f" (stable at order {filt.stabilized_at})"
                  if filt.stabilized_at is not None else "")
        click.echo(f"filtration dims: {dims}{stable}")
        click.echo("socle pairing:")
        for row in A.gram().rows:
            click.echo("  " + " ".join(A.field.to_str(v) for v in row))


def _load_group(path, field: FieldSpec) -> inv.FiniteGroup:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read group file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"group file is not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise ParseError("group file must be a JSON list of matrices")
    elements = []
    for rows in data:
        elements.append(inv.GroupElement(Matrix(field, rows)))
    return inv.FiniteGroup(elements)


@cli.group("group")
@click.option("--group", "group_file", required=True,
              help="JSON file: list of row-major matrices.")
@click.pass_context
def group_cmd(ctx, group_file):
    """Finite linear group actions on operators."""
    cfg: SessionConfig = ctx.obj
    ctx.obj = (cfg, _load_group(group_file, FieldSpec(cfg.characteristic)))


@group_cmd.command()
@click.pass_obj
def pseudoreflections(obj):
    """List the pseudoreflections in the group."""
    cfg, G = obj
    refl = G.pseudoreflections()
    payload = {
        "schema": render.SCHEMA,
        "kind": "pseudoreflections",
        "count": len(refl),
        "elements": [render.scalar_matrix_json(g.matrix) for g in refl],
    }
    if cfg.json_output:
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(f"{len(refl)} pseudoreflection(s)")
        for g in refl:
            click.echo("  " + "; ".join(
                " ".join(cfg.ring().field.to_str(v) for v in row)
                for row in g.matrix.rows
            ))


@group_cmd.command("invariant-check")
@click.argument("expr")
@click.pass_obj
def invariant_check(obj, expr):
    """Whether an operator is fixed by the whole group."""
    cfg, G = obj
    op = parse_operator(expr, cfg.ring())
    value = inv.is_invariant(G, op)
    _emit(cfg, "true" if value else "false",
          _scalar_payload("invariant", value))


@group_cmd.command("reynolds")
@click.argument("expr")
@click.pass_obj
def reynolds_cmd(obj, expr):
    """Group average of an operator."""
    cfg, G = obj
    op = parse_operator(expr, cfg.ring())
    result = inv.reynolds(G, op)
    _emit(cfg, render.render_op(result), render.op_json(result))


def main(argv=None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Abort:
        return 1
    except click.exceptions.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return 1
    except click.exceptions.ClickException as exc:
        exc.show()
        return 1
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        return 2
    except DomainError as exc:
        click.echo(f"domain error: {exc}", err=True)
        return 3
    except WeylOpsError as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())

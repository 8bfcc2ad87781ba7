# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Command Line

    fuzzystp solve --instance steel.json --method fuzzy-programming \\
        --bounds 8166.6,8211.6,770.1767,785.95
    fuzzystp solve --instance steel.json --method weighted-sum --weights 21 --front front.csv
    fuzzystp evaluate --instance steel.json --solution table6_solution.json
    fuzzystp validate --instance steel.json

Exit codes: 0 on an optimal or feasible result, 2 when the model (or the
evaluated plan) is infeasible, 1 on usage, parse and validation errors.
Diagnostics go to stderr; reports go to ``--out`` or stdout.
"""

import json
import logging
import sys
import time
from pathlib import Path

import click

from fuzzystp import __version__
from fuzzystp.config import get_settings
from fuzzystp.engine import Status
from fuzzystp.exceptions import FuzzySTPError, InfeasibleError
from fuzzystp.io import (
	FRONT_HEADERS,
	RunReport,
	evaluation_to_dict,
	front_rows,
	instance_digest,
	parse_instance,
	parse_solution,
	write_front_csv,
)
from fuzzystp.model import compile_model, evaluate, validate
from fuzzystp.scalarization import (
	NORMALIZATIONS,
	OBJECTIVES,
	MethodRegistry,
	MethodRequest,
	PayoffTable,
	SolveStats,
	evenly_spaced_weights,
	get_method,
	random_weights,
)

logger = logging.getLogger(__name__)

DEFAULT_WEIGHT_COUNT = 21


def _floats(count: int):
	def parse(ctx, param, value):
		if value is None:
			return None
		try:
			numbers = tuple(float(item) for item in value.split(","))
		except ValueError:
			raise click.BadParameter("expected {0} comma-separated numbers, got '{1}'".format(count, value))
		if len(numbers) != count:
			raise click.BadParameter("expected {0} comma-separated numbers, got {1}".format(count, len(numbers)))
		return numbers

	return parse


def _read_weights(path: Path) -> list[float]:
	text = path.read_text(encoding="utf-8")
	try:
		return [float(item) for item in text.replace(",", " ").split()]
	except ValueError:
		raise click.BadParameter("weights file must list numbers, got '{0}'".format(path), param_hint="--weights-file")


_cli_handler: logging.Handler | None = None


def _configure_logging(verbose: int) -> None:
	global _cli_handler
	package_logger = logging.getLogger("fuzzystp")
	if _cli_handler is not None:
		package_logger.removeHandler(_cli_handler)
	_cli_handler = logging.StreamHandler(sys.stderr)
	_cli_handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
	package_logger.addHandler(_cli_handler)
	package_logger.setLevel(logging.WARNING - 10 * min(verbose, 2))


def _emit(text: str, out: Path | None) -> None:
	if out is None:
		click.echo(text, nl=False)
	else:
		out.write_text(text, encoding="utf-8")
		logger.info("Wrote %s", out)


@click.group()
@click.version_option(__version__, prog_name="fuzzystp")
@click.option("-v", "--verbose", count=True, help="Log INFO (-v) or DEBUG (-vv) to stderr.")
def cli(verbose: int):
	"""Credibility-based multi-objective solid transportation solver."""
	_configure_logging(verbose)


@cli.command()
@click.option("--instance", "instance_path", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--method", type=click.Choice(MethodRegistry.list_methods()), default="fuzzy-programming", show_default=True)
@click.option("--objective", type=click.Choice(OBJECTIVES), default="cost", show_default=True, help="Objective for --method single.")
@click.option("--eta", type=float, help="Confidence level of the cost objective [default: 0.9].")
@click.option("--gamma", type=float, help="Confidence level of the time objective [default: 0.9].")
@click.option("--bounds", callback=_floats(4), metavar="L1,U1,L2,U2", help="Inject payoff bounds instead of computing them.")
@click.option("--ideal", callback=_floats(2), metavar="L1,L2", help="Ideal point for the global criterion.")
@click.option("--q", type=float, help="Global criterion exponent, >= 1 [default: 2].")
@click.option("--normalization", type=click.Choice(NORMALIZATIONS), default="by-ideal", show_default=True)
@click.option("--resolution", type=float, help="Epsilon sweep step in cost units [default: (U1-L1)/200].")
@click.option("--weights", "weight_count", type=int, help="Number of weights for the weighted-sum scan.")
@click.option("--weights-file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--seed", type=int, help="Draw --weights random weights from this seed instead of spacing them evenly.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="Report file [default: stdout].")
@click.option("--front", type=click.Path(dir_okay=False, path_type=Path), help="Front CSV (weighted-sum, global-criterion).")
@click.option("--handling-divisor", type=float, help="Divides handling times into hours [default: 60].")
@click.option("--node-limit", type=int, help="Branch-and-bound node limit per solve.")
@click.option("--workers", type=int, help="Threads for the weighted-sum scan.")
def solve(
	instance_path,
	method,
	objective,
	eta,
	gamma,
	bounds,
	ideal,
	q,
	normalization,
	resolution,
	weight_count,
	weights_file,
	seed,
	out,
	front,
	handling_divisor,
	node_limit,
	workers,
):
	"""Compile an instance and solve it with a scalarization method."""
	started = time.perf_counter()
	settings = get_settings().override(handling_divisor=handling_divisor, node_limit=node_limit, workers=workers)
	eta = settings.eta if eta is None else eta
	gamma = settings.gamma if gamma is None else gamma

	weights: list[float] = []
	if method == "weighted-sum":
		if weights_file is not None:
			weights = _read_weights(weights_file)
		elif seed is not None:
			weights = random_weights(DEFAULT_WEIGHT_COUNT if weight_count is None else weight_count, seed)
		else:
			weights = evenly_spaced_weights(DEFAULT_WEIGHT_COUNT if weight_count is None else weight_count)

	instance = parse_instance(instance_path)
	model = compile_model(instance, eta, gamma, settings)
	request = MethodRequest(
		objective=objective,
		bounds=PayoffTable.from_bounds(*bounds) if bounds else None,
		ideal=ideal,
		q=settings.q if q is None else q,
		normalization=normalization,
		resolution=resolution,
		weights=tuple(weights),
	)
	stats = SolveStats()
	outcome = get_method(method)(model, request, settings, stats)

	report = RunReport(
		instance_name=instance.name,
		instance_digest=instance_digest(instance),
		method=method,
		eta=eta,
		gamma=gamma,
		status=Status.OPTIMAL.value,
		bounds=outcome.bounds.as_dict() if outcome.bounds else None,
		statistics=stats.as_dict(),
		settings={
			"handling_divisor": settings.handling_divisor,
			"node_limit": settings.node_limit,
			"workers": settings.workers,
		},
	)
	if outcome.solution is not None:
		report.status = outcome.solution.status.value
		report.set_solution(outcome.solution)
	elif any(point.solution.status is not Status.OPTIMAL for point in outcome.front if point.solution):
		report.status = Status.FEASIBLE.value
	if outcome.lambda_value is not None:
		report.extras["lambda"] = outcome.lambda_value
	if outcome.G is not None:
		report.extras.update(
			{
				"G": outcome.G,
				"gap": outcome.gap,
				"q": request.q,
				"normalization": normalization,
				"ideal": list(ideal or outcome.bounds.L),
			}
		)
	if outcome.front_kind:
		rows = front_rows(outcome.front, outcome.front_kind)
		report.front = rows
		if front is not None:
			write_front_csv(front, rows, FRONT_HEADERS[outcome.front_kind])
			logger.info("Wrote %d front point(s) to %s", len(rows), front)
	elif front is not None:
		logger.warning("--front is ignored for --method %s", method)
	report.wall_time = time.perf_counter() - started
	_emit(report.dumps(), out)
	return 0


@cli.command("evaluate")
@click.option("--instance", "instance_path", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--solution", "solution_path", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--eta", type=float, help="Confidence level of the cost objective [default: 0.9].")
@click.option("--gamma", type=float, help="Confidence level of the time objective [default: 0.9].")
@click.option("--handling-divisor", type=float, help="Divides handling times into hours [default: 60].")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="Report file [default: stdout].")
def evaluate_command(instance_path, solution_path, eta, gamma, handling_divisor, out):
	"""Replay a plan: recompute both objectives and check every row."""
	settings = get_settings().override(handling_divisor=handling_divisor)
	instance = parse_instance(instance_path)
	solution = parse_solution(solution_path, instance)
	report = evaluate(
		instance,
		solution,
		settings.eta if eta is None else eta,
		settings.gamma if gamma is None else gamma,
		settings,
	)
	for check in report.violated_rows():
		logger.warning("%s violated: activity %.6f, rhs %.6f", check.label, check.activity, check.rhs)
	for violation in report.violations:
		logger.warning(violation)
	_emit(json.dumps(evaluation_to_dict(report), indent=2) + "\n", out)
	return 0 if report.feasible else 2


@cli.command("validate")
@click.option("--instance", "instance_path", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))
def validate_command(instance_path):
	"""Check an instance and print its errors and warnings."""
	report = validate(parse_instance(instance_path, check=False))
	for error in report.errors:
		click.echo(f"error: {error}")
	for warning in report.warnings:
		click.echo(f"warning: {warning}")
	click.echo("ok" if report.ok else "{0} error(s)".format(len(report.errors)))
	return 0 if report.ok else 1


def main(argv: list[str] | None = None) -> int:
	"""Run the command line and return the exit code."""
	try:
		code = cli.main(args=argv, prog_name="fuzzystp", standalone_mode=False)
	except click.ClickException as error:
		error.show()
		return 1
	except click.Abort:
		click.echo("Aborted.", err=True)
		return 1
	except InfeasibleError as error:
		click.echo(f"Error: {error}", err=True)
		return 2
	except (FuzzySTPError, OSError) as error:
		click.echo(f"Error: {error}", err=True)
		return 1
	return code or 0


if __name__ == "__main__":
	sys.exit(main())

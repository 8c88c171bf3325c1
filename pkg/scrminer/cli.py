import argparse
import logging
import sys
import time
from contextlib import contextmanager
from typing import Iterator, List, Optional, TextIO

from rich.console import Console
from rich.table import Table

from scrminer.analytics.benchmark import BenchSweep, PruningBenchmark, bench_frame
from scrminer.apriori.engine import classification_rules_via_postfilter, generate_rules, mine_frequent_itemsets
from scrminer.apriori.params import MiningParams, to_fraction
from scrminer.car.engine import mine_car_rules
from scrminer.config import ITEM_STYLES, LOG_LEVELS, AppConfig, load_config
from scrminer.datagen.generator import GenSpec, gen_planted, gen_random, make_planted
from scrminer.dataset.loader import Dataset, load_dataset, write_dataset
from scrminer.dataset.schema import load_schema_file, write_schema
from scrminer.errors import ConfigError, GenSpecError, ScrMinerError
from scrminer.lattice.search import RunLog
from scrminer.oracle.engine import compare_pattern_sets, oracle_scr_patterns
from scrminer.reporting.patterns_io import write_patterns, write_patterns_tsv, write_rules
from scrminer.reporting.stats import run_summary, write_stats
from scrminer.scr.engine import mine_scr_patterns
from scrminer.utils.logs import setup_logging

logger = logging.getLogger(__name__)

console = Console()
err_console = Console(stderr=True, markup=False, soft_wrap=True)

EXIT_OK = 0
EXIT_MISMATCH = 1


@contextmanager
def _open_out(path: Optional[str]) -> Iterator[TextIO]:
    if not path or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        yield f


def _add_data_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--data", required=True, help="Class-labeled CSV with a header row")
    p.add_argument("--schema", required=True, help="Schema file (name:role per line)")


def _add_threshold_args(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--min-supp", type=float, default=None, help="Minimum support ratio in (0, 1]")
    grp.add_argument("--min-supp-count", type=int, default=None, help="Minimum support number (absolute)")
    p.add_argument("--min-conf", type=float, default=None, help="Minimum confidence alpha")
    p.add_argument("--threads", type=int, default=None, help="Worker threads for support counting")


def _add_gen_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--attrs", type=int, default=4, help="Number of non-class attributes")
    p.add_argument("--values", type=int, default=2, help="Values per attribute")
    p.add_argument("--invariant", type=int, default=1, help="Leading attributes that are invariant")
    p.add_argument("--records", type=int, nargs="+", default=[50], metavar="N",
                   help="Records per class (one value for both classes, or two)")
    p.add_argument("--noise", type=float, default=0.0, help="Share of purely random records in [0, 1]")
    p.add_argument("--plant-shared", default=None, help="Shared items of the planted pair, e.g. A=1")
    p.add_argument("--plant-a", default=None, help="Varying items of the Cl1 rule, e.g. B=1")
    p.add_argument("--plant-b", default=None, help="Varying items of the Cl2 rule, e.g. B=2")
    p.add_argument("--plant-conf", type=float, default=0.8, help="Target confidence of both planted rules")
    p.add_argument("--plant-supp", type=float, default=0.1, help="Support ratio the planted rules must reach")
    p.add_argument("--no-decoy", action="store_true", help="Do not pin a decoy invariant attribute")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scrctl", description="SCR-Apriori pattern mining CLI")
    parser.add_argument("--config", default=None, help="Path to YAML config")
    parser.add_argument("--log-level", default=None, choices=list(LOG_LEVELS), help="Override config log level")

    sub = parser.add_subparsers(dest="cmd", required=True)

    p_mine = sub.add_parser("mine", help="Mine association rules, classification rules or SCR-patterns")
    _add_data_args(p_mine)
    p_mine.add_argument("--algo", default="scr", choices=["apriori", "car", "scr"])
    _add_threshold_args(p_mine)
    p_mine.add_argument("--item-style", default=None, choices=list(ITEM_STYLES))
    p_mine.add_argument("--postfilter", action="store_true",
                        help="apriori: keep only rules with a single class item as consequent")
    p_mine.add_argument("--out", default="-", help="Pattern/rule file (default: stdout)")
    p_mine.add_argument("--tsv", default=None, help="scr: tab-separated pattern file")
    p_mine.add_argument("--stats", default=None, help="Stats file (key<TAB>value + per-level table)")

    p_cmp = sub.add_parser("oracle-compare", help="Check SCR-Apriori against exhaustive post-filtering")
    _add_data_args(p_cmp)
    _add_threshold_args(p_cmp)
    p_cmp.add_argument("--cap", type=int, default=None, help="Maximum condsets the oracle may enumerate")
    p_cmp.add_argument("--item-style", default=None, choices=list(ITEM_STYLES))
    p_cmp.add_argument("--diff", default=None, help="Write the diff report here")
    p_cmp.add_argument("--corrupt-scr", action="store_true", help=argparse.SUPPRESS)

    p_gen = sub.add_parser("gen", help="Generate a synthetic dataset and schema")
    _add_gen_args(p_gen)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out-prefix", required=True, help="Writes <prefix>.csv and <prefix>.schema")

    p_bench = sub.add_parser("bench", help="Compare SCR-Apriori with CAR-Apriori over generated data")
    _add_gen_args(p_bench)
    p_bench.add_argument("--seeds", type=int, nargs="*", default=[0, 1, 2, 3, 4])
    p_bench.add_argument("--min-supp", type=float, nargs="+", default=None, help="Support ratios to sweep")
    p_bench.add_argument("--min-conf", type=float, default=None)
    p_bench.add_argument("--threads", type=int, default=None)
    p_bench.add_argument("--out", default=None, help="Tab-separated results file")

    return parser


def _params(args: argparse.Namespace, cfg: AppConfig) -> MiningParams:
    if args.min_supp is not None or args.min_supp_count is not None:
        supp, count = args.min_supp, args.min_supp_count
    else:
        supp, count = cfg.mining.min_supp, cfg.mining.min_supp_count
    conf = args.min_conf if args.min_conf is not None else cfg.mining.min_conf
    return MiningParams.create(min_supp=supp, min_supp_count=count, min_conf=conf)


def _threads(args: argparse.Namespace, cfg: AppConfig) -> int:
    threads = args.threads if args.threads is not None else cfg.system.threads
    if threads < 1:
        raise ConfigError(f"--threads must be >= 1, got {threads}")
    return threads


def _load(args: argparse.Namespace) -> Dataset:
    schema = load_schema_file(args.schema)
    with open(args.data, "r", encoding="utf-8", newline="") as f:
        return load_dataset(f, schema)


def _gen_spec(args: argparse.Namespace, seed: int) -> GenSpec:
    if len(args.records) not in (1, 2):
        raise GenSpecError("--records takes one or two counts")
    records = (args.records[0], args.records[-1])
    plant = [args.plant_shared, args.plant_a, args.plant_b]
    planted = None
    if any(plant):
        if not all(plant):
            raise GenSpecError("--plant-shared, --plant-a and --plant-b go together")
        planted = make_planted(args.plant_shared, args.plant_a, args.plant_b,
                               confidence=args.plant_conf, support=args.plant_supp)
    return GenSpec(
        n_attributes=args.attrs,
        values_per_attribute=args.values,
        n_invariant=args.invariant,
        records_per_class=records,
        seed=seed,
        planted=planted,
        noise=args.noise,
        decoy=not args.no_decoy,
    ).validate()


def cmd_mine(args: argparse.Namespace, cfg: AppConfig) -> int:
    params = _params(args, cfg)
    threads = _threads(args, cfg)
    style = args.item_style or cfg.mining.item_style
    decimals = cfg.output.decimals
    dataset = _load(args)
    schema = dataset.schema

    start = time.perf_counter()
    extra = {}
    if args.algo == "apriori":
        run_log = RunLog(algorithm="apriori")
        frequent = mine_frequent_itemsets(dataset, params, threads=threads, run_log=run_log)
        rules = generate_rules(frequent, dataset.n_total, params.min_conf)
        if args.postfilter:
            rules = classification_rules_via_postfilter(rules, schema)
        run_log.rule_count = len(rules)
        run_log.wall_time_sec = time.perf_counter() - start
        with _open_out(args.out) as out:
            written = write_rules(rules, schema, out, style, decimals)
        extra["frequent_itemsets"] = str(len(frequent))
    elif args.algo == "car":
        result, rules = mine_car_rules(dataset, params, threads=threads)
        run_log = result.run_log
        run_log.wall_time_sec = time.perf_counter() - start
        with _open_out(args.out) as out:
            written = write_rules(rules, schema, out, style, decimals)
        extra["frequent_ruleitems"] = str(len(result.ruleitems))
    else:
        result, patterns = mine_scr_patterns(dataset, params, threads=threads)
        run_log = result.run_log
        run_log.wall_time_sec = time.perf_counter() - start
        with _open_out(args.out) as out:
            written = write_patterns(patterns, schema, out, style, decimals)
        if args.tsv:
            with _open_out(args.tsv) as out:
                write_patterns_tsv(patterns, schema, dataset.n_total, out, decimals)
        extra["patterns"] = str(len(patterns))
        for branch, n in result.branch_counts().items():
            extra[f"branch{branch}"] = str(n)

    if args.stats:
        with _open_out(args.stats) as out:
            write_stats(out, {**run_summary(run_log, dataset, params), **extra}, [run_log])

    logger.info("%s: wrote %d records (%s)", args.algo, written, params.describe())
    if args.out and args.out != "-":
        table = Table(title=f"{args.algo} run")
        table.add_column("Key")
        table.add_column("Value")
        table.add_row("records", str(dataset.n_total))
        table.add_row("thresholds", params.describe())
        table.add_row("candidates counted", str(run_log.counted_total))
        table.add_row("kept", str(run_log.kept_total))
        table.add_row("written", str(written))
        console.print(table)
    return EXIT_OK


def cmd_oracle_compare(args: argparse.Namespace, cfg: AppConfig) -> int:
    params = _params(args, cfg)
    threads = _threads(args, cfg)
    cap = args.cap if args.cap is not None else cfg.mining.oracle_cap
    style = args.item_style or cfg.mining.item_style
    dataset = _load(args)
    schema = dataset.schema

    report = oracle_scr_patterns(dataset, params, cap=cap, threads=threads)
    _, patterns = mine_scr_patterns(dataset, params, threads=threads)
    if args.corrupt_scr and patterns:
        logger.warning("dropping one SCR pattern before comparison (test hook)")
        patterns = patterns[1:]

    diff = compare_pattern_sets(patterns, report.patterns)
    lines: List[str] = []
    for p in diff.missing_from_a:
        lines.append("missing from scr: " + p.render(schema, style, cfg.output.decimals))
    for p in diff.missing_from_b:
        lines.append("missing from oracle: " + p.render(schema, style, cfg.output.decimals))
    if args.diff:
        with _open_out(args.diff) as out:
            out.write("".join(line + "\n" for line in lines))

    if diff.empty:
        console.print(f"equal: {len(patterns)} patterns ({params.describe()})")
        return EXIT_OK
    for line in lines:
        console.print(line, markup=False)
    console.print(f"mismatch: {len(diff.missing_from_a)} missing from scr, "
                  f"{len(diff.missing_from_b)} missing from oracle")
    return EXIT_MISMATCH


def cmd_gen(args: argparse.Namespace, cfg: AppConfig) -> int:
    spec = _gen_spec(args, args.seed)
    dataset = gen_planted(spec) if spec.planted is not None else gen_random(spec)
    csv_path = f"{args.out_prefix}.csv"
    schema_path = f"{args.out_prefix}.schema"
    with open(csv_path, "w", encoding="utf-8", newline="") as f:
        write_dataset(dataset, f)
    with open(schema_path, "w", encoding="utf-8", newline="") as f:
        write_schema(dataset.schema, f)
    console.print(f"Wrote {dataset.n_total} records to {csv_path} and schema to {schema_path}")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, cfg: AppConfig) -> int:
    threads = _threads(args, cfg)
    spec = _gen_spec(args, seed=0)
    if args.min_supp:
        supps = [to_fraction(s) for s in args.min_supp]
    elif cfg.mining.min_supp is not None:
        supps = [to_fraction(cfg.mining.min_supp)]
    else:
        raise ConfigError("bench sweeps support ratios; set --min-supp")
    for s in supps:
        if not (0 < s <= 1):
            raise ConfigError(f"min_supp must be in (0, 1], got {float(s):g}")
    conf = to_fraction(args.min_conf if args.min_conf is not None else cfg.mining.min_conf)
    if not (0 <= conf <= 1):
        raise ConfigError(f"min_conf must be in [0, 1], got {float(conf):g}")

    bench = PruningBenchmark(threads=threads)
    rows = bench.run(BenchSweep(seeds=list(args.seeds), min_supps=supps, gen=spec, min_conf=conf))
    frame = bench_frame(rows)

    table = Table(title="SCR-Apriori vs CAR-Apriori")
    shown = ["seed", "min_supp", "car_ruleitems", "scr_ruleitems", "ruleitem_ratio",
             "car_rules", "scr_rules", "rule_ratio", "patterns", "car_time_sec", "scr_time_sec"]
    for col in shown:
        table.add_column(col)
    for rec in frame.to_dict(orient="records"):
        table.add_row(*(str(rec[c]) for c in shown))
    console.print(table)

    totals = bench.totals()
    if totals is not None:
        for sentence in totals.sentences():
            console.print(sentence, markup=False)

    if args.out:
        with _open_out(args.out) as out:
            frame.to_csv(out, sep="\t", index=False, lineterminator="\n")
    return EXIT_OK


COMMANDS = {
    "mine": cmd_mine,
    "oracle-compare": cmd_oracle_compare,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    setup_logging(args.log_level or "INFO")
    try:
        cfg = load_config(args.config)
        setup_logging(args.log_level or cfg.system.log_level)
        return COMMANDS[args.cmd](args, cfg)
    except ScrMinerError as e:
        err_console.print(f"error: {e}")
        return e.exit_code
    except OSError as e:
        err_console.print(f"error: {e}")
        return 2

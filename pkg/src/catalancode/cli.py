"""Command line front end.

Exit status is 0 on success, 1 when an argument or input is invalid, and 2
when an internal invariant fails.  Counts and codes are always printed as
exact decimal strings.

The count table can be cached between runs with ``--cache PATH`` or the
``CATALANCODE_CACHE`` environment variable (a directory).
"""

import argparse
import json
import os
import sys
from pathlib import Path

from . import mountain, oracle, triangulation
from .exceptions import BitSourceExhausted, EmptyClassError, InvariantError, ValidationError
from .randomness import ReplayBitSource, as_bit_source
from .selfcheck import run_selftest
from .series import verify_generating_function
from .table import DEFAULT_MAX_N, BCTable, build_table
from .walker import bits_to_code, code_to_bits, sample_path

CACHE_ENV = "CATALANCODE_CACHE"
CACHE_NAME = "bc_table.json"


class UsageError(ValidationError):
    pass


def _u64(text):
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _cache_path(args):
    if args.cache:
        return Path(args.cache)
    directory = os.environ.get(CACHE_ENV)
    return Path(directory) / CACHE_NAME if directory else None


def load_table(n_needed, args):
    """Table covering ``n_needed``, read from and written back to the cache when set."""
    path = _cache_path(args)
    if path is not None and path.exists():
        text = path.read_text()
        cached = BCTable.from_csv(text) if path.suffix == ".csv" else BCTable.from_json(text)
        if cached.n_max >= n_needed:
            return cached
    table = build_table(n_needed, max_n=args.max_n)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(table.to_csv() if path.suffix == ".csv" else table.to_json())
    return table


def _bit_source(args):
    if args.bits is not None and args.seed is not None:
        raise UsageError("give either --seed or --bits, not both")
    if args.bits is not None:
        return ReplayBitSource.from_hex(args.bits)
    return as_bit_source(args.seed)


def _code_from_args(args, count):
    if (args.code is None) == (args.codeword is None):
        raise UsageError("give exactly one of --code or --codeword")
    if args.codeword is not None:
        return bits_to_code(args.codeword, count)
    try:
        code = int(args.code)
    except ValueError:
        raise UsageError(f"--code must be a decimal integer, got {args.code!r}") from None
    if not 0 <= code < count:
        raise UsageError(f"--code must lie in [0, {count}), got {code}")
    return code


def _format_word(word, fmt):
    if fmt == "parens":
        return mountain.dyck_to_parentheses(word)
    if fmt == "json":
        return json.dumps(mountain.dyck_to_lattice_path(word))
    return word


def _parse_word(text, fmt):
    text = text.strip()
    if fmt == "parens":
        return mountain.parentheses_to_dyck(text)
    if fmt == "json":
        try:
            steps = json.loads(text)
        except ValueError as exc:
            raise UsageError(f"malformed JSON step list: {exc}") from None
        return mountain.lattice_path_to_dyck(steps)
    return mountain.check_dyck(text)


def _tri_context(args):
    return triangulation.check_context(args.vertices, args.missing)


def _require_nonempty(n_vertices, missing, table):
    count = triangulation.count_triangulations(n_vertices, missing, table)
    if not count:
        raise EmptyClassError(f"K_({n_vertices},-{missing}) has no triangulations: empty structure class")
    return count


# -- subcommands --------------------------------------------------------------


def cmd_table(args, out):
    table = build_table(args.n, max_n=args.max_n)
    text = table.to_csv() if args.format == "csv" else table.to_json() + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)


def cmd_count(args, out):
    if args.family == "triangulations":
        n_vertices, missing = _tri_context(args)
        table = load_table(n_vertices - 2, args)
        out.write(f"{triangulation.count_triangulations(n_vertices, missing, table)}\n")
    else:
        table = load_table(args.n, args)
        out.write(f"{table.lookup(args.n, 0)}\n")


def cmd_sample(args, out):
    src = _bit_source(args)
    if args.family == "triangulation":
        n_vertices, missing = _tri_context(args)
        table = load_table(n_vertices - 2, args)
        _require_nonempty(n_vertices, missing, table)
        root = (n_vertices - 2, missing)
    else:
        table = load_table(args.n, args)
        root = (args.n, 0)
    for _ in range(args.count):
        before = src.bits_consumed
        code, path = sample_path(table, root, src)
        if args.family == "triangulation":
            record = triangulation.decode(n_vertices, missing, path).to_dict(missing)
        else:
            word = mountain.decode_dyck(args.n, path)
            record = {"word": _word_record(word, args.format)}
        if args.stats:
            record.update(code=str(code), bits=src.bits_consumed - before, path_length=len(path))
            out.write(json.dumps(record) + "\n")
        elif args.family == "triangulation":
            out.write(json.dumps(record) + "\n")
        else:
            out.write(_format_word(word, args.format) + "\n")


def _read_input(value, stdin):
    return value if value is not None else stdin.read()


def cmd_rank(args, out, stdin):
    if args.family == "triangulation":
        text = _read_input(args.diagonals, stdin)
        try:
            data = json.loads(text)
        except ValueError as exc:
            raise UsageError(f"malformed triangulation JSON: {exc}") from None
        if isinstance(data, dict):
            tri, missing = triangulation.Triangulation.from_dict(data)
            n_vertices = tri.n
            if args.vertices is not None and args.vertices != n_vertices:
                raise UsageError(f"--vertices {args.vertices} disagrees with record n={n_vertices}")
            missing = args.missing if args.missing_given else missing
        else:
            if args.vertices is None:
                raise UsageError("--vertices is required with a bare diagonal list")
            n_vertices, missing = args.vertices, args.missing
            tri = triangulation.Triangulation(n_vertices, [tuple(d) for d in data])
        table = load_table(n_vertices - 2, args)
        code = triangulation.rank_triangulation(n_vertices, missing, tri, table)
        count = triangulation.count_triangulations(n_vertices, missing, table)
    else:
        word = _parse_word(_read_input(args.word, stdin), args.format)
        table = load_table(len(word) // 2, args)
        code = mountain.rank_dyck(word, table)
        count = table.lookup(len(word) // 2, 0)
    out.write(f"{code_to_bits(code, count)}\n" if args.as_codeword else f"{code}\n")


def cmd_unrank(args, out):
    if args.family == "triangulation":
        n_vertices, missing = _tri_context(args)
        table = load_table(n_vertices - 2, args)
        count = _require_nonempty(n_vertices, missing, table)
        tri = triangulation.unrank_triangulation(n_vertices, missing, _code_from_args(args, count), table)
        out.write(tri.to_json(missing) + "\n")
    else:
        table = load_table(args.n, args)
        code = _code_from_args(args, table.lookup(args.n, 0))
        out.write(_format_word(mountain.unrank_dyck(args.n, code, table), args.format) + "\n")


def _guard(args, default):
    if args.no_guard:
        return None
    return default if args.guard is None else args.guard


def _word_record(word, fmt):
    return mountain.dyck_to_lattice_path(word) if fmt == "json" else _format_word(word, fmt)


def cmd_enumerate(args, out):
    if args.family == "triangulations":
        n_vertices, missing = _tri_context(args)
        if n_vertices == 3 and missing:
            return
        forbidden = set(oracle.consecutive_ears(n_vertices, missing))
        for tri in oracle.enumerate_triangulations(n_vertices, limit=_guard(args, oracle.TRIANGULATION_LIMIT)):
            if not tri.diagonals & forbidden:
                out.write(tri.to_json(missing) + "\n")
    else:
        for word in oracle.enumerate_dyck(args.n, limit=_guard(args, oracle.DYCK_LIMIT)):
            out.write(json.dumps(_word_record(word, args.format)) + "\n")


def cmd_selftest(args, out):
    failed = False
    for name, passed, detail in run_selftest(args.nmax, args.degree):
        out.write(f"{'PASS' if passed else 'FAIL'} {name}: {detail}\n")
        failed |= not passed
    if failed:
        raise InvariantError("self-test failed")


def cmd_verify_gf(args, out):
    report = verify_generating_function(args.degree)
    for i, j, got, want in report.mismatches:
        out.write(f"mismatch x^{i} y^{j}: series {got}, table {want}\n")
    out.write(f"{'PASS' if report.ok else 'FAIL'} degree {args.degree}: {len(report.mismatches)} mismatches\n")
    if not report.ok:
        raise InvariantError("generating function disagrees with the table")


# -- parser -------------------------------------------------------------------


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


_nonneg.__name__ = "non-negative integer"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--cache", help="table cache file (.json or .csv)")
    common.add_argument("--max-n", type=_nonneg, default=DEFAULT_MAX_N,
                        help=f"largest table row to build (default {DEFAULT_MAX_N})")

    def polygon(p, required=True):
        p.add_argument("--vertices", "-N", type=_nonneg, required=required, help="polygon size N >= 3")
        p.add_argument("--missing", "-m", type=_nonneg, default=None, help="forbidden consecutive ears (default 0)")

    def word_format(p):
        p.add_argument("--format", choices=["ud", "parens", "json"], default="ud")

    def coded(p):
        p.add_argument("--code", help="decimal code")
        p.add_argument("--codeword", help="fixed-width bit string")

    def random_source(p):
        p.add_argument("--count", "-k", type=_nonneg, default=1)
        p.add_argument("--seed", type=_u64, default=None, help="64-bit seed")
        p.add_argument("--bits", help="replay these bits (hex string) instead of a seeded stream")
        p.add_argument("--stats", action="store_true", help="report code, bits consumed and path length")

    parser = _Parser(prog="catalancode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="build and export the count table")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")

    p = sub.add_parser("count", help="exact number of structures")
    fam = p.add_subparsers(dest="family", required=True)
    polygon(fam.add_parser("triangulations", parents=[common]))
    fam.add_parser("dyck", parents=[common]).add_argument("--n", type=_nonneg, required=True)

    p = sub.add_parser("sample", help="exactly uniform samples as JSON lines")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("triangulation", parents=[common])
    polygon(q)
    random_source(q)
    q = fam.add_parser("dyck", parents=[common])
    q.add_argument("--n", type=_nonneg, required=True)
    word_format(q)
    random_source(q)

    p = sub.add_parser("rank", help="code of a structure")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("triangulation", parents=[common])
    polygon(q, required=False)
    q.add_argument("--diagonals", help="JSON record or diagonal list; read from stdin when absent")
    q.add_argument("--as-codeword", action="store_true", help="print the fixed-width bit string")
    q = fam.add_parser("dyck", parents=[common])
    q.add_argument("--word", help="the word; read from stdin when absent")
    word_format(q)
    q.add_argument("--as-codeword", action="store_true", help="print the fixed-width bit string")

    p = sub.add_parser("unrank", help="structure of a code")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("triangulation", parents=[common])
    polygon(q)
    coded(q)
    q = fam.add_parser("dyck", parents=[common])
    q.add_argument("--n", type=_nonneg, required=True)
    coded(q)
    word_format(q)

    p = sub.add_parser("enumerate", help="brute-force enumeration (guarded), JSON lines")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("triangulations")
    polygon(q)
    q = fam.add_parser("dyck")
    q.add_argument("--n", type=_nonneg, required=True)
    word_format(q)
    for q in fam.choices.values():
        q.add_argument("--guard", type=_nonneg, default=None, help="override the size guard")
        q.add_argument("--no-guard", action="store_true", help="disable the size guard")

    p = sub.add_parser("selftest", help="run the invariant suite")
    p.add_argument("--nmax", type=_nonneg, default=60)
    p.add_argument("--degree", type=_nonneg, default=8)

    p = sub.add_parser("verify-gf", help="check the generating function against the table")
    p.add_argument("--degree", type=_nonneg, default=8)
    return parser


def run(argv=None, stdout=None, stdin=None, stderr=None):
    """Run the CLI and return its exit status."""
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"catalancode: error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 1
    if hasattr(args, "missing"):
        args.missing_given = args.missing is not None
        if args.missing is None:
            args.missing = 0
    try:
        if args.command == "table":
            cmd_table(args, stdout)
        elif args.command == "count":
            cmd_count(args, stdout)
        elif args.command == "sample":
            cmd_sample(args, stdout)
        elif args.command == "rank":
            cmd_rank(args, stdout, stdin)
        elif args.command == "unrank":
            cmd_unrank(args, stdout)
        elif args.command == "enumerate":
            cmd_enumerate(args, stdout)
        elif args.command == "selftest":
            cmd_selftest(args, stdout)
        elif args.command == "verify-gf":
            cmd_verify_gf(args, stdout)
    except InvariantError as exc:
        stderr.write(f"catalancode: invariant failure: {exc}\n")
        return 2
    except (ValidationError, BitSourceExhausted) as exc:
        stderr.write(f"catalancode: error: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

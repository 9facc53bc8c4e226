# cli/commands.py

import argparse
import json
import sys

from borcherds import congruence_check, l_expansion, l_via_product
from classpoly import PrecisionPolicy, hilbert
from config import RELATION_KMAX, USE_DATABASE_CACHE
from congruence import DiscriminantSet, hol_norm, twisted_p
from database import DatabaseManager
from linalg import write_relations
from logs import get_logger
from modular import MOD4, EXACT, NamedSeriesId, gen
from partitions import PartitionEngine, batch_mod4, exact, export_tsv, hrr, load_table, save_binary
from partitions.engine import DEFAULT_BATCH_LIMIT
from quadforms import class_number, classno_bound, survey
from search import enumerate_set, find_relations, search_stats, verify_identity
from utils import d_of, format_coefficients
from utils.errors import InputError, Pmod4Error, VerificationError

log = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2


def _database():
    if not USE_DATABASE_CACHE:
        return None
    db = DatabaseManager()
    db.create_all()
    return db


def _engine(values=None):
    table = load_table(values) if values else None
    return PartitionEngine(table=table, db=_database())


def _read_set(path):
    """Discriminants from a JSON list, a relation file, or whitespace-separated text."""
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        document = json.loads(text)
        members = document['set'] if isinstance(document, dict) else document
    except json.JSONDecodeError:
        members = text.split()
    try:
        return DiscriminantSet.of(int(D) for D in members)
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad discriminant set in {path}: {exc}") from exc


# ----- handlers -----

def cmd_partition(args):
    if args.n < 0:
        raise InputError(f"partition argument must be nonnegative, got {args.n}")
    if args.method == 'table':
        if not args.values:
            raise InputError("--method table needs --values")
        value = _engine(args.values).partition_mod4(args.n, policy=('table',))
        print(value)
    elif args.method == 'hrr':
        value = hrr(args.n)
        print(value % 4 if args.mod4 else value)
    elif args.mod4:
        if args.n > DEFAULT_BATCH_LIMIT:
            log.info("n = %d is past the recurrence limit %d; using hrr", args.n, DEFAULT_BATCH_LIMIT)
            print(hrr(args.n) % 4)
        else:
            print(int(batch_mod4(args.n)[args.n]))
    else:
        print(exact(args.n))
    return EXIT_OK


def cmd_classno(args):
    print(class_number(args.D))
    log.debug("class number bound for %d: %.2f", args.D, classno_bound(args.D))
    return EXIT_OK


def cmd_classno_survey(args):
    histogram = survey(args.max)
    for h, count in histogram.items():
        if not args.h or h in args.h:
            print(f"{h}\t{count}")
    print(f"total\t{sum(histogram.values())}")
    return EXIT_OK


def cmd_hilbert(args):
    policy = PrecisionPolicy(digits=args.digits) if args.digits else None
    poly = hilbert(args.D, policy, db=_database())
    print(poly)
    if args.mod4:
        print(' '.join(str(c) for c in poly.mod4()))
    return EXIT_OK


def cmd_series(args):
    domain = MOD4 if args.mod4 else EXACT
    if args.kind == 'PD':
        if args.D is None:
            raise InputError("series PD needs --D")
        series = twisted_p(args.D, args.prec, _engine(args.values))
    else:
        if args.name is None:
            raise InputError("series needs --name or PD")
        series = gen(args.name, args.prec, domain)
    print(format_coefficients(series.values(), series.valuation))
    return EXIT_OK


def cmd_borcherds_check(args):
    both_ways = l_expansion(args.D, args.prec) == l_via_product(args.D, args.prec)
    congruent = congruence_check(args.D, args.prec, _engine(args.values), exact=args.exact)
    print(f"l_expansion == l_via_product: {both_ways}")
    print(f"L_D = P(D;q) mod 4: {congruent}")
    return EXIT_OK if both_ways and congruent else EXIT_VERIFICATION


def cmd_search_stats(args):
    for stage, result in search_stats(args.stage).items():
        print(f"{stage}: {result}")
    return EXIT_OK


def cmd_find_relations(args):
    report, relations = find_relations(args.kmax, args.margin, _engine(args.values), progress=True)
    dset = relations[0].dset if relations else None
    if args.out:
        if dset is None:
            dset = enumerate_set(d_of(args.kmax))
        write_relations(args.out, dset, relations)
    print(f"#S = {report.size}, hS = {report.hS}, sturm = {report.sturm}, prec = {report.prec}")
    print(f"{len(relations)} relations; max k: {report.stages['max_ks']}")
    return EXIT_OK


def cmd_verify_identity(args):
    report = verify_identity(args.id, args.prec, _engine(args.values), progress=True)
    stats = report.stages['summary']
    print(f"identity {args.id}: {stats['term_count']} terms, counts {stats['counts']}, "
          f"hS = {report.hS}, max D = {report.stages['max_D']}, sturm = {report.sturm}")
    ok = report.stages['holds'] and report.stages.get('holds_mod2', True)
    scope = 'partial' if report.partial else 'full'
    print(f"{scope} check through q^{report.prec}: {'holds' if ok else 'FAILS'}")
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_ingest(args):
    table = load_table(args.text)
    if args.out:
        save_binary(table, args.out)
    if args.tsv:
        export_tsv(table, args.tsv)
    print(f"{len(table)} residues")
    return EXIT_OK


def cmd_normalize(args):
    dset = _read_set(args.set)
    series = hol_norm(args.D, dset, args.prec, _engine(args.values))
    print(format_coefficients(series.values(), series.valuation))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog='pmod4', description="Linear congruences for p(n) modulo 4.")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('partition', help="p(n) or p(n) mod 4")
    p.add_argument('n', type=int)
    p.add_argument('--mod4', action='store_true')
    p.add_argument('--method', choices=['recurrence', 'hrr', 'table'], default='recurrence')
    p.add_argument('--values', help="partition table (text or binary cache)")
    p.set_defaults(handler=cmd_partition)

    p = sub.add_parser('classno', help="class number h(-D)")
    p.add_argument('D', type=int)
    p.set_defaults(handler=cmd_classno)

    p = sub.add_parser('classno-survey', help="class number histogram over eligible D <= T")
    p.add_argument('--max', type=int, required=True)
    p.add_argument('--h', type=int, nargs='*', help="only these class numbers")
    p.set_defaults(handler=cmd_classno_survey)

    p = sub.add_parser('hilbert', help="Hilbert class polynomial H_{-D}")
    p.add_argument('D', type=int)
    p.add_argument('--digits', type=int)
    p.add_argument('--mod4', action='store_true')
    p.set_defaults(handler=cmd_hilbert)

    p = sub.add_parser('series', help="named q-series, or the twisted series P(D;q)")
    p.add_argument('kind', nargs='?', choices=['PD'])
    p.add_argument('--name', choices=[s.value for s in NamedSeriesId])
    p.add_argument('--D', type=int)
    p.add_argument('--prec', type=int, required=True)
    p.add_argument('--mod4', action='store_true')
    p.add_argument('--values')
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser('borcherds-check', help="compare both constructions of L_D and the mod 4 congruence")
    p.add_argument('--D', type=int, required=True)
    p.add_argument('--prec', type=int, required=True)
    p.add_argument('--exact', action='store_true', help="exact exponents on the L_D side")
    p.add_argument('--values')
    p.set_defaults(handler=cmd_borcherds_check)

    p = sub.add_parser('search-stats', help="search-space reduction statistics")
    p.add_argument('--stage', choices=['first', 'improved', 'filter', 'final', 'minh'])
    p.set_defaults(handler=cmd_search_stats)

    p = sub.add_parser('find-relations', help="kernel of the coefficient matrix for k <= kmax")
    p.add_argument('--kmax', type=int, default=RELATION_KMAX)
    p.add_argument('--margin', type=int, default=10)
    p.add_argument('--values')
    p.add_argument('--out')
    p.set_defaults(handler=cmd_find_relations)

    p = sub.add_parser('verify-identity', help="check a printed identity")
    p.add_argument('--id', type=int, choices=[1, 2], required=True)
    p.add_argument('--prec', type=int)
    p.add_argument('--values')
    p.set_defaults(handler=cmd_verify_identity)

    p = sub.add_parser('ingest', help="convert a partition value file to the binary cache")
    p.add_argument('--text', required=True)
    p.add_argument('--out')
    p.add_argument('--tsv')
    p.set_defaults(handler=cmd_ingest)

    p = sub.add_parser('normalize', help="holomorphic normalisation of P(D;q) for a set")
    p.add_argument('--D', type=int, required=True)
    p.add_argument('--set', required=True)
    p.add_argument('--prec', type=int, required=True)
    p.add_argument('--values')
    p.set_defaults(handler=cmd_normalize)

    return parser


def run(argv=None):
    """Parse ``argv`` and dispatch; returns the process exit code."""
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    # pydantic ValidationError is a ValueError
    except (InputError, ValueError) as exc:
        log.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as exc:
        log.error("%s", exc)
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except Pmod4Error as exc:
        log.exception("unexpected failure")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION

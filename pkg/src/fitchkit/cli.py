"""Command-line surface over the library.

Exit codes are the contract: 0 for a positive verdict or successful data
command, 2 for a negative verdict, 1 for usage or input errors.  Data goes
to stdout (or the requested output file); diagnostics go to stderr.
"""

import argparse
import os
import sys

from .derive import map_of_tree, recolor_map, triples_of_map
from .errors import FitchkitError
from .forbidden import find_forbidden_witness
from .generators import random_tree
from .hierarchy import is_hierarchy_like
from .io_formats import (
    parse_map,
    parse_scheme,
    parse_set_family,
    parse_tree,
    print_map,
    print_tree,
)
from .neighborhoods import build_index, check_k_elc
from .recognition import is_least_resolved, recognize


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors, but 2 means "negative
    # verdict" here; route usage problems to status 1 instead.
    def error(self, message):
        raise _UsageError(message)


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text, path=None):
    if not text.endswith("\n"):
        text += "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _member_text(member):
    return "{%s}" % ",".join(sorted(member))


def _cmd_recognize(args):
    fmap = parse_map(_read(args.map))
    result = recognize(fmap)
    if not result.is_fitch:
        _emit(result.reason.describe())
        return 2
    if args.k is not None:
        if args.k < 0:
            raise _UsageError("--k must be nonnegative")
        ok, member = check_k_elc(build_index(fmap), args.k)
        if not ok:
            _emit("ELC %s" % _member_text(member))
            return 2
    _emit(print_tree(result.tree), args.out)
    return 0


def _cmd_derive(args):
    tree = parse_tree(_read(args.tree))
    _emit(print_map(map_of_tree(tree)), args.out)
    return 0


def _cmd_lrt_check(args):
    tree = parse_tree(_read(args.tree))
    fmap = parse_map(_read(args.map))
    if is_least_resolved(tree, fmap):
        _emit("least-resolved")
        return 0
    _emit("not-least-resolved")
    return 2


def _cmd_forbidden(args):
    fmap = parse_map(_read(args.map))
    witness = find_forbidden_witness(fmap)
    if witness is None:
        _emit("none")
        return 0
    _emit(" ".join((witness.condition,) + witness.leaves + witness.colors))
    return 2


def _cmd_hierarchy_check(args):
    family = parse_set_family(_read(args.sets))
    verdict = is_hierarchy_like(family)
    if verdict.is_hierarchy_like:
        _emit("hierarchy-like")
        return 0
    i, j = verdict.violation
    _emit(
        "violation %s %s"
        % (_member_text(family.members[i]), _member_text(family.members[j]))
    )
    return 2


def _cmd_recolor(args):
    fmap = parse_map(_read(args.map))
    scheme = parse_scheme(_read(args.scheme))
    _emit(print_map(recolor_map(fmap, scheme)), args.out)
    return 0


def _cmd_triples(args):
    fmap = parse_map(_read(args.map))
    lines = sorted(str(t) for t in triples_of_map(fmap))
    for line in lines:
        _emit(line)
    return 0


def _cmd_gen(args):
    seed = args.seed
    if seed is None:
        raw = os.environ.get("FITCHKIT_SEED", "0")
        try:
            seed = int(raw)
        except ValueError:
            raise _UsageError("FITCHKIT_SEED must be an integer, got %r" % raw)
    try:
        tree = random_tree(args.leaves, args.colors, args.density, seed)
    except ValueError as exc:
        raise _UsageError(str(exc))
    if args.out_tree:
        _emit(print_tree(tree), args.out_tree)
    if args.out_map:
        _emit(print_map(map_of_tree(tree)), args.out_map)
    if not args.out_tree and not args.out_map:
        _emit(print_tree(tree))
    return 0


def _build_parser():
    parser = _Parser(prog="fitchkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide whether a map is explained by a tree")
    p.add_argument("--map", required=True, help="map document path")
    p.add_argument("--out", help="write the least-resolved tree here")
    p.add_argument("--k", type=int, help="also require at most k colors per edge")
    p.set_defaults(handler=_cmd_recognize)

    p = sub.add_parser("derive", help="compute the map a labeled tree explains")
    p.add_argument("--tree", required=True, help="labeled-Newick tree path")
    p.add_argument("--out", help="write the map document here")
    p.set_defaults(handler=_cmd_derive)

    p = sub.add_parser("lrt-check", help="is the tree least-resolved for the map")
    p.add_argument("--tree", required=True)
    p.add_argument("--map", required=True)
    p.set_defaults(handler=_cmd_lrt_check)

    p = sub.add_parser("forbidden", help="search for a forbidden submap pattern")
    p.add_argument("--map", required=True)
    p.set_defaults(handler=_cmd_forbidden)

    p = sub.add_parser("hierarchy-check", help="is a set family hierarchy-like")
    p.add_argument("--sets", required=True, help="set family document path")
    p.set_defaults(handler=_cmd_hierarchy_check)

    p = sub.add_parser("recolor", help="rewrite a map through a recoloring scheme")
    p.add_argument("--map", required=True)
    p.add_argument("--scheme", required=True, help="scheme document path")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_recolor)

    p = sub.add_parser("triples", help="list the rooted triples of a map")
    p.add_argument("--map", required=True)
    p.set_defaults(handler=_cmd_triples)

    p = sub.add_parser("gen", help="generate a seeded random tree and its map")
    p.add_argument("--leaves", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, help="default: FITCHKIT_SEED or 0")
    p.add_argument("--out-tree")
    p.add_argument("--out-map")
    p.set_defaults(handler=_cmd_gen)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except FitchkitError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except OSError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())

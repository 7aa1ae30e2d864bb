#!/usr/bin/env python

from __future__ import print_function

"""rooktool: command-line front end to rookpy"""

import argparse
import sys

from rookpy import triplet
from rookpy.triplet import (RookException, ElementSyntaxError, ValidationError, Ambient,
                            UNBOUNDED, parseElement, elementToJson, multiply, power,
                            root, classify, transpose, commutes, onesCount)
from rookpy.matrix import parseMatrix, fromMatrix
from rookpy.families import (Family, enumerateFamily, cayleyTable, rootsOfZero,
                             formatCayleyCsv, formatCayleyAscii, S2_LABELS, S2_ORDER)
from rookpy.census import (CensusError, DEFAULT_DIRECT_BUDGET, censusSweep,
                           writeCensusCsv, writeGnuplot)
from rookpy.diagram import DEFAULT_UNIT, renderAscii, renderSvg, renderProduct
from rookpy.checks import SUITES, runSuite

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FAILED = 2


class UsageError(Exception):
    def __init__(self, message, parser):
        Exception.__init__(self, message)
        self.parser = parser


class _Parser(argparse.ArgumentParser):
    # Usage errors go through run() so they share exit code 1
    def error(self, message):
        raise UsageError(message, self)


def _ambient(arg):
    return UNBOUNDED if arg.n is None else Ambient(arg.n)

def _element(text, arg):
    return parseElement(text, _ambient(arg))

def _show(x, arg):
    if getattr(arg, 'format', None) == 'json':
        return elementToJson(x)
    return str(x)


def cmdMul(arg):
    print(_show(multiply(_element(arg.x, arg), _element(arg.y, arg), _ambient(arg)), arg))
    return EXIT_OK

def cmdPow(arg):
    print(_show(power(_element(arg.x, arg), arg.j, _ambient(arg)), arg))
    return EXIT_OK

def cmdRoot(arg):
    x = _element(arg.x, arg)
    if x.isZero and arg.n is not None:
        for y in rootsOfZero(arg.n, arg.j):
            print(_show(y, arg))
        return EXIT_OK
    r = root(x, arg.j, _ambient(arg))
    print("none" if r is None else _show(r, arg))
    return EXIT_OK

def cmdClassify(arg):
    print(classify(_element(arg.x, arg), _ambient(arg)))
    return EXIT_OK

def cmdTranspose(arg):
    print(_show(transpose(_element(arg.x, arg)), arg))
    return EXIT_OK

def cmdCommutes(arg):
    amb = _ambient(arg)
    print("true" if commutes(_element(arg.x, arg), _element(arg.y, arg), amb) else "false")
    return EXIT_OK

def cmdOnes(arg):
    print(onesCount(_element(arg.x, arg)))
    return EXIT_OK

def cmdEnumerate(arg):
    for x in enumerateFamily(arg.n, Family.parse(arg.family)):
        print(_show(x, arg))
    return EXIT_OK

def cmdCayley(arg):
    table = cayleyTable(arg.n, Family.parse(arg.family))
    if arg.format == 'csv':
        sys.stdout.write(formatCayleyCsv(table))
    elif arg.letters:
        if arg.n != 2 or arg.family != 'Sn':
            raise ValidationError("Letter names exist only for S_2", {'n': arg.n, 'family': arg.family})
        sys.stdout.write(formatCayleyAscii(table, S2_LABELS, S2_ORDER))
    else:
        sys.stdout.write(formatCayleyAscii(table))
    return EXIT_OK

def cmdCensus(arg):
    rows = censusSweep(arg.n_min, arg.n_max, arg.budget_direct, arg.jobs)
    for row in rows:
        print(row)
    if arg.csv:
        with open(arg.csv, 'w', newline='') as fp:
            writeCensusCsv(rows, fp)
    if arg.gnuplot:
        with open(arg.gnuplot, 'w') as fp:
            writeGnuplot(rows, fp)
    bad = [row.n for row in rows if not row.conjecture_ok]
    if bad:
        print("Conjecture fails for n = %s" % ", ".join(map(str, bad)), file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK

def cmdVerify(arg):
    names = sorted(SUITES) if arg.suite == 'all' else [arg.suite]
    status = EXIT_OK
    for name in names:
        failures = runSuite(name, arg.n_max)
        if failures:
            status = EXIT_FAILED
            print("%s: %d failure(s)" % (name, len(failures)))
            for f in failures:
                print("    " + f)
        else:
            print("%s: ok" % name)
    return status

def cmdRender(arg):
    n = Ambient(arg.n).n
    x = _element(arg.x, arg)
    if arg.times is not None:
        if arg.format != 'svg':
            raise ValidationError("Products are rendered as SVG only")
        sys.stdout.write(renderProduct(x, _element(arg.times, arg), n, arg.unit))
    elif arg.format == 'svg':
        sys.stdout.write(renderSvg(x, n, arg.unit))
    else:
        sys.stdout.write(renderAscii(x, n))
    return EXIT_OK

def cmdFromMatrix(arg):
    if arg.path == '-':
        text = sys.stdin.read()
    else:
        with open(arg.path) as fp:
            text = fp.read()
    print(_show(fromMatrix(parseMatrix(text)), arg))
    return EXIT_OK


def _parser():
    parser = _Parser(prog='rooktool', description='Triplet arithmetic in the rook monoid M_n')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='Increase output verbosity')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    def command(name, fn, help, n_required=False, elements=(), fmt=None):
        p = sub.add_parser(name, help=help)
        p.add_argument('-n', type=int, required=n_required,
                       help='Ambient dimension' if n_required else 'Ambient dimension (omit for S_inf)')
        for e in elements:
            p.add_argument(e, help='Element: 0, <d,k,m> or JSON')
        if fmt:
            p.add_argument('--format', choices=fmt, default=fmt[0])
        p.set_defaults(func=fn)
        return p

    command('mul', cmdMul, 'Product xy', elements=('x', 'y'), fmt=('text', 'json'))
    p = command('pow', cmdPow, 'Power x^j', elements=('x',), fmt=('text', 'json'))
    p.add_argument('j', type=int)
    p = command('root', cmdRoot, 'j-th root of x (all roots when x is 0 and -n is given)',
                elements=('x',), fmt=('text', 'json'))
    p.add_argument('j', type=int)
    command('classify', cmdClassify, 'Zero, identity, idempotent or nilpotent(index)',
            elements=('x',))
    command('transpose', cmdTranspose, 'Transpose (inverse) of x', elements=('x',),
            fmt=('text', 'json'))
    command('commutes', cmdCommutes, 'Whether xy = yx', elements=('x', 'y'))
    command('ones', cmdOnes, 'Number of ones in x', elements=('x',))

    p = command('enumerate', cmdEnumerate, 'List a family in canonical order',
                n_required=True, fmt=('text', 'json'))
    p.add_argument('--family', default='Mn', help='Family tag, e.g. UT or MultipleOfD0(2)')
    p = command('cayley', cmdCayley, 'Cayley table of a family', n_required=True,
                fmt=('ascii', 'csv'))
    p.add_argument('--family', default='Mn', help='Family tag, e.g. UT or MultipleOfD0(2)')
    p.add_argument('--letters', action='store_true', help='Name the elements of S_2 0, a, b, e, f')

    p = sub.add_parser('census', help='Sweep psi(n) and r(n) over a range of n')
    p.add_argument('n_min', type=int)
    p.add_argument('n_max', type=int)
    p.add_argument('--budget-direct', type=int, default=DEFAULT_DIRECT_BUDGET,
                   help='Largest n counted pair by pair')
    p.add_argument('--jobs', type=int, default=1, help='Worker processes for the direct count')
    p.add_argument('--csv', help='Write the rows as CSV to this file')
    p.add_argument('--gnuplot', help='Write (n, r(n)) columns to this file')
    p.set_defaults(func=cmdCensus)

    p = sub.add_parser('verify', help='Run an invariant suite')
    p.add_argument('suite', choices=sorted(SUITES) + ['all'])
    p.add_argument('--n-max', type=int, default=None, help='Largest dimension checked')
    p.set_defaults(func=cmdVerify)

    p = command('render', cmdRender, 'Rook diagram of x', n_required=True, elements=('x',),
                fmt=('ascii', 'svg'))
    p.add_argument('--times', metavar='y', help='Render the product of x and y (SVG)')
    p.add_argument('--unit', type=int, default=DEFAULT_UNIT, help='Vertex spacing in SVG units')

    p = sub.add_parser('from-matrix', help='Triplet of a 0/1 matrix read from a file ("-" for stdin)')
    p.add_argument('path')
    p.add_argument('--format', choices=('text', 'json'), default='text')
    p.set_defaults(func=cmdFromMatrix)
    return parser


def _reportSyntax(e):
    print("rooktool: error: %s" % e.message, file=sys.stderr)
    print("    " + e.text, file=sys.stderr)
    print("    " + " " * e.position + "^", file=sys.stderr)


def run(argv):
    parser = _parser()
    try:
        arg = parser.parse_args(argv)
    except UsageError as e:
        e.parser.print_help(sys.stderr)
        print("rooktool: error: %s" % e, file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as e:
        # --help
        return e.code or EXIT_OK

    triplet.Debugging = arg.verbose
    try:
        return arg.func(arg)
    except ElementSyntaxError as e:
        _reportSyntax(e)
        return EXIT_INVALID
    except CensusError as e:
        print("rooktool: census failed: %s" % e, file=sys.stderr)
        return EXIT_FAILED
    except RookException as e:
        print("rooktool: error: %s" % e, file=sys.stderr)
        return EXIT_INVALID
    except (IOError, OSError) as e:
        print("rooktool: error: %s" % e, file=sys.stderr)
        return EXIT_INVALID


def main():
    sys.exit(run(sys.argv[1:]))

if __name__ == "__main__":
    main()

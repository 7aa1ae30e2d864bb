"""Census of nonzero products in M_n and the ratio r(n) for S_n"""

import csv
from fractions import Fraction
from multiprocessing import Pool

import numpy as np

from rookpy.triplet import (RookException, ValidationError, DBG, Triplet,
                            allNonzero, isNonzeroProduct)

DEFAULT_DIRECT_BUDGET = 24
VERIFIED_LIMIT = 70
MAX_CENSUS_N = 10 ** 4

ASYMPTOTIC_RATIO = Fraction(21, 40)

CSV_COLUMNS = ['n', 'psi_reduced', 'psi_conjecture', 'conjecture_ok',
               'ratio', 'ratio_closed_form (conditional)']


class BudgetExceededError(RookException):
    def __init__(self, message, detail=None):
        RookException.__init__(self, message, detail)

class CensusError(RookException):
    def __init__(self, message, detail=None):
        RookException.__init__(self, message, detail)


def _checkN(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValidationError("Census needs an integer n >= 1", {'n': n})
    if n > MAX_CENSUS_N:
        raise ValidationError("Census capped at n <= %d" % MAX_CENSUS_N, {'n': n})

def orderS(n):
    return n * (n + 1) * (2 * n + 1) // 6


def _rowCount(x, n):
    count = 0
    for y in allNonzero(n):
        if isNonzeroProduct(x, y):
            count += 1
    return count

def _chunkCount(args):
    (xs, n) = args
    return sum(_rowCount(Triplet(d, k, m), n) for (d, k, m) in xs)

def psiDirect(n, budget=DEFAULT_DIRECT_BUDGET, jobs=1):
    '''Literal count of ordered pairs of nonzero elements with nonzero product'''
    _checkN(n)
    if n > budget:
        raise BudgetExceededError("Direct census over budget", {'n': n, 'budget': budget})
    xs = [(x.d, x.k, x.m) for x in allNonzero(n)]
    if jobs <= 1:
        return _chunkCount((xs, n))
    chunks = [(xs[i::jobs], n) for i in range(jobs)]
    with Pool(jobs) as pool:
        return sum(pool.map(_chunkCount, chunks))


def _compatibleCount(d, k, m, dp, n):
    '''Number of y = <dp,k',m'> in M_n with xy != 0, for x = <d,k,m>'''
    lo = 1 - min(0, dp)
    hi = n - max(0, dp)
    top = min(m + d, hi)    # k' <= m + d
    base = k + d            # m' >= max(k', k + d)
    total = 0
    edge = min(top, base)
    if edge >= lo and hi >= base:
        total += (edge - lo + 1) * (hi - base + 1)
    a = max(lo, base + 1)
    if top >= a:
        total += (2 * hi - a - top + 2) * (top - a + 1) // 2
    return total

def rightCompatibleCount(x, n, excludeIdentity=False):
    '''|{y in M_n \\ {0} : xy != 0}|; with excludeIdentity, y ranges over S_n \\ {0}'''
    _checkN(n)
    if x.isZero:
        return 0
    total = sum(_compatibleCount(x.d, x.k, x.m, dp, n) for dp in range(1 - n, n))
    if excludeIdentity:
        total -= 1
    return total

def leftCompatibleCount(y, n):
    '''|{x in M_n \\ {0} : xy != 0}|, counted as the right count of y's transpose'''
    if y.isZero:
        return 0
    # (xy)^T = y^T x^T, and transposition permutes M_n \ {0}
    return rightCompatibleCount(Triplet(-y.d, y.k + y.d, y.m + y.d), n)

def _tripletArrays(n):
    xs = np.array([(x.d, x.k, x.m) for x in allNonzero(n)], dtype=np.int64)
    return (xs[:, 0], xs[:, 1], xs[:, 2])

def psiReduced(n):
    '''Sum over x of the compatible-y count, the inner (k',m') sum in closed form'''
    _checkN(n)
    (D, K, M) = _tripletArrays(n)
    top_all = M + D
    base = K + D
    total = 0
    for dp in range(1 - n, n):
        lo = 1 - min(0, dp)
        hi = n - max(0, dp)
        top = np.minimum(top_all, hi)
        edge = np.minimum(top, base)
        part1 = np.where((edge >= lo) & (hi >= base), (edge - lo + 1) * (hi - base + 1), 0)
        a = np.maximum(lo, base + 1)
        cnt = top - a + 1
        part2 = np.where(cnt > 0, (2 * hi - a - top + 2) * cnt // 2, 0)
        total += int(part1.sum()) + int(part2.sum())
    return total

def psiConjecture(n):
    _checkN(n)
    num = (n + 1) ** 7 - n ** 7 - (n + 1) ** 3 + n ** 3
    if num % 120:
        raise CensusError("Numerator not divisible by 120", {'n': n, 'numerator': num})
    return num // 120


def ratioFromPsi(n, psi):
    s = orderS(n)
    return Fraction(psi - 2 * s + 1, (s - 1) ** 2)

def ratio(n):
    if n < 2:
        raise ValidationError("r(n) needs n >= 2", {'n': n})
    return ratioFromPsi(n, psiReduced(n))

def ratioClosedForm(n):
    '''Conditional on the Polynexus conjecture for psi(n)'''
    if n < 2:
        raise ValidationError("r(n) needs n >= 2", {'n': n})
    num = 3 * (7 * n ** 5 + 28 * n ** 4 + 63 * n ** 3 + 18 * n ** 2 - 84 * n - 120)
    den = 10 * (n - 1) * (2 * n ** 2 + 5 * n + 6) ** 2
    return Fraction(num, den)

def decimalString(q, places=4):
    '''Fixed-point text of q; halves round away from zero'''
    scaled = int(abs(Fraction(q)) * 10 ** places + Fraction(1, 2))
    sign = "-" if q < 0 and scaled else ""
    (whole, frac) = divmod(scaled, 10 ** places)
    return "%s%d.%0*d" % (sign, whole, places, frac)


class CensusRow:
    def __init__(self, n, psi_direct, psi_reduced, psi_conjecture):
        self.n = n
        self.psi_direct = psi_direct
        self.psi_reduced = psi_reduced
        self.psi_conjecture = psi_conjecture
        self.conjecture_ok = (psi_reduced == psi_conjecture
                              and psi_direct in (None, psi_reduced))
        self.ratio = ratioFromPsi(n, psi_reduced)
        self.ratio_closed_form = ratioClosedForm(n)

    @property
    def ratioDecimal(self):
        return decimalString(self.ratio)

    def csvFields(self):
        return [self.n, self.psi_reduced, self.psi_conjecture,
                "true" if self.conjecture_ok else "false",
                "%d/%d" % (self.ratio.numerator, self.ratio.denominator),
                "%d/%d" % (self.ratio_closed_form.numerator, self.ratio_closed_form.denominator)]

    def __str__(self):
        direct = "-" if self.psi_direct is None else str(self.psi_direct)
        return "n=%d psi_direct=%s psi_reduced=%d psi_conjecture=%d ok=%s r=%s (%s)" % (
            self.n, direct, self.psi_reduced, self.psi_conjecture,
            self.conjecture_ok, self.ratio, self.ratioDecimal)


def censusSweep(n_min, n_max, budget=DEFAULT_DIRECT_BUDGET, jobs=1):
    if not 2 <= n_min <= n_max:
        raise ValidationError("Census sweep needs 2 <= n_min <= n_max",
                              {'n_min': n_min, 'n_max': n_max})
    rows = []
    for n in range(n_min, n_max + 1):
        direct = psiDirect(n, budget, jobs) if n <= budget else None
        row = CensusRow(n, direct, psiReduced(n), psiConjecture(n))
        DBG(row)
        rows.append(row)
    return rows

def writeCensusCsv(rows, fp):
    writer = csv.writer(fp, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.csvFields())

def writeGnuplot(rows, fp):
    fp.write("# n r(n)\n")
    for row in rows:
        fp.write("%d %s\n" % (row.n, row.ratioDecimal))

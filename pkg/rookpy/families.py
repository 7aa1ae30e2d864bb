"""Subsemigroup families of M_n: enumeration, orders, closures, Cayley tables"""

import csv
import io

from rookpy.triplet import (RookException, ValidationError, Ambient, Triplet, ZERO,
                            DBG, allNonzero, multiply, power, classify, transpose,
                            ZERO_ELEM, IDEMPOTENT, NILPOTENT, IDENTITY)


class NotInFamilyError(RookException):
    def __init__(self, message, detail=None):
        RookException.__init__(self, message, detail)

class NoFormulaError(RookException):
    def __init__(self, message, detail=None):
        RookException.__init__(self, message, detail)


def _sut(d, k, m, n, p): return d > 0
def _ut(d, k, m, n, p): return d >= 0
def _slt(d, k, m, n, p): return d < 0
def _lt(d, k, m, n, p): return d <= 0
def _uf(d, k, m, n, p): return d >= 0 and k == 1 and m == n - d
def _suf(d, k, m, n, p): return d > 0 and k == 1 and m == n - d
def _lf(d, k, m, n, p): return d <= 0 and k == 1 - d and m == n
def _slf(d, k, m, n, p): return d < 0 and k == 1 - d and m == n

class Family:
    '''Names a subsemigroup of M_n. Parameterised tags carry their
       parameter (d0, or j); ranges are checked against n on use.'''

    # tag : (membership predicate on nonzero (d,k,m,n,param), parameter name)
    tags = {
        'Mn':   (lambda d, k, m, n, p: True, None),
        'Sn':   (lambda d, k, m, n, p: not (d == 0 and k == 1 and m == n), None),
        'UT':   (_ut, None),
        'SUT':  (_sut, None),
        'UF':   (_uf, None),
        'SUF':  (_suf, None),
        'LT':   (_lt, None),
        'SLT':  (_slt, None),
        'LF':   (_lf, None),
        'SLF':  (_slf, None),
        'D':    (lambda d, k, m, n, p: d == 0, None),
        'B':    (lambda d, k, m, n, p: m == k, None),
        'MultipleOfD0':        (lambda d, k, m, n, p: d % p == 0, 'd0'),
        'AtLeastD0':           (lambda d, k, m, n, p: d >= p, 'd0'),
        'ZeroFirstRowCol':     (lambda d, k, m, n, p: k >= 2 and k + d >= 2, None),
        'ZeroFirstRowLastCol': (lambda d, k, m, n, p: k >= 2 and m + d <= n - 1, None),
        'AtMostJOnes':         (lambda d, k, m, n, p: m - k + 1 <= p, 'j'),
        'Mj':                  (lambda d, k, m, n, p: m <= p - max(0, d), 'j'),
    }

    _transposes = {'UT': 'LT', 'LT': 'UT', 'SUT': 'SLT', 'SLT': 'SUT',
                   'UF': 'LF', 'LF': 'UF', 'SUF': 'SLF', 'SLF': 'SUF',
                   'D': 'D', 'B': 'B', 'Mn': 'Mn', 'Sn': 'Sn',
                   'MultipleOfD0': 'MultipleOfD0', 'AtMostJOnes': 'AtMostJOnes',
                   'Mj': 'Mj', 'ZeroFirstRowCol': 'ZeroFirstRowCol'}

    commutativeTags = ('UF', 'SUF', 'LF', 'SLF', 'D')

    def __init__(self, tag, param=None):
        if tag not in self.tags:
            raise ValidationError("Unknown family %r" % tag)
        pname = self.tags[tag][1]
        if (pname is None) != (param is None):
            raise ValidationError("Family %s %s" % (tag,
                                  "takes no parameter" if pname is None else "needs parameter " + pname))
        self.tag = tag
        self.param = param

    @classmethod
    def parse(cls, text):
        '''"UT", "MultipleOfD0(2)", "AtMostJOnes(3)", ...'''
        text = text.strip()
        if text.endswith(')') and '(' in text:
            (tag, arg) = text[:-1].split('(', 1)
            try:
                return cls(tag.strip(), int(arg))
            except ValueError:
                raise ValidationError("Family parameter must be an integer: %r" % text)
        return cls(text)

    def checkRange(self, n):
        if n < 2:
            raise ValidationError("Families need n >= 2", {'n': n})
        pname = self.tags[self.tag][1]
        if pname == 'd0' and not 1 <= self.param <= n - 1:
            raise ValidationError("d0 out of range", {'d0': self.param, 'range': '1..%d' % (n - 1)})
        if self.tag == 'AtMostJOnes' and not 2 <= self.param <= n:
            raise ValidationError("j out of range", {'j': self.param, 'range': '2..%d' % n})
        if self.tag == 'Mj' and not 2 <= self.param < n:
            raise ValidationError("j out of range", {'j': self.param, 'range': '2..%d' % (n - 1)})

    def contains(self, x, n):
        if x.isZero:
            return True
        return self.tags[self.tag][0](x.d, x.k, x.m, n, self.param)

    def transposed(self):
        t = self._transposes.get(self.tag)
        if t is None:
            return None
        return Family(t, self.param)

    def __eq__(self, other):
        return isinstance(other, Family) and (self.tag, self.param) == (other.tag, other.param)

    def __hash__(self):
        return hash((self.tag, self.param))

    def __str__(self):
        if self.param is None:
            return self.tag
        return "%s(%d)" % (self.tag, self.param)

    __repr__ = __str__


def enumerateFamily(n, family):
    '''Members of the family in canonical order: ZERO, then lexicographic (d,k,m)'''
    family.checkRange(n)
    return [ZERO] + [x for x in allNonzero(n) if family.contains(x, n)]

def _pyramidal(n):
    return n * (n + 1) * (2 * n + 1) // 6

def orderFormula(n, family):
    family.checkRange(n)
    tag = family.tag
    if tag == 'Mn':
        return _pyramidal(n) + 1
    if tag == 'Sn':
        return _pyramidal(n)
    if tag in ('UT', 'LT'):
        return 1 + n * (n + 1) * (n + 2) // 6
    if tag in ('SUT', 'SLT'):
        return 1 + (n - 1) * n * (n + 1) // 6
    if tag in ('UF', 'LF'):
        return 1 + n
    if tag in ('SUF', 'SLF'):
        return n
    if tag == 'D':
        return 1 + n * (n + 1) // 2
    if tag == 'B':
        return 1 + n * n
    if tag == 'Mj':
        return _pyramidal(family.param) + 1
    raise NoFormulaError("No closed-form order for %s; count by enumeration" % family)

def countIdempotents(n):
    return n * (n + 1) // 2

def countNilpotents(n):
    return (n ** 3 - n) // 3 + 1

def tallyClassifications(n):
    '''(idempotents, nilpotents) of S_n by classify(); ZERO is both'''
    ambient = Ambient(n)
    idem = nil = 0
    for x in enumerateFamily(n, Family('Sn')):
        kind = classify(x, ambient).kind
        if kind == ZERO_ELEM:
            idem += 1
            nil += 1
        elif kind in (IDEMPOTENT, IDENTITY):
            idem += 1
        elif kind == NILPOTENT:
            nil += 1
    return (idem, nil)


def closure(generators, n):
    '''Least multiplication-closed superset of generators in M_n (worklist)'''
    ambient = Ambient(n)
    known = set(generators)
    order = list(known)
    work = list(known)
    while work:
        x = work.pop()
        for y in list(order):
            for z in (multiply(x, y, ambient), multiply(y, x, ambient)):
                if z not in known:
                    known.add(z)
                    order.append(z)
                    work.append(z)
    DBG("closure of", len(generators), "generators in M_%d:" % n, len(known), "elements")
    return known

def generatingSetA(n):
    return set(Triplet(1, k, m) for k in range(1, n) for m in range(k, n))

def rankSUT(n):
    return n * (n - 1) // 2

def expressAsPower(x, n):
    '''(generator in A_n, exponent) whose power is x, for x in SUT_n'''
    if not Family('SUT').contains(x, n) or (not x.isZero and x.m > n - x.d):
        raise NotInFamilyError("%s is not in SUT_%d" % (x, n))
    if x.isZero:
        return (Triplet(1, 1, 1), 2)
    return (Triplet(1, x.k, x.m + x.d - 1), x.d)

def verifyMinimality(n):
    '''True iff no proper subset A_n \\ {g} generates SUT_n'''
    gens = generatingSetA(n)
    target = set(enumerateFamily(n, Family('SUT')))
    for g in sorted(gens):
        if closure(gens - set([g]), n) == target:
            DBG("A_%d without" % n, g, "still generates SUT_%d" % n)
            return False
    return True

def rootsOfZero(n, j):
    '''All y in M_n with y^j = ZERO'''
    ambient = Ambient(n)
    return [y for y in enumerateFamily(n, Family('Mn')) if power(y, j, ambient).isZero]

def transposeSet(xs):
    return set(transpose(x) for x in xs)


class CayleyTable:
    def __init__(self, elements, products):
        self.elements = list(elements)
        self.products = products

    def product(self, x, y):
        return self.products[self.elements.index(x)][self.elements.index(y)]

    def isClosed(self):
        members = set(self.elements)
        return all(z in members for row in self.products for z in row)

    def reordered(self, elements):
        '''Same table with rows and columns in the given order'''
        if sorted(elements) != sorted(self.elements):
            raise ValidationError("Reordering must be a permutation of the table's elements")
        return CayleyTable(elements, [[self.product(x, y) for y in elements] for x in elements])


def cayleyTable(n, family):
    ambient = Ambient(n)
    elements = enumerateFamily(n, family)
    products = [[multiply(x, y, ambient) for y in elements] for x in elements]
    return CayleyTable(elements, products)

def isCommutative(table):
    size = len(table.elements)
    return all(table.products[i][j] == table.products[j][i]
               for i in range(size) for j in range(i + 1, size))

def formatCayleyCsv(table):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow([''] + [str(x) for x in table.elements])
    for (x, row) in zip(table.elements, table.products):
        writer.writerow([str(x)] + [str(z) for z in row])
    return out.getvalue()

def formatCayleyAscii(table, labels=None, order=None):
    '''Aligned table with a header row and column, like the S_2 table'''
    if order is not None:
        table = table.reordered(order)
    name = (lambda x: labels[x]) if labels else str
    heads = [name(x) for x in table.elements]
    w = max(len(h) for h in heads)
    body = " ".join(h.rjust(w) for h in heads)
    lines = [" " * w + " | " + body, "-" * w + "-+-" + "-" * len(body)]
    for (h, row) in zip(heads, table.products):
        lines.append(h.rjust(w) + " | " + " ".join(name(z).rjust(w) for z in row))
    return "\n".join(lines) + "\n"


# Letter names of S_2 and the order its table is usually printed in
S2_LABELS = {ZERO: '0', Triplet(1, 1, 1): 'a', Triplet(-1, 2, 2): 'b',
             Triplet(0, 1, 1): 'e', Triplet(0, 2, 2): 'f'}
S2_ORDER = [ZERO, Triplet(1, 1, 1), Triplet(-1, 2, 2), Triplet(0, 1, 1), Triplet(0, 2, 2)]

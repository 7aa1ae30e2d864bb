"""Verification suites behind `rooktool verify`.

Every suite takes an upper dimension and returns a list of failure
messages; an empty list means the suite passed.
"""

from rookpy.triplet import (Ambient, Triplet, ZERO, DBG, multiply, power, classify, transpose,
                            commutes, root, identity, isValid, isNonzeroProduct,
                            onesCount, NILPOTENT)
from rookpy.matrix import toMatrix, fromMatrix, matMultiply, matNilpotencyIndex
from rookpy.families import (Family, enumerateFamily, orderFormula, countIdempotents,
                             countNilpotents, tallyClassifications, closure,
                             generatingSetA, verifyMinimality, expressAsPower,
                             cayleyTable, isCommutative, transposeSet)
from rookpy.census import psiDirect, psiReduced, psiConjecture, ratio, ratioClosedForm
from rookpy.diagram import layout, compositeEdges


def _elements(n):
    return enumerateFamily(n, Family('Mn'))

def checkClosure(n_max=6):
    failures = []
    for n in range(2, n_max + 1):
        amb = Ambient(n)
        xs = _elements(n)
        for x in xs:
            for y in xs:
                z = multiply(x, y, amb)
                if not isValid(z, amb):
                    failures.append("M_%d: %s * %s = %s is not a member" % (n, x, y, z))
                if (not z.isZero) != isNonzeroProduct(x, y):
                    failures.append("M_%d: nonzero test disagrees on %s * %s" % (n, x, y))
                if onesCount(z) > min(onesCount(x), onesCount(y)):
                    failures.append("M_%d: ones grew in %s * %s" % (n, x, y))
    return failures

def checkAssociativity(n_max=4):
    failures = []
    for n in range(2, n_max + 1):
        amb = Ambient(n)
        xs = _elements(n)
        for x in xs:
            for y in xs:
                xy = multiply(x, y, amb)
                for z in xs:
                    if multiply(xy, z, amb) != multiply(x, multiply(y, z, amb), amb):
                        failures.append("M_%d: (%s %s) %s" % (n, x, y, z))
    return failures

def checkOracle(n_max=6):
    failures = []
    for n in range(2, n_max + 1):
        amb = Ambient(n)
        xs = _elements(n)
        mats = dict((x, toMatrix(x, n)) for x in xs)
        for x in xs:
            if fromMatrix(mats[x]) != x:
                failures.append("M_%d: matrix round trip of %s" % (n, x))
            if toMatrix(transpose(x), n) != mats[x].transposed():
                failures.append("M_%d: transpose of %s" % (n, x))
            for y in xs:
                if toMatrix(multiply(x, y, amb), n) != matMultiply(mats[x], mats[y]):
                    failures.append("M_%d: %s * %s differs from matrix product" % (n, x, y))
    return failures

def checkPowers(n_max=6):
    failures = []
    for n in range(2, n_max + 1):
        amb = Ambient(n)
        for x in _elements(n):
            acc = x
            for j in range(1, n + 2):
                if j > 1:
                    acc = multiply(acc, x, amb)
                if power(x, j, amb) != acc:
                    failures.append("M_%d: %s^%d" % (n, x, j))
                if not acc.isZero and onesCount(acc) != onesCount(x) - (j - 1) * abs(x.d):
                    failures.append("M_%d: ones of %s^%d" % (n, x, j))
    return failures

def checkIndex(n_max=8):
    failures = []
    for n in range(2, n_max + 1):
        amb = Ambient(n)
        for x in _elements(n):
            c = classify(x, amb)
            if c.kind != NILPOTENT:
                continue
            l = c.index
            if not 2 <= l <= n:
                failures.append("M_%d: index %d of %s out of range" % (n, l, x))
            if power(x, l - 1, amb).isZero or not power(x, l, amb).isZero:
                failures.append("M_%d: index %d of %s is not minimal" % (n, l, x))
            if matNilpotencyIndex(toMatrix(x, n)) != l:
                failures.append("M_%d: oracle index of %s" % (n, x))
    return failures

def checkRoots(n_max=5, j_max=4):
    failures = []
    for n in range(2, n_max + 1):
        amb = Ambient(n)
        xs = _elements(n)
        for j in range(1, j_max + 1):
            powers = dict((y, power(y, j, amb)) for y in xs)
            for x in xs:
                if x.isZero:
                    continue
                r = root(x, j, amb)
                found = [y for y in xs if powers[y] == x]
                if (r is not None) != (x.d % j == 0):
                    failures.append("M_%d: root existence of %s, j=%d" % (n, x, j))
                if r is not None and found != [r]:
                    failures.append("M_%d: %d-th root of %s not unique" % (n, j, x))
                if r is None and found:
                    failures.append("M_%d: missed %d-th root of %s" % (n, j, x))
    return failures

def checkInverse(n_max=5):
    failures = []
    for n in range(2, n_max + 1):
        amb = Ambient(n)
        one = identity(amb)
        xs = _elements(n)
        for x in xs:
            xt = transpose(x)
            if multiply(multiply(x, xt, amb), x, amb) != x or \
               multiply(multiply(xt, x, amb), xt, amb) != xt:
                failures.append("M_%d: inverse axioms for %s" % (n, x))
            for y in xs:
                if transpose(multiply(x, y, amb)) != multiply(transpose(y), xt, amb):
                    failures.append("M_%d: (%s %s)^T" % (n, x, y))
                if multiply(x, y, amb) == one and not (x == one and y == one):
                    failures.append("M_%d: %s * %s = 1" % (n, x, y))
    return failures

def checkCommutation(n_max=5):
    failures = []
    for n in range(2, n_max + 1):
        amb = Ambient(n)
        xs = _elements(n)
        for x in xs:
            for y in xs:
                same = multiply(x, y, amb) == multiply(y, x, amb)
                if commutes(x, y, amb) != same:
                    failures.append("M_%d: commutes(%s, %s)" % (n, x, y))
                if classify(x, amb).kind != NILPOTENT and classify(y, amb).kind != NILPOTENT \
                   and not same:
                    failures.append("M_%d: idempotents %s, %s do not commute" % (n, x, y))
    return failures

def checkCounts(n_max=30):
    failures = []
    for n in range(2, n_max + 1):
        (idem, nil) = tallyClassifications(n)
        if (idem, nil) != (countIdempotents(n), countNilpotents(n)):
            failures.append("S_%d: tally %s vs formulas %s" % (
                n, (idem, nil), (countIdempotents(n), countNilpotents(n))))
    return failures

def checkOrders(n_max=20):
    failures = []
    tags = ('Mn', 'Sn', 'UT', 'SUT', 'UF', 'SUF', 'LT', 'SLT', 'LF', 'SLF', 'D', 'B')
    for n in range(2, n_max + 1):
        for tag in tags:
            fam = Family(tag)
            if len(enumerateFamily(n, fam)) != orderFormula(n, fam):
                failures.append("%s_%d: order mismatch" % (tag, n))
    return failures

def allFamilies(n):
    fams = [Family(t) for t in ('Mn', 'Sn', 'UT', 'SUT', 'UF', 'SUF', 'LT', 'SLT',
                                'LF', 'SLF', 'D', 'B', 'ZeroFirstRowCol', 'ZeroFirstRowLastCol')]
    for p in range(1, n):
        fams += [Family('MultipleOfD0', p), Family('AtLeastD0', p)]
    for p in range(2, n + 1):
        fams.append(Family('AtMostJOnes', p))
    for p in range(2, n):
        fams.append(Family('Mj', p))
    return fams

def checkFamilies(n_max=6):
    failures = []
    for n in range(2, n_max + 1):
        for fam in allFamilies(n):
            if not cayleyTable(n, fam).isClosed():
                failures.append("%s_%d: not closed" % (fam, n))
        for tag in ('UT', 'SUT', 'UF', 'SUF', 'D'):
            fam = Family(tag)
            if transposeSet(enumerateFamily(n, fam)) != set(enumerateFamily(n, fam.transposed())):
                failures.append("%s_%d: transpose family" % (tag, n))
            commutative = isCommutative(cayleyTable(n, fam))
            expected = tag in Family.commutativeTags
            if tag in ('UT', 'SUT') and n < 3:
                continue
            if commutative != expected:
                failures.append("%s_%d: commutativity %s" % (tag, n, commutative))
        d_set = set(enumerateFamily(n, Family('D')))
        ut, lt = set(enumerateFamily(n, Family('UT'))), set(enumerateFamily(n, Family('LT')))
        # UF and LF only share 0 and 1
        uf, lf = set(enumerateFamily(n, Family('UF'))), set(enumerateFamily(n, Family('LF')))
        if d_set != ut & lt or uf & lf != set([ZERO, identity(Ambient(n))]):
            failures.append("D_%d: intersections" % n)
    return failures

def checkGenerators(n_max=8):
    failures = []
    for n in range(2, n_max + 1):
        amb = Ambient(n)
        sut = set(enumerateFamily(n, Family('SUT')))
        gens = generatingSetA(n)
        if len(gens) != n * (n - 1) // 2:
            failures.append("A_%d: size %d" % (n, len(gens)))
        if closure(gens, n) != sut:
            failures.append("A_%d does not generate SUT_%d" % (n, n))
        if not verifyMinimality(n):
            failures.append("A_%d is not minimal" % n)
        for x in sut:
            (g, e) = expressAsPower(x, n)
            if g not in gens or power(g, e, amb) != x:
                failures.append("SUT_%d: %s as power of %s" % (n, x, g))
    for n in range(2, 13):
        suf = closure(set([Triplet(1, 1, n - 1)]), n)
        if suf != set(enumerateFamily(n, Family('SUF'))) or len(suf) != n:
            failures.append("SUF_%d is not monogenic in the backward shift" % n)
    return failures

def checkCensus(n_max=70, direct_max=12):
    failures = []
    for n in range(1, n_max + 1):
        reduced = psiReduced(n)
        if reduced != psiConjecture(n):
            failures.append("psi(%d): reduced %d vs conjecture %d" % (n, reduced, psiConjecture(n)))
        if 2 <= n <= direct_max and psiDirect(n) != reduced:
            failures.append("psi(%d): direct vs reduced" % n)
        if n >= 2 and ratio(n) != ratioClosedForm(n):
            failures.append("r(%d) differs from the conditional closed form" % n)
        DBG("census check n =", n)
    return failures

def checkDiagrams(n_max=4):
    failures = []
    for n in range(2, n_max + 1):
        amb = Ambient(n)
        xs = _elements(n)
        for x in xs:
            if len(layout(x, n).edges) != onesCount(x):
                failures.append("M_%d: edge count of %s" % (n, x))
            for y in xs:
                if compositeEdges(x, y, n) != layout(multiply(x, y, amb), n).edges:
                    failures.append("M_%d: traced edges of %s * %s" % (n, x, y))
    return failures


SUITES = {
    'closure': checkClosure,
    'associativity': checkAssociativity,
    'oracle': checkOracle,
    'powers': checkPowers,
    'index': checkIndex,
    'roots': checkRoots,
    'inverse': checkInverse,
    'commutation': checkCommutation,
    'counts': checkCounts,
    'orders': checkOrders,
    'families': checkFamilies,
    'generators': checkGenerators,
    'census': checkCensus,
    'diagrams': checkDiagrams,
}

def runSuite(name, n_max=None):
    fn = SUITES[name]
    failures = fn() if n_max is None else fn(n_max)
    DBG("suite", name, "failures:", len(failures))
    return failures

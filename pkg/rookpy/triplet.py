#!/usr/bin/env python

from __future__ import print_function

"""Triplet calculus for the semigroup S_inf and the monoid M_n"""
import sys
import json
import string

Debugging = False

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1
MAX_DIGITS = 19

ZERO_ELEM = "zero"
IDENTITY = "identity"
IDEMPOTENT = "idempotent"
NILPOTENT = "nilpotent"

def DBG(*args):
    if Debugging:
        msg = " ".join([str(a) for a in args])
        print(msg, file=sys.stderr)


class RookException(Exception):
    """Base class for all rookpy exceptions"""
    def __init__(self, message, detail=None):
        Exception.__init__(self, message)
        self.message = message
        # optional key/value context, e.g. the inequality that failed
        self.detail = detail or {}

    def __str__(self):
        msg = self.message
        if self.detail:
            msg = msg + " (" + ", ".join(
                "%s: %s" % (k, self.detail[k]) for k in sorted(self.detail)) + ")"
        return msg

class ValidationError(RookException):
    def __init__(self, message, detail=None):
        RookException.__init__(self, message, detail)

class ElementSyntaxError(RookException):
    def __init__(self, message, text, position):
        RookException.__init__(self, message, {'position': position})
        self.text = text
        self.position = position


class Ambient:
    '''Dimension context: Finite(n) for M_n, Unbounded for S_inf.
       The ambient is passed to every call; elements never store it.'''
    def __init__(self, n=None):
        if n is not None:
            if isinstance(n, bool) or not isinstance(n, int):
                raise ValidationError("Dimension must be an integer, got %r" % (n,))
            if n < 2:
                raise ValidationError("Finite ambient needs n >= 2", {'n': n})
        self.n = n

    @property
    def isFinite(self):
        return self.n is not None

    def __eq__(self, other):
        return isinstance(other, Ambient) and self.n == other.n

    def __hash__(self):
        return hash(('Ambient', self.n))

    def __str__(self):
        return "Unbounded" if self.n is None else "Finite(%d)" % self.n

    __repr__ = __str__

UNBOUNDED = Ambient()


class Element:
    """Either ZERO or a Triplet"""
    isZero = False

    def sortKey(self):
        raise NotImplementedError


class _Zero(Element):
    isZero = True

    def sortKey(self):
        return (0,)

    def __eq__(self, other):
        return isinstance(other, _Zero)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash('zero')

    def __lt__(self, other):
        return self.sortKey() < other.sortKey()

    def __str__(self):
        return "0"

    def __repr__(self):
        return "ZERO"

    def __reduce__(self):
        return (_zero, ())

def _zero():
    return ZERO

ZERO = _Zero()


class Triplet(Element):
    '''Nonzero element <d,k,m>: ones on diagonal offset d, rows k..m.
       Build through makeElement(); the constructor itself does not validate.'''
    __slots__ = ('d', 'k', 'm')

    def __init__(self, d, k, m):
        object.__setattr__(self, 'd', d)
        object.__setattr__(self, 'k', k)
        object.__setattr__(self, 'm', m)

    def __setattr__(self, name, value):
        raise AttributeError("Triplet is immutable")

    def sortKey(self):
        return (1, self.d, self.k, self.m)

    def __eq__(self, other):
        return (isinstance(other, Triplet) and self.d == other.d
                and self.k == other.k and self.m == other.m)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.d, self.k, self.m))

    def __lt__(self, other):
        return self.sortKey() < other.sortKey()

    def __str__(self):
        return "<%d,%d,%d>" % (self.d, self.k, self.m)

    def __repr__(self):
        return "Triplet(%d, %d, %d)" % (self.d, self.k, self.m)

    def __reduce__(self):
        return (Triplet, (self.d, self.k, self.m))


class Classification:
    def __init__(self, kind, index=None):
        self.kind = kind
        self.index = index

    def __eq__(self, other):
        return (isinstance(other, Classification) and self.kind == other.kind
                and self.index == other.index)

    def __hash__(self):
        return hash((self.kind, self.index))

    def __str__(self):
        if self.kind == NILPOTENT:
            return "nilpotent(%d)" % self.index
        return self.kind

    __repr__ = __str__


def _checkInt(name, val):
    if isinstance(val, bool) or not isinstance(val, int):
        raise ValidationError("%s must be an integer, got %r" % (name, val))
    if val < INT64_MIN or val > INT64_MAX:
        raise ValidationError("%s does not fit in 64 bits" % name, {name: val})

def _nonzero(d, k, m):
    # computed results obey the same 64-bit range as parsed input
    for (name, val) in (('d', d), ('k', k), ('m', m)):
        _checkInt(name, val)
    return Triplet(d, k, m)

def makeElement(d, k, m, ambient=UNBOUNDED):
    '''Returns Triplet(d,k,m) if it is a member of the ambient, otherwise
       raises ValidationError naming the failed inequality.'''
    for (name, val) in (('d', d), ('k', k), ('m', m)):
        _checkInt(name, val)
    if k < 1 - min(0, d):
        raise ValidationError("Row of northwestern one too small",
                              {'inequality': 'k >= 1 - min(0,d)', 'd': d, 'k': k})
    if k > m:
        raise ValidationError("Empty block of ones",
                              {'inequality': 'k <= m', 'k': k, 'm': m})
    if ambient.isFinite:
        n = ambient.n
        if m > n - max(0, d):
            raise ValidationError("Block of ones leaves the %dx%d matrix" % (n, n),
                                  {'inequality': 'm <= n - max(0,d)', 'd': d, 'm': m, 'n': n})
    return Triplet(d, k, m)

def isValid(x, ambient):
    if x.isZero:
        return True
    if x.k < 1 - min(0, x.d) or x.k > x.m:
        return False
    return not ambient.isFinite or x.m <= ambient.n - max(0, x.d)

def identity(ambient):
    if not ambient.isFinite:
        raise ValidationError("S_inf has no identity")
    return Triplet(0, 1, ambient.n)

def allNonzero(n):
    '''Yields every nonzero element of M_n in lexicographic (d,k,m) order.
       Accepts n = 1, where the only one is <0,1,1>.'''
    for d in range(1 - n, n):
        top = n - max(0, d)
        for k in range(1 - min(0, d), top + 1):
            for m in range(k, top + 1):
                yield Triplet(d, k, m)


def multiply(x, y, ambient=UNBOUNDED):
    if x.isZero or y.isZero:
        return ZERO
    d = x.d
    k2 = max(x.k, y.k - d)
    m2 = min(x.m, y.m - d)
    if k2 > m2:
        return ZERO
    return _nonzero(d + y.d, k2, m2)

def isNonzeroProduct(x, y):
    if x.isZero or y.isZero:
        return False
    return y.k - x.m <= x.d <= y.m - x.k

def power(x, j, ambient=UNBOUNDED):
    if j < 1:
        raise ValidationError("Exponent must be positive", {'j': j})
    if x.isZero:
        return ZERO
    d = x.d
    kj = x.k - (j - 1) * min(0, d)
    mj = x.m - (j - 1) * max(0, d)
    if kj > mj:
        return ZERO
    return _nonzero(j * d, kj, mj)

def onesCount(x):
    if x.isZero:
        return 0
    return x.m - x.k + 1

def nilpotencyIndex(x):
    '''1 + ceil(ones/|d|) for d != 0, None otherwise'''
    if x.isZero or x.d == 0:
        return None
    return 1 + -(-onesCount(x) // abs(x.d))

def classify(x, ambient=UNBOUNDED):
    if x.isZero:
        return Classification(ZERO_ELEM)
    if x.d != 0:
        return Classification(NILPOTENT, nilpotencyIndex(x))
    if ambient.isFinite and x.k == 1 and x.m == ambient.n:
        return Classification(IDENTITY)
    return Classification(IDEMPOTENT)

def root(x, j, ambient=UNBOUNDED):
    '''Unique j-th root of a nonzero x, or None when j does not divide d.
       Roots of ZERO are not unique; see families.rootsOfZero().'''
    if x.isZero:
        raise ValidationError("Roots of zero are not unique; enumerate them instead")
    if j < 1:
        raise ValidationError("Root order must be positive", {'j': j})
    if x.d % j != 0:
        return None
    dr = x.d // j
    y = _nonzero(dr, x.k + (j - 1) * min(0, dr), x.m + (j - 1) * max(0, dr))
    assert power(y, j, ambient) == x
    return y

def transpose(x):
    if x.isZero:
        return ZERO
    return _nonzero(-x.d, x.k + x.d, x.m + x.d)

def commutes(x, y, ambient=UNBOUNDED):
    if x.isZero or y.isZero:
        return True
    (d, k, m) = (x.d, x.k, x.m)
    (d1, k1, m1) = (y.d, y.k, y.m)
    lo_xy, hi_xy = max(k, k1 - d), min(m, m1 - d)
    lo_yx, hi_yx = max(k1, k - d1), min(m1, m - d1)
    # both products nonzero and equal
    if lo_xy == lo_yx and hi_xy == hi_yx and lo_xy <= hi_xy:
        return True
    # both products zero
    return lo_xy > hi_xy and lo_yx > hi_yx

def noIdentityWitness(candidate, ambient=UNBOUNDED):
    '''Returns w with multiply(candidate, w) != w, showing S_inf has no 1.'''
    if ambient.isFinite:
        raise ValidationError("Witness search only makes sense in S_inf")
    if candidate.isZero:
        return Triplet(0, 1, 1)
    if candidate.d != 0:
        DBG("Rejected identity candidate", candidate, ": d != 0")
        w = Triplet(0, candidate.k + candidate.d, candidate.m + candidate.d)
    else:
        w = Triplet(0, candidate.k, candidate.m + 1)
    assert multiply(candidate, w) != w
    return w


def formatElement(x):
    return str(x)

def elementToJson(x):
    if x.isZero:
        return json.dumps("zero")
    return json.dumps({"d": x.d, "k": x.k, "m": x.m}, sort_keys=True,
                      separators=(',', ':'))

def _parseInt(text, pos, end):
    start = pos
    if pos < end and text[pos] in '+-':
        pos += 1
    digits = pos
    while pos < end and text[pos] in string.digits:
        pos += 1
    if pos == digits:
        raise ElementSyntaxError("Expected an integer", text, start)
    if pos - digits > MAX_DIGITS:
        raise ElementSyntaxError("Integer does not fit in 64 bits", text, start)
    return (int(text[start:pos]), pos)

def parseElement(text, ambient=UNBOUNDED):
    '''Accepts "0", "<d,k,m>", {"d":..,"k":..,"m":..} or "zero" (JSON).
       ElementSyntaxError.position indexes into text as given.'''
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    end = offset + len(s)
    if s == "0" or s == '"zero"':
        return ZERO
    if s.startswith('{'):
        return elementFromJson(text, ambient)
    if not s.startswith('<'):
        raise ElementSyntaxError("Element must be 0, <d,k,m> or JSON", text, offset)
    pos = offset + 1
    vals = []
    for sep in (',', ',', '>'):
        while pos < end and text[pos] == ' ':
            pos += 1
        (val, pos) = _parseInt(text, pos, end)
        vals.append(val)
        while pos < end and text[pos] == ' ':
            pos += 1
        if pos >= end or text[pos] != sep:
            raise ElementSyntaxError("Expected '%s'" % sep, text, pos)
        pos += 1
    if pos != end:
        raise ElementSyntaxError("Trailing characters", text, pos)
    return makeElement(vals[0], vals[1], vals[2], ambient)

def elementFromJson(text, ambient=UNBOUNDED):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ElementSyntaxError("Malformed JSON: %s" % e.msg, text, e.pos)
    except ValueError as e:
        # int() refuses overlong digit strings
        raise ElementSyntaxError("Malformed JSON: %s" % e, text, 0)
    if obj == "zero":
        return ZERO
    if not isinstance(obj, dict) or sorted(obj.keys()) != ['d', 'k', 'm']:
        raise ElementSyntaxError('JSON element must be "zero" or have keys d, k, m',
                                 text, len(text) - len(text.lstrip()))
    return makeElement(obj['d'], obj['k'], obj['m'], ambient)

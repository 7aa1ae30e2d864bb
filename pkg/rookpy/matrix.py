"""Dense n x n 0/1 rook matrices, used as an independent oracle for M_n"""

from rookpy.triplet import RookException, Triplet, ZERO, DBG


class NotInMnError(RookException):
    def __init__(self, message, detail=None):
        RookException.__init__(self, message, detail)

class RookConditionError(RookException):
    def __init__(self, message, detail=None):
        RookException.__init__(self, message, detail)

class DimensionError(RookException):
    def __init__(self, message, detail=None):
        RookException.__init__(self, message, detail)


class DenseRookMatrix:
    '''One bit-set per row; bit (j-1) of rows[i-1] holds entry x_ij.
       Indices are 1-based in the public methods, as in the matrix notation.'''
    def __init__(self, n, rows):
        if len(rows) != n:
            raise DimensionError("Expected %d rows, got %d" % (n, len(rows)))
        self.n = n
        self.rows = tuple(rows)
        full = (1 << n) - 1
        seen = 0
        for (i, r) in enumerate(self.rows):
            if r & ~full:
                raise DimensionError("Row %d has entries beyond column %d" % (i + 1, n))
            if r & (r - 1):
                raise RookConditionError("More than one 1 in row %d" % (i + 1))
            if r & seen:
                raise RookConditionError("More than one 1 in column %d" % r.bit_length())
            seen |= r

    @classmethod
    def fromEntries(cls, n, ones):
        rows = [0] * n
        for (i, j) in ones:
            rows[i - 1] |= 1 << (j - 1)
        return cls(n, rows)

    @classmethod
    def zero(cls, n):
        return cls(n, [0] * n)

    @classmethod
    def identity(cls, n):
        return cls(n, [1 << i for i in range(n)])

    def entry(self, i, j):
        return (self.rows[i - 1] >> (j - 1)) & 1

    def ones(self):
        '''Positions (i, j) of the ones, by row'''
        return [(i + 1, r.bit_length()) for (i, r) in enumerate(self.rows) if r]

    def isZero(self):
        return not any(self.rows)

    def transposed(self):
        return DenseRookMatrix.fromEntries(self.n, [(j, i) for (i, j) in self.ones()])

    def power(self, j):
        result = DenseRookMatrix.identity(self.n)
        for _ in range(j):
            result = matMultiply(result, self)
        return result

    def __eq__(self, other):
        return isinstance(other, DenseRookMatrix) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __str__(self):
        return formatMatrix(self)

    def __repr__(self):
        return "DenseRookMatrix(%d, %r)" % (self.n, self.ones())


def toMatrix(x, n):
    if x.isZero:
        return DenseRookMatrix.zero(n)
    return DenseRookMatrix.fromEntries(n, [(i, i + x.d) for i in range(x.k, x.m + 1)])

def fromMatrix(M):
    ones = M.ones()
    if not ones:
        return ZERO
    diagonals = set(j - i for (i, j) in ones)
    if len(diagonals) > 1:
        raise NotInMnError("Ones span %d diagonals" % len(diagonals),
                           {'diagonals': sorted(diagonals)})
    k = ones[0][0]
    m = ones[-1][0]
    if m - k + 1 != len(ones):
        raise NotInMnError("Block of ones is interrupted", {'rows': [i for (i, _) in ones]})
    return Triplet(diagonals.pop(), k, m)

def matMultiply(A, B):
    '''Plain triple-loop integer product; no shortcuts shared with the triplet code'''
    if A.n != B.n:
        raise DimensionError("Cannot multiply %dx%d by %dx%d" % (A.n, A.n, B.n, B.n))
    n = A.n
    ones = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            s = 0
            for t in range(1, n + 1):
                s += A.entry(i, t) * B.entry(t, j)
            if s:
                ones.append((i, j))
    return DenseRookMatrix.fromEntries(n, ones)

def matNilpotencyIndex(M):
    '''Least l >= 1 with M^l = 0, or None if M^n != 0'''
    P = M
    for l in range(1, M.n + 1):
        if P.isZero():
            return l
        P = matMultiply(P, M)
    DBG("Matrix not nilpotent after", M.n, "powers")
    return None


def formatMatrix(M):
    return "".join(
        "".join(str(M.entry(i, j)) for j in range(1, M.n + 1)) + "\n"
        for i in range(1, M.n + 1))

def parseMatrix(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    n = len(lines)
    if n == 0:
        raise DimensionError("Empty matrix text")
    ones = []
    for (i, ln) in enumerate(lines):
        if len(ln) != n:
            raise DimensionError("Line %d has %d characters, expected %d" % (i + 1, len(ln), n))
        for (j, c) in enumerate(ln):
            if c == '1':
                ones.append((i + 1, j + 1))
            elif c != '0':
                raise RookConditionError("Unexpected character %r at line %d column %d" % (c, i + 1, j + 1))
    return DenseRookMatrix.fromEntries(n, ones)

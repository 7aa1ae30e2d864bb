"""Rook n-diagrams of M_n elements, in ASCII and SVG"""

DEFAULT_UNIT = 40
ASCII_MAX_SLOPE = 3
ASCII_CELL = 4

SVG_HEADER = '<?xml version="1.0" encoding="UTF-8"?>'


class DiagramLayout:
    '''Vertex i sits at x = (i-1)*unit; top row at y = 0, bottom at y = unit.
       edges holds (top vertex, bottom vertex) pairs.'''
    def __init__(self, n, unit, edges):
        self.n = n
        self.unit = unit
        self.edges = edges

    def vertexX(self, i):
        return (i - 1) * self.unit

    def __eq__(self, other):
        return isinstance(other, DiagramLayout) and (self.n, self.edges) == (other.n, other.edges)

    def __str__(self):
        return "DiagramLayout(n=%d, edges=%s)" % (self.n, self.edges)

    __repr__ = __str__


def layout(x, n, unit=DEFAULT_UNIT):
    if x.isZero:
        return DiagramLayout(n, unit, [])
    return DiagramLayout(n, unit, [(i, i + x.d) for i in range(x.k, x.m + 1)])

def compositeEdges(x, y, n):
    '''Follow each edge of x through the shared middle row into y'''
    below = dict(layout(y, n).edges)
    return [(i, below[j]) for (i, j) in layout(x, n).edges if j in below]


def renderAscii(x, n):
    lay = layout(x, n)
    width = ASCII_CELL * (n - 1) + 1

    def row(marks):
        cells = [' '] * (width + ASCII_CELL)
        for (col, s) in marks:
            cells[col:col + len(s)] = list(s)
        return "".join(cells).rstrip()

    labels = row([(ASCII_CELL * (i - 1), str(i)) for i in range(1, n + 1)])
    vertices = row([(ASCII_CELL * (i - 1), 'o') for i in range(1, n + 1)])
    d = 0 if x.isZero else x.d
    if abs(d) > ASCII_MAX_SLOPE:
        lines = [labels, vertices, vertices, labels,
                 "edges: " + " ".join("%d->%d" % e for e in lay.edges)]
    else:
        ch = '|' if d == 0 else ('\\' if d > 0 else '/')
        steps = [row([(ASCII_CELL * (i - 1) + d * t, ch) for (i, _) in lay.edges])
                 for t in range(1, ASCII_CELL)]
        lines = [labels, vertices] + steps + [vertices, labels]
    return "\n".join(lines) + "\n"


def _line(x1, y1, x2, y2, stroke='black', dash=None):
    attrs = 'x1="%d" y1="%d" x2="%d" y2="%d" stroke="%s" stroke-width="2"' % (x1, y1, x2, y2, stroke)
    if dash:
        attrs += ' stroke-dasharray="%s"' % dash
    return '<line %s/>' % attrs

def _document(n, unit, levels, body):
    pad = unit // 2
    w = (n - 1) * unit + 2 * pad
    h = levels * unit + 2 * pad
    out = [SVG_HEADER,
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%d" height="%d" viewBox="0 0 %d %d">' % (w, h, w, h),
           '<g transform="translate(%d,%d)" font-family="monospace" font-size="10" text-anchor="middle">' % (pad, pad)]
    out += body
    out += ['</g>', '</svg>']
    return "\n".join(out) + "\n"

def _vertexRows(n, unit, levels):
    body = []
    for level in range(levels + 1):
        for i in range(1, n + 1):
            body.append('<circle cx="%d" cy="%d" r="3" fill="black"/>' % ((i - 1) * unit, level * unit))
    for i in range(1, n + 1):
        body.append('<text x="%d" y="-6">%d</text>' % ((i - 1) * unit, i))
    for i in range(1, n + 1):
        body.append('<text x="%d" y="%d">%d</text>' % ((i - 1) * unit, levels * unit + 14, i))
    return body

def renderSvg(x, n, unit=DEFAULT_UNIT):
    lay = layout(x, n, unit)
    body = [_line(lay.vertexX(i), 0, lay.vertexX(j), unit) for (i, j) in lay.edges]
    return _document(n, unit, 1, body + _vertexRows(n, unit, 1))

def renderProduct(x, y, n, unit=DEFAULT_UNIT):
    '''x on top, y below, sharing the middle row; the traced edges of xy dashed in red'''
    top = layout(x, n, unit)
    bottom = layout(y, n, unit)
    body = [_line(top.vertexX(i), 0, top.vertexX(j), unit) for (i, j) in top.edges]
    body += [_line(bottom.vertexX(i), unit, bottom.vertexX(j), 2 * unit) for (i, j) in bottom.edges]
    body += [_line(top.vertexX(i), 0, top.vertexX(j), 2 * unit,
                   stroke='red', dash='4,3')
             for (i, j) in compositeEdges(x, y, n)]
    return _document(n, unit, 2, body + _vertexRows(n, unit, 2))

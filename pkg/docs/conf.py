# -*- coding: utf-8 -*-
#
# Sphinx configuration for the rookpy documentation.

extensions = []

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build']

project = u'rookpy'
copyright = u'2026, the rookpy authors'
version = '0.1'
release = '0.1.0'

pygments_style = 'sphinx'

html_theme = 'default'
htmlhelp_basename = 'rookpydoc'

# rooktool gets its own man page from rooktool.rst
man_pages = [
    ('index', 'rookpy', u'rookpy Documentation',
     [u'the rookpy authors'], 7),
    ('rooktool', 'rooktool', u'Triplet arithmetic in the rook monoid M_n',
     [u'the rookpy authors'], 1),
]

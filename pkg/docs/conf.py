#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# score.homotopy documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

autodoc_member_order = 'bysource'
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'score.homotopy'
copyright = '2024, strg.at'
version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'score-default'
html_theme_options = {
    'sidebarwidth': '300',
}
html_theme_path = ['.']
htmlhelp_basename = 'scorehomotopydoc'

man_pages = [
    ('index', 'score-homotopy', 'score.homotopy Documentation',
     ['strg.at'], 1)
]

intersphinx_mapping = {
    'python': ('http://docs.python.org/3/', None),
    'sqlalchemy': ('http://docs.sqlalchemy.org/en/latest/', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
    'score': ('http://docs.strg.at/', None),
}

# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
]

source_suffix = ['.rst']
master_doc = 'index'

project = 'prereqrefiner'
copyright = '2026 The prereqrefiner Developers'
author = 'The prereqrefiner Developers'
version = '0.1'
release = '0.1.0'

exclude_patterns = []
pygments_style = 'default'
html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'prereqrefinerdoc'

autodoc_member_order = 'bysource'

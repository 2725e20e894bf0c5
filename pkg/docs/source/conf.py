# -*- coding: utf-8 -*-
#
# amalgenus documentation build configuration file.
#
# Only values that differ from the Sphinx defaults are set here.

import sys
import os

# The package lives under src/; make it importable without installing.
sys.path.insert(0, os.path.abspath('../../src'))
import amalgenus

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.mathjax',
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'amalgenus'
copyright = u'2026, amalgenus developers'
author = u'amalgenus developers'

# The short X.Y version and the full version, including alpha/beta/rc tags.
version = amalgenus.__version__
release = amalgenus.__version__

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'amalgenusdoc'

# -- Options for LaTeX, manual page and Texinfo output --------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'amalgenus.tex', u'amalgenus Documentation',
     u'amalgenus developers', 'manual'),
]

man_pages = [
    (master_doc, 'amalgenus', u'amalgenus Documentation',
     [author], 1)
]

texinfo_documents = [
    (master_doc, 'amalgenus', u'amalgenus Documentation',
     author, 'amalgenus',
     'Isomorphism classes and genus of amalgamated free products of '
     'finite groups.',
     'Miscellaneous'),
]

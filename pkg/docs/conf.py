#!/usr/bin/env python
# Sphinx configuration for the grothnorm documentation.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

import grothnorm

project = 'grothnorm'
author = "the grothnorm developers"
copyright = "2026, " + author
version = release = grothnorm.__version__

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.autosummary',
              'sphinx.ext.mathjax',
              'sphinx.ext.viewcode',
              'numpydoc']

# API pages are generated from the subpackage list in modules.rst
autosummary_generate = True
autodoc_default_options = {'members': True, 'member-order': 'bysource'}
numpydoc_show_class_members = False

source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Grothendieck-type norms of Hermitian matrices',
    'fixed_sidebar': True,
}
htmlhelp_basename = 'grothnormdoc'

latex_documents = [
    (master_doc, 'grothnorm.tex', 'grothnorm Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'grothnorm', 'grothnorm Documentation', [author], 1),
]

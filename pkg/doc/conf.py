# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import os
import sys

sys.path.insert(0, os.path.abspath('../'))

# -- Project information -----------------------------------------------------

project = 'lens-floer'
copyright = '2021, The lens-floer developers'
author = 'The lens-floer developers'

version = ''
release = '0.1.0'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'm2r2',
]

templates_path = ['_templates']
source_suffix = ['.rst', '.md']
master_doc = 'index'
language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = None

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'lensfloerdoc'

# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'lensfloer.tex', 'lens-floer Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'lens-floer', 'lens-floer Documentation',
     [author], 1)
]

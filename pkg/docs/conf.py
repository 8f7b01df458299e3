#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# carrycraft documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath(".."))

import carrycraft

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
    'numpydoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.mathjax'
]

autodoc_member_order = 'bysource'

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'carrycraft'
copyright = '2026, carrycraft developers'
author = 'carrycraft developers'

version = carrycraft.__version__
release = carrycraft.__version__

language = 'en'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_theme_options = {"collapse_navigation": True}

htmlhelp_basename = 'carrycraftdoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'carrycraft', 'carrycraft Documentation',
     [author], 1)
]

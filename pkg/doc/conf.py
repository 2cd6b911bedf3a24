# -*- coding: utf-8 -*-
#
# Sphinx configuration for the tiler manual

# -- Path setup --------------------------------------------------------------

import os
import sys
import datetime

# Current date
now = datetime.datetime.now()

# Path to package
froot = os.path.abspath("..")
fdoc = os.path.abspath(".")

# Name of package
repo = "tiler"

# Basic title/subtitle
desc = "edge-matched tilings and fractal tile trees"

# Make the package importable for autodoc
for _f in [froot]:
    if _f not in sys.path:
        sys.path.insert(0, _f)


# -- Project information -----------------------------------------------------

project = repo
copyright = f"{now.year}, tiler developers"
author = "tiler developers"

# Short X.Y version
version = "1.0"
# Full version
release = "1.0.0"


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx_copybutton',
]

# Keep prompts and output out of copied code
copybutton_exclude = '.linenos, .gp, .go'

# Main title
title = "%s: %s" % (repo, desc)

source_suffix = '.rst'
source_encoding = "utf-8-sig"
master_doc = 'index'

# Examples in docstrings are illustrations, not doctests
doctest_test_doctest_blocks = ''

language = "en"
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinxdoc'

# Clean up autodoc tables of contents
toc_object_entries = False

html_title = title
html_short_title = repo
htmlhelp_basename = '%sdoc' % repo


# -- Options for other output ------------------------------------------------

latex_documents = [
    (master_doc, '%s.tex' % repo, '%s Documentation' % repo, author,
     'howto'),
]

man_pages = [
    (master_doc, repo, '%s Documentation' % repo, [author], 1),
]

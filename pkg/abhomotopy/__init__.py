#!/usr/bin/env python
# -*- coding: utf-8 -*-

__title__ = 'abhomotopy'
__version__ = '0.1.0'
__description__ = 'Exact verifier for the (a,b)-algebra up to homotopy envelope'
__url__ = ''
__author__ = 'abhomotopy developers'
__author_email__ = ''
__license__ = 'MIT'
__copyright__ = 'Copyright 2026 abhomotopy developers'

#!/usr/bin/env python
# -*- coding: utf-8 -*-
from .superalgebra import *
from .polyvector import *
from .poisson import *
from .builders import *

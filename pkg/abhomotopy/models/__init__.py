#!/usr/bin/env python
# -*- coding: utf-8 -*-
from .base_model import *
from .config import *

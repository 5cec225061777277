#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Utilidades del sistema fracgrad
"""

__version__ = "1.0.0"

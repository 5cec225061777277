#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulos de cálculo del sistema fracgrad
"""

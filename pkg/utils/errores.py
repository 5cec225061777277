#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
ERRORES DEL SISTEMA
Jerarquía de excepciones de fracgrad.

Cada excepción lleva el código de salida que usa la CLI:
  0 éxito · 1 error de uso · 2 error de E/S · 3 violación de contrato numérico
"""


class FracgradError(Exception):
    """Base de todos los errores del sistema."""
    exit_code = 1


class UsageError(FracgradError):
    """Argumentos de línea de comandos o configuración inválidos."""
    exit_code = 1


class ImageIOError(FracgradError):
    """Archivo inexistente, ilegible o imposible de escribir."""
    exit_code = 2


class DecodeError(ImageIOError):
    """Archivo de imagen mal formado, truncado o en formato no soportado."""


class EncodeError(ImageIOError):
    """La imagen no puede escribirse en el formato pedido."""


class DomainError(FracgradError, ValueError):
    """Parámetro fuera del dominio de la operación (orden no finito, K = 0, sigma <= 0...)."""
    exit_code = 3


class ContractError(FracgradError, ValueError):
    """Precondición violada: muestras no finitas, negativas, fuera de [0, 255] o no enteras."""
    exit_code = 3

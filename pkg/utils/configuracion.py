#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
CONFIGURACIÓN
Constantes por defecto, variables de entorno y registro (logging) del sistema.

Variables de entorno:
  FRACGRAD_THREADS   : tope de hilos de trabajo (entero positivo)
  FRACGRAD_LOG_LEVEL : nivel de registro (DEBUG, INFO, WARNING, ERROR)
"""

import argparse
import logging
import os

from utils.errores import UsageError

# ─────────────────────────────────────────────
# VALORES POR DEFECTO
# ─────────────────────────────────────────────
TERMINOS_POR_DEFECTO = 4          # "only the first four terms"
ALFA_POR_DEFECTO     = 1.0
FACTOR_RADIO_BLUR    = 3          # radio = ceil(3·sigma)
GRIS_MEDIO           = 127.5      # pivote del contraste
MAXIMO_8BIT          = 255.0

ENV_HILOS = "FRACGRAD_THREADS"
ENV_NIVEL = "FRACGRAD_LOG_LEVEL"

FORMATO_LOG = "[%(levelname)s] %(name)s: %(message)s"

logger = logging.getLogger("fracgrad")


def configurar_logging(nivel=None):
    """
    Configura el logger del paquete una sola vez (handler a stderr).

    Args:
        nivel: nombre o número de nivel; si es None se usa FRACGRAD_LOG_LEVEL o WARNING
    """
    if nivel is None:
        nivel = os.environ.get(ENV_NIVEL, "WARNING")
    if isinstance(nivel, str):
        nivel_num = logging.getLevelName(nivel.strip().upper())
        if not isinstance(nivel_num, int):
            nivel_num = logging.WARNING
    else:
        nivel_num = int(nivel)

    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(FORMATO_LOG))
        logger.addHandler(handler)
    logger.setLevel(nivel_num)
    return logger


def hilos_por_defecto():
    return max(1, os.cpu_count() or 1)


def resolver_hilos(entorno=None):
    """
    Cantidad de hilos de trabajo según FRACGRAD_THREADS.

    Si la variable falta se usa la cantidad de CPUs; si es inválida se avisa y se usa
    el valor por defecto.

    Ejemplos:
        >>> resolver_hilos({"FRACGRAD_THREADS": "2"})
        2
    """
    entorno = os.environ if entorno is None else entorno
    crudo = entorno.get(ENV_HILOS)
    if crudo is None or not str(crudo).strip():
        return hilos_por_defecto()
    try:
        hilos = int(str(crudo).strip())
    except ValueError:
        hilos = 0
    if hilos < 1:
        logger.warning(f"⚠️ {ENV_HILOS}={crudo!r} no es un entero positivo; se usan {hilos_por_defecto()} hilos")
        return hilos_por_defecto()
    return hilos


class ParserArgumentos(argparse.ArgumentParser):
    """ArgumentParser que informa los errores de uso como UsageError (código 1) en lugar de salir."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def entero_no_negativo(texto):
    """Tipo argparse para semillas y contadores: entero >= 0."""
    try:
        valor = int(texto)
    except ValueError:
        raise argparse.ArgumentTypeError(f"se esperaba un entero, se recibió {texto!r}")
    if valor < 0:
        raise argparse.ArgumentTypeError(f"debe ser >= 0, se recibió {valor}")
    return valor

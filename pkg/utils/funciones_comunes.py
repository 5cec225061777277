#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FUNCIONES COMUNES
Sistema fracgrad - Derivadas fraccionarias de imágenes

Funciones compartidas entre todos los módulos del sistema: cuantización a 8 bits,
validaciones numéricas, reparto del trabajo en hilos y formato del manifiesto.
"""

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from utils.errores import ContractError, DomainError

MODOS_REDONDEO = ("nearest", "floor")


def redondear(valores, modo="nearest"):
    """
    Cuantiza valores reales a códigos enteros (como float64).

    'nearest' redondea la mitad hacia arriba (criterio comercial, igual que ROUND_HALF_UP);
    'floor' trunca hacia abajo.

    Args:
        valores: escalar o array de reales finitos
        modo: 'nearest' | 'floor'

    Returns:
        np.ndarray: valores enteros representados en float64

    Ejemplos:
        >>> redondear(146.46)
        array(146.)
        >>> redondear(127.5)
        array(128.)
        >>> redondear(127.9, modo="floor")
        array(127.)
    """
    arr = np.asarray(valores, dtype=np.float64)
    piso = np.floor(arr)
    if modo == "floor":
        return piso
    if modo == "nearest":
        # floor(x + 0.5) falla en 0.49999999999999994; se compara la parte fraccionaria
        return piso + (arr - piso >= 0.5)
    raise DomainError(f"Modo de redondeo desconocido: '{modo}' (use {' | '.join(MODOS_REDONDEO)})")


def validar_finito(nombre, valor):
    """
    Verifica que un parámetro escalar sea un real finito.

    Returns:
        float: el valor convertido

    Raises:
        DomainError: si no es numérico o no es finito
    """
    try:
        v = float(valor)
    except (TypeError, ValueError):
        raise DomainError(f"{nombre} debe ser un número real, se recibió {valor!r}")
    if not math.isfinite(v):
        raise DomainError(f"{nombre} debe ser finito, se recibió {valor!r}")
    return v


def validar_positivo(nombre, valor):
    """Real finito y estrictamente positivo."""
    v = validar_finito(nombre, valor)
    if v <= 0:
        raise DomainError(f"{nombre} debe ser > 0, se recibió {valor!r}")
    return v


def validar_entero_positivo(nombre, valor):
    """Entero >= 1 (se rechazan bool y reales con parte fraccionaria)."""
    if isinstance(valor, bool) or not isinstance(valor, (int, np.integer)):
        raise DomainError(f"{nombre} debe ser un entero, se recibió {valor!r}")
    if valor < 1:
        raise DomainError(f"{nombre} debe ser >= 1, se recibió {valor!r}")
    return int(valor)


def validar_entero_no_negativo(nombre, valor):
    """Entero >= 0, por ejemplo una semilla."""
    if isinstance(valor, bool) or not isinstance(valor, (int, np.integer)):
        raise DomainError(f"{nombre} debe ser un entero, se recibió {valor!r}")
    if valor < 0:
        raise DomainError(f"{nombre} debe ser >= 0, se recibió {valor!r}")
    return int(valor)


def validar_muestras_8bit(arr, contexto="imagen"):
    """
    Contrato de las imágenes cuantizadas: muestras enteras en [0, 255].

    Raises:
        ContractError: si alguna muestra es no finita, está fuera de rango o no es entera
    """
    arr = np.asarray(arr, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ContractError(f"{contexto}: hay muestras no finitas")
    if arr.size and (arr.min() < 0 or arr.max() > 255):
        raise ContractError(
            f"{contexto}: muestras fuera de [0, 255] (mín {arr.min():g}, máx {arr.max():g}); "
            f"normalice antes de codificar"
        )
    if not np.array_equal(arr, np.floor(arr)):
        raise ContractError(f"{contexto}: hay muestras no enteras; cuantice antes de codificar")


# ─────────────────────────────────────────────
# PARALELISMO
# ─────────────────────────────────────────────

def repartir_en_bloques(n, partes):
    """
    Divide range(n) en a lo sumo `partes` bloques contiguos.

    Ejemplos:
        >>> repartir_en_bloques(10, 3)
        [(0, 4), (4, 7), (7, 10)]
    """
    partes = max(1, min(partes, n))
    base, resto = divmod(n, partes)
    bloques = []
    inicio = 0
    for i in range(partes):
        fin = inicio + base + (1 if i < resto else 0)
        bloques.append((inicio, fin))
        inicio = fin
    return bloques


def ejecutar_por_bloques(funcion, n, hilos):
    """
    Ejecuta funcion(inicio, fin) sobre bloques de filas y devuelve los resultados en orden.

    Cada bloque escribe en su propia región de la salida, por lo que el resultado
    no depende de la cantidad de hilos.
    """
    bloques = repartir_en_bloques(n, hilos)
    if len(bloques) == 1:
        return [funcion(*bloques[0])]
    with ThreadPoolExecutor(max_workers=len(bloques)) as pool:
        return list(pool.map(lambda b: funcion(*b), bloques))


# ─────────────────────────────────────────────
# FORMATO
# ─────────────────────────────────────────────

def formato_real(valor):
    """
    Representación exacta de un real para el manifiesto (repr de Python: ida y vuelta sin pérdida).

    Ejemplos:
        >>> formato_real(0.7)
        '0.7'
        >>> formato_real(None)
        '-'
    """
    if valor is None:
        return "-"
    return repr(float(valor))


def formato_manifiesto(pares):
    """Convierte una lista de (clave, valor) en líneas 'clave: valor'."""
    return "".join(f"{clave}: {valor}\n" for clave, valor in pares)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
IMÁGENES SINTÉTICAS
Imágenes deterministas de prueba que reemplazan a las figuras originales (no redistribuibles).

Tipos:
  step          : mitad izquierda 64, mitad derecha 192
  ramp          : rampa horizontal de 0 a 255
  disk          : disco de 200 sobre fondo 32
  impulse_grid  : píxeles aislados de 255 sobre 0 cada 5 píxeles
  gaussian_spots: campo estelar: fuentes puntuales gaussianas sobre un fondo de cielo con
                   gradiente suave; la fuente más débil queda por debajo del umbral de
                   detección de un estirado lineal
  star_cluster  : cúmulo denso: muchas fuentes gaussianas de amplitud aleatoria sobre el mismo cielo

Uso como aplicación:
  python app.py generar KIND SALIDA [--width W] [--height H] [--seed S]
"""

import logging

import numpy as np

from modulos.imagen import ImagePlane, MultiChannelImage
from utils.configuracion import ParserArgumentos, entero_no_negativo
from utils.data_loader import save_image
from utils.errores import DomainError
from utils.funciones_comunes import redondear, validar_entero_no_negativo, validar_entero_positivo

logger = logging.getLogger("fracgrad.sinteticas")

TIPOS = ("step", "ramp", "disk", "impulse_grid", "gaussian_spots", "star_cluster")

ESCALON_IZQUIERDA = 64.0
ESCALON_DERECHA   = 192.0
PASO_IMPULSOS     = 5

# Campo estelar
FONDO_BASE        = 126.0      # cielo en la columna 0
FONDO_GRADIENTE   = 28.0       # aumento del cielo hasta la última columna
AMPLITUDES        = (100.0, 85.0, 70.0, 55.0, 44.0)   # cinco "satélites"; el último es el más débil
SIGMA_FUENTE      = 0.5
SEPARACION_MINIMA = 12.0
MARGEN            = 6
RADIO_FUENTE      = 6          # vecindario (Chebyshev) excluido del fondo

PIXELES_POR_FUENTE = 256       # densidad del cúmulo
AMPLITUDES_CUMULO  = (30.0, 110.0)
SEPARACION_CUMULO  = 6.0
MARGEN_CUMULO      = 3
RADIO_CUMULO       = 3


# ─────────────────────────────────────────────
# CATÁLOGO DE FUENTES
# ─────────────────────────────────────────────

def planted_spots(width, height, seed=0):
    """
    Posiciones y amplitudes de las fuentes de gaussian_spots.

    La fuente más débil se ubica en la columna central, donde el cielo toma su valor mediano;
    las demás se sortean con la semilla respetando la separación mínima.

    Returns:
        list de dicts {'x', 'y', 'amplitud'} en el orden de AMPLITUDES
    """
    if width < 2 * MARGEN + 1 or height < 2 * MARGEN + 1:
        raise DomainError(f"gaussian_spots requiere al menos {2 * MARGEN + 1}×{2 * MARGEN + 1} píxeles")
    rng = np.random.default_rng(validar_entero_no_negativo("seed", seed))

    debil = {"x": width // 2, "y": int(rng.integers(MARGEN, height - MARGEN)), "amplitud": AMPLITUDES[-1]}
    fuentes = [debil]
    for amplitud in AMPLITUDES[:-1]:
        for _ in range(10000):
            x = int(rng.integers(MARGEN, width - MARGEN))
            y = int(rng.integers(MARGEN, height - MARGEN))
            if all(np.hypot(x - f["x"], y - f["y"]) >= SEPARACION_MINIMA for f in fuentes):
                fuentes.append({"x": x, "y": y, "amplitud": amplitud})
                break
        else:
            raise DomainError(f"No entran {len(AMPLITUDES)} fuentes separadas en {width}×{height}")

    # orden de AMPLITUDES: la débil al final
    return fuentes[1:] + fuentes[:1]


def cluster_spots(width, height, seed=0):
    """
    Catálogo del cúmulo denso: una fuente cada PIXELES_POR_FUENTE píxeles (al menos cinco),
    con amplitudes uniformes en AMPLITUDES_CUMULO y separación mínima SEPARACION_CUMULO.

    Returns:
        list de dicts {'x', 'y', 'amplitud'} en el orden en que se sortearon
    """
    if width < 2 * MARGEN_CUMULO + 1 or height < 2 * MARGEN_CUMULO + 1:
        raise DomainError(f"star_cluster requiere al menos {2 * MARGEN_CUMULO + 1}×{2 * MARGEN_CUMULO + 1} píxeles")
    rng = np.random.default_rng(validar_entero_no_negativo("seed", seed))
    cantidad = max(5, (width * height) // PIXELES_POR_FUENTE)
    fuentes = []
    for _ in range(cantidad):
        for _ in range(10000):
            x = int(rng.integers(MARGEN_CUMULO, width - MARGEN_CUMULO))
            y = int(rng.integers(MARGEN_CUMULO, height - MARGEN_CUMULO))
            if all(np.hypot(x - f["x"], y - f["y"]) >= SEPARACION_CUMULO for f in fuentes):
                fuentes.append({"x": x, "y": y, "amplitud": float(rng.uniform(*AMPLITUDES_CUMULO))})
                break
        else:
            raise DomainError(f"No entran {cantidad} fuentes separadas en {width}×{height}")
    return fuentes


def fondo_cielo(width, height):
    """Cielo con gradiente horizontal suave (sin cuantizar)."""
    x = np.arange(width, dtype=np.float64)
    fila = FONDO_BASE + FONDO_GRADIENTE * x / max(width - 1, 1)
    return np.tile(fila, (height, 1))


# ─────────────────────────────────────────────
# GENERADOR
# ─────────────────────────────────────────────

def _step(width, height, seed):
    arr = np.full((height, width), ESCALON_IZQUIERDA)
    arr[:, width // 2:] = ESCALON_DERECHA
    return arr


def _ramp(width, height, seed):
    x = np.arange(width, dtype=np.float64)
    return np.tile(redondear(255.0 * x / max(width - 1, 1)), (height, 1))


def _disk(width, height, seed):
    y, x = np.mgrid[0:height, 0:width]
    cx, cy = (width - 1) / 2.0, (height - 1) / 2.0
    radio = min(width, height) / 4.0
    arr = np.full((height, width), 32.0)
    arr[(x - cx) ** 2 + (y - cy) ** 2 <= radio * radio] = 200.0
    return arr


def _impulse_grid(width, height, seed):
    arr = np.zeros((height, width))
    inicio = PASO_IMPULSOS // 2
    arr[inicio::PASO_IMPULSOS, inicio::PASO_IMPULSOS] = 255.0
    return arr


def _pintar_fuentes(width, height, fuentes):
    arr = fondo_cielo(width, height)
    y, x = np.mgrid[0:height, 0:width]
    for fuente in fuentes:
        d2 = (x - fuente["x"]) ** 2 + (y - fuente["y"]) ** 2
        arr = arr + fuente["amplitud"] * np.exp(-d2 / (2.0 * SIGMA_FUENTE * SIGMA_FUENTE))
    return np.clip(redondear(arr), 0.0, 255.0)


def _gaussian_spots(width, height, seed):
    return _pintar_fuentes(width, height, planted_spots(width, height, seed))


def _star_cluster(width, height, seed):
    return _pintar_fuentes(width, height, cluster_spots(width, height, seed))


_GENERADORES = {
    "step": _step,
    "ramp": _ramp,
    "disk": _disk,
    "impulse_grid": _impulse_grid,
    "gaussian_spots": _gaussian_spots,
    "star_cluster": _star_cluster,
}


def generate_test_image(kind, width=64, height=64, seed=0):
    """
    Genera una imagen sintética de grises, determinista para una semilla dada.

    Raises:
        DomainError: tipo desconocido, dimensiones no positivas o semilla negativa

    Ejemplos:
        step 8×8 → columnas 0-3 valen 64, columnas 4-7 valen 192
        impulse_grid 16×16 → 255 en (2, 2), (2, 7), … ; 0 en el resto
    """
    if kind not in _GENERADORES:
        raise DomainError(f"Tipo de imagen desconocido: '{kind}' (use {' | '.join(TIPOS)})")
    width = validar_entero_positivo("width", width)
    height = validar_entero_positivo("height", height)
    seed = validar_entero_no_negativo("seed", seed)
    arr = _GENERADORES[kind](width, height, seed)
    return MultiChannelImage((ImagePlane(arr),), "grayscale")


# ─────────────────────────────────────────────
# APLICACIÓN 'generar'
# ─────────────────────────────────────────────

def main(argv=None):
    parser = ParserArgumentos(prog="fracgrad generar", description="Genera una imagen sintética de prueba.")
    parser.add_argument("kind", choices=TIPOS)
    parser.add_argument("output", help="archivo de salida (.png, .pgm, .pnm)")
    parser.add_argument("--width", type=int, default=64)
    parser.add_argument("--height", type=int, default=64)
    parser.add_argument("--seed", type=entero_no_negativo, default=0)
    args = parser.parse_args(argv)

    imagen = generate_test_image(args.kind, args.width, args.height, args.seed)
    save_image(imagen, args.output)
    print(f"✅ {args.kind} {args.width}×{args.height} → {args.output}")
    return 0

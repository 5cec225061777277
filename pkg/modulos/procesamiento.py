#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
PROCESAMIENTO
Cadena completa de la CLI:

  decodificar → [grises] → [desenfoque gaussiano] → gradiente fraccionario por canal
  → normalización b_G → [brillo/contraste] → codificar

más el manifiesto de la corrida (parámetros efectivos y G_Max por canal) y el modo por lotes.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.ndimage import correlate1d

from modulos.derivada import POLITICA_POR_DEFECTO, BoundaryPolicy
from modulos.gradiente import MagnitudeConvention, fractional_gradient
from modulos.imagen import ImagePlane, MultiChannelImage, to_grayscale
from modulos.mapa_salida import (
    AdjustConfig, VisibilityConfig, adjust_brightness_contrast, channel_maximum, normalize_map,
)
from utils import __version__
from utils.configuracion import ALFA_POR_DEFECTO, FACTOR_RADIO_BLUR, TERMINOS_POR_DEFECTO, resolver_hilos
from utils.data_loader import FORMATOS_POR_EXTENSION, load_image, save_image
from utils.errores import DomainError, FracgradError, ImageIOError, UsageError
from utils.funciones_comunes import (
    MODOS_REDONDEO, formato_manifiesto, formato_real, validar_entero_positivo, validar_finito,
    validar_positivo,
)

logger = logging.getLogger("fracgrad.procesamiento")

SUFIJO_MANIFIESTO = ".manifest.txt"


# ─────────────────────────────────────────────
# CONFIGURACIÓN DE LA CORRIDA
# ─────────────────────────────────────────────

@dataclass(frozen=True)
class PipelineConfig:
    """Parámetros de una corrida. Los inválidos se informan como error de uso."""
    order: float
    input_path: Path = None
    output_path: Path = None
    alpha: float = ALFA_POR_DEFECTO
    terms: int = TERMINOS_POR_DEFECTO
    convention: MagnitudeConvention = MagnitudeConvention.EUCLIDEAN
    boundary: BoundaryPolicy = POLITICA_POR_DEFECTO
    grayscale: bool = False
    blur_sigma: float = None
    adjust: AdjustConfig = None
    rounding: str = "nearest"
    manifest_path: Path = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "order", validar_finito("nu", self.order))
            object.__setattr__(self, "alpha", validar_positivo("alpha", self.alpha))
            object.__setattr__(self, "terms", validar_entero_positivo("terms", self.terms))
            object.__setattr__(self, "convention", MagnitudeConvention.parse(self.convention))
            object.__setattr__(self, "boundary", BoundaryPolicy.parse(self.boundary))
            if self.blur_sigma is not None:
                object.__setattr__(self, "blur_sigma", validar_positivo("blur-sigma", self.blur_sigma))
            if self.rounding not in MODOS_REDONDEO:
                raise DomainError(f"Modo de redondeo desconocido: '{self.rounding}'")
        except DomainError as e:
            raise UsageError(str(e))
        for nombre in ("input_path", "output_path", "manifest_path"):
            valor = getattr(self, nombre)
            if valor is not None:
                object.__setattr__(self, nombre, Path(valor))

    @property
    def visibility(self):
        return VisibilityConfig(self.alpha, self.rounding)


# ─────────────────────────────────────────────
# DESENFOQUE GAUSSIANO
# ─────────────────────────────────────────────

def nucleo_gaussiano(sigma):
    """
    Núcleo gaussiano discreto truncado en radio ceil(3·sigma) y renormalizado a suma 1.

    Ejemplos:
        sigma = 0.3 → radio 1, núcleo ≈ [0.0038, 0.9923, 0.0038]
    """
    sigma = validar_finito("sigma", sigma)
    if sigma <= 0:
        raise DomainError(f"sigma debe ser > 0, se recibió {sigma!r}")
    radio = int(math.ceil(FACTOR_RADIO_BLUR * sigma))
    x = np.arange(-radio, radio + 1, dtype=np.float64)
    nucleo = np.exp(-(x * x) / (2.0 * sigma * sigma))
    return nucleo / nucleo.sum()


def gaussian_blur(plane, sigma):
    """
    Desenfoque gaussiano separable (filas y luego columnas) con borde replicado.

    Raises:
        DomainError: si sigma <= 0
    """
    nucleo = nucleo_gaussiano(sigma)
    filas = correlate1d(plane.samples, nucleo, axis=1, mode="nearest")
    return ImagePlane(correlate1d(filas, nucleo, axis=0, mode="nearest"))


# ─────────────────────────────────────────────
# CADENA EN MEMORIA
# ─────────────────────────────────────────────

def process_image(image, config, hilos=None):
    """
    Aplica la cadena a una imagen ya decodificada.

    Returns:
        dict con 'imagen' (MultiChannelImage de salida), 'maximos' (G_Max por canal),
        'marcados' (píxeles fuera de banda con 'skip') y 'semantica_entrada'
    """
    semantica_entrada = image.channel_semantics
    if config.grayscale:
        image = to_grayscale(image, config.rounding)

    planos = list(image.color_channels())
    if config.blur_sigma is not None:
        planos = [gaussian_blur(p, config.blur_sigma) for p in planos]

    magnitudes = []
    marcados = 0
    for plano in planos:
        campo = fractional_gradient(plano, config.order, config.terms, config.boundary,
                                    config.convention, hilos)
        magnitudes.append(campo.magnitude)
        marcados += campo.magnitude.flagged_count()
    maximos = [channel_maximum(m) for m in magnitudes]

    salida = normalize_map(magnitudes, config.visibility)
    if config.adjust is not None:
        salida = adjust_brightness_contrast(salida, config.adjust, config.rounding)
    if image.has_alpha:
        salida = MultiChannelImage(salida.channels + (image.alpha,), "rgba")

    return {
        "imagen": salida,
        "maximos": maximos,
        "marcados": marcados,
        "semantica_entrada": semantica_entrada,
    }


def manifiesto(config, resultado, hilos):
    """Texto 'clave: valor' con los parámetros efectivos de la corrida."""
    ajuste = config.adjust
    pares = [
        ("herramienta", f"fracgrad {__version__}"),
        ("entrada", config.input_path or "-"),
        ("salida", config.output_path or "-"),
        ("nu", formato_real(config.order)),
        ("alpha", formato_real(config.alpha)),
        ("terms", config.terms),
        ("magnitude", config.convention.value),
        ("boundary", config.boundary.value),
        ("rounding", config.rounding),
        ("grayscale", "si" if config.grayscale else "no"),
        ("blur_sigma", formato_real(config.blur_sigma)),
        ("brightness", formato_real(ajuste.brightness_offset if ajuste else None)),
        ("contrast", formato_real(ajuste.contrast_gain if ajuste else None)),
        ("canales_entrada", resultado["semantica_entrada"]),
        ("canales_salida", resultado["imagen"].channel_semantics),
        ("ancho", resultado["imagen"].width),
        ("alto", resultado["imagen"].height),
    ]
    for i, maximo in enumerate(resultado["maximos"]):
        pares.append((f"g_max[{i}]", formato_real(maximo)))
    pares.append(("pixeles_marcados", resultado["marcados"]))
    pares.append(("hilos", hilos))
    return formato_manifiesto(pares)


def ruta_manifiesto(config):
    if config.manifest_path is not None:
        return config.manifest_path
    return config.output_path.with_name(config.output_path.name + SUFIJO_MANIFIESTO)


# ─────────────────────────────────────────────
# CORRIDAS
# ─────────────────────────────────────────────

def run_pipeline(config, hilos=None):
    """
    Corre la cadena sobre archivos: lee la entrada, escribe la salida y el manifiesto.

    Si input_path es un directorio se procesa por lotes (ver run_batch).

    Returns:
        dict con 'estado' (código de salida), 'salida', 'manifiesto' y 'maximos'

    Raises:
        FracgradError: errores de E/S, de uso o de contrato numérico
    """
    if config.input_path is None or config.output_path is None:
        raise UsageError("Se requieren las rutas de entrada y salida")
    hilos = resolver_hilos() if hilos is None else hilos
    if config.input_path.is_dir():
        return run_batch(config, hilos)

    imagen = load_image(config.input_path)
    logger.info(f"Procesando {config.input_path} ({imagen.width}×{imagen.height}, "
                f"{imagen.channel_semantics}) con ν={config.order}, α={config.alpha}, K={config.terms}")
    resultado = process_image(imagen, config, hilos)

    save_image(resultado["imagen"], config.output_path)
    destino_manifiesto = ruta_manifiesto(config)
    try:
        destino_manifiesto.write_text(manifiesto(config, resultado, hilos), encoding="utf-8")
    except OSError as e:
        raise ImageIOError(f"No se pudo escribir el manifiesto {destino_manifiesto}: {e}")

    return {
        "estado": 0,
        "salida": config.output_path,
        "manifiesto": destino_manifiesto,
        "maximos": resultado["maximos"],
    }


def run_batch(config, hilos):
    """
    Procesa todas las imágenes soportadas de un directorio en paralelo.

    Cada archivo produce su salida (mismo nombre) y su manifiesto en el directorio de salida.
    El estado final es el peor de los estados individuales.
    """
    if config.output_path.resolve() == config.input_path.resolve():
        raise UsageError(f"El directorio de salida no puede ser el de entrada: {config.input_path}")
    if config.manifest_path is not None:
        logger.warning(f"⚠️ --manifest se ignora en modo lote ({config.manifest_path}); "
                       f"cada archivo lleva su manifiesto junto a la salida")
    entradas = sorted(p for p in config.input_path.iterdir()
                      if p.is_file() and p.suffix.lower() in FORMATOS_POR_EXTENSION)
    if not entradas:
        raise ImageIOError(f"No hay imágenes soportadas en {config.input_path}")
    try:
        config.output_path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ImageIOError(f"No se pudo crear {config.output_path}: {e}")

    def procesar(entrada):
        individual = PipelineConfig(
            order=config.order, input_path=entrada, output_path=config.output_path / entrada.name,
            alpha=config.alpha, terms=config.terms, convention=config.convention,
            boundary=config.boundary, grayscale=config.grayscale, blur_sigma=config.blur_sigma,
            adjust=config.adjust, rounding=config.rounding,
        )
        try:
            # un hilo por archivo: el paralelismo está en los archivos
            return entrada, run_pipeline(individual, hilos=1)
        except FracgradError as e:
            logger.error(f"❌ {entrada.name}: {e}")
            return entrada, {"estado": e.exit_code, "error": str(e)}

    with ThreadPoolExecutor(max_workers=max(1, min(hilos, len(entradas)))) as pool:
        resultados = dict(pool.map(procesar, entradas))

    estado = max(r["estado"] for r in resultados.values())
    return {"estado": estado, "archivos": resultados, "salida": config.output_path}

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DATA LOADER - Sistema de Carga de Imágenes
Decodificación y codificación de rásters de 8 bits: PNG (grises/RGB/RGBA) y PGM/PPM binarios.

El código v de cada muestra se convierte exactamente en el real v (sin reescalar a [0, 1]).
"""

import logging
from io import BytesIO
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from modulos.imagen import MultiChannelImage
from utils.errores import DecodeError, EncodeError, ImageIOError
from utils.funciones_comunes import validar_muestras_8bit

logger = logging.getLogger("fracgrad.data_loader")

FORMATOS_POR_EXTENSION = {
    ".png": "png",
    ".pgm": "pgm",
    ".ppm": "ppm",
    ".pnm": "pnm",
}

_MODOS_SEMANTICA = {"L": "grayscale", "RGB": "rgb", "RGBA": "rgba"}
_SEMANTICA_FORMATO_PNM = {"grayscale": "pgm", "rgb": "ppm"}


# ─────────────────────────────────────────────
# CABECERA PNM
# ─────────────────────────────────────────────

def _leer_cabecera_pnm(datos):
    """
    Lee (magic, ancho, alto, maxval, offset de datos) de un PGM/PPM binario.

    Admite comentarios '#' entre los campos, como indica el formato.
    """
    magic = datos[:2]
    campos = []
    i = 2
    n = len(datos)
    while len(campos) < 3:
        while i < n and datos[i:i + 1].isspace():
            i += 1
        if i < n and datos[i:i + 1] == b"#":
            while i < n and datos[i:i + 1] not in (b"\n", b"\r"):
                i += 1
            continue
        inicio = i
        while i < n and datos[i:i + 1].isdigit():
            i += 1
        if inicio == i:
            raise DecodeError(f"Cabecera {magic.decode('ascii', 'replace')} incompleta o corrupta")
        campos.append(int(datos[inicio:i]))
    # un único blanco separa maxval de los datos
    if i >= n or not datos[i:i + 1].isspace():
        raise DecodeError(f"Cabecera {magic.decode('ascii', 'replace')} sin separador antes de los datos")
    ancho, alto, maxval = campos
    return magic, ancho, alto, maxval, i + 1


def _verificar_pnm(datos):
    magic, ancho, alto, maxval, offset = _leer_cabecera_pnm(datos)
    if ancho == 0 or alto == 0:
        raise DecodeError(f"Imagen {magic.decode()} de dimensión nula ({ancho}×{alto})")
    if maxval != 255:
        raise DecodeError(f"Imagen {magic.decode()} con maxval {maxval}; solo se admite maxval 255")
    canales = 1 if magic == b"P5" else 3
    esperado = ancho * alto * canales
    disponible = len(datos) - offset
    if disponible < esperado:
        raise DecodeError(
            f"Archivo {magic.decode()} truncado: {disponible} de {esperado} bytes de datos ({ancho}×{alto})"
        )


# ─────────────────────────────────────────────
# DECODIFICAR / CODIFICAR
# ─────────────────────────────────────────────

def decode_image(datos):
    """
    Decodifica un archivo de imagen en memoria.

    Args:
        datos: bytes de un PNG de 8 bits o de un PGM (P5) / PPM (P6) con maxval 255

    Returns:
        MultiChannelImage con muestras en [0, 255]

    Raises:
        DecodeError: formato no soportado, archivo truncado o dimensión nula

    Ejemplos:
        PNG 2×1 RGB con píxeles (10,20,30),(40,50,60) → planos [10,40], [20,50], [30,60]
    """
    if not datos:
        raise DecodeError("Archivo vacío")
    datos = bytes(datos)
    magic = datos[:2]
    if magic in (b"P5", b"P6"):
        _verificar_pnm(datos)
    elif magic in (b"P1", b"P2", b"P3", b"P4", b"P7"):
        raise DecodeError(f"Variante PNM {magic.decode()} no soportada (solo P5/P6 binarios)")

    try:
        with Image.open(BytesIO(datos)) as img:
            img.load()
            formato, modo = img.format, img.mode
            if formato not in ("PNG", "PPM"):
                raise DecodeError(f"Formato {formato} no soportado (use PNG, PGM o PPM)")
            if modo == "P":
                img = img.convert("RGBA" if "transparency" in img.info else "RGB")
            elif modo == "1":
                img = img.convert("L")
            elif modo not in _MODOS_SEMANTICA:
                raise DecodeError(f"Modo {formato} '{modo}' no soportado (solo 8 bits grises/RGB/RGBA)")
            semantica = _MODOS_SEMANTICA[img.mode]
            arr = np.asarray(img, dtype=np.float64)
    except DecodeError:
        raise
    except UnidentifiedImageError:
        raise DecodeError("No se reconoce el formato de la imagen (use PNG, PGM o PPM)")
    except Exception as e:
        raise DecodeError(f"Imagen corrupta o truncada: {e}")

    if arr.size == 0:
        raise DecodeError("Imagen de dimensión nula")
    return MultiChannelImage.from_array(arr, semantica)


def encode_image(image, formato="png"):
    """
    Codifica una imagen cuantizada.

    Args:
        image: MultiChannelImage con muestras enteras en [0, 255]
        formato: 'png' | 'pgm' (solo grises) | 'ppm' (solo RGB) | 'pnm' (pgm o ppm según canales)

    Returns:
        bytes del archivo

    Raises:
        ContractError: muestras fuera de rango o no enteras (normalice y cuantice antes)
        EncodeError: formato desconocido o incompatible con los canales
    """
    formato = str(formato).lower().lstrip(".")
    if formato not in FORMATOS_POR_EXTENSION.values():
        raise EncodeError(f"Formato de salida desconocido: '{formato}'")
    arr = image.as_array()
    validar_muestras_8bit(arr, contexto="encode_image")

    if formato == "pnm":
        formato = _SEMANTICA_FORMATO_PNM.get(image.channel_semantics, "ppm")
    if formato == "pgm" and image.channel_semantics != "grayscale":
        raise EncodeError(f"PGM solo admite grises, la imagen es '{image.channel_semantics}'")
    if formato == "ppm" and image.channel_semantics != "rgb":
        raise EncodeError(f"PPM solo admite RGB, la imagen es '{image.channel_semantics}'")

    codigos = arr.astype(np.uint8)
    if image.channel_semantics == "grayscale":
        codigos = codigos[:, :, 0]
    buffer = BytesIO()
    Image.fromarray(codigos).save(buffer, format="PNG" if formato == "png" else "PPM")
    return buffer.getvalue()


# ─────────────────────────────────────────────
# ARCHIVOS
# ─────────────────────────────────────────────

def formato_por_extension(ruta):
    extension = Path(ruta).suffix.lower()
    if extension not in FORMATOS_POR_EXTENSION:
        raise DecodeError(
            f"Extensión '{extension or '(ninguna)'}' no soportada: {ruta} "
            f"(use {', '.join(FORMATOS_POR_EXTENSION)})"
        )
    return FORMATOS_POR_EXTENSION[extension]


def load_image(ruta):
    """Lee y decodifica una imagen; el formato se elige por extensión."""
    formato_por_extension(ruta)
    try:
        datos = Path(ruta).read_bytes()
    except FileNotFoundError:
        raise ImageIOError(f"Archivo no encontrado: {ruta}")
    except OSError as e:
        raise ImageIOError(f"No se pudo leer {ruta}: {e}")
    try:
        return decode_image(datos)
    except DecodeError as e:
        raise DecodeError(f"{ruta}: {e}")


def save_image(image, ruta):
    """Codifica según la extensión y escribe el archivo."""
    formato = FORMATOS_POR_EXTENSION.get(Path(ruta).suffix.lower())
    if formato is None:
        raise EncodeError(f"Extensión de salida no soportada: {ruta}")
    datos = encode_image(image, formato)
    try:
        Path(ruta).write_bytes(datos)
    except OSError as e:
        raise ImageIOError(f"No se pudo escribir {ruta}: {e}")
    logger.info(f"Imagen escrita: {ruta} ({image.width}×{image.height}, {image.channel_semantics})")
    return Path(ruta)

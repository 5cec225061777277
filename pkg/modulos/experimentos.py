#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
EXPERIMENTOS
Corridas de reproducción sobre imágenes sintéticas, con tablas (CSV y Excel) y reporte PDF.

  desenfoque : escalón desenfocado (σ = 2) procesado con ν=1/α=0.7, ν=0.5/α=0.7 y ν=0.5/α=0.8;
                se mide la columna del máximo respecto del escalón verdadero
  satelites  : campo estelar gaussian_spots con ν ∈ {0.7, 0.6, 0.4}, α = 0.3, contra un
                estirado lineal; se mide la detección de cada fuente plantada
  comparativa: una misma imagen con ν ∈ {1, 0.7, 0.3}, α = 0.4
  cumulo     : cúmulo estelar denso con ν = 0.7, α = 0.4 y un ajuste leve de brillo y contraste,
                contra el mismo mapa sin ajustar y un estirado lineal

Uso como aplicación:
  python app.py experimento {desenfoque|satelites|comparativa|cumulo} DIRECTORIO [--seed S] [--sigma S]
"""

import logging
from io import BytesIO
from pathlib import Path

import numpy as np
import pandas as pd
from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import cm
from reportlab.platypus import Image, Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle
from scipy.stats import median_abs_deviation

from modulos.imagen import ImagePlane, MultiChannelImage
from modulos.mapa_salida import AdjustConfig, linear_stretch
from modulos.procesamiento import PipelineConfig, gaussian_blur, process_image
from modulos.sinteticas import RADIO_CUMULO, RADIO_FUENTE, cluster_spots, generate_test_image, planted_spots
from utils.configuracion import ParserArgumentos, entero_no_negativo
from utils.data_loader import save_image
from utils.errores import DomainError, ImageIOError
from utils.funciones_comunes import redondear

logger = logging.getLogger("fracgrad.experimentos")

UMBRAL_SIGMAS = 5.0
RADIO_PICO = 1                      # ventana 3×3

ORDENES_SATELITES   = (0.7, 0.6, 0.4)
ALFA_SATELITES      = 0.3
CORRIDAS_DESENFOQUE = ((1.0, 0.7), (0.5, 0.7), (0.5, 0.8))
SIGMA_DESENFOQUE    = 2.0
ORDENES_COMPARATIVA = (1.0, 0.7, 0.3)
ALFA_COMPARATIVA    = 0.4
ORDEN_CUMULO        = 0.7
ALFA_CUMULO         = 0.4
AJUSTE_CUMULO       = AdjustConfig(brightness_offset=-10.0, contrast_gain=1.15)

COLOR_TITULO = colors.HexColor('#1f4788')


def _muestras(imagen):
    """Primer canal de color como array 2-D."""
    if isinstance(imagen, MultiChannelImage):
        return imagen.channels[0].samples
    if isinstance(imagen, ImagePlane):
        return imagen.samples
    return np.asarray(imagen, dtype=np.float64)


def mapa_fraccionario(imagen, order, alpha, hilos=None, **opciones):
    """Mapa de 8 bits de la cadena completa sobre una imagen en memoria."""
    config = PipelineConfig(order=order, alpha=alpha, **opciones)
    return process_image(imagen, config, hilos)["imagen"]


# ─────────────────────────────────────────────
# MÉTRICA DE OBJETOS DÉBILES
# ─────────────────────────────────────────────

def background_mask(forma, fuentes, radio=RADIO_FUENTE):
    """
    Píxeles de fondo: a distancia de Chebyshev mayor que `radio` de toda fuente.

    Args:
        forma: (alto, ancho)
        fuentes: lista de dicts con 'x' e 'y'
    """
    alto, ancho = forma
    mascara = np.ones((alto, ancho), dtype=bool)
    for f in fuentes:
        mascara[max(0, f["y"] - radio):f["y"] + radio + 1, max(0, f["x"] - radio):f["x"] + radio + 1] = False
    return mascara


def spot_contrast_table(imagen, fuentes, radio=RADIO_FUENTE):
    """
    Contraste de cada fuente plantada sobre el fondo.

    pico = máximo en la ventana 3×3 centrada en la fuente; contraste = pico − mediana del fondo.
    El desvío robusto es la MAD escalada a desvío normal.

    Returns:
        DataFrame con columnas fuente, amplitud, x, y, pico, mediana_fondo, desvio_robusto, contraste
    """
    arr = _muestras(imagen)
    fondo = arr[background_mask(arr.shape, fuentes, radio)]
    if fondo.size == 0:
        raise DomainError("No quedan píxeles de fondo para estimar la mediana")
    mediana = float(np.median(fondo))
    desvio = float(median_abs_deviation(fondo, scale="normal"))

    filas = []
    for i, f in enumerate(fuentes, start=1):
        ventana = arr[max(0, f["y"] - RADIO_PICO):f["y"] + RADIO_PICO + 1,
                      max(0, f["x"] - RADIO_PICO):f["x"] + RADIO_PICO + 1]
        pico = float(ventana.max())
        filas.append({
            "fuente": i,
            "amplitud": f["amplitud"],
            "x": f["x"],
            "y": f["y"],
            "pico": pico,
            "mediana_fondo": mediana,
            "desvio_robusto": desvio,
            "contraste": pico - mediana,
        })
    return pd.DataFrame(filas)


def detect_spots(imagen, fuentes, umbral_sigmas=UMBRAL_SIGMAS, radio=RADIO_FUENTE):
    """
    Aplica el criterio de detección: pico > mediana del fondo + umbral_sigmas · desvío robusto.

    Returns:
        DataFrame de spot_contrast_table con las columnas 'umbral' y 'detectada'

    Ejemplos:
        gaussian_spots 64×64, estirado lineal → la fuente de amplitud 44 no se detecta
        gaussian_spots 64×64, ν = 0.7, α = 0.3 → se detectan las cinco
    """
    tabla = spot_contrast_table(imagen, fuentes, radio)
    tabla["umbral"] = tabla["mediana_fondo"] + umbral_sigmas * tabla["desvio_robusto"]
    tabla["detectada"] = tabla["pico"] > tabla["umbral"]
    return tabla


# ─────────────────────────────────────────────
# CORRIDAS
# ─────────────────────────────────────────────

def experimento_satelites(width=64, height=64, seed=0, ordenes=ORDENES_SATELITES,
                          alpha=ALFA_SATELITES, hilos=None):
    """
    Objetos débiles: mapa fraccionario contra estirado lineal sobre el campo estelar.

    Returns:
        dict con 'mapas' (nombre → MultiChannelImage) y 'tabla' (DataFrame con columna 'metodo')
    """
    original = generate_test_image("gaussian_spots", width, height, seed)
    fuentes = planted_spots(width, height, seed)

    mapas = {"original": original, "lineal": linear_stretch(original)}
    for nu in ordenes:
        mapas[f"nu_{nu:g}"] = mapa_fraccionario(original, nu, alpha, hilos)

    tablas = []
    for nombre, mapa in mapas.items():
        if nombre == "original":
            continue
        tabla = detect_spots(mapa, fuentes)
        tabla.insert(0, "metodo", nombre)
        tablas.append(tabla)
    tabla = pd.concat(tablas, ignore_index=True)

    for nombre, grupo in tabla.groupby("metodo", sort=False):
        logger.info(f"{nombre}: {int(grupo['detectada'].sum())}/{len(grupo)} fuentes detectadas")
    return {"mapas": mapas, "tabla": tabla}


def experimento_desenfoque(width=64, height=64, sigma=SIGMA_DESENFOQUE, corridas=CORRIDAS_DESENFOQUE,
                           hilos=None):
    """
    Robustez al desenfoque: ubicación del máximo del mapa respecto del escalón.

    La columna del máximo se toma sobre la fila central (primera ocurrencia).

    Returns:
        dict con 'mapas' y 'tabla' (nu, alpha, columna_escalon, columna_maximo, desplazamiento, maximo)
    """
    escalon = generate_test_image("step", width, height)
    borroso = gaussian_blur(escalon.channels[0], sigma)
    entrada = MultiChannelImage((borroso,), "grayscale")
    columna_escalon = width // 2

    mapas = {"desenfocada": MultiChannelImage((ImagePlane(redondear(borroso.samples)),),
                                              "grayscale")}
    filas = []
    for nu, alpha in corridas:
        mapa = mapa_fraccionario(entrada, nu, alpha, hilos)
        mapas[f"nu_{nu:g}_alfa_{alpha:g}"] = mapa
        perfil = _muestras(mapa)[height // 2]
        columna = int(np.argmax(perfil))
        filas.append({
            "nu": nu,
            "alpha": alpha,
            "sigma": sigma,
            "columna_escalon": columna_escalon,
            "columna_maximo": columna,
            "desplazamiento": columna - columna_escalon,
            "maximo": float(perfil[columna]),
        })
    return {"mapas": mapas, "tabla": pd.DataFrame(filas)}


def experimento_comparativa(kind="disk", width=64, height=64, seed=0, ordenes=ORDENES_COMPARATIVA,
                            alpha=ALFA_COMPARATIVA, hilos=None):
    """
    Hoja comparativa de órdenes sobre una misma imagen.

    Returns:
        dict con 'mapas' y 'tabla' (nu, alpha, media, pixeles_no_nulos)
    """
    original = generate_test_image(kind, width, height, seed)
    mapas = {"original": original}
    filas = []
    for nu in ordenes:
        mapa = mapa_fraccionario(original, nu, alpha, hilos)
        mapas[f"nu_{nu:g}"] = mapa
        arr = _muestras(mapa)
        filas.append({
            "nu": nu,
            "alpha": alpha,
            "media": float(arr.mean()),
            "pixeles_no_nulos": int(np.count_nonzero(arr)),
        })
    return {"mapas": mapas, "tabla": pd.DataFrame(filas)}


def experimento_cumulo(width=64, height=64, seed=0, order=ORDEN_CUMULO, alpha=ALFA_CUMULO,
                       ajuste=AJUSTE_CUMULO, hilos=None):
    """
    Cúmulo denso: mapa fraccionario con y sin el ajuste final de brillo y contraste.

    El fondo se estima lejos (RADIO_CUMULO) de cada fuente del catálogo.

    Returns:
        dict con 'mapas' y 'tabla' (metodo, fuentes, detectadas, contraste_medio, media_mapa)
    """
    original = generate_test_image("star_cluster", width, height, seed)
    fuentes = cluster_spots(width, height, seed)

    mapas = {
        "original": original,
        "lineal": linear_stretch(original),
        f"nu_{order:g}": mapa_fraccionario(original, order, alpha, hilos),
        f"nu_{order:g}_ajustado": mapa_fraccionario(original, order, alpha, hilos, adjust=ajuste),
    }

    filas = []
    for nombre, mapa in mapas.items():
        if nombre == "original":
            continue
        deteccion = detect_spots(mapa, fuentes, radio=RADIO_CUMULO)
        filas.append({
            "metodo": nombre,
            "fuentes": len(deteccion),
            "detectadas": int(deteccion["detectada"].sum()),
            "contraste_medio": float(deteccion["contraste"].mean()),
            "media_mapa": float(_muestras(mapa).mean()),
        })
        logger.info(f"{nombre}: {filas[-1]['detectadas']}/{len(deteccion)} fuentes detectadas")
    return {"mapas": mapas, "tabla": pd.DataFrame(filas)}


# ─────────────────────────────────────────────
# REPORTES
# ─────────────────────────────────────────────

def _celda(valor):
    if isinstance(valor, (bool, np.bool_)):
        return "sí" if valor else "no"
    if isinstance(valor, (float, np.floating)):
        return f"{valor:.2f}"
    return str(valor)


def generar_pdf_experimento(titulo, tabla, imagenes):
    """
    PDF con la tabla de resultados y los mapas renderizados.

    Args:
        titulo: encabezado del reporte
        tabla: DataFrame
        imagenes: lista de (nombre, ruta PNG)

    Returns:
        BytesIO posicionado al inicio
    """
    buffer = BytesIO()
    doc = SimpleDocTemplate(buffer, pagesize=A4, rightMargin=1.5*cm, leftMargin=1.5*cm,
                            topMargin=2*cm, bottomMargin=2*cm)
    elementos = []
    styles = getSampleStyleSheet()

    titulo_style = ParagraphStyle(
        'TituloCustom',
        parent=styles['Title'],
        fontSize=16,
        textColor=COLOR_TITULO,
        spaceAfter=10,
        alignment=TA_CENTER
    )
    elementos.append(Paragraph(titulo, titulo_style))
    elementos.append(Spacer(1, 0.5*cm))

    data_tabla = [list(tabla.columns)] + [[_celda(v) for v in fila] for fila in tabla.itertuples(index=False)]
    tabla_pdf = Table(data_tabla, repeatRows=1)
    tabla_pdf.setStyle(TableStyle([
        ('BACKGROUND', (0, 0), (-1, 0), COLOR_TITULO),
        ('TEXTCOLOR', (0, 0), (-1, 0), colors.whitesmoke),
        ('ALIGN', (0, 0), (-1, -1), 'CENTER'),
        ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
        ('FONTSIZE', (0, 0), (-1, -1), 7),
        ('GRID', (0, 0), (-1, -1), 0.5, colors.black),
        ('ROWBACKGROUNDS', (0, 1), (-1, -1), [colors.white, colors.HexColor('#f0f0f0')]),
    ]))
    elementos.append(tabla_pdf)
    elementos.append(Spacer(1, 0.5*cm))

    for nombre, ruta in imagenes:
        elementos.append(Paragraph(f"<b>{nombre}</b>", styles['Normal']))
        elementos.append(Image(str(ruta), width=6*cm, height=6*cm))
        elementos.append(Spacer(1, 0.3*cm))

    doc.build(elementos)
    buffer.seek(0)
    return buffer


def escribir_resultados(resultado, directorio, nombre, titulo):
    """
    Escribe los mapas (PNG), la tabla (CSV y XLSX) y el reporte PDF de un experimento.

    Returns:
        dict con las rutas escritas: 'mapas', 'csv', 'xlsx', 'pdf'
    """
    directorio = Path(directorio)
    try:
        directorio.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ImageIOError(f"No se pudo crear {directorio}: {e}")

    rutas_mapas = []
    for clave, mapa in resultado["mapas"].items():
        ruta = directorio / f"{nombre}_{clave}.png"
        save_image(mapa, ruta)
        rutas_mapas.append((clave, ruta))

    rutas = {
        "mapas": [r for _, r in rutas_mapas],
        "csv": directorio / f"{nombre}.csv",
        "xlsx": directorio / f"{nombre}.xlsx",
        "pdf": directorio / f"{nombre}.pdf",
    }
    try:
        resultado["tabla"].to_csv(rutas["csv"], index=False)
        resultado["tabla"].to_excel(rutas["xlsx"], index=False, sheet_name=nombre[:31], engine="openpyxl")
        rutas["pdf"].write_bytes(generar_pdf_experimento(titulo, resultado["tabla"], rutas_mapas).getvalue())
    except OSError as e:
        raise ImageIOError(f"No se pudieron escribir los resultados en {directorio}: {e}")
    return rutas


# ─────────────────────────────────────────────
# APLICACIÓN 'experimento'
# ─────────────────────────────────────────────

EXPERIMENTOS = {
    "desenfoque": "ROBUSTEZ AL DESENFOQUE GAUSSIANO",
    "satelites": "VISIBILIDAD DE OBJETOS DÉBILES",
    "comparativa": "COMPARACIÓN DE ÓRDENES FRACCIONARIOS",
    "cumulo": "CÚMULO ESTELAR CON AJUSTE DE BRILLO Y CONTRASTE",
}


def main(argv=None):
    parser = ParserArgumentos(prog="fracgrad experimento",
                              description="Corre un experimento de reproducción.")
    parser.add_argument("nombre", choices=tuple(EXPERIMENTOS))
    parser.add_argument("directorio", help="directorio de resultados")
    parser.add_argument("--width", type=int, default=64)
    parser.add_argument("--height", type=int, default=64)
    parser.add_argument("--seed", type=entero_no_negativo, default=0)
    parser.add_argument("--sigma", type=float, default=SIGMA_DESENFOQUE, help="σ del desenfoque")
    parser.add_argument("--kind", default="disk", help="imagen de la hoja comparativa")
    args = parser.parse_args(argv)

    if args.nombre == "desenfoque":
        resultado = experimento_desenfoque(args.width, args.height, args.sigma)
    elif args.nombre == "satelites":
        resultado = experimento_satelites(args.width, args.height, args.seed)
    elif args.nombre == "cumulo":
        resultado = experimento_cumulo(args.width, args.height, args.seed)
    else:
        resultado = experimento_comparativa(args.kind, args.width, args.height, args.seed)

    rutas = escribir_resultados(resultado, args.directorio, args.nombre, EXPERIMENTOS[args.nombre])
    print(resultado["tabla"].to_string(index=False))
    print(f"✅ Resultados en {Path(args.directorio)} ({len(rutas['mapas'])} mapas, {rutas['pdf'].name})")
    return 0

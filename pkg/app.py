#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FRACGRAD
Mapas de gradiente fraccionario para realce de bordes y objetos débiles en imágenes.

Uso:
  python app.py --nu 0.7 --alpha 0.3 entrada.png salida.png
  python app.py generar gaussian_spots campo.png --seed 3
  python app.py autotest
  python app.py experimento satelites resultados/

Códigos de salida: 0 éxito · 1 error de uso · 2 error de E/S · 3 violación de contrato numérico
"""

import importlib
import logging
import sys
from pathlib import Path

# Configurar path absoluto
BASE_DIR = Path(__file__).parent.absolute()
sys.path.insert(0, str(BASE_DIR))

from modulos.derivada import BoundaryPolicy  # noqa: E402
from modulos.mapa_salida import AdjustConfig  # noqa: E402
from modulos.procesamiento import PipelineConfig, run_pipeline  # noqa: E402
from utils import __version__  # noqa: E402
from utils.configuracion import (  # noqa: E402
    ALFA_POR_DEFECTO, TERMINOS_POR_DEFECTO, ParserArgumentos, configurar_logging,
)
from utils.errores import DomainError, FracgradError, UsageError  # noqa: E402
from utils.funciones_comunes import MODOS_REDONDEO  # noqa: E402

logger = logging.getLogger("fracgrad.app")

# ============================================
# APLICACIONES
# ============================================

APLICACIONES = {
    "generar": {
        "nombre": "🖼️ Generador de imágenes sintéticas",
        "modulo": "modulos.sinteticas"
    },
    "autotest": {
        "nombre": "✅ Verificación de valores tabulados",
        "modulo": "modulos.autotest"
    },
    "experimento": {
        "nombre": "🔭 Experimentos de reproducción",
        "modulo": "modulos.experimentos"
    },
}


def ejecutar_aplicacion(nombre_app, argv):
    """Importa la aplicación registrada y corre su main(argv)."""
    if nombre_app not in APLICACIONES:
        raise UsageError(f"Aplicación '{nombre_app}' no encontrada")
    modulo = importlib.import_module(APLICACIONES[nombre_app]["modulo"])
    logger.info(f"Ejecutando {APLICACIONES[nombre_app]['nombre']}")
    return modulo.main(argv)


# ============================================
# CADENA PRINCIPAL
# ============================================

def crear_parser():
    parser = ParserArgumentos(
        prog="fracgrad",
        description="Calcula el mapa de gradiente fraccionario de una imagen (PNG, PGM, PPM).",
        epilog="Aplicaciones: " + ", ".join(APLICACIONES),
    )
    parser.add_argument("--nu", type=float, required=True,
                        help="orden fraccionario ν (cualquier real finito; el rango probado es [0, 1])")
    parser.add_argument("--alpha", type=float, default=ALFA_POR_DEFECTO, help="exponente de visibilidad α")
    parser.add_argument("--terms", type=int, default=TERMINOS_POR_DEFECTO, help="términos K de la serie")
    parser.add_argument("--magnitude", choices=("euclidean", "abs-sum"), default="euclidean")
    parser.add_argument("--boundary", choices=tuple(p.value for p in BoundaryPolicy), default="replicate")
    parser.add_argument("--grayscale", action="store_true", help="promediar los canales antes de derivar")
    parser.add_argument("--blur-sigma", type=float, default=None, help="desenfoque gaussiano previo")
    parser.add_argument("--brightness", type=float, default=None, help="brillo sumado al mapa")
    parser.add_argument("--contrast", type=float, default=None, help="ganancia de contraste del mapa")
    parser.add_argument("--rounding", choices=MODOS_REDONDEO, default="nearest")
    parser.add_argument("--manifest", type=Path, default=None, help="ruta del manifiesto")
    parser.add_argument("--verbose", action="store_true", help="registro a nivel INFO")
    parser.add_argument("--version", action="version", version=f"fracgrad {__version__}")
    parser.add_argument("input", type=Path)
    parser.add_argument("output", type=Path)
    return parser


def config_desde_argumentos(args):
    """PipelineConfig a partir de los argumentos ya parseados."""
    ajuste = None
    if args.brightness is not None or args.contrast is not None:
        try:
            ajuste = AdjustConfig(
                brightness_offset=0.0 if args.brightness is None else args.brightness,
                contrast_gain=1.0 if args.contrast is None else args.contrast,
            )
        except DomainError as e:
            raise UsageError(str(e))
    return PipelineConfig(
        order=args.nu,
        input_path=args.input,
        output_path=args.output,
        alpha=args.alpha,
        terms=args.terms,
        convention=args.magnitude,
        boundary=args.boundary,
        grayscale=args.grayscale,
        blur_sigma=args.blur_sigma,
        adjust=ajuste,
        rounding=args.rounding,
        manifest_path=args.manifest,
    )


def main(argv=None):
    """Función principal. Devuelve el código de salida."""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        if argv and argv[0] in APLICACIONES:
            configurar_logging()
            return ejecutar_aplicacion(argv[0], argv[1:])

        args = crear_parser().parse_args(argv)
        configurar_logging("INFO" if args.verbose else None)
        resultado = run_pipeline(config_desde_argumentos(args))
        if resultado["estado"] != 0:
            print(f"❌ {sum(1 for r in resultado['archivos'].values() if r['estado'])} archivo(s) con error",
                  file=sys.stderr)
        return resultado["estado"]

    except FracgradError as e:
        print(f"❌ {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())

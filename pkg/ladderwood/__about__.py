__title__ = 'ladderwood'
__package_name__ = 'ladderwood'
__version__ = '0.1.0'
__description__ = "Ladderwood is an exact symbolic engine for the algebraic solution of the harmonic oscillator"
__author__ = 'Ladderwood contributors'
__license__ = 'GPL-3.0'
__copyright__ = 'Copyright 2026- ladderwood contributors'

__title__ = 'L(p)-TSP'
__package_name__ = 'lp-tsp'
__author__ = 'The lp-tsp developers'
__description__ = ' '.join('''
A library to compute minimum span L(p)-labelings of small diameter graphs by
reducing them to metric path TSP.
'''.strip().split())
__email__ = 'lp-tsp@users.noreply.github.com'
__version__ = '1.0.0'
__license__ = 'BSD'
__copyright__ = 'Copyright 2026 The lp-tsp developers'
__url__ = 'https://github.com/lp-tsp/lp-tsp'

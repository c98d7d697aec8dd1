"""deltaring computes Zhou radicals of finite rings

deltaring is a finite-ring computer-algebra engine. It builds finite rings
from operation tables or from a small construction language (matrix rings,
Dorroh extensions, group and semigroup rings, generalized matrix rings), computes
the Zhou radical, the Jacobson radical and the socle, decides Zhou e-reducedness
and its neighbouring ring classes with witnesses, and re-verifies a regression
suite of radical and ring-class statements on concrete instances.
"""

pkgname = 'deltaring'

__copyright__ = 'Copyright 2024-2026 The deltaring developers'
__author__ = 'The deltaring developers <deltaring@users.noreply.github.com>'
__license__ = 'BSD'
__url__ = 'https://github.com/deltaring/deltaring'
__version__ = '1.0'

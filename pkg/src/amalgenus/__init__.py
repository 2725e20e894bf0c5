"""amalgenus: isomorphism classes and genus of amalgamated free products.

__init__ module imports the public functions of the core modules into this
namespace.
"""
import logging
import types
import sys

import pkg_resources

from . import amalgams
from . import catalog
from . import cosets
from . import errors
from . import genus
from . import groups
from . import morphisms
from .amalgams import IsoClassReport
from .amalgams import PushOut
from .cosets import DoubleCosetDecomposition
from .cosets import TwistedInvolution
from .genus import GenusInput
from .genus import GenusReport
from .groups import FiniteGroup
from .groups import Subgroup
from .morphisms import AutGroup
from .morphisms import Morphism
from .morphisms import OutQuotient

logging.getLogger(__name__).addHandler(logging.NullHandler())

try:
    __version__ = pkg_resources.get_distribution(__name__).version
except pkg_resources.DistributionNotFound:
    # Package is not installed, e.g. it is imported from a source checkout
    # with ``src`` on the path.
    __version__ = 'unknown'

__all__ = (
    'AutGroup', 'DoubleCosetDecomposition', 'FiniteGroup', 'GenusInput',
    'GenusReport', 'IsoClassReport', 'Morphism', 'OutQuotient', 'PushOut',
    'Subgroup', 'TwistedInvolution', 'errors', 'catalog')
for _module in (groups, morphisms, cosets, amalgams, genus):
    for attrname in dir(_module):
        attribute = getattr(_module, attrname)
        if isinstance(attribute, types.FunctionType) and (
                not attrname.startswith('_')) and (
                attribute.__module__ == _module.__name__):
            __all__ += (attrname,)
            setattr(sys.modules['amalgenus'], attrname, attribute)
